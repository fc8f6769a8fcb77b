#pragma once

// Closed subgroups of SL(n, K) used as witnesses: random elements drawn with
// the defining block structure, and membership tests for that structure.

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

#include "ckf/cartan.hpp"
#include "ckf/matrix.hpp"

namespace ckf {

enum class SubgroupKind {
  SLSub,        // diag(g, I), g in SL(m, K)
  SO0,          // SO_0(p, q) in SL(p+q, R)
  HprimeSL,     // [[g, X], [0, I_{n-k}]], g in SL(k, K), k = floor(m/2)
  HppSL,        // [[g, v, X], [0, det g^{-1}, 0], [0, 0, I]], g in GL(k, K)
  SSL,          // [[g, diag(t), 0], [0, I_k, 0], [0, 0, I_{n-2k}]]
  HprimeSO,     // [[k, X], [0, l]], k in SO(p), l in SO(q)
  USO,          // [[I_p, X], [0, I_q]]
  AprimeSO,     // embedded cosh/sinh blocks
  UprimeSO,     // embedded unipotent 2x2 blocks
  GprimeSO,     // embedded product of p copies of SL(2, R)
  SOCompact,    // SO(n)
};

std::string_view to_string(SubgroupKind k);
SubgroupKind subgroup_kind_from_string(std::string_view s);

struct SubgroupFamily {
  SubgroupKind kind = SubgroupKind::SLSub;
  Field field = Field::R;
  int n = 0;  // ambient SL(n, K)
  int m = 0;  // SL-block kinds
  int p = 0;  // SO kinds, p <= q after normalization
  int q = 0;
  double scale = 1.0;  // Gaussian scale of the random parameters

  static SubgroupFamily sl_sub(Field f, int n, int m);
  static SubgroupFamily hprime_sl(Field f, int n, int m);
  static SubgroupFamily hpp_sl(Field f, int n, int m);
  static SubgroupFamily s_sl(Field f, int n, int m);
  static SubgroupFamily so_family(SubgroupKind kind, int p, int q);
  static SubgroupFamily so_compact(int n);

  /// floor(m/2) for the SL-block kinds.
  int k() const { return m / 2; }
  bool unimodular() const { return kind != SubgroupKind::HppSL; }
  std::string describe() const;

  /// Random element of the subgroup, deterministic in (seed, index).
  Mat sample(std::uint64_t seed, std::uint64_t index = 0) const;
  Mat sample(std::mt19937_64& eng) const;

  /// Block-pattern and defining-relation test with tolerance 1e-10 * max(1, |g|).
  bool contains(const Mat& g) const;
  /// Largest violation of the defining conditions (0 for members).
  double membership_residual(const Mat& g) const;
  /// Norm of the entries that the block pattern forces to vanish.
  double forbidden_norm(const Mat& g) const;

  /// Model set known to contain mu of every element.
  cartan::MuModelSet model() const;
};

/// Random sl(k, K) element (represented), Gaussian entries with the given scale.
Mat random_sl_algebra(Field f, int k, double scale, std::mt19937_64& eng);
/// Haar-distributed SO(k) via QR of a Gaussian matrix with sign and determinant fix.
RMat random_special_orthogonal(int k, std::mt19937_64& eng);

/// I_{p,q} = diag(I_p, -I_q).
RMat indefinite_form(int p, int q);

/// The embedding of p copies of SL(2, R) into SL(p+q, R).
Mat embed_sl2_blocks(int p, int q, const std::vector<Eigen::Matrix2d>& blocks);

}  // namespace ckf
