#pragma once

// Exact combinatorics of restricted root systems in simple-root coordinates.

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace ckf::rootsys {

enum class Family { A, B, C, D, BC };

std::string_view to_string(Family f);
Family family_from_string(std::string_view s);

/// Integer coordinates of a root in the basis of simple roots.
class RootVector {
 public:
  RootVector() = default;
  explicit RootVector(std::vector<int> coeffs);

  const std::vector<int>& coeffs() const { return coeffs_; }
  int rank() const { return static_cast<int>(coeffs_.size()); }
  int operator[](int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
  int height() const;
  bool positive() const { return height() > 0; }

  RootVector operator-() const;
  friend RootVector operator+(const RootVector& a, const RootVector& b);
  friend RootVector operator-(const RootVector& a, const RootVector& b);

  friend bool operator==(const RootVector&, const RootVector&) = default;

  std::string str() const;

 private:
  std::vector<int> coeffs_;
};

/// Height first, then lexicographic on the coefficient tuple.
struct HeightLexLess {
  bool operator()(const RootVector& a, const RootVector& b) const;
};

/// Name recorded in certificates for the total order in use.
inline constexpr std::string_view kOrderToken = "height-then-lex";

using RootSet = std::set<RootVector, HeightLexLess>;

/// Multiplicity per root length, keyed by the squared length of the root in
/// orthonormal coordinates (1, 2 or 4 for the classical families).
struct MultiplicityProfile {
  std::map<int, int> by_squared_length;
  int uniform = 1;

  static MultiplicityProfile constant(int m) { return MultiplicityProfile{{}, m}; }
  int at(int squared_length) const;
};

class RestrictedRootSystem {
 public:
  RestrictedRootSystem(Family family, int rank, std::vector<RootVector> roots,
                       std::map<std::vector<int>, int> multiplicity);

  Family family() const { return family_; }
  int rank() const { return rank_; }
  const RootSet& roots() const { return roots_; }
  bool contains(const RootVector& v) const { return roots_.count(v) > 0; }
  int multiplicity(const RootVector& v) const;
  std::vector<RootVector> positive_roots() const;
  RootVector simple(int i) const;

  /// Connectedness of the Dynkin graph (simple roots adjacent iff their sum is a root).
  bool irreducible() const;

  std::string label() const;

 private:
  Family family_;
  int rank_;
  RootSet roots_;
  std::map<std::vector<int>, int> multiplicity_;
};

/// Σ = plus ⊔ zero ⊔ minus relative to a subset of simple indices (0-based).
struct SigmaSplit {
  std::set<int> pi_prime;
  RootSet zero;
  RootSet plus;
  RootSet minus;
};

RestrictedRootSystem build_root_system(Family family, int rank,
                                       const MultiplicityProfile& profile = MultiplicityProfile::constant(1));

/// Named presets: "sl(n,R)", "sl(n,C)", "sl(n,H)", "so(p,q)".
RestrictedRootSystem preset_sl(int n, int field_real_dim);
RestrictedRootSystem preset_so(int p, int q);

SigmaSplit split_sigma(const RestrictedRootSystem& rs, const std::set<int>& pi_prime);

/// No two (not necessarily distinct) roots of Σ_{Π',+} sum to a root.
bool horospherical_is_abelian(const RestrictedRootSystem& rs, const std::set<int>& pi_prime);

/// Maximal Π'-degree (sum of coefficients outside Π') over Σ_{Π',+}; 0 if empty.
int grading_depth(const RestrictedRootSystem& rs, const std::set<int>& pi_prime);

RootVector highest_root(const RestrictedRootSystem& rs);

/// Π' = Π, or Π \ Π' = {α} with the α-coefficient of the highest root equal to 1.
bool levi_condition_v(const RestrictedRootSystem& rs, const std::set<int>& pi_prime);

/// Literal reading: Π' = Π, or Π \ Π' = {α} with (highest root - α) ∈ Σ_{Π',0}.
bool levi_condition_v_literal(const RestrictedRootSystem& rs, const std::set<int>& pi_prime);

RootVector lowest_root_in(const RootSet& set);
RootVector lowest_root_in(const std::vector<RootVector>& roots);

/// Π \ {α_i} for a 0-based index i.
std::set<int> complement_of(const RestrictedRootSystem& rs, int removed);
std::set<int> all_simple(const RestrictedRootSystem& rs);

}  // namespace ckf::rootsys
