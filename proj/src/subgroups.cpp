#include "ckf/subgroups.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "ckf/rng.hpp"

namespace ckf {

namespace {

struct KindName {
  SubgroupKind kind;
  std::string_view name;
};

constexpr KindName kKindNames[] = {
    {SubgroupKind::SLSub, "SL_sub"},         {SubgroupKind::SO0, "SO0"},
    {SubgroupKind::HprimeSL, "Hprime_sl"},   {SubgroupKind::HppSL, "Hpp_sl"},
    {SubgroupKind::SSL, "S_sl"},             {SubgroupKind::HprimeSO, "Hprime_so"},
    {SubgroupKind::USO, "U_so"},             {SubgroupKind::AprimeSO, "Aprime_so"},
    {SubgroupKind::UprimeSO, "Uprime_so"},   {SubgroupKind::GprimeSO, "G_prime_embedded"},
    {SubgroupKind::SOCompact, "SO_compact"},
};

bool is_so_kind(SubgroupKind k) {
  switch (k) {
    case SubgroupKind::SO0:
    case SubgroupKind::HprimeSO:
    case SubgroupKind::USO:
    case SubgroupKind::AprimeSO:
    case SubgroupKind::UprimeSO:
    case SubgroupKind::GprimeSO: return true;
    default: return false;
  }
}

// Entry classes of a block pattern on the n x n K-matrix.
enum class Cell : char { Free, Zero, One };

using Pattern = Eigen::Matrix<Cell, Eigen::Dynamic, Eigen::Dynamic>;

Pattern identity_pattern(int n) {
  Pattern pat(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) pat(i, j) = i == j ? Cell::One : Cell::Zero;
  return pat;
}

Pattern pattern_of(const SubgroupFamily& f) {
  const int n = f.n;
  Pattern pat = identity_pattern(n);
  auto free_block = [&](int i0, int j0, int r, int c) {
    for (int i = i0; i < i0 + r; ++i)
      for (int j = j0; j < j0 + c; ++j) pat(i, j) = Cell::Free;
  };
  const int k = f.k(), p = f.p, q = f.q;
  switch (f.kind) {
    case SubgroupKind::SLSub: free_block(0, 0, f.m, f.m); break;
    case SubgroupKind::HprimeSL: free_block(0, 0, k, n); break;
    case SubgroupKind::HppSL:
      free_block(0, 0, k, n);
      pat(k, k) = Cell::Free;
      break;
    case SubgroupKind::SSL:
      free_block(0, 0, k, k);
      for (int i = 0; i < k; ++i) pat(i, k + i) = Cell::Free;
      break;
    case SubgroupKind::HprimeSO:
      free_block(0, 0, p, p + q);
      free_block(p, p, q, q);
      break;
    case SubgroupKind::USO: free_block(0, p, p, q); break;
    case SubgroupKind::AprimeSO:
    case SubgroupKind::GprimeSO:
      for (int i = 0; i < p; ++i) {
        pat(i, i) = pat(i, p + i) = pat(p + i, i) = pat(p + i, p + i) = Cell::Free;
      }
      break;
    case SubgroupKind::UprimeSO:
      for (int i = 0; i < p; ++i) pat(i, p + i) = Cell::Free;
      break;
    case SubgroupKind::SO0:
    case SubgroupKind::SOCompact: free_block(0, 0, n, n); break;
  }
  return pat;
}

// Random K-matrix with r x c entries in represented form.
Mat random_k_matrix(Field f, int r, int c, double scale, std::mt19937_64& eng) {
  Mat a(r, c), b = Mat::Zero(r, c);
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    const double re = gaussian(eng);
    const double im = f == Field::R ? 0.0 : gaussian(eng);
    a.data()[i] = scale * cplx(re, im);
  }
  if (f == Field::H)
    for (Eigen::Index i = 0; i < b.size(); ++i) b.data()[i] = scale * cplx(gaussian(eng), gaussian(eng));
  return embed(f, a, b);
}

// Writes a represented block at K-level position (i0, j0) of a represented n x n matrix.
void put_block(Field f, int n, Mat& m, int i0, int j0, const Mat& blk) {
  if (f != Field::H) {
    m.block(i0, j0, blk.rows(), blk.cols()) = blk;
    return;
  }
  const Eigen::Index r = blk.rows() / 2, c = blk.cols() / 2;
  m.block(i0, j0, r, c) = blk.topLeftCorner(r, c);
  m.block(i0, n + j0, r, c) = blk.topRightCorner(r, c);
  m.block(n + i0, j0, r, c) = blk.bottomLeftCorner(r, c);
  m.block(n + i0, n + j0, r, c) = blk.bottomRightCorner(r, c);
}

Mat get_block(Field f, int n, const Mat& m, int i0, int j0, int r, int c) {
  if (f != Field::H) return m.block(i0, j0, r, c);
  Mat out(2 * r, 2 * c);
  out.topLeftCorner(r, c) = m.block(i0, j0, r, c);
  out.topRightCorner(r, c) = m.block(i0, n + j0, r, c);
  out.bottomLeftCorner(r, c) = m.block(n + i0, j0, r, c);
  out.bottomRightCorner(r, c) = m.block(n + i0, n + j0, r, c);
  return out;
}

// |det g - 1| relative to the Hadamard bound, which tracks LU rounding.
double det_residual(const Mat& g, cplx target = 1.0) {
  double hadamard = 1.0;
  for (Eigen::Index j = 0; j < g.cols(); ++j) hadamard *= std::max(1.0, g.col(j).norm());
  return std::abs(g.determinant() - target) / hadamard;
}

double orthogonality_residual(const Mat& blk) {
  const Eigen::Index r = blk.rows();
  const double orth = (blk.adjoint() * blk - Mat::Identity(r, r)).norm();
  return std::max(orth, std::abs(blk.determinant() - 1.0));
}

}  // namespace

std::string_view to_string(SubgroupKind k) {
  for (const auto& kn : kKindNames)
    if (kn.kind == k) return kn.name;
  return "?";
}

SubgroupKind subgroup_kind_from_string(std::string_view s) {
  for (const auto& kn : kKindNames)
    if (kn.name == s) return kn.kind;
  throw std::invalid_argument("unknown subgroup family '" + std::string(s) + "'");
}

SubgroupFamily SubgroupFamily::sl_sub(Field f, int n, int m) {
  if (!(n >= m && m >= 1)) throw std::invalid_argument("SL_sub needs 1 <= m <= n");
  return SubgroupFamily{SubgroupKind::SLSub, f, n, m, 0, 0, 1.0};
}

SubgroupFamily SubgroupFamily::hprime_sl(Field f, int n, int m) {
  if (!(n > m && m >= 2)) throw std::invalid_argument("Hprime_sl needs n > m >= 2");
  return SubgroupFamily{SubgroupKind::HprimeSL, f, n, m, 0, 0, 1.0};
}

SubgroupFamily SubgroupFamily::hpp_sl(Field f, int n, int m) {
  if (!(n > m && m >= 3 && m % 2 == 1)) throw std::invalid_argument("Hpp_sl needs odd m >= 3 and n > m");
  if (f == Field::H) throw std::invalid_argument("Hpp_sl is defined for K = R, C only");
  return SubgroupFamily{SubgroupKind::HppSL, f, n, m, 0, 0, 1.0};
}

SubgroupFamily SubgroupFamily::s_sl(Field f, int n, int m) {
  if (!(n > m && m >= 2)) throw std::invalid_argument("S_sl needs n > m >= 2");
  return SubgroupFamily{SubgroupKind::SSL, f, n, m, 0, 0, 1.0};
}

SubgroupFamily SubgroupFamily::so_family(SubgroupKind kind, int p, int q) {
  if (!is_so_kind(kind)) throw std::invalid_argument("not an SO(p,q) family");
  if (p < 1 || q < 1) throw std::invalid_argument("SO families need p, q >= 1");
  if (p > q && kind != SubgroupKind::SO0 && kind != SubgroupKind::HprimeSO && kind != SubgroupKind::USO)
    throw std::invalid_argument(std::string(to_string(kind)) + " needs p <= q");
  return SubgroupFamily{kind, Field::R, p + q, 0, p, q, 1.0};
}

SubgroupFamily SubgroupFamily::so_compact(int n) {
  if (n < 2) throw std::invalid_argument("SO(n) needs n >= 2");
  return SubgroupFamily{SubgroupKind::SOCompact, Field::R, n, 0, 0, 0, 1.0};
}

std::string SubgroupFamily::describe() const {
  std::ostringstream os;
  os << to_string(kind) << '(';
  if (is_so_kind(kind))
    os << "p=" << p << ",q=" << q;
  else if (kind == SubgroupKind::SOCompact)
    os << "n=" << n;
  else
    os << "n=" << n << ",m=" << m << ",K=" << to_string(field);
  os << ')';
  return os.str();
}

Mat random_sl_algebra(Field f, int k, double scale, std::mt19937_64& eng) {
  Mat x = random_k_matrix(f, k, k, scale, eng);
  const int r = rep_size(f, k);
  if (f == Field::C) {
    x -= (x.trace() / static_cast<double>(k)) * Mat::Identity(r, r);
  } else {
    // R: real trace; H: the represented trace is 2 Re tr A.
    x -= (x.trace().real() / static_cast<double>(r)) * Mat::Identity(r, r);
  }
  return x;
}

RMat random_special_orthogonal(int k, std::mt19937_64& eng) {
  RMat z(k, k);
  for (Eigen::Index i = 0; i < z.size(); ++i) z.data()[i] = gaussian(eng);
  Eigen::HouseholderQR<RMat> qr(z);
  RMat qm = qr.householderQ();
  const RMat rm = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < k; ++i)
    if (rm(i, i) < 0) qm.col(i) *= -1.0;
  if (qm.determinant() < 0) qm.col(0) *= -1.0;
  return qm;
}

RMat indefinite_form(int p, int q) {
  RMat s = RMat::Identity(p + q, p + q);
  s.bottomRightCorner(q, q) *= -1.0;
  return s;
}

Mat embed_sl2_blocks(int p, int q, const std::vector<Eigen::Matrix2d>& blocks) {
  if (static_cast<int>(blocks.size()) != p) throw std::invalid_argument("expected p SL(2) blocks");
  Mat g = Mat::Identity(p + q, p + q);
  for (int i = 0; i < p; ++i) {
    const auto& b = blocks[static_cast<std::size_t>(i)];
    g(i, i) = b(0, 0);
    g(i, p + i) = b(0, 1);
    g(p + i, i) = b(1, 0);
    g(p + i, p + i) = b(1, 1);
  }
  return g;
}

Mat SubgroupFamily::sample(std::uint64_t seed, std::uint64_t index) const {
  auto eng = counter_engine(seed, index);
  return sample(eng);
}

Mat SubgroupFamily::sample(std::mt19937_64& eng) const {
  const int r = rep_size(field, n);
  Mat g = Mat::Identity(r, r);
  switch (kind) {
    case SubgroupKind::SLSub:
      put_block(field, n, g, 0, 0, expm(random_sl_algebra(field, m, scale, eng)));
      break;
    case SubgroupKind::HprimeSL:
      put_block(field, n, g, 0, 0, expm(random_sl_algebra(field, k(), scale, eng)));
      put_block(field, n, g, 0, k(), random_k_matrix(field, k(), n - k(), scale, eng));
      break;
    case SubgroupKind::HppSL: {
      Mat gk = expm(random_k_matrix(field, k(), k(), scale, eng));
      if (field == Field::R && std::uniform_int_distribution<int>(0, 1)(eng) == 1) gk.row(0) *= -1.0;
      put_block(field, n, g, 0, 0, gk);
      put_block(field, n, g, 0, k(), random_k_matrix(field, k(), 1, scale, eng));
      put_block(field, n, g, 0, k() + 1, random_k_matrix(field, k(), n - k() - 1, scale, eng));
      g(k(), k()) = 1.0 / gk.determinant();
      break;
    }
    case SubgroupKind::SSL:
      put_block(field, n, g, 0, 0, expm(random_sl_algebra(field, k(), scale, eng)));
      for (int i = 0; i < k(); ++i) {
        const double t = scale * gaussian(eng);
        g(i, k() + i) = t;
        if (field == Field::H) g(n + i, n + k() + i) = t;
      }
      break;
    case SubgroupKind::HprimeSO:
      g.topLeftCorner(p, p) = random_special_orthogonal(p, eng).cast<cplx>();
      g.bottomRightCorner(q, q) = random_special_orthogonal(q, eng).cast<cplx>();
      g.topRightCorner(p, q) = random_k_matrix(Field::R, p, q, scale, eng);
      break;
    case SubgroupKind::USO: g.topRightCorner(p, q) = random_k_matrix(Field::R, p, q, scale, eng); break;
    case SubgroupKind::AprimeSO:
    case SubgroupKind::UprimeSO:
    case SubgroupKind::GprimeSO: {
      std::vector<Eigen::Matrix2d> blocks;
      for (int i = 0; i < p; ++i) {
        Eigen::Matrix2d b;
        if (kind == SubgroupKind::AprimeSO) {
          const double t = scale * gaussian(eng);
          b << std::cosh(t), std::sinh(t), std::sinh(t), std::cosh(t);
        } else if (kind == SubgroupKind::UprimeSO) {
          b << 1.0, scale * gaussian(eng), 0.0, 1.0;
        } else {
          Mat x = random_sl_algebra(Field::R, 2, scale, eng);
          b = expm(x).real();
        }
        blocks.push_back(b);
      }
      g = embed_sl2_blocks(p, q, blocks);
      break;
    }
    case SubgroupKind::SO0: {
      RMat x = RMat::Zero(n, n);
      RMat a = random_k_matrix(Field::R, p, p, scale, eng).real();
      RMat d = random_k_matrix(Field::R, q, q, scale, eng).real();
      RMat b = random_k_matrix(Field::R, p, q, scale, eng).real();
      x.topLeftCorner(p, p) = a - a.transpose();
      x.bottomRightCorner(q, q) = d - d.transpose();
      x.topRightCorner(p, q) = b;
      x.bottomLeftCorner(q, p) = b.transpose();
      g = expm(x.cast<cplx>());
      g = g.real().cast<cplx>();
      break;
    }
    case SubgroupKind::SOCompact: g = random_special_orthogonal(n, eng).cast<cplx>(); break;
  }
  return g;
}

double SubgroupFamily::membership_residual(const Mat& g) const {
  const int r = rep_size(field, n);
  if (g.rows() != r || g.cols() != r) return std::numeric_limits<double>::infinity();
  if (!g.allFinite()) return std::numeric_limits<double>::infinity();
  const double gscale = std::max(1.0, g.norm());
  double res = structure_defect(field, g) / gscale;

  const Pattern pat = pattern_of(*this);
  const Mat a = quaternion_a(field, g);
  const Mat b = quaternion_b(field, g);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Cell c = pat(i, j);
      if (c == Cell::Free) continue;
      const double target = c == Cell::One ? 1.0 : 0.0;
      const double dev = std::sqrt(std::norm(a(i, j) - target) + std::norm(b(i, j)));
      res = std::max(res, dev / gscale);
    }

  switch (kind) {
    case SubgroupKind::SLSub:
    case SubgroupKind::HprimeSL:
    case SubgroupKind::SSL: res = std::max(res, det_residual(g)); break;
    case SubgroupKind::HppSL: {
      const Mat gk = get_block(field, n, g, 0, 0, k(), k());
      res = std::max(res, det_residual(gk, 1.0 / g(k(), k())) * std::abs(g(k(), k())));
      break;
    }
    case SubgroupKind::HprimeSO:
      res = std::max({res, orthogonality_residual(g.topLeftCorner(p, p)),
                      orthogonality_residual(g.bottomRightCorner(q, q))});
      break;
    case SubgroupKind::AprimeSO:
      for (int i = 0; i < p; ++i) {
        const cplx ca = g(i, i), cb = g(i, p + i), cc = g(p + i, i), cd = g(p + i, p + i);
        res = std::max({res, std::abs(ca - cd) / gscale, std::abs(cb - cc) / gscale,
                        std::abs(ca * ca - cb * cb - 1.0) / (gscale * gscale)});
        if (ca.real() <= 0.0) res = std::max(res, 1.0);
      }
      break;
    case SubgroupKind::GprimeSO:
      for (int i = 0; i < p; ++i) {
        const cplx det = g(i, i) * g(p + i, p + i) - g(i, p + i) * g(p + i, i);
        res = std::max(res, std::abs(det - 1.0) / (gscale * gscale));
      }
      break;
    case SubgroupKind::SO0: {
      const Mat s = indefinite_form(p, q).cast<cplx>();
      res = std::max(res, (g.transpose() * s * g - s).norm() / (gscale * gscale));
      res = std::max(res, det_residual(g));
      const double lead = g.topLeftCorner(p, p).real().determinant();
      if (lead <= 0.0) res = std::max(res, 1.0);
      break;
    }
    case SubgroupKind::SOCompact: res = std::max(res, orthogonality_residual(g)); break;
    case SubgroupKind::USO:
    case SubgroupKind::UprimeSO: break;
  }
  if (kind == SubgroupKind::SSL) {
    // The strip entries t_i are real.
    for (int i = 0; i < k(); ++i)
      res = std::max(res, (std::abs(a(i, k() + i).imag()) + std::abs(b(i, k() + i))) / gscale);
  }
  return res;
}

bool SubgroupFamily::contains(const Mat& g) const { return membership_residual(g) <= 1e-10; }

double SubgroupFamily::forbidden_norm(const Mat& g) const {
  const Pattern pat = pattern_of(*this);
  const RMat norms = entry_norms(field, g);
  double s = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (pat(i, j) == Cell::Zero) s += norms(i, j) * norms(i, j);
  return std::sqrt(s);
}

cartan::MuModelSet SubgroupFamily::model() const {
  if (kind == SubgroupKind::SOCompact) return cartan::MuModelSet::zero(n);
  if (is_so_kind(kind)) return cartan::MuModelSet::so_pq(p, q);
  return cartan::MuModelSet::sl_block(n, m);
}

}  // namespace ckf
