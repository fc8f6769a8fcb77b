#include "ckf/liealg.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "ckf/rng.hpp"

namespace ckf::liealg {

namespace {

rootsys::RootVector type_a_root(int n, int i, int j) {
  std::vector<int> c(static_cast<std::size_t>(n - 1), 0);
  const int lo = std::min(i, j), hi = std::max(i, j);
  const int sign = i < j ? 1 : -1;
  for (int t = lo; t < hi; ++t) c[static_cast<std::size_t>(t)] = sign;
  return rootsys::RootVector(std::move(c));
}

}  // namespace

MatrixAlgebraContext::MatrixAlgebraContext(Field field, int n)
    : field_(field), n_(n), roots_(rootsys::preset_sl(std::max(n, 2), real_dim(field))) {
  if (n < 2) throw std::invalid_argument("sl(n, K) needs n >= 2");
  const auto& us = units(field_);

  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      if (i == j) continue;
      RootSpace rs{type_a_root(n_, i, j), {}};
      for (const auto& u : us) {
        Mat e = elementary(i, j, u);
        rs.basis.push_back(e / norm_theta(e));
      }
      root_spaces_.push_back(std::move(rs));
    }

  // a: H_i = E_ii - E_{i+1,i+1}.
  for (int i = 0; i + 1 < n_; ++i)
    a_basis_.push_back(elementary(i, i, us[0]) - elementary(i + 1, i + 1, us[0]));

  // g_0: traceless real diagonals, plus the imaginary units on the diagonal.
  for (int k = 1; k < n_; ++k) {
    Mat d = zero();
    for (int i = 0; i < k; ++i) d += elementary(i, i, us[0]);
    d -= static_cast<double>(k) * elementary(k, k, us[0]);
    g0_basis_.push_back(d / norm_theta(d));
  }
  if (field_ == Field::C) {
    const std::size_t real_count = g0_basis_.size();
    for (std::size_t t = 0; t < real_count; ++t) g0_basis_.push_back(cplx(0, 1) * g0_basis_[t]);
  } else if (field_ == Field::H) {
    for (int i = 0; i < n_; ++i)
      for (std::size_t u = 1; u < us.size(); ++u) {
        Mat e = elementary(i, i, us[u]);
        g0_basis_.push_back(e / norm_theta(e));
      }
  }

  for (const auto& rs : root_spaces_)
    for (const auto& b : rs.basis) basis_.push_back(b);
  for (const auto& b : g0_basis_) basis_.push_back(b);
  basis_vec_ = linalg::vec_columns(basis_);
}

std::string MatrixAlgebraContext::name() const {
  return "sl(" + std::to_string(n_) + "," + std::string(to_string(field_)) + ")";
}

Mat MatrixAlgebraContext::elementary(int i, int j, const KUnit& u) const {
  Mat a = Mat::Zero(n_, n_), b = Mat::Zero(n_, n_);
  a(i, j) = u.a;
  b(i, j) = u.b;
  if (field_ == Field::H) return embed(field_, a, b);
  return a;
}

const RootSpace& MatrixAlgebraContext::root_space(const RootVector& lambda) const {
  for (const auto& rs : root_spaces_)
    if (rs.root == lambda) return rs;
  throw std::invalid_argument("not a root of " + name() + ": " + lambda.str());
}

double MatrixAlgebraContext::root_value(const RootVector& lambda, const Mat& z) const {
  if (lambda.rank() != n_ - 1) throw std::invalid_argument("root has wrong rank for " + name());
  double v = 0.0;
  for (int i = 0; i + 1 < n_; ++i) v += lambda[i] * (z(i, i).real() - z(i + 1, i + 1).real());
  return v;
}

Mat MatrixAlgebraContext::coroot(const RootVector& lambda) const {
  const Eigen::Index r = static_cast<Eigen::Index>(a_basis_.size());
  RMat gram(r, r);
  RVec rhs(r);
  for (Eigen::Index k = 0; k < r; ++k) {
    rhs(k) = root_value(lambda, a_basis_[static_cast<std::size_t>(k)]);
    for (Eigen::Index l = 0; l < r; ++l)
      gram(k, l) = b_theta(a_basis_[static_cast<std::size_t>(k)], a_basis_[static_cast<std::size_t>(l)]);
  }
  const RVec c = gram.ldlt().solve(rhs);
  return linalg::combine(a_basis_, c);
}

RVec MatrixAlgebraContext::coords(const Mat& x) const {
  if (x.rows() != rep() || x.cols() != rep()) throw dimension_error("element size does not match " + name());
  return basis_vec_.transpose() * linalg::vec(x);
}

Mat MatrixAlgebraContext::from_coords(const RVec& c) const { return linalg::combine(basis_, c); }

double MatrixAlgebraContext::distance_to_algebra(const Mat& x) const {
  return linalg::distance_to_span(basis_vec_, linalg::vec(x));
}

Subalgebra::Subalgebra(std::string name, const std::vector<Mat>& spanning, double rel_tol)
    : name_(std::move(name)) {
  if (spanning.empty()) return;
  const Eigen::Index n = spanning.front().rows();
  q_ = linalg::orthonormalize(linalg::vec_columns(spanning), rel_tol);
  for (Eigen::Index j = 0; j < q_.cols(); ++j) basis_.push_back(linalg::unvec(q_.col(j), n));
}

double Subalgebra::distance(const Mat& x) const {
  if (basis_.empty()) return x.norm();
  return linalg::distance_to_span(q_, linalg::vec(x));
}

Mat Subalgebra::project(const Mat& x) const {
  if (basis_.empty()) return Mat::Zero(x.rows(), x.cols());
  return linalg::unvec(q_ * (q_.transpose() * linalg::vec(x)), x.rows());
}

double Subalgebra::closure_residual() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < basis_.size(); ++i)
    for (std::size_t j = i + 1; j < basis_.size(); ++j)
      worst = std::max(worst, distance(bracket(basis_[i], basis_[j])));
  return worst;
}

double b_theta(const MatrixAlgebraContext& ctx, const Mat& x, const Mat& y) { return ctx.b_theta(x, y); }

Sl2Triple sl2_homomorphism(const MatrixAlgebraContext& ctx, const RootVector& lambda, const Mat& x) {
  const double xn2 = ctx.b_theta(x, x);
  if (!(xn2 > 0.0)) throw std::invalid_argument("sl2_homomorphism: X must be nonzero");
  const Mat h_lambda = ctx.coroot(lambda);
  const double hn2 = ctx.b_theta(h_lambda, h_lambda);
  Sl2Triple t;
  t.e = x;
  t.f = -(2.0 / (hn2 * xn2)) * ctx.theta(x);
  t.h = (2.0 / hn2) * h_lambda;
  t.residual = std::max({(bracket(t.h, t.e) - 2.0 * t.e).norm(), (bracket(t.h, t.f) + 2.0 * t.f).norm(),
                         (bracket(t.e, t.f) - t.h).norm()});
  return t;
}

ThetaBracket bracket_theta_identity(const MatrixAlgebraContext& ctx, const RootVector& lambda, const Mat& x,
                                    const Mat& x_prime) {
  const Mat h_lambda = ctx.coroot(lambda);  // throws for non-roots of the wrong rank
  if (!ctx.roots().contains(lambda)) throw std::invalid_argument("not a root: " + lambda.str());
  ThetaBracket out;
  out.value = bracket(x, ctx.theta(x_prime));
  const Mat p_part = 0.5 * (out.value - ctx.theta(out.value));
  const Mat k_part = 0.5 * (out.value + ctx.theta(out.value));
  out.p_residual = (p_part + ctx.b_theta(x, x_prime) * h_lambda).norm();
  out.k_norm = k_part.norm();
  return out;
}

namespace {

Mat ipq(int p, int q) {
  Mat m = Mat::Identity(p + q, p + q);
  m.bottomRightCorner(q, q) *= -1.0;
  return m;
}

}  // namespace

Involution sigma_so_pq(int p, int q) {
  const Mat s = ipq(p, q);
  return {"X -> -I_{" + std::to_string(p) + "," + std::to_string(q) + "} X^T I_{" + std::to_string(p) + "," +
              std::to_string(q) + "}",
          [s](const Mat& x) -> Mat { return -s * x.transpose() * s; }};
}

Involution sigma_block_diagonal(int p, int q) {
  const Mat s = ipq(p, q);
  return {"X -> I_{" + std::to_string(p) + "," + std::to_string(q) + "} X I_{" + std::to_string(p) + "," +
              std::to_string(q) + "}",
          [s](const Mat& x) -> Mat { return s * x * s; }};
}

Subalgebra eigenspace(const MatrixAlgebraContext& ctx, const std::function<Mat(const Mat&)>& map,
                      double eigenvalue, std::string name) {
  const auto& basis = ctx.basis();
  RMat cols(ctx.basis_vec().rows(), ctx.dim());
  for (int j = 0; j < ctx.dim(); ++j)
    cols.col(j) = linalg::vec(map(basis[static_cast<std::size_t>(j)]) - eigenvalue * basis[static_cast<std::size_t>(j)]);
  const RMat ker = linalg::kernel(cols);
  std::vector<Mat> span;
  for (Eigen::Index j = 0; j < ker.cols(); ++j) span.push_back(ctx.from_coords(ker.col(j)));
  return Subalgebra(std::move(name), span);
}

namespace {

Subalgebra kernel_in(const Subalgebra& s, const std::function<Mat(const Mat&)>& map, std::string name) {
  if (s.dim() == 0) return Subalgebra(std::move(name), {});
  const auto& basis = s.basis();
  RMat cols(2 * basis.front().size(), s.dim());
  for (int j = 0; j < s.dim(); ++j) cols.col(j) = linalg::vec(map(basis[static_cast<std::size_t>(j)]));
  const RMat ker = linalg::kernel(cols);
  std::vector<Mat> span;
  for (Eigen::Index j = 0; j < ker.cols(); ++j) span.push_back(linalg::combine(basis, ker.col(j)));
  return Subalgebra(std::move(name), span);
}

}  // namespace

Subalgebra intersect_k(const MatrixAlgebraContext& ctx, const Subalgebra& s) {
  return kernel_in(s, [&](const Mat& x) -> Mat { return ctx.theta(x) - x; }, "k∩" + s.name());
}

Subalgebra intersect_p(const MatrixAlgebraContext& ctx, const Subalgebra& s) {
  return kernel_in(s, [&](const Mat& x) -> Mat { return ctx.theta(x) + x; }, "p∩" + s.name());
}

Subalgebra centralizer_in(const Subalgebra& s, const std::vector<Mat>& elements, std::string name) {
  if (s.dim() == 0) return Subalgebra(std::move(name), {});
  const auto& basis = s.basis();
  const Eigen::Index block = 2 * basis.front().size();
  RMat cols(block * static_cast<Eigen::Index>(std::max<std::size_t>(elements.size(), 1)), s.dim());
  cols.setZero();
  for (int j = 0; j < s.dim(); ++j)
    for (std::size_t e = 0; e < elements.size(); ++e)
      cols.block(static_cast<Eigen::Index>(e) * block, j, block, 1) =
          linalg::vec(bracket(basis[static_cast<std::size_t>(j)], elements[e]));
  const RMat ker = linalg::kernel(cols);
  std::vector<Mat> span;
  for (Eigen::Index j = 0; j < ker.cols(); ++j) span.push_back(linalg::combine(basis, ker.col(j)));
  return Subalgebra(std::move(name), span);
}

AssociatedPair associated_pair(const MatrixAlgebraContext& ctx, const Involution& sigma) {
  constexpr double tol = 1e-10;
  double inv = 0.0, comm = 0.0, equal_theta = 0.0, leaves = 0.0;
  for (const auto& x : ctx.basis()) {
    const Mat sx = sigma.apply(x);
    inv = std::max(inv, (sigma.apply(sx) - x).norm());
    comm = std::max(comm, (sigma.apply(ctx.theta(x)) - ctx.theta(sx)).norm());
    equal_theta = std::max(equal_theta, (sx - ctx.theta(x)).norm());
    leaves = std::max(leaves, ctx.distance_to_algebra(sx));
  }
  if (leaves > tol) throw std::invalid_argument(sigma.name + " does not preserve " + ctx.name());
  if (inv > tol) throw std::invalid_argument(sigma.name + " is not an involution");
  if (comm > tol) throw std::invalid_argument(sigma.name + " does not commute with theta");
  if (equal_theta < tol) throw std::invalid_argument("sigma = theta is degenerate (h = k and h^a = g)");

  AssociatedPair out;
  out.h = eigenspace(ctx, sigma.apply, 1.0, "h");
  out.q = eigenspace(ctx, sigma.apply, -1.0, "q");
  out.h_a = eigenspace(
      ctx, [&](const Mat& x) -> Mat { return sigma.apply(ctx.theta(x)); }, 1.0, "h^a");
  if (out.h.dim() + out.q.dim() != ctx.dim()) throw std::logic_error("eigenspaces of sigma do not span g");

  // B-orthogonal complement of h: kernel of Y -> (B(h_i, Y))_i on g.
  RMat gram(out.h.dim(), ctx.dim());
  for (int i = 0; i < out.h.dim(); ++i)
    for (int j = 0; j < ctx.dim(); ++j)
      gram(i, j) = ctx.B(out.h.basis()[static_cast<std::size_t>(i)], ctx.basis()[static_cast<std::size_t>(j)]);
  const RMat ker = linalg::kernel(gram);
  std::vector<Mat> perp;
  for (Eigen::Index j = 0; j < ker.cols(); ++j) perp.push_back(ctx.from_coords(ker.col(j)));
  const Subalgebra complement("h^perp", perp);
  out.q_vs_orthogonal_complement = linalg::subspace_gap(out.q.q(), complement.q());
  return out;
}

double normalizer_residual(const Subalgebra& h, const Mat& x) {
  double worst = 0.0;
  for (const auto& b : h.basis()) worst = std::max(worst, h.distance(bracket(x, b)));
  return worst;
}

namespace {

void require_normalizes(const Subalgebra& h, const Mat& x) {
  const double scale = std::max(1.0, x.norm());
  const double r = normalizer_residual(h, x);
  if (r > 1e-10 * scale)
    throw not_normalizing("element does not normalize " + h.name() + " (residual " + std::to_string(r) + ")");
}

}  // namespace

double trace_on_quotient(const MatrixAlgebraContext& ctx, const Subalgebra& h, const Mat& x) {
  require_normalizes(h, x);
  double tr_g = 0.0, tr_h = 0.0;
  for (const auto& c : ctx.basis()) tr_g += ctx.b_theta(c, bracket(x, c));
  for (const auto& e : h.basis()) tr_h += ctx.b_theta(e, bracket(x, e));
  return tr_g - tr_h;
}

double trace_on_quotient_extended(const MatrixAlgebraContext& ctx, const Subalgebra& h, const Mat& x,
                                  std::uint64_t seed) {
  require_normalizes(h, x);
  auto eng = counter_engine(seed, 0);
  const int d = ctx.dim(), k = h.dim();
  RMat frame(d, d);
  for (int attempt = 0;; ++attempt) {
    // Random invertible mix of h's basis, then random vectors of g.
    RMat mix(k, k);
    for (Eigen::Index i = 0; i < mix.size(); ++i) mix.data()[i] = gaussian(eng);
    for (int j = 0; j < k; ++j) {
      Mat v = Mat::Zero(ctx.rep(), ctx.rep());
      for (int i = 0; i < k; ++i) v += mix(i, j) * h.basis()[static_cast<std::size_t>(i)];
      frame.col(j) = ctx.coords(v);
    }
    for (int j = k; j < d; ++j)
      for (int i = 0; i < d; ++i) frame(i, j) = gaussian(eng);
    if (linalg::numerical_rank(frame, 1e-8) == d) break;
    if (attempt > 8) throw std::runtime_error("could not draw a nondegenerate extension");
  }
  RMat ad(d, d);
  for (int j = 0; j < d; ++j) ad.col(j) = ctx.coords(bracket(x, ctx.from_coords(frame.col(j))));
  const RMat in_frame = frame.partialPivLu().solve(ad);
  return in_frame.bottomRightCorner(d - k, d - k).trace();
}

RootDecompositionDims restricted_root_decomposition_dims(const MatrixAlgebraContext& ctx) {
  RootDecompositionDims out;
  // g_0: common kernel of ad(Z), Z in a.
  const Subalgebra whole("g", ctx.basis());
  out.g0 = centralizer_in(whole, ctx.a_basis(), "g_0").dim();
  for (const auto& rs : ctx.root_spaces()) {
    // Simultaneous eigenspace: stack (ad Z - lambda(Z)) over Z in a.
    const Eigen::Index block = 2 * ctx.basis().front().size();
    RMat cols(block * static_cast<Eigen::Index>(ctx.a_basis().size()), ctx.dim());
    for (int j = 0; j < ctx.dim(); ++j)
      for (std::size_t z = 0; z < ctx.a_basis().size(); ++z) {
        const Mat& zm = ctx.a_basis()[z];
        const Mat& c = ctx.basis()[static_cast<std::size_t>(j)];
        cols.block(static_cast<Eigen::Index>(z) * block, j, block, 1) =
            linalg::vec(bracket(zm, c) - ctx.root_value(rs.root, zm) * c);
      }
    out.root_total += static_cast<int>(linalg::kernel(cols).cols());
    for (const auto& x : rs.basis)
      for (const auto& zm : ctx.a_basis())
        out.max_residual = std::max(out.max_residual, (bracket(zm, x) - ctx.root_value(rs.root, zm) * x).norm());
  }
  return out;
}

}  // namespace ckf::liealg
