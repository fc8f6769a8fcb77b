#include "ckf/construct.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ckf/linalg.hpp"
#include "ckf/rng.hpp"

namespace ckf::construct {

namespace {

std::vector<Mat> diagonal_traceless(const MatrixAlgebraContext& ctx, int k) {
  const auto& us = units(ctx.field());
  std::vector<Mat> out;
  for (int i = 0; i + 1 < k; ++i) {
    Mat d = ctx.elementary(i, i, us[0]) - ctx.elementary(i + 1, i + 1, us[0]);
    out.push_back(d);
    if (ctx.field() == Field::C) out.push_back(cplx(0, 1) * d);
  }
  if (ctx.field() == Field::H)
    for (int i = 0; i < k; ++i)
      for (std::size_t u = 1; u < us.size(); ++u) out.push_back(ctx.elementary(i, i, us[u]));
  return out;
}

void add_block(const MatrixAlgebraContext& ctx, std::vector<Mat>& out, int i0, int i1, int j0, int j1,
               bool skip_diagonal) {
  for (int i = i0; i < i1; ++i)
    for (int j = j0; j < j1; ++j) {
      if (skip_diagonal && i == j) continue;
      for (const auto& u : units(ctx.field())) out.push_back(ctx.elementary(i, j, u));
    }
}

// Orthonormal kernel with an absolute floor, so an all-noise map counts as zero.
RMat kernel_abs(const RMat& a, double tol) {
  const Eigen::Index n = a.cols();
  Eigen::JacobiSVD<RMat> svd(a, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  const double thr = tol * std::max(1.0, s.size() ? s(0) : 0.0);
  const Eigen::Index r = (s.array() > thr).count();
  return svd.matrixV().rightCols(n - r);
}

double max_abs_diff(const cartan::CartanVector& a, const cartan::CartanVector& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

}  // namespace

Subalgebra hprime_sl_algebra(const MatrixAlgebraContext& ctx, int m) {
  const int n = ctx.n(), k = m / 2;
  if (!(m >= 2 && m < n)) throw std::invalid_argument("h' needs 2 <= m < n");
  std::vector<Mat> span = diagonal_traceless(ctx, k);
  add_block(ctx, span, 0, k, 0, k, true);
  add_block(ctx, span, 0, k, k, n, false);
  return Subalgebra("h'", span);
}

Mat grading_element_sl(Field f, int n, int k) {
  Mat a = Mat::Zero(n, n);
  for (int i = 0; i < n; ++i) a(i, i) = i < k ? double(n - k) : -double(k);
  return embed(f, a);
}

Subalgebra hprime_so_algebra(const MatrixAlgebraContext& ctx, int p, int q) {
  if (ctx.field() != Field::R || ctx.n() != p + q) throw std::invalid_argument("h' of so(p,q) lives in sl(p+q,R)");
  const KUnit one = units(Field::R)[0];
  std::vector<Mat> span;
  auto rotations = [&](int lo, int hi) {
    for (int i = lo; i < hi; ++i)
      for (int j = i + 1; j < hi; ++j) span.push_back(ctx.elementary(i, j, one) - ctx.elementary(j, i, one));
  };
  rotations(0, p);
  rotations(p, p + q);
  add_block(ctx, span, 0, p, p, p + q, false);
  return Subalgebra("h'", span);
}

Mat grading_element_so(int p, int q) {
  Mat a = Mat::Zero(p + q, p + q);
  for (int i = 0; i < p + q; ++i) a(i, i) = i < p ? double(q) : -double(p);
  return a;
}

Subalgebra sl_sub_algebra(const MatrixAlgebraContext& ctx, int m) {
  std::vector<Mat> span = diagonal_traceless(ctx, m);
  add_block(ctx, span, 0, m, 0, m, true);
  return Subalgebra("sl(m)", span);
}

SConjugation conjugate_to_S(Field f, int n, int m, const Mat& h) {
  if (f == Field::H) throw std::invalid_argument("conjugate_to_S is implemented for K = R, C");
  const auto hp = SubgroupFamily::hprime_sl(f, n, m);
  if (hp.membership_residual(h) > 1e-8) throw std::invalid_argument("conjugate_to_S: input is not in H'");
  const int k = m / 2;
  const Mat x = h.block(0, k, k, n - k);
  Eigen::JacobiSVD<Mat> svd(x, Eigen::ComputeFullU | Eigen::ComputeFullV);

  SConjugation out;
  out.l = svd.matrixU().adjoint();
  out.l_prime = svd.matrixV().adjoint();
  // Move det l onto the first rows of both factors (t_1 is unchanged), then
  // repair det l' on a row that only meets the zero columns of the strip.
  const cplx dl = out.l.determinant();
  const cplx fix = std::conj(dl) / std::abs(dl);
  out.l.row(0) *= fix;
  out.l_prime.row(0) *= fix;
  const cplx dlp = out.l_prime.determinant();
  out.l_prime.row(k) *= std::conj(dlp) / std::abs(dlp);

  Mat d = Mat::Zero(n, n);
  d.topLeftCorner(k, k) = out.l;
  d.bottomRightCorner(n - k, n - k) = out.l_prime;
  out.s = d * h * d.adjoint();

  const auto sfam = SubgroupFamily::s_sl(f, n, m);
  double strip_imag = 0.0;
  for (int i = 0; i < k; ++i) {
    out.strip.push_back(out.s(i, k + i).real());
    strip_imag += std::abs(out.s(i, k + i).imag());
  }
  out.block_residual = sfam.forbidden_norm(out.s) + strip_imag;
  if (f == Field::R) out.block_residual += out.s.imag().norm();

  auto group_res = [](const Mat& u) {
    const Eigen::Index r = u.rows();
    return (u.adjoint() * u - Mat::Identity(r, r)).norm() + std::abs(u.determinant() - 1.0);
  };
  out.group_residual = group_res(out.l) + group_res(out.l_prime);
  out.mu_difference = max_abs_diff(cartan::mu(f, n, out.s), cartan::mu(f, n, h));
  return out;
}

HorosphericalData horospherical_data(const MatrixAlgebraContext& ctx, const std::set<int>& pi_prime) {
  const auto split = rootsys::split_sigma(ctx.roots(), pi_prime);
  HorosphericalData u;
  u.pi_prime = pi_prime;
  u.plus.assign(split.plus.begin(), split.plus.end());
  return u;
}

namespace {

SOSequence run_sequence(const MatrixAlgebraContext& ctx, const HorosphericalData& u,
                        std::vector<std::vector<Mat>> spaces) {
  if (!rootsys::horospherical_is_abelian(ctx.roots(), u.pi_prime))
    throw std::invalid_argument("the horospherical subalgebra is not abelian");
  SOSequence seq;
  const double target = std::sqrt(2.0);
  for (;;) {
    std::size_t pick = spaces.size();
    for (std::size_t i = 0; i < spaces.size(); ++i)
      if (!spaces[i].empty()) {
        pick = i;
        break;
      }
    if (pick == spaces.size()) break;
    Mat x = spaces[pick].front();
    x *= target / ctx.norm_theta(x);
    seq.lambdas.push_back(u.plus[pick]);
    seq.vectors.push_back(x);

    for (auto& basis : spaces) {
      if (basis.empty()) continue;
      RMat cols(2 * x.size(), static_cast<Eigen::Index>(basis.size()));
      for (std::size_t j = 0; j < basis.size(); ++j)
        cols.col(static_cast<Eigen::Index>(j)) = linalg::vec(bracket(x, ctx.theta(basis[j])));
      const RMat ker = kernel_abs(cols, 1e-10);
      std::vector<Mat> next;
      for (Eigen::Index j = 0; j < ker.cols(); ++j) next.push_back(linalg::combine(basis, ker.col(j)));
      basis = std::move(next);
    }
    if (seq.r() > ctx.dim()) throw std::logic_error("strongly orthogonal sequence did not terminate");
  }
  return seq;
}

}  // namespace

SOSequence strongly_orthogonal_sequence(const MatrixAlgebraContext& ctx, const HorosphericalData& u) {
  std::vector<std::vector<Mat>> spaces;
  for (const auto& lam : u.plus) spaces.push_back(ctx.root_space(lam).basis);
  return run_sequence(ctx, u, std::move(spaces));
}

SOSequence strongly_orthogonal_sequence_rotated(const MatrixAlgebraContext& ctx, const HorosphericalData& u,
                                                std::uint64_t seed) {
  std::vector<std::vector<Mat>> spaces;
  std::uint64_t counter = 0;
  for (const auto& lam : u.plus) {
    const auto& b = ctx.root_space(lam).basis;
    auto eng = counter_engine(seed, counter++);
    const RMat rot = random_special_orthogonal(static_cast<int>(b.size()), eng);
    std::vector<Mat> rotated;
    for (Eigen::Index j = 0; j < rot.cols(); ++j) rotated.push_back(linalg::combine(b, rot.col(j)));
    spaces.push_back(std::move(rotated));
  }
  return run_sequence(ctx, u, std::move(spaces));
}

SymmetricLeviInstance::SymmetricLeviInstance(int p_, int q_)
    : p(p_),
      q(q_),
      ctx(Field::R, p_ + q_),
      sigma(liealg::sigma_so_pq(p_, q_)),
      pair(liealg::associated_pair(ctx, sigma)),
      u(horospherical_data(ctx, rootsys::complement_of(ctx.roots(), p_ - 1))) {}

bool SequenceChecks::passed() const {
  return increasing && theta_bracket_residual < 1e-10 && sl2_residual < 1e-10 && sl2_commutation_residual < 1e-10 &&
         a_prime_dim == r && centralizer_dim == a_prime_dim && centralizer_gap < 1e-8 &&
         a_prime_in_ph_residual < 1e-10 && u_dim == ph_dim && f_rank_on_u_prime == r &&
         equivariance_residual < 1e-9 && f_image_residual < 1e-10;
}

SequenceChecks check_sequence(const SymmetricLeviInstance& inst, const SOSequence& seq, int equivariance_samples,
                              std::uint64_t seed) {
  const auto& ctx = inst.ctx;
  SequenceChecks c;
  c.r = seq.r();
  rootsys::HeightLexLess less;
  c.increasing = true;
  for (int i = 1; i < c.r; ++i)
    if (!less(seq.lambdas[static_cast<std::size_t>(i - 1)], seq.lambdas[static_cast<std::size_t>(i)]))
      c.increasing = false;

  std::vector<liealg::Sl2Triple> triples;
  for (int i = 0; i < c.r; ++i) {
    triples.push_back(liealg::sl2_homomorphism(ctx, seq.lambdas[static_cast<std::size_t>(i)],
                                               seq.vectors[static_cast<std::size_t>(i)]));
    c.sl2_residual = std::max(c.sl2_residual, triples.back().residual);
  }
  for (int i = 0; i < c.r; ++i)
    for (int j = 0; j < c.r; ++j) {
      if (i == j) continue;
      const auto& a = triples[static_cast<std::size_t>(i)];
      const auto& b = triples[static_cast<std::size_t>(j)];
      c.theta_bracket_residual =
          std::max(c.theta_bracket_residual,
                   bracket(seq.vectors[static_cast<std::size_t>(i)], ctx.theta(seq.vectors[static_cast<std::size_t>(j)])).norm());
      for (const Mat* x : {&a.e, &a.f, &a.h})
        for (const Mat* y : {&b.e, &b.f, &b.h})
          c.sl2_commutation_residual = std::max(c.sl2_commutation_residual, bracket(*x, *y).norm());
    }

  auto f = [&](const Mat& x) -> Mat { return x - ctx.theta(x); };
  std::vector<Mat> a_span;
  for (const auto& x : seq.vectors) a_span.push_back(f(x));
  const Subalgebra a_prime("a'", a_span);
  c.a_prime_dim = a_prime.dim();
  c.f_rank_on_u_prime = a_span.empty() ? 0 : linalg::numerical_rank(linalg::vec_columns(a_span));

  const Subalgebra ph = liealg::intersect_p(ctx, inst.pair.h);
  c.ph_dim = ph.dim();
  for (const auto& v : a_span) c.a_prime_in_ph_residual = std::max(c.a_prime_in_ph_residual, ph.distance(v));
  const Subalgebra cent = liealg::centralizer_in(ph, a_span, "z(a')");
  c.centralizer_dim = cent.dim();
  c.centralizer_gap = linalg::subspace_gap(a_prime.q(), cent.q());

  std::vector<Mat> u_basis;
  for (const auto& lam : inst.u.plus)
    for (const auto& b : ctx.root_space(lam).basis) u_basis.push_back(b);
  c.u_dim = static_cast<int>(u_basis.size());
  const Subalgebra u_alg("u", u_basis);
  for (const auto& y : u_basis) c.f_image_residual = std::max(c.f_image_residual, ph.distance(f(y)));

  const Subalgebra kh = liealg::intersect_k(ctx, inst.pair.h);
  for (int s = 0; s < equivariance_samples; ++s) {
    auto eng = counter_engine(seed, static_cast<std::uint64_t>(s));
    Mat z = ctx.zero();
    for (const auto& b : kh.basis()) z += gaussian(eng) * b;
    const Mat kk = expm(z);
    const Mat kinv = kk.inverse();
    for (const auto& y : u_basis) {
      const Mat ady = kk * y * kinv;
      c.equivariance_residual = std::max({c.equivariance_residual, (f(ady) - kk * f(y) * kinv).norm(),
                                          u_alg.distance(ady)});
    }
  }
  return c;
}

bool MuEqualityReport::passed(double preimage_tol) const {
  for (const auto& row : rows)
    if (!row.stats.passed()) return false;
  return preimage_max_difference < preimage_tol && a_prime_pattern_residual < preimage_tol;
}

MuEqualityReport mu_equalities_check(const SymmetricLeviInstance& inst, const SOSequence& seq, std::uint64_t samples,
                                     std::uint64_t seed, double fault_stretch) {
  const auto& ctx = inst.ctx;
  const int n = inst.p + inst.q;
  auto f = [&](const Mat& x) -> Mat { return x - ctx.theta(x); };

  std::vector<Mat> u_basis;
  for (const auto& lam : inst.u.plus)
    for (const auto& b : ctx.root_space(lam).basis) u_basis.push_back(b);
  const Subalgebra kh = liealg::intersect_k(ctx, inst.pair.h);
  std::vector<liealg::Sl2Triple> triples;
  for (int i = 0; i < seq.r(); ++i)
    triples.push_back(liealg::sl2_homomorphism(ctx, seq.lambdas[static_cast<std::size_t>(i)],
                                               seq.vectors[static_cast<std::size_t>(i)]));

  const auto so0 = SubgroupFamily::so_family(SubgroupKind::SO0, inst.p, inst.q);
  std::vector<std::pair<std::string, sampling::Sampler>> samplers;
  samplers.emplace_back("H=SO0(p,q)", [so0](std::mt19937_64& eng) { return so0.sample(eng); });
  samplers.emplace_back("A'", [&](std::mt19937_64& eng) {
    Mat z = ctx.zero();
    for (const auto& x : seq.vectors) z += gaussian(eng) * f(x);
    return expm(z);
  });
  samplers.emplace_back("U'", [&](std::mt19937_64& eng) {
    Mat z = ctx.zero();
    for (const auto& x : seq.vectors) z += gaussian(eng) * x;
    return expm(z);
  });
  samplers.emplace_back("H'=(K∩H)0·U", [&](std::mt19937_64& eng) {
    Mat z = ctx.zero(), y = ctx.zero();
    for (const auto& b : kh.basis()) z += gaussian(eng) * b;
    for (const auto& b : u_basis) y += gaussian(eng) * b;
    return Mat(expm(z) * expm(y));
  });
  samplers.emplace_back("G'", [&](std::mt19937_64& eng) {
    Mat z = ctx.zero();
    for (const auto& t : triples) z += gaussian(eng) * t.e + gaussian(eng) * t.f + gaussian(eng) * t.h;
    return expm(z);
  });

  MuEqualityReport rep;
  std::uint64_t row_index = 0;
  for (const auto& [name, sampler] : samplers) {
    sampling::BatchSpec spec;
    spec.field = Field::R;
    spec.n = n;
    spec.model = cartan::MuModelSet::so_pq(inst.p, inst.q);
    spec.samples = samples;
    spec.seed = seed + 0x9e3779b97f4a7c15ULL * ++row_index;
    spec.fault_stretch = fault_stretch;
    rep.rows.push_back({name, sampling::containment_parallel(spec, sampler)});
  }

  // Preimages in A' of sampled U' points, and the explicit one-parameter pattern.
  for (std::uint64_t i = 0; i < samples; ++i) {
    auto eng = counter_engine(seed + 0x51ed2701ULL, i);
    Mat zu = ctx.zero(), za = ctx.zero();
    for (const auto& x : seq.vectors) {
      const double t = gaussian(eng);
      const double c = ctx.norm_theta(x);
      zu += t * x;
      za += (cartan::mu_unipotent_sl2(c * t) / c) * f(x);
    }
    const auto mu_u = cartan::mu(Field::R, n, expm(zu));
    const auto mu_a = cartan::mu(Field::R, n, expm(za));
    rep.preimage_max_difference = std::max(rep.preimage_max_difference, max_abs_diff(mu_u, mu_a));
  }
  for (int k = 0; k < seq.r(); ++k) {
    auto eng = counter_engine(seed + 0x7a11ULL, static_cast<std::uint64_t>(k));
    const Mat& x = seq.vectors[static_cast<std::size_t>(k)];
    const double t = gaussian(eng);
    const double v = ctx.norm_theta(x) * std::abs(t);
    std::vector<double> predicted(static_cast<std::size_t>(n), 0.0);
    predicted.front() = v;
    predicted.back() = -v;
    const auto got = cartan::mu(Field::R, n, expm(t * f(x)));
    rep.a_prime_pattern_residual =
        std::max(rep.a_prime_pattern_residual, max_abs_diff(got, cartan::CartanVector(predicted)));
  }
  return rep;
}

std::vector<DecayPoint> conjugacy_limit_decay(const Mat& h, const Mat& x0, const SubgroupFamily& limit,
                                              const std::vector<double>& t_grid) {
  if (!x0.isDiagonal()) throw std::invalid_argument("conjugacy_limit_decay: X0 must be diagonal");
  std::vector<DecayPoint> out;
  const Eigen::Index r = h.rows();
  for (double t : t_grid) {
    // Conjugation by a diagonal exponential scales entry (i, j) by exp(t (x_i - x_j)).
    Mat c(r, r);
    for (Eigen::Index i = 0; i < r; ++i)
      for (Eigen::Index j = 0; j < r; ++j) c(i, j) = h(i, j) * std::exp(t * (x0(i, i) - x0(j, j)).real());
    out.push_back({t, limit.forbidden_norm(c)});
  }
  return out;
}

DecayResult decay_experiment(int p, int q, double t_max, double step, const std::string& variant,
                             std::uint64_t seed) {
  if (p < 1 || q < 1) throw std::invalid_argument("decay needs p, q >= 1");
  if (!(t_max > 0.0) || !(step > 0.0)) throw std::invalid_argument("decay needs tmax > 0 and step > 0");
  Mat h;
  if (variant == "group") {
    h = SubgroupFamily::so_family(SubgroupKind::SO0, p, q).sample(seed, 0);
  } else if (variant == "compact") {
    auto eng = counter_engine(seed, 0);
    h = random_special_orthogonal(p + q, eng).cast<cplx>();
  } else {
    throw std::invalid_argument("unknown decay variant '" + variant + "'");
  }
  std::vector<double> grid;
  const auto steps = static_cast<int>(std::floor(t_max / step + 1e-9));
  for (int i = 0; i <= steps; ++i) grid.push_back(i * step);

  DecayResult res;
  res.points = conjugacy_limit_decay(h, grading_element_so(p, q), SubgroupFamily::so_family(SubgroupKind::HprimeSO, p, q),
                                     grid);
  res.rate = p + q;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int cnt = 0;
  for (const auto& pt : res.points) {
    if (!(pt.distance > 0.0)) continue;
    const double y = std::log(pt.distance);
    sx += pt.t;
    sy += y;
    sxx += pt.t * pt.t;
    sxy += pt.t * y;
    ++cnt;
  }
  if (cnt >= 2) res.slope = (cnt * sxy - sx * sy) / (cnt * sxx - sx * sx);
  res.slope_ratio = -res.slope / res.rate;
  const double d0 = res.points.front().distance;
  res.end_ratio = d0 > 0.0 ? res.points.back().distance / d0 : 0.0;
  res.monotone_from = res.points.back().t;
  for (std::size_t i = res.points.size() - 1; i > 0; --i) {
    if (res.points[i].distance <= res.points[i - 1].distance)
      res.monotone_from = res.points[i - 1].t;
    else
      break;
  }
  return res;
}

}  // namespace ckf::construct
