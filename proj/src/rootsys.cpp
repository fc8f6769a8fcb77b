#include "ckf/rootsys.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ckf::rootsys {

std::string_view to_string(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::BC: return "BC";
  }
  return "?";
}

Family family_from_string(std::string_view s) {
  if (s == "A") return Family::A;
  if (s == "B") return Family::B;
  if (s == "C") return Family::C;
  if (s == "D") return Family::D;
  if (s == "BC") return Family::BC;
  throw std::invalid_argument("unknown root system family '" + std::string(s) + "'");
}

RootVector::RootVector(std::vector<int> coeffs) : coeffs_(std::move(coeffs)) {
  const bool any_pos = std::any_of(coeffs_.begin(), coeffs_.end(), [](int c) { return c > 0; });
  const bool any_neg = std::any_of(coeffs_.begin(), coeffs_.end(), [](int c) { return c < 0; });
  if (!any_pos && !any_neg) throw std::invalid_argument("root vector is zero");
  if (any_pos && any_neg) throw std::invalid_argument("root vector " + str() + " has mixed signs");
}

int RootVector::height() const { return std::accumulate(coeffs_.begin(), coeffs_.end(), 0); }

RootVector RootVector::operator-() const {
  std::vector<int> c(coeffs_);
  for (int& x : c) x = -x;
  RootVector r;
  r.coeffs_ = std::move(c);
  return r;
}

namespace {

// Sums and differences may leave the set of roots; they are compared by
// coefficients only and never validated.
RootVector raw(std::vector<int> c) {
  RootVector r;
  if (std::all_of(c.begin(), c.end(), [](int x) { return x == 0; })) return r;
  const bool pos = std::any_of(c.begin(), c.end(), [](int x) { return x > 0; });
  const bool neg = std::any_of(c.begin(), c.end(), [](int x) { return x < 0; });
  if (pos && neg) return r;
  return RootVector(std::move(c));
}

}  // namespace

RootVector operator+(const RootVector& a, const RootVector& b) {
  std::vector<int> c(a.coeffs_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coeffs_[i];
  return raw(std::move(c));
}

RootVector operator-(const RootVector& a, const RootVector& b) { return a + (-b); }

std::string RootVector::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coeffs_.size(); ++i) os << (i ? "," : "") << coeffs_[i];
  os << ')';
  return os.str();
}

bool HeightLexLess::operator()(const RootVector& a, const RootVector& b) const {
  const int ha = a.height(), hb = b.height();
  if (ha != hb) return ha < hb;
  return a.coeffs() < b.coeffs();
}

int MultiplicityProfile::at(int squared_length) const {
  auto it = by_squared_length.find(squared_length);
  return it == by_squared_length.end() ? uniform : it->second;
}

RestrictedRootSystem::RestrictedRootSystem(Family family, int rank, std::vector<RootVector> roots,
                                           std::map<std::vector<int>, int> mult)
    : family_(family), rank_(rank), multiplicity_(std::move(mult)) {
  if (rank < 1) throw std::invalid_argument("rank must be positive");
  for (auto& r : roots) {
    if (r.rank() != rank) throw std::invalid_argument("root " + r.str() + " has wrong length");
    roots_.insert(std::move(r));
  }
  for (const auto& r : roots_) {
    if (!contains(-r)) throw std::invalid_argument("root set not closed under negation at " + r.str());
    if (multiplicity(r) != multiplicity(-r))
      throw std::invalid_argument("multiplicities not symmetric at " + r.str());
    if (multiplicity(r) < 1) throw std::invalid_argument("multiplicity must be positive at " + r.str());
  }
  for (int i = 0; i < rank; ++i)
    if (!contains(simple(i))) throw std::invalid_argument("simple root missing from root set");
  if (family != Family::BC) {
    for (const auto& r : roots_)
      if (contains(r + r)) throw std::invalid_argument("reduced family contains a doubled root " + r.str());
  }
}

int RestrictedRootSystem::multiplicity(const RootVector& v) const {
  auto it = multiplicity_.find(v.coeffs());
  return it == multiplicity_.end() ? 0 : it->second;
}

std::vector<RootVector> RestrictedRootSystem::positive_roots() const {
  std::vector<RootVector> out;
  for (const auto& r : roots_)
    if (r.positive()) out.push_back(r);
  return out;
}

RootVector RestrictedRootSystem::simple(int i) const {
  std::vector<int> c(static_cast<std::size_t>(rank_), 0);
  c[static_cast<std::size_t>(i)] = 1;
  return RootVector(std::move(c));
}

bool RestrictedRootSystem::irreducible() const {
  std::vector<int> comp(static_cast<std::size_t>(rank_));
  std::iota(comp.begin(), comp.end(), 0);
  auto find = [&](int x) {
    while (comp[static_cast<std::size_t>(x)] != x) x = comp[static_cast<std::size_t>(x)];
    return x;
  };
  for (int i = 0; i < rank_; ++i)
    for (int j = i + 1; j < rank_; ++j)
      if (contains(simple(i) + simple(j))) comp[static_cast<std::size_t>(find(j))] = find(i);
  const int root0 = find(0);
  for (int i = 1; i < rank_; ++i)
    if (find(i) != root0) return false;
  return true;
}

std::string RestrictedRootSystem::label() const {
  return std::string(to_string(family_)) + std::to_string(rank_);
}

namespace {

using Eps = std::vector<int>;

// Simple roots in orthonormal coordinates, and the ambient dimension.
std::vector<Eps> simple_roots_eps(Family f, int rank) {
  const int dim = f == Family::A ? rank + 1 : rank;
  std::vector<Eps> s;
  for (int i = 0; i < rank - 1; ++i) {
    Eps e(static_cast<std::size_t>(dim), 0);
    e[static_cast<std::size_t>(i)] = 1;
    e[static_cast<std::size_t>(i + 1)] = -1;
    s.push_back(e);
  }
  Eps last(static_cast<std::size_t>(dim), 0);
  switch (f) {
    case Family::A:
      last[static_cast<std::size_t>(rank - 1)] = 1;
      last[static_cast<std::size_t>(rank)] = -1;
      break;
    case Family::B:
    case Family::BC:
      last[static_cast<std::size_t>(rank - 1)] = 1;
      break;
    case Family::C:
      last[static_cast<std::size_t>(rank - 1)] = 2;
      break;
    case Family::D:
      last[static_cast<std::size_t>(rank - 2)] = 1;
      last[static_cast<std::size_t>(rank - 1)] = 1;
      break;
  }
  s.push_back(last);
  return s;
}

std::vector<Eps> roots_eps(Family f, int rank) {
  const int dim = f == Family::A ? rank + 1 : rank;
  std::vector<Eps> out;
  auto unit = [&](int i, int a, int j = -1, int b = 0) {
    Eps e(static_cast<std::size_t>(dim), 0);
    e[static_cast<std::size_t>(i)] += a;
    if (j >= 0) e[static_cast<std::size_t>(j)] += b;
    return e;
  };
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      if (i == j) continue;
      out.push_back(unit(i, 1, j, -1));
      if (f != Family::A && i < j) {
        out.push_back(unit(i, 1, j, 1));
        out.push_back(unit(i, -1, j, -1));
      }
    }
  if (f == Family::B || f == Family::BC)
    for (int i = 0; i < dim; ++i) {
      out.push_back(unit(i, 1));
      out.push_back(unit(i, -1));
    }
  if (f == Family::C || f == Family::BC)
    for (int i = 0; i < dim; ++i) {
      out.push_back(unit(i, 2));
      out.push_back(unit(i, -2));
    }
  return out;
}

// Simple-root coordinates of v: the simple roots are triangular in the first
// `rank` orthonormal coordinates, so forward substitution is exact.
std::vector<int> to_simple_coords(const std::vector<Eps>& simple, const Eps& v, Family f) {
  const int rank = static_cast<int>(simple.size());
  std::vector<int> c(static_cast<std::size_t>(rank), 0);
  Eps rest = v;
  // Solve from the last simple root backwards for D (its last root touches two coordinates);
  // for the others proceed coordinate by coordinate.
  for (int i = 0; i < rank; ++i) {
    const auto& s = simple[static_cast<std::size_t>(i)];
    if (f == Family::D && i == rank - 2) {
      // α_{n-1} = e_{n-1} - e_n and α_n = e_{n-1} + e_n share coordinates n-1, n.
      const int x = rest[static_cast<std::size_t>(rank - 2)];
      const int y = rest[static_cast<std::size_t>(rank - 1)];
      if ((x - y) % 2 != 0) throw std::logic_error("D-type coordinate parity");
      c[static_cast<std::size_t>(rank - 2)] = (x - y) / 2;
      c[static_cast<std::size_t>(rank - 1)] = (x + y) / 2;
      rest[static_cast<std::size_t>(rank - 2)] = 0;
      rest[static_cast<std::size_t>(rank - 1)] = 0;
      break;
    }
    const int pivot = s[static_cast<std::size_t>(i)];
    const int val = rest[static_cast<std::size_t>(i)];
    if (val % pivot != 0) throw std::logic_error("non-integral simple-root coordinate");
    const int k = val / pivot;
    c[static_cast<std::size_t>(i)] = k;
    for (std::size_t t = 0; t < rest.size(); ++t) rest[t] -= k * s[t];
  }
  if (std::any_of(rest.begin(), rest.end(), [](int x) { return x != 0; }))
    throw std::logic_error("vector not in the root lattice");
  return c;
}

int squared_length(const Eps& v) {
  int s = 0;
  for (int x : v) s += x * x;
  return s;
}

}  // namespace

RestrictedRootSystem build_root_system(Family family, int rank, const MultiplicityProfile& profile) {
  if (rank < 1) throw std::invalid_argument("rank must be at least 1");
  if ((family == Family::B || family == Family::C) && rank < 2)
    throw std::invalid_argument(std::string(to_string(family)) + " requires rank >= 2");
  if (family == Family::D && rank < 3) throw std::invalid_argument("D requires rank >= 3");
  if (rank > 12) throw std::invalid_argument("rank above 12 is not supported");

  const auto simple = simple_roots_eps(family, rank);
  std::vector<RootVector> roots;
  std::map<std::vector<int>, int> mult;
  for (const auto& e : roots_eps(family, rank)) {
    auto c = to_simple_coords(simple, e, family);
    mult[c] = profile.at(squared_length(e));
    roots.emplace_back(std::move(c));
  }
  return RestrictedRootSystem(family, rank, std::move(roots), std::move(mult));
}

RestrictedRootSystem preset_sl(int n, int field_real_dim) {
  if (n < 2) throw std::invalid_argument("sl(n) preset needs n >= 2");
  if (field_real_dim != 1 && field_real_dim != 2 && field_real_dim != 4)
    throw std::invalid_argument("field real dimension must be 1, 2 or 4");
  return build_root_system(Family::A, n - 1, MultiplicityProfile::constant(field_real_dim));
}

RestrictedRootSystem preset_so(int p, int q) {
  if (p > q) std::swap(p, q);
  if (p < 1) throw std::invalid_argument("so(p,q) preset needs p, q >= 1");
  if (p == q) {
    if (p < 3) throw std::invalid_argument("so(p,p) preset needs p >= 3 (D_p is reducible below)");
    return build_root_system(Family::D, p);
  }
  if (p == 1) {
    // so(1,q): rank one, roots ±e_1 with multiplicity q-1.
    std::vector<RootVector> roots{RootVector({1}), RootVector({-1})};
    std::map<std::vector<int>, int> mult{{{1}, q - 1}, {{-1}, q - 1}};
    return RestrictedRootSystem(Family::B, 1, std::move(roots), std::move(mult));
  }
  MultiplicityProfile prof;
  prof.by_squared_length[1] = q - p;  // short roots ±e_i
  prof.by_squared_length[2] = 1;      // long roots ±e_i ± e_j
  return build_root_system(Family::B, p, prof);
}

SigmaSplit split_sigma(const RestrictedRootSystem& rs, const std::set<int>& pi_prime) {
  for (int i : pi_prime)
    if (i < 0 || i >= rs.rank()) throw std::invalid_argument("simple index out of range");
  SigmaSplit out;
  out.pi_prime = pi_prime;
  for (const auto& r : rs.roots()) {
    bool in_span = true;
    for (int i = 0; i < rs.rank(); ++i)
      if (r[i] != 0 && !pi_prime.count(i)) in_span = false;
    if (in_span)
      out.zero.insert(r);
    else if (r.positive())
      out.plus.insert(r);
    else
      out.minus.insert(r);
  }
  return out;
}

bool horospherical_is_abelian(const RestrictedRootSystem& rs, const std::set<int>& pi_prime) {
  const auto split = split_sigma(rs, pi_prime);
  for (auto a = split.plus.begin(); a != split.plus.end(); ++a)
    for (auto b = a; b != split.plus.end(); ++b)
      if (rs.contains(*a + *b)) return false;
  return true;
}

int grading_depth(const RestrictedRootSystem& rs, const std::set<int>& pi_prime) {
  const auto split = split_sigma(rs, pi_prime);
  int depth = 0;
  for (const auto& r : split.plus) {
    int d = 0;
    for (int i = 0; i < rs.rank(); ++i)
      if (!pi_prime.count(i)) d += r[i];
    depth = std::max(depth, d);
  }
  return depth;
}

RootVector highest_root(const RestrictedRootSystem& rs) {
  if (!rs.irreducible()) throw std::invalid_argument(rs.label() + " is reducible; no highest root");
  const auto pos = rs.positive_roots();
  const RootVector* best = &pos.front();
  for (const auto& r : pos)
    if (r.height() > best->height()) best = &r;
  for (const auto& r : pos)
    for (int i = 0; i < rs.rank(); ++i)
      if (r[i] > (*best)[i]) throw std::logic_error("no root dominates all positive roots");
  return *best;
}

namespace {

std::vector<int> removed_indices(const RestrictedRootSystem& rs, const std::set<int>& pi_prime) {
  std::vector<int> removed;
  for (int i = 0; i < rs.rank(); ++i)
    if (!pi_prime.count(i)) removed.push_back(i);
  return removed;
}

}  // namespace

bool levi_condition_v(const RestrictedRootSystem& rs, const std::set<int>& pi_prime) {
  const auto removed = removed_indices(rs, pi_prime);
  if (removed.empty()) return true;
  if (removed.size() != 1) return false;
  return highest_root(rs)[removed.front()] == 1;
}

bool levi_condition_v_literal(const RestrictedRootSystem& rs, const std::set<int>& pi_prime) {
  const auto removed = removed_indices(rs, pi_prime);
  if (removed.empty()) return true;
  if (removed.size() != 1) return false;
  const RootVector diff = highest_root(rs) - rs.simple(removed.front());
  if (diff.coeffs().empty()) return false;
  return split_sigma(rs, pi_prime).zero.count(diff) > 0;
}

RootVector lowest_root_in(const RootSet& set) {
  if (set.empty()) throw std::invalid_argument("lowest_root_in: empty set");
  return *set.begin();
}

RootVector lowest_root_in(const std::vector<RootVector>& roots) {
  if (roots.empty()) throw std::invalid_argument("lowest_root_in: empty set");
  return *std::min_element(roots.begin(), roots.end(), HeightLexLess{});
}

std::set<int> complement_of(const RestrictedRootSystem& rs, int removed) {
  if (removed < 0 || removed >= rs.rank()) throw std::invalid_argument("removed index out of range");
  auto s = all_simple(rs);
  s.erase(removed);
  return s;
}

std::set<int> all_simple(const RestrictedRootSystem& rs) {
  std::set<int> s;
  for (int i = 0; i < rs.rank(); ++i) s.insert(i);
  return s;
}

}  // namespace ckf::rootsys
