#include "ckf/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include <omp.h>

#include "ckf/rng.hpp"

namespace ckf::sampling {

void ContainmentStats::merge(const ContainmentStats& o) {
  samples += o.samples;
  failures += o.failures;
  errors += o.errors;
  first_failure = std::min(first_failure, o.first_failure);
  max_distance = std::max(max_distance, o.max_distance);
  max_ratio = std::max(max_ratio, o.max_ratio);
  max_mu_norm = std::max(max_mu_norm, o.max_mu_norm);
}

namespace {

void stretch_last_pair(Field f, int n, Mat& g, double s) {
  const double up = std::exp(s), down = std::exp(-s);
  g.col(n - 2) *= up;
  g.col(n - 1) *= down;
  if (f == Field::H) {
    g.col(2 * n - 2) *= up;
    g.col(2 * n - 1) *= down;
  }
}

void evaluate_one(const BatchSpec& spec, const Sampler& sampler, std::uint64_t i, ContainmentStats& st) {
  ++st.samples;
  try {
    auto eng = counter_engine(spec.seed, i);
    Mat g = sampler(eng);
    if (spec.fault_stretch != 0.0) stretch_last_pair(spec.field, spec.n, g, spec.fault_stretch);
    const cartan::CartanVector v = cartan::mu(spec.field, spec.n, g);
    const double d = cartan::model_membership_distance(spec.model, v);
    const double bound = spec.tolerance.bound(v);
    st.max_distance = std::max(st.max_distance, d);
    st.max_ratio = std::max(st.max_ratio, d / bound);
    st.max_mu_norm = std::max(st.max_mu_norm, v.norm());
    if (!(d < bound)) {
      ++st.failures;
      st.first_failure = std::min(st.first_failure, i);
    }
  } catch (const std::exception&) {
    ++st.errors;
    st.first_failure = std::min(st.first_failure, i);
  }
}

}  // namespace

ContainmentStats containment_serial(const BatchSpec& spec, const Sampler& sampler) {
  ContainmentStats st;
  for (std::uint64_t i = 0; i < spec.samples; ++i) evaluate_one(spec, sampler, i, st);
  return st;
}

ContainmentStats containment_parallel(const BatchSpec& spec, const Sampler& sampler) {
  const int threads = omp_get_max_threads();
  std::vector<ContainmentStats> partial(static_cast<std::size_t>(threads));
  const auto total = static_cast<long long>(spec.samples);
#pragma omp parallel num_threads(threads)
  {
    ContainmentStats& mine = partial[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(dynamic, 16)
    for (long long i = 0; i < total; ++i) evaluate_one(spec, sampler, static_cast<std::uint64_t>(i), mine);
  }
  ContainmentStats st;
  for (const auto& p : partial) st.merge(p);
  return st;
}

BatchSpec batch_for(const SubgroupFamily& fam, std::uint64_t samples, std::uint64_t seed) {
  BatchSpec spec;
  spec.field = fam.field;
  spec.n = fam.n;
  spec.model = fam.model();
  spec.samples = samples;
  spec.seed = seed;
  return spec;
}

ContainmentStats family_containment(const SubgroupFamily& fam, std::uint64_t samples, std::uint64_t seed,
                                    bool parallel) {
  const BatchSpec spec = batch_for(fam, samples, seed);
  const Sampler sampler = [&fam](std::mt19937_64& eng) { return fam.sample(eng); };
  return parallel ? containment_parallel(spec, sampler) : containment_serial(spec, sampler);
}

}  // namespace ckf::sampling
