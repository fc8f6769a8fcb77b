#pragma once

// Batched mu-containment sampling. Sample i of a batch is drawn from
// counter_engine(seed, i), so the parallel kernel reproduces the serial
// reference exactly.

#include <cstdint>
#include <functional>
#include <random>

#include "ckf/cartan.hpp"
#include "ckf/subgroups.hpp"

namespace ckf::sampling {

using Sampler = std::function<Mat(std::mt19937_64&)>;

struct BatchSpec {
  Field field = Field::R;
  int n = 0;
  cartan::MuModelSet model;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  cartan::ContainmentTolerance tolerance;
  /// Fault injection: right-multiply each sample by exp(s) and exp(-s) on the
  /// last two coordinates, which generically moves it off the model set.
  double fault_stretch = 0.0;
};

struct ContainmentStats {
  std::uint64_t samples = 0;
  std::uint64_t failures = 0;            // distance above the tolerance bound
  std::uint64_t errors = 0;              // mu could not be evaluated
  std::uint64_t first_failure = UINT64_MAX;
  double max_distance = 0.0;
  double max_ratio = 0.0;                // max of distance / bound
  double max_mu_norm = 0.0;

  bool passed() const { return samples > 0 && failures == 0 && errors == 0; }
  void merge(const ContainmentStats& o);
};

ContainmentStats containment_serial(const BatchSpec& spec, const Sampler& sampler);
ContainmentStats containment_parallel(const BatchSpec& spec, const Sampler& sampler);

/// Convenience wrappers drawing from a subgroup family against its own model set.
BatchSpec batch_for(const SubgroupFamily& fam, std::uint64_t samples, std::uint64_t seed);
ContainmentStats family_containment(const SubgroupFamily& fam, std::uint64_t samples, std::uint64_t seed,
                                    bool parallel = true);

}  // namespace ckf::sampling
