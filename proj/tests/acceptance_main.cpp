#include <cstdio>
#include <cstring>

#include "ckf/acceptance.hpp"

int main(int argc, char** argv) {
  ckf::acceptance::Options opts;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--fast") == 0) opts.fast = true;
  bool all = true;
  ckf::acceptance::run(opts, [&all](const ckf::acceptance::CriterionResult& r) {
    all = all && r.passed;
    std::printf("%s criterion %d (%s) %.2fs/%.0fs: %s\n", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(), r.seconds,
                r.budget_seconds, r.detail.c_str());
    std::fflush(stdout);
  });
  return all ? 0 : 1;
}
