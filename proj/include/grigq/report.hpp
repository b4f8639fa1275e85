#ifndef GRIGQ_REPORT_HPP
#define GRIGQ_REPORT_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace grigq {

inline constexpr const char *kVersion = "0.1.0";

// resource caps (coset bounds, class caps) are distinct from verification
// failures; the CLI maps this to its own exit code
struct ResourceLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CheckEntry {
  std::string name;
  std::string anchor;  // the mathematical claim the check verifies
  std::string expected;
  std::string computed;
  bool pass = false;
  double seconds = 0.0;
};

struct Report {
  std::string command;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<CheckEntry> entries;  // sorted by name on finalize
  std::string version = kVersion;
  bool resource_limited = false;  // some check hit a cap instead of deciding

  bool all_pass() const;
  void sort_entries();
  std::string to_json() const;  // stable field order; timings segregated
  std::string to_text() const;
};

struct RunProfile {
  bool deep = false;
  uint64_t seed = 1;
  uint64_t max_cosets = 1000000;
};

// deterministic generator for the seeded property checks
struct SplitMix64 {
  uint64_t state;
  explicit SplitMix64(uint64_t seed) : state(seed ^ 0x9e3779b97f4a7c15ULL) {}
  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  uint64_t below(uint64_t n) { return next() % n; }
};

// golden constant: the index of K = <<(ab)^2>> in the level quotients,
// stable for n >= 4 (recorded from the permutation computation)
inline constexpr int64_t kBranchKIndex = 16;

// individual report builders (the CLI subcommands)
Report report_order(int level);
Report report_check_relators(const std::string &family, int level);
Report report_enumerate(const std::string &family, int level, uint64_t max_cosets,
                        const std::string &strategy);
Report report_abelianization(const std::string &family, int level);
Report report_multiplier(int level);
Report report_qn(int level);
Report report_pair_identities(int max_index);
Report report_kernels(int level);
Report report_branch_wp(const std::string &word_text);
Report report_invariant_homs(int n, int k);
Report report_limit_bound(const std::vector<long long> &dims, long long kernel_bound,
                          long long target);
Report report_all(const RunProfile &profile);

}  // namespace grigq

#endif
