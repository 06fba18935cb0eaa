// Range sweeps shared by the CLI `verify` command and the acceptance suite.
// Every sweep walks its range in increasing order and stops at the first
// counterexample, so reports are deterministic.

#ifndef VFS_VERIFY_HPP
#define VFS_VERIFY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace vfs {

struct SweepReport {
  std::string name;
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  std::int64_t checked = 0;
  std::optional<std::int64_t> counterexample;
  std::string detail;
  /// Value distribution where the sweep has one (the d of theorem9).
  std::map<std::int64_t, std::int64_t> histogram;

  bool passed() const { return !counterexample; }
};

/// nu_refined == nu_full for C and H, 1 <= m <= m_max, all primes p <= 2m + 1.
SweepReport lemma7_sweep(std::int64_t m_max);

/// rho_theorem8 == rho_oracle for C and H at every even n in [lo, hi].
SweepReport theorem8_sweep(std::int64_t lo, std::int64_t hi);

/// theorem9_delta(n).d in {1, 3} and rho^C(C^{2n}) odd for n in [lo, hi].
SweepReport theorem9_sweep(std::int64_t lo, std::int64_t hi);

}  // namespace vfs

#endif  // VFS_VERIFY_HPP
