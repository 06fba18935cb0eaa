// Prime valuations of the real, complex and quaternionic James numbers.
//
// c_m^F is never materialized. A JamesProfile stores nu_p(c_m^F) for the
// finitely many primes where it is positive, which is all that divisibility
// against n needs.

#ifndef VFS_JAMES_HPP
#define VFS_JAMES_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "vfs/exactmath.hpp"

namespace vfs {

enum class FieldTag { R, C, H };

std::string_view to_string(FieldTag f);

/// Accepts "R", "C", "H" in either case.
std::optional<FieldTag> parse_field(std::string_view s);

/// Contiguous integer interval [lo, hi].
struct SRange {
  std::int64_t lo = 0;
  std::int64_t hi = 0;

  std::int64_t size() const { return hi - lo + 1; }
  friend bool operator==(const SRange&, const SRange&) = default;
};

struct JamesProfile {
  FieldTag field = FieldTag::R;
  std::int64_t m = 0;
  /// prime -> nu_p(c_m^F), positive entries only.
  std::map<std::int64_t, std::int64_t> valuations;

  std::int64_t valuation(std::int64_t p) const {
    auto it = valuations.find(p);
    return it == valuations.end() ? 0 : it->second;
  }

  friend bool operator==(const JamesProfile&, const JamesProfile&) = default;
};

/// Number of q in [1, m] with q = 0, 1, 2 or 4 mod 8; equals nu_2(c_m^R).
std::int64_t f_adams(std::int64_t m);

/// Largest prime that can divide c_m^F: 2 for R, m+1 for C, 2m+1 for H.
std::int64_t support_bound(FieldTag field, std::int64_t m);

/// nu_p(c_m^F) from the unrestricted max formulas (s ranges from 0).
/// The s = 0 term contributes 0.
std::int64_t nu_full(FieldTag field, std::int64_t p, std::int64_t m);

/// The window of s that can attain the maximum in the complex formula:
/// [F + nu_p(F) - L, F] with F = floor(m/(p-1)), L = floor(log_p(m/(p-1))),
/// and [0, 0] when p > m + 1.
SRange s_set(std::int64_t m, std::int64_t p);

/// Same value as nu_full, maximizing only over s_set. field must be C or H.
std::int64_t nu_refined(FieldTag field, std::int64_t p, std::int64_t m);

/// Valuation map of c_m^F; empty for m = 0 (c_0^F = 1). Memoized.
JamesProfile profile(FieldTag field, std::int64_t m);

/// Profile built from nu_refined instead of nu_full (C and H only).
JamesProfile profile_refined(FieldTag field, std::int64_t m);

/// True iff c divides n.
bool divides(const JamesProfile& c, const FactoredInteger& n);

std::string to_string(const JamesProfile& c);

}  // namespace vfs

#endif  // VFS_JAMES_HPP
