// rho^F(F^n): the maximal number of linearly independent F-vector fields on
// the unit sphere of F^n, computed by independent routes, plus the relations
// tying the three fields together.

#ifndef VFS_RHO_HPP
#define VFS_RHO_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vfs/exactmath.hpp"
#include "vfs/james.hpp"

namespace vfs {

enum class RhoMethod { AdamsClosedForm, Theorem8, Oracle };

std::string_view to_string(RhoMethod m);
std::optional<RhoMethod> parse_method(std::string_view s);

struct RhoResult {
  FieldTag field;
  Integer n;
  std::int64_t value;
  RhoMethod method;
};

/// 8d + 2^c - 1 where nu_2(n) = 4d + c, 0 <= c <= 3.
std::int64_t rho_real_adams(const Integer& n);

/// Largest m with c_m^F | n, found by testing m = 1, 2, ... in turn.
std::int64_t rho_oracle(FieldTag field, const FactoredInteger& n);
std::int64_t rho_oracle(FieldTag field, const Integer& n);

/// Minimum over the leading consecutive primes p_i | n of the largest
/// m <= cap with t_i >= nu_{p_i}(c_m^F). Only C and H are accepted.
std::int64_t rho_theorem8(FieldTag field, const FactoredInteger& n);
std::int64_t rho_theorem8(FieldTag field, const Integer& n);

/// Dispatches to one route. AdamsClosedForm is real-only; Theorem8 is C/H only.
RhoResult rho(FieldTag field, const Integer& n, RhoMethod method);

/// Routes applicable to a field, in the order they are reported.
std::vector<RhoMethod> applicable_methods(FieldTag field);

struct Theorem9Record {
  Integer n;
  std::int64_t rho_c_2n = 0;
  std::int64_t rho_h_n = 0;
  std::int64_t d = 0;
};

/// rho^C(C^{2n}) - 2 rho^H(H^n). Both sides are cross-checked against the
/// oracle; throws std::logic_error if the routes disagree or d is not 1 or 3.
Theorem9Record theorem9_delta(const Integer& n);

enum class RelationKind { Ss73, AwOddEven, Corollary6, AdamsConsistency };

std::string_view to_string(RelationKind k);

struct RelationReport {
  RelationKind kind;
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  std::int64_t checked = 0;
  /// Index (m, k or n) of the first failure and a description of both sides.
  std::optional<std::int64_t> counterexample;
  std::string detail;

  bool passed() const { return !counterexample; }
};

/// Sweeps [lo, hi] in increasing order and stops at the first counterexample.
/// The index is m for Ss73, k for AwOddEven and n for the other two.
RelationReport relation_check(RelationKind kind, std::int64_t lo, std::int64_t hi);

}  // namespace vfs

#endif  // VFS_RHO_HPP
