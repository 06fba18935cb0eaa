#include "vfs/rho.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace vfs {

std::string_view to_string(RhoMethod m) {
  switch (m) {
    case RhoMethod::AdamsClosedForm: return "adams_closed_form";
    case RhoMethod::Theorem8: return "theorem8";
    case RhoMethod::Oracle: return "oracle";
  }
  return "?";
}

std::optional<RhoMethod> parse_method(std::string_view s) {
  if (s == "adams_closed_form" || s == "adams") return RhoMethod::AdamsClosedForm;
  if (s == "theorem8") return RhoMethod::Theorem8;
  if (s == "oracle") return RhoMethod::Oracle;
  return std::nullopt;
}

std::int64_t rho_real_adams(const Integer& n) {
  if (n < 1) throw DomainError("rho_real_adams: n must be positive");
  const std::int64_t v = nu(2, n);
  const std::int64_t d = v / 4;
  const std::int64_t c = v % 4;
  return 8 * d + (std::int64_t{1} << c) - 1;
}

std::int64_t rho_oracle(FieldTag field, const FactoredInteger& n) {
  // nu_p(c_m^F) is nondecreasing in m, so the first failure ends the search.
  std::int64_t m = 0;
  while (divides(profile(field, m + 1), n)) ++m;
  return m;
}

std::int64_t rho_oracle(FieldTag field, const Integer& n) { return rho_oracle(field, factorize(n)); }

std::int64_t rho_theorem8(FieldTag field, const FactoredInteger& n) {
  if (field == FieldTag::R) throw DomainError("rho_theorem8: field must be C or H");
  const std::int64_t r = prime_prefix_length(n);
  if (r == 0) return 0;
  const std::int64_t next = nth_prime(r + 1);
  const std::int64_t cap = field == FieldTag::C ? next - 2 : (next - 3) / 2;

  std::int64_t result = std::numeric_limits<std::int64_t>::max();
  for (std::int64_t i = 1; i <= r; ++i) {
    const std::int64_t p = nth_prime(i);
    const std::int64_t t = n.exponent(Integer(p));
    std::int64_t k = cap;
    while (k > 0 && nu_full(field, p, k) > t) --k;
    result = std::min(result, k);
  }
  return result;
}

std::int64_t rho_theorem8(FieldTag field, const Integer& n) { return rho_theorem8(field, factorize(n)); }

std::vector<RhoMethod> applicable_methods(FieldTag field) {
  if (field == FieldTag::R) return {RhoMethod::AdamsClosedForm, RhoMethod::Oracle};
  return {RhoMethod::Theorem8, RhoMethod::Oracle};
}

RhoResult rho(FieldTag field, const Integer& n, RhoMethod method) {
  if (n < 1) throw DomainError("rho: n must be positive");
  std::int64_t value = 0;
  switch (method) {
    case RhoMethod::AdamsClosedForm:
      if (field != FieldTag::R) throw DomainError("adams_closed_form applies to R only");
      value = rho_real_adams(n);
      break;
    case RhoMethod::Theorem8:
      value = rho_theorem8(field, n);
      break;
    case RhoMethod::Oracle:
      value = rho_oracle(field, n);
      break;
  }
  return RhoResult{field, n, value, method};
}

Theorem9Record theorem9_delta(const Integer& n) {
  if (n < 1) throw DomainError("theorem9_delta: n must be positive");
  const FactoredInteger fn = factorize(n);
  const FactoredInteger f2n = fn * factorize(Integer(2));

  Theorem9Record rec;
  rec.n = n;
  rec.rho_c_2n = rho_theorem8(FieldTag::C, f2n);
  rec.rho_h_n = rho_theorem8(FieldTag::H, fn);
  if (rec.rho_c_2n != rho_oracle(FieldTag::C, f2n) || rec.rho_h_n != rho_oracle(FieldTag::H, fn)) {
    throw std::logic_error("theorem9_delta: theorem8 and oracle disagree at n = " + n.str());
  }
  rec.d = rec.rho_c_2n - 2 * rec.rho_h_n;
  if (rec.d != 1 && rec.d != 3) {
    throw std::logic_error("theorem9_delta: d = " + std::to_string(rec.d) + " at n = " + n.str());
  }
  return rec;
}

std::string_view to_string(RelationKind k) {
  switch (k) {
    case RelationKind::Ss73: return "ss73";
    case RelationKind::AwOddEven: return "aw_odd_even";
    case RelationKind::Corollary6: return "corollary6";
    case RelationKind::AdamsConsistency: return "adams_consistency";
  }
  return "?";
}

namespace {

// Empty string means the relation holds at this index.
std::string check_ss73(std::int64_t m) {
  const JamesProfile h = profile(FieldTag::H, m + 1);
  const JamesProfile c = profile(FieldTag::C, 2 * m + 3);
  std::ostringstream os;
  const std::int64_t bound = std::max(support_bound(FieldTag::H, m + 1), support_bound(FieldTag::C, 2 * m + 3));
  for (std::int64_t p = 3; p <= bound; p = next_prime(p)) {
    if (h.valuation(p) != c.valuation(p)) {
      os << "nu_" << p << "(c_" << m + 1 << "^H) = " << h.valuation(p) << " but nu_" << p << "(c_"
         << 2 * m + 3 << "^C) = " << c.valuation(p);
      return os.str();
    }
  }
  const std::int64_t gap = h.valuation(2) - c.valuation(2);
  if (gap != 0 && gap != -1) {
    os << "nu_2 gap " << gap << ": c_" << m + 1 << "^H = " << to_string(h) << ", c_" << 2 * m + 3
       << "^C = " << to_string(c);
  }
  return os.str();
}

std::string check_aw(std::int64_t k) {
  const JamesProfile odd = profile(FieldTag::C, 2 * k + 1);
  const JamesProfile even = profile(FieldTag::C, 2 * k);
  if (odd.valuations == even.valuations) return {};
  return "c_" + std::to_string(2 * k + 1) + "^C = " + to_string(odd) + " but c_" + std::to_string(2 * k) +
         "^C = " + to_string(even);
}

std::string check_corollary6(std::int64_t n) {
  const FactoredInteger fn = factorize(Integer(n));
  const FactoredInteger f2n = fn * factorize(Integer(2));
  const std::int64_t real_2n = rho_oracle(FieldTag::R, f2n);
  const std::int64_t complex_n = rho_oracle(FieldTag::C, fn);
  const std::int64_t complex_2n = rho_oracle(FieldTag::C, f2n);
  const std::int64_t quat_n = rho_oracle(FieldTag::H, fn);
  std::ostringstream os;
  if (real_2n < 2 * complex_n) {
    os << "rho^R(R^" << 2 * n << ") = " << real_2n << " < 2 * rho^C(C^" << n << ") = " << 2 * complex_n;
  } else if (complex_2n < 2 * quat_n) {
    os << "rho^C(C^" << 2 * n << ") = " << complex_2n << " < 2 * rho^H(H^" << n << ") = " << 2 * quat_n;
  }
  return os.str();
}

std::string check_adams(std::int64_t n) {
  const std::int64_t closed = rho_real_adams(Integer(n));
  const std::int64_t oracle = rho_oracle(FieldTag::R, Integer(n));
  if (closed == oracle) return {};
  return "adams_closed_form = " + std::to_string(closed) + ", oracle = " + std::to_string(oracle);
}

}  // namespace

RelationReport relation_check(RelationKind kind, std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw DomainError("relation_check: empty range");
  const std::int64_t min_index = (kind == RelationKind::Ss73) ? 0 : 1;
  if (lo < min_index) throw DomainError("relation_check: range starts below " + std::to_string(min_index));

  RelationReport report{kind, lo, hi, 0, std::nullopt, {}};
  for (std::int64_t i = lo; i <= hi; ++i) {
    std::string failure;
    switch (kind) {
      case RelationKind::Ss73: failure = check_ss73(i); break;
      case RelationKind::AwOddEven: failure = check_aw(i); break;
      case RelationKind::Corollary6: failure = check_corollary6(i); break;
      case RelationKind::AdamsConsistency: failure = check_adams(i); break;
    }
    ++report.checked;
    if (!failure.empty()) {
      report.counterexample = i;
      report.detail = std::move(failure);
      break;
    }
  }
  return report;
}

}  // namespace vfs
