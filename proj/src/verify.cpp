#include "vfs/verify.hpp"

#include <sstream>
#include <stdexcept>

#include "vfs/james.hpp"
#include "vfs/rho.hpp"

namespace vfs {

SweepReport lemma7_sweep(std::int64_t m_max) {
  if (m_max < 1) throw DomainError("lemma7_sweep: m_max must be positive");
  SweepReport report{"lemma7", 1, m_max, 0, std::nullopt, {}, {}};
  for (std::int64_t m = 1; m <= m_max; ++m) {
    for (std::int64_t p = 2; p <= 2 * m + 1; p = next_prime(p)) {
      for (FieldTag f : {FieldTag::C, FieldTag::H}) {
        const std::int64_t full = nu_full(f, p, m);
        const std::int64_t refined = nu_refined(f, p, m);
        ++report.checked;
        if (full != refined) {
          std::ostringstream os;
          os << "field " << to_string(f) << ", p = " << p << ": nu_full = " << full << ", nu_refined = " << refined;
          report.counterexample = m;
          report.detail = os.str();
          return report;
        }
      }
    }
  }
  return report;
}

SweepReport theorem8_sweep(std::int64_t lo, std::int64_t hi) {
  if (lo < 1 || lo > hi) throw DomainError("theorem8_sweep: bad range");
  SweepReport report{"theorem8", lo, hi, 0, std::nullopt, {}, {}};
  for (std::int64_t n = lo + (lo % 2); n <= hi; n += 2) {
    const FactoredInteger fn = factorize(Integer(n));
    for (FieldTag f : {FieldTag::C, FieldTag::H}) {
      const std::int64_t direct = rho_theorem8(f, fn);
      const std::int64_t oracle = rho_oracle(f, fn);
      if (direct != oracle) {
        std::ostringstream os;
        os << "field " << to_string(f) << ": theorem8 = " << direct << ", oracle = " << oracle;
        report.counterexample = n;
        report.detail = os.str();
        return report;
      }
    }
    ++report.checked;
  }
  return report;
}

SweepReport theorem9_sweep(std::int64_t lo, std::int64_t hi) {
  if (lo < 1 || lo > hi) throw DomainError("theorem9_sweep: bad range");
  SweepReport report{"theorem9", lo, hi, 0, std::nullopt, {}, {}};
  for (std::int64_t n = lo; n <= hi; ++n) {
    Theorem9Record rec;
    try {
      rec = theorem9_delta(Integer(n));
    } catch (const std::logic_error& e) {
      report.counterexample = n;
      report.detail = e.what();
      return report;
    }
    if (rec.rho_c_2n % 2 == 0) {
      report.counterexample = n;
      report.detail = "rho^C(C^" + std::to_string(2 * n) + ") = " + std::to_string(rec.rho_c_2n) + " is even";
      return report;
    }
    ++report.histogram[rec.d];
    ++report.checked;
  }
  return report;
}

}  // namespace vfs
