#include "vfs/exactmath.hpp"

#include <limits>
#include <sstream>
#include <vector>

namespace vfs {

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  if (p < 4) return true;
  if (p % 2 == 0 || p % 3 == 0) return false;
  for (std::int64_t d = 5; d * d <= p; d += 6) {
    if (p % d == 0 || p % (d + 2) == 0) return false;
  }
  return true;
}

bool is_prime(const Integer& p) {
  if (p <= std::numeric_limits<std::int64_t>::max()) return p >= 2 && is_prime(p.convert_to<std::int64_t>());
  if (p % 2 == 0) return false;
  for (Integer d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

std::int64_t next_prime(std::int64_t p) {
  std::int64_t q = p < 2 ? 2 : p + 1;
  while (!is_prime(q)) ++q;
  return q;
}

std::int64_t nth_prime(std::int64_t i) {
  if (i < 1) throw DomainError("nth_prime: index must be >= 1");
  static const std::vector<std::int64_t> small = [] {
    std::vector<std::int64_t> v;
    for (std::int64_t p = 2; v.size() < 256; p = next_prime(p)) v.push_back(p);
    return v;
  }();
  if (static_cast<std::size_t>(i) <= small.size()) return small[static_cast<std::size_t>(i - 1)];
  std::int64_t p = small.back();
  for (auto k = static_cast<std::int64_t>(small.size()); k < i; ++k) p = next_prime(p);
  return p;
}

std::int64_t nu(std::int64_t p, const Integer& m) {
  if (p < 2) throw DomainError("nu: p must be prime");
  if (m <= 0) throw DomainError("nu: m must be positive");
  if (m <= std::numeric_limits<std::int64_t>::max()) {
    return nu(p, m.convert_to<std::int64_t>());
  }
  Integer rest = m;
  std::int64_t e = 0;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  return e;
}

std::int64_t nu(std::int64_t p, std::int64_t m) {
  if (p < 2) throw DomainError("nu: p must be prime");
  if (m <= 0) throw DomainError("nu: m must be positive");
  std::int64_t e = 0;
  while (m % p == 0) {
    m /= p;
    ++e;
  }
  return e;
}

std::int64_t floor_log_ratio(std::int64_t p, const Integer& num, const Integer& den) {
  if (p < 2) throw DomainError("floor_log_ratio: p must be prime");
  if (den < 1) throw DomainError("floor_log_ratio: den must be positive");
  if (num < den) throw DomainError("floor_log_ratio: num < den");
  std::int64_t e = 0;
  Integer scaled = den * p;
  while (scaled <= num) {
    scaled *= p;
    ++e;
  }
  return e;
}

FactoredInteger::FactoredInteger(FactorMap factors) : value_(1), factors_(std::move(factors)) {
  for (const auto& [p, e] : factors_) {
    if (e < 1) throw DomainError("FactoredInteger: exponent must be >= 1");
    if (!is_prime(p)) {
      throw DomainError("FactoredInteger: non-prime factor " + p.str());
    }
    value_ *= boost::multiprecision::pow(p, static_cast<unsigned>(e));
  }
}

std::int64_t FactoredInteger::exponent(const Integer& p) const {
  auto it = factors_.find(p);
  return it == factors_.end() ? 0 : it->second;
}

FactoredInteger operator*(const FactoredInteger& a, const FactoredInteger& b) {
  FactoredInteger out;
  out.factors_ = a.factors_;
  for (const auto& [p, e] : b.factors_) out.factors_[p] += e;
  out.value_ = a.value_ * b.value_;
  return out;
}

std::string FactoredInteger::to_string() const {
  if (factors_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, e] : factors_) {
    if (!first) os << " * ";
    first = false;
    os << p;
    if (e > 1) os << '^' << e;
  }
  return os.str();
}

namespace {

// Trial division on machine words; the common case for every sweep.
void factor_small(std::uint64_t n, FactoredInteger::FactorMap& out) {
  auto strip = [&](std::uint64_t d) {
    std::int64_t e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e > 0) out[Integer(d)] = e;
  };
  strip(2);
  strip(3);
  for (std::uint64_t d = 5; d <= n / d; d += 6) {
    strip(d);
    strip(d + 2);
  }
  if (n > 1) out[Integer(n)] += 1;
}

}  // namespace

FactoredInteger factorize(const Integer& n) {
  if (n <= 0) throw DomainError("factorize: n must be positive");
  FactoredInteger::FactorMap factors;
  if (n <= std::numeric_limits<std::uint64_t>::max()) {
    factor_small(n.convert_to<std::uint64_t>(), factors);
    return FactoredInteger(FactoredInteger::Trusted{}, n, std::move(factors));
  }
  Integer rest = n;
  for (std::int64_t p = 2; Integer(p) * p <= rest; p = next_prime(p)) {
    std::int64_t e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    if (e > 0) factors[Integer(p)] = e;
    if (rest <= std::numeric_limits<std::uint64_t>::max()) {
      factor_small(rest.convert_to<std::uint64_t>(), factors);
      return FactoredInteger(FactoredInteger::Trusted{}, n, std::move(factors));
    }
  }
  if (rest > 1) factors[rest] += 1;
  return FactoredInteger(FactoredInteger::Trusted{}, n, std::move(factors));
}

std::int64_t prime_prefix_length(const FactoredInteger& n) {
  std::int64_t r = 0;
  while (n.exponent(Integer(nth_prime(r + 1))) > 0) ++r;
  return r;
}

}  // namespace vfs
