// Exact integer primitives: p-adic valuations, factorization, floor logs.
//
// Everything here is integer-only. Valuations and primes are small and fit
// in 64 bits; the integers whose valuations we take are arbitrary precision.

#ifndef VFS_EXACTMATH_HPP
#define VFS_EXACTMATH_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/gmp.hpp>

namespace vfs {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

/// Raised when an argument lies outside an operation's domain.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

bool is_prime(std::int64_t p);
bool is_prime(const Integer& p);

/// Smallest prime strictly greater than p.
std::int64_t next_prime(std::int64_t p);

/// The i-th prime, 1-based: nth_prime(1) == 2.
std::int64_t nth_prime(std::int64_t i);

/// Largest e with p^e | m. Throws DomainError for m <= 0 or p < 2.
std::int64_t nu(std::int64_t p, const Integer& m);
std::int64_t nu(std::int64_t p, std::int64_t m);

/// Largest e >= 0 with p^e * den <= num, by exact comparison.
/// Throws DomainError when num < den (the logarithm would be negative).
std::int64_t floor_log_ratio(std::int64_t p, const Integer& num, const Integer& den);

/// A positive integer together with its prime factorization.
class FactoredInteger {
public:
  using FactorMap = std::map<Integer, std::int64_t>;

  FactoredInteger() : value_(1) {}

  /// Builds from a factor map; every key must be prime and every exponent >= 1.
  explicit FactoredInteger(FactorMap factors);

  const Integer& value() const { return value_; }
  const FactorMap& factors() const { return factors_; }

  /// Exponent of p in value(); 0 when p does not divide it.
  std::int64_t exponent(const Integer& p) const;

  bool is_odd() const { return exponent(Integer(2)) == 0; }

  /// Product of the two factorizations (exponents add).
  friend FactoredInteger operator*(const FactoredInteger& a, const FactoredInteger& b);

  friend bool operator==(const FactoredInteger& a, const FactoredInteger& b) {
    return a.factors_ == b.factors_;
  }

  std::string to_string() const;

private:
  friend FactoredInteger factorize(const Integer& n);
  struct Trusted {};
  FactoredInteger(Trusted, Integer value, FactorMap factors)
      : value_(std::move(value)), factors_(std::move(factors)) {}

  Integer value_;
  FactorMap factors_;
};

/// Trial division by successive primes. Throws DomainError for n <= 0.
FactoredInteger factorize(const Integer& n);

/// Largest r such that the first r primes 2, 3, 5, ... all divide n.
std::int64_t prime_prefix_length(const FactoredInteger& n);

}  // namespace vfs

#endif  // VFS_EXACTMATH_HPP
