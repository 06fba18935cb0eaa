// Exact division-algebra layer.
//
// Scalars of all three fields share one representation, Quaternion<S>, with
// C embedded as a + bi and R as a. An FVector carries its field tag and
// refuses components outside that field, so the embedding never leaks.
//
// Coordinate maps:
//   r_C : C^n -> R^2n   (a + bi)          -> (a, b)
//   c_H : H^n -> C^2n   (a + bi + cj + dk) -> (a + bi, d + ci)
//   r_H = r_C o c_H     (a + bi + cj + dk) -> (a, b, d, c)
// F^n is a right vector space: alpha_t(x) = x * t componentwise, and the
// inner product <x|y> = sum conj(x_m) y_m is conjugate-linear in x.

#ifndef VFS_ALGEBRA_HPP
#define VFS_ALGEBRA_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include "vfs/exactmath.hpp"
#include "vfs/james.hpp"

namespace vfs {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Parses "p/q" or "p" into a canonical rational. Throws DomainError.
Rational parse_rational(std::string_view s);

/// "p/q", or "p" when the denominator is 1.
std::string format_rational(const Rational& q);

/// a + bi + cj + dk with Hamilton's rules i^2 = j^2 = k^2 = ijk = -1.
template <typename Scalar>
struct Quaternion {
  Scalar a{0}, b{0}, c{0}, d{0};

  Quaternion() = default;
  Quaternion(Scalar a_, Scalar b_ = Scalar(0), Scalar c_ = Scalar(0), Scalar d_ = Scalar(0))
      : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}

  static Quaternion i() { return {Scalar(0), Scalar(1), Scalar(0), Scalar(0)}; }
  static Quaternion j() { return {Scalar(0), Scalar(0), Scalar(1), Scalar(0)}; }
  static Quaternion k() { return {Scalar(0), Scalar(0), Scalar(0), Scalar(1)}; }

  bool is_real() const { return b == 0 && c == 0 && d == 0; }
  bool is_complex() const { return c == 0 && d == 0; }

  /// a^2 + b^2 + c^2 + d^2.
  Scalar norm2() const { return a * a + b * b + c * c + d * d; }

  friend Quaternion operator+(const Quaternion& x, const Quaternion& y) {
    return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
  }
  friend Quaternion operator-(const Quaternion& x, const Quaternion& y) {
    return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d};
  }
  friend Quaternion operator-(const Quaternion& x) { return {-x.a, -x.b, -x.c, -x.d}; }
  friend Quaternion operator*(const Quaternion& x, const Quaternion& y) {
    return {x.a * y.a - x.b * y.b - x.c * y.c - x.d * y.d,
            x.a * y.b + x.b * y.a + x.c * y.d - x.d * y.c,
            x.a * y.c - x.b * y.d + x.c * y.a + x.d * y.b,
            x.a * y.d + x.b * y.c - x.c * y.b + x.d * y.a};
  }
  friend Quaternion operator*(const Quaternion& x, const Scalar& s) { return {x.a * s, x.b * s, x.c * s, x.d * s}; }
  Quaternion& operator+=(const Quaternion& y) { return *this = *this + y; }
  Quaternion& operator-=(const Quaternion& y) { return *this = *this - y; }

  friend bool operator==(const Quaternion& x, const Quaternion& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
};

template <typename Scalar>
Quaternion<Scalar> conj(const Quaternion<Scalar>& x) {
  return {x.a, -x.b, -x.c, -x.d};
}

/// x^{-1} = conj(x) / |x|^2. Throws DomainError for zero.
template <typename Scalar>
Quaternion<Scalar> inverse(const Quaternion<Scalar>& x) {
  const Scalar n = x.norm2();
  if (n == 0) throw DomainError("inverse of zero quaternion");
  const Scalar r = Scalar(1) / n;
  return conj(x) * r;
}

template <typename Scalar>
bool in_field(const Quaternion<Scalar>& x, FieldTag f) {
  switch (f) {
    case FieldTag::R: return x.is_real();
    case FieldTag::C: return x.is_complex();
    case FieldTag::H: return true;
  }
  return false;
}

template <typename Scalar>
std::ostream& operator<<(std::ostream& os, const Quaternion<Scalar>& x) {
  return os << '(' << x.a << ", " << x.b << ", " << x.c << ", " << x.d << ')';
}

using QuatScalar = Quaternion<Rational>;

/// Vector in F^n with exact components.
template <typename Scalar>
class FVector {
public:
  using value_type = Quaternion<Scalar>;

  FVector(FieldTag field, std::vector<value_type> components)
      : field_(field), components_(std::move(components)) {
    if (components_.empty()) throw DomainError("FVector: empty vector");
    for (const auto& x : components_) {
      if (!in_field(x, field_)) throw DomainError("FVector: component outside its field");
    }
  }

  /// Real vector from plain scalars.
  static FVector real(const std::vector<Scalar>& xs) {
    std::vector<value_type> comps;
    comps.reserve(xs.size());
    for (const auto& x : xs) comps.emplace_back(x);
    return FVector(FieldTag::R, std::move(comps));
  }

  /// Standard basis vector e_index (0-based).
  static FVector unit(FieldTag field, std::size_t size, std::size_t index) {
    std::vector<value_type> comps(size);
    comps.at(index) = value_type(Scalar(1));
    return FVector(field, std::move(comps));
  }

  FieldTag field() const { return field_; }
  std::size_t size() const { return components_.size(); }
  const value_type& operator[](std::size_t i) const { return components_[i]; }
  const std::vector<value_type>& components() const { return components_; }

  friend bool operator==(const FVector& x, const FVector& y) {
    return x.field_ == y.field_ && x.components_ == y.components_;
  }

private:
  FieldTag field_;
  std::vector<value_type> components_;
};

using FVectorQ = FVector<Rational>;

/// <x|y>_F = sum conj(x_m) y_m.
template <typename Scalar>
Quaternion<Scalar> inner(const FVector<Scalar>& x, const FVector<Scalar>& y) {
  if (x.field() != y.field()) throw DomainError("inner: field mismatch");
  if (x.size() != y.size()) throw DomainError("inner: length mismatch");
  Quaternion<Scalar> sum;
  for (std::size_t m = 0; m < x.size(); ++m) sum += conj(x[m]) * y[m];
  return sum;
}

/// Right multiplication alpha_t(x) = x * t. t must lie in x's field.
template <typename Scalar>
FVector<Scalar> alpha(const FVector<Scalar>& x, const Quaternion<Scalar>& t) {
  if (!in_field(t, x.field())) throw DomainError("alpha: scalar outside the vector's field");
  std::vector<Quaternion<Scalar>> out;
  out.reserve(x.size());
  for (const auto& xm : x.components()) out.push_back(xm * t);
  return FVector<Scalar>(x.field(), std::move(out));
}

template <typename Scalar>
FVector<Scalar> operator+(const FVector<Scalar>& x, const FVector<Scalar>& y) {
  if (x.field() != y.field() || x.size() != y.size()) throw DomainError("vector sum: shape mismatch");
  std::vector<Quaternion<Scalar>> out;
  out.reserve(x.size());
  for (std::size_t m = 0; m < x.size(); ++m) out.push_back(x[m] + y[m]);
  return FVector<Scalar>(x.field(), std::move(out));
}

template <typename Scalar>
FVector<Scalar> operator-(const FVector<Scalar>& x, const FVector<Scalar>& y) {
  if (x.field() != y.field() || x.size() != y.size()) throw DomainError("vector difference: shape mismatch");
  std::vector<Quaternion<Scalar>> out;
  out.reserve(x.size());
  for (std::size_t m = 0; m < x.size(); ++m) out.push_back(x[m] - y[m]);
  return FVector<Scalar>(x.field(), std::move(out));
}

enum class CoordinateMap { RC, CH, RH, RCInv, CHInv, RHInv };

std::string_view to_string(CoordinateMap m);

/// Field a coordinate map consumes.
FieldTag domain_field(CoordinateMap m);

template <typename Scalar>
FVector<Scalar> apply_map(CoordinateMap map, const FVector<Scalar>& x) {
  using Q = Quaternion<Scalar>;
  if (x.field() != domain_field(map)) {
    throw DomainError(std::string("apply_map: ") + std::string(to_string(map)) + " expects a vector over " +
                      std::string(to_string(domain_field(map))));
  }
  std::vector<Q> out;
  switch (map) {
    case CoordinateMap::RC:
      for (const auto& z : x.components()) {
        out.emplace_back(z.a);
        out.emplace_back(z.b);
      }
      return FVector<Scalar>(FieldTag::R, std::move(out));
    case CoordinateMap::CH:
      for (const auto& q : x.components()) {
        out.emplace_back(q.a, q.b);
        out.emplace_back(q.d, q.c);
      }
      return FVector<Scalar>(FieldTag::C, std::move(out));
    case CoordinateMap::RH:
      return apply_map(CoordinateMap::RC, apply_map(CoordinateMap::CH, x));
    case CoordinateMap::RCInv:
      if (x.size() % 2 != 0) throw DomainError("apply_map: r_C^-1 needs even length");
      for (std::size_t m = 0; m < x.size(); m += 2) out.emplace_back(x[m].a, x[m + 1].a);
      return FVector<Scalar>(FieldTag::C, std::move(out));
    case CoordinateMap::CHInv:
      if (x.size() % 2 != 0) throw DomainError("apply_map: c_H^-1 needs even length");
      // (a + bi, d + ci) -> a + bi + cj + dk
      for (std::size_t m = 0; m < x.size(); m += 2) {
        out.emplace_back(x[m].a, x[m].b, x[m + 1].b, x[m + 1].a);
      }
      return FVector<Scalar>(FieldTag::H, std::move(out));
    case CoordinateMap::RHInv:
      if (x.size() % 4 != 0) throw DomainError("apply_map: r_H^-1 needs length divisible by 4");
      return apply_map(CoordinateMap::CHInv, apply_map(CoordinateMap::RCInv, x));
  }
  throw DomainError("apply_map: unknown map");
}

/// Real FVector as an Eigen column.
template <typename Scalar>
VectorX<Scalar> to_eigen(const FVector<Scalar>& x) {
  if (x.field() != FieldTag::R) throw DomainError("to_eigen: vector must be real");
  VectorX<Scalar> v(static_cast<Eigen::Index>(x.size()));
  for (std::size_t m = 0; m < x.size(); ++m) v(static_cast<Eigen::Index>(m)) = x[m].a;
  return v;
}

template <typename Derived>
FVector<typename Derived::Scalar> from_eigen(const Eigen::MatrixBase<Derived>& v) {
  std::vector<typename Derived::Scalar> xs(static_cast<std::size_t>(v.size()));
  for (Eigen::Index m = 0; m < v.size(); ++m) xs[static_cast<std::size_t>(m)] = v(m);
  return FVector<typename Derived::Scalar>::real(xs);
}

// Composition identities between the coordinate maps and right
// multiplication, and the inner-product decompositions they imply. Each
// function evaluates both sides exactly and compares.

/// c_H(x * s) == c_H(x) * s, s in C, x in H^n.
template <typename Scalar>
bool lemma1_i(const FVector<Scalar>& x, const Quaternion<Scalar>& s) {
  return apply_map(CoordinateMap::CH, alpha(x, s)) == alpha(apply_map(CoordinateMap::CH, x), s);
}

/// r_C(c_H(x) * s) == r_H(x * s), s in C.
template <typename Scalar>
bool lemma1_ii(const FVector<Scalar>& x, const Quaternion<Scalar>& s) {
  return apply_map(CoordinateMap::RC, alpha(apply_map(CoordinateMap::CH, x), s)) ==
         apply_map(CoordinateMap::RH, alpha(x, s));
}

/// r_C(c_H(x * t) * s) == r_H(x * (t s)), s in C, t in H.
template <typename Scalar>
bool lemma1_iii(const FVector<Scalar>& x, const Quaternion<Scalar>& s, const Quaternion<Scalar>& t) {
  return apply_map(CoordinateMap::RC, alpha(apply_map(CoordinateMap::CH, alpha(x, t)), s)) ==
         apply_map(CoordinateMap::RH, alpha(x, t * s));
}

/// <x|y>_C == <r_C x|r_C y>_R - <r_C x|r_C(y i)>_R i.
template <typename Scalar>
bool thm2_i(const FVector<Scalar>& x, const FVector<Scalar>& y) {
  using Q = Quaternion<Scalar>;
  const auto rx = apply_map(CoordinateMap::RC, x);
  const Q rhs = inner(rx, apply_map(CoordinateMap::RC, y)) -
                inner(rx, apply_map(CoordinateMap::RC, alpha(y, Q::i()))) * Q::i();
  return inner(x, y) == rhs;
}

/// <v|w>_H == <c_H v|c_H w>_C - <c_H v|c_H(w j)>_C j.
template <typename Scalar>
bool thm2_ii(const FVector<Scalar>& v, const FVector<Scalar>& w) {
  using Q = Quaternion<Scalar>;
  const auto cv = apply_map(CoordinateMap::CH, v);
  const Q rhs = inner(cv, apply_map(CoordinateMap::CH, w)) -
                inner(cv, apply_map(CoordinateMap::CH, alpha(w, Q::j()))) * Q::j();
  return inner(v, w) == rhs;
}

/// <v|w>_H == <r_H v|r_H w>_R - sum over t in {i, j, k} of <r_H v|r_H(w t)>_R t.
template <typename Scalar>
bool thm2_iii(const FVector<Scalar>& v, const FVector<Scalar>& w) {
  using Q = Quaternion<Scalar>;
  const auto rv = apply_map(CoordinateMap::RH, v);
  Q rhs = inner(rv, apply_map(CoordinateMap::RH, w));
  for (const Q& t : {Q::i(), Q::j(), Q::k()}) {
    rhs -= inner(rv, apply_map(CoordinateMap::RH, alpha(w, t))) * t;
  }
  return inner(v, w) == rhs;
}

enum class Identity { Lemma1I, Lemma1II, Lemma1III, Thm2I, Thm2II, Thm2III };

std::string_view to_string(Identity id);
std::vector<Identity> all_identities();

/// Inputs for identity_check. The composition identities use x, s (and t); the inner-product ones use x, y.
struct IdentityInputs {
  FVectorQ x;
  std::optional<FVectorQ> y;
  QuatScalar s;
  QuatScalar t;
};

/// Validates shapes and dispatches. Throws DomainError on mismatched inputs.
bool identity_check(Identity id, const IdentityInputs& in);

/// Deterministic source of small exact rationals: numerators in [-100, 100],
/// denominators in [1, 100].
class RationalSampler {
public:
  explicit RationalSampler(std::uint64_t seed) : rng_(seed) {}

  Rational rational();
  QuatScalar scalar(FieldTag field);
  FVectorQ vector(FieldTag field, std::size_t n);
  std::mt19937_64& engine() { return rng_; }

private:
  std::mt19937_64 rng_;
};

/// Random inputs dimensioned for id, with vectors of length n.
IdentityInputs random_identity_inputs(Identity id, std::size_t n, RationalSampler& sampler);

struct IdentityTrialReport {
  Identity id;
  std::int64_t trials = 0;
  std::optional<std::int64_t> failed_trial;
  bool passed() const { return !failed_trial; }
};

/// Runs `trials` seeded random checks, cycling the dimension through `dims`.
IdentityTrialReport run_identity_trials(Identity id, std::int64_t trials, std::uint64_t seed,
                                        const std::vector<std::size_t>& dims = {1, 2, 3, 5});

}  // namespace vfs

#endif  // VFS_ALGEBRA_HPP
