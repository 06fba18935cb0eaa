#include "vfs/algebra.hpp"

namespace vfs {

namespace {

Integer parse_integer(std::string_view s, std::string_view whole) {
  std::string_view digits = s;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty()) throw DomainError("malformed rational \"" + std::string(whole) + "\"");
  for (char ch : digits) {
    if (ch < '0' || ch > '9') throw DomainError("malformed rational \"" + std::string(whole) + "\"");
  }
  if (s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s));
}

}  // namespace

Rational parse_rational(std::string_view s) {
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(s, s));
  const Integer num = parse_integer(s.substr(0, slash), s);
  const Integer den = parse_integer(s.substr(slash + 1), s);
  if (den == 0) throw DomainError("zero denominator in \"" + std::string(s) + "\"");
  return Rational(num, den);
}

std::string format_rational(const Rational& q) {
  const Integer num = boost::multiprecision::numerator(q);
  const Integer den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string_view to_string(CoordinateMap m) {
  switch (m) {
    case CoordinateMap::RC: return "r_C";
    case CoordinateMap::CH: return "c_H";
    case CoordinateMap::RH: return "r_H";
    case CoordinateMap::RCInv: return "r_C_inv";
    case CoordinateMap::CHInv: return "c_H_inv";
    case CoordinateMap::RHInv: return "r_H_inv";
  }
  return "?";
}

FieldTag domain_field(CoordinateMap m) {
  switch (m) {
    case CoordinateMap::RC: return FieldTag::C;
    case CoordinateMap::CH:
    case CoordinateMap::RH: return FieldTag::H;
    case CoordinateMap::RCInv:
    case CoordinateMap::RHInv: return FieldTag::R;
    case CoordinateMap::CHInv: return FieldTag::C;
  }
  return FieldTag::R;
}

std::string_view to_string(Identity id) {
  switch (id) {
    case Identity::Lemma1I: return "lemma1_i";
    case Identity::Lemma1II: return "lemma1_ii";
    case Identity::Lemma1III: return "lemma1_iii";
    case Identity::Thm2I: return "thm2_i";
    case Identity::Thm2II: return "thm2_ii";
    case Identity::Thm2III: return "thm2_iii";
  }
  return "?";
}

std::vector<Identity> all_identities() {
  return {Identity::Lemma1I, Identity::Lemma1II, Identity::Lemma1III,
          Identity::Thm2I,   Identity::Thm2II,   Identity::Thm2III};
}

bool identity_check(Identity id, const IdentityInputs& in) {
  auto need_second = [&](FieldTag f) -> const FVectorQ& {
    if (!in.y) throw DomainError(std::string(to_string(id)) + ": needs two vectors");
    if (in.x.field() != f || in.y->field() != f) {
      throw DomainError(std::string(to_string(id)) + ": vectors must be over " + std::string(to_string(f)));
    }
    if (in.x.size() != in.y->size()) throw DomainError(std::string(to_string(id)) + ": length mismatch");
    return *in.y;
  };
  auto need_quaternionic_x = [&] {
    if (in.x.field() != FieldTag::H) throw DomainError(std::string(to_string(id)) + ": x must be quaternionic");
    if (!in.s.is_complex()) throw DomainError(std::string(to_string(id)) + ": s must be complex");
  };
  switch (id) {
    case Identity::Lemma1I: need_quaternionic_x(); return lemma1_i(in.x, in.s);
    case Identity::Lemma1II: need_quaternionic_x(); return lemma1_ii(in.x, in.s);
    case Identity::Lemma1III: need_quaternionic_x(); return lemma1_iii(in.x, in.s, in.t);
    case Identity::Thm2I: return thm2_i(in.x, need_second(FieldTag::C));
    case Identity::Thm2II: return thm2_ii(in.x, need_second(FieldTag::H));
    case Identity::Thm2III: return thm2_iii(in.x, need_second(FieldTag::H));
  }
  return false;
}

Rational RationalSampler::rational() {
  std::uniform_int_distribution<int> num(-100, 100);
  std::uniform_int_distribution<int> den(1, 100);
  const int p = num(rng_);
  const int q = den(rng_);
  return Rational(Integer(p), Integer(q));
}

QuatScalar RationalSampler::scalar(FieldTag field) {
  QuatScalar x(rational());
  if (field == FieldTag::R) return x;
  x.b = rational();
  if (field == FieldTag::C) return x;
  x.c = rational();
  x.d = rational();
  return x;
}

FVectorQ RationalSampler::vector(FieldTag field, std::size_t n) {
  std::vector<QuatScalar> comps;
  comps.reserve(n);
  for (std::size_t m = 0; m < n; ++m) comps.push_back(scalar(field));
  return FVectorQ(field, std::move(comps));
}

IdentityInputs random_identity_inputs(Identity id, std::size_t n, RationalSampler& sampler) {
  const FieldTag vector_field = id == Identity::Thm2I ? FieldTag::C : FieldTag::H;
  IdentityInputs in{sampler.vector(vector_field, n), std::nullopt, QuatScalar(), QuatScalar()};
  switch (id) {
    case Identity::Lemma1I:
    case Identity::Lemma1II:
      in.s = sampler.scalar(FieldTag::C);
      break;
    case Identity::Lemma1III:
      in.s = sampler.scalar(FieldTag::C);
      in.t = sampler.scalar(FieldTag::H);
      break;
    case Identity::Thm2I:
    case Identity::Thm2II:
    case Identity::Thm2III:
      in.y = sampler.vector(vector_field, n);
      break;
  }
  return in;
}

IdentityTrialReport run_identity_trials(Identity id, std::int64_t trials, std::uint64_t seed,
                                        const std::vector<std::size_t>& dims) {
  if (dims.empty()) throw DomainError("run_identity_trials: no dimensions");
  // One stream per identity so reports do not depend on which others ran.
  RationalSampler sampler(seed ^ (0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(id) + 1)));
  IdentityTrialReport report{id, 0, std::nullopt};
  for (std::int64_t k = 0; k < trials; ++k) {
    const std::size_t n = dims[static_cast<std::size_t>(k) % dims.size()];
    ++report.trials;
    if (!identity_check(id, random_identity_inputs(id, n, sampler))) {
      report.failed_trial = k;
      break;
    }
  }
  return report;
}

}  // namespace vfs
