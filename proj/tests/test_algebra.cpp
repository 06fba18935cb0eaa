#include "doctest.h"

#include "vfs/algebra.hpp"

using vfs::CoordinateMap;
using vfs::FieldTag;
using vfs::FVectorQ;
using vfs::Identity;
using vfs::QuatScalar;
using vfs::Rational;

namespace {

QuatScalar q(int a, int b = 0, int c = 0, int d = 0) { return QuatScalar(Rational(a), Rational(b), Rational(c), Rational(d)); }

FVectorQ vec(FieldTag f, std::vector<QuatScalar> xs) { return FVectorQ(f, std::move(xs)); }

}  // namespace

TEST_CASE("Hamilton product") {
  const auto i = QuatScalar::i();
  const auto j = QuatScalar::j();
  const auto k = QuatScalar::k();
  CHECK(i * j == k);
  CHECK(j * i == -k);
  CHECK(q(1, 1) * q(1, 0, 1) == q(1, 1, 1, 1));
  CHECK(i * i == q(-1));
  CHECK(i * j * k == q(-1));
}

TEST_CASE("conj") {
  CHECK(vfs::conj(QuatScalar::i()) == -QuatScalar::i());
  CHECK(vfs::conj(q(3)) == q(3));
  CHECK(vfs::conj(q(1, 2, 3, 4)) == q(1, -2, -3, -4));

  vfs::RationalSampler s(5);
  for (int t = 0; t < 200; ++t) {
    const auto x = s.scalar(FieldTag::H);
    const auto y = s.scalar(FieldTag::H);
    CHECK(vfs::conj(x * y) == vfs::conj(y) * vfs::conj(x));
    CHECK((x * vfs::conj(x)) == QuatScalar(x.norm2()));
  }
}

TEST_CASE("inner") {
  for (FieldTag f : {FieldTag::R, FieldTag::C, FieldTag::H}) {
    const auto e1 = FVectorQ::unit(f, 3, 0);
    CHECK(vfs::inner(e1, e1) == q(1));
  }
  CHECK(vfs::inner(vec(FieldTag::H, {QuatScalar::i()}), vec(FieldTag::H, {QuatScalar::j()})) == -QuatScalar::k());
  CHECK(vfs::inner(vec(FieldTag::C, {q(1), q(0)}), vec(FieldTag::C, {q(0), q(1)})) == q(0));
  CHECK_THROWS_AS(vfs::inner(FVectorQ::unit(FieldTag::C, 2, 0), FVectorQ::unit(FieldTag::C, 3, 0)), vfs::DomainError);
  CHECK_THROWS_AS(vfs::inner(FVectorQ::unit(FieldTag::C, 2, 0), FVectorQ::unit(FieldTag::H, 2, 0)), vfs::DomainError);
}

TEST_CASE("inner product linearity and symmetry") {
  vfs::RationalSampler s(17);
  for (FieldTag f : {FieldTag::R, FieldTag::C, FieldTag::H}) {
    for (int t = 0; t < 200; ++t) {
      const std::size_t n = 1 + static_cast<std::size_t>(t % 4);
      const auto x = s.vector(f, n);
      const auto y = s.vector(f, n);
      const auto c = s.scalar(f);
      CHECK(vfs::inner(x, vfs::alpha(y, c)) == vfs::inner(x, y) * c);
      CHECK(vfs::inner(vfs::alpha(x, c), y) == vfs::conj(c) * vfs::inner(x, y));
      CHECK(vfs::conj(vfs::inner(x, y)) == vfs::inner(y, x));
      const auto xx = vfs::inner(x, x);
      CHECK(xx.is_real());
      CHECK(xx.a >= 0);
    }
  }
}

TEST_CASE("FVector field invariant") {
  CHECK_THROWS_AS(vec(FieldTag::C, {q(0, 0, 1)}), vfs::DomainError);
  CHECK_THROWS_AS(vec(FieldTag::R, {q(0, 1)}), vfs::DomainError);
  CHECK_THROWS_AS(vec(FieldTag::H, {}), vfs::DomainError);
}

TEST_CASE("apply_map") {
  const auto x = vec(FieldTag::H, {q(1, 2, 3, 4)});
  CHECK(vfs::apply_map(CoordinateMap::CH, x) == vec(FieldTag::C, {q(1, 2), q(4, 3)}));
  CHECK(vfs::apply_map(CoordinateMap::RH, x) == FVectorQ::real({Rational(1), Rational(2), Rational(4), Rational(3)}));
  CHECK(vfs::apply_map(CoordinateMap::RC, vec(FieldTag::C, {q(5, -6)})) == FVectorQ::real({Rational(5), Rational(-6)}));

  CHECK_THROWS_AS(vfs::apply_map(CoordinateMap::RC, x), vfs::DomainError);
  CHECK_THROWS_AS(vfs::apply_map(CoordinateMap::RHInv, FVectorQ::real({Rational(1), Rational(2)})), vfs::DomainError);
  CHECK_THROWS_AS(vfs::apply_map(CoordinateMap::RCInv, FVectorQ::real({Rational(1)})), vfs::DomainError);
}

TEST_CASE("coordinate maps and their inverses compose to the identity") {
  vfs::RationalSampler s(3);
  const std::pair<CoordinateMap, CoordinateMap> pairs[] = {
      {CoordinateMap::RC, CoordinateMap::RCInv},
      {CoordinateMap::CH, CoordinateMap::CHInv},
      {CoordinateMap::RH, CoordinateMap::RHInv},
  };
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + static_cast<std::size_t>(t % 5);
    for (const auto& [fwd, inv] : pairs) {
      const auto x = s.vector(vfs::domain_field(fwd), n);
      CHECK(vfs::apply_map(inv, vfs::apply_map(fwd, x)) == x);
      const auto y = s.vector(vfs::domain_field(inv), n * (fwd == CoordinateMap::RH ? 4 : 2));
      CHECK(vfs::apply_map(fwd, vfs::apply_map(inv, y)) == y);
    }
  }
}

TEST_CASE("alpha") {
  const auto i = QuatScalar::i();
  CHECK(vfs::alpha(vec(FieldTag::C, {q(1), i}), i) == vec(FieldTag::C, {i, q(-1)}));
  CHECK(vfs::alpha(vec(FieldTag::H, {QuatScalar::j()}), i) == vec(FieldTag::H, {-QuatScalar::k()}));
  const auto x = vec(FieldTag::H, {q(1, 2, 3, 4), q(-1, 0, 5, 1)});
  CHECK(vfs::alpha(x, q(1)) == x);
  CHECK_THROWS_AS(vfs::alpha(vec(FieldTag::C, {q(1)}), QuatScalar::j()), vfs::DomainError);
}

TEST_CASE("identity_check examples") {
  vfs::IdentityInputs thm2ii{vec(FieldTag::H, {q(1)}), vec(FieldTag::H, {QuatScalar::j()}), {}, {}};
  CHECK(vfs::identity_check(Identity::Thm2II, thm2ii));

  vfs::IdentityInputs thm2i{vec(FieldTag::C, {q(1)}), vec(FieldTag::C, {QuatScalar::i()}), {}, {}};
  CHECK(vfs::identity_check(Identity::Thm2I, thm2i));
  // Both pieces of the right-hand side, evaluated directly.
  const auto rx = vfs::apply_map(CoordinateMap::RC, thm2i.x);
  CHECK(vfs::inner(rx, vfs::apply_map(CoordinateMap::RC, *thm2i.y)) == q(0));
  CHECK(vfs::inner(rx, vfs::apply_map(CoordinateMap::RC, vfs::alpha(*thm2i.y, QuatScalar::i()))) == q(-1));

  vfs::RationalSampler s(99);
  vfs::IdentityInputs lemma{s.vector(FieldTag::H, 3), std::nullopt, QuatScalar::i(), {}};
  CHECK(vfs::identity_check(Identity::Lemma1I, lemma));

  vfs::IdentityInputs bad{s.vector(FieldTag::H, 2), s.vector(FieldTag::H, 3), {}, {}};
  CHECK_THROWS_AS(vfs::identity_check(Identity::Thm2II, bad), vfs::DomainError);
  vfs::IdentityInputs non_complex_s{s.vector(FieldTag::H, 2), std::nullopt, QuatScalar::j(), {}};
  CHECK_THROWS_AS(vfs::identity_check(Identity::Lemma1II, non_complex_s), vfs::DomainError);
}

TEST_CASE("identities hold on seeded random inputs") {
  for (Identity id : vfs::all_identities()) {
    CAPTURE(vfs::to_string(id));
    const auto r = vfs::run_identity_trials(id, 1000, 42);
    CHECK(r.passed());
    CHECK(r.trials == 1000);
  }
}

TEST_CASE("norm preservation under realification") {
  vfs::RationalSampler s(8);
  for (int t = 0; t < 100; ++t) {
    const auto x = s.vector(FieldTag::C, 4);
    const auto rx = vfs::apply_map(CoordinateMap::RC, x);
    CHECK(vfs::inner(x, x) == vfs::inner(rx, rx));
    const auto h = s.vector(FieldTag::H, 3);
    const auto rh = vfs::apply_map(CoordinateMap::RH, h);
    CHECK(vfs::inner(h, h) == vfs::inner(rh, rh));
  }
}

TEST_CASE("a wrong slot order breaks the quaternionic inner-product identity") {
  // Sanity check that thm2_iii is sensitive to the (a, b, d, c) convention:
  // with c and d swapped back, the identity fails for w = j.
  const auto v = vec(FieldTag::H, {q(1)});
  const auto w = vec(FieldTag::H, {QuatScalar::j()});
  CHECK(vfs::thm2_iii(v, w));
  const auto naive = FVectorQ::real({Rational(0), Rational(0), Rational(1), Rational(0)});
  const auto rhw = vfs::apply_map(CoordinateMap::RH, w);
  CHECK_FALSE(rhw == naive);
}

TEST_CASE("rational parsing") {
  CHECK(vfs::parse_rational("3/6") == Rational(1, 2));
  CHECK(vfs::format_rational(vfs::parse_rational("3/6")) == "1/2");
  CHECK(vfs::format_rational(vfs::parse_rational("-4/2")) == "-2");
  CHECK(vfs::format_rational(vfs::parse_rational("7")) == "7");
  CHECK(vfs::parse_rational("+5") == Rational(5));
  CHECK_THROWS_AS(vfs::parse_rational("1/0"), vfs::DomainError);
  CHECK_THROWS_AS(vfs::parse_rational("abc"), vfs::DomainError);
  CHECK_THROWS_AS(vfs::parse_rational("1.5"), vfs::DomainError);
  CHECK_THROWS_AS(vfs::parse_rational(""), vfs::DomainError);
}
