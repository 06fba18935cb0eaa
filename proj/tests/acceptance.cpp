// Acceptance suite: one line per criterion, exit status 1 if any fails.
// Every criterion is exact (zero tolerance); the budgets below are wall-clock
// limits in seconds.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "vfs/algebra.hpp"
#include "vfs/fields.hpp"
#include "vfs/rho.hpp"
#include "vfs/verify.hpp"

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

struct Criterion {
  int number;
  std::string title;
  double budget_seconds;
  std::function<Outcome()> body;
};

Outcome table() {
  struct Row {
    std::int64_t n, r, c, h;
  };
  // Published values for (n; rho^R(R^4n); rho^C(C^2n); rho^H(H^n)).
  const Row rows[] = {{1, 3, 1, 0},  {2, 7, 1, 0},  {4, 8, 1, 0},      {6, 7, 1, 0},
                      {12, 8, 3, 0}, {24, 9, 3, 1}, {1440, 15, 5, 2}};
  for (const auto& row : rows) {
    const vfs::Integer n(row.n);
    const auto r = vfs::rho(vfs::FieldTag::R, 4 * n, vfs::RhoMethod::AdamsClosedForm).value;
    const auto c = vfs::rho(vfs::FieldTag::C, 2 * n, vfs::RhoMethod::Theorem8).value;
    const auto h = vfs::rho(vfs::FieldTag::H, n, vfs::RhoMethod::Theorem8).value;
    const bool oracle_agrees = vfs::rho_oracle(vfs::FieldTag::R, 4 * n) == r &&
                               vfs::rho_oracle(vfs::FieldTag::C, 2 * n) == c &&
                               vfs::rho_oracle(vfs::FieldTag::H, n) == h;
    if (r != row.r || c != row.c || h != row.h || !oracle_agrees) {
      std::ostringstream os;
      os << "n=" << row.n << " got (" << r << ";" << c << ";" << h << ")";
      return {false, os.str()};
    }
  }
  return {true, "7 rows match"};
}

Outcome from_sweep(const vfs::SweepReport& r) {
  std::ostringstream os;
  os << r.checked << " checked";
  if (!r.passed()) os << ", counterexample " << *r.counterexample << ": " << r.detail;
  return {r.passed(), os.str()};
}

Outcome from_relation(const vfs::RelationReport& r) {
  std::ostringstream os;
  os << r.checked << " checked";
  if (!r.passed()) os << ", counterexample " << *r.counterexample << ": " << r.detail;
  return {r.passed(), os.str()};
}

Outcome theorem9() {
  const auto sweep = vfs::theorem9_sweep(1, 100000);
  Outcome out = from_sweep(sweep);
  const auto w24 = vfs::theorem9_delta(vfs::Integer(24));
  const auto w12 = vfs::theorem9_delta(vfs::Integer(12));
  const bool witnesses = w24.d == 1 && w12.d == 3;
  std::ostringstream os;
  os << out.detail << ", d(24)=" << w24.d << ", d(12)=" << w12.d;
  for (const auto& [d, count] : sweep.histogram) os << ", #d=" << d << ":" << count;
  return {out.ok && witnesses, os.str()};
}

Outcome relations() {
  const auto ss = vfs::relation_check(vfs::RelationKind::Ss73, 0, 100);
  const auto aw = vfs::relation_check(vfs::RelationKind::AwOddEven, 1, 100);
  const auto a = from_relation(ss);
  const auto b = from_relation(aw);
  return {a.ok && b.ok, "ss73 " + a.detail + "; aw-parity " + b.detail};
}

Outcome identities() {
  std::ostringstream os;
  bool ok = true;
  for (vfs::Identity id : vfs::all_identities()) {
    const auto r = vfs::run_identity_trials(id, 1000, 42, {1, 2, 3, 5});
    if (!r.passed()) {
      ok = false;
      os << vfs::to_string(id) << " failed at trial " << *r.failed_trial << "; ";
    }
  }
  os << vfs::all_identities().size() << " identities x 1000 trials";
  return {ok, os.str()};
}

Outcome example4() {
  for (Eigen::Index two_n : {4, 8, 16, 32, 64}) {
    const auto fam = vfs::example4(two_n / 2);
    for (const auto& m : fam.members) {
      if (!vfs::is_vector_field(m).passed()) return {false, "2n=" + std::to_string(two_n) + " " + m.name + " not a field"};
    }
    if (!vfs::hurwitz_radon_check(fam).passed()) return {false, "2n=" + std::to_string(two_n) + " Hurwitz-Radon fails"};
    const auto pts = vfs::random_sphere_points(two_n, 100, 2024 + static_cast<std::uint64_t>(two_n));
    const auto ind = vfs::sampled_independence(fam, pts);
    if (!ind.independent || ind.points_checked != 100) {
      return {false, "2n=" + std::to_string(two_n) + " dependent at point " + std::to_string(ind.witness.value_or(0))};
    }
  }
  return {true, "2n in {4,8,16,32,64}, 100 points each"};
}

Outcome lift_contract() {
  // The quaternionic structure on H^1 is the identity field alpha_1; its
  // H_to_R lift is {Id, I, J, K}. Id is not tangent (rho^H(H^1) = 0), so the
  // full check applies to the three unit multiplications while the
  // orthogonality and pairwise relations are required of all four.
  const vfs::FieldFamily h{4, vfs::FieldTag::H, {vfs::LinearField{"1", vfs::RealMatrix::Identity(4, 4)}}};
  const auto lifted = vfs::lift(h, vfs::LiftDirection::HToR);
  const auto all4 = vfs::hurwitz_radon_check(lifted);
  const vfs::FieldFamily units{4, vfs::FieldTag::R, {lifted.members.begin() + 1, lifted.members.end()}};
  const auto ijk = vfs::hurwitz_radon_check(units);
  const bool ok = lifted.members.size() == 4 && all4.relations_hold() && ijk.passed();
  std::ostringstream os;
  os << lifted.members.size() << " members, relations on all 4: " << (all4.relations_hold() ? "hold" : "fail")
     << ", {i,j,k} Hurwitz-Radon: " << (ijk.passed() ? "yes" : "no")
     << ", identity member skew: " << (all4.skew ? "yes" : "no (4 skew members on R^4 cannot exist)");
  return {ok, os.str()};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "table reproduction", 1.0, table},
      {2, "refined valuation formula, m <= 200", 10.0, [] { return from_sweep(vfs::lemma7_sweep(200)); }},
      {3, "direct rho^C / rho^H formula, even n <= 1e5", 60.0,
       [] { return from_sweep(vfs::theorem8_sweep(1, 100000)); }},
      {4, "Adams closed form vs oracle, n <= 1e5", 30.0,
       [] { return from_relation(vfs::relation_check(vfs::RelationKind::AdamsConsistency, 1, 100000)); }},
      {5, "gap d in {1, 3}, n <= 1e5", 60.0, theorem9},
      {6, "quaternionic/complex James relations", 10.0, relations},
      {7, "rho inequalities across fields, n <= 1e5", 60.0,
       [] { return from_relation(vfs::relation_check(vfs::RelationKind::Corollary6, 1, 100000)); }},
      {8, "composition and inner-product identities", 10.0, identities},
      {9, "explicit complex field certification", 10.0, example4},
      {10, "quaternionic structure lift on H^1", 1.0, lift_contract},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.body();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_budget = seconds < c.budget_seconds;
    const bool pass = out.ok && in_budget;
    if (!pass) ++failures;
    std::printf("[%s] criterion %d: %s (%.3fs / budget %.0fs) %s%s\n", pass ? "PASS" : "FAIL", c.number,
                c.title.c_str(), seconds, c.budget_seconds, out.detail.c_str(), in_budget ? "" : " [over budget]");
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
