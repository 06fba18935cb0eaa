#include "vfs/james.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <sstream>
#include <vector>

namespace vfs {

std::string_view to_string(FieldTag f) {
  switch (f) {
    case FieldTag::R: return "R";
    case FieldTag::C: return "C";
    case FieldTag::H: return "H";
  }
  return "?";
}

std::optional<FieldTag> parse_field(std::string_view s) {
  if (s.size() != 1) return std::nullopt;
  switch (std::toupper(static_cast<unsigned char>(s[0]))) {
    case 'R': return FieldTag::R;
    case 'C': return FieldTag::C;
    case 'H': return FieldTag::H;
    default: return std::nullopt;
  }
}

std::int64_t f_adams(std::int64_t m) {
  if (m < 0) throw DomainError("f_adams: m must be nonnegative");
  // Four residues per complete block of eight, then the tail.
  std::int64_t count = 4 * (m / 8);
  for (std::int64_t q = 8 * (m / 8) + 1; q <= m; ++q) {
    const std::int64_t r = q % 8;
    if (r == 0 || r == 1 || r == 2 || r == 4) ++count;
  }
  return count;
}

std::int64_t support_bound(FieldTag field, std::int64_t m) {
  switch (field) {
    case FieldTag::R: return 2;
    case FieldTag::C: return m + 1;
    case FieldTag::H: return 2 * m + 1;
  }
  return 0;
}

namespace {

void require_prime(std::int64_t p) {
  if (!is_prime(p)) throw DomainError("expected a prime, got " + std::to_string(p));
}

// s + nu_p(s), with the s = 0 term defined as 0.
std::int64_t complex_term(std::int64_t s, std::int64_t p) { return s == 0 ? 0 : s + nu(p, s); }

// 2s + nu_2(s), with the s = 0 term defined as 0.
std::int64_t quat_term(std::int64_t s) { return s == 0 ? 0 : 2 * s + nu(2, s); }

std::int64_t max_complex_term(std::int64_t p, SRange range) {
  std::int64_t best = 0;
  for (std::int64_t s = range.lo; s <= range.hi; ++s) best = std::max(best, complex_term(s, p));
  return best;
}

std::int64_t nu_complex_full(std::int64_t p, std::int64_t m) {
  return max_complex_term(p, SRange{0, m / (p - 1)});
}

}  // namespace

std::int64_t nu_full(FieldTag field, std::int64_t p, std::int64_t m) {
  require_prime(p);
  if (m < 0) throw DomainError("nu_full: m must be nonnegative");
  if (m == 0) return 0;
  switch (field) {
    case FieldTag::R:
      return p == 2 ? f_adams(m) : 0;
    case FieldTag::C:
      return nu_complex_full(p, m);
    case FieldTag::H: {
      if (p != 2) return nu_complex_full(p, 2 * m);
      std::int64_t best = 2 * m + 1;
      for (std::int64_t s = 1; s <= m; ++s) best = std::max(best, quat_term(s));
      return best;
    }
  }
  return 0;
}

SRange s_set(std::int64_t m, std::int64_t p) {
  require_prime(p);
  if (m < 1) throw DomainError("s_set: m must be positive");
  if (p > m + 1) return SRange{0, 0};
  const std::int64_t top = m / (p - 1);
  const std::int64_t log = floor_log_ratio(p, Integer(m), Integer(p - 1));
  return SRange{top + nu(p, top) - log, top};
}

std::int64_t nu_refined(FieldTag field, std::int64_t p, std::int64_t m) {
  require_prime(p);
  if (m < 1) throw DomainError("nu_refined: m must be positive");
  switch (field) {
    case FieldTag::C:
      return max_complex_term(p, s_set(m, p));
    case FieldTag::H: {
      if (p != 2) return max_complex_term(p, s_set(2 * m, p));
      const SRange range = s_set(m, 2);
      std::int64_t best = 2 * m + 1;
      for (std::int64_t s = range.lo; s <= range.hi; ++s) best = std::max(best, quat_term(s));
      return best;
    }
    case FieldTag::R:
      break;
  }
  throw DomainError("nu_refined: field must be C or H");
}

namespace {

template <typename Valuation>
JamesProfile build_profile(FieldTag field, std::int64_t m, Valuation valuation) {
  JamesProfile out{field, m, {}};
  if (m == 0) return out;
  const std::int64_t bound = support_bound(field, m);
  for (std::int64_t p = 2; p <= bound; p = next_prime(p)) {
    if (const std::int64_t v = valuation(p); v > 0) out.valuations.emplace(p, v);
  }
  return out;
}

class ProfileCache {
public:
  JamesProfile get(FieldTag field, std::int64_t m) {
    auto& slot = table_[static_cast<int>(field)];
    {
      std::lock_guard lock(mutex_);
      if (static_cast<std::size_t>(m) < slot.size() && slot[static_cast<std::size_t>(m)]) {
        return *slot[static_cast<std::size_t>(m)];
      }
    }
    JamesProfile computed =
        build_profile(field, m, [&](std::int64_t p) { return nu_full(field, p, m); });
    std::lock_guard lock(mutex_);
    if (static_cast<std::size_t>(m) >= slot.size()) slot.resize(static_cast<std::size_t>(m) + 1);
    slot[static_cast<std::size_t>(m)] = computed;
    return computed;
  }

private:
  std::mutex mutex_;
  std::vector<std::optional<JamesProfile>> table_[3];
};

}  // namespace

JamesProfile profile(FieldTag field, std::int64_t m) {
  if (m < 0) throw DomainError("profile: m must be nonnegative");
  static ProfileCache cache;
  return cache.get(field, m);
}

JamesProfile profile_refined(FieldTag field, std::int64_t m) {
  if (m < 0) throw DomainError("profile_refined: m must be nonnegative");
  return build_profile(field, m, [&](std::int64_t p) { return nu_refined(field, p, m); });
}

bool divides(const JamesProfile& c, const FactoredInteger& n) {
  return std::all_of(c.valuations.begin(), c.valuations.end(), [&](const auto& entry) {
    return entry.second <= n.exponent(Integer(entry.first));
  });
}

std::string to_string(const JamesProfile& c) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [p, v] : c.valuations) {
    if (!first) os << ", ";
    first = false;
    os << p << ':' << v;
  }
  os << '}';
  return os.str();
}

}  // namespace vfs
