#include "nws/semigroup.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace nws {
namespace {

constexpr std::int64_t kSieveLimit = 100'000'000;

}  // namespace

NumericalSemigroup NumericalSemigroup::from_generators(std::vector<std::int64_t> raw) {
  if (raw.empty()) fail(errc::empty_input, "generator list is empty");
  for (auto g : raw) {
    if (g <= 0) fail(errc::invalid_parameter, "generators must be positive");
  }
  std::sort(raw.begin(), raw.end());
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  std::int64_t d = 0;
  for (auto g : raw) d = std::gcd(d, g);
  if (d != 1) {
    fail(errc::non_cofinite_input, "gcd of generators is " + std::to_string(d));
  }

  NumericalSemigroup s;
  const std::int64_t m = raw.front();
  if (m == 1) {
    s.generators_ = {1};
    s.multiplicity_ = 1;
    s.frobenius_ = -1;
    s.apery_ = {0};
    return s;
  }

  // Membership sieve, grown until m consecutive members appear; from there on
  // everything is a member.
  std::vector<char> member;
  std::int64_t bound = 2 * raw.back() + 2;
  std::int64_t conductor = -1;
  for (;;) {
    if (bound > kSieveLimit) fail(errc::resource_limit, "membership sieve exceeds limit");
    member.assign(static_cast<std::size_t>(bound) + 1, 0);
    member[0] = 1;
    for (std::int64_t i = 1; i <= bound; ++i) {
      for (auto g : raw) {
        if (g > i) break;
        if (member[i - g]) {
          member[i] = 1;
          break;
        }
      }
    }
    std::int64_t run = 0;
    conductor = -1;
    for (std::int64_t i = 0; i <= bound; ++i) {
      run = member[i] ? run + 1 : 0;
      if (run == m) {
        conductor = i - m + 1;
        break;
      }
    }
    if (conductor >= 0) break;
    bound *= 2;
  }

  const auto is_member = [&](std::int64_t n) {
    if (n < 0) return false;
    if (n > bound) return true;
    return member[n] != 0;
  };

  s.multiplicity_ = m;
  s.frobenius_ = conductor - 1;
  for (std::int64_t i = 1; i < conductor; ++i) {
    if (!member[i]) s.gaps_.push_back(i);
  }

  s.apery_.assign(m, -1);
  s.apery_[0] = 0;
  std::int64_t found = 1;
  for (std::int64_t i = 1; found < m; ++i) {
    if (!is_member(i)) continue;
    auto& slot = s.apery_[i % m];
    if (slot < 0) {
      slot = i;
      ++found;
    }
  }

  // Minimal generators are the members that are not sums of two nonzero
  // members; all of them lie in [m, frobenius + m].
  const std::int64_t hi = s.frobenius_ + m;
  for (std::int64_t e = m; e <= hi; ++e) {
    if (!is_member(e)) continue;
    bool decomposable = false;
    for (std::int64_t a = m; 2 * a <= e; ++a) {
      if (is_member(a) && is_member(e - a)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) s.generators_.push_back(e);
  }
  return s;
}

bool NumericalSemigroup::contains(std::int64_t n) const {
  if (n < 0) return false;
  if (n == 0) return true;
  return n >= apery_[n % multiplicity_];
}

std::string NumericalSemigroup::to_compact_string() const {
  std::string out = "<";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(generators_[i]);
  }
  out += ">";
  return out;
}

NumericalSemigroup NumericalSemigroup::parse_compact(std::string_view text) {
  if (text.size() < 3 || text.front() != '<' || text.back() != '>') {
    fail(errc::invalid_parameter, "expected \"<g1,g2,...>\"");
  }
  std::string_view body = text.substr(1, text.size() - 2);
  std::vector<std::int64_t> gens;
  std::size_t pos = 0;
  while (pos <= body.size()) {
    std::size_t comma = body.find(',', pos);
    std::string_view item = body.substr(pos, comma == std::string_view::npos
                                                 ? std::string_view::npos
                                                 : comma - pos);
    std::int64_t value = 0;
    auto* first = item.data();
    auto* last = item.data() + item.size();
    auto res = std::from_chars(first, last, value);
    if (res.ec != std::errc() || res.ptr != last) {
      fail(errc::invalid_parameter, "bad generator \"" + std::string(item) + "\"");
    }
    gens.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return from_generators(std::move(gens));
}

NumericalSemigroup double_plus_odd(const NumericalSemigroup& base, std::int64_t x) {
  if (x < 1) fail(errc::invalid_parameter, "x must be positive");
  std::vector<std::int64_t> gens;
  gens.reserve(base.minimal_generators().size() + 1);
  for (auto g : base.minimal_generators()) gens.push_back(2 * g);
  gens.push_back(2 * x + 1);
  return NumericalSemigroup::from_generators(std::move(gens));
}

}  // namespace nws
