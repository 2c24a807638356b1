#include "nws/polynomial.hpp"

#include <algorithm>
#include <cctype>

#include "nws/semigroup.hpp"

namespace nws {

GradedRing::GradedRing(std::vector<std::string> names,
                       std::vector<std::int64_t> weights, MonomialOrder order)
    : names_(std::move(names)), weights_(std::move(weights)), order_(std::move(order)) {
  if (names_.size() != weights_.size() || names_.empty()) {
    fail(errc::invalid_parameter, "ring needs matching names and weights");
  }
  if (nvars() > kMaxVars) {
    fail(errc::invalid_parameter, "at most " + std::to_string(kMaxVars) + " variables");
  }
  for (auto w : weights_) {
    if (w <= 0) fail(errc::invalid_parameter, "weights must be positive");
  }
  for (std::size_t i = 0; i < names_.size(); ++i) {
    for (std::size_t j = i + 1; j < names_.size(); ++j) {
      if (names_[i] == names_[j]) fail(errc::invalid_parameter, "duplicate variable name");
    }
  }
  if (order_.precedence.empty()) {
    for (int i = 0; i < nvars(); ++i) order_.precedence.push_back(i);
  }
  std::vector<char> seen(names_.size(), 0);
  if (order_.precedence.size() != names_.size()) {
    fail(errc::invalid_parameter, "precedence must list every variable once");
  }
  for (auto v : order_.precedence) {
    if (v < 0 || v >= nvars() || seen[v]) {
      fail(errc::invalid_parameter, "precedence must be a permutation of the variables");
    }
    seen[v] = 1;
  }
  if (order_.elim_vars < 0 || order_.elim_vars > nvars()) {
    fail(errc::invalid_parameter, "bad elimination block size");
  }
}

std::shared_ptr<const GradedRing> GradedRing::for_semigroup(const NumericalSemigroup& s) {
  const auto& gens = s.minimal_generators();
  const std::int64_t m = s.multiplicity();
  // Default precedence: descending residue class.
  std::vector<int> precedence(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) precedence[i] = static_cast<int>(i);
  std::sort(precedence.begin(), precedence.end(),
            [&](int a, int b) { return gens[a] % m > gens[b] % m; });
  return for_semigroup(s, std::move(precedence));
}

std::shared_ptr<const GradedRing> GradedRing::for_semigroup(
    const NumericalSemigroup& s, std::vector<int> precedence) {
  const auto& gens = s.minimal_generators();
  if (gens.size() < 2) {
    fail(errc::invalid_parameter, "semigroup ring needs at least 2 minimal generators");
  }
  const std::int64_t m = s.multiplicity();
  std::vector<std::string> names;
  names.reserve(gens.size());
  for (auto g : gens) names.push_back("x" + std::to_string(g % m));
  MonomialOrder order;
  order.precedence = std::move(precedence);
  return std::make_shared<GradedRing>(std::move(names),
                                      std::vector<std::int64_t>(gens.begin(), gens.end()),
                                      std::move(order));
}

int GradedRing::variable_index(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return static_cast<int>(i);
  }
  return -1;
}

Monomial GradedRing::variable(int index, int power) const {
  if (index < 0 || index >= nvars() || power < 0) {
    fail(errc::invalid_parameter, "bad variable index or power");
  }
  Monomial m;
  m.exp[index] = static_cast<std::uint16_t>(power);
  m.degree = weights_[index] * power;
  return m;
}

Monomial GradedRing::make_monomial(const std::vector<std::int64_t>& exponents) const {
  if (static_cast<int>(exponents.size()) != nvars()) {
    fail(errc::invalid_parameter, "exponent vector length mismatch");
  }
  Monomial m;
  for (int i = 0; i < nvars(); ++i) {
    if (exponents[i] < 0 || exponents[i] > 0xFFFF) {
      fail(errc::invalid_parameter, "exponent out of range");
    }
    m.exp[i] = static_cast<std::uint16_t>(exponents[i]);
    m.degree += weights_[i] * exponents[i];
  }
  return m;
}

std::int64_t GradedRing::weighted_degree(const Monomial& m) const {
  std::int64_t d = 0;
  for (int i = 0; i < nvars(); ++i) d += weights_[i] * m.exp[i];
  return d;
}

int GradedRing::compare(const Monomial& a, const Monomial& b) const {
  if (order_.elim_vars > 0) {
    std::int64_t ta = 0, tb = 0;
    for (int i = 0; i < order_.elim_vars; ++i) {
      ta += a.exp[i];
      tb += b.exp[i];
    }
    if (ta != tb) return ta < tb ? -1 : 1;
  }
  if (a.degree != b.degree) return a.degree < b.degree ? -1 : 1;
  for (int k = nvars() - 1; k >= 0; --k) {
    const int v = order_.precedence[k];
    if (a.exp[v] != b.exp[v]) return a.exp[v] > b.exp[v] ? -1 : 1;
  }
  return 0;
}

bool GradedRing::divides(const Monomial& a, const Monomial& b) const {
  for (int i = 0; i < nvars(); ++i) {
    if (a.exp[i] > b.exp[i]) return false;
  }
  return true;
}

bool GradedRing::coprime(const Monomial& a, const Monomial& b) const {
  for (int i = 0; i < nvars(); ++i) {
    if (a.exp[i] && b.exp[i]) return false;
  }
  return true;
}

Monomial GradedRing::mul(const Monomial& a, const Monomial& b) const {
  Monomial m;
  for (int i = 0; i < nvars(); ++i) {
    const std::uint32_t e = std::uint32_t(a.exp[i]) + b.exp[i];
    if (e > 0xFFFF) fail(errc::resource_limit, "exponent overflow");
    m.exp[i] = static_cast<std::uint16_t>(e);
  }
  m.degree = a.degree + b.degree;
  return m;
}

Monomial GradedRing::div(const Monomial& a, const Monomial& b) const {
  Monomial m;
  for (int i = 0; i < nvars(); ++i) {
    if (b.exp[i] > a.exp[i]) fail(errc::invalid_parameter, "monomial division is not exact");
    m.exp[i] = static_cast<std::uint16_t>(a.exp[i] - b.exp[i]);
  }
  m.degree = a.degree - b.degree;
  return m;
}

Monomial GradedRing::lcm(const Monomial& a, const Monomial& b) const {
  Monomial m;
  m.degree = 0;
  for (int i = 0; i < nvars(); ++i) {
    m.exp[i] = std::max(a.exp[i], b.exp[i]);
    m.degree += weights_[i] * m.exp[i];
  }
  return m;
}

bool GradedRing::structurally_equal(const GradedRing& other) const {
  return names_ == other.names_ && weights_ == other.weights_ &&
         order_.precedence == other.order_.precedence &&
         order_.elim_vars == other.order_.elim_vars;
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) fail(errc::invalid_parameter, "zero polynomial has no leading term");
  return terms_.front();
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  if (!ring) fail(errc::invalid_parameter, "polynomial needs a ring");
  const GradedRing& R = *ring;
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return R.compare(a.mono, b.mono) > 0;
  });
  Polynomial p(std::move(ring));
  for (auto& t : terms) {
    if (t.coeff == 0) continue;
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Polynomial Polynomial::constant(RingPtr ring, mpq_class value) {
  Polynomial p(std::move(ring));
  if (value != 0) p.terms_.push_back({std::move(value), Monomial{}});
  return p;
}

Polynomial Polynomial::monomial(RingPtr ring, mpq_class coeff, Monomial mono) {
  Polynomial p(std::move(ring));
  if (coeff != 0) p.terms_.push_back({std::move(coeff), mono});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, int index, int power, mpq_class coeff) {
  Monomial m = ring->variable(index, power);
  return monomial(std::move(ring), std::move(coeff), m);
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const std::int64_t d = terms_.front().mono.degree;
  for (const auto& t : terms_) {
    if (t.mono.degree != d) return false;
  }
  return true;
}

std::optional<std::int64_t> Polynomial::homogeneous_degree() const {
  if (terms_.empty() || !is_homogeneous()) return std::nullopt;
  return terms_.front().mono.degree;
}

bool Polynomial::is_constant() const {
  return terms_.size() == 1 && terms_.front().mono.is_one();
}

Polynomial Polynomial::operator-() const {
  Polynomial p(ring_);
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({-t.coeff, t.mono});
  return p;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  require_same_ring(ring_, o.ring_);
  const GradedRing& R = *ring_;
  Polynomial out(ring_);
  out.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    const int c = R.compare(terms_[i].mono, o.terms_[j].mono);
    if (c > 0) {
      out.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      out.terms_.push_back(o.terms_[j++]);
    } else {
      mpq_class sum = terms_[i].coeff + o.terms_[j].coeff;
      if (sum != 0) out.terms_.push_back({std::move(sum), terms_[i].mono});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.terms_.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) out.terms_.push_back(o.terms_[j]);
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::times_term(const mpq_class& coeff, const Monomial& mono) const {
  Polynomial out(ring_);
  if (coeff == 0) return out;
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    out.terms_.push_back({t.coeff * coeff, ring_->mul(t.mono, mono)});
  }
  return out;
}

Polynomial Polynomial::times(const mpq_class& scalar) const {
  return times_term(scalar, Monomial{});
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  require_same_ring(ring_, o.ring_);
  Polynomial acc(ring_);
  const Polynomial& small = terms_.size() <= o.terms_.size() ? *this : o;
  const Polynomial& large = terms_.size() <= o.terms_.size() ? o : *this;
  for (const auto& t : small.terms_) {
    acc = acc + large.times_term(t.coeff, t.mono);
  }
  return acc;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (!(terms_[i].mono == o.terms_[i].mono) || terms_[i].coeff != o.terms_[i].coeff) {
      return false;
    }
  }
  return true;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return times(mpq_class(1) / terms_.front().coeff);
}

namespace {

std::string coeff_to_string(const mpq_class& q) { return q.get_str(); }

}  // namespace

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  const auto& names = ring_->variable_names();
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    const Term& t = terms_[k];
    const bool negative = t.coeff < 0;
    if (k == 0) {
      if (negative) out += "-";
    } else {
      out += negative ? "-" : "+";
    }
    mpq_class a = abs(t.coeff);
    std::string factors;
    for (int i = 0; i < ring_->nvars(); ++i) {
      if (!t.mono.exp[i]) continue;
      if (!factors.empty()) factors += "*";
      factors += names[i];
      if (t.mono.exp[i] > 1) factors += "^" + std::to_string(t.mono.exp[i]);
    }
    if (factors.empty()) {
      out += coeff_to_string(a);
    } else if (a == 1) {
      out += factors;
    } else {
      out += coeff_to_string(a) + "*" + factors;
    }
  }
  return out;
}

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_space() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() {
    skip_space();
    return pos >= text.size();
  }
  char peek() {
    skip_space();
    return pos < text.size() ? text[pos] : '\0';
  }
  char take() {
    skip_space();
    return text[pos++];
  }
};

bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

}  // namespace

Polynomial Polynomial::parse(RingPtr ring, std::string_view text) {
  if (!ring) fail(errc::invalid_parameter, "polynomial needs a ring");
  Cursor cur{text};
  std::vector<Term> terms;
  bool first = true;
  while (!cur.done()) {
    int sign = 1;
    char c = cur.peek();
    if (c == '+' || c == '-') {
      cur.take();
      sign = c == '-' ? -1 : 1;
    } else if (!first) {
      fail(errc::invalid_parameter, "expected + or - between terms");
    }
    first = false;

    mpq_class coeff = sign;
    Monomial mono;
    bool saw_factor = false;
    for (;;) {
      char p = cur.peek();
      if (std::isdigit(static_cast<unsigned char>(p))) {
        std::string num;
        while (cur.pos < cur.text.size() &&
               (std::isdigit(static_cast<unsigned char>(cur.text[cur.pos])) ||
                cur.text[cur.pos] == '/')) {
          num += cur.text[cur.pos++];
        }
        mpq_class q;
        if (q.set_str(num, 10) != 0 || q.get_den() == 0) {
          fail(errc::invalid_parameter, "bad coefficient \"" + num + "\"");
        }
        q.canonicalize();
        coeff *= q;
        saw_factor = true;
      } else if (std::isalpha(static_cast<unsigned char>(p)) || p == '_') {
        std::string name;
        while (cur.pos < cur.text.size() && is_ident_char(cur.text[cur.pos])) {
          name += cur.text[cur.pos++];
        }
        const int v = ring->variable_index(name);
        if (v < 0) fail(errc::invalid_parameter, "unknown variable \"" + name + "\"");
        long power = 1;
        if (cur.peek() == '^') {
          cur.take();
          std::string num;
          while (cur.pos < cur.text.size() &&
                 std::isdigit(static_cast<unsigned char>(cur.text[cur.pos]))) {
            num += cur.text[cur.pos++];
          }
          if (num.empty()) fail(errc::invalid_parameter, "missing exponent");
          power = std::stol(num);
        }
        mono = ring->mul(mono, ring->variable(v, static_cast<int>(power)));
        saw_factor = true;
      } else {
        break;
      }
      if (cur.peek() == '*') {
        cur.take();
        continue;
      }
      break;
    }
    if (!saw_factor) fail(errc::invalid_parameter, "empty term");
    terms.push_back({std::move(coeff), mono});
  }
  return from_terms(std::move(ring), std::move(terms));
}

}  // namespace nws
