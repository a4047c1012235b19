#include "segstat/polynomial.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace segstat {

std::string Variable::name() const {
  return (family == Family::t ? "t" : "s") + std::to_string(index);
}

Monomial::Monomial(Variable v, std::uint32_t exponent) {
  if (v.index == 0) throw std::invalid_argument("variable index must be >= 1");
  if (exponent > 0) factors_.emplace_back(v, exponent);
}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const Factor& a, const Factor& b) { return a.first < b.first; });
  Monomial m;
  for (const auto& [v, e] : factors) {
    if (v.index == 0) throw std::invalid_argument("variable index must be >= 1");
    if (e == 0) continue;
    if (!m.factors_.empty() && m.factors_.back().first == v) {
      m.factors_.back().second += e;
    } else {
      m.factors_.emplace_back(v, e);
    }
  }
  return m;
}

std::uint32_t Monomial::exponent(Variable v) const {
  for (const auto& [var, e] : factors_)
    if (var == v) return e;
  return 0;
}

std::uint64_t Monomial::weighted_degree(Family f) const {
  std::uint64_t d = 0;
  for (const auto& [v, e] : factors_)
    if (v.family == f) d += static_cast<std::uint64_t>(v.index) * e;
  return d;
}

std::uint64_t Monomial::degree(Family f) const {
  std::uint64_t d = 0;
  for (const auto& [v, e] : factors_)
    if (v.family == f) d += e;
  return d;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  r.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() && j != b.factors_.end()) {
    if (i->first < j->first) {
      r.factors_.push_back(*i++);
    } else if (j->first < i->first) {
      r.factors_.push_back(*j++);
    } else {
      r.factors_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  r.factors_.insert(r.factors_.end(), i, a.factors_.end());
  r.factors_.insert(r.factors_.end(), j, b.factors_.end());
  return r;
}

Polynomial::Polynomial(const Rational& c) {
  if (c != 0) terms_.emplace(Monomial{}, c);
}

Polynomial Polynomial::variable(Family f, std::uint32_t index) {
  return term(Rational(1), Monomial(Variable{f, index}));
}

Polynomial Polynomial::term(const Rational& c, Monomial m) {
  Polynomial p;
  if (c != 0) p.terms_.emplace(std::move(m), c);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Polynomial::constant_term() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

void Polynomial::add_product(const Polynomial& a, const Polynomial& b) {
  Rational prod;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      prod = ca * cb;
      add_term(ma * mb, prod);
    }
  }
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  *this = *this * o;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial r;
  r.add_product(a, b);
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result(1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    if (!first) out += " + ";
    first = false;
    out += c.get_str();
    for (const auto& [v, e] : m.factors()) {
      out += '*';
      out += v.name();
      if (e != 1) {
        out += '^';
        out += std::to_string(e);
      }
    }
  }
  return out;
}

namespace {

[[noreturn]] void parse_error(std::string_view text, std::string_view why) {
  throw std::invalid_argument("cannot parse polynomial '" + std::string(text) + "': " + std::string(why));
}

std::uint32_t parse_u32(std::string_view s, std::string_view text) {
  std::uint32_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) parse_error(text, "bad number");
  return v;
}

Rational parse_coefficient(std::string_view s, std::string_view text) {
  if (s.empty()) parse_error(text, "missing coefficient");
  const auto valid = [](std::string_view part) {
    if (part.empty()) return false;
    std::size_t i = (part[0] == '-') ? 1 : 0;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') return false;
    return true;
  };
  const auto slash = s.find('/');
  const std::string_view num = s.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : s.substr(slash + 1);
  if (!valid(num) || !valid(den) || den[0] == '-') parse_error(text, "bad coefficient");
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) parse_error(text, "zero denominator");
  return make_rational(n, d);
}

}  // namespace

Polynomial parse_polynomial(std::string_view text) {
  if (text == "0") return {};
  Polynomial result;
  std::size_t pos = 0;
  while (true) {
    const std::size_t next = text.find(" + ", pos);
    const std::string_view term = text.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos);
    std::vector<Monomial::Factor> factors;
    std::size_t star = term.find('*');
    const Rational coeff = parse_coefficient(term.substr(0, star), text);
    while (star != std::string_view::npos) {
      const std::size_t after = term.find('*', star + 1);
      std::string_view factor = term.substr(star + 1, after == std::string_view::npos ? std::string_view::npos : after - star - 1);
      if (factor.size() < 2 || (factor[0] != 't' && factor[0] != 's')) parse_error(text, "bad variable");
      const Family fam = factor[0] == 't' ? Family::t : Family::s;
      const std::size_t caret = factor.find('^');
      const std::uint32_t index = parse_u32(factor.substr(1, caret == std::string_view::npos ? std::string_view::npos : caret - 1), text);
      const std::uint32_t exp = caret == std::string_view::npos ? 1 : parse_u32(factor.substr(caret + 1), text);
      if (index == 0 || exp == 0) parse_error(text, "zero index or exponent");
      factors.emplace_back(Variable{fam, index}, exp);
      star = after;
    }
    result.add_term(Monomial::from_factors(std::move(factors)), coeff);
    if (next == std::string_view::npos) break;
    pos = next + 3;
  }
  return result;
}

}  // namespace segstat
