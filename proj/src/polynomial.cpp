#include "algebroid/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace algebroid {

namespace {

unsigned monomial_degree(const Monomial &m) {
  return std::accumulate(m.begin(), m.end(), 0u);
}

} // namespace

bool GradedLexLess::operator()(const Monomial &a, const Monomial &b) const {
  unsigned da = monomial_degree(a), db = monomial_degree(b);
  if (da != db)
    return da < db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Polynomial::Polynomial(int nvars, const Rational &constant) : nvars_(nvars) {
  if (!constant.is_zero())
    terms_.emplace(Monomial(nvars, 0u), constant);
}

Polynomial Polynomial::variable(int nvars, int index) {
  if (index < 0 || index >= nvars)
    throw std::invalid_argument("polynomial: variable index out of range");
  Monomial m(nvars, 0u);
  m[index] = 1;
  return monomial(nvars, m, Rational(1));
}

Polynomial Polynomial::monomial(int nvars, const Monomial &mono, const Rational &coeff) {
  if (static_cast<int>(mono.size()) != nvars)
    throw std::invalid_argument("polynomial: monomial length mismatch");
  Polynomial p(nvars);
  if (!coeff.is_zero())
    p.terms_.emplace(mono, coeff);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && monomial_degree(terms_.begin()->first) == 0);
}

Rational Polynomial::constant_value() const {
  if (terms_.empty())
    return Rational(0);
  if (!is_constant())
    throw std::invalid_argument("polynomial: not a constant");
  return terms_.begin()->second;
}

int Polynomial::total_degree() const {
  if (terms_.empty())
    return -1;
  return static_cast<int>(monomial_degree(terms_.rbegin()->first));
}

void Polynomial::add_term(const Monomial &mono, const Rational &coeff) {
  if (static_cast<int>(mono.size()) != nvars_)
    throw std::invalid_argument("polynomial: monomial length mismatch");
  if (coeff.is_zero())
    return;
  auto it = terms_.find(mono);
  if (it == terms_.end()) {
    terms_.emplace(mono, coeff);
  } else {
    it->second += coeff;
    if (it->second.is_zero())
      terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r(nvars_);
  for (const auto &[m, c] : terms_)
    r.terms_.emplace(m, -c);
  return r;
}

Polynomial &Polynomial::operator+=(const Polynomial &o) {
  if (nvars_ != o.nvars_)
    throw std::invalid_argument("polynomial: variable-count mismatch");
  for (const auto &[m, c] : o.terms_)
    add_term(m, c);
  return *this;
}

Polynomial &Polynomial::operator-=(const Polynomial &o) {
  if (nvars_ != o.nvars_)
    throw std::invalid_argument("polynomial: variable-count mismatch");
  for (const auto &[m, c] : o.terms_)
    add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial &a, const Polynomial &b) {
  if (a.nvars_ != b.nvars_)
    throw std::invalid_argument("polynomial: variable-count mismatch");
  Polynomial r(a.nvars_);
  Monomial prod(a.nvars_, 0u);
  for (const auto &[ma, ca] : a.terms_) {
    for (const auto &[mb, cb] : b.terms_) {
      for (int i = 0; i < a.nvars_; ++i)
        prod[i] = ma[i] + mb[i];
      r.add_term(prod, ca * cb);
    }
  }
  return r;
}

Polynomial Polynomial::scaled(const Rational &c) const {
  Polynomial r(nvars_);
  if (c.is_zero())
    return r;
  for (const auto &[m, coeff] : terms_)
    r.terms_.emplace(m, coeff * c);
  return r;
}

bool operator<(const Polynomial &a, const Polynomial &b) {
  if (a.nvars_ != b.nvars_)
    return a.nvars_ < b.nvars_;
  auto ita = a.terms_.begin(), itb = b.terms_.begin();
  GradedLexLess less;
  for (; ita != a.terms_.end() && itb != b.terms_.end(); ++ita, ++itb) {
    if (less(ita->first, itb->first))
      return true;
    if (less(itb->first, ita->first))
      return false;
    if (ita->second != itb->second)
      return ita->second < itb->second;
  }
  return itb != b.terms_.end();
}

Polynomial Polynomial::derivative(int index) const {
  if (index < 0 || index >= nvars_)
    throw std::invalid_argument("polynomial: derivative index out of range");
  Polynomial r(nvars_);
  for (const auto &[m, c] : terms_) {
    if (m[index] == 0)
      continue;
    Monomial dm = m;
    dm[index] -= 1;
    r.add_term(dm, c * Rational(static_cast<long>(m[index])));
  }
  return r;
}

std::string Polynomial::str() const {
  if (terms_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  // Highest-degree terms first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Rational &c = it->second;
    if (first) {
      if (c.sign() < 0)
        os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    const Rational mag = c.abs();
    bool has_vars = monomial_degree(it->first) > 0;
    if (!mag.is_one() || !has_vars) {
      os << mag.str();
      if (has_vars)
        os << " ";
    }
    bool first_factor = true;
    for (int i = 0; i < nvars_; ++i) {
      unsigned e = it->first[i];
      if (e == 0)
        continue;
      if (!first_factor)
        os << " ";
      first_factor = false;
      os << "x" << (i + 1);
      if (e > 1)
        os << "^" << e;
    }
  }
  return os.str();
}

std::ostream &operator<<(std::ostream &os, const Polynomial &p) {
  return os << p.str();
}

namespace {

struct PolyLexer {
  const std::string &text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  std::string integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == start)
      throw std::invalid_argument("polynomial: expected integer in '" + text + "' at position " +
                                  std::to_string(start));
    return text.substr(start, pos - start);
  }
};

} // namespace

Polynomial Polynomial::parse(const std::string &text, int nvars) {
  PolyLexer lex{text};
  Polynomial result(nvars);
  if (lex.done())
    throw std::invalid_argument("polynomial: empty input");
  bool first = true;
  while (!lex.done()) {
    int sign = 1;
    if (lex.eat('-'))
      sign = -1;
    else if (lex.eat('+')) {
      if (first)
        throw std::invalid_argument("polynomial: leading '+' in '" + text + "'");
    } else if (!first) {
      throw std::invalid_argument("polynomial: expected '+' or '-' in '" + text + "'");
    }
    first = false;

    Rational coeff(1);
    bool saw_anything = false;
    if (std::isdigit(static_cast<unsigned char>(lex.peek()))) {
      std::string num = lex.integer();
      std::string denom;
      if (lex.eat('/'))
        denom = lex.integer();
      coeff = Rational::from_string(denom.empty() ? num : num + "/" + denom);
      saw_anything = true;
    }
    Monomial mono(nvars, 0u);
    while (lex.peek() == 'x') {
      lex.eat('x');
      std::string idx = lex.integer();
      int v = std::stoi(idx);
      if (v < 1 || v > nvars)
        throw std::invalid_argument("polynomial: variable x" + idx + " out of range (m=" +
                                    std::to_string(nvars) + ")");
      unsigned e = 1;
      if (lex.eat('^'))
        e = static_cast<unsigned>(std::stoul(lex.integer()));
      mono[v - 1] += e;
      saw_anything = true;
    }
    if (!saw_anything)
      throw std::invalid_argument("polynomial: empty term in '" + text + "'");
    if (sign < 0)
      coeff = -coeff;
    result.add_term(mono, coeff);
  }
  return result;
}

Derivation::Derivation(int nvars)
    : nvars_(nvars), components_(nvars, Polynomial(nvars)) {}

Derivation::Derivation(std::vector<Polynomial> components)
    : nvars_(static_cast<int>(components.size())), components_(std::move(components)) {
  for (const auto &c : components_)
    if (c.nvars() != nvars_)
      throw std::invalid_argument("derivation: component variable-count mismatch");
}

Derivation Derivation::coordinate(int nvars, int index) {
  Derivation d(nvars);
  d.components_[index] = Polynomial::one(nvars);
  return d;
}

bool Derivation::is_zero() const {
  return std::all_of(components_.begin(), components_.end(),
                     [](const Polynomial &p) { return p.is_zero(); });
}

Polynomial Derivation::apply(const Polynomial &f) const {
  if (f.nvars() != nvars_)
    throw std::invalid_argument("derivation: variable-count mismatch");
  Polynomial r(nvars_);
  for (int i = 0; i < nvars_; ++i) {
    if (components_[i].is_zero())
      continue;
    r += components_[i] * f.derivative(i);
  }
  return r;
}

Derivation Derivation::operator-() const {
  Derivation r(nvars_);
  for (int i = 0; i < nvars_; ++i)
    r.components_[i] = -components_[i];
  return r;
}

Derivation &Derivation::operator+=(const Derivation &o) {
  if (nvars_ != o.nvars_)
    throw std::invalid_argument("derivation: variable-count mismatch");
  for (int i = 0; i < nvars_; ++i)
    components_[i] += o.components_[i];
  return *this;
}

Derivation operator-(const Derivation &a, const Derivation &b) {
  Derivation r = a;
  r += -b;
  return r;
}

Derivation Derivation::scaled(const Polynomial &f) const {
  Derivation r(nvars_);
  for (int i = 0; i < nvars_; ++i)
    r.components_[i] = components_[i] * f;
  return r;
}

std::string Derivation::str() const {
  std::ostringstream os;
  bool any = false;
  for (int i = 0; i < nvars_; ++i) {
    if (components_[i].is_zero())
      continue;
    if (any)
      os << " + ";
    any = true;
    os << "(" << components_[i] << ") d/dx" << (i + 1);
  }
  return any ? os.str() : "0";
}

Derivation derivation_commutator(const Derivation &x, const Derivation &y) {
  if (x.nvars() != y.nvars())
    throw std::invalid_argument("derivation: variable-count mismatch");
  std::vector<Polynomial> comps;
  comps.reserve(x.nvars());
  for (int i = 0; i < x.nvars(); ++i)
    comps.push_back(x.apply(y.component(i)) - y.apply(x.component(i)));
  return Derivation(std::move(comps));
}

} // namespace algebroid
