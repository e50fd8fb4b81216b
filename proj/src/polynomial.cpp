#include "lagcoh/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "lagcoh/errors.hpp"

namespace lagcoh {

namespace {

void require_ring(const RingPtr& r) {
  if (!r) throw InputError("polynomial: null ring");
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && *a == *b);
}

}  // namespace

Polynomial Polynomial::zero(RingPtr ring) {
  require_ring(ring);
  Polynomial f;
  f.ring_ = std::move(ring);
  return f;
}

Polynomial Polynomial::constant(RingPtr ring, const Rational& c) {
  require_ring(ring);
  Polynomial f;
  std::size_t n = ring->nvars();
  f.ring_ = std::move(ring);
  if (!c.is_zero()) f.terms_.push_back({Monomial::one(n), c});
  return f;
}

Polynomial Polynomial::variable(RingPtr ring, int index) {
  require_ring(ring);
  if (index < 0 || index >= static_cast<int>(ring->nvars()))
    throw InputError("polynomial: variable index out of range");
  Monomial m = Monomial::one(ring->nvars());
  m.exp[index] = 1;
  return monomial(std::move(ring), std::move(m), Rational(1));
}

Polynomial Polynomial::monomial(RingPtr ring, Monomial m, const Rational& c) {
  require_ring(ring);
  if (m.exp.size() != ring->nvars()) throw InputError("polynomial: monomial arity mismatch");
  Polynomial f;
  f.ring_ = std::move(ring);
  if (!c.is_zero()) f.terms_.push_back({std::move(m), c});
  return f;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  require_ring(ring);
  for (const auto& t : terms)
    if (t.m.exp.size() != ring->nvars()) throw InputError("polynomial: term arity mismatch");
  Polynomial f;
  f.ring_ = std::move(ring);
  f.terms_ = std::move(terms);
  f.normalize();
  return f;
}

void Polynomial::normalize() {
  MonomialOrder ord = MonomialOrder::degrevlex();
  const WeightedRing& R = *ring_;
  std::stable_sort(terms_.begin(), terms_.end(), [&](const Term& a, const Term& b) {
    return ord.compare(a.m, b.m, R) > 0;
  });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().m == t.m)
      out.back().c += t.c;
    else
      out.push_back(std::move(t));
    if (!out.empty() && out.back().c.is_zero()) out.pop_back();
  }
  terms_ = std::move(out);
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one());
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw InputError("polynomial: leading term of zero");
  return terms_.front();
}

std::vector<Term> Polynomial::terms_sorted(const MonomialOrder& order) const {
  std::vector<Term> out = terms_;
  const WeightedRing& R = *ring_;
  std::stable_sort(out.begin(), out.end(), [&](const Term& a, const Term& b) {
    return order.compare(a.m, b.m, R) > 0;
  });
  return out;
}

WeightedDegree Polynomial::weighted_degree() const {
  if (terms_.empty()) return WeightedDegree::bottom();
  long top = terms_.front().m.weighted_degree(*ring_);
  bool homog = true;
  for (const auto& t : terms_)
    if (t.m.weighted_degree(*ring_) != top) {
      homog = false;
      break;
    }
  return WeightedDegree::of(top, homog);
}

Polynomial Polynomial::operator-() const {
  Polynomial f = *this;
  for (auto& t : f.terms_) t.c = -t.c;
  return f;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  require_ring(ring_);
  if (!same_ring(ring_, o.ring_)) throw InputError("polynomial: ring mismatch in +");
  // Merge two canonically sorted term lists.
  MonomialOrder ord = MonomialOrder::degrevlex();
  const WeightedRing& R = *ring_;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = ord.compare(terms_[i].m, o.terms_[j].m, R);
    if (c > 0) {
      out.push_back(std::move(terms_[i++]));
    } else if (c < 0) {
      out.push_back(o.terms_[j++]);
    } else {
      Rational s = terms_[i].c + o.terms_[j].c;
      if (!s.is_zero()) out.push_back({terms_[i].m, s});
      ++i, ++j;
    }
  }
  while (i < terms_.size()) out.push_back(std::move(terms_[i++]));
  while (j < o.terms_.size()) out.push_back(o.terms_[j++]);
  terms_ = std::move(out);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_ring(a.ring());
  if (!same_ring(a.ring(), b.ring())) throw InputError("polynomial: ring mismatch in *");
  std::vector<Term> prod;
  prod.reserve(a.terms().size() * b.terms().size());
  for (const auto& ta : a.terms())
    for (const auto& tb : b.terms()) prod.push_back({ta.m * tb.m, ta.c * tb.c});
  return Polynomial::from_terms(a.ring(), std::move(prod));
}

Polynomial Polynomial::scaled(const Rational& c) const {
  if (c.is_zero()) return zero(ring_);
  Polynomial f = *this;
  for (auto& t : f.terms_) t.c *= c;
  return f;
}

Polynomial Polynomial::times_monomial(const Monomial& m, const Rational& c) const {
  if (c.is_zero()) return zero(ring_);
  // Multiplying every term by one monomial shifts degrees uniformly and
  // preserves revlex tie-breaks, so the term order survives intact.
  Polynomial f = *this;
  for (auto& t : f.terms_) {
    t.m = t.m * m;
    t.c *= c;
  }
  return f;
}

Polynomial Polynomial::pow(unsigned e) const {
  require_ring(ring_);
  Polynomial r = constant(ring_, Rational(1));
  for (unsigned i = 0; i < e; ++i) r = r * (*this);
  return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
  return same_ring(ring_, o.ring_) && terms_ == o.terms_;
}

Polynomial Polynomial::derivative(int var) const {
  require_ring(ring_);
  if (var < 0 || var >= static_cast<int>(ring_->nvars()))
    throw InputError("polynomial: derivative variable out of range");
  std::vector<Term> out;
  for (const auto& t : terms_) {
    int e = t.m.exp[var];
    if (e == 0) continue;
    Term d = t;
    d.c *= Rational(e);
    d.m.exp[var] = e - 1;
    out.push_back(std::move(d));
  }
  return from_terms(ring_, std::move(out));
}

Polynomial Polynomial::integrate_from_zero(int var) const {
  require_ring(ring_);
  if (var < 0 || var >= static_cast<int>(ring_->nvars()))
    throw InputError("polynomial: integration variable out of range");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Term d = t;
    int e = t.m.exp[var];
    d.c /= Rational(e + 1);
    d.m.exp[var] = e + 1;
    out.push_back(std::move(d));
  }
  return from_terms(ring_, std::move(out));
}

Polynomial Polynomial::substitute(const RingPtr& target, const std::vector<Polynomial>& images) const {
  require_ring(ring_);
  require_ring(target);
  if (images.size() != ring_->nvars())
    throw InputError("polynomial: substitute needs one image per variable");
  for (const auto& g : images)
    if (!same_ring(g.ring(), target)) throw InputError("polynomial: image in wrong ring");

  // Cache powers of each image as they are needed.
  std::vector<std::vector<Polynomial>> pows(images.size());
  auto power = [&](int var, int e) -> const Polynomial& {
    auto& cache = pows[var];
    if (cache.empty()) cache.push_back(Polynomial::constant(target, Rational(1)));
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[var]);
    return cache[e];
  };

  Polynomial acc = Polynomial::zero(target);
  for (const auto& t : terms_) {
    Polynomial term = Polynomial::constant(target, t.c);
    for (std::size_t v = 0; v < images.size(); ++v)
      if (t.m.exp[v] != 0) term = term * power(static_cast<int>(v), t.m.exp[v]);
    acc += term;
  }
  return acc;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
  require_ring(ring_);
  if (point.size() != ring_->nvars())
    throw InputError("polynomial: evaluate needs one value per variable");
  Rational acc(0);
  for (const auto& t : terms_) {
    Rational v = t.c;
    for (std::size_t i = 0; i < point.size(); ++i)
      for (int e = 0; e < t.m.exp[i]; ++e) v *= point[i];
    acc += v;
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Parsing / printing

namespace {

class Parser {
 public:
  Parser(const RingPtr& ring, const std::string& s) : ring_(ring), s_(s) {}

  Polynomial run() {
    Polynomial f = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing input");
    return f;
  }

 private:
  const RingPtr& ring_;
  const std::string& s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& why) {
    throw InputError("parse error at offset " + std::to_string(pos_) + ": " + why + " in '" + s_ +
                     "'");
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  Polynomial expr() {
    Polynomial acc = term();
    for (;;) {
      if (eat('+'))
        acc += term();
      else if (eat('-'))
        acc -= term();
      else
        return acc;
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (eat('*')) acc = acc * factor();
    return acc;
  }

  Polynomial factor() {
    Polynomial b = base();
    if (eat('^')) {
      unsigned e = parse_uint();
      b = b.pow(e);
    }
    return b;
  }

  Polynomial base() {
    char c = peek();
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Polynomial::constant(ring_, number());
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name = ident();
      int idx = ring_->index_of(name);
      if (idx < 0) fail("unknown variable '" + name + "'");
      return Polynomial::variable(ring_, idx);
    }
    fail("expected term");
  }

  unsigned parse_uint() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected integer");
    return static_cast<unsigned>(std::stoul(s_.substr(start, pos_ - start)));
  }

  Rational number() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    std::string num = s_.substr(start, pos_ - start);
    // '/' continues the literal only when directly followed by digits
    // ("3/7*x"), so plain division of polynomials stays rejected.
    if (pos_ < s_.size() && s_[pos_] == '/' && pos_ + 1 < s_.size() &&
        std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
      ++pos_;
      std::size_t dstart = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Rational::from_string(num + "/" + s_.substr(dstart, pos_ - dstart));
    }
    return Rational::from_string(num);
  }

  std::string ident() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      ++pos_;
    return s_.substr(start, pos_ - start);
  }
};

}  // namespace

Polynomial parse_polynomial(const RingPtr& ring, const std::string& text) {
  require_ring(ring);
  return Parser(ring, text).run();
}

std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  const WeightedRing& R = *f.ring();
  std::ostringstream os;
  bool first = true;
  for (const auto& t : f.terms()) {
    Rational a = abs(t.c);
    if (first) {
      if (t.c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (t.c.sign() < 0 ? " - " : " + ");
    }
    std::vector<std::string> factors;
    for (std::size_t i = 0; i < R.nvars(); ++i) {
      int e = t.m.exp[i];
      if (e == 0) continue;
      factors.push_back(e == 1 ? R.variables[i] : R.variables[i] + "^" + std::to_string(e));
    }
    if (factors.empty()) {
      os << a.str();
    } else {
      bool wrote = false;
      if (!a.is_one()) {
        os << a.str();
        wrote = true;
      }
      for (const auto& fct : factors) {
        if (wrote) os << "*";
        os << fct;
        wrote = true;
      }
    }
  }
  return os.str();
}

}  // namespace lagcoh
