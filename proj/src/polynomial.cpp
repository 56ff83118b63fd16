// SPDX-License-Identifier: Apache-2.0
#include "thetakit/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace thetakit {

Ring::Ring(std::vector<std::string> vars, Domain domain, MonomialOrder order)
    : vars_(std::move(vars)), domain_(domain), order_(order) {
  for (size_t i = 0; i < vars_.size(); ++i)
    for (size_t j = 0; j < i; ++j)
      if (vars_[i] == vars_[j]) throw AlgebraError("duplicate variable " + vars_[i]);
}

int Ring::index_of(std::string_view name) const {
  for (size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return static_cast<int>(i);
  return -1;
}

unsigned degree_of(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), 0u);
}

int Ring::compare(const Exponents& a, const Exponents& b) const {
  if (order_ == MonomialOrder::GRevLex) {
    unsigned da = degree_of(a), db = degree_of(b);
    if (da != db) return da < db ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    return 0;
  }
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

RingPtr make_ring(std::vector<std::string> vars, Domain domain, MonomialOrder order) {
  return std::make_shared<const Ring>(std::move(vars), domain, order);
}

std::vector<std::string> indexed_names(std::string_view prefix, int first, int last) {
  std::vector<std::string> out;
  for (int i = first; i <= last; ++i) out.push_back(std::string(prefix) + std::to_string(i));
  return out;
}

RingPtr with_domain(const RingPtr& ring, Domain domain) {
  if (ring->domain() == domain) return ring;
  return make_ring(ring->vars(), domain, ring->order());
}

// ---------------------------------------------------------------------------

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

Polynomial Polynomial::constant(RingPtr ring, const Scalar& c) {
  Polynomial p(ring);
  Scalar v = c.convert(ring->domain());
  if (!v.is_zero()) p.terms_.push_back({Exponents(ring->nvars(), 0), v});
  return p;
}

Polynomial Polynomial::constant(RingPtr ring, long c) {
  Domain dom = ring->domain();
  return constant(std::move(ring), Scalar(c, dom));
}

Polynomial Polynomial::variable(RingPtr ring, size_t index) {
  if (index >= ring->nvars()) throw AlgebraError("variable index out of range");
  Exponents e(ring->nvars(), 0);
  e[index] = 1;
  Scalar one = Scalar::one(ring->domain());
  return monomial(std::move(ring), std::move(e), one);
}

Polynomial Polynomial::variable(RingPtr ring, std::string_view name) {
  int i = ring->index_of(name);
  if (i < 0) throw AlgebraError("unknown variable '" + std::string(name) + "'");
  return variable(std::move(ring), static_cast<size_t>(i));
}

Polynomial Polynomial::monomial(RingPtr ring, Exponents exp, const Scalar& c) {
  if (exp.size() != ring->nvars()) throw AlgebraError("exponent length mismatch");
  Polynomial p(ring);
  Scalar v = c.convert(ring->domain());
  if (!v.is_zero()) p.terms_.push_back({std::move(exp), v});
  return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  Polynomial p(ring);
  const Ring& r = *ring;
  std::sort(terms.begin(), terms.end(),
            [&r](const Term& a, const Term& b) { return r.compare(a.exp, b.exp) > 0; });
  for (auto& t : terms) {
    if (t.exp.size() != r.nvars()) throw AlgebraError("exponent length mismatch");
    if (!p.terms_.empty() && p.terms_.back().exp == t.exp) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && degree_of(terms_[0].exp) == 0);
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(degree_of(t.exp)));
  return d;
}

int Polynomial::low_degree() const {
  if (terms_.empty()) return -1;
  int d = static_cast<int>(degree_of(terms_[0].exp));
  for (const auto& t : terms_) d = std::min(d, static_cast<int>(degree_of(t.exp)));
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  unsigned d = degree_of(terms_[0].exp);
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const Term& t) { return degree_of(t.exp) == d; });
}

Polynomial Polynomial::homogeneous_part(int k) const {
  Polynomial p(ring_);
  for (const auto& t : terms_)
    if (static_cast<int>(degree_of(t.exp)) == k) p.terms_.push_back(t);
  return p;
}

void Polynomial::check_ring(const Polynomial& o) const {
  if (ring_ != o.ring_ && !(*ring_ == *o.ring_)) throw AlgebraError("ring mismatch");
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

static std::vector<Term> merge_terms(const Ring& r, const std::vector<Term>& a,
                                     const std::vector<Term>& b, bool negate_b) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c = i == a.size() ? -1 : j == b.size() ? 1 : r.compare(a[i].exp, b[j].exp);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j++]);
      if (negate_b) out.back().coeff = -out.back().coeff;
    } else {
      Scalar s = negate_b ? a[i].coeff - b[j].coeff : a[i].coeff + b[j].coeff;
      if (!s.is_zero()) out.push_back({a[i].exp, s});
      ++i;
      ++j;
    }
  }
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_ring(o);
  terms_ = merge_terms(*ring_, terms_, o.terms_, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_ring(o);
  terms_ = merge_terms(*ring_, terms_, o.terms_, true);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_ring(b);
  std::vector<Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) {
      Exponents e(s.exp.size());
      for (size_t k = 0; k < e.size(); ++k) e[k] = static_cast<uint16_t>(s.exp[k] + t.exp[k]);
      prod.push_back({std::move(e), s.coeff * t.coeff});
    }
  return Polynomial::from_terms(a.ring_, std::move(prod));
}

Polynomial operator*(const Scalar& c, const Polynomial& p) {
  Scalar v = c.convert(p.domain());
  Polynomial out(p.ring_);
  if (v.is_zero()) return out;
  out.terms_ = p.terms_;
  for (auto& t : out.terms_) t.coeff *= v;
  return out;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial acc = constant(ring_, 1L), base = *this;
  while (e) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return acc;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (!(*ring_ == *o.ring_) || terms_.size() != o.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].exp != o.terms_[i].exp || !(terms_[i].coeff == o.terms_[i].coeff)) return false;
  return true;
}

Scalar Polynomial::evaluate(const std::vector<Scalar>& point) const {
  if (point.size() != ring_->nvars()) throw AlgebraError("evaluation point has wrong length");
  Scalar acc = Scalar::zero(domain());
  for (const auto& t : terms_) {
    Scalar m = t.coeff;
    for (size_t k = 0; k < t.exp.size(); ++k)
      if (t.exp[k]) m *= point[k].convert(domain()).pow(t.exp[k]);
    acc += m;
  }
  return acc;
}

Polynomial Polynomial::derivative(size_t var) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.exp[var] == 0) continue;
    Term d = t;
    d.coeff *= Scalar(static_cast<long>(t.exp[var]), domain());
    --d.exp[var];
    if (!d.coeff.is_zero()) out.push_back(std::move(d));
  }
  // Differentiation may break the order only when terms collide; from_terms re-sorts.
  return from_terms(ring_, std::move(out));
}

Scalar Polynomial::coefficient(const Exponents& e) const {
  for (const auto& t : terms_)
    if (t.exp == e) return t.coeff;
  return Scalar::zero(domain());
}

Polynomial Polynomial::convert(const RingPtr& target) const {
  std::vector<int> map(ring_->nvars());
  for (size_t i = 0; i < ring_->nvars(); ++i) map[i] = target->index_of(ring_->vars()[i]);
  std::vector<Term> out;
  for (const auto& t : terms_) {
    Exponents e(target->nvars(), 0);
    for (size_t i = 0; i < t.exp.size(); ++i) {
      if (!t.exp[i]) continue;
      if (map[i] < 0) throw AlgebraError("variable " + ring_->vars()[i] + " missing in target ring");
      e[map[i]] = t.exp[i];
    }
    out.push_back({std::move(e), t.coeff.convert(target->domain())});
  }
  return from_terms(target, std::move(out));
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return leading().coeff.inverse() * *this;
}

Polynomial Polynomial::primitive() const {
  if (!domain().is_rational() || terms_.empty()) return monic();
  mpz_class l = 1, g = 0;
  for (const auto& t : terms_) l = lcm(l, mpz_class(t.coeff.rational().get_den()));
  for (const auto& t : terms_) g = gcd(g, mpz_class(t.coeff.rational().get_num() * l / t.coeff.rational().get_den()));
  if (leading().coeff.rational() < 0) g = -g;
  return Scalar(mpq_class(l, g)) * *this;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (size_t i = 0; i < terms_.size(); ++i) {
    const Term& t = terms_[i];
    mpq_class c = t.coeff.lift();
    bool neg = c < 0;
    if (neg) c = -c;
    if (i == 0)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    std::string mono;
    for (size_t k = 0; k < t.exp.size(); ++k) {
      if (!t.exp[k]) continue;
      if (!mono.empty()) mono += "*";
      mono += ring_->vars()[k];
      if (t.exp[k] > 1) mono += "^" + std::to_string(t.exp[k]);
    }
    if (mono.empty())
      out += c.get_str();
    else if (c == 1)
      out += mono;
    else
      out += c.get_str() + "*" + mono;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parser. Grammar (whitespace ignored):
//   expr    := ['+'|'-'] product { ('+'|'-') product }
//   product := power { '*' power }
//   power   := atom [ '^' integer ]
//   atom    := integer [ '/' integer ] | name | '(' expr ')'

namespace {

class Parser {
 public:
  Parser(std::string_view text, const RingPtr& ring) : s_(text), ring_(ring) {}

  Polynomial run() {
    Polynomial p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw AlgebraError("parse error at offset " + std::to_string(pos_) + ": " + what);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  mpz_class integer() {
    skip();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    if (pos_ < s_.size() && (s_[pos_] == '.' || s_[pos_] == 'e' || s_[pos_] == 'E'))
      fail("coefficient is not an integer or rational literal");
    return mpz_class(std::string(s_.substr(start, pos_ - start)));
  }

  Polynomial expr() {
    Polynomial acc(ring_);
    bool neg = false;
    skip();
    if (eat('-'))
      neg = true;
    else
      eat('+');
    acc = product();
    if (neg) acc = -acc;
    for (;;) {
      if (eat('+'))
        acc += product();
      else if (eat('-'))
        acc -= product();
      else
        return acc;
    }
  }

  Polynomial product() {
    Polynomial acc = power();
    while (eat('*')) acc = acc * power();
    return acc;
  }

  Polynomial power() {
    Polynomial base = atom();
    if (eat('^')) {
      mpz_class e = integer();
      if (e > 1000) fail("exponent too large");
      base = base.pow(static_cast<unsigned>(e.get_ui()));
    }
    return base;
  }

  Polynomial atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num = integer();
      mpz_class den = 1;
      if (eat('/')) {
        den = integer();
        if (den == 0) fail("zero denominator");
      }
      return Polynomial::constant(ring_, Scalar(mpq_class(num, den), ring_->domain()));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      if (ring_->index_of(name) < 0) throw AlgebraError("unknown variable '" + name + "'");
      return Polynomial::variable(ring_, name);
    }
    if (eat('(')) {
      Polynomial inner = expr();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    fail("malformed token '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  size_t pos_ = 0;
  const RingPtr& ring_;
};

}  // namespace

Polynomial parse_poly(std::string_view text, const RingPtr& ring) {
  return Parser(text, ring).run();
}

// ---------------------------------------------------------------------------

Polynomial substitute(const Polynomial& p, const std::vector<Polynomial>& images) {
  if (images.size() != p.ring()->nvars()) throw AlgebraError("substitution arity mismatch");
  if (images.empty()) throw AlgebraError("empty substitution");
  const RingPtr& target = images[0].ring();
  for (const auto& im : images)
    if (!(*im.ring() == *target)) throw AlgebraError("ring mismatch among substitution images");
  // Powers are cached per variable since catalog forms reuse small exponents.
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power_of = [&](size_t v, unsigned e) -> const Polynomial& {
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(Polynomial::constant(target, 1L));
    while (cache.size() <= e) cache.push_back(cache.back() * images[v]);
    return cache[e];
  };
  Polynomial acc(target);
  for (const auto& t : p.terms()) {
    Polynomial m = Polynomial::constant(target, t.coeff.convert(target->domain()));
    for (size_t k = 0; k < t.exp.size(); ++k)
      if (t.exp[k]) m = m * power_of(k, t.exp[k]);
    acc += m;
  }
  return acc;
}

Polynomial substitute(const Polynomial& p, const std::map<std::string, Polynomial>& assignment,
                      const RingPtr& target) {
  std::vector<Polynomial> images;
  for (size_t i = 0; i < p.ring()->nvars(); ++i) {
    const std::string& name = p.ring()->vars()[i];
    auto it = assignment.find(name);
    if (it != assignment.end()) {
      if (!(*it->second.ring() == *target)) throw AlgebraError("ring mismatch in assignment");
      images.push_back(it->second);
      continue;
    }
    bool used = std::any_of(p.terms().begin(), p.terms().end(),
                            [i](const Term& t) { return t.exp[i] != 0; });
    if (used) throw AlgebraError("assignment does not cover variable " + name);
    images.push_back(Polynomial(target));
  }
  return substitute(p, images);
}

std::vector<Polynomial> gradient(const Polynomial& p) {
  std::vector<Polynomial> g;
  for (size_t i = 0; i < p.ring()->nvars(); ++i) g.push_back(p.derivative(i));
  return g;
}

std::vector<Polynomial> ring_variables(const RingPtr& ring) {
  std::vector<Polynomial> v;
  for (size_t i = 0; i < ring->nvars(); ++i) v.push_back(Polynomial::variable(ring, i));
  return v;
}

}  // namespace thetakit
