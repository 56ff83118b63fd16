// SPDX-License-Identifier: Apache-2.0
#include "thetakit/ideal.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <json.hpp>

#include "thetakit/poly_matrix.hpp"

namespace thetakit {

namespace {

constexpr size_t kMaxHilbertVars = 16;
using E = std::array<uint16_t, kMaxHilbertVars>;
using Series = std::vector<long long>;

long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) throw AlgebraError("Hilbert numerator overflow");
  return r;
}

bool divides(const E& a, const E& b, size_t n) {
  for (size_t i = 0; i < n; ++i)
    if (a[i] > b[i]) return false;
  return true;
}

unsigned deg(const E& a, size_t n) {
  unsigned d = 0;
  for (size_t i = 0; i < n; ++i) d += a[i];
  return d;
}

std::vector<E> minimalize(std::vector<E> gens, size_t n) {
  std::sort(gens.begin(), gens.end(),
            [n](const E& a, const E& b) { return deg(a, n) < deg(b, n); });
  std::vector<E> out;
  for (const auto& g : gens) {
    bool redundant = std::any_of(out.begin(), out.end(), [&](const E& h) { return divides(h, g, n); });
    if (!redundant) out.push_back(g);
  }
  return out;
}

void add_shifted(Series& acc, const Series& s, unsigned shift) {
  if (acc.size() < s.size() + shift) acc.resize(s.size() + shift, 0);
  for (size_t k = 0; k < s.size(); ++k) acc[k + shift] = checked_add(acc[k + shift], s[k]);
}

Series mul_series(const Series& a, const Series& b) {
  Series out(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) {
      long long p;
      if (__builtin_mul_overflow(a[i], b[j], &p)) throw AlgebraError("Hilbert numerator overflow");
      out[i + j] = checked_add(out[i + j], p);
    }
  return out;
}

// Numerator of the Hilbert series of S/(gens); gens minimal.
Series hn(const std::vector<E>& gens, size_t n) {
  if (gens.empty()) return {1};
  for (const auto& g : gens)
    if (deg(g, n) == 0) return {0};
  // Pure powers of distinct variables form a regular sequence.
  std::vector<int> support_var(gens.size(), -1);
  bool all_pure = true;
  for (size_t k = 0; k < gens.size(); ++k) {
    int count = 0;
    for (size_t i = 0; i < n; ++i)
      if (gens[k][i]) {
        ++count;
        support_var[k] = static_cast<int>(i);
      }
    if (count != 1) all_pure = false;
  }
  if (all_pure) {
    Series acc = {1};
    for (const auto& g : gens) {
      Series f(deg(g, n) + 1, 0);
      f[0] = 1;
      f.back() = -1;
      acc = mul_series(acc, f);
    }
    return acc;
  }
  // Pivot x_v^e on the variable occurring in the most non-pure generators.
  std::vector<int> freq(n, 0);
  for (const auto& g : gens) {
    int count = 0;
    for (size_t i = 0; i < n; ++i) count += g[i] ? 1 : 0;
    if (count > 1)
      for (size_t i = 0; i < n; ++i)
        if (g[i]) ++freq[i];
  }
  size_t v = static_cast<size_t>(std::max_element(freq.begin(), freq.end()) - freq.begin());
  unsigned e = UINT16_MAX;
  for (const auto& g : gens) {
    int count = 0;
    for (size_t i = 0; i < n; ++i) count += g[i] ? 1 : 0;
    if (count > 1 && g[v]) e = std::min<unsigned>(e, g[v]);
  }
  E pivot{};
  pivot[v] = static_cast<uint16_t>(e);
  std::vector<E> sum = gens;
  sum.push_back(pivot);
  std::vector<E> colon;
  for (auto g : gens) {
    g[v] = static_cast<uint16_t>(g[v] > e ? g[v] - e : 0);
    colon.push_back(g);
  }
  Series acc = hn(minimalize(std::move(sum), n), n);
  add_shifted(acc, hn(minimalize(std::move(colon), n), n), e);
  return acc;
}

std::string cache_key(Domain field, MonomialOrder order) {
  return field.to_string() + (order == MonomialOrder::GRevLex ? "/grevlex" : "/lex");
}

}  // namespace

std::vector<mpz_class> hilbert_numerator(const std::vector<Exponents>& monomials, size_t nvars) {
  if (nvars > kMaxHilbertVars) throw AlgebraError("Hilbert series limited to 16 variables");
  std::vector<E> gens;
  for (const auto& m : monomials) {
    if (m.size() != nvars) throw AlgebraError("exponent length mismatch");
    E e{};
    std::copy(m.begin(), m.end(), e.begin());
    gens.push_back(e);
  }
  Series s = hn(minimalize(std::move(gens), nvars), nvars);
  while (s.size() > 1 && s.back() == 0) s.pop_back();
  std::vector<mpz_class> out;
  for (long long c : s) out.emplace_back(static_cast<long>(c));
  return out;
}

HilbertSummary summary_from_numerator(const std::vector<mpz_class>& numerator, size_t nvars) {
  HilbertSummary h;
  h.numerator = numerator;
  std::vector<mpz_class> q = numerator;
  while (q.size() > 1 && q.back() == 0) q.pop_back();
  if (q.size() == 1 && q[0] == 0) return h;  // unit ideal
  size_t c = 0;
  auto value_at_one = [](const std::vector<mpz_class>& p) {
    mpz_class s = 0;
    for (const auto& v : p) s += v;
    return s;
  };
  while (value_at_one(q) == 0) {
    // q = (1 - t) * r with r_k = q_0 + ... + q_k.
    std::vector<mpz_class> r(q.size() - 1);
    mpz_class run = 0;
    for (size_t k = 0; k + 1 < q.size(); ++k) {
      run += q[k];
      r[k] = run;
    }
    q = std::move(r);
    ++c;
  }
  if (c > nvars) throw AlgebraError("inconsistent Hilbert numerator");
  size_t d = nvars - c;
  h.proj_dimension = static_cast<int>(d) - 1;
  if (d == 0) return h;  // irrelevant ideal: empty projective scheme
  h.degree = value_at_one(q);
  // P(s) = sum_k q_k * C(s - k + d - 1, d - 1).
  std::vector<mpq_class> poly(d, 0);
  mpz_class fact = 1;
  for (size_t i = 2; i < d; ++i) fact *= static_cast<unsigned long>(i);
  for (size_t k = 0; k < q.size(); ++k) {
    if (q[k] == 0) continue;
    std::vector<mpq_class> b = {1};
    for (size_t i = 1; i < d; ++i) {
      // multiply by (s + i - k)
      mpq_class shift = static_cast<long>(i) - static_cast<long>(k);
      std::vector<mpq_class> nb(b.size() + 1, 0);
      for (size_t j = 0; j < b.size(); ++j) {
        nb[j + 1] += b[j];
        nb[j] += b[j] * shift;
      }
      b = std::move(nb);
    }
    for (size_t j = 0; j < b.size(); ++j) poly[j] += mpq_class(q[k]) * b[j] / mpq_class(fact);
  }
  h.hilbert_polynomial = poly;
  if (h.proj_dimension == 1) h.arithmetic_genus = mpz_class(1 - poly[0]);
  return h;
}

std::string HilbertSummary::to_string() const {
  std::string s = "dim " + std::to_string(proj_dimension);
  if (degree) s += ", degree " + degree->get_str();
  if (arithmetic_genus) s += ", genus " + arithmetic_genus->get_str();
  return s;
}

// ---------------------------------------------------------------------------

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  for (auto& g : generators) {
    if (!(*g.ring() == *ring_)) throw AlgebraError("generator ring mismatch");
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

Ideal Ideal::parse(RingPtr ring, const std::vector<std::string>& generators) {
  std::vector<Polynomial> g;
  for (const auto& s : generators) g.push_back(parse_poly(s, ring));
  return Ideal(ring, std::move(g));
}

bool Ideal::is_homogeneous() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Polynomial& g) { return g.is_homogeneous(); });
}

const std::vector<Polynomial>& Ideal::basis(std::optional<Domain> field,
                                            std::optional<MonomialOrder> order) const {
  Domain f = field.value_or(ring_->domain());
  MonomialOrder o = order.value_or(ring_->order());
  std::string key = cache_key(f, o);
  std::lock_guard<std::mutex> lock(cache_->mu);
  auto it = cache_->bases.find(key);
  if (it != cache_->bases.end()) return it->second;
  RingPtr target = make_ring(ring_->vars(), f, o);
  std::vector<Polynomial> g;
  for (const auto& p : gens_) g.push_back(p.convert(target));
  return cache_->bases.emplace(key, groebner_basis(g)).first->second;
}

HilbertSummary Ideal::hilbert_summary(std::optional<Domain> field) const {
  if (!is_homogeneous()) throw AlgebraError("hilbert_summary needs homogeneous generators");
  const auto& b = basis(field, MonomialOrder::GRevLex);
  std::vector<Exponents> lead;
  for (const auto& g : b) lead.push_back(g.leading().exp);
  return summary_from_numerator(hilbert_numerator(lead, ring_->nvars()), ring_->nvars());
}

bool Ideal::contains(const Polynomial& f) const {
  return normal_form(f.convert(ring_), basis()).is_zero();
}

Ideal Ideal::over(Domain field) const {
  RingPtr target = with_domain(ring_, field);
  std::vector<Polynomial> g;
  for (const auto& p : gens_) g.push_back(p.convert(target));
  return Ideal(target, std::move(g));
}

Ideal Ideal::with_generators(std::vector<Polynomial> extra) const {
  std::vector<Polynomial> g = gens_;
  for (auto& p : extra) g.push_back(std::move(p));
  return Ideal(ring_, std::move(g));
}

std::string Ideal::to_json() const {
  nlohmann::json j;
  j["ring"] = ring_->vars();
  j["field"] = ring_->domain().to_string();
  j["generators"] = nlohmann::json::array();
  for (const auto& g : gens_) j["generators"].push_back(g.to_string());
  return j.dump();
}

Ideal Ideal::from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  RingPtr ring = make_ring(j.at("ring").get<std::vector<std::string>>(),
                           Domain::parse(j.at("field").get<std::string>()));
  return parse(ring, j.at("generators").get<std::vector<std::string>>());
}

Ideal groebner_ideal(const Ideal& I, MonomialOrder order, Domain field) {
  RingPtr target = make_ring(I.ring()->vars(), field, order);
  return Ideal(target, I.basis(field, order));
}

Ideal singular_locus_ideal(const Ideal& I, int expected_codim) {
  if (expected_codim < 1) throw AlgebraError("expected codimension must be positive");
  size_t c = static_cast<size_t>(expected_codim);
  const auto& gens = I.generators();
  if (gens.size() < c) return I.with_generators({});
  PolyMatrix jm = jacobian(gens);
  std::vector<Polynomial> minors;
  for (const auto& rows : subsets(gens.size(), c))
    for (const auto& cols : subsets(I.ring()->nvars(), c)) {
      Polynomial m = determinant(jm.submatrix(rows, cols));
      if (!m.is_zero()) minors.push_back(std::move(m));
    }
  return I.with_generators(std::move(minors));
}

std::vector<std::vector<size_t>> monomial_minimal_primes(const Ideal& I) {
  size_t n = I.ring()->nvars();
  if (n > 64) throw AlgebraError("too many variables for monomial primes");
  std::vector<uint64_t> supports;
  for (const auto& g : I.generators()) {
    if (g.size() != 1) throw AlgebraError("non-monomial generator " + g.to_string());
    uint64_t s = 0;
    for (size_t i = 0; i < n; ++i)
      if (g.leading().exp[i]) s |= 1ULL << i;
    if (s == 0) return {};  // unit ideal
    supports.push_back(s);
  }
  std::vector<uint64_t> covers = {0};
  for (uint64_t s : supports) {
    std::vector<uint64_t> next;
    for (uint64_t c : covers) {
      if (c & s) {
        next.push_back(c);
        continue;
      }
      for (uint64_t bits = s; bits; bits &= bits - 1) next.push_back(c | (bits & -bits));
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    std::vector<uint64_t> minimal;
    for (uint64_t c : next) {
      bool dominated = std::any_of(next.begin(), next.end(),
                                   [c](uint64_t o) { return o != c && (o & c) == o; });
      if (!dominated) minimal.push_back(c);
    }
    covers = std::move(minimal);
  }
  std::vector<std::vector<size_t>> out;
  for (uint64_t c : covers) {
    std::vector<size_t> vars;
    for (size_t i = 0; i < n; ++i)
      if (c >> i & 1) vars.push_back(i);
    out.push_back(vars);
  }
  std::sort(out.begin(), out.end());
  return out;
}

ZeroDimResult zero_dim_degree(const Ideal& I) {
  ZeroDimResult r;
  const auto& b = I.basis(std::nullopt, MonomialOrder::GRevLex);
  size_t n = I.ring()->nvars();
  std::vector<Exponents> lead;
  for (const auto& g : b) lead.push_back(g.leading().exp);
  if (lead.size() == 1 && degree_of(lead[0]) == 0) {
    r.zero_dimensional = true;
    r.degree = 0;
    r.dimension = -1;
    return r;
  }
  std::vector<int> bound(n, -1);
  for (const auto& e : lead) {
    size_t nz = 0, var = 0;
    for (size_t i = 0; i < n; ++i)
      if (e[i]) {
        ++nz;
        var = i;
      }
    if (nz == 1 && (bound[var] < 0 || e[var] < bound[var])) bound[var] = e[var];
  }
  if (std::any_of(bound.begin(), bound.end(), [](int v) { return v < 0; })) {
    // Krull dimension of S/LT(I) equals the affine dimension for a degree-compatible order.
    auto h = summary_from_numerator(hilbert_numerator(lead, n), n);
    r.dimension = h.proj_dimension + 1;
    return r;
  }
  r.zero_dimensional = true;
  auto standard = [&](const Exponents& m) {
    return std::none_of(lead.begin(), lead.end(), [&](const Exponents& l) {
      for (size_t i = 0; i < n; ++i)
        if (l[i] > m[i]) return false;
      return true;
    });
  };
  mpz_class count = 0;
  Exponents cur(n, 0);
  std::function<void(size_t)> walk = [&](size_t v) {
    if (v == n) {
      ++count;
      return;
    }
    for (int e = 0; e < bound[v]; ++e) {
      cur[v] = static_cast<uint16_t>(e);
      // Prefixes with trailing zeros are the smallest monomials sharing this prefix.
      Exponents probe = cur;
      std::fill(probe.begin() + v + 1, probe.end(), 0);
      if (!standard(probe)) break;
      walk(v + 1);
    }
    cur[v] = 0;
  };
  walk(0);
  r.degree = count;
  return r;
}

MultiplicityResult multiplicity_at(const Polynomial& F, const ProjectivePoint& p) {
  const RingPtr& ring = F.ring();
  size_t n = ring->nvars();
  if (p.size() != n) throw AlgebraError("point dimension does not match the ring");
  auto chart = std::find_if(p.begin(), p.end(), [](const mpz_class& v) { return v != 0; });
  if (chart == p.end()) throw AlgebraError("zero vector is not a projective point");
  size_t k = static_cast<size_t>(chart - p.begin());
  std::vector<std::string> names;
  for (size_t i = 0; i < n; ++i)
    if (i != k) names.push_back(ring->vars()[i]);
  RingPtr aff = make_ring(names, ring->domain(), ring->order());
  std::vector<Polynomial> images;
  for (size_t i = 0, j = 0; i < n; ++i) {
    Polynomial c = Polynomial::constant(aff, Scalar(mpq_class(p[i]), ring->domain()));
    images.push_back(i == k ? c : c + Polynomial::variable(aff, j++));
  }
  Polynomial local = substitute(F, images);
  MultiplicityResult r;
  r.chart = k;
  int low = local.low_degree();
  r.multiplicity = low < 0 ? -1 : low;
  if (low >= 0) r.tangent_cone = local.homogeneous_part(low);
  return r;
}

size_t quadratic_form_rank(const Polynomial& q) {
  size_t n = q.ring()->nvars();
  Domain dom = q.domain();
  std::vector<std::vector<Scalar>> m(n, std::vector<Scalar>(n, Scalar::zero(dom)));
  auto g = gradient(q);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      Polynomial d = g[i].derivative(j);
      if (!d.is_zero()) m[i][j] = d.leading().coeff;
    }
  size_t rank = 0;
  for (size_t c = 0; c < n && rank < n; ++c) {
    size_t piv = rank;
    while (piv < n && m[piv][c].is_zero()) ++piv;
    if (piv == n) continue;
    std::swap(m[rank], m[piv]);
    Scalar inv = m[rank][c].inverse();
    for (size_t i = 0; i < n; ++i) {
      if (i == rank || m[i][c].is_zero()) continue;
      Scalar f = m[i][c] * inv;
      for (size_t j = 0; j < n; ++j) m[i][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace thetakit
