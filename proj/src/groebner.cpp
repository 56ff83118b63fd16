// SPDX-License-Identifier: Apache-2.0
#include "thetakit/groebner.hpp"

#include <algorithm>
#include <cstring>
#include <queue>
#include <unordered_map>

namespace thetakit {

namespace {

// Exponents in bytes 0..14, total degree in byte 15. Total degree <= 127 keeps every byte
// below 128, which the subtraction-based divisibility test relies on.
struct Mono {
  uint64_t lo = 0, hi = 0;

  unsigned get(unsigned i) const {
    return i < 8 ? (lo >> (8 * i)) & 0xFF : (hi >> (8 * (i - 8))) & 0xFF;
  }
  void set(unsigned i, unsigned v) {
    uint64_t& w = i < 8 ? lo : hi;
    unsigned sh = 8 * (i & 7);
    w = (w & ~(uint64_t{0xFF} << sh)) | (uint64_t{v} << sh);
  }
  unsigned degree() const { return static_cast<unsigned>(hi >> 56); }
  bool operator==(const Mono& o) const { return lo == o.lo && hi == o.hi; }
};

constexpr uint64_t kHigh = 0x8080808080808080ULL;
constexpr unsigned kMaxVars = 15;
constexpr unsigned kMaxDegree = 127;

inline bool divides(const Mono& a, const Mono& b) {
  return (((b.lo | kHigh) - a.lo) & kHigh) == kHigh && (((b.hi | kHigh) - a.hi) & kHigh) == kHigh;
}

inline Mono mul(const Mono& a, const Mono& b) {
  if (a.degree() + b.degree() > kMaxDegree) throw AlgebraError("Groebner degree limit exceeded");
  return {a.lo + b.lo, a.hi + b.hi};
}

// Requires divides(b, a).
inline Mono quot(const Mono& a, const Mono& b) { return {a.lo - b.lo, a.hi - b.hi}; }

Mono lcm(const Mono& a, const Mono& b, unsigned n) {
  Mono m;
  unsigned d = 0;
  for (unsigned i = 0; i < n; ++i) {
    unsigned v = std::max(a.get(i), b.get(i));
    m.set(i, v);
    d += v;
  }
  if (d > kMaxDegree) throw AlgebraError("Groebner degree limit exceeded");
  m.set(15, d);
  return m;
}

inline bool coprime(const Mono& a, const Mono& b, unsigned n) {
  for (unsigned i = 0; i < n; ++i)
    if (a.get(i) && b.get(i)) return false;
  return true;
}

struct MonoHash {
  size_t operator()(const Mono& m) const {
    uint64_t h = m.lo * 0x9E3779B97F4A7C15ULL ^ (m.hi + 0x632BE59BD9B4E019ULL) * 0xC2B2AE3D27D4EB4FULL;
    return static_cast<size_t>(h ^ (h >> 29));
  }
};

class Monoid {
 public:
  Monoid(unsigned n, MonomialOrder order) : n_(n), order_(order) {}
  unsigned nvars() const { return n_; }

  // Sign of a - b.
  int cmp(const Mono& a, const Mono& b) const {
    if (order_ == MonomialOrder::GRevLex) {
      unsigned da = a.degree(), db = b.degree();
      if (da != db) return da < db ? -1 : 1;
      for (unsigned i = n_; i-- > 0;) {
        unsigned x = a.get(i), y = b.get(i);
        if (x != y) return x > y ? -1 : 1;
      }
      return 0;
    }
    for (unsigned i = 0; i < n_; ++i) {
      unsigned x = a.get(i), y = b.get(i);
      if (x != y) return x < y ? -1 : 1;
    }
    return 0;
  }

  uint64_t mask(const Mono& m) const {
    uint64_t k = 0;
    for (unsigned i = 0; i < n_; ++i) {
      unsigned e = m.get(i);
      if (e >= 1) k |= 1ULL << (4 * i);
      if (e >= 2) k |= 1ULL << (4 * i + 1);
      if (e >= 4) k |= 1ULL << (4 * i + 2);
      if (e >= 8) k |= 1ULL << (4 * i + 3);
    }
    return k;
  }

  Mono from_exponents(const Exponents& e) const {
    Mono m;
    unsigned d = 0;
    for (unsigned i = 0; i < n_; ++i) {
      m.set(i, e[i]);
      d += e[i];
    }
    if (d > kMaxDegree) throw AlgebraError("Groebner degree limit exceeded");
    m.set(15, d);
    return m;
  }

  Exponents to_exponents(const Mono& m) const {
    Exponents e(n_);
    for (unsigned i = 0; i < n_; ++i) e[i] = static_cast<uint16_t>(m.get(i));
    return e;
  }

 private:
  unsigned n_;
  MonomialOrder order_;
};

// Coefficient fields. Fp keeps residues in uint32; Q uses GMP rationals.
struct FpField {
  using T = uint32_t;
  uint32_t p;
  Domain dom;
  T zero() const { return 0; }
  T one() const { return 1; }
  bool is_zero(T a) const { return a == 0; }
  T add(T a, T b) const { return static_cast<T>((uint64_t{a} + b) % p); }
  T sub(T a, T b) const { return static_cast<T>((uint64_t{a} + p - b) % p); }
  T mul(T a, T b) const { return static_cast<T>(uint64_t{a} * b % p); }
  T neg(T a) const { return a ? p - a : 0; }
  T inv(T a) const { return mod_inverse(a, p); }
  T from(const Scalar& s) const { return s.residue(); }
  Scalar to(T a) const { return Scalar(static_cast<long>(a), dom); }
};

struct QField {
  using T = mpq_class;
  T zero() const { return 0; }
  T one() const { return 1; }
  bool is_zero(const T& a) const { return sgn(a) == 0; }
  T add(const T& a, const T& b) const { return a + b; }
  T sub(const T& a, const T& b) const { return a - b; }
  T mul(const T& a, const T& b) const { return a * b; }
  T neg(const T& a) const { return -a; }
  T inv(const T& a) const { return 1 / a; }
  T from(const Scalar& s) const { return s.rational(); }
  Scalar to(const T& a) const { return Scalar(a); }
};

template <class F>
struct GPoly {
  std::vector<Mono> mono;  // strictly decreasing
  std::vector<typename F::T> coef;
  unsigned sugar = 0;
  bool empty() const { return mono.empty(); }
};

struct Pair {
  size_t i, j;
  Mono lcm;
  unsigned sugar;
};

template <class F>
class Engine {
 public:
  Engine(const Monoid& monoid, F field) : M_(monoid), F_(std::move(field)) {}

  GPoly<F> import(const Polynomial& p) const {
    GPoly<F> g;
    for (const auto& t : p.terms()) {
      g.mono.push_back(M_.from_exponents(t.exp));
      g.coef.push_back(F_.from(t.coeff));
    }
    // Ring and engine orders agree, so terms arrive sorted.
    g.sugar = p.total_degree() < 0 ? 0 : static_cast<unsigned>(p.total_degree());
    return g;
  }

  Polynomial export_poly(const GPoly<F>& g, const RingPtr& ring) const {
    std::vector<Term> terms;
    for (size_t k = 0; k < g.mono.size(); ++k)
      terms.push_back({M_.to_exponents(g.mono[k]), F_.to(g.coef[k])});
    return Polynomial::from_terms(ring, std::move(terms));
  }

  void make_monic(GPoly<F>& g) const {
    if (g.empty() || g.coef[0] == F_.one()) return;
    auto inv = F_.inv(g.coef[0]);
    for (auto& c : g.coef) c = F_.mul(c, inv);
  }

  // Full reduction of sum_k scale_k * shift_k * inputs_k against the active reducers.
  // Reducers with index `skip` are ignored (used for interreduction).
  GPoly<F> reduce(const std::vector<std::tuple<const GPoly<F>*, Mono, typename F::T>>& inputs,
                  size_t skip = SIZE_MAX) const {
    auto heap_cmp = [this](const Mono& a, const Mono& b) { return M_.cmp(a, b) < 0; };
    std::priority_queue<Mono, std::vector<Mono>, decltype(heap_cmp)> heap(heap_cmp);
    std::unordered_map<Mono, typename F::T, MonoHash> acc;
    acc.reserve(256);
    auto add_term = [&](const Mono& m, const typename F::T& c) {
      auto [it, fresh] = acc.try_emplace(m, c);
      if (fresh)
        heap.push(m);
      else
        it->second = F_.add(it->second, c);
    };
    for (const auto& [g, shift, scale] : inputs)
      for (size_t k = 0; k < g->mono.size(); ++k) add_term(mul(g->mono[k], shift), F_.mul(g->coef[k], scale));

    GPoly<F> out;
    while (!heap.empty()) {
      Mono m = heap.top();
      heap.pop();
      auto it = acc.find(m);
      typename F::T c = it->second;
      acc.erase(it);
      if (F_.is_zero(c)) continue;
      const GPoly<F>* red = find_reducer(m, skip);
      if (!red) {
        out.mono.push_back(m);
        out.coef.push_back(c);
        continue;
      }
      Mono q = quot(m, red->mono[0]);
      auto k = F_.neg(c);
      for (size_t t = 1; t < red->mono.size(); ++t) add_term(mul(red->mono[t], q), F_.mul(red->coef[t], k));
    }
    return out;
  }

  const GPoly<F>* find_reducer(const Mono& m, size_t skip) const {
    uint64_t mk = M_.mask(m);
    for (size_t r = 0; r < active_.size(); ++r) {
      size_t idx = active_[r];
      if (idx == skip || (masks_[idx] & ~mk)) continue;
      if (divides(basis_[idx].mono[0], m)) return &basis_[idx];
    }
    return nullptr;
  }

  void insert(GPoly<F> h) {
    make_monic(h);
    size_t hi = basis_.size();
    basis_.push_back(std::move(h));
    masks_.push_back(M_.mask(basis_[hi].mono[0]));
    update(hi);
  }

  // Gebauer-Moeller update for the new element index h.
  void update(size_t h) {
    const unsigned n = M_.nvars();
    const Mono& lh = basis_[h].mono[0];
    struct Cand {
      size_t g;
      Mono lcm;
      bool coprime;
    };
    std::vector<Cand> c;
    for (size_t g : active_) {
      const Mono& lg = basis_[g].mono[0];
      c.push_back({g, lcm(lh, lg, n), coprime(lh, lg, n)});
    }
    std::vector<Cand> d;
    for (size_t a = 0; a < c.size(); ++a) {
      bool keep = c[a].coprime;
      if (!keep) {
        keep = true;
        for (size_t b = a + 1; b < c.size() && keep; ++b)
          if (divides(c[b].lcm, c[a].lcm)) keep = false;
        for (size_t b = 0; b < d.size() && keep; ++b)
          if (divides(d[b].lcm, c[a].lcm)) keep = false;
      }
      if (keep) d.push_back(c[a]);
    }
    std::vector<Pair> kept;
    for (const auto& p : pairs_) {
      if (divides(lh, p.lcm)) {
        Mono l1 = lcm(basis_[p.i].mono[0], lh, n), l2 = lcm(lh, basis_[p.j].mono[0], n);
        if (!(l1 == p.lcm) && !(l2 == p.lcm)) continue;
      }
      kept.push_back(p);
    }
    for (const auto& e : d) {
      if (e.coprime) continue;
      const GPoly<F>& ge = basis_[e.g];
      unsigned s1 = basis_[h].sugar - lh.degree(), s2 = ge.sugar - ge.mono[0].degree();
      kept.push_back({e.g, h, e.lcm, std::max(s1, s2) + e.lcm.degree()});
    }
    pairs_ = std::move(kept);
    std::vector<size_t> act;
    for (size_t g : active_)
      if (!divides(lh, basis_[g].mono[0])) act.push_back(g);
    act.push_back(h);
    active_ = std::move(act);
  }

  GPoly<F> spoly_reduced(const Pair& p) {
    const GPoly<F>& a = basis_[p.i];
    const GPoly<F>& b = basis_[p.j];
    // Drop the cancelling leading terms by feeding the tails only.
    GPoly<F> ta, tb;
    ta.mono.assign(a.mono.begin() + 1, a.mono.end());
    ta.coef.assign(a.coef.begin() + 1, a.coef.end());
    tb.mono.assign(b.mono.begin() + 1, b.mono.end());
    tb.coef.assign(b.coef.begin() + 1, b.coef.end());
    GPoly<F> r = reduce({{&ta, quot(p.lcm, a.mono[0]), F_.one()},
                         {&tb, quot(p.lcm, b.mono[0]), F_.neg(F_.one())}});
    if (!r.empty()) r.sugar = std::max(p.sugar, r.mono[0].degree());
    return r;
  }

  void run(std::vector<GPoly<F>> inputs, GroebnerStats* stats) {
    std::sort(inputs.begin(), inputs.end(), [this](const GPoly<F>& x, const GPoly<F>& y) {
      return M_.cmp(x.mono[0], y.mono[0]) < 0;
    });
    for (auto& g : inputs) {
      GPoly<F> r = reduce({{&g, Mono{}, F_.one()}});
      if (r.empty()) continue;
      r.sugar = std::max(g.sugar, r.mono[0].degree());
      insert(std::move(r));
    }
    while (!pairs_.empty()) {
      size_t best = 0;
      for (size_t k = 1; k < pairs_.size(); ++k) {
        const Pair& x = pairs_[k];
        const Pair& y = pairs_[best];
        if (x.sugar < y.sugar || (x.sugar == y.sugar && M_.cmp(x.lcm, y.lcm) < 0)) best = k;
      }
      Pair p = pairs_[best];
      pairs_[best] = pairs_.back();
      pairs_.pop_back();
      if (stats) ++stats->pairs_reduced;
      GPoly<F> r = spoly_reduced(p);
      if (r.empty()) {
        if (stats) ++stats->zero_reductions;
        continue;
      }
      insert(std::move(r));
    }
  }

  // Interreduce the active set into the reduced basis, sorted by increasing leading monomial.
  std::vector<GPoly<F>> reduced_basis() {
    std::vector<GPoly<F>> out;
    for (size_t idx : active_) {
      const GPoly<F>& g = basis_[idx];
      GPoly<F> tail;
      tail.mono.assign(g.mono.begin() + 1, g.mono.end());
      tail.coef.assign(g.coef.begin() + 1, g.coef.end());
      GPoly<F> r = reduce({{&tail, Mono{}, F_.one()}}, idx);
      GPoly<F> full;
      full.mono.push_back(g.mono[0]);
      full.coef.push_back(g.coef[0]);
      full.mono.insert(full.mono.end(), r.mono.begin(), r.mono.end());
      full.coef.insert(full.coef.end(), r.coef.begin(), r.coef.end());
      out.push_back(std::move(full));
    }
    std::sort(out.begin(), out.end(), [this](const GPoly<F>& x, const GPoly<F>& y) {
      return M_.cmp(x.mono[0], y.mono[0]) < 0;
    });
    return out;
  }

  // Loads an existing basis as reducers without pair processing.
  void load_reducers(std::vector<GPoly<F>> polys) {
    for (auto& g : polys) {
      if (g.empty()) continue;
      make_monic(g);
      masks_.push_back(M_.mask(g.mono[0]));
      active_.push_back(basis_.size());
      basis_.push_back(std::move(g));
    }
  }

  size_t pair_count() const { return pairs_.size(); }

 private:
  Monoid M_;
  F F_;
  std::vector<GPoly<F>> basis_;
  std::vector<uint64_t> masks_;
  std::vector<size_t> active_;
  std::vector<Pair> pairs_;
};

void check_limits(const RingPtr& ring) {
  if (ring->nvars() > kMaxVars) throw AlgebraError("Groebner engine supports at most 15 variables");
}

template <class F>
std::vector<Polynomial> run_engine(const std::vector<Polynomial>& gens, F field,
                                   GroebnerStats* stats) {
  const RingPtr& ring = gens[0].ring();
  Engine<F> eng(Monoid(static_cast<unsigned>(ring->nvars()), ring->order()), field);
  std::vector<GPoly<F>> in;
  for (const auto& g : gens) {
    if (!(*g.ring() == *ring)) throw AlgebraError("generators live in different rings");
    if (!g.is_zero()) in.push_back(eng.import(g));
  }
  eng.run(std::move(in), stats);
  std::vector<Polynomial> out;
  for (const auto& g : eng.reduced_basis()) out.push_back(eng.export_poly(g, ring));
  if (stats) stats->basis_size = out.size();
  return out;
}

template <class F>
Polynomial nf_engine(const Polynomial& f, const std::vector<Polynomial>& basis, F field) {
  const RingPtr& ring = f.ring();
  Engine<F> eng(Monoid(static_cast<unsigned>(ring->nvars()), ring->order()), field);
  std::vector<GPoly<F>> red;
  for (const auto& b : basis) red.push_back(eng.import(b));
  eng.load_reducers(std::move(red));
  GPoly<F> g = eng.import(f);
  return eng.export_poly(eng.reduce({{&g, Mono{}, field.one()}}), ring);
}

}  // namespace

std::vector<Polynomial> groebner_basis(const std::vector<Polynomial>& gens, GroebnerStats* stats) {
  if (gens.empty()) return {};
  const RingPtr& ring = gens[0].ring();
  check_limits(ring);
  Domain dom = ring->domain();
  if (dom.is_rational()) return run_engine(gens, QField{}, stats);
  return run_engine(gens, FpField{dom.characteristic(), dom}, stats);
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis) {
  check_limits(f.ring());
  for (const auto& b : basis)
    if (!(*b.ring() == *f.ring())) throw AlgebraError("ring mismatch in normal form");
  Domain dom = f.domain();
  if (dom.is_rational()) return nf_engine(f, basis, QField{});
  return nf_engine(f, basis, FpField{dom.characteristic(), dom});
}

bool satisfies_buchberger_criterion(const std::vector<Polynomial>& basis) {
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i + 1; j < basis.size(); ++j) {
      const Term& a = basis[i].leading();
      const Term& b = basis[j].leading();
      Exponents l(a.exp.size());
      for (size_t k = 0; k < l.size(); ++k) l[k] = std::max(a.exp[k], b.exp[k]);
      Exponents ua(l.size()), ub(l.size());
      for (size_t k = 0; k < l.size(); ++k) {
        ua[k] = static_cast<uint16_t>(l[k] - a.exp[k]);
        ub[k] = static_cast<uint16_t>(l[k] - b.exp[k]);
      }
      const RingPtr& r = basis[i].ring();
      Polynomial s = Polynomial::monomial(r, ua, b.coeff) * basis[i] -
                     Polynomial::monomial(r, ub, a.coeff) * basis[j];
      if (!normal_form(s, basis).is_zero()) return false;
    }
  return true;
}

}  // namespace thetakit
