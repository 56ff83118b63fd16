// SPDX-License-Identifier: Apache-2.0
#include "thetakit/checks.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <random>
#include <set>
#include <thread>

#include "thetakit/arithmetic_groups.hpp"
#include "thetakit/heisenberg.hpp"
#include "thetakit/pfaffian_loci.hpp"
#include "thetakit/theta_chars.hpp"
#include "thetakit/vsp.hpp"

namespace thetakit {

using nlohmann::json;

namespace {

Domain domain_of(uint32_t prime) { return prime ? Domain::prime_field(prime) : Domain::rationals(); }

std::string pair_key(long a, long b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

std::string hilbert(const Ideal& I) { return I.hilbert_summary().to_string(); }

/// Dimension and degree only, for loci whose genus is not a claimed quantity.
std::string dim_degree(const Ideal& I) {
  auto h = I.hilbert_summary();
  std::string s = "dim " + std::to_string(h.proj_dimension);
  if (h.degree) s += ", degree " + h.degree->get_str();
  return s;
}

/// A printed term replaced by the intended one.
struct Erratum {
  const char* printed;
  const char* corrected;
};

/// {exact, errata, after_errata}; every erratum must name a term present in the printed form.
json compare_printed(const Polynomial& computed, const char* text, const std::vector<Erratum>& errata,
                     std::vector<std::string>& notes, const std::string& label) {
  const RingPtr& ring = computed.ring();
  Polynomial printed = parse_poly(text, ring);
  json out{{"exact", printed == computed}, {"errata", json::array()}};
  bool applicable = true;
  for (const auto& e : errata) {
    Polynomial bad = parse_poly(e.printed, ring), good = parse_poly(e.corrected, ring);
    const Term& t = bad.leading();
    if (bad.size() != 1 || printed.coefficient(t.exp) != t.coeff) applicable = false;
    printed = printed - bad + good;
    out["errata"].push_back(std::string(e.printed) + " -> " + e.corrected);
    std::string why = bad.total_degree() != computed.total_degree()
                          ? "degree " + std::to_string(bad.total_degree()) + " term in a degree " +
                                std::to_string(computed.total_degree()) + " form"
                          : bad == -good ? "sign" : "coefficient";
    notes.push_back("printed typo in " + label + ": " + e.printed + " should read " + e.corrected + " (" +
                    why + ")");
  }
  out["after_errata"] = applicable && printed == computed;
  return out;
}

bool is_zero_vector(const std::vector<Polynomial>& v) {
  return std::all_of(v.begin(), v.end(), [](const Polynomial& p) { return p.is_zero(); });
}

// ---------------------------------------------------------------- theta characteristics

json check_sp4_order(CheckContext&) { return static_cast<long>(sp4f2_enumerate().size()); }

json check_char_orbits(CheckContext&) {
  json out = json::array();
  auto orbits = char_orbits();
  std::sort(orbits.begin(), orbits.end(), [](auto& a, auto& b) { return a.size() > b.size(); });
  for (const auto& o : orbits) {
    std::set<int> parities;
    for (int m : o) parities.insert(arf_parity(Characteristic::from_index(m)));
    std::string label = parities.size() != 1 ? "mixed" : *parities.begin() == 1 ? "even" : "odd";
    out.push_back({{"size", o.size()}, {"parity", label}});
  }
  return out;
}

json check_char_stabilizers(CheckContext&) {
  long odd = stabilizer_order(Parity::Odd), even = stabilizer_order(Parity::Even);
  return {{"odd", odd}, {"even", even}, {"6*odd", 6 * odd}, {"10*even", 10 * even}};
}

json check_census(CheckContext&) {
  json out;
  for (auto [key, t] : {std::pair{"odd,odd", BilinearType{true, true}},
                        std::pair{"odd,even", BilinearType{true, false}},
                        std::pair{"even,even", BilinearType{false, false}}}) {
    json c = json::object();
    for (const auto& [dist, count] : census(t)) c[pair_key(dist.first, dist.second)] = count;
    out[key] = c;
  }
  return out;
}

// ---------------------------------------------------------------- Heisenberg

HeisenbergElement random_element(std::mt19937_64& rng, const PolarizationType& D) {
  long m = D.phase_modulus();
  auto r = [&](long n) { return static_cast<long>(rng() % static_cast<uint64_t>(n)); };
  return {Phase::make(r(m), m), KElement::make(r(D.d1), r(D.d2), r(D.d1), r(D.d2), D)};
}

json check_heis_rep(CheckContext& ctx) {
  json out;
  std::mt19937_64 rng(ctx.seed);
  long random_pairs = ctx.param("random_pairs");
  for (const auto& d : ctx.param("D")) {
    auto D = PolarizationType::make(d[0], d[1]);
    size_t n = static_cast<size_t>(D.order());
    bool ok = true;
    auto gens = heis_generators(D);
    for (const auto& g : gens)
      for (const auto& h : gens) {
        auto rg = schrodinger_matrix(g, D), rh = schrodinger_matrix(h, D);
        ok = ok && schrodinger_matrix(heis_mul(g, h, D), D) == rg * rh;
        Phase c;
        bool scalar = (rg * rh * rg.inverse() * rh.inverse()).is_scalar(&c);
        ok = ok && scalar && c == ed_pairing(g.k, h.k, D);
      }
    for (long t = 0; t < random_pairs; ++t) {
      auto g = random_element(rng, D), h = random_element(rng, D);
      ok = ok && schrodinger_matrix(heis_mul(g, h, D), D) ==
                     schrodinger_matrix(g, D) * schrodinger_matrix(h, D);
    }
    ok = ok && schrodinger_matrix(heis_identity(D), D) == MonomialMatrix::identity(n, D.phase_modulus());
    out[D.to_string()] = ok;
  }
  return out;
}

json check_heis_dims(CheckContext& ctx) {
  long bound = ctx.param("max_order");
  json mismatches = json::array();
  long compared = 0;
  for (long d1 = 1; d1 <= bound; ++d1)
    for (long d2 = d1; d1 * d2 <= bound; d2 += d1) {
      auto D = PolarizationType::make(d1, d2);
      ++compared;
      if (eigenspace_dims(D) != section_dims(D, Parity::Even)) mismatches.push_back(D.to_string());
    }
  json lefschetz;
  for (const auto& [key, d] : ctx.param("lefschetz").items()) {
    auto D = PolarizationType::make(d[0], d[1]);
    auto [h, n] = lefschetz_consistency(D, Parity::Even);
    lefschetz[key] = {h, n};
  }
  return {{"types_compared", compared}, {"mismatches", mismatches}, {"lefschetz", lefschetz}};
}

json check_symmetric_counts(CheckContext& ctx) {
  json out;
  for (const auto& d : ctx.param("D")) {
    auto D = PolarizationType::make(d[0], d[1]);
    auto c = symmetric_counts(2, D);
    out[D.to_string()] = {c.bundles, c.structures_per_level};
  }
  json bad = json::array();
  long bound = ctx.param("max_d2");
  for (long d1 = 1; d1 <= bound; ++d1)
    for (long d2 = d1; d2 <= bound; d2 += d1) {
      auto D = PolarizationType::make(d1, d2);
      auto c = symmetric_counts(2, D);
      if (c.bundles * c.structures_per_level != 16 || c.structures_per_level != two_torsion_count(D))
        bad.push_back(D.to_string());
    }
  out["violations"] = bad;
  return out;
}

json check_symmetric_automorphisms(CheckContext& ctx) {
  json out;
  for (const auto& d : ctx.param("D")) {
    auto D = PolarizationType::make(d[0], d[1]);
    long commuting = 0;
    for (long a1 = 0; a1 < D.d1; ++a1)
      for (long a2 = 0; a2 < D.d2; ++a2)
        for (long b1 = 0; b1 < D.d1; ++b1)
          for (long b2 = 0; b2 < D.d2; ++b2)
            if (GammaZ{KElement::make(a1, a2, b1, b2, D), D}.commutes_with_involution()) ++commuting;
    out[D.to_string()] = {commuting, two_torsion_count(D), symmetric_counts(2, D).structures_per_level};
  }
  return out;
}

// ---------------------------------------------------------------- arithmetic groups

DiagType diag_of(const json& d) { return {d[0].get<long>(), d[1].get<long>()}; }

int f2_code(const F2Matrix& m) {
  int c = 0;
  for (int k = 0; k < 16; ++k) c |= m[k / 4][k % 4] << k;
  return c;
}

F2Matrix f2_decode(int c) {
  F2Matrix m{};
  for (int k = 0; k < 16; ++k) m[k / 4][k % 4] = (c >> k) & 1;
  return m;
}

size_t generated_order(const std::vector<F2Matrix>& gens) {
  std::set<int> seen{f2_code(f2_identity())};
  std::vector<int> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int c : frontier)
      for (const auto& g : gens) {
        int p = f2_code(f2_mul(f2_decode(c), g));
        if (seen.insert(p).second) next.push_back(p);
      }
    frontier.swap(next);
  }
  return seen.size();
}

json check_igusa(CheckContext& ctx) {
  long bound = ctx.param("max_odd_d");
  json bad = json::array();
  for (long d = 1; d <= bound; d += 2)
    if (igusa_index(2 * d) != 720 * igusa_index(d)) bad.push_back(d);
  return {{"ratio_not_720", bad}, {"igusa(3)", igusa_index(3).get_str()}};
}

json check_lift(CheckContext& ctx) {
  long samples = ctx.param("samples"), generators = ctx.param("generators");
  size_t length = ctx.param("word_length");
  json out;
  for (const auto& d : ctx.param("D")) {
    DiagType D = diag_of(d);
    long dd = D.d1 * D.d2;
    long in_gamma = 0, in_level = 0, r2 = 0;
    std::vector<F2Matrix> reductions;
    for (long s = 0; s < samples; ++s) {
      uint64_t seed = ctx.seed * 1000003 + static_cast<uint64_t>(s);
      try {
        ZMatrix4 R = lift_f_D_inv(sample_congruence(dd, length, seed), D);
        if (in_gamma_D(R, D)) ++in_gamma;
        ZMatrix4 R2 = lift_f_D_inv(sample_congruence(dd * dd, length, seed), D);
        if (in_congruence(R2, SubgroupTag::GammaDD, D)) ++in_level;
        auto red = reduction_mod2_symplectic(R2);
        if (red.is_symplectic) ++r2;
        if (s < generators) reductions.push_back(red.N);
      } catch (const GroupError&) {
      }
    }
    out[pair_key(D.d1, D.d2)] = {{"in_gamma_D", in_gamma},
                                 {"in_gamma_D(D)", in_level},
                                 {"r2_symplectic", r2},
                                 {"generated", generated_order(reductions)}};
  }
  return out;
}

json to_json(const F2Matrix& m) {
  json out = json::array();
  for (const auto& row : m) out.push_back(json(row));
  return out;
}

json check_nonsurj(CheckContext& ctx) {
  std::array<std::array<long, 4>, 4> rows{};
  const json& m = ctx.param("M");
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) rows[i][j] = m[i][j];
  ZMatrix4 M = z_from(rows);
  DiagType D = diag_of(ctx.param("D"));
  auto red = reduction_mod2_symplectic(M);
  return {{"in_gamma_D", in_gamma_D(M, D)},
          {"mod2_symplectic", red.is_symplectic},
          {"form_image", to_json(red.form_image)}};
}

bool congruent_mod(const ZMatrix4& R, long m) {
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      mpz_class v = R[i][j] - (i == j ? 1 : 0);
      if (mpz_divisible_ui_p(v.get_mpz_t(), static_cast<unsigned long>(m)) == 0) return false;
    }
  return true;
}

json check_kernel(CheckContext& ctx) {
  long samples = ctx.param("samples");
  size_t length = ctx.param("word_length");
  json out;
  for (const auto& d : ctx.param("D")) {
    DiagType D = diag_of(d);
    long mismatch = 0, kernel = 0, outside = 0;
    for (long s = 0; s < samples; ++s) {
      uint64_t seed = ctx.seed * 1000003 + static_cast<uint64_t>(s);
      ZMatrix4 R = sample_level(D, s % 2 ? 2 : 1, length, seed);
      bool lhs = in_congruence(R, SubgroupTag::GammaDD, D) && congruent_mod(R, 2);
      bool rhs = in_congruence(R, SubgroupTag::GammaD2D, D);
      if (lhs != rhs) ++mismatch;
      (rhs ? kernel : outside) += 1;
    }
    out[pair_key(D.d1, D.d2)] = {{"mismatches", mismatch}, {"kernel_seen", kernel > 0}, {"outside_seen", outside > 0}};
  }
  return out;
}

json check_nesting(CheckContext& ctx) {
  long samples = ctx.param("samples");
  size_t length = ctx.param("word_length");
  json out;
  using T = SubgroupTag;
  for (const auto& d : ctx.param("D")) {
    DiagType D = diag_of(d);
    long violations = 0, minus_only = 0, plus_only = 0;
    for (long s = 0; s < samples; ++s) {
      uint64_t seed = ctx.seed * 1000003 + static_cast<uint64_t>(s);
      ZMatrix4 R = sample_level(D, s % 3 ? 1 : 2, length, seed);
      bool g = in_congruence(R, T::GammaD, D), dd = in_congruence(R, T::GammaDD, D);
      bool d2d = in_congruence(R, T::GammaD2D, D);
      bool mi = in_congruence(R, T::GammaMinus, D), pl = in_congruence(R, T::GammaPlus, D);
      if ((d2d && !(mi && pl)) || (mi && !dd) || (pl && !dd) || (dd && !g)) ++violations;
      if (mi && !d2d) ++minus_only;
      if (pl && !d2d) ++plus_only;
    }
    out[pair_key(D.d1, D.d2)] = {{"violations", violations},
                                 {"strict_minus_seen", minus_only > 0},
                                 {"strict_plus_seen", plus_only > 0}};
  }
  long disagree = 0;
  for (long s = 0; s < samples; ++s) {
    ZMatrix4 R = sample_congruence(s % 2 ? 2 : 1, length, ctx.seed * 1000003 + static_cast<uint64_t>(s));
    if (in_congruence(R, T::Gamma24, {2, 2}) != in_congruence(R, T::GammaEvenSym, {2, 2})) ++disagree;
  }
  out["Gamma24_vs_EvenSym(2,2)"] = disagree;
  return out;
}

// ---------------------------------------------------------------- pfaffian loci

json check_d9_steinerian(CheckContext& ctx) {
  PolyMatrix A = restricted_Rd(4);
  auto y = kernel_pfaffians(A);
  json out;
  json degrees = json::array();
  bool homogeneous = true;
  for (const auto& c : y) {
    degrees.push_back(c.total_degree());
    homogeneous = homogeneous && c.is_homogeneous();
  }
  out["degrees"] = degrees;
  out["homogeneous"] = homogeneous;
  out["y0+y3"] = (y[0] + y[3]).to_string();
  out["A*y"] = is_zero_vector(A.apply(y)) ? "0" : "nonzero";
  const std::map<int, std::vector<Erratum>> errata{{1, {{"x1*x3^2", "x1*x2^3"}}},
                                                   {4, {{"-x3^2*x4", "-x2^3*x4"}}}};
  for (int i = 0; i < 5; ++i) {
    auto it = errata.find(i);
    out["y" + std::to_string(i)] = compare_printed(y[i], printed::d9_y[i], it == errata.end() ? std::vector<Erratum>{} : it->second,
                                                   ctx.notes, "y" + std::to_string(i));
  }
  return out;
}

json check_d9_fiber(CheckContext& ctx) {
  long seeds = ctx.param("seeds");
  return ctx.two_prime([&](uint32_t p) {
    json degrees = json::array();
    for (long k = 0; k < seeds; ++k) {
      auto fiber = steinerian_fiber(ctx.seed + static_cast<uint64_t>(k), p);
      auto r = zero_dim_degree(fiber.ideal);
      degrees.push_back(r.zero_dimensional ? json(r.degree.get_si()) : json("positive-dimensional"));
    }
    return degrees;
  });
}

json check_d11(CheckContext& ctx) {
  PolyMatrix A = restricted_Rd(5);
  Polynomial pf = pfaffian(A);
  json out{{"pfaffian_degree", pf.total_degree()}, {"det_equals_pf_squared", determinant(A) == pf * pf}};
  json h = ctx.two_prime([&](uint32_t p) {
    auto recs = catalog("d11", domain_of(p));
    return json{{"sextic", hilbert(find_record(recs, "sextic").ideal)},
                {"D1", hilbert(find_record(recs, "D1").ideal)}};
  });
  out.update(h);
  return out;
}

json check_d13(CheckContext& ctx) {
  auto k = kernel_pfaffians(restricted_Rd(6));
  json out;
  out["f1"] = compare_printed(k[6], printed::d13_f[0], {}, ctx.notes, "f1");
  // The printed forms are the unsigned complementary pfaffians.
  out["f2"] = compare_printed(-k[5], printed::d13_f[1], {{"-x2*x4^2*x5", "-x2*x4^4*x5"}}, ctx.notes, "f2");
  out["f3"] = compare_printed(k[4], printed::d13_f[2], {}, ctx.notes, "f3");
  out.update(ctx.two_prime([&](uint32_t p) {
    auto recs = catalog("d13", domain_of(p));
    return json{{"D2-three", hilbert(find_record(recs, "D2-three").ideal)},
                {"D2-full", hilbert(find_record(recs, "D2-full").ideal)}};
  }));
  return out;
}

json check_d12_pfaffian(CheckContext& ctx) {
  return compare_printed(d12_pfaffian(), printed::d12_P, {}, ctx.notes, "P");
}

json check_d12_segre(CheckContext&) {
  json out;
  for (const auto& r : segre_suite()) out[r.id] = r.pass ? json("pass") : json({{"expected", r.expected}, {"computed", r.computed}});
  return out;
}

json check_d8(CheckContext& ctx) {
  json out;
  RingPtr yr = make_ring({"y1", "y2", "y3"});
  RingPtr wr = make_ring({"w0", "w1", "w2"});
  std::vector<Polynomial> w;
  for (size_t k = 0; k < 3; ++k) w.push_back(parse_poly(printed::d8_quotient_map[k], yr));
  Polynomial pull = substitute(parse_poly(printed::d8_delta, wr), w);
  out["pullback_matches"] = pull == parse_poly(printed::d8_delta_pullback, yr);
  // The fibre over y = [0:0:1] against the catalogued monomial ideal.
  auto q = d8_quadrics();
  std::vector<Polynomial> images;
  RingPtr xr = ambient_ring(8);
  for (size_t i = 0; i < 8; ++i) images.push_back(Polynomial::variable(xr, i));
  images.push_back(Polynomial(xr));
  images.push_back(Polynomial(xr));
  images.push_back(Polynomial::constant(xr, 1L));
  auto recs = catalog("d8");
  const Ideal& fibre = find_record(recs, "degeneration").ideal;
  bool same = true;
  for (size_t k = 0; k < 4; ++k) same = same && substitute(q[k], images) == fibre.generators()[k];
  out["fibre_matches"] = same;
  auto primes = monomial_minimal_primes(fibre);
  bool shape = true;
  for (const auto& p : primes) {
    std::set<size_t> pairs;
    for (size_t v : p) pairs.insert(v % 4);
    shape = shape && p.size() == 4 && pairs.size() == 4;
  }
  out["minimal_primes"] = primes.size();
  out["one_variable_per_pair"] = shape;
  out.update(ctx.two_prime([&](uint32_t p) {
    auto recs = catalog("d8", domain_of(p));
    const Ideal& delta = find_record(recs, "delta-pullback").ideal;
    return json{{"delta_prime", hilbert(delta)},
                {"delta_prime_singular", hilbert(singular_locus_ideal(delta, 1))},
                {"fibre", hilbert(find_record(recs, "degeneration").ideal)}};
  }));
  return out;
}

json check_d10(CheckContext&) {
  PolyMatrix t = restricted_diagonal_Md(5);
  return {{"size", t.rows()}, {"antisymmetric", t.is_antisymmetric()}, {"determinant", determinant(t).to_string()}};
}

json check_d14(CheckContext& ctx) {
  json out;
  Polynomial f = d14_f();
  out["f"] = compare_printed(f, printed::d14_f, {{"-x1*x3*x4^2", "x1*x3*x4^2"}, {"x1*x2*x6", "x1^2*x2*x6"}},
                             ctx.notes, "f");
  Polynomial g2 = d14_g_times_two();
  out["g"] = compare_printed(Scalar(mpq_class(1, 2)) * g2, printed::d14_g, {}, ctx.notes, "g");
  ctx.notes.push_back("with the printed sign of x1*x3*x4^2 the singular locus has degree 8, not 24");
  out.update(ctx.two_prime([&](uint32_t p) {
    Domain dom = domain_of(p);
    auto recs = catalog("d14", dom);
    // The printed sign on x1*x3*x4^2 with only the degree typo repaired.
    Polynomial fp = parse_poly(printed::d14_f, d14_f(dom).ring()) -
                    parse_poly("x1*x2*x6", d14_f(dom).ring()) + parse_poly("x1^2*x2*x6", d14_f(dom).ring());
    const Ideal& fg = find_record(recs, "fg").ideal;
    Ideal printed_sign(fg.ring(), {fp, fg.generators()[1]});
    return json{{"fg", dim_degree(fg)},
                {"fg-singular", dim_degree(find_record(recs, "fg-singular").ideal)},
                {"printed-sign-singular", dim_degree(singular_locus_ideal(printed_sign, 2))}};
  }));
  return out;
}

json check_d16(CheckContext& ctx) {
  return ctx.two_prime([&](uint32_t p) {
    auto recs = catalog("d16", domain_of(p));
    const Ideal& I = find_record(recs, "pfaffians4").ideal;
    return json{{"variables", I.ring()->nvars()}, {"pfaffians4", hilbert(I)}};
  });
}

// ---------------------------------------------------------------- apolarity

Polynomial random_linear(std::mt19937_64& rng, const RingPtr& r, long bound) {
  Polynomial l(r);
  for (size_t i = 0; i < r->nvars(); ++i) {
    long c = static_cast<long>(rng() % static_cast<uint64_t>(2 * bound + 1)) - bound;
    l += Scalar(c) * Polynomial::variable(r, i);
  }
  return l;
}

json check_catalecticant(CheckContext& ctx) {
  RingPtr r = make_ring({"x0", "x1", "x2"});
  std::mt19937_64 rng(ctx.seed);
  long rank5 = ctx.param("rank5_samples"), generic = ctx.param("generic_samples");
  long zero = 0, nonzero = 0;
  for (long s = 0; s < rank5; ++s) {
    Polynomial F(r);
    for (int k = 0; k < 5; ++k) F += random_linear(rng, r, 5).pow(4);
    if (rational_determinant(catalecticant(F)) == 0) ++zero;
  }
  for (long s = 0; s < generic; ++s) {
    Polynomial F(r);
    for (int a = 0; a <= 4; ++a)
      for (int b = 0; a + b <= 4; ++b) {
        long c = static_cast<long>(rng() % 19) - 9;
        F += Scalar(c) * Polynomial::monomial(r, {static_cast<uint16_t>(a), static_cast<uint16_t>(b),
                                                  static_cast<uint16_t>(4 - a - b)}, Scalar(1L));
      }
    if (rational_determinant(catalecticant(F)) != 0) ++nonzero;
  }
  return {{"rank5_det_zero", zero},
          {"generic_det_nonzero", nonzero},
          {"rank(x0^4)", rational_rank(catalecticant(Polynomial::variable(r, 0).pow(4)))}};
}

json check_vsp_dim(CheckContext& ctx) {
  json out;
  for (const auto& c : ctx.param("cases")) {
    auto v = vsp_dim(c[0], c[1], c[2]);
    out[c.dump()] = v.admissible ? json(v.value) : json("inadmissible");
  }
  return out;
}

json check_two_conics(CheckContext& ctx) {
  auto rec = vsp_ord_example();
  ctx.notes.push_back("segre identification " + rec.segre_substitution);
  // No rational rank <= 2 member leaves reducibility undecided rather than refuted.
  if (rec.determinant_matches && rec.segre_matches && !rec.certificate) ctx.inconclusive = true;
  json out{{"determinant", rec.determinant_matches}, {"segre", rec.segre_matches}, {"certified", rec.certified()}};
  if (rec.certificate)
    out["certificate_rank"] = rec.certificate_rank;
  return out;
}

// ---------------------------------------------------------------- properties

Polynomial random_poly(std::mt19937_64& rng, const RingPtr& r, int degree, int terms, bool homogeneous) {
  Polynomial p(r);
  size_t n = r->nvars();
  for (int t = 0; t < terms; ++t) {
    Exponents e(n, 0);
    int d = homogeneous ? degree : static_cast<int>(rng() % static_cast<uint64_t>(degree + 1));
    for (int k = 0; k < d; ++k) ++e[rng() % n];
    long c = static_cast<long>(rng() % 21) - 10;
    p += Polynomial::monomial(r, e, Scalar(mpq_class(c, static_cast<long>(rng() % 3) + 1)));
  }
  return p;
}

json check_pfaffian_det(CheckContext& ctx) {
  std::mt19937_64 rng(ctx.seed);
  RingPtr r = make_ring({"a", "b", "c"});
  long trials = ctx.param("trials_per_size"), max_size = ctx.param("max_size");
  json failures = json::array();
  long run = 0;
  for (long n = 2; n <= max_size; n += 2)
    for (long t = 0; t < trials; ++t, ++run) {
      PolyMatrix m(r, static_cast<size_t>(n), static_cast<size_t>(n));
      for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = i + 1; j < m.cols(); ++j) {
          m.at(i, j) = random_poly(rng, r, 1, 2, true);
          m.at(j, i) = -m.at(i, j);
        }
      Polynomial pf = pfaffian(m);
      if (pf * pf != determinant(m)) failures.push_back(n);
    }
  return {{"trials", run}, {"failures", failures}};
}

json check_redundant(CheckContext& ctx) {
  return ctx.two_prime([&](uint32_t p) {
    std::mt19937_64 rng(ctx.seed);
    json mismatches = json::array();
    long records = 0;
    for (const auto& c : ctx.param("cases")) {
      for (const auto& rec : catalog(c.get<std::string>(), domain_of(p))) {
        const auto& gens = rec.ideal.generators();
        if (gens.empty()) continue;
        ++records;
        std::vector<Polynomial> extra;
        for (int k = 0; k < 3; ++k) {
          const Polynomial& a = gens[rng() % gens.size()];
          Polynomial e = Polynomial::variable(a.ring(), rng() % a.ring()->nvars()) * a;
          for (const auto& b : gens)
            if (b.total_degree() == e.total_degree() && rng() % 2)
              e += Scalar(static_cast<long>(rng() % 7) + 1, a.domain()) * b;
          extra.push_back(e);
        }
        if (!rec.ideal.hilbert_summary().same_scheme_data(rec.ideal.with_generators(extra).hilbert_summary()))
          mismatches.push_back(c.get<std::string>() + "." + rec.name);
      }
    }
    return json{{"records", records}, {"mismatches", mismatches}};
  });
}

json check_euler(CheckContext& ctx) {
  std::mt19937_64 rng(ctx.seed);
  RingPtr r = make_ring(indexed_names("x", 0, 4));
  long trials = ctx.param("trials"), failures = 0;
  for (long t = 0; t < trials; ++t) {
    int deg = static_cast<int>(rng() % 7);
    Polynomial f = random_poly(rng, r, deg, 8, true);
    Polynomial lhs(r);
    for (size_t i = 0; i < r->nvars(); ++i) lhs += Polynomial::variable(r, i) * f.derivative(i);
    if (lhs != Scalar(static_cast<long>(deg)) * f) ++failures;
  }
  return {{"trials", trials}, {"failures", failures}};
}

json check_roundtrip(CheckContext& ctx) {
  std::mt19937_64 rng(ctx.seed);
  long trials = ctx.param("trials"), failures = 0;
  for (long t = 0; t < trials; ++t) {
    Domain dom = t % 2 ? Domain::prime_field(kDefaultPrimes[0]) : Domain::rationals();
    RingPtr r = make_ring(indexed_names("x", 0, 3), dom);
    Polynomial p = random_poly(rng, r, 5, 6, false).convert(r);
    if (parse_poly(p.to_string(), r) != p) ++failures;
    Ideal I(r, {p, random_poly(rng, r, 3, 4, false).convert(r)});
    Ideal J = Ideal::from_json(I.to_json());
    if (J.generators() != I.generators() || !(*J.ring() == *I.ring())) ++failures;
  }
  return {{"trials", trials}, {"failures", failures}};
}

json D_list(std::initializer_list<std::pair<long, long>> ds) {
  json out = json::array();
  for (auto [a, b] : ds) out.push_back({a, b});
  return out;
}

std::vector<CheckDescriptor> build_registry() {
  using F = FieldRequirement;
  auto exact = [&] { return json{{"exact", true}, {"errata", json::array()}, {"after_errata", true}}; };
  auto typo = [&](std::vector<std::string> e) {
    return json{{"exact", false}, {"errata", e}, {"after_errata", true}};
  };
  json census_expected{{"odd,odd", {{"(10,6)", 10}, {"(6,10)", 6}}},
                       {"odd,even", {{"(12,4)", 3}, {"(4,12)", 1}, {"(8,8)", 12}}},
                       {"even,even", {{"(16,0)", 1}, {"(8,8)", 15}}}};
  json heis_D = D_list({{1, 5}, {1, 7}, {1, 8}, {1, 12}, {2, 2}, {2, 4}});
  json heis_expected;
  for (const auto& d : heis_D) heis_expected[pair_key(d[0], d[1])] = true;
  json lift_D = D_list({{1, 3}, {3, 3}, {1, 7}, {3, 9}});
  json lift_expected, kernel_expected, nesting_expected;
  for (const auto& d : lift_D) {
    std::string k = pair_key(d[0], d[1]);
    lift_expected[k] = {{"in_gamma_D", 500}, {"in_gamma_D(D)", 500}, {"r2_symplectic", 500}, {"generated", 720}};
    kernel_expected[k] = {{"mismatches", 0}, {"kernel_seen", true}, {"outside_seen", true}};
    nesting_expected[k] = {{"violations", 0}, {"strict_minus_seen", true}, {"strict_plus_seen", true}};
  }
  nesting_expected["Gamma24_vs_EvenSym(2,2)"] = 0;
  json segre_expected;
  for (const char* id : {"tangent-hyperplane", "smooth", "section-H4", "hessian", "triple-point",
                         "fourth-point", "tangent-section"})
    segre_expected[id] = "pass";

  std::vector<CheckDescriptor> r{
      {"sp4.order", "the symplectic group of F_2^4 has order 720", "theta-chars", json::object(), 720, F::None,
       check_sp4_order},
      {"chars.orbits", "Sp4(F_2) has two orbits on characteristics, separated by parity", "theta-chars",
       json::object(), json::array({{{"size", 10}, {"parity", "even"}}, {{"size", 6}, {"parity", "odd"}}}),
       F::None, check_char_orbits},
      {"chars.stabilizers", "O4- and O4+ have orders 120 and 72, indices 6 and 10", "theta-chars",
       json::object(), {{"odd", 120}, {"even", 72}, {"6*odd", 720}, {"10*even", 720}}, F::None,
       check_char_stabilizers},
      {"chars.census", "value distributions of theta characteristics per parity type", "theta-chars",
       json::object(), census_expected, F::None, check_census},
      {"heis.rep", "Schroedinger representation of H(D) with commutator e^D", "heisenberg",
       {{"D", heis_D}, {"random_pairs", 50}}, heis_expected, F::None, check_heis_rep},
      {"heis.dims", "eigenspaces of the involution match h0(L)^+ and h0(L)^-", "heisenberg",
       {{"max_order", 16}, {"lefschetz", {{"odd,odd", {1, 5}}, {"odd,even", {1, 8}}, {"even,even", {2, 2}}}}},
       {{"types_compared", 22},
        {"mismatches", json::array()},
        {"lefschetz", {{"odd,odd", {1, 1}}, {"odd,even", {2, 2}}, {"even,even", {4, 4}}}}},
       F::None, check_heis_dims},
      {"heis.symmetric-automorphisms", "gamma_z commutes with the involution iff z is 2-torsion",
       "heisenberg", {{"D", D_list({{1, 5}, {1, 8}, {2, 2}, {2, 4}, {1, 12}})}},
       {{"(1,5)", {1, 1, 1}}, {"(1,8)", {4, 4, 4}}, {"(2,2)", {16, 16, 16}}, {"(2,4)", {16, 16, 16}},
        {"(1,12)", {4, 4, 4}}},
       F::None, check_symmetric_automorphisms},
      {"counts.symmetric", "2^{2s} symmetric bundles and 2^{2(2-s)} symmetric structures", "heisenberg",
       {{"D", D_list({{1, 7}, {2, 2}, {1, 8}})}, {"max_d2", 4}},
       {{"(1,7)", {16, 1}}, {"(2,2)", {1, 16}}, {"(1,8)", {4, 4}}, {"violations", json::array()}}, F::None,
       check_symmetric_counts},
      {"groups.igusa", "index of the principal congruence subgroup of level h", "arithmetic-groups",
       {{"max_odd_d", 99}}, {{"ratio_not_720", json::array()}, {"igusa(3)", "51840"}}, F::None, check_igusa},
      {"groups.lift", "f_D^{-1} lifts level d and d^2 elements into Gamma_D and Gamma_D(D)",
       "arithmetic-groups", {{"D", lift_D}, {"samples", 500}, {"generators", 200}, {"word_length", 12}},
       lift_expected, F::None, check_lift},
      {"groups.nonsurj", "for D=(1,2) reduction mod 2 leaves Sp4(F_2)", "arithmetic-groups",
       {{"D", {1, 2}}, {"M", {{1, 1, 1, 1}, {2, 1, 2, 1}, {2, 0, 1, 1}, {0, 2, 2, 1}}}},
       {{"in_gamma_D", true},
        {"mod2_symplectic", false},
        {"form_image", {{0, 0, 0, 1}, {0, 0, 1, 1}, {0, 1, 0, 0}, {1, 1, 0, 0}}}},
       F::None, check_nonsurj},
      {"groups.kernel", "kernel of reduction mod 2 on Gamma_D(D) is Gamma_D(2D)", "arithmetic-groups",
       {{"D", lift_D}, {"samples", 400}, {"word_length", 8}}, kernel_expected, F::None, check_kernel},
      {"groups.nesting", "Gamma_D(2D) inside Gamma^-/Gamma^+ inside Gamma_D(D) inside Gamma_D",
       "arithmetic-groups", {{"D", lift_D}, {"samples", 400}, {"word_length", 8}}, nesting_expected, F::None,
       check_nesting},
      {"d9.steinerian", "kernel map of the restricted R_4 by 4x4 pfaffians", "pfaffian-loci", json::object(),
       {{"degrees", {4, 4, 4, 4, 4}},
        {"homogeneous", true},
        {"y0+y3", "0"},
        {"A*y", "0"},
        {"y0", exact()},
        {"y1", typo({"x1*x3^2 -> x1*x2^3"})},
        {"y2", exact()},
        {"y3", exact()},
        {"y4", typo({"-x3^2*x4 -> -x2^3*x4"})}},
       F::Rational, check_d9_steinerian},
      {"d9.fiber-degree", "the Steinerian map is dominant of degree 6", "pfaffian-loci", {{"seeds", 3}},
       {6, 6, 6}, F::Modular, check_d9_fiber},
      {"d10.trivial", "the restricted M_5 never has maximal rank", "pfaffian-loci", json::object(),
       {{"size", 5}, {"antisymmetric", true}, {"determinant", "0"}}, F::Rational, check_d10},
      {"d11.sextic", "sextic pfaffian 3-fold and the degree 20 genus 26 curve D1", "pfaffian-loci",
       json::object(),
       {{"pfaffian_degree", 6},
        {"det_equals_pf_squared", true},
        {"sextic", "dim 3, degree 6"},
        {"D1", "dim 1, degree 20, genus 26"}},
       F::Either, check_d11},
      {"d12.pfaffian", "the quartic P as a pfaffian of the restricted M_6", "pfaffian-loci", json::object(),
       exact(), F::Rational, check_d12_pfaffian},
      {"d12.segre", "the quartic 3-fold X: tangent sections, Hessian, fourth point", "vsp", json::object(),
       segre_expected, F::Rational, check_d12_segre},
      {"d13.degree21", "D2 is a 3-fold of degree 21 cut by three pfaffians", "pfaffian-loci",
       json::object(),
       {{"f1", exact()},
        {"f2", typo({"-x2*x4^2*x5 -> -x2*x4^4*x5"})},
        {"f3", exact()},
        {"D2-three", "dim 3, degree 21"},
        {"D2-full", "dim 3, degree 21"}},
       F::Either, check_d13},
      {"d14.suite", "the quartics f and g cut a 3-fold of degree 16 singular along a degree 24 curve",
       "pfaffian-loci", json::object(),
       {{"f", typo({"-x1*x3*x4^2 -> x1*x3*x4^2", "x1*x2*x6 -> x1^2*x2*x6"})},
        {"g", exact()},
        {"fg", "dim 3, degree 16"},
        {"fg-singular", "dim 1, degree 24"},
        {"printed-sign-singular", "dim 1, degree 8"}},
       F::Either, check_d14},
      {"d16.degree40", "4x4 pfaffians of the restricted M_8: 3-fold of degree 40", "pfaffian-loci",
       json::object(), {{"variables", 7}, {"pfaffians4", "dim 3, degree 40"}}, F::Either, check_d16},
      {"d8.suite", "the d=8 discriminant octic and the 16 linear spaces over y=[0:0:1]", "pfaffian-loci",
       json::object(),
       {{"pullback_matches", true},
        {"fibre_matches", true},
        {"minimal_primes", 16},
        {"one_variable_per_pair", true},
        {"delta_prime", "dim 1, degree 8, genus 21"},
        {"delta_prime_singular", "dim -1"},
        {"fibre", "dim 3, degree 16"}},
       F::Either, check_d8},
      {"vsp.catalecticant", "the catalecticant determinant cuts the 5-secant variety", "vsp",
       {{"rank5_samples", 10}, {"generic_samples", 20}},
       {{"rank5_det_zero", 10}, {"generic_det_nonzero", 20}, {"rank(x0^4)", 1}}, F::Rational,
       check_catalecticant},
      {"vsp.dim", "expected dimension h(n+1) - N of VSP", "vsp", {{"cases", {{2, 4, 6}, {1, 8, 5}}}},
       {{"[2,4,6]", 3}, {"[1,8,5]", 1}}, F::None, check_vsp_dim},
      {"vsp.two-conics", "two conics: determinant, Segre section and a rank 2 pencil member", "vsp",
       json::object(), {{"determinant", true}, {"segre", true}, {"certified", true}, {"certificate_rank", 2}},
       F::Rational, check_two_conics},
      {"prop.pfaffian-det", "pf(A)^2 = det(A) for antisymmetric A", "algebra-core",
       {{"max_size", 8}, {"trials_per_size", 3}}, {{"trials", 12}, {"failures", json::array()}},
       F::Rational, check_pfaffian_det},
      {"prop.redundant-generators", "Hilbert data ignore redundant generators", "groebner",
       {{"cases", {"d8", "d9", "d10", "d11", "d12", "d13", "d14", "d16"}}},
       {{"records", 12}, {"mismatches", json::array()}}, F::Either, check_redundant},
      {"prop.euler", "Euler identity for homogeneous forms", "algebra-core", {{"trials", 50}},
       {{"trials", 50}, {"failures", 0}}, F::Rational, check_euler},
      {"prop.roundtrip", "parse and print round trips for polynomials and ideals", "algebra-core",
       {{"trials", 40}}, {{"trials", 40}, {"failures", 0}}, F::Rational, check_roundtrip},
  };
  std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  return r;
}

bool wants_rational(const CheckDescriptor& d, const CheckOptions& o) {
  switch (d.field) {
    case FieldRequirement::None:
      if (o.prime || o.field) throw CheckError(d.id + " takes no --prime or --field option");
      return false;
    case FieldRequirement::Rational:
      if (o.prime || (o.field && *o.field != "Q"))
        throw CheckError(d.id + " runs over Q only; --prime and --field Fp are not accepted");
      return true;
    case FieldRequirement::Modular:
      if (o.field && *o.field != "Fp") throw CheckError(d.id + " runs over F_p only");
      return false;
    case FieldRequirement::Either:
      if (o.field && *o.field == "Q" && o.prime) throw CheckError("--prime conflicts with --field Q");
      return o.field && *o.field == "Q";
  }
  return false;
}

}  // namespace

std::string to_string(FieldRequirement f) {
  switch (f) {
    case FieldRequirement::None: return "none";
    case FieldRequirement::Rational: return "Q";
    case FieldRequirement::Modular: return "Fp";
    case FieldRequirement::Either: return "Q|Fp";
  }
  return "?";
}

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

json CheckReport::to_json() const {
  return {{"id", id},           {"status", to_string(status)}, {"expected", expected},
          {"computed", computed}, {"parameters", parameters},  {"field", field},
          {"primes", primes},   {"seed", seed},               {"runtime_ms", runtime_ms},
          {"notes", notes}};
}

json CheckContext::two_prime(const std::function<json(uint32_t)>& f) {
  if (rational) return f(0);
  json a = f(primes[0]), b = f(primes[1]);
  if (a == b) return a;
  uint32_t third = kTiebreakPrime;
  while (third == primes[0] || third == primes[1]) third += 2;
  while (!is_prime(third)) third += 2;
  primes.push_back(third);
  json c = f(third);
  notes.push_back("primes " + std::to_string(primes[0]) + " and " + std::to_string(primes[1]) + " disagree");
  if (c == a || c == b) return c;
  inconclusive = true;
  return {{"disagreement", {a, b, c}}};
}

const std::vector<CheckDescriptor>& list_checks() {
  static const std::vector<CheckDescriptor> registry = build_registry();
  return registry;
}

const CheckDescriptor& find_check(const std::string& id) {
  for (const auto& d : list_checks())
    if (d.id == id) return d;
  throw CheckError("unknown check id '" + id + "'");
}

CheckReport run_check(const std::string& id, const CheckOptions& options) {
  return run_check(find_check(id), options);
}

CheckReport run_check(const CheckDescriptor& d, const CheckOptions& options) {
  if (options.prime && (*options.prime >= (1ULL << 31) || !is_prime(*options.prime) || *options.prime < 3))
    throw CheckError(std::to_string(*options.prime) + " is not an odd prime below 2^31");
  if (options.field && *options.field != "Q" && *options.field != "Fp")
    throw CheckError("field must be Q or Fp");
  CheckContext ctx{d, false, {}, 1, {}, false};
  ctx.rational = wants_rational(d, options);
  ctx.seed = options.seed;
  if (!ctx.rational && d.field != FieldRequirement::None) {
    if (options.prime) {
      uint32_t p = static_cast<uint32_t>(*options.prime);
      ctx.primes = {p, p == kDefaultPrimes[0] ? kDefaultPrimes[1] : kDefaultPrimes[0]};
    } else {
      ctx.primes = {kDefaultPrimes[0], kDefaultPrimes[1]};
    }
  }
  CheckReport rep;
  rep.id = d.id;
  rep.expected = d.expected;
  rep.parameters = d.parameters;
  rep.field = d.field == FieldRequirement::None ? "none" : ctx.rational ? "Q" : "Fp";
  rep.seed = options.seed;
  auto t0 = std::chrono::steady_clock::now();
  try {
    rep.computed = d.run(ctx);
    rep.status = ctx.inconclusive ? CheckStatus::Inconclusive
                 : rep.computed == d.expected ? CheckStatus::Pass
                                              : CheckStatus::Fail;
  } catch (const std::exception& e) {
    rep.computed = {{"error", e.what()}};
    rep.status = CheckStatus::Fail;
  }
  rep.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  rep.primes = ctx.primes;
  rep.notes = ctx.notes;
  return rep;
}

json RunSummary::to_json(const CheckOptions& options) const {
  json checks = json::array();
  for (const auto& r : reports) checks.push_back(r.to_json());
  std::vector<uint32_t> primes;
  if (options.prime)
    primes = {static_cast<uint32_t>(*options.prime)};
  else
    primes = {kDefaultPrimes[0], kDefaultPrimes[1]};
  return {{"version", 1},
          {"options", {{"primes", primes}, {"seed", options.seed}}},
          {"checks", checks},
          {"summary", {{"pass", pass}, {"fail", fail}, {"inconclusive", inconclusive}}}};
}

RunSummary run_all(const std::vector<CheckDescriptor>& checks, const CheckOptions& options, unsigned workers) {
  RunSummary s;
  s.reports.resize(checks.size());
  std::atomic<size_t> next{0};
  auto work = [&] {
    for (size_t i; (i = next.fetch_add(1)) < checks.size();) {
      CheckOptions o = options;
      // Options a check cannot take are dropped rather than failing the batch.
      if (checks[i].field == FieldRequirement::None || checks[i].field == FieldRequirement::Rational) {
        o.prime.reset();
        o.field.reset();
      }
      if (checks[i].field == FieldRequirement::Modular) o.field.reset();
      s.reports[i] = run_check(checks[i], o);
    }
  };
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(checks.size())));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  for (const auto& r : s.reports) {
    if (r.status == CheckStatus::Pass) ++s.pass;
    else if (r.status == CheckStatus::Fail) ++s.fail;
    else ++s.inconclusive;
  }
  return s;
}

}  // namespace thetakit
