#include "dissect/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace dissect {
namespace verify {

namespace {

using Clock = std::chrono::steady_clock;

long long ms_since(Clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

std::string signs_desc(const std::vector<int>& s) {
  std::string d = "signs(";
  for (int v : s) d += v > 0 ? '+' : '-';
  return d + ")";
}

// Canonical representatives of sign-vector classes modulo global sign:
// first entry +1, not all entries equal.
std::vector<std::vector<int>> sign_classes(std::size_t n) {
  std::vector<std::vector<int>> out;
  for (std::size_t mask = 1; mask < (std::size_t(1) << (n - 1)); ++mask) {
    std::vector<int> s(n, 1);
    for (std::size_t k = 0; k + 1 < n; ++k)
      if (mask & (std::size_t(1) << k)) s[k + 1] = -1;
    out.push_back(std::move(s));
  }
  return out;
}

bool is_reflection_class(const std::vector<int>& s) {
  std::size_t minus = 0;
  for (int v : s) minus += v < 0;
  return minus == 1 || minus == s.size() - 1;
}

void run_parallel(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& fn) {
  if (jobs <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < jobs; ++t)
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
    });
  for (auto& th : pool) th.join();
}

}  // namespace

std::vector<int> parse_signs_desc(const std::string& desc) {
  auto open = desc.find('('), close = desc.find(')');
  if (desc.rfind("signs", 0) != 0 || open == std::string::npos || close == std::string::npos)
    throw std::invalid_argument("not a signs descriptor: " + desc);
  std::vector<int> s;
  for (std::size_t i = open + 1; i < close; ++i) s.push_back(desc[i] == '+' ? 1 : -1);
  return s;
}

Vec dissecting_generator(const CommutingTriple& t) {
  QuadDecomposition quad = quad_decompose(t);
  if (quad.q_m.dim() != 1)
    throw std::invalid_argument("dissecting_generator: triple is not dissecting");
  return primitive(quad.q_m.basis()[0]);
}

std::optional<Matrix> equivalent_triples(const catalog::SoAlgebra& a, const std::vector<int>& tau1,
                                         const std::vector<int>& sigma1,
                                         const std::vector<int>& tau2,
                                         const std::vector<int>& sigma2) {
  std::size_t n = a.p + a.q;
  auto same_class = [n](std::vector<int> s, const std::vector<int>& t) {
    if (s == t) return true;
    for (auto& v : s) v = -v;
    return s == t;
  };
  std::vector<std::size_t> perm_plus(a.p), perm_minus(a.q);
  std::iota(perm_plus.begin(), perm_plus.end(), 0);
  std::iota(perm_minus.begin(), perm_minus.end(), 0);
  std::vector<std::size_t> pp = perm_plus;
  do {
    std::vector<std::size_t> pm = perm_minus;
    do {
      // pi maps axis i to its image; conjugation carries diag(s) to
      // diag(s o pi^{-1}).
      std::vector<std::size_t> pi(n);
      for (std::size_t i = 0; i < a.p; ++i) pi[i] = pp[i];
      for (std::size_t i = 0; i < a.q; ++i) pi[a.p + i] = a.p + pm[i];
      auto push = [&](const std::vector<int>& s) {
        std::vector<int> r(n);
        for (std::size_t i = 0; i < n; ++i) r[pi[i]] = s[i];
        return r;
      };
      std::vector<int> t1 = push(tau1), s1 = push(sigma1);
      bool direct = same_class(t1, tau2) && same_class(s1, sigma2);
      bool swapped = same_class(t1, sigma2) && same_class(s1, tau2);
      if (direct || swapped) {
        Matrix w(n, n);
        for (std::size_t i = 0; i < n; ++i) w.at(pi[i], i) = 1;
        // Independent confirmation on the algebra itself.
        Automorphism adw = catalog::so_conjugation(a, w);
        Matrix mt1 = catalog::signature_involution(a, tau1).matrix();
        Matrix ms1 = catalog::signature_involution(a, sigma1).matrix();
        Matrix mt2 = catalog::signature_involution(a, direct ? tau2 : sigma2).matrix();
        Matrix ms2 = catalog::signature_involution(a, direct ? sigma2 : tau2).matrix();
        Matrix winv = *adw.matrix().inverse();
        if (adw.matrix() * mt1 * winv == mt2 && adw.matrix() * ms1 * winv == ms2) return w;
      }
    } while (std::next_permutation(pm.begin(), pm.end()));
  } while (std::next_permutation(pp.begin(), pp.end()));
  return std::nullopt;
}

std::vector<TripleRecord> enumerate_dissecting(std::size_t p, std::size_t q, unsigned jobs,
                                               std::size_t max_n) {
  std::size_t n = p + q;
  if (n < 2) throw std::invalid_argument("enumerate_dissecting: p + q must be at least 2");
  if (n > max_n) throw std::invalid_argument("enumerate_dissecting: bound exceeded");
  catalog::SoAlgebra a = catalog::so(p, q);
  auto classes = sign_classes(n);
  std::vector<Automorphism> invs;
  for (const auto& s : classes) invs.push_back(catalog::signature_involution(a, s));
  std::string alg_id = "so(" + std::to_string(p) + "," + std::to_string(q) + ")";
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (std::size_t j = i + 1; j < classes.size(); ++j) pairs.emplace_back(i, j);
  std::vector<TripleRecord> records(pairs.size());
  run_parallel(pairs.size(), jobs, [&](std::size_t idx) {
    auto [i, j] = pairs[idx];
    CommutingTriple t(invs[i], invs[j]);
    QuadDecomposition quad = quad_decompose(t);
    TripleRecord r;
    r.algebra_id = alg_id;
    r.tau_desc = signs_desc(classes[i]);
    r.sigma_desc = signs_desc(classes[j]);
    r.dim_hl = quad.h_l.dim();
    r.dim_hm = quad.h_m.dim();
    r.dim_ql = quad.q_l.dim();
    r.dim_qm = quad.q_m.dim();
    r.dissecting = quad.q_m.dim() == 1;
    if (r.dissecting) {
      Vec x0 = primitive(quad.q_m.basis()[0]);
      r.x0_type = classify_element(*a.algebra, x0);
      VerificationReport lem = check_lemma_x0(t);
      if (!lem.pass)
        throw std::logic_error("lemma x0 check failed for " + alg_id + " " + r.tau_desc + " " +
                               r.sigma_desc + ": " + lem.witness);
    }
    records[idx] = std::move(r);
  });
  // Equivalence classes among dissecting records, by witness search against
  // the first representative of each class.
  std::vector<std::size_t> reps;
  for (auto& r : records) {
    if (!r.dissecting) continue;
    std::vector<int> st = parse_signs_desc(r.tau_desc), ss = parse_signs_desc(r.sigma_desc);
    bool placed = false;
    for (std::size_t c = 0; c < reps.size(); ++c) {
      const TripleRecord& rep = records[reps[c]];
      if (equivalent_triples(a, st, ss, parse_signs_desc(rep.tau_desc),
                             parse_signs_desc(rep.sigma_desc))) {
        r.equivalence_class = static_cast<int>(c);
        placed = true;
        break;
      }
    }
    if (!placed) {
      r.equivalence_class = static_cast<int>(reps.size());
      reps.push_back(&r - records.data());
    }
  }
  return records;
}

VerificationReport check_lemma_x0(const CommutingTriple& t) {
  Clock::time_point t0 = Clock::now();
  QuadDecomposition quad = quad_decompose(t);
  if (quad.q_m.dim() != 1) throw std::invalid_argument("check_lemma_x0: triple not dissecting");
  const LieAlgebra& g = *t.algebra();
  VerificationReport rep;
  rep.name = "lemma_x0";
  Vec x0 = primitive(quad.q_m.basis()[0]);
  auto fail = [&](const std::string& w) {
    rep.pass = false;
    rep.witness = w;
    rep.millis = ms_since(t0);
    return rep;
  };
  Automorphism st = t.sigma().compose(t.tau());
  Subspace fixed_st = kernel(st.matrix() - Matrix::identity(g.dim()));
  if (fixed_st != sum_span(quad.h_l, quad.q_m))
    return fail("fixed space of sigma*tau differs from h_l + R x0");
  for (const auto& u : quad.h_l.basis())
    if (!is_zero(g.bracket(u, x0))) return fail("x0 is not central in the fixed algebra");
  for (const auto& u : fixed_st.basis())
    for (const auto& v : quad.h_l.basis())
      if (!quad.h_l.contains(g.bracket(u, v))) return fail("h_l is not an ideal of g^{sigma tau}");
  ElementType ty = classify_element(g, x0);
  if (ty != ElementType::Elliptic && ty != ElementType::Hyperbolic)
    return fail("x0 classified as " + to_string(ty));
  rep.pass = true;
  rep.witness = "x0 " + to_string(ty);
  rep.millis = ms_since(t0);
  return rep;
}

VerificationReport check_ha_cent(const CommutingTriple& t) {
  Clock::time_point t0 = Clock::now();
  QuadDecomposition quad = quad_decompose(t);
  if (quad.q_m.dim() != 1) throw std::invalid_argument("check_ha_cent: triple not dissecting");
  const LieAlgebra& g = *t.algebra();
  if (!g.is_semisimple()) throw std::invalid_argument("check_ha_cent: algebra not semisimple");
  if (!is_irreducible_pair(g, t.tau()))
    throw std::invalid_argument("check_ha_cent: pair (g, tau) not irreducible");
  VerificationReport rep;
  rep.name = "ha_cent";
  Subspace cent = centralizer(g, quad.q_m);
  Subspace ha = sum_span(quad.h_l, quad.q_m);
  if (cent != ha) {
    rep.pass = false;
    rep.witness = "z_g(q_m) has dimension " + std::to_string(cent.dim()) +
                  ", expected h_l + q_m of dimension " + std::to_string(ha.dim());
  } else {
    Subspace q = eigensplit(t.tau()).second;
    Subspace in_q = intersect(cent, q);
    if (in_q != quad.q_m) {
      rep.pass = false;
      rep.witness = "q_m is not maximal abelian in q";
    } else {
      rep.pass = true;
    }
  }
  rep.millis = ms_since(t0);
  return rep;
}

VerificationReport check_rank1_spectrum(const CommutingTriple& t) {
  Clock::time_point t0 = Clock::now();
  Vec x0 = dissecting_generator(t);
  const LieAlgebra& g = *t.algebra();
  if (classify_element(g, x0) != ElementType::Hyperbolic)
    throw std::invalid_argument("check_rank1_spectrum: x0 not hyperbolic");
  VerificationReport rep;
  rep.name = "rank1_spectrum";
  Polynomial m = min_poly(g.ad(x0));
  Rational mu = -m.coeff(1);
  Rational lambda;
  bool shape = m.degree() == 3 && m.coeff(0) == 0 && m.coeff(2) == 0 && mu > 0 &&
               is_rational_square(mu, &lambda);
  rep.pass = shape;
  rep.witness = shape ? "lambda = " + to_string(lambda)
                      : "min poly of ad x0 is " + m.str();
  rep.millis = ms_since(t0);
  return rep;
}

namespace {

bool same_structure(const LieAlgebra& a, const LieAlgebra& b) {
  if (a.dim() != b.dim()) return false;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (a.structure(i, j) != b.structure(i, j)) return false;
  return true;
}

}  // namespace

VerificationReport check_duality_transport(const CommutingTriple& t, const Automorphism& theta) {
  Clock::time_point t0 = Clock::now();
  VerificationReport rep;
  rep.name = "duality_transport";
  if (!theta.commutes_with(t.tau()) || !theta.commutes_with(t.sigma()))
    throw std::invalid_argument("check_duality_transport: theta does not commute");
  auto fail = [&](const std::string& w) {
    rep.pass = false;
    rep.witness = w;
    rep.millis = ms_since(t0);
    return rep;
  };
  DissectingResult base = is_dissecting(t);
  DualResult cd = cartan_dual(t.algebra(), t.tau(), {t.sigma()});
  CommutingTriple tc(cd.involutions[0], cd.involutions[1]);
  if (is_dissecting(tc).dissecting != base.dissecting)
    return fail("dissecting status changes under the Cartan dual");
  DualResult rd = compact_dual(t.algebra(), theta, t.tau(), t.sigma());
  CommutingTriple tr(rd.involutions[1], rd.involutions[2]);
  if (is_dissecting(tr).dissecting != base.dissecting)
    return fail("dissecting status changes under the compact dual");
  Inertia ks = signature(rd.algebra->killing());
  if (!(ks.neg == rd.algebra->dim() && ks.pos == 0 && ks.null == 0))
    return fail("compact dual Killing form is not negative definite");
  // Applying the Cartan dual twice must restore the adapted structure
  // constants exactly.
  DualResult cd2 = cartan_dual(cd.algebra, cd.involutions[0], {cd.involutions[1]});
  if (!same_structure(*cd2.algebra, *change_basis(*t.algebra(), cd.basis.p)))
    return fail("Cartan dual applied twice does not restore the structure constants");
  if (base.dissecting) {
    Vec x0 = dissecting_generator(t);
    Vec x0_dual = *cd.basis.p.inverse() * x0;
    ElementType ty = classify_element(*t.algebra(), x0);
    ElementType tyc = classify_element(*cd.algebra, x0_dual);
    bool swap = (ty == ElementType::Elliptic && tyc == ElementType::Hyperbolic) ||
                (ty == ElementType::Hyperbolic && tyc == ElementType::Elliptic);
    if (!swap)
      return fail("x0 type " + to_string(ty) + " does not swap under duality (dual type " +
                  to_string(tyc) + ")");
  }
  rep.pass = true;
  rep.millis = ms_since(t0);
  return rep;
}

VerificationReport check_flip_family() {
  Clock::time_point t0 = Clock::now();
  VerificationReport rep;
  rep.name = "flip_family";
  auto fail = [&](const std::string& w) {
    rep.pass = false;
    rep.witness = w;
    rep.millis = ms_since(t0);
    return rep;
  };
  struct Case {
    std::string name;
    AlgebraPtr g1;
    Matrix sigma1;
    ElementType expected;
  };
  AlgebraPtr s2 = catalog::su2();
  AlgebraPtr s2r = catalog::sl2r();
  std::vector<Case> cases{
      {"su2/I11", s2, catalog::su2_involution_I11(s2).matrix(), ElementType::Elliptic},
      {"sl2r/neg_transpose", s2r, catalog::sl2_neg_transpose(s2r).matrix(),
       ElementType::Elliptic},
      {"sl2r/conj_I11", s2r, catalog::sl2_conj_I11(s2r).matrix(), ElementType::Hyperbolic},
  };
  for (const auto& cs : cases) {
    AlgebraPtr gg = direct_sum(*cs.g1, *cs.g1);
    Automorphism tau = catalog::flip(gg);
    Automorphism sigma = catalog::swap_twist(gg, cs.sigma1);
    CommutingTriple t(tau, sigma);
    DissectingResult d = is_dissecting(t);
    std::size_t fixed_dim = kernel(cs.sigma1 - Matrix::identity(cs.g1->dim())).dim();
    if (!d.dissecting || d.dim_qm != fixed_dim || fixed_dim != 1)
      return fail(cs.name + ": expected dissecting with dim q_m = 1, got " +
                  std::to_string(d.dim_qm));
    Vec x0 = dissecting_generator(t);
    ElementType ty = classify_element(*gg, x0);
    if (ty != cs.expected)
      return fail(cs.name + ": x0 classified " + to_string(ty) + ", expected " +
                  to_string(cs.expected));
    // Componentwise variant: q_m = g1^{-sigma1}, two-dimensional.
    std::size_t m = cs.g1->dim();
    Matrix comp(2 * m, 2 * m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        comp.at(i, j) = cs.sigma1.at(i, j);
        comp.at(m + i, m + j) = cs.sigma1.at(i, j);
      }
    CommutingTriple tv(tau, Automorphism::certify(gg, comp));
    DissectingResult dv = is_dissecting(tv);
    if (dv.dissecting || dv.dim_qm != 2)
      return fail(cs.name + " componentwise: expected dim q_m = 2, got " +
                  std::to_string(dv.dim_qm));
  }
  rep.pass = true;
  rep.millis = ms_since(t0);
  return rep;
}

VerificationReport check_complex_case() {
  Clock::time_point t0 = Clock::now();
  VerificationReport rep;
  rep.name = "complex_case";
  auto fail = [&](const std::string& w) {
    rep.pass = false;
    rep.witness = w;
    rep.millis = ms_since(t0);
    return rep;
  };
  AlgebraPtr g = catalog::sl2c_real();
  // tau: conjugation fixing the split real form; sigma: a commuting twisted
  // conjugation; theta: conjugation fixing the compact real form.
  Automorphism tau = Automorphism::certify(g, Matrix::diagonal({1, 1, 1, -1, -1, -1}));
  Automorphism sigma = Automorphism::certify(g, Matrix::diagonal({1, -1, -1, -1, 1, 1}));
  Matrix th(6, 6);
  th.at(0, 0) = -1;            // h -> -h
  th.at(2, 1) = -1;            // e -> -f
  th.at(1, 2) = -1;            // f -> -e
  th.at(3, 3) = 1;             // ih -> ih
  th.at(5, 4) = 1;             // ie -> if
  th.at(4, 5) = 1;             // if -> ie
  Automorphism theta = Automorphism::certify(g, th);
  if (!is_complex_simple(*g)) return fail("sl2c_real not recognized as complex simple");
  CommutingTriple t(tau, sigma);
  DissectingResult d = is_dissecting(t);
  if (!d.dissecting) return fail("constructed triple not dissecting, dim q_m = " +
                                 std::to_string(d.dim_qm));
  if (!is_irreducible_pair(*g, tau)) return fail("(g, tau) not irreducible");
  if (!is_cartan_involution(*g, theta)) return fail("theta is not a Cartan involution");
  DualResult rd = compact_dual(g, theta, tau, sigma);
  Inertia ks = signature(rd.algebra->killing());
  if (!(ks.neg == 6 && ks.pos == 0 && ks.null == 0))
    return fail("compact dual Killing form not negative definite");
  auto ideals = simple_ideals(*rd.algebra);
  if (ideals.size() != 2 || ideals[0].dim() != 3 || ideals[1].dim() != 3)
    return fail("compact dual does not split into two 3-dimensional simple ideals");
  VerificationReport transport = check_duality_transport(t, theta);
  if (!transport.pass) return fail("duality transport: " + transport.witness);
  rep.pass = true;
  rep.millis = ms_since(t0);
  return rep;
}

std::vector<VerificationReport> paper_suite(std::size_t max_n, unsigned jobs) {
  std::vector<VerificationReport> out;
  for (std::size_t n = 2; n <= max_n; ++n)
    for (std::size_t q = 0; q * 2 <= n; ++q) {
      std::size_t p = n - q;  // canonical p >= q; so(q,p) is isomorphic
      std::string id = "so(" + std::to_string(p) + "," + std::to_string(q) + ")";
      Clock::time_point t0 = Clock::now();
      auto records = enumerate_dissecting(p, q, jobs, max_n);
      catalog::SoAlgebra a = catalog::so(p, q);
      // Classification: dissecting pairs must be exactly the pairs of
      // distinct reflection classes.
      VerificationReport cls;
      cls.name = "classification " + id;
      cls.pass = true;
      for (const auto& r : records) {
        bool refl_pair = is_reflection_class(parse_signs_desc(r.tau_desc)) &&
                         is_reflection_class(parse_signs_desc(r.sigma_desc));
        if (r.dissecting != refl_pair) {
          cls.pass = false;
          cls.witness = r.tau_desc + " " + r.sigma_desc + " dissecting=" +
                        (r.dissecting ? "true" : "false");
          break;
        }
      }
      cls.millis = ms_since(t0);
      out.push_back(cls);
      // Per-triple lemma suite on the dissecting records.
      bool semisimple = a.algebra->is_semisimple();
      for (const auto& r : records) {
        if (!r.dissecting) continue;
        CommutingTriple t(catalog::signature_involution(a, parse_signs_desc(r.tau_desc)),
                          catalog::signature_involution(a, parse_signs_desc(r.sigma_desc)));
        std::string params = id + " " + r.tau_desc + " " + r.sigma_desc;
        VerificationReport lem = check_lemma_x0(t);
        lem.params = params;
        out.push_back(lem);
        if (semisimple && is_irreducible_pair(*a.algebra, t.tau())) {
          VerificationReport hc = check_ha_cent(t);
          hc.params = params;
          out.push_back(hc);
        }
        if (r.x0_type == ElementType::Hyperbolic) {
          VerificationReport rk = check_rank1_spectrum(t);
          rk.params = params;
          out.push_back(rk);
        }
        if (semisimple) {
          auto theta = canonical_cartan_involution(a.algebra);
          if (theta) {
            VerificationReport du = check_duality_transport(t, *theta);
            du.params = params;
            out.push_back(du);
          }
        }
      }
    }
  out.push_back(check_flip_family());
  out.push_back(check_complex_case());
  std::stable_sort(out.begin(), out.end(), [](const VerificationReport& a,
                                              const VerificationReport& b) {
    if (a.name != b.name) return a.name < b.name;
    return a.params < b.params;
  });
  return out;
}

}  // namespace verify
}  // namespace dissect
