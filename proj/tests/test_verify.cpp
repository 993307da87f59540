#include <doctest.h>

#include <set>

#include "dissect/duality.hpp"
#include "dissect/verify.hpp"

using namespace dissect;
using verify::parse_signs_desc;

TEST_CASE("signs descriptor parsing") {
  CHECK(parse_signs_desc("signs(+--)") == std::vector<int>{1, -1, -1});
  CHECK_THROWS(parse_signs_desc("reflect 1"));
}

TEST_CASE("enumeration on so(3)") {
  auto records = verify::enumerate_dissecting(3, 0);
  CHECK(records.size() == 3);  // 3 classes, 3 unordered pairs
  std::size_t dissecting = 0;
  for (const auto& r : records) {
    CHECK(r.dim_hl + r.dim_hm + r.dim_ql + r.dim_qm == 3);
    CHECK(r.dissecting == (r.dim_qm == 1));
    dissecting += r.dissecting;
    if (r.dissecting) {
      REQUIRE(r.x0_type.has_value());
      CHECK(*r.x0_type == ElementType::Elliptic);
    }
  }
  CHECK(dissecting == 3);  // exactly the reflection pairs
  // A single equivalence class: both flipped axes are compact.
  for (const auto& r : records) CHECK(r.equivalence_class == 0);
}

TEST_CASE("enumeration on so(2,3) matches the reflection classification") {
  auto records = verify::enumerate_dissecting(2, 3);
  CHECK(records.size() == 15 * 14 / 2);
  std::set<int> classes;
  std::size_t dissecting = 0;
  for (const auto& r : records) {
    auto is_refl = [](const std::vector<int>& s) {
      std::size_t minus = 0;
      for (int v : s) minus += v < 0;
      return minus == 1 || minus == s.size() - 1;
    };
    bool refl_pair =
        is_refl(parse_signs_desc(r.tau_desc)) && is_refl(parse_signs_desc(r.sigma_desc));
    CHECK(r.dissecting == refl_pair);
    if (r.dissecting) {
      ++dissecting;
      classes.insert(r.equivalence_class);
    }
  }
  CHECK(dissecting == 10);  // C(5,2) reflection pairs
  // Three classes: (+,+), (-,-), and mixed flipped-axis signs.
  CHECK(classes == std::set<int>{0, 1, 2});
}

TEST_CASE("enumeration respects the bound") {
  CHECK_THROWS(verify::enumerate_dissecting(1, 0));
  CHECK_THROWS(verify::enumerate_dissecting(5, 3, 1, 7));
}

TEST_CASE("equivalence witnesses") {
  catalog::SoAlgebra a = catalog::so(4, 0);
  std::vector<int> r1{-1, 1, 1, 1}, r2{1, -1, 1, 1}, r3{1, 1, -1, 1}, r4{1, 1, 1, -1};
  auto w = verify::equivalent_triples(a, r1, r2, r1, r2);
  REQUIRE(w.has_value());
  CHECK(*w == Matrix::identity(4));
  w = verify::equivalent_triples(a, r1, r2, r3, r4);
  CHECK(w.has_value());

  catalog::SoAlgebra b = catalog::so(2, 3);
  std::vector<int> s1{-1, 1, 1, 1, 1}, s2{1, -1, 1, 1, 1}, s5{1, 1, 1, 1, -1};
  CHECK(!verify::equivalent_triples(b, s1, s2, s1, s5).has_value());
  // Swapped order is found too.
  CHECK(verify::equivalent_triples(b, s1, s5, s5, s1).has_value());
}

TEST_CASE("dissecting generator") {
  catalog::SoAlgebra a = catalog::so(2, 3);
  CommutingTriple t(catalog::reflection_involution(a, 1), catalog::reflection_involution(a, 5));
  Vec x0 = verify::dissecting_generator(t);
  CHECK(x0 == primitive(x0));
  CHECK(classify_element(*a.algebra, x0) == ElementType::Hyperbolic);
  CommutingTriple same(catalog::reflection_involution(a, 1),
                       catalog::reflection_involution(a, 1));
  CHECK_THROWS(verify::dissecting_generator(same));
}

TEST_CASE("check_lemma_x0") {
  catalog::SoAlgebra a = catalog::so(5, 0);
  CommutingTriple t(catalog::reflection_involution(a, 1), catalog::reflection_involution(a, 5));
  VerificationReport rep = verify::check_lemma_x0(t);
  CHECK(rep.pass);
  CHECK(rep.witness == "x0 elliptic");

  catalog::SoAlgebra b = catalog::so(1, 4);
  CommutingTriple tb(catalog::reflection_involution(b, 1), catalog::reflection_involution(b, 2));
  rep = verify::check_lemma_x0(tb);
  CHECK(rep.pass);
  CHECK(rep.witness == "x0 hyperbolic");

  CommutingTriple bad(catalog::reflection_involution(a, 1),
                      catalog::reflection_involution(a, 1));
  CHECK_THROWS(verify::check_lemma_x0(bad));
}

TEST_CASE("check_ha_cent") {
  catalog::SoAlgebra a = catalog::so(1, 4);
  CommutingTriple t(catalog::reflection_involution(a, 1), catalog::reflection_involution(a, 2));
  CHECK(verify::check_ha_cent(t).pass);
  catalog::SoAlgebra c = catalog::so(5, 0);
  CommutingTriple tc(catalog::reflection_involution(c, 2), catalog::reflection_involution(c, 3));
  CHECK(verify::check_ha_cent(tc).pass);
  CommutingTriple bad(catalog::reflection_involution(c, 1),
                      catalog::reflection_involution(c, 1));
  CHECK_THROWS(verify::check_ha_cent(bad));
}

TEST_CASE("check_rank1_spectrum") {
  catalog::SoAlgebra a = catalog::so(1, 2);
  CommutingTriple t(catalog::reflection_involution(a, 1), catalog::reflection_involution(a, 2));
  VerificationReport rep = verify::check_rank1_spectrum(t);
  CHECK(rep.pass);
  CHECK(rep.witness == "lambda = 1");
  // Elliptic generator violates the precondition.
  catalog::SoAlgebra c = catalog::so(5, 0);
  CommutingTriple tc(catalog::reflection_involution(c, 1), catalog::reflection_involution(c, 2));
  CHECK_THROWS(verify::check_rank1_spectrum(tc));
}

TEST_CASE("check_duality_transport") {
  catalog::SoAlgebra a = catalog::so(2, 3);
  CommutingTriple t(catalog::reflection_involution(a, 1), catalog::reflection_involution(a, 5));
  auto theta = canonical_cartan_involution(a.algebra);
  REQUIRE(theta.has_value());
  CHECK(verify::check_duality_transport(t, *theta).pass);

  catalog::SoAlgebra b = catalog::so(4, 0);
  CommutingTriple tb(catalog::reflection_involution(b, 1), catalog::reflection_involution(b, 4));
  CHECK(verify::check_duality_transport(tb, Automorphism::identity(b.algebra)).pass);

  AlgebraPtr g1 = catalog::sl2r();
  AlgebraPtr gg = direct_sum(*g1, *g1);
  Automorphism tau = catalog::flip(gg);
  Automorphism sigma = catalog::swap_twist(gg, catalog::sl2_conj_I11(g1).matrix());
  Matrix nt1 = catalog::sl2_neg_transpose(g1).matrix();
  Matrix th(6, 6);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      th.at(i, j) = nt1.at(i, j);
      th.at(3 + i, 3 + j) = nt1.at(i, j);
    }
  Automorphism theta_gg = Automorphism::certify(gg, th);
  REQUIRE(is_cartan_involution(*gg, theta_gg));
  CHECK(verify::check_duality_transport(CommutingTriple(tau, sigma), theta_gg).pass);
}

TEST_CASE("flip family and complex case") {
  CHECK(verify::check_flip_family().pass);
  CHECK(verify::check_complex_case().pass);
}

TEST_CASE("paper suite at n = 3") {
  auto reports = verify::paper_suite(3);
  CHECK(!reports.empty());
  for (const auto& r : reports) {
    INFO(r.name << " " << r.params << " " << r.witness);
    CHECK(r.pass);
  }
  // Deterministic ordering.
  auto again = verify::paper_suite(3);
  REQUIRE(again.size() == reports.size());
  for (std::size_t i = 0; i < reports.size(); ++i) {
    CHECK(again[i].name == reports[i].name);
    CHECK(again[i].params == reports[i].params);
  }
}

TEST_CASE("parallel enumeration matches sequential") {
  auto seq = verify::enumerate_dissecting(2, 2, 1);
  auto par = verify::enumerate_dissecting(2, 2, 4);
  REQUIRE(seq.size() == par.size());
  for (std::size_t i = 0; i < seq.size(); ++i) {
    CHECK(seq[i].tau_desc == par[i].tau_desc);
    CHECK(seq[i].dissecting == par[i].dissecting);
    CHECK(seq[i].equivalence_class == par[i].equivalence_class);
  }
}
