#include "wittkit/hermitian.hpp"

#include "wittkit/lambda_ops.hpp"
#include "wittkit/randomgen.hpp"

#include <doctest.h>

using namespace wittkit;

namespace {

const Quat I = Quat::pure(1, 0, 0);
const Quat J = Quat::pure(0, 1, 0);
const Quat K = Quat::pure(0, 0, 1);

DiagForm F(std::vector<long long> entries) {
  std::vector<Rat> e;
  for (long long v : entries) e.push_back(Rat(v));
  return DiagForm(std::move(e));
}

}  // namespace

TEST_SUITE("hermitian") {
  TEST_CASE("trace gram and odd products") {
    QuaternionAlgebra h(-1, -1);
    // hand-computed Gram for z = z' = i: diag(-2,-2,2,2)
    GWClass gram = trace_gram_class(h, I, I);
    CHECK(gw_equal(gram, GWClass::of_form(F({-2, -2, 2, 2}))));
    CHECK(gw_equal(gram, GWClass::of_form(F({2, -2, -2, 2}))));  // <2><1,-1,-1,1>
    // that multiset is <-1>-stable, so the ring product agrees here
    CHECK(gw_equal(odd_product(h, I, I), gram));
    // z = i, z' = j: Trd(ij) = 0 and the product is split
    GWClass split = odd_product(h, I, J);
    CHECK(split.rank() == 4);
    CHECK(witt_zero(split));
    // symmetry of the product
    GenConfig gen = GenConfig::defaults();
    TrialRng rng(61);
    for (int t = 0; t < 40; ++t) {
      QuaternionAlgebra alg = random_algebra(rng, gen);
      Quat z = random_pure(rng, alg);
      Quat w = random_pure(rng, alg);
      CHECK(gw_equal(odd_product(alg, z, w), odd_product(alg, w, z)));
      CHECK(odd_product(alg, z, w).rank() == 4);
    }
  }

  TEST_CASE("graded scaling law") {
    // <lambda> . <z> = <lambda z>: both routes give the same odd products
    GenConfig gen = GenConfig::defaults();
    TrialRng rng(60);
    for (int t = 0; t < 30; ++t) {
      QuaternionAlgebra alg = random_algebra(rng, gen);
      Quat z = random_pure(rng, alg);
      Quat w = random_pure(rng, alg);
      Rat lambda = random_rat(rng, gen);
      Quat lz;
      for (int i = 0; i < 4; ++i) lz.c[i] = lambda * z.c[i];
      CHECK(gw_equal(odd_product(alg, lz, w), odd_product(alg, z, w).scaled_by(lambda)));
    }
  }

  TEST_CASE("pi forms") {
    HermDiagForm h(QuaternionAlgebra(-1, -1), {I, J});
    CHECK(pi_form(h, SubsetF2::empty()).entries == std::vector<Rat>{1});
    CHECK(gw_equal(GWClass::of_form(pi_form(h, SubsetF2::of({0}))),
                   GWClass::of_form(F({1, 1}))));  // <<-1>>
    CHECK(gw_equal(GWClass::of_form(pi_form(h, SubsetF2::of({0, 1}))),
                   GWClass::of_form(F({1, 1, 1, 1}))));  // <<-1,-1>>
  }

  TEST_CASE("phi forms") {
    // Hamilton, z1 = i, z2 = j: phi = <<-1, 1>> = <1,1,-1,-1>, hyperbolic
    HermDiagForm h(QuaternionAlgebra(-1, -1), {I, J});
    DiagForm phi = phi_form(h, SubsetF2::of({0, 1}));
    CHECK(gw_equal(GWClass::of_form(phi), GWClass::of_form(F({1, 1, -1, -1}))));
    CHECK(witt_zero(GWClass::of_form(phi)));
    // pi - n_Q is zero in W here
    CHECK(witt_zero(GWClass::of_form(pi_form(h, SubsetF2::of({0, 1}))) -
                    GWClass::of_form(h.alg.norm_form())));
    // |I| <= 1: phi = pi on the nose
    CHECK(phi_form(h, SubsetF2::of({1})).entries == pi_form(h, SubsetF2::of({1})).entries);
    CHECK(phi_form(h, SubsetF2::empty()).entries == std::vector<Rat>{1});
    // split algebra: phi(I) = pi(I) as Witt classes
    QuaternionAlgebra split(1, 1);
    HermDiagForm hs(split, {K, J + K + K});
    for (std::uint32_t b = 1; b < 4; ++b) {
      SubsetF2 i_set(b);
      CHECK(witt_equal(GWClass::of_form(phi_form(hs, i_set)),
                       GWClass::of_form(pi_form(hs, i_set))));
    }
  }

  TEST_CASE("phi postcondition over the reference algebras") {
    GenConfig gen = GenConfig::defaults();
    TrialRng rng(62);
    for (auto [a, b] : {std::pair{-1, -1}, {-1, -3}, {2, 5}, {1, 1}}) {
      QuaternionAlgebra alg(a, b);
      for (int t = 0; t < 8; ++t) {
        HermDiagForm h = random_herm(rng, alg, 4);
        GWClass nq = GWClass::of_form(alg.norm_form());
        for (std::uint32_t bits = 0; bits < 16; ++bits) {
          SubsetF2 i_set(bits);
          DiagForm phi = phi_form(h, i_set);  // postcondition asserted inside
          if (i_set.size() >= 2) {
            GWClass target = GWClass::of_form(pi_form(h, i_set)) -
                             nq.times(1ll << (i_set.size() - 2));
            CHECK(witt_equal(GWClass::of_form(phi), target));
          }
        }
      }
    }
  }

  TEST_CASE("t-morphism representatives") {
    QuaternionAlgebra g(2, 5);
    Quat z1 = K;
    Quat z2 = I + K;
    HermDiagForm h(g, {z1, z2});
    ModSimMorphism t = t_morphism(h, SubsetF2::of({0, 1}));
    // -Trd(z1 z2) = 20 on the generator pair
    CHECK(t.eval(SubsetF2::of({0, 1})) == 20);
    CHECK(t.eval(SubsetF2::empty()) == 1);
    // anti-commuting pair: representative 1 and hyperbolic phi
    HermDiagForm anti(g, {I, J});
    ModSimMorphism t2 = t_morphism(anti, SubsetF2::of({0, 1}));
    CHECK(t2.eval(SubsetF2::of({0, 1})) == 1);
    CHECK(witt_zero(GWClass::of_form(t2.phi_ref)));
  }

  TEST_CASE("psi0 on basic index sets") {
    GenConfig gen = GenConfig::defaults();
    TrialRng rng(63);
    for (int t = 0; t < 30; ++t) {
      QuaternionAlgebra alg = random_algebra(rng, gen);
      HermDiagForm h = random_herm(rng, alg, 2);
      // J = {}, A = {0}: phi({0}) = <<z_0^2>>
      CHECK(gw_equal(psi0_herm(h, SubsetF2::empty(), SubsetF2::of({0})),
                     GWClass::of_form(pfister_form({-alg.nrd(h.gens[0])}))));
      // J = {0,1}, A = {}: <-Trd(z_0 z_1)> phi = the ring product
      GWClass viapsi = psi0_herm(h, SubsetF2::of({0, 1}), SubsetF2::empty());
      CHECK(witt_equal(viapsi, odd_product(alg, h.gens[0], h.gens[1])));
      CHECK_THROWS_AS(psi0_herm(h, SubsetF2::empty(), SubsetF2::empty()), std::domain_error);
      CHECK_THROWS_AS(psi0_herm(h, SubsetF2::of({0}), SubsetF2::of({0})), std::domain_error);
    }
  }

  TEST_CASE("Q_herm on a single slot") {
    GenConfig gen = GenConfig::defaults();
    TrialRng rng(64);
    for (int t = 0; t < 30; ++t) {
      QuaternionAlgebra alg = random_algebra(rng, gen);
      HermDiagForm h = random_herm(rng, alg, 1);
      CHECK(Q_herm(2, 0, h) == GWClass::one());
      CHECK(gw_equal(Q_herm(2, 2, h), GWClass::of_form(pfister_form({-alg.nrd(h.gens[0])}))));
    }
    HermDiagForm h(QuaternionAlgebra(-1, -1), {I});
    CHECK_THROWS_AS(Q_herm(3, 0, h), std::domain_error);
    CHECK_THROWS_AS(Q_herm(2, 3, h), std::domain_error);
  }

  TEST_CASE("N coefficients") {
    CHECK(N_coeff(2, 4) == 1);
    CHECK(N_coeff(3, 4) == 9);
    for (int x = 2; x <= 6; ++x) {
      for (int d = 4; d <= 2 * x; d += 2) {
        CHECK(N_coeff(x, d) % (1ll << (d / 2 - 2)) == 0);
        CHECK(norm_form_multiplicity(x, d) % (1ll << (d / 2 - 2)) == 0);
        CHECK(norm_form_multiplicity(x, d) <= N_coeff(x, d));
      }
    }
    // the counts agree except where |A| <= 1 meets the constraints
    CHECK(norm_form_multiplicity(2, 4) == 1);
    CHECK(norm_form_multiplicity(3, 6) == N_coeff(3, 6));
    CHECK(norm_form_multiplicity(3, 4) == 3);
    CHECK_THROWS_AS(N_coeff(2, 3), std::domain_error);
    CHECK_THROWS_AS(N_coeff(2, 6), std::domain_error);
    CHECK_THROWS_AS(N_coeff(3, 2), std::domain_error);
  }

  TEST_CASE("qnd decomposition, |X| = 2 structure") {
    GenConfig gen = GenConfig::defaults();
    TrialRng rng(65);
    for (auto [a, b] : {std::pair{-1, -1}, {2, 5}, {1, 1}}) {
      QuaternionAlgebra alg(a, b);
      HermDiagForm h = random_herm(rng, alg, 2);
      // RHS at |X|=2, d=4 collapses to n_Q + Psi_0^{empty, X}
      GWClass rhs = GWClass::of_form(alg.norm_form()) +
                    psi0_herm(h, SubsetF2::empty(), SubsetF2::of({0, 1}));
      CHECK(witt_equal(Q_herm(4, 4, h), rhs));
      CHECK(verify_qnd_quat(h, 4));
    }
    HermDiagForm h(QuaternionAlgebra(-1, -1), {I, J});
    CHECK_THROWS_AS(verify_qnd_quat(h, 3), std::domain_error);
    CHECK_THROWS_AS(verify_qnd_quat(h, 6), std::domain_error);
  }

  TEST_CASE("beta_hat basics") {
    CHECK(beta_hat({}, HermDiagForm(QuaternionAlgebra(-1, -1), {I, J})).terms().empty());
    GenConfig gen = GenConfig::defaults();
    TrialRng rng(66);
    for (int t = 0; t < 10; ++t) {
      QuaternionAlgebra alg = random_algebra(rng, gen);
      HermDiagForm h = random_herm(rng, alg, 2);
      GWClass v = beta_hat({{GWClass::one(), 4}}, h);
      CHECK(filtration_at_least(v, 3));
      CHECK(gw_equal(v, Q_herm(4, 4, h) - GWClass::of_form(alg.norm_form())));
    }
  }

  TEST_CASE("morita images") {
    QuaternionAlgebra split(1, 1);
    CHECK(gw_equal(GWClass::of_form(morita_split_11(split, I)),
                   GWClass::of_form(F({1, -1}))));
    CHECK(morita_split_11(split, J).entries == std::vector<Rat>{1, -1});
    CHECK(morita_split_11(split, K).entries == std::vector<Rat>{-1, -1});
    GenConfig gen = GenConfig::defaults();
    TrialRng rng(67);
    for (int t = 0; t < 50; ++t) {
      Quat z = random_pure(rng, split);
      DiagForm q = morita_split_11(split, z);
      CHECK(witt_profile(q).signed_disc == squarefree_rep(-split.nrd(z)));
    }
    CHECK_THROWS_AS(morita_split_11(QuaternionAlgebra(-1, -1), I), std::domain_error);
  }

  TEST_CASE("psi0 does not depend on the slot order") {
    GenConfig gen = GenConfig::defaults();
    TrialRng rng(69);
    for (int t = 0; t < 30; ++t) {
      QuaternionAlgebra alg = random_algebra(rng, gen);
      HermDiagForm h = random_herm(rng, alg, 3);
      HermDiagForm rev(alg, {h.gens[2], h.gens[1], h.gens[0]});
      // J = {0}, A = {1,2} maps to J = {2}, A = {0,1} under the reversal
      GWClass a = psi0_herm(h, SubsetF2::of({0}), SubsetF2::of({1, 2}));
      GWClass b = psi0_herm(rev, SubsetF2::of({2}), SubsetF2::of({0, 1}));
      CHECK(witt_equal(a, b));
      GWClass c = psi0_herm(h, SubsetF2::empty(), SubsetF2::full(3));
      GWClass d = psi0_herm(rev, SubsetF2::empty(), SubsetF2::full(3));
      CHECK(witt_equal(c, d));
    }
  }

  TEST_CASE("extension class against the signature oracle") {
    // For a value in I^m over Q (m >= 3) the class in h^m is detected by
    // the real place alone: it is nonzero iff signature / 2^m is odd.
    GenConfig gen = GenConfig::defaults();
    TrialRng rng(70);
    for (int t = 0; t < 24; ++t) {
      auto [x, d] = (t % 2 == 0) ? std::pair{2, 4} : std::pair{3, 4};
      QuaternionAlgebra alg = (t % 4 < 2) ? QuaternionAlgebra(-1, -1) : QuaternionAlgebra(-1, -3);
      HermDiagForm h = random_herm(rng, alg, x);
      GWClass value = beta_hat({{GWClass::one(), d}}, h);
      std::vector<std::pair<std::vector<ScaledPfisterTerm>, int>> unit;
      unit.emplace_back(std::vector<ScaledPfisterTerm>{ScaledPfisterTerm{}}, d);
      CohClass ec = extension_class(unit, h, d - 1);
      long long sig = 0;
      for (const auto& [s, m] : value.terms()) sig += s.rep > 0 ? m : -m;
      REQUIRE(sig % 8 == 0);
      bool expect_nonzero = (sig / 8) % 2 != 0;
      SquareClass neg(Int(-1));
      CohClass generator = coh_symbol({neg, neg, neg});
      CHECK(coh_equal(ec, expect_nonzero ? generator : CohClass::zero(3)));
    }
  }

  TEST_CASE("split-case extension agrees with the quadratic theory") {
    QuaternionAlgebra split(1, 1);
    TrialRng rng(68);
    for (int t = 0; t < 6; ++t) {
      HermDiagForm h = random_herm(rng, split, 2);
      std::vector<DiagForm> qs;
      DiagForm qsum;
      for (const auto& z : h.gens) {
        qs.push_back(morita_split_11(split, z));
        qsum = perp(qsum, qs.back());
      }
      for (int d = 0; d <= 4; ++d) {
        CHECK(witt_equal(Q_herm(4, d, h), Q_nd(4, d, qsum)));
      }
      CHECK(witt_equal(psi0_herm(h, SubsetF2::empty(), SubsetF2::of({0, 1})),
                       psi0_quad(v_subspace(SubsetF2::empty(), SubsetF2::of({0, 1})),
                                 power_set(SubsetF2::of({0, 1})), qs)));
    }
  }
}
