#include "wittkit/pfister.hpp"

#include "wittkit/lambda_ops.hpp"
#include "wittkit/randomgen.hpp"

#include <doctest.h>

#include <algorithm>

using namespace wittkit;

namespace {


SquareClassMorphism two_slot(long long a, long long b) {
  SquareClassMorphism f;
  f.universe = make_universe(2);
  f.on_singletons = {squarefree_rep(Rat(-a)), squarefree_rep(Rat(-b))};
  return f;
}

bool same_multiset(const DiagForm& q, std::vector<long long> entries) {
  std::vector<Rat> want;
  for (long long v : entries) want.push_back(Rat(v));
  std::vector<Rat> got = q.entries;
  std::sort(want.begin(), want.end());
  std::sort(got.begin(), got.end());
  return got == want;
}

}  // namespace

TEST_SUITE("pfister") {
  TEST_CASE("coordinate-free pfister forms") {
    // f({0}) = -a, f({1}) = -b over W = P({0,1}) gives <1,-a,-b,ab>
    auto p = PfisterPresentation{two_slot(5, 7), power_set(SubsetF2::of({0, 1}))};
    CHECK(same_multiset(pfister_of(p), {1, -5, -7, 35}));
    CHECK(gw_equal(pfister_gw(p), GWClass::of_form(pfister_form({Rat(5), Rat(7)}))));

    auto single = PfisterPresentation{two_slot(5, 7), single_point(SubsetF2::empty())};
    CHECK(same_multiset(pfister_of(single), {1}));

    // even part: entries f(x) for even x, here <1, ab>
    auto even = PfisterPresentation{
        two_slot(5, 7), *parity_hyperplane_section(power_set(SubsetF2::of({0, 1})))};
    CHECK(same_multiset(pfister_of(even), {1, 35}));
  }

  TEST_CASE("multiplicative on disjoint supports") {
    GenConfig gen = GenConfig::defaults();
    TrialRng rng(31);
    for (int t = 0; t < 50; ++t) {
      SquareClassMorphism f;
      f.universe = make_universe(4);
      for (int i = 0; i < 4; ++i) f.on_singletons.push_back(squarefree_rep(random_rat(rng, gen)));
      SubsetF2 i_set = SubsetF2::of({0, 1});
      SubsetF2 j_set(static_cast<std::uint32_t>(rng.uniform(0, 3)) << 2);
      GWClass lhs = pfister_gw(PfisterPresentation{f, power_set(i_set)}) *
                    pfister_gw(PfisterPresentation{f, power_set(j_set)});
      GWClass rhs = pfister_gw(PfisterPresentation{f, power_set(i_set | j_set)});
      CHECK(gw_equal(lhs, rhs));
    }
  }

  TEST_CASE("pfister_times") {
    DiagForm q = pfister_form({Rat(2), Rat(3)});
    RatMorphism t;
    t.universe = make_universe(1);
    t.on_singletons = {Rat(-7)};
    // W = {0}: recover q itself
    CHECK(gw_equal(pfister_times(t, single_point(SubsetF2::empty()), q), GWClass::of_form(q)));
    // W = P({0}): <<7,2,3>> by direct expansion
    GWClass lhs = pfister_times(t, power_set(SubsetF2::of({0})), q);
    CHECK(gw_equal(lhs, GWClass::of_form(pfister_form({Rat(7), Rat(2), Rat(3)}))));
    // q = <1> reduces to the plain coordinate-free form
    DiagForm one({Rat(1)});
    GWClass via_times = pfister_times(t, power_set(SubsetF2::of({0})), one);
    CHECK(gw_equal(via_times, GWClass::of_form(pfister_form({Rat(7)}))));
  }

  TEST_CASE("binary decomposition") {
    auto [t, d] = binary_decompose(DiagForm({Rat(5), Rat(7)}));
    CHECK(t == 5);
    CHECK(d == squarefree_rep(Rat(-35)));
    CHECK(gw_equal(GWClass::of_form(pfister_form({Rat(d.rep)})).scaled_by(t),
                   GWClass::of_form(DiagForm({Rat(5), Rat(7)}))));

    auto [t2, d2] = binary_decompose(hyperbolic_plane());
    CHECK(t2 == 1);
    CHECK(d2.rep == 1);

    auto [t3, d3] = binary_decompose(DiagForm({Rat(2), Rat(3)}));
    CHECK(t3 == 2);
    CHECK(d3.rep == -6);
    CHECK(gw_equal(GWClass::of_form(pfister_form({Rat(-6)})).scaled_by(Rat(2)),
                   GWClass::of_form(DiagForm({Rat(2), Rat(3)}))));

    CHECK_THROWS_AS(binary_decompose(DiagForm({Rat(1)})), std::domain_error);
  }

  TEST_CASE("psi on a single binary form") {
    // X = {0}: Psi_0^{V_{0,{0}}, P({0})}(<a,b>) = <1, ab> = Q_2^2(<a,b>)
    std::vector<DiagForm> qs{DiagForm({Rat(5), Rat(7)})};
    AffineSubspace v = v_subspace(SubsetF2::empty(), SubsetF2::of({0}));
    AffineSubspace u = power_set(SubsetF2::of({0}));
    GWClass psi0 = psi0_quad(v, u, qs);
    CHECK(gw_equal(psi0, GWClass::of_form(DiagForm({Rat(1), Rat(35)}))));
    CHECK(gw_equal(psi0, Q_nd(2, 2, qs[0])));
  }

  TEST_CASE("psi at a single even point") {
    // V = {{0,1}}, U = P({0,1}): <t_0 t_1><<delta_0, delta_1>>
    std::vector<DiagForm> qs{DiagForm({Rat(2), Rat(3)}), DiagForm({Rat(5), Rat(-7)})};
    AffineSubspace v = single_point(SubsetF2::of({0, 1}));
    AffineSubspace u = power_set(SubsetF2::of({0, 1}));
    GWClass lhs = psi_quad(v, u, qs);
    GWClass rhs =
        GWClass::of_form(pfister_form({Rat(-6), Rat(35)})).scaled_by(Rat(10));  // t = 2*5
    CHECK(gw_equal(lhs, rhs));
  }

  TEST_CASE("hyperbolic binary slots give a split class") {
    std::vector<DiagForm> qs{hyperbolic_plane(), DiagForm({Rat(3), Rat(-3)})};
    AffineSubspace v = v_subspace(SubsetF2::empty(), SubsetF2::of({0, 1}));
    AffineSubspace u = power_set(SubsetF2::of({0, 1}));
    GWClass psi0 = psi0_quad(v, u, qs);
    CHECK(witt_zero(psi0));
  }

  TEST_CASE("psi0 drops to zero on an empty section") {
    std::vector<DiagForm> qs{DiagForm({Rat(2), Rat(3)})};
    AffineSubspace v = single_point(SubsetF2::of({0}));  // single odd point
    AffineSubspace u = power_set(SubsetF2::of({0}));
    CHECK(psi0_quad(v, u, qs).terms().empty());
  }

  TEST_CASE("direction containment is enforced") {
    std::vector<DiagForm> qs{DiagForm({Rat(2), Rat(3)}), DiagForm({Rat(5), Rat(7)})};
    AffineSubspace v = power_set(SubsetF2::of({0, 1}));
    AffineSubspace u = power_set(SubsetF2::of({0}));
    CHECK_THROWS_AS(psi_quad(v, u, qs), std::domain_error);
  }

  TEST_CASE("m=2 decomposition on small instances") {
    GenConfig gen = GenConfig::defaults();
    TrialRng rng(32);
    for (int t = 0; t < 10; ++t) {
      int nx = rng.uniform(1, 2);
      std::vector<DiagForm> qs;
      for (int i = 0; i < nx; ++i) qs.push_back(random_form(rng, gen, 2));
      std::vector<int> gamma(nx);
      for (int i = 0; i < nx; ++i) gamma[i] = rng.uniform(0, 2);
      CHECK(check_pq_m2(gamma, qs));
    }
  }

  TEST_CASE("pfister_times lands deep in the filtration") {
    GenConfig gen = GenConfig::defaults();
    TrialRng rng(34);
    for (int t = 0; t < 40; ++t) {
      int fold = rng.uniform(0, 2);
      std::vector<Rat> slots;
      for (int i = 0; i < fold; ++i) slots.push_back(random_rat(rng, gen));
      DiagForm q = pfister_form(slots);
      int v = rng.uniform(0, 2);
      RatMorphism f;
      f.universe = make_universe(2);
      f.on_singletons = {random_rat(rng, gen), random_rat(rng, gen)};
      AffineSubspace w = power_set(SubsetF2::full(v));
      CHECK(filtration_at_least(pfister_times(f, w, q), v + fold));
    }
  }

  TEST_CASE("psi0 is scaling invariant") {
    GenConfig gen = GenConfig::defaults();
    TrialRng rng(33);
    for (int t = 0; t < 25; ++t) {
      std::vector<DiagForm> qs{random_form(rng, gen, 2), random_form(rng, gen, 2)};
      Rat lambda = random_rat(rng, gen);
      std::vector<DiagForm> scaled_qs{scaled(lambda, qs[0]), scaled(lambda, qs[1])};
      AffineSubspace v = v_subspace(SubsetF2::of({1}), SubsetF2::of({0}));
      AffineSubspace u = power_set(SubsetF2::of({0, 1}));
      CHECK(gw_equal(psi0_quad(v, u, qs), psi0_quad(v, u, scaled_qs)));
    }
  }
}
