#include "wittkit/f2comb.hpp"

#include "wittkit/randomgen.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace wittkit;

namespace {

std::set<SubsetF2> as_set(const std::vector<SubsetF2>& v) { return {v.begin(), v.end()}; }

// Enumeration oracle for the parity section: filter even members.
std::set<SubsetF2> even_members(const AffineSubspace& w) {
  std::set<SubsetF2> out;
  for (const auto& x : w.enumerate())
    if (x.even()) out.insert(x);
  return out;
}

}  // namespace

TEST_SUITE("f2comb") {
  TEST_CASE("affine enumeration") {
    AffineSubspace w = power_set(SubsetF2::of({0, 1, 2}));
    auto pts = w.enumerate();
    CHECK(pts.size() == 8);
    CHECK(as_set(pts).size() == 8);
    CHECK(w.contains(SubsetF2::of({1, 2})));
    CHECK_THROWS_AS(make_affine(SubsetF2::empty(),
                                {SubsetF2::of({0}), SubsetF2::of({1}), SubsetF2::of({0, 1})}),
                    std::domain_error);
  }

  TEST_CASE("parity hyperplane section") {
    auto s = parity_hyperplane_section(power_set(SubsetF2::of({0, 1})));
    REQUIRE(s.has_value());
    CHECK(s->dim() == 1);
    CHECK(as_set(s->enumerate()) ==
          std::set<SubsetF2>{SubsetF2::empty(), SubsetF2::of({0, 1})});

    CHECK_FALSE(parity_hyperplane_section(single_point(SubsetF2::of({0}))).has_value());

    AffineSubspace line = make_affine(SubsetF2::of({0, 1}), {SubsetF2::of({2})});
    auto sec = parity_hyperplane_section(line);
    REQUIRE(sec.has_value());
    CHECK(as_set(sec->enumerate()) == even_members(line));
    CHECK(as_set(sec->enumerate()) == std::set<SubsetF2>{SubsetF2::of({0, 1})});
  }

  TEST_CASE("section matches enumeration on random subspaces") {
    TrialRng rng(11);
    for (int t = 0; t < 200; ++t) {
      int n = rng.uniform(1, 6);
      SubsetF2 base(static_cast<std::uint32_t>(rng.uniform(0, (1 << n) - 1)));
      std::vector<SubsetF2> gens;
      for (int i = rng.uniform(0, 3); i > 0; --i)
        gens.push_back(SubsetF2(static_cast<std::uint32_t>(rng.uniform(1, (1 << n) - 1))));
      AffineSubspace w;
      try {
        w = make_affine(base, gens);
      } catch (const std::domain_error&) {
        continue;  // dependent draw
      }
      auto sec = parity_hyperplane_section(w);
      std::set<SubsetF2> expect = even_members(w);
      if (!sec.has_value()) {
        CHECK(expect.empty());
      } else {
        CHECK(as_set(sec->enumerate()) == expect);
      }
    }
  }

  TEST_CASE("v_subspace") {
    auto w = v_subspace(SubsetF2::empty(), SubsetF2::of({0}));
    CHECK(as_set(w.enumerate()) == std::set<SubsetF2>{SubsetF2::empty(), SubsetF2::of({0})});
    w = v_subspace(SubsetF2::of({1}), SubsetF2::of({0}));
    CHECK(as_set(w.enumerate()) ==
          std::set<SubsetF2>{SubsetF2::of({1}), SubsetF2::of({0, 1})});
    w = v_subspace(SubsetF2::of({1, 2}), SubsetF2::empty());
    CHECK(as_set(w.enumerate()) == std::set<SubsetF2>{SubsetF2::of({1, 2})});
    CHECK_THROWS_AS(v_subspace(SubsetF2::of({0}), SubsetF2::of({0})), std::domain_error);
  }

  TEST_CASE("theta counts fibers") {
    ProductUniverse u = make_product(2, 2);
    SubsetF2 i_set = SubsetF2::of({u.index(0, 0), u.index(0, 1), u.index(1, 0)});
    CHECK(theta(u, i_set) == std::vector<int>{2, 1});
    CHECK(theta(u, SubsetF2::empty()) == std::vector<int>{0, 0});
    CHECK(theta(u, SubsetF2::of({u.index(1, 1)})) == std::vector<int>{0, 1});
  }

  TEST_CASE("s and delta images split the product space") {
    for (int nx = 1; nx <= 3; ++nx) {
      ProductUniverse u = make_product(nx, 2);
      std::vector<int> section(nx, 0);
      std::vector<SubsetF2> basis;
      for (int i = 0; i < nx; ++i) basis.push_back(s_push(u, SubsetF2::singleton(i), section));
      for (int i = 0; i < nx; ++i) basis.push_back(delta_push(u, SubsetF2::singleton(i)));
      AffineSubspace span = make_affine(SubsetF2::empty(), basis);  // throws if dependent
      CHECK(span.dim() == 2 * nx);
    }
  }

  TEST_CASE("group algebra identity, hand-expanded case") {
    // |X| = 1, gamma = 1: both sides are 2[{}] + [{(0,0)}] + [{(0,1)}]
    ProductUniverse u = make_product(1, 2);
    GroupAlgebraElt expected;
    expected.add(SubsetF2::empty(), 2);
    expected.add(SubsetF2::of({u.index(0, 0)}), 1);
    expected.add(SubsetF2::of({u.index(0, 1)}), 1);
    GroupAlgebraElt lhs;
    for (int j = 0; j < 2; ++j) {
      SubsetF2 i_set = SubsetF2::of({u.index(0, j)});
      lhs = lhs + sigma(power_set(i_set).enumerate());
    }
    CHECK(lhs == expected);
    CHECK(verify_group_algebra_identity(1, 2, {1}, {0}));
    CHECK(verify_group_algebra_identity(1, 2, {1}, {1}));
  }

  TEST_CASE("group algebra identity, exhaustive small cases") {
    TrialRng rng(12);
    for (int nx = 1; nx <= 3; ++nx) {
      std::vector<int> gamma(nx, 0);
      while (true) {
        CHECK(verify_group_algebra_identity(nx, 2, gamma, std::vector<int>(nx, 0)));
        std::vector<int> section(nx);
        for (int i = 0; i < nx; ++i) section[i] = rng.uniform(0, 1);
        CHECK(verify_group_algebra_identity(nx, 2, gamma, section));
        int i = 0;
        for (; i < nx; ++i) {
          if (++gamma[i] <= 2) break;
          gamma[i] = 0;
        }
        if (i == nx) break;
      }
    }
    CHECK(verify_group_algebra_identity(2, 2, {0, 0}, {0, 0}));
    CHECK_THROWS_AS(verify_group_algebra_identity(1, 2, {3}, {0}), std::domain_error);
  }
}
