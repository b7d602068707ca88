#include "wittkit/json_io.hpp"

#include <doctest.h>

TEST_SUITE("json") {
  TEST_CASE("round trips") {
    using namespace wittkit;
    DiagForm q({Rat(1), Rat(-2, 3)});
    CHECK(form_from_json(form_to_json(q)).entries == q.entries);
    HermDiagForm h(QuaternionAlgebra(-1, -1),
                   {Quat::pure(1, 0, 0), Quat::pure(0, 1, 2)});
    HermDiagForm h2 = herm_from_json(herm_to_json(h));
    CHECK(h2.alg == h.alg);
    CHECK(h2.gens == h.gens);
    CHECK_THROWS_AS(form_from_json("[\"1\",]"), std::invalid_argument);
    CHECK_THROWS_AS(herm_from_json("{}"), std::invalid_argument);

    Universe u = make_universe(3);
    SubsetF2 s = SubsetF2::of({0, 2});
    CHECK(subset_to_json(s, u) == "[\"0\",\"2\"]");
    CHECK(subset_from_json(subset_to_json(s, u), u) == s);
    CHECK_THROWS_AS(subset_from_json("[\"9\"]", u), std::invalid_argument);

    SquareClassMorphism f;
    f.universe = u;
    f.on_singletons = {squarefree_rep(Rat(-2)), squarefree_rep(Rat(18)),
                       squarefree_rep(Rat(-1))};
    SquareClassMorphism g = morphism_from_json(morphism_to_json(f));
    CHECK(g.on_singletons == f.on_singletons);
    CHECK(g.eval(SubsetF2::of({0, 1})) == f.eval(SubsetF2::of({0, 1})));
  }

  TEST_CASE("gw and coh payloads") {
    using namespace wittkit;
    GWClass x = GWClass::of_form(DiagForm({Rat(2), Rat(2), Rat(-3)}));
    std::string j = gw_to_json(x);
    CHECK(j.find("\"class\":\"2\"") != std::string::npos);
    CHECK(j.find("\"mult\":2") != std::string::npos);
    std::string c = coh_to_json(coh_symbol({squarefree_rep(Rat(2)), squarefree_rep(Rat(3))}));
    CHECK(c.find("\"degree\":2") != std::string::npos);
  }
}
