#pragma once

#include "wittkit/cohomology.hpp"
#include "wittkit/hermitian.hpp"
#include "wittkit/pfister.hpp"
#include "wittkit/quadform.hpp"

#include <string>

namespace wittkit {

// JSON schemas:
//   DiagForm            ["1","-2","3/5"]
//   GWClass             {"terms": [{"class":"-2","mult":3}, ...]}
//   CohClass            {"degree": 2, "symbols": [["a","b"], ...]}
//   QuaternionAlgebra   {"a":"-1","b":"-1"}
//   pure quaternion     ["x","y","z"]  (meaning x i + y j + z k)
//   HermDiagForm        {"algebra": {...}, "gens": [["1","0","0"], ...]}
//   SubsetF2            sorted label array, e.g. ["0","2"]
//   SquareClassMorphism {"0":"-2","1":"-3"} on singleton labels

std::string form_to_json(const DiagForm& q);
DiagForm form_from_json(const std::string& text);

std::string gw_to_json(const GWClass& x);
std::string coh_to_json(const CohClass& x);

std::string algebra_to_json(const QuaternionAlgebra& alg);
QuaternionAlgebra algebra_from_json(const std::string& text);

std::string pure_quat_to_json(const Quat& z);
Quat pure_quat_from_json(const std::string& text);

std::string herm_to_json(const HermDiagForm& h);
HermDiagForm herm_from_json(const std::string& text);

std::string subset_to_json(const SubsetF2& s, const Universe& u);
SubsetF2 subset_from_json(const std::string& text, const Universe& u);

std::string morphism_to_json(const SquareClassMorphism& f);
SquareClassMorphism morphism_from_json(const std::string& text);

}  // namespace wittkit
