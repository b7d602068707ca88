#pragma once

#include "wittkit/rationals.hpp"

#include <vector>

namespace wittkit {

// An element of h^d(Q) = H^d(Q, mu_2): a formal sum of degree-d symbols.
// The multiset of symbols is reduced mod 2 (identical tuples cancel in
// pairs); equality is decided by local evaluation, not normal forms.
// Degree-0 classes are elements of Z/2, stored as 0 or 1 empty tuples.
struct CohClass {
  int degree = 0;
  std::vector<std::vector<SquareClass>> symbols;

  static CohClass zero(int degree);
  static CohClass one();  // the nonzero element of h^0

  bool formally_zero() const { return symbols.empty(); }
};

// A single symbol (a_1,...,a_d).
CohClass coh_symbol(std::vector<SquareClass> entries);

CohClass coh_add(const CohClass& x, const CohClass& y);  // degrees must match
CohClass cup(const CohClass& x, const CohClass& y);

bool coh_equal(const CohClass& x, const CohClass& y);
bool coh_zero(const CohClass& x);

std::string coh_to_string(const CohClass& x);

// One term of a sum of scaled Pfister forms: coeff * <scale> * <<slots>>.
// Only the 2-adic valuation of coeff and the slot classes matter in h^m.
struct ScaledPfisterTerm {
  long long coeff = 1;
  Rat scale = 1;
  std::vector<SquareClass> slots;
};

// The class in h^m of a sum of scaled Pfister forms, each term lying in
// I^m after absorbing the 2-power of its coefficient as <<-1,...,-1>>
// factors.  Terms of total fold > m contribute 0; a term of total fold < m
// is a domain error ("not in I^m").
CohClass class_of_scaled_pfister_sum(const std::vector<ScaledPfisterTerm>& terms, int m);

}  // namespace wittkit
