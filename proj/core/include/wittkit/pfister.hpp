#pragma once

#include "wittkit/cohomology.hpp"
#include "wittkit/f2comb.hpp"
#include "wittkit/quadform.hpp"

#include <map>
#include <utility>
#include <vector>

namespace wittkit {

// A group morphism P(X) -> Q^x/(Q^x)^2, determined by its singleton values
// and extended multiplicatively: f(I delta J) = f(I) f(J), f(empty) = 1.
struct SquareClassMorphism {
  Universe universe;
  std::vector<SquareClass> on_singletons;

  SquareClass eval(const SubsetF2& x) const;
};

// A morphism with rational representatives (values taken mod the
// similarity group of some reference form downstream).
struct RatMorphism {
  Universe universe;
  std::vector<Rat> on_singletons;

  Rat eval(const SubsetF2& x) const;
};

// <<f|W>> data: a square-class morphism plus an affine subspace of P(X).
struct PfisterPresentation {
  SquareClassMorphism f;
  AffineSubspace w;
};

// The diagonal form <f(x)>_{x in W}: a general Pfister form of fold dim W,
// a Pfister form when W is linear.
DiagForm pfister_of(const PfisterPresentation& p);

// Same value in GW(Q), built from the already-reduced square classes.
GWClass pfister_gw(const PfisterPresentation& p);

// The 2^n-dimensional Pfister form <<c_1,...,c_n>> = <1,-c_1>...<1,-c_n>.
DiagForm pfister_form(const std::vector<Rat>& slots);

// Slots of a linear presentation in the canonical basis: a_k = -f(e_k).
// Throws std::domain_error when W is affine proper.
std::vector<SquareClass> pfister_slots(const PfisterPresentation& p);

// The degree-n symbol (a_1,...,a_n) of an n-fold Pfister form.
CohClass symbol_of_pfister(const PfisterPresentation& p);

// <<f|W>>q = sum over x in W of <f(x)> q, values mod G(q).
GWClass pfister_times(const RatMorphism& f, const AffineSubspace& w, const DiagForm& q);

// q = <t><<delta>> for binary q, with delta = -det(q) the signed
// discriminant and t the first entry.
std::pair<Rat, SquareClass> binary_decompose(const DiagForm& q);

// Psi^{V,U}((q_i)) = <<t|V; delta|U>> for binary forms q_i, with
// delta({i}) = -delta_i and t({i}) = -t_i; requires dir(V) <= dir(U).
GWClass psi_quad(const AffineSubspace& v, const AffineSubspace& u,
                 const std::vector<DiagForm>& qs);

// Psi_0^{V,U} = Psi^{V cap P_0(X), U}; zero when the section is empty.
GWClass psi0_quad(const AffineSubspace& v, const AffineSubspace& u,
                  const std::vector<DiagForm>& qs);

// Both identities of the m=2 decomposition: P_2^gamma (resp. Q_2^gamma)
// equals sum over J subset B of 2^{|B\J|} Psi^{J,A} (resp Psi_0^{J,A}),
// with A = gamma^{-1}(2), B = gamma^{-1}(1); compared as Witt classes.
bool check_pq_m2(const std::vector<int>& gamma, const std::vector<DiagForm>& qs);

// A morphism t: P_0(S) -> Q^x/G(phi_ref) stored on the basis pairs
// {anchor, s}; values extended multiplicatively through representatives.
struct ModSimMorphism {
  SubsetF2 support;
  int anchor = -1;               // lowest index of S; -1 when |S| < 2
  std::map<int, Rat> pair_value;  // value on {anchor, s}
  DiagForm phi_ref;

  Rat eval(const SubsetF2& even_subset) const;
};

}  // namespace wittkit
