#pragma once

#include "wittkit/pfister.hpp"
#include "wittkit/quaternion.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace wittkit {

// A diagonal skew-hermitian form <z_1,...,z_r> over (Q, conjugation); every
// slot a pure invertible quaternion, each of reduced dimension 2.
struct HermDiagForm {
  QuaternionAlgebra alg;
  std::vector<Quat> gens;

  HermDiagForm(QuaternionAlgebra a, std::vector<Quat> g);

  int size() const { return static_cast<int>(gens.size()); }
};

// Exact diagonalization of a symmetric rational Gram matrix.
std::vector<Rat> gram_diagonalize(std::vector<std::vector<Rat>> m);

// The 4-dimensional trace form (x,y) -> Trd(x z conj(y) z') on Q, as a
// GW class.  Its sign against <Trd(z z')> phi({z,z'}) is determined
// empirically by the phi-trace-sign suite and recorded in its report.
GWClass trace_gram_class(const QuaternionAlgebra& alg, const Quat& z, const Quat& zp);

// The product <z>.<z'> in the graded ring: the trace form twisted by <-1>.
// The twist is pinned by the split-case Morita oracle, where the product of
// the corresponding binary forms is the negative of the raw trace Gram.
GWClass odd_product(const QuaternionAlgebra& alg, const Quat& z, const Quat& zp);

// An element of GW(Q) + GW^{-1}(Q,gamma): an even GW class plus a formal
// integer combination of rank-one skew-hermitian slots.
struct GradedGWElement {
  GWClass even;
  std::vector<std::pair<Quat, long long>> odd;

  static GradedGWElement one();
  GradedGWElement& add_odd(const Quat& z, long long mult);
};

GradedGWElement graded_add(const GradedGWElement& x, const GradedGWElement& y);
GradedGWElement graded_mul(const QuaternionAlgebra& alg, const GradedGWElement& x,
                           const GradedGWElement& y);

// pi(I) = <<z_i^2>>_{i in I}.
DiagForm pi_form(const HermDiagForm& h, const SubsetF2& i_set);

// phi(I): pi(I) for |I| <= 1; otherwise the unique |I|-fold Pfister form
// Witt-equivalent to pi(I) - 2^{|I|-2} n_Q, built as
// <<z_1^2, z_0^2 z_2^2, z_3^2, ..., z_n^2>> with z_0 anti-commuting with
// z_1.  The Witt-equivalence postcondition is asserted.
std::vector<Rat> phi_slots(const HermDiagForm& h, const SubsetF2& i_set);
DiagForm phi_form(const HermDiagForm& h, const SubsetF2& i_set);

// t: P_0(S) -> Q^x/G(phi(S)) with t({i,j}) = -Trd(z_i z_j); pairs with
// vanishing trace get representative 1 (phi(S) is then hyperbolic).
ModSimMorphism t_morphism(const HermDiagForm& h, const SubsetF2& s_set);

// Psi_0^{J,A}((h_i)) = <<t|W_{J,A}>> phi(A u J), W_{J,A} = (J+P(A)) cap P_0(X);
// zero when W is empty.  J and A disjoint, J u A nonempty.
GWClass psi0_herm(const HermDiagForm& h, const SubsetF2& j_set, const SubsetF2& a_set);

// Scaled-Pfister presentation of Psi_0^{J,A}: scale t(x_0) on the
// (2|A|+|J|-1)-fold form <<-t(w_1),...,-t(w_l), phi-slots>>.  Empty W gives
// no terms.
std::vector<ScaledPfisterTerm> psi0_herm_presentation(const HermDiagForm& h,
                                                      const SubsetF2& j_set,
                                                      const SubsetF2& a_set);

// P_2^d(<z>) in the graded ring: 1, 2 - <z>, <<z^2>> - <z> for d = 0,1,2.
GradedGWElement herm_P2(const QuaternionAlgebra& alg, const Quat& z, int d);

// The even (GW(K)) component of P_n^d(h) for h = sum of the rank-2 slots;
// n = 2 |gens|, d <= n.
GWClass Q_herm(int n, int d, const HermDiagForm& h);

// N(x,d) = sum over A with 2|A| <= d <= x+|A| of C(x,|A|) C(x-|A|, d-2|A|)
// 2^{d-|A|-2}; d even, 2 < d <= 2x.  Divisibility by 2^{d/2-2} asserted.
long long N_coeff(int x, int d);

// The multiplicity of n_Q that actually arises when Q_n^d is restricted to
// sums of rank-2 slots: only A with |A| >= 2 inject the norm form, because
// phi(A) = pi(A) when |A| <= 1.  Differs from N_coeff exactly when some A
// with |A| <= 1 meets 2|A| <= d <= x+|A| (so for d = 4, x >= 3).
long long norm_form_multiplicity(int x, int d);

// Q_n^d(h) = norm_form_multiplicity(|X|,d) n_Q + sum_{J,A}
// C(|X|+|A|-k, |X|+|A|-d) 2^{d-k} Psi_0^{J,A} with k = 2|A|+|J|, compared
// as Witt classes.
bool verify_qnd_quat(const HermDiagForm& h, int d);

// beta_hat = sum_d a_d Q_herm(n,d,h) - sum_d a_d norm_form_multiplicity n_Q;
// the Witt filtration degree is checked against min_d (deg a_d + d - 1) and
// a property_violation is thrown on failure.
struct property_violation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

GWClass beta_hat(const std::vector<std::pair<GWClass, int>>& coeffs, const HermDiagForm& h);

// The class of beta_hat in h^m, assembled from the Psi_0 decomposition
// (the n_Q multiples cancel by construction).  Each coefficient a_d is
// given as a sum of scaled Pfister terms of fold >= m-d+1.
CohClass extension_class(const std::vector<std::pair<std::vector<ScaledPfisterTerm>, int>>& coeffs,
                         const HermDiagForm& h, int m);

// The binary quadratic form corresponding to <z> over the split algebra
// (1,1) through the fixed matrix model; signed discriminant = z^2.
DiagForm morita_split_11(const QuaternionAlgebra& alg, const Quat& z);

}  // namespace wittkit
