#pragma once

#include "wittkit/cohomology.hpp"
#include "wittkit/quadform.hpp"

#include <vector>

namespace wittkit {

// lambda^d(<a_i>) = <a_I>_{|I|=d}; zero when d > dim.
GWClass lambda_d(const DiagForm& q, int d);

// P_r^d = sum_{k=0}^{d} (-1)^k C(r-k, d-k) lambda^k; requires d <= r.
GWClass P_rd(int r, int d, const DiagForm& q);

// Q_n^d: the even part of P_n^d, i.e. the even-k sub-sum.
GWClass Q_nd(int n, int d, const DiagForm& q);

struct EvenOddPair {
  GWClass even;
  GWClass odd;
};

// Even/odd split of P_m^d(q): lambda^k lands in the even part iff k is even.
EvenOddPair even_odd_P(int m, int d, const DiagForm& q);

// P_m^gamma((q_i)) = prod_i P_m^{gamma(i)}(q_i); all forms of equal
// dimension m, gamma values <= m.
GWClass P_gamma(const std::vector<int>& gamma, const std::vector<DiagForm>& qs);

// The even part of P_m^gamma: sum over even-cardinality S of the product of
// odd parts over S and even parts elsewhere.
GWClass Q_gamma(const std::vector<int>& gamma, const std::vector<DiagForm>& qs);

// Stiefel-Whitney invariants: w_d(<a_i>) = sum_{|I|=d} (a_i)_{i in I}.
CohClass w_d(const DiagForm& q, int d);
CohClass w_gamma(const std::vector<int>& gamma, const std::vector<DiagForm>& qs);

// P_{s+t}^d(q1+q2) = sum_{d1+d2=d} P_s^{d1}(q1) P_t^{d2}(q2), exact in
// GW(Q); requires dim q1 = s, dim q2 = t.
bool check_sum_rule(int s, int t, int d, const DiagForm& q1, const DiagForm& q2);

// P_r^d(q) = sum_{|I|=d} <<f|P(I)>> with f({i}) = -a_i, as Witt classes;
// also checks the filtration degree is at least d.
bool check_prd_expansion(int r, int d, const DiagForm& q);

// The class of P_r^d(q) in h^d, through the Pfister expansion; dim q = r.
CohClass prd_class(int r, int d, const DiagForm& q);

// The class of P_r^d(q) in h^d, computed through the Pfister expansion,
// equals w_d(q).
bool check_sw_lift(int r, int d, const DiagForm& q);

// P_{rm}^d(sum q_i) = sum_{|gamma|=d} P_m^gamma((q_i)), and the Q and w_d
// analogues; exact in GW (resp. h^d).
bool check_decom_prd_gamma(const std::vector<DiagForm>& qs, int d);
bool check_decom_qrd_gamma(const std::vector<DiagForm>& qs, int d);
bool check_decom_wd(const std::vector<DiagForm>& qs, int d);

// Image of P_{m|Y|}^gamma under splitting each form into |Y| pieces:
// sum over omega: X x Y -> {0..m} with omega_X = gamma of P_m^omega.
bool check_prd_gamma_omega(const std::vector<std::vector<DiagForm>>& grid,
                           const std::vector<int>& gamma);

// Same identity for every gamma at once (single sweep over all omega).
bool check_prd_gamma_omega_all(const std::vector<std::vector<DiagForm>>& grid);

// The four fully-diagonalized splitting identities (P/Q, d-level and
// gamma-level) for entries a[i][j], as Witt classes.
bool check_pq_split(const std::vector<std::vector<Rat>>& entries);

}  // namespace wittkit
