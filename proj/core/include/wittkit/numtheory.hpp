#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <vector>

namespace wittkit {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

Int rat_num(const Rat& q);
Int rat_den(const Rat& q);

// Deterministic Miller-Rabin; exact for all inputs this library produces
// (the base set is proven for n < 3.3e24).
bool is_probable_prime(const Int& n);

// Prime factorization of |n|, n != 0.  Trial division up to `bound`, then
// Pollard-Brent on the cofactor.  Throws std::domain_error on zero input.
std::map<Int, int> factorize(Int n, const Int& bound = 100000);

// p-adic valuation; q != 0, p prime.
int valuation(Int n, const Int& p);
int valuation(const Rat& q, const Int& p);

Int mod_pow(Int base, Int exp, const Int& mod);

// Legendre symbol (a|p), p an odd prime, p does not divide a.
int legendre(const Int& a, const Int& p);

// Residue of the unit part of q at p (q a p-adic unit), as an integer in
// [0, m).  Used for the mod-p and mod-8 branches of the Hilbert symbol.
Int unit_residue(const Rat& q, const Int& p, const Int& m);

// Binomial coefficient, 0 outside 0 <= k <= n.
Int binomial(int n, int k);
long long binomial_ll(int n, int k);

int v2_ll(long long n);  // 2-adic valuation of |n|, n != 0

}  // namespace wittkit
