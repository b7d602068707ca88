#include "wittkit/numtheory.hpp"

#include <boost/multiprecision/integer.hpp>

#include <stdexcept>

namespace wittkit {

namespace {

Int abs_int(const Int& n) { return n < 0 ? Int(-n) : n; }

bool miller_rabin_witness(const Int& n, const Int& a, const Int& d, int r) {
  Int x = mod_pow(a % n, d, n);
  if (x == 1 || x == n - 1) return false;
  for (int i = 1; i < r; ++i) {
    x = (x * x) % n;
    if (x == n - 1) return false;
  }
  return true;
}

// Pollard-Brent with incrementing additive constant; n odd composite, n > 1.
Int pollard_brent(const Int& n) {
  if (n % 2 == 0) return 2;
  for (Int c = 1;; ++c) {
    Int x = 2, y = 2, d = 1;
    Int q = 1;
    int lam = 1;
    while (d == 1) {
      x = y;
      for (int i = 0; i < lam; ++i) y = (y * y + c) % n;
      int k = 0;
      while (k < lam && d == 1) {
        Int ys = y;
        int lim = std::min(128, lam - k);
        for (int i = 0; i < lim; ++i) {
          y = (y * y + c) % n;
          q = q * abs_int(x - y) % n;
        }
        d = gcd(q, n);
        k += lim;
        if (d == n) {
          // backtrack one step at a time
          d = 1;
          y = ys;
          while (d == 1) {
            y = (y * y + c) % n;
            d = gcd(abs_int(x - y), n);
          }
          break;
        }
      }
      lam *= 2;
    }
    if (d != n) return d;
  }
}

}  // namespace

Int rat_num(const Rat& q) { return boost::multiprecision::numerator(q); }
Int rat_den(const Rat& q) { return boost::multiprecision::denominator(q); }

bool is_probable_prime(const Int& n) {
  if (n < 2) return false;
  static const int small_primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (int p : small_primes) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  Int d = n - 1;
  int r = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++r;
  }
  for (int p : small_primes) {
    if (miller_rabin_witness(n, Int(p), d, r)) return false;
  }
  return true;
}

std::map<Int, int> factorize(Int n, const Int& bound) {
  if (n == 0) throw std::domain_error("factorize: zero input");
  n = abs_int(n);
  std::map<Int, int> out;
  for (Int p = 2; p <= bound && p * p <= n; p == 2 ? p = 3 : p += 2) {
    while (n % p == 0) {
      ++out[p];
      n /= p;
    }
  }
  // Recursive split of the remaining cofactor.
  std::vector<Int> stack;
  if (n > 1) stack.push_back(n);
  while (!stack.empty()) {
    Int m = stack.back();
    stack.pop_back();
    if (m == 1) continue;
    if (is_probable_prime(m)) {
      ++out[m];
      continue;
    }
    Int s = boost::multiprecision::sqrt(m);
    if (s * s == m) {
      stack.push_back(s);
      stack.push_back(s);
      continue;
    }
    Int d = pollard_brent(m);
    stack.push_back(d);
    stack.push_back(m / d);
  }
  return out;
}

int valuation(Int n, const Int& p) {
  if (n == 0) throw std::domain_error("valuation: zero input");
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

int valuation(const Rat& q, const Int& p) {
  return valuation(rat_num(q), p) - valuation(rat_den(q), p);
}

Int mod_pow(Int base, Int exp, const Int& mod) {
  Int result = 1;
  base %= mod;
  if (base < 0) base += mod;
  while (exp > 0) {
    if (exp % 2 == 1) result = result * base % mod;
    base = base * base % mod;
    exp /= 2;
  }
  return result;
}

int legendre(const Int& a, const Int& p) {
  Int r = mod_pow(a, (p - 1) / 2, p);
  if (r == 0) throw std::domain_error("legendre: p divides a");
  return r == 1 ? 1 : -1;
}

Int unit_residue(const Rat& q, const Int& p, const Int& m) {
  Int num = rat_num(q);
  Int den = rat_den(q);
  while (num % p == 0) num /= p;
  while (den % p == 0) den /= p;
  // den is a unit mod m for m a power of p; invert by Euler.
  Int phi = m / p * (p - 1);
  Int inv = mod_pow(den, phi - 1, m);
  Int r = num % m * inv % m;
  if (r < 0) r += m;
  return r;
}

Int binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Int r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

long long binomial_ll(int n, int k) {
  return binomial(n, k).convert_to<long long>();
}

int v2_ll(long long n) {
  if (n == 0) throw std::domain_error("v2_ll: zero input");
  if (n < 0) n = -n;
  int v = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++v;
  }
  return v;
}

}  // namespace wittkit
