#include "wittkit/rationals.hpp"

#include <stdexcept>

namespace wittkit {

SquareClass squarefree_rep(const Rat& a) {
  if (a == 0) throw std::domain_error("squarefree_rep: zero input");
  // a = num/den ~ num*den mod squares.
  Int n = rat_num(a) * rat_den(a);
  bool neg = n < 0;
  auto fac = factorize(n);
  Int s = 1;
  for (const auto& [p, e] : fac) {
    if (e % 2 != 0) s *= p;
  }
  return SquareClass(neg ? -s : s);
}

SquareClass sq_mul(const SquareClass& a, const SquareClass& b) {
  Int g = gcd(a.rep, b.rep);
  return SquareClass(a.rep / g * (b.rep / g));
}

SquareClass sq_neg(const SquareClass& a) { return SquareClass(-a.rep); }

Place Place::finite(Int p) {
  if (p < 2 || !is_probable_prime(p)) throw std::domain_error("Place: not a prime");
  Place v;
  v.prime = std::move(p);
  return v;
}

namespace {

// Exponents mod 2 used by the dyadic Hilbert symbol.
int eps_mod2(const Int& u_mod8) {  // (u-1)/2 mod 2 for odd u
  Int r = u_mod8 % 4;
  return r == 1 ? 0 : 1;
}

int omega_mod2(const Int& u_mod8) {  // (u^2-1)/8 mod 2 for odd u
  return (u_mod8 == 1 || u_mod8 == 7) ? 0 : 1;
}

}  // namespace

int hilbert_symbol(const SquareClass& a, const SquareClass& b, const Place& v) {
  if (v.is_real()) {
    return (a.rep < 0 && b.rep < 0) ? -1 : 1;
  }
  const Int& p = v.prime;
  const Rat ra(a.rep), rb(b.rep);
  int alpha = valuation(a.rep, p);
  int beta = valuation(b.rep, p);
  if (p == 2) {
    Int u = unit_residue(ra, 2, Int(8));
    Int w = unit_residue(rb, 2, Int(8));
    int e = eps_mod2(u) * eps_mod2(w) + alpha * omega_mod2(w) + beta * omega_mod2(u);
    return e % 2 == 0 ? 1 : -1;
  }
  Int u = unit_residue(ra, p, p);
  Int w = unit_residue(rb, p, p);
  int sign = 1;
  if (alpha % 2 != 0 && beta % 2 != 0 && (p - 1) / 2 % 2 != 0) sign = -sign;
  if (beta % 2 != 0 && legendre(u, p) == -1) sign = -sign;
  if (alpha % 2 != 0 && legendre(w, p) == -1) sign = -sign;
  return sign;
}

int hilbert_symbol(const Rat& a, const Rat& b, const Place& v) {
  if (a == 0 || b == 0) throw std::domain_error("hilbert_symbol: zero input");
  return hilbert_symbol(squarefree_rep(a), squarefree_rep(b), v);
}

std::set<Place> relevant_places(const std::vector<SquareClass>& entries) {
  std::set<Place> out{Place::real(), Place::finite(Int(2))};
  for (const auto& e : entries) {
    for (const auto& [p, _] : factorize(e.rep)) out.insert(Place::finite(p));
  }
  return out;
}

std::set<Place> relevant_places(const std::vector<Rat>& entries) {
  std::vector<SquareClass> cls;
  cls.reserve(entries.size());
  for (const auto& e : entries) cls.push_back(squarefree_rep(e));
  return relevant_places(cls);
}

bool is_local_square(const SquareClass& a, const Place& v) {
  if (a.rep == 1) return true;
  if (v.is_real()) return a.rep > 0;
  const Int& p = v.prime;
  int val = valuation(a.rep, p);
  if (val % 2 != 0) return false;
  if (p == 2) return unit_residue(Rat(a.rep), 2, Int(8)) == 1;
  return legendre(unit_residue(Rat(a.rep), p, p), p) == 1;
}

std::string rat_to_string(const Rat& q) {
  std::string s = rat_num(q).str();
  if (rat_den(q) != 1) s += "/" + rat_den(q).str();
  return s;
}

Rat rat_from_string(const std::string& s) {
  try {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rat(num, den);
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed rational: \"" + s + "\"");
  }
}

std::string place_to_string(const Place& v) {
  return v.is_real() ? "real" : v.prime.str();
}

}  // namespace wittkit
