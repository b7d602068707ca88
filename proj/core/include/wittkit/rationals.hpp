#pragma once

#include "wittkit/numtheory.hpp"

#include <set>
#include <string>
#include <vector>

namespace wittkit {

// A square class of Q^x, canonicalized as a signed squarefree integer.
// Equality of square classes is plain integer comparison.
struct SquareClass {
  Int rep = 1;

  SquareClass() = default;
  explicit SquareClass(Int r) : rep(std::move(r)) {}

  bool is_trivial() const { return rep == 1; }
  bool is_negative() const { return rep < 0; }

  friend bool operator==(const SquareClass& a, const SquareClass& b) { return a.rep == b.rep; }
  friend bool operator!=(const SquareClass& a, const SquareClass& b) { return a.rep != b.rep; }
  friend bool operator<(const SquareClass& a, const SquareClass& b) { return a.rep < b.rep; }
};

// The unique squarefree integer s with a/s a square in Q.  Throws
// std::domain_error on zero input.
SquareClass squarefree_rep(const Rat& a);

// Product in Q^x/(Q^x)^2.  Both inputs squarefree, so the squarefree part
// of the product is a*b / gcd(a,b)^2; no factorization needed.
SquareClass sq_mul(const SquareClass& a, const SquareClass& b);
SquareClass sq_neg(const SquareClass& a);

// A place of Q: the real place or a finite prime.
struct Place {
  Int prime = 0;  // 0 encodes the real place

  static Place real() { return Place{}; }
  static Place finite(Int p);

  bool is_real() const { return prime == 0; }

  friend bool operator==(const Place& a, const Place& b) { return a.prime == b.prime; }
  friend bool operator<(const Place& a, const Place& b) { return a.prime < b.prime; }
};

// Hilbert symbol (a,b)_v in {+1,-1}: whether z^2 = a x^2 + b y^2 has a
// nonzero solution over the completion at v.
int hilbert_symbol(const Rat& a, const Rat& b, const Place& v);
int hilbert_symbol(const SquareClass& a, const SquareClass& b, const Place& v);

// {Real, 2} together with every prime dividing some entry's squarefree
// representative: a superset of the places where any symbol built from the
// entries can ramify.
std::set<Place> relevant_places(const std::vector<Rat>& entries);
std::set<Place> relevant_places(const std::vector<SquareClass>& entries);

// Whether the class is a square in the completion at v.
bool is_local_square(const SquareClass& a, const Place& v);

std::string rat_to_string(const Rat& q);           // "n" or "p/q"
Rat rat_from_string(const std::string& s);         // throws std::invalid_argument
std::string place_to_string(const Place& v);

}  // namespace wittkit
