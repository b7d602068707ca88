#pragma once

#include "wittkit/quadform.hpp"

#include <array>
#include <string>

namespace wittkit {

// An element c0 + c1 i + c2 j + c3 k of a quaternion algebra.
struct Quat {
  std::array<Rat, 4> c{Rat(0), Rat(0), Rat(0), Rat(0)};

  static Quat scalar(Rat s);
  static Quat pure(Rat x, Rat y, Rat z);

  bool is_pure() const { return c[0] == 0; }
  friend bool operator==(const Quat& a, const Quat& b) { return a.c == b.c; }
  friend bool operator<(const Quat& a, const Quat& b) { return a.c < b.c; }
  friend Quat operator+(const Quat& a, const Quat& b);
  friend Quat operator-(const Quat& a, const Quat& b);
};

std::string quat_to_string(const Quat& q);

// The rational quaternion algebra (a,b): i^2 = a, j^2 = b, ij = k = -ji.
struct QuaternionAlgebra {
  Rat a, b;

  QuaternionAlgebra(Rat a_, Rat b_);

  Quat mul(const Quat& x, const Quat& y) const;
  Quat conj(const Quat& x) const;
  Rat trd(const Quat& x) const { return 2 * x.c[0]; }
  Rat nrd(const Quat& x) const;

  DiagForm norm_form() const;  // <1,-a,-b,ab>
  bool is_split() const;

  friend bool operator==(const QuaternionAlgebra& p, const QuaternionAlgebra& q) {
    return p.a == q.a && p.b == q.b;
  }
};

// A pure invertible z0 with trd(z z0) = 0; basis vectors are preferred,
// then integer combinations of a basis of the trace-orthogonal complement.
Quat find_anticommuting(const QuaternionAlgebra& alg, const Quat& z);

// Trd(z1 z2) Trd(z1 z3) = z1^2 Trd(z2 z3) + Trd(z1 z2 z1 z3), exactly.
bool check_magique(const QuaternionAlgebra& alg, const Quat& z1, const Quat& z2, const Quat& z3);

}  // namespace wittkit
