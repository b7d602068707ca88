#include "wittkit/quaternion.hpp"

#include <stdexcept>

namespace wittkit {

Quat Quat::scalar(Rat s) {
  Quat q;
  q.c[0] = std::move(s);
  return q;
}

Quat Quat::pure(Rat x, Rat y, Rat z) {
  Quat q;
  q.c[1] = std::move(x);
  q.c[2] = std::move(y);
  q.c[3] = std::move(z);
  return q;
}

Quat operator+(const Quat& a, const Quat& b) {
  Quat q;
  for (int i = 0; i < 4; ++i) q.c[i] = a.c[i] + b.c[i];
  return q;
}

Quat operator-(const Quat& a, const Quat& b) {
  Quat q;
  for (int i = 0; i < 4; ++i) q.c[i] = a.c[i] - b.c[i];
  return q;
}

std::string quat_to_string(const Quat& q) {
  return rat_to_string(q.c[0]) + " + " + rat_to_string(q.c[1]) + "i + " +
         rat_to_string(q.c[2]) + "j + " + rat_to_string(q.c[3]) + "k";
}

QuaternionAlgebra::QuaternionAlgebra(Rat a_, Rat b_) : a(std::move(a_)), b(std::move(b_)) {
  if (a == 0 || b == 0) throw std::domain_error("QuaternionAlgebra: zero structure constant");
}

Quat QuaternionAlgebra::mul(const Quat& x, const Quat& y) const {
  // (x0 + x1 i + x2 j + x3 k)(y0 + y1 i + y2 j + y3 k) with
  // i^2 = a, j^2 = b, k^2 = -ab, ij = k, jk = -bi... derived below.
  const Rat &x0 = x.c[0], &x1 = x.c[1], &x2 = x.c[2], &x3 = x.c[3];
  const Rat &y0 = y.c[0], &y1 = y.c[1], &y2 = y.c[2], &y3 = y.c[3];
  Quat q;
  q.c[0] = x0 * y0 + a * x1 * y1 + b * x2 * y2 - a * b * x3 * y3;
  q.c[1] = x0 * y1 + x1 * y0 - b * x2 * y3 + b * x3 * y2;
  q.c[2] = x0 * y2 + x2 * y0 + a * x1 * y3 - a * x3 * y1;
  q.c[3] = x0 * y3 + x3 * y0 + x1 * y2 - x2 * y1;
  return q;
}

Quat QuaternionAlgebra::conj(const Quat& x) const {
  Quat q;
  q.c[0] = x.c[0];
  for (int i = 1; i < 4; ++i) q.c[i] = -x.c[i];
  return q;
}

Rat QuaternionAlgebra::nrd(const Quat& x) const {
  return x.c[0] * x.c[0] - a * x.c[1] * x.c[1] - b * x.c[2] * x.c[2] +
         a * b * x.c[3] * x.c[3];
}

DiagForm QuaternionAlgebra::norm_form() const {
  return DiagForm({Rat(1), -a, -b, a * b});
}

bool QuaternionAlgebra::is_split() const { return is_isotropic(norm_form()); }

Quat find_anticommuting(const QuaternionAlgebra& alg, const Quat& z) {
  if (!z.is_pure() || alg.nrd(z) == 0)
    throw std::domain_error("find_anticommuting: need a pure invertible quaternion");
  auto anti = [&](const Quat& w) { return alg.trd(alg.mul(z, w)) == 0; };
  const Quat basis[3] = {Quat::pure(1, 0, 0), Quat::pure(0, 1, 0), Quat::pure(0, 0, 1)};
  for (const Quat& w : basis) {
    if (anti(w) && alg.nrd(w) != 0) return w;
  }
  // Basis of the trace-orthogonal complement of z in Q_0: solutions of
  // a z1 w1 + b z2 w2 - ab z3 w3 = 0.
  Rat g1 = alg.a * z.c[1], g2 = alg.b * z.c[2], g3 = -alg.a * alg.b * z.c[3];
  std::vector<Quat> comp;
  if (g1 != 0) {
    comp.push_back(Quat::pure(-g2 / g1, 1, 0));
    comp.push_back(Quat::pure(-g3 / g1, 0, 1));
  } else if (g2 != 0) {
    comp.push_back(Quat::pure(1, 0, 0));
    comp.push_back(Quat::pure(0, -g3 / g2, 1));
  } else {
    comp.push_back(Quat::pure(1, 0, 0));
    comp.push_back(Quat::pure(0, 1, 0));
  }
  const Quat candidates[3] = {comp[0], comp[1], comp[0] + comp[1]};
  for (const Quat& w : candidates) {
    if (anti(w) && alg.nrd(w) != 0) return w;
  }
  throw std::logic_error("find_anticommuting: no invertible complement vector");
}

bool check_magique(const QuaternionAlgebra& alg, const Quat& z1, const Quat& z2, const Quat& z3) {
  if (!z1.is_pure() || !z2.is_pure() || !z3.is_pure())
    throw std::domain_error("check_magique: arguments must be pure");
  Rat lhs = alg.trd(alg.mul(z1, z2)) * alg.trd(alg.mul(z1, z3));
  Rat z1sq = -alg.nrd(z1);  // z^2 = -Nrd(z) for pure z
  Rat rhs = z1sq * alg.trd(alg.mul(z2, z3)) +
            alg.trd(alg.mul(alg.mul(alg.mul(z1, z2), z1), z3));
  return lhs == rhs;
}

}  // namespace wittkit
