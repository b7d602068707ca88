#include "wittkit/hermitian.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace wittkit {

HermDiagForm::HermDiagForm(QuaternionAlgebra a, std::vector<Quat> g)
    : alg(std::move(a)), gens(std::move(g)) {
  if (gens.empty()) throw std::domain_error("HermDiagForm: empty generator list");
  if (size() > kMaxUniverse) throw std::domain_error("HermDiagForm: too many generators");
  for (const auto& z : gens) {
    if (!z.is_pure() || alg.nrd(z) == 0)
      throw std::domain_error("HermDiagForm: slots must be pure and invertible");
  }
}

std::vector<Rat> gram_diagonalize(std::vector<std::vector<Rat>> m) {
  const size_t n = m.size();
  for (size_t r = 0; r < n; ++r) {
    if (m[r][r] == 0) {
      size_t s = r + 1;
      for (; s < n; ++s) {
        if (m[s][s] != 0) {
          std::swap(m[r], m[s]);
          for (auto& row : m) std::swap(row[r], row[s]);
          break;
        }
      }
      if (m[r][r] == 0) {
        // no nonzero diagonal below; mix in a row with m[r][s] != 0
        size_t t = r + 1;
        for (; t < n; ++t)
          if (m[r][t] != 0) break;
        if (t == n) throw std::logic_error("gram_diagonalize: degenerate form");
        for (size_t c = 0; c < n; ++c) m[r][c] += m[t][c];
        for (size_t c = 0; c < n; ++c) m[c][r] += m[c][t];
      }
    }
    for (size_t s = r + 1; s < n; ++s) {
      if (m[s][r] == 0) continue;
      Rat f = m[s][r] / m[r][r];
      for (size_t c = 0; c < n; ++c) m[s][c] -= f * m[r][c];
      for (size_t c = 0; c < n; ++c) m[c][s] -= f * m[c][r];
    }
  }
  std::vector<Rat> diag;
  diag.reserve(n);
  for (size_t r = 0; r < n; ++r) diag.push_back(m[r][r]);
  return diag;
}

GWClass trace_gram_class(const QuaternionAlgebra& alg, const Quat& z, const Quat& zp) {
  if (!z.is_pure() || !zp.is_pure())
    throw std::domain_error("trace_gram_class: slots must be pure");
  const Quat basis[4] = {Quat::scalar(1), Quat::pure(1, 0, 0), Quat::pure(0, 1, 0),
                         Quat::pure(0, 0, 1)};
  std::vector<std::vector<Rat>> gram(4, std::vector<Rat>(4));
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      Quat prod = alg.mul(alg.mul(basis[r], z), alg.mul(alg.conj(basis[c]), zp));
      gram[r][c] = alg.trd(prod);
    }
  }
  for (int r = 0; r < 4; ++r)
    for (int c = r + 1; c < 4; ++c)
      if (gram[r][c] != gram[c][r]) throw std::logic_error("trace_gram_class: Gram not symmetric");
  return GWClass::of_form(DiagForm(gram_diagonalize(std::move(gram))));
}

GWClass odd_product(const QuaternionAlgebra& alg, const Quat& z, const Quat& zp) {
  return trace_gram_class(alg, z, zp).scaled_by(SquareClass(Int(-1)));
}

GradedGWElement GradedGWElement::one() {
  GradedGWElement e;
  e.even = GWClass::one();
  return e;
}

GradedGWElement& GradedGWElement::add_odd(const Quat& z, long long mult) {
  if (mult == 0) return *this;
  auto it = std::find_if(odd.begin(), odd.end(), [&](const auto& p) { return p.first == z; });
  if (it == odd.end()) {
    odd.emplace_back(z, mult);
  } else {
    it->second += mult;
    if (it->second == 0) odd.erase(it);
  }
  return *this;
}

GradedGWElement graded_add(const GradedGWElement& x, const GradedGWElement& y) {
  GradedGWElement out = x;
  out.even = out.even + y.even;
  for (const auto& [z, m] : y.odd) out.add_odd(z, m);
  return out;
}

namespace {

Quat scale_quat(const Rat& c, const Quat& z) {
  Quat out;
  for (int i = 0; i < 4; ++i) out.c[i] = c * z.c[i];
  return out;
}

}  // namespace

GradedGWElement graded_mul(const QuaternionAlgebra& alg, const GradedGWElement& x,
                           const GradedGWElement& y) {
  GradedGWElement out;
  out.even = x.even * y.even;
  for (const auto& [z, m] : x.odd)
    for (const auto& [w, n] : y.odd) out.even = out.even + odd_product(alg, z, w).times(m * n);
  for (const auto& [s, m] : x.even.terms())
    for (const auto& [w, n] : y.odd) out.add_odd(scale_quat(Rat(s.rep), w), m * n);
  for (const auto& [s, m] : y.even.terms())
    for (const auto& [z, n] : x.odd) out.add_odd(scale_quat(Rat(s.rep), z), m * n);
  return out;
}

namespace {

Rat z_square(const QuaternionAlgebra& alg, const Quat& z) { return -alg.nrd(z); }

void check_support(const HermDiagForm& h, const SubsetF2& i_set) {
  if (!i_set.subset_of(SubsetF2::full(h.size())))
    throw std::domain_error("index set outside the generator range");
}

}  // namespace

DiagForm pi_form(const HermDiagForm& h, const SubsetF2& i_set) {
  check_support(h, i_set);
  std::vector<Rat> slots;
  for (int i : i_set.indices()) slots.push_back(z_square(h.alg, h.gens[i]));
  return pfister_form(slots);
}

std::vector<Rat> phi_slots(const HermDiagForm& h, const SubsetF2& i_set) {
  check_support(h, i_set);
  auto idx = i_set.indices();
  std::vector<Rat> slots;
  if (idx.size() <= 1) {
    for (int i : idx) slots.push_back(z_square(h.alg, h.gens[i]));
    return slots;
  }
  const Quat& z1 = h.gens[idx[0]];
  Quat z0 = find_anticommuting(h.alg, z1);
  slots.push_back(z_square(h.alg, z1));
  slots.push_back(z_square(h.alg, z0) * z_square(h.alg, h.gens[idx[1]]));
  for (size_t l = 2; l < idx.size(); ++l) slots.push_back(z_square(h.alg, h.gens[idx[l]]));
  return slots;
}

DiagForm phi_form(const HermDiagForm& h, const SubsetF2& i_set) {
  DiagForm phi = pfister_form(phi_slots(h, i_set));
  int n = i_set.size();
  if (n >= 2) {
    GWClass target = GWClass::of_form(pi_form(h, i_set)) -
                     GWClass::of_form(h.alg.norm_form()).times(1ll << (n - 2));
    if (!witt_equal(GWClass::of_form(phi), target))
      throw std::logic_error("phi_form: not Witt-equivalent to pi(I) - 2^{|I|-2} n_Q");
  }
  return phi;
}

ModSimMorphism t_morphism(const HermDiagForm& h, const SubsetF2& s_set) {
  check_support(h, s_set);
  ModSimMorphism t;
  t.support = s_set;
  auto idx = s_set.indices();
  if (idx.size() < 2) {
    t.phi_ref = pi_form(h, s_set);
    return t;
  }
  t.anchor = idx[0];
  t.phi_ref = phi_form(h, s_set);
  for (size_t l = 1; l < idx.size(); ++l) {
    Rat tr = h.alg.trd(h.alg.mul(h.gens[t.anchor], h.gens[idx[l]]));
    // zero pair-trace: those generators anti-commute, phi(S) is hyperbolic
    // and G(phi(S)) is all of Q^x, so 1 is a legal representative
    t.pair_value[idx[l]] = (tr == 0) ? Rat(1) : -tr;
  }
  return t;
}

GWClass psi0_herm(const HermDiagForm& h, const SubsetF2& j_set, const SubsetF2& a_set) {
  if (!j_set.disjoint(a_set)) throw std::domain_error("psi0_herm: J and A overlap");
  SubsetF2 s_set = j_set | a_set;
  if (s_set == SubsetF2::empty()) throw std::domain_error("psi0_herm: J and A both empty");
  auto w = parity_hyperplane_section(v_subspace(j_set, a_set));
  if (!w.has_value()) return GWClass();
  ModSimMorphism t = t_morphism(h, s_set);
  GWClass phi = GWClass::of_form(phi_form(h, s_set));
  GWClass out;
  for (const auto& x : w->enumerate()) out = out + phi.scaled_by(t.eval(x));
  return out;
}

std::vector<ScaledPfisterTerm> psi0_herm_presentation(const HermDiagForm& h,
                                                      const SubsetF2& j_set,
                                                      const SubsetF2& a_set) {
  if (!j_set.disjoint(a_set)) throw std::domain_error("psi0_herm_presentation: J and A overlap");
  SubsetF2 s_set = j_set | a_set;
  auto w = parity_hyperplane_section(v_subspace(j_set, a_set));
  if (!w.has_value()) return {};
  ModSimMorphism t = t_morphism(h, s_set);
  ScaledPfisterTerm term;
  term.coeff = 1;
  term.scale = t.eval(w->base);
  for (const auto& dir : w->basis) term.slots.push_back(squarefree_rep(-t.eval(dir)));
  for (const auto& c : phi_slots(h, s_set)) term.slots.push_back(squarefree_rep(c));
  return {term};
}

GradedGWElement herm_P2(const QuaternionAlgebra& alg, const Quat& z, int d) {
  if (!z.is_pure() || alg.nrd(z) == 0) throw std::domain_error("herm_P2: bad slot");
  GradedGWElement out;
  switch (d) {
    case 0:
      out.even = GWClass::one();
      break;
    case 1:
      out.even = GWClass::one().times(2);
      out.add_odd(z, -1);
      break;
    case 2:
      out.even = GWClass::one() + GWClass::of(squarefree_rep(alg.nrd(z)));  // <<z^2>> = <1, nrd z>
      out.add_odd(z, -1);
      break;
    default:
      throw std::domain_error("herm_P2: d must be 0, 1 or 2");
  }
  return out;
}

GWClass Q_herm(int n, int d, const HermDiagForm& h) {
  if (n != 2 * h.size()) throw std::domain_error("Q_herm: n must be twice the slot count");
  if (d < 0 || d > n) throw std::domain_error("Q_herm: degree out of range");
  std::vector<GradedGWElement> acc(d + 1);
  acc[0] = GradedGWElement::one();
  for (const auto& z : h.gens) {
    std::vector<GradedGWElement> next(d + 1);
    for (int deg = 0; deg <= d; ++deg) {
      for (int step = 0; step <= 2 && step <= deg; ++step) {
        GradedGWElement contrib =
            graded_mul(h.alg, acc[deg - step], herm_P2(h.alg, z, step));
        next[deg] = graded_add(next[deg], contrib);
      }
    }
    acc = std::move(next);
  }
  return acc[d].even;
}

namespace {

long long nq_count(int x, int d, int min_a) {
  if (d <= 2 || d % 2 != 0 || d > 2 * x)
    throw std::domain_error("norm form multiplicity: need even 2 < d <= 2x");
  long long n = 0;
  for (int a = min_a; 2 * a <= d; ++a) {
    if (d > x + a) continue;
    long long c = binomial_ll(x, a) * binomial_ll(x - a, d - 2 * a);
    if (c == 0) continue;
    n += c * (1ll << (d - a - 2));
  }
  if (n % (1ll << (d / 2 - 2)) != 0)
    throw std::logic_error("norm form multiplicity: divisibility failed");
  return n;
}

}  // namespace

long long N_coeff(int x, int d) { return nq_count(x, d, 0); }

long long norm_form_multiplicity(int x, int d) { return nq_count(x, d, 2); }

bool verify_qnd_quat(const HermDiagForm& h, int d) {
  int x = h.size();
  if (d <= 2 || d % 2 != 0 || d > 2 * x)
    throw std::domain_error("verify_qnd_quat: need even 2 < d <= 2|X|");
  GWClass lhs = Q_herm(2 * x, d, h);
  GWClass rhs = GWClass::of_form(h.alg.norm_form()).times(norm_form_multiplicity(x, d));
  SubsetF2 all = SubsetF2::full(x);
  for (std::uint32_t ab = 0; ab < (1u << x); ++ab) {
    SubsetF2 a_set(ab);
    std::uint32_t comp = all.bits & ~ab;
    for (std::uint32_t jb = comp;; jb = (jb - 1) & comp) {
      SubsetF2 j_set(jb);
      int k = 2 * a_set.size() + j_set.size();
      long long c = (k <= d) ? binomial_ll(x - a_set.size() - j_set.size(), d - k) : 0;
      if (c != 0) {
        long long coeff = c * (1ll << (d - k));
        GWClass psi = (a_set == SubsetF2::empty() && j_set == SubsetF2::empty())
                          ? GWClass::one()
                          : psi0_herm(h, j_set, a_set);
        rhs = rhs + psi.times(coeff);
      }
      if (jb == 0) break;
    }
  }
  return witt_equal(lhs, rhs);
}

namespace {

std::optional<int> coeff_target_degree(const GWClass& a_d, int d) {
  auto deg = witt_filtration_degree(a_d);
  if (!deg.has_value()) return std::nullopt;  // hyperbolic coefficient, no constraint
  return *deg + d - 1;
}

void validate_betahat_degree(int d, int x) {
  if (d <= 2 || d % 2 != 0 || d > 2 * x)
    throw std::domain_error("beta_hat: coefficient degree must be even with 2 < d <= 2|X|");
}

}  // namespace

GWClass beta_hat(const std::vector<std::pair<GWClass, int>>& coeffs, const HermDiagForm& h) {
  int x = h.size();
  GWClass value;
  std::optional<int> m;
  bool any_constraint = false;
  for (const auto& [a_d, d] : coeffs) {
    validate_betahat_degree(d, x);
    value = value + a_d * Q_herm(2 * x, d, h) -
            a_d * GWClass::of_form(h.alg.norm_form()).times(norm_form_multiplicity(x, d));
    auto target = coeff_target_degree(a_d, d);
    if (target.has_value()) {
      any_constraint = true;
      m = m.has_value() ? std::min(*m, *target) : *target;
    }
  }
  if (any_constraint) {
    if (!filtration_at_least(value, *m))
      throw property_violation("beta_hat: value not in I^" + std::to_string(*m));
  } else if (!coeffs.empty() && !witt_zero(value)) {
    throw property_violation("beta_hat: hyperbolic coefficients gave a nonzero Witt class");
  }
  return value;
}

CohClass extension_class(const std::vector<std::pair<std::vector<ScaledPfisterTerm>, int>>& coeffs,
                         const HermDiagForm& h, int m) {
  int x = h.size();
  std::vector<ScaledPfisterTerm> terms;
  SubsetF2 all = SubsetF2::full(x);
  for (const auto& [a_terms, d] : coeffs) {
    validate_betahat_degree(d, x);
    for (std::uint32_t ab = 0; ab < (1u << x); ++ab) {
      SubsetF2 a_set(ab);
      std::uint32_t comp = all.bits & ~ab;
      for (std::uint32_t jb = comp;; jb = (jb - 1) & comp) {
        SubsetF2 j_set(jb);
        int k = 2 * a_set.size() + j_set.size();
        long long c = (k <= d) ? binomial_ll(x - a_set.size() - j_set.size(), d - k) : 0;
        if (c != 0) {
          long long coeff = c * (1ll << (d - k));
          std::vector<ScaledPfisterTerm> psi;
          if (a_set == SubsetF2::empty() && j_set == SubsetF2::empty()) {
            psi.push_back(ScaledPfisterTerm{});
          } else {
            psi = psi0_herm_presentation(h, j_set, a_set);
          }
          for (const auto& p : psi) {
            for (const auto& a : a_terms) {
              ScaledPfisterTerm t;
              t.coeff = a.coeff * p.coeff * coeff;
              t.scale = a.scale * p.scale;
              t.slots = a.slots;
              t.slots.insert(t.slots.end(), p.slots.begin(), p.slots.end());
              terms.push_back(std::move(t));
            }
          }
        }
        if (jb == 0) break;
      }
    }
  }
  return class_of_scaled_pfister_sum(terms, m);
}

DiagForm morita_split_11(const QuaternionAlgebra& alg, const Quat& z) {
  if (!(alg.a == 1 && alg.b == 1)) throw std::domain_error("morita_split_11: algebra must be (1,1)");
  if (!z.is_pure() || alg.nrd(z) == 0)
    throw std::domain_error("morita_split_11: need a pure invertible quaternion");
  const Rat &x = z.c[1], &y = z.c[2], &w = z.c[3];
  std::vector<std::vector<Rat>> gram{{y - w, -x}, {-x, -(y + w)}};
  return DiagForm(gram_diagonalize(std::move(gram)));
}

}  // namespace wittkit
