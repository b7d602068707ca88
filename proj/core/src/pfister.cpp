#include "wittkit/pfister.hpp"

#include "wittkit/lambda_ops.hpp"

#include <stdexcept>

namespace wittkit {

SquareClass SquareClassMorphism::eval(const SubsetF2& x) const {
  SquareClass out(Int(1));
  for (int i : x.indices()) {
    if (i >= universe.size()) throw std::domain_error("SquareClassMorphism: index outside universe");
    out = sq_mul(out, on_singletons[i]);
  }
  return out;
}

Rat RatMorphism::eval(const SubsetF2& x) const {
  Rat out = 1;
  for (int i : x.indices()) {
    if (i >= universe.size()) throw std::domain_error("RatMorphism: index outside universe");
    out *= on_singletons[i];
  }
  return out;
}

DiagForm pfister_of(const PfisterPresentation& p) {
  std::vector<Rat> entries;
  entries.reserve(1u << p.w.dim());
  for (const auto& x : p.w.enumerate()) entries.push_back(Rat(p.f.eval(x).rep));
  return DiagForm(std::move(entries));
}

GWClass pfister_gw(const PfisterPresentation& p) {
  GWClass out;
  for (const auto& x : p.w.enumerate()) out.add(p.f.eval(x), 1);
  return out;
}

DiagForm pfister_form(const std::vector<Rat>& slots) {
  DiagForm q({Rat(1)});
  for (const auto& c : slots) q = tensor(q, DiagForm({Rat(1), -c}));
  return q;
}

std::vector<SquareClass> pfister_slots(const PfisterPresentation& p) {
  if (!p.w.is_linear()) throw std::domain_error("pfister_slots: W is not linear");
  std::vector<SquareClass> slots;
  slots.reserve(p.w.basis.size());
  for (const auto& e : p.w.basis) slots.push_back(sq_neg(p.f.eval(e)));
  return slots;
}

CohClass symbol_of_pfister(const PfisterPresentation& p) {
  return coh_symbol(pfister_slots(p));
}

GWClass pfister_times(const RatMorphism& f, const AffineSubspace& w, const DiagForm& q) {
  GWClass out;
  GWClass base = GWClass::of_form(q);
  for (const auto& x : w.enumerate()) out = out + base.scaled_by(f.eval(x));
  return out;
}

std::pair<Rat, SquareClass> binary_decompose(const DiagForm& q) {
  if (q.dim() != 2) throw std::domain_error("binary_decompose: dimension must be 2");
  return {q.entries[0], squarefree_rep(-q.entries[0] * q.entries[1])};
}

namespace {

struct BinaryFamily {
  SquareClassMorphism delta;
  RatMorphism t;
};

BinaryFamily decompose_family(const std::vector<DiagForm>& qs) {
  Universe u = make_universe(static_cast<int>(qs.size()));
  BinaryFamily fam;
  fam.delta.universe = u;
  fam.t.universe = u;
  for (const auto& q : qs) {
    auto [t, d] = binary_decompose(q);
    fam.delta.on_singletons.push_back(sq_neg(d));
    fam.t.on_singletons.push_back(-t);
  }
  return fam;
}

}  // namespace

GWClass psi_quad(const AffineSubspace& v, const AffineSubspace& u,
                 const std::vector<DiagForm>& qs) {
  if (!direction_contained(v, u)) throw std::domain_error("psi_quad: dir(V) not inside dir(U)");
  BinaryFamily fam = decompose_family(qs);
  PfisterPresentation delta_u{fam.delta, u};
  return pfister_times(fam.t, v, pfister_of(delta_u));
}

GWClass psi0_quad(const AffineSubspace& v, const AffineSubspace& u,
                  const std::vector<DiagForm>& qs) {
  auto v0 = parity_hyperplane_section(v);
  if (!v0.has_value()) return GWClass();
  return psi_quad(*v0, u, qs);
}

bool check_pq_m2(const std::vector<int>& gamma, const std::vector<DiagForm>& qs) {
  int n = static_cast<int>(qs.size());
  if (static_cast<int>(gamma.size()) != n) throw std::domain_error("check_pq_m2: size mismatch");
  SubsetF2 a_set, b_set;
  for (int i = 0; i < n; ++i) {
    if (gamma[i] < 0 || gamma[i] > 2) throw std::domain_error("check_pq_m2: gamma out of range");
    if (gamma[i] == 2) a_set = a_set | SubsetF2::singleton(i);
    if (gamma[i] == 1) b_set = b_set | SubsetF2::singleton(i);
  }
  GWClass lhs_p = P_gamma(gamma, qs);
  GWClass lhs_q = Q_gamma(gamma, qs);
  GWClass rhs_p, rhs_q;
  for (std::uint32_t jb = b_set.bits;; jb = (jb - 1) & b_set.bits) {
    SubsetF2 j_set(jb);
    long long weight = 1ll << (b_set.size() - j_set.size());
    AffineSubspace v = v_subspace(j_set, a_set);
    AffineSubspace u = power_set(a_set | j_set);
    rhs_p = rhs_p + psi_quad(v, u, qs).times(weight);
    rhs_q = rhs_q + psi0_quad(v, u, qs).times(weight);
    if (jb == 0) break;
  }
  return witt_equal(lhs_p, rhs_p) && witt_equal(lhs_q, rhs_q);
}

Rat ModSimMorphism::eval(const SubsetF2& even_subset) const {
  if (!even_subset.even() || !even_subset.subset_of(support))
    throw std::domain_error("ModSimMorphism: not an even subset of the support");
  Rat out = 1;
  for (int i : even_subset.indices()) {
    if (i == anchor) continue;
    auto it = pair_value.find(i);
    if (it == pair_value.end()) throw std::logic_error("ModSimMorphism: missing basis value");
    out *= it->second;
  }
  return out;
}

}  // namespace wittkit
