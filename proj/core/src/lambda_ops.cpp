#include "wittkit/lambda_ops.hpp"

#include "wittkit/pfister.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace wittkit {

namespace {

// Square classes of the entries, computed once.
std::vector<SquareClass> entry_classes(const DiagForm& q) {
  std::vector<SquareClass> cls;
  cls.reserve(q.entries.size());
  for (const auto& a : q.entries) cls.push_back(squarefree_rep(a));
  return cls;
}

void subsets_of_size(int n, int d, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> idx(d);
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == d) {
      fn(idx);
      return;
    }
    for (int i = start; i <= n - (d - depth); ++i) {
      idx[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
}

GWClass lambda_from_classes(const std::vector<SquareClass>& cls, int d) {
  GWClass out;
  int n = static_cast<int>(cls.size());
  if (d < 0 || d > n) return out;
  subsets_of_size(n, d, [&](const std::vector<int>& idx) {
    SquareClass prod(Int(1));
    for (int i : idx) prod = sq_mul(prod, cls[i]);
    out.add(prod, 1);
  });
  return out;
}

// Unchecked P_r^d: standard zero-out-of-range binomials.  For d > r this is
// the correct (vanishing) value only on forms of dimension <= r, which is
// the only way the checkers call it.
GWClass p_lambda_sum(int r, int d, const std::vector<SquareClass>& cls, bool even_only) {
  GWClass out;
  for (int k = even_only ? 0 : 0; k <= d; ++k) {
    if (even_only && k % 2 != 0) continue;
    Int c = binomial(r - k, d - k);
    if (c == 0) continue;
    long long sign = (k % 2 == 0) ? 1 : -1;
    out = out + lambda_from_classes(cls, k).times(sign * c.convert_to<long long>());
  }
  return out;
}

}  // namespace

GWClass lambda_d(const DiagForm& q, int d) {
  if (d < 0) throw std::domain_error("lambda_d: negative degree");
  return lambda_from_classes(entry_classes(q), d);
}

GWClass P_rd(int r, int d, const DiagForm& q) {
  if (d < 0 || d > r) throw std::domain_error("P_rd: need 0 <= d <= r");
  return p_lambda_sum(r, d, entry_classes(q), false);
}

GWClass Q_nd(int n, int d, const DiagForm& q) {
  if (d < 0 || d > n) throw std::domain_error("Q_nd: need 0 <= d <= n");
  return p_lambda_sum(n, d, entry_classes(q), true);
}

EvenOddPair even_odd_P(int m, int d, const DiagForm& q) {
  auto cls = entry_classes(q);
  EvenOddPair out;
  out.even = p_lambda_sum(m, d, cls, true);
  out.odd = p_lambda_sum(m, d, cls, false) - out.even;
  return out;
}

namespace {

void validate_family(const std::vector<int>& gamma, const std::vector<DiagForm>& qs, int& m) {
  if (gamma.size() != qs.size()) throw std::domain_error("gamma/forms size mismatch");
  if (qs.empty()) throw std::domain_error("empty family");
  m = qs.front().dim();
  for (const auto& q : qs) {
    if (q.dim() != m) throw std::domain_error("family forms must share a dimension");
  }
  for (int g : gamma) {
    if (g < 0 || g > m) throw std::domain_error("gamma value out of range");
  }
}

}  // namespace

GWClass P_gamma(const std::vector<int>& gamma, const std::vector<DiagForm>& qs) {
  int m = 0;
  validate_family(gamma, qs, m);
  GWClass out = GWClass::one();
  for (size_t i = 0; i < qs.size(); ++i) out = out * P_rd(m, gamma[i], qs[i]);
  return out;
}

GWClass Q_gamma(const std::vector<int>& gamma, const std::vector<DiagForm>& qs) {
  int m = 0;
  validate_family(gamma, qs, m);
  GWClass acc_even = GWClass::one();
  GWClass acc_odd;
  for (size_t i = 0; i < qs.size(); ++i) {
    EvenOddPair p = even_odd_P(m, gamma[i], qs[i]);
    GWClass even = acc_even * p.even + acc_odd * p.odd;
    GWClass odd = acc_even * p.odd + acc_odd * p.even;
    acc_even = std::move(even);
    acc_odd = std::move(odd);
  }
  return acc_even;
}

CohClass w_d(const DiagForm& q, int d) {
  if (d < 0) throw std::domain_error("w_d: negative degree");
  auto cls = entry_classes(q);
  CohClass out = CohClass::zero(d);
  if (d > q.dim()) return out;
  subsets_of_size(q.dim(), d, [&](const std::vector<int>& idx) {
    std::vector<SquareClass> sym;
    sym.reserve(idx.size());
    for (int i : idx) sym.push_back(cls[i]);
    out = coh_add(out, coh_symbol(std::move(sym)));
  });
  return out;
}

CohClass w_gamma(const std::vector<int>& gamma, const std::vector<DiagForm>& qs) {
  if (gamma.size() != qs.size()) throw std::domain_error("w_gamma: size mismatch");
  CohClass out = CohClass::one();
  for (size_t i = 0; i < qs.size(); ++i) out = cup(out, w_d(qs[i], gamma[i]));
  return out;
}

bool check_sum_rule(int s, int t, int d, const DiagForm& q1, const DiagForm& q2) {
  if (q1.dim() != s || q2.dim() != t) throw std::domain_error("check_sum_rule: dimension mismatch");
  if (d < 0 || d > s + t) throw std::domain_error("check_sum_rule: bad degree");
  auto c1 = entry_classes(q1);
  auto c2 = entry_classes(q2);
  GWClass lhs = p_lambda_sum(s + t, d, entry_classes(perp(q1, q2)), false);
  GWClass rhs;
  for (int d1 = 0; d1 <= d; ++d1) {
    rhs = rhs + p_lambda_sum(s, d1, c1, false) * p_lambda_sum(t, d - d1, c2, false);
  }
  return gw_equal(lhs, rhs);
}

namespace {

// sum_{|I|=d} <<f|P(I)>> with f({i}) = -a_i, as pfister term data.
std::vector<ScaledPfisterTerm> prd_expansion_terms(const DiagForm& q, int d) {
  auto cls = entry_classes(q);
  std::vector<ScaledPfisterTerm> terms;
  subsets_of_size(q.dim(), d, [&](const std::vector<int>& idx) {
    ScaledPfisterTerm t;
    for (int i : idx) t.slots.push_back(cls[i]);
    terms.push_back(std::move(t));
  });
  return terms;
}

}  // namespace

bool check_prd_expansion(int r, int d, const DiagForm& q) {
  if (q.dim() != r) throw std::domain_error("check_prd_expansion: dimension mismatch");
  GWClass lhs = P_rd(r, d, q);
  SquareClassMorphism f;
  f.universe = make_universe(r);
  for (const auto& c : entry_classes(q)) f.on_singletons.push_back(sq_neg(c));
  GWClass rhs;
  subsets_of_size(r, d, [&](const std::vector<int>& idx) {
    SubsetF2 support;
    for (int i : idx) support = support | SubsetF2::singleton(i);
    rhs = rhs + pfister_gw(PfisterPresentation{f, power_set(support)});
  });
  return witt_equal(lhs, rhs) && filtration_at_least(lhs, d);
}

CohClass prd_class(int r, int d, const DiagForm& q) {
  if (q.dim() != r) throw std::domain_error("prd_class: dimension mismatch");
  return class_of_scaled_pfister_sum(prd_expansion_terms(q, d), d);
}

bool check_sw_lift(int r, int d, const DiagForm& q) {
  return coh_equal(prd_class(r, d, q), w_d(q, d));
}

namespace {

// Enumerate gamma: {0..m}^X with |gamma| = d.
void gammas_of_weight(int nx, int m, int d, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> g(nx, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == nx) {
      if (left == 0) fn(g);
      return;
    }
    for (int v = 0; v <= std::min(m, left); ++v) {
      g[i] = v;
      rec(i + 1, left - v);
    }
  };
  rec(0, d);
}

DiagForm family_sum(const std::vector<DiagForm>& qs) {
  DiagForm q;
  for (const auto& f : qs) q = perp(q, f);
  return q;
}

}  // namespace

bool check_decom_prd_gamma(const std::vector<DiagForm>& qs, int d) {
  int m = qs.front().dim();
  int rm = m * static_cast<int>(qs.size());
  if (d > rm) throw std::domain_error("check_decom_prd_gamma: bad degree");
  GWClass lhs = P_rd(rm, d, family_sum(qs));
  GWClass rhs;
  gammas_of_weight(static_cast<int>(qs.size()), m, d,
                   [&](const std::vector<int>& g) { rhs = rhs + P_gamma(g, qs); });
  return gw_equal(lhs, rhs);
}

bool check_decom_qrd_gamma(const std::vector<DiagForm>& qs, int d) {
  int m = qs.front().dim();
  int rm = m * static_cast<int>(qs.size());
  if (d > rm) throw std::domain_error("check_decom_qrd_gamma: bad degree");
  GWClass lhs = Q_nd(rm, d, family_sum(qs));
  GWClass rhs;
  gammas_of_weight(static_cast<int>(qs.size()), m, d,
                   [&](const std::vector<int>& g) { rhs = rhs + Q_gamma(g, qs); });
  return gw_equal(lhs, rhs);
}

bool check_decom_wd(const std::vector<DiagForm>& qs, int d) {
  int m = qs.front().dim();
  CohClass lhs = w_d(family_sum(qs), d);
  CohClass rhs = CohClass::zero(d);
  gammas_of_weight(static_cast<int>(qs.size()), m, d,
                   [&](const std::vector<int>& g) { rhs = coh_add(rhs, w_gamma(g, qs)); });
  return coh_equal(lhs, rhs);
}

bool check_prd_gamma_omega(const std::vector<std::vector<DiagForm>>& grid,
                           const std::vector<int>& gamma) {
  int nx = static_cast<int>(grid.size());
  if (nx == 0 || static_cast<int>(gamma.size()) != nx)
    throw std::domain_error("check_prd_gamma_omega: size mismatch");
  int ny = static_cast<int>(grid.front().size());
  int m = grid.front().front().dim();
  std::vector<DiagForm> rows;
  std::vector<DiagForm> flat;
  for (const auto& row : grid) {
    if (static_cast<int>(row.size()) != ny) throw std::domain_error("ragged grid");
    rows.push_back(family_sum(row));
    for (const auto& q : row) flat.push_back(q);
  }
  GWClass lhs = P_gamma(gamma, rows);
  // All omega: X x Y -> {0..m} with row sums gamma.
  GWClass rhs;
  std::vector<int> omega(nx * ny, 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == nx) {
      rhs = rhs + P_gamma(omega, flat);
      return;
    }
    std::function<void(int, int)> row_rec = [&](int j, int left) {
      if (j == ny) {
        if (left == 0) rec(i + 1);
        return;
      }
      for (int v = 0; v <= std::min(m, left); ++v) {
        omega[i * ny + j] = v;
        row_rec(j + 1, left - v);
      }
    };
    row_rec(0, gamma[i]);
  };
  rec(0);
  return gw_equal(lhs, rhs);
}

bool check_prd_gamma_omega_all(const std::vector<std::vector<DiagForm>>& grid) {
  int nx = static_cast<int>(grid.size());
  int ny = static_cast<int>(grid.front().size());
  int m = grid.front().front().dim();
  std::vector<DiagForm> rows;
  std::vector<DiagForm> flat;
  for (const auto& row : grid) {
    rows.push_back(family_sum(row));
    for (const auto& q : row) flat.push_back(q);
  }
  // Sweep all omega: X x Y -> {0..m} with a prefix-product recursion and
  // bucket the values by the row-sum function omega_X.
  std::vector<std::vector<GWClass>> cell_p(nx * ny);
  for (int pos = 0; pos < nx * ny; ++pos)
    for (int v = 0; v <= m; ++v) cell_p[pos].push_back(P_rd(m, v, flat[pos]));
  std::map<std::vector<int>, GWClass> rhs;
  std::vector<int> row_sum(nx, 0);
  std::function<void(int, const GWClass&)> rec = [&](int pos, const GWClass& prefix) {
    if (pos == nx * ny) {
      auto it = rhs.find(row_sum);
      if (it == rhs.end()) {
        rhs.emplace(row_sum, prefix);
      } else {
        it->second = it->second + prefix;
      }
      return;
    }
    for (int v = 0; v <= m; ++v) {
      row_sum[pos / ny] += v;
      rec(pos + 1, prefix * cell_p[pos][v]);
      row_sum[pos / ny] -= v;
    }
  };
  rec(0, GWClass::one());
  // Every gamma with values <= m|Y| must match; absent buckets mean an
  // empty omega sum, i.e. zero.
  std::vector<std::vector<GWClass>> row_p(nx);
  for (int i = 0; i < nx; ++i)
    for (int v = 0; v <= m * ny; ++v) row_p[i].push_back(P_rd(m * ny, v, rows[i]));
  std::vector<int> gamma(nx, 0);
  std::function<bool(int, const GWClass&)> walk = [&](int i, const GWClass& prefix) -> bool {
    if (i == nx) {
      auto it = rhs.find(gamma);
      GWClass sum = it == rhs.end() ? GWClass() : it->second;
      return gw_equal(prefix, sum);
    }
    for (int v = 0; v <= m * ny; ++v) {
      gamma[i] = v;
      if (!walk(i + 1, prefix * row_p[i][v])) return false;
    }
    return true;
  };
  return walk(0, GWClass::one());
}

bool check_pq_split(const std::vector<std::vector<Rat>>& entries) {
  int nx = static_cast<int>(entries.size());
  int ny = static_cast<int>(entries.front().size());
  std::vector<DiagForm> qs;
  std::vector<SquareClass> flat_cls;
  for (const auto& row : entries) {
    if (static_cast<int>(row.size()) != ny) throw std::domain_error("check_pq_split: ragged grid");
    qs.push_back(DiagForm(row));
    for (const auto& a : row) flat_cls.push_back(squarefree_rep(a));
  }
  DiagForm q = family_sum(qs);
  SquareClassMorphism f;
  f.universe = make_universe(nx * ny);
  for (const auto& c : flat_cls) f.on_singletons.push_back(sq_neg(c));

  auto pfister_sum = [&](const std::vector<SubsetF2>& supports, bool even_part) {
    GWClass out;
    for (const auto& i_set : supports) {
      AffineSubspace w = power_set(i_set);
      if (even_part) w = *parity_hyperplane_section(w);  // P_0(I) contains the empty set
      out = out + pfister_gw(PfisterPresentation{f, w});
    }
    return out;
  };

  int total = nx * ny;
  std::vector<std::vector<SubsetF2>> by_size(total + 1);
  for (std::uint32_t b = 0; b < (1u << total); ++b) {
    SubsetF2 s(b);
    by_size[s.size()].push_back(s);
  }
  for (int d = 0; d <= total; ++d) {
    if (!witt_equal(P_rd(total, d, q), pfister_sum(by_size[d], false))) return false;
    if (!witt_equal(Q_nd(total, d, q), pfister_sum(by_size[d], true))) return false;
  }

  // gamma-level: group subsets by their fiber counts.
  ProductUniverse u = make_product(nx, ny);
  std::map<std::vector<int>, std::vector<SubsetF2>> by_theta;
  for (std::uint32_t b = 0; b < (1u << total); ++b) {
    SubsetF2 s(b);
    by_theta[theta(u, s)].push_back(s);
  }
  std::vector<int> gamma(nx, 0);
  std::function<bool(int)> rec = [&](int i) -> bool {
    if (i == nx) {
      auto it = by_theta.find(gamma);
      std::vector<SubsetF2> supports = it == by_theta.end() ? std::vector<SubsetF2>{} : it->second;
      if (!witt_equal(P_gamma(gamma, qs), pfister_sum(supports, false))) return false;
      if (!witt_equal(Q_gamma(gamma, qs), pfister_sum(supports, true))) return false;
      return true;
    }
    for (int v = 0; v <= ny; ++v) {
      gamma[i] = v;
      if (!rec(i + 1)) return false;
    }
    return true;
  };
  return rec(0);
}

}  // namespace wittkit
