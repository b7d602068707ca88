#include "wittkit/cohomology.hpp"

#include <algorithm>
#include <stdexcept>

namespace wittkit {

namespace {

// Cancel identical tuples in pairs.
std::vector<std::vector<SquareClass>> reduce_mod2(std::vector<std::vector<SquareClass>> symbols) {
  std::sort(symbols.begin(), symbols.end());
  std::vector<std::vector<SquareClass>> out;
  size_t i = 0;
  while (i < symbols.size()) {
    size_t j = i;
    while (j < symbols.size() && symbols[j] == symbols[i]) ++j;
    if ((j - i) % 2 != 0) out.push_back(symbols[i]);
    i = j;
  }
  return out;
}

}  // namespace

CohClass CohClass::zero(int degree) {
  CohClass x;
  x.degree = degree;
  return x;
}

CohClass CohClass::one() {
  CohClass x;
  x.degree = 0;
  x.symbols.push_back({});
  return x;
}

CohClass coh_symbol(std::vector<SquareClass> entries) {
  CohClass x;
  x.degree = static_cast<int>(entries.size());
  x.symbols.push_back(std::move(entries));
  return x;
}

CohClass coh_add(const CohClass& x, const CohClass& y) {
  if (x.degree != y.degree) throw std::domain_error("coh_add: degree mismatch");
  CohClass out;
  out.degree = x.degree;
  out.symbols = x.symbols;
  out.symbols.insert(out.symbols.end(), y.symbols.begin(), y.symbols.end());
  out.symbols = reduce_mod2(std::move(out.symbols));
  return out;
}

CohClass cup(const CohClass& x, const CohClass& y) {
  CohClass out;
  out.degree = x.degree + y.degree;
  for (const auto& s : x.symbols) {
    for (const auto& t : y.symbols) {
      auto st = s;
      st.insert(st.end(), t.begin(), t.end());
      out.symbols.push_back(std::move(st));
    }
  }
  out.symbols = reduce_mod2(std::move(out.symbols));
  return out;
}

namespace {

// Local evaluation of a degree-2 symbol sum: parity of the number of
// symbols with Hilbert symbol -1 at v.
int degree2_parity(const CohClass& x, const Place& v) {
  int count = 0;
  for (const auto& s : x.symbols) {
    if (hilbert_symbol(s[0], s[1], v) == -1) ++count;
  }
  return count % 2;
}

// For d >= 3 only the real place survives: a symbol is nontrivial there
// iff all entries are negative.
int real_parity(const CohClass& x) {
  int count = 0;
  for (const auto& s : x.symbols) {
    bool all_neg = true;
    for (const auto& a : s) all_neg = all_neg && a.is_negative();
    if (all_neg) ++count;
  }
  return count % 2;
}

}  // namespace

bool coh_equal(const CohClass& x, const CohClass& y) {
  if (x.degree != y.degree) throw std::domain_error("coh_equal: degree mismatch");
  int d = x.degree;
  if (d == 0) return x.symbols.size() % 2 == y.symbols.size() % 2;
  if (d == 1) {
    SquareClass px(Int(1)), py(Int(1));
    for (const auto& s : x.symbols) px = sq_mul(px, s[0]);
    for (const auto& s : y.symbols) py = sq_mul(py, s[0]);
    return px == py;
  }
  if (d == 2) {
    std::vector<SquareClass> all;
    for (const auto& s : x.symbols) all.insert(all.end(), s.begin(), s.end());
    for (const auto& s : y.symbols) all.insert(all.end(), s.begin(), s.end());
    if (all.empty()) return true;
    for (const auto& v : relevant_places(all)) {
      if (degree2_parity(x, v) != degree2_parity(y, v)) return false;
    }
    return true;
  }
  return real_parity(x) == real_parity(y);
}

bool coh_zero(const CohClass& x) { return coh_equal(x, CohClass::zero(x.degree)); }

std::string coh_to_string(const CohClass& x) {
  if (x.symbols.empty()) return "0 (deg " + std::to_string(x.degree) + ")";
  std::string out;
  bool first = true;
  for (const auto& s : x.symbols) {
    if (!first) out += " + ";
    first = false;
    out += "(";
    for (size_t i = 0; i < s.size(); ++i) {
      if (i) out += ",";
      out += s[i].rep.str();
    }
    out += ")";
  }
  return out;
}

CohClass class_of_scaled_pfister_sum(const std::vector<ScaledPfisterTerm>& terms, int m) {
  CohClass out = CohClass::zero(m);
  for (const auto& t : terms) {
    if (t.coeff == 0) continue;
    if (t.scale == 0) throw std::domain_error("class_of_scaled_pfister_sum: zero scale");
    int fold = static_cast<int>(t.slots.size()) + v2_ll(t.coeff);
    if (fold < m) throw std::domain_error("class_of_scaled_pfister_sum: term not in I^m");
    if (fold > m) continue;  // I^{m+1} vanishes in h^m
    std::vector<SquareClass> sym;
    for (int i = 0; i < v2_ll(t.coeff); ++i) sym.push_back(SquareClass(Int(-1)));
    sym.insert(sym.end(), t.slots.begin(), t.slots.end());
    out = coh_add(out, coh_symbol(std::move(sym)));
  }
  return out;
}

}  // namespace wittkit
