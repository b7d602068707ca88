#include "wittkit/f2comb.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace wittkit {

Universe::Universe(std::vector<std::string> l) : labels(std::move(l)) {
  if (size() > kMaxUniverse) throw std::domain_error("Universe: more than 16 elements");
  auto sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::domain_error("Universe: duplicate labels");
}

Universe make_universe(int n, const std::string& prefix) {
  std::vector<std::string> l;
  l.reserve(n);
  for (int i = 0; i < n; ++i) l.push_back(prefix + std::to_string(i));
  return Universe(std::move(l));
}

SubsetF2 SubsetF2::of(std::initializer_list<int> idx) {
  SubsetF2 s;
  for (int i : idx) s.bits |= 1u << i;
  return s;
}

int SubsetF2::size() const { return std::popcount(bits); }

std::vector<int> SubsetF2::indices() const {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i)
    if (test(i)) out.push_back(i);
  return out;
}

std::string subset_to_string(const SubsetF2& s, const Universe& u) {
  std::string out = "{";
  bool first = true;
  for (int i : s.indices()) {
    if (!first) out += ",";
    first = false;
    out += i < u.size() ? u.labels[i] : std::to_string(i);
  }
  return out + "}";
}

namespace {

std::uint32_t high_bit(std::uint32_t x) {
  return x == 0 ? 0 : (1u << (31 - std::countl_zero(x)));
}

// Reduce x against echelon rows (each with a distinct pivot = its high bit).
std::uint32_t reduce(std::uint32_t x, const std::vector<SubsetF2>& rows) {
  for (const auto& r : rows) {
    if (x & high_bit(r.bits)) x ^= r.bits;
  }
  return x;
}

}  // namespace

bool AffineSubspace::contains(const SubsetF2& x) const {
  return reduce(x.bits ^ base.bits, basis) == 0;
}

std::vector<SubsetF2> AffineSubspace::enumerate() const {
  std::vector<SubsetF2> out;
  out.reserve(1u << dim());
  for (std::uint32_t m = 0; m < (1u << dim()); ++m) {
    std::uint32_t x = base.bits;
    for (int l = 0; l < dim(); ++l)
      if ((m >> l) & 1u) x ^= basis[l].bits;
    out.push_back(SubsetF2(x));
  }
  return out;
}

AffineSubspace make_affine(SubsetF2 base, std::vector<SubsetF2> basis) {
  std::vector<SubsetF2> rows;
  for (const auto& v : basis) {
    std::uint32_t x = reduce(v.bits, rows);
    if (x == 0) throw std::domain_error("make_affine: dependent basis");
    // back-substitute so every row has a unique pivot column
    for (auto& r : rows) {
      if (r.bits & high_bit(x)) r.bits ^= x;
    }
    rows.push_back(SubsetF2(x));
  }
  std::sort(rows.begin(), rows.end(),
            [](const SubsetF2& a, const SubsetF2& b) { return a.bits > b.bits; });
  AffineSubspace w;
  w.base = SubsetF2(reduce(base.bits, rows));
  w.basis = std::move(rows);
  return w;
}

AffineSubspace single_point(SubsetF2 x) { return make_affine(x, {}); }

AffineSubspace power_set(SubsetF2 support) {
  std::vector<SubsetF2> basis;
  for (int i : support.indices()) basis.push_back(SubsetF2::singleton(i));
  return make_affine(SubsetF2::empty(), std::move(basis));
}

bool direction_contained(const AffineSubspace& inner, const AffineSubspace& outer) {
  for (const auto& v : inner.basis) {
    if (reduce(v.bits, outer.basis) != 0) return false;
  }
  return true;
}

std::optional<AffineSubspace> parity_hyperplane_section(const AffineSubspace& w) {
  int odd_idx = -1;
  for (int l = 0; l < w.dim(); ++l) {
    if (!w.basis[l].even()) {
      odd_idx = l;
      break;
    }
  }
  if (odd_idx < 0) {
    if (!w.base.even()) return std::nullopt;
    return w;
  }
  SubsetF2 pivot = w.basis[odd_idx];
  SubsetF2 base = w.base.even() ? w.base : w.base ^ pivot;
  std::vector<SubsetF2> basis;
  for (int l = 0; l < w.dim(); ++l) {
    if (l == odd_idx) continue;
    basis.push_back(w.basis[l].even() ? w.basis[l] : w.basis[l] ^ pivot);
  }
  return make_affine(base, std::move(basis));
}

AffineSubspace v_subspace(const SubsetF2& j, const SubsetF2& a) {
  if (!j.disjoint(a)) throw std::domain_error("v_subspace: J and A overlap");
  std::vector<SubsetF2> basis;
  for (int i : a.indices()) basis.push_back(SubsetF2::singleton(i));
  return make_affine(j, std::move(basis));
}

ProductUniverse make_product(int nx, int ny) {
  if (nx * ny > kMaxUniverse) throw std::domain_error("make_product: more than 16 elements");
  ProductUniverse u;
  u.nx = nx;
  u.ny = ny;
  std::vector<std::string> labels;
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < ny; ++j)
      labels.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ")");
  u.xy = Universe(std::move(labels));
  return u;
}

std::vector<int> theta(const ProductUniverse& u, const SubsetF2& i_set) {
  std::vector<int> out(u.nx, 0);
  for (int idx : i_set.indices()) ++out[u.x_of(idx)];
  return out;
}

SubsetF2 s_push(const ProductUniverse& u, const SubsetF2& s, const std::vector<int>& section) {
  SubsetF2 out;
  for (int i : s.indices()) out.bits |= 1u << u.index(i, section[i]);
  return out;
}

SubsetF2 delta_push(const ProductUniverse& u, const SubsetF2& s) {
  SubsetF2 out;
  for (int i : s.indices())
    for (int j = 0; j < u.ny; ++j) out.bits |= 1u << u.index(i, j);
  return out;
}

GroupAlgebraElt& GroupAlgebraElt::add(const SubsetF2& s, long long c) {
  if (c == 0) return *this;
  auto it = coeffs.find(s);
  if (it == coeffs.end()) {
    coeffs[s] = c;
  } else {
    it->second += c;
    if (it->second == 0) coeffs.erase(it);
  }
  return *this;
}

GroupAlgebraElt operator+(const GroupAlgebraElt& a, const GroupAlgebraElt& b) {
  GroupAlgebraElt out = a;
  for (const auto& [s, c] : b.coeffs) out.add(s, c);
  return out;
}

GroupAlgebraElt GroupAlgebraElt::times(long long n) const {
  GroupAlgebraElt out;
  if (n == 0) return out;
  for (const auto& [s, c] : coeffs) out.coeffs[s] = c * n;
  return out;
}

GroupAlgebraElt sigma(const std::vector<SubsetF2>& subsets) {
  GroupAlgebraElt out;
  for (const auto& s : subsets) out.add(s, 1);
  return out;
}

GroupAlgebraElt sigma(const AffineSubspace& w) { return sigma(w.enumerate()); }

namespace {

// All subsets of the fiber over x of a given size.
void fiber_choices(const ProductUniverse& u, int x, int count, std::vector<SubsetF2>& out) {
  out.clear();
  std::uint32_t fiber = delta_push(u, SubsetF2::singleton(x)).bits;
  for (std::uint32_t sub = fiber;; sub = (sub - 1) & fiber) {
    if (std::popcount(sub) == count) out.push_back(SubsetF2(sub));
    if (sub == 0) break;
  }
}

}  // namespace

bool verify_group_algebra_identity(int nx, int ny, const std::vector<int>& gamma,
                                   const std::vector<int>& section) {
  for (int g : gamma) {
    if (g < 0 || g > 2) throw std::domain_error("verify_group_algebra_identity: gamma out of range");
  }
  if (ny < 2) throw std::domain_error("verify_group_algebra_identity: |Y| must be >= 2");
  if (static_cast<int>(gamma.size()) != nx || static_cast<int>(section.size()) != nx)
    throw std::domain_error("verify_group_algebra_identity: size mismatch");
  for (int s : section) {
    if (s < 0 || s >= ny) throw std::domain_error("verify_group_algebra_identity: bad section");
  }
  ProductUniverse u = make_product(nx, ny);

  // Left side: enumerate all I with theta_I = gamma as products of per-fiber
  // choices, and sum sigma(P(I)).
  GroupAlgebraElt lhs;
  std::vector<std::vector<SubsetF2>> choices(nx);
  bool any_empty = false;
  for (int i = 0; i < nx; ++i) {
    fiber_choices(u, i, gamma[i], choices[i]);
    if (choices[i].empty()) any_empty = true;
  }
  std::vector<size_t> pick(nx, 0);
  while (!any_empty) {
    SubsetF2 i_set;
    for (int i = 0; i < nx; ++i) i_set = i_set | choices[i][pick[i]];
    for (std::uint32_t sub = i_set.bits;; sub = (sub - 1) & i_set.bits) {
      lhs.add(SubsetF2(sub), 1);
      if (sub == 0) break;
    }
    int i = 0;
    for (; i < nx; ++i) {
      if (++pick[i] < choices[i].size()) break;
      pick[i] = 0;
    }
    if (i == nx) break;
  }

  // Right side.
  SubsetF2 a_set, b_set;
  for (int i = 0; i < nx; ++i) {
    if (gamma[i] == 2) a_set = a_set | SubsetF2::singleton(i);
    if (gamma[i] == 1) b_set = b_set | SubsetF2::singleton(i);
  }
  GroupAlgebraElt rhs;
  for (std::uint32_t jb = b_set.bits;; jb = (jb - 1) & b_set.bits) {
    SubsetF2 j_set(jb);
    SubsetF2 aj = a_set | j_set;
    std::vector<SubsetF2> basis;
    for (int i : a_set.indices()) basis.push_back(s_push(u, SubsetF2::singleton(i), section));
    for (int i : aj.indices()) basis.push_back(delta_push(u, SubsetF2::singleton(i)));
    AffineSubspace w = make_affine(s_push(u, j_set, section), std::move(basis));
    long long weight = 1ll << (b_set.size() - j_set.size());
    rhs = rhs + sigma(w).times(weight);
    if (jb == 0) break;
  }

  return lhs == rhs;
}

}  // namespace wittkit
