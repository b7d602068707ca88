#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace wittkit {

inline constexpr int kMaxUniverse = 16;  // every construction enumerates 2^|X|

// An ordered finite set of labels; elements are addressed by index.
struct Universe {
  std::vector<std::string> labels;

  Universe() = default;
  explicit Universe(std::vector<std::string> l);

  int size() const { return static_cast<int>(labels.size()); }
};

Universe make_universe(int n, const std::string& prefix = "");

// A subset of a universe, as a membership mask.
struct SubsetF2 {
  std::uint32_t bits = 0;

  SubsetF2() = default;
  explicit SubsetF2(std::uint32_t b) : bits(b) {}
  static SubsetF2 empty() { return SubsetF2(); }
  static SubsetF2 singleton(int i) { return SubsetF2(1u << i); }
  static SubsetF2 of(std::initializer_list<int> idx);
  static SubsetF2 full(int n) { return SubsetF2(n == 32 ? ~0u : (1u << n) - 1); }

  int size() const;
  bool even() const { return size() % 2 == 0; }
  bool test(int i) const { return (bits >> i) & 1u; }
  bool subset_of(const SubsetF2& o) const { return (bits & ~o.bits) == 0; }
  bool disjoint(const SubsetF2& o) const { return (bits & o.bits) == 0; }
  std::vector<int> indices() const;

  friend SubsetF2 operator^(const SubsetF2& a, const SubsetF2& b) { return SubsetF2(a.bits ^ b.bits); }
  friend SubsetF2 operator&(const SubsetF2& a, const SubsetF2& b) { return SubsetF2(a.bits & b.bits); }
  friend SubsetF2 operator|(const SubsetF2& a, const SubsetF2& b) { return SubsetF2(a.bits | b.bits); }
  friend bool operator==(const SubsetF2& a, const SubsetF2& b) { return a.bits == b.bits; }
  friend bool operator!=(const SubsetF2& a, const SubsetF2& b) { return a.bits != b.bits; }
  friend bool operator<(const SubsetF2& a, const SubsetF2& b) { return a.bits < b.bits; }
};

std::string subset_to_string(const SubsetF2& s, const Universe& u);

// An affine F2-subspace base + span(basis), kept in a canonical reduced
// form: basis in row echelon order with distinct pivots, base reduced
// against the pivots.
struct AffineSubspace {
  SubsetF2 base;
  std::vector<SubsetF2> basis;

  int dim() const { return static_cast<int>(basis.size()); }
  bool is_linear() const { return base == SubsetF2::empty(); }
  bool contains(const SubsetF2& x) const;
  std::vector<SubsetF2> enumerate() const;  // exactly 2^dim distinct subsets
};

// Canonicalizes; throws std::domain_error if the basis is dependent.
AffineSubspace make_affine(SubsetF2 base, std::vector<SubsetF2> basis);
AffineSubspace single_point(SubsetF2 x);
AffineSubspace power_set(SubsetF2 support);  // P(A) as a linear subspace

// Direction containment dir(inner) <= dir(outer).
bool direction_contained(const AffineSubspace& inner, const AffineSubspace& outer);

// W cap P_0(X): even-size members of W, or nullopt when empty.
std::optional<AffineSubspace> parity_hyperplane_section(const AffineSubspace& w);

// V_{J,A} = J + P(A); requires J and A disjoint.
AffineSubspace v_subspace(const SubsetF2& j, const SubsetF2& a);

// Product universe X x Y with pair labels; element (i,j) has index i*|Y|+j.
struct ProductUniverse {
  int nx = 0, ny = 0;
  Universe xy;

  int index(int i, int j) const { return i * ny + j; }
  int x_of(int idx) const { return idx / ny; }
  int y_of(int idx) const { return idx % ny; }
};

ProductUniverse make_product(int nx, int ny);

// Fiber counts theta_I(i) = |pi^{-1}({i}) cap I|.
std::vector<int> theta(const ProductUniverse& u, const SubsetF2& i_set);

// s_*(S) = {(i, section[i]) : i in S} and Delta(S) = S x Y.
SubsetF2 s_push(const ProductUniverse& u, const SubsetF2& s, const std::vector<int>& section);
SubsetF2 delta_push(const ProductUniverse& u, const SubsetF2& s);

// An element of the integral group algebra Z[P(X)].
struct GroupAlgebraElt {
  std::map<SubsetF2, long long> coeffs;

  GroupAlgebraElt& add(const SubsetF2& s, long long c);
  friend GroupAlgebraElt operator+(const GroupAlgebraElt& a, const GroupAlgebraElt& b);
  GroupAlgebraElt times(long long n) const;
  friend bool operator==(const GroupAlgebraElt& a, const GroupAlgebraElt& b) = default;
};

GroupAlgebraElt sigma(const std::vector<SubsetF2>& subsets);
GroupAlgebraElt sigma(const AffineSubspace& w);

// The Z[P(X x Y)] identity: sum over theta_I = gamma of sigma(P(I)) equals
// sum over J subset B of 2^{|B\J|} sigma(s_*(V_{J,A}) + Delta(P(A u J))),
// with A = gamma^{-1}(2) and B = gamma^{-1}(1).
bool verify_group_algebra_identity(int nx, int ny, const std::vector<int>& gamma,
                                   const std::vector<int>& section);

}  // namespace wittkit
