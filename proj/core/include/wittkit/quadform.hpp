#pragma once

#include "wittkit/rationals.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace wittkit {

// A diagonal quadratic form <a_1,...,a_n> over Q; every entry nonzero.
struct DiagForm {
  std::vector<Rat> entries;

  DiagForm() = default;
  explicit DiagForm(std::vector<Rat> e);

  int dim() const { return static_cast<int>(entries.size()); }
};

DiagForm scaled(const Rat& c, const DiagForm& q);
DiagForm perp(const DiagForm& a, const DiagForm& b);  // orthogonal sum
DiagForm tensor(const DiagForm& a, const DiagForm& b);
DiagForm hyperbolic_plane();
std::string form_to_string(const DiagForm& q);

// An element of GW(Q): a virtual diagonal form, stored as a finite map
// square class -> integer multiplicity with zero multiplicities removed.
class GWClass {
 public:
  GWClass() = default;
  static GWClass one();                       // <1>
  static GWClass of(const SquareClass& s);    // <s>
  static GWClass of_form(const DiagForm& q);

  const std::map<SquareClass, long long>& terms() const { return terms_; }
  long long rank() const;  // virtual rank, multiplicities counted with sign
  bool operator==(const GWClass&) const = default;

  GWClass& add(const SquareClass& s, long long mult);
  friend GWClass operator+(const GWClass& a, const GWClass& b);
  friend GWClass operator-(const GWClass& a, const GWClass& b);
  friend GWClass operator*(const GWClass& a, const GWClass& b);
  GWClass scaled_by(const SquareClass& s) const;   // <s> * this
  GWClass scaled_by(const Rat& c) const;
  GWClass times(long long n) const;

  // A genuine diagonal form with the same Witt class: m<s> for m>0 and
  // |m|<-s> for m<0.  Its rank is the total absolute multiplicity.
  DiagForm representative() const;

 private:
  std::map<SquareClass, long long> terms_;
};

std::string gw_to_string(const GWClass& x);

// Complete invariants of a rational diagonal form (for its isometry class).
struct WittProfile {
  long long rank = 0;
  SquareClass signed_disc;          // (-1)^{n(n-1)/2} det
  std::map<Place, int> hasse;       // places with Hasse symbol -1 only
  long long signature = 0;
};

WittProfile witt_profile(const DiagForm& q);

// Isometry of equal-rank forms / Witt equivalence / GW equality.
bool isometric(const DiagForm& a, const DiagForm& b);
bool witt_equal(const DiagForm& a, const DiagForm& b);
bool witt_equal(const GWClass& a, const GWClass& b);
bool witt_zero(const GWClass& a);
bool gw_equal(const GWClass& a, const GWClass& b);

// Hasse-Minkowski local-global isotropy test.
bool is_isotropic(const DiagForm& q);
bool represents(const DiagForm& q, const Rat& c);

// Whether lambda is a similarity factor of phi; phi must be a (general)
// Pfister form, for which G(phi) equals the set of represented values.
bool in_similarity_group(const Rat& lambda, const DiagForm& phi);

// The largest n with the Witt class of x in I^n(Q), nullopt for the zero
// class (degree infinity).
std::optional<int> witt_filtration_degree(const GWClass& x);
bool filtration_at_least(const GWClass& x, int n);

}  // namespace wittkit
