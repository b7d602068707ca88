#include "wittkit/quadform.hpp"

#include <algorithm>
#include <stdexcept>

namespace wittkit {

DiagForm::DiagForm(std::vector<Rat> e) : entries(std::move(e)) {
  for (const auto& a : entries) {
    if (a == 0) throw std::domain_error("DiagForm: zero entry");
  }
}

DiagForm scaled(const Rat& c, const DiagForm& q) {
  if (c == 0) throw std::domain_error("scaled: zero scalar");
  std::vector<Rat> e;
  e.reserve(q.entries.size());
  for (const auto& a : q.entries) e.push_back(c * a);
  return DiagForm(std::move(e));
}

DiagForm perp(const DiagForm& a, const DiagForm& b) {
  std::vector<Rat> e = a.entries;
  e.insert(e.end(), b.entries.begin(), b.entries.end());
  return DiagForm(std::move(e));
}

DiagForm tensor(const DiagForm& a, const DiagForm& b) {
  std::vector<Rat> e;
  e.reserve(a.entries.size() * b.entries.size());
  for (const auto& x : a.entries)
    for (const auto& y : b.entries) e.push_back(x * y);
  return DiagForm(std::move(e));
}

DiagForm hyperbolic_plane() { return DiagForm({Rat(1), Rat(-1)}); }

std::string form_to_string(const DiagForm& q) {
  std::string s = "<";
  for (int i = 0; i < q.dim(); ++i) {
    if (i) s += ",";
    s += rat_to_string(q.entries[i]);
  }
  return s + ">";
}

GWClass GWClass::one() { return of(SquareClass(Int(1))); }

GWClass GWClass::of(const SquareClass& s) {
  GWClass x;
  x.terms_[s] = 1;
  return x;
}

GWClass GWClass::of_form(const DiagForm& q) {
  GWClass x;
  for (const auto& a : q.entries) x.add(squarefree_rep(a), 1);
  return x;
}

long long GWClass::rank() const {
  long long r = 0;
  for (const auto& [_, m] : terms_) r += m;
  return r;
}

GWClass& GWClass::add(const SquareClass& s, long long mult) {
  if (mult == 0) return *this;
  auto it = terms_.find(s);
  if (it == terms_.end()) {
    terms_[s] = mult;
  } else {
    it->second += mult;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

GWClass operator+(const GWClass& a, const GWClass& b) {
  GWClass out = a;
  for (const auto& [s, m] : b.terms_) out.add(s, m);
  return out;
}

GWClass operator-(const GWClass& a, const GWClass& b) {
  GWClass out = a;
  for (const auto& [s, m] : b.terms_) out.add(s, -m);
  return out;
}

GWClass operator*(const GWClass& a, const GWClass& b) {
  GWClass out;
  for (const auto& [s, m] : a.terms_)
    for (const auto& [t, n] : b.terms_) out.add(sq_mul(s, t), m * n);
  return out;
}

GWClass GWClass::scaled_by(const SquareClass& s) const {
  GWClass out;
  for (const auto& [t, m] : terms_) out.add(sq_mul(s, t), m);
  return out;
}

GWClass GWClass::scaled_by(const Rat& c) const { return scaled_by(squarefree_rep(c)); }

GWClass GWClass::times(long long n) const {
  GWClass out;
  if (n == 0) return out;
  for (const auto& [s, m] : terms_) out.add(s, m * n);
  return out;
}

DiagForm GWClass::representative() const {
  std::vector<Rat> e;
  for (const auto& [s, m] : terms_) {
    if (m > 0) {
      for (long long i = 0; i < m; ++i) e.push_back(Rat(s.rep));
    } else {
      for (long long i = 0; i < -m; ++i) e.push_back(Rat(-s.rep));
    }
  }
  return DiagForm(std::move(e));
}

std::string gw_to_string(const GWClass& x) {
  if (x.terms().empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [t, m] : x.terms()) {
    if (!first) s += " + ";
    first = false;
    if (m != 1) s += std::to_string(m) + "*";
    s += "<" + t.rep.str() + ">";
  }
  return s;
}

namespace {

// A diagonal form as distinct square classes with positive multiplicities.
// All classical invariants are computed from this grouped data, so large
// multiplicities cost nothing.
struct Grouped {
  std::vector<std::pair<SquareClass, long long>> entries;
  long long rank = 0;
  long long signature = 0;

  void add(const SquareClass& s, long long count) {
    if (count <= 0) return;
    rank += count;
    signature += s.rep > 0 ? count : -count;
    for (auto& [t, n] : entries) {
      if (t == s) {
        n += count;
        return;
      }
    }
    entries.emplace_back(s, count);
  }
};

Grouped grouped_of(const GWClass& x) {
  Grouped g;
  for (const auto& [s, m] : x.terms()) {
    if (m > 0) {
      g.add(s, m);
    } else {
      g.add(sq_neg(s), -m);
    }
  }
  return g;
}

void pad_hyperbolic(Grouped& g, long long planes) {
  g.add(SquareClass(Int(1)), planes);
  g.add(SquareClass(Int(-1)), planes);
}

SquareClass signed_disc_of(const Grouped& g) {
  SquareClass disc(Int(1));
  for (const auto& [s, n] : g.entries) {
    if (n % 2 != 0) disc = sq_mul(disc, s);
  }
  long long m = g.rank % 4;  // n(n-1)/2 mod 2 depends on n mod 4
  if (m == 2 || m == 3) disc = sq_neg(disc);
  return disc;
}

int hasse_at(const Grouped& g, const Place& v) {
  int sign = 1;
  for (size_t i = 0; i < g.entries.size(); ++i) {
    const auto& [s, n] = g.entries[i];
    if ((n * (n - 1) / 2) % 2 != 0 && hilbert_symbol(s, s, v) == -1) sign = -sign;
    for (size_t j = i + 1; j < g.entries.size(); ++j) {
      const auto& [t, m] = g.entries[j];
      if ((n * m) % 2 != 0 && hilbert_symbol(s, t, v) == -1) sign = -sign;
    }
  }
  return sign;
}

std::set<Place> grouped_places(const Grouped& a, const Grouped& b) {
  std::vector<SquareClass> cls{SquareClass(Int(-1))};  // padding entries
  for (const auto& [s, _] : a.entries) cls.push_back(s);
  for (const auto& [s, _] : b.entries) cls.push_back(s);
  return relevant_places(cls);
}

bool grouped_witt_equal(Grouped x, Grouped y) {
  if ((x.rank - y.rank) % 2 != 0) return false;
  if (x.rank < y.rank) pad_hyperbolic(x, (y.rank - x.rank) / 2);
  if (y.rank < x.rank) pad_hyperbolic(y, (x.rank - y.rank) / 2);
  if (x.signature != y.signature) return false;
  if (signed_disc_of(x) != signed_disc_of(y)) return false;
  for (const auto& v : grouped_places(x, y)) {
    if (hasse_at(x, v) != hasse_at(y, v)) return false;
  }
  return true;
}

}  // namespace

WittProfile witt_profile(const DiagForm& q) {
  Grouped g = grouped_of(GWClass::of_form(q));
  WittProfile w;
  w.rank = q.dim();
  w.signature = g.signature;
  w.signed_disc = signed_disc_of(g);
  for (const auto& v : grouped_places(g, Grouped{})) {
    if (hasse_at(g, v) == -1) w.hasse[v] = -1;
  }
  return w;
}

bool isometric(const DiagForm& a, const DiagForm& b) {
  if (a.dim() != b.dim()) return false;
  return grouped_witt_equal(grouped_of(GWClass::of_form(a)), grouped_of(GWClass::of_form(b)));
}

bool witt_equal(const DiagForm& a, const DiagForm& b) {
  return grouped_witt_equal(grouped_of(GWClass::of_form(a)), grouped_of(GWClass::of_form(b)));
}

bool witt_equal(const GWClass& a, const GWClass& b) {
  return grouped_witt_equal(grouped_of(a), grouped_of(b));
}

bool witt_zero(const GWClass& a) {
  return grouped_witt_equal(grouped_of(a), Grouped{});
}

bool gw_equal(const GWClass& a, const GWClass& b) {
  return a.rank() == b.rank() && witt_equal(a, b);
}

namespace {

// Local isotropy over the completion at v; dim >= 2, all entries nonzero.
bool locally_isotropic(const std::vector<SquareClass>& cls, const Place& v) {
  int n = static_cast<int>(cls.size());
  if (v.is_real()) {
    bool pos = false, neg = false;
    for (const auto& s : cls) (s.rep > 0 ? pos : neg) = true;
    return pos && neg;
  }
  if (n >= 5) return true;
  if (n == 2) {
    return is_local_square(sq_neg(sq_mul(cls[0], cls[1])), v);
  }
  if (n == 3) {
    // <a,b,c> isotropic over Q_v iff (-ac,-bc)_v = +1.
    SquareClass mac = sq_neg(sq_mul(cls[0], cls[2]));
    SquareClass mbc = sq_neg(sq_mul(cls[1], cls[2]));
    return hilbert_symbol(mac, mbc, v) == 1;
  }
  // n == 4: isotropic iff d != 1 locally, or d = 1 and Hasse = (-1,-1)_v,
  // with d the plain determinant class.
  SquareClass d(Int(1));
  for (const auto& s : cls) d = sq_mul(d, s);
  if (!is_local_square(d, v)) return true;
  int eps = 1;
  for (size_t i = 0; i < cls.size(); ++i)
    for (size_t j = i + 1; j < cls.size(); ++j) eps *= hilbert_symbol(cls[i], cls[j], v);
  SquareClass m1(Int(-1));
  return eps == hilbert_symbol(m1, m1, v);
}

}  // namespace

bool is_isotropic(const DiagForm& q) {
  if (q.dim() < 1) throw std::domain_error("is_isotropic: empty form");
  if (q.dim() == 1) return false;
  std::vector<SquareClass> cls;
  cls.reserve(q.entries.size());
  for (const auto& a : q.entries) cls.push_back(squarefree_rep(a));
  if (q.dim() == 2) return sq_neg(sq_mul(cls[0], cls[1])).is_trivial();
  for (const auto& v : relevant_places(cls)) {
    if (!locally_isotropic(cls, v)) return false;
  }
  return true;
}

bool represents(const DiagForm& q, const Rat& c) {
  if (c == 0) throw std::domain_error("represents: zero value");
  return is_isotropic(perp(q, DiagForm({-c})));
}

bool in_similarity_group(const Rat& lambda, const DiagForm& phi) {
  if (lambda == 0) throw std::domain_error("in_similarity_group: zero scalar");
  return represents(phi, lambda);
}

std::optional<int> witt_filtration_degree(const GWClass& x) {
  Grouped g = grouped_of(x);
  if (g.rank % 2 != 0) return 0;
  if (!signed_disc_of(g).is_trivial()) return 1;
  // The Hasse profile padded to rank 0 mod 8 is the Witt-stable Clifford
  // invariant e_2 on classes with trivial signed discriminant.
  Grouped padded = g;
  if (long long r = padded.rank % 8; r != 0) pad_hyperbolic(padded, (8 - r) / 2);
  for (const auto& v : grouped_places(padded, Grouped{})) {
    if (hasse_at(padded, v) == -1) return 2;
  }
  // In I^3(Q): torsion-free, detected by the signature.
  if (g.signature == 0) return std::nullopt;
  long long s = g.signature < 0 ? -g.signature : g.signature;
  int n = 0;
  while (s % 2 == 0) {
    s /= 2;
    ++n;
  }
  if (n < 3) throw std::logic_error("witt_filtration_degree: signature not 0 mod 8 in I^3");
  return n;
}

bool filtration_at_least(const GWClass& x, int n) {
  auto d = witt_filtration_degree(x);
  return !d.has_value() || *d >= n;
}

}  // namespace wittkit
