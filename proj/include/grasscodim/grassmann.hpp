#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "grasscodim/gf.hpp"
#include "grasscodim/rng.hpp"

namespace grasscodim {

// Z2-grading of the Grassmann generators.  k is only meaningful for the
// KStar and K families (and must be >= 1 for K).
struct GradingSpec {
  enum Kind { Canonical, Infinity, KStar, K };
  Kind kind = Canonical;
  int k = 0;

  static GradingSpec canonical() { return {Canonical, 0}; }
  static GradingSpec infinity() { return {Infinity, 0}; }
  static GradingSpec kstar(int k) {
    if (k < 0) throw std::invalid_argument("kstar grading needs k >= 0");
    return {KStar, k};
  }
  static GradingSpec kk(int k) {
    if (k < 1) throw std::invalid_argument("k grading needs k >= 1");
    return {K, k};
  }

  // Degree (0 or 1) of generator e_i, i >= 1.
  int generator_degree(int i) const {
    switch (kind) {
      case Canonical: return 1;
      case Infinity: return i % 2;
      case KStar: return i <= k ? 1 : 0;
      case K: return i <= k ? 0 : 1;
    }
    return 1;
  }

  std::string name() const {
    switch (kind) {
      case Canonical: return "can";
      case Infinity: return "inf";
      case KStar: return "kstar" + std::to_string(k);
      case K: return "k" + std::to_string(k);
    }
    return "";
  }

  friend bool operator==(const GradingSpec& a, const GradingSpec& b) {
    return a.kind == b.kind && a.k == b.k;
  }
};

// Product of distinct generators e_{i1}...e_{is}, i1 < ... < is, stored as a
// bitmask.  Supports up to 128 generators; index i occupies bit i-1.
struct Blade {
  std::array<std::uint64_t, 2> w{0, 0};

  static constexpr int max_generators = 128;

  static Blade unit() { return Blade{}; }

  static Blade from_indices(const std::vector<int>& idx) {
    Blade b;
    for (int i : idx) {
      if (i < 1 || i > max_generators) throw std::out_of_range("generator index");
      if (b.contains(i)) throw std::invalid_argument("repeated generator index");
      b.set(i);
    }
    return b;
  }

  bool contains(int i) const { return (w[(i - 1) >> 6] >> ((i - 1) & 63)) & 1; }
  void set(int i) { w[(i - 1) >> 6] |= std::uint64_t{1} << ((i - 1) & 63); }

  int length() const { return std::popcount(w[0]) + std::popcount(w[1]); }

  bool disjoint(const Blade& o) const { return !(w[0] & o.w[0]) && !(w[1] & o.w[1]); }

  Blade merged(const Blade& o) const { return Blade{{w[0] | o.w[0], w[1] | o.w[1]}}; }

  int max_index() const {
    if (w[1]) return 64 + std::bit_width(w[1]);
    if (w[0]) return std::bit_width(w[0]);
    return 0;
  }

  std::vector<int> indices() const {
    std::vector<int> out;
    for (int word = 0; word < 2; ++word) {
      std::uint64_t x = w[word];
      while (x) {
        int b = std::countr_zero(x);
        out.push_back(word * 64 + b + 1);
        x &= x - 1;
      }
    }
    return out;
  }

  // Number of pairs (i in this, j in other) with i > j; its parity is the
  // sign of sorting the concatenation this|other.
  int inversions_with(const Blade& o) const {
    int inv = 0;
    for (int j : o.indices()) {
      // count bits of *this strictly above j
      Blade above;
      if (j < 64) {
        above.w[0] = w[0] & ~((std::uint64_t{2} << (j - 1)) - 1);
        above.w[1] = w[1];
      } else if (j < 128) {
        above.w[1] = w[1] & ~((std::uint64_t{2} << (j - 65)) - 1);
      }
      inv += above.length();
    }
    return inv;
  }

  int degree(const GradingSpec& g) const {
    int d = 0;
    for (int i : indices()) d += g.generator_degree(i);
    return d & 1;
  }

  friend auto operator<=>(const Blade& a, const Blade& b) {
    if (auto c = a.w[1] <=> b.w[1]; c != 0) return c;
    return a.w[0] <=> b.w[0];
  }
  friend bool operator==(const Blade&, const Blade&) = default;
};

// Element of the Grassmann algebra truncated to n generators, with
// coefficients in a finite field.  Value type; the Field must outlive it.
class GrassmannElement {
 public:
  GrassmannElement() = default;
  GrassmannElement(const Field* f, int n) : field_(f), n_(n) {
    if (n < 0 || n > Blade::max_generators) throw std::out_of_range("generator count");
  }

  static GrassmannElement zero(const Field& f, int n) { return GrassmannElement(&f, n); }

  static GrassmannElement scalar(const Field& f, int n, Fe c) {
    GrassmannElement g(&f, n);
    g.set_coeff(Blade::unit(), c);
    return g;
  }

  static GrassmannElement generator(const Field& f, int n, int i) {
    if (i < 1 || i > n) throw std::out_of_range("generator index");
    GrassmannElement g(&f, n);
    g.set_coeff(Blade::from_indices({i}), f.one());
    return g;
  }

  static GrassmannElement blade(const Field& f, int n, const std::vector<int>& idx, Fe c) {
    GrassmannElement g(&f, n);
    Blade b = Blade::from_indices(idx);
    if (b.max_index() > n) throw std::out_of_range("generator index above truncation");
    g.set_coeff(b, c);
    return g;
  }

  const Field& field() const { return *field_; }
  int generators() const { return n_; }
  const std::map<Blade, Fe>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void set_coeff(const Blade& b, Fe c) {
    if (field_->is_zero(c))
      terms_.erase(b);
    else
      terms_[b] = c;
  }

  Fe coeff(const Blade& b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? field_->zero() : it->second;
  }

  void add_coeff(const Blade& b, Fe c) { set_coeff(b, field_->add(coeff(b), c)); }

  friend GrassmannElement operator+(const GrassmannElement& a, const GrassmannElement& b) {
    a.check_compatible(b);
    GrassmannElement r = a;
    for (const auto& [bl, c] : b.terms_) r.add_coeff(bl, c);
    return r;
  }

  friend GrassmannElement operator-(const GrassmannElement& a, const GrassmannElement& b) {
    a.check_compatible(b);
    GrassmannElement r = a;
    for (const auto& [bl, c] : b.terms_) r.add_coeff(bl, b.field_->neg(c));
    return r;
  }

  friend GrassmannElement operator*(const GrassmannElement& a, const GrassmannElement& b) {
    a.check_compatible(b);
    const Field& f = *a.field_;
    GrassmannElement r(a.field_, a.n_);
    for (const auto& [ba, ca] : a.terms_) {
      for (const auto& [bb, cb] : b.terms_) {
        if (!ba.disjoint(bb)) continue;
        Fe c = f.mul(ca, cb);
        if (ba.inversions_with(bb) & 1) c = f.neg(c);
        r.add_coeff(ba.merged(bb), c);
      }
    }
    return r;
  }

  GrassmannElement scaled(Fe c) const {
    GrassmannElement r(field_, n_);
    if (field_->is_zero(c)) return r;
    for (const auto& [b, x] : terms_) r.set_coeff(b, field_->mul(x, c));
    return r;
  }

  GrassmannElement negated() const { return scaled(field_->neg(field_->one())); }

  GrassmannElement pow(unsigned long long e) const {
    GrassmannElement r = scalar(*field_, n_, field_->one());
    for (unsigned long long i = 0; i < e; ++i) r = r * *this;
    return r;
  }

  friend bool operator==(const GrassmannElement& a, const GrassmannElement& b) {
    return a.terms_ == b.terms_;
  }

  // Union of the supports of the blades.
  std::vector<int> supp() const {
    Blade u;
    for (const auto& [b, c] : terms_) u = u.merged(b);
    return u.indices();
  }

  // Largest blade length; defined only for nonzero elements.
  int wt() const {
    if (terms_.empty()) throw std::domain_error("wt of zero element");
    int w = 0;
    for (const auto& [b, c] : terms_) w = std::max(w, b.length());
    return w;
  }

  // Sum of the terms of maximal length.
  GrassmannElement dom() const {
    int w = wt();
    GrassmannElement r(field_, n_);
    for (const auto& [b, c] : terms_)
      if (b.length() == w) r.set_coeff(b, c);
    return r;
  }

  GrassmannElement homogeneous_part(const GradingSpec& g, int d) const {
    GrassmannElement r(field_, n_);
    for (const auto& [b, c] : terms_)
      if (b.degree(g) == (d & 1)) r.set_coeff(b, c);
    return r;
  }

  bool is_homogeneous(const GradingSpec& g, int d) const {
    for (const auto& [b, c] : terms_)
      if (b.degree(g) != (d & 1)) return false;
    return true;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [b, c] : terms_) {
      if (!first) s += " + ";
      first = false;
      s += field_->to_string(c);
      s += "*e[";
      bool fi = true;
      for (int i : b.indices()) {
        if (!fi) s += ",";
        fi = false;
        s += std::to_string(i);
      }
      s += "]";
    }
    return s;
  }

 private:
  void check_compatible(const GrassmannElement& o) const {
    if (field_ != o.field_ || n_ != o.n_)
      throw std::invalid_argument("mixed Grassmann algebra operands");
  }

  const Field* field_ = nullptr;
  int n_ = 0;
  std::map<Blade, Fe> terms_;
};

// Random homogeneous element of the requested degree: a sum of at most
// max_blades random blades (support size <= 4), rejection-sampled to the
// right degree.  Degree 0 admits a scalar term.
inline GrassmannElement random_graded_element(const Field& f, int n, const GradingSpec& g,
                                              int d, int max_blades, Rng& rng) {
  GrassmannElement r(&f, n);
  int blades = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_blades)));
  for (int t = 0; t < blades; ++t) {
    for (int attempt = 0; attempt < 64; ++attempt) {
      int sz = (d == 0 && rng.below(4) == 0) ? 0 : 1 + static_cast<int>(rng.below(4));
      Blade b;
      bool ok = true;
      for (int j = 0; j < sz; ++j) {
        int i = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        if (b.contains(i)) {
          ok = false;
          break;
        }
        b.set(i);
      }
      if (!ok || b.degree(g) != (d & 1)) continue;
      Fe c = f.element(1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(f.q() - 1))));
      r.add_coeff(b, c);
      break;
    }
  }
  return r;
}

}  // namespace grasscodim
