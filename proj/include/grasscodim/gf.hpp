#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace grasscodim {

// Element of a finite field, stored as an index into the field's tables.
// The index encodes the coefficient vector of the residue polynomial in
// base p: index = c0 + c1*p + ... + c_{m-1}*p^{m-1}.
struct Fe {
  std::uint16_t v = 0;
  friend bool operator==(Fe a, Fe b) { return a.v == b.v; }
  friend bool operator!=(Fe a, Fe b) { return a.v != b.v; }
  friend bool operator<(Fe a, Fe b) { return a.v < b.v; }
};

// GF(p^m) for odd prime p, with full add/mul/inv lookup tables.  The
// reduction polynomial is the least monic irreducible of degree m, where
// "least" means smallest value of sum c_i p^i over the non-leading
// coefficients.  Elements serialize as m base-p digits, least significant
// first ("21" in GF(9) is 2 + 1*x).
class Field {
 public:
  Field(int p, int m) : p_(p), m_(m) {
    if (m < 1) throw std::invalid_argument("field degree must be >= 1");
    if (p == 2) throw std::invalid_argument("characteristic 2 not supported");
    if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime");
    long long qq = 1;
    for (int i = 0; i < m; ++i) {
      qq *= p;
      if (qq > 4096) throw std::invalid_argument("field too large (q > 4096)");
    }
    q_ = static_cast<int>(qq);
    reduction_ = least_irreducible(p, m);
    build_tables();
  }

  int p() const { return p_; }
  int m() const { return m_; }
  int q() const { return q_; }

  // Non-leading coefficients c0..c_{m-1} of the monic reduction polynomial.
  const std::vector<int>& reduction() const { return reduction_; }

  Fe zero() const { return Fe{0}; }
  Fe one() const { return Fe{1}; }

  Fe element(int index) const {
    if (index < 0 || index >= q_) throw std::out_of_range("field element index");
    return Fe{static_cast<std::uint16_t>(index)};
  }

  // Integer literals land in the prime subfield.
  Fe from_int(long long n) const {
    long long r = n % p_;
    if (r < 0) r += p_;
    return Fe{static_cast<std::uint16_t>(r)};
  }

  Fe add(Fe a, Fe b) const { return Fe{add_[a.v * q_ + b.v]}; }
  Fe mul(Fe a, Fe b) const { return Fe{mul_[a.v * q_ + b.v]}; }
  Fe neg(Fe a) const { return Fe{neg_[a.v]}; }
  Fe sub(Fe a, Fe b) const { return add(a, neg(b)); }

  Fe inv(Fe a) const {
    if (a.v == 0) throw std::domain_error("inverse of zero");
    return Fe{inv_[a.v]};
  }

  Fe div(Fe a, Fe b) const { return mul(a, inv(b)); }

  Fe pow(Fe a, unsigned long long e) const {
    Fe r = one();
    Fe base = a;
    while (e > 0) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }

  bool is_zero(Fe a) const { return a.v == 0; }

  std::string to_string(Fe a) const {
    std::string s;
    int v = a.v;
    for (int i = 0; i < m_; ++i) {
      s.push_back(static_cast<char>('0' + v % p_));
      v /= p_;
    }
    return s;
  }

  Fe parse(const std::string& s) const {
    if (static_cast<int>(s.size()) != m_)
      throw std::invalid_argument("field element string must have m digits");
    int v = 0;
    for (int i = m_ - 1; i >= 0; --i) {
      int d = s[i] - '0';
      if (d < 0 || d >= p_) throw std::invalid_argument("digit out of range");
      v = v * p_ + d;
    }
    return Fe{static_cast<std::uint16_t>(v)};
  }

  static bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

 private:
  using Poly = std::vector<int>;  // coefficients over GF(p), c0 first

  static Poly trim(Poly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
  }

  static Poly poly_mod(Poly a, const Poly& b, int p) {
    a = trim(std::move(a));
    Poly bb = trim(b);
    while (a.size() >= bb.size() && !a.empty()) {
      // make leading coefficient of bb equal 1 via scaling factor
      int lead_inv = 1;
      for (int t = 1; t < p; ++t)
        if (t * bb.back() % p == 1) lead_inv = t;
      int c = static_cast<int>(a.back()) * lead_inv % p;
      std::size_t shift = a.size() - bb.size();
      for (std::size_t i = 0; i < bb.size(); ++i) {
        a[i + shift] = ((a[i + shift] - c * bb[i]) % p + p) % p;
      }
      a = trim(std::move(a));
    }
    return a;
  }

  // Smallest monic irreducible of degree m; candidates ordered by the
  // integer value of their non-leading coefficient vector.
  static std::vector<int> least_irreducible(int p, int m) {
    if (m == 1) return {0};  // reduction x, unused for prime fields
    long long count = 1;
    for (int i = 0; i < m; ++i) count *= p;
    for (long long code = 0; code < count; ++code) {
      std::vector<int> c(m);
      long long v = code;
      for (int i = 0; i < m; ++i) {
        c[i] = static_cast<int>(v % p);
        v /= p;
      }
      Poly f = c;
      f.push_back(1);  // monic
      if (irreducible(f, p)) return c;
    }
    throw std::logic_error("no irreducible polynomial found");
  }

  // Trial division by every monic polynomial of degree 1..m/2.
  static bool irreducible(const Poly& f, int p) {
    int m = static_cast<int>(f.size()) - 1;
    for (int d = 1; 2 * d <= m; ++d) {
      long long count = 1;
      for (int i = 0; i < d; ++i) count *= p;
      for (long long code = 0; code < count; ++code) {
        Poly g(d + 1, 0);
        long long v = code;
        for (int i = 0; i < d; ++i) {
          g[i] = static_cast<int>(v % p);
          v /= p;
        }
        g[d] = 1;
        if (poly_mod(f, g, p).empty()) return false;
      }
    }
    return true;
  }

  void build_tables() {
    neg_.resize(q_);
    add_.resize(static_cast<std::size_t>(q_) * q_);
    mul_.resize(static_cast<std::size_t>(q_) * q_);
    inv_.resize(q_);
    auto digits = [&](int v) {
      std::vector<int> d(m_);
      for (int i = 0; i < m_; ++i) {
        d[i] = v % p_;
        v /= p_;
      }
      return d;
    };
    auto pack = [&](const std::vector<int>& d) {
      int v = 0;
      for (int i = m_ - 1; i >= 0; --i) v = v * p_ + (i < static_cast<int>(d.size()) ? d[i] : 0);
      return v;
    };
    for (int a = 0; a < q_; ++a) {
      auto da = digits(a);
      std::vector<int> dn(m_);
      for (int i = 0; i < m_; ++i) dn[i] = (p_ - da[i]) % p_;
      neg_[a] = static_cast<std::uint16_t>(pack(dn));
      for (int b = 0; b < q_; ++b) {
        auto db = digits(b);
        std::vector<int> ds(m_);
        for (int i = 0; i < m_; ++i) ds[i] = (da[i] + db[i]) % p_;
        add_[static_cast<std::size_t>(a) * q_ + b] = static_cast<std::uint16_t>(pack(ds));
        // polynomial product reduced by the reduction polynomial
        std::vector<int> prod(2 * m_ - 1, 0);
        for (int i = 0; i < m_; ++i)
          for (int j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
        // reduce: x^m = -reduction_ (for m == 1 the product is already a scalar)
        for (int deg = 2 * m_ - 2; deg >= m_; --deg) {
          int c = prod[deg];
          if (c == 0) continue;
          prod[deg] = 0;
          for (int i = 0; i < m_; ++i)
            prod[deg - m_ + i] = ((prod[deg - m_ + i] - c * reduction_[i]) % p_ + p_) % p_;
        }
        prod.resize(m_);
        mul_[static_cast<std::size_t>(a) * q_ + b] = static_cast<std::uint16_t>(pack(prod));
      }
    }
    inv_[0] = 0;
    for (int a = 1; a < q_; ++a) {
      for (int b = 1; b < q_; ++b) {
        if (mul_[static_cast<std::size_t>(a) * q_ + b] == 1) {
          inv_[a] = static_cast<std::uint16_t>(b);
          break;
        }
      }
    }
  }

  int p_, m_, q_;
  std::vector<int> reduction_;
  std::vector<std::uint16_t> neg_, inv_, add_, mul_;
};

}  // namespace grasscodim
