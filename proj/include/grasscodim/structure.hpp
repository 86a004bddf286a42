#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "grasscodim/freealg.hpp"

namespace grasscodim {

// Canonical monomial of the free algebra modulo the two-sided ideal of
// [x1,x2,x3]: a power prefix y1^a1...yl^al z1^b1...zm^bm followed by a
// product of commutators [t1,t2][t3,t4]... whose flattened entries are
// strictly increasing.  The commutator factors are antisymmetric in all
// entries modulo that ideal, so the sorted form with a sign is canonical.
struct PrTerm {
  std::vector<int> beg_y;       // exponents of y1..yl in the prefix
  std::vector<int> beg_z;       // exponents of z1..zm in the prefix
  std::vector<Variable> psi;    // flattened commutator entries, even count

  int l() const { return static_cast<int>(beg_y.size()); }
  int m() const { return static_cast<int>(beg_z.size()); }

  bool valid() const {
    if (psi.size() % 2 != 0) return false;
    for (std::size_t i = 0; i + 1 < psi.size(); ++i)
      if (!(psi[i] < psi[i + 1])) return false;
    for (int e : beg_y)
      if (e < 0) return false;
    for (int e : beg_z)
      if (e < 0) return false;
    return true;
  }

  bool psi_contains(Variable v) const {
    return std::binary_search(psi.begin(), psi.end(), v);
  }

  int beg_deg(Variable v) const {
    if (v.sort == Variable::Y)
      return v.index <= l() ? beg_y[v.index - 1] : 0;
    return v.index <= m() ? beg_z[v.index - 1] : 0;
  }

  // Total degree in v, prefix plus commutator tail.
  int deg(Variable v) const { return beg_deg(v) + (psi_contains(v) ? 1 : 0); }

  int deg_y_total() const {
    int s = 0;
    for (int e : beg_y) s += e;
    for (const Variable& v : psi) s += v.sort == Variable::Y;
    return s;
  }

  int deg_z_total() const {
    int s = 0;
    for (int e : beg_z) s += e;
    for (const Variable& v : psi) s += v.sort == Variable::Z;
    return s;
  }

  int deg_total() const { return deg_y_total() + deg_z_total(); }

  int beg_deg_y() const {
    int s = 0;
    for (int e : beg_y) s += e;
    return s;
  }

  int beg_deg_z() const {
    int s = 0;
    for (int e : beg_z) s += e;
    return s;
  }

  int psi_deg_y() const {
    int s = 0;
    for (const Variable& v : psi) s += v.sort == Variable::Y;
    return s;
  }

  int psi_deg_z() const {
    int s = 0;
    for (const Variable& v : psi) s += v.sort == Variable::Z;
    return s;
  }

  // Variables occurring in the term.
  std::vector<Variable> support() const {
    std::vector<Variable> out;
    for (int i = 0; i < l(); ++i)
      if (beg_y[i] > 0) out.push_back(Variable::y(i + 1));
    for (int j = 0; j < m(); ++j)
      if (beg_z[j] > 0) out.push_back(Variable::z(j + 1));
    for (const Variable& v : psi)
      if (beg_deg(v) == 0) out.push_back(v);
    std::sort(out.begin(), out.end());
    return out;
  }

  // First z factor of the prefix (lowest index with positive exponent).
  std::optional<Variable> pr_z() const {
    for (int j = 0; j < m(); ++j)
      if (beg_z[j] > 0) return Variable::z(j + 1);
    return std::nullopt;
  }

  // Lowest-indexed odd variable occurring anywhere in the term, prefix or
  // commutator tail.
  std::optional<Variable> first_z() const {
    std::optional<Variable> best;
    for (int j = 0; j < m(); ++j)
      if (beg_z[j] > 0) {
        best = Variable::z(j + 1);
        break;
      }
    for (const Variable& v : psi)
      if (v.sort == Variable::Z && (!best || v < *best)) best = v;
    return best;
  }

  bool is_multilinear() const {
    for (int e : beg_y)
      if (e > 1) return false;
    for (int e : beg_z)
      if (e > 1) return false;
    for (const Variable& v : psi)
      if (beg_deg(v) > 0) return false;
    return true;
  }

  bool is_unit() const { return psi.empty() && beg_deg_y() == 0 && beg_deg_z() == 0; }

  // The monomial as an ordinary free polynomial (commutators expanded).
  FreePoly to_poly(const Field& f) const {
    FreePoly r = FreePoly::constant(f, f.one());
    for (int i = 0; i < l(); ++i)
      r = r * FreePoly::var(f, Variable::y(i + 1)).pow(static_cast<unsigned>(beg_y[i]));
    for (int j = 0; j < m(); ++j)
      r = r * FreePoly::var(f, Variable::z(j + 1)).pow(static_cast<unsigned>(beg_z[j]));
    for (std::size_t i = 0; i + 1 < psi.size(); i += 2)
      r = r * commutator(FreePoly::var(f, psi[i]), FreePoly::var(f, psi[i + 1]));
    return r;
  }

  std::string to_string() const {
    std::string s;
    auto append = [&](const std::string& part) {
      if (!s.empty()) s += "*";
      s += part;
    };
    for (int i = 0; i < l(); ++i) {
      if (beg_y[i] == 0) continue;
      std::string part = Variable::y(i + 1).to_string();
      if (beg_y[i] > 1) part += "^" + std::to_string(beg_y[i]);
      append(part);
    }
    for (int j = 0; j < m(); ++j) {
      if (beg_z[j] == 0) continue;
      std::string part = Variable::z(j + 1).to_string();
      if (beg_z[j] > 1) part += "^" + std::to_string(beg_z[j]);
      append(part);
    }
    for (std::size_t i = 0; i + 1 < psi.size(); i += 2)
      append("[" + psi[i].to_string() + "," + psi[i + 1].to_string() + "]");
    return s.empty() ? "1" : s;
  }

  friend bool operator==(const PrTerm&, const PrTerm&) = default;
};

// Split of the term's variables by where the variable shows up: prefix
// only, prefix and tail, or tail only.
struct VariableSplit {
  std::vector<Variable> y_beg_only, y_both, y_psi_only;
  std::vector<Variable> z_beg_only, z_both, z_psi_only;
};

inline VariableSplit classify(const PrTerm& a) {
  VariableSplit s;
  for (const Variable& v : a.support()) {
    bool in_beg = a.beg_deg(v) > 0;
    bool in_psi = a.psi_contains(v);
    if (v.sort == Variable::Y) {
      if (in_beg && in_psi)
        s.y_both.push_back(v);
      else if (in_beg)
        s.y_beg_only.push_back(v);
      else
        s.y_psi_only.push_back(v);
    } else {
      if (in_beg && in_psi)
        s.z_both.push_back(v);
      else if (in_beg)
        s.z_beg_only.push_back(v);
      else
        s.z_psi_only.push_back(v);
    }
  }
  return s;
}

// ---------------------------------------------------------------------------
// The SS families.

enum class Family { SS, SS0, SS1, SS2, SS3 };

inline std::string family_name(Family f) {
  switch (f) {
    case Family::SS: return "SS";
    case Family::SS0: return "SS0";
    case Family::SS1: return "SS1";
    case Family::SS2: return "SS2";
    case Family::SS3: return "SS3";
  }
  return "";
}

// How the multilinearity clause in the SS definition is read when the
// commutator tail is nonempty.  PsiOnly asks the tail itself to be
// multilinear (automatic in the canonical form); WholeTerm asks the whole
// monomial to be multilinear.
enum class MultilinearMode { PsiOnly, WholeTerm };

inline bool is_member(const PrTerm& a, Family fam, int p, int k,
                      MultilinearMode mode = MultilinearMode::PsiOnly) {
  for (int e : a.beg_y)
    if (e > p - 1) return false;
  for (int e : a.beg_z)
    if (e > p - 1) return false;
  if (!a.psi.empty() && mode == MultilinearMode::WholeTerm && !a.is_multilinear())
    return false;
  switch (fam) {
    case Family::SS:
      return true;
    case Family::SS0: {
      if (!a.psi.empty()) return false;
      for (int e : a.beg_z)
        if (e > 1) return false;
      return true;
    }
    case Family::SS1:
      return a.deg_z_total() <= k;
    case Family::SS2:
      return a.psi_deg_y() <= k && a.beg_deg_z() + a.psi_deg_y() <= k + 1;
    case Family::SS3: {
      if (a.psi_deg_y() > k || a.beg_deg_z() + a.psi_deg_y() > k + 1) return false;
      // In the border case the lowest odd variable of the term plays the
      // role of the distinguished prefix factor: it must stay out of the
      // commutator tail, otherwise the term is a combination of smaller
      // ones (swap it with the tail entry via the graded identities).
      if (a.beg_deg_z() + a.psi_deg_y() == k + 1) {
        auto pz = a.first_z();
        if (pz && a.psi_contains(*pz)) return false;
      }
      return true;
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// Term orders.

// Right-to-left lexicographic comparison of per-variable degree vectors:
// the greatest variable on which they differ decides.  Variables beyond
// (l, m) of either argument count as degree 0.
inline int compare_lex_rig(const std::vector<std::pair<Variable, int>>& du,
                           const std::vector<std::pair<Variable, int>>& dv) {
  // inputs are sorted by variable; walk from the back
  auto iu = du.rbegin();
  auto iv = dv.rbegin();
  while (iu != du.rend() || iv != dv.rend()) {
    while (iu != du.rend() && iu->second == 0) ++iu;
    while (iv != dv.rend() && iv->second == 0) ++iv;
    if (iu == du.rend() && iv == dv.rend()) return 0;
    if (iu == du.rend()) return -1;
    if (iv == dv.rend()) return 1;
    if (iu->first != iv->first) return iu->first < iv->first ? -1 : 1;
    if (iu->second != iv->second) return iu->second < iv->second ? -1 : 1;
    ++iu;
    ++iv;
  }
  return 0;
}

inline std::vector<std::pair<Variable, int>> beg_degrees(const PrTerm& a) {
  std::vector<std::pair<Variable, int>> d;
  for (int i = 0; i < a.l(); ++i) d.emplace_back(Variable::y(i + 1), a.beg_y[i]);
  for (int j = 0; j < a.m(); ++j) d.emplace_back(Variable::z(j + 1), a.beg_z[j]);
  return d;
}

inline std::vector<std::pair<Variable, int>> psi_degrees(const PrTerm& a) {
  std::vector<std::pair<Variable, int>> d;
  for (const Variable& v : a.psi) d.emplace_back(v, 1);
  return d;
}

// Order on canonical monomials: total degree, then prefix (lex-rig), then
// tail (lex-rig).  Returns <0, 0, >0.
inline int compare_ss(const PrTerm& u, const PrTerm& v) {
  if (u.deg_total() != v.deg_total()) return u.deg_total() < v.deg_total() ? -1 : 1;
  if (int c = compare_lex_rig(beg_degrees(u), beg_degrees(v)); c != 0) return c;
  return compare_lex_rig(psi_degrees(u), psi_degrees(v));
}

inline PrTerm leading_term(const std::vector<PrTerm>& terms) {
  if (terms.empty()) throw std::invalid_argument("leading term of empty set");
  const PrTerm* best = &terms[0];
  for (const PrTerm& t : terms)
    if (compare_ss(*best, t) < 0) best = &t;
  return *best;
}

// Terms of the same multidegree as the leading term whose prefix differs
// from the leading prefix only by moving one power of the first prefix-z
// into the tail (and possibly y powers the other way).
inline bool is_bad_term(const PrTerm& u, const PrTerm& lt) {
  if (u == lt) return false;
  for (const Variable& v : lt.support())
    if (u.deg(v) != lt.deg(v)) return false;
  for (const Variable& v : u.support())
    if (u.deg(v) != lt.deg(v)) return false;
  if (lt.beg_deg_z() > 0) {
    Variable pz = *lt.pr_z();
    for (int j = 0; j < std::max(u.m(), lt.m()); ++j) {
      Variable zj = Variable::z(j + 1);
      if (zj == pz) {
        if (u.beg_deg(zj) + 1 != lt.beg_deg(zj)) return false;
      } else {
        if (u.beg_deg(zj) != lt.beg_deg(zj)) return false;
      }
    }
  }
  for (int i = 0; i < std::max(u.l(), lt.l()); ++i) {
    Variable yi = Variable::y(i + 1);
    if (lt.beg_deg(yi) > u.beg_deg(yi)) return false;
  }
  return true;
}

inline std::vector<PrTerm> bad_terms(const std::vector<PrTerm>& terms) {
  PrTerm lt = leading_term(terms);
  std::vector<PrTerm> out;
  for (const PrTerm& t : terms)
    if (is_bad_term(t, lt)) out.push_back(t);
  return out;
}

// Greatest bad term, if any.
inline std::optional<PrTerm> lbt(const std::vector<PrTerm>& terms) {
  auto bad = bad_terms(terms);
  if (bad.empty()) return std::nullopt;
  PrTerm best = bad[0];
  for (const PrTerm& t : bad)
    if (compare_ss(best, t) < 0) best = t;
  return best;
}

// ---------------------------------------------------------------------------
// Enumeration.

namespace detail {

// All vectors of the given size with entries in [0, cap] summing to total.
inline void compositions(int size, int total, int cap,
                         std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (size == 0) {
    if (total == 0) out.push_back(cur);
    return;
  }
  for (int e = 0; e <= std::min(cap, total); ++e) {
    cur.push_back(e);
    compositions(size - 1, total - e, cap, cur, out);
    cur.pop_back();
  }
}

inline std::vector<std::vector<int>> compositions(int size, int total, int cap) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  compositions(size, total, cap, cur, out);
  return out;
}

}  // namespace detail

// All family members in y1..yl, z1..zm of bidegree (n1, n2), sorted by
// compare_ss.  beg exponents range over [0, p-1]; the tail ranges over all
// even subsets of the variables.
inline std::vector<PrTerm> enumerate_family(Family fam, int n1, int n2, int l, int m,
                                            int p, int k,
                                            MultilinearMode mode = MultilinearMode::PsiOnly) {
  std::vector<PrTerm> out;
  std::vector<Variable> vars;
  for (int i = 1; i <= l; ++i) vars.push_back(Variable::y(i));
  for (int j = 1; j <= m; ++j) vars.push_back(Variable::z(j));
  int nv = l + m;
  for (unsigned mask = 0; mask < (1u << nv); ++mask) {
    if (std::popcount(mask) % 2 != 0) continue;
    std::vector<Variable> psi;
    int psi_y = 0, psi_z = 0;
    for (int i = 0; i < nv; ++i)
      if (mask & (1u << i)) {
        psi.push_back(vars[i]);
        (vars[i].sort == Variable::Y ? psi_y : psi_z)++;
      }
    if (psi_y > n1 || psi_z > n2) continue;
    for (const auto& by : detail::compositions(l, n1 - psi_y, p - 1)) {
      for (const auto& bz : detail::compositions(m, n2 - psi_z, p - 1)) {
        PrTerm t{by, bz, psi};
        if (is_member(t, fam, p, k, mode)) out.push_back(t);
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const PrTerm& a, const PrTerm& b) { return compare_ss(a, b) < 0; });
  return out;
}

// Monomial in the y's whose per-variable degrees are multiples of p below
// pq; exps[i] is the exponent of y_{i+1}.
struct PPolyMonomial {
  std::vector<int> exps;

  int total() const {
    int s = 0;
    for (int e : exps) s += e;
    return s;
  }

  bool is_unit() const { return total() == 0; }

  FreePoly to_poly(const Field& f) const {
    FreePoly r = FreePoly::constant(f, f.one());
    for (std::size_t i = 0; i < exps.size(); ++i)
      r = r * FreePoly::var(f, Variable::y(static_cast<int>(i) + 1))
                  .pow(static_cast<unsigned>(exps[i]));
    return r;
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] == 0) continue;
      if (!s.empty()) s += "*";
      s += Variable::y(static_cast<int>(i) + 1).to_string() + "^" +
           std::to_string(exps[i]);
    }
    return s.empty() ? "1" : s;
  }

  friend bool operator==(const PPolyMonomial&, const PPolyMonomial&) = default;
};

// All p-polynomial monomials in y1..yl of total degree s: exponents in
// {0, p, 2p, ..., (q-1)p}.
inline std::vector<PPolyMonomial> enumerate_ppoly(int s, int l, int p, int q) {
  std::vector<PPolyMonomial> out;
  if (s % p != 0) return out;
  for (const auto& steps : detail::compositions(l, s / p, q - 1)) {
    PPolyMonomial mono;
    mono.exps.resize(l);
    for (int i = 0; i < l; ++i) mono.exps[i] = steps[i] * p;
    out.push_back(mono);
  }
  return out;
}

}  // namespace grasscodim
