#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "grasscodim/counting.hpp"
#include "grasscodim/linalg.hpp"
#include "grasscodim/structure.hpp"
#include "grasscodim/subst.hpp"

namespace grasscodim {

// Family of canonical monomials attached to each grading.
inline Family family_for(const GradingSpec& g) {
  switch (g.kind) {
    case GradingSpec::Canonical: return Family::SS0;
    case GradingSpec::Infinity: return Family::SS;
    case GradingSpec::KStar: return Family::SS1;
    case GradingSpec::K: return Family::SS3;
  }
  return Family::SS;
}

// Truncation large enough for the degrees that occur at the given sizes.
inline int default_truncation(const CountParams& pr, const GradingSpec& g) {
  return 2 * (pr.p * pr.q * pr.l + pr.p * pr.m) + g.k + 4;
}

// Multidegree: target degree per variable, y's then z's.
struct MdKey {
  std::vector<int> a;  // degrees of y1..yl
  std::vector<int> b;  // degrees of z1..zm

  int total() const {
    int s = 0;
    for (int x : a) s += x;
    for (int x : b) s += x;
    return s;
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < a.size(); ++i)
      s += (i ? "," : "") + std::to_string(a[i]);
    s += ";";
    for (std::size_t j = 0; j < b.size(); ++j)
      s += (j ? "," : "") + std::to_string(b[j]);
    return s + ")";
  }
};

using BasisPair = std::pair<PPolyMonomial, PrTerm>;

// Basis candidates of the multihomogeneous component: pairs f*u with f a
// p-polynomial monomial in the y's and u in the grading's family, whose
// combined per-variable degrees hit the multidegree exactly.  Per variable
// the split (p-power part, prefix exponent, tail occurrence) is unique, so
// the enumeration runs over tail subsets only.
inline std::vector<BasisPair> multifree_basis(const MdKey& md, const GradingSpec& g,
                                              const CountParams& pr,
                                              MultilinearMode mode = MultilinearMode::PsiOnly) {
  if (static_cast<int>(md.a.size()) != pr.l || static_cast<int>(md.b.size()) != pr.m)
    throw std::invalid_argument("multidegree size mismatch");
  for (int x : md.a)
    if (x < 0 || x > pr.p * pr.q) throw std::invalid_argument("y-degree out of range");
  for (int x : md.b)
    if (x < 0 || x > pr.p) throw std::invalid_argument("z-degree out of range");
  Family fam = family_for(g);
  std::vector<Variable> vars;
  for (int i = 1; i <= pr.l; ++i) vars.push_back(Variable::y(i));
  for (int j = 1; j <= pr.m; ++j) vars.push_back(Variable::z(j));
  int nv = pr.l + pr.m;
  std::vector<BasisPair> out;
  for (unsigned mask = 0; mask < (1u << nv); ++mask) {
    if (std::popcount(mask) % 2 != 0) continue;
    PPolyMonomial f;
    f.exps.resize(pr.l);
    PrTerm u;
    u.beg_y.resize(pr.l);
    u.beg_z.resize(pr.m);
    bool ok = true;
    for (int i = 0; i < nv && ok; ++i) {
      bool in_psi = (mask >> i) & 1;
      if (in_psi) u.psi.push_back(vars[i]);
      if (i < pr.l) {
        int rem = md.a[i] - (in_psi ? 1 : 0);
        if (rem < 0) {
          ok = false;
          break;
        }
        int r = rem % pr.p;
        int s = rem / pr.p;
        if (s > pr.q - 1) {
          ok = false;
          break;
        }
        u.beg_y[i] = r;
        f.exps[i] = s * pr.p;
      } else {
        int j = i - pr.l;
        int rem = md.b[j] - (in_psi ? 1 : 0);
        if (rem < 0 || rem > pr.p - 1) {
          ok = false;
          break;
        }
        u.beg_z[j] = rem;
      }
    }
    if (ok && is_member(u, fam, pr.p, pr.k, mode)) out.emplace_back(f, u);
  }
  std::sort(out.begin(), out.end(), [](const BasisPair& x, const BasisPair& y) {
    if (x.first.exps != y.first.exps) return x.first.exps < y.first.exps;
    return compare_ss(x.second, y.second) < 0;
  });
  return out;
}

// All canonical monomials (no family restriction, no exponent caps) of the
// multidegree; used as spanning probes.
inline std::vector<PrTerm> all_pr_terms(const MdKey& md, int /*p*/) {
  int l = static_cast<int>(md.a.size());
  int m = static_cast<int>(md.b.size());
  std::vector<Variable> vars;
  for (int i = 1; i <= l; ++i) vars.push_back(Variable::y(i));
  for (int j = 1; j <= m; ++j) vars.push_back(Variable::z(j));
  int nv = l + m;
  std::vector<PrTerm> out;
  for (unsigned mask = 0; mask < (1u << nv); ++mask) {
    if (std::popcount(mask) % 2 != 0) continue;
    PrTerm u;
    u.beg_y.resize(l);
    u.beg_z.resize(m);
    bool ok = true;
    for (int i = 0; i < nv && ok; ++i) {
      bool in_psi = (mask >> i) & 1;
      if (in_psi) u.psi.push_back(vars[i]);
      int target = i < l ? md.a[i] : md.b[i - l];
      int rem = target - (in_psi ? 1 : 0);
      if (rem < 0) ok = false;
      else if (i < l) u.beg_y[i] = rem;
      else u.beg_z[i - l] = rem;
    }
    if (ok) out.push_back(u);
  }
  return out;
}

// Evaluates a canonical monomial at a substitution: prefix powers in
// variable order, then the commutator factors.
inline GrassmannElement evaluate_pr_term(const PrTerm& u, const Substitution& s,
                                         const Field& f, int n) {
  GrassmannElement r = GrassmannElement::scalar(f, n, f.one());
  for (int i = 0; i < u.l(); ++i) {
    if (u.beg_y[i] == 0) continue;
    const GrassmannElement& img = s.at(Variable::y(i + 1));
    for (int e = 0; e < u.beg_y[i] && !r.is_zero(); ++e) r = r * img;
  }
  for (int j = 0; j < u.m(); ++j) {
    if (u.beg_z[j] == 0) continue;
    const GrassmannElement& img = s.at(Variable::z(j + 1));
    for (int e = 0; e < u.beg_z[j] && !r.is_zero(); ++e) r = r * img;
  }
  for (std::size_t i = 0; i + 1 < u.psi.size() && !r.is_zero(); i += 2) {
    const GrassmannElement& x = s.at(u.psi[i]);
    const GrassmannElement& y = s.at(u.psi[i + 1]);
    r = r * (x * y - y * x);
  }
  return r;
}

inline GrassmannElement evaluate_pair(const BasisPair& b, const Substitution& s,
                                      const Field& f, int n) {
  GrassmannElement r = GrassmannElement::scalar(f, n, f.one());
  for (std::size_t i = 0; i < b.first.exps.size(); ++i) {
    if (b.first.exps[i] == 0) continue;
    const GrassmannElement& img = s.at(Variable::y(static_cast<int>(i) + 1));
    for (int e = 0; e < b.first.exps[i] && !r.is_zero(); ++e) r = r * img;
  }
  if (r.is_zero()) return r;
  return r * evaluate_pr_term(b.second, s, f, n);
}

// ---------------------------------------------------------------------------
// Rank oracle.

using Evaluator = std::function<GrassmannElement(const Substitution&)>;

// Combinations of the input rows spanning the left kernel {v : v M = 0}.
inline std::vector<std::vector<Fe>> left_kernel(std::vector<std::vector<Fe>> rows,
                                                std::size_t cols, const Field& f) {
  std::size_t nr = rows.size();
  // augment with identity to track combinations
  for (std::size_t i = 0; i < nr; ++i) {
    rows[i].resize(cols + nr, f.zero());
    rows[i][cols + i] = f.one();
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < nr; ++c) {
    std::size_t p = r;
    while (p < nr && f.is_zero(rows[p][c])) ++p;
    if (p == nr) continue;
    std::swap(rows[r], rows[p]);
    Fe inv = f.inv(rows[r][c]);
    for (std::size_t j = c; j < cols + nr; ++j) rows[r][j] = f.mul(rows[r][j], inv);
    for (std::size_t i = 0; i < nr; ++i) {
      if (i == r || f.is_zero(rows[i][c])) continue;
      Fe factor = rows[i][c];
      for (std::size_t j = c; j < cols + nr; ++j)
        rows[i][j] = f.sub(rows[i][j], f.mul(factor, rows[r][j]));
    }
    ++r;
  }
  std::vector<std::vector<Fe>> kernel;
  for (std::size_t i = r; i < nr; ++i)
    kernel.emplace_back(rows[i].begin() + cols, rows[i].end());
  return kernel;
}

struct OracleConfig {
  int truncation = 0;       // 0 = default for the params
  int samples = 0;          // 0 = 4 * columns (at least 8)
  std::uint64_t seed = 1;
};

struct OracleResult {
  std::size_t rank = 0;
  int samples = 0;
  int truncation = 0;
};

namespace detail {

// Deterministic field element attached to (seed, sample, functional, blade);
// the weight of the blade coordinate in a random linear functional.
inline Fe projection_weight(std::uint64_t seed, int sample, int proj,
                            const Blade& b, const Field& f) {
  std::uint64_t x = seed;
  x ^= 0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(sample) + 1);
  x ^= 0xc2b2ae3d27d4eb4fULL * (static_cast<std::uint64_t>(proj) + 1);
  x ^= b.w[0] + 0x165667b19e3779f9ULL * b.w[1];
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return f.element(static_cast<int>(x % static_cast<std::uint64_t>(f.q())));
}

}  // namespace detail

// Dimension of the span of the images of the given polynomials under
// random structured graded substitutions.  Each sample contributes a few
// random linear functionals of the blade coordinates instead of the full
// coordinate vector; a combination leaves the tracked kernel only when its
// image is provably nonzero, so the reported rank is a certified lower
// bound that saturates as samples accumulate.
inline OracleResult oracle_rank(const std::vector<Evaluator>& columns,
                                const GradingSpec& g, const CountParams& pr,
                                const OracleConfig& cfg, const Field& field) {
  int n = cfg.truncation > 0 ? cfg.truncation : default_truncation(pr, g);
  std::size_t b = columns.size();
  int samples = cfg.samples > 0 ? cfg.samples
                                : std::max<int>(96, 8 * static_cast<int>(b));
  OracleResult res;
  res.truncation = n;
  if (b == 0) return res;
  constexpr int kProjections = 4;
  StructuredSampler sampler(field, n, g);
  Rng rng(cfg.seed);
  // kernel combinations, initially everything
  std::vector<std::vector<Fe>> kernel(b);
  for (std::size_t i = 0; i < b; ++i) {
    kernel[i].assign(b, field.zero());
    kernel[i][i] = field.one();
  }
  const int batch = 16;
  int stall = 0;
  for (int done = 0; done < samples && !kernel.empty(); done += batch) {
    int count = std::min(batch, samples - done);
    std::size_t cols = static_cast<std::size_t>(count) * kProjections;
    // projected evaluations, one row per column polynomial
    std::vector<std::vector<Fe>> proj(b, std::vector<Fe>(cols, field.zero()));
    for (int t = 0; t < count; ++t) {
      Substitution s = sampler.sample(pr.l, pr.m, rng);
      for (std::size_t j = 0; j < b; ++j) {
        GrassmannElement img = columns[j](s);
        for (const auto& [bl, c] : img.terms()) {
          for (int i = 0; i < kProjections; ++i) {
            Fe w = detail::projection_weight(cfg.seed, done + t, i, bl, field);
            std::size_t cidx = static_cast<std::size_t>(t) * kProjections + i;
            proj[j][cidx] = field.add(proj[j][cidx], field.mul(w, c));
          }
        }
      }
    }
    // restrict to the current kernel and cut it down
    std::vector<std::vector<Fe>> rows(kernel.size(), std::vector<Fe>(cols, field.zero()));
    for (std::size_t i = 0; i < kernel.size(); ++i)
      for (std::size_t j = 0; j < b; ++j) {
        if (field.is_zero(kernel[i][j])) continue;
        for (std::size_t c = 0; c < cols; ++c)
          rows[i][c] = field.add(rows[i][c], field.mul(kernel[i][j], proj[j][c]));
      }
    auto combos = left_kernel(std::move(rows), cols, field);
    std::size_t before = kernel.size();
    std::vector<std::vector<Fe>> next;
    for (const auto& combo : combos) {
      std::vector<Fe> v(b, field.zero());
      for (std::size_t i = 0; i < combo.size(); ++i) {
        if (field.is_zero(combo[i])) continue;
        for (std::size_t j = 0; j < b; ++j)
          v[j] = field.add(v[j], field.mul(combo[i], kernel[i][j]));
      }
      next.push_back(std::move(v));
    }
    kernel = std::move(next);
    res.samples = done + count;
    stall = (kernel.size() == before) ? stall + 1 : 0;
    if (stall >= 4 && res.samples >= 4 * batch) break;
  }
  res.rank = b - kernel.size();
  return res;
}

inline std::vector<Evaluator> pair_evaluators(const std::vector<BasisPair>& basis,
                                              const Field& f, int n) {
  std::vector<Evaluator> cols;
  for (const auto& b : basis)
    cols.push_back([&f, n, b](const Substitution& s) {
      return evaluate_pair(b, s, f, n);
    });
  return cols;
}

// ---------------------------------------------------------------------------
// Certificates.

struct RankCertificate {
  std::string grading;
  std::string family;
  MdKey md;
  std::size_t basis_size = 0;
  std::size_t rank = 0;
  std::size_t augmented_rank = 0;   // with all same-degree monomials added
  std::size_t rank_stability = 0;   // rank at the enlarged truncation
  int truncation = 0;
  int samples = 0;
  std::uint64_t seed = 0;
  bool independent = false;  // rank == basis_size
  bool spanning = false;     // augmented rank did not grow
  bool stable = false;       // same rank at truncation + 4

  bool ok() const { return independent && spanning && stable; }
};

// Certifies that the multifree basis candidates of one multidegree are
// independent and span all monomials of that multidegree, at the default
// truncation and again at truncation + 4.
inline RankCertificate independence_certificate(const MdKey& md, const GradingSpec& g,
                                                const CountParams& pr,
                                                std::uint64_t seed,
                                                const Field& field,
                                                MultilinearMode mode = MultilinearMode::PsiOnly) {
  RankCertificate cert;
  cert.grading = g.name();
  cert.family = family_name(family_for(g));
  cert.md = md;
  cert.seed = seed;
  auto basis = multifree_basis(md, g, pr, mode);
  cert.basis_size = basis.size();
  int n = default_truncation(pr, g);
  cert.truncation = n;

  OracleConfig cfg;
  cfg.truncation = n;
  cfg.seed = seed;
  auto cols = pair_evaluators(basis, field, n);
  OracleResult r = oracle_rank(cols, g, pr, cfg, field);
  cert.rank = r.rank;
  cert.samples = r.samples;
  cert.independent = (cert.rank == cert.basis_size);

  // spanning: adding every monomial of the multidegree must not raise the rank
  auto extra = all_pr_terms(md, pr.p);
  auto aug = cols;
  for (const auto& u : extra)
    aug.push_back([&field, n, u](const Substitution& s) {
      return evaluate_pr_term(u, s, field, n);
    });
  OracleConfig cfg_aug = cfg;
  cfg_aug.samples = std::max<int>(96, 8 * static_cast<int>(aug.size()));
  OracleResult ra = oracle_rank(aug, g, pr, cfg_aug, field);
  cert.augmented_rank = ra.rank;
  cert.spanning = (ra.rank == cert.rank);

  // stability at a larger truncation
  OracleConfig cfg2 = cfg;
  cfg2.truncation = n + 4;
  cfg2.seed = seed ^ 0x5bf03635ULL;
  auto cols2 = pair_evaluators(basis, field, n + 4);
  OracleResult r2 = oracle_rank(cols2, g, pr, cfg2, field);
  cert.rank_stability = r2.rank;
  cert.stable = (r2.rank == cert.rank);
  return cert;
}

// ---------------------------------------------------------------------------
// Codimension counts and bounds.

struct CodimResult {
  Family family;
  BigInt enumeration_value;  // c* on top of direct family enumeration
  BigInt formula_value;      // c* on top of the printed count
  BigInt basis_total;        // sum of multifree basis sizes over multidegrees
};

// All multidegrees with the given bidegree, within the per-variable caps.
inline std::vector<MdKey> multidegrees_for(int n1, int n2, const CountParams& pr) {
  std::vector<MdKey> out;
  auto ys = detail::compositions(pr.l, n1, pr.p * pr.q);
  auto zs = detail::compositions(pr.m, n2, pr.p);
  for (const auto& a : ys)
    for (const auto& b : zs) out.push_back({a, b});
  return out;
}

// Homogeneous codimension of the bidegree: the c* count, with the printed
// formula alongside and the multidegree-by-multidegree basis total as a
// consistency anchor.
inline CodimResult exact_codim(int n1, int n2, const GradingSpec& g,
                               const CountParams& pr,
                               MultilinearMode mode = MultilinearMode::PsiOnly) {
  CodimResult res;
  res.family = family_for(g);
  res.enumeration_value = c_star(res.family, n1, n2, pr, Reading::Enumeration, mode);
  res.formula_value = c_star(res.family, n1, n2, pr, Reading::Formula, mode);
  res.basis_total = 0;
  if (n2 <= pr.p * pr.m) {  // above that cap every multidegree is empty
    for (const auto& md : multidegrees_for(n1, n2, pr))
      res.basis_total += BigInt(multifree_basis(md, g, pr, mode).size());
  }
  return res;
}

struct SandwichPoint {
  int n1 = 0, n2 = 0;
  BigInt lower_enum;      // family count, enumeration reading
  BigInt lower_formula;   // family count, printed formula
  BigInt oracle_dim;
  BigInt upper_enum;      // c-circle on enumeration reading
  BigInt upper_formula;   // c-circle on printed formula
  int samples = 0;

  bool holds_enum() const {
    return lower_enum <= oracle_dim && oracle_dim <= upper_enum;
  }
  bool holds_formula() const {
    return lower_formula <= oracle_dim && oracle_dim <= upper_formula;
  }
};

// All words in y1..yl, z1..zm with the given bidegree.
inline std::vector<Word> words_of_bidegree(int n1, int n2, int l, int m) {
  std::vector<Word> out;
  std::vector<Variable> alphabet;
  for (int i = 1; i <= l; ++i) alphabet.push_back(Variable::y(i));
  for (int j = 1; j <= m; ++j) alphabet.push_back(Variable::z(j));
  Word cur;
  std::function<void(int, int)> rec = [&](int ry, int rz) {
    if (ry == 0 && rz == 0) {
      out.push_back(cur);
      return;
    }
    for (const Variable& v : alphabet) {
      if (v.sort == Variable::Y ? ry == 0 : rz == 0) continue;
      cur.push_back(v);
      rec(ry - (v.sort == Variable::Y), rz - (v.sort == Variable::Z));
      cur.pop_back();
    }
  };
  rec(n1, n2);
  return out;
}

// Oracle dimension of the multihomogeneous component spanned by all words
// of the bidegree, with the counting sandwich around it.
inline SandwichPoint w_bounds(int n1, int n2, const GradingSpec& g,
                              const CountParams& pr, std::uint64_t seed,
                              const Field& field,
                              MultilinearMode mode = MultilinearMode::PsiOnly) {
  SandwichPoint pt;
  pt.n1 = n1;
  pt.n2 = n2;
  Family fam = family_for(g);
  pt.lower_enum = c_family_enum(fam, n1, n2, pr, mode);
  pt.lower_formula = c_family_formula(fam, n1, n2, pr);
  pt.upper_enum = c_circ(fam, n1, n2, pr, Reading::Enumeration, mode);
  pt.upper_formula = c_circ(fam, n1, n2, pr, Reading::Formula, mode);
  int n = default_truncation(pr, g);
  auto words = words_of_bidegree(n1, n2, pr.l, pr.m);
  std::vector<Evaluator> cols;
  for (const Word& w : words)
    cols.push_back([&field, n, w](const Substitution& s) {
      GrassmannElement r = GrassmannElement::scalar(field, n, field.one());
      for (const Variable& v : w) {
        r = r * s.at(v);
        if (r.is_zero()) break;
      }
      return r;
    });
  OracleConfig cfg;
  cfg.truncation = n;
  cfg.seed = seed;
  cfg.samples = std::max<int>(96, 2 * static_cast<int>(cols.size()));
  OracleResult r = oracle_rank(cols, g, pr, cfg, field);
  pt.oracle_dim = BigInt(r.rank);
  pt.samples = r.samples;
  return pt;
}

}  // namespace grasscodim
