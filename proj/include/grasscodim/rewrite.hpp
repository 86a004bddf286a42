#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "grasscodim/codim.hpp"
#include "grasscodim/structure.hpp"

namespace grasscodim {

struct PrLess {
  bool operator()(const PrTerm& a, const PrTerm& b) const {
    return compare_ss(a, b) < 0;
  }
};

using PrCombination = std::map<PrTerm, Fe, PrLess>;

namespace detail {

// Sign of sorting the flattened commutator entries; nullopt when an entry
// repeats (the product is zero then, full antisymmetry in odd
// characteristic).
inline std::optional<int> sort_sign(std::vector<Variable>& entries) {
  int inversions = 0;
  for (std::size_t i = 0; i < entries.size(); ++i)
    for (std::size_t j = i + 1; j < entries.size(); ++j) {
      if (entries[i] == entries[j]) return std::nullopt;
      if (entries[j] < entries[i]) ++inversions;
    }
  std::sort(entries.begin(), entries.end());
  return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace detail

// Rewrites a polynomial as a combination of canonical monomials, working
// modulo the ideal generated by [x1,x2,x3].  Words are sorted with the
// rule ab = ba + [a,b]; commutators are central there, antisymmetric in
// all entries as a product, and vanish on a repeated entry.
inline PrCombination to_pr(const FreePoly& f, int l, int m) {
  const Field& field = f.field();
  for (const Variable& v : f.variables()) {
    if (v.sort == Variable::Y ? v.index > l : v.index > m)
      throw std::invalid_argument("variable " + v.to_string() + " out of range");
  }
  PrCombination out;
  struct Task {
    Fe coeff;
    Word word;
    std::vector<Variable> entries;  // flattened commutator entries so far
  };
  std::vector<Task> stack;
  for (const auto& [w, c] : f.terms()) stack.push_back({c, w, {}});
  while (!stack.empty()) {
    Task t = std::move(stack.back());
    stack.pop_back();
    // first adjacent inversion
    std::size_t i = 0;
    while (i + 1 < t.word.size() && !(t.word[i + 1] < t.word[i])) ++i;
    if (i + 1 < t.word.size()) {
      Variable a = t.word[i], b = t.word[i + 1];
      Task swapped = t;
      std::swap(swapped.word[i], swapped.word[i + 1]);
      stack.push_back(std::move(swapped));
      // a > b here, so [a,b] = -[b,a]; record the sorted pair
      Task split = std::move(t);
      split.word.erase(split.word.begin() + i, split.word.begin() + i + 2);
      split.entries.push_back(b);
      split.entries.push_back(a);
      split.coeff = field.neg(split.coeff);
      stack.push_back(std::move(split));
      continue;
    }
    auto sign = detail::sort_sign(t.entries);
    if (!sign) continue;
    PrTerm u;
    u.beg_y.assign(l, 0);
    u.beg_z.assign(m, 0);
    for (const Variable& v : t.word) {
      if (v.sort == Variable::Y)
        ++u.beg_y[v.index - 1];
      else
        ++u.beg_z[v.index - 1];
    }
    u.psi = std::move(t.entries);
    Fe c = *sign < 0 ? field.neg(t.coeff) : t.coeff;
    Fe prev = out.count(u) ? out[u] : field.zero();
    Fe s = field.add(prev, c);
    if (field.is_zero(s))
      out.erase(u);
    else
      out[u] = s;
  }
  return out;
}

// One summand of a normal form: coefficient times a p-polynomial monomial
// in the y's times a family monomial.
struct NfSummand {
  PPolyMonomial ppoly;
  PrTerm term;
  Fe coeff;
};

struct NormalForm {
  GradingSpec grading;
  std::vector<NfSummand> summands;
};

namespace detail {

// y^(pq) = y^p until the exponent is below pq, then split off the p-power
// part.  Valid in every grading.
inline std::pair<int, int> reduce_y_exponent(int e, int p, int q) {
  while (e >= p * q) e -= p * (q - 1);
  return {e / p * p, e % p};  // (p-polynomial exponent, prefix exponent)
}

struct Reduced {
  PPolyMonomial ppoly;
  PrTerm term;
};

// Reductions valid in every grading: y-exponent folding and z^p = 0.
inline std::optional<Reduced> reduce_universal(const PrTerm& u, Fe& coeff,
                                               const Field&, int p, int q) {
  (void)coeff;
  Reduced r;
  r.term = u;
  r.ppoly.exps.assign(u.l(), 0);
  for (int i = 0; i < u.l(); ++i) {
    auto [pe, be] = reduce_y_exponent(u.beg_y[i], p, q);
    r.ppoly.exps[i] = pe;
    r.term.beg_y[i] = be;
  }
  for (int e : u.beg_z)
    if (e >= p) return std::nullopt;
  return r;
}

}  // namespace detail

inline FreePoly reassemble(const NormalForm& nf, const Field& f) {
  FreePoly r = FreePoly::zero(f);
  for (const auto& s : nf.summands)
    r = r + (s.ppoly.to_poly(f) * s.term.to_poly(f)).scaled(s.coeff);
  return r;
}

struct NormalFormOptions {
  int truncation = 0;  // 0 = default; only the solve route evaluates
  std::uint64_t seed = 1;
};

// Normal form modulo the graded identities of the grading.  The canonical,
// infinity-type and k*-type gradings reduce symbolically; the k-type
// grading solves for coordinates against the certified basis of each
// multihomogeneous component.
inline NormalForm normal_form(const FreePoly& f, const GradingSpec& g,
                              const CountParams& pr,
                              const NormalFormOptions& opt = {}) {
  const Field& field = f.field();
  NormalForm nf;
  nf.grading = g;

  if (g.kind == GradingSpec::K) {
    // solve route: express each multihomogeneous component in the basis
    PrCombination pre = to_pr(f, pr.l, pr.m);
    std::map<MdKey, std::vector<std::pair<detail::Reduced, Fe>>,
             decltype([](const MdKey& x, const MdKey& y) {
               if (x.a != y.a) return x.a < y.a;
               return x.b < y.b;
             })>
        by_md;
    for (auto& [u, c] : pre) {
      Fe coeff = c;
      auto red = detail::reduce_universal(u, coeff, field, pr.p, pr.q);
      if (!red) continue;
      MdKey md;
      md.a.resize(pr.l);
      md.b.resize(pr.m);
      for (int i = 0; i < pr.l; ++i)
        md.a[i] = red->ppoly.exps[i] + red->term.deg(Variable::y(i + 1));
      for (int j = 0; j < pr.m; ++j) md.b[j] = red->term.deg(Variable::z(j + 1));
      by_md[md].emplace_back(*red, coeff);
    }
    int n = opt.truncation > 0 ? opt.truncation : default_truncation(pr, g);
    for (const auto& [md, pieces] : by_md) {
      auto basis = multifree_basis(md, g, pr);
      Evaluator target = [&field, n, pieces](const Substitution& s) {
        GrassmannElement r = GrassmannElement::zero(field, n);
        for (const auto& [red, c] : pieces)
          r = r + evaluate_pair({red.ppoly, red.term}, s, field, n).scaled(c);
        return r;
      };
      // sample equations until the system pins the coordinates down
      StructuredSampler sampler(field, n, g);
      Rng rng(opt.seed ^ (md.total() * 0x9e3779b9ULL));
      int samples = std::max<int>(32, 8 * static_cast<int>(basis.size()) + 16);
      Matrix sys;
      sys.field = &field;
      sys.cols = basis.size();
      std::vector<Fe> rhs;
      for (int t = 0; t < samples; ++t) {
        Substitution s;
        if (t % 3 == 2) {  // mix in generic homogeneous images
          for (int i = 1; i <= pr.l; ++i)
            s[Variable::y(i)] = random_graded_element(field, n, g, 0, 3, rng);
          for (int j = 1; j <= pr.m; ++j)
            s[Variable::z(j)] = random_graded_element(field, n, g, 1, 3, rng);
        } else {
          s = sampler.sample(pr.l, pr.m, rng);
        }
        std::vector<GrassmannElement> imgs;
        imgs.reserve(basis.size());
        for (const auto& bp : basis) imgs.push_back(evaluate_pair(bp, s, field, n));
        GrassmannElement tgt = target(s);
        // one equation per blade seen in the target or any basis image
        std::map<Blade, std::size_t> blades;
        auto note = [&](const GrassmannElement& e) {
          for (const auto& [bl, c] : e.terms())
            if (!blades.count(bl)) blades.emplace(bl, blades.size());
        };
        note(tgt);
        for (const auto& e : imgs) note(e);
        std::size_t base = sys.rows.size();
        for (std::size_t r = 0; r < blades.size(); ++r) {
          sys.rows.emplace_back(basis.size(), field.zero());
          rhs.push_back(field.zero());
        }
        for (const auto& [bl, idx] : blades) {
          rhs[base + idx] = tgt.coeff(bl);
          for (std::size_t j = 0; j < imgs.size(); ++j)
            sys.rows[base + idx][j] = imgs[j].coeff(bl);
        }
      }
      auto x = solve(std::move(sys), rhs);
      if (!x)
        throw std::runtime_error("normal form solve failed at multidegree " +
                                 md.to_string());
      for (std::size_t j = 0; j < basis.size(); ++j)
        if (!field.is_zero((*x)[j]))
          nf.summands.push_back({basis[j].first, basis[j].second, (*x)[j]});
    }
    return nf;
  }

  PrCombination pre = to_pr(f, pr.l, pr.m);
  std::map<std::pair<std::vector<int>, PrTerm>, Fe,
           decltype([](const auto& x, const auto& y) {
             if (x.first != y.first) return x.first < y.first;
             return compare_ss(x.second, y.second) < 0;
           })>
      acc;
  auto emit = [&](const PPolyMonomial& pp, const PrTerm& u, Fe c) {
    auto key = std::make_pair(pp.exps, u);
    auto it = acc.find(key);
    Fe s = field.add(it == acc.end() ? field.zero() : it->second, c);
    if (field.is_zero(s)) {
      if (it != acc.end()) acc.erase(it);
    } else {
      acc[key] = s;
    }
  };
  for (const auto& [u0, c0] : pre) {
    Fe coeff = c0;
    PrTerm u = u0;
    if (g.kind == GradingSpec::Canonical) {
      // even variables are central: a commutator with a y entry vanishes;
      // [z,z'] = 2zz' and the odd part is supercommutative with z^2 = 0.
      bool dead = false;
      for (const Variable& v : u.psi)
        if (v.sort == Variable::Y) dead = true;
      if (dead) continue;
      std::vector<Variable> zs;
      for (int j = 0; j < u.m(); ++j)
        for (int e = 0; e < u.beg_z[j]; ++e) zs.push_back(Variable::z(j + 1));
      int pairs = static_cast<int>(u.psi.size() / 2);
      zs.insert(zs.end(), u.psi.begin(), u.psi.end());
      auto sign = detail::sort_sign(zs);
      if (!sign) continue;  // a repeated odd generator squares to zero
      coeff = field.mul(coeff, field.pow(field.from_int(2), pairs));
      if (*sign < 0) coeff = field.neg(coeff);
      u.psi.clear();
      u.beg_z.assign(u.m(), 0);
      for (const Variable& v : zs) ++u.beg_z[v.index - 1];
    } else {
      bool dead = false;
      for (int e : u.beg_z)
        if (e >= pr.p) dead = true;  // z^p = 0
      if (dead) continue;
      if (g.kind == GradingSpec::KStar && u.deg_z_total() > g.k)
        continue;  // any product of k+1 odd factors vanishes
    }
    PPolyMonomial pp;
    pp.exps.assign(u.l(), 0);
    for (int i = 0; i < u.l(); ++i) {
      auto [pe, be] = detail::reduce_y_exponent(u.beg_y[i], pr.p, pr.q);
      pp.exps[i] = pe;
      u.beg_y[i] = be;
    }
    emit(pp, u, coeff);
  }
  for (const auto& [key, c] : acc) {
    PPolyMonomial pp;
    pp.exps = key.first;
    nf.summands.push_back({pp, key.second, c});
  }
  return nf;
}

struct ResidualReport {
  int trials = 0;
  int violations = 0;
  bool ok() const { return violations == 0; }
};

// Checks f and its normal form agree under random graded substitutions,
// alternating the structured sampler with fully random homogeneous images.
inline ResidualReport residual_check(const FreePoly& f, const NormalForm& nf,
                                     const CountParams& pr, int truncation,
                                     int trials, std::uint64_t seed) {
  const Field& field = f.field();
  FreePoly diff = f - reassemble(nf, field);
  ResidualReport rep;
  rep.trials = trials;
  StructuredSampler sampler(field, truncation, nf.grading);
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    Substitution s;
    if (t % 2 == 0) {
      s = sampler.sample(pr.l, pr.m, rng);
    } else {
      for (int i = 1; i <= pr.l; ++i)
        s[Variable::y(i)] =
            random_graded_element(field, truncation, nf.grading, 0, 3, rng);
      for (int j = 1; j <= pr.m; ++j)
        s[Variable::z(j)] =
            random_graded_element(field, truncation, nf.grading, 1, 3, rng);
    }
    if (!evaluate(diff, s, nf.grading, field, truncation).is_zero()) ++rep.violations;
  }
  return rep;
}

}  // namespace grasscodim
