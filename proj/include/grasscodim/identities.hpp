#pragma once

#include <string>
#include <vector>

#include "grasscodim/freealg.hpp"
#include "grasscodim/subst.hpp"

namespace grasscodim {

struct Identity {
  std::string label;
  FreePoly poly;
};

struct IdentityBasis {
  GradingSpec grading;
  std::vector<Identity> generators;
};

namespace detail {

// The triple commutator [x1,x2,x3] instantiated over both sorts, one
// generator per sort pattern, with distinct variables throughout.
inline void add_triple_commutators(const Field& f, std::vector<Identity>& out) {
  for (unsigned mask = 0; mask < 8; ++mask) {
    int ny = 0, nz = 0;
    std::vector<FreePoly> args;
    std::string label = "[";
    for (int i = 0; i < 3; ++i) {
      Variable v = (mask >> i) & 1 ? Variable::z(++nz) : Variable::y(++ny);
      args.push_back(FreePoly::var(f, v));
      label += (i ? "," : "") + v.to_string();
    }
    out.push_back({label + "]", long_commutator(args)});
  }
}

}  // namespace detail

// Generating set of the graded identities of the truncated-or-not
// Grassmann algebra under the given grading, over GF(q) with q = p^m.
inline IdentityBasis identity_basis(const GradingSpec& g, const Field& f) {
  int p = f.p();
  int q = f.q();
  IdentityBasis basis;
  basis.grading = g;
  auto y = [&](int i) { return FreePoly::var(f, Variable::y(i)); };
  auto z = [&](int i) { return FreePoly::var(f, Variable::z(i)); };
  FreePoly frobenius = y(1).pow(static_cast<unsigned>(p * q)) -
                       y(1).pow(static_cast<unsigned>(p));
  std::string frobenius_label =
      "y1^" + std::to_string(p * q) + " - y1^" + std::to_string(p);

  switch (g.kind) {
    case GradingSpec::Canonical: {
      basis.generators.push_back({"y1*y2 - y2*y1", commutator(y(1), y(2))});
      basis.generators.push_back({"z1*z2 + z2*z1", z(1) * z(2) + z(2) * z(1)});
      basis.generators.push_back({"y1*z1 - z1*y1", commutator(y(1), z(1))});
      basis.generators.push_back({frobenius_label, frobenius});
      break;
    }
    case GradingSpec::Infinity: {
      detail::add_triple_commutators(f, basis.generators);
      basis.generators.push_back(
          {"z1^" + std::to_string(p), z(1).pow(static_cast<unsigned>(p))});
      basis.generators.push_back({frobenius_label, frobenius});
      break;
    }
    case GradingSpec::KStar: {
      if (g.k == 0) {
        basis.generators.push_back({"[y1,y2,y3]",
                                    long_commutator({y(1), y(2), y(3)})});
        basis.generators.push_back({frobenius_label, frobenius});
        basis.generators.push_back({"z1", z(1)});
        break;
      }
      detail::add_triple_commutators(f, basis.generators);
      basis.generators.push_back(
          {"z1^" + std::to_string(p), z(1).pow(static_cast<unsigned>(p))});
      FreePoly prod = z(1);
      std::string label = "z1";
      for (int j = 2; j <= g.k + 1; ++j) {
        prod = prod * z(j);
        label += "*z" + std::to_string(j);
      }
      basis.generators.push_back({label, prod});
      basis.generators.push_back({frobenius_label, frobenius});
      break;
    }
    case GradingSpec::K: {
      int k = g.k;
      auto y_chain = [&](int first, int last) {
        // [y_first, y_first+1][y_first+2, y_first+3]...[y_last-1, y_last]
        FreePoly r = FreePoly::constant(f, f.one());
        for (int i = first; i + 1 <= last; i += 2) r = r * commutator(y(i), y(i + 1));
        return r;
      };
      auto chain_label = [](int first, int last) {
        std::string s;
        for (int i = first; i + 1 <= last; i += 2)
          s += "[y" + std::to_string(i) + ",y" + std::to_string(i + 1) + "]";
        return s;
      };
      if (k % 2 == 1) {
        basis.generators.push_back({chain_label(1, k + 1), y_chain(1, k + 1)});
      } else {
        FreePoly head = y_chain(1, k);
        basis.generators.push_back(
            {chain_label(1, k) + "[y" + std::to_string(k + 1) + ",y" + std::to_string(k + 2) + "]",
             head * commutator(y(k + 1), y(k + 2))});
        basis.generators.push_back(
            {chain_label(1, k) + "[y" + std::to_string(k + 1) + ",z1]",
             head * commutator(y(k + 1), z(1))});
      }
      detail::add_triple_commutators(f, basis.generators);
      for (int l = 1; l <= k; ++l) {
        int h = k - l + 2;
        std::vector<Variable> zs;
        for (int j = 1; j <= h; ++j) zs.push_back(Variable::z(j));
        FreePoly gp = g_poly(f, zs);
        std::string gl = "g" + std::to_string(h);
        if (l % 2 == 0) {
          basis.generators.push_back({gl + "*" + chain_label(1, l), gp * y_chain(1, l)});
        } else {
          FreePoly tail = l >= 3 ? y_chain(2, l) : FreePoly::constant(f, f.one());
          std::string tl = l >= 3 ? chain_label(2, l) : "";
          basis.generators.push_back(
              {gl + "*[z" + std::to_string(h + 1) + ",y1]" + tl,
               gp * commutator(z(h + 1), y(1)) * tail});
          basis.generators.push_back(
              {"[" + gl + ",y1]" + tl, commutator(gp, y(1)) * tail});
        }
      }
      basis.generators.push_back(
          {"z1^" + std::to_string(p), z(1).pow(static_cast<unsigned>(p))});
      basis.generators.push_back({frobenius_label, frobenius});
      break;
    }
  }
  return basis;
}

struct GeneratorCheck {
  std::string label;
  long long trials = 0;
  long long violations = 0;
};

struct VerifyReport {
  std::vector<GeneratorCheck> checks;
  bool ok() const {
    for (const auto& c : checks)
      if (c.violations != 0) return false;
    return true;
  }
};

// Random verification: every generator evaluated on seeded random
// homogeneous substitutions, structured and generic in alternation.
inline VerifyReport verify_random(const IdentityBasis& basis, const Field& f, int n,
                                  int trials, std::uint64_t seed) {
  VerifyReport rep;
  StructuredSampler sampler(f, n, basis.grading);
  for (std::size_t gi = 0; gi < basis.generators.size(); ++gi) {
    const Identity& id = basis.generators[gi];
    GeneratorCheck chk;
    chk.label = id.label;
    chk.trials = trials;
    Rng rng(seed ^ (0x51ed2701ULL * (gi + 1)));
    int l = 0, m = 0;
    for (const Variable& v : id.poly.variables())
      (v.sort == Variable::Y ? l : m) = std::max(v.sort == Variable::Y ? l : m, v.index);
    for (int t = 0; t < trials; ++t) {
      Substitution s;
      if (t % 2 == 0) {
        s = sampler.sample(l, m, rng);
      } else {
        for (int i = 1; i <= l; ++i)
          s[Variable::y(i)] = random_graded_element(f, n, basis.grading, 0, 3, rng);
        for (int j = 1; j <= m; ++j)
          s[Variable::z(j)] = random_graded_element(f, n, basis.grading, 1, 3, rng);
      }
      if (!evaluate(id.poly, s, basis.grading, f, n).is_zero()) ++chk.violations;
    }
    rep.checks.push_back(chk);
  }
  return rep;
}

namespace detail {

inline std::vector<GrassmannElement> blades_of_degree(const Field& f, int n,
                                                      const GradingSpec& g, int d) {
  std::vector<GrassmannElement> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    Blade b;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) b.set(i + 1);
    if (b.degree(g) != (d & 1)) continue;
    GrassmannElement e(&f, n);
    e.set_coeff(b, f.one());
    out.push_back(e);
  }
  return out;
}

// Every word of the polynomial has per-variable degree at most one.
inline bool poly_is_multilinear(const FreePoly& f) {
  for (const auto& [w, c] : f.terms()) {
    for (const auto& [v, d] : word_multidegree(w))
      if (d > 1) return false;
  }
  return true;
}

}  // namespace detail

// Exhaustive verification over small truncations.  Multilinear generators
// range over single blades (sums then vanish by linearity); the rest range
// over scalar multiples of blades and two-blade combinations.
inline VerifyReport verify_exhaustive(const IdentityBasis& basis, const Field& f,
                                      int n) {
  VerifyReport rep;
  for (const Identity& id : basis.generators) {
    GeneratorCheck chk;
    chk.label = id.label;
    auto vars = id.poly.variables();
    bool multilinear = detail::poly_is_multilinear(id.poly);
    std::vector<std::vector<GrassmannElement>> images;
    for (const Variable& v : vars) {
      auto blades = detail::blades_of_degree(f, n, basis.grading, v.degree());
      std::vector<GrassmannElement> imgs;
      if (multilinear) {
        imgs = blades;
      } else {
        for (const auto& b : blades)
          for (int lam = 1; lam < f.q(); ++lam) imgs.push_back(b.scaled(f.element(lam)));
        for (std::size_t i = 0; i < blades.size(); ++i)
          for (std::size_t j = i + 1; j < blades.size(); ++j)
            for (int lam = 1; lam < f.q(); ++lam)
              imgs.push_back(blades[i] + blades[j].scaled(f.element(lam)));
      }
      images.push_back(std::move(imgs));
    }
    // a sort with no homogeneous blades (e.g. no odd part) leaves nothing
    // to substitute; the identity holds vacuously
    bool empty_sort = false;
    for (const auto& imgs : images)
      if (imgs.empty()) empty_sort = true;
    std::vector<std::size_t> idx(vars.size(), 0);
    bool done = vars.empty() || empty_sort;
    while (!done) {
      Substitution s;
      for (std::size_t i = 0; i < vars.size(); ++i) s[vars[i]] = images[i][idx[i]];
      ++chk.trials;
      if (!evaluate(id.poly, s, basis.grading, f, n).is_zero()) ++chk.violations;
      std::size_t i = 0;
      while (i < idx.size() && ++idx[i] == images[i].size()) idx[i++] = 0;
      if (i == idx.size()) done = true;
    }
    rep.checks.push_back(chk);
  }
  return rep;
}

// Identities that follow from the generating sets; checked on random
// substitutions in the given grading.
inline VerifyReport consequence_spot_checks(const GradingSpec& g, const Field& f,
                                            int n, int trials, std::uint64_t seed) {
  auto y = [&](int i) { return FreePoly::var(f, Variable::y(i)); };
  auto z = [&](int i) { return FreePoly::var(f, Variable::z(i)); };
  IdentityBasis derived;
  derived.grading = g;
  int p = f.p();
  derived.generators.push_back(
      {"[y1^" + std::to_string(p) + ",y2]",
       commutator(y(1).pow(static_cast<unsigned>(p)), y(2))});
  derived.generators.push_back(
      {"[y1^" + std::to_string(p) + ",z1]",
       commutator(y(1).pow(static_cast<unsigned>(p)), z(1))});
  if (g.kind != GradingSpec::Canonical) {
    // the commutator-product swap, antisymmetric form
    derived.generators.push_back(
        {"[z1,z2][z3,z4] + [z1,z3][z2,z4]",
         commutator(z(1), z(2)) * commutator(z(3), z(4)) +
             commutator(z(1), z(3)) * commutator(z(2), z(4))});
    derived.generators.push_back(
        {"[y1,z1][y2,z2] + [y1,y2][z1,z2]",
         commutator(y(1), z(1)) * commutator(y(2), z(2)) +
             commutator(y(1), y(2)) * commutator(z(1), z(2))});
  } else {
    derived.generators.push_back(
        {"2*z1*z2 - [z1,z2]",
         (z(1) * z(2)).scaled(f.from_int(2)) - commutator(z(1), z(2))});
  }
  return verify_random(derived, f, n, trials, seed);
}

}  // namespace grasscodim
