#pragma once

#include <vector>

#include "grasscodim/freealg.hpp"
#include "grasscodim/grassmann.hpp"
#include "grasscodim/rng.hpp"

namespace grasscodim {

// Random graded substitution shaped like the ones that separate the basis:
// even variables get a scalar plus short even blades, odd variables get
// sums of short odd blades.  Generators of scarce degree (e.g. the k
// distinguished ones) are reused across summands; the rest are drawn
// fresh from a moving cursor so distinct summands have disjoint support.
class StructuredSampler {
 public:
  StructuredSampler(const Field& f, int n, const GradingSpec& g)
      : field_(&f), n_(n), grading_(g) {
    for (int i = 1; i <= n; ++i)
      (g.generator_degree(i) == 1 ? odd_ : even_).push_back(i);
  }

  Substitution sample(int l, int m, Rng& rng) {
    odd_cursor_ = 0;
    even_cursor_ = 0;
    Substitution s;
    for (int i = 1; i <= l; ++i) s[Variable::y(i)] = even_image(rng);
    for (int j = 1; j <= m; ++j) s[Variable::z(j)] = odd_image(rng);
    return s;
  }

 private:
  GrassmannElement even_image(Rng& rng) {
    const Field& f = *field_;
    GrassmannElement img = GrassmannElement::scalar(
        f, n_, f.element(static_cast<int>(rng.below(f.q()))));
    int summands = 2 + static_cast<int>(rng.below(3));
    for (int t = 0; t < summands; ++t) {
      Blade b;
      switch (rng.below(3)) {
        case 0:  // pair of even generators
          if (even_.size() < 2) continue;
          b.set(take(even_, even_cursor_, rng));
          add_distinct(b, even_, even_cursor_, rng);
          break;
        case 1:  // pair of odd generators
          if (odd_.size() < 2) continue;
          b.set(take(odd_, odd_cursor_, rng));
          if (!add_distinct(b, odd_, odd_cursor_, rng)) continue;
          break;
        default:  // single even generator
          if (even_.empty()) continue;
          b.set(take(even_, even_cursor_, rng));
          break;
      }
      img.add_coeff(b, nonzero(rng));
    }
    return img;
  }

  GrassmannElement odd_image(Rng& rng) {
    const Field& f = *field_;
    GrassmannElement img = GrassmannElement::zero(f, n_);
    if (odd_.empty()) return img;  // the odd part is trivial
    int summands = 2 + static_cast<int>(rng.below(3));
    for (int t = 0; t < summands; ++t) {
      Blade b;
      b.set(take(odd_, odd_cursor_, rng));
      // the first summand stays a lone generator so every image has an
      // odd-length part; the rest mix in the commuting two-blade shapes
      switch (t == 0 ? 0 : rng.below(3)) {
        case 0:  // lone odd generator
          break;
        case 1:  // odd generator times an even one
          if (even_.empty()) break;
          add_distinct(b, even_, even_cursor_, rng);
          break;
        default: {  // triple of odd generators
          if (odd_.size() < 3) break;
          Blade tripled = b;
          if (add_distinct(tripled, odd_, odd_cursor_, rng) &&
              add_distinct(tripled, odd_, odd_cursor_, rng))
            b = tripled;  // otherwise keep the lone odd generator
          break;
        }
      }
      img.add_coeff(b, nonzero(rng));
    }
    return img;
  }

  // Next generator from the pool: usually the cursor walk (fresh support),
  // sometimes a uniform draw so scarce generators get shared.
  int take(const std::vector<int>& pool, std::size_t& cursor, Rng& rng) {
    if (pool.size() <= 4 || rng.below(4) == 0)
      return pool[rng.below(pool.size())];
    int g = pool[cursor % pool.size()];
    ++cursor;
    return g;
  }

  bool add_distinct(Blade& b, const std::vector<int>& pool, std::size_t& cursor,
                    Rng& rng) {
    for (int attempt = 0; attempt < 16; ++attempt) {
      int g = take(pool, cursor, rng);
      if (!b.contains(g)) {
        b.set(g);
        return true;
      }
    }
    return false;
  }

  Fe nonzero(Rng& rng) {
    return field_->element(1 + static_cast<int>(rng.below(field_->q() - 1)));
  }

  const Field* field_;
  int n_;
  GradingSpec grading_;
  std::vector<int> odd_, even_;
  std::size_t odd_cursor_ = 0, even_cursor_ = 0;
};

}  // namespace grasscodim
