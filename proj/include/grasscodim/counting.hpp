#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <vector>

#include "grasscodim/structure.hpp"

namespace grasscodim {

using BigInt = boost::multiprecision::cpp_int;

struct CountParams {
  int p = 3;
  int q = 3;
  int l = 1;
  int m = 1;
  int k = 0;  // used by SS1/SS2/SS3
};

// Binomial coefficient, 0 outside 0 <= r <= n.
inline BigInt binom(long long n, long long r) {
  if (r < 0 || n < 0 || r > n) return 0;
  BigInt b = 1;
  for (long long i = 0; i < r; ++i) {
    b *= (n - i);
    b /= (i + 1);
  }
  return b;
}

// Number of k-vectors with entries in [0, j) summing to n:
// sum over r + s*j = n of (-1)^s C(k+r-1, r) C(k, s).
inline BigInt kappa(int n, int j, int k) {
  if (n < 0) return 0;
  if (k == 0) return n == 0 ? 1 : 0;
  BigInt total = 0;
  for (int s = 0; j * s <= n; ++s) {
    int r = n - j * s;
    BigInt term = binom(k + r - 1, r) * binom(k, s);
    if (s % 2 != 0) term = -term;
    total += term;
  }
  return total;
}

// Brute-force shadow of kappa, for audits.
inline BigInt kappa_enum(int n, int j, int k) {
  if (k == 0) return n == 0 ? 1 : 0;
  std::vector<int> v(k, 0);
  BigInt count = 0;
  while (true) {
    int s = 0;
    for (int e : v) s += e;
    if (s == n) ++count;
    int i = 0;
    while (i < k && v[i] == j - 1) v[i++] = 0;
    if (i == k) break;
    ++v[i];
  }
  return count;
}

// Count of p-polynomials of total degree s in l variables, as printed:
// q^kappa(s/p, q, l) when p | s, otherwise 1.  The count of monomials
// (kappa itself, or 0 when p does not divide s) is exposed separately.
struct PCount {
  BigInt paper_value;
  BigInt monomial_count;
};

inline PCount p_count(int s, const CountParams& pr) {
  PCount out;
  if (s % pr.p == 0) {
    BigInt kap = kappa(s / pr.p, pr.q, pr.l);
    out.monomial_count = kap;
    out.paper_value =
        boost::multiprecision::pow(BigInt(pr.q), kap.convert_to<unsigned>());
  } else {
    out.monomial_count = 0;
    out.paper_value = 1;
  }
  return out;
}

// Which side of a count to use: the printed closed form, or direct
// enumeration of the family (the normative reference in tests).
enum class Reading { Formula, Enumeration };

// Closed-form bidegree counts for the SS families, exactly as printed.
// The SS1 form presupposes n2 <= k (the family is empty above that); the
// SS2/SS3 bracket summand applies only when n2 <= k+1.
inline BigInt c_family_formula(Family fam, int n1, int n2, const CountParams& pr) {
  int n = n1 + n2;
  BigInt total = 0;
  switch (fam) {
    case Family::SS0:
      return kappa(n1, pr.p, pr.l) * kappa(n2, 2, pr.m);
    case Family::SS: {
      for (int s = 0; 2 * s <= n; ++s) total += binom(n, 2 * s);
      total += kappa(n1, pr.p, pr.l) * kappa(n2, pr.p, pr.m);
      return total;
    }
    case Family::SS1: {
      if (n2 > pr.k) return 0;
      for (int s = 0; 2 * s <= n; ++s) {
        for (int beta = 0; beta <= pr.k && beta <= 2 * s; ++beta) {
          total += binom(pr.m, beta) * binom(pr.l, 2 * s - beta) *
                   binom(pr.m - beta, n2 - beta) *
                   binom(pr.l - 2 * s + beta, n1 - 2 * s + beta);
        }
      }
      total += kappa(n2, pr.p, pr.m) * kappa(n1, pr.p, pr.l);
      return total;
    }
    case Family::SS2: {
      for (int s = 0; 2 * s <= n; ++s) {
        for (int beta = 0; beta <= pr.k && beta <= 2 * s; ++beta) {
          if (2 * beta > pr.k + 1 + 2 * s - n2) continue;
          total += binom(pr.l, beta) * binom(pr.m, 2 * s - beta) *
                   binom(pr.l - beta, n1 - beta) *
                   binom(pr.m - 2 * s + beta, n2 - 2 * s + beta);
        }
      }
      if (n2 <= pr.k + 1) total += kappa(n1, pr.p, pr.l) * kappa(n2, pr.p, pr.m);
      return total;
    }
    case Family::SS3: {
      for (int s = 0; 2 * s <= n; ++s) {
        for (int beta = 0; beta <= pr.k && beta <= 2 * s; ++beta) {
          if (2 * beta >= pr.k + 1 + 2 * s - n2) continue;
          total += binom(pr.l, beta) * binom(pr.m, 2 * s - beta) *
                   binom(pr.l - beta, n1 - beta) *
                   binom(pr.m - 2 * s + beta, n2 - 2 * s + beta);
        }
      }
      for (int s = 0; 2 * s <= n; ++s) {
        int twice_beta = pr.k + 1 + 2 * s - n2;
        if (twice_beta < 0 || twice_beta % 2 != 0) continue;
        int beta = twice_beta / 2;
        if (beta > pr.k || beta > 2 * s) continue;
        total += binom(pr.l, beta) * binom(pr.m - 1, 2 * s - beta) *
                 binom(pr.l - beta, n1 - beta) *
                 binom(pr.m - 2 * s + beta, n2 - 2 * s + beta);
      }
      if (n2 <= pr.k + 1) total += kappa(n1, pr.p, pr.l) * kappa(n2, pr.p, pr.m);
      return total;
    }
  }
  return total;
}

inline BigInt c_family_enum(Family fam, int n1, int n2, const CountParams& pr,
                            MultilinearMode mode = MultilinearMode::PsiOnly) {
  return BigInt(
      enumerate_family(fam, n1, n2, pr.l, pr.m, pr.p, pr.k, mode).size());
}

inline BigInt c_family(Family fam, int n1, int n2, const CountParams& pr,
                       Reading reading,
                       MultilinearMode mode = MultilinearMode::PsiOnly) {
  return reading == Reading::Formula ? c_family_formula(fam, n1, n2, pr)
                                     : c_family_enum(fam, n1, n2, pr, mode);
}

// c* count: sums the family count over all p-power prefixes in the y's,
// i.e. over l-vectors (s_1..s_l) with s_i <= q-1 and p*sum <= n1.  The
// number of vectors of a given sum is kappa(sum, q, l).
inline BigInt c_star(Family fam, int n1, int n2, const CountParams& pr,
                     Reading reading,
                     MultilinearMode mode = MultilinearMode::PsiOnly) {
  BigInt total = 0;
  for (int sigma = 0; pr.p * sigma <= n1; ++sigma) {
    BigInt vectors = kappa(sigma, pr.q, pr.l);
    if (vectors == 0) continue;
    total += vectors * c_family(fam, n1 - pr.p * sigma, n2, pr, reading, mode);
  }
  return total;
}

// Coarser upper-bound count: sum over s <= n1 of p(s) * c(n1 - s, n2).
inline BigInt c_circ(Family fam, int n1, int n2, const CountParams& pr,
                     Reading reading,
                     MultilinearMode mode = MultilinearMode::PsiOnly) {
  BigInt total = 0;
  for (int s = 0; s <= n1; ++s)
    total += p_count(s, pr).paper_value * c_family(fam, n1 - s, n2, pr, reading, mode);
  return total;
}

// Dimension bound for the relatively free algebra:
// ((l+m)^(pql + pm + 1) - 1) / (l + m - 1).  Needs l + m >= 2.
inline BigInt u_dim_bound(const CountParams& pr) {
  if (pr.l + pr.m < 2) throw std::invalid_argument("u_dim_bound needs l + m >= 2");
  unsigned e = static_cast<unsigned>(pr.p * pr.q * pr.l + pr.p * pr.m + 1);
  BigInt num = boost::multiprecision::pow(BigInt(pr.l + pr.m), e) - 1;
  return num / (pr.l + pr.m - 1);
}

// One formula-vs-enumeration mismatch.
struct Discrepancy {
  Family family;
  int n1 = 0, n2 = 0;
  CountParams params;
  BigInt formula_value;
  BigInt enumeration_value;
};

// Compares the printed counts against enumeration over a bidegree range.
inline std::vector<Discrepancy> audit_counts(Family fam, const CountParams& pr,
                                             int max_n1, int max_n2,
                                             MultilinearMode mode = MultilinearMode::PsiOnly) {
  std::vector<Discrepancy> out;
  for (int n1 = 0; n1 <= max_n1; ++n1) {
    for (int n2 = 0; n2 <= max_n2; ++n2) {
      BigInt f = c_family_formula(fam, n1, n2, pr);
      BigInt e = c_family_enum(fam, n1, n2, pr, mode);
      if (f != e) out.push_back({fam, n1, n2, pr, f, e});
    }
  }
  return out;
}

}  // namespace grasscodim
