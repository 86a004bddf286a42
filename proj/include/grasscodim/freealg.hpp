#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "grasscodim/gf.hpp"
#include "grasscodim/grassmann.hpp"

namespace grasscodim {

// Generator of the free Z2-graded algebra: y_i are even, z_j are odd.
// Ordered y1 < y2 < ... < z1 < z2 < ...
struct Variable {
  enum Sort { Y, Z };
  Sort sort = Y;
  int index = 1;  // 1-based

  int degree() const { return sort == Z ? 1 : 0; }

  static Variable y(int i) { return {Y, i}; }
  static Variable z(int i) { return {Z, i}; }

  std::string to_string() const {
    return (sort == Y ? "y" : "z") + std::to_string(index);
  }

  friend bool operator==(const Variable&, const Variable&) = default;
  friend auto operator<=>(const Variable& a, const Variable& b) {
    if (auto c = a.sort <=> b.sort; c != 0) return c;
    return a.index <=> b.index;
  }
};

using Word = std::vector<Variable>;

// Length-then-lexicographic order; doubles as the canonical print order.
struct WordLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }
};

// Per-variable degree vector of a word or term.
using Multidegree = std::map<Variable, int>;

inline Multidegree word_multidegree(const Word& w) {
  Multidegree d;
  for (const Variable& v : w) ++d[v];
  return d;
}

// Polynomial in the free associative algebra over a finite field.
class FreePoly {
 public:
  FreePoly() = default;
  explicit FreePoly(const Field* f) : field_(f) {}

  static FreePoly zero(const Field& f) { return FreePoly(&f); }

  static FreePoly constant(const Field& f, Fe c) {
    FreePoly r(&f);
    r.add_term({}, c);
    return r;
  }

  static FreePoly var(const Field& f, Variable v) {
    FreePoly r(&f);
    r.add_term({v}, f.one());
    return r;
  }

  static FreePoly word(const Field& f, Word w, Fe c) {
    FreePoly r(&f);
    r.add_term(std::move(w), c);
    return r;
  }

  const Field& field() const { return *field_; }
  const std::map<Word, Fe, WordLess>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(Word w, Fe c) {
    auto it = terms_.find(w);
    Fe s = field_->add(it == terms_.end() ? field_->zero() : it->second, c);
    if (field_->is_zero(s)) {
      if (it != terms_.end()) terms_.erase(it);
    } else {
      terms_[std::move(w)] = s;
    }
  }

  friend FreePoly operator+(const FreePoly& a, const FreePoly& b) {
    a.check_compatible(b);
    FreePoly r = a;
    for (const auto& [w, c] : b.terms_) r.add_term(w, c);
    return r;
  }

  friend FreePoly operator-(const FreePoly& a, const FreePoly& b) {
    a.check_compatible(b);
    FreePoly r = a;
    for (const auto& [w, c] : b.terms_) r.add_term(w, b.field_->neg(c));
    return r;
  }

  friend FreePoly operator*(const FreePoly& a, const FreePoly& b) {
    a.check_compatible(b);
    FreePoly r(a.field_);
    for (const auto& [wa, ca] : a.terms_) {
      for (const auto& [wb, cb] : b.terms_) {
        Word w = wa;
        w.insert(w.end(), wb.begin(), wb.end());
        r.add_term(std::move(w), a.field_->mul(ca, cb));
      }
    }
    return r;
  }

  FreePoly scaled(Fe c) const {
    FreePoly r(field_);
    if (field_->is_zero(c)) return r;
    for (const auto& [w, x] : terms_) r.terms_[w] = field_->mul(x, c);
    return r;
  }

  FreePoly negated() const { return scaled(field_->neg(field_->one())); }

  FreePoly pow(unsigned e) const {
    FreePoly r = constant(*field_, field_->one());
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
  }

  friend bool operator==(const FreePoly& a, const FreePoly& b) {
    return a.terms_ == b.terms_;
  }

  std::vector<Variable> variables() const {
    std::vector<Variable> out;
    for (const auto& [w, c] : terms_)
      for (const Variable& v : w)
        if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    std::sort(out.begin(), out.end());
    return out;
  }

  // Multihomogeneous iff every word has the same per-variable degrees.
  bool is_multihomogeneous() const {
    if (terms_.empty()) return true;
    auto d0 = word_multidegree(terms_.begin()->first);
    for (const auto& [w, c] : terms_)
      if (word_multidegree(w) != d0) return false;
    return true;
  }

  Multidegree multidegree() const {
    if (terms_.empty()) throw std::domain_error("multidegree of zero polynomial");
    if (!is_multihomogeneous())
      throw std::domain_error("polynomial is not multihomogeneous");
    return word_multidegree(terms_.begin()->first);
  }

  // (total y-degree, total z-degree) of a multihomogeneous polynomial.
  std::pair<int, int> bidegree() const {
    auto md = multidegree();
    int n1 = 0, n2 = 0;
    for (const auto& [v, d] : md) (v.sort == Variable::Y ? n1 : n2) += d;
    return {n1, n2};
  }

  // Splits into multihomogeneous components, keyed by multidegree.
  std::map<Multidegree, FreePoly> components() const {
    std::map<Multidegree, FreePoly> out;
    for (const auto& [w, c] : terms_) {
      auto key = word_multidegree(w);
      auto it = out.find(key);
      if (it == out.end()) it = out.emplace(key, FreePoly(field_)).first;
      it->second.add_term(w, c);
    }
    return out;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [w, c] : terms_) {
      if (!first) s += " + ";
      first = false;
      s += field_->to_string(c);
      for (const Variable& v : w) {
        s += "*";
        s += v.to_string();
      }
    }
    return s;
  }

 private:
  void check_compatible(const FreePoly& o) const {
    if (field_ != o.field_) throw std::invalid_argument("mixed field operands");
  }

  const Field* field_ = nullptr;
  std::map<Word, Fe, WordLess> terms_;
};

inline FreePoly commutator(const FreePoly& a, const FreePoly& b) {
  return a * b - b * a;
}

// Left-normed commutator [[...[f1,f2],f3]...,fn].
inline FreePoly long_commutator(const std::vector<FreePoly>& fs) {
  if (fs.size() < 2) throw std::invalid_argument("commutator needs >= 2 arguments");
  FreePoly r = fs[0];
  for (std::size_t i = 1; i < fs.size(); ++i) r = commutator(r, fs[i]);
  return r;
}

// g_1(z) = z;  g_h(z_1,...,z_h) = sum over even subsets T of {1..h} of
// (-2)^{-|T|/2} times (the variables outside T in increasing order) times
// [z_{t1},z_{t2}]...[z_{t_{r-1}},z_{t_r}] with T = {t1 < ... < tr}.
inline FreePoly g_poly(const Field& f, const std::vector<Variable>& zs) {
  int h = static_cast<int>(zs.size());
  if (h < 1) throw std::invalid_argument("g_poly needs at least one variable");
  Fe minus_two_inv = f.inv(f.from_int(-2));
  FreePoly total = FreePoly::zero(f);
  for (unsigned mask = 0; mask < (1u << h); ++mask) {
    int t = std::popcount(mask);
    if (t % 2 != 0) continue;
    FreePoly term = FreePoly::constant(f, f.pow(minus_two_inv, static_cast<unsigned>(t / 2)));
    for (int i = 0; i < h; ++i)
      if (!(mask & (1u << i))) term = term * FreePoly::var(f, zs[i]);
    std::vector<int> in;
    for (int i = 0; i < h; ++i)
      if (mask & (1u << i)) in.push_back(i);
    for (std::size_t j = 0; j + 1 < in.size(); j += 2)
      term = term * commutator(FreePoly::var(f, zs[in[j]]), FreePoly::var(f, zs[in[j + 1]]));
    total = total + term;
  }
  return total;
}

// Graded substitution y_i -> even element, z_j -> odd element.
using Substitution = std::map<Variable, GrassmannElement>;

inline GrassmannElement evaluate(const FreePoly& f, const Substitution& s,
                                 const GradingSpec& g, const Field& field, int n) {
  for (const auto& [v, img] : s) {
    if (!img.is_homogeneous(g, v.degree()))
      throw std::invalid_argument("image of " + v.to_string() +
                                  " is not homogeneous of its degree");
  }
  GrassmannElement r = GrassmannElement::zero(field, n);
  for (const auto& [w, c] : f.terms()) {
    GrassmannElement t = GrassmannElement::scalar(field, n, c);
    for (const Variable& v : w) {
      auto it = s.find(v);
      if (it == s.end())
        throw std::invalid_argument("no image for variable " + v.to_string());
      t = t * it->second;
      if (t.is_zero()) break;
    }
    r = r + t;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Text form.  Grammar:
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*'? factor)*
//   factor := atom ('^' nat)?
//   atom   := var | nat | '(' expr ')' | '[' expr (',' expr)+ ']'
//   var    := ('y'|'z') nat
// Integer literals are taken mod p; brackets are left-normed commutators.

namespace detail {

class PolyParser {
 public:
  PolyParser(const std::string& s, const Field& f) : s_(s), f_(f) {}

  FreePoly parse() {
    FreePoly r = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing input");
    return r;
  }

 private:
  FreePoly expr() {
    skip_ws();
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++pos_;
    } else if (peek() == '+') {
      ++pos_;
    }
    FreePoly r = term();
    if (neg) r = r.negated();
    while (true) {
      skip_ws();
      char c = peek();
      if (c == '+' || c == '-') {
        ++pos_;
        FreePoly t = term();
        r = (c == '+') ? r + t : r - t;
      } else {
        break;
      }
    }
    return r;
  }

  FreePoly term() {
    FreePoly r = factor();
    while (true) {
      skip_ws();
      char c = peek();
      if (c == '*') {
        ++pos_;
        r = r * factor();
      } else if (c == 'y' || c == 'z' || c == '(' || c == '[' ||
                 (c >= '0' && c <= '9')) {
        r = r * factor();  // juxtaposition
      } else {
        break;
      }
    }
    return r;
  }

  FreePoly factor() {
    FreePoly a = atom();
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      a = a.pow(static_cast<unsigned>(nat()));
    }
    return a;
  }

  FreePoly atom() {
    skip_ws();
    char c = peek();
    if (c == 'y' || c == 'z') {
      ++pos_;
      int i = nat();
      if (i < 1) fail("variable index must be >= 1");
      return FreePoly::var(f_, c == 'y' ? Variable::y(i) : Variable::z(i));
    }
    if (c >= '0' && c <= '9') return FreePoly::constant(f_, f_.from_int(nat()));
    if (c == '(') {
      ++pos_;
      FreePoly r = expr();
      expect(')');
      return r;
    }
    if (c == '[') {
      ++pos_;
      std::vector<FreePoly> args;
      args.push_back(expr());
      while (true) {
        skip_ws();
        if (peek() == ',') {
          ++pos_;
          args.push_back(expr());
        } else {
          break;
        }
      }
      expect(']');
      if (args.size() < 2) fail("commutator needs at least two arguments");
      return long_commutator(args);
    }
    fail("unexpected character");
    return FreePoly::zero(f_);  // unreachable
  }

  int nat() {
    skip_ws();
    if (peek() < '0' || peek() > '9') fail("expected number");
    long long v = 0;
    while (pos_ < s_.size() && s_[pos_] >= '0' && s_[pos_] <= '9') {
      v = v * 10 + (s_[pos_] - '0');
      if (v > 1'000'000'000) fail("number too large");
      ++pos_;
    }
    return static_cast<int>(v);
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw std::invalid_argument("parse error at position " + std::to_string(pos_) +
                                ": " + msg);
  }

  const std::string& s_;
  const Field& f_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline FreePoly parse_poly(const std::string& s, const Field& f) {
  return detail::PolyParser(s, f).parse();
}

}  // namespace grasscodim
