#pragma once

// Polynomials over ℚ, Gröbner bases, initial ideals (min convention),
// saturation, elimination and the binomial/linear certificates built on them.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "wellpoised/error.hpp"
#include "wellpoised/exactmath.hpp"
#include "wellpoised/polyhedra.hpp"

namespace wp {

using Exponent = std::vector<long>;

/// Sparse polynomial; Laurent exponents are allowed but the Gröbner engine
/// rejects them.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}
  Polynomial(std::size_t nvars, const Rational& c) : nvars_(nvars) {
    if (c != 0) terms_[Exponent(nvars, 0)] = c;
  }

  static Polynomial monomial(const Exponent& e, const Rational& c = 1) {
    Polynomial p(e.size());
    if (c != 0) p.terms_[e] = c;
    return p;
  }
  static Polynomial variable(std::size_t nvars, std::size_t i) {
    Exponent e(nvars, 0);
    e[i] = 1;
    return monomial(e);
  }

  std::size_t nvars() const { return nvars_; }
  const std::map<Exponent, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Exponent& e, const Rational& c) {
    if (e.size() != nvars_) throw Error(ErrorCode::DimensionMismatch, "exponent length differs from variable count");
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Rational coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  long total_degree() const {
    long d = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      long s = 0;
      for (long x : e) s += x;
      if (first || s > d) d = s;
      first = false;
    }
    return d;
  }

  bool is_laurent() const {
    for (const auto& [e, c] : terms_)
      for (long x : e)
        if (x < 0) return true;
    return false;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    check_same(a, b);
    Polynomial r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
  }
  friend Polynomial operator-(const Polynomial& a) {
    Polynomial r = a;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check_same(a, b);
    Polynomial r(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exponent e(ea.size());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    return r;
  }
  friend Polynomial operator*(const Rational& s, const Polynomial& a) {
    Polynomial r(a.nvars_);
    if (s == 0) return r;
    r.terms_ = a.terms_;
    for (auto& [e, c] : r.terms_) c *= s;
    return r;
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }
  friend bool operator<(const Polynomial& a, const Polynomial& b) {
    if (a.nvars_ != b.nvars_) return a.nvars_ < b.nvars_;
    return a.terms_ < b.terms_;
  }

  Polynomial pow(unsigned k) const {
    Polynomial r(nvars_, Rational(1));
    for (unsigned i = 0; i < k; ++i) r = r * *this;
    return r;
  }

  Rational evaluate(const RatVec& x) const {
    if (x.size() != nvars_) throw Error(ErrorCode::DimensionMismatch, "evaluation point has wrong length");
    Rational s = 0;
    for (const auto& [e, c] : terms_) {
      Rational t = c;
      for (std::size_t i = 0; i < nvars_; ++i) {
        if (e[i] == 0) continue;
        Rational b = x[i];
        long k = e[i];
        if (k < 0) {
          b = 1 / b;
          k = -k;
        }
        Rational p = 1;
        for (long j = 0; j < k; ++j) p *= b;
        t *= p;
      }
      s += t;
    }
    return s;
  }

  /// Replaces variable i by images[i] (a polynomial in images' ring).
  Polynomial substitute(const std::vector<Polynomial>& images) const {
    if (images.size() != nvars_) throw Error(ErrorCode::DimensionMismatch, "substitution needs one image per variable");
    std::size_t target = images.empty() ? 0 : images.front().nvars();
    Polynomial r(target);
    for (const auto& [e, c] : terms_) {
      Polynomial t(target, c);
      for (std::size_t i = 0; i < nvars_; ++i) {
        if (e[i] < 0) throw Error(ErrorCode::InvalidInput, "substitution into a Laurent term");
        t = t * images[i].pow(static_cast<unsigned>(e[i]));
      }
      r = r + t;
    }
    return r;
  }

  /// Embeds into a ring with more variables: variable i goes to slot map[i].
  Polynomial remap(std::size_t nvars, const std::vector<std::size_t>& map) const {
    Polynomial r(nvars);
    for (const auto& [e, c] : terms_) {
      Exponent f(nvars, 0);
      for (std::size_t i = 0; i < nvars_; ++i) f[map[i]] += e[i];
      r.add_term(f, c);
    }
    return r;
  }

  /// Multidegree of each term under a grading with one row per variable.
  std::set<IntVec> degrees(const IntMatrix& grading) const {
    std::set<IntVec> out;
    for (const auto& [e, c] : terms_) {
      IntVec d(grading.cols(), Int(0));
      for (std::size_t i = 0; i < nvars_; ++i)
        for (std::size_t j = 0; j < grading.cols(); ++j) d[j] += grading(i, j) * e[i];
      out.insert(d);
    }
    return out;
  }

  bool is_homogeneous(const IntMatrix& grading) const { return degrees(grading).size() <= 1; }

  bool is_standard_homogeneous() const {
    std::set<long> ds;
    for (const auto& [e, c] : terms_) {
      long s = 0;
      for (long x : e) s += x;
      ds.insert(s);
    }
    return ds.size() <= 1;
  }

 private:
  static void check_same(const Polynomial& a, const Polynomial& b) {
    if (a.nvars_ != b.nvars_) throw Error(ErrorCode::DimensionMismatch, "polynomials live in different rings");
  }

  std::size_t nvars_ = 0;
  std::map<Exponent, Rational> terms_;
};

namespace alg {

/// Integer coefficients with gcd 1; the coefficient of the lexicographically
/// largest monomial is made positive.
inline Polynomial normalized(const Polynomial& p) {
  if (p.is_zero()) return p;
  Int den = 1, num = 0;
  for (const auto& [e, c] : p.terms()) den = exact::lcm(den, c.get_den());
  for (const auto& [e, c] : p.terms()) num = exact::gcd(num, Rational(c * den).get_num());
  Rational s(den, num);
  s.canonicalize();
  if (p.terms().rbegin()->second < 0) s = -s;
  return s * p;
}

inline Polynomial monic_lex(const Polynomial& p) {
  if (p.is_zero()) return p;
  return Rational(1 / p.terms().rbegin()->second) * p;
}

inline std::string monomial_string(const Exponent& e, const std::vector<std::string>& names) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += names.at(i);
    if (e[i] != 1) s += "^" + std::to_string(e[i]);
  }
  return s;
}

/// Terms in descending lexicographic order of exponents.
inline std::string to_string(const Polynomial& p, const std::vector<std::string>& names) {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono = monomial_string(e, names);
    Rational a = abs(c);
    std::string coef = exact::to_string(a);
    if (first) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    if (mono.empty())
      s += coef;
    else if (a == 1)
      s += mono;
    else
      s += coef + "*" + mono;
    first = false;
  }
  return s;
}

// ---------------------------------------------------------------- parsing

class Parser {
 public:
  Parser(std::string text, const std::vector<std::string>& names) : text_(std::move(text)), names_(names) {}

  Polynomial parse() {
    skip();
    if (pos_ >= text_.size()) fail("empty polynomial");
    Polynomial p = expr();
    skip();
    if (pos_ < text_.size()) fail(std::string("unexpected character '") + text_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw Error(ErrorCode::Parse, "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg);
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  Polynomial constant(const Rational& c) const { return Polynomial(names_.size(), c); }

  Polynomial expr() {
    Polynomial acc(names_.size());
    bool first = true;
    while (true) {
      skip();
      int sign = 1;
      if (peek('+') || peek('-')) {
        sign = text_[pos_] == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        break;
      }
      Polynomial t = term();
      acc = sign < 0 ? acc - t : acc + t;
      first = false;
    }
    return acc;
  }

  bool starts_factor() {
    skip();
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(';
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (true) {
      if (peek('*')) {
        ++pos_;
        acc = acc * factor();
      } else if (peek('/')) {
        ++pos_;
        skip();
        Int d = integer();
        if (d == 0) fail("division by zero");
        acc = Rational(Int(1), d) * acc;
      } else if (starts_factor()) {
        acc = acc * factor();
      } else {
        break;
      }
    }
    return acc;
  }

  Int integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return Int(text_.substr(start, pos_ - start));
  }

  Polynomial factor() {
    Polynomial base = atom();
    if (peek('^')) {
      ++pos_;
      skip();
      bool neg = false;
      if (peek('-')) {
        neg = true;
        ++pos_;
      }
      Int k = integer();
      if (!k.fits_slong_p() || k > 100000) fail("exponent too large");
      long kk = k.get_si();
      if (neg) {
        if (base.size() != 1) fail("negative exponent on a non-monomial");
        const auto& [e, c] = *base.terms().begin();
        Exponent f = e;
        for (auto& x : f) x = -x * kk;
        Rational cc = 1;
        for (long i = 0; i < kk; ++i) cc /= c;
        return Polynomial::monomial(f, cc);
      }
      return base.pow(static_cast<unsigned>(kk));
    }
    return base;
  }

  Polynomial atom() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return constant(Rational(integer()));
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name = text_.substr(start, pos_ - start);
      auto it = std::find(names_.begin(), names_.end(), name);
      if (it == names_.end()) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      return Polynomial::variable(names_.size(), static_cast<std::size_t>(it - names_.begin()));
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string text_;
  const std::vector<std::string>& names_;
  std::size_t pos_ = 0;
};

}  // namespace alg

inline Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& names) {
  return alg::Parser(text, names).parse();
}

// ---------------------------------------------------------------- term orders

/// Monomial order compared by a linear key: optional weight rows (larger
/// weight is larger) followed by grevlex or lex. Every key entry is linear
/// in the exponent, so keys of products are sums of keys.
class TermOrder {
 public:
  enum class Tie { Grevlex, Lex };

  static TermOrder grevlex(std::size_t n) { return TermOrder(n, {}, Tie::Grevlex); }
  static TermOrder lex(std::size_t n) { return TermOrder(n, {}, Tie::Lex); }
  static TermOrder weighted(std::size_t n, const std::vector<IntVec>& rows, Tie tie = Tie::Grevlex) {
    return TermOrder(n, rows, tie);
  }
  /// grevlex in which variable v is the cheapest.
  static TermOrder grevlex_last(std::size_t n, std::size_t v) {
    TermOrder t(n, {}, Tie::Grevlex);
    std::vector<long long> row(n, 0);
    row[v] = -1;
    t.matrix_.insert(t.matrix_.begin() + 1, row);
    return t;
  }

  std::size_t nvars() const { return n_; }

  std::vector<long long> key(const Exponent& e) const {
    std::vector<long long> k(matrix_.size(), 0);
    for (std::size_t r = 0; r < matrix_.size(); ++r) {
      long long s = 0;
      for (std::size_t i = 0; i < n_; ++i) s += matrix_[r][i] * e[i];
      k[r] = s;
    }
    return k;
  }

 private:
  TermOrder(std::size_t n, const std::vector<IntVec>& rows, Tie tie) : n_(n) {
    for (const auto& r : rows) {
      if (r.size() != n) throw Error(ErrorCode::DimensionMismatch, "weight row has wrong length");
      std::vector<long long> row(n);
      for (std::size_t i = 0; i < n; ++i) {
        if (!r[i].fits_slong_p() || abs(r[i]) > Int(1000000000))
          throw Error(ErrorCode::InvalidInput, "weight entry too large");
        row[i] = r[i].get_si();
      }
      matrix_.push_back(std::move(row));
    }
    if (tie == Tie::Grevlex) {
      matrix_.emplace_back(n, 1);
      for (std::size_t i = n; i-- > 0;) {
        std::vector<long long> row(n, 0);
        row[i] = -1;
        matrix_.push_back(std::move(row));
      }
    } else {
      for (std::size_t i = 0; i < n; ++i) {
        std::vector<long long> row(n, 0);
        row[i] = 1;
        matrix_.push_back(std::move(row));
      }
    }
  }

  std::size_t n_;
  std::vector<std::vector<long long>> matrix_;
};

// ---------------------------------------------------------------- Gröbner engine

namespace gb {

struct Term {
  Exponent e;
  std::vector<long long> key;
  Rational c;
};

// terms sorted by key, largest first
struct OPoly {
  std::vector<Term> terms;
  long sugar = 0;
  bool zero() const { return terms.empty(); }
  const Term& lead() const { return terms.front(); }
};

inline bool key_less(const std::vector<long long>& a, const std::vector<long long>& b) { return a < b; }

inline OPoly from_polynomial(const Polynomial& p, const TermOrder& ord) {
  OPoly o;
  for (const auto& [e, c] : p.terms()) {
    for (long x : e)
      if (x < 0) throw Error(ErrorCode::InvalidInput, "Gröbner engine received a Laurent polynomial");
    o.terms.push_back({e, ord.key(e), c});
  }
  std::sort(o.terms.begin(), o.terms.end(), [](const Term& a, const Term& b) { return key_less(b.key, a.key); });
  o.sugar = p.is_zero() ? 0 : p.total_degree();
  return o;
}

inline Polynomial to_polynomial(const OPoly& o, std::size_t n) {
  Polynomial p(n);
  for (const auto& t : o.terms) p.add_term(t.e, t.c);
  return p;
}

inline void make_monic(OPoly& p) {
  if (p.zero()) return;
  Rational inv = 1 / p.lead().c;
  for (auto& t : p.terms) t.c *= inv;
}

inline bool divides(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline long degree_of(const Exponent& e) {
  long s = 0;
  for (long x : e) s += x;
  return s;
}

// f − c · x^shift · g, both sorted
inline std::vector<Term> sub_shifted(const std::vector<Term>& f, std::size_t from, const Rational& c, const Exponent& shift,
                                     const std::vector<long long>& kshift, const OPoly& g) {
  std::vector<Term> out;
  out.reserve(f.size() - from + g.terms.size());
  std::size_t i = from, j = 0;
  auto shifted = [&](const Term& t) {
    Term s;
    s.e = t.e;
    for (std::size_t k = 0; k < s.e.size(); ++k) s.e[k] += shift[k];
    s.key = t.key;
    for (std::size_t k = 0; k < s.key.size(); ++k) s.key[k] += kshift[k];
    s.c = -c * t.c;
    return s;
  };
  while (i < f.size() || j < g.terms.size()) {
    if (j == g.terms.size()) {
      out.push_back(f[i++]);
      continue;
    }
    Term s = shifted(g.terms[j]);
    if (i == f.size() || key_less(f[i].key, s.key)) {
      out.push_back(std::move(s));
      ++j;
    } else if (key_less(s.key, f[i].key)) {
      out.push_back(f[i++]);
    } else {
      Rational sum = f[i].c + s.c;
      if (sum != 0) out.push_back({f[i].e, f[i].key, sum});
      ++i;
      ++j;
    }
  }
  return out;
}

/// Full reduction of f modulo G (G need not be reduced).
inline OPoly reduce(OPoly f, const std::vector<OPoly>& g, const TermOrder& ord) {
  OPoly r;
  r.sugar = f.sugar;
  std::vector<Term> cur = std::move(f.terms);
  std::size_t head = 0;
  while (head < cur.size()) {
    const Term& t = cur[head];
    const OPoly* div = nullptr;
    for (const auto& h : g)
      if (!h.zero() && divides(h.lead().e, t.e)) {
        div = &h;
        break;
      }
    if (!div) {
      r.terms.push_back(t);
      ++head;
      continue;
    }
    Exponent shift(t.e.size());
    for (std::size_t k = 0; k < shift.size(); ++k) shift[k] = t.e[k] - div->lead().e[k];
    std::vector<long long> ks = ord.key(shift);
    Rational c = t.c / div->lead().c;
    r.sugar = std::max(r.sugar, div->sugar + degree_of(shift));
    cur = sub_shifted(cur, head, c, shift, ks, *div);
    head = 0;
  }
  return r;
}

struct Pair {
  std::size_t i, j;
  Exponent lcm;
  std::vector<long long> key;
  long sugar;
};

inline std::vector<OPoly> buchberger(const std::vector<Polynomial>& input, const TermOrder& ord) {
  std::vector<OPoly> g;
  std::vector<Pair> pairs;
  std::set<std::pair<std::size_t, std::size_t>> pending;

  auto add = [&](OPoly p) {
    make_monic(p);
    std::size_t k = g.size();
    g.push_back(std::move(p));
    for (std::size_t i = 0; i < k; ++i) {
      if (g[i].zero()) continue;
      const Exponent& a = g[i].lead().e;
      const Exponent& b = g[k].lead().e;
      Exponent l(a.size());
      for (std::size_t t = 0; t < a.size(); ++t) l[t] = std::max(a[t], b[t]);
      long s = std::max(g[i].sugar + degree_of(l) - degree_of(a), g[k].sugar + degree_of(l) - degree_of(b));
      pairs.push_back({i, k, l, ord.key(l), s});
      pending.insert({i, k});
    }
  };

  for (const auto& p : input) {
    if (p.is_zero()) continue;
    OPoly o = from_polynomial(p, ord);
    o = reduce(std::move(o), g, ord);
    if (!o.zero()) add(std::move(o));
  }

  while (!pairs.empty()) {
    std::size_t best = 0;
    for (std::size_t t = 1; t < pairs.size(); ++t) {
      const Pair& a = pairs[t];
      const Pair& b = pairs[best];
      if (a.sugar < b.sugar || (a.sugar == b.sugar && key_less(a.key, b.key))) best = t;
    }
    Pair pr = pairs[best];
    pairs.erase(pairs.begin() + static_cast<long>(best));
    pending.erase({pr.i, pr.j});

    const Exponent& a = g[pr.i].lead().e;
    const Exponent& b = g[pr.j].lead().e;
    bool coprime = true;
    for (std::size_t t = 0; t < a.size(); ++t)
      if (a[t] > 0 && b[t] > 0) {
        coprime = false;
        break;
      }
    if (coprime) continue;
    bool chain = false;
    for (std::size_t k = 0; k < g.size() && !chain; ++k) {
      if (k == pr.i || k == pr.j || g[k].zero()) continue;
      if (!divides(g[k].lead().e, pr.lcm)) continue;
      auto key_of = [](std::size_t x, std::size_t y) { return x < y ? std::make_pair(x, y) : std::make_pair(y, x); };
      if (!pending.count(key_of(pr.i, k)) && !pending.count(key_of(pr.j, k))) chain = true;
    }
    if (chain) continue;

    Exponent sa(a.size()), sb(a.size());
    for (std::size_t t = 0; t < a.size(); ++t) {
      sa[t] = pr.lcm[t] - a[t];
      sb[t] = pr.lcm[t] - b[t];
    }
    OPoly s;
    s.sugar = pr.sugar;
    {
      OPoly gi = g[pr.i];
      auto ka = ord.key(sa);
      for (auto& t : gi.terms) {
        for (std::size_t q = 0; q < t.e.size(); ++q) t.e[q] += sa[q];
        for (std::size_t q = 0; q < t.key.size(); ++q) t.key[q] += ka[q];
      }
      s.terms = sub_shifted(gi.terms, 0, Rational(1), sb, ord.key(sb), g[pr.j]);
    }
    s = reduce(std::move(s), g, ord);
    if (!s.zero()) add(std::move(s));
  }

  // minimalize and interreduce
  std::vector<OPoly> keep;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      if (divides(g[j].lead().e, g[i].lead().e) && (g[j].lead().e != g[i].lead().e || j < i)) redundant = true;
    }
    if (!redundant) keep.push_back(g[i]);
  }
  std::vector<OPoly> out;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    std::vector<OPoly> others;
    for (std::size_t j = 0; j < keep.size(); ++j)
      if (j != i) others.push_back(keep[j]);
    OPoly head;
    head.terms.push_back(keep[i].terms.front());
    OPoly tail;
    tail.terms.assign(keep[i].terms.begin() + 1, keep[i].terms.end());
    tail = reduce(std::move(tail), others, ord);
    head.terms.insert(head.terms.end(), tail.terms.begin(), tail.terms.end());
    head.sugar = keep[i].sugar;
    make_monic(head);
    out.push_back(std::move(head));
  }
  std::sort(out.begin(), out.end(), [](const OPoly& x, const OPoly& y) { return key_less(x.lead().key, y.lead().key); });
  return out;
}

}  // namespace gb

/// Reduced, monic Gröbner basis, sorted by leading monomial ascending.
inline std::vector<Polynomial> groebner_basis(const std::vector<Polynomial>& gens, const TermOrder& order) {
  std::size_t n = order.nvars();
  for (const auto& g : gens)
    if (g.nvars() != n) throw Error(ErrorCode::DimensionMismatch, "generator ring differs from term order");
  auto basis = gb::buchberger(gens, order);
  std::vector<Polynomial> out;
  for (const auto& b : basis) out.push_back(gb::to_polynomial(b, n));
  return out;
}

/// Normal form of f modulo a Gröbner basis.
inline Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis, const TermOrder& order) {
  std::vector<gb::OPoly> g;
  for (const auto& b : basis) g.push_back(gb::from_polynomial(b, order));
  return gb::to_polynomial(gb::reduce(gb::from_polynomial(f, order), g, order), order.nvars());
}

inline Polynomial leading_term(const Polynomial& f, const TermOrder& order) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "leading term of zero");
  auto o = gb::from_polynomial(f, order);
  return Polynomial::monomial(o.lead().e, o.lead().c);
}

// ---------------------------------------------------------------- ideals

/// Finitely generated ideal with named variables and optional multigrading
/// (one grading row per variable).
class PolynomialIdeal {
 public:
  PolynomialIdeal() = default;
  PolynomialIdeal(std::vector<std::string> variables, std::vector<Polynomial> generators,
                  std::optional<IntMatrix> grading = std::nullopt)
      : variables_(std::move(variables)), grading_(std::move(grading)) {
    for (auto& g : generators) {
      if (g.nvars() != variables_.size()) throw Error(ErrorCode::DimensionMismatch, "generator ring differs from ideal ring");
      if (!g.is_zero()) generators_.push_back(std::move(g));
    }
    if (grading_) {
      if (grading_->rows() != variables_.size())
        throw Error(ErrorCode::DimensionMismatch, "grading needs one row per variable");
      for (const auto& g : generators_)
        if (!g.is_homogeneous(*grading_)) throw Error(ErrorCode::InvalidInput, "generator is not homogeneous for the grading");
    }
  }

  const std::vector<std::string>& variables() const { return variables_; }
  const std::vector<Polynomial>& generators() const { return generators_; }
  const std::optional<IntMatrix>& grading() const { return grading_; }
  std::size_t nvars() const { return variables_.size(); }
  bool is_zero() const { return generators_.empty(); }

  PolynomialIdeal with_generators(std::vector<Polynomial> gens) const {
    PolynomialIdeal r;
    r.variables_ = variables_;
    for (auto& g : gens)
      if (!g.is_zero()) r.generators_.push_back(std::move(g));
    if (grading_) {
      bool ok = true;
      for (const auto& g : r.generators_)
        if (!g.is_homogeneous(*grading_)) ok = false;
      if (ok) r.grading_ = grading_;
    }
    return r;
  }

  PolynomialIdeal with_grading(const IntMatrix& grading) const {
    return PolynomialIdeal(variables_, generators_, grading);
  }

 private:
  std::vector<std::string> variables_;
  std::vector<Polynomial> generators_;
  std::optional<IntMatrix> grading_;
};

namespace alg {

inline bool all_standard_homogeneous(const std::vector<Polynomial>& gens) {
  return std::all_of(gens.begin(), gens.end(), [](const Polynomial& p) { return p.is_standard_homogeneous(); });
}

inline Polynomial homogenize(const Polynomial& p) {
  std::size_t n = p.nvars();
  long d = p.total_degree();
  Polynomial h(n + 1);
  for (const auto& [e, c] : p.terms()) {
    Exponent f = e;
    f.push_back(d - gb::degree_of(e));
    h.add_term(f, c);
  }
  return h;
}

inline Polynomial dehomogenize(const Polynomial& h) {
  std::size_t n = h.nvars() - 1;
  Polynomial p(n);
  for (const auto& [e, c] : h.terms()) p.add_term(Exponent(e.begin(), e.begin() + static_cast<long>(n)), c);
  return p;
}

inline IntVec integral_weight(const RatVec& w) {
  Int den = 1;
  for (const auto& x : w) den = exact::lcm(den, x.get_den());
  IntVec out;
  for (const auto& x : w) out.push_back(Rational(x * den).get_num());
  return out;
}

}  // namespace alg

inline std::vector<Polynomial> reduced_basis(const PolynomialIdeal& I) {
  return groebner_basis(I.generators(), TermOrder::grevlex(I.nvars()));
}

/// Ideal with its reduced grevlex basis as generators.
inline PolynomialIdeal canonical(const PolynomialIdeal& I) { return I.with_generators(reduced_basis(I)); }

inline bool ideal_equals(const PolynomialIdeal& a, const PolynomialIdeal& b) {
  if (a.nvars() != b.nvars()) throw Error(ErrorCode::DimensionMismatch, "ideals in different rings");
  return reduced_basis(a) == reduced_basis(b);
}

inline bool ideal_contains(const PolynomialIdeal& I, const Polynomial& f) {
  auto basis = reduced_basis(I);
  return normal_form(f, basis, TermOrder::grevlex(I.nvars())).is_zero();
}

inline bool is_unit_ideal(const PolynomialIdeal& I) {
  auto basis = reduced_basis(I);
  return basis.size() == 1 && basis.front() == Polynomial(I.nvars(), Rational(1));
}

/// Terms minimizing ⟨w, α⟩.
inline Polynomial initial_form(const Polynomial& f, const RatVec& w) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "initial form of zero");
  if (w.size() != f.nvars()) throw Error(ErrorCode::DimensionMismatch, "weight has wrong length");
  std::optional<Rational> best;
  for (const auto& [e, c] : f.terms()) {
    Rational v = 0;
    for (std::size_t i = 0; i < e.size(); ++i) v += w[i] * e[i];
    if (!best || v < *best) best = v;
  }
  Polynomial out(f.nvars());
  for (const auto& [e, c] : f.terms()) {
    Rational v = 0;
    for (std::size_t i = 0; i < e.size(); ++i) v += w[i] * e[i];
    if (v == *best) out.add_term(e, c);
  }
  return out;
}

namespace alg {

// Initial forms of a Gröbner basis for the w-refined order of a
// standard-homogeneous generating set.
inline std::vector<Polynomial> homogeneous_initial_forms(const std::vector<Polynomial>& gens, const RatVec& w) {
  std::size_t n = w.size();
  IntVec iw = integral_weight(w);
  Int top = 0;
  for (const auto& x : iw) top = std::max(top, x);
  IntVec row(n);
  for (std::size_t i = 0; i < n; ++i) row[i] = top + 1 - iw[i];
  auto basis = groebner_basis(gens, TermOrder::weighted(n, {row}));
  std::vector<Polynomial> out;
  for (const auto& g : basis) out.push_back(initial_form(g, w));
  return out;
}

}  // namespace alg

/// in_w(I), min convention; returned with a reduced grevlex basis.
/// Non-homogeneous ideals pass through the homogenization with weight 0 on
/// the extra variable.
inline PolynomialIdeal initial_ideal(const PolynomialIdeal& I, const RatVec& w) {
  if (w.size() != I.nvars()) throw Error(ErrorCode::DimensionMismatch, "weight has wrong length");
  if (I.is_zero()) return I;
  std::vector<Polynomial> forms;
  if (alg::all_standard_homogeneous(I.generators())) {
    forms = alg::homogeneous_initial_forms(I.generators(), w);
  } else {
    std::vector<Polynomial> hom;
    for (const auto& g : reduced_basis(I)) hom.push_back(alg::homogenize(g));
    RatVec wh = w;
    wh.emplace_back(0);
    for (const auto& f : alg::homogeneous_initial_forms(hom, wh)) forms.push_back(alg::dehomogenize(f));
  }
  return canonical(I.with_generators(forms));
}

/// I : m^∞.
inline PolynomialIdeal saturate(const PolynomialIdeal& I, const Exponent& m) {
  const std::size_t n = I.nvars();
  if (m.size() != n) throw Error(ErrorCode::DimensionMismatch, "monomial has wrong length");
  if (I.is_zero()) return I;
  if (alg::all_standard_homogeneous(I.generators())) {
    // one variable at a time, with that variable cheapest in grevlex
    std::vector<Polynomial> gens = I.generators();
    for (std::size_t v = 0; v < n; ++v) {
      if (m[v] == 0) continue;
      auto basis = groebner_basis(gens, TermOrder::grevlex_last(n, v));
      gens.clear();
      for (const auto& g : basis) {
        long low = -1;
        for (const auto& [e, c] : g.terms()) low = low < 0 ? e[v] : std::min(low, e[v]);
        Polynomial q(n);
        for (const auto& [e, c] : g.terms()) {
          Exponent f = e;
          f[v] -= low;
          q.add_term(f, c);
        }
        gens.push_back(std::move(q));
      }
    }
    return canonical(I.with_generators(gens));
  }
  // extra variable z with z·m − 1, then eliminate z
  std::vector<std::size_t> map(n);
  for (std::size_t i = 0; i < n; ++i) map[i] = i;
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) gens.push_back(g.remap(n + 1, map));
  Exponent zm(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) zm[i] = m[i];
  zm[n] = 1;
  gens.push_back(Polynomial::monomial(zm) - Polynomial(n + 1, Rational(1)));
  IntVec row(n + 1, Int(0));
  row[n] = 1;
  auto basis = groebner_basis(gens, TermOrder::weighted(n + 1, {row}));
  std::vector<Polynomial> kept;
  for (const auto& g : basis) {
    bool free = true;
    for (const auto& [e, c] : g.terms())
      if (e[n] != 0) free = false;
    if (free) kept.push_back(alg::dehomogenize(g));
  }
  return canonical(I.with_generators(kept));
}

inline Exponent all_variables(std::size_t n) { return Exponent(n, 1); }

/// True iff I contains a monomial, i.e. I : (x₁⋯xₙ)^∞ = ⟨1⟩.
inline bool contains_monomial(const PolynomialIdeal& I) {
  if (I.is_zero()) return false;
  return is_unit_ideal(saturate(I, all_variables(I.nvars())));
}

/// Vanishing ideal of y_i ↦ targets[i] modulo an ideal of the source ring.
/// Targets may be Laurent; source variables occurring with negative
/// exponents get an inverse variable.
inline PolynomialIdeal algebra_map_kernel(const std::vector<std::string>& target_names,
                                          const std::vector<Polynomial>& targets,
                                          const std::vector<Polynomial>& modulo, std::size_t source_vars) {
  const std::size_t r = targets.size();
  if (target_names.size() != r) throw Error(ErrorCode::DimensionMismatch, "one name per target expression");
  for (const auto& t : targets)
    if (t.nvars() != source_vars) throw Error(ErrorCode::DimensionMismatch, "target expression ring mismatch");
  for (const auto& t : modulo)
    if (t.nvars() != source_vars) throw Error(ErrorCode::DimensionMismatch, "modulo ideal ring mismatch");

  std::vector<bool> needs_inverse(source_vars, false);
  for (const auto* list : {&targets, &modulo})
    for (const auto& t : *list)
      for (const auto& [e, c] : t.terms())
        for (std::size_t i = 0; i < source_vars; ++i)
          if (e[i] < 0) needs_inverse[i] = true;
  std::vector<std::size_t> inv_slot(source_vars, 0);
  std::size_t total = r + source_vars;
  for (std::size_t i = 0; i < source_vars; ++i)
    if (needs_inverse[i]) inv_slot[i] = total++;

  auto lift = [&](const Polynomial& p) {
    Polynomial q(total);
    for (const auto& [e, c] : p.terms()) {
      Exponent f(total, 0);
      for (std::size_t i = 0; i < source_vars; ++i) {
        if (e[i] >= 0)
          f[r + i] = e[i];
        else
          f[inv_slot[i]] = -e[i];
      }
      q.add_term(f, c);
    }
    return q;
  };

  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < r; ++i) gens.push_back(Polynomial::variable(total, i) - lift(targets[i]));
  for (const auto& m : modulo) gens.push_back(lift(m));
  for (std::size_t i = 0; i < source_vars; ++i)
    if (needs_inverse[i])
      gens.push_back(Polynomial::variable(total, r + i) * Polynomial::variable(total, inv_slot[i]) -
                     Polynomial(total, Rational(1)));

  IntVec row(total, Int(0));
  for (std::size_t i = r; i < total; ++i) row[i] = 1;
  auto basis = groebner_basis(gens, TermOrder::weighted(total, {row}));
  std::vector<Polynomial> kept;
  for (const auto& g : basis) {
    bool free = true;
    for (const auto& [e, c] : g.terms())
      for (std::size_t i = r; i < total; ++i)
        if (e[i] != 0) free = false;
    if (!free) continue;
    Polynomial p(r);
    for (const auto& [e, c] : g.terms()) p.add_term(Exponent(e.begin(), e.begin() + static_cast<long>(r)), c);
    kept.push_back(std::move(p));
  }
  return canonical(PolynomialIdeal(target_names, kept));
}

// ---------------------------------------------------------------- binomial primality

enum class Certificate { Prime, NotCertified };

struct BinomialPrimality {
  Certificate verdict = Certificate::NotCertified;
  bool refuted = false;  // non-primality proven
  std::string reason;
};

inline const char* to_string(Certificate c) { return c == Certificate::Prime ? "PRIME" : "NOT_CERTIFIED"; }

/// Binomial ideals over ℂ: with no monomial in I, I is prime iff I equals
/// its saturation by the variables and the exponent lattice is saturated.
inline BinomialPrimality is_binomial_prime(const PolynomialIdeal& I) {
  for (const auto& g : I.generators())
    if (g.size() > 2) throw Error(ErrorCode::NotBinomial, "generator with more than two terms");
  BinomialPrimality out;
  if (I.is_zero()) {
    out.verdict = Certificate::Prime;
    out.reason = "zero ideal";
    return out;
  }
  if (is_unit_ideal(I)) {
    out.refuted = true;
    out.reason = "unit ideal";
    return out;
  }
  PolynomialIdeal sat = saturate(I, all_variables(I.nvars()));
  if (is_unit_ideal(sat)) {
    out.reason = "ideal contains a monomial";
    return out;
  }
  if (!ideal_equals(I, sat)) {
    out.refuted = true;
    out.reason = "not saturated with respect to the variables";
    return out;
  }
  std::vector<IntVec> diffs;
  for (const auto& g : reduced_basis(sat)) {
    if (g.size() != 2) {
      out.reason = "saturation has a non-binomial generator";
      return out;
    }
    auto it = g.terms().begin();
    const Exponent& a = it->first;
    const Exponent& b = std::next(it)->first;
    IntVec d;
    for (std::size_t i = 0; i < a.size(); ++i) d.emplace_back(a[i] - b[i]);
    diffs.push_back(std::move(d));
  }
  if (!exact::is_saturated(diffs, I.nvars())) {
    out.refuted = true;
    out.reason = "exponent lattice is not saturated";
    return out;
  }
  out.verdict = Certificate::Prime;
  out.reason = "saturated lattice ideal";
  return out;
}

/// Toric ideal of the monomial map x_i ↦ t^{columns[i]}: lattice binomials
/// saturated by the product of the variables.
inline PolynomialIdeal toric_ideal(const std::vector<std::string>& names, const std::vector<IntVec>& columns) {
  const std::size_t k = columns.size();
  if (names.size() != k) throw Error(ErrorCode::DimensionMismatch, "one name per column");
  if (k == 0) return PolynomialIdeal(names, {});
  const std::size_t d = columns.front().size();
  IntMatrix a = IntMatrix::from_columns(columns, d);
  std::vector<Polynomial> gens;
  for (const auto& b : exact::kernel_lattice(a)) {
    Exponent plus(k, 0), minus(k, 0);
    for (std::size_t i = 0; i < k; ++i) {
      long x = b[i].get_si();
      if (x > 0) plus[i] = x;
      else minus[i] = -x;
    }
    gens.push_back(Polynomial::monomial(plus) - Polynomial::monomial(minus));
  }
  return saturate(PolynomialIdeal(names, gens), all_variables(k));
}

// ---------------------------------------------------------------- linear ideals

namespace alg {

// Coefficient vector (constant term first) of a polynomial of degree ≤ 1.
inline RatVec linear_coefficients(const Polynomial& f) {
  RatVec v(f.nvars() + 1, Rational(0));
  for (const auto& [e, c] : f.terms()) {
    long d = gb::degree_of(e);
    bool neg = std::any_of(e.begin(), e.end(), [](long x) { return x < 0; });
    if (d > 1 || neg) throw Error(ErrorCode::InvalidInput, "expected a linear form");
    if (d == 0) {
      v[0] = c;
      continue;
    }
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] == 1) v[i + 1] = c;
  }
  return v;
}

inline Polynomial from_linear_coefficients(const IntVec& v, std::size_t n) {
  Polynomial p(n, Rational(v[0]));
  for (std::size_t i = 0; i < n; ++i)
    if (v[i + 1] != 0) p.add_term(Polynomial::variable(n, i).terms().begin()->first, Rational(v[i + 1]));
  return p;
}

inline bool is_linear(const Polynomial& f) {
  for (const auto& [e, c] : f.terms()) {
    if (gb::degree_of(e) > 1) return false;
    for (long x : e)
      if (x < 0) return false;
  }
  return true;
}

}  // namespace alg

/// Support-minimal elements of the span of the forms (the constant term is
/// coordinate 0), with coprime integer coefficients, ordered by support.
inline std::vector<Polynomial> circuits(const std::vector<Polynomial>& forms) {
  if (forms.empty()) return {};
  const std::size_t n = forms.front().nvars();
  std::vector<RatVec> rows;
  for (const auto& f : forms) {
    if (f.nvars() != n) throw Error(ErrorCode::DimensionMismatch, "forms in different rings");
    rows.push_back(alg::linear_coefficients(f));
  }
  const std::size_t k = n + 1;
  std::vector<RatVec> basis = rows;
  exact::rref(basis, k);
  const std::size_t r = basis.size();
  if (r == 0) return {};

  std::vector<Polynomial> out;
  // supports by increasing size, then lexicographically
  for (std::size_t size = 1; size <= k; ++size) {
    std::vector<bool> pick(k, false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(size), true);
    do {
      // λ with (λ·basis)_j = 0 outside the support
      std::vector<RatVec> cons;
      for (std::size_t j = 0; j < k; ++j) {
        if (pick[j]) continue;
        RatVec c(r);
        for (std::size_t i = 0; i < r; ++i) c[i] = basis[i][j];
        cons.push_back(std::move(c));
      }
      auto ns = cons.empty() ? std::vector<RatVec>{} : exact::nullspace(cons, r);
      if (cons.empty()) {
        for (std::size_t i = 0; i < r; ++i) {
          RatVec e(r, Rational(0));
          e[i] = 1;
          ns.push_back(e);
        }
      }
      if (ns.size() != 1) continue;
      RatVec v(k, Rational(0));
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < k; ++j) v[j] += ns[0][i] * basis[i][j];
      bool full = true;
      for (std::size_t j = 0; j < k; ++j)
        if (pick[j] && v[j] == 0) full = false;
      if (!full) continue;
      IntVec iv = exact::primitive(v);
      for (std::size_t j = k; j-- > 0;)
        if (iv[j] != 0) {
          if (iv[j] < 0)
            for (auto& x : iv) x = -x;
          break;
        }
      out.push_back(alg::from_linear_coefficients(iv, n));
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return out;
}

// ---------------------------------------------------------------- tropical hypersurfaces

/// A cone of the tropical hypersurface of a single polynomial (min convention).
struct HypersurfaceCone {
  std::vector<Exponent> active;     // exponents attaining the minimum
  std::vector<IntVec> rays;         // extreme rays modulo lineality
  std::vector<IntVec> lineality;
  IntVec representative;            // relative interior point
};

/// All cones of Trop(V(f)): sets of at least two terms that are exactly the
/// minimizing terms for some weight.
inline std::vector<HypersurfaceCone> hypersurface_cones(const Polynomial& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "tropical hypersurface of zero");
  std::vector<Exponent> ex;
  for (const auto& [e, c] : f.terms()) ex.push_back(e);
  const std::size_t t = ex.size(), n = f.nvars();
  std::vector<HypersurfaceCone> out;
  if (t > 20) throw Error(ErrorCode::InvalidInput, "too many terms for subset enumeration");
  auto diff = [&](std::size_t a, std::size_t b) {
    IntVec d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = ex[a][i] - ex[b][i];
    return d;
  };
  for (unsigned long mask = 1; mask < (1ul << t); ++mask) {
    if (__builtin_popcountl(mask) < 2) continue;
    std::vector<std::size_t> in, rest;
    for (std::size_t i = 0; i < t; ++i) ((mask >> i) & 1 ? in : rest).push_back(i);
    std::vector<IntVec> ineqs;
    for (std::size_t i = 1; i < in.size(); ++i) {
      ineqs.push_back(diff(in[i], in[0]));
      ineqs.push_back(diff(in[0], in[i]));
    }
    for (auto j : rest) ineqs.push_back(diff(j, in[0]));
    auto g = poly::cone_from_inequalities(ineqs, n);
    IntVec rep(n, Int(0));
    for (const auto& r : g.rays) rep = exact::add(rep, r);
    Int best = 0;
    bool first = true;
    std::vector<std::size_t> argmin;
    for (std::size_t i = 0; i < t; ++i) {
      Int v = 0;
      for (std::size_t q = 0; q < n; ++q) v += rep[q] * ex[i][q];
      if (first || v < best) {
        best = v;
        argmin = {i};
        first = false;
      } else if (v == best) {
        argmin.push_back(i);
      }
    }
    if (argmin != in) continue;
    HypersurfaceCone c;
    for (auto i : in) c.active.push_back(ex[i]);
    c.rays = g.rays;
    c.lineality = g.lineality;
    c.representative = rep;
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace wp
