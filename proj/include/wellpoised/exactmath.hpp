#pragma once

// Exact integer/rational scalars, vectors and matrices.
//
// Scalars are GMP-backed; every routine here is exact. Integer matrices carry
// the normal forms (Smith, Hermite) that the lattice computations elsewhere
// rely on.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "wellpoised/error.hpp"

namespace wp {

using Int = mpz_class;
using Rational = mpq_class;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rational>;

namespace exact {

inline Rational make_rational(const Int& num, const Int& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Parses "p", "-p" or "p/q" into a canonical rational.
inline Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '\t') s.push_back(c);
  if (s.empty()) throw Error(ErrorCode::Parse, "empty rational literal");
  auto valid_int = [](const std::string& t) {
    std::size_t i = (t.size() > 0 && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  auto strip_plus = [](std::string t) {
    if (!t.empty() && t[0] == '+') t.erase(0, 1);
    return t;
  };
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!valid_int(s)) throw Error(ErrorCode::Parse, "bad rational literal '" + text + "'");
    return Rational(Int(strip_plus(s)));
  }
  std::string num = s.substr(0, slash), den = s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den))
    throw Error(ErrorCode::Parse, "bad rational literal '" + text + "'");
  Int d(strip_plus(den));
  if (d == 0) throw Error(ErrorCode::Parse, "zero denominator in '" + text + "'");
  return make_rational(Int(strip_plus(num)), d);
}

inline std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

inline std::string to_string(const Int& z) { return z.get_str(); }

inline Int floor(const Rational& q) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline Int ceil(const Rational& q) {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

inline Int content(const IntVec& v) {
  Int g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g;
}

inline bool is_zero(const IntVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

inline bool is_zero(const RatVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

/// Divides out the content; the zero vector is returned unchanged.
inline IntVec primitive(IntVec v) {
  Int g = content(v);
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

/// Positive rescaling of a rational vector to a primitive integer vector.
inline IntVec primitive(const RatVec& v) {
  Int den = 1;
  for (const auto& x : v) den = lcm(den, x.get_den());
  IntVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rational(v[i] * den).get_num();
  return primitive(std::move(out));
}

inline RatVec to_rational(const IntVec& v) {
  RatVec out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

inline IntVec int_vec(std::initializer_list<long> xs) {
  IntVec out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

inline RatVec rat_vec(std::initializer_list<long> xs) {
  RatVec out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

inline Int dot(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "dot product of unequal lengths");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Rational dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "dot product of unequal lengths");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Rational dot(const IntVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "dot product of unequal lengths");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += Rational(a[i]) * b[i];
  return s;
}

inline Rational dot(const RatVec& a, const IntVec& b) { return dot(b, a); }

template <class V>
V add(const V& a, const V& b) {
  V out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

template <class V>
V sub(const V& a, const V& b) {
  V out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
  return out;
}

template <class V, class S>
V scale(const V& a, const S& s) {
  V out(a);
  for (auto& x : out) x *= s;
  return out;
}

inline std::string to_string(const IntVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

inline std::string to_string(const RatVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += to_string(v[i]);
  }
  return s + ")";
}

}  // namespace exact

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols, Int(0)) {}
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
      throw Error(ErrorCode::DimensionMismatch, "IntMatrix entry count does not match shape");
  }
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    for (const auto& r : rows) {
      if (r.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "ragged IntMatrix literal");
      for (long x : r) entries_.emplace_back(x);
    }
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static IntMatrix from_rows(const std::vector<IntVec>& rows, std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw Error(ErrorCode::DimensionMismatch, "row length mismatch");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static IntMatrix from_columns(const std::vector<IntVec>& cols, std::size_t rows) {
    IntMatrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != rows) throw Error(ErrorCode::DimensionMismatch, "column length mismatch");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::vector<Int>& entries() const { return entries_; }

  Int& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  IntVec row(std::size_t i) const {
    return IntVec(entries_.begin() + static_cast<long>(i * cols_), entries_.begin() + static_cast<long>((i + 1) * cols_));
  }

  IntVec col(std::size_t j) const {
    IntVec c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  std::vector<IntVec> row_list() const {
    std::vector<IntVec> out;
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
    return out;
  }

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  IntVec apply(const IntVec& v) const {
    if (v.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "matrix-vector shape mismatch");
    IntVec out(rows_, Int(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  RatVec apply(const RatVec& v) const {
    if (v.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "matrix-vector shape mismatch");
    RatVec out(rows_, Rational(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i] += Rational((*this)(i, j)) * v[j];
    return out;
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Int& x = a(i, k);
        if (x == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += x * b(k, j);
      }
    return c;
  }

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

  bool is_identity() const { return rows_ == cols_ && *this == identity(rows_); }

  bool is_diagonal() const {
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (i != j && (*this)(i, j) != 0) return false;
    return true;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  // row[dst] += k * row[src]
  void add_row(std::size_t dst, std::size_t src, const Int& k) {
    if (k == 0) return;
    for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += k * (*this)(src, j);
  }
  void add_col(std::size_t dst, std::size_t src, const Int& k) {
    if (k == 0) return;
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += k * (*this)(i, src);
  }
  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
  }

  /// Rows [r0, r1) and columns [c0, c1).
  IntMatrix block(std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) const {
    IntMatrix b(r1 - r0, c1 - c0);
    for (std::size_t i = r0; i < r1; ++i)
      for (std::size_t j = c0; j < c1; ++j) b(i - r0, j - c0) = (*this)(i, j);
    return b;
  }

  void set_block(std::size_t r0, std::size_t c0, const IntMatrix& b) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> entries_;
};

inline std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) os << ",";
    os << exact::to_string(m.row(i));
  }
  return os << "]";
}

namespace exact {

/// Fraction-free (Bareiss) determinant.
inline Int determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorCode::DimensionMismatch, "determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), prev.get_mpz_t());
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

/// Reduced row echelon form over the rationals; returns pivot columns.
inline std::vector<std::size_t> rref(std::vector<RatVec>& rows, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    Rational inv = 1 / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rational f = rows[i][c];
      for (std::size_t j = c; j < ncols; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

inline std::size_t rank(std::vector<RatVec> rows) {
  if (rows.empty()) return 0;
  return rref(rows, rows.front().size()).size();
}

inline std::size_t rank(const std::vector<IntVec>& rows) {
  std::vector<RatVec> r;
  for (const auto& v : rows) r.push_back(to_rational(v));
  return rank(std::move(r));
}

inline std::size_t rank(const IntMatrix& m) { return rank(m.row_list()); }

/// Basis of {x : rows · x = 0} over the rationals.
inline std::vector<RatVec> nullspace(std::vector<RatVec> rows, std::size_t ncols) {
  auto pivots = rref(rows, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<RatVec> basis;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    RatVec v(ncols, Rational(0));
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -rows[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Solves A x = b (A given by rows); nullopt if inconsistent.
inline std::optional<RatVec> solve(const std::vector<RatVec>& a, const RatVec& b, std::size_t ncols) {
  std::vector<RatVec> aug;
  for (std::size_t i = 0; i < a.size(); ++i) {
    RatVec r = a[i];
    r.push_back(b[i]);
    aug.push_back(std::move(r));
  }
  auto pivots = rref(aug, ncols + 1);
  if (!pivots.empty() && pivots.back() == ncols) return std::nullopt;
  RatVec x(ncols, Rational(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug[i][ncols];
  return x;
}

struct SmithForm {
  IntMatrix d;
  IntMatrix u;
  IntMatrix v;
};

/// U·A·V = D with D diagonal, d_i | d_{i+1}, U and V unimodular.
/// Pivot: smallest absolute value among the remaining nonzero entries.
inline SmithForm smith_normal_form(const IntMatrix& a) {
  const std::size_t r = a.rows(), c = a.cols();
  IntMatrix d = a, u = IntMatrix::identity(r), v = IntMatrix::identity(c);
  const std::size_t n = std::min(r, c);

  auto move_min_to = [&](std::size_t t, std::size_t i0, std::size_t j0) {
    bool found = false;
    std::size_t bi = 0, bj = 0;
    Int best;
    for (std::size_t i = i0; i < r; ++i)
      for (std::size_t j = j0; j < c; ++j) {
        if (d(i, j) == 0) continue;
        Int ab = abs(d(i, j));
        if (!found || ab < best) {
          found = true;
          best = ab;
          bi = i;
          bj = j;
        }
      }
    if (!found) return false;
    d.swap_rows(t, bi);
    u.swap_rows(t, bi);
    d.swap_cols(t, bj);
    v.swap_cols(t, bj);
    return true;
  };

  for (std::size_t t = 0; t < n; ++t) {
    if (!move_min_to(t, t, t)) break;
    while (true) {
      bool clean = true;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (d(i, t) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), d(i, t).get_mpz_t(), d(t, t).get_mpz_t());
        d.add_row(i, t, -q);
        u.add_row(i, t, -q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (d(t, j) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), d(t, j).get_mpz_t(), d(t, t).get_mpz_t());
        d.add_col(j, t, -q);
        v.add_col(j, t, -q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) {
        // bring the smallest remainder in row t / column t to the pivot
        std::size_t bi = t, bj = t;
        Int best = abs(d(t, t));
        for (std::size_t i = t + 1; i < r; ++i)
          if (d(i, t) != 0 && abs(d(i, t)) < best) best = abs(d(i, t)), bi = i, bj = t;
        for (std::size_t j = t + 1; j < c; ++j)
          if (d(t, j) != 0 && abs(d(t, j)) < best) best = abs(d(t, j)), bi = t, bj = j;
        d.swap_rows(t, bi);
        u.swap_rows(t, bi);
        d.swap_cols(t, bj);
        v.swap_cols(t, bj);
        continue;
      }
      bool divides = true;
      for (std::size_t i = t + 1; i < r && divides; ++i)
        for (std::size_t j = t + 1; j < c; ++j) {
          Int rem;
          mpz_fdiv_r(rem.get_mpz_t(), d(i, j).get_mpz_t(), d(t, t).get_mpz_t());
          if (rem != 0) {
            d.add_row(t, i, 1);
            u.add_row(t, i, 1);
            divides = false;
            break;
          }
        }
      if (divides) break;
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      u.negate_row(t);
    }
  }
  return {d, u, v};
}

struct HermiteForm {
  IntMatrix h;
  IntMatrix u;
};

/// Row-style Hermite normal form: U·A = H, U unimodular, H in echelon form
/// with positive pivots and entries above each pivot reduced into [0, pivot).
inline HermiteForm hermite_normal_form(const IntMatrix& a) {
  const std::size_t r = a.rows(), c = a.cols();
  IntMatrix h = a, u = IntMatrix::identity(r);
  std::size_t p = 0;
  for (std::size_t col = 0; col < c && p < r; ++col) {
    while (true) {
      std::size_t best = r;
      for (std::size_t i = p; i < r; ++i)
        if (h(i, col) != 0 && (best == r || abs(h(i, col)) < abs(h(best, col)))) best = i;
      if (best == r) break;
      h.swap_rows(p, best);
      u.swap_rows(p, best);
      bool done = true;
      for (std::size_t i = p + 1; i < r; ++i) {
        if (h(i, col) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), h(i, col).get_mpz_t(), h(p, col).get_mpz_t());
        h.add_row(i, p, -q);
        u.add_row(i, p, -q);
        if (h(i, col) != 0) done = false;
      }
      if (done) break;
    }
    if (h(p, col) == 0) continue;
    if (h(p, col) < 0) {
      h.negate_row(p);
      u.negate_row(p);
    }
    for (std::size_t i = 0; i < p; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), h(i, col).get_mpz_t(), h(p, col).get_mpz_t());
      h.add_row(i, p, -q);
      u.add_row(i, p, -q);
    }
    ++p;
  }
  return {h, u};
}

/// Canonical (Hermite-reduced) basis of the lattice spanned by the given vectors.
inline std::vector<IntVec> lattice_basis(const std::vector<IntVec>& gens, std::size_t dim) {
  if (gens.empty()) return {};
  auto hnf = hermite_normal_form(IntMatrix::from_rows(gens, dim));
  std::vector<IntVec> out;
  for (std::size_t i = 0; i < hnf.h.rows(); ++i) {
    IntVec row = hnf.h.row(i);
    if (!is_zero(row)) out.push_back(std::move(row));
  }
  return out;
}

/// Saturated lattice basis of {v ∈ ℤⁿ : A·v = 0}, Hermite-reduced.
inline std::vector<IntVec> kernel_lattice(const IntMatrix& a) {
  auto snf = smith_normal_form(a);
  std::size_t rk = 0;
  for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i)
    if (snf.d(i, i) != 0) ++rk;
  std::vector<IntVec> basis;
  for (std::size_t j = rk; j < a.cols(); ++j) basis.push_back(snf.v.col(j));
  return lattice_basis(basis, a.cols());
}

/// True iff the lattice spanned by the vectors equals its saturation
/// (all nonzero Smith invariants equal 1).
inline bool is_saturated(const std::vector<IntVec>& gens, std::size_t dim) {
  if (gens.empty()) return true;
  auto snf = smith_normal_form(IntMatrix::from_rows(gens, dim));
  for (std::size_t i = 0; i < std::min(snf.d.rows(), snf.d.cols()); ++i)
    if (snf.d(i, i) != 0 && snf.d(i, i) != 1) return false;
  return true;
}

/// Inverse of a unimodular matrix (throws if |det| != 1).
inline IntMatrix unimodular_inverse(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorCode::DimensionMismatch, "inverse of non-square matrix");
  auto det = determinant(a);
  if (det != 1 && det != -1) throw Error(ErrorCode::InvalidInput, "matrix is not unimodular");
  const std::size_t n = a.rows();
  std::vector<RatVec> aug;
  for (std::size_t i = 0; i < n; ++i) {
    RatVec row = to_rational(a.row(i));
    for (std::size_t j = 0; j < n; ++j) row.emplace_back(i == j ? 1 : 0);
    aug.push_back(std::move(row));
  }
  rref(aug, 2 * n);
  IntMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug[i][n + j].get_num();
  return inv;
}

}  // namespace exact
}  // namespace wp
