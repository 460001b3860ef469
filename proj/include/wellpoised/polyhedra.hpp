#pragma once

// Rational cones and tail-cone polyhedra.
//
// Cones are kept as primitive integer generators. Conversion between
// generator and inequality form goes through a double description routine
// that tracks the lineality space explicitly.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "wellpoised/error.hpp"
#include "wellpoised/exactmath.hpp"

namespace wp {

/// Positive hull of finitely many integer vectors.
class RationalCone {
 public:
  RationalCone() = default;
  RationalCone(std::size_t dim, const std::vector<IntVec>& gens) : dim_(dim) {
    std::set<IntVec> seen;
    for (const auto& g : gens) {
      if (g.size() != dim) throw Error(ErrorCode::DimensionMismatch, "cone generator has wrong length");
      if (exact::is_zero(g)) continue;
      IntVec p = exact::primitive(g);
      if (seen.insert(p).second) gens_.push_back(std::move(p));
    }
  }

  static RationalCone from_rational(std::size_t dim, const std::vector<RatVec>& gens) {
    std::vector<IntVec> ints;
    for (const auto& g : gens) ints.push_back(exact::primitive(g));
    return RationalCone(dim, ints);
  }

  static RationalCone zero(std::size_t dim) { return RationalCone(dim, {}); }

  static RationalCone orthant(std::size_t dim) {
    std::vector<IntVec> g;
    for (std::size_t i = 0; i < dim; ++i) {
      IntVec e(dim, Int(0));
      e[i] = 1;
      g.push_back(std::move(e));
    }
    return RationalCone(dim, g);
  }

  std::size_t dim() const { return dim_; }
  const std::vector<IntVec>& generators() const { return gens_; }

 private:
  std::size_t dim_ = 0;
  std::vector<IntVec> gens_;
};

/// Result of converting {x : ⟨a, x⟩ ≥ 0 for all a} into generator form.
struct ConeGenerators {
  std::vector<IntVec> rays;       // extreme rays modulo the lineality space
  std::vector<IntVec> lineality;  // basis of the lineality space
};

namespace poly {

inline bool lex_less(const IntVec& a, const IntVec& b) { return a < b; }

/// Double description with explicit lineality.
inline ConeGenerators cone_from_inequalities(const std::vector<IntVec>& ineqs, std::size_t dim) {
  std::vector<IntVec> lin;
  for (std::size_t i = 0; i < dim; ++i) {
    IntVec e(dim, Int(0));
    e[i] = 1;
    lin.push_back(std::move(e));
  }
  std::vector<IntVec> rays;
  std::vector<const IntVec*> done;

  for (const auto& a : ineqs) {
    if (a.size() != dim) throw Error(ErrorCode::DimensionMismatch, "inequality has wrong length");
    if (exact::is_zero(a)) continue;

    std::size_t li = lin.size();
    for (std::size_t i = 0; i < lin.size(); ++i)
      if (exact::dot(a, lin[i]) != 0) {
        li = i;
        break;
      }

    if (li < lin.size()) {
      IntVec l0 = lin[li];
      Int s0 = exact::dot(a, l0);
      if (s0 < 0) {
        for (auto& x : l0) x = -x;
        s0 = -s0;
      }
      std::vector<IntVec> nlin;
      for (std::size_t i = 0; i < lin.size(); ++i) {
        if (i == li) continue;
        Int s = exact::dot(a, lin[i]);
        nlin.push_back(exact::primitive(exact::sub(exact::scale(lin[i], s0), exact::scale(l0, s))));
      }
      for (auto& r : rays) {
        Int s = exact::dot(a, r);
        r = exact::primitive(exact::sub(exact::scale(r, s0), exact::scale(l0, s)));
      }
      rays.push_back(exact::primitive(l0));
      lin = std::move(nlin);
      done.push_back(&a);
      continue;
    }

    std::vector<Int> val(rays.size());
    for (std::size_t i = 0; i < rays.size(); ++i) val[i] = exact::dot(a, rays[i]);

    // zero sets over the inequalities processed so far
    std::vector<std::vector<bool>> zero(rays.size(), std::vector<bool>(done.size()));
    for (std::size_t i = 0; i < rays.size(); ++i)
      for (std::size_t k = 0; k < done.size(); ++k) zero[i][k] = exact::dot(*done[k], rays[i]) == 0;

    std::vector<IntVec> next;
    for (std::size_t i = 0; i < rays.size(); ++i)
      if (val[i] >= 0) next.push_back(rays[i]);
    for (std::size_t p = 0; p < rays.size(); ++p) {
      if (val[p] <= 0) continue;
      for (std::size_t n = 0; n < rays.size(); ++n) {
        if (val[n] >= 0) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r == p || r == n) continue;
          bool covers = true;
          for (std::size_t k = 0; k < done.size(); ++k)
            if (zero[p][k] && zero[n][k] && !zero[r][k]) {
              covers = false;
              break;
            }
          if (covers) adjacent = false;
        }
        if (!adjacent) continue;
        next.push_back(exact::primitive(exact::sub(exact::scale(rays[n], val[p]), exact::scale(rays[p], val[n]))));
      }
    }
    std::set<IntVec> seen;
    rays.clear();
    for (auto& r : next)
      if (!exact::is_zero(r) && seen.insert(r).second) rays.push_back(std::move(r));
    done.push_back(&a);
  }

  std::sort(rays.begin(), rays.end());
  return {rays, exact::lattice_basis(lin, dim)};
}

}  // namespace poly

/// {u : ⟨u, v⟩ ≥ 0 for all v ∈ c}; lineality directions appear as ± pairs.
inline RationalCone dual_cone(const RationalCone& c) {
  auto g = poly::cone_from_inequalities(c.generators(), c.dim());
  std::vector<IntVec> gens = g.rays;
  for (const auto& l : g.lineality) {
    gens.push_back(l);
    gens.push_back(exact::scale(l, Int(-1)));
  }
  std::sort(gens.begin(), gens.end());
  return RationalCone(c.dim(), gens);
}

/// Facet description cached for repeated membership tests.
class ConeMembership {
 public:
  explicit ConeMembership(const RationalCone& c) : facets_(dual_cone(c).generators()) {}
  bool contains(const IntVec& x) const {
    for (const auto& f : facets_)
      if (exact::dot(f, x) < 0) return false;
    return true;
  }
  bool contains(const RatVec& x) const {
    for (const auto& f : facets_)
      if (exact::dot(f, x) < 0) return false;
    return true;
  }
  const std::vector<IntVec>& facets() const { return facets_; }

 private:
  std::vector<IntVec> facets_;
};

inline bool contains(const RationalCone& c, const IntVec& x) { return ConeMembership(c).contains(x); }
inline bool contains(const RationalCone& c, const RatVec& x) { return ConeMembership(c).contains(x); }

inline bool is_pointed(const RationalCone& c) {
  return exact::rank(dual_cone(c).generators()) == c.dim();
}

/// Extreme rays of a pointed cone, sorted.
inline std::vector<IntVec> extreme_rays(const RationalCone& c) {
  if (!is_pointed(c)) throw Error(ErrorCode::NotPointed, "extreme rays of a cone containing a line");
  return dual_cone(dual_cone(c)).generators();
}

inline bool same_cone(const RationalCone& a, const RationalCone& b) {
  if (a.dim() != b.dim()) return false;
  ConeMembership ma(a), mb(b);
  for (const auto& g : a.generators())
    if (!mb.contains(g)) return false;
  for (const auto& g : b.generators())
    if (!ma.contains(g)) return false;
  return true;
}

/// Dimension of the linear span.
inline std::size_t cone_dimension(const RationalCone& c) { return exact::rank(c.generators()); }

struct HilbertBasis {
  RationalCone cone;
  std::vector<IntVec> elements;
};

namespace poly {

// Simplicial cones (index lists into rays) covering cone(rays), by pulling
// the first ray against every facet that misses it.
inline std::vector<std::vector<std::size_t>> pulling_triangulation(const std::vector<IntVec>& rays,
                                                                   const std::vector<std::size_t>& idx,
                                                                   std::size_t dim) {
  std::vector<IntVec> sub;
  for (auto i : idx) sub.push_back(rays[i]);
  std::size_t d = exact::rank(sub);
  if (idx.size() == d) return {idx};
  auto g = cone_from_inequalities(sub, dim);
  std::size_t pivot = idx.front();
  std::vector<std::vector<std::size_t>> out;
  for (const auto& normal : g.rays) {
    std::vector<std::size_t> facet;
    for (auto i : idx)
      if (exact::dot(normal, rays[i]) == 0) facet.push_back(i);
    if (std::find(facet.begin(), facet.end(), pivot) != facet.end()) continue;
    for (auto s : pulling_triangulation(rays, facet, dim)) {
      s.insert(s.begin(), pivot);
      out.push_back(std::move(s));
    }
  }
  return out;
}

// Lattice points of the half-open parallelepiped spanned by a full-rank
// simplicial generator set (square matrix with generators as columns).
inline std::vector<IntVec> parallelepiped_points(const std::vector<IntVec>& gens) {
  const std::size_t k = gens.size();
  IntMatrix v = IntMatrix::from_columns(gens, k);
  auto snf = exact::smith_normal_form(v);
  IntMatrix uinv = exact::unimodular_inverse(snf.u);
  std::vector<RatVec> vrows;
  for (std::size_t i = 0; i < k; ++i) vrows.push_back(exact::to_rational(v.row(i)));

  std::vector<Int> mods(k);
  for (std::size_t i = 0; i < k; ++i) mods[i] = snf.d(i, i);
  std::vector<IntVec> out;
  IntVec y(k, Int(0));
  while (true) {
    IntVec x = uinv.apply(y);
    auto lam = exact::solve(vrows, exact::to_rational(x), k);
    IntVec fl(k);
    for (std::size_t i = 0; i < k; ++i) fl[i] = exact::floor((*lam)[i]);
    IntVec p = exact::sub(x, v.apply(fl));
    if (!exact::is_zero(p)) out.push_back(std::move(p));
    std::size_t pos = 0;
    while (pos < k) {
      y[pos] += 1;
      if (y[pos] < mods[pos]) break;
      y[pos] = 0;
      ++pos;
    }
    if (pos == k) break;
  }
  return out;
}

}  // namespace poly

/// Minimal generators of c ∩ ℤⁿ (sorted ascending lexicographically).
inline HilbertBasis hilbert_basis(const RationalCone& c) {
  const std::size_t n = c.dim();
  if (!is_pointed(c)) throw Error(ErrorCode::NotPointed, "Hilbert basis of a cone containing a line");
  if (c.generators().empty()) return {c, {}};
  std::vector<IntVec> ext = dual_cone(dual_cone(c)).generators();

  // lattice basis of span(c) ∩ ℤⁿ
  std::size_t k = exact::rank(ext);
  std::vector<IntVec> basis;
  if (k == n) {
    for (std::size_t i = 0; i < n; ++i) {
      IntVec e(n, Int(0));
      e[i] = 1;
      basis.push_back(std::move(e));
    }
  } else {
    std::vector<RatVec> rows;
    for (const auto& e : ext) rows.push_back(exact::to_rational(e));
    std::vector<IntVec> perp;
    for (const auto& v : exact::nullspace(rows, n)) perp.push_back(exact::primitive(v));
    basis = exact::kernel_lattice(IntMatrix::from_rows(perp, n));
  }
  IntMatrix bm = IntMatrix::from_columns(basis, n);
  std::vector<RatVec> brows;
  for (std::size_t i = 0; i < n; ++i) brows.push_back(exact::to_rational(bm.row(i)));
  auto to_local = [&](const IntVec& x) {
    auto s = exact::solve(brows, exact::to_rational(x), k);
    IntVec out(k);
    for (std::size_t i = 0; i < k; ++i) out[i] = (*s)[i].get_num();
    return out;
  };

  std::vector<IntVec> local;
  for (const auto& e : ext) local.push_back(to_local(e));
  std::vector<std::size_t> all(local.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;

  std::set<IntVec> cand(local.begin(), local.end());
  for (const auto& simplex : poly::pulling_triangulation(local, all, k)) {
    std::vector<IntVec> gens;
    for (auto i : simplex) gens.push_back(local[i]);
    for (auto& p : poly::parallelepiped_points(gens)) cand.insert(std::move(p));
  }

  ConeMembership member(RationalCone(k, local));
  std::vector<IntVec> cands(cand.begin(), cand.end());
  std::vector<IntVec> elements;
  for (const auto& x : cands) {
    bool reducible = false;
    for (const auto& y : cands) {
      if (y == x) continue;
      IntVec d = exact::sub(x, y);
      if (exact::is_zero(d)) continue;
      if (member.contains(d)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) elements.push_back(bm.apply(x));
  }
  std::sort(elements.begin(), elements.end());
  return {c, elements};
}

/// Rational polyhedron {x : ⟨normal, x⟩ ≥ bound for every row}.
class PolyhedronByInequalities {
 public:
  struct Inequality {
    IntVec normal;
    Rational bound;
  };

  PolyhedronByInequalities() = default;
  PolyhedronByInequalities(std::size_t dim, std::vector<Inequality> rows) : dim_(dim), rows_(std::move(rows)) {
    for (const auto& r : rows_)
      if (r.normal.size() != dim_) throw Error(ErrorCode::DimensionMismatch, "inequality normal has wrong length");
  }

  std::size_t dim() const { return dim_; }
  const std::vector<Inequality>& inequalities() const { return rows_; }

  bool contains(const RatVec& x) const {
    for (const auto& r : rows_)
      if (exact::dot(r.normal, x) < r.bound) return false;
    return true;
  }
  bool contains(const IntVec& x) const { return contains(exact::to_rational(x)); }

  /// Cone over P × {1}: {(x, λ) : ⟨n, x⟩ − bound·λ ≥ 0, λ ≥ 0}.
  ConeGenerators homogenization() const {
    std::vector<IntVec> ineqs;
    for (const auto& r : rows_) {
      RatVec row = exact::to_rational(r.normal);
      row.push_back(-r.bound);
      ineqs.push_back(exact::primitive(row));
    }
    IntVec last(dim_ + 1, Int(0));
    last[dim_] = 1;
    ineqs.push_back(last);
    return poly::cone_from_inequalities(ineqs, dim_ + 1);
  }

 private:
  std::size_t dim_ = 0;
  std::vector<Inequality> rows_;
};

/// conv(vertices) + tail.
class SigmaPolyhedron {
 public:
  SigmaPolyhedron() = default;
  SigmaPolyhedron(std::size_t dim, const std::vector<RatVec>& vertices, RationalCone tail)
      : dim_(dim), tail_(std::move(tail)) {
    if (vertices.empty()) throw Error(ErrorCode::EmptyPolyhedron, "a polyhedron needs at least one vertex");
    if (tail_.dim() != dim_) throw Error(ErrorCode::DimensionMismatch, "tail cone dimension differs");
    for (const auto& v : vertices)
      if (v.size() != dim_) throw Error(ErrorCode::DimensionMismatch, "vertex has wrong length");
    vertices_ = prune(vertices);
  }

  /// [lo, ∞) on the line.
  static SigmaPolyhedron ray_from(const Rational& lo) {
    return SigmaPolyhedron(1, {RatVec{lo}}, RationalCone(1, {IntVec{Int(1)}}));
  }

  std::size_t dim() const { return dim_; }
  const std::vector<RatVec>& vertices() const { return vertices_; }
  const RationalCone& tail() const { return tail_; }

  bool is_integral() const {
    for (const auto& v : vertices_)
      for (const auto& x : v)
        if (!exact::is_integer(x)) return false;
    return true;
  }

 private:
  std::vector<RatVec> prune(const std::vector<RatVec>& pts) const {
    std::vector<IntVec> gens;
    for (const auto& v : pts) {
      RatVec h = v;
      h.emplace_back(1);
      gens.push_back(exact::primitive(h));
    }
    for (const auto& t : tail_.generators()) {
      IntVec h = t;
      h.emplace_back(0);
      gens.push_back(std::move(h));
    }
    RationalCone hom(dim_ + 1, gens);
    if (!is_pointed(hom)) throw Error(ErrorCode::NotPointed, "tail cone contains a line");
    std::vector<RatVec> out;
    for (const auto& r : extreme_rays(hom)) {
      if (r[dim_] == 0) continue;
      RatVec v(dim_);
      for (std::size_t i = 0; i < dim_; ++i) v[i] = exact::make_rational(r[i], r[dim_]);
      out.push_back(std::move(v));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::size_t dim_ = 0;
  std::vector<RatVec> vertices_;
  RationalCone tail_;
};

inline bool in_tail_dual(const SigmaPolyhedron& p, const RatVec& u) {
  for (const auto& t : p.tail().generators())
    if (exact::dot(t, u) < 0) return false;
  return true;
}

/// min over the polyhedron of ⟨u, ·⟩.
inline Rational support_value(const SigmaPolyhedron& p, const RatVec& u) {
  if (u.size() != p.dim()) throw Error(ErrorCode::DimensionMismatch, "functional has wrong length");
  if (!in_tail_dual(p, u)) throw Error(ErrorCode::UnboundedBelow, "functional is not in the dual of the tail cone");
  Rational best = exact::dot(p.vertices().front(), u);
  for (const auto& v : p.vertices()) best = std::min(best, exact::dot(v, u));
  return best;
}

inline Rational support_value(const SigmaPolyhedron& p, const IntVec& u) {
  return support_value(p, exact::to_rational(u));
}

inline SigmaPolyhedron minkowski_sum(const SigmaPolyhedron& p, const SigmaPolyhedron& q) {
  if (p.dim() != q.dim()) throw Error(ErrorCode::DimensionMismatch, "Minkowski sum of different dimensions");
  if (!same_cone(p.tail(), q.tail())) throw Error(ErrorCode::TailMismatch, "Minkowski sum needs equal tail cones");
  std::vector<RatVec> pts;
  for (const auto& a : p.vertices())
    for (const auto& b : q.vertices()) pts.push_back(exact::add(a, b));
  return SigmaPolyhedron(p.dim(), pts, p.tail());
}

/// Face on which ⟨u, ·⟩ is minimized.
inline SigmaPolyhedron face_at(const SigmaPolyhedron& p, const RatVec& u) {
  Rational m = support_value(p, u);
  std::vector<RatVec> verts;
  for (const auto& v : p.vertices())
    if (exact::dot(v, u) == m) verts.push_back(v);
  std::vector<IntVec> tail;
  for (const auto& t : p.tail().generators())
    if (exact::dot(t, u) == 0) tail.push_back(t);
  return SigmaPolyhedron(p.dim(), verts, RationalCone(p.dim(), tail));
}

struct AdmissabilityResult {
  bool admissable = true;
  std::optional<IntVec> witness;  // nonzero u with two non-integral minimizing faces
};

/// At most one face_at(polys[i], u) is non-integral for every nonzero
/// u ∈ σ∨ ∩ M. Each pair of non-integral vertices from different members
/// is tested by intersecting their normal cones inside σ∨.
inline AdmissabilityResult is_admissable(const std::vector<SigmaPolyhedron>& polys) {
  if (polys.size() <= 1) return {};
  const std::size_t n = polys.front().dim();
  for (const auto& p : polys) {
    if (p.dim() != n) throw Error(ErrorCode::DimensionMismatch, "polyhedra of different dimensions");
    if (!same_cone(p.tail(), polys.front().tail())) throw Error(ErrorCode::TailMismatch, "admissability needs a shared tail");
  }
  auto nonintegral = [](const RatVec& v) {
    return std::any_of(v.begin(), v.end(), [](const Rational& x) { return !exact::is_integer(x); });
  };
  auto normal_rows = [&](const SigmaPolyhedron& p, const RatVec& a) {
    std::vector<IntVec> rows;
    for (const auto& b : p.vertices())
      if (b != a) rows.push_back(exact::primitive(exact::sub(b, a)));
    return rows;
  };

  AdmissabilityResult res;
  std::size_t best_dim = 0;
  for (std::size_t i = 0; i < polys.size(); ++i)
    for (std::size_t j = i + 1; j < polys.size(); ++j)
      for (const auto& a : polys[i].vertices()) {
        if (!nonintegral(a)) continue;
        for (const auto& b : polys[j].vertices()) {
          if (!nonintegral(b)) continue;
          std::vector<IntVec> ineqs = polys.front().tail().generators();
          for (auto& r : normal_rows(polys[i], a)) ineqs.push_back(std::move(r));
          for (auto& r : normal_rows(polys[j], b)) ineqs.push_back(std::move(r));
          auto g = poly::cone_from_inequalities(ineqs, n);
          if (g.rays.empty() && g.lineality.empty()) continue;
          std::vector<IntVec> span = g.rays;
          span.insert(span.end(), g.lineality.begin(), g.lineality.end());
          std::size_t d = exact::rank(span);
          if (res.admissable || d > best_dim) {
            IntVec w(n, Int(0));
            for (const auto& r : g.rays) w = exact::add(w, r);
            if (exact::is_zero(w)) w = g.lineality.front();
            res.admissable = false;
            res.witness = exact::primitive(w);
            best_dim = d;
          }
        }
      }
  return res;
}

/// H-description of conv{ v / deg }.
inline PolyhedronByInequalities convex_hull_scaled(const std::vector<std::pair<RatVec, Rational>>& points) {
  if (points.empty()) throw Error(ErrorCode::InvalidInput, "convex hull of no points");
  const std::size_t n = points.front().first.size();
  std::vector<IntVec> gens;
  for (const auto& [v, deg] : points) {
    if (v.size() != n) throw Error(ErrorCode::DimensionMismatch, "points of different dimensions");
    if (deg <= 0) throw Error(ErrorCode::InvalidInput, "degrees must be positive");
    RatVec h;
    for (const auto& x : v) h.push_back(x / deg);
    h.emplace_back(1);
    gens.push_back(exact::primitive(h));
  }
  auto g = poly::cone_from_inequalities(gens, n + 1);
  std::vector<PolyhedronByInequalities::Inequality> rows;
  auto add_row = [&](const IntVec& f) {
    IntVec normal(f.begin(), f.begin() + static_cast<long>(n));
    if (exact::is_zero(normal)) return;
    rows.push_back({normal, Rational(-f[n])});
  };
  for (const auto& r : g.rays) add_row(r);
  for (const auto& l : g.lineality) {
    add_row(l);
    add_row(exact::scale(l, Int(-1)));
  }
  return PolyhedronByInequalities(n, rows);
}

}  // namespace wp
