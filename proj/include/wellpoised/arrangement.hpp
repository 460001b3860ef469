#pragma once

// Hyperplane-arrangement divisors over ℙ^c: the divisor on the linear image,
// Bergman fan cones, well-poisedness, value semigroups and their cones.

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "wellpoised/error.hpp"
#include "wellpoised/exactmath.hpp"
#include "wellpoised/polyalg.hpp"
#include "wellpoised/polyhedra.hpp"
#include "wellpoised/semicanonical.hpp"

namespace wp {

/// Σ Δ_i ⊗ V(ℓ_i) on ℙ^c; forms are linear in c+1 variables.
struct ArrangementSpec {
  std::vector<std::string> form_variables;
  std::vector<Polynomial> forms;
  std::vector<SigmaPolyhedron> coefficients;

  std::size_t c() const { return form_variables.size() - 1; }
  std::size_t m() const { return forms.size() - 1; }
};

struct ArrangementDivisor {
  PolyhedralDivisorSpec divisor;
  std::vector<Polynomial> circuits;  // in t₁…t_m
  bool repeated_forms = false;
};

namespace arr {

inline std::vector<RatVec> form_rows(const ArrangementSpec& a) {
  if (a.form_variables.empty()) throw Error(ErrorCode::InvalidInput, "arrangement needs at least one variable");
  if (a.forms.empty()) throw Error(ErrorCode::InvalidInput, "arrangement needs at least one form");
  std::vector<RatVec> rows;
  for (const auto& f : a.forms) {
    if (f.nvars() != a.form_variables.size()) throw Error(ErrorCode::DimensionMismatch, "form ring differs from ℙ^c");
    if (!alg::is_linear(f)) throw Error(ErrorCode::InvalidInput, "arrangement forms must be linear");
    RatVec v = alg::linear_coefficients(f);
    if (v[0] != 0) throw Error(ErrorCode::InvalidInput, "arrangement forms must be homogeneous");
    v.erase(v.begin());
    if (exact::is_zero(v)) throw Error(ErrorCode::InvalidInput, "zero form in the arrangement");
    rows.push_back(std::move(v));
  }
  return rows;
}

inline std::size_t subset_rank(const std::vector<RatVec>& rows, const std::vector<std::size_t>& idx) {
  std::vector<RatVec> sub;
  for (auto i : idx) sub.push_back(rows[i]);
  return exact::rank(sub);
}

inline std::vector<std::size_t> members(unsigned long mask, std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i)
    if ((mask >> i) & 1) out.push_back(i);
  return out;
}

}  // namespace arr

/// Torus coordinates t_i = ℓ_i/ℓ₀; the base ideal is spanned by the linear
/// relations among the forms and generated by their circuits.
inline ArrangementDivisor arrangement_to_divisor(const ArrangementSpec& a) {
  auto rows = arr::form_rows(a);
  const std::size_t m = a.m(), c = a.c();
  if (exact::rank(rows) != c + 1) throw Error(ErrorCode::RankDeficient, "forms do not span the dual of ℂ^{c+1}");
  ArrangementDivisor out;
  for (std::size_t i = 0; i < rows.size() && !out.repeated_forms; ++i)
    for (std::size_t j = i + 1; j < rows.size(); ++j)
      if (exact::rank(std::vector<RatVec>{rows[i], rows[j]}) == 1) out.repeated_forms = true;

  std::vector<RatVec> cols;
  for (std::size_t k = 0; k <= c; ++k) {
    RatVec col;
    for (const auto& r : rows) col.push_back(r[k]);
    cols.push_back(std::move(col));
  }
  std::vector<Polynomial> relations;
  for (const auto& lam : exact::nullspace(cols, m + 1)) {
    IntVec iv = exact::primitive(lam);
    relations.push_back(alg::from_linear_coefficients(iv, m));
  }
  out.circuits = circuits(relations);
  out.divisor = make_divisor_spec(numbered_names("t", m), out.circuits, a.coefficients);
  return out;
}

/// Flats of the matroid of the forms, as sorted index sets.
inline std::vector<std::vector<std::size_t>> arrangement_flats(const ArrangementSpec& a) {
  auto rows = arr::form_rows(a);
  const std::size_t n = rows.size();
  if (n > 20) throw Error(ErrorCode::InvalidInput, "too many forms for flat enumeration");
  std::set<std::vector<std::size_t>> flats;
  for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
    auto s = arr::members(mask, n);
    std::size_t r = arr::subset_rank(rows, s);
    std::vector<std::size_t> closure;
    for (std::size_t i = 0; i < n; ++i) {
      auto t = s;
      t.push_back(i);
      if (arr::subset_rank(rows, t) == r) closure.push_back(i);
    }
    flats.insert(closure);
  }
  return {flats.begin(), flats.end()};
}

/// A cone of the tropicalized linear image (min convention) in ℝ^m, with
/// e₀ = −Σe_i. Fine cones pos(e_F₁,…,e_F_k) over flags of proper nonempty
/// flats are merged when their initial ideals agree.
struct BergmanCone {
  std::vector<std::vector<std::vector<std::size_t>>> flags;
  std::vector<IntVec> rays;
  std::vector<IntVec> lineality;
  IntVec representative;
  std::size_t dimension = 0;
};

inline std::vector<BergmanCone> bergman_cones(const ArrangementSpec& a) {
  auto data = arrangement_to_divisor(a);
  const std::size_t m = a.m(), n = m + 1;
  std::vector<std::vector<std::size_t>> proper;
  for (auto& f : arrangement_flats(a))
    if (!f.empty() && f.size() < n) proper.push_back(f);

  auto indicator = [&](const std::vector<std::size_t>& f) {
    IntVec v(m, Int(0));
    bool zero = std::find(f.begin(), f.end(), 0) != f.end();
    for (std::size_t i = 1; i <= m; ++i) {
      bool in = std::find(f.begin(), f.end(), i) != f.end();
      v[i - 1] = Int(in ? 1 : 0) - Int(zero ? 1 : 0);
    }
    return v;
  };

  // chains of strictly increasing flats
  std::vector<std::vector<std::size_t>> chains{{}};
  for (std::size_t k = 0; k < chains.size(); ++k) {
    const auto chain = chains[k];
    for (std::size_t j = 0; j < proper.size(); ++j) {
      if (!chain.empty()) {
        const auto& top = proper[chain.back()];
        const auto& f = proper[j];
        if (f.size() <= top.size() || !std::includes(f.begin(), f.end(), top.begin(), top.end())) continue;
      }
      auto next = chain;
      next.push_back(j);
      chains.push_back(std::move(next));
    }
  }

  // homogeneous linear ideal in y₀…y_m, grouped by initial ideal
  std::vector<std::size_t> shift(m);
  for (std::size_t i = 0; i < m; ++i) shift[i] = i + 1;
  std::vector<Polynomial> hom;
  for (const auto& g : data.circuits) {
    Polynomial h(n);
    for (const auto& [e, coef] : g.terms()) {
      Exponent f(n, 0);
      long d = 0;
      for (std::size_t i = 0; i < m; ++i) {
        f[i + 1] = e[i];
        d += e[i];
      }
      f[0] = 1 - d;
      h.add_term(f, coef);
    }
    hom.push_back(h);
  }
  PolynomialIdeal Ih(numbered_names("y", n, 0), hom);

  std::map<std::vector<Polynomial>, BergmanCone> groups;
  std::vector<std::vector<Polynomial>> order;
  for (const auto& chain : chains) {
    std::vector<IntVec> rays;
    std::vector<std::vector<std::size_t>> flag;
    IntVec rep(m, Int(0));
    for (auto j : chain) {
      flag.push_back(proper[j]);
      rays.push_back(indicator(proper[j]));
      rep = exact::add(rep, rays.back());
    }
    RatVec w{Rational(0)};
    for (const auto& x : rep) w.emplace_back(x);
    auto key = reduced_basis(initial_ideal(Ih, w));
    auto [it, fresh] = groups.try_emplace(key);
    if (fresh) order.push_back(key);
    it->second.flags.push_back(flag);
    for (auto& r : rays) it->second.rays.push_back(r);
  }

  std::vector<BergmanCone> out;
  for (const auto& key : order) {
    BergmanCone cone = groups[key];
    RationalCone hull(m, cone.rays);
    auto dual = poly::cone_from_inequalities(hull.generators(), m);
    std::vector<IntVec> facets = dual.rays;
    for (const auto& l : dual.lineality) {
      facets.push_back(l);
      facets.push_back(exact::scale(l, Int(-1)));
    }
    auto g = poly::cone_from_inequalities(facets, m);
    std::sort(g.rays.begin(), g.rays.end());
    cone.rays = g.rays;
    cone.lineality = g.lineality;
    cone.representative = IntVec(m, Int(0));
    for (const auto& r : cone.rays) cone.representative = exact::add(cone.representative, r);
    std::vector<IntVec> span = cone.rays;
    span.insert(span.end(), cone.lineality.begin(), cone.lineality.end());
    cone.dimension = exact::rank(span);
    out.push_back(std::move(cone));
  }
  std::stable_sort(out.begin(), out.end(), [](const BergmanCone& x, const BergmanCone& y) {
    if (x.dimension != y.dimension) return x.dimension < y.dimension;
    return x.rays < y.rays;
  });
  return out;
}

inline std::vector<BergmanCone> maximal_cones(const std::vector<BergmanCone>& cones) {
  std::size_t top = 0;
  for (const auto& c : cones) top = std::max(top, c.dimension);
  std::vector<BergmanCone> out;
  for (const auto& c : cones)
    if (c.dimension == top) out.push_back(c);
  return out;
}

struct WellPoisedReport {
  ArrangementDivisor data;
  SemiCanonicalPresentation presentation;
  std::vector<BergmanCone> cones;
  std::vector<ConeLiftReport> reports;  // parallel to cones
  bool all_certified = false;
};

/// Cone-lift reports at one representative per Bergman cone, extended by 0
/// into N_ℚ.
inline WellPoisedReport verify_well_poised(const ArrangementSpec& a, std::size_t workers = 1) {
  WellPoisedReport out;
  out.data = arrangement_to_divisor(a);
  out.presentation = semicanonical_presentation(out.data.divisor);
  out.cones = bergman_cones(a);
  const std::size_t r = out.data.divisor.rank();
  std::vector<RatVec> weights;
  for (const auto& cone : out.cones) {
    RatVec w = exact::to_rational(cone.representative);
    w.resize(w.size() + r, Rational(0));
    weights.push_back(std::move(w));
  }
  out.reports = cone_lift_checks(out.data.divisor, out.presentation, out.data.circuits, weights, workers);
  out.all_certified = std::all_of(out.reports.begin(), out.reports.end(),
                                  [](const ConeLiftReport& rep) { return rep.prime_certified; });
  return out;
}

// ---------------------------------------------------------------- value semigroups

/// True iff every c+1 of the forms are linearly independent.
inline bool is_generic(const ArrangementSpec& a) {
  auto rows = arr::form_rows(a);
  const std::size_t n = rows.size(), k = a.c() + 1;
  if (k > n) return false;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(k), true);
  do {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (pick[i]) idx.push_back(i);
    if (arr::subset_rank(rows, idx) != k) return false;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return true;
}

/// Semigroup of (v,u) ∈ ℤ^c × M with Σv ≤ Σ_{j∈I} ⌊Δ_j(u)⌋ and
/// v_j ≥ −⌊Δ_{i_j}(u)⌋ over the complement i₁ < … < i_c of I.
class ValueSemigroup {
 public:
  ValueSemigroup(std::vector<SigmaPolyhedron> coefficients, std::vector<std::size_t> minimizing)
      : coefficients_(std::move(coefficients)), minimizing_(std::move(minimizing)) {
    std::sort(minimizing_.begin(), minimizing_.end());
    for (std::size_t i = 0; i < coefficients_.size(); ++i)
      if (!std::binary_search(minimizing_.begin(), minimizing_.end(), i)) complement_.push_back(i);
  }

  const std::vector<std::size_t>& minimizing() const { return minimizing_; }
  const std::vector<std::size_t>& complement() const { return complement_; }
  std::size_t c() const { return complement_.size(); }
  std::size_t rank() const { return coefficients_.front().dim(); }

  Int upper_bound(const IntVec& u) const {
    Int s = 0;
    for (auto j : minimizing_) s += exact::floor(support_value(coefficients_[j], u));
    return s;
  }
  Int lower_bound(std::size_t j, const IntVec& u) const {
    return -exact::floor(support_value(coefficients_[complement_[j]], u));
  }

  bool contains(const IntVec& v, const IntVec& u) const {
    if (v.size() != c() || u.size() != rank()) throw Error(ErrorCode::DimensionMismatch, "point has wrong shape");
    if (!in_tail_dual(coefficients_.front(), exact::to_rational(u))) return false;
    Int s = 0;
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (v[j] < lower_bound(j, u)) return false;
      s += v[j];
    }
    return s <= upper_bound(u);
  }

 private:
  std::vector<SigmaPolyhedron> coefficients_;
  std::vector<std::size_t> minimizing_;
  std::vector<std::size_t> complement_;
};

namespace arr {

inline void check_index_set(const ArrangementSpec& a, const std::vector<std::size_t>& I) {
  if (!is_generic(a)) throw Error(ErrorCode::NotGeneric, "value semigroups need forms in general position");
  std::set<std::size_t> s(I.begin(), I.end());
  if (s.size() != I.size() || I.size() != a.m() + 1 - a.c())
    throw Error(ErrorCode::InvalidInput, "index set must have m+1−c distinct elements");
  for (auto i : I)
    if (i > a.m()) throw Error(ErrorCode::InvalidInput, "index out of range");
}

}  // namespace arr

inline ValueSemigroup value_semigroup(const ArrangementSpec& a, const std::vector<std::size_t>& I) {
  arr::check_index_set(a, I);
  return ValueSemigroup(a.coefficients, I);
}

/// Minimizing index set of a weight in ℝ^m (homogeneous coordinate 0 is 0).
inline std::vector<std::size_t> minimizing_set(const RatVec& w) {
  RatVec full{Rational(0)};
  full.insert(full.end(), w.begin(), w.end());
  Rational lo = *std::min_element(full.begin(), full.end());
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < full.size(); ++i)
    if (full[i] == lo) out.push_back(i);
  return out;
}

/// The real cone of the semigroup in ℝ^c × M_ℝ: coordinates (v₁…v_c, u).
inline PolyhedronByInequalities nok_cone(const ArrangementSpec& a, const std::vector<std::size_t>& I) {
  arr::check_index_set(a, I);
  ValueSemigroup s(a.coefficients, I);
  const std::size_t c = s.c(), r = s.rank();
  std::vector<PolyhedronByInequalities::Inequality> rows;
  auto push = [&](RatVec normal) {
    rows.push_back({exact::primitive(normal), Rational(0)});
  };
  for (const auto& g : a.coefficients.front().tail().generators()) {
    RatVec n(c, Rational(0));
    for (const auto& x : g) n.emplace_back(x);
    push(n);
  }
  for (std::size_t j = 0; j < c; ++j)
    for (const auto& v : a.coefficients[s.complement()[j]].vertices()) {
      RatVec n(c, Rational(0));
      n[j] = 1;
      n.insert(n.end(), v.begin(), v.end());
      push(n);
    }
  SigmaPolyhedron sum = a.coefficients[I.front()];
  for (std::size_t k = 1; k < I.size(); ++k) sum = minkowski_sum(sum, a.coefficients[I[k]]);
  for (const auto& v : sum.vertices()) {
    RatVec n(c, Rational(-1));
    n.insert(n.end(), v.begin(), v.end());
    push(n);
  }
  return PolyhedronByInequalities(c + r, rows);
}

/// Saturated iff the coefficients indexed by I are admissable.
inline AdmissabilityResult is_saturated(const ArrangementSpec& a, const std::vector<std::size_t>& I) {
  arr::check_index_set(a, I);
  std::vector<SigmaPolyhedron> sub;
  for (auto i : I) sub.push_back(a.coefficients[i]);
  return is_admissable(sub);
}

struct CohenMacaulayCheck {
  bool sufficient = false;
  std::vector<std::size_t> index_set;  // first admissable index set
};

/// Some maximal cone degenerates to a normal toric variety.
inline CohenMacaulayCheck cm_sufficient(const ArrangementSpec& a) {
  const std::size_t n = a.m() + 1, k = n - a.c();
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(k), true);
  do {
    std::vector<std::size_t> I;
    for (std::size_t i = 0; i < n; ++i)
      if (pick[i]) I.push_back(i);
    if (is_saturated(a, I).admissable) return {true, I};
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return {};
}

/// Cones of σ∨ on which every coefficient is minimized at one vertex; the
/// semigroup bounds are floors of linear functions on each.
struct LinearityRegion {
  std::vector<IntVec> rays;
  std::vector<RatVec> vertices;  // one per coefficient
};

inline std::vector<LinearityRegion> linearity_regions(const std::vector<SigmaPolyhedron>& coefficients) {
  const std::size_t r = coefficients.front().dim();
  std::vector<LinearityRegion> out;
  std::vector<std::size_t> choice(coefficients.size(), 0);
  while (true) {
    std::vector<IntVec> ineqs = coefficients.front().tail().generators();
    LinearityRegion region;
    for (std::size_t i = 0; i < coefficients.size(); ++i) {
      const auto& a = coefficients[i].vertices()[choice[i]];
      region.vertices.push_back(a);
      for (const auto& b : coefficients[i].vertices())
        if (b != a) ineqs.push_back(exact::primitive(exact::sub(b, a)));
    }
    auto g = poly::cone_from_inequalities(ineqs, r);
    std::vector<IntVec> span = g.rays;
    span.insert(span.end(), g.lineality.begin(), g.lineality.end());
    if (exact::rank(span) == r) {
      region.rays = g.rays;
      for (const auto& l : g.lineality) {
        region.rays.push_back(l);
        region.rays.push_back(exact::scale(l, Int(-1)));
      }
      out.push_back(std::move(region));
    }
    std::size_t i = 0;
    while (i < choice.size() && ++choice[i] == coefficients[i].vertices().size()) choice[i++] = 0;
    if (i == choice.size()) break;
  }
  return out;
}

}  // namespace wp
