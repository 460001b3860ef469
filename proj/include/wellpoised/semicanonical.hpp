#pragma once

// Semi-canonical presentations of rings of polyhedral divisors over an
// embedded base, their generating sets, and the cone-lifting test.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "wellpoised/error.hpp"
#include "wellpoised/exactmath.hpp"
#include "wellpoised/polyalg.hpp"
#include "wellpoised/polyhedra.hpp"

namespace wp {

enum class Tri { True, False, Unknown };

inline const char* to_string(Tri t) {
  switch (t) {
    case Tri::True: return "TRUE";
    case Tri::False: return "FALSE";
    default: return "UNKNOWN";
  }
}

/// Polyhedral divisor Δ₀⊗D₀ + … + Δ_m⊗D_m on a closed subvariety of the
/// torus of ℙ^m given by an ideal in t₁…t_m.
struct PolyhedralDivisorSpec {
  std::vector<std::string> base_variables;
  PolynomialIdeal base_ideal;  // saturated by t₁⋯t_m
  std::vector<SigmaPolyhedron> coefficients;
  bool base_prime_trusted = true;

  std::size_t m() const { return base_variables.size(); }
  std::size_t rank() const { return coefficients.front().dim(); }
  const RationalCone& tail() const { return coefficients.front().tail(); }
};

inline std::vector<std::string> numbered_names(const std::string& stem, std::size_t n, std::size_t first = 1) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(stem + std::to_string(first + i));
  return out;
}

/// Validates tails and properness; saturates the base ideal.
inline PolyhedralDivisorSpec make_divisor_spec(std::vector<std::string> base_variables, std::vector<Polynomial> base,
                                               std::vector<SigmaPolyhedron> coefficients) {
  const std::size_t m = base_variables.size();
  if (coefficients.size() != m + 1) throw Error(ErrorCode::DimensionMismatch, "need one coefficient per hyperplane D₀…D_m");
  for (const auto& c : coefficients) {
    if (c.dim() != coefficients.front().dim()) throw Error(ErrorCode::DimensionMismatch, "coefficients of different rank");
    if (!same_cone(c.tail(), coefficients.front().tail())) throw Error(ErrorCode::TailMismatch, "coefficients must share the tail cone");
  }
  SigmaPolyhedron total = coefficients.front();
  for (std::size_t i = 1; i < coefficients.size(); ++i) total = minkowski_sum(total, coefficients[i]);
  ConeMembership tail(total.tail());
  for (const auto& v : total.vertices()) {
    if (!tail.contains(v)) throw Error(ErrorCode::ImproperDivisor, "sum of coefficients leaves the tail cone");
    if (m > 0 && exact::is_zero(v)) throw Error(ErrorCode::ImproperDivisor, "sum of coefficients equals the tail cone");
  }
  PolynomialIdeal I(base_variables, std::move(base));
  PolyhedralDivisorSpec spec;
  spec.base_variables = std::move(base_variables);
  spec.base_ideal = I.is_zero() || m == 0 ? I : saturate(I, all_variables(m));
  spec.coefficients = std::move(coefficients);
  return spec;
}

namespace sc {

inline IntVec unit_or_anti(std::size_t m, std::size_t i) {
  IntVec e(m, Int(i == 0 ? -1 : 0));
  if (i > 0) e[i - 1] = 1;
  return e;
}

inline IntVec concat(const IntVec& a, const IntVec& b) {
  IntVec out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace sc

/// δ = pos({0}×σ ∪ ⋃ {e_i}×Δ_i) ⊂ ℚ^m × N_ℚ with e₀ = −Σe_i.
inline RationalCone build_delta(const PolyhedralDivisorSpec& spec) {
  const std::size_t m = spec.m(), r = spec.rank();
  std::vector<IntVec> gens;
  for (const auto& g : spec.tail().generators()) gens.push_back(sc::concat(IntVec(m, Int(0)), g));
  for (std::size_t i = 0; i <= m; ++i)
    for (const auto& a : spec.coefficients[i].vertices()) {
      RatVec h = exact::to_rational(sc::unit_or_anti(m, i));
      h.insert(h.end(), a.begin(), a.end());
      gens.push_back(exact::primitive(h));
    }
  RationalCone delta(m + r, gens);
  if (!is_pointed(delta)) throw Error(ErrorCode::ImproperDivisor, "the cone of the divisor contains a line");
  return delta;
}

/// Membership in δ∨ straight from the coefficients: v_i + ⟨u,a⟩ ≥ 0 on Δ_i,
/// ⟨u,a⟩ − Σv ≥ 0 on Δ₀ and u ∈ σ∨.
inline bool in_delta_dual(const PolyhedralDivisorSpec& spec, const IntVec& p) {
  const std::size_t m = spec.m();
  RatVec u;
  for (std::size_t j = m; j < p.size(); ++j) u.emplace_back(p[j]);
  if (!in_tail_dual(spec.coefficients.front(), u)) return false;
  Rational sum = 0;
  for (std::size_t i = 0; i < m; ++i) {
    sum += p[i];
    if (Rational(p[i]) + support_value(spec.coefficients[i + 1], u) < 0) return false;
  }
  return support_value(spec.coefficients[0], u) - sum >= 0;
}

/// Ring data of the semi-canonical embedding.
struct SemiCanonicalPresentation {
  RationalCone delta;
  std::vector<IntVec> coordinates;  // Hilbert basis of δ∨, descending
  std::vector<std::string> variables;
  PolynomialIdeal ideal;            // graded by the M-part of the coordinates
  IntMatrix lift_matrix;            // one row per coordinate
  RationalCone tail;
  std::size_t m = 0;
  std::size_t rank = 0;
};

namespace sc {

inline std::vector<Polynomial> coordinate_monomials(const std::vector<IntVec>& coords, std::size_t n) {
  std::vector<Polynomial> out;
  for (const auto& h : coords) {
    Exponent e;
    for (std::size_t i = 0; i < n; ++i) e.push_back(h[i].get_si());
    out.push_back(Polynomial::monomial(e));
  }
  return out;
}

inline PolynomialIdeal presentation_ideal(const std::vector<IntVec>& coords, const std::vector<std::string>& names,
                                          const PolynomialIdeal& base, std::size_t m, std::size_t r) {
  std::vector<std::size_t> slots(m);
  for (std::size_t i = 0; i < m; ++i) slots[i] = i;
  std::vector<Polynomial> modulo;
  for (const auto& g : base.generators()) modulo.push_back(g.remap(m + r, slots));
  auto kernel = algebra_map_kernel(names, coordinate_monomials(coords, m + r), modulo, m + r);
  std::vector<IntVec> degs;
  for (const auto& h : coords) degs.emplace_back(h.begin() + static_cast<long>(m), h.end());
  return kernel.with_grading(IntMatrix::from_rows(degs, r));
}

}  // namespace sc

inline SemiCanonicalPresentation semicanonical_presentation(const PolyhedralDivisorSpec& spec) {
  SemiCanonicalPresentation p;
  p.m = spec.m();
  p.rank = spec.rank();
  p.delta = build_delta(spec);
  p.tail = spec.tail();
  auto hb = hilbert_basis(dual_cone(p.delta));
  p.coordinates = hb.elements;
  std::sort(p.coordinates.begin(), p.coordinates.end(), [](const IntVec& a, const IntVec& b) { return b < a; });
  p.variables = numbered_names("X", p.coordinates.size());
  p.ideal = sc::presentation_ideal(p.coordinates, p.variables, spec.base_ideal, p.m, p.rank);
  p.lift_matrix = IntMatrix::from_rows(p.coordinates, p.m + p.rank);
  return p;
}

/// Same coordinates over another base ideal (the degenerate divisor).
inline PolynomialIdeal presentation_over(const SemiCanonicalPresentation& pres, const PolynomialIdeal& base) {
  return sc::presentation_ideal(pres.coordinates, pres.variables, base, pres.m, pres.rank);
}

/// h ↦ ⟨h, w⟩ for every coordinate h.
inline RatVec lift_weight(const SemiCanonicalPresentation& pres, const RatVec& w) {
  if (w.size() != pres.m + pres.rank) throw Error(ErrorCode::DimensionMismatch, "weight must live in ℚ^m × N_ℚ");
  return pres.lift_matrix.apply(w);
}

/// Writes a lattice point of δ∨ as a sum of coordinates.
inline Exponent decompose(const SemiCanonicalPresentation& pres, const IntVec& point) {
  std::vector<IntVec> gens = pres.delta.generators();
  IntVec interior(point.size(), Int(0));
  for (const auto& g : gens) interior = exact::add(interior, g);
  auto inside = [&](const IntVec& x) {
    for (const auto& g : gens)
      if (exact::dot(g, x) < 0) return false;
    return true;
  };
  if (!inside(point)) throw Error(ErrorCode::InvalidInput, "point is not in the dual cone");
  Exponent e(pres.coordinates.size(), 0);
  IntVec rest = point;
  while (!exact::is_zero(rest)) {
    bool moved = false;
    for (std::size_t i = 0; i < pres.coordinates.size() && !moved; ++i) {
      IntVec next = exact::sub(rest, pres.coordinates[i]);
      if (!inside(next)) continue;
      if (exact::dot(interior, next) >= exact::dot(interior, rest)) continue;
      rest = std::move(next);
      ++e[i];
      moved = true;
    }
    if (!moved) throw Error(ErrorCode::InvalidInput, "point is not in the semigroup of the dual cone");
  }
  return e;
}

// ---------------------------------------------------------------- generating sets

/// {(v,u) : v_i ≥ −Δ_i(u), Σv ≤ Δ₀(u) − deg g, u ∈ σ∨}.
inline PolyhedronByInequalities degree_polyhedron(const PolyhedralDivisorSpec& spec, long degree) {
  const std::size_t m = spec.m(), r = spec.rank();
  std::vector<PolyhedronByInequalities::Inequality> rows;
  auto push = [&](const RatVec& normal, const Rational& bound) {
    Int den = 1;
    for (const auto& x : normal) den = exact::lcm(den, x.get_den());
    IntVec n;
    for (const auto& x : normal) n.push_back(Rational(x * den).get_num());
    rows.push_back({n, bound * den});
  };
  for (const auto& g : spec.tail().generators()) {
    RatVec n(m, Rational(0));
    for (const auto& x : g) n.emplace_back(x);
    push(n, 0);
  }
  for (std::size_t i = 0; i <= m; ++i)
    for (const auto& a : spec.coefficients[i].vertices()) {
      RatVec n = exact::to_rational(sc::unit_or_anti(m, i));
      n.insert(n.end(), a.begin(), a.end());
      push(n, i == 0 ? Rational(degree) : Rational(0));
    }
  return PolyhedronByInequalities(m + r, rows);
}

/// Lattice points at height one of the Hilbert basis of pos(P × {1}).
inline std::vector<IntVec> degree_points(const PolyhedronByInequalities& p) {
  auto g = p.homogenization();
  if (!g.lineality.empty()) throw Error(ErrorCode::NotPointed, "degree polyhedron has a lineality space");
  auto hb = hilbert_basis(RationalCone(p.dim() + 1, g.rays));
  std::vector<IntVec> out;
  for (const auto& h : hb.elements)
    if (h.back() == 1) out.emplace_back(h.begin(), h.end() - 1);
  std::sort(out.begin(), out.end());
  return out;
}

struct GeneratingElement {
  Polynomial base;     // g
  IntVec shift;        // v
  IntVec weight;       // u
  Polynomial element;  // g·t^v·χ^u in t₁…t_m, s₁…s_r
};

struct GeneratingSet {
  std::vector<PolyhedronByInequalities> polyhedra;  // one per g
  std::vector<GeneratingElement> elements;
};

/// Checks that gens lie in the base ideal, contain its reduced grevlex basis
/// up to scalars, and that no g/t_i lies in the ideal.
inline void check_generating_input(const PolyhedralDivisorSpec& spec, const std::vector<Polynomial>& gens) {
  const std::size_t m = spec.m();
  std::vector<Polynomial> mine;
  for (const auto& g : gens) {
    if (g.nvars() != m) throw Error(ErrorCode::DimensionMismatch, "generator ring differs from the base ring");
    if (g.is_laurent()) throw Error(ErrorCode::InvalidInput, "generators must be polynomials");
    if (!ideal_contains(spec.base_ideal, g)) throw Error(ErrorCode::NotGroebner, "generator outside the base ideal");
    mine.push_back(alg::normalized(g));
  }
  for (const auto& b : reduced_basis(spec.base_ideal))
    if (std::find(mine.begin(), mine.end(), alg::normalized(b)) == mine.end())
      throw Error(ErrorCode::NotGroebner, "generators miss an element of the reduced Gröbner basis");
  for (const auto& g : gens)
    for (std::size_t i = 0; i < m; ++i) {
      bool divisible = std::all_of(g.terms().begin(), g.terms().end(), [&](const auto& t) { return t.first[i] > 0; });
      if (!divisible) continue;
      Polynomial q(m);
      for (const auto& [e, c] : g.terms()) {
        Exponent f = e;
        --f[i];
        q.add_term(f, c);
      }
      if (ideal_contains(spec.base_ideal, q)) throw Error(ErrorCode::NotGroebner, "a generator is divisible inside the ideal");
    }
}

inline GeneratingSet generating_set(const PolyhedralDivisorSpec& spec, const std::vector<Polynomial>& gens) {
  check_generating_input(spec, gens);
  const std::size_t m = spec.m(), r = spec.rank();
  std::vector<std::size_t> slots(m);
  for (std::size_t i = 0; i < m; ++i) slots[i] = i;
  GeneratingSet out;
  for (const auto& g : gens) {
    auto p = degree_polyhedron(spec, g.total_degree());
    for (const auto& pt : degree_points(p)) {
      Exponent shift(m + r, 0);
      for (std::size_t i = 0; i < m + r; ++i) shift[i] = pt[i].get_si();
      GeneratingElement el;
      el.base = g;
      el.shift = IntVec(pt.begin(), pt.begin() + static_cast<long>(m));
      el.weight = IntVec(pt.begin() + static_cast<long>(m), pt.end());
      el.element = g.remap(m + r, slots) * Polynomial::monomial(shift);
      out.elements.push_back(std::move(el));
    }
    out.polyhedra.push_back(std::move(p));
  }
  return out;
}

/// Preimage in the coordinate ring of the ideal generated by the set:
/// the toric relations of the coordinates plus one lift per element.
inline PolynomialIdeal generating_set_ideal(const SemiCanonicalPresentation& pres, const GeneratingSet& set) {
  std::vector<Polynomial> gens = toric_ideal(pres.variables, pres.coordinates).generators();
  const std::size_t k = pres.coordinates.size();
  for (const auto& el : set.elements) {
    Polynomial lift(k);
    for (const auto& [e, c] : el.element.terms()) {
      IntVec p;
      for (long x : e) p.emplace_back(x);
      lift.add_term(decompose(pres, p), c);
    }
    gens.push_back(std::move(lift));
  }
  return canonical(PolynomialIdeal(pres.variables, gens));
}

// ---------------------------------------------------------------- degenerations

/// in_w of the base ideal in the Laurent ring, contracted back; w ∈ ℚ^m × N_ℚ
/// (only the first m entries act on the base).
inline PolynomialIdeal degenerate_base(const PolyhedralDivisorSpec& spec, const RatVec& w) {
  const std::size_t m = spec.m();
  if (w.size() != m + spec.rank() && w.size() != m) throw Error(ErrorCode::DimensionMismatch, "weight has wrong length");
  if (spec.base_ideal.is_zero() || m == 0) return spec.base_ideal;
  RatVec wt(w.begin(), w.begin() + static_cast<long>(m));
  auto in = saturate(initial_ideal(spec.base_ideal, wt), all_variables(m));
  if (is_unit_ideal(in)) throw Error(ErrorCode::MonomialInInitial, "weight is outside the tropical variety of the base");
  return in;
}

struct IrreducibilityVerdict {
  Tri value = Tri::Unknown;
  std::string route;
};

/// Linear ideals, binomial ideals (lattice test) and the trusted base itself.
inline IrreducibilityVerdict certify_irreducible(const PolynomialIdeal& Y, const PolyhedralDivisorSpec& spec) {
  auto basis = reduced_basis(Y);
  if (std::all_of(basis.begin(), basis.end(), [](const Polynomial& g) { return alg::is_linear(g); }))
    return {Tri::True, "linear"};
  if (std::all_of(basis.begin(), basis.end(), [](const Polynomial& g) { return g.size() <= 2; })) {
    auto cert = is_binomial_prime(Y.with_generators(basis));
    if (cert.verdict == Certificate::Prime) return {Tri::True, "binomial"};
    if (cert.refuted) return {Tri::False, "binomial: " + cert.reason};
  }
  if (spec.base_prime_trusted && ideal_equals(Y, spec.base_ideal)) return {Tri::True, "base ideal"};
  return {Tri::Unknown, "no certificate"};
}

struct ConeLiftReport {
  RatVec weight;
  RatVec lifted_weight;
  PolynomialIdeal base_initial;
  Tri condition_irreducible = Tri::Unknown;
  std::string irreducible_route;
  bool condition_initial_generates = false;
  bool condition_degree_polyhedra = false;
  PolynomialIdeal initial;     // in_W of the semi-canonical ideal
  PolynomialIdeal degenerate;  // semi-canonical ideal over the degenerate base
  bool ideals_equal = false;
  Tri initial_prime = Tri::Unknown;
  bool prime_certified = false;

  bool conditions_hold() const {
    return condition_irreducible == Tri::True && condition_initial_generates && condition_degree_polyhedra;
  }
};

inline ConeLiftReport cone_lift_check(const PolyhedralDivisorSpec& spec, const SemiCanonicalPresentation& pres,
                                      const std::vector<Polynomial>& gens, const RatVec& w) {
  const std::size_t m = spec.m();
  ConeLiftReport rep;
  rep.weight = w;
  rep.lifted_weight = lift_weight(pres, w);
  rep.base_initial = degenerate_base(spec, w);
  auto irr = certify_irreducible(rep.base_initial, spec);
  rep.condition_irreducible = irr.value;
  rep.irreducible_route = irr.route;

  RatVec wt(w.begin(), w.begin() + static_cast<long>(m));
  std::vector<Polynomial> forms;
  rep.condition_degree_polyhedra = true;
  for (const auto& g : gens) {
    auto f = initial_form(g, wt);
    if (f.total_degree() != g.total_degree()) rep.condition_degree_polyhedra = false;
    forms.push_back(f);
  }
  if (m == 0) {
    rep.condition_initial_generates = true;
  } else {
    auto generated = saturate(PolynomialIdeal(spec.base_variables, forms), all_variables(m));
    rep.condition_initial_generates = ideal_equals(generated, rep.base_initial);
  }

  rep.initial = initial_ideal(pres.ideal, rep.lifted_weight);
  rep.degenerate = presentation_over(pres, rep.base_initial);
  rep.ideals_equal = ideal_equals(rep.initial, rep.degenerate);

  auto basis = reduced_basis(rep.initial);
  if (std::all_of(basis.begin(), basis.end(), [](const Polynomial& g) { return g.size() <= 2; })) {
    auto cert = is_binomial_prime(rep.initial);
    if (cert.verdict == Certificate::Prime) rep.initial_prime = Tri::True;
    else if (cert.refuted) rep.initial_prime = Tri::False;
  }
  if (rep.initial_prime == Tri::Unknown && rep.ideals_equal && rep.condition_irreducible == Tri::True)
    rep.initial_prime = Tri::True;
  rep.prime_certified = rep.initial_prime == Tri::True;
  return rep;
}

/// One report per weight in input order. With workers > 1 the checks run on
/// that many threads; the result does not depend on scheduling.
inline std::vector<ConeLiftReport> cone_lift_checks(const PolyhedralDivisorSpec& spec,
                                                    const SemiCanonicalPresentation& pres,
                                                    const std::vector<Polynomial>& gens,
                                                    const std::vector<RatVec>& weights, std::size_t workers = 1) {
  std::vector<ConeLiftReport> out(weights.size());
  std::vector<std::exception_ptr> failures(weights.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < weights.size(); i = next++) {
      try {
        out[i] = cone_lift_check(spec, pres, gens, weights[i]);
      } catch (...) {
        failures[i] = std::current_exception();
      }
    }
  };
  workers = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(weights.size(), 1));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(work);
  }
  for (const auto& f : failures)
    if (f) std::rethrow_exception(f);
  return out;
}

// ---------------------------------------------------------------- valuations

namespace sc {

inline std::optional<RatVec> lexmin_value(const Polynomial& f, const std::vector<RatVec>& rows) {
  std::optional<RatVec> best;
  for (const auto& [e, c] : f.terms()) {
    RatVec v;
    for (const auto& row : rows) {
      Rational s = 0;
      for (std::size_t i = 0; i < e.size(); ++i) s += row[i] * e[i];
      v.push_back(s);
    }
    if (!best || v < *best) best = v;
  }
  return best;
}

}  // namespace sc

/// 𝔳_M(f): the lexicographic minimum of M·α over the terms of the standard
/// representative for an order that ranks a positive grading first and then
/// the rows of M (smaller values lead). nullopt encodes +∞.
inline std::optional<RatVec> matrix_valuation(const SemiCanonicalPresentation& pres, const std::vector<RatVec>& rows,
                                              const Polynomial& f) {
  const std::size_t k = pres.coordinates.size();
  if (f.nvars() != k) throw Error(ErrorCode::DimensionMismatch, "polynomial ring differs from the presentation");
  for (const auto& r : rows)
    if (r.size() != k) throw Error(ErrorCode::DimensionMismatch, "valuation row has wrong length");
  if (rows.empty() || exact::rank(rows) != rows.size()) throw Error(ErrorCode::NotFullRank, "valuation matrix rows are dependent");

  IntVec rho(pres.rank, Int(0));
  for (const auto& g : pres.tail.generators()) rho = exact::add(rho, g);
  IntVec grading;
  for (const auto& h : pres.coordinates) {
    Int d = 0;
    for (std::size_t j = 0; j < pres.rank; ++j) d += h[pres.m + j] * rho[j];
    if (d <= 0) throw Error(ErrorCode::NotPositivelyGraded, "coordinates are not positively graded");
    grading.push_back(d);
  }
  std::vector<IntVec> order_rows{grading};
  for (const auto& r : rows) order_rows.push_back(exact::scale(alg::integral_weight(r), Int(-1)));
  TermOrder order = TermOrder::weighted(k, order_rows);
  auto basis = groebner_basis(pres.ideal.generators(), order);

  std::map<Int, Polynomial> parts;
  for (const auto& [e, c] : f.terms()) {
    Int d = 0;
    for (std::size_t i = 0; i < k; ++i) d += grading[i] * e[i];
    auto it = parts.try_emplace(d, Polynomial(k)).first;
    it->second.add_term(e, c);
  }
  std::optional<RatVec> best;
  for (const auto& [d, p] : parts) {
    auto v = sc::lexmin_value(normal_form(p, basis, order), rows);
    if (v && (!best || *v < *best)) best = v;
  }
  return best;
}

}  // namespace wp
