#pragma once

// Veronese and Segre presentations, character quotients S_β = ⊕ R_{nβ},
// and hypertoric total spaces as arrangement varieties.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wellpoised/arrangement.hpp"
#include "wellpoised/error.hpp"
#include "wellpoised/exactmath.hpp"
#include "wellpoised/polyalg.hpp"
#include "wellpoised/polyhedra.hpp"
#include "wellpoised/semicanonical.hpp"

namespace wp {

/// Presentation of a subring by monomials of the ambient ring.
struct MonomialPresentation {
  PolynomialIdeal ideal;           // kernel, graded
  std::vector<Exponent> monomials;  // image of each new variable
  std::vector<long> heights;        // Rees height of each new variable, if any
  std::size_t veronese = 1;
  bool degree_zero_invariants = false;
};

namespace quot {

inline void require_degree_one(const PolynomialIdeal& g) {
  if (!g.grading() || g.grading()->cols() != 1)
    throw Error(ErrorCode::NotDegreeOneGenerated, "expected a ℤ-grading");
  for (std::size_t i = 0; i < g.nvars(); ++i)
    if ((*g.grading())(i, 0) != 1) throw Error(ErrorCode::NotDegreeOneGenerated, "every variable must have degree 1");
}

// Exponents of total degree d, lexicographically descending.
inline std::vector<Exponent> monomials_of_degree(std::size_t n, long d) {
  std::vector<Exponent> out;
  Exponent e(n, 0);
  auto rec = [&](auto&& self, std::size_t i, long left) -> void {
    if (i + 1 == n) {
      e[i] = left;
      out.push_back(e);
      return;
    }
    for (long k = left; k >= 0; --k) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
  };
  if (n == 0) return {Exponent{}};
  rec(rec, 0, d);
  return out;
}

inline PolynomialIdeal kernel_of(const std::vector<std::string>& names, const std::vector<Exponent>& monomials,
                                 const std::vector<Polynomial>& modulo, std::size_t n) {
  std::vector<Polynomial> targets;
  for (const auto& e : monomials) targets.push_back(Polynomial::monomial(e));
  return algebra_map_kernel(names, targets, modulo, n);
}

/// Kernel of y_k ↦ x^{e_k} t^{h_k}, so generators of equal exponent and
/// different height stay apart.
inline PolynomialIdeal kernel_of(const std::vector<std::string>& names, const std::vector<Exponent>& monomials,
                                 const std::vector<long>& heights, const std::vector<Polynomial>& modulo,
                                 std::size_t n) {
  std::vector<Polynomial> targets, lifted;
  for (std::size_t k = 0; k < monomials.size(); ++k) {
    Exponent e = monomials[k];
    e.push_back(heights[k]);
    targets.push_back(Polynomial::monomial(e));
  }
  for (const auto& f : modulo) {
    Polynomial g(n + 1);
    for (const auto& [e, c] : f.terms()) {
      Exponent x = e;
      x.push_back(0);
      g.add_term(x, c);
    }
    lifted.push_back(std::move(g));
  }
  return algebra_map_kernel(names, targets, lifted, n + 1);
}

inline IntMatrix constant_grading(std::size_t n, long value = 1) {
  return IntMatrix::from_rows(std::vector<IntVec>(n, IntVec{Int(value)}), 1);
}

}  // namespace quot

/// Degree-d Veronese subring, presented by all degree-d monomials.
inline MonomialPresentation veronese_presentation(const PolynomialIdeal& g, long d) {
  if (d < 1) throw Error(ErrorCode::InvalidInput, "Veronese degree must be positive");
  quot::require_degree_one(g);
  MonomialPresentation out;
  out.monomials = quot::monomials_of_degree(g.nvars(), d);
  auto names = numbered_names("y", out.monomials.size(), 0);
  out.ideal = quot::kernel_of(names, out.monomials, g.generators(), g.nvars())
                  .with_grading(quot::constant_grading(names.size()));
  out.veronese = static_cast<std::size_t>(d);
  return out;
}

/// Products x_i·y_j of two degree-one generated rings.
inline MonomialPresentation segre_presentation(const PolynomialIdeal& g1, const PolynomialIdeal& g2) {
  quot::require_degree_one(g1);
  quot::require_degree_one(g2);
  const std::size_t n1 = g1.nvars(), n2 = g2.nvars(), n = n1 + n2;
  std::vector<std::size_t> first(n1), second(n2);
  for (std::size_t i = 0; i < n1; ++i) first[i] = i;
  for (std::size_t j = 0; j < n2; ++j) second[j] = n1 + j;
  std::vector<Polynomial> modulo;
  for (const auto& f : g1.generators()) modulo.push_back(f.remap(n, first));
  for (const auto& f : g2.generators()) modulo.push_back(f.remap(n, second));
  MonomialPresentation out;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = 0; j < n2; ++j) {
      Exponent e(n, 0);
      e[i] = 1;
      e[n1 + j] = 1;
      out.monomials.push_back(e);
      names.push_back("z" + std::to_string(i) + std::to_string(j));
    }
  out.ideal = quot::kernel_of(names, out.monomials, modulo, n).with_grading(quot::constant_grading(names.size()));
  return out;
}

/// Behaviour of a presentation by monomials under a weight on the ambient
/// variables: W_h = ⟨u, a_h⟩, and the generators form a Khovanskii basis
/// iff in_W of the kernel equals the kernel of the map into C[x]/in_u(I).
/// For a prime toric presentation the tropical variety is the row space of
/// the monomial exponents, a single cone on which in_w is the ideal itself.
struct ToricCheck {
  std::vector<RatVec> lineality;
  bool initial_constant = false;
  BinomialPrimality primality;

  bool well_poised() const { return initial_constant && primality.verdict == Certificate::Prime; }
};

inline ToricCheck toric_check(const MonomialPresentation& pres) {
  ToricCheck out;
  out.primality = is_binomial_prime(pres.ideal);
  out.initial_constant = true;
  const std::size_t n = pres.monomials.empty() ? 0 : pres.monomials.front().size();
  for (std::size_t i = 0; i < n; ++i) {
    RatVec w;
    for (const auto& e : pres.monomials) w.emplace_back(e[i]);
    if (!ideal_equals(initial_ideal(pres.ideal, w), pres.ideal)) out.initial_constant = false;
    out.lineality.push_back(std::move(w));
  }
  return out;
}

struct ImageWeightReport {
  RatVec source;
  RatVec image;
  PolynomialIdeal initial;
  bool khovanskii = false;
  Tri prime = Tri::Unknown;
};

inline ImageWeightReport image_weight_report(const MonomialPresentation& pres, const PolynomialIdeal& ambient,
                                             const RatVec& u) {
  if (u.size() != ambient.nvars()) throw Error(ErrorCode::DimensionMismatch, "weight has wrong length");
  ImageWeightReport rep;
  rep.source = u;
  for (const auto& e : pres.monomials) {
    Rational s = 0;
    for (std::size_t i = 0; i < e.size(); ++i) s += u[i] * e[i];
    rep.image.push_back(s);
  }
  rep.initial = initial_ideal(pres.ideal, rep.image);
  auto degenerate = initial_ideal(ambient, u);
  auto kernel = pres.heights.empty()
                    ? quot::kernel_of(pres.ideal.variables(), pres.monomials, degenerate.generators(), ambient.nvars())
                    : quot::kernel_of(pres.ideal.variables(), pres.monomials, pres.heights, degenerate.generators(),
                                      ambient.nvars());
  rep.khovanskii = ideal_equals(rep.initial, kernel);
  auto basis = reduced_basis(rep.initial);
  if (std::all_of(basis.begin(), basis.end(), [](const Polynomial& g) { return g.size() <= 2; })) {
    auto cert = is_binomial_prime(rep.initial);
    rep.prime = cert.verdict == Certificate::Prime ? Tri::True : (cert.refuted ? Tri::False : Tri::Unknown);
  }
  return rep;
}

/// Lattice points of {(a, h) : a ≥ 0, h ≥ 0, deg(a) = h·β} that generate
/// its semigroup, as (exponent, height).
inline std::vector<std::pair<Exponent, long>> character_generators(const IntMatrix& grading, const IntVec& beta) {
  const std::size_t n = grading.rows(), k = grading.cols();
  if (beta.size() != k) throw Error(ErrorCode::DimensionMismatch, "character has wrong length");
  std::vector<IntVec> ineqs;
  for (std::size_t i = 0; i <= n; ++i) {
    IntVec e(n + 1, Int(0));
    e[i] = 1;
    ineqs.push_back(std::move(e));
  }
  for (std::size_t j = 0; j < k; ++j) {
    IntVec row(n + 1);
    for (std::size_t i = 0; i < n; ++i) row[i] = grading(i, j);
    row[n] = -beta[j];
    ineqs.push_back(row);
    ineqs.push_back(exact::scale(row, Int(-1)));
  }
  auto g = poly::cone_from_inequalities(ineqs, n + 1);
  std::vector<std::pair<Exponent, long>> out;
  for (const auto& h : hilbert_basis(RationalCone(n + 1, g.rays)).elements) {
    Exponent e;
    for (std::size_t i = 0; i < n; ++i) e.push_back(h[i].get_si());
    out.emplace_back(std::move(e), h[n].get_si());
  }
  return out;
}

struct QuotientResult {
  MonomialPresentation presentation;
  std::vector<ImageWeightReport> weights;
};

/// Smallest k ≤ cap for which S_{kβ} is generated in heights 0 and 1 and
/// those generators form a Khovanskii basis at every test weight.
inline QuotientResult git_quotient_presentation(const PolynomialIdeal& g, const IntVec& beta, std::size_t cap,
                                                const std::vector<RatVec>& test_weights) {
  if (!g.grading()) throw Error(ErrorCode::InvalidInput, "quotient needs a grading");
  const std::size_t n = g.nvars();
  for (std::size_t k = 1; k <= cap; ++k) {
    auto gens = character_generators(*g.grading(), exact::scale(beta, Int(static_cast<long>(k))));
    if (std::any_of(gens.begin(), gens.end(), [](const auto& p) { return p.second > 1; })) continue;
    if (std::none_of(gens.begin(), gens.end(), [](const auto& p) { return p.second == 1; })) continue;
    QuotientResult res;
    auto& pres = res.presentation;
    std::vector<IntVec> heights;
    std::vector<std::string> names;
    std::size_t z = 0, y = 0;
    for (const auto& [e, h] : gens) {
      pres.monomials.push_back(e);
      heights.push_back(IntVec{Int(h)});
      pres.heights.push_back(h);
      names.push_back(h == 0 ? "z" + std::to_string(z++) : "y" + std::to_string(y++));
      if (h == 0) pres.degree_zero_invariants = true;
    }
    pres.veronese = k;
    pres.ideal = quot::kernel_of(names, pres.monomials, pres.heights, g.generators(), n)
                     .with_grading(IntMatrix::from_rows(heights, 1));
    bool ok = true;
    for (const auto& u : test_weights) {
      res.weights.push_back(image_weight_report(pres, g, u));
      if (!res.weights.back().khovanskii) ok = false;
    }
    if (ok) return res;
  }
  throw Error(ErrorCode::CapExceeded, "no Veronese level up to the cap passes");
}

// ---------------------------------------------------------------- hypertoric

/// Arrangement {⟨a_i, u⟩ = r_i} in M_ℝ; the a_i are the columns of ℤ^d → N.
struct HypertoricSpec {
  std::vector<IntVec> a;
  IntVec r;

  std::size_t d() const { return a.size(); }
  std::size_t rank() const { return a.empty() ? 0 : a.front().size(); }
};

struct HypertoricMatrices {
  std::vector<std::size_t> blocks;
  IntMatrix F, P, s, A, B;
  IntMatrix sF, AB;
  Int det_a;
  bool sf_identity = false;
  bool ab_identity = false;
  bool ab_unipotent = false;  // block upper triangular with identity diagonal blocks
  std::vector<std::size_t> kept_columns;     // columns of s that are not identically zero
  std::vector<std::size_t> dropped_columns;  // the others, in order
};

inline HypertoricMatrices hypertoric_matrices(const std::vector<std::size_t>& blocks) {
  if (blocks.empty()) throw Error(ErrorCode::BadBlockSizes, "need at least one block");
  for (auto b : blocks)
    if (b < 2) throw Error(ErrorCode::BadBlockSizes, "every block needs size at least 2");
  const std::size_t n = blocks.size();
  std::size_t N = 0;
  for (auto b : blocks) N += b;
  const std::size_t k = N - n + 1;
  HypertoricMatrices out;
  out.blocks = blocks;
  out.F = IntMatrix(N, k);
  out.P = IntMatrix(n - 1, N);
  out.s = IntMatrix(k, N);

  std::size_t row = 0, col = 0;
  for (std::size_t b = 0; b < n; ++b) {
    const std::size_t size = blocks[b];
    for (std::size_t j = 0; j + 1 < size; ++j) {
      out.F(row + j, col + j) = -1;
      out.F(row + j + 1, col + j) = 1;
      for (std::size_t i = 0; i + 1 < size; ++i)
        if (i >= j) out.s(col + i, row + j) = -1;
    }
    out.F(row + size - 1, k - 1) = 1;
    for (std::size_t j = 0; j < size; ++j) {
      if (b == 0) {
        out.s(k - 1, row + j) = 1;
        for (std::size_t p = 0; p + 1 < n; ++p) out.P(p, row + j) = -1;
      } else {
        out.P(b - 1, row + j) = 1;
      }
    }
    row += size;
    col += size - 1;
  }
  out.sF = out.s * out.F;
  out.sf_identity = out.sF.is_identity();

  for (std::size_t j = 0; j < N; ++j) {
    bool zero = true;
    for (std::size_t i = 0; i < k; ++i)
      if (out.s(i, j) != 0) zero = false;
    (zero ? out.dropped_columns : out.kept_columns).push_back(j);
  }
  if (out.kept_columns.size() != k) throw Error(ErrorCode::BadBlockSizes, "unexpected zero-column count");

  out.A = IntMatrix(N, N);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = 0; j < k; ++j)
      if (j < blocks[0]) out.A(i, j) = -1;
    out.A(i, k + i) = 1;
  }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) out.A(n - 1 + i, j) = out.s(i, out.kept_columns[j]);

  out.B = IntMatrix(N, N);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) out.B(i, n - 1 + j) = out.F(out.kept_columns[i], j);
  for (std::size_t i = 0; i + 1 < n; ++i) out.B(k + i, i) = 1;

  out.AB = out.A * out.B;
  out.ab_identity = out.AB.is_identity();
  out.ab_unipotent = true;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      bool same_block = (i < n - 1) == (j < n - 1);
      if (!same_block && out.AB(i, j) != 0) out.ab_unipotent = false;
      if (same_block && out.AB(i, j) != (i == j ? 1 : 0)) out.ab_unipotent = false;
    }
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i + 1; j < N; ++j) {
      bool same_block = (i < n - 1) == (j < n - 1);
      if (same_block && out.AB(i, j) != 0) out.ab_unipotent = false;
    }
  out.det_a = exact::determinant(out.A);
  return out;
}

namespace quot {

inline void check_hypertoric(const HypertoricSpec& spec) {
  if (spec.a.empty()) throw Error(ErrorCode::InvalidInput, "hypertoric data needs at least one vector");
  for (const auto& v : spec.a)
    if (v.size() != spec.rank()) throw Error(ErrorCode::DimensionMismatch, "vectors of different lengths");
  if (spec.r.size() != spec.d()) throw Error(ErrorCode::DimensionMismatch, "one offset per vector");
  if (exact::rank(spec.a) != spec.rank()) throw Error(ErrorCode::RankDeficient, "the vectors do not span N");
  for (const auto& v : spec.a)
    if (exact::is_zero(v)) throw Error(ErrorCode::InvalidInput, "zero vector in the arrangement");
}

inline std::vector<std::string> cotangent_names(std::size_t d) {
  auto names = numbered_names("x", d);
  for (auto& y : numbered_names("y", d)) names.push_back(y);
  return names;
}

}  // namespace quot

/// Λ*-degrees: x_i ↦ i*(e_i), y_i ↦ −i*(e_i) with Λ = ker(a).
inline IntMatrix hypertoric_grading(const HypertoricSpec& spec) {
  const std::size_t d = spec.d();
  auto lambda = exact::kernel_lattice(IntMatrix::from_columns(spec.a, spec.rank()));
  const std::size_t l = lambda.size();
  IntMatrix g(2 * d, l);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < l; ++j) {
      g(i, j) = lambda[j][i];
      g(d + i, j) = -lambda[j][i];
    }
  return g;
}

/// Image of the linear ideal of L_{A₀} under t_i ↦ x_i·y_i; variables
/// x₁…x_d, y₁…y_d.
inline PolynomialIdeal moment_ideal(const HypertoricSpec& spec) {
  quot::check_hypertoric(spec);
  const std::size_t d = spec.d();
  IntMatrix amap = IntMatrix::from_columns(spec.a, spec.rank());
  std::vector<Polynomial> forms;
  for (const auto& c : exact::kernel_lattice(amap)) {
    IntVec v{Int(0)};
    v.insert(v.end(), c.begin(), c.end());
    forms.push_back(alg::from_linear_coefficients(v, d));
  }
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < d; ++i)
    images.push_back(Polynomial::variable(2 * d, i) * Polynomial::variable(2 * d, d + i));
  std::vector<Polynomial> gens;
  for (const auto& f : circuits(forms)) gens.push_back(f.substitute(images));
  IntMatrix grading = hypertoric_grading(spec);
  return PolynomialIdeal(quot::cotangent_names(d), gens, grading);
}


/// Arrangement of the forms ⟨a_i, ·⟩ on ℙ^{rank−1}. Coefficients follow the
/// split sequence of cocharacters: the tail is s(ℚ≥0^N ∩ ker P) and Δ_k is
/// conv(columns of s in block k+1) plus the tail.
inline ArrangementSpec hypertoric_arrangement(const HypertoricSpec& spec) {
  quot::check_hypertoric(spec);
  const std::size_t d = spec.d(), r = spec.rank();
  auto mats = hypertoric_matrices(std::vector<std::size_t>(d, 2));
  const std::size_t N = mats.s.cols(), k = mats.s.rows();
  std::vector<IntVec> ineqs;
  for (std::size_t q = 0; q < N; ++q) {
    IntVec e(N, Int(0));
    e[q] = 1;
    ineqs.push_back(std::move(e));
  }
  for (std::size_t i = 0; i < mats.P.rows(); ++i) {
    ineqs.push_back(mats.P.row(i));
    ineqs.push_back(exact::scale(mats.P.row(i), Int(-1)));
  }
  std::vector<IntVec> tail;
  for (const auto& v : poly::cone_from_inequalities(ineqs, N).rays) tail.push_back(mats.s.apply(v));
  RationalCone sigma(k, tail);
  ArrangementSpec a;
  a.form_variables = numbered_names("u", r);
  for (const auto& v : spec.a) {
    IntVec coeffs{Int(0)};
    coeffs.insert(coeffs.end(), v.begin(), v.end());
    a.forms.push_back(alg::from_linear_coefficients(coeffs, r));
  }
  for (std::size_t i = 0; i < d; ++i)
    a.coefficients.push_back(SigmaPolyhedron(
        k, {exact::to_rational(mats.s.col(2 * i)), exact::to_rational(mats.s.col(2 * i + 1))}, sigma));
  return a;
}

struct TotalSpaceReport {
  HypertoricMatrices matrices;
  ArrangementSpec arrangement;
  WellPoisedReport wellposed;
  PolynomialIdeal moment;
  bool delta_smooth = false;            // det(A) = ±1
  bool delta_from_cocharacters = false;  // δ equals the image of the orthant under [P; s]
  bool delta_from_a = false;            // δ equals pos(columns of A)
  std::vector<std::size_t> matching;    // semi-canonical variable ↦ cotangent variable
  bool presentation_matches = false;
  PolynomialIdeal renamed;              // semi-canonical ideal in cotangent variables
};

namespace quot {

// Columns of [P; s] and of A in cotangent order x₁…x_d, y₁…y_d.
inline std::vector<IntVec> cocharacter_rays(const HypertoricMatrices& mats) {
  const std::size_t N = mats.P.cols(), d = N / 2;
  std::vector<IntVec> out;
  for (std::size_t half = 0; half < 2; ++half)
    for (std::size_t i = 0; i < d; ++i) {
      std::size_t q = 2 * i + half;
      IntVec v = mats.P.col(q);
      for (const auto& x : mats.s.col(q)) v.push_back(x);
      out.push_back(std::move(v));
    }
  return out;
}

inline std::vector<IntVec> a_columns(const HypertoricMatrices& mats) {
  std::vector<IntVec> out;
  for (std::size_t j = 0; j < mats.A.cols(); ++j) out.push_back(mats.A.col(j));
  return out;
}

}  // namespace quot

inline TotalSpaceReport hypertoric_total_space(const HypertoricSpec& spec, std::size_t workers = 1) {
  quot::check_hypertoric(spec);
  const std::size_t d = spec.d();
  TotalSpaceReport out;
  out.matrices = hypertoric_matrices(std::vector<std::size_t>(d, 2));
  out.delta_smooth = out.matrices.det_a == 1 || out.matrices.det_a == -1;
  out.arrangement = hypertoric_arrangement(spec);
  out.moment = moment_ideal(spec);
  out.wellposed = verify_well_poised(out.arrangement, workers);
  const auto& pres = out.wellposed.presentation;

  auto rays = quot::cocharacter_rays(out.matrices);
  out.delta_from_cocharacters = same_cone(pres.delta, RationalCone(2 * d, rays));
  out.delta_from_a = same_cone(pres.delta, RationalCone(2 * d, quot::a_columns(out.matrices)));

  out.matching.assign(pres.coordinates.size(), 2 * d);
  bool bijective = pres.coordinates.size() == 2 * d;
  std::vector<bool> used(2 * d, false);
  for (std::size_t h = 0; h < pres.coordinates.size() && bijective; ++h) {
    std::size_t hit = 2 * d;
    for (std::size_t q = 0; q < 2 * d; ++q) {
      Int v = exact::dot(pres.coordinates[h], rays[q]);
      if (v == 1 && hit == 2 * d) hit = q;
      else if (v != 0) hit = 2 * d + 1;
    }
    if (hit >= 2 * d || used[hit]) bijective = false;
    else used[hit] = true;
    out.matching[h] = hit;
  }
  if (bijective) {
    std::vector<Polynomial> gens;
    for (const auto& g : pres.ideal.generators()) gens.push_back(g.remap(2 * d, out.matching));
    out.renamed = PolynomialIdeal(quot::cotangent_names(d), gens);
    out.presentation_matches = ideal_equals(out.renamed, out.moment);
  }
  return out;
}

/// The character i*(r) of G_A.
inline IntVec hypertoric_character(const HypertoricSpec& spec) {
  auto lambda = exact::kernel_lattice(IntMatrix::from_columns(spec.a, spec.rank()));
  IntVec beta;
  for (const auto& v : lambda) beta.push_back(exact::dot(v, spec.r));
  return beta;
}

/// Lifted weights of the total-space cones, in cotangent coordinates.
inline std::vector<RatVec> total_space_weights(const TotalSpaceReport& t) {
  std::vector<RatVec> out;
  const std::size_t n = t.moment.nvars();
  for (const auto& rep : t.wellposed.reports) {
    RatVec w(n, Rational(0));
    for (std::size_t h = 0; h < t.matching.size() && h < rep.lifted_weight.size(); ++h)
      if (t.matching[h] < n) w[t.matching[h]] = rep.lifted_weight[h];
    out.push_back(std::move(w));
  }
  return out;
}

/// μ⁻¹(0) // G_A at the character i*(r), tested on the total-space weights.
inline QuotientResult hypertoric_quotient(const HypertoricSpec& spec, std::size_t cap, std::size_t workers = 1) {
  auto total = hypertoric_total_space(spec, workers);
  return git_quotient_presentation(total.moment, hypertoric_character(spec), cap, total_space_weights(total));
}

}  // namespace wp
