#pragma once

// Batch front-end: JSON job files in, deterministic key/value reports out.

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>
#include <json.hpp>
#include "wellpoised/arrangement.hpp"
#include "wellpoised/error.hpp"
#include "wellpoised/quotients.hpp"
#include "wellpoised/semicanonical.hpp"

namespace wp::cli {

using json = nlohmann::json;

enum class Format { Text, Machine };

inline const std::vector<std::string>& commands() {
  static const std::vector<std::string> names{
      "embed",       "generators", "lift",     "degenerate", "lift-check", "verify-wellpoised", "value-semigroup",
      "nok-cone",    "admissable", "cm-check", "veronese",   "segre",      "quotient",          "hypertoric"};
  return names;
}

struct JobSpec {
  std::string command;
  std::string input;
  std::string weights;                 // optional separate weight file
  std::size_t cap = 4;                 // Veronese cap for quotients
  std::size_t parallel = 1;
  Format format = Format::Text;
  std::vector<std::size_t> index_set;  // minimizing set for value-semigroup, nok-cone, admissable
};

/// 64-bit FNV-1a.
inline std::string fnv1a(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

// ---------------------------------------------------------------- reports

/// Ordered records grouped in sections. Text renders `key: value` under
/// `[section]` headers; machine renders `section.key=value`, one per line.
class Report {
 public:
  void section(std::string name) { section_ = std::move(name); }

  void put(const std::string& key, const std::string& value) { rows_.push_back({section_, key, value}); }
  void put(const std::string& key, bool value) { put(key, std::string(value ? "true" : "false")); }
  void put(const std::string& key, const char* value) { put(key, std::string(value)); }
  void put(const std::string& key, std::size_t value) { put(key, std::to_string(value)); }

  void list(const std::string& key, const std::vector<std::string>& items) {
    put(key + ".count", items.size());
    for (std::size_t i = 0; i < items.size(); ++i) put(key + "." + std::to_string(i), items[i]);
  }

  void write(std::ostream& os, Format f) const {
    std::string current = "\x01";
    for (const auto& r : rows_) {
      if (f == Format::Machine) {
        os << (r.section.empty() ? "" : r.section + ".") << r.key << "=" << r.value << "\n";
        continue;
      }
      if (r.section != current) {
        if (!r.section.empty()) os << "[" << r.section << "]\n";
        current = r.section;
      }
      os << (r.section.empty() ? "" : "  ") << r.key << ": " << r.value << "\n";
    }
  }

 private:
  struct Row {
    std::string section, key, value;
  };
  std::string section_;
  std::vector<Row> rows_;
};

inline std::vector<std::string> ideal_lines(const PolynomialIdeal& I) {
  std::vector<std::string> out;
  for (const auto& g : reduced_basis(I)) out.push_back(alg::to_string(alg::normalized(g), I.variables()));
  return out;
}

template <class V>
inline std::vector<std::string> vector_lines(const std::vector<V>& vs) {
  std::vector<std::string> out;
  for (const auto& v : vs) out.push_back(exact::to_string(v));
  return out;
}

inline std::string index_string(const std::vector<std::size_t>& idx) {
  std::string s = "{";
  for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? "," : "") + std::to_string(idx[i]);
  return s + "}";
}

inline std::string exponent_string(const Exponent& e) {
  std::string s = "(";
  for (std::size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
  return s + ")";
}

// ---------------------------------------------------------------- input

namespace detail {

inline std::string position(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Parse, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline json parse_json(const std::string& text, const std::string& path) {
  if (text.find_first_not_of(" \t\r\n") == std::string::npos)
    throw Error(ErrorCode::Parse, path + ": line 1, column 1: empty input");
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t byte = e.byte > 0 ? e.byte - 1 : 0;
    throw Error(ErrorCode::Parse, path + ": " + position(text, byte) + ": malformed JSON");
  }
}

inline const json& field(const json& j, const std::string& key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorCode::Parse, "missing field '" + key + "'");
  return j.at(key);
}

inline Rational rational(const json& j) {
  if (j.is_number_integer()) return Rational(Int(j.dump()));
  if (j.is_string()) return exact::parse_rational(j.get<std::string>());
  throw Error(ErrorCode::Parse, "expected an integer or a \"p/q\" string, got " + j.dump());
}

inline Int integer(const json& j) {
  Rational q = rational(j);
  if (q.get_den() != 1) throw Error(ErrorCode::Parse, "expected an integer, got " + j.dump());
  return q.get_num();
}

inline long small(const json& j) {
  if (!j.is_number_integer()) throw Error(ErrorCode::Parse, "expected an integer, got " + j.dump());
  return j.get<long>();
}

inline const json& array(const json& j, const std::string& what) {
  if (!j.is_array()) throw Error(ErrorCode::Parse, what + " must be a list");
  return j;
}

inline RatVec rat_vec(const json& j) {
  RatVec v;
  for (const auto& x : array(j, "vector")) v.push_back(rational(x));
  return v;
}

inline IntVec int_vec(const json& j) {
  IntVec v;
  for (const auto& x : array(j, "vector")) v.push_back(integer(x));
  return v;
}

inline std::vector<std::string> names(const json& j) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (const auto& x : array(j, "variables")) {
    if (!x.is_string()) throw Error(ErrorCode::Parse, "variable names must be strings");
    auto s = x.get<std::string>();
    if (s.empty() || !seen.insert(s).second) throw Error(ErrorCode::Parse, "bad or repeated variable '" + s + "'");
    out.push_back(s);
  }
  return out;
}

inline std::vector<Polynomial> polynomials(const json& j, const std::vector<std::string>& vars) {
  std::vector<Polynomial> out;
  for (const auto& x : array(j, "polynomial list")) {
    if (!x.is_string()) throw Error(ErrorCode::Parse, "polynomials must be strings");
    out.push_back(parse_polynomial(x.get<std::string>(), vars));
  }
  return out;
}

inline std::size_t rank_of(const json& j) {
  if (j.contains("rank")) return static_cast<std::size_t>(small(j.at("rank")));
  const auto& tail = array(field(j, "tail_cone"), "tail_cone");
  if (tail.empty()) throw Error(ErrorCode::Parse, "empty tail_cone needs an explicit 'rank'");
  return tail.front().size();
}

inline std::vector<SigmaPolyhedron> coefficients(const json& j) {
  const std::size_t r = rank_of(j);
  std::vector<IntVec> rays;
  if (j.contains("tail_cone"))
    for (const auto& g : array(j.at("tail_cone"), "tail_cone")) rays.push_back(int_vec(g));
  RationalCone tail(r, rays);
  std::vector<SigmaPolyhedron> out;
  for (const auto& c : array(field(j, "coefficients"), "coefficients")) {
    std::vector<RatVec> verts;
    for (const auto& v : array(c, "vertex list")) verts.push_back(rat_vec(v));
    out.emplace_back(r, verts, tail);
  }
  return out;
}

inline std::vector<RatVec> weight_list(const json& j) {
  const json& list = j.is_array() ? j : field(j, "weights");
  std::vector<RatVec> out;
  for (const auto& w : array(list, "weights")) out.push_back(rat_vec(w));
  return out;
}

}  // namespace detail

/// Either a base ideal (generic divisor) or linear forms (arrangement).
struct DivisorInput {
  PolyhedralDivisorSpec spec;
  std::vector<Polynomial> generators;
  std::optional<ArrangementSpec> arrangement;
};

inline ArrangementSpec arrangement_from(const json& j) {
  ArrangementSpec a;
  a.form_variables = detail::names(detail::field(j, "variables"));
  a.forms = detail::polynomials(detail::field(j, "linear_forms"), a.form_variables);
  a.coefficients = detail::coefficients(j);
  for (const auto& f : a.forms)
    if (!alg::is_linear(f)) throw Error(ErrorCode::Parse, "linear_forms must be homogeneous linear");
  if (a.coefficients.size() != a.forms.size())
    throw Error(ErrorCode::DimensionMismatch, "need one coefficient per linear form");
  return a;
}

inline DivisorInput divisor_from(const json& j) {
  DivisorInput in;
  if (j.contains("linear_forms")) {
    in.arrangement = arrangement_from(j);
    auto data = arrangement_to_divisor(*in.arrangement);
    in.spec = data.divisor;
    in.generators = data.circuits;
    return in;
  }
  auto vars = detail::names(detail::field(j, "variables"));
  in.generators = detail::polynomials(detail::field(j, "base_ideal"), vars);
  in.spec = make_divisor_spec(vars, in.generators, detail::coefficients(j));
  return in;
}

inline std::vector<RatVec> weights_for(const JobSpec& job, const json& j, std::size_t m, std::size_t r) {
  std::vector<RatVec> ws;
  if (!job.weights.empty()) {
    auto text = detail::read_file(job.weights);
    ws = detail::weight_list(detail::parse_json(text, job.weights));
  } else if (j.contains("weights")) {
    ws = detail::weight_list(j);
  } else {
    throw Error(ErrorCode::Parse, "no weights: add a 'weights' field or pass --weights");
  }
  for (auto& w : ws) {
    if (w.size() == m) w.resize(m + r, Rational(0));
    if (w.size() != m + r) throw Error(ErrorCode::DimensionMismatch, "weight " + exact::to_string(w) + " has wrong length");
  }
  return ws;
}

inline std::vector<std::vector<std::size_t>> index_sets(const JobSpec& job, const json& j, const ArrangementSpec& a) {
  if (!job.index_set.empty()) return {job.index_set};
  if (j.contains("index_set")) {
    std::vector<std::size_t> I;
    for (const auto& x : detail::array(j.at("index_set"), "index_set")) I.push_back(static_cast<std::size_t>(detail::small(x)));
    return {I};
  }
  const std::size_t n = a.m() + 1, k = n - a.c();
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(k), true);
  do {
    std::vector<std::size_t> I;
    for (std::size_t i = 0; i < n; ++i)
      if (pick[i]) I.push_back(i);
    out.push_back(I);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

inline PolynomialIdeal graded_ideal(const json& j) {
  auto vars = detail::names(detail::field(j, "variables"));
  auto gens = j.contains("ideal") ? detail::polynomials(j.at("ideal"), vars) : std::vector<Polynomial>{};
  PolynomialIdeal I(vars, gens);
  if (j.contains("grading")) {
    std::vector<IntVec> rows;
    for (const auto& row : detail::array(j.at("grading"), "grading")) rows.push_back(detail::int_vec(row));
    if (rows.size() != vars.size()) throw Error(ErrorCode::DimensionMismatch, "one grading row per variable");
    I = I.with_grading(IntMatrix::from_rows(rows, rows.empty() ? 0 : rows.front().size()));
  }
  return I;
}

// ---------------------------------------------------------------- commands

namespace detail {

inline void presentation_records(Report& rep, const SemiCanonicalPresentation& pres) {
  rep.section("presentation");
  rep.put("variables", std::to_string(pres.variables.size()));
  std::vector<std::string> order;
  for (std::size_t i = 0; i < pres.coordinates.size(); ++i)
    order.push_back(pres.variables[i] + " " + exact::to_string(pres.coordinates[i]));
  rep.list("ordering", order);
  rep.list("ideal", ideal_lines(pres.ideal));
}

inline void lift_records(Report& rep, const ConeLiftReport& r) {
  rep.put("weight", exact::to_string(r.weight));
  rep.put("lifted_weight", exact::to_string(r.lifted_weight));
  rep.list("base_initial", ideal_lines(r.base_initial));
  rep.put("irreducible", to_string(r.condition_irreducible));
  rep.put("irreducible_route", r.irreducible_route);
  rep.put("initial_forms_generate", r.condition_initial_generates);
  rep.put("degrees_preserved", r.condition_degree_polyhedra);
  rep.list("initial_ideal", ideal_lines(r.initial));
  rep.list("degenerate_ideal", ideal_lines(r.degenerate));
  rep.put("ideals_equal", r.ideals_equal);
  rep.put("initial_prime", to_string(r.initial_prime));
  rep.put("prime_certified", r.prime_certified);
}

inline int cmd_embed(const JobSpec&, const json& j, Report& rep) {
  auto in = divisor_from(j);
  auto pres = semicanonical_presentation(in.spec);
  rep.put("m", in.spec.m());
  rep.put("rank", in.spec.rank());
  rep.list("base_ideal", ideal_lines(in.spec.base_ideal));
  rep.list("delta_rays", vector_lines(extreme_rays(pres.delta)));
  presentation_records(rep, pres);
  return 0;
}

inline int cmd_generators(const JobSpec&, const json& j, Report& rep) {
  auto in = divisor_from(j);
  auto pres = semicanonical_presentation(in.spec);
  auto set = generating_set(in.spec, in.generators);
  presentation_records(rep, pres);
  for (std::size_t i = 0; i < set.polyhedra.size(); ++i) {
    rep.section("degree_polyhedron." + std::to_string(i));
    rep.put("generator", alg::to_string(alg::normalized(in.generators[i]), in.spec.base_variables));
    std::vector<std::string> rows;
    for (const auto& q : set.polyhedra[i].inequalities())
      rows.push_back(exact::to_string(q.normal) + " >= " + exact::to_string(q.bound));
    rep.list("inequalities", rows);
  }
  rep.section("generating_set");
  std::vector<std::string> elems;
  for (const auto& e : set.elements)
    elems.push_back(alg::to_string(alg::normalized(e.base), in.spec.base_variables) + " shift " +
                    exact::to_string(e.shift) + " weight " + exact::to_string(e.weight));
  rep.list("elements", elems);
  auto ideal = generating_set_ideal(pres, set);
  rep.list("ideal", ideal_lines(ideal));
  bool same = ideal_equals(ideal, pres.ideal);
  rep.put("equals_elimination", same);
  return same ? 0 : 1;
}

inline int cmd_lift(const JobSpec& job, const json& j, Report& rep) {
  auto in = divisor_from(j);
  auto pres = semicanonical_presentation(in.spec);
  presentation_records(rep, pres);
  auto ws = weights_for(job, j, in.spec.m(), in.spec.rank());
  for (std::size_t i = 0; i < ws.size(); ++i) {
    rep.section("weight." + std::to_string(i));
    rep.put("weight", exact::to_string(ws[i]));
    rep.put("lifted_weight", exact::to_string(lift_weight(pres, ws[i])));
  }
  return 0;
}

inline int cmd_degenerate(const JobSpec& job, const json& j, Report& rep) {
  auto in = divisor_from(j);
  auto ws = weights_for(job, j, in.spec.m(), in.spec.rank());
  rep.list("base_ideal", ideal_lines(in.spec.base_ideal));
  int code = 0;
  for (std::size_t i = 0; i < ws.size(); ++i) {
    rep.section("weight." + std::to_string(i));
    rep.put("weight", exact::to_string(ws[i]));
    try {
      rep.list("base_initial", ideal_lines(degenerate_base(in.spec, ws[i])));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::MonomialInInitial) throw;
      rep.put("base_initial", "monomial");
      code = 1;
    }
  }
  return code;
}

inline int cmd_lift_check(const JobSpec& job, const json& j, Report& rep) {
  auto in = divisor_from(j);
  auto pres = semicanonical_presentation(in.spec);
  presentation_records(rep, pres);
  auto ws = weights_for(job, j, in.spec.m(), in.spec.rank());
  auto reports = cone_lift_checks(in.spec, pres, in.generators, ws, job.parallel);
  for (std::size_t i = 0; i < reports.size(); ++i) {
    rep.section("weight." + std::to_string(i));
    lift_records(rep, reports[i]);
  }
  return 0;
}

inline void wellpoised_records(Report& rep, const WellPoisedReport& w) {
  presentation_records(rep, w.presentation);
  rep.section("arrangement");
  rep.list("circuits", ideal_lines(w.data.divisor.base_ideal.with_generators(w.data.circuits)));
  rep.put("cones", w.cones.size());
  for (std::size_t i = 0; i < w.cones.size(); ++i) {
    const auto& c = w.cones[i];
    rep.section("cone." + std::to_string(i));
    rep.put("dimension", c.dimension);
    rep.list("rays", vector_lines(c.rays));
    rep.list("lineality", vector_lines(c.lineality));
    rep.put("representative", exact::to_string(c.representative));
    lift_records(rep, w.reports[i]);
  }
  rep.section("verdict");
  rep.put("well_poised", w.all_certified);
}

inline int cmd_verify(const JobSpec& job, const json& j, Report& rep) {
  auto a = arrangement_from(j);
  auto w = verify_well_poised(a, job.parallel);
  wellpoised_records(rep, w);
  return w.all_certified ? 0 : 1;
}

inline int cmd_value_semigroup(const JobSpec& job, const json& j, Report& rep) {
  auto a = arrangement_from(j);
  auto regions = linearity_regions(a.coefficients);
  for (const auto& I : index_sets(job, j, a)) {
    auto s = value_semigroup(a, I);
    rep.section("index_set." + index_string(I));
    rep.put("minimizing", index_string(s.minimizing()));
    rep.put("complement", index_string(s.complement()));
    for (std::size_t k = 0; k < regions.size(); ++k) {
      const auto& reg = regions[k];
      rep.list("region." + std::to_string(k) + ".rays", vector_lines(reg.rays));
      std::vector<std::string> lines;
      RatVec upper(s.rank(), Rational(0));
      for (auto i : s.minimizing()) upper = exact::add(upper, reg.vertices[i]);
      lines.push_back("sum(v) <= floor<" + exact::to_string(upper) + ",u>");
      for (std::size_t c = 0; c < s.c(); ++c)
        lines.push_back("v" + std::to_string(c + 1) + " >= -floor<" +
                        exact::to_string(reg.vertices[s.complement()[c]]) + ",u>");
      rep.list("region." + std::to_string(k) + ".bounds", lines);
    }
    if (j.contains("points")) {
      std::vector<std::string> verdicts;
      for (const auto& p : detail::array(j.at("points"), "points")) {
        IntVec x = detail::int_vec(p);
        if (x.size() != s.c() + s.rank()) throw Error(ErrorCode::DimensionMismatch, "point has wrong length");
        IntVec v(x.begin(), x.begin() + static_cast<long>(s.c())), u(x.begin() + static_cast<long>(s.c()), x.end());
        verdicts.push_back(exact::to_string(x) + (s.contains(v, u) ? " in" : " out"));
      }
      rep.list("points", verdicts);
    }
  }
  return 0;
}

inline int cmd_nok_cone(const JobSpec& job, const json& j, Report& rep) {
  auto a = arrangement_from(j);
  for (const auto& I : index_sets(job, j, a)) {
    auto p = nok_cone(a, I);
    rep.section("index_set." + index_string(I));
    std::vector<std::string> rows;
    for (const auto& q : p.inequalities()) rows.push_back(exact::to_string(q.normal) + " >= " + exact::to_string(q.bound));
    rep.list("inequalities", rows);
    auto g = p.homogenization();
    std::vector<std::string> rays;
    for (const auto& ray : g.rays) rays.push_back(exact::to_string(IntVec(ray.begin(), ray.end() - 1)));
    rep.list("rays", rays);
  }
  return 0;
}

inline int cmd_admissable(const JobSpec& job, const json& j, Report& rep) {
  auto a = arrangement_from(j);
  int code = 0;
  for (const auto& I : index_sets(job, j, a)) {
    auto res = is_saturated(a, I);
    rep.section("index_set." + index_string(I));
    rep.put("admissable", res.admissable);
    rep.put("saturated", res.admissable);
    if (res.witness) rep.put("witness", exact::to_string(*res.witness));
    if (!res.admissable) code = 1;
  }
  return code;
}

inline int cmd_cm_check(const JobSpec&, const json& j, Report& rep) {
  auto a = arrangement_from(j);
  auto res = cm_sufficient(a);
  rep.put("sufficient", res.sufficient);
  if (res.sufficient) rep.put("index_set", index_string(res.index_set));
  return res.sufficient ? 0 : 1;
}

inline void toric_records(Report& rep, const MonomialPresentation& pres) {
  std::vector<std::string> order;
  for (std::size_t i = 0; i < pres.monomials.size(); ++i)
    order.push_back(pres.ideal.variables()[i] + " " + exponent_string(pres.monomials[i]));
  rep.list("ordering", order);
  rep.put("veronese", pres.veronese);
  rep.put("degree_zero_invariants", pres.degree_zero_invariants);
  rep.list("ideal", ideal_lines(pres.ideal));
}

inline bool toric_well_poised(Report& rep, const MonomialPresentation& pres) {
  auto t = toric_check(pres);
  rep.section("tropical");
  rep.list("lineality", vector_lines(t.lineality));
  rep.put("initial_ideal_constant", t.initial_constant);
  rep.put("binomial_prime", t.primality.verdict == Certificate::Prime);
  rep.put("reason", t.primality.reason);
  return t.well_poised();
}

inline int cmd_veronese(const JobSpec&, const json& j, Report& rep) {
  auto g = graded_ideal(j);
  auto pres = veronese_presentation(g, detail::small(field(j, "degree")));
  toric_records(rep, pres);
  return toric_well_poised(rep, pres) ? 0 : 1;
}

inline int cmd_segre(const JobSpec&, const json& j, Report& rep) {
  const auto& fs = detail::array(field(j, "factors"), "factors");
  if (fs.size() != 2) throw Error(ErrorCode::Parse, "segre needs exactly two factors");
  auto pres = segre_presentation(graded_ideal(fs[0]), graded_ideal(fs[1]));
  toric_records(rep, pres);
  return toric_well_poised(rep, pres) ? 0 : 1;
}

inline void quotient_records(Report& rep, const QuotientResult& q) {
  toric_records(rep, q.presentation);
  for (std::size_t i = 0; i < q.weights.size(); ++i) {
    const auto& w = q.weights[i];
    rep.section("test_weight." + std::to_string(i));
    rep.put("source", exact::to_string(w.source));
    rep.put("image", exact::to_string(w.image));
    rep.list("initial_ideal", ideal_lines(w.initial));
    rep.put("khovanskii", w.khovanskii);
    rep.put("prime", to_string(w.prime));
  }
}

inline int cmd_quotient(const JobSpec& job, const json& j, Report& rep) {
  auto g = graded_ideal(j);
  IntVec beta = detail::int_vec(field(j, "character"));
  std::vector<RatVec> ws;
  if (!job.weights.empty() || j.contains("weights")) ws = weights_for(job, j, g.nvars(), 0);
  auto q = git_quotient_presentation(g, beta, job.cap, ws);
  quotient_records(rep, q);
  return 0;
}

inline HypertoricSpec hypertoric_from(const json& j) {
  HypertoricSpec spec;
  for (const auto& v : detail::array(field(j, "a"), "a")) spec.a.push_back(detail::int_vec(v));
  spec.r = detail::int_vec(field(j, "r"));
  return spec;
}

inline int cmd_hypertoric(const JobSpec& job, const json& j, Report& rep) {
  auto spec = hypertoric_from(j);
  auto t = hypertoric_total_space(spec, job.parallel);
  rep.section("matrices");
  rep.put("sF_identity", t.matrices.sf_identity);
  rep.put("AB_identity", t.matrices.ab_identity);
  rep.put("AB_unipotent", t.matrices.ab_unipotent);
  rep.put("det_A", exact::to_string(t.matrices.det_a));
  rep.put("delta_smooth", t.delta_smooth);
  rep.put("delta_from_cocharacters", t.delta_from_cocharacters);
  rep.put("delta_from_A", t.delta_from_a);
  rep.section("moment");
  rep.list("ideal", ideal_lines(t.moment));
  wellpoised_records(rep, t.wellposed);
  rep.section("total_space");
  std::vector<std::string> match;
  auto cot = quot::cotangent_names(spec.d());
  for (std::size_t h = 0; h < t.matching.size(); ++h)
    match.push_back(t.wellposed.presentation.variables[h] + " -> " +
                    (t.matching[h] < cot.size() ? cot[t.matching[h]] : std::string("?")));
  rep.list("matching", match);
  rep.put("presentation_matches", t.presentation_matches);
  bool ok = t.presentation_matches && t.wellposed.all_certified;
  if (j.value("quotient", false)) {
    auto q = git_quotient_presentation(t.moment, hypertoric_character(spec), job.cap, total_space_weights(t));
    rep.section("quotient");
    rep.put("character", exact::to_string(hypertoric_character(spec)));
    quotient_records(rep, q);
  }
  return ok ? 0 : 1;
}

}  // namespace detail

/// Exit codes: 0 success, 1 negative mathematical verdict, 2 input error.
inline int run(const JobSpec& job, std::ostream& out, std::ostream& err) {
  using Handler = int (*)(const JobSpec&, const json&, Report&);
  static const std::map<std::string, Handler> table{
      {"embed", detail::cmd_embed},
      {"generators", detail::cmd_generators},
      {"lift", detail::cmd_lift},
      {"degenerate", detail::cmd_degenerate},
      {"lift-check", detail::cmd_lift_check},
      {"verify-wellpoised", detail::cmd_verify},
      {"value-semigroup", detail::cmd_value_semigroup},
      {"nok-cone", detail::cmd_nok_cone},
      {"admissable", detail::cmd_admissable},
      {"cm-check", detail::cmd_cm_check},
      {"veronese", detail::cmd_veronese},
      {"segre", detail::cmd_segre},
      {"quotient", detail::cmd_quotient},
      {"hypertoric", detail::cmd_hypertoric},
  };
  auto it = table.find(job.command);
  if (it == table.end()) {
    err << "error: unknown command '" << job.command << "'\n";
    return 2;
  }
  try {
    auto text = detail::read_file(job.input);
    auto j = detail::parse_json(text, job.input);
    Report rep;
    rep.put("command", job.command);
    rep.put("input_hash", fnv1a(text));
    int code = it->second(job, j, rep);
    rep.write(out, job.format);
    return code;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::CapExceeded ? 1 : 2;
  } catch (const json::exception& e) {
    err << "error: Parse: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace wp::cli
