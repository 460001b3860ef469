#pragma once

#include <string>
#include <vector>
#include "wellpoised/arrangement.hpp"
#include "wellpoised/semicanonical.hpp"

namespace fixtures {

inline std::string data(const std::string& name) { return std::string(WP_DATA_DIR) + "/" + name; }

inline std::vector<wp::SigmaPolyhedron> elliptic_coefficients() {
  using wp::Rational;
  return {wp::SigmaPolyhedron::ray_from(Rational(6, 5)), wp::SigmaPolyhedron::ray_from(Rational(-1, 2)),
          wp::SigmaPolyhedron::ray_from(Rational(-2, 3))};
}

inline const std::vector<std::string>& elliptic_names() {
  static const std::vector<std::string> t{"t1", "t2"};
  return t;
}

inline wp::Polynomial elliptic_curve() { return wp::parse_polynomial("t2^2 - t1^3 - t1", elliptic_names()); }

inline wp::PolyhedralDivisorSpec elliptic() {
  return wp::make_divisor_spec(elliptic_names(), {elliptic_curve()}, elliptic_coefficients());
}

/// The same coefficients at 0, ∞ and −1 on ℙ¹.
inline wp::ArrangementSpec e8() {
  wp::ArrangementSpec a;
  a.form_variables = {"x", "y"};
  for (const char* f : {"x", "y", "x + y"}) a.forms.push_back(wp::parse_polynomial(f, a.form_variables));
  a.coefficients = elliptic_coefficients();
  return a;
}

inline wp::PolynomialIdeal ideal(const std::vector<std::string>& names, const std::vector<std::string>& gens) {
  std::vector<wp::Polynomial> ps;
  for (const auto& g : gens) ps.push_back(wp::parse_polynomial(g, names));
  return wp::PolynomialIdeal(names, ps);
}

}  // namespace fixtures
