#pragma once

#include <cctype>
#include <cstddef>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "semiord/errors.hpp"
#include "semiord/jets.hpp"
#include "semiord/polynomial.hpp"
#include "semiord/spectrum.hpp"
#include "semiord/witness.hpp"

namespace semiord {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Polynomial JSON: {"vars": d, "terms": [{"exp": [...], "coeff": "num/den"}]}
// Term order is irrelevant on input and graded-lex canonical on output.
// ---------------------------------------------------------------------------

inline Json polynomial_to_json(const Polynomial& p) {
  Json terms = Json::array();
  for (const auto& [m, c] : p.terms()) {
    Json t;
    t["exp"] = m;
    t["coeff"] = c.str();
    terms.push_back(std::move(t));
  }
  Json out;
  out["vars"] = p.variable_count();
  out["terms"] = std::move(terms);
  return out;
}

inline Polynomial polynomial_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("vars") || !j.contains("terms"))
    throw parse_error("polynomial JSON needs 'vars' and 'terms'");
  const unsigned vars = j.at("vars").get<unsigned>();
  Polynomial p(vars);
  for (const auto& t : j.at("terms")) {
    MultiIndex m = t.at("exp").get<MultiIndex>();
    if (m.size() != vars) throw parse_error("term exponent length does not match 'vars'");
    const Rational c = Rational::parse(t.at("coeff").get<std::string>());
    if (c.sign() < 0) throw parse_error("coefficients must be nonnegative");
    p.add_term(std::move(m), c);
  }
  return p;
}

// ---------------------------------------------------------------------------
// Witness certificates
// ---------------------------------------------------------------------------

inline Json witness_to_json(const PowerWitness& w) {
  Json out;
  out["kind"] = "power";
  out["k"] = w.k;
  out["n"] = w.n;
  out["verified_range"] = w.verified_range;
  out["verified"] = true;
  return out;
}

inline Json witness_to_json(const CatalyticWitness& w) {
  Json out;
  out["kind"] = "catalytic";
  out["k"] = w.from_k;
  out["n"] = w.from_n;
  out["a"] = polynomial_to_json(w.a);
  out["verified"] = true;
  return out;
}

inline Json witness_to_json(const StrassenWitness& w) {
  Json out;
  out["kind"] = "strassen";
  out["k"] = w.p.total_degree();
  out["n"] = w.n;
  out["a"] = polynomial_to_json(w.p);
  out["p_at_r0"] = w.p_at_r0.str();
  out["bound"] = w.bound.str();
  out["verified"] = true;
  return out;
}

// ---------------------------------------------------------------------------
// Inline univariate literals: "1+2X+X^2", "3/2*X", "2"
// ---------------------------------------------------------------------------

namespace detail {

struct Cursor {
  const std::string& s;
  std::size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  bool peek_digit() {
    skip_ws();
    return i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]));
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }

  std::string number() {
    skip_ws();
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (start == i) throw parse_error("expected a number at position " + std::to_string(start));
    if (i < s.size() && s[i] == '/') {
      ++i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    }
    return s.substr(start, i - start);
  }

  unsigned exponent() {
    skip_ws();
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (start == i) throw parse_error("expected an exponent at position " + std::to_string(start));
    return static_cast<unsigned>(std::stoul(s.substr(start, i - start)));
  }

  bool eat_var() {
    skip_ws();
    if (i < s.size() && (s[i] == 'X' || s[i] == 'x')) {
      ++i;
      return true;
    }
    return false;
  }
};

}  // namespace detail

/// Parses "1+2X+X^2" style univariate literals into a one-variable
/// polynomial over Q_+.
inline Polynomial parse_univariate_literal(const std::string& text) {
  detail::Cursor cur{text};
  Polynomial p(1);
  bool first = true;
  while (!cur.done()) {
    if (!first && !cur.eat('+')) throw parse_error("expected '+' in polynomial literal");
    first = false;
    Rational coeff(1);
    bool have_coeff = false;
    if (cur.peek_digit()) {
      coeff = Rational::parse(cur.number());
      have_coeff = true;
      cur.eat('*');
    }
    unsigned exp = 0;
    if (cur.eat_var()) {
      exp = 1;
      if (cur.eat('^')) exp = cur.exponent();
    } else if (!have_coeff) {
      throw parse_error("expected a coefficient or X in polynomial literal");
    }
    p.add_term(MultiIndex{exp}, coeff);
  }
  return p;
}

// ---------------------------------------------------------------------------
// Jet expressions: +, -, *, inv(...), parentheses, literals like "2 + 3*X^2"
// ---------------------------------------------------------------------------

namespace detail {

inline Jet parse_jet_expr(Cursor& cur, std::size_t n);

inline Jet parse_jet_atom(Cursor& cur, std::size_t n) {
  cur.skip_ws();
  if (cur.i < cur.s.size() && (cur.s.compare(cur.i, 4, "inv(") == 0)) {
    cur.i += 4;
    Jet inner = parse_jet_expr(cur, n);
    if (!cur.eat(')')) throw parse_error("expected ')' after inv(");
    return jet_inv(inner);
  }
  if (cur.eat('(')) {
    Jet inner = parse_jet_expr(cur, n);
    if (!cur.eat(')')) throw parse_error("expected ')'");
    return inner;
  }
  Jet out(n, Rational(0));
  if (cur.peek_digit()) {
    const Rational c = Rational::parse(cur.number());
    out[0] = c;
    return out;
  }
  if (cur.eat_var()) {
    unsigned exp = 1;
    if (cur.eat('^')) exp = cur.exponent();
    if (exp < n) out[exp] = Rational(1);
    return out;
  }
  throw parse_error("expected a jet atom at position " + std::to_string(cur.i));
}

inline Jet parse_jet_product(Cursor& cur, std::size_t n) {
  Jet acc = parse_jet_atom(cur, n);
  while (cur.eat('*')) acc = jet_mul(acc, parse_jet_atom(cur, n));
  return acc;
}

inline Jet parse_jet_expr(Cursor& cur, std::size_t n) {
  cur.skip_ws();
  bool negate = cur.eat('-');
  Jet acc = parse_jet_product(cur, n);
  if (negate) acc = jet_neg(acc);
  for (;;) {
    if (cur.eat('+')) {
      acc = jet_add(acc, parse_jet_product(cur, n));
    } else if (cur.eat('-')) {
      acc = jet_add(acc, jet_neg(parse_jet_product(cur, n)));
    } else {
      return acc;
    }
  }
}

}  // namespace detail

inline Jet parse_jet_expression(const std::string& text, std::size_t n) {
  detail::Cursor cur{text};
  Jet out = detail::parse_jet_expr(cur, n);
  if (!cur.done()) throw parse_error("trailing input in jet expression");
  return out;
}

/// "+,-,+" -> sign sequence.
inline SignSequence parse_sign_sequence(const std::string& text, std::size_t n) {
  SignSequence eps;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == ',') continue;
    if (text[i] == '+') eps.push_back(1);
    else if (text[i] == '-') eps.push_back(-1);
    else if (!std::isspace(static_cast<unsigned char>(text[i])))
      throw parse_error("bad sign sequence");
  }
  if (eps.size() != n) throw parse_error("sign sequence length must equal n");
  return eps;
}

/// Canonical jet rendering: "1/2 - 3/4*X + X^2"; zero jet prints "0".
inline std::string format_jet(const Jet& a) {
  std::string out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    const Rational mag = abs(a[i]);
    std::string term;
    if (i == 0) {
      term = mag.str();
    } else {
      const std::string var = i == 1 ? "X" : "X^" + std::to_string(i);
      term = mag.is_one() ? var : mag.str() + "*" + var;
    }
    if (out.empty())
      out = (a[i].sign() < 0 ? "-" : "") + term;
    else
      out += (a[i].sign() < 0 ? " - " : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

inline Json spectrum_point_to_json(const SpectrumPoint& phi) {
  Json out;
  out["kind"] = phi.kind == SpectrumPoint::Kind::RealEval ? "RealEval" : "TropicalDir";
  Json coords = Json::array();
  for (const auto& c : phi.coords) coords.push_back(c.str());
  out["coords"] = std::move(coords);
  return out;
}

inline Json verdict_to_json(const DominanceVerdict& v) {
  Json out;
  out["kind"] = to_string(v.kind);
  if (v.point) {
    out["point"] = spectrum_point_to_json(*v.point);
    out["point_exact"] = v.point_exact;
    out["phi_x"] = v.value_x.str();
    out["phi_y"] = v.value_y.str();
  }
  out["note"] = v.note;
  return out;
}

/// One NDJSON record of a spectrum sweep. Exact values print as fractions,
/// enclosures as 12-digit midpoints.
inline std::string sweep_record_to_ndjson(const SweepRecord& rec) {
  const auto lev_str = [](const Enclosure& e) -> std::string {
    if (e.exact) return e.lo.str();
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12f", e.midpoint());
    return buf;
  };
  Json j;
  j["point"] = rec.projective;
  j["lev_x"] = lev_str(rec.lev_x);
  j["lev_y"] = lev_str(rec.lev_y);
  return j.dump();
}

}  // namespace semiord
