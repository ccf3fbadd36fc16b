#pragma once

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "volterra/errors.hpp"

namespace volterra {

// Exact scalar type. GMP keeps values reduced with a positive denominator,
// which is the canonical form used throughout.
using Rational = mpq_class;

// Coordinate vector of an algebra element in the natural basis.
using Element = std::vector<Rational>;

inline Rational rat(long num, long den = 1) {
  if (den == 0) throw RangeError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Strict parser for "num", "-num" or "num/den" (base 10, no floats).
inline Rational parse_rational(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  std::string_view s = trim(text);
  if (s.empty()) throw ParseError("empty rational literal");

  auto is_int = [](std::string_view t) {
    if (!t.empty() && (t.front() == '-' || t.front() == '+')) t.remove_prefix(1);
    if (t.empty()) return false;
    for (char c : t)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };

  std::string_view num = s, den = "1";
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    num = trim(s.substr(0, slash));
    den = trim(s.substr(slash + 1));
  }
  if (!is_int(num) || !is_int(den))
    throw ParseError("bad rational literal '" + std::string(text) + "' (expected num or num/den)");

  Rational q(mpz_class(std::string(num), 10), mpz_class(std::string(den), 10));
  if (q.get_den() == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

/// Canonical text form: "num" when integral, else "num/den".
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline double to_double(const Rational& q) { return q.get_d(); }

inline Element basis_element(int dim, int i) {
  if (i < 0 || i >= dim) throw IndexError("basis index out of range");
  Element e(static_cast<std::size_t>(dim), Rational(0));
  e[static_cast<std::size_t>(i)] = 1;
  return e;
}

inline Rational l1_norm(const Element& x) {
  Rational s(0);
  for (const auto& c : x) s += abs(c);
  return s;
}

inline Element add(const Element& x, const Element& y) {
  if (x.size() != y.size()) throw ShapeError("element size mismatch");
  Element r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] + y[i];
  return r;
}

inline Element scale(const Rational& c, const Element& x) {
  Element r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = c * x[i];
  return r;
}

}  // namespace volterra
