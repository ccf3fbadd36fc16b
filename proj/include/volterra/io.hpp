#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "volterra/algebra.hpp"
#include "volterra/errors.hpp"
#include "volterra/rational.hpp"

namespace volterra {

/// Algebra file content: {"dim": m, "form": "coeffs"|"skew", "matrix": [[...]]}.
/// Entries are bare integers or canonical "num/den" strings; floats are
/// rejected so the exact core never sees rounded input.

inline Rational rational_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_float()) throw ParseError("float values are rejected; use \"num/den\" strings");
  throw ParseError("expected an integer or \"num/den\" string, got " + std::string(j.type_name()));
}

inline nlohmann::json rational_to_json(const Rational& q) {
  if (is_integer(q) && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return to_string(q);
}

inline std::vector<std::vector<Rational>> matrix_from_json(const nlohmann::json& j, int dim) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim) throw ParseError("matrix must have dim rows");
  std::vector<std::vector<Rational>> mat;
  mat.reserve(j.size());
  for (std::size_t r = 0; r < j.size(); ++r) {
    const auto& row = j[r];
    if (!row.is_array() || static_cast<int>(row.size()) != dim) throw ParseError("matrix row " + std::to_string(r + 1) + " must have dim entries");
    std::vector<Rational> out;
    out.reserve(row.size());
    for (std::size_t c = 0; c < row.size(); ++c) {
      try {
        out.push_back(rational_from_json(row[c]));
      } catch (const ParseError& e) {
        throw ParseError("matrix entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) +
                         "): " + e.what());
      }
    }
    mat.push_back(std::move(out));
  }
  return mat;
}

inline AlgebraSpec algebra_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("algebra file must be a JSON object");
  if (!j.contains("dim") || !j["dim"].is_number_integer()) throw ParseError("missing integer field \"dim\"");
  const int dim = j["dim"].get<int>();
  if (dim < 1) throw ParseError("\"dim\" must be positive");
  const std::string form = j.value("form", std::string("coeffs"));
  if (!j.contains("matrix")) throw ParseError("missing field \"matrix\"");
  auto mat = matrix_from_json(j["matrix"], dim);
  if (form == "coeffs") return AlgebraSpec::from_coeffs(std::move(mat));
  if (form == "skew") return AlgebraSpec::from_skew(SkewMatrix(std::move(mat)));
  throw ParseError("\"form\" must be \"coeffs\" or \"skew\"");
}

inline nlohmann::json algebra_to_json(const AlgebraSpec& a) {
  nlohmann::json mat = nlohmann::json::array();
  for (int i = 0; i < a.dim(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < a.dim(); ++j) row.push_back(rational_to_json(a.p(i, j)));
    mat.push_back(std::move(row));
  }
  return {{"dim", a.dim()}, {"form", "coeffs"}, {"matrix", std::move(mat)}};
}

inline nlohmann::json skew_to_json(const SkewMatrix& s) {
  nlohmann::json mat = nlohmann::json::array();
  for (int i = 0; i < s.dim(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int k = 0; k < s.dim(); ++k) row.push_back(rational_to_json(s.at(i, k)));
    mat.push_back(std::move(row));
  }
  return {{"dim", s.dim()}, {"form", "skew"}, {"matrix", std::move(mat)}};
}

/// Parses an algebra file; JSON syntax errors keep their byte position.
inline AlgebraSpec load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
  return algebra_from_json(j);
}

/// Comma-separated rationals, e.g. "1/2,1/4,1/4".
inline Element parse_element(const std::string& csv) {
  Element out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  if (out.empty()) throw ParseError("empty coordinate list");
  return out;
}

inline SimplexPoint parse_simplex(const std::string& csv) { return SimplexPoint(parse_element(csv)); }

}  // namespace volterra
