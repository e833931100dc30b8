#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "steklov/clump_combinatorics.hpp"
#include "steklov/extremal.hpp"
#include "steklov/geometry.hpp"
#include "steklov/rational.hpp"
#include "steklov/spectral.hpp"

namespace steklov {

inline constexpr const char* kVersion = "0.1.0";

using nlohmann::ordered_json;

/// 17 significant digits; "inf" / "-inf" / "nan" for non-finite values.
std::string format_double(double x);
/// Extended values with `digits` significant digits.
std::string format_extended(const Extended& x, int digits = 30);

/// Serialises like nlohmann's dump but prints every floating-point number
/// with 17 significant digits. Non-finite numbers become the strings above.
std::string render(const ordered_json& doc, int indent = 2);

/// {"exact": "p/q", "value": p/q as a double}
ordered_json rational_json(const Rational& q);
/// Doubles that may be infinite are stored as strings so JSON stays valid.
ordered_json number_json(double x);

ordered_json spectrum_json(const SpectralResult& r, double tol, bool vectors);
ordered_json point_json(const GeometricPoint& p);
ordered_json clump_json(const ClumpNumber& c);
ordered_json certificate_json(const RemovalCertificate& c);
ordered_json sub_k_json(const SubKWitness& w);
ordered_json type_ab_json(const TypeABClassification& t);
ordered_json nodal_json(const NodalDecomposition& d, const NodalVerdict& v);
ordered_json target_json(const ExtremalTarget& t);
ordered_json extremal_json(const ExtremalReport& r);

ordered_json sweep_state_json(const SweepState& s);
SweepState sweep_state_from_json(const nlohmann::json& doc);

std::string extremal_csv_header();
std::string extremal_csv_row(const ExtremalReport& r);

/// Envelope for every CLI payload. Timing is the only field that varies
/// between identical runs.
struct RunReport {
  std::vector<std::string> command;
  double seconds = 0.0;
  ordered_json payload;

  ordered_json to_json() const;
};

}  // namespace steklov
