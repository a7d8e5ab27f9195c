#pragma once

#include <string>
#include <vector>

#include "gqs/basis.hpp"
#include "json.hpp"

namespace gqs::cli {

inline constexpr const char* kDocumentVersion = "gqs-1";

/// Persistent form of a spline.
struct SplineDocument {
  std::vector<double> knots;
  std::vector<double> betas;
  std::vector<double> coeffs;
  nlohmann::json meta = nlohmann::json::object();

  static SplineDocument from_spline(const GqsSpline& spline,
                                    nlohmann::json meta = nlohmann::json::object());
  /// Rebuilds the spline, re-running every geometry check.
  GqsSpline spline() const;
};

/// Canonical text: fixed key order, one array per line, numbers with 17
/// significant digits. Reading and re-serializing gives identical bytes.
std::string serialize(const SplineDocument& doc);
SplineDocument deserialize(const std::string& text);

void save(const std::string& path, const SplineDocument& doc);
SplineDocument load(const std::string& path);

}  // namespace gqs::cli
