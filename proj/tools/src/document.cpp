#include "gqs_cli/document.hpp"

#include <sstream>

#include "gqs_cli/csv.hpp"

namespace gqs::cli {
namespace {

using nlohmann::json;

void write_array(std::ostringstream& os, const char* key, const std::vector<double>& values) {
  os << "  \"" << key << "\": [";
  for (std::size_t k = 0; k < values.size(); ++k) {
    os << (k ? ", " : "") << format_number(values[k]);
  }
  os << "],\n";
}

std::vector<double> read_array(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array()) {
    throw ValidationError(std::string("document field '") + key + "' must be an array");
  }
  std::vector<double> values;
  for (const json& v : j[key]) {
    if (!v.is_number()) {
      throw ValidationError(std::string("document field '") + key + "' holds a non-number");
    }
    values.push_back(v.get<double>());
  }
  return values;
}

}  // namespace

SplineDocument SplineDocument::from_spline(const GqsSpline& spline, nlohmann::json meta) {
  const GqsSpace& space = spline.space();
  SplineDocument doc;
  doc.knots.assign(space.partition().knots().begin(), space.partition().knots().end());
  doc.betas.assign(space.betas().values().begin(), space.betas().values().end());
  doc.coeffs.assign(spline.coeffs().begin(), spline.coeffs().end());
  doc.meta = std::move(meta);
  return doc;
}

GqsSpline SplineDocument::spline() const {
  if (betas.size() + 1 != knots.size()) {
    std::ostringstream os;
    os << "document has " << knots.size() << " knots but " << betas.size() << " betas";
    throw ValidationError(os.str());
  }
  GqsSpace space{Partition(knots), BetaSequence(betas)};
  return GqsSpline(std::move(space), coeffs);
}

std::string serialize(const SplineDocument& doc) {
  std::ostringstream os;
  os << "{\n  \"version\": \"" << kDocumentVersion << "\",\n";
  write_array(os, "knots", doc.knots);
  write_array(os, "betas", doc.betas);
  write_array(os, "coeffs", doc.coeffs);
  os << "  \"meta\": " << doc.meta.dump() << "\n}\n";
  return os.str();
}

SplineDocument deserialize(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("document is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ValidationError("document must be a JSON object");
  if (!j.contains("version") || j["version"] != kDocumentVersion) {
    throw ValidationError(std::string("document version must be \"") + kDocumentVersion + "\"");
  }
  SplineDocument doc;
  doc.knots = read_array(j, "knots");
  doc.betas = read_array(j, "betas");
  doc.coeffs = read_array(j, "coeffs");
  if (j.contains("meta")) {
    if (!j["meta"].is_object()) throw ValidationError("document field 'meta' must be an object");
    doc.meta = j["meta"];
  }
  doc.spline();  // full re-validation
  return doc;
}

void save(const std::string& path, const SplineDocument& doc) {
  write_file(path, serialize(doc));
}

SplineDocument load(const std::string& path) { return deserialize(read_file(path)); }

}  // namespace gqs::cli
