#include "mhorn/io.hpp"

#include <cmath>

#include <json.hpp>

#include "mhorn/catalog_store.hpp"
#include "mhorn/errors.hpp"

namespace mhorn {

using nlohmann::json;

namespace {

json parseDocument(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

double asReal(const json& j, const char* what) {
  if (!j.is_number()) throw ParseError(std::string(what) + " must be a number");
  return j.get<double>();
}

std::vector<int> asIntArray(const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw ParseError(std::string(what) + " must hold integers");
    out.push_back(x.get<int>());
  }
  return out;
}

}  // namespace

std::string catalogToJson(const TripleCatalog& catalog) {
  json triples = json::array();
  for (const auto& t : catalog.triples) {
    json entry;
    entry["r"] = t.rank();
    entry["I"] = std::vector<int>(t.I().begin(), t.I().end());
    entry["J"] = std::vector<int>(t.J().begin(), t.J().end());
    entry["K"] = std::vector<int>(t.K().begin(), t.K().end());
    triples.push_back(std::move(entry));
  }
  json doc;
  doc["n"] = catalog.n;
  doc["version"] = kCatalogFormatVersion;
  doc["triples"] = std::move(triples);
  return doc.dump(1);
}

TripleCatalog parseCatalog(std::string_view text) {
  const json doc = parseDocument(text);
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("version") || !doc.contains("triples"))
    throw ParseError("catalog needs n, version and triples");
  if (!doc["n"].is_number_integer() || !doc["version"].is_number_integer())
    throw ParseError("catalog n and version must be integers");
  if (doc["version"].get<int>() != kCatalogFormatVersion)
    throw ParseError("unsupported catalog version " + std::to_string(doc["version"].get<int>()));
  TripleCatalog catalog;
  catalog.n = doc["n"].get<int>();
  if (catalog.n < 1) throw ParseError("catalog n must be positive");
  if (!doc["triples"].is_array()) throw ParseError("triples must be an array");
  for (const auto& entry : doc["triples"]) {
    if (!entry.is_object()) throw ParseError("each triple must be an object");
    HornTriple t(IndexSubset(catalog.n, asIntArray(entry.at("I"), "I")),
                 IndexSubset(catalog.n, asIntArray(entry.at("J"), "J")),
                 IndexSubset(catalog.n, asIntArray(entry.at("K"), "K")));
    if (entry.contains("r") && entry["r"] != t.rank()) throw ParseError("triple r disagrees with |I|");
    catalog.triples.push_back(std::move(t));
  }
  return catalog;
}

std::string matrixToJson(const ComplexMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return rows.dump();
}

namespace {

std::complex<double> asComplex(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2) throw ParseError("matrix entries must be [re, im] pairs");
  return {asReal(j[0], "real part"), asReal(j[1], "imaginary part")};
}

}  // namespace

ComplexMatrix parseMatrix(std::string_view text) {
  const json doc = parseDocument(text);
  if (!doc.is_array() || doc.empty()) throw ParseError("matrix must be a nonempty array");
  // Nested rows hold pairs or plain reals and have as many entries as there are rows;
  // a flat list holds k*k pairs. The two readings never coincide (k*k = 2 has no solution).
  const bool nested = doc[0].is_array() && !doc[0].empty() &&
                      (doc[0][0].is_array() || doc[0].size() == doc.size());
  ComplexMatrix m;
  if (nested) {
    const auto n = static_cast<Eigen::Index>(doc.size());
    m.resize(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      const auto& row = doc[static_cast<std::size_t>(i)];
      if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) throw DimensionError("matrix must be square");
      for (Eigen::Index j = 0; j < n; ++j) m(i, j) = asComplex(row[static_cast<std::size_t>(j)]);
    }
  } else {
    const auto total = doc.size();
    const auto n = static_cast<Eigen::Index>(std::llround(std::sqrt(static_cast<double>(total))));
    if (static_cast<std::size_t>(n * n) != total) throw DimensionError("flat matrix length is not a perfect square");
    m.resize(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) m(i, j) = asComplex(doc[static_cast<std::size_t>(i * n + j)]);
  }
  if (!m.allFinite()) throw DomainError("matrix entries must be finite");
  return m;
}

std::string spectrumToJson(const SingularSpectrum& s) {
  return json(std::vector<double>(s.values().begin(), s.values().end())).dump();
}

SingularSpectrum parseSpectrum(std::string_view text) {
  const json doc = parseDocument(text);
  if (!doc.is_array()) throw ParseError("spectrum must be an array of reals");
  if (doc.empty()) throw DomainError("spectrum must have at least one entry");
  std::vector<double> values;
  for (const auto& x : doc) values.push_back(asReal(x, "spectrum entry"));
  return SingularSpectrum(std::move(values));
}

std::string stepFunctionToJson(const StepFunction& f) {
  json points = json::array();
  for (const auto& b : f.breakpoints()) {
    if (b.isExact())
      points.push_back(b.exact()->toString());
    else
      points.push_back(b.value());
  }
  json doc;
  doc["breakpoints"] = std::move(points);
  doc["values"] = std::vector<double>(f.values().begin(), f.values().end());
  return doc.dump();
}

StepFunction parseStepFunction(std::string_view text) {
  const json doc = parseDocument(text);
  if (!doc.is_object() || !doc.contains("breakpoints") || !doc.contains("values"))
    throw ParseError("step function needs breakpoints and values");
  if (!doc["breakpoints"].is_array() || !doc["values"].is_array())
    throw ParseError("breakpoints and values must be arrays");
  std::vector<Breakpoint> points;
  for (const auto& b : doc["breakpoints"]) {
    if (b.is_string())
      points.emplace_back(Rational::parse(b.get<std::string>()));
    else if (b.is_number_integer())
      points.emplace_back(Rational(b.get<std::int64_t>()));
    else
      points.emplace_back(asReal(b, "breakpoint"));
  }
  std::vector<double> values;
  for (const auto& v : doc["values"]) values.push_back(asReal(v, "value"));
  return StepFunction(std::move(points), std::move(values));
}

}  // namespace mhorn
