#pragma once

#include "contactlie/connection.hpp"
#include "contactlie/constructors.hpp"
#include "contactlie/lattice.hpp"

#include <json.hpp>

#include <string>

namespace contactlie::io {

using json = nlohmann::json;

// Readers throw SchemaError carrying a JSON pointer to the offending node.
Rational read_rational(const json& j, const std::string& path);
Vector read_vector(const json& j, const std::string& path, std::size_t expected_size);
Matrix read_matrix(const json& j, const std::string& path, std::size_t rows, std::size_t cols);
LieAlgebra read_algebra(const json& j, const std::string& path = "");
AlmostContact read_almost_contact(const json& j, std::size_t dim, const std::string& path);
Almost3Contact read_almost_3contact(const json& j, std::size_t dim, const std::string& path);
Structure read_structure(const json& j, std::size_t dim, const std::string& path);
Metric read_metric(const json& j, std::size_t dim, const std::string& path);

json write(const Rational& r);
json write(const Vector& v);
json write(const Matrix& m);
json write(const IntegerMatrix& m);
json write(const LieAlgebra& l);  // brackets with 1-based indices, i < j, nonzero only
json write(const AlmostContact& s);
json write(const Almost3Contact& t);
json write(const Structure& s);
json write(const Metric& g);
// Full nested array over all index tuples; vector-valued forms get an innermost level.
json write(const Form& w);
json write(const Connection& c);
json write(const AbelianizationResult& r);

// {"name", "params", "algebra", "structure", "metric", "expected"}
json write(const CatalogEntry& e);
CatalogEntry read_catalog_entry(const json& j);

// Input document {"algebra", "structure", "metric"?}; metric defaults to absent.
struct Document {
    LieAlgebra algebra;
    std::optional<Structure> structure;
    std::optional<Metric> metric;
};
Document read_document(const json& j);

// Throws SchemaError("", ...) on unreadable files or invalid JSON.
json load_file(const std::string& path);

}  // namespace contactlie::io
