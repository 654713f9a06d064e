#include "contactlie/io.hpp"

#include "contactlie/errors.hpp"

#include <fstream>
#include <functional>
#include <sstream>

namespace contactlie::io {

namespace {

std::string at(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string at(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }

const json& field(const json& j, const std::string& path, const std::string& key) {
    if (!j.is_object()) throw SchemaError(path.empty() ? "/" : path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw SchemaError(at(path, key), "missing field");
    return *it;
}

const json& array_of(const json& j, const std::string& path, std::optional<std::size_t> size) {
    if (!j.is_array()) throw SchemaError(path, "expected an array");
    if (size && j.size() != *size)
        throw SchemaError(path, "expected " + std::to_string(*size) + " entries, found " + std::to_string(j.size()));
    return j;
}

std::size_t read_index(const json& j, const std::string& path, std::size_t dim) {
    if (!j.is_number_integer()) throw SchemaError(path, "expected an integer index");
    long v = j.get<long>();
    if (v < 1 || static_cast<std::size_t>(v) > dim)
        throw SchemaError(path, "index out of range 1.." + std::to_string(dim));
    return static_cast<std::size_t>(v - 1);
}

}  // namespace

Rational read_rational(const json& j, const std::string& path) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (!j.is_string()) throw SchemaError(path, "expected a rational string \"p\" or \"p/q\"");
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const std::exception& e) {
        throw SchemaError(path, e.what());
    }
}

Vector read_vector(const json& j, const std::string& path, std::size_t n) {
    array_of(j, path, n);
    Vector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = read_rational(j[i], at(path, i));
    return v;
}

Matrix read_matrix(const json& j, const std::string& path, std::size_t rows, std::size_t cols) {
    array_of(j, path, rows);
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        Vector r = read_vector(j[i], at(path, i), cols);
        for (std::size_t c = 0; c < cols; ++c) m(i, c) = r[c];
    }
    return m;
}

LieAlgebra read_algebra(const json& j, const std::string& path) {
    const json& d = field(j, path, "dim");
    if (!d.is_number_integer() || d.get<long>() < 1) throw SchemaError(at(path, "dim"), "expected a positive integer");
    std::size_t n = d.get<std::size_t>();
    std::vector<Rational> c(n * n * n);
    std::vector<bool> seen(n * n, false);
    if (j.contains("brackets")) {
        std::string bp = at(path, "brackets");
        const json& br = array_of(j["brackets"], bp, std::nullopt);
        for (std::size_t k = 0; k < br.size(); ++k) {
            std::string p = at(bp, k);
            std::size_t a = read_index(field(br[k], p, "i"), at(p, "i"), n);
            std::size_t b = read_index(field(br[k], p, "j"), at(p, "j"), n);
            Vector v = read_vector(field(br[k], p, "coeffs"), at(p, "coeffs"), n);
            if (a == b) {
                if (!is_zero(v)) throw SchemaError(p, "[e_i, e_i] must vanish");
                continue;
            }
            if (seen[a * n + b]) throw SchemaError(p, "bracket given twice");
            seen[a * n + b] = seen[b * n + a] = true;
            for (std::size_t r = 0; r < n; ++r) {
                c[(a * n + b) * n + r] = v[r];
                c[(b * n + a) * n + r] = -v[r];
            }
        }
    }
    return LieAlgebra::from_tensor(n, std::move(c));
}

AlmostContact read_almost_contact(const json& j, std::size_t n, const std::string& path) {
    return AlmostContact{read_matrix(field(j, path, "phi"), at(path, "phi"), n, n),
                         read_vector(field(j, path, "xi"), at(path, "xi"), n),
                         read_vector(field(j, path, "eta"), at(path, "eta"), n)};
}

Almost3Contact read_almost_3contact(const json& j, std::size_t n, const std::string& path) {
    std::string sp = at(path, "structures");
    const json& s = array_of(field(j, path, "structures"), sp, 3);
    Almost3Contact t;
    for (std::size_t i = 0; i < 3; ++i) t.s[i] = read_almost_contact(s[i], n, at(sp, i));
    return t;
}

Structure read_structure(const json& j, std::size_t n, const std::string& path) {
    if (j.is_object() && j.contains("structures")) return read_almost_3contact(j, n, path);
    return read_almost_contact(j, n, path);
}

Metric read_metric(const json& j, std::size_t n, const std::string& path) {
    Matrix g = read_matrix(field(j, path, "g"), at(path, "g"), n, n);
    try {
        return Metric(g);
    } catch (const PreconditionError& e) {
        throw SchemaError(at(path, "g"), e.what());
    }
}

json write(const Rational& r) { return r.str(); }

json write(const Vector& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(x.str());
    return out;
}

json write(const Matrix& m) {
    json out = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(write(m.row(i)));
    return out;
}

json write(const IntegerMatrix& m) {
    json out = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(i, c).get_str());
        out.push_back(row);
    }
    return out;
}

json write(const LieAlgebra& l) {
    json br = json::array();
    for (const auto& b : l.brackets()) br.push_back({{"i", b.i + 1}, {"j", b.j + 1}, {"coeffs", write(b.coeffs)}});
    return {{"dim", l.dim()}, {"brackets", br}};
}

json write(const AlmostContact& s) { return {{"phi", write(s.phi)}, {"xi", write(s.xi)}, {"eta", write(s.eta)}}; }

json write(const Almost3Contact& t) {
    json s = json::array();
    for (const auto& x : t.s) s.push_back(write(x));
    return {{"structures", s}};
}

json write(const Structure& s) {
    return std::visit([](const auto& x) { return write(x); }, s);
}

json write(const Metric& g) { return {{"g", write(g.matrix())}}; }

json write(const Form& w) {
    std::size_t n = w.dim(), k = w.degree();
    Indices idx(k);
    std::function<json(std::size_t)> level = [&](std::size_t depth) -> json {
        if (depth == k) {
            Vector v = w.at(idx);
            return w.target() == 1 ? write(v[0]) : write(v);
        }
        json arr = json::array();
        for (std::size_t i = 0; i < n; ++i) {
            idx[depth] = i;
            arr.push_back(level(depth + 1));
        }
        return arr;
    };
    return level(0);
}

json write(const Connection& c) {
    json coeff = json::array();
    for (std::size_t i = 0; i < c.dim(); ++i) coeff.push_back(write(c.coeff(i)));
    return {{"coeff", coeff}};
}

json write(const AbelianizationResult& r) {
    json f = json::array();
    for (const auto& d : r.invariant_factors) {
        if (d.fits_slong_p()) f.push_back(d.get_si());
        else f.push_back(d.get_str());
    }
    return {{"invariant_factors", f}, {"free_rank", r.free_rank}, {"b1", r.b1}, {"group", r.str()}};
}

json write(const CatalogEntry& e) {
    return {{"name", e.name},
            {"params", e.params},
            {"algebra", write(e.algebra)},
            {"structure", write(e.structure)},
            {"metric", write(e.metric)},
            {"expected", e.expected}};
}

CatalogEntry read_catalog_entry(const json& j) {
    const json& name = field(j, "", "name");
    if (!name.is_string()) throw SchemaError("/name", "expected a string");
    LieAlgebra l = read_algebra(field(j, "", "algebra"), "/algebra");
    Structure s = read_structure(field(j, "", "structure"), l.dim(), "/structure");
    Metric g = read_metric(field(j, "", "metric"), l.dim(), "/metric");
    auto read_map = [&](const std::string& key) {
        std::map<std::string, std::string> out;
        if (!j.contains(key)) return out;
        if (!j[key].is_object()) throw SchemaError("/" + key, "expected an object");
        for (const auto& [k, v] : j[key].items()) {
            if (!v.is_string()) throw SchemaError("/" + key + "/" + k, "expected a string");
            out[k] = v.get<std::string>();
        }
        return out;
    };
    return CatalogEntry{name.get<std::string>(), read_map("params"), l, s, g, read_map("expected")};
}

Document read_document(const json& j) {
    Document d{read_algebra(field(j, "", "algebra"), "/algebra"), std::nullopt, std::nullopt};
    if (j.contains("structure")) d.structure = read_structure(j["structure"], d.algebra.dim(), "/structure");
    if (j.contains("metric")) d.metric = read_metric(j["metric"], d.algebra.dim(), "/metric");
    return d;
}

json load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("", "cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw SchemaError("", std::string("invalid JSON: ") + e.what());
    }
}

}  // namespace contactlie::io
