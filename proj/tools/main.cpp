// contactlie: command-line front end for the contactlie library.
#include "contactlie/connection.hpp"
#include "contactlie/constructors.hpp"
#include "contactlie/errors.hpp"
#include "contactlie/io.hpp"
#include "contactlie/lattice.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <future>
#include <iostream>
#include <set>
#include <sstream>

using namespace contactlie;
using io::json;

namespace {

constexpr int kOk = 0;
constexpr int kMathFailure = 1;
constexpr int kInputError = 2;

// Preconditions about the request itself rather than the mathematics.
const std::set<std::string> kInputPreconditions{"unknown-name", "unknown-parameter", "parameter-out-of-range",
                                                "dimension-mismatch", "metric-not-symmetric",
                                                "metric-not-positive"};

struct Outcome {
    json report;
    int code = kOk;
};

struct InputSpec {
    std::string file;
    std::string catalog;
    std::string params;
};

std::map<std::string, std::string> parse_params(const std::string& s) {
    std::map<std::string, std::string> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0) throw SchemaError("--params", "expected K=V, got " + item);
        out[item.substr(0, eq)] = item.substr(eq + 1);
    }
    return out;
}

io::Document load_input(const InputSpec& in) {
    if (!in.catalog.empty()) {
        CatalogEntry e = catalog(in.catalog, parse_params(in.params));
        return io::Document{e.algebra, e.structure, e.metric};
    }
    if (in.file.empty()) throw SchemaError("", "an input file or --catalog NAME is required");
    return io::read_document(io::load_file(in.file));
}

const Structure& need_structure(const io::Document& d) {
    if (!d.structure) throw SchemaError("/structure", "missing field");
    return *d.structure;
}

const Metric& need_metric(const io::Document& d) {
    if (!d.metric) throw SchemaError("/metric", "missing field");
    return *d.metric;
}

json names(const std::vector<std::string>& v) { return json(v); }

Outcome cmd_validate(const io::Document& d) {
    json violations = json::array();
    json warnings = json::array();
    if (auto bad = jacobi_check(d.algebra))
        violations.push_back({{"identity", "jacobi"}, {"indices", {bad->i, bad->j, bad->k}}, {"defect", io::write(bad->defect)}});
    json report;
    if (d.structure && violations.empty()) {
        const Structure& s = *d.structure;
        ValidationReport v = std::holds_alternative<AlmostContact>(s)
                                 ? validate_almost_contact(d.algebra, std::get<AlmostContact>(s))
                                 : validate_almost_3contact(d.algebra, std::get<Almost3Contact>(s));
        for (const auto& name : v.violations) violations.push_back({{"identity", name}});
        for (const auto& w : v.warnings) warnings.push_back(w);
        report["h_dim"] = v.h_dim;
        if (v.ok()) {
            if (std::holds_alternative<AlmostContact>(s)) {
                AbelianCheck ab = is_abelian_contact(d.algebra, std::get<AlmostContact>(s));
                report["abelian"] = ab.ok;
                if (!ab.ok) report["abelian_failure"] = {{"identity", ab.failed_identity}, {"indices", {ab.first, ab.second}}};
            } else {
                report["abelian"] = is_abelian_3contact(d.algebra, std::get<Almost3Contact>(s));
            }
            if (d.metric) {
                bool ok = std::holds_alternative<AlmostContact>(s) ? is_compatible(std::get<AlmostContact>(s), *d.metric)
                                                                   : is_compatible(std::get<Almost3Contact>(s), *d.metric);
                report["metric_compatible"] = ok;
                if (!ok) violations.push_back({{"identity", "metric-compatibility"}});
            }
        }
    }
    report["ok"] = violations.empty();
    report["violations"] = violations;
    report["warnings"] = warnings;
    return {report, violations.empty() ? kOk : kMathFailure};
}

Outcome cmd_classify(const io::Document& d, bool dim3, bool dim7) {
    const Structure& s = need_structure(d);
    if (dim3 == dim7) throw SchemaError("", "exactly one of --dim3 / --dim7 is required");
    if (dim3) {
        if (!std::holds_alternative<AlmostContact>(s)) throw SchemaError("/structure", "expected an almost contact structure");
        Dim3Result r = classify_dim3(d.algebra, std::get<AlmostContact>(s));
        json out{{"label", r.label},
                 {"a", io::write(r.a)},
                 {"b", io::write(r.b)},
                 {"alpha", io::write(r.alpha)},
                 {"beta", io::write(r.beta)},
                 {"gamma", io::write(r.gamma)},
                 {"basis", io::write(r.basis)}};
        if (r.lambda) out["lambda"] = io::write(*r.lambda);
        return {out, kOk};
    }
    if (!std::holds_alternative<Almost3Contact>(s)) throw SchemaError("/structure", "expected {\"structures\": [...]}");
    Dim7Result r = classify_dim7(d.algebra, std::get<Almost3Contact>(s));
    json out{{"label", r.label}};
    if (r.a) out["A"] = io::write(*r.a);
    return {out, kOk};
}

Outcome cmd_invariants(const io::Document& d) {
    const Structure& s = need_structure(d);
    json out;
    if (std::holds_alternative<AlmostContact>(s)) {
        const AlmostContact& ac = std::get<AlmostContact>(s);
        NormalityReport nr = normality_tensor(d.algebra, ac);
        AbelianCheck ab = is_abelian_contact(d.algebra, ac);
        out["normal"] = nr.is_normal;
        out["N"] = io::write(nr.tensor);
        out["abelian"] = ab.ok;
        if (!ab.ok) out["abelian_failure"] = {{"identity", ab.failed_identity}, {"indices", {ab.first, ab.second}}};
        out["d_eta"] = io::write(ce_differential(d.algebra, Form::covector(ac.eta)));
        if (d.metric) {
            ContactClassReport cr = metric_class(d.algebra, ac, *d.metric);
            out["metric_class"] = names(cr.labels);
            out["d_eta_closed"] = cr.deta_closed;
            out["d_Phi_closed"] = cr.dPhi_closed;
        }
        return {out, kOk};
    }
    const Almost3Contact& t = std::get<Almost3Contact>(s);
    CaseReport cr = case_analysis(d.algebra, t);
    const StructureInvariants& inv = cr.invariants;
    for (std::size_t k = 0; k < 3; ++k) out["zeta_" + std::to_string(k + 1)] = io::write(inv.zeta[k]);
    out["Z"] = io::write(inv.z);
    out["delta"] = io::write(inv.delta);
    out["psi"] = io::write(inv.psi);
    out["psi_rank"] = inv.psi_rank;
    out["case"] = cr.tag();
    std::vector<std::string> failing = lemma_identities(d.algebra, t, inv);
    out["identities_failing"] = names(failing);
    return {out, failing.empty() ? kOk : kMathFailure};
}

Outcome cmd_canonical(const io::Document& d) {
    const Structure& s = need_structure(d);
    if (!std::holds_alternative<Almost3Contact>(s)) throw SchemaError("/structure", "expected {\"structures\": [...]}");
    const Almost3Contact& t = std::get<Almost3Contact>(s);
    json out;
    auto beta = canonical_check(d.algebra, t);
    out["canonical"] = beta.has_value();
    if (beta) {
        out["beta"] = io::write(*beta);
        out["parallel_canonical"] = beta->is_zero();
    }
    if (d.metric) {
        ReebKillingReport rk = reeb_killing_tensors(d.algebra, t, *d.metric);
        out["reeb_killing"] = {{"normal_skew", rk.normal_skew},
                               {"killing", rk.killing},
                               {"condition_iii", rk.condition_iii},
                               {"A_ii_zero", rk.aii_zero},
                               {"canonical", rk.canonical}};
        if (rk.beta) out["reeb_killing"]["beta"] = io::write(*rk.beta);
        if (rk.canonical != beta.has_value() || (beta && rk.beta != beta))
            throw InternalError("canonical_check and reeb_killing_tensors disagree");
    }
    return {out, kOk};
}

Outcome cmd_torsion(const io::Document& d, bool check_parallel) {
    const Structure& s = need_structure(d);
    const Metric& g = need_metric(d);
    Form torsion;
    json out;
    if (std::holds_alternative<AlmostContact>(s)) {
        CharacteristicReport cr = characteristic_connection(d.algebra, std::get<AlmostContact>(s), g);
        out["exists"] = cr.exists;
        if (!cr.exists) return {out, kMathFailure};
        torsion = *cr.torsion;
    } else {
        torsion = canonical_torsion(d.algebra, std::get<Almost3Contact>(s), g);
    }
    out["T"] = io::write(torsion);
    if (check_parallel) {
        Connection nabla = with_skew_torsion(levi_civita(d.algebra, g), torsion, g);
        out["parallel_torsion"] = is_parallel_torsion(d.algebra, nabla, g);
    }
    return {out, kOk};
}

Outcome cmd_homology(long m, long n, const std::string& group) {
    if (n < 1) throw SchemaError("--n", "must be a positive integer");
    if (!group.empty()) {
        if (group != "q8") throw SchemaError("--group", "only q8 is supported");
        return {io::write(semidirect_abelianization(q8_presentation(static_cast<std::size_t>(n)))), kOk};
    }
    if (m < 1) throw SchemaError("--m", "must be a positive integer");
    return {io::write(gamma_abelianization(static_cast<unsigned long>(m), static_cast<std::size_t>(n))), kOk};
}

// Parameter grid exercised by `catalog --check-all`.
std::vector<std::pair<std::string, std::map<std::string, std::string>>> check_grid() {
    std::vector<std::pair<std::string, std::map<std::string, std::string>>> g;
    for (const auto& name : catalog_names()) g.push_back({name, {}});
    for (const char* n : {"2", "3"}) g.push_back({"heisenberg_real", {{"n", n}}});
    for (const char* name : {"quaternionic_heisenberg", "complex_heisenberg_times_R", "real_heisenberg_times_R2"})
        g.push_back({name, {{"n", "2"}, {"lambda", "2"}}});
    g.push_back({"sasaki5_center", {{"variant", "affRxR2"}, {"r", "3"}}});
    g.push_back({"sasaki5_center", {{"variant", "affRxaffR"}, {"r", "1"}, {"s", "-2"}}});
    g.push_back({"sasaki5_g0", {{"cos", "3/5"}, {"sin", "4/5"}}});
    g.push_back({"so3_semidirect", {{"n", "2"}, {"delta", "-1"}}});
    g.push_back({"so3_product", {{"h", "affC"}, {"delta", "2"}}});
    g.push_back({"reeb_twisted", {{"delta", "1"}}});
    g.push_back({"quasi_sasaki_gk", {{"n", "3"}, {"k", "0"}}});
    g.push_back({"quasi_sasaki_gk", {{"n", "3"}, {"k", "3"}}});
    g.push_back({"alpha_kenmotsu", {{"n", "2"}, {"alpha", "-1/2"}}});
    return g;
}

json check_one(const std::string& name, const std::map<std::string, std::string>& params) {
    json r{{"name", name}, {"params", params}};
    try {
        CatalogEntry e = catalog(name, params);
        json problems = json::array();
        if (jacobi_check(e.algebra)) problems.push_back("jacobi");
        bool valid = e.is_3contact() ? validate_almost_3contact(e.algebra, e.three_contact()).ok()
                                     : validate_almost_contact(e.algebra, e.contact()).ok();
        if (!valid) problems.push_back("structure");
        bool compatible = e.is_3contact() ? is_compatible(e.three_contact(), e.metric) : is_compatible(e.contact(), e.metric);
        if (!compatible) problems.push_back("metric");
        for (const auto& m : check_expected(e))
            problems.push_back(m.key + ": expected " + m.expected + ", got " + m.actual);
        // Export, re-import, compare.
        CatalogEntry back = io::read_catalog_entry(json::parse(io::write(e).dump()));
        if (!(back.algebra == e.algebra && back.structure == e.structure && back.metric == e.metric &&
              back.expected == e.expected))
            problems.push_back("json round trip");
        r["ok"] = problems.empty();
        r["problems"] = problems;
    } catch (const std::exception& ex) {
        r["ok"] = false;
        r["problems"] = {ex.what()};
    }
    return r;
}

Outcome cmd_catalog(bool list, const std::string& name, const std::string& params, bool check_all, unsigned jobs) {
    if (list) return {json{{"names", catalog_names()}}, kOk};
    if (check_all) {
        auto grid = check_grid();
        std::vector<json> results(grid.size());
        jobs = std::max(1u, jobs);
        for (std::size_t start = 0; start < grid.size(); start += jobs) {
            std::vector<std::future<json>> batch;
            for (std::size_t i = start; i < std::min(grid.size(), start + jobs); ++i)
                batch.push_back(std::async(std::launch::async, check_one, grid[i].first, grid[i].second));
            for (std::size_t i = 0; i < batch.size(); ++i) results[start + i] = batch[i].get();
        }
        bool ok = std::all_of(results.begin(), results.end(), [](const json& r) { return r["ok"].get<bool>(); });
        return {json{{"ok", ok}, {"entries", results}}, ok ? kOk : kMathFailure};
    }
    if (name.empty()) throw SchemaError("", "catalog needs --list, --name NAME or --check-all");
    return {io::write(catalog(name, parse_params(params))), kOk};
}

void render_text(const json& j, const std::string& prefix, std::ostream& os) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            std::string key = prefix.empty() ? k : prefix + "." + k;
            render_text(v, key, os);
        }
        return;
    }
    os << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
}

void emit(const json& report, const std::string& format) {
    if (format == "text") render_text(report, "", std::cout);
    else std::cout << report.dump(2) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Abelian almost contact and 3-contact Lie algebras: validation, classification, torsion, homology"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format;
    if (const char* env = std::getenv("CONTACTLIE_OUTPUT")) format = env;
    app.add_option("--output", format, "Output format")->check(CLI::IsMember({"json", "text"}));

    InputSpec in;
    auto add_input = [&](CLI::App* sub) {
        sub->add_option("input", in.file, "JSON document {algebra, structure, metric}");
        sub->add_option("--catalog", in.catalog, "Use a catalog entry as input");
        sub->add_option("--params", in.params, "Catalog parameters K=V,...");
    };

    auto* validate = app.add_subcommand("validate", "Jacobi identity, structure identities, metric compatibility");
    add_input(validate);

    bool dim3 = false, dim7 = false;
    auto* classify = app.add_subcommand("classify", "Isomorphism class in dimension 3 or 7");
    add_input(classify);
    classify->add_flag("--dim3", dim3);
    classify->add_flag("--dim7", dim7);

    auto* invariants = app.add_subcommand("invariants", "Normality, metric class, or zeta/Z/delta/psi and the case");
    add_input(invariants);

    auto* canonical = app.add_subcommand("canonical", "Canonical check and the Reeb-Killing route");
    add_input(canonical);

    bool check_parallel = false;
    auto* torsion = app.add_subcommand("torsion", "Torsion of the characteristic or canonical connection");
    add_input(torsion);
    torsion->add_flag("--check-parallel", check_parallel);

    long hm = 0, hn = 1;
    std::string group;
    auto* homology = app.add_subcommand("homology", "H_1 of the compact quotients");
    homology->add_option("--m", hm, "Rotation order");
    homology->add_option("--n", hn, "Quaternionic dimension");
    homology->add_option("--group", group, "Finite group (q8)");

    bool list = false, check_all = false;
    std::string cat_name, cat_params;
    unsigned jobs = 1;
    auto* cat = app.add_subcommand("catalog", "List, export or check the example catalog");
    cat->add_flag("--list", list);
    cat->add_option("--name", cat_name);
    cat->add_option("--params", cat_params);
    cat->add_flag("--check-all", check_all);
    cat->add_option("--jobs", jobs);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }
    if (format.empty()) format = "json";
    if (format != "json" && format != "text") {
        std::cerr << "CONTACTLIE_OUTPUT must be json or text\n";
        return kInputError;
    }

    Outcome out;
    try {
        if (*homology) out = cmd_homology(hm, hn, group);
        else if (*cat) out = cmd_catalog(list, cat_name, cat_params, check_all, jobs);
        else {
            io::Document d = load_input(in);
            if (*validate) out = cmd_validate(d);
            else if (*classify) out = cmd_classify(d, dim3, dim7);
            else if (*invariants) out = cmd_invariants(d);
            else if (*canonical) out = cmd_canonical(d);
            else out = cmd_torsion(d, check_parallel);
        }
    } catch (const SchemaError& e) {
        out = {json{{"error", "schema"}, {"path", e.path()}, {"message", e.what()}}, kInputError};
    } catch (const PreconditionError& e) {
        out = {json{{"error", e.name()}, {"message", e.what()}}, kInputPreconditions.count(e.name()) ? kInputError : kMathFailure};
    } catch (const TheoremViolation& e) {
        out = {json{{"error", "theorem-violation"}, {"message", e.what()}}, kMathFailure};
    } catch (const InternalError& e) {
        out = {json{{"error", "internal"}, {"message", e.what()}}, kMathFailure};
    }
    emit(out.report, format);
    return out.code;
}
