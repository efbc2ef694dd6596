#include "zhc/json_io.hpp"

#include <nlohmann/json.hpp>

#include <fstream>

#include "zhc/presets.hpp"

namespace zhc {

using nlohmann::json;

namespace {

Rational rational_from_json(const json& v) {
    if (v.is_number_integer()) return Rational(static_cast<long>(v.get<long long>()));
    if (v.is_string()) return Rational::parse(v.get<std::string>());
    throw std::invalid_argument("expected a rational as \"p/q\" string or integer, got " + v.dump());
}

MatQ matrix_from_json(const json& rows, int expected_size) {
    if (!rows.is_array() || rows.empty()) throw std::invalid_argument("matrix must be a nonempty array of rows");
    const int n = static_cast<int>(rows.size());
    if (expected_size > 0 && n != expected_size)
        throw std::invalid_argument("matrix has " + std::to_string(n) + " rows, expected " +
                                    std::to_string(expected_size));
    MatQ m(n, n);
    for (int i = 0; i < n; ++i) {
        const json& row = rows.at(i);
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw std::invalid_argument("matrix row " + std::to_string(i) + " is not of length " + std::to_string(n));
        for (int j = 0; j < n; ++j) m(i, j) = rational_from_json(row.at(j));
    }
    return m;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::runtime_error("malformed JSON in " + path + ": " + e.what());
    }
    return j;
}

std::vector<int> ints_from_json(const json& a) {
    std::vector<int> out;
    for (const auto& v : a) out.push_back(v.get<int>());
    return out;
}

}  // namespace

ReductiveLieAlgebra algebra_from_json(const json& spec, const std::string& name) {
    const int size = spec.at("size").get<int>();
    std::vector<MatQ> basis;
    for (const auto& m : spec.at("basis")) basis.push_back(matrix_from_json(m, size));
    std::vector<SimpleTriple> triples;
    for (const auto& t : spec.at("simple_triples"))
        triples.push_back(SimpleTriple{t.at("e").get<int>(), t.at("f").get<int>(), t.at("h").get<int>()});
    return ReductiveLieAlgebra::build(std::move(basis), ints_from_json(spec.at("negative")),
                                      ints_from_json(spec.at("cartan")), ints_from_json(spec.at("positive")),
                                      std::move(triples), name);
}

FiniteModule module_from_json(const ReductiveLieAlgebra& alg, const json& spec, const std::string& name) {
    const int dim = spec.at("dimension").get<int>();
    std::vector<MatQ> actions;
    for (const auto& m : spec.at("actions")) actions.push_back(matrix_from_json(m, dim));
    return FiniteModule::build(alg, std::move(actions), name);
}

ReductiveLieAlgebra load_algebra(const std::string& spec) {
    if (is_preset_algebra(spec)) return preset_algebra(spec);
    if (spec.size() > 5 && spec.substr(spec.size() - 5) == ".json")
        return algebra_from_json(load_json_file(spec), spec);
    throw std::invalid_argument("unknown algebra preset '" + spec + "' (expected sl2|sl3|gl2|sl2xsl2|PATH.json)");
}

FiniteModule load_module(const ReductiveLieAlgebra& alg, const std::string& spec) {
    if (is_preset_module(spec)) return preset_module(alg, spec);
    if (spec.size() > 5 && spec.substr(spec.size() - 5) == ".json")
        return module_from_json(alg, load_json_file(spec), spec);
    throw std::invalid_argument("unknown module preset '" + spec + "' (expected adjoint|natural|trivial|symN|PATH.json)");
}

BimoduleElement element_from_json(const ReductiveLieAlgebra& alg, const FiniteModule& mod, const json& terms) {
    if (!terms.is_array()) throw std::invalid_argument("element file must be an array of terms");
    BimoduleElement out;
    for (const auto& term : terms) {
        PbwMonomial mon(alg.dim(), 0);
        for (const auto& [key, value] : term.at("monomial").items()) {
            const int basis_index = std::stoi(key);
            if (basis_index < 0 || basis_index >= alg.dim())
                throw std::invalid_argument("element term: basis index " + key + " out of range");
            mon[pbw_position(alg, basis_index)] = value.get<int>();
        }
        const int vec = term.at("vector").get<int>();
        if (vec < 0 || vec >= mod.dimension())
            throw std::invalid_argument("element term: vector index " + std::to_string(vec) + " out of range");
        out.add(mon, vec, rational_from_json(term.at("coeff")));
    }
    return out;
}

BimoduleElement load_element(const ReductiveLieAlgebra& alg, const FiniteModule& mod, const std::string& path) {
    return element_from_json(alg, mod, load_json_file(path));
}

json report_to_json(const Report& report) {
    json checks = json::array();
    for (const auto& c : report.checks) {
        json entry{{"name", c.name}, {"status", c.pass ? "pass" : "fail"}};
        if (!c.witness.empty()) entry["witness"] = c.witness;
        checks.push_back(std::move(entry));
    }
    json out{{"command", report.command}, {"inputs", report.inputs}, {"checks", std::move(checks)}};
    if (!report.dims.empty()) out["dims"] = report.dims;
    return out;
}

void write_report(const Report& report, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write report to " + path);
    out << report_to_json(report).dump(2) << "\n";
}

}  // namespace zhc
