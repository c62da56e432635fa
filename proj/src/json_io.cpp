#include "qflie/json_io.hpp"

#include <set>

namespace qflie {

namespace {

std::size_t get_index(const Json& j, const std::string& path, const char* field, std::size_t lo,
                      std::size_t hi) {
    if (!j.contains(field) || !j[field].is_number_integer())
        throw SchemaError(path + "." + field + ": expected integer");
    long long v = j[field].get<long long>();
    if (v < static_cast<long long>(lo) || v > static_cast<long long>(hi))
        throw SchemaError(path + "." + field + ": out of range [" + std::to_string(lo) + ", " +
                          std::to_string(hi) + "]");
    return static_cast<std::size_t>(v);
}

Rat get_rat(const Json& j, const std::string& path) {
    if (!j.is_string()) throw SchemaError(path + ": expected rational string \"p/q\"");
    try {
        return Rat::parse(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw SchemaError(path + ": " + e.what());
    }
}

Json sparse_to_json(const SparseVec& vec) {
    Json out = Json::array();
    for (const auto& [k, c] : vec) out.push_back({{"k", k}, {"c", c.str()}});
    return out;
}

}  // namespace

Json algebra_to_json(const LieAlgebra& alg) {
    Json j;
    j["name"] = alg.name();
    j["dim"] = alg.dim();
    Json brackets = Json::array();
    for (const auto& [pair, vec] : alg.brackets())
        brackets.push_back({{"i", pair.first}, {"j", pair.second}, {"value", sparse_to_json(vec)}});
    j["brackets"] = brackets;
    if (alg.jacobi_warning()) j["jacobi_warning"] = true;
    return j;
}

LieAlgebra algebra_from_json(const Json& j) {
    if (!j.is_object()) throw SchemaError("root: expected object");
    if (!j.contains("dim")) throw SchemaError("dim: missing");
    std::size_t dim = get_index(j, "root", "dim", 1, 1u << 16);
    std::string name = j.value("name", std::string{});
    LieAlgebra alg(dim, name);
    if (!j.contains("brackets") || !j["brackets"].is_array())
        throw SchemaError("brackets: expected array");
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (std::size_t t = 0; t < j["brackets"].size(); ++t) {
        const Json& e = j["brackets"][t];
        std::string path = "brackets[" + std::to_string(t) + "]";
        if (!e.is_object()) throw SchemaError(path + ": expected object");
        std::size_t i = get_index(e, path, "i", 1, dim);
        std::size_t jj = get_index(e, path, "j", 1, dim);
        if (i >= jj) throw SchemaError(path + ": must satisfy i < j");
        if (!seen.insert({i, jj}).second) throw SchemaError(path + ": duplicate pair (i, j)");
        if (!e.contains("value") || !e["value"].is_array())
            throw SchemaError(path + ".value: expected array");
        for (std::size_t u = 0; u < e["value"].size(); ++u) {
            const Json& term = e["value"][u];
            std::string tpath = path + ".value[" + std::to_string(u) + "]";
            std::size_t k = get_index(term, tpath, "k", 1, dim);
            Rat c = get_rat(term.contains("c") ? term["c"] : Json{}, tpath + ".c");
            alg.add_bracket(i, jj, k, c);
        }
    }
    alg.set_jacobi_warning(!jacobi_check(alg).empty());
    return alg;
}

Json product_to_json(const CommutativeProduct& p) {
    Json j;
    j["dim"] = p.dim();
    Json products = Json::array();
    for (const auto& [pair, vec] : p.table())
        products.push_back({{"i", pair.first}, {"j", pair.second}, {"value", sparse_to_json(vec)}});
    j["products"] = products;
    return j;
}

CommutativeProduct product_from_json(const Json& j) {
    if (!j.is_object()) throw SchemaError("root: expected object");
    if (!j.contains("dim")) throw SchemaError("dim: missing");
    std::size_t dim = get_index(j, "root", "dim", 1, 1u << 16);
    CommutativeProduct p(dim);
    if (!j.contains("products") || !j["products"].is_array())
        throw SchemaError("products: expected array");
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (std::size_t t = 0; t < j["products"].size(); ++t) {
        const Json& e = j["products"][t];
        std::string path = "products[" + std::to_string(t) + "]";
        if (!e.is_object()) throw SchemaError(path + ": expected object");
        std::size_t i = get_index(e, path, "i", 1, dim);
        std::size_t jj = get_index(e, path, "j", 1, dim);
        if (i > jj) throw SchemaError(path + ": must satisfy i <= j");
        if (!seen.insert({i, jj}).second) throw SchemaError(path + ": duplicate pair (i, j)");
        if (!e.contains("value") || !e["value"].is_array())
            throw SchemaError(path + ".value: expected array");
        for (std::size_t u = 0; u < e["value"].size(); ++u) {
            const Json& term = e["value"][u];
            std::string tpath = path + ".value[" + std::to_string(u) + "]";
            std::size_t k = get_index(term, tpath, "k", 1, dim);
            Rat c = get_rat(term.contains("c") ? term["c"] : Json{}, tpath + ".c");
            p.add_term(i, jj, k, c);
        }
    }
    return p;
}

Json derivation_space_to_json(const DerivationSpace& s) {
    Json j;
    j["dim"] = s.dim();
    Json basis = Json::array();
    for (const Mat& m : s.basis_maps()) {
        Json rows = Json::array();
        for (std::size_t r = 0; r < m.rows(); ++r) {
            Json row = Json::array();
            for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
            rows.push_back(row);
        }
        basis.push_back(rows);
    }
    j["basis"] = basis;
    return j;
}

std::string export_json(const Json& j) { return j.dump(2) + "\n"; }

std::variant<LieAlgebra, CommutativeProduct> import_json(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw SchemaError(std::string("invalid JSON: ") + e.what());
    }
    if (j.is_object() && j.contains("brackets")) return algebra_from_json(j);
    if (j.is_object() && j.contains("products")) return product_from_json(j);
    throw SchemaError("root: expected an algebra (\"brackets\") or a product (\"products\")");
}

}  // namespace qflie
