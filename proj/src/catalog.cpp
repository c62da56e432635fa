#include "qflie/catalog.hpp"

#include <stdexcept>

namespace qflie {

const std::vector<FamilyInfo>& list_families() {
    static const std::vector<FamilyInfo> families = {
        {Family::G1N1, "g1n1", "n >= 5 and n must be odd", std::nullopt},
        {Family::G2N1, "g2n1", "n >= 5", std::nullopt},
        {Family::G3N1, "g3n1", "n >= 7", std::nullopt},
        {Family::G1_7, "g1_7", "fixed n = 7", 7},
        {Family::G2_9, "g2_9", "fixed n = 9", 9},
        {Family::G3_11, "g3_11", "fixed n = 11", 11},
    };
    return families;
}

Family parse_family(const std::string& cli_name) {
    for (const auto& f : list_families())
        if (f.cli_name == cli_name) return f.family;
    throw std::invalid_argument("unknown family \"" + cli_name +
                                "\" (expected one of g1n1, g2n1, g3n1, g1_7, g2_9, g3_11)");
}

const FamilyInfo& family_info(Family f) {
    for (const auto& info : list_families())
        if (info.family == f) return info;
    throw std::logic_error("family_info: unreachable");
}

bool family_accepts(Family f, std::size_t n) {
    switch (f) {
        case Family::G1N1: return n >= 5 && n % 2 == 1;
        case Family::G2N1: return n >= 5;
        case Family::G3N1: return n >= 7;
        case Family::G1_7: return n == 7;
        case Family::G2_9: return n == 9;
        case Family::G3_11: return n == 11;
    }
    return false;
}

FamilyId family_id(Family f, std::optional<std::size_t> n) {
    const FamilyInfo& info = family_info(f);
    if (info.fixed_n) {
        if (n && *n != *info.fixed_n)
            throw std::invalid_argument(info.cli_name + ": fixed n = " + std::to_string(*info.fixed_n));
        return {f, *info.fixed_n};
    }
    if (!n) throw std::invalid_argument(info.cli_name + ": n is required (" + info.constraint + ")");
    if (f == Family::G1N1) {
        if (*n < 5) throw std::invalid_argument("g1n1: n must be >= 5");
        if (*n % 2 == 0) throw std::invalid_argument("g1n1: n must be odd");
    } else if (f == Family::G2N1) {
        if (*n < 5) throw std::invalid_argument("g2n1: n must be >= 5");
    } else if (f == Family::G3N1) {
        if (*n < 7) throw std::invalid_argument("g3n1: n must be >= 7");
    }
    return {f, *n};
}

namespace {

LieAlgebra build_g1n1(std::size_t n) {
    LieAlgebra alg(n, "g1n1_" + std::to_string(n));
    for (std::size_t i = 2; i <= n - 2; ++i) alg.add_bracket(1, i, i + 1, Rat(1));
    for (std::size_t i = 2; i <= (n - 1) / 2; ++i)
        alg.add_bracket(i, n - i, n, Rat(i % 2 == 0 ? 1 : -1));
    return alg;
}

LieAlgebra build_g2n1(std::size_t n) {
    LieAlgebra alg(n, "g2n1_" + std::to_string(n));
    for (std::size_t i = 2; i <= n - 2; ++i) alg.add_bracket(1, i, i + 1, Rat(1));
    for (std::size_t i = 2; i <= n - 3; ++i) alg.add_bracket(i, n, i + 2, Rat(1));
    return alg;
}

LieAlgebra build_g3n1(std::size_t n) {
    LieAlgebra alg(n, "g3n1_" + std::to_string(n));
    for (std::size_t i = 2; i <= n - 2; ++i) alg.add_bracket(1, i, i + 1, Rat(1));
    for (std::size_t i = 2; i <= n - 3; ++i) alg.add_bracket(i, n, i + 2, Rat(1));
    for (std::size_t i = 3; i + 4 <= n; ++i) alg.add_bracket(2, i, i + 3, Rat(1));
    return alg;
}

LieAlgebra build_g1_7() {
    LieAlgebra alg(7, "g1_7");
    for (std::size_t i = 2; i <= 5; ++i) alg.add_bracket(1, i, i + 1, Rat(1));
    for (std::size_t i = 3; i <= 4; ++i) alg.add_bracket(2, i, i + 2, Rat(1));
    for (std::size_t i = 2; i <= 3; ++i)
        alg.add_bracket(i, 7 - i, 7, Rat(i % 2 == 0 ? 1 : -1));
    return alg;
}

LieAlgebra build_g2_9() {
    LieAlgebra alg(9, "g2_9");
    for (std::size_t i = 2; i <= 7; ++i) alg.add_bracket(1, i, i + 1, Rat(1));
    for (std::size_t i = 3; i <= 4; ++i) alg.add_bracket(2, i, i + 2, Rat(1));
    alg.add_bracket(2, 5, 7, Rat(3));
    alg.add_bracket(2, 6, 8, Rat(5));
    for (std::size_t i = 4; i <= 5; ++i) alg.add_bracket(3, i, i + 3, Rat(-2));
    for (std::size_t i = 2; i <= 4; ++i)
        alg.add_bracket(i, 9 - i, 9, Rat(i % 2 == 0 ? 1 : -1));
    return alg;
}

LieAlgebra build_g3_11() {
    LieAlgebra alg(11, "g3_11");
    for (std::size_t i = 2; i <= 9; ++i) alg.add_bracket(1, i, i + 1, Rat(1));
    for (std::size_t i = 3; i <= 4; ++i) alg.add_bracket(2, i, i + 2, Rat(1));
    for (std::size_t i = 6; i <= 7; ++i) alg.add_bracket(2, i, i + 2, Rat(-1));
    alg.add_bracket(3, 7, 10, Rat(-1));
    for (std::size_t i = 4; i <= 5; ++i) alg.add_bracket(3, i, i + 3, Rat(1));
    for (std::size_t i = 5; i <= 6; ++i) alg.add_bracket(4, i, i + 4, Rat(1));
    for (std::size_t i = 2; i <= 5; ++i)
        alg.add_bracket(i, 11 - i, 11, Rat(i % 2 == 0 ? 1 : -1));
    return alg;
}

}  // namespace

LieAlgebra make_algebra(const FamilyId& id) {
    family_id(id.family, id.n);  // re-validate
    auto build = [&id]() {
        switch (id.family) {
            case Family::G1N1: return build_g1n1(id.n);
            case Family::G2N1: return build_g2n1(id.n);
            case Family::G3N1: return build_g3n1(id.n);
            case Family::G1_7: return build_g1_7();
            case Family::G2_9: return build_g2_9();
            case Family::G3_11: return build_g3_11();
        }
        throw std::logic_error("make_algebra: unreachable");
    };
    LieAlgebra alg = build();
    if (!jacobi_check(alg).empty())
        throw std::logic_error("make_algebra: catalog table " + alg.name() + " violates Jacobi");
    return alg;
}

}  // namespace qflie
