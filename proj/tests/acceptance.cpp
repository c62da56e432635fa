// Acceptance suite: runs every criterion end to end and prints one pass/fail
// line per criterion. All checks are exact (rational arithmetic, zero
// tolerance). Exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "qflie/verify.hpp"

using namespace qflie;

namespace {

int g_failures = 0;

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

void report(int criterion, bool pass, const std::string& what, double secs, double budget) {
    bool in_budget = secs < budget;
    if (!pass || !in_budget) ++g_failures;
    std::printf("criterion %d: %s - %s (%.2f s, budget %.0f s)\n", criterion,
                (pass && in_budget) ? "PASS" : "FAIL", what.c_str(), secs, budget);
}

std::vector<FamilyId> criterion2_cases() {
    return {
        family_id(Family::G1N1, 5),  family_id(Family::G1N1, 7), family_id(Family::G1N1, 9),
        family_id(Family::G1N1, 11), family_id(Family::G2N1, 5), family_id(Family::G2N1, 6),
        family_id(Family::G2N1, 7),  family_id(Family::G2N1, 9), family_id(Family::G3N1, 7),
        family_id(Family::G3N1, 8),  family_id(Family::G3N1, 9), family_id(Family::G3N1, 10),
        family_id(Family::G1_7),     family_id(Family::G2_9),    family_id(Family::G3_11),
    };
}

const std::size_t kExpectedDims[] = {10, 10, 12, 14, 10, 9, 9, 11, 9, 9, 10, 11, 9, 9, 10};

void criterion1() {
    Timer t;
    bool pass = true;
    int checked = 0;
    for (const auto& info : list_families())
        for (std::size_t n = 5; n <= 21; ++n) {
            if (!family_accepts(info.family, n)) continue;
            ++checked;
            Json c = lie_axiom_case({info.family, n});
            if (!case_passed(c)) {
                pass = false;
                std::printf("  [1] %s n=%zu: %s\n", info.cli_name.c_str(), n, c.dump().c_str());
            }
        }
    report(1, pass, "Lie axioms: Jacobi + nilindex n-1 on " + std::to_string(checked) +
                        " catalog algebras, n <= 21",
           t.seconds(), 10.0);
}

void criterion2(std::vector<DerivationSpace>& solved_out) {
    Timer t;
    bool pass = true;
    auto cases = criterion2_cases();
    for (std::size_t i = 0; i < cases.size(); ++i) {
        LieAlgebra alg = make_algebra(cases[i]);
        DerivationSpace s = solve_derivation_space({alg, Rat(1, 2)});
        if (s.dim() != kExpectedDims[i]) {
            pass = false;
            std::printf("  [2] %s n=%zu: solved dim %zu, expected %zu\n",
                        family_info(cases[i].family).cli_name.c_str(), cases[i].n, s.dim(),
                        kExpectedDims[i]);
        }
        solved_out.push_back(std::move(s));
    }
    report(2, pass, "half-derivation dimension table reproduced by the brute-force nullspace solver",
           t.seconds(), 30.0);
}

void criterion3() {
    Timer t;
    bool pass = true;
    for (const FamilyId& id : criterion2_cases()) {
        Json c = theorem_case(id);
        if (!case_passed(c)) {
            pass = false;
            std::printf("  [3] %s n=%zu: solved dim %s, predicted dim %s, span_equal false\n",
                        family_info(id.family).cli_name.c_str(), id.n,
                        c["solved_dim"].dump().c_str(), c["predicted_dim"].dump().c_str());
        }
    }
    report(3, pass, "span equality: closed-form basis == brute-force nullspace for every case",
           t.seconds(), 30.0);
}

void criterion4() {
    Timer t;
    bool pass = true;
    std::vector<FamilyId> cases = {
        family_id(Family::G1N1, 5),  family_id(Family::G1N1, 7),  family_id(Family::G1N1, 9),
        family_id(Family::G1N1, 11), family_id(Family::G2N1, 5),  family_id(Family::G2N1, 6),
        family_id(Family::G2N1, 7),  family_id(Family::G2N1, 9),  family_id(Family::G2N1, 11),
        family_id(Family::G3N1, 7),  family_id(Family::G3N1, 8),  family_id(Family::G3N1, 9),
        family_id(Family::G3N1, 10), family_id(Family::G3N1, 11), family_id(Family::G1_7),
        family_id(Family::G2_9),     family_id(Family::G3_11),
    };
    int variants = 0;
    for (const FamilyId& id : cases) {
        LieAlgebra alg = make_algebra(id);
        DerivationSpace half = solve_derivation_space({alg, Rat(1, 2)});
        for (const std::string& key : list_variants(id)) {
            ++variants;
            Json c = variant_case(alg, half, make_variant(id, key), 25, 1, 5);
            if (!case_passed(c)) {
                pass = false;
                std::printf("  [4] %s n=%zu %s: assoc %s, tleibniz %s, operators %s%s\n",
                            family_info(id.family).cli_name.c_str(), id.n, key.c_str(),
                            c["associative"]["status"].get<std::string>().c_str(),
                            c["transposed_leibniz"]["status"].get<std::string>().c_str(),
                            c["operators_in_halfderiv_space"]["status"].get<std::string>().c_str(),
                            c["suspected_erratum"].get<bool>() ? "  [suspected erratum]" : "");
                for (const char* check : {"associative", "transposed_leibniz"}) {
                    if (c[check].contains("witness")) {
                        const Json& w = c[check]["witness"];
                        std::printf("      %s minimal witness (%zu,%zu,%zu), residual %s\n", check,
                                    w["i"].get<std::size_t>(), w["j"].get<std::size_t>(),
                                    w["k"].get<std::size_t>(), w["residual"].dump().c_str());
                    }
                }
            }
        }
    }
    report(4, pass,
           "TP sweep over " + std::to_string(variants) +
               " variant cases x 25 seeded samples: commutativity, associativity, transposed "
               "Leibniz, operator membership",
           t.seconds(), 60.0);
}

void criterion5() {
    Timer t;
    Json c = negative_control_case();
    report(5, case_passed(c),
           "negative control: TP2(g1n1, n=7) at zero parameters satisfies the transposed rule and "
           "fails the Poisson rule at (e1,e1,e1) with residual e4",
           t.seconds(), 10.0);
}

void criterion6(const std::vector<DerivationSpace>& solved) {
    Timer t;
    bool pass = true;
    auto cases = criterion2_cases();
    for (std::size_t i = 0; i < cases.size(); ++i) {
        LieAlgebra alg = make_algebra(cases[i]);
        Json c = invariant_case(cases[i], alg, solved[i]);
        if (!case_passed(c)) {
            pass = false;
            std::printf("  [6] %s n=%zu: %s\n", family_info(cases[i].family).cli_name.c_str(),
                        cases[i].n, c.dump().c_str());
        }
    }
    report(6, pass,
           "identity map in every delta=1/2 space and in no delta=1 space; basis maps preserve "
           "the derived subalgebra and the center",
           t.seconds(), 60.0);
}

void criterion7() {
    Timer t;
    SweepOptions opt;  // defaults: grid {5..11}, samples 25, seed 1, bound 5
    VerifyAllResult r1 = cmd_verify_all(opt);
    VerifyAllResult r2 = cmd_verify_all(opt);
    r1.report.erase("timing_ms");
    r2.report.erase("timing_ms");
    bool pass = r1.report.dump() == r2.report.dump();
    report(7, pass, "verify-all with fixed seed produces byte-identical non-timing report content",
           t.seconds(), 120.0);
}

}  // namespace

int main() {
    std::printf("acceptance suite (exact arithmetic, zero tolerance)\n");
    criterion1();
    std::vector<DerivationSpace> solved;
    criterion2(solved);
    criterion3();
    criterion4();
    criterion5();
    criterion6(solved);
    criterion7();
    if (g_failures == 0) {
        std::printf("all criteria passed\n");
        return 0;
    }
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
}
