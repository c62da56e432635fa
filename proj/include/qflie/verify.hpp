#pragma once

#include <cstdint>
#include <vector>

#include "qflie/json_io.hpp"

namespace qflie {

inline constexpr const char* kToolName = "qflie";
inline constexpr const char* kToolVersion = "0.1.0";

struct SweepOptions {
    std::vector<std::size_t> n_grid{5, 6, 7, 8, 9, 10, 11};
    int samples = 25;
    std::uint64_t seed = 1;
    long bound = 5;
};

// Parallelism cap from TPA_THREADS (plumbing; >= 1, not part of determinism).
int tpa_threads();

// Grid expansion: parametric families filtered by their constraints (invalid
// entries noted in *skipped), fixed-dimension families always included once.
std::vector<FamilyId> grid_cases(const std::vector<std::size_t>& n_grid,
                                 std::vector<std::string>* skipped);

Json lie_axiom_case(const FamilyId& id);
Json theorem_case(const FamilyId& id);
Json variant_case(const LieAlgebra& alg, const DerivationSpace& half_space, const TPVariant& v,
                  int samples, std::uint64_t seed, long bound);
Json negative_control_case();
Json invariant_case(const FamilyId& id, const LieAlgebra& alg, const DerivationSpace& half_space);

bool case_passed(const Json& c);  // reads the "status" field

struct VerifyAllResult {
    Json report;
    int failures = 0;
};

VerifyAllResult cmd_verify_all(const SweepOptions& opt);

}  // namespace qflie
