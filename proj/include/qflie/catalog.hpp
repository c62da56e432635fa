#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qflie/lie_algebra.hpp"

namespace qflie {

enum class Family { G1N1, G2N1, G3N1, G1_7, G2_9, G3_11 };

struct FamilyId {
    Family family;
    std::size_t n;

    friend bool operator==(const FamilyId&, const FamilyId&) = default;
};

struct FamilyInfo {
    Family family;
    std::string cli_name;     // g1n1, g2n1, g3n1, g1_7, g2_9, g3_11
    std::string constraint;   // human-readable dimension constraint
    std::optional<std::size_t> fixed_n;  // set for the three fixed-dimension families
};

const std::vector<FamilyInfo>& list_families();

Family parse_family(const std::string& cli_name);  // throws on unknown name
const FamilyInfo& family_info(Family f);

// Validates the dimension constraint; n may be omitted for fixed families.
// Throws std::invalid_argument naming the violated constraint.
FamilyId family_id(Family f, std::optional<std::size_t> n = std::nullopt);

bool family_accepts(Family f, std::size_t n);

LieAlgebra make_algebra(const FamilyId& id);

}  // namespace qflie
