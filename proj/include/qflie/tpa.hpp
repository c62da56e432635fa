#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qflie/catalog.hpp"
#include "qflie/lie_algebra.hpp"
#include "qflie/params.hpp"

namespace qflie {

using CoeffFn = std::function<Rat(const ParameterAssignment&)>;

// One parametrized commutative multiplication table. Coefficient expressions
// are transcribed from the source displays verbatim; parameters are namespaced
// per variant (a*, b*, g* follow the display's alpha/beta/gamma indices).
struct TPVariant {
    FamilyId family;
    std::string key;  // "TP1".."TP10", or "TP" for single-table families

    std::vector<std::string> parameters;  // declared order

    struct Constraint {
        std::string label;                  // e.g. "a12 != 0"
        std::vector<std::string> involves;  // parameters the expression reads
        CoeffFn expr;                       // must evaluate nonzero
    };
    std::vector<Constraint> domain_constraints;

    struct Term {
        std::size_t i, j, k;  // e_i * e_j has a coeff(k) e_k contribution, i <= j
        CoeffFn coeff;
    };
    std::vector<Term> terms;
};

std::vector<std::string> list_variants(const FamilyId& id);
TPVariant make_variant(const FamilyId& id, const std::string& key);

// Sparse symmetric multiplication table; only pairs i <= j stored.
class CommutativeProduct {
public:
    using Table = std::map<std::pair<std::size_t, std::size_t>, SparseVec>;

    explicit CommutativeProduct(std::size_t dim);

    void add_term(std::size_t i, std::size_t j, std::size_t k, const Rat& c);

    std::size_t dim() const { return dim_; }
    const Table& table() const { return table_; }

    Vec multiply(const Vec& x, const Vec& y) const;
    Vec multiply_basis(std::size_t i, std::size_t j) const;

    friend bool operator==(const CommutativeProduct&, const CommutativeProduct&) = default;

private:
    std::size_t dim_;
    Table table_;
};

// Evaluates every coefficient exactly. Throws on missing parameters and on
// violated domain constraints (named in the error).
CommutativeProduct instantiate(const TPVariant& v, const ParameterAssignment& a);

// e_j -> e_i * e_j as an n x n matrix.
Mat multiplication_operator(const CommutativeProduct& p, std::size_t i);

struct Witness {
    std::size_t i, j, k;
    Vec residual;
};

struct CheckReport {
    std::vector<Witness> violations;  // lexicographic by (i, j, k)
    bool pass() const { return violations.empty(); }
};

// (e_i e_j) e_k - e_i (e_j e_k) over i <= j <= k.
CheckReport check_associative(const CommutativeProduct& p);

// 2 e_k [e_i,e_j] - [e_k e_i, e_j] - [e_i, e_k e_j] over i < j, all k.
CheckReport check_transposed_leibniz(const LieAlgebra& alg, const CommutativeProduct& p);

// [e_i, e_j e_k] - [e_i,e_j] e_k - e_j [e_i,e_k] over all i, j <= k (diagnostic).
CheckReport check_poisson_leibniz(const LieAlgebra& alg, const CommutativeProduct& p);

// Deterministic seeded assignment: numerators in [-bound, bound], denominators
// in [1, bound]; parameters occurring in domain constraints are resampled until
// every constrained expression is nonzero (bounded retries).
ParameterAssignment sample_parameters(const TPVariant& v, std::uint64_t seed, long bound);

// Stable per-sample seed derivation for sweeps.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

}  // namespace qflie
