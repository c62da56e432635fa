#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "qflie/linalg.hpp"

namespace qflie {

// Sparse coefficient vector over the basis: k (1-based) -> nonzero coefficient.
using SparseVec = std::map<std::size_t, Rat>;

// Structure-constant table of a finite-dimensional Lie algebra on the fixed
// basis e1..en. Only pairs i < j are stored; [e_j, e_i] = -[e_i, e_j] and
// [e_i, e_i] = 0 are implied.
class LieAlgebra {
public:
    using Table = std::map<std::pair<std::size_t, std::size_t>, SparseVec>;

    explicit LieAlgebra(std::size_t dim, std::string name = "");

    // Accumulates c into [e_i, e_j]_k; (i, j) is normalized to i < j with the
    // antisymmetric sign. Entries that cancel to zero are pruned.
    void add_bracket(std::size_t i, std::size_t j, std::size_t k, const Rat& c);

    std::size_t dim() const { return dim_; }
    const std::string& name() const { return name_; }
    const Table& brackets() const { return table_; }

    Vec bracket(const Vec& x, const Vec& y) const;
    Vec bracket_basis(std::size_t i, std::size_t j) const;  // [e_i, e_j], any i, j

    // Set by the JSON loader when an imported table violates Jacobi.
    bool jacobi_warning() const { return jacobi_warning_; }
    void set_jacobi_warning(bool w) { jacobi_warning_ = w; }

    friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
        return a.dim_ == b.dim_ && a.name_ == b.name_ && a.table_ == b.table_;
    }

private:
    std::size_t dim_;
    std::string name_;
    Table table_;
    bool jacobi_warning_ = false;
};

struct JacobiViolation {
    std::size_t i, j, k;  // 1-based triple, i < j < k
    Vec residual;
};

// Evaluates [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j] on every
// triple i < j < k; empty result means the Jacobi identity holds.
std::vector<JacobiViolation> jacobi_check(const LieAlgebra& alg);

struct LowerCentralSeries {
    std::vector<std::size_t> dims;         // dim L^1, dim L^2, ...
    std::optional<std::size_t> nilindex;   // least k with L^k = 0; absent if the series stabilizes nonzero
};

LowerCentralSeries lower_central_series(const LieAlgebra& alg);

// L^2 = [L, L] as a canonical subspace.
Subspace derived_subalgebra(const LieAlgebra& alg);

// {x : [x, e_i] = 0 for all i}.
Subspace center(const LieAlgebra& alg);

}  // namespace qflie
