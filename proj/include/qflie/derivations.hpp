#pragma once

#include <vector>

#include "qflie/catalog.hpp"
#include "qflie/lie_algebra.hpp"

namespace qflie {

struct DerivationProblem {
    LieAlgebra algebra;
    Rat delta{1, 2};
};

// Maps phi are n x n matrices, column j = coordinates of phi(e_j).
// Vectorization is column-major by image: index (j-1)*n + (k-1) <-> phi(e_j)_k.
Vec vectorize_map(const Mat& m);
Mat map_from_vector(std::size_t n, const Vec& v);

// One row per (pair i < j, coordinate k), C(n,2)*n rows in n^2 unknowns:
// phi([e_i,e_j])_k - delta([phi(e_i),e_j] + [e_i,phi(e_j)])_k = 0.
Mat assemble_constraints(const DerivationProblem& p);

class DerivationSpace {
public:
    DerivationSpace(std::size_t algebra_dim, Subspace space);

    std::size_t algebra_dim() const { return algebra_dim_; }
    std::size_t dim() const { return space_.dim(); }
    const Subspace& space() const { return space_; }

    std::vector<Mat> basis_maps() const;
    bool contains(const Mat& m) const;

private:
    std::size_t algebra_dim_;
    Subspace space_;
};

DerivationSpace solve_derivation_space(const DerivationProblem& p);

// Closed-form basis transcribed from the per-family descriptions: one map per
// free parameter, canonicalized.
DerivationSpace predicted_space(const FamilyId& id);

bool is_delta_derivation(const LieAlgebra& alg, const Mat& m, const Rat& delta);
bool is_half_derivation(const LieAlgebra& alg, const Mat& m);

struct TheoremReport {
    FamilyId id;
    std::size_t solved_dim = 0;
    std::size_t predicted_dim = 0;
    bool equal = false;
    // on mismatch: basis vectors of one space not contained in the other
    std::vector<Vec> solved_not_predicted;
    std::vector<Vec> predicted_not_solved;
};

TheoremReport verify_theorem(const FamilyId& id);

}  // namespace qflie
