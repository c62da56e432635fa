#pragma once

#include <cstddef>
#include <vector>

#include "qflie/rational.hpp"

namespace qflie {

using Vec = std::vector<Rat>;

// Dense row-major matrix of exact rationals.
class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = Rat(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& operator()(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
    const Rat& operator()(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

    Vec row(std::size_t r) const { return Vec(e_.begin() + r * cols_, e_.begin() + (r + 1) * cols_); }

    Vec apply(const Vec& x) const;  // M * x

    friend bool operator==(const Mat&, const Mat&) = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rat> e_;
};

struct Rref {
    Mat matrix;                        // unique RREF, zero rows at the bottom
    std::vector<std::size_t> pivots;   // pivot columns, strictly increasing
};

// Pivoted exact Gaussian elimination; pivot = first nonzero in column order.
Rref rref(const Mat& m);

std::size_t rank(const Mat& m);

// Canonical linear subspace: basis rows form the unique RREF of the span.
class Subspace {
public:
    Subspace(std::size_t ambient_dim, const std::vector<Vec>& spanning);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Vec>& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    bool contains(const Vec& v) const;

    friend bool operator==(const Subspace&, const Subspace&) = default;

private:
    std::size_t ambient_ = 0;
    std::vector<Vec> basis_;
    std::vector<std::size_t> pivots_;
};

// True iff the canonical bases coincide element-by-element (RREF uniqueness
// makes this span equality). Throws on ambient dimension mismatch.
bool equal_span(const Subspace& a, const Subspace& b);

// Canonical basis of {v : m v = 0}.
Subspace nullspace(const Mat& m);

}  // namespace qflie
