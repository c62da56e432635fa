#include "qflie/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace qflie {

Vec Mat::apply(const Vec& x) const {
    if (x.size() != cols_) throw std::invalid_argument("Mat::apply: dimension mismatch");
    Vec y(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        Rat acc;
        for (std::size_t c = 0; c < cols_; ++c) {
            const Rat& m = e_[r * cols_ + c];
            if (!m.is_zero() && !x[c].is_zero()) acc += m * x[c];
        }
        y[r] = acc;
    }
    return y;
}

namespace {

// Maintains a fully reduced row set (the unique RREF of everything inserted).
struct Reducer {
    std::size_t cols;
    std::vector<std::size_t> pivots;  // ascending; pivots[t] is the lead of rows[t]
    std::vector<Vec> rows;

    explicit Reducer(std::size_t c) : cols(c) {}

    void insert(Vec v) {
        for (std::size_t t = 0; t < pivots.size(); ++t) {
            if (v[pivots[t]].is_zero()) continue;
            const Rat f = v[pivots[t]];
            for (std::size_t c = 0; c < cols; ++c)
                if (!rows[t][c].is_zero()) v[c] -= f * rows[t][c];
        }
        std::size_t lead = cols;
        for (std::size_t c = 0; c < cols; ++c)
            if (!v[c].is_zero()) { lead = c; break; }
        if (lead == cols) return;  // dependent row
        const Rat inv = v[lead].inverse();
        for (std::size_t c = lead; c < cols; ++c)
            if (!v[c].is_zero()) v[c] *= inv;
        for (std::size_t t = 0; t < pivots.size(); ++t) {
            if (rows[t][lead].is_zero()) continue;
            const Rat f = rows[t][lead];
            for (std::size_t c = lead; c < cols; ++c)
                if (!v[c].is_zero()) rows[t][c] -= f * v[c];
        }
        auto pos = std::upper_bound(pivots.begin(), pivots.end(), lead) - pivots.begin();
        pivots.insert(pivots.begin() + pos, lead);
        rows.insert(rows.begin() + pos, std::move(v));
    }
};

}  // namespace

Rref rref(const Mat& m) {
    Reducer red(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) red.insert(m.row(r));
    Rref out;
    out.matrix = Mat(m.rows(), m.cols());
    for (std::size_t t = 0; t < red.rows.size(); ++t)
        for (std::size_t c = 0; c < m.cols(); ++c) out.matrix(t, c) = red.rows[t][c];
    out.pivots = red.pivots;
    return out;
}

std::size_t rank(const Mat& m) {
    Reducer red(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) red.insert(m.row(r));
    return red.rows.size();
}

Subspace::Subspace(std::size_t ambient_dim, const std::vector<Vec>& spanning) : ambient_(ambient_dim) {
    Reducer red(ambient_dim);
    for (const Vec& v : spanning) {
        if (v.size() != ambient_dim)
            throw std::invalid_argument("Subspace: spanning vector length != ambient dimension");
        red.insert(v);
    }
    basis_ = std::move(red.rows);
    pivots_ = std::move(red.pivots);
}

bool Subspace::contains(const Vec& v) const {
    if (v.size() != ambient_)
        throw std::invalid_argument("Subspace::contains: vector length != ambient dimension");
    Vec w = v;
    for (std::size_t t = 0; t < pivots_.size(); ++t) {
        if (w[pivots_[t]].is_zero()) continue;
        const Rat f = w[pivots_[t]];
        for (std::size_t c = 0; c < ambient_; ++c)
            if (!basis_[t][c].is_zero()) w[c] -= f * basis_[t][c];
    }
    for (const Rat& x : w)
        if (!x.is_zero()) return false;
    return true;
}

bool equal_span(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw std::invalid_argument("equal_span: ambient dimension mismatch");
    return a == b;
}

Subspace nullspace(const Mat& m) {
    Rref r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : r.pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vec v(m.cols());
        v[f] = Rat(1);
        for (std::size_t t = 0; t < r.pivots.size(); ++t) v[r.pivots[t]] = -r.matrix(t, f);
        basis.push_back(std::move(v));
    }
    return Subspace(m.cols(), basis);
}

}  // namespace qflie
