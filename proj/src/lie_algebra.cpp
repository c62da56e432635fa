#include "qflie/lie_algebra.hpp"

#include <stdexcept>

namespace qflie {

LieAlgebra::LieAlgebra(std::size_t dim, std::string name) : dim_(dim), name_(std::move(name)) {
    if (dim == 0) throw std::invalid_argument("LieAlgebra: dimension must be positive");
}

void LieAlgebra::add_bracket(std::size_t i, std::size_t j, std::size_t k, const Rat& c) {
    if (i < 1 || j < 1 || k < 1 || i > dim_ || j > dim_ || k > dim_)
        throw std::invalid_argument("LieAlgebra::add_bracket: index out of range");
    if (i == j) throw std::invalid_argument("LieAlgebra::add_bracket: [e_i, e_i] vanishes identically");
    if (c.is_zero()) return;
    Rat coeff = c;
    if (i > j) {
        std::swap(i, j);
        coeff = -coeff;
    }
    SparseVec& vec = table_[{i, j}];
    Rat& slot = vec[k];
    slot += coeff;
    if (slot.is_zero()) vec.erase(k);
    if (vec.empty()) table_.erase({i, j});
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
    if (x.size() != dim_ || y.size() != dim_)
        throw std::invalid_argument("LieAlgebra::bracket: dimension mismatch");
    Vec out(dim_);
    for (const auto& [pair, vec] : table_) {
        const auto [i, j] = pair;
        Rat c = x[i - 1] * y[j - 1] - x[j - 1] * y[i - 1];
        if (c.is_zero()) continue;
        for (const auto& [k, v] : vec) out[k - 1] += c * v;
    }
    return out;
}

Vec LieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
    Vec out(dim_);
    if (i == j) return out;
    bool flip = i > j;
    if (flip) std::swap(i, j);
    auto it = table_.find({i, j});
    if (it == table_.end()) return out;
    for (const auto& [k, v] : it->second) out[k - 1] = flip ? -v : v;
    return out;
}

std::vector<JacobiViolation> jacobi_check(const LieAlgebra& alg) {
    std::vector<JacobiViolation> bad;
    const std::size_t n = alg.dim();
    auto unit = [n](std::size_t i) {
        Vec v(n);
        v[i - 1] = Rat(1);
        return v;
    };
    for (std::size_t i = 1; i + 2 <= n; ++i)
        for (std::size_t j = i + 1; j + 1 <= n; ++j)
            for (std::size_t k = j + 1; k <= n; ++k) {
                Vec r = alg.bracket(alg.bracket_basis(i, j), unit(k));
                Vec s = alg.bracket(alg.bracket_basis(j, k), unit(i));
                Vec t = alg.bracket(alg.bracket_basis(k, i), unit(j));
                bool zero = true;
                for (std::size_t m = 0; m < n; ++m) {
                    r[m] += s[m] + t[m];
                    if (!r[m].is_zero()) zero = false;
                }
                if (!zero) bad.push_back({i, j, k, std::move(r)});
            }
    return bad;
}

LowerCentralSeries lower_central_series(const LieAlgebra& alg) {
    const std::size_t n = alg.dim();
    LowerCentralSeries out;
    out.dims.push_back(n);
    std::vector<Vec> current;
    for (std::size_t i = 1; i <= n; ++i) {
        Vec v(n);
        v[i - 1] = Rat(1);
        current.push_back(std::move(v));
    }
    auto unit = [n](std::size_t i) {
        Vec v(n);
        v[i - 1] = Rat(1);
        return v;
    };
    while (true) {
        std::vector<Vec> spanning;
        for (const Vec& v : current)
            for (std::size_t i = 1; i <= n; ++i) spanning.push_back(alg.bracket(v, unit(i)));
        Subspace next(n, spanning);
        std::size_t prev = out.dims.back();
        out.dims.push_back(next.dim());
        if (next.dim() == 0) {
            out.nilindex = out.dims.size();
            break;
        }
        if (next.dim() == prev) break;  // stabilized nonzero: not nilpotent
        current = next.basis();
    }
    return out;
}

Subspace derived_subalgebra(const LieAlgebra& alg) {
    std::vector<Vec> spanning;
    for (const auto& [pair, vec] : alg.brackets()) {
        Vec v(alg.dim());
        for (const auto& [k, c] : vec) v[k - 1] = c;
        spanning.push_back(std::move(v));
    }
    return Subspace(alg.dim(), spanning);
}

Subspace center(const LieAlgebra& alg) {
    const std::size_t n = alg.dim();
    // rows indexed by (i, k): sum_j x_j [e_j, e_i]_k = 0
    Mat m(n * n, n);
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j) {
            if (i == j) continue;
            Vec br = alg.bracket_basis(j, i);
            for (std::size_t k = 1; k <= n; ++k)
                if (!br[k - 1].is_zero()) m((i - 1) * n + (k - 1), j - 1) = br[k - 1];
        }
    return nullspace(m);
}

}  // namespace qflie
