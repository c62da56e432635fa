#include "qflie/tpa.hpp"

#include <algorithm>
#include <stdexcept>

namespace qflie {

CommutativeProduct::CommutativeProduct(std::size_t dim) : dim_(dim) {
    if (dim == 0) throw std::invalid_argument("CommutativeProduct: dimension must be positive");
}

void CommutativeProduct::add_term(std::size_t i, std::size_t j, std::size_t k, const Rat& c) {
    if (i < 1 || j < 1 || k < 1 || i > dim_ || j > dim_ || k > dim_)
        throw std::invalid_argument("CommutativeProduct::add_term: index out of range");
    if (c.is_zero()) return;
    if (i > j) std::swap(i, j);
    SparseVec& vec = table_[{i, j}];
    Rat& slot = vec[k];
    slot += c;
    if (slot.is_zero()) vec.erase(k);
    if (vec.empty()) table_.erase({i, j});
}

Vec CommutativeProduct::multiply(const Vec& x, const Vec& y) const {
    if (x.size() != dim_ || y.size() != dim_)
        throw std::invalid_argument("CommutativeProduct::multiply: dimension mismatch");
    Vec out(dim_);
    for (const auto& [pair, vec] : table_) {
        const auto [i, j] = pair;
        Rat c = i == j ? x[i - 1] * y[i - 1] : x[i - 1] * y[j - 1] + x[j - 1] * y[i - 1];
        if (c.is_zero()) continue;
        for (const auto& [k, v] : vec) out[k - 1] += c * v;
    }
    return out;
}

Vec CommutativeProduct::multiply_basis(std::size_t i, std::size_t j) const {
    Vec out(dim_);
    if (i > j) std::swap(i, j);
    auto it = table_.find({i, j});
    if (it == table_.end()) return out;
    for (const auto& [k, v] : it->second) out[k - 1] = v;
    return out;
}

CommutativeProduct instantiate(const TPVariant& v, const ParameterAssignment& a) {
    for (const std::string& name : v.parameters)
        if (!a.has(name)) throw std::invalid_argument("instantiate: missing parameter \"" + name + "\"");
    for (const auto& c : v.domain_constraints)
        if (c.expr(a).is_zero())
            throw std::invalid_argument("instantiate: domain constraint " + c.label + " violated");
    CommutativeProduct p(v.family.n);
    for (const auto& t : v.terms) p.add_term(t.i, t.j, t.k, t.coeff(a));
    return p;
}

Mat multiplication_operator(const CommutativeProduct& p, std::size_t i) {
    if (i < 1 || i > p.dim()) throw std::invalid_argument("multiplication_operator: index out of range");
    Mat m(p.dim(), p.dim());
    for (std::size_t j = 1; j <= p.dim(); ++j) {
        Vec col = p.multiply_basis(i, j);
        for (std::size_t k = 1; k <= p.dim(); ++k) m(k - 1, j - 1) = col[k - 1];
    }
    return m;
}

namespace {

bool record_if_nonzero(std::vector<Witness>& out, std::size_t i, std::size_t j, std::size_t k, Vec r) {
    for (const Rat& x : r)
        if (!x.is_zero()) {
            out.push_back({i, j, k, std::move(r)});
            return true;
        }
    return false;
}

}  // namespace

CheckReport check_associative(const CommutativeProduct& p) {
    const std::size_t n = p.dim();
    CheckReport rep;
    auto unit = [n](std::size_t i) {
        Vec v(n);
        v[i - 1] = Rat(1);
        return v;
    };
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i; j <= n; ++j)
            for (std::size_t k = j; k <= n; ++k) {
                Vec lhs = p.multiply(p.multiply_basis(i, j), unit(k));
                Vec rhs = p.multiply(unit(i), p.multiply_basis(j, k));
                for (std::size_t m = 0; m < n; ++m) lhs[m] -= rhs[m];
                record_if_nonzero(rep.violations, i, j, k, std::move(lhs));
            }
    return rep;
}

CheckReport check_transposed_leibniz(const LieAlgebra& alg, const CommutativeProduct& p) {
    if (alg.dim() != p.dim())
        throw std::invalid_argument("check_transposed_leibniz: dimension mismatch");
    const std::size_t n = p.dim();
    CheckReport rep;
    auto unit = [n](std::size_t i) {
        Vec v(n);
        v[i - 1] = Rat(1);
        return v;
    };
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j)
            for (std::size_t k = 1; k <= n; ++k) {
                Vec lhs = p.multiply(unit(k), alg.bracket_basis(i, j));
                Vec r1 = alg.bracket(p.multiply_basis(k, i), unit(j));
                Vec r2 = alg.bracket(unit(i), p.multiply_basis(k, j));
                for (std::size_t m = 0; m < n; ++m) lhs[m] = Rat(2) * lhs[m] - r1[m] - r2[m];
                record_if_nonzero(rep.violations, i, j, k, std::move(lhs));
            }
    return rep;
}

CheckReport check_poisson_leibniz(const LieAlgebra& alg, const CommutativeProduct& p) {
    if (alg.dim() != p.dim())
        throw std::invalid_argument("check_poisson_leibniz: dimension mismatch");
    const std::size_t n = p.dim();
    CheckReport rep;
    auto unit = [n](std::size_t i) {
        Vec v(n);
        v[i - 1] = Rat(1);
        return v;
    };
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j)
            for (std::size_t k = j; k <= n; ++k) {
                Vec lhs = alg.bracket(unit(i), p.multiply_basis(j, k));
                Vec r1 = p.multiply(alg.bracket_basis(i, j), unit(k));
                Vec r2 = p.multiply(unit(j), alg.bracket_basis(i, k));
                for (std::size_t m = 0; m < n; ++m) lhs[m] -= r1[m] + r2[m];
                record_if_nonzero(rep.violations, i, j, k, std::move(lhs));
            }
    return rep;
}

namespace {

struct SplitMix64 {
    std::uint64_t state;
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
};

long uniform(SplitMix64& rng, long lo, long hi) {
    return lo + static_cast<long>(rng.next() % static_cast<std::uint64_t>(hi - lo + 1));
}

Rat sample_rat(SplitMix64& rng, long bound) {
    long num = uniform(rng, -bound, bound);
    long den = uniform(rng, 1, bound);
    return Rat(num, den);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
    SplitMix64 rng{base ^ (0xD1B54A32D192ED03ull * (index + 1))};
    return rng.next();
}

ParameterAssignment sample_parameters(const TPVariant& v, std::uint64_t seed, long bound) {
    if (bound < 1) throw std::invalid_argument("sample_parameters: bound must be >= 1");
    SplitMix64 rng{seed};
    ParameterAssignment a;
    for (const std::string& name : v.parameters) a.values[name] = sample_rat(rng, bound);
    if (v.domain_constraints.empty()) return a;
    std::vector<std::string> constrained;
    for (const std::string& name : v.parameters)
        for (const auto& c : v.domain_constraints)
            if (std::find(c.involves.begin(), c.involves.end(), name) != c.involves.end() &&
                std::find(constrained.begin(), constrained.end(), name) == constrained.end())
                constrained.push_back(name);
    const int retry_budget = 64;
    for (int attempt = 0; attempt <= retry_budget; ++attempt) {
        bool ok = true;
        for (const auto& c : v.domain_constraints)
            if (c.expr(a).is_zero()) ok = false;
        if (ok) return a;
        if (attempt == retry_budget) break;
        for (const std::string& name : constrained) a.values[name] = sample_rat(rng, bound);
    }
    throw std::runtime_error("sample_parameters: domain constraints unsatisfiable within retry budget for " +
                             v.key);
}

}  // namespace qflie
