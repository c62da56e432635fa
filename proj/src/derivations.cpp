#include "qflie/derivations.hpp"

#include <functional>
#include <stdexcept>

#include "qflie/params.hpp"

namespace qflie {

Vec vectorize_map(const Mat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("vectorize_map: matrix must be square");
    const std::size_t n = m.rows();
    Vec v(n * n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) v[j * n + k] = m(k, j);
    return v;
}

Mat map_from_vector(std::size_t n, const Vec& v) {
    if (v.size() != n * n) throw std::invalid_argument("map_from_vector: length != n^2");
    Mat m(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) m(k, j) = v[j * n + k];
    return m;
}

Mat assemble_constraints(const DerivationProblem& p) {
    const LieAlgebra& alg = p.algebra;
    const std::size_t n = alg.dim();
    const Rat& delta = p.delta;
    Mat m(n * (n - 1) / 2 * n, n * n);
    std::size_t row0 = 0;
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = i + 1; j <= n; ++j) {
            // phi([e_i,e_j])_k = sum_m c_ij^m M[k][m]
            Vec cij = alg.bracket_basis(i, j);
            for (std::size_t mm = 1; mm <= n; ++mm) {
                if (!cij[mm - 1].is_zero())
                    for (std::size_t k = 1; k <= n; ++k)
                        m(row0 + (k - 1), (mm - 1) * n + (k - 1)) += cij[mm - 1];
                // -delta [phi(e_i), e_j]_k = -delta sum_m M[m][i] [e_m,e_j]_k
                Vec bmj = alg.bracket_basis(mm, j);
                for (std::size_t k = 1; k <= n; ++k)
                    if (!bmj[k - 1].is_zero())
                        m(row0 + (k - 1), (i - 1) * n + (mm - 1)) -= delta * bmj[k - 1];
                // -delta [e_i, phi(e_j)]_k = -delta sum_m M[m][j] [e_i,e_m]_k
                Vec bim = alg.bracket_basis(i, mm);
                for (std::size_t k = 1; k <= n; ++k)
                    if (!bim[k - 1].is_zero())
                        m(row0 + (k - 1), (j - 1) * n + (mm - 1)) -= delta * bim[k - 1];
            }
            row0 += n;
        }
    }
    return m;
}

DerivationSpace::DerivationSpace(std::size_t algebra_dim, Subspace space)
    : algebra_dim_(algebra_dim), space_(std::move(space)) {
    if (space_.ambient_dim() != algebra_dim_ * algebra_dim_)
        throw std::invalid_argument("DerivationSpace: ambient dimension != n^2");
}

std::vector<Mat> DerivationSpace::basis_maps() const {
    std::vector<Mat> maps;
    maps.reserve(space_.dim());
    for (const Vec& v : space_.basis()) maps.push_back(map_from_vector(algebra_dim_, v));
    return maps;
}

bool DerivationSpace::contains(const Mat& m) const { return space_.contains(vectorize_map(m)); }

DerivationSpace solve_derivation_space(const DerivationProblem& p) {
    return DerivationSpace(p.algebra.dim(), nullspace(assemble_constraints(p)));
}

bool is_delta_derivation(const LieAlgebra& alg, const Mat& m, const Rat& delta) {
    const std::size_t n = alg.dim();
    if (m.rows() != n || m.cols() != n)
        throw std::invalid_argument("is_delta_derivation: dimension mismatch");
    std::vector<Vec> img(n);  // img[j] = phi(e_{j+1})
    for (std::size_t j = 0; j < n; ++j) {
        Vec col(n);
        for (std::size_t k = 0; k < n; ++k) col[k] = m(k, j);
        img[j] = std::move(col);
    }
    auto unit = [n](std::size_t i) {
        Vec v(n);
        v[i - 1] = Rat(1);
        return v;
    };
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j) {
            Vec lhs = m.apply(alg.bracket_basis(i, j));
            Vec r1 = alg.bracket(img[i - 1], unit(j));
            Vec r2 = alg.bracket(unit(i), img[j - 1]);
            for (std::size_t k = 0; k < n; ++k)
                if (lhs[k] != delta * (r1[k] + r2[k])) return false;
        }
    return true;
}

bool is_half_derivation(const LieAlgebra& alg, const Mat& m) {
    return is_delta_derivation(alg, m, Rat(1, 2));
}

namespace {

using Cols = std::map<std::size_t, SparseVec>;

Mat mat_from_cols(std::size_t n, const Cols& cols) {
    Mat m(n, n);
    for (const auto& [j, vec] : cols)
        for (const auto& [k, c] : vec) m(k - 1, j - 1) = c;
    return m;
}

std::string an(std::size_t i) { return "a" + std::to_string(i); }
std::string bn(std::size_t i) { return "b" + std::to_string(i); }
std::string gn(std::size_t i) { return "g" + std::to_string(i); }

struct Display {
    std::vector<std::string> params;
    std::function<Mat(const ParameterAssignment&)> build;
};

Display display_g1n1_5() {
    Display d;
    for (std::size_t i = 1; i <= 5; ++i) d.params.push_back(an(i));
    for (std::size_t i = 1; i <= 5; ++i) d.params.push_back(bn(i));
    d.build = [](const ParameterAssignment& p) {
        auto a = [&](std::size_t i) { return p.at(an(i)); };
        auto b = [&](std::size_t i) { return p.at(bn(i)); };
        Cols cols;
        for (std::size_t i = 1; i <= 5; ++i) cols[1][i] = a(i);
        for (std::size_t i = 1; i <= 5; ++i) cols[2][i] = b(i);
        cols[3] = {{3, (a(1) + b(2)) / 2}, {4, b(3) / 2}, {5, -a(3) / 2}};
        cols[4] = {{4, (Rat(3) * a(1) + b(2)) / 4}, {5, a(2) / 2}};
        cols[5] = {{4, b(1) / 2}, {5, (a(1) + Rat(3) * b(2)) / 4}};
        return mat_from_cols(5, cols);
    };
    return d;
}

Display display_g1n1_large(std::size_t n) {
    Display d;
    for (std::size_t i = 1; i <= n; ++i) d.params.push_back(an(i));
    for (std::size_t i = n - 2; i <= n; ++i) d.params.push_back(bn(i));
    d.build = [n](const ParameterAssignment& p) {
        auto a = [&](std::size_t i) { return p.at(an(i)); };
        auto b = [&](std::size_t i) { return p.at(bn(i)); };
        Cols cols;
        for (std::size_t i = 1; i <= n; ++i) cols[1][i] = a(i);
        cols[2] = {{2, a(1)}, {n - 2, b(n - 2)}, {n - 1, b(n - 1)}, {n, b(n)}};
        cols[3] = {{3, a(1)}, {n - 1, b(n - 2) / 2}, {n, -a(n - 2) / 2}};
        for (std::size_t i = 4; i <= n - 1; ++i)
            cols[i] = {{i, a(1)}, {n, Rat(i % 2 == 0 ? 1 : -1) * a(n - i + 1) / 2}};
        cols[n] = {{n, a(1)}};
        return mat_from_cols(n, cols);
    };
    return d;
}

Display display_g2n1_5() {
    Display d;
    for (std::size_t i = 1; i <= 5; ++i) d.params.push_back(an(i));
    for (std::size_t i = 2; i <= 5; ++i) d.params.push_back(bn(i));
    d.params.push_back(gn(4));
    d.build = [](const ParameterAssignment& p) {
        auto a = [&](std::size_t i) { return p.at(an(i)); };
        auto b = [&](std::size_t i) { return p.at(bn(i)); };
        Cols cols;
        for (std::size_t i = 1; i <= 5; ++i) cols[1][i] = a(i);
        for (std::size_t i = 2; i <= 5; ++i) cols[2][i] = b(i);
        cols[3] = {{3, (a(1) + b(2)) / 2}, {4, (b(3) - a(5)) / 2}};
        cols[4] = {{4, (Rat(3) * a(1) + b(2)) / 4}};
        cols[5] = {{3, -a(2)}, {4, p.at(gn(4))}, {5, (Rat(3) * a(1) - b(2)) / 2}};
        return mat_from_cols(5, cols);
    };
    return d;
}

Display display_g2n1_6() {
    Display d;
    for (std::size_t i = 1; i <= 6; ++i) d.params.push_back(an(i));
    d.params.push_back(bn(4));
    d.params.push_back(bn(5));
    d.params.push_back(gn(5));
    d.build = [](const ParameterAssignment& p) {
        auto a = [&](std::size_t i) { return p.at(an(i)); };
        Cols cols;
        for (std::size_t i = 1; i <= 6; ++i) cols[1][i] = a(i);
        cols[2] = {{2, a(1)}, {3, Rat(-3) * a(6)}, {4, p.at(bn(4))}, {5, p.at(bn(5))}};
        cols[3] = {{3, a(1)}, {4, Rat(-2) * a(6)}, {5, p.at(bn(4)) / 2}};
        cols[4] = {{4, a(1)}, {5, Rat(-3, 2) * a(6)}};
        cols[5] = {{5, a(1)}};
        cols[6] = {{3, -a(2)}, {4, -a(3)}, {5, p.at(gn(5))}, {6, a(1)}};
        return mat_from_cols(6, cols);
    };
    return d;
}

Display display_g2n1_large(std::size_t n) {
    Display d;
    for (std::size_t i = 1; i <= n - 1; ++i) d.params.push_back(an(i));
    d.params.push_back(bn(n - 2));
    d.params.push_back(bn(n - 1));
    d.params.push_back(gn(n - 1));
    d.build = [n](const ParameterAssignment& p) {
        auto a = [&](std::size_t i) { return p.at(an(i)); };
        Cols cols;
        for (std::size_t i = 1; i <= n - 1; ++i) cols[1][i] = a(i);
        cols[2] = {{2, a(1)}, {n - 2, p.at(bn(n - 2))}, {n - 1, p.at(bn(n - 1))}};
        cols[3] = {{3, a(1)}, {n - 1, p.at(bn(n - 2)) / 2}};
        for (std::size_t i = 4; i <= n - 1; ++i) cols[i] = {{i, a(1)}};
        cols[n] = {{n - 1, p.at(gn(n - 1))}, {n, a(1)}};
        for (std::size_t i = 3; i <= n - 2; ++i) cols[n][i] = -a(i - 1);
        return mat_from_cols(n, cols);
    };
    return d;
}

Display display_g3n1_7() {
    Display d;
    for (std::size_t i = 1; i <= 6; ++i) d.params.push_back(an(i));
    d.params.push_back(bn(5));
    d.params.push_back(bn(6));
    d.params.push_back(gn(6));
    d.build = [](const ParameterAssignment& p) {
        auto a = [&](std::size_t i) { return p.at(an(i)); };
        Cols cols;
        for (std::size_t i = 1; i <= 6; ++i) cols[1][i] = a(i);
        cols[2] = {{2, a(1)}, {4, Rat(4) * a(2)}, {5, p.at(bn(5))}, {6, p.at(bn(6))}};
        cols[3] = {{3, a(1)}, {5, Rat(2) * a(2)}, {6, (p.at(bn(5)) - a(3)) / 2}};
        cols[4] = {{4, a(1)}, {6, Rat(3, 2) * a(2)}};
        cols[5] = {{5, a(1)}};
        cols[6] = {{6, a(1)}};
        cols[7] = {{3, -a(2)}, {4, -a(3)}, {5, -a(4)}, {6, p.at(gn(6))}, {7, a(1)}};
        return mat_from_cols(7, cols);
    };
    return d;
}

Display display_g3n1_large(std::size_t n) {
    Display d;
    d.params.push_back(an(1));
    for (std::size_t i = 3; i <= n - 1; ++i) d.params.push_back(an(i));
    d.params.push_back(bn(n - 2));
    d.params.push_back(bn(n - 1));
    d.params.push_back(gn(n - 1));
    d.build = [n](const ParameterAssignment& p) {
        auto a = [&](std::size_t i) { return p.at(an(i)); };
        Cols cols;
        cols[1][1] = a(1);
        for (std::size_t i = 3; i <= n - 1; ++i) cols[1][i] = a(i);
        cols[2] = {{2, a(1)}, {n - 2, p.at(bn(n - 2))}, {n - 1, p.at(bn(n - 1))}};
        for (std::size_t i = 5; i + 3 <= n; ++i) cols[2][i] = a(i - 2);
        cols[3] = {{3, a(1)}, {n - 1, (p.at(bn(n - 2)) - a(n - 4)) / 2}};
        for (std::size_t i = 4; i <= n - 1; ++i) cols[i] = {{i, a(1)}};
        cols[n] = {{n - 1, p.at(gn(n - 1))}, {n, a(1)}};
        for (std::size_t i = 4; i <= n - 2; ++i) cols[n][i] = -a(i - 1);
        return mat_from_cols(n, cols);
    };
    return d;
}

Display display_g1_7() {
    Display d;
    d.params.push_back(an(1));
    for (std::size_t i = 3; i <= 7; ++i) d.params.push_back(an(i));
    for (std::size_t i = 5; i <= 7; ++i) d.params.push_back(bn(i));
    d.build = [](const ParameterAssignment& p) {
        auto a = [&](std::size_t i) { return p.at(an(i)); };
        auto b = [&](std::size_t i) { return p.at(bn(i)); };
        Cols cols;
        cols[1][1] = a(1);
        for (std::size_t i = 3; i <= 7; ++i) cols[1][i] = a(i);
        cols[2] = {{2, a(1)}, {4, Rat(-1, 3) * a(3)}, {5, b(5)}, {6, b(6)}, {7, b(7)}};
        cols[3] = {{3, a(1)}, {5, Rat(-2, 3) * a(3)}, {6, (b(5) - a(4)) / 2}, {7, -a(5) / 2}};
        cols[4] = {{4, a(1)}, {6, Rat(-1, 3) * a(3)}, {7, a(4) / 2}};
        cols[5] = {{5, a(1)}, {7, -a(3) / 2}};
        cols[6] = {{6, a(1)}};
        cols[7] = {{7, a(1)}};
        return mat_from_cols(7, cols);
    };
    return d;
}

Display display_g2_9() {
    Display d;
    d.params.push_back(an(1));
    for (std::size_t i = 5; i <= 9; ++i) d.params.push_back(an(i));
    for (std::size_t i = 7; i <= 9; ++i) d.params.push_back(bn(i));
    d.build = [](const ParameterAssignment& p) {
        auto a = [&](std::size_t i) { return p.at(an(i)); };
        auto b = [&](std::size_t i) { return p.at(bn(i)); };
        Cols cols;
        cols[1][1] = a(1);
        for (std::size_t i = 5; i <= 9; ++i) cols[1][i] = a(i);
        cols[2] = {{2, a(1)}, {6, a(5) / 3}, {7, b(7)}, {8, b(8)}, {9, b(9)}};
        cols[3] = {{3, a(1)}, {7, Rat(-4, 3) * a(5)}, {8, (b(7) - Rat(5) * a(6)) / 2}, {9, -a(7) / 2}};
        cols[4] = {{4, a(1)}, {8, a(5) / 3}, {9, a(6) / 2}};
        cols[5] = {{5, a(1)}, {9, -a(5) / 2}};
        for (std::size_t i = 6; i <= 9; ++i) cols[i] = {{i, a(1)}};
        return mat_from_cols(9, cols);
    };
    return d;
}

Display display_g3_11() {
    Display d;
    d.params.push_back(an(1));
    for (std::size_t i = 6; i <= 11; ++i) d.params.push_back(an(i));
    for (std::size_t i = 9; i <= 11; ++i) d.params.push_back(bn(i));
    d.build = [](const ParameterAssignment& p) {
        auto a = [&](std::size_t i) { return p.at(an(i)); };
        auto b = [&](std::size_t i) { return p.at(bn(i)); };
        Cols cols;
        cols[1][1] = a(1);
        for (std::size_t i = 6; i <= 11; ++i) cols[1][i] = a(i);
        cols[2] = {{2, a(1)}, {7, -a(6)}, {8, -a(7)}, {9, b(9)}, {10, b(10)}, {11, b(11)}};
        cols[3] = {{3, a(1)}, {10, b(9) / 2}, {11, -a(9) / 2}};
        cols[4] = {{4, a(1)}, {10, a(7) / 2}, {11, a(8) / 2}};
        cols[5] = {{5, a(1)}, {10, -a(6) / 2}, {11, -a(7) / 2}};
        cols[6] = {{6, a(1)}, {11, a(6) / 2}};
        for (std::size_t i = 7; i <= 11; ++i) cols[i] = {{i, a(1)}};
        return mat_from_cols(11, cols);
    };
    return d;
}

Display display_for(const FamilyId& id) {
    switch (id.family) {
        case Family::G1N1: return id.n == 5 ? display_g1n1_5() : display_g1n1_large(id.n);
        case Family::G2N1:
            if (id.n == 5) return display_g2n1_5();
            if (id.n == 6) return display_g2n1_6();
            return display_g2n1_large(id.n);
        case Family::G3N1: return id.n == 7 ? display_g3n1_7() : display_g3n1_large(id.n);
        case Family::G1_7: return display_g1_7();
        case Family::G2_9: return display_g2_9();
        case Family::G3_11: return display_g3_11();
    }
    throw std::logic_error("display_for: unreachable");
}

}  // namespace

DerivationSpace predicted_space(const FamilyId& id) {
    family_id(id.family, id.n);  // validate
    Display d = display_for(id);
    std::vector<Vec> spanning;
    for (const std::string& slot : d.params) {
        ParameterAssignment p;
        for (const std::string& name : d.params) p.values[name] = Rat(name == slot ? 1 : 0);
        spanning.push_back(vectorize_map(d.build(p)));
    }
    return DerivationSpace(id.n, Subspace(id.n * id.n, spanning));
}

TheoremReport verify_theorem(const FamilyId& id) {
    TheoremReport rep;
    rep.id = id;
    LieAlgebra alg = make_algebra(id);
    DerivationSpace solved = solve_derivation_space({alg, Rat(1, 2)});
    DerivationSpace predicted = predicted_space(id);
    rep.solved_dim = solved.dim();
    rep.predicted_dim = predicted.dim();
    rep.equal = equal_span(solved.space(), predicted.space());
    if (!rep.equal) {
        for (const Vec& v : solved.space().basis())
            if (!predicted.space().contains(v)) rep.solved_not_predicted.push_back(v);
        for (const Vec& v : predicted.space().basis())
            if (!solved.space().contains(v)) rep.predicted_not_solved.push_back(v);
    }
    return rep;
}

}  // namespace qflie
