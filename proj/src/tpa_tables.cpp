// Catalog of the parametrized commutative multiplication tables, one per
// TP variant. Coefficients are transcribed from the printed displays with no
// algebraic simplification; the verification sweep treats them as claims under
// test. A sum term whose parameter index is not declared by the variant reads
// as zero (the displays reuse index-shifted sums across rows).

#include <stdexcept>

#include "qflie/tpa.hpp"

namespace qflie {

namespace {

std::string an(std::size_t i) { return "a" + std::to_string(i); }
std::string bn(std::size_t i) { return "b" + std::to_string(i); }
std::string gn(std::size_t i) { return "g" + std::to_string(i); }

using P = const ParameterAssignment&;

CoeffFn cst(long num, long den = 1) {
    Rat c(num, den);
    return [c](P) { return c; };
}

CoeffFn pm(const std::string& name, Rat scale = Rat(1)) {
    return [name, scale](P p) { return scale * p.at(name); };
}

struct Builder {
    TPVariant v;

    Builder(const FamilyId& id, std::string key) {
        v.family = id;
        v.key = std::move(key);
    }

    void par(const std::string& name) { v.parameters.push_back(name); }
    void pars(std::size_t lo, std::size_t hi, const std::string& prefix = "a") {
        for (std::size_t i = lo; i <= hi; ++i) v.parameters.push_back(prefix + std::to_string(i));
    }
    void term(std::size_t i, std::size_t j, std::size_t k, CoeffFn f) {
        v.terms.push_back({i, j, k, std::move(f)});
    }
    void constraint(std::string label, std::vector<std::string> involves, CoeffFn f) {
        v.domain_constraints.push_back({std::move(label), std::move(involves), std::move(f)});
    }
};

// ---- g1(n,1) ----

TPVariant g1n1_5(const FamilyId& id, const std::string& key) {
    Builder b(id, key);
    if (key == "TP1") {
        b.par(an(4)); b.par(an(5)); b.par(bn(4)); b.par(bn(5)); b.par(bn(9)); b.par(bn(10));
        b.term(1, 1, 4, pm(an(4))); b.term(1, 1, 5, pm(an(5)));
        b.term(1, 2, 4, pm(bn(4))); b.term(1, 2, 5, pm(bn(5)));
        b.term(2, 2, 4, pm(bn(9))); b.term(2, 2, 5, pm(bn(10)));
        return b.v;
    }
    if (key == "TP2") {
        b.par(an(4)); b.par(an(5)); b.par(bn(3)); b.par(bn(4)); b.par(bn(5)); b.par(bn(9)); b.par(bn(10));
        b.term(1, 1, 3, cst(1)); b.term(1, 1, 4, pm(an(4))); b.term(1, 1, 5, pm(an(5)));
        b.term(1, 2, 3, pm(bn(3))); b.term(1, 2, 4, pm(bn(4))); b.term(1, 2, 5, pm(bn(5)));
        b.term(1, 3, 4, pm(bn(3), Rat(1, 2))); b.term(1, 3, 5, cst(-1, 2));
        b.term(2, 2, 3, [](P p) { return p.at("b3") * p.at("b3"); });
        b.term(2, 2, 4, pm(bn(9))); b.term(2, 2, 5, pm(bn(10)));
        b.term(2, 3, 4, [](P p) { return p.at("b3") * p.at("b3") / 2; });
        b.term(2, 3, 5, pm(bn(3), Rat(-1, 2)));
        return b.v;
    }
    if (key == "TP3") {
        b.par(an(1)); b.par(an(3)); b.par(an(4)); b.par(an(5)); b.par(bn(2)); b.par(bn(4)); b.par(bn(5));
        auto d = [](P p) { return p.at("a1") - p.at("b2"); };  // recurring (a1 - b2)
        b.term(1, 1, 1, pm(an(1))); b.term(1, 1, 2, cst(1)); b.term(1, 1, 3, pm(an(3)));
        b.term(1, 1, 4, pm(an(4))); b.term(1, 1, 5, pm(an(5)));
        b.term(1, 2, 1, [d](P p) { return -d(p) * d(p) / 4; });
        b.term(1, 2, 2, pm(bn(2)));
        b.term(1, 2, 3, [d](P p) { return -p.at("a3") * d(p) / 2; });
        b.term(1, 2, 4, pm(bn(4))); b.term(1, 2, 5, pm(bn(5)));
        b.term(1, 3, 3, [](P p) { return (p.at("a1") + p.at("b2")) / 2; });
        b.term(1, 3, 4, [d](P p) { return -p.at("a3") * d(p) / 4; });
        b.term(1, 3, 5, pm(an(3), Rat(-1, 2)));
        b.term(1, 4, 4, [](P p) { return (Rat(3) * p.at("a1") + p.at("b2")) / 4; });
        b.term(1, 4, 5, cst(1, 2));
        b.term(1, 5, 4, [d](P p) { return -d(p) * d(p) / 8; });
        b.term(1, 5, 5, [](P p) { return (p.at("a1") + Rat(3) * p.at("b2")) / 4; });
        b.term(2, 2, 1, [d](P p) { return -d(p) * d(p) * p.at("b2") / 4; });
        b.term(2, 2, 2, [](P p) {
            const Rat a1 = p.at("a1"), b2 = p.at("b2");
            return (-a1 * a1 - Rat(2) * a1 * b2 + Rat(3) * b2 * b2) / 4;
        });
        b.term(2, 2, 3, [d](P p) { return p.at("a3") * d(p) * d(p) / 4; });
        b.term(2, 2, 4, [](P p) {
            const Rat a1 = p.at("a1"), a4 = p.at("a4"), a5 = p.at("a5");
            const Rat b2 = p.at("b2"), b4 = p.at("b4"), b5 = p.at("b5");
            return (a1 * a1 * (a5 * b2 - b5) -
                    b2 * (Rat(2) * a4 * b2 - a5 * b2 * b2 - Rat(10) * b4 + b2 * b5) +
                    Rat(2) * a1 * (a4 * b2 - a5 * b2 * b2 - b4 + b2 * b5)) / 8;
        });
        b.term(2, 2, 5, [](P p) {
            const Rat a1 = p.at("a1"), a4 = p.at("a4"), a5 = p.at("a5");
            const Rat b2 = p.at("b2"), b4 = p.at("b4"), b5 = p.at("b5");
            return (Rat(2) * b4 - Rat(2) * a4 * b2 - Rat(3) * a5 * b2 * b2 +
                    Rat(3) * a1 * (a5 * b2 - b5) + Rat(7) * b2 * b5) / 4;
        });
        b.term(2, 3, 3, [](P p) {
            const Rat a1 = p.at("a1"), b2 = p.at("b2");
            return (b2 * b2 - a1 * a1) / 4;
        });
        b.term(2, 3, 4, [d](P p) { return p.at("a3") * d(p) * d(p) / 8; });
        b.term(2, 3, 5, [d](P p) { return p.at("a3") * d(p) / 4; });
        b.term(2, 4, 4, [](P p) { return p.at("a1") * (p.at("b2") - p.at("a1")) / 4; });
        b.term(2, 4, 5, pm(bn(2), Rat(1, 2)));
        b.term(2, 5, 4, [d](P p) { return -d(p) * d(p) * p.at("b2") / 8; });
        b.term(2, 5, 5, [](P p) {
            const Rat a1 = p.at("a1"), b2 = p.at("b2");
            return -(a1 * a1 + a1 * b2 - Rat(2) * b2 * b2) / 4;
        });
        b.term(3, 3, 4, [](P p) {
            const Rat a1 = p.at("a1"), b2 = p.at("b2");
            return (b2 * b2 - a1 * a1) / 8;
        });
        b.term(3, 3, 5, [](P p) { return -(p.at("a1") + p.at("b2")) / 4; });
        return b.v;
    }
    throw std::invalid_argument("g1n1 n=5: unknown variant " + key);
}

TPVariant g1n1_large(const FamilyId& id, const std::string& key) {
    const std::size_t n = id.n;
    Builder b(id, key);
    auto sign_half = [](std::size_t j) { return Rat(j % 2 == 0 ? 1 : -1, 2); };
    if (key == "TP1") {
        b.pars(4, n); b.pars(1, 6, "b");
        for (std::size_t j = 4; j <= n; ++j) b.term(1, 1, j, pm(an(j)));
        b.term(1, 2, n - 2, pm(bn(1))); b.term(1, 2, n - 1, pm(bn(2))); b.term(1, 2, n, pm(bn(3)));
        b.term(1, 3, n - 1, pm(bn(1), Rat(1, 2))); b.term(1, 3, n, pm(an(n - 2), Rat(-1, 2)));
        for (std::size_t j = 4; j + 3 <= n; ++j) b.term(1, j, n, pm(an(n - j + 1), sign_half(j)));
        b.term(2, 2, n - 2, pm(bn(4))); b.term(2, 2, n - 1, pm(bn(5))); b.term(2, 2, n, pm(bn(6)));
        b.term(2, 3, n - 1, pm(bn(4), Rat(1, 2))); b.term(2, 3, n, pm(bn(1), Rat(-1, 2)));
        return b.v;
    }
    if (key == "TP2") {
        b.pars(4, n); b.pars(1, 5, "b");
        b.term(1, 1, 3, cst(1));
        for (std::size_t j = 4; j <= n; ++j) b.term(1, 1, j, pm(an(j)));
        b.term(1, 2, n - 2, pm(bn(1))); b.term(1, 2, n - 1, pm(bn(2))); b.term(1, 2, n, pm(bn(3)));
        b.term(1, 3, n - 1, pm(bn(1), Rat(1, 2))); b.term(1, 3, n, pm(an(n - 2), Rat(-1, 2)));
        for (std::size_t j = 4; j + 3 <= n; ++j) b.term(1, j, n, pm(an(n - j + 1), sign_half(j)));
        b.term(1, n - 2, n, cst(-1, 2));
        b.term(2, 2, n - 1, pm(bn(4))); b.term(2, 2, n, pm(bn(5)));
        b.term(2, 3, n, pm(bn(1), Rat(-1, 2)));
        return b.v;
    }
    if (key == "TP3") {
        b.pars(3, n); b.par(bn(1)); b.par(bn(2));
        b.term(1, 1, 2, cst(1));
        for (std::size_t j = 3; j <= n; ++j) b.term(1, 1, j, pm(an(j)));
        b.term(1, 2, n - 1, pm(bn(1), Rat(2))); b.term(1, 2, n, pm(bn(2)));
        b.term(1, 3, n, pm(an(n - 2), Rat(-1, 2)));
        for (std::size_t j = 4; j + 2 <= n; ++j) b.term(1, j, n, pm(an(n - j + 1), sign_half(j)));
        b.term(1, n - 1, n, cst(1, 2));
        b.term(2, 2, n, pm(bn(1)));
        return b.v;
    }
    throw std::invalid_argument("g1n1 n>=7: unknown variant " + key);
}

// ---- g2(n,1) ----

TPVariant g2n1_5(const FamilyId& id, const std::string& key) {
    Builder b(id, key);
    if (key == "TP1") {
        b.par(an(3)); b.par(an(4)); b.par(an(5)); b.par(an(8)); b.par(an(10)); b.par(an(15)); b.par(an(16));
        b.term(1, 1, 2, cst(1)); b.term(1, 1, 3, pm(an(3))); b.term(1, 1, 4, pm(an(4))); b.term(1, 1, 5, pm(an(5)));
        b.term(1, 2, 3, [](P p) {
            return p.at("a5") * (Rat(1) - Rat(2) * p.at("a16")) - Rat(2) * p.at("a15");
        });
        b.term(1, 2, 4, pm(an(8)));
        b.term(1, 3, 4, [](P p) { return -(p.at("a15") + p.at("a5") * p.at("a16")); });
        b.term(1, 5, 3, cst(-1)); b.term(1, 5, 4, pm(an(10)));
        b.term(2, 2, 4, [](P p) {
            const Rat s = p.at("a15") + p.at("a5") * p.at("a16");
            return Rat(2) * s * s - p.at("a5") * (Rat(2) * p.at("a15") + p.at("a16"));
        });
        b.term(2, 5, 4, pm(an(15)));
        b.term(5, 5, 4, pm(an(16)));
        return b.v;
    }
    if (key == "TP2") {
        b.par(an(3)); b.par(an(4)); b.par(an(8)); b.par(an(10)); b.par(an(13)); b.par(an(15));
        b.term(1, 1, 3, pm(an(3))); b.term(1, 1, 4, pm(an(4)));
        b.term(1, 2, 4, pm(an(8)));
        b.term(1, 5, 4, pm(an(10)));
        b.term(2, 2, 4, pm(an(13)));
        b.term(2, 5, 4, pm(an(15)));
        b.term(5, 5, 4, cst(1));
        return b.v;
    }
    if (key == "TP3" || key == "TP8") {
        b.par(an(4)); b.par(an(7)); b.par(an(8)); b.par(an(10)); b.par(an(13)); b.par(an(15));
        b.term(1, 1, 3, [](P p) { return p.at("a7") * p.at("a7"); });
        b.term(1, 1, 4, pm(an(4)));
        b.term(1, 2, 3, pm(an(7))); b.term(1, 2, 4, pm(an(8)));
        b.term(1, 3, 4, pm(an(7), Rat(1, 2)));
        b.term(1, 5, 4, pm(an(10)));
        b.term(2, 2, 3, cst(1)); b.term(2, 2, 4, pm(an(13)));
        b.term(2, 3, 4, cst(1, 2));
        b.term(2, 5, 4, pm(an(15)));
        if (key == "TP3") b.term(5, 5, 4, cst(1));
        return b.v;
    }
    if (key == "TP4") {
        b.par(an(4)); b.par(an(5)); b.par(an(7)); b.par(an(8)); b.par(an(9));
        b.par(an(12)); b.par(an(13)); b.par(an(15));
        b.constraint("alpha12 != 0", {an(12)}, pm(an(12)));
        b.term(1, 1, 3, [](P p) {
            const Rat a5 = p.at("a5"), a7 = p.at("a7");
            return (a7 * a7 - a5 * (a7 + Rat(2) * p.at("a15"))) / p.at("a12");
        });
        b.term(1, 1, 4, pm(an(4))); b.term(1, 1, 5, pm(an(5)));
        b.term(1, 2, 3, pm(an(7))); b.term(1, 2, 4, pm(an(8))); b.term(1, 2, 5, pm(an(9)));
        b.term(1, 3, 4, [](P p) { return (p.at("a7") - p.at("a5")) / 2; });
        b.term(1, 5, 4, [](P p) { return p.at("a5") * p.at("a12") / 2; });
        b.term(2, 2, 3, pm(an(12))); b.term(2, 2, 4, pm(an(13))); b.term(2, 2, 5, cst(1));
        b.term(2, 3, 4, pm(an(12), Rat(1, 2)));
        b.term(2, 5, 4, pm(an(15)));
        return b.v;
    }
    if (key == "TP5" || key == "TP9") {
        b.par(an(3)); b.par(an(4)); b.par(an(5)); b.par(an(7)); b.par(an(8));
        if (key == "TP9") b.par(an(10));
        b.par(an(13));
        b.constraint("alpha5 != 0", {an(5)}, pm(an(5)));
        b.term(1, 1, 3, pm(an(3))); b.term(1, 1, 4, pm(an(4))); b.term(1, 1, 5, pm(an(5)));
        b.term(1, 2, 3, pm(an(7))); b.term(1, 2, 4, pm(an(8)));
        b.term(1, 3, 4, [](P p) { return (p.at("a7") - p.at("a5")) / 2; });
        if (key == "TP9") b.term(1, 5, 4, pm(an(10)));
        b.term(2, 2, 4, pm(an(13)));
        if (key == "TP5") b.term(2, 2, 5, cst(1));
        b.term(2, 5, 4, [](P p) {
            const Rat a5 = p.at("a5"), a7 = p.at("a7");
            return a7 * (a7 - a5) / (Rat(2) * a5);
        });
        return b.v;
    }
    if (key == "TP6") {
        b.par(an(3)); b.par(an(4)); b.par(an(8)); b.par(an(13)); b.par(an(15));
        b.term(1, 1, 3, pm(an(3))); b.term(1, 1, 4, pm(an(4)));
        b.term(1, 2, 4, pm(an(8)));
        b.term(2, 2, 4, pm(an(13))); b.term(2, 2, 5, cst(1));
        b.term(2, 5, 4, pm(an(15)));
        return b.v;
    }
    if (key == "TP7") {
        b.par(an(3)); b.par(an(4)); b.par(an(8)); b.par(an(12)); b.par(an(13)); b.par(an(15));
        b.term(1, 1, 3, pm(an(3))); b.term(1, 1, 4, pm(an(4)));
        b.term(1, 2, 3, pm(an(15), Rat(2))); b.term(1, 2, 4, pm(an(8))); b.term(1, 2, 5, cst(1));
        b.term(1, 3, 4, pm(an(15), Rat(1, 2)));
        b.term(1, 5, 4, [](P p) {
            const Rat a15 = p.at("a15");
            return (p.at("a3") * (p.at("a12") - Rat(1)) - Rat(4) * a15 * a15) / 2;
        });
        b.term(2, 2, 3, pm(an(12))); b.term(2, 2, 4, pm(an(13)));
        b.term(2, 3, 4, [](P p) { return (p.at("a12") - Rat(1)) / 2; });
        b.term(2, 5, 4, pm(an(15)));
        return b.v;
    }
    if (key == "TP10") {
        b.par(an(3)); b.par(an(4)); b.par(an(8)); b.par(an(10)); b.par(an(13)); b.par(an(15));
        b.term(1, 1, 3, pm(an(3))); b.term(1, 1, 4, pm(an(4)));
        b.term(1, 2, 4, pm(an(8)));
        b.term(1, 5, 4, pm(an(10)));
        b.term(2, 2, 4, pm(an(13)));
        b.term(2, 5, 4, pm(an(15)));
        return b.v;
    }
    throw std::invalid_argument("g2n1 n=5: unknown variant " + key);
}

TPVariant g2n1_6(const FamilyId& id, const std::string& key) {
    Builder b(id, key);
    if (key == "TP1") {
        b.par(an(2)); b.par(an(3)); b.par(an(4)); b.par(an(7)); b.par(an(8)); b.par(an(11)); b.par(an(12));
        b.term(1, 1, 2, cst(1)); b.term(1, 1, 3, pm(an(2))); b.term(1, 1, 4, pm(an(3))); b.term(1, 1, 5, pm(an(4)));
        b.term(1, 2, 4, pm(an(11), Rat(-2))); b.term(1, 2, 5, pm(an(7)));
        b.term(1, 3, 5, pm(an(11), Rat(-1)));
        b.term(1, 6, 3, cst(-1)); b.term(1, 6, 4, pm(an(2), Rat(-1))); b.term(1, 6, 5, pm(an(8)));
        b.term(2, 6, 5, pm(an(11)));
        b.term(6, 6, 4, cst(1)); b.term(6, 6, 5, pm(an(12)));
        return b.v;
    }
    if (key == "TP2") {
        b.par(an(3)); b.par(an(4)); b.par(an(6)); b.par(an(7)); b.par(an(8));
        b.par(an(10)); b.par(an(11)); b.par(an(12));
        b.term(1, 1, 3, cst(1)); b.term(1, 1, 4, pm(an(3))); b.term(1, 1, 5, pm(an(4)));
        b.term(1, 2, 4, pm(an(6))); b.term(1, 2, 5, pm(an(7)));
        b.term(1, 3, 5, pm(an(6), Rat(1, 2)));
        b.term(1, 6, 4, cst(-1)); b.term(1, 6, 5, pm(an(8)));
        b.term(2, 2, 5, pm(an(10)));
        b.term(2, 6, 5, pm(an(11)));
        b.term(6, 6, 5, pm(an(12)));
        return b.v;
    }
    if (key == "TP3") {
        b.par(an(3)); b.par(an(4)); b.par(an(6)); b.par(an(7)); b.par(an(8));
        b.par(an(9)); b.par(an(10)); b.par(an(11)); b.par(an(12));
        b.term(1, 1, 4, pm(an(3))); b.term(1, 1, 5, pm(an(4)));
        b.term(1, 2, 4, pm(an(6))); b.term(1, 2, 5, pm(an(7)));
        b.term(1, 3, 5, pm(an(6), Rat(1, 2)));
        b.term(1, 6, 5, pm(an(8)));
        b.term(2, 2, 4, pm(an(9))); b.term(2, 2, 5, pm(an(10)));
        b.term(2, 3, 5, pm(an(9), Rat(1, 2)));
        b.term(2, 6, 5, pm(an(11)));
        b.term(6, 6, 5, pm(an(12)));
        return b.v;
    }
    throw std::invalid_argument("g2n1 n=6: unknown variant " + key);
}

TPVariant g2n1_large(const FamilyId& id, const std::string& key) {
    const std::size_t n = id.n;
    Builder b(id, key);
    if (key == "TP1") {
        b.par(an(1)); b.pars(3, n - 1); b.par(an(n)); b.par(an(n + 1)); b.par(an(n + 2));
        b.term(1, 1, 2, cst(1));
        for (std::size_t i = 3; i <= n - 1; ++i) b.term(1, 1, i, pm(an(i)));
        b.term(1, 2, n - 2, pm(an(1), Rat(2))); b.term(1, 2, n - 1, pm(an(n)));
        b.term(1, 3, n - 1, pm(an(1)));
        b.term(1, n, 3, cst(-1));
        for (std::size_t i = 4; i <= n - 2; ++i) b.term(1, n, i, pm(an(i - 1), Rat(-1)));
        b.term(1, n, n - 1, pm(an(n + 1)));
        b.term(2, n, n - 1, [](P p) { return -p.at("a1") * p.at("a3"); });
        for (std::size_t i = 4; i <= n - 2; ++i) b.term(n, n, i, pm(an(i - 1)));
        b.term(n, n, n - 1, pm(an(n + 2)));
        return b.v;
    }
    if (key == "TP2") {
        b.pars(4, n - 1); b.par(an(n)); b.par(an(n + 1));
        b.par(an(n + 3)); b.par(an(n + 4)); b.par(an(n + 5));
        b.term(1, 1, 3, cst(1));
        for (std::size_t i = 4; i <= n - 1; ++i) b.term(1, 1, i, pm(an(i)));
        b.term(1, 2, n - 1, pm(an(n)));
        b.term(1, n, 4, cst(-1));
        for (std::size_t i = 5; i <= n - 2; ++i) b.term(1, n, i, pm(an(i - 1), Rat(-1)));
        b.term(1, n, n - 1, pm(an(n + 1)));
        b.term(2, 2, n - 1, pm(an(n + 3)));
        b.term(2, n, n - 1, pm(an(n + 4)));
        b.term(n, n, 4, cst(1));
        for (std::size_t i = 5; i <= n - 2; ++i) b.term(n, n, i, pm(an(i - 1)));
        b.term(n, n, n - 1, pm(an(n + 5)));
        return b.v;
    }
    if (key == "TP3") {
        b.par(an(1)); b.pars(4, n - 1); b.par(an(n));
        b.par(an(n + 1)); b.par(an(n + 2)); b.par(an(n + 3)); b.par(an(n + 4)); b.par(an(n + 5));
        for (std::size_t i = 4; i <= n - 1; ++i) b.term(1, 1, i, pm(an(i)));
        b.term(1, 2, n - 2, pm(an(1), Rat(2))); b.term(1, 2, n - 1, pm(an(n)));
        b.term(1, 3, n - 1, pm(an(1)));
        for (std::size_t i = 5; i <= n - 2; ++i) b.term(1, n, i, pm(an(i - 1), Rat(-1)));
        b.term(1, n, n - 1, pm(an(n + 1)));
        b.term(2, 2, n - 2, pm(an(n + 2), Rat(2))); b.term(2, 2, n - 1, pm(an(n + 3)));
        b.term(2, 3, n - 1, pm(an(n + 2)));
        b.term(2, n, n - 1, pm(an(n + 4)));
        for (std::size_t i = 5; i <= n - 2; ++i) b.term(n, n, i, pm(an(i - 1)));
        b.term(n, n, n - 1, pm(an(n + 5)));
        return b.v;
    }
    throw std::invalid_argument("g2n1 n>=7: unknown variant " + key);
}

// ---- g3(n,1) ----

TPVariant g3n1_7(const FamilyId& id, const std::string& key) {
    Builder b(id, key);
    if (key == "TP1") {
        b.par(an(1)); b.pars(4, 11);
        b.term(1, 1, 4, pm(an(4))); b.term(1, 1, 5, pm(an(5)));
        b.term(1, 2, 5, pm(an(6), Rat(2))); b.term(1, 2, 6, pm(an(7)));
        b.term(1, 3, 6, pm(an(6)));
        b.term(1, 7, 5, pm(an(4), Rat(-1))); b.term(1, 7, 6, pm(an(8)));
        b.term(2, 2, 5, pm(an(1), Rat(2))); b.term(2, 2, 6, pm(an(9)));
        b.term(2, 3, 6, pm(an(1)));
        b.term(2, 7, 6, pm(an(10)));
        b.term(7, 7, 6, pm(an(11)));
        return b.v;
    }
    if (key == "TP2") {
        b.pars(4, 11);
        b.term(1, 1, 3, cst(2)); b.term(1, 1, 4, pm(an(4))); b.term(1, 1, 5, pm(an(5)));
        b.term(1, 2, 5, pm(an(6), Rat(2))); b.term(1, 2, 6, pm(an(7)));
        b.term(1, 3, 6, [](P p) { return p.at("a6") - Rat(1); });
        b.term(1, 7, 4, cst(-2)); b.term(1, 7, 5, pm(an(4), Rat(-1))); b.term(1, 7, 6, pm(an(8)));
        b.term(2, 2, 6, pm(an(9)));
        b.term(2, 7, 6, pm(an(10)));
        b.term(7, 7, 5, cst(2)); b.term(7, 7, 6, pm(an(11)));
        return b.v;
    }
    throw std::invalid_argument("g3n1 n=7: unknown variant " + key);
}

TPVariant g3n1_8(const FamilyId& id, const std::string& key) {
    if (key != "TP") throw std::invalid_argument("g3n1 n=8: unknown variant " + key);
    Builder b(id, key);
    b.pars(4, 7); b.pars(1, 4, "b"); b.pars(1, 3, "g");
    for (std::size_t t = 4; t <= 7; ++t) b.term(1, 1, t, pm(an(t)));
    b.term(1, 2, 6, pm(bn(1))); b.term(1, 2, 7, pm(bn(2)));
    b.term(1, 3, 7, [](P p) { return (p.at("b1") - p.at("a4")) / 2; });
    b.term(1, 8, 5, pm(an(4), Rat(-1))); b.term(1, 8, 6, pm(an(5), Rat(-1))); b.term(1, 8, 7, pm(gn(1)));
    b.term(2, 2, 6, pm(bn(3))); b.term(2, 2, 7, pm(bn(4)));
    b.term(2, 3, 7, pm(bn(3), Rat(1, 2)));
    b.term(2, 8, 7, pm(gn(2)));
    b.term(8, 8, 6, pm(an(4))); b.term(8, 8, 7, pm(gn(3)));
    return b.v;
}

TPVariant g3n1_9(const FamilyId& id, const std::string& key) {
    Builder b(id, key);
    if (key == "TP1") {
        b.pars(4, 8); b.pars(1, 4, "b"); b.pars(1, 3, "g");
        for (std::size_t t = 4; t <= 8; ++t) b.term(1, 1, t, pm(an(t)));
        b.term(1, 2, 7, pm(bn(1))); b.term(1, 2, 8, pm(bn(2)));
        b.term(1, 3, 8, [](P p) { return (p.at("b1") - p.at("a5")) / 2; });
        for (std::size_t t = 5; t <= 7; ++t) b.term(1, 9, t, pm(an(t - 1), Rat(-1)));
        b.term(1, 9, 8, pm(gn(1)));
        b.term(2, 2, 7, pm(bn(3))); b.term(2, 2, 8, pm(bn(4)));
        b.term(2, 3, 8, pm(bn(3), Rat(1, 2)));
        b.term(2, 9, 7, pm(an(4), Rat(-1))); b.term(2, 9, 8, pm(gn(2)));
        b.term(3, 9, 8, pm(an(4), Rat(1, 2)));
        for (std::size_t t = 6; t <= 7; ++t) b.term(9, 9, t, pm(an(t - 2)));
        b.term(9, 9, 8, pm(gn(3)));
        return b.v;
    }
    if (key == "TP2") {
        b.pars(5, 8); b.par(bn(1)); b.par(bn(2)); b.par(bn(4)); b.pars(1, 3, "g");
        b.term(1, 1, 3, cst(1));
        for (std::size_t t = 5; t <= 8; ++t) b.term(1, 1, t, pm(an(t)));
        b.term(1, 2, 5, cst(1)); b.term(1, 2, 7, pm(bn(1))); b.term(1, 2, 8, pm(bn(2)));
        b.term(1, 3, 8, [](P p) { return (p.at("b1") - p.at("a5")) / 2; });
        b.term(1, 9, 4, cst(-1));
        for (std::size_t t = 6; t <= 7; ++t) b.term(1, 9, t, pm(an(t - 1), Rat(-1)));
        b.term(1, 9, 8, pm(gn(1)));
        b.term(2, 2, 7, cst(1)); b.term(2, 2, 8, pm(bn(4)));
        b.term(2, 9, 6, cst(-1)); b.term(2, 9, 8, pm(gn(2)));
        b.term(9, 9, 5, cst(1)); b.term(9, 9, 7, pm(an(5))); b.term(9, 9, 8, pm(gn(3)));
        return b.v;
    }
    throw std::invalid_argument("g3n1 n=9: unknown variant " + key);
}

TPVariant g3n1_large(const FamilyId& id, const std::string& key) {
    const std::size_t n = id.n;
    Builder b(id, key);
    if (key == "TP1") {
        b.pars(4, n - 1); b.pars(1, 4, "b"); b.pars(1, 3, "g");
        for (std::size_t t = 4; t <= n - 1; ++t) b.term(1, 1, t, pm(an(t)));
        for (std::size_t t = 6; t + 3 <= n; ++t) b.term(1, 2, t, pm(an(t - 2)));
        b.term(1, 2, n - 2, pm(bn(1))); b.term(1, 2, n - 1, pm(bn(2)));
        b.term(1, 3, n - 1, [n](P p) { return (p.at("b1") - p.at(an(n - 4))) / 2; });
        for (std::size_t t = 5; t <= n - 2; ++t) b.term(1, n, t, pm(an(t - 1), Rat(-1)));
        b.term(1, n, n - 1, pm(gn(1)));
        for (std::size_t t = 8; t + 3 <= n; ++t) b.term(2, 2, t, pm(an(t - 4)));
        b.term(2, 2, n - 2, pm(bn(3))); b.term(2, 2, n - 1, pm(bn(4)));
        b.term(2, 3, n - 1, [n](P p) { return (p.at("b3") - p.at(an(n - 6))) / 2; });
        for (std::size_t t = 7; t <= n - 2; ++t) b.term(2, n, t, pm(an(t - 3), Rat(-1)));
        b.term(2, n, n - 1, pm(gn(2)));
        b.term(3, n, n - 1, pm(an(n - 5), Rat(1, 2)));
        for (std::size_t t = 6; t <= n - 2; ++t) b.term(n, n, t, pm(an(t - 2)));
        b.term(n, n, n - 1, pm(gn(3)));
        return b.v;
    }
    if (key == "TP2") {
        // declared alphas skip a3 (normalized to 1) and a_{n-5} (forced zero);
        // sum terms whose index is undeclared read as zero
        b.pars(4, n - 6); b.pars(n - 4, n - 1);
        b.par(bn(1)); b.par(bn(2)); b.par(bn(4)); b.pars(1, 3, "g");
        auto declared = [n](std::size_t i) { return (i >= 4 && i <= n - 6) || (i >= n - 4 && i <= n - 1); };
        auto opt = [&](std::size_t i, Rat scale = Rat(1)) -> CoeffFn {
            if (!declared(i)) return cst(0);
            return pm(an(i), scale);
        };
        b.term(1, 1, 3, cst(1));
        for (std::size_t t = 4; t + 6 <= n; ++t) b.term(1, 1, t, opt(t));
        for (std::size_t t = n - 4; t <= n - 1; ++t) b.term(1, 1, t, opt(t));
        b.term(1, 2, 5, cst(1));
        for (std::size_t t = 5; t + 4 <= n; ++t) b.term(1, 2, t, opt(t - 2));
        b.term(1, 2, n - 2, pm(bn(1))); b.term(1, 2, n - 1, pm(bn(2)));
        b.term(1, 3, n - 1, [n](P p) { return (p.at("b1") - p.at(an(n - 4))) / 2; });
        b.term(1, n, 4, cst(-1));
        for (std::size_t t = 5; t + 5 <= n; ++t) b.term(1, n, t, opt(t - 1, Rat(-1)));
        for (std::size_t t = n - 3; t <= n - 2; ++t) b.term(1, n, t, opt(t - 1, Rat(-1)));
        b.term(1, n, n - 1, pm(gn(1)));
        b.term(2, 2, 7, cst(1));
        for (std::size_t t = 8; t <= n - 2; ++t) b.term(2, 2, t, opt(t - 4));
        b.term(2, 2, n - 1, pm(bn(4)));
        b.term(2, n, 6, cst(-1));
        for (std::size_t t = 7; t + 3 <= n; ++t) b.term(2, n, t, opt(t - 3, Rat(-1)));
        b.term(2, n, n - 1, pm(gn(2)));
        b.term(n, n, 5, cst(1));
        for (std::size_t t = 6; t + 4 <= n; ++t) b.term(n, n, t, opt(t - 2));
        b.term(n, n, n - 2, pm(an(n - 4)));
        b.term(n, n, n - 1, pm(gn(3)));
        return b.v;
    }
    throw std::invalid_argument("g3n1 n>=10: unknown variant " + key);
}

// ---- fixed families ----

TPVariant g1_7(const FamilyId& id, const std::string& key) {
    Builder b(id, key);
    if (key == "TP1") {
        b.par(an(1)); b.par(an(2)); b.pars(4, 11);
        b.term(1, 1, 4, pm(an(4))); b.term(1, 1, 5, pm(an(5)));
        b.term(1, 1, 6, pm(an(6))); b.term(1, 1, 7, pm(an(7)));
        b.term(1, 2, 5, pm(an(1))); b.term(1, 2, 6, pm(an(2))); b.term(1, 2, 7, pm(an(8)));
        b.term(1, 3, 6, [](P p) { return (p.at("a1") - p.at("a4")) / 2; });
        b.term(1, 3, 7, pm(an(5), Rat(-1, 2)));
        b.term(1, 4, 7, pm(an(4), Rat(1, 2)));
        b.term(2, 2, 5, pm(an(9))); b.term(2, 2, 6, pm(an(10))); b.term(2, 2, 7, pm(an(11)));
        b.term(2, 3, 6, pm(an(9), Rat(1, 2))); b.term(2, 3, 7, pm(an(1), Rat(-1, 2)));
        return b.v;
    }
    if (key == "TP2") {
        b.par(an(1)); b.par(an(2)); b.pars(4, 8); b.par(an(10)); b.par(an(11));
        b.term(1, 1, 3, cst(6));
        b.term(1, 1, 4, pm(an(4))); b.term(1, 1, 5, pm(an(5)));
        b.term(1, 1, 6, pm(an(6))); b.term(1, 1, 7, pm(an(7)));
        b.term(1, 2, 4, cst(-2));
        b.term(1, 2, 5, pm(an(1))); b.term(1, 2, 6, pm(an(2))); b.term(1, 2, 7, pm(an(8)));
        b.term(1, 3, 5, cst(-4));
        b.term(1, 3, 6, [](P p) { return (p.at("a1") - p.at("a4")) / 2; });
        b.term(1, 3, 7, pm(an(5), Rat(-1, 2)));
        b.term(1, 4, 6, cst(-2)); b.term(1, 4, 7, pm(an(4), Rat(1, 2)));
        b.term(1, 5, 7, cst(-3));
        b.term(2, 2, 5, cst(-2, 3)); b.term(2, 2, 6, pm(an(10))); b.term(2, 2, 7, pm(an(11)));
        b.term(2, 3, 6, cst(2, 3)); b.term(2, 3, 7, pm(an(1), Rat(-1, 2)));
        b.term(2, 4, 7, cst(-1));
        b.term(3, 3, 7, cst(2));
        return b.v;
    }
    throw std::invalid_argument("g1_7: unknown variant " + key);
}

TPVariant g2_9(const FamilyId& id, const std::string& key) {
    if (key != "TP") throw std::invalid_argument("g2_9: unknown variant " + key);
    Builder b(id, key);
    b.pars(1, 11);
    b.term(1, 1, 5, pm(an(1))); b.term(1, 1, 6, pm(an(2))); b.term(1, 1, 7, pm(an(3)));
    b.term(1, 1, 8, pm(an(4))); b.term(1, 1, 9, pm(an(5)));
    b.term(1, 2, 6, pm(an(1), Rat(1, 3))); b.term(1, 2, 7, pm(an(6)));
    b.term(1, 2, 8, pm(an(7))); b.term(1, 2, 9, pm(an(8)));
    b.term(1, 3, 7, pm(an(1), Rat(-4, 3)));
    b.term(1, 3, 8, [](P p) { return (p.at("a6") - Rat(5) * p.at("a2")) / 2; });
    b.term(1, 3, 9, pm(an(3), Rat(-1, 2)));
    b.term(1, 4, 8, pm(an(1), Rat(1, 3))); b.term(1, 4, 9, pm(an(2), Rat(1, 2)));
    b.term(1, 5, 9, pm(an(1), Rat(-1, 2)));
    b.term(2, 2, 7, pm(an(9))); b.term(2, 2, 8, pm(an(10))); b.term(2, 2, 9, pm(an(11)));
    b.term(2, 3, 8, [](P p) { return (Rat(3) * p.at("a9") - Rat(5) * p.at("a1")) / 6; });
    b.term(2, 3, 9, pm(an(6), Rat(-1, 2)));
    b.term(2, 4, 9, pm(an(1), Rat(1, 6)));
    b.term(3, 3, 9, pm(an(1), Rat(2, 3)));
    return b.v;
}

TPVariant g3_11(const FamilyId& id, const std::string& key) {
    if (key != "TP") throw std::invalid_argument("g3_11: unknown variant " + key);
    Builder b(id, key);
    b.pars(1, 12);
    b.term(1, 1, 6, pm(an(6))); b.term(1, 1, 7, pm(an(7))); b.term(1, 1, 8, pm(an(8)));
    b.term(1, 1, 9, pm(an(9))); b.term(1, 1, 10, pm(an(10))); b.term(1, 1, 11, pm(an(11)));
    b.term(1, 2, 7, pm(an(6), Rat(-1))); b.term(1, 2, 8, pm(an(7), Rat(-1)));
    b.term(1, 2, 9, pm(an(1))); b.term(1, 2, 10, pm(an(2))); b.term(1, 2, 11, pm(an(3)));
    b.term(1, 3, 10, pm(an(1), Rat(1, 2))); b.term(1, 3, 11, pm(an(9), Rat(-1, 2)));
    b.term(1, 4, 10, pm(an(7), Rat(1, 2))); b.term(1, 4, 11, pm(an(8), Rat(1, 2)));
    b.term(1, 5, 10, pm(an(6), Rat(-1, 2))); b.term(1, 5, 11, pm(an(7), Rat(-1, 2)));
    b.term(1, 6, 11, pm(an(6), Rat(1, 2)));
    b.term(2, 2, 8, pm(an(6))); b.term(2, 2, 9, pm(an(4)));
    b.term(2, 2, 10, pm(an(5))); b.term(2, 2, 11, pm(an(12)));
    b.term(2, 3, 10, pm(an(4), Rat(1, 2))); b.term(2, 3, 11, pm(an(1), Rat(-1, 2)));
    b.term(2, 4, 10, pm(an(6), Rat(-1, 2))); b.term(2, 4, 11, pm(an(7), Rat(-1, 2)));
    b.term(2, 5, 11, pm(an(6), Rat(1, 2)));
    return b.v;
}

}  // namespace

std::vector<std::string> list_variants(const FamilyId& id) {
    family_id(id.family, id.n);  // validate
    auto tp = [](std::size_t count) {
        std::vector<std::string> keys;
        for (std::size_t i = 1; i <= count; ++i) keys.push_back("TP" + std::to_string(i));
        return keys;
    };
    switch (id.family) {
        case Family::G1N1: return tp(3);
        case Family::G2N1:
            if (id.n == 5) return tp(10);
            return tp(3);
        case Family::G3N1:
            if (id.n == 8) return {"TP"};
            return tp(2);
        case Family::G1_7: return tp(2);
        case Family::G2_9: return {"TP"};
        case Family::G3_11: return {"TP"};
    }
    throw std::logic_error("list_variants: unreachable");
}

TPVariant make_variant(const FamilyId& id, const std::string& key) {
    family_id(id.family, id.n);  // validate
    switch (id.family) {
        case Family::G1N1: return id.n == 5 ? g1n1_5(id, key) : g1n1_large(id, key);
        case Family::G2N1:
            if (id.n == 5) return g2n1_5(id, key);
            if (id.n == 6) return g2n1_6(id, key);
            return g2n1_large(id, key);
        case Family::G3N1:
            if (id.n == 7) return g3n1_7(id, key);
            if (id.n == 8) return g3n1_8(id, key);
            if (id.n == 9) return g3n1_9(id, key);
            return g3n1_large(id, key);
        case Family::G1_7: return g1_7(id, key);
        case Family::G2_9: return g2_9(id, key);
        case Family::G3_11: return g3_11(id, key);
    }
    throw std::logic_error("make_variant: unreachable");
}

}  // namespace qflie
