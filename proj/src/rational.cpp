#include "qflie/rational.hpp"

#include <ostream>

namespace qflie {

namespace {

bool all_digits(const std::string& s, std::size_t from, std::size_t to) {
    if (from >= to) return false;
    for (std::size_t i = from; i < to; ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}

}  // namespace

Rat Rat::parse(const std::string& s) {
    const auto bad = [&] {
        return std::invalid_argument("Rat: malformed rational \"" + s + "\" (expected p or p/q, q > 0)");
    };
    auto slash = s.find('/');
    std::string num = slash == std::string::npos ? s : s.substr(0, slash);
    std::size_t start = (!num.empty() && num[0] == '-') ? 1 : 0;
    if (!all_digits(num, start, num.size())) throw bad();
    Rat r;
    if (slash == std::string::npos) {
        r.v_ = mpq_class(mpz_class(num), 1);
        return r;
    }
    std::string den = s.substr(slash + 1);
    if (!all_digits(den, 0, den.size())) throw bad();
    mpz_class d(den);
    if (d == 0) throw bad();
    r.v_ = mpq_class(mpz_class(num), d);
    r.v_.canonicalize();
    return r;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.v_; }

}  // namespace qflie
