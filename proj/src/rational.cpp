#include "effcones/rational.hpp"

#include <sstream>

namespace effcones {

Int binomial(long p, long q) {
    if (p < 0 || q < 0 || p < q) return 0;
    Int out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(q));
    return out;
}

Rat make_rat(const Int& num, const Int& den) {
    if (sgn(den) == 0) throw std::invalid_argument("make_rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

std::string rat_to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        return make_rat(num, den);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("rat_from_string: cannot parse '" + s + "'");
    }
}

std::string zvec_to_string(const ZVec& v) {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i].get_str();
    }
    os << ')';
    return os.str();
}

std::string qvec_to_string(const QVec& v) {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << rat_to_string(v[i]);
    }
    os << ')';
    return os.str();
}

int lex_compare(const ZVec& a, const ZVec& b) {
    size_t n = std::min(a.size(), b.size());
    for (size_t i = 0; i < n; ++i) {
        int c = cmp(a[i], b[i]);
        if (c != 0) return c;
    }
    if (a.size() < b.size()) return -1;
    if (a.size() > b.size()) return 1;
    return 0;
}

Rat dot(const QVec& a, const QVec& b) {
    if (a.size() != b.size()) throw dimension_error("dot: length mismatch");
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Int dot(const ZVec& a, const ZVec& b) {
    if (a.size() != b.size()) throw dimension_error("dot: length mismatch");
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rat dot(const ZVec& a, const QVec& b) {
    if (a.size() != b.size()) throw dimension_error("dot: length mismatch");
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
    return s;
}

bool is_zero(const QVec& v) {
    for (const Rat& x : v)
        if (sgn(x) != 0) return false;
    return true;
}

bool is_zero(const ZVec& v) {
    for (const Int& x : v)
        if (sgn(x) != 0) return false;
    return true;
}

}  // namespace effcones
