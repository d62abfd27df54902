#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace effcones {

// Exact arithmetic everywhere: no operation in this library is allowed to
// round.  GMP supplies the integer/rational kernel; everything built on top
// of it is ours.
using Int = mpz_class;
using Rat = mpq_class;

using ZVec = std::vector<Int>;
using QVec = std::vector<Rat>;

struct dimension_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// C(p,q) with the convention C(p,q) = 0 whenever p < q, q < 0 or p < 0.
// The degenerate cases matter: the product formula relies on them.
Int binomial(long p, long q);

Rat make_rat(const Int& num, const Int& den);

// "num" when den == 1, "num/den" otherwise.  Never a float.
std::string rat_to_string(const Rat& q);
Rat rat_from_string(const std::string& s);

std::string zvec_to_string(const ZVec& v);
std::string qvec_to_string(const QVec& v);

int lex_compare(const ZVec& a, const ZVec& b);

Rat dot(const QVec& a, const QVec& b);
Int dot(const ZVec& a, const ZVec& b);
Rat dot(const ZVec& a, const QVec& b);

inline QVec to_qvec(const ZVec& v) {
    QVec out;
    out.reserve(v.size());
    for (const Int& x : v) out.emplace_back(x);
    return out;
}

bool is_zero(const QVec& v);
bool is_zero(const ZVec& v);

}  // namespace effcones
