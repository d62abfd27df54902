#include "effcones/chow.hpp"

#include <sstream>

namespace effcones {

RingPresentation::RingPresentation(int n_, int d_) : n(n_), d(d_) {
    if (n < 1) throw std::invalid_argument("RingPresentation: n must be >= 1");
    if (d < 1) throw std::invalid_argument("RingPresentation: d must be >= 1");
    Int rb = binomial(static_cast<long>(n) + d, d) - 1;
    if (!rb.fits_slong_p() || rb.get_si() > (1L << 40))
        throw std::invalid_argument("RingPresentation: C(n+d,d) out of supported range");
    r = rb.get_si();
    dim_total = r + n - 1;
}

Rat NumClass::coeff(long a) const {
    auto it = coeffs.find(a);
    return it == coeffs.end() ? Rat(0) : it->second;
}

RawPoly NumClass::raw() const {
    RawPoly p;
    for (const auto& [a, c] : coeffs) p[{a, codim - a}] = c;
    return p;
}

NumClass& NumClass::operator*=(const Rat& c) {
    if (sgn(c) == 0) {
        coeffs.clear();
        return *this;
    }
    for (auto& [a, v] : coeffs) v *= c;
    return *this;
}

NumClass NumClass::operator+(const NumClass& o) const {
    if (pres != o.pres) throw std::invalid_argument("NumClass+: presentation mismatch");
    if (codim != o.codim && !is_zero() && !o.is_zero())
        throw std::invalid_argument("NumClass+: codimension mismatch");
    NumClass out = *this;
    if (out.is_zero()) out.codim = o.codim;
    for (const auto& [a, c] : o.coeffs) {
        Rat v = out.coeff(a) + c;
        if (sgn(v) == 0)
            out.coeffs.erase(a);
        else
            out.coeffs[a] = v;
    }
    return out;
}

NumClass NumClass::operator-(const NumClass& o) const {
    NumClass neg = o;
    neg *= Rat(-1);
    return *this + neg;
}

std::string NumClass::to_string() const {
    if (coeffs.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [a, c] : coeffs) {
        if (!first) os << " + ";
        first = false;
        os << rat_to_string(c);
        if (a > 0) os << "*h^" << a;
        if (codim - a > 0) os << "*xi^" << (codim - a);
    }
    return os.str();
}

NumClass zero_class(const RingPresentation& pres, long codim) {
    NumClass z;
    z.pres = pres;
    z.codim = codim;
    return z;
}

NumClass reduce(const RawPoly& p, const RingPresentation& pres) {
    long codim = -1;
    for (const auto& [mono, c] : p) {
        if (sgn(c) == 0) continue;
        auto [a, b] = mono;
        if (a < 0 || b < 0) throw std::invalid_argument("reduce: negative exponent");
        if (codim == -1)
            codim = a + b;
        else if (a + b != codim)
            throw non_homogeneous_error("reduce: input is not homogeneous");
    }
    NumClass out = zero_class(pres, codim == -1 ? 0 : codim);
    if (codim == -1) return out;

    // Worklist ordered by descending xi-exponent so each rewrite strictly
    // decreases the maximal xi power.
    std::map<long, std::map<long, Rat>> work;  // b -> a -> coeff
    for (const auto& [mono, c] : p) {
        if (sgn(c) == 0) continue;
        auto [a, b] = mono;
        if (a > pres.n) continue;  // h^{n+1} = 0
        auto& cell = work[b][a];
        cell += c;
        if (sgn(cell) == 0) work[b].erase(a);
    }

    while (!work.empty()) {
        auto top = std::prev(work.end());
        long b = top->first;
        auto terms = std::move(top->second);
        work.erase(top);
        if (terms.empty()) continue;
        if (b <= pres.r - 1) {
            for (const auto& [a, c] : terms) {
                if (sgn(c) == 0) continue;
                Rat v = out.coeff(a) + c;
                if (sgn(v) == 0)
                    out.coeffs.erase(a);
                else
                    out.coeffs[a] = v;
            }
            continue;
        }
        // xi^b = xi^{b-r} * ( sum_{s=1..min(n,r)} (-1)^{s+1} d^s h^s xi^{r-s} )
        long smax = std::min<long>(pres.n, pres.r);
        for (const auto& [a, c] : terms) {
            if (sgn(c) == 0) continue;
            Int ds = 1;
            for (long s = 1; s <= smax; ++s) {
                ds *= pres.d;
                long na = a + s;
                if (na > pres.n) break;
                Rat term = c * Rat(ds);
                if (s % 2 == 0) term = -term;
                auto& cell = work[b - s][na];
                cell += term;
                if (sgn(cell) == 0) work[b - s].erase(na);
            }
        }
    }
    return out;
}

NumClass monomial_class(const RingPresentation& pres, long a, long b, const Rat& c) {
    RawPoly p;
    p[{a, b}] = c;
    return reduce(p, pres);
}

NumClass multiply(const NumClass& a, const NumClass& b) {
    if (a.pres != b.pres) throw std::invalid_argument("multiply: presentation mismatch");
    long codim = a.codim + b.codim;
    if (codim > a.pres.dim_total) return zero_class(a.pres, codim);
    RawPoly prod;
    for (const auto& [ea, ca] : a.coeffs) {
        for (const auto& [eb, cb] : b.coeffs) {
            long ha = ea + eb;
            if (ha > a.pres.n) continue;
            auto& cell = prod[{ha, codim - ha}];
            cell += ca * cb;
        }
    }
    NumClass out = reduce(prod, a.pres);
    out.codim = codim;
    return out;
}

Rat degree(const NumClass& a) {
    if (a.codim != a.pres.dim_total)
        throw std::invalid_argument("degree: class is not of top codimension");
    return a.coeff(a.pres.n);
}

Rat degree_oracle_monomial(const RingPresentation& pres, long a, long b) {
    if (a + b != pres.dim_total)
        throw std::invalid_argument("degree_oracle_monomial: not top degree");
    // (d*h + xi) h^a xi^b = d h^{a+1} xi^b + h^a xi^{b+1} on P^n x P^r.
    Rat out = 0;
    if (a + 1 == pres.n && b == pres.r) out += pres.d;
    if (a == pres.n && b + 1 == pres.r) out += 1;
    return out;
}

}  // namespace effcones
