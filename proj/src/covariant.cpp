#include "effcones/covariant.hpp"

namespace effcones {

Rat CovClass::d(long j) const {
    if (j < 0 || j > pres.n) return 0;
    return coords[pres.n - j];
}

CovClass make_cov(const RingPresentation& pres, long i, QVec coords) {
    if (static_cast<long>(coords.size()) != pres.n + 1)
        throw dimension_error("make_cov: coords must have length n+1");
    if (i < 0 || i > pres.dim_total)
        throw std::invalid_argument("make_cov: cycle dimension out of range");
    for (long j = i + 1; j <= pres.n; ++j)
        if (sgn(coords[pres.n - j]) != 0)
            throw inconsistent_coords_error("make_cov: d_j must vanish for j > i");
    CovClass c;
    c.pres = pres;
    c.i = i;
    c.coords = std::move(coords);
    return c;
}

CovClass e_basis(const RingPresentation& pres, long i, long j) {
    if (j < 0 || j > pres.n) throw std::invalid_argument("e_basis: j out of range");
    QVec coords(pres.n + 1, Rat(0));
    coords[pres.n - j] = 1;
    return make_cov(pres, i, std::move(coords));
}

CovClass to_covariant(const NumClass& a) {
    const RingPresentation& pres = a.pres;
    if (a.codim > pres.dim_total)
        throw std::invalid_argument("to_covariant: codimension exceeds dim(X)");
    long i = pres.dim_total - a.codim;
    QVec coords(pres.n + 1, Rat(0));
    for (long j = 0; j <= std::min<long>(i, pres.n); ++j) {
        NumClass m = monomial_class(pres, j, i - j);
        coords[pres.n - j] = degree(multiply(a, m));
    }
    CovClass c;
    c.pres = pres;
    c.i = i;
    c.coords = std::move(coords);
    return c;
}

NumClass from_covariant(const CovClass& c) {
    const RingPresentation& pres = c.pres;
    long k = pres.dim_total - c.i;
    long amin = std::max<long>(0, k - (pres.r - 1));
    long amax = std::min<long>(pres.n, k);
    NumClass out = zero_class(pres, k);
    Rat prev = 0;  // c_{a-1}
    for (long a = 0; a <= pres.n; ++a) {
        Rat ca = c.d(pres.n - a) - Rat(pres.d) * prev;
        if (a < amin || a > amax) {
            if (sgn(ca) != 0)
                throw inconsistent_coords_error(
                    "from_covariant: coordinates inconsistent with dimension support");
        } else if (sgn(ca) != 0) {
            out.coeffs[a] = ca;
        }
        prev = ca;
    }
    return out;
}

Rat pair_classes(const NumClass& functional, const CovClass& cycle) {
    if (functional.pres != cycle.pres)
        throw std::invalid_argument("pair_classes: presentation mismatch");
    if (functional.codim != cycle.i)
        throw std::invalid_argument("pair_classes: degree mismatch");
    Rat s = 0;
    for (const auto& [a, ca] : functional.coeffs) {
        if (a > functional.pres.n) continue;
        s += ca * cycle.d(a);
    }
    return s;
}

QVec pairing_vector(const NumClass& functional) {
    const RingPresentation& pres = functional.pres;
    QVec v(pres.n + 1, Rat(0));
    for (const auto& [a, ca] : functional.coeffs) {
        if (a < 0 || a > pres.n) continue;
        v[pres.n - a] = ca;
    }
    return v;
}

std::vector<ZVec> covariant_annihilators(const RingPresentation& pres, long i) {
    if (i < 0 || i > pres.dim_total)
        throw std::invalid_argument("covariant_annihilators: dimension out of range");
    long k = pres.dim_total - i;
    long amin = std::max<long>(0, k - (pres.r - 1));
    long amax = std::min<long>(pres.n, k);

    // Image vectors of the basis monomials of codimension k.
    std::vector<QVec> image;
    for (long a = amin; a <= amax; ++a) {
        NumClass m = monomial_class(pres, a, k - a);
        image.push_back(to_covariant(m).coords);
    }

    // Kernel of the (image x coords) pairing by Gaussian elimination on the
    // transpose: solve image * w = 0 for w in Q^{n+1}.
    long dim = pres.n + 1;
    std::vector<QVec> rows;  // each row: image vector, length dim
    rows.reserve(image.size());
    for (auto& v : image) rows.push_back(std::move(v));

    std::vector<long> pivot_col;
    size_t rank = 0;
    for (long col = 0; col < dim && rank < rows.size(); ++col) {
        size_t piv = rank;
        while (piv < rows.size() && sgn(rows[piv][col]) == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[rank]);
        Rat p = rows[rank][col];
        for (Rat& x : rows[rank]) x /= p;
        for (size_t r2 = 0; r2 < rows.size(); ++r2) {
            if (r2 == rank || sgn(rows[r2][col]) == 0) continue;
            Rat f = rows[r2][col];
            for (long j = 0; j < dim; ++j) rows[r2][j] -= f * rows[rank][j];
        }
        pivot_col.push_back(col);
        ++rank;
    }

    std::vector<ZVec> annih;
    std::vector<bool> is_pivot(dim, false);
    for (long c : pivot_col) is_pivot[c] = true;
    for (long freec = 0; freec < dim; ++freec) {
        if (is_pivot[freec]) continue;
        QVec w(dim, Rat(0));
        w[freec] = 1;
        for (size_t rr = 0; rr < rank; ++rr) w[pivot_col[rr]] = -rows[rr][freec];
        annih.push_back(canonical_ray(w));
    }
    return annih;
}

}  // namespace effcones
