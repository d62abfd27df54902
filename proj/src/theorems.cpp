#include "effcones/theorems.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace effcones {

std::string to_string(BoundStatus s) {
    switch (s) {
        case BoundStatus::Equal: return "EQUAL";
        case BoundStatus::StrictBounds: return "STRICT_BOUNDS";
        case BoundStatus::Unknown: return "UNKNOWN";
    }
    return "UNKNOWN";
}

namespace {

std::string case_name(int n, int d, long i) {
    std::ostringstream os;
    os << "(" << n << "," << d << "," << i << ")";
    return os.str();
}

ZVec zvec(std::initializer_list<long> xs) {
    ZVec v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

// e_j as a coordinate vector of length n+1 (high-to-low).
ZVec e_vec(int n, long j, long scale = 1) {
    ZVec v(n + 1, Int(0));
    v[n - j] = scale;
    return v;
}

void push_label(std::vector<std::string>& prov, const std::string& label) {
    if (std::find(prov.begin(), prov.end(), label) == prov.end()) prov.push_back(label);
}

}  // namespace

// ---------------------------------------------------------------------------
// Certificates
// ---------------------------------------------------------------------------

std::vector<Certificate> Verifier::nef_certificates(int n, int d, long i) const {
    RingPresentation pres(n, d);
    if (i < 0 || i > pres.dim_total)
        throw std::invalid_argument("nef_certificates: i out of range");
    std::vector<Certificate> out;

    auto add = [&](std::string label, RawPoly raw, CertKind kind, int off_e) {
        NumClass f = reduce(raw, pres);
        if (f.is_zero()) return;
        f.codim = i;
        out.push_back({std::move(label), std::move(f), kind, off_e});
    };

    // Products of the nef divisors h and xi.
    for (long a = 0; a <= std::min<long>(n, i); ++a) {
        RawPoly p;
        p[{a, i - a}] = 1;
        std::ostringstream lab;
        lab << "nef monomial h^" << a << " xi^" << (i - a);
        add(lab.str(), std::move(p), CertKind::Nef, 0);
    }

    if (d >= 2 && i >= n) {
        // Marked-line incidence cycle, basepoint free for d >= 2.
        RawPoly p;
        p[{n - 1, 1 + (i - n)}] = 1;
        p[{n, i - n}] = -1;
        add("nef eta = h^{n-1} xi - h^n", std::move(p), CertKind::Nef, 0);
    }

    if (d >= 2 && i >= 2 * static_cast<long>(n)) {
        // Rational-normal-curve incidence cycle.
        RawPoly p;
        long e = i - 2 * static_cast<long>(n);
        p[{n - 1, n + 1 + e}] = n;
        p[{n, n + e}] = -(n + 1);
        add("nef eta2 = n h^{n-1} xi^{n+1} - (n+1) h^n xi^n", std::move(p), CertKind::Nef, 0);
    }

    if (d == 2 && n >= 2 && i == 2 * static_cast<long>(n)) {
        // Line-in-plane incidence cycle; positive off the image of
        // X_{n,1} x Y_{n,1}.
        RawPoly p;
        p[{n - 2, n + 2}] = 1;
        p[{n - 1, n + 1}] = -1;
        p[{n, n}] = 1;
        add("off-locus eta3 = (h^{n-2} xi^3 - h^{n-1} xi^2 + h^n xi) xi^{n-1}", std::move(p),
            CertKind::NefOffLocus, 1);
    }

    if (n == 2) {
        // eta_{e,c} = e h xi^{c-1} - (c-1) h^2 xi^{c-2}: basepoint free for
        // c < C(e+2,2), positive off the image of X_{2,e} x Y_{2,d-e} at
        // c = C(e+2,2).
        for (int e = 1; e < d; ++e) {
            long Me = binomial(e + 2, 2).get_si();
            for (long c = 2; c <= std::min<long>(i, Me); ++c) {
                RawPoly p;
                p[{1, i - 1}] = e;
                p[{2, i - 2}] = 1 - c;
                std::ostringstream lab;
                lab << (c == Me ? "off-locus" : "nef") << " eta[" << e << "," << c << "] xi^"
                    << (i - c);
                add(lab.str(), std::move(p), c == Me ? CertKind::NefOffLocus : CertKind::Nef,
                    c == Me ? e : 0);
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Effective classes other than pushforward images
// ---------------------------------------------------------------------------

std::vector<Verifier::EffectiveClass> Verifier::effective_catalog(int n, int d, long i) const {
    RingPresentation pres(n, d);
    if (i < 0 || i > pres.dim_total)
        throw std::invalid_argument("effective_catalog: i out of range");
    long c = pres.dim_total - i;
    std::vector<EffectiveClass> out;

    if (i == pres.dim_total)
        out.push_back({"eff fundamental class", to_covariant(monomial_class(pres, 0, 0))});

    if (c >= n) out.push_back({"eff point class e_0 = h^n xi^{c-n}", e_basis(pres, i, 0)});

    if (n == 2 && i >= 1 && c >= d + 1)
        out.push_back({"eff marked-line class e_1 (codim >= d+1)", e_basis(pres, i, 1)});

    // Cycles marked on a fixed j-plane contained in the hypersurface; their
    // supporting dimension is j + r - C(j+d, d).
    if (i >= n) {
        for (long j = 0; j <= static_cast<long>(n) - 2; ++j) {
            Int dimz = j + pres.r - binomial(j + d, d);
            if (dimz >= i) {
                std::ostringstream lab;
                lab << "eff plane class e_" << j;
                out.push_back({lab.str(), e_basis(pres, i, j)});
            }
        }
    }

    if (n == 2) {
        // eta_{e,c} classes are themselves effective for c <= C(e+2,2).
        for (int e = 1; e < d; ++e) {
            long Me = binomial(e + 2, 2).get_si();
            if (c < 1 || c > Me) continue;
            RawPoly p;
            p[{1, c - 1}] = e;
            if (c >= 2) p[{2, c - 2}] = 1 - c;
            NumClass f = reduce(p, pres);
            std::ostringstream lab;
            lab << "eff incidence cycle eta[" << e << "," << c << "]";
            out.push_back({lab.str(), to_covariant(f)});
        }
    }

    if (d == 2 && n >= 3 && i == 2 * static_cast<long>(n)) {
        // Split-quadric cycle spanning e_{n-1} + e_{n-2}.
        QVec v(n + 1, Rat(0));
        v[1] = 1;
        v[2] = 1;
        out.push_back({"eff split-quadric class e_{n-1}+e_{n-2}", make_cov(pres, i, std::move(v))});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Bound assembly
// ---------------------------------------------------------------------------

ProductSource Verifier::source_cones(int n, int d1, int d2, long i, bool upper_side) {
    ProductSource src;
    src.n = n;
    RingPresentation p1(n, d1);
    RingPresentation py(n, d2);
    src.dim_x1 = p1.dim_total;
    src.M = py.r;
    long jlo = std::max<long>(0, i - src.M);
    long jhi = std::min<long>(i, src.dim_x1);
    for (long j = jlo; j <= jhi; ++j) {
        const BoundPair& bp = verify(n, d1, j);
        src.cones.emplace(j, upper_side ? bp.upper : bp.lower);
    }
    return src;
}

ConeV Verifier::lower_bound(int n, int d, long i, std::vector<std::string>& prov) {
    std::vector<QVec> rays;

    for (int d1 = 1; d1 < d; ++d1) {
        int d2 = d - d1;
        ProductSource src = source_cones(n, d1, d2, i, /*upper_side=*/false);
        ConeV pushed = product_cone_pushforward(src, i);
        if (pushed.trivial()) continue;
        std::ostringstream lab;
        lab << "push mu_* Eff(X_{" << n << "," << d1 << "} x Y_{" << n << "," << d2 << "})";
        push_label(prov, lab.str());
        for (const ZVec& r : pushed.rays) rays.push_back(to_qvec(r));
    }

    for (const EffectiveClass& ec : effective_catalog(n, d, i)) {
        if (is_zero(ec.cls.coords)) continue;
        push_label(prov, ec.label);
        rays.push_back(ec.cls.coords);
    }

    return minimal_form(ConeV::from_rays(n + 1, rays));
}

ConeV Verifier::upper_bound(int n, int d, long i, std::vector<std::string>& prov) {
    RingPresentation pres(n, d);
    std::vector<Certificate> certs = nef_certificates(n, d, i);

    std::vector<QVec> vecs;
    std::set<int> off_degrees;
    for (const Certificate& cert : certs) {
        QVec v = pairing_vector(cert.functional);
        if (!is_zero(v)) {
            vecs.push_back(std::move(v));
            push_label(prov, cert.label);
        }
        if (cert.kind == CertKind::NefOffLocus) off_degrees.insert(cert.off_degree);
    }
    for (const ZVec& w : covariant_annihilators(pres, i)) {
        QVec plus = to_qvec(w);
        QVec minus = plus;
        for (Rat& x : minus) x = -x;
        vecs.push_back(std::move(plus));
        vecs.push_back(std::move(minus));
    }

    ConeV upper = dual_cone(ConeV::from_rays(n + 1, vecs));

    for (int e : off_degrees) {
        ProductSource src = source_cones(n, e, d - e, i, /*upper_side=*/true);
        ConeV term = product_cone_pushforward(src, i);
        upper = minkowski_sum(upper, term);
        std::ostringstream lab;
        lab << "locus term mu_* Eff(X_{" << n << "," << e << "} x Y_{" << n << "," << (d - e)
            << "})";
        push_label(prov, lab.str());
    }

    return minimal_form(upper);
}

const BoundPair& Verifier::verify(int n, int d, long i) {
    auto key = std::make_tuple(n, d, i);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;

    if (n < 2) throw std::invalid_argument("verify: n must be >= 2");
    if (d < 1) throw std::invalid_argument("verify: d must be >= 1");
    RingPresentation pres(n, d);
    if (i < 0 || i > pres.dim_total)
        throw std::invalid_argument("verify: i out of range for " + case_name(n, d, i));

    BoundPair bp;
    if (d == 1) {
        // Rational homogeneous case: nef and effective cones coincide and
        // are known in closed form.
        bp.lower = hyperplane_cone(n, i);
        bp.upper = bp.lower;
        bp.status = BoundStatus::Equal;
        bp.provenance = {"closed-form cones of the universal hyperplane"};
    } else {
        bp.lower = lower_bound(n, d, i, bp.provenance);
        bp.upper = upper_bound(n, d, i, bp.provenance);
        for (const ZVec& g : bp.lower.rays) {
            if (!member(bp.upper, g))
                throw soundness_error("verify" + case_name(n, d, i) +
                                      ": lower bound ray escapes the upper bound: " +
                                      zvec_to_string(g));
        }
        if (cone_equal(bp.lower, bp.upper)) {
            bp.status = BoundStatus::Equal;
        } else if (n == 2 && d == 3 && (i == 7 || i == 8)) {
            bp.status = BoundStatus::StrictBounds;
        } else {
            bp.status = BoundStatus::Unknown;
        }
    }
    auto [pos, inserted] = cache_.emplace(std::move(key), std::move(bp));
    return pos->second;
}

ConeV Verifier::lower_bound_eff(int n, int d, long i) { return verify(n, d, i).lower; }
ConeV Verifier::upper_bound_eff(int n, int d, long i) { return verify(n, d, i).upper; }

// ---------------------------------------------------------------------------
// Stable-cone arithmetic
// ---------------------------------------------------------------------------

StableBounds stable_delta_bounds(long i) {
    if (i < 2) throw std::invalid_argument("stable_delta_bounds: i must be >= 2");
    StableBounds out;
    out.i = i;
    long m = 0;
    while (binomial(m + 3, 2) <= i) ++m;
    out.m = m;
    out.M = binomial(m + 2, 2).get_si();
    long d0 = 1;
    while (binomial(d0 - m + 2, 2) < m + 2) ++d0;
    out.d0 = d0;
    if (i == 2) {
        out.delta_max = 1;
    } else {
        Rat a = make_rat(2 * i - 2, m + 3);
        Rat b(m + 1);
        out.delta_max = std::min(a, b);
    }
    out.delta_min = std::max(make_rat(m + 3, 2), make_rat(i - 1, m + 1));
    return out;
}

Check650Report check_650(long i_max) {
    if (i_max < 8) throw std::invalid_argument("check_650: i_max must be >= 8");
    Check650Report rep;
    Rat prev_max_ratio, prev_min_ratio;
    bool have_prev = false;
    for (long i = 2; i <= i_max; ++i) {
        StableBounds sb = stable_delta_bounds(i);
        Rat denom(i - 1);
        Rat max_ratio = sb.delta_max / denom;
        Rat min_ratio = sb.delta_min / denom;
        if (have_prev) {
            if (max_ratio > prev_max_ratio) {
                rep.ok = false;
                rep.first_violation = i;
                rep.detail = "delta_max(i)/(i-1) increased at i=" + std::to_string(i);
                return rep;
            }
            if (min_ratio > prev_min_ratio) {
                rep.ok = false;
                rep.first_violation = i;
                rep.detail = "delta_min(i)/(i-1) increased at i=" + std::to_string(i);
                return rep;
            }
        }
        if (i >= 8 && sb.delta_max < sb.delta_min) {
            rep.ok = false;
            rep.first_violation = i;
            rep.detail = "delta_max < delta_min at i=" + std::to_string(i);
            return rep;
        }
        prev_max_ratio = max_ratio;
        prev_min_ratio = min_ratio;
        have_prev = true;
    }
    return rep;
}

bool class_010_effective(long c, int d) {
    if (c < 1 || d < 1) throw std::invalid_argument("class_010_effective: need c >= 1, d >= 1");
    return c >= d + 1;
}

ConeV stable_lowdim_cone(long i, int n) {
    if (n < 1) throw std::invalid_argument("stable_lowdim_cone: n must be >= 1");
    if (i < 0 || i >= n) throw std::invalid_argument("stable_lowdim_cone: need 0 <= i < n");
    std::vector<ZVec> rays;
    for (long j = 0; j <= i; ++j) rays.push_back(e_vec(n, j));
    return ConeV::from_rays(n + 1, rays);
}

// ---------------------------------------------------------------------------
// Tables
// ---------------------------------------------------------------------------

namespace tables {

ConeV conic_cone(long i) {
    switch (i) {
        case 0: return ConeV::from_rays(3, std::vector<ZVec>{zvec({0, 0, 1})});
        case 1: return ConeV::from_rays(3, std::vector<ZVec>{zvec({0, 1, 0}), zvec({0, 0, 1})});
        case 2:
        case 3:
            return ConeV::from_rays(
                3, std::vector<ZVec>{zvec({1, 1, 0}), zvec({0, 1, 0}), zvec({0, 0, 1})});
        case 4:
            return ConeV::from_rays(3, std::vector<ZVec>{zvec({2, 3, 0}), zvec({1, 3, 0}),
                                                         zvec({0, 1, 1}), zvec({0, 0, 1})});
        case 5: return ConeV::from_rays(3, std::vector<ZVec>{zvec({1, 2, 0}), zvec({0, 1, 2})});
        case 6: return ConeV::from_rays(3, std::vector<ZVec>{zvec({1, 2, 0})});
        default: throw std::invalid_argument("conic_cone: i out of range 0..6");
    }
}

ConeV quadric_cone(int n, long i) {
    if (n < 2) throw std::invalid_argument("quadric_cone: n must be >= 2");
    if (i < n || i > 2 * static_cast<long>(n))
        throw std::invalid_argument("quadric_cone: need n <= i <= 2n");
    std::vector<ZVec> rays;
    if (i < 2 * static_cast<long>(n)) {
        for (long j = 0; j < n; ++j) rays.push_back(e_vec(n, j));
        ZVec top = e_vec(n, n);
        top[1] = 1;  // e_n + e_{n-1}
        rays.push_back(std::move(top));
    } else {
        for (long j = 0; j <= static_cast<long>(n) - 2; ++j) rays.push_back(e_vec(n, j));
        ZVec a = e_vec(n, n, n);
        a[1] = n + 1;  // n e_n + (n+1) e_{n-1}
        rays.push_back(std::move(a));
        ZVec b = e_vec(n, n - 1);
        b[2] = 1;  // e_{n-1} + e_{n-2}
        rays.push_back(std::move(b));
        ZVec c = e_vec(n, n);
        c[1] = n + 1;  // e_n + (n+1) e_{n-1}
        rays.push_back(std::move(c));
    }
    return ConeV::from_rays(n + 1, rays);
}

const std::map<long, Rat>& delta_table() {
    static const std::map<long, Rat> table = {
        {2, Rat(1)},           {3, Rat(1)}, {4, make_rat(3, 2)}, {5, Rat(2)},
        {6, Rat(2)},           {7, make_rat(12, 5)},            {10, Rat(3)},
    };
    return table;
}

ConeV delta_cone(long i) {
    const auto& tab = delta_table();
    auto it = tab.find(i);
    if (it == tab.end()) throw std::invalid_argument("delta_cone: i not in the table");
    QVec top{Rat(1), it->second, Rat(0)};
    return ConeV::from_rays(
        3, std::vector<QVec>{top, {Rat(0), Rat(1), Rat(0)}, {Rat(0), Rat(0), Rat(1)}});
}

ConeV x23_lower(long i) {
    if (i == 7)
        return ConeV::from_rays(3, std::vector<ZVec>{zvec({5, 12, 0}), zvec({1, 6, 0}),
                                                     zvec({0, 1, 1}), zvec({0, 0, 1})});
    if (i == 8)
        return ConeV::from_rays(3, std::vector<ZVec>{zvec({2, 7, 0}), zvec({5, 14, 0}),
                                                     zvec({0, 1, 2}), zvec({0, 0, 1})});
    throw std::invalid_argument("x23_lower: only i = 7, 8");
}

ConeV x23_upper(long i) {
    if (i == 7)
        return ConeV::from_rays(
            3, std::vector<ZVec>{zvec({5, 12, 0}), zvec({0, 1, 0}), zvec({0, 0, 1})});
    if (i == 8)
        return ConeV::from_rays(
            3, std::vector<ZVec>{zvec({2, 5, 0}), zvec({0, 1, 0}), zvec({0, 0, 1})});
    throw std::invalid_argument("x23_upper: only i = 7, 8");
}

ConeV oneproducts_cone(int n, long M, long i) {
    if (n < 1 || M < n) throw std::invalid_argument("oneproducts_cone: need n >= 1, M >= n");
    if (i < 0 || i > M + 2 * static_cast<long>(n) - 1)
        throw std::invalid_argument("oneproducts_cone: i out of range");
    std::vector<ZVec> rays;
    if (i <= n - 1) {
        for (long j = 0; j <= i; ++j) rays.push_back(e_vec(n, j));
    } else if (i < 2 * static_cast<long>(n) - 1) {
        for (long j = 0; j < n; ++j) rays.push_back(e_vec(n, j));
        ZVec top = e_vec(n, n);
        top[1] = 1;
        rays.push_back(std::move(top));
    } else if (i <= M + n - 1) {
        for (long j = 0; j < n; ++j) rays.push_back(e_vec(n, j));
        ZVec top = e_vec(n, n, n);
        top[1] = i - n + 1;  // n e_n + (i-n+1) e_{n-1}
        rays.push_back(std::move(top));
    } else {
        for (long j = i - M - n + 1; j <= n; ++j) {
            ZVec a = e_vec(n, j, i - j - M + 1);
            a[n - j + 1] = i - j + 1;  // (i-j-M+1) e_j + (i-j+1) e_{j-1}
            rays.push_back(std::move(a));
            ZVec b = e_vec(n, j, n);
            b[n - j + 1] = i - j + 1;  // n e_j + (i-j+1) e_{j-1}
            rays.push_back(std::move(b));
        }
    }
    return ConeV::from_rays(n + 1, rays);
}

std::optional<ConeV> twoproducts_cone(long M, long i) {
    if (M < 2) throw std::invalid_argument("twoproducts_cone: need M >= 2");
    if (i < 0 || i > M + 6) throw std::invalid_argument("twoproducts_cone: i out of range");
    auto mk = [](std::vector<ZVec> rays) { return ConeV::from_rays(3, rays); };
    if (i == 0) return std::nullopt;
    switch (i) {
        case 1: return mk({zvec({0, 1, 0}), zvec({0, 0, 1})});
        case 2:
        case 3: return mk({zvec({1, 1, 0}), zvec({0, 1, 0}), zvec({0, 0, 1})});
        case 4: return mk({zvec({2, 3, 0}), zvec({0, 1, 0}), zvec({0, 0, 1})});
        case 5: return mk({zvec({1, 2, 0}), zvec({0, 1, 0}), zvec({0, 0, 1})});
        default: break;
    }
    if (i <= M + 3) return mk({zvec({5, 2 * (i - 1), 0}), zvec({0, 1, 0}), zvec({0, 0, 1})});
    if (i == M + 4)
        return mk({zvec({5, 2 * M + 6, 0}), zvec({1, M + 3, 0}), zvec({0, 4, M + 4}),
                   zvec({0, 0, 1})});
    if (i == M + 5)
        return mk({zvec({4, 2 * M + 8, 0}), zvec({5, 2 * M + 8, 0}), zvec({0, 5, 2 * M + 10})});
    return mk({zvec({5, 2 * M + 10, 0})});
}

}  // namespace tables

}  // namespace effcones
