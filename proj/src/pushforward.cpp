#include "effcones/pushforward.hpp"

#include <string>

namespace effcones {

PushSpec::PushSpec(long s_, long t_, Rat deg, int n_) : s(s_), t(t_), delta_deg(deg), n(n_) {
    if (s < 0 || t < 0) throw std::invalid_argument("PushSpec: s and t must be >= 0");
    if (sgn(delta_deg) <= 0) throw std::invalid_argument("PushSpec: delta degree must be > 0");
    if (n < 1) throw std::invalid_argument("PushSpec: n must be >= 1");
}

QVec product_pushforward_coords(const QVec& coords, const PushSpec& spec) {
    if (static_cast<int>(coords.size()) != spec.n + 1)
        throw dimension_error("product_pushforward: tuple length must be n+1");
    QVec out(coords.size());
    for (int p = 0; p <= spec.n; ++p) {
        long j = spec.n - p;
        out[p] = coords[p] * spec.delta_deg * Rat(binomial(spec.s + spec.t - j, spec.t));
    }
    return out;
}

CovClass product_pushforward(const CovClass& eta, const PushSpec& spec,
                             const RingPresentation& target) {
    if (eta.i != spec.s)
        throw std::invalid_argument("product_pushforward: cycle dimension differs from spec.s");
    if (eta.pres.n != spec.n || target.n != spec.n)
        throw dimension_error("product_pushforward: base dimension mismatch");
    return make_cov(target, spec.s + spec.t, product_pushforward_coords(eta.coords, spec));
}

ConeV hyperplane_cone(int n, long i) {
    if (n < 1) throw std::invalid_argument("hyperplane_cone: n must be >= 1");
    if (i < 0 || i > 2 * static_cast<long>(n) - 1)
        throw std::invalid_argument("hyperplane_cone: i out of range 0..2n-1");
    std::vector<QVec> rays;
    if (i < n) {
        for (long j = 0; j <= i; ++j) {
            QVec v(n + 1, Rat(0));
            v[n - j] = 1;
            rays.push_back(std::move(v));
        }
    } else {
        for (long j = i + 1 - n; j <= n; ++j) {
            QVec v(n + 1, Rat(0));
            v[n - j] = 1;
            v[n - j + 1] = 1;  // e_j + e_{j-1}
            rays.push_back(std::move(v));
        }
    }
    return ConeV::from_rays(n + 1, rays);
}

namespace {

ConeV push_cone_impl(const ProductSource& src, long i, bool partial) {
    if (src.n < 1) throw std::invalid_argument("product_cone_pushforward: n must be >= 1");
    long jlo = std::max<long>(0, i - src.M);
    long jhi = std::min<long>(i, src.dim_x1);
    std::vector<QVec> rays;
    for (long j = jlo; j <= jhi; ++j) {
        auto it = src.cones.find(j);
        if (it == src.cones.end()) {
            if (partial) continue;
            throw missing_source_error("product_cone_pushforward: missing source dimension j=" +
                                       std::to_string(j));
        }
        PushSpec spec(j, i - j, Rat(1), src.n);
        for (const ZVec& g : it->second.rays)
            rays.push_back(product_pushforward_coords(to_qvec(g), spec));
    }
    return ConeV::from_rays(src.n + 1, rays);
}

}  // namespace

ConeV product_cone_pushforward(const ProductSource& src, long i) {
    return push_cone_impl(src, i, false);
}

ConeV product_cone_pushforward_partial(const ProductSource& src, long i) {
    return push_cone_impl(src, i, true);
}

}  // namespace effcones
