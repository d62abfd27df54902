#include "effcones/cone.hpp"

#include <algorithm>
#include <cstdint>

namespace effcones {

namespace {

void sort_dedup(std::vector<ZVec>& rays) {
    std::sort(rays.begin(), rays.end(),
              [](const ZVec& a, const ZVec& b) { return lex_compare(a, b) < 0; });
    rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
}

void check_dims(int ambient_dim, const std::vector<ZVec>& rays) {
    for (const ZVec& r : rays)
        if (static_cast<int>(r.size()) != ambient_dim)
            throw dimension_error("cone: ray length does not match ambient dimension");
}

}  // namespace

ZVec canonical_ray(const QVec& v) {
    if (v.empty()) throw dimension_error("canonical_ray: empty vector");
    Int lcm_den = 1;
    for (const Rat& x : v) {
        Int l;
        mpz_lcm(l.get_mpz_t(), lcm_den.get_mpz_t(), x.get_den().get_mpz_t());
        lcm_den = l;
    }
    ZVec out(v.size());
    Int g = 0;
    for (size_t i = 0; i < v.size(); ++i) {
        out[i] = v[i].get_num() * (lcm_den / v[i].get_den());
        Int gg;
        mpz_gcd(gg.get_mpz_t(), g.get_mpz_t(), out[i].get_mpz_t());
        g = gg;
    }
    if (sgn(g) == 0) throw std::invalid_argument("canonical_ray: zero vector is not a ray");
    for (Int& x : out) x /= g;
    return out;
}

ZVec canonical_ray(const ZVec& v) { return canonical_ray(to_qvec(v)); }

ConeV ConeV::from_rays(int ambient_dim, const std::vector<QVec>& rays) {
    ConeV c;
    c.ambient_dim = ambient_dim;
    for (const QVec& r : rays) {
        if (is_zero(r)) continue;
        c.rays.push_back(canonical_ray(r));
    }
    check_dims(ambient_dim, c.rays);
    sort_dedup(c.rays);
    return c;
}

ConeV ConeV::from_rays(int ambient_dim, const std::vector<ZVec>& rays) {
    ConeV c;
    c.ambient_dim = ambient_dim;
    for (const ZVec& r : rays) {
        if (is_zero(r)) continue;
        c.rays.push_back(canonical_ray(r));
    }
    check_dims(ambient_dim, c.rays);
    sort_dedup(c.rays);
    return c;
}

ConeH ConeH::from_inequalities(int ambient_dim, const std::vector<ZVec>& ineqs) {
    ConeH h;
    h.ambient_dim = ambient_dim;
    for (const ZVec& v : ineqs) {
        if (is_zero(v)) continue;
        h.inequalities.push_back(canonical_ray(v));
    }
    check_dims(ambient_dim, h.inequalities);
    sort_dedup(h.inequalities);
    return h;
}

// ---------------------------------------------------------------------------
// Double description.
//
// Maintains a (lineality, rays) pair for the intersection of the processed
// halfspaces.  Rays carry the bitset of halfspaces tight at them; two rays on
// opposite sides of a new hyperplane are combined only when combinatorially
// adjacent, which keeps the ray set minimal throughout.  Dimensions here are
// tiny (<= 8) so no further optimization is warranted.
// ---------------------------------------------------------------------------

namespace {

constexpr size_t kMaxIneqs = 64;

struct DDRay {
    QVec v;
    uint64_t tight = 0;
};

struct DDResult {
    std::vector<QVec> lineality;  // row echelon, unit pivots
    std::vector<DDRay> rays;
};

bool adjacent(const std::vector<DDRay>& rays, size_t p, size_t q) {
    uint64_t common = rays[p].tight & rays[q].tight;
    for (size_t r = 0; r < rays.size(); ++r) {
        if (r == p || r == q) continue;
        if ((common & ~rays[r].tight) == 0) return false;
    }
    return true;
}

void echelonize(std::vector<QVec>& rows) {
    size_t rank = 0;
    size_t ncols = rows.empty() ? 0 : rows[0].size();
    for (size_t col = 0; col < ncols && rank < rows.size(); ++col) {
        size_t piv = rank;
        while (piv < rows.size() && sgn(rows[piv][col]) == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[rank]);
        Rat p = rows[rank][col];
        for (Rat& x : rows[rank]) x /= p;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == rank || sgn(rows[i][col]) == 0) continue;
            Rat f = rows[i][col];
            for (size_t j = 0; j < ncols; ++j) rows[i][j] -= f * rows[rank][j];
        }
        ++rank;
    }
    rows.resize(rank);
}

// Rays are kept reduced modulo the lineality space; otherwise two vectors
// differing by a lineality component would represent the same extreme ray
// and defeat the combinatorial adjacency test.
void reduce_mod_lineality(QVec& v, const std::vector<QVec>& lin) {
    for (const QVec& l : lin) {
        size_t piv = 0;
        while (piv < l.size() && sgn(l[piv]) == 0) ++piv;
        if (piv == l.size()) continue;
        if (sgn(v[piv]) == 0) continue;
        Rat f = v[piv] / l[piv];
        for (size_t j = 0; j < v.size(); ++j) v[j] -= f * l[j];
    }
}

void recanonicalize(QVec& v) {
    if (is_zero(v)) return;
    ZVec c = canonical_ray(v);
    for (size_t i = 0; i < v.size(); ++i) v[i] = c[i];
}

DDResult double_description(int ambient_dim, const std::vector<ZVec>& ineqs) {
    if (ineqs.size() > kMaxIneqs)
        throw std::invalid_argument("double_description: more than 64 inequalities");

    DDResult dd;
    for (int i = 0; i < ambient_dim; ++i) {
        QVec unit(ambient_dim, Rat(0));
        unit[i] = 1;
        dd.lineality.push_back(std::move(unit));
    }

    for (size_t idx = 0; idx < ineqs.size(); ++idx) {
        const ZVec& a = ineqs[idx];

        size_t cut = dd.lineality.size();
        for (size_t l = 0; l < dd.lineality.size(); ++l) {
            if (sgn(dot(a, dd.lineality[l])) != 0) {
                cut = l;
                break;
            }
        }

        if (cut < dd.lineality.size()) {
            // The hyperplane slices the lineality space: one basis vector
            // becomes a ray, the rest are projected onto the hyperplane.
            QVec star = dd.lineality[cut];
            Rat va = dot(a, star);
            if (sgn(va) < 0) {
                for (Rat& x : star) x = -x;
                va = -va;
            }
            std::vector<QVec> new_lin;
            for (size_t l = 0; l < dd.lineality.size(); ++l) {
                if (l == cut) continue;
                QVec w = dd.lineality[l];
                Rat c = dot(a, w) / va;
                for (int i = 0; i < ambient_dim; ++i) w[i] -= c * star[i];
                new_lin.push_back(std::move(w));
            }
            echelonize(new_lin);
            for (DDRay& r : dd.rays) {
                Rat c = dot(a, r.v) / va;
                for (int i = 0; i < ambient_dim; ++i) r.v[i] -= c * star[i];
                reduce_mod_lineality(r.v, new_lin);
                recanonicalize(r.v);
                r.tight |= (uint64_t{1} << idx);
            }
            reduce_mod_lineality(star, new_lin);
            recanonicalize(star);
            dd.lineality = std::move(new_lin);
            DDRay nr;
            nr.v = std::move(star);
            // A former lineality vector is tight at every earlier halfspace.
            nr.tight = (idx == 0) ? 0 : ((uint64_t{1} << idx) - 1);
            dd.rays.push_back(std::move(nr));
            continue;
        }

        std::vector<size_t> pos, neg;
        std::vector<Rat> vals(dd.rays.size());
        for (size_t r = 0; r < dd.rays.size(); ++r) {
            vals[r] = dot(a, dd.rays[r].v);
            int s = sgn(vals[r]);
            if (s > 0)
                pos.push_back(r);
            else if (s < 0)
                neg.push_back(r);
            else
                dd.rays[r].tight |= (uint64_t{1} << idx);
        }
        if (neg.empty()) continue;

        std::vector<DDRay> next;
        for (size_t r = 0; r < dd.rays.size(); ++r)
            if (sgn(vals[r]) >= 0) next.push_back(dd.rays[r]);
        for (size_t p : pos) {
            for (size_t n : neg) {
                if (!adjacent(dd.rays, p, n)) continue;
                DDRay w;
                w.v.resize(ambient_dim);
                for (int i = 0; i < ambient_dim; ++i)
                    w.v[i] = vals[p] * dd.rays[n].v[i] - vals[n] * dd.rays[p].v[i];
                recanonicalize(w.v);
                w.tight = (dd.rays[p].tight & dd.rays[n].tight) | (uint64_t{1} << idx);
                next.push_back(std::move(w));
            }
        }
        dd.rays = std::move(next);
    }
    return dd;
}

ConeV dd_to_cone(int ambient_dim, const DDResult& dd) {
    std::vector<QVec> gens;
    for (const DDRay& r : dd.rays) gens.push_back(r.v);
    for (const QVec& l : dd.lineality) {
        gens.push_back(l);
        QVec m = l;
        for (Rat& x : m) x = -x;
        gens.push_back(std::move(m));
    }
    return ConeV::from_rays(ambient_dim, gens);
}

}  // namespace

ConeV dual_cone(const ConeV& c) {
    if (c.ambient_dim < 1) throw dimension_error("dual_cone: ambient dimension must be >= 1");
    return dd_to_cone(c.ambient_dim, double_description(c.ambient_dim, c.rays));
}

ConeV cone_from_inequalities(const ConeH& h) {
    if (h.ambient_dim < 1)
        throw dimension_error("cone_from_inequalities: ambient dimension must be >= 1");
    return dd_to_cone(h.ambient_dim, double_description(h.ambient_dim, h.inequalities));
}

// ---------------------------------------------------------------------------
// Membership: phase-1 simplex, dense exact tableau, Bland's rule.
// ---------------------------------------------------------------------------

bool member(const ConeV& c, const QVec& x) {
    if (static_cast<int>(x.size()) != c.ambient_dim)
        throw dimension_error("member: point dimension mismatch");
    if (is_zero(x)) return true;
    size_t m = c.rays.size();
    if (m == 0) return false;
    size_t k = x.size();
    size_t cols = m + k;  // generator columns, then artificial columns

    std::vector<QVec> tab(k, QVec(cols + 1, Rat(0)));
    std::vector<size_t> basis(k);
    for (size_t i = 0; i < k; ++i) {
        int flip = sgn(x[i]) < 0 ? -1 : 1;
        for (size_t j = 0; j < m; ++j) tab[i][j] = Rat(c.rays[j][i]) * flip;
        tab[i][m + i] = 1;
        tab[i][cols] = x[i] * flip;
        basis[i] = m + i;
    }

    // Objective: minimize the sum of artificials.  Start from cost row
    // (0..0,1..1) and cancel the basic (artificial) columns.
    QVec obj(cols + 1, Rat(0));
    for (size_t j = m; j < cols; ++j) obj[j] = 1;
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j <= cols; ++j) obj[j] -= tab[i][j];

    while (true) {
        size_t enter = cols;
        for (size_t j = 0; j < cols; ++j) {
            if (sgn(obj[j]) < 0) {
                enter = j;
                break;
            }
        }
        if (enter == cols) break;

        size_t leave = k;
        Rat best;
        for (size_t i = 0; i < k; ++i) {
            if (sgn(tab[i][enter]) <= 0) continue;
            Rat ratio = tab[i][cols] / tab[i][enter];
            if (leave == k || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                best = ratio;
                leave = i;
            }
        }
        if (leave == k) {
            // Unbounded phase-1 objective cannot happen (bounded below by 0);
            // treat defensively as infeasible direction exhausted.
            break;
        }

        Rat piv = tab[leave][enter];
        for (size_t j = 0; j <= cols; ++j) tab[leave][j] /= piv;
        for (size_t i = 0; i < k; ++i) {
            if (i == leave || sgn(tab[i][enter]) == 0) continue;
            Rat f = tab[i][enter];
            for (size_t j = 0; j <= cols; ++j) tab[i][j] -= f * tab[leave][j];
        }
        if (sgn(obj[enter]) != 0) {
            Rat f = obj[enter];
            for (size_t j = 0; j <= cols; ++j) obj[j] -= f * tab[leave][j];
        }
        basis[leave] = enter;
    }

    // Objective value is -obj[cols]; feasible iff it reached zero.
    return sgn(obj[cols]) == 0;
}

bool member(const ConeV& c, const ZVec& x) { return member(c, to_qvec(x)); }

bool cone_equal(const ConeV& a, const ConeV& b) {
    if (a.ambient_dim != b.ambient_dim)
        throw dimension_error("cone_equal: ambient dimension mismatch");
    for (const ZVec& r : a.rays)
        if (!member(b, r)) return false;
    for (const ZVec& r : b.rays)
        if (!member(a, r)) return false;
    return true;
}

ConeV minkowski_sum(const ConeV& a, const ConeV& b) {
    if (a.ambient_dim != b.ambient_dim)
        throw dimension_error("minkowski_sum: ambient dimension mismatch");
    std::vector<ZVec> rays = a.rays;
    rays.insert(rays.end(), b.rays.begin(), b.rays.end());
    return ConeV::from_rays(a.ambient_dim, rays);
}

int rank_of_vectors(const std::vector<ZVec>& vs) {
    if (vs.empty()) return 0;
    std::vector<QVec> rows;
    for (const ZVec& v : vs) rows.push_back(to_qvec(v));
    size_t ncols = rows[0].size();
    int rank = 0;
    size_t row = 0;
    for (size_t col = 0; col < ncols && row < rows.size(); ++col) {
        size_t piv = row;
        while (piv < rows.size() && sgn(rows[piv][col]) == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[row]);
        for (size_t i = row + 1; i < rows.size(); ++i) {
            if (sgn(rows[i][col]) == 0) continue;
            Rat f = rows[i][col] / rows[row][col];
            for (size_t j = col; j < ncols; ++j) rows[i][j] -= f * rows[row][j];
        }
        ++row;
        ++rank;
    }
    return rank;
}

ExtremalRays extremal_rays(const ConeV& c) {
    ExtremalRays out;
    out.rays.ambient_dim = c.ambient_dim;

    std::vector<ZVec> lineal;
    std::vector<ZVec> rest;
    for (const ZVec& g : c.rays) {
        ZVec neg = g;
        for (Int& x : neg) x = -x;
        if (member(c, neg))
            lineal.push_back(g);
        else
            rest.push_back(g);
    }
    if (!lineal.empty()) {
        out.pointed = false;
        // Reduce the collected generators to an independent basis.
        std::vector<ZVec> basis;
        for (const ZVec& v : lineal) {
            basis.push_back(v);
            if (rank_of_vectors(basis) < static_cast<int>(basis.size())) basis.pop_back();
        }
        out.lineality = std::move(basis);
        out.rays = ConeV::from_rays(c.ambient_dim, rest);
        return out;
    }

    // Pointed: greedy removal is order-independent because the extremal set
    // of a pointed cone is unique.
    std::vector<ZVec> kept = c.rays;
    for (size_t i = 0; i < kept.size();) {
        std::vector<ZVec> others;
        others.reserve(kept.size() - 1);
        for (size_t j = 0; j < kept.size(); ++j)
            if (j != i) others.push_back(kept[j]);
        ConeV rest_cone = ConeV::from_rays(c.ambient_dim, others);
        if (member(rest_cone, kept[i]))
            kept.erase(kept.begin() + i);
        else
            ++i;
    }
    out.pointed = true;
    out.rays = ConeV::from_rays(c.ambient_dim, kept);
    return out;
}

bool is_simplicial(const ConeV& c) {
    ExtremalRays ex = extremal_rays(c);
    if (!ex.pointed) throw std::invalid_argument("is_simplicial: cone is not pointed");
    return static_cast<int>(ex.rays.rays.size()) == rank_of_vectors(ex.rays.rays);
}

ConeV minimal_form(const ConeV& c) {
    if (c.trivial()) return c;
    ExtremalRays ex = extremal_rays(c);
    if (!ex.pointed) throw std::invalid_argument("minimal_form: cone is not pointed");
    return ex.rays;
}

}  // namespace effcones
