#include "polyhodge/system.hpp"

#include <algorithm>
#include <cassert>

#include "polyhodge/errors.hpp"

namespace polyhodge {

namespace {

struct Fiber {
    std::vector<RatVec> basis;  // vectors in the ambient space, or abstract coords

    int dim() const { return static_cast<int>(basis.size()); }
};

// deterministic complement: standard basis vectors extending span(cone) to
// the whole space
std::vector<int> complement_indices(const Cone& cone, int ambient) {
    std::vector<RatVec> pool = cone.basis;
    std::vector<int> chosen;
    for (int i = 0; i < ambient; ++i) {
        RatVec e(ambient, 0);
        e[i] = 1;
        pool.push_back(e);
        if (rank_of_vectors(pool) == static_cast<int>(pool.size()))
            chosen.push_back(i);
        else
            pool.pop_back();
    }
    return chosen;
}

std::vector<std::vector<int>> q_subsets(int n, int q) {
    std::vector<std::vector<int>> out;
    if (q < 0 || q > n) return out;
    std::vector<int> idx(q);
    for (int i = 0; i < q; ++i) idx[i] = i;
    for (;;) {
        out.push_back(idx);
        int i = q - 1;
        while (i >= 0 && idx[i] == n - q + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < q; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (q == 0) out = {{}};
    return out;
}

Rational minor_det(const RatMatrix& m, const std::vector<int>& rows,
                   const std::vector<int>& cols) {
    int q = static_cast<int>(rows.size());
    if (q == 0) return 1;
    std::vector<std::vector<Rational>> a(q, std::vector<Rational>(q));
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j) a[i][j] = m.get(rows[i], cols[j]);
    // plain fraction elimination; q stays tiny
    Rational det = 1;
    for (int k = 0; k < q; ++k) {
        int piv = -1;
        for (int i = k; i < q; ++i)
            if (a[i][k] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) return 0;
        if (piv != k) {
            std::swap(a[piv], a[k]);
            det = -det;
        }
        det *= a[k][k];
        for (int i = k + 1; i < q; ++i) {
            if (a[i][k] == 0) continue;
            Rational f = a[i][k] / a[k][k];
            for (int j = k; j < q; ++j) a[i][j] -= f * a[k][j];
        }
    }
    return det;
}

}  // namespace

int SystemComplex::euler_characteristic() const {
    int acc = 0, sign = 1;
    for (int d : dims) {
        acc += sign * d;
        sign = -sign;
    }
    return acc;
}

SystemComplex assemble(const OrientedFan& fan, const SystemSpec& spec, Backend backend) {
    const int D = fan.ambient_dim;
    const int ncones = static_cast<int>(fan.cones.size());
    const bool homological = (spec.tag == SystemSpec::Tag::Perp || spec.tag == SystemSpec::Tag::Vr);

    if (spec.tag == SystemSpec::Tag::ExteriorQuotient &&
        (spec.exterior_power < 0 || spec.exterior_power > D))
        throw UnsupportedSpec("exterior power out of range");
    if (spec.tag == SystemSpec::Tag::Vr) {
        if (static_cast<int>(spec.degree.size()) != D)
            throw UnsupportedSpec("degree length must match the fan's ambient dimension");
        for (const auto& c : fan.cones)
            for (const auto& g : c.generators)
                for (const auto& x : g)
                    if (x.get_den() != 1)
                        throw UnsupportedSpec("Vr system needs a fan over lattice generators");
    }

    // ---- fibers -----------------------------------------------------------
    std::vector<Fiber> fibers(ncones);
    std::vector<std::vector<int>> complements(ncones);  // QuotientBySpan bookkeeping
    std::vector<int> fiber_dim(ncones, 0);

    for (int ci = 0; ci < ncones; ++ci) {
        const Cone& cone = fan.cones[ci];
        Fiber& fib = fibers[ci];
        switch (spec.tag) {
            case SystemSpec::Tag::Span:
                fib.basis = cone.basis;
                fiber_dim[ci] = fib.dim();
                break;
            case SystemSpec::Tag::QuotientBySpan:
            case SystemSpec::Tag::ExteriorQuotient: {
                complements[ci] = complement_indices(cone, D);
                int t = static_cast<int>(complements[ci].size());
                fiber_dim[ci] = (spec.tag == SystemSpec::Tag::QuotientBySpan)
                                    ? t
                                    : static_cast<int>(q_subsets(t, spec.exterior_power).size());
                break;
            }
            case SystemSpec::Tag::Constant:
                fiber_dim[ci] = 1;
                break;
            case SystemSpec::Tag::Perp: {
                RatMatrix rows = RatMatrix::from_dense(cone.basis);
                if (cone.dim == 0) rows = RatMatrix(0, D);
                fib.basis = kernel_basis(rows, Backend::Serial);
                fiber_dim[ci] = fib.dim();
                break;
            }
            case SystemSpec::Tag::Vr: {
                bool dead = false;
                std::vector<RatVec> ones;
                for (const auto& g : cone.generators) {
                    Rational v = 0;
                    for (int j = 0; j < D; ++j) v += g[j] * Rational(spec.degree[j]);
                    if (v <= 0) dead = true;
                    if (v == 1) ones.push_back(g);
                }
                if (!dead) {
                    RatMatrix rows = ones.empty() ? RatMatrix(0, D) : RatMatrix::from_dense(ones);
                    fib.basis = kernel_basis(rows, Backend::Serial);
                    fiber_dim[ci] = fib.dim();
                }
                break;
            }
        }
    }

    // the change of basis between quotient fibers factors through one solve
    auto quotient_map = [&](int tau, int sigma) {
        // columns: sigma's span basis, then sigma's complement vectors
        std::vector<RatVec> cols = fan.cones[sigma].basis;
        for (int i : complements[sigma]) {
            RatVec e(D, 0);
            e[i] = 1;
            cols.push_back(std::move(e));
        }
        int span_dim = fan.cones[sigma].dim;
        RatMatrix out(static_cast<int>(complements[sigma].size()),
                      static_cast<int>(complements[tau].size()));
        for (size_t j = 0; j < complements[tau].size(); ++j) {
            RatVec e(D, 0);
            e[complements[tau][j]] = 1;
            auto c = express_in_columns(cols, e);
            assert(c.has_value());
            for (size_t i = 0; i < complements[sigma].size(); ++i)
                out.set(static_cast<int>(i), static_cast<int>(j), (*c)[span_dim + i]);
        }
        return out;
    };

    // fiber map along a facet inclusion, in the chosen bases
    auto face_map = [&](int tau, int sigma) -> RatMatrix {
        switch (spec.tag) {
            case SystemSpec::Tag::Span: {
                RatMatrix out(fan.cones[sigma].dim, fan.cones[tau].dim);
                for (int j = 0; j < fan.cones[tau].dim; ++j) {
                    auto c = express_in_columns(fan.cones[sigma].basis, fan.cones[tau].basis[j]);
                    assert(c.has_value());
                    for (int i = 0; i < fan.cones[sigma].dim; ++i)
                        out.set(i, j, (*c)[i]);
                }
                return out;
            }
            case SystemSpec::Tag::QuotientBySpan:
                return quotient_map(tau, sigma);
            case SystemSpec::Tag::ExteriorQuotient: {
                RatMatrix a = quotient_map(tau, sigma);
                auto rows_sets = q_subsets(a.rows(), spec.exterior_power);
                auto cols_sets = q_subsets(a.cols(), spec.exterior_power);
                RatMatrix out(static_cast<int>(rows_sets.size()),
                              static_cast<int>(cols_sets.size()));
                for (size_t i = 0; i < rows_sets.size(); ++i)
                    for (size_t j = 0; j < cols_sets.size(); ++j)
                        out.set(static_cast<int>(i), static_cast<int>(j),
                                minor_det(a, rows_sets[i], cols_sets[j]));
                return out;
            }
            case SystemSpec::Tag::Constant:
                return RatMatrix::identity(1);
            case SystemSpec::Tag::Perp:
            case SystemSpec::Tag::Vr: {
                // inclusion of the bigger cone's fiber into the facet's
                RatMatrix out(fibers[tau].dim(), fibers[sigma].dim());
                for (int j = 0; j < fibers[sigma].dim(); ++j) {
                    auto c = express_in_columns(fibers[tau].basis, fibers[sigma].basis[j]);
                    assert(c.has_value());
                    for (int i = 0; i < fibers[tau].dim(); ++i) out.set(i, j, (*c)[i]);
                }
                return out;
            }
        }
        return {};
    };

    // ---- complex ----------------------------------------------------------
    SystemComplex cx;
    cx.homological = homological;
    cx.dims.assign(fan.max_dim + 1, 0);
    cx.blocks.assign(fan.max_dim + 1, {});
    std::vector<int> offset(ncones, 0);
    for (int d = 0; d <= fan.max_dim; ++d)
        for (int ci : fan.by_dim[d]) {
            offset[ci] = cx.dims[d];
            cx.blocks[d].emplace_back(ci, offset[ci]);
            cx.dims[d] += fiber_dim[ci];
        }

    cx.maps.resize(fan.max_dim + 1);
    for (int d = 0; d <= fan.max_dim; ++d) {
        if (!homological)
            cx.maps[d] = RatMatrix(d + 1 <= fan.max_dim ? cx.dims[d + 1] : 0, cx.dims[d]);
        else
            cx.maps[d] = RatMatrix(d >= 1 ? cx.dims[d - 1] : 0, cx.dims[d]);
    }
    for (int si = 0; si < ncones; ++si) {
        const Cone& sigma = fan.cones[si];
        for (size_t k = 0; k < sigma.facets.size(); ++k) {
            int ti = sigma.facets[k];
            int sgn = sigma.facet_signs[k];
            if (fiber_dim[si] == 0 || fiber_dim[ti] == 0) continue;
            RatMatrix m = face_map(ti, si);
            if (!homological) {
                // block at (sigma rows, tau cols) inside maps[dim tau]
                RatMatrix& target = cx.maps[sigma.dim - 1];
                for (int i = 0; i < m.rows(); ++i)
                    for (const auto& [j, v] : m.row(i))
                        target.add(offset[si] + i, offset[ti] + j, sgn * v);
            } else {
                RatMatrix& target = cx.maps[sigma.dim];
                for (int i = 0; i < m.rows(); ++i)
                    for (const auto& [j, v] : m.row(i))
                        target.add(offset[ti] + i, offset[si] + j, sgn * v);
            }
        }
    }

    // hard invariant: consecutive maps compose to zero
    for (int d = 0; d <= fan.max_dim; ++d) {
        if (!homological) {
            if (d + 1 > fan.max_dim) continue;
            if (!multiply(cx.maps[d + 1], cx.maps[d]).is_zero())
                throw NotAComplex("assemble: d∘d != 0 (orientation sign bug)");
        } else {
            if (d < 1) continue;
            if (!multiply(cx.maps[d - 1], cx.maps[d]).is_zero())
                throw NotAComplex("assemble: d∘d != 0 (orientation sign bug)");
        }
    }
    (void)backend;
    return cx;
}

std::vector<int> cohomology_dims(const SystemComplex& c, Backend backend) {
    int top = static_cast<int>(c.dims.size()) - 1;
    std::vector<int> ranks(top + 1, 0);
    for (int d = 0; d <= top; ++d) ranks[d] = rank(c.maps[d], backend);
    std::vector<int> h(top + 1, 0);
    for (int d = 0; d <= top; ++d) {
        int incoming = 0;
        if (!c.homological)
            incoming = (d >= 1) ? ranks[d - 1] : 0;
        else
            incoming = (d + 1 <= top) ? ranks[d + 1] : 0;
        h[d] = c.dims[d] - ranks[d] - incoming;
        assert(h[d] >= 0);
    }
    return h;
}

int hodge_number(const OrientedFan& fan, int p, int q, Backend backend) {
    const int D = fan.ambient_dim;
    if (p < 0 || p > D || q < 0 || q > D)
        throw DimensionOutOfRange("hodge_number: indices out of range");
    auto cx = assemble(fan, SystemSpec::exterior_quotient(q), backend);
    auto h = cohomology_dims(cx, backend);
    int idx = D - p;
    if (idx < 0 || idx >= static_cast<int>(h.size())) return 0;
    return h[idx];
}

}  // namespace polyhodge
