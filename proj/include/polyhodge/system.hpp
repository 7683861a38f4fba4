#ifndef POLYHODGE_SYSTEM_HPP
#define POLYHODGE_SYSTEM_HPP

#include <vector>

#include "polyhodge/fan.hpp"
#include "polyhodge/linalg.hpp"
#include "polyhodge/matrix.hpp"

namespace polyhodge {

/// Which vector-space assignment to put on the cones of a fan.
///
/// Span, QuotientBySpan, ExteriorQuotient(q) and Constant are cohomological
/// (face maps point from smaller cones to bigger ones); Perp and Vr are
/// homological (the arrows reverse).
struct SystemSpec {
    enum class Tag { Span, QuotientBySpan, ExteriorQuotient, Constant, Perp, Vr };

    Tag tag = Tag::Constant;
    int exterior_power = 1;  // ExteriorQuotient only
    IntVec degree;           // Vr only; length = fan ambient dimension

    static SystemSpec span() { return {Tag::Span}; }
    static SystemSpec quotient_by_span() { return {Tag::QuotientBySpan}; }
    static SystemSpec exterior_quotient(int q) { return {Tag::ExteriorQuotient, q}; }
    static SystemSpec constant() { return {Tag::Constant}; }
    static SystemSpec perp() { return {Tag::Perp}; }
    static SystemSpec vr(IntVec degree) { return {Tag::Vr, 1, std::move(degree)}; }
};

/// Chain complex of exact rational matrices graded by cone dimension.
/// For cohomological systems maps[k] sends degree k to k+1; for homological
/// ones maps[k] sends degree k to k-1. Composition of consecutive maps is
/// verified to vanish on assembly.
struct SystemComplex {
    bool homological = false;
    std::vector<int> dims;            // per degree 0..max_dim
    std::vector<RatMatrix> maps;      // indexed by source degree
    // per degree: (cone index, column offset) for each nonzero block
    std::vector<std::vector<std::pair<int, int>>> blocks;

    int euler_characteristic() const;
};

SystemComplex assemble(const OrientedFan& fan, const SystemSpec& spec,
                       Backend backend = Backend::Auto);

/// Cohomology dimensions per degree (homology for homological systems).
std::vector<int> cohomology_dims(const SystemComplex& c, Backend backend = Backend::Auto);

/// dim H^{D-p}(fan, Lambda^q(V/span)); the Hodge space dimension at (p, q).
int hodge_number(const OrientedFan& fan, int p, int q, Backend backend = Backend::Auto);

}  // namespace polyhodge

#endif
