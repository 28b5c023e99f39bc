#ifndef BILAT_ORACLE_HPP
#define BILAT_ORACLE_HPP

#include <bilat/bilattice.hpp>
#include <bilat/report.hpp>

#include <span>

namespace bilat {

/// Brute-force span oracle: enumerates every tuple of matrix units drawn from
/// the factors' patterns, multiplies them, and collects the supports of the
/// nonzero products. Exponential in the chain length; oracle scale only.
/// Must agree with span_compose on every input.
Relation oracle_span_product(std::span<const Relation> chain);
Relation oracle_span_product(std::initializer_list<Relation> chain);

/// Brute-force reflexive hull: a matrix-unit cell (a,b) belongs to the hull
/// iff for every vector support containing a, b lies in the span support of
/// the image. Enumerates all 2^|A| supports. Must agree with ref_hull.
Relation oracle_ref_hull(const Relation& e);

/// Randomized minimality probe: draws random sub-bilattices of bil_of(e),
/// repairs them so their support is exactly e, closes under generation, and
/// asserts the essential bilattice is contained in each.
CheckReport oracle_minimality_probe(const Relation& e, int trials, std::uint64_t seed,
                                    const Limits& limits = {});

/// Exhaustive minimality at ground sizes <= 2: every subset of bil_of(e) that
/// is a bilattice with support e contains the essential bilattice.
CheckReport exhaustive_minimality(const Relation& e, const Limits& limits = {});

}  // namespace bilat

#endif
