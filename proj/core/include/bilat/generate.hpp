#ifndef BILAT_GENERATE_HPP
#define BILAT_GENERATE_HPP

#include <bilat/bilattice.hpp>
#include <bilat/inverse_image.hpp>
#include <bilat/rng.hpp>

namespace bilat {

/// Parameters for seeded instance streams. An identical config produces an
/// identical stream.
struct GeneratorConfig {
    std::uint64_t seed = 1;
    int min_ground = 1;
    int max_ground = 6;
    double density = 0.5;
    int count = 0;  // 0 keeps every group's pinned default
};

/// Each cell present independently with the given density; the result may be
/// degenerate.
Relation gen_relation_raw(Rng& rng, const GroundSpace& a, const GroundSpace& b, double density);

/// Density-sampled relation repaired to nondegeneracy: one uniformly chosen
/// cell is inserted per empty row (rows in ascending order), then per empty
/// column.
Relation gen_relation(Rng& rng, const GroundSpace& a, const GroundSpace& b, double density);

/// Closure of up to max_generators random subsets.
CSL gen_csl(Rng& rng, const GroundSpace& g, double density, int max_generators = 4,
            const Limits& limits = {});

/// Closure of up to max_generators random projection pairs.
Bilattice gen_bilattice(Rng& rng, const GroundSpace& gl, const GroundSpace& gr, double density,
                        int max_generators = 3, const Limits& limits = {});

/// Uniform random table; not necessarily surjective.
PointMap gen_point_map(Rng& rng, const GroundSpace& from, const GroundSpace& onto);

/// Random surjective table (requires from.size >= onto.size): a random
/// ordering pins one preimage per target atom, the rest are uniform.
PointMap gen_surjection(Rng& rng, const GroundSpace& from, const GroundSpace& onto);

/// Permutes a relation's atoms on both sides; Morita-equivalence preserving.
Relation relabeled(Rng& rng, const Relation& e);

}  // namespace bilat

#endif
