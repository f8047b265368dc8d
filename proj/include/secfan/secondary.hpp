/**
 * Secondary cones of subdivisions, regularity, coarsest tests, rays,
 * bistellar flips and GKZ vectors.
 */
#pragma once

#include "secfan/cone.hpp"
#include "secfan/subdivision.hpp"

#include <cstdint>
#include <optional>

namespace secfan {

/**
 * Closed secondary cone of `s` in height space: for every maximal cell the
 * affine interpolation through an affine basis of the cell agrees with the
 * heights on the rest of the cell (equations) and lies weakly below the
 * heights of all other points (inequalities).  Redundant rows are removed.
 * Throws InvalidInput if a cell is not full dimensional.
 */
HCone secondary_cone(const PointConfiguration& config, const Subdivision& s);

/** Rows before redundancy removal (deduplicated up to scaling). */
HCone secondary_cone_raw(const PointConfiguration& config, const Subdivision& s);

/**
 * For a triangulation: one folding inequality per interior wall.  Local
 * convexity across all walls is equivalent to convexity, so this cone equals
 * the secondary cone.
 */
HCone wall_cone(const PointConfiguration& config, const Subdivision& triangulation);

/** Dimension of the secondary cone (includes the d+1 dimensional lineality). */
std::size_t secondary_cone_dim(const PointConfiguration& config, const Subdivision& s);

/**
 * Whether A^ω is a coarsest subdivision: its secondary cone has dimension
 * d+2.  Throws InvalidInput when ω induces the trivial subdivision.
 */
bool is_coarsest(const PointConfiguration& config, const HeightFunction& heights);

bool is_regular_triangulation(const PointConfiguration& config, const Subdivision& triangulation);

/** A height vector inducing `triangulation`, if it is regular. */
std::optional<QVector> regular_heights(const PointConfiguration& config, const Subdivision& triangulation);

struct SecondaryRay
{
    QVector ray;
    Subdivision subdivision;
};

/** Rays of the secondary cone of a regular triangulation, with their subdivisions. */
std::vector<SecondaryRay> secondary_rays(const PointConfiguration& config, const Subdivision& triangulation);

/** Rays of the secondary cone of an arbitrary regular subdivision. */
std::vector<SecondaryRay> secondary_rays_of_subdivision(const PointConfiguration& config, const Subdivision& s);

/** All bistellar flip neighbours of a triangulation, sorted. */
std::vector<Subdivision> flips(const PointConfiguration& config, const Subdivision& triangulation);

/** Entry per point: total volume of the maximal cells containing it. */
std::vector<Integer> gkz_vector(const PointConfiguration& config, const Subdivision& triangulation);

/**
 * Deterministic regular seed triangulation: the thrackle triangulation for
 * Δ(2,n), otherwise a random integer lifting (seeded) retried until it is
 * generic.
 */
Subdivision seed_triangulation(const PointConfiguration& config, std::uint64_t seed = 1);

}  // namespace secfan
