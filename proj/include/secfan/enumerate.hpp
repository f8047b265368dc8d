/**
 * Breadth-first enumeration of the regular triangulations of a point
 * configuration through the flip graph, up to a symmetry group, and
 * collection of the coarsest subdivisions (rays of the secondary fan).
 */
#pragma once

#include "secfan/secondary.hpp"
#include "secfan/symmetry.hpp"

#include <functional>
#include <map>
#include <string>

namespace secfan {

struct OrbitCatalog
{
    /** Canonical representatives, sorted. */
    std::vector<Subdivision> representatives;
    std::vector<Integer> orbit_sizes;
    /** A height vector inducing each representative (ray for coarsest catalogs). */
    std::vector<QVector> heights;
    /** spread -> number of orbits */
    std::map<std::size_t, std::size_t> spread_histogram;
    /** Distinct nonregular flip neighbours met (orbits), triangulation catalogs only. */
    std::size_t nonregular_neighbours = 0;

    Integer total() const;
    std::size_t orbits() const { return representatives.size(); }
    bool operator==(const OrbitCatalog&) const = default;
};

struct EnumerationOptions
{
    std::size_t threads = 1;
    /** Append a line per completed level to this file (empty: no checkpoint). */
    std::string checkpoint;
    /** Continue from the existing checkpoint file. */
    bool resume = false;
    /** Stop after expanding this many levels in this run (0: run to completion). */
    std::size_t max_levels = 0;
    /** Abort with ResourceLimit once more than this many orbits are known (0: unlimited). */
    std::size_t max_orbits = 0;
    std::uint64_t seed = 1;
    /** Optional progress callback (level, known orbits, frontier size). */
    std::function<void(std::size_t, std::size_t, std::size_t)> progress;
};

struct EnumerationResult
{
    OrbitCatalog catalog;
    /** False when stopped early by max_levels; the catalog is then partial. */
    bool complete = false;
    std::size_t levels = 0;
};

EnumerationResult enumerate_regular_triangulations(const PointConfiguration& config, const PointGroup& group,
                                                   const EnumerationOptions& options = {});

/**
 * Rays of the secondary fan up to symmetry: the secondary rays of one
 * representative per triangulation orbit, deduplicated by canonical
 * subdivision.  The orbit of every ray is covered because the group maps
 * the catalog to itself.
 */
OrbitCatalog collect_coarsest_orbits(const PointConfiguration& config, const PointGroup& group,
                                     const OrbitCatalog& triangulations, std::size_t threads = 1);

/** Runs `fn(i)` for i in [0, count) on `threads` workers. */
void parallel_for(std::size_t count, std::size_t threads, const std::function<void(std::size_t)>& fn);

}  // namespace secfan
