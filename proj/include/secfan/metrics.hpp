/**
 * Finite metric spaces as height functions on Δ(2,n): the metric cone,
 * secondary metric cones, the metric fan, ray classification, and the split
 * decomposition.  A metric D enters Δ(2,n) as the height -D.
 */
#pragma once

#include "secfan/dissimilarity.hpp"
#include "secfan/enumerate.hpp"
#include "secfan/envelope.hpp"

#include <string>

namespace secfan {

/** Triangle inequalities and nonnegativity on the C(n,2) pair coordinates. */
HCone metric_cone(int n);

/** Configuration Δ(2,n) and its Sym(n) action. */
PointConfiguration metric_configuration(int n);
PointGroup metric_group(int n);

struct RayType
{
    bool is_split = false;
    /** Split type (a,b) with a <= b, or (0,0) for non-split rays. */
    std::pair<int, int> split{0, 0};
    /** One side of the split (containing point 0). */
    std::vector<int> part;
    /** Spread of the subdivision induced by -ray. */
    std::size_t spread = 0;

    std::string tag() const;
};

/**
 * Type of a metric-side vector: D_{a,b} when it is a positive multiple of a
 * split pseudo-metric modulo the lineality space (D_{1,n-1} when it is a
 * multiple of a star split itself), otherwise non-split with its spread.
 */
RayType classify_ray(int n, const QVector& metric);

struct RayOrbit
{
    /** Lexicographically minimal primitive representative. */
    QVector representative;
    Integer size;
    RayType type;
};

struct MetricRays
{
    VCone cone;
    std::vector<RayOrbit> orbits;
};

/** Extreme rays of MC(n) with their Sym(n) orbits.  n <= 6 unless `allow_large`. */
MetricRays metric_cone_rays(int n, bool allow_large = false);

/**
 * MC(δ) = { D in MC(n) : -D in seccone(Δ(2,n)^{-δ}) }, the metric-side
 * image of the secondary cone of the subdivision induced by -δ.
 */
HCone secondary_metric_cone(const DissimilarityMap& delta);

/**
 * Rays of the metric fan up to symmetry: for each ray of Σ(2,n) (given as
 * heights in `sigma`), the non-star extreme rays of the corresponding
 * secondary metric cone, plus the orbit of the star splits D_{1,n-1}.
 */
std::vector<RayOrbit> metric_fan_rays(int n, const OrbitCatalog& sigma);

/**
 * Nonnegative metric-side representative of a height vector modulo the
 * lineality space: the lexicographically smallest primitive non-star
 * extreme ray of MC(-heights) that agrees with -heights modulo lineality
 * up to a positive factor.  Falls back to -heights reduced modulo the
 * lineality when no such ray exists (e.g. heights outside the metric fan).
 */
QVector metric_representative(int n, const QVector& heights);

/** Orbits of `mc` missing from `fan` (compared by canonical representative). */
std::vector<RayOrbit> orbits_missing_from(const std::vector<RayOrbit>& mc, const std::vector<RayOrbit>& fan);

struct SplitCandidate
{
    std::string label;
    /** Side of the split for Δ(2,n) candidates (empty otherwise). */
    std::vector<int> part;
    HeightFunction heights;
};

/** The heights -D_{A,B} for all splits with both parts of size >= 2. */
std::vector<SplitCandidate> hypersimplex_split_candidates(int n);

struct SplitTerm
{
    SplitCandidate split;
    Rational coefficient;
};

struct SplitDecomposition
{
    Subdivision subdivision;
    /** Splits in the secondary cone of A^ω, with their coherency indices. */
    std::vector<SplitTerm> terms;
    HeightFunction prime_part;
    bool coherent = false;
    bool prime_is_split_prime = false;
};

/**
 * ω = ω_0 + Σ λ_S ω_S with λ_S the coherency index of ω with respect to the
 * split heights ω_S lying in the secondary cone of A^ω.  For Δ(2,n) the
 * candidates default to hypersimplex_split_candidates(n).
 */
SplitDecomposition split_decompose(const PointConfiguration& config, const HeightFunction& omega,
                                   const std::vector<SplitCandidate>* candidates = nullptr);

/** Whether the heights lie in the closed cone (inequalities >= 0, equations = 0). */
bool cone_contains(const HCone& cone, const QVector& v);

}  // namespace secfan
