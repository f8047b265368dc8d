/**
 * Polyhedral cones in both descriptions and the double description method.
 *
 * An `HCone` is {x : a.x >= 0 for all inequalities a, e.x = 0 for all
 * equations e}.  A `VCone` is cone(rays) + span(lineality_basis).  Rays are
 * reported in a canonical form: reduced modulo the lineality space (zero in
 * the pivot columns of the reduced echelon lineality basis), scaled to
 * primitive integer vectors, and sorted lexicographically.  Two calls on
 * equivalent inputs therefore produce identical output.
 */
#pragma once

#include "secfan/linalg.hpp"
#include "secfan/rational.hpp"

#include <optional>
#include <vector>

namespace secfan {

struct HCone
{
    std::vector<QVector> inequalities;
    std::vector<QVector> equations;
    std::size_t ambient_dim = 0;
};

struct VCone
{
    std::vector<QVector> rays;
    std::vector<QVector> lineality_basis;
    std::size_t ambient_dim = 0;

    bool operator==(const VCone&) const = default;
};

struct DDOptions
{
    /** Abort with `ResourceLimit` once the working ray set exceeds this size (0 = unlimited). */
    std::size_t max_rays = 0;
};

/** Minimal V-description of `cone`. */
VCone dd_rays(const HCone& cone, const DDOptions& options = {});

/** Irredundant H-description of a V-described cone (the dual computation). */
HCone facets_of(const VCone& cone);

/**
 * Removes redundant inequalities given the cone's generators: implicit
 * equalities move to the equations, which become a reduced echelon basis of
 * the orthogonal complement of the cone's span; each facet keeps a single
 * inequality, reduced modulo the equations and made primitive.
 */
HCone minimize(const HCone& cone, const VCone& generators);

std::size_t cone_dim(const VCone& cone);
std::size_t cone_dim(const HCone& cone);

/**
 * A point satisfying every inequality strictly and every equation exactly,
 * or nothing when the inequalities force an equality.
 */
std::optional<QVector> strict_interior_point(const HCone& cone);
std::optional<QVector> strict_interior_point(const HCone& cone, const VCone& generators);

/** Canonical scaling of a ray: primitive integer vector, direction kept. */
QVector normalize_ray(const QVector& v);
/** Canonical scaling of a line: primitive integer vector with positive leading entry. */
QVector normalize_line(const QVector& v);

bool lex_less(const QVector& a, const QVector& b);

}  // namespace secfan
