/**
 * Convex hulls of finite point sets: facets, lower facets of liftings,
 * edges, affine dimension and lattice volume.
 */
#pragma once

#include "secfan/cone.hpp"
#include "secfan/rational.hpp"

#include <vector>

namespace secfan {

using Cell = std::vector<int>;

/**
 * Affine inequality description of conv(points).  Each row (a, b) of length
 * ambient+1 encodes a.x + b >= 0 (inequalities) or a.x + b = 0 (equations).
 */
struct AffineHRep
{
    std::vector<QVector> inequalities;
    std::vector<QVector> equations;
    /** tight[f] = indices of the input points on facet f */
    std::vector<Cell> tight;
};

/** Irredundant facet description of the convex hull of the rows of `points`. */
AffineHRep facet_description(const QMatrix& points);

/**
 * Lower facets of the convex hull of the rows of `lifted`, whose last
 * column is the height.  A facet is lower when it admits an outer normal
 * with negative last coordinate.  Facets with more than dim+1 vertices are
 * returned whole.  When all heights are affine the single cell of all
 * points is returned.
 */
std::vector<Cell> lower_facets(const QMatrix& lifted);

/** Affine dimension of the rows; -1 for an empty set. */
int affine_dim(const QMatrix& points);
int affine_dim(const QMatrix& points, const Cell& subset);

/**
 * Coordinate chart of the affine hull of an integer point set.  Points are
 * mapped to the coordinates in `columns` (the pivot columns of their
 * difference vectors), which is injective on the affine hull.  `index` is
 * the index of the projected lattice (affine hull ∩ Z^N) in Z^columns, so
 * normalized volumes are |det| / index.
 */
struct AffineChart
{
    std::vector<std::size_t> columns;
    Integer index = 1;

    std::size_t dim() const { return columns.size(); }
    QVector project(std::span<const Rational> p) const;
    /** Normalized volume of the simplex whose vertices are the rows of `simplex`. */
    Integer simplex_volume(const QMatrix& simplex) const;
};

AffineChart make_chart(const QMatrix& points);

/**
 * Pulling triangulation of conv(points): the lexicographically smallest
 * vertex of every face is pulled.  Returns point-index simplices.
 */
std::vector<Cell> pulling_triangulation(const QMatrix& points);

/** Normalized lattice volume with respect to the lattice of the affine hull. */
Integer lattice_volume(const QMatrix& points);
/**
 * Normalized volume of conv(points) in the lattice of `chart`; zero when the
 * points do not span the chart's dimension.
 */
Integer lattice_volume(const AffineChart& chart, const QMatrix& points);

/** The 1-faces of conv(points), as sorted index pairs. */
std::vector<std::pair<int, int>> polytope_edges(const QMatrix& points);

}  // namespace secfan
