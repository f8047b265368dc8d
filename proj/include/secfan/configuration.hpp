/**
 * Point configurations: integer points in convex position together with the
 * affine chart used to make them full dimensional.
 */
#pragma once

#include "secfan/polytope.hpp"
#include "secfan/rational.hpp"

#include <optional>

namespace secfan {

struct HypersimplexSpec
{
    int k = 0;
    int n = 0;

    bool operator==(const HypersimplexSpec&) const = default;
};

/** Heights indexed by configuration points, lower hull convention. */
using HeightFunction = QVector;

class PointConfiguration
{
  public:
    PointConfiguration() = default;
    /**
     * Validates that the rows are distinct points in convex position.
     * Throws InvalidInput otherwise.
     */
    explicit PointConfiguration(QMatrix points, std::optional<HypersimplexSpec> spec = std::nullopt);

    std::size_t size() const { return points_.rows(); }
    std::size_t ambient_dim() const { return points_.cols(); }
    /** Affine dimension d of the configuration. */
    int dim() const { return static_cast<int>(chart_.dim()); }

    const QMatrix& points() const { return points_; }
    /** Points in chart coordinates, an affinely isomorphic full dimensional copy. */
    const QMatrix& chart_points() const { return chart_points_; }
    const AffineChart& chart() const { return chart_; }
    const AffineHRep& facets() const { return facets_; }
    const std::optional<HypersimplexSpec>& hypersimplex() const { return spec_; }

    /** Chart points with `heights` appended as last column. */
    QMatrix lifted(const HeightFunction& heights) const;
    /** Chart points of a subset. */
    QMatrix chart_points(const Cell& subset) const { return chart_points_.select_rows(subset); }
    /** Homogenized chart points (p, 1) as rows: the matrix A' of the envelope. */
    const QMatrix& homogenized() const { return homogenized_; }

    /** Normalized volume of the whole configuration (cached). */
    const Integer& volume() const { return volume_; }
    /** Normalized volume of conv(subset), zero if not full dimensional. */
    Integer volume(const Cell& subset) const;

    /** True if `subset` lies in some facet of conv(A). */
    bool on_boundary(const Cell& subset) const;

  private:
    QMatrix points_;
    std::optional<HypersimplexSpec> spec_;
    AffineChart chart_;
    QMatrix chart_points_;
    QMatrix homogenized_;
    AffineHRep facets_;
    Integer volume_ = 0;
};

}  // namespace secfan
