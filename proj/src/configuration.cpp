#include "secfan/configuration.hpp"

#include <algorithm>
#include <set>

namespace secfan {

PointConfiguration::PointConfiguration(QMatrix points, std::optional<HypersimplexSpec> spec)
    : points_(std::move(points)), spec_(spec)
{
    if (points_.rows() == 0)
        throw InvalidInput("point configuration is empty");
    std::set<QVector> seen;
    for (std::size_t i = 0; i < points_.rows(); ++i)
        if (!seen.insert(points_.row_vector(i)).second)
            throw InvalidInput("point configuration has repeated point " + std::to_string(i));

    chart_ = make_chart(points_);
    const std::size_t d = chart_.dim();
    chart_points_ = QMatrix(points_.rows(), d);
    homogenized_ = QMatrix(points_.rows(), d + 1);
    for (std::size_t i = 0; i < points_.rows(); ++i) {
        QVector q = chart_.project(points_.row(i));
        for (std::size_t j = 0; j < d; ++j) {
            chart_points_(i, j) = q[j];
            homogenized_(i, j) = q[j];
        }
        homogenized_(i, d) = 1;
    }

    facets_ = facet_description(chart_points_);
    if (points_.rows() > 1) {
        // a point is a vertex iff the facets through it meet only in it
        for (std::size_t i = 0; i < points_.rows(); ++i) {
            std::vector<bool> common(points_.rows(), true);
            for (const auto& t : facets_.tight) {
                if (!std::binary_search(t.begin(), t.end(), static_cast<int>(i)))
                    continue;
                std::vector<bool> in(points_.rows(), false);
                for (int j : t)
                    in[static_cast<std::size_t>(j)] = true;
                for (std::size_t j = 0; j < common.size(); ++j)
                    common[j] = common[j] && in[j];
            }
            if (std::count(common.begin(), common.end(), true) != 1)
                throw InvalidInput("point " + std::to_string(i) + " is not a vertex of the convex hull");
        }
    }
    Cell all(points_.rows());
    for (std::size_t i = 0; i < all.size(); ++i)
        all[i] = static_cast<int>(i);
    volume_ = volume(all);
}

QMatrix PointConfiguration::lifted(const HeightFunction& heights) const
{
    if (heights.size() != size())
        throw InvalidInput("height function has " + std::to_string(heights.size()) + " entries, expected " +
                           std::to_string(size()));
    const std::size_t d = chart_points_.cols();
    QMatrix m(size(), d + 1);
    for (std::size_t i = 0; i < size(); ++i) {
        for (std::size_t j = 0; j < d; ++j)
            m(i, j) = chart_points_(i, j);
        m(i, d) = heights[i];
    }
    return m;
}

Integer PointConfiguration::volume(const Cell& subset) const
{
    if (subset.empty())
        return 0;
    AffineChart unit;
    unit.columns.resize(chart_points_.cols());
    for (std::size_t j = 0; j < unit.columns.size(); ++j)
        unit.columns[j] = j;
    unit.index = chart_.index;
    return lattice_volume(unit, chart_points_.select_rows(subset));
}

bool PointConfiguration::on_boundary(const Cell& subset) const
{
    for (const auto& t : facets_.tight)
        if (std::includes(t.begin(), t.end(), subset.begin(), subset.end()))
            return true;
    return false;
}

}  // namespace secfan
