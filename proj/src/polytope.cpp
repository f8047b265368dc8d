#include "secfan/polytope.hpp"

#include "secfan/linalg.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace secfan {

namespace {

std::vector<QVector> homogenize(const QMatrix& points)
{
    std::vector<QVector> rows;
    rows.reserve(points.rows());
    for (std::size_t i = 0; i < points.rows(); ++i) {
        QVector r = points.row_vector(i);
        r.emplace_back(1);
        rows.push_back(std::move(r));
    }
    return rows;
}

}  // namespace

AffineHRep facet_description(const QMatrix& points)
{
    if (points.rows() == 0)
        throw InvalidInput("facet_description: no points");
    HCone dual;
    dual.ambient_dim = points.cols() + 1;
    dual.inequalities = homogenize(points);
    VCone d = dd_rays(dual);

    AffineHRep out;
    out.equations = d.lineality_basis;
    for (const auto& f : d.rays) {
        Cell tight;
        for (std::size_t i = 0; i < points.rows(); ++i)
            if (sgn(dot(f, dual.inequalities[i])) == 0)
                tight.push_back(static_cast<int>(i));
        if (tight.empty())
            continue;  // the cone's apex facet, not a face of the polytope
        out.inequalities.push_back(f);
        out.tight.push_back(std::move(tight));
    }
    return out;
}

std::vector<Cell> lower_facets(const QMatrix& lifted)
{
    const std::size_t n = lifted.rows();
    const std::size_t d1 = lifted.cols();
    if (n == 0 || d1 < 2)
        throw InvalidInput("lower_facets: need lifted points with at least one coordinate and a height");
    bool all_equal = true;
    for (std::size_t i = 1; i < n && all_equal; ++i)
        for (std::size_t j = 0; j + 1 < d1; ++j)
            if (lifted(i, j) != lifted(0, j)) {
                all_equal = false;
                break;
            }
    if (all_equal)
        throw InvalidInput("lower_facets: degenerate configuration (all points equal)");

    HCone dual;
    dual.ambient_dim = d1 + 1;
    dual.inequalities = homogenize(lifted);
    QVector upward(d1 + 1);
    upward[d1 - 1] = 1;  // only normals with nonnegative height coefficient
    dual.inequalities.push_back(upward);
    VCone d = dd_rays(dual);

    std::vector<Cell> cells;
    for (const auto& f : d.rays) {
        if (sgn(f[d1 - 1]) <= 0)
            continue;
        Cell tight;
        for (std::size_t i = 0; i < n; ++i)
            if (sgn(dot(f, dual.inequalities[i])) == 0)
                tight.push_back(static_cast<int>(i));
        cells.push_back(std::move(tight));
    }
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    return cells;
}

int affine_dim(const QMatrix& points)
{
    if (points.rows() == 0)
        return -1;
    return static_cast<int>(rank(homogenize(points), points.cols() + 1)) - 1;
}

int affine_dim(const QMatrix& points, const Cell& subset) { return affine_dim(points.select_rows(subset)); }

QVector AffineChart::project(std::span<const Rational> p) const
{
    QVector out;
    out.reserve(columns.size());
    for (auto c : columns)
        out.push_back(p[c]);
    return out;
}

Integer AffineChart::simplex_volume(const QMatrix& simplex) const
{
    const std::size_t d = dim();
    if (simplex.rows() != d + 1)
        throw InvalidInput("simplex_volume: expected dim+1 vertices");
    QMatrix m(d + 1, d + 1);
    for (std::size_t i = 0; i <= d; ++i) {
        QVector q = project(simplex.row(i));
        for (std::size_t j = 0; j < d; ++j)
            m(i, j) = q[j];
        m(i, d) = 1;
    }
    Rational det = abs(determinant(std::move(m)));
    Rational vol = det / Rational(index);
    if (vol.get_den() != 1)
        throw InvalidInput("simplex_volume: vertices are not lattice points of the chart");
    return vol.get_num();
}

AffineChart make_chart(const QMatrix& points)
{
    if (points.rows() == 0)
        throw InvalidInput("make_chart: no points");
    const std::size_t N = points.cols();
    std::vector<QVector> diffs;
    for (std::size_t i = 1; i < points.rows(); ++i) {
        QVector v(N);
        for (std::size_t j = 0; j < N; ++j)
            v[j] = points(i, j) - points(0, j);
        diffs.push_back(std::move(v));
    }
    RowSpace span = row_space(diffs, N);
    AffineChart chart;
    chart.columns = span.pivots;
    if (span.rank() == 0)
        return chart;

    for (std::size_t i = 0; i < points.rows(); ++i)
        for (std::size_t j = 0; j < N; ++j)
            if (points(i, j).get_den() != 1)
                return chart;  // rational points: no lattice, index 1

    // saturated lattice of the linear span: integer kernel of its orthogonal complement
    std::vector<ZVector> complement;
    for (const auto& y : nullspace(span.rows, N))
        complement.push_back(primitive(y));
    std::vector<ZVector> basis = integer_kernel(complement, N);
    QMatrix m(basis.size(), basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < chart.columns.size(); ++j)
            m(i, j) = basis[i][chart.columns[j]];
    chart.index = Rational(abs(determinant(std::move(m)))).get_num();
    if (chart.index == 0)
        throw InvariantViolation("make_chart: degenerate lattice chart");
    return chart;
}

namespace {

class PullingTriangulator
{
  public:
    explicit PullingTriangulator(const QMatrix& points) : points_(points)
    {
        order_.resize(points.rows());
        std::iota(order_.begin(), order_.end(), 0);
        std::sort(order_.begin(), order_.end(), [&](int a, int b) {
            auto ra = points_.row(static_cast<std::size_t>(a));
            auto rb = points_.row(static_cast<std::size_t>(b));
            return std::lexicographical_compare(ra.begin(), ra.end(), rb.begin(), rb.end());
        });
        rank_.resize(points.rows());
        for (std::size_t i = 0; i < order_.size(); ++i)
            rank_[static_cast<std::size_t>(order_[i])] = static_cast<int>(i);
    }

    const std::vector<Cell>& triangulate(const Cell& face, int dim)
    {
        if (auto it = memo_.find(face); it != memo_.end())
            return it->second;
        std::vector<Cell> result;
        if (static_cast<int>(face.size()) == dim + 1) {
            result.push_back(face);
        }
        else {
            int apex = *std::min_element(face.begin(), face.end(), [&](int a, int b) {
                return rank_[static_cast<std::size_t>(a)] < rank_[static_cast<std::size_t>(b)];
            });
            AffineHRep h = facet_description(points_.select_rows(face));
            for (const auto& tight : h.tight) {
                Cell facet;
                for (int t : tight)
                    facet.push_back(face[static_cast<std::size_t>(t)]);
                if (std::find(facet.begin(), facet.end(), apex) != facet.end())
                    continue;
                for (const auto& s : triangulate(facet, dim - 1)) {
                    Cell simplex = s;
                    simplex.insert(std::upper_bound(simplex.begin(), simplex.end(), apex), apex);
                    result.push_back(std::move(simplex));
                }
            }
        }
        std::sort(result.begin(), result.end());
        return memo_.emplace(face, std::move(result)).first->second;
    }

  private:
    const QMatrix& points_;
    std::vector<int> order_;
    std::vector<int> rank_;
    std::map<Cell, std::vector<Cell>> memo_;
};

}  // namespace

std::vector<Cell> pulling_triangulation(const QMatrix& points)
{
    int dim = affine_dim(points);
    if (dim < 0)
        return {};
    Cell all(points.rows());
    std::iota(all.begin(), all.end(), 0);
    PullingTriangulator t(points);
    return t.triangulate(all, dim);
}

Integer lattice_volume(const AffineChart& chart, const QMatrix& points)
{
    if (affine_dim(points) != static_cast<int>(chart.dim()))
        return 0;
    Integer total = 0;
    for (const auto& s : pulling_triangulation(points))
        total += chart.simplex_volume(points.select_rows(s));
    return total;
}

Integer lattice_volume(const QMatrix& points)
{
    if (points.rows() == 0)
        return 0;
    return lattice_volume(make_chart(points), points);
}

std::vector<std::pair<int, int>> polytope_edges(const QMatrix& points)
{
    const std::size_t n = points.rows();
    std::vector<std::pair<int, int>> edges;
    if (n < 2)
        return edges;
    AffineHRep h = facet_description(points);
    std::vector<std::vector<bool>> on(n, std::vector<bool>(h.tight.size(), false));
    for (std::size_t f = 0; f < h.tight.size(); ++f)
        for (int i : h.tight[f])
            on[static_cast<std::size_t>(i)][f] = true;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            bool edge = true;
            for (std::size_t k = 0; k < n && edge; ++k) {
                if (k == i || k == j)
                    continue;
                bool contains = true;
                for (std::size_t f = 0; f < h.tight.size(); ++f)
                    if (on[i][f] && on[j][f] && !on[k][f]) {
                        contains = false;
                        break;
                    }
                if (contains)
                    edge = false;
            }
            if (edge)
                edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    }
    return edges;
}

}  // namespace secfan
