#include "secfan/envelope.hpp"

#include "secfan/linalg.hpp"

#include <algorithm>
#include <set>

namespace secfan {

Envelope envelope(const PointConfiguration& config, const HeightFunction& heights)
{
    Envelope env;
    env.heights = heights;
    env.subdivision = regular_subdivision(config, heights);
    const QMatrix& h = config.homogenized();
    for (const auto& cell : env.subdivision.cells) {
        std::vector<QVector> columns(h.cols(), QVector(cell.size()));
        QVector rhs(cell.size());
        for (std::size_t r = 0; r < cell.size(); ++r) {
            auto i = static_cast<std::size_t>(cell[r]);
            for (std::size_t c = 0; c < h.cols(); ++c)
                columns[c][r] = h(i, c);
            rhs[r] = -heights[i];
        }
        auto x = solve_combination(columns, rhs);
        if (!x)
            throw InvariantViolation("envelope: lower facet heights are not affine on the cell");
        env.vertices.push_back(std::move(*x));
    }
    return env;
}

namespace {

Rational slack(const PointConfiguration& config, const QVector& x, const HeightFunction& heights, std::size_t i)
{
    return dot(config.homogenized().row(i), x) + heights[i];
}

}  // namespace

Cell dual_cell(const PointConfiguration& config, const Envelope& env, std::size_t vertex)
{
    Cell c;
    for (std::size_t i = 0; i < config.size(); ++i) {
        Rational s = slack(config, env.vertices.at(vertex), env.heights, i);
        if (s < 0)
            throw InvariantViolation("dual_cell: point violates the envelope inequality");
        if (s == 0)
            c.push_back(static_cast<int>(i));
    }
    return c;
}

std::vector<const TightSpanFace*> TightSpan::faces_of_dim(int dim) const
{
    std::vector<const TightSpanFace*> out;
    for (const auto& f : faces)
        if (f.dim == dim)
            out.push_back(&f);
    return out;
}

TightSpan tight_span(const PointConfiguration& config, const HeightFunction& heights, int max_dim)
{
    TightSpan ts;
    ts.env = envelope(config, heights);
    const int d = config.dim();
    ts.max_dim = max_dim < 0 ? d : std::min(max_dim, d);
    const auto& cells = ts.env.subdivision.cells;

    // interior faces of the subdivision = intersections of maximal cells off the boundary
    std::set<Cell> seen(cells.begin(), cells.end());
    std::vector<Cell> queue(cells.begin(), cells.end());
    for (std::size_t q = 0; q < queue.size(); ++q) {
        Cell face = queue[q];
        for (const auto& c : cells) {
            Cell g = intersect(face, c);
            if (g.empty() || g.size() == face.size() || seen.count(g))
                continue;
            if (config.on_boundary(g))
                continue;
            if (d - affine_dim(config.chart_points(), g) > ts.max_dim)
                continue;
            seen.insert(g);
            queue.push_back(std::move(g));
        }
    }
    for (const auto& g : seen) {
        TightSpanFace f;
        f.dual_face = g;
        f.dim = d - affine_dim(config.chart_points(), g);
        for (std::size_t i = 0; i < cells.size(); ++i)
            if (std::includes(cells[i].begin(), cells[i].end(), g.begin(), g.end()))
                f.vertices.push_back(static_cast<int>(i));
        ts.faces.push_back(std::move(f));
    }
    std::sort(ts.faces.begin(), ts.faces.end(), [](const TightSpanFace& a, const TightSpanFace& b) {
        return std::tie(a.dim, a.vertices) < std::tie(b.dim, b.vertices);
    });
    return ts;
}

std::optional<Rational> coherency_index(const PointConfiguration& config, const Envelope& omega,
                                        const Envelope& omega_prime)
{
    if (omega_prime.subdivision.spread() < 2)
        return std::nullopt;
    std::optional<Rational> outer;
    for (const auto& x : omega.vertices) {
        std::optional<Rational> middle;
        for (std::size_t j = 0; j < omega_prime.vertices.size(); ++j) {
            const auto& xp = omega_prime.vertices[j];
            const Cell& cell = omega_prime.subdivision.cells[j];
            std::optional<Rational> inner;
            for (std::size_t i = 0; i < config.size(); ++i) {
                if (std::binary_search(cell.begin(), cell.end(), static_cast<int>(i)))
                    continue;
                Rational den = slack(config, xp, omega_prime.heights, i);
                if (den <= 0)
                    throw InvariantViolation("coherency_index: point outside a cell is not strictly above it");
                Rational ratio = slack(config, x, omega.heights, i) / den;
                if (!inner || ratio < *inner)
                    inner = ratio;
            }
            if (inner && (!middle || *inner > *middle))
                middle = inner;
        }
        if (middle && (!outer || *middle < *outer))
            outer = middle;
    }
    return outer;
}

std::optional<Rational> coherency_index(const PointConfiguration& config, const HeightFunction& omega,
                                        const HeightFunction& omega_prime)
{
    return coherency_index(config, envelope(config, omega), envelope(config, omega_prime));
}

}  // namespace secfan
