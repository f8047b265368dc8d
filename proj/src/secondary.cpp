#include "secfan/secondary.hpp"

#include "secfan/dissimilarity.hpp"
#include "secfan/linalg.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace secfan {

namespace {

/** Indices of an affine basis of the cell (d+1 points). */
std::vector<int> affine_basis(const PointConfiguration& config, const Cell& cell)
{
    RowSpace span;
    span.cols = config.homogenized().cols();
    std::vector<int> basis;
    for (int i : cell)
        if (span.insert(config.homogenized().row_vector(static_cast<std::size_t>(i))))
            basis.push_back(i);
    if (basis.size() != span.cols)
        throw InvalidInput("subdivision cell is not full dimensional");
    return basis;
}

/** Row e_p - sum mu_b e_b where (p,1) = sum mu_b (b,1). */
QVector interpolation_row(const PointConfiguration& config, const std::vector<int>& basis, int p)
{
    const QMatrix& h = config.homogenized();
    std::vector<QVector> rows;
    for (int b : basis)
        rows.push_back(h.row_vector(static_cast<std::size_t>(b)));
    auto mu = solve_combination(rows, h.row_vector(static_cast<std::size_t>(p)));
    if (!mu)
        throw InvariantViolation("affine basis does not span the configuration");
    QVector row(config.size());
    row[static_cast<std::size_t>(p)] += 1;
    for (std::size_t i = 0; i < basis.size(); ++i)
        row[static_cast<std::size_t>(basis[i])] -= (*mu)[i];
    return row;
}

void add_unique(std::vector<QVector>& rows, std::set<QVector>& seen, QVector row, bool line)
{
    if (is_zero(row))
        return;
    row = line ? normalize_line(row) : normalize_ray(row);
    if (seen.insert(row).second)
        rows.push_back(std::move(row));
}

}  // namespace

HCone secondary_cone_raw(const PointConfiguration& config, const Subdivision& s)
{
    HCone cone;
    cone.ambient_dim = config.size();
    std::set<QVector> seen_ineq;
    std::set<QVector> seen_eq;
    for (const auto& cell : s.cells) {
        auto basis = affine_basis(config, cell);
        for (std::size_t p = 0; p < config.size(); ++p) {
            int pi = static_cast<int>(p);
            if (std::find(basis.begin(), basis.end(), pi) != basis.end())
                continue;
            QVector row = interpolation_row(config, basis, pi);
            if (std::binary_search(cell.begin(), cell.end(), pi))
                add_unique(cone.equations, seen_eq, std::move(row), true);
            else
                add_unique(cone.inequalities, seen_ineq, std::move(row), false);
        }
    }
    return cone;
}

HCone secondary_cone(const PointConfiguration& config, const Subdivision& s)
{
    HCone raw = secondary_cone_raw(config, s);
    return minimize(raw, dd_rays(raw));
}

HCone wall_cone(const PointConfiguration& config, const Subdivision& triangulation)
{
    const int d = config.dim();
    if (!triangulation.is_triangulation(d))
        throw InvalidInput("wall_cone: not a triangulation");
    HCone cone;
    cone.ambient_dim = config.size();
    std::set<QVector> seen;
    std::map<Cell, std::vector<std::size_t>> by_facet;
    for (std::size_t c = 0; c < triangulation.cells.size(); ++c) {
        const Cell& cell = triangulation.cells[c];
        for (std::size_t drop = 0; drop < cell.size(); ++drop) {
            Cell facet;
            for (std::size_t i = 0; i < cell.size(); ++i)
                if (i != drop)
                    facet.push_back(cell[i]);
            by_facet[facet].push_back(c);
        }
    }
    for (const auto& [facet, owners] : by_facet) {
        if (owners.size() == 1)
            continue;
        if (owners.size() != 2)
            throw InvalidInput("wall_cone: a facet lies in more than two simplices");
        const Cell& first = triangulation.cells[owners[0]];
        const Cell& second = triangulation.cells[owners[1]];
        int apex = -1;
        for (int i : second)
            if (!std::binary_search(facet.begin(), facet.end(), i))
                apex = i;
        add_unique(cone.inequalities, seen, interpolation_row(config, first, apex), false);
    }
    return cone;
}

std::size_t secondary_cone_dim(const PointConfiguration& config, const Subdivision& s)
{
    return cone_dim(secondary_cone_raw(config, s));
}

bool is_coarsest(const PointConfiguration& config, const HeightFunction& heights)
{
    Subdivision s = regular_subdivision(config, heights);
    if (s.spread() < 2)
        throw InvalidInput("is_coarsest: the heights induce the trivial subdivision");
    return secondary_cone_dim(config, s) == static_cast<std::size_t>(config.dim()) + 2;
}

std::optional<QVector> regular_heights(const PointConfiguration& config, const Subdivision& triangulation)
{
    HCone cone = wall_cone(config, triangulation);
    return strict_interior_point(cone);
}

bool is_regular_triangulation(const PointConfiguration& config, const Subdivision& triangulation)
{
    return regular_heights(config, triangulation).has_value();
}

namespace {

std::vector<SecondaryRay> rays_with_subdivisions(const PointConfiguration& config, const VCone& v)
{
    std::vector<SecondaryRay> out;
    for (const auto& r : v.rays)
        out.push_back({r, regular_subdivision(config, r)});
    return out;
}

}  // namespace

std::vector<SecondaryRay> secondary_rays(const PointConfiguration& config, const Subdivision& triangulation)
{
    HCone cone = wall_cone(config, triangulation);
    VCone v = dd_rays(cone);
    if (!strict_interior_point(cone, v))
        throw InvalidInput("secondary_rays: the triangulation is not regular");
    return rays_with_subdivisions(config, v);
}

std::vector<SecondaryRay> secondary_rays_of_subdivision(const PointConfiguration& config, const Subdivision& s)
{
    HCone cone = secondary_cone_raw(config, s);
    VCone v = dd_rays(cone);
    if (!strict_interior_point(cone, v))
        throw InvalidInput("secondary_rays: the subdivision is not regular");
    return rays_with_subdivisions(config, v);
}

std::vector<Subdivision> flips(const PointConfiguration& config, const Subdivision& triangulation)
{
    const int d = config.dim();
    if (!triangulation.is_triangulation(d))
        throw InvalidInput("flips: not a triangulation");
    const QMatrix& h = config.homogenized();
    std::set<Cell> cells(triangulation.cells.begin(), triangulation.cells.end());

    // cells containing a given face
    auto star = [&](const Cell& face) {
        std::vector<Cell> out;
        for (const auto& c : triangulation.cells)
            if (std::includes(c.begin(), c.end(), face.begin(), face.end()))
                out.push_back(c);
        return out;
    };

    std::set<std::pair<Cell, Cell>> circuits_seen;
    std::set<Subdivision> result;
    auto g = dual_graph(config, triangulation);
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        const Cell& s1 = triangulation.cells[static_cast<std::size_t>(g.edges[e].first)];
        const Cell& s2 = triangulation.cells[static_cast<std::size_t>(g.edges[e].second)];
        Cell support;
        std::set_union(s1.begin(), s1.end(), s2.begin(), s2.end(), std::back_inserter(support));

        // affine dependence on the d+2 support points
        std::vector<QVector> rows(h.cols(), QVector(support.size()));
        for (std::size_t j = 0; j < support.size(); ++j)
            for (std::size_t c = 0; c < h.cols(); ++c)
                rows[c][j] = h(static_cast<std::size_t>(support[j]), c);
        auto kernel = nullspace(rows, support.size());
        if (kernel.size() != 1)
            throw InvariantViolation("flips: adjacent simplices do not span a circuit");
        const QVector& dep = kernel[0];

        int a = -1;
        for (int i : s1)
            if (!std::binary_search(s2.begin(), s2.end(), i))
                a = i;
        auto pos_a = static_cast<std::size_t>(std::lower_bound(support.begin(), support.end(), a) - support.begin());
        const int side = sgn(dep[pos_a]);
        Cell zplus;
        Cell zminus;
        Cell zall;
        for (std::size_t j = 0; j < support.size(); ++j) {
            int s = sgn(dep[j]);
            if (s == 0)
                continue;
            zall.push_back(support[j]);
            (s == side ? zplus : zminus).push_back(support[j]);
        }
        if (!circuits_seen.insert({zplus, zminus}).second)
            continue;

        // every Z \ {z}, z in Z+, must be a face with one and the same link
        std::optional<std::set<Cell>> link;
        bool flippable = true;
        for (int z : zplus) {
            Cell face;
            for (int x : zall)
                if (x != z)
                    face.push_back(x);
            std::set<Cell> here;
            for (const auto& c : star(face)) {
                Cell rest;
                std::set_difference(c.begin(), c.end(), face.begin(), face.end(), std::back_inserter(rest));
                here.insert(std::move(rest));
            }
            if (here.empty() || (link && *link != here)) {
                flippable = false;
                break;
            }
            link = std::move(here);
        }
        if (!flippable)
            continue;

        std::set<Cell> next = cells;
        for (int z : zplus)
            for (const auto& l : *link) {
                Cell c;
                for (int x : zall)
                    if (x != z)
                        c.push_back(x);
                c.insert(c.end(), l.begin(), l.end());
                std::sort(c.begin(), c.end());
                next.erase(c);
            }
        for (int z : zminus)
            for (const auto& l : *link) {
                Cell c;
                for (int x : zall)
                    if (x != z)
                        c.push_back(x);
                c.insert(c.end(), l.begin(), l.end());
                std::sort(c.begin(), c.end());
                next.insert(std::move(c));
            }
        result.insert(Subdivision(std::vector<Cell>(next.begin(), next.end())));
    }
    return {result.begin(), result.end()};
}

std::vector<Integer> gkz_vector(const PointConfiguration& config, const Subdivision& triangulation)
{
    std::vector<Integer> out(config.size(), 0);
    for (const auto& c : triangulation.cells) {
        Integer v = config.volume(c);
        for (int i : c)
            out[static_cast<std::size_t>(i)] += v;
    }
    return out;
}

Subdivision seed_triangulation(const PointConfiguration& config, std::uint64_t seed)
{
    const int d = config.dim();
    if (const auto& spec = config.hypersimplex(); spec && spec->k == 2 && spec->n >= 4) {
        Subdivision s = regular_subdivision(config, thrackle(spec->n).as_heights());
        if (s.is_triangulation(d))
            return s;
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> dist(0, 1L << 20);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        HeightFunction h(config.size());
        for (auto& x : h)
            x = dist(rng);
        Subdivision s = regular_subdivision(config, h);
        if (s.is_triangulation(d))
            return s;
    }
    throw InvariantViolation("seed_triangulation: no generic lifting found");
}

}  // namespace secfan
