#include "secfan/subdivision.hpp"

#include "secfan/cone.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

namespace secfan {

Subdivision::Subdivision(std::vector<Cell> c) : cells(std::move(c))
{
    for (auto& cell : cells)
        std::sort(cell.begin(), cell.end());
    std::sort(cells.begin(), cells.end());
}

bool Subdivision::is_triangulation(int dim) const
{
    return std::all_of(cells.begin(), cells.end(),
                       [&](const Cell& c) { return static_cast<int>(c.size()) == dim + 1; });
}

Cell intersect(const Cell& a, const Cell& b)
{
    Cell out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Subdivision regular_subdivision(const PointConfiguration& config, const HeightFunction& heights)
{
    if (config.dim() == 0) {
        return Subdivision({Cell{0}});
    }
    return Subdivision(lower_facets(config.lifted(heights)));
}

namespace {

/** Whether two cells meet in a common face, via a weakly separating hyperplane. */
bool meet_properly(const PointConfiguration& config, const Cell& p, const Cell& q)
{
    const QMatrix& h = config.homogenized();
    HCone cone;
    cone.ambient_dim = h.cols();
    Cell common = intersect(p, q);
    for (int c : common)
        cone.equations.push_back(h.row_vector(static_cast<std::size_t>(c)));
    for (int i : p)
        if (!std::binary_search(common.begin(), common.end(), i))
            cone.inequalities.push_back(h.row_vector(static_cast<std::size_t>(i)));
    for (int i : q)
        if (!std::binary_search(common.begin(), common.end(), i)) {
            QVector v = h.row_vector(static_cast<std::size_t>(i));
            for (auto& x : v)
                x = -x;
            cone.inequalities.push_back(std::move(v));
        }
    return strict_interior_point(cone).has_value();
}

}  // namespace

void validate_subdivision(const PointConfiguration& config, const Subdivision& s)
{
    if (s.cells.empty())
        throw InvalidInput("subdivision has no cells");
    const int d = config.dim();
    Integer total = 0;
    for (const auto& c : s.cells) {
        if (c.empty() || c.front() < 0 || c.back() >= static_cast<int>(config.size()))
            throw InvalidInput("subdivision cell refers to a point outside the configuration");
        if (std::adjacent_find(c.begin(), c.end()) != c.end())
            throw InvalidInput("subdivision cell repeats a point");
        if (affine_dim(config.chart_points(), c) != d)
            throw InvalidInput("subdivision cell is not full dimensional");
        total += config.volume(c);
    }
    for (std::size_t i = 0; i < s.cells.size(); ++i)
        for (std::size_t j = 0; j < s.cells.size(); ++j)
            if (i != j && std::includes(s.cells[j].begin(), s.cells[j].end(), s.cells[i].begin(), s.cells[i].end()))
                throw InvalidInput("subdivision cell is contained in another cell");
    if (total != config.volume())
        throw InvalidInput("subdivision cell volumes sum to " + total.get_str() + ", expected " +
                           config.volume().get_str());
    for (std::size_t i = 0; i < s.cells.size(); ++i)
        for (std::size_t j = i + 1; j < s.cells.size(); ++j)
            if (!meet_properly(config, s.cells[i], s.cells[j]))
                throw InvalidInput("subdivision cells " + std::to_string(i) + " and " + std::to_string(j) +
                                   " do not meet in a common face");
}

bool DualGraph::is_simple() const
{
    std::set<std::pair<int, int>> seen;
    for (auto [a, b] : edges) {
        if (a == b || !seen.insert({std::min(a, b), std::max(a, b)}).second)
            return false;
    }
    return true;
}

bool DualGraph::is_connected() const
{
    if (nodes == 0)
        return true;
    std::vector<std::vector<int>> adj(nodes);
    for (auto [a, b] : edges) {
        adj[static_cast<std::size_t>(a)].push_back(b);
        adj[static_cast<std::size_t>(b)].push_back(a);
    }
    std::vector<bool> seen(nodes, false);
    std::vector<int> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[static_cast<std::size_t>(v)])
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = true;
                ++reached;
                stack.push_back(w);
            }
    }
    return reached == nodes;
}

bool DualGraph::is_complete() const { return is_simple() && edges.size() == nodes * (nodes - 1) / 2; }

DualGraph dual_graph(const PointConfiguration& config, const Subdivision& s)
{
    DualGraph g;
    g.nodes = s.cells.size();
    const int d = config.dim();
    for (std::size_t i = 0; i < s.cells.size(); ++i)
        for (std::size_t j = i + 1; j < s.cells.size(); ++j) {
            Cell common = intersect(s.cells[i], s.cells[j]);
            if (static_cast<int>(common.size()) < d)
                continue;
            if (affine_dim(config.chart_points(), common) == d - 1) {
                g.edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
                g.walls.push_back(std::move(common));
            }
        }
    return g;
}

bool is_split(const Subdivision& s) { return s.spread() == 2; }

bool is_coarsest_by_complete_dual(const PointConfiguration& config, const Subdivision& s)
{
    return s.spread() > 1 && dual_graph(config, s).is_complete();
}

bool coarsening_is_contraction(const PointConfiguration& config, const Subdivision& fine, const Subdivision& coarse)
{
    std::vector<int> image(fine.cells.size(), -1);
    for (std::size_t i = 0; i < fine.cells.size(); ++i) {
        for (std::size_t j = 0; j < coarse.cells.size(); ++j)
            if (std::includes(coarse.cells[j].begin(), coarse.cells[j].end(), fine.cells[i].begin(),
                              fine.cells[i].end())) {
                image[i] = static_cast<int>(j);
                break;
            }
        if (image[i] < 0)
            throw InvalidInput("coarsening_is_contraction: a fine cell lies in no coarse cell");
    }
    std::set<int> hit(image.begin(), image.end());
    if (hit.size() != coarse.cells.size())
        return false;

    std::set<std::pair<int, int>> induced;
    for (auto [a, b] : dual_graph(config, fine).edges) {
        int x = image[static_cast<std::size_t>(a)];
        int y = image[static_cast<std::size_t>(b)];
        if (x != y)
            induced.insert({std::min(x, y), std::max(x, y)});
    }
    auto target = dual_graph(config, coarse).edges;
    std::set<std::pair<int, int>> expected(target.begin(), target.end());
    if (induced != expected)
        return false;
    // each coarse cell's preimage must be connected in the fine graph
    std::vector<int> parent(fine.cells.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[static_cast<std::size_t>(v)] != v)
            v = parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
        return v;
    };
    for (auto [a, b] : dual_graph(config, fine).edges)
        if (image[static_cast<std::size_t>(a)] == image[static_cast<std::size_t>(b)])
            parent[static_cast<std::size_t>(find(a))] = find(b);
    std::set<std::pair<int, int>> components;
    for (std::size_t i = 0; i < fine.cells.size(); ++i)
        components.insert({image[i], find(static_cast<int>(i))});
    return components.size() == coarse.cells.size();
}

bool is_matroidal_cell(const QMatrix& points)
{
    for (auto [a, b] : polytope_edges(points)) {
        int plus = 0;
        int minus = 0;
        for (std::size_t j = 0; j < points.cols(); ++j) {
            Rational diff = points(static_cast<std::size_t>(a), j) - points(static_cast<std::size_t>(b), j);
            if (diff == 1)
                ++plus;
            else if (diff == -1)
                ++minus;
            else if (diff != 0)
                return false;
        }
        if (plus != 1 || minus != 1)
            return false;
    }
    return true;
}

bool all_cells_matroidal(const PointConfiguration& config, const Subdivision& s)
{
    return std::all_of(s.cells.begin(), s.cells.end(),
                       [&](const Cell& c) { return is_matroidal_cell(config.points().select_rows(c)); });
}

std::vector<std::pair<int, int>> subdivision_edges(const PointConfiguration& config, const Subdivision& s)
{
    std::set<std::pair<int, int>> edges;
    for (const auto& c : s.cells)
        for (auto [a, b] : polytope_edges(config.chart_points(c)))
            edges.insert({c[static_cast<std::size_t>(a)], c[static_cast<std::size_t>(b)]});
    return {edges.begin(), edges.end()};
}

bool is_tropical_pluecker(const PointConfiguration& config, const HeightFunction& heights)
{
    if (!config.hypersimplex())
        throw InvalidInput("tropical Plücker test needs a hypersimplex configuration");
    Subdivision s = regular_subdivision(config, heights);
    return subdivision_edges(config, s) == polytope_edges(config.chart_points());
}

MultisplitResult is_multisplit(const PointConfiguration& config, const Subdivision& s)
{
    MultisplitResult r;
    r.ell = static_cast<int>(s.spread());
    const int d = config.dim();
    if (r.ell < 2 || r.ell > d + 1 || r.ell > 20)
        return r;
    const unsigned full = 1U << r.ell;
    for (unsigned mask = 1; mask < full; ++mask) {
        int j = std::popcount(mask);
        if (j < 2)
            continue;
        Cell common;
        bool first = true;
        for (int c = 0; c < r.ell; ++c) {
            if (!(mask & (1U << c)))
                continue;
            common = first ? s.cells[static_cast<std::size_t>(c)] : intersect(common, s.cells[static_cast<std::size_t>(c)]);
            first = false;
        }
        if (common.empty() || config.on_boundary(common))
            return r;
        if (affine_dim(config.chart_points(), common) != d - (j - 1))
            return r;
    }
    r.is_multisplit = true;
    return r;
}

Subdivision common_refinement(const PointConfiguration& config, const Subdivision& a, const Subdivision& b)
{
    const int d = config.dim();
    std::set<Cell> found;
    for (const auto& x : a.cells)
        for (const auto& y : b.cells) {
            Cell c = intersect(x, y);
            if (static_cast<int>(c.size()) > d && affine_dim(config.chart_points(), c) == d)
                found.insert(std::move(c));
        }
    std::vector<Cell> cells;
    for (const auto& c : found) {
        bool maximal = std::none_of(found.begin(), found.end(), [&](const Cell& o) {
            return o != c && std::includes(o.begin(), o.end(), c.begin(), c.end());
        });
        if (maximal)
            cells.push_back(c);
    }
    Integer total = 0;
    for (const auto& c : cells)
        total += config.volume(c);
    if (total != config.volume())
        throw InvalidInput("common refinement is not a subdivision of the configuration points");
    return Subdivision(std::move(cells));
}

bool is_coherent_decomposition(const PointConfiguration& config, const HeightFunction& omega,
                               const HeightFunction& alpha, const HeightFunction& beta)
{
    if (omega.size() != alpha.size() || omega.size() != beta.size())
        throw InvalidInput("coherence test: height functions differ in length");
    for (std::size_t i = 0; i < omega.size(); ++i)
        if (omega[i] != alpha[i] + beta[i])
            throw InvalidInput("coherence test: omega is not alpha + beta");
    Subdivision s = regular_subdivision(config, omega);
    return common_refinement(config, regular_subdivision(config, alpha), regular_subdivision(config, beta)) == s;
}

}  // namespace secfan
