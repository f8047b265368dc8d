/**
 * Subdivisions of point configurations: regular subdivisions from heights,
 * dual graphs, and combinatorial predicates on them.
 */
#pragma once

#include "secfan/configuration.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace secfan {

/** Maximal cells as sorted point-index lists; the list itself is sorted. */
struct Subdivision
{
    std::vector<Cell> cells;

    Subdivision() = default;
    explicit Subdivision(std::vector<Cell> c);

    std::size_t spread() const { return cells.size(); }
    bool is_triangulation(int dim) const;

    bool operator==(const Subdivision&) const = default;
    auto operator<=>(const Subdivision&) const = default;
};

/** Projected lower facets of the lifted configuration. */
Subdivision regular_subdivision(const PointConfiguration& config, const HeightFunction& heights);

/**
 * Checks that `s` is a polyhedral subdivision of the configuration: cells are
 * full dimensional, none contains another, volumes sum to the total, and
 * any two cells meet in a common face.  Throws InvalidInput otherwise.
 */
void validate_subdivision(const PointConfiguration& config, const Subdivision& s);

struct DualGraph
{
    std::size_t nodes = 0;
    /** Edges (i<j) between cells sharing a codimension one face, sorted. */
    std::vector<std::pair<int, int>> edges;
    /** walls[e] = point indices of the shared face of edge e. */
    std::vector<Cell> walls;

    bool is_simple() const;
    bool is_connected() const;
    bool is_complete() const;
};

DualGraph dual_graph(const PointConfiguration& config, const Subdivision& s);

bool is_split(const Subdivision& s);
/** Complete dual graph: sufficient (not necessary) for being coarsest. */
bool is_coarsest_by_complete_dual(const PointConfiguration& config, const Subdivision& s);

/**
 * For a coarsening `coarse` of `fine`, checks that mapping each fine cell to
 * the coarse cell containing it turns the dual graph of `fine` into the dual
 * graph of `coarse` by edge contractions.  Throws InvalidInput if the
 * subdivisions are not nested.
 */
bool coarsening_is_contraction(const PointConfiguration& config, const Subdivision& fine,
                               const Subdivision& coarse);

/** Every edge of conv(points) has direction e_i - e_j. */
bool is_matroidal_cell(const QMatrix& points);
bool all_cells_matroidal(const PointConfiguration& config, const Subdivision& s);

/** Union of the edge sets of all cells. */
std::vector<std::pair<int, int>> subdivision_edges(const PointConfiguration& config, const Subdivision& s);

/**
 * Whether the heights are a tropical Plücker vector: the edge graph of the
 * induced subdivision equals the edge graph of the hypersimplex.
 */
bool is_tropical_pluecker(const PointConfiguration& config, const HeightFunction& heights);

struct MultisplitResult
{
    bool is_multisplit = false;
    int ell = 0;
};

/**
 * ℓ-split test: spread ℓ <= d+1 and every j cells (2 <= j <= ℓ) meet in an
 * interior face of codimension j-1.
 */
MultisplitResult is_multisplit(const PointConfiguration& config, const Subdivision& s);

/** Full dimensional intersections of cells; throws if they do not subdivide. */
Subdivision common_refinement(const PointConfiguration& config, const Subdivision& a, const Subdivision& b);

/** A^ω equals the common refinement of A^α and A^β; throws unless ω = α+β. */
bool is_coherent_decomposition(const PointConfiguration& config, const HeightFunction& omega,
                               const HeightFunction& alpha, const HeightFunction& beta);

Cell intersect(const Cell& a, const Cell& b);

}  // namespace secfan
