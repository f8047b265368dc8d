/**
 * Permutation groups acting on the points of a configuration, canonical
 * forms of subdivisions and vectors, and orbit sizes.
 *
 * A group is stored as the exhaustive list of its elements, each a
 * permutation of the point labels (image array).
 */
#pragma once

#include "secfan/linalg.hpp"
#include "secfan/subdivision.hpp"

#include <cstdint>
#include <string>

namespace secfan {

using Permutation = std::vector<int>;

/** Group on [n] requested by name: "trivial", "sym", "sym_x2", or explicit cycles such as "(0 1)(2 3),(0 1 2 3 4)". */
struct GroupSpec
{
    std::string kind = "sym";
    /** Generators on [n] for kind == "generators". */
    std::vector<Permutation> generators;
    /** Adjoin the 0/1 complement (only meaningful for n = 2k). */
    bool complement = false;

    static GroupSpec parse(const std::string& text);
    std::string to_string() const;
};

/** Default group of Δ(k,n): Sym(n), with the complement adjoined when n = 2k. */
GroupSpec default_group(const HypersimplexSpec& spec);

/** Permutation of vertex labels of Δ(k,n) induced by a permutation of the coordinates. */
Permutation induced_vertex_permutation(const Permutation& g, const HypersimplexSpec& spec);
/** Vertex permutation induced by v -> 1 - v; requires n = 2k. */
Permutation complement_vertex_permutation(const HypersimplexSpec& spec);

/** Closure of a generating set of permutations on [m]. */
std::vector<Permutation> generate_group(const std::vector<Permutation>& generators, std::size_t m);

class PointGroup
{
  public:
    PointGroup() = default;
    /** Elements given as point permutations (the identity is added if missing). */
    explicit PointGroup(std::vector<Permutation> elements);

    static PointGroup trivial(std::size_t points);
    static PointGroup for_hypersimplex(const HypersimplexSpec& spec, const GroupSpec& group);

    std::size_t order() const { return elements_.size(); }
    std::size_t degree() const { return degree_; }
    const std::vector<Permutation>& elements() const { return elements_; }

    Subdivision apply(const Permutation& g, const Subdivision& s) const;
    /** (g.v)[g(i)] = v[i] */
    QVector apply(const Permutation& g, const QVector& v) const;

    Subdivision canonical(const Subdivision& s) const;
    /** Number of group elements fixing `s`. */
    std::size_t stabilizer_size(const Subdivision& s) const;
    Integer orbit_size(const Subdivision& s) const;

    /**
     * Lexicographically minimal primitive image of `v`; when `lineality` is
     * given (it must be group invariant), images are first reduced modulo it.
     */
    QVector canonical(const QVector& v, const RowSpace* lineality = nullptr) const;
    Integer orbit_size(const QVector& v, const RowSpace* lineality = nullptr) const;

  private:
    std::size_t degree_ = 0;
    std::vector<Permutation> elements_;
};

/** Lineality space of the secondary fan: restrictions of affine functions. */
RowSpace affine_lineality(const PointConfiguration& config);

}  // namespace secfan
