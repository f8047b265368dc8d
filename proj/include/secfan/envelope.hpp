/**
 * Envelopes E_ω(A) = {x : A'x >= -ω} and their bounded faces (tight spans),
 * plus the coherency index of one height function with respect to another.
 *
 * Envelope coordinates live in the homogenized chart space of dimension d+1.
 */
#pragma once

#include "secfan/subdivision.hpp"

#include <optional>

namespace secfan {

struct Envelope
{
    HeightFunction heights;
    Subdivision subdivision;
    /** vertices[i] is dual to subdivision.cells[i]. */
    std::vector<QVector> vertices;
};

Envelope envelope(const PointConfiguration& config, const HeightFunction& heights);

/** Points whose inequality is tight at the vertex, i.e. its dual cell. */
Cell dual_cell(const PointConfiguration& config, const Envelope& env, std::size_t vertex);

/** A bounded face of the envelope. */
struct TightSpanFace
{
    int dim = 0;
    /** Envelope vertices on the face (= maximal cells containing the dual interior face). */
    std::vector<int> vertices;
    /** The dual interior face of the subdivision. */
    Cell dual_face;
};

struct TightSpan
{
    Envelope env;
    std::vector<TightSpanFace> faces;
    int max_dim = 0;

    std::vector<const TightSpanFace*> faces_of_dim(int dim) const;
};

/**
 * Bounded faces up to dimension `max_dim` (they are dual to the interior
 * faces of the subdivision).  Use max_dim < 0 for all of them.
 */
TightSpan tight_span(const PointConfiguration& config, const HeightFunction& heights, int max_dim = 3);

/**
 * The coherency index of ω with respect to ω' (min over vertices x of E_ω,
 * max over vertices x' of E_ω', min over points v outside the dual cell of x'
 * of (<v,x> + ω(v)) / (<v,x'> + ω'(v))).  Returns nothing when ω' induces the
 * trivial subdivision, where the index is +infinity.
 */
std::optional<Rational> coherency_index(const PointConfiguration& config, const HeightFunction& omega,
                                        const HeightFunction& omega_prime);
std::optional<Rational> coherency_index(const PointConfiguration& config, const Envelope& omega,
                                        const Envelope& omega_prime);

}  // namespace secfan
