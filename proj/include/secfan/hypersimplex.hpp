/**
 * Hypersimplices Δ(k,n) with vertices in descending lexicographic order, the
 * liftings λ and κ, and the associated counting functions.
 */
#pragma once

#include "secfan/configuration.hpp"

namespace secfan {

/** Throws InvalidInput unless 1 <= k <= n-1. */
void check_hypersimplex(const HypersimplexSpec& spec);
/** Throws InvalidInput unless 2 <= k <= n-2. */
void check_proper_hypersimplex(const HypersimplexSpec& spec);

/** The 0/1 vectors with k ones, descending lexicographically. */
std::vector<std::vector<int>> hypersimplex_vertex_list(const HypersimplexSpec& spec);
PointConfiguration vertices(const HypersimplexSpec& spec);

/** Height 1 on the first n-k vertices, 0 elsewhere. */
HeightFunction lambda_lift(const HypersimplexSpec& spec);
/** Height 1 on the first C(n-1,k-1)-1 vertices, 0 elsewhere. */
HeightFunction kappa_lift(const HypersimplexSpec& spec);

/** e_1 + e_{n-k+2} + ... + e_n. */
std::vector<int> center_vertex(const HypersimplexSpec& spec);
/** 0-based position of the center vertex in the vertex order, C(n-1,k-1)-1. */
int center_label(const HypersimplexSpec& spec);

Integer binomial(int n, int k);
/** Eulerian number A(n,k) via k*A(n-1,k) + (n-k+1)*A(n-1,k-1); zero outside 1<=k<=n. */
Integer eulerian(int n, int k);

/** C(n-2, k-1): maximal spread of a matroidal subdivision. */
Integer speyer_bound(int k, int n);
/** C(n-2, k-1) - (k-1)(n-k-1) + 1. */
Integer gr_ray_bound(int k, int n);

}  // namespace secfan
