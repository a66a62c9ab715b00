/**
 * Finite hypergraphs and their fractional matching/cover LPs.
 *
 * Vertices are 0-based indices. The duality chain nu <= nu* = tau* <= tau is
 * exact on every instance; the integer quantities live with the brute-force
 * searches in the d-interval module, the fractional ones here.
 */

#ifndef KKMS_HYPERGRAPH_HPP
#define KKMS_HYPERGRAPH_HPP

#include "kkms/linprog.hpp"
#include "kkms/rational.hpp"

#include <optional>
#include <vector>

namespace kkms {

struct Hypergraph
{
    int num_vertices = 0;
    std::vector<std::vector<int>> edges;  // sorted vertex index lists

    Hypergraph() = default;
    Hypergraph(int n, std::vector<std::vector<int>> e);

    /** Maximum edge size. */
    int rank() const;

    /** Vertex-edge incidence rows: one row per vertex, one column per edge. */
    RMatrix incidence() const;
};

struct FractionalMatching
{
    Rational value;   // nu*
    RVector weights;  // one per edge, >= 0
};

struct FractionalCover
{
    Rational value;   // tau*
    RVector weights;  // one per vertex, >= 0
};

/** nu*(H) with an optimal fractional matching. Empty edge set gives 0. */
FractionalMatching fractional_matching_number(const Hypergraph& h);

/** tau*(H) with an optimal fractional cover; equals nu*(H) exactly. */
FractionalCover fractional_cover_number(const Hypergraph& h);

/**
 * A fractional matching with every incident sum exactly 1, or nullopt when
 * none exists.
 */
std::optional<RVector> perfect_fractional_matching(const Hypergraph& h);

}  // namespace kkms

#endif
