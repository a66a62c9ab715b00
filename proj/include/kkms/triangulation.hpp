/**
 * Simplicial triangulations of polytopes with support-face tracking.
 *
 * The initial triangulation cones every non-simplex face from its barycenter,
 * recursively over the face lattice, so every parent face is triangulated by
 * a subcomplex. Barycentric subdivision replaces facets by their order
 * complexes; each new vertex remembers the simplex it is the barycenter of
 * and that simplex's dimension, which drives the color assignment in the
 * colorful labeling rule.
 */

#ifndef KKMS_TRIANGULATION_HPP
#define KKMS_TRIANGULATION_HPP

#include "kkms/polytope.hpp"
#include "kkms/rational.hpp"

#include <memory>
#include <vector>

namespace kkms {

class Triangulation
{
  public:
    const Polytope& parent() const { return *parent_; }
    const std::shared_ptr<const Polytope>& parent_ptr() const { return parent_; }

    Eigen::Index num_vertices() const { return static_cast<Eigen::Index>(vertices_.size()); }
    const std::vector<RVector>& vertices() const { return vertices_; }
    const RVector& vertex(int i) const { return vertices_.at(static_cast<std::size_t>(i)); }
    const std::vector<std::vector<int>>& facets() const { return facets_; }

    /** Parent face id of the minimal face containing each vertex. */
    int support(int vertex) const { return support_.at(static_cast<std::size_t>(vertex)); }

    /** Dimension of the simplex this vertex is the barycenter of. */
    int source_dim(int vertex) const { return source_dim_.at(static_cast<std::size_t>(vertex)); }

    /** That simplex, as vertex indices of the subdivided triangulation. */
    const std::vector<int>& source_simplex(int vertex) const
    {
        return source_simplex_.at(static_cast<std::size_t>(vertex));
    }

    int level() const { return level_; }

    /** Max over facets of the max pairwise squared vertex distance. */
    Rational max_facet_diameter_sq() const;

    /** Sum over facets of |det| / k! in chart coordinates. */
    Rational facet_volume_sum() const;

    /**
     * Exact structural checks: nondegenerate facets and a support map that
     * agrees with support_face on every vertex. Throws on violation.
     */
    void validate() const;

    friend Triangulation initial_triangulation(std::shared_ptr<const Polytope> p);
    friend Triangulation barycentric_subdivision(const Triangulation& t);

  private:
    std::shared_ptr<const Polytope> parent_;
    std::vector<RVector> vertices_;        // ambient coordinates
    std::vector<RVector> chart_vertices_;  // parent-chart coordinates
    std::vector<std::vector<int>> facets_; // sorted (k+1)-tuples
    std::vector<int> support_;
    std::vector<int> source_dim_;
    std::vector<std::vector<int>> source_simplex_;
    int level_ = 0;
};

/**
 * Triangulation whose vertices are the parent's vertices plus one barycenter
 * per non-simplex face (recursive boundary coning).
 */
Triangulation initial_triangulation(std::shared_ptr<const Polytope> p);

/** Order-complex subdivision; facet count multiplies by (k+1)!. */
Triangulation barycentric_subdivision(const Triangulation& t);

/**
 * Repeated barycentric subdivision until every facet diameter is at most
 * eps (compared via squared distances). Requires eps > 0.
 */
Triangulation refine_to_diameter(Triangulation t, const Rational& eps);

}  // namespace kkms

#endif
