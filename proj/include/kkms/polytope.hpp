/**
 * V-representation polytopes with explicit face lattices.
 *
 * A polytope stores its ambient vertex coordinates together with an exact
 * affine chart (base point + basis of the affine hull), so simplices realized
 * on the hyperplane sum(x) = 1 and product polytopes coexist with
 * full-dimensional input. Facet inequalities live in chart coordinates; all
 * membership, support-face and cone queries are exact.
 *
 * Faces are indexed by id, ordered by (dimension, lexicographic vertex set),
 * so "lowest-index face" tie-breaking is well-defined across runs. The id of
 * the vertex face {v} is v itself, and the last id is the whole polytope.
 */

#ifndef KKMS_POLYTOPE_HPP
#define KKMS_POLYTOPE_HPP

#include "kkms/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace kkms {

struct Face
{
    int id = -1;
    int dim = -1;
    std::vector<int> vertices;  // sorted indices into the polytope vertex list
    RVector barycenter;         // exact average of the face's vertices
};

class Polytope
{
  public:
    /**
     * The k-simplex with vertex i at standard basis vector e_i of R^{k+1},
     * on the hyperplane sum(x) = 1; all 2^(k+1)-1 nonempty faces.
     */
    static Polytope simplex(int k);

    /**
     * Face lattice of a full-dimensional vertex set, by exact facet
     * enumeration and equality-set closure. Throws InvalidInput when the
     * input is not full-dimensional or contains a non-vertex point.
     */
    static Polytope from_vertices(const std::vector<RVector>& vertices);

    /**
     * The d-fold product. Vertices are d-tuples in lexicographic order
     * (first coordinate most significant); the lattice is built
     * combinatorially from d-tuples of factor faces.
     */
    static Polytope product(const Polytope& p, int d);

    /** The same polytope shifted by delta (lattice and chart rows unchanged). */
    Polytope translated(const RVector& delta) const;

    int dim() const { return dim_; }
    Eigen::Index ambient_dim() const { return ambient_dim_; }
    const std::vector<RVector>& vertices() const { return vertices_; }
    const std::vector<Face>& faces() const { return faces_; }
    const Face& face(int id) const { return faces_.at(static_cast<std::size_t>(id)); }
    int full_face_id() const { return static_cast<int>(faces_.size()) - 1; }

    /** Face ids contained in `id` (vertex-set inclusion), ascending, inclusive. */
    const std::vector<int>& subfaces_of(int id) const;

    std::optional<int> face_by_vertex_set(const std::vector<int>& sorted_vertices) const;

    /** Lattice meet; nullopt encodes the empty face. */
    std::optional<int> intersect_faces(int a, int b) const;

    /** Chart coordinates of an affine-hull point; nullopt off the hull. */
    std::optional<RVector> to_chart(const RVector& x) const;
    RVector from_chart(const RVector& u) const;
    const RVector& chart_origin() const { return chart_origin_; }
    const RMatrix& chart_basis() const { return chart_basis_; }

    /** Facet inequalities a.u <= b in chart coordinates. */
    const std::vector<std::pair<RVector, Rational>>& facet_rows() const { return facet_rows_; }
    const std::vector<std::vector<int>>& facet_vertex_sets() const { return facet_vertex_sets_; }

    bool contains(const RVector& x) const;

    /**
     * The unique minimal face containing x: intersection of the facets tight
     * at x. Throws InvalidInput when x is outside the polytope.
     */
    int support_face(const RVector& x) const;

    /**
     * Whether some positive multiple of x lies in the face (membership of
     * x != 0 in the cone of the face over the origin). Requires 0 in P.
     */
    bool cone_contains(int face_id, const RVector& x) const;

    /**
     * The scaling certificate behind cone_contains: lambda > 0 with
     * lambda*x in the face, or nullopt. Returns lambda = 1 whenever x
     * already lies in the face.
     */
    std::optional<std::pair<Rational, RVector>> cone_scale_to_face(int face_id,
                                                                   const RVector& x) const;

    /** Maximum pairwise squared vertex distance (ambient metric). */
    Rational squared_diameter() const;

  private:
    Polytope() = default;
    void finalize_lattice(std::vector<std::vector<int>> face_vertex_sets);
    void index_faces();

    Eigen::Index ambient_dim_ = 0;
    int dim_ = 0;
    std::vector<RVector> vertices_;
    RVector chart_origin_;
    RMatrix chart_basis_;                // ambient_dim x dim, full column rank
    std::vector<RVector> chart_vertices_;
    std::vector<std::pair<RVector, Rational>> facet_rows_;
    std::vector<std::vector<int>> facet_vertex_sets_;
    std::vector<Face> faces_;
    std::vector<std::vector<int>> subfaces_;
};

}  // namespace kkms

#endif
