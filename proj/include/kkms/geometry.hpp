/**
 * Exact convex-hull membership with certificates.
 *
 * Membership of the origin in a finite point hull is decided by an exact
 * feasibility LP; a positive answer carries convex weights, a negative one a
 * strictly separating functional recovered from the Farkas certificate. Both
 * certificates re-verify by direct substitution.
 */

#ifndef KKMS_GEOMETRY_HPP
#define KKMS_GEOMETRY_HPP

#include "kkms/rational.hpp"

#include <vector>

namespace kkms {

enum class HalfspaceKind { BoundaryHyperplane, ClosedHalfspace, OpenHalfspace };

/** A homogeneous halfspace/hyperplane through the origin with normal x. */
struct Halfspace
{
    RVector normal;
    HalfspaceKind kind = HalfspaceKind::ClosedHalfspace;

    Halfspace(RVector n, HalfspaceKind k);

    /** <normal,y> >= 0 / == 0 / > 0 according to the kind. */
    bool contains(const RVector& y) const;
};

/** Exact inner product; throws DimensionMismatch on unequal lengths. */
Rational dot(const RVector& a, const RVector& b);

struct HullCertificate
{
    bool in_hull = false;
    RVector weights;    // in hull: convex weights, one per point
    RVector separator;  // not in hull: c with <c, p_i> > 0 for every i
};

/**
 * Decide 0 in conv(points) exactly. Success returns verified convex weights;
 * failure returns a strict separator. Throws InvalidInput on an empty list
 * and DimensionMismatch on mixed dimensions.
 */
HullCertificate origin_in_hull(const std::vector<RVector>& points);

/** Decide target in conv(points) by translation to the origin. */
HullCertificate point_in_hull(const RVector& target, const std::vector<RVector>& points);

/**
 * Self-test: hull membership of the origin is invariant under positive
 * rescaling of each point. Always true; exercised as a property check.
 */
bool scale_invariance_check(const std::vector<RVector>& points, const std::vector<Rational>& alphas);

}  // namespace kkms

#endif
