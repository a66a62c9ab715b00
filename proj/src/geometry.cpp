#include "kkms/geometry.hpp"

#include "kkms/errors.hpp"
#include "kkms/linprog.hpp"

#include <string>

namespace kkms {

Halfspace::Halfspace(RVector n, HalfspaceKind k) : normal(std::move(n)), kind(k)
{
    if (normal.size() == 0 || normal.isZero())
        throw InvalidInput("halfspace normal must be nonzero");
}

bool Halfspace::contains(const RVector& y) const
{
    const Rational v = dot(normal, y);
    switch (kind)
    {
        case HalfspaceKind::BoundaryHyperplane: return v == 0;
        case HalfspaceKind::ClosedHalfspace: return v >= 0;
        case HalfspaceKind::OpenHalfspace: return v > 0;
    }
    return false;
}

Rational dot(const RVector& a, const RVector& b)
{
    if (a.size() != b.size())
        throw DimensionMismatch("dot of points with dimensions " + std::to_string(a.size()) +
                                " and " + std::to_string(b.size()));
    return a.dot(b);
}

namespace {

void verify_hull_certificate(const std::vector<RVector>& points, const HullCertificate& cert)
{
    const Eigen::Index dim = points.front().size();
    if (cert.in_hull)
    {
        Rational total = 0;
        RVector combo = RVector::Zero(dim);
        for (std::size_t i = 0; i < points.size(); ++i)
        {
            const Rational& w = cert.weights(static_cast<Eigen::Index>(i));
            if (w < 0)
                throw LpInternalError("hull witness has a negative weight");
            total += w;
            combo += w * points[i];
        }
        if (total != 1 || !combo.isZero())
            throw LpInternalError("hull witness does not reproduce the origin");
    }
    else
    {
        for (const RVector& p : points)
            if (dot(cert.separator, p) <= 0)
                throw LpInternalError("separator fails strictness on a point");
    }
}

}  // namespace

HullCertificate origin_in_hull(const std::vector<RVector>& points)
{
    if (points.empty())
        throw InvalidInput("origin_in_hull on an empty point list");
    const Eigen::Index dim = points.front().size();
    for (const RVector& p : points)
        if (p.size() != dim)
            throw DimensionMismatch("points of mixed dimensions in hull test");

    HullCertificate cert;

    // A listed origin short-circuits: unit weight on its first occurrence.
    for (std::size_t i = 0; i < points.size(); ++i)
    {
        if (points[i].isZero())
        {
            cert.in_hull = true;
            cert.weights = RVector::Zero(static_cast<Eigen::Index>(points.size()));
            cert.weights(static_cast<Eigen::Index>(i)) = 1;
            verify_hull_certificate(points, cert);
            return cert;
        }
    }

    // Feasibility of  sum w_i p_i = 0,  sum w_i = 1,  w >= 0.
    const Eigen::Index n = static_cast<Eigen::Index>(points.size());
    LinearProgram lp = LinearProgram::feasibility(n);
    for (Eigen::Index c = 0; c < dim; ++c)
    {
        RVector row(n);
        for (Eigen::Index i = 0; i < n; ++i)
            row(i) = points[static_cast<std::size_t>(i)](c);
        lp.add_row(row, RowSense::EQ, 0);
    }
    lp.add_row(RVector::Ones(n), RowSense::EQ, 1);

    const LpResult res = solve(lp);
    if (res.status == LpStatus::Optimal)
    {
        cert.in_hull = true;
        cert.weights = res.primal;
    }
    else
    {
        // Farkas vector y = (u, s): u.p_i + s <= 0 for all i and s > 0,
        // so c = -u separates with margin at least s.
        cert.in_hull = false;
        cert.separator = -res.farkas.head(dim);
    }
    verify_hull_certificate(points, cert);
    return cert;
}

HullCertificate point_in_hull(const RVector& target, const std::vector<RVector>& points)
{
    std::vector<RVector> shifted;
    shifted.reserve(points.size());
    for (const RVector& p : points)
    {
        if (p.size() != target.size())
            throw DimensionMismatch("hull point dimension differs from target");
        shifted.push_back(p - target);
    }
    return origin_in_hull(shifted);
}

bool scale_invariance_check(const std::vector<RVector>& points, const std::vector<Rational>& alphas)
{
    if (points.size() != alphas.size())
        throw InvalidInput("one scale factor per point is required");
    std::vector<RVector> scaled;
    scaled.reserve(points.size());
    for (std::size_t i = 0; i < points.size(); ++i)
    {
        if (alphas[i] <= 0)
            throw InvalidInput("scale factors must be positive");
        scaled.push_back(alphas[i] * points[i]);
    }
    return origin_in_hull(points).in_hull == origin_in_hull(scaled).in_hull;
}

}  // namespace kkms
