#include "kkms/polytope.hpp"

#include "kkms/errors.hpp"
#include "kkms/geometry.hpp"
#include "kkms/linprog.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace kkms {

namespace {

Eigen::Index affine_rank(const std::vector<RVector>& pts, const std::vector<int>& idx)
{
    if (idx.size() <= 1)
        return 0;
    RMatrix edges(static_cast<Eigen::Index>(idx.size()) - 1, pts[0].size());
    for (std::size_t i = 1; i < idx.size(); ++i)
        edges.row(static_cast<Eigen::Index>(i) - 1) =
            (pts[static_cast<std::size_t>(idx[i])] - pts[static_cast<std::size_t>(idx[0])])
                .transpose();
    return edges.fullPivLu().rank();
}

std::vector<int> intersect_sorted(const std::vector<int>& a, const std::vector<int>& b)
{
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::string hyperplane_key(const RVector& a, const Rational& b)
{
    return to_string(a) + "|" + to_string(b);
}

}  // namespace

void Polytope::index_faces()
{
    subfaces_.assign(faces_.size(), {});
    for (std::size_t i = 0; i < faces_.size(); ++i)
        for (std::size_t j = 0; j < faces_.size(); ++j)
            if (std::includes(faces_[i].vertices.begin(), faces_[i].vertices.end(),
                              faces_[j].vertices.begin(), faces_[j].vertices.end()))
                subfaces_[i].push_back(static_cast<int>(j));
}

void Polytope::finalize_lattice(std::vector<std::vector<int>> face_vertex_sets)
{
    std::sort(face_vertex_sets.begin(), face_vertex_sets.end());
    face_vertex_sets.erase(std::unique(face_vertex_sets.begin(), face_vertex_sets.end()),
                           face_vertex_sets.end());

    std::vector<std::pair<int, std::vector<int>>> graded;
    graded.reserve(face_vertex_sets.size());
    for (auto& vs : face_vertex_sets)
        graded.emplace_back(static_cast<int>(affine_rank(vertices_, vs)), std::move(vs));
    std::sort(graded.begin(), graded.end());

    faces_.clear();
    faces_.reserve(graded.size());
    for (std::size_t i = 0; i < graded.size(); ++i)
    {
        Face f;
        f.id = static_cast<int>(i);
        f.dim = graded[i].first;
        f.vertices = std::move(graded[i].second);
        f.barycenter = RVector::Zero(ambient_dim_);
        for (int v : f.vertices)
            f.barycenter += vertices_[static_cast<std::size_t>(v)];
        f.barycenter /= Rational(static_cast<long>(f.vertices.size()));
        faces_.push_back(std::move(f));
    }
    index_faces();
}

Polytope Polytope::simplex(int k)
{
    if (k < 0)
        throw InvalidInput("simplex dimension must be nonnegative");

    Polytope p;
    p.ambient_dim_ = k + 1;
    p.dim_ = k;
    for (int i = 0; i <= k; ++i)
    {
        RVector v = RVector::Zero(k + 1);
        v(i) = 1;
        p.vertices_.push_back(std::move(v));
    }

    p.chart_origin_ = p.vertices_.back();
    p.chart_basis_ = RMatrix::Zero(k + 1, k);
    for (int i = 0; i < k; ++i)
        p.chart_basis_.col(i) = p.vertices_[static_cast<std::size_t>(i)] - p.chart_origin_;
    for (int i = 0; i <= k; ++i)
    {
        RVector u = RVector::Zero(k);
        if (i < k)
            u(i) = 1;
        p.chart_vertices_.push_back(std::move(u));
    }

    // Facet x_i >= 0 in chart coordinates; the facet opposite vertex k is
    // sum(u) <= 1.
    for (int i = 0; i < k; ++i)
    {
        RVector a = RVector::Zero(k);
        a(i) = -1;
        std::vector<int> vs;
        for (int j = 0; j <= k; ++j)
            if (j != i)
                vs.push_back(j);
        p.facet_rows_.emplace_back(std::move(a), Rational(0));
        p.facet_vertex_sets_.push_back(std::move(vs));
    }
    if (k >= 1)
    {
        RVector a = RVector::Ones(k);
        std::vector<int> vs;
        for (int j = 0; j < k; ++j)
            vs.push_back(j);
        p.facet_rows_.emplace_back(std::move(a), Rational(1));
        p.facet_vertex_sets_.push_back(std::move(vs));
    }

    std::vector<std::vector<int>> sets;
    for (unsigned mask = 1; mask < (1u << (k + 1)); ++mask)
    {
        std::vector<int> s;
        for (int i = 0; i <= k; ++i)
            if (mask & (1u << i))
                s.push_back(i);
        sets.push_back(std::move(s));
    }
    p.finalize_lattice(std::move(sets));
    return p;
}

Polytope Polytope::from_vertices(const std::vector<RVector>& vertices)
{
    if (vertices.empty())
        throw InvalidInput("empty vertex list");
    const Eigen::Index k = vertices[0].size();
    for (const RVector& v : vertices)
        if (v.size() != k)
            throw DimensionMismatch("vertices of mixed dimensions");

    std::vector<int> all;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        all.push_back(static_cast<int>(i));
    Polytope p;
    p.vertices_ = vertices;
    p.ambient_dim_ = k;
    if (affine_rank(p.vertices_, all) != k)
        throw InvalidInput("vertex set is not full-dimensional in its ambient space");
    p.dim_ = static_cast<int>(k);

    for (std::size_t i = 0; i < vertices.size(); ++i)
    {
        std::vector<RVector> others;
        for (std::size_t j = 0; j < vertices.size(); ++j)
            if (j != i)
                others.push_back(vertices[j]);
        if (!others.empty() && point_in_hull(vertices[i], others).in_hull)
            throw InvalidInput("point " + std::to_string(i) + " (" + to_string(vertices[i]) +
                               ") is not a vertex of the hull");
    }

    // Identity chart: the polytope is full-dimensional here.
    p.chart_origin_ = RVector::Zero(k);
    p.chart_basis_ = RMatrix::Identity(k, k);
    p.chart_vertices_ = vertices;

    // Supporting-hyperplane enumeration over k-subsets of vertices.
    const int n = static_cast<int>(vertices.size());
    std::vector<int> comb(static_cast<std::size_t>(k));
    for (Eigen::Index i = 0; i < k; ++i)
        comb[static_cast<std::size_t>(i)] = static_cast<int>(i);
    std::set<std::string> seen;
    for (; k >= 1;)
    {
        RMatrix edges(k - 1, k);
        for (Eigen::Index i = 1; i < k; ++i)
            edges.row(i - 1) = (vertices[static_cast<std::size_t>(comb[static_cast<std::size_t>(i)])] -
                                vertices[static_cast<std::size_t>(comb[0])])
                                   .transpose();
        const auto lu = edges.fullPivLu();
        if (lu.rank() == k - 1)
        {
            RVector a = lu.kernel().col(0);
            Rational b = a.dot(vertices[static_cast<std::size_t>(comb[0])]);
            bool above = false, below = false;
            for (const RVector& v : vertices)
            {
                const Rational s = a.dot(v) - b;
                above = above || s > 0;
                below = below || s < 0;
            }
            if (!(above && below))
            {
                if (above)
                {
                    a = -a;
                    b = -b;
                }
                // Canonical positive scaling for deduplication.
                Rational scale = 0;
                for (Eigen::Index i = 0; i < k; ++i)
                    if (a(i) != 0)
                    {
                        scale = abs(a(i));
                        break;
                    }
                a /= scale;
                b /= scale;
                if (seen.insert(hyperplane_key(a, b)).second)
                {
                    std::vector<int> vs;
                    for (int i = 0; i < n; ++i)
                        if (a.dot(vertices[static_cast<std::size_t>(i)]) == b)
                            vs.push_back(i);
                    p.facet_rows_.emplace_back(a, b);
                    p.facet_vertex_sets_.push_back(std::move(vs));
                }
            }
        }

        // Next k-combination of {0, ..., n-1}.
        Eigen::Index pos = k - 1;
        while (pos >= 0 && comb[static_cast<std::size_t>(pos)] ==
                               n - static_cast<int>(k) + static_cast<int>(pos))
            --pos;
        if (pos < 0)
            break;
        ++comb[static_cast<std::size_t>(pos)];
        for (Eigen::Index i = pos + 1; i < k; ++i)
            comb[static_cast<std::size_t>(i)] = comb[static_cast<std::size_t>(i - 1)] + 1;
    }

    // Close the facet vertex sets under intersection; every face of the
    // polytope arises as an intersection of facets.
    std::set<std::vector<int>> closed(p.facet_vertex_sets_.begin(), p.facet_vertex_sets_.end());
    for (bool grew = true; grew;)
    {
        grew = false;
        std::vector<std::vector<int>> current(closed.begin(), closed.end());
        for (std::size_t i = 0; i < current.size(); ++i)
            for (std::size_t j = i + 1; j < current.size(); ++j)
            {
                std::vector<int> meet = intersect_sorted(current[i], current[j]);
                if (!meet.empty() && closed.insert(std::move(meet)).second)
                    grew = true;
            }
    }
    std::vector<std::vector<int>> sets(closed.begin(), closed.end());
    sets.push_back(all);
    p.finalize_lattice(std::move(sets));
    return p;
}

Polytope Polytope::product(const Polytope& p, int d)
{
    if (d < 1)
        throw InvalidInput("product multiplicity must be at least 1");
    if (d == 1)
        return p;

    Polytope q;
    const Eigen::Index n = p.ambient_dim_;
    const int m = static_cast<int>(p.vertices_.size());
    q.ambient_dim_ = n * d;
    q.dim_ = p.dim_ * d;

    long total = 1;
    for (int t = 0; t < d; ++t)
        total *= m;
    for (long flat = 0; flat < total; ++flat)
    {
        RVector v(q.ambient_dim_);
        RVector u(static_cast<Eigen::Index>(p.dim_) * d);
        long rest = flat;
        for (int t = d - 1; t >= 0; --t)
        {
            const int i = static_cast<int>(rest % m);
            rest /= m;
            v.segment(t * n, n) = p.vertices_[static_cast<std::size_t>(i)];
            u.segment(static_cast<Eigen::Index>(t) * p.dim_, p.dim_) =
                p.chart_vertices_[static_cast<std::size_t>(i)];
        }
        q.vertices_.push_back(std::move(v));
        q.chart_vertices_.push_back(std::move(u));
    }

    q.chart_origin_ = RVector(q.ambient_dim_);
    q.chart_basis_ = RMatrix::Zero(q.ambient_dim_, static_cast<Eigen::Index>(p.dim_) * d);
    for (int t = 0; t < d; ++t)
    {
        q.chart_origin_.segment(t * n, n) = p.chart_origin_;
        q.chart_basis_.block(t * n, static_cast<Eigen::Index>(t) * p.dim_, n, p.dim_) =
            p.chart_basis_;
    }

    // A product facet fixes one factor's facet and leaves the rest whole.
    for (int t = 0; t < d; ++t)
        for (std::size_t f = 0; f < p.facet_rows_.size(); ++f)
        {
            RVector a = RVector::Zero(static_cast<Eigen::Index>(p.dim_) * d);
            a.segment(static_cast<Eigen::Index>(t) * p.dim_, p.dim_) = p.facet_rows_[f].first;
            std::vector<int> vs;
            for (long flat = 0; flat < total; ++flat)
            {
                long rest = flat;
                int digit = 0;
                for (int s = d - 1; s >= t; --s)
                {
                    digit = static_cast<int>(rest % m);
                    rest /= m;
                }
                if (std::binary_search(p.facet_vertex_sets_[f].begin(),
                                       p.facet_vertex_sets_[f].end(), digit))
                    vs.push_back(static_cast<int>(flat));
            }
            q.facet_rows_.emplace_back(std::move(a), p.facet_rows_[f].second);
            q.facet_vertex_sets_.push_back(std::move(vs));
        }

    // Faces are d-tuples of factor faces.
    std::vector<std::vector<int>> sets;
    const long nf = static_cast<long>(p.faces_.size());
    long tuples = 1;
    for (int t = 0; t < d; ++t)
        tuples *= nf;
    for (long code = 0; code < tuples; ++code)
    {
        long rest = code;
        std::vector<const std::vector<int>*> parts(static_cast<std::size_t>(d));
        for (int t = d - 1; t >= 0; --t)
        {
            parts[static_cast<std::size_t>(t)] =
                &p.faces_[static_cast<std::size_t>(rest % nf)].vertices;
            rest /= nf;
        }
        std::vector<int> flats{0};
        long stride = 1;
        for (int t = d - 1; t >= 0; --t)
        {
            std::vector<int> next;
            next.reserve(flats.size() * parts[static_cast<std::size_t>(t)]->size());
            for (int digit : *parts[static_cast<std::size_t>(t)])
                for (int prev : flats)
                    next.push_back(prev + static_cast<int>(stride) * digit);
            flats = std::move(next);
            stride *= m;
        }
        std::sort(flats.begin(), flats.end());
        sets.push_back(std::move(flats));
    }
    q.finalize_lattice(std::move(sets));
    return q;
}

Polytope Polytope::translated(const RVector& delta) const
{
    if (delta.size() != ambient_dim_)
        throw DimensionMismatch("translation vector dimension mismatch");
    Polytope p(*this);
    for (RVector& v : p.vertices_)
        v += delta;
    p.chart_origin_ += delta;
    for (Face& f : p.faces_)
        f.barycenter += delta;
    return p;
}

const std::vector<int>& Polytope::subfaces_of(int id) const
{
    return subfaces_.at(static_cast<std::size_t>(id));
}

std::optional<int> Polytope::face_by_vertex_set(const std::vector<int>& sorted_vertices) const
{
    for (const Face& f : faces_)
        if (f.vertices == sorted_vertices)
            return f.id;
    return std::nullopt;
}

std::optional<int> Polytope::intersect_faces(int a, int b) const
{
    const std::vector<int> meet = intersect_sorted(face(a).vertices, face(b).vertices);
    if (meet.empty())
        return std::nullopt;
    return face_by_vertex_set(meet);
}

std::optional<RVector> Polytope::to_chart(const RVector& x) const
{
    if (x.size() != ambient_dim_)
        throw DimensionMismatch("point dimension differs from polytope ambient dimension");
    if (dim_ == 0)
        return (x - chart_origin_).isZero() ? std::optional<RVector>(RVector(0)) : std::nullopt;
    const RVector u = chart_basis_.fullPivLu().solve(x - chart_origin_);
    if (!(chart_basis_ * u - (x - chart_origin_)).isZero())
        return std::nullopt;
    return u;
}

RVector Polytope::from_chart(const RVector& u) const
{
    return chart_origin_ + chart_basis_ * u;
}

bool Polytope::contains(const RVector& x) const
{
    const auto u = to_chart(x);
    if (!u)
        return false;
    for (const auto& [a, b] : facet_rows_)
        if (a.dot(*u) > b)
            return false;
    return true;
}

int Polytope::support_face(const RVector& x) const
{
    const auto u = to_chart(x);
    if (!u)
        throw InvalidInput("support query for a point off the affine hull: " + to_string(x));
    std::vector<int> active;
    for (std::size_t i = 0; i < facet_rows_.size(); ++i)
    {
        const Rational v = facet_rows_[i].first.dot(*u);
        if (v > facet_rows_[i].second)
            throw InvalidInput("support query for a point outside the polytope: " + to_string(x));
        if (v == facet_rows_[i].second)
            active.push_back(static_cast<int>(i));
    }
    if (active.empty())
        return full_face_id();
    std::vector<int> vs = facet_vertex_sets_[static_cast<std::size_t>(active[0])];
    for (std::size_t i = 1; i < active.size(); ++i)
        vs = intersect_sorted(vs, facet_vertex_sets_[static_cast<std::size_t>(active[i])]);
    const auto id = face_by_vertex_set(vs);
    if (!id)
        throw TheoremViolation("active facet intersection is not a recorded face");
    return *id;
}

std::optional<std::pair<Rational, RVector>> Polytope::cone_scale_to_face(int face_id,
                                                                         const RVector& x) const
{
    if (!contains(RVector::Zero(ambient_dim_)))
        throw HypothesisViolation("cone queries require a polytope containing the origin");
    if (x.size() != ambient_dim_)
        throw DimensionMismatch("cone query point dimension mismatch");
    if (x.isZero())
        throw InvalidInput("cone membership of the zero vector is rejected");

    const Face& f = face(face_id);
    std::vector<RVector> fv;
    for (int v : f.vertices)
        fv.push_back(vertices_[static_cast<std::size_t>(v)]);
    if (point_in_hull(x, fv).in_hull)
        return std::make_pair(Rational(1), x);

    // maximize lambda  s.t.  sum_i mu_i v_i - lambda x = 0, sum_i mu_i = 1,
    // mu >= 0, lambda >= 0; lambda is bounded because x != 0 and the face is
    // compact.
    const Eigen::Index s = static_cast<Eigen::Index>(fv.size());
    RVector obj = RVector::Zero(s + 1);
    obj(s) = 1;
    LinearProgram lp = LinearProgram::maximize(obj);
    for (Eigen::Index c = 0; c < ambient_dim_; ++c)
    {
        RVector row(s + 1);
        for (Eigen::Index i = 0; i < s; ++i)
            row(i) = fv[static_cast<std::size_t>(i)](c);
        row(s) = -x(c);
        lp.add_row(row, RowSense::EQ, 0);
    }
    RVector ones = RVector::Ones(s + 1);
    ones(s) = 0;
    lp.add_row(ones, RowSense::EQ, 1);

    const LpResult res = solve(lp);
    if (res.status != LpStatus::Optimal || res.objective == 0)
        return std::nullopt;
    const Rational lambda = res.objective;
    return std::make_pair(lambda, RVector(lambda * x));
}

bool Polytope::cone_contains(int face_id, const RVector& x) const
{
    return cone_scale_to_face(face_id, x).has_value();
}

Rational Polytope::squared_diameter() const
{
    Rational best = 0;
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        for (std::size_t j = i + 1; j < vertices_.size(); ++j)
        {
            const Rational d = (vertices_[i] - vertices_[j]).squaredNorm();
            if (d > best)
                best = d;
        }
    return best;
}

}  // namespace kkms
