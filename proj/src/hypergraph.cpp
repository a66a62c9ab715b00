#include "kkms/hypergraph.hpp"

#include "kkms/errors.hpp"

#include <algorithm>
#include <string>

namespace kkms {

Hypergraph::Hypergraph(int n, std::vector<std::vector<int>> e) : num_vertices(n), edges(std::move(e))
{
    if (n < 0)
        throw InvalidInput("negative vertex count");
    for (auto& edge : edges)
    {
        std::sort(edge.begin(), edge.end());
        edge.erase(std::unique(edge.begin(), edge.end()), edge.end());
        for (int v : edge)
            if (v < 0 || v >= num_vertices)
                throw InvalidInput("edge vertex " + std::to_string(v) + " out of range");
    }
}

int Hypergraph::rank() const
{
    std::size_t r = 0;
    for (const auto& e : edges)
        r = std::max(r, e.size());
    return static_cast<int>(r);
}

RMatrix Hypergraph::incidence() const
{
    RMatrix m = RMatrix::Zero(num_vertices, static_cast<Eigen::Index>(edges.size()));
    for (std::size_t j = 0; j < edges.size(); ++j)
        for (int v : edges[j])
            m(v, static_cast<Eigen::Index>(j)) = 1;
    return m;
}

namespace {

void reject_empty_edges(const Hypergraph& h)
{
    for (std::size_t j = 0; j < h.edges.size(); ++j)
        if (h.edges[j].empty())
            throw InvalidInput("edge " + std::to_string(j) + " has no vertices");
}

}  // namespace

FractionalMatching fractional_matching_number(const Hypergraph& h)
{
    if (h.edges.empty())
        return {Rational(0), RVector(0)};
    reject_empty_edges(h);

    const Eigen::Index ne = static_cast<Eigen::Index>(h.edges.size());
    LinearProgram lp = LinearProgram::maximize(RVector::Ones(ne));
    const RMatrix inc = h.incidence();
    for (Eigen::Index v = 0; v < h.num_vertices; ++v)
        lp.add_row(inc.row(v).transpose(), RowSense::LE, 1);

    const LpResult res = solve(lp);
    if (res.status != LpStatus::Optimal)
        throw LpInternalError("fractional matching LP did not solve to optimality");
    return {res.objective, res.primal};
}

FractionalCover fractional_cover_number(const Hypergraph& h)
{
    if (h.edges.empty())
        return {Rational(0), RVector::Zero(h.num_vertices)};
    reject_empty_edges(h);

    // Minimize the cover weight: maximize its negation.
    LinearProgram lp = LinearProgram::maximize(-RVector::Ones(h.num_vertices));
    const RMatrix inc = h.incidence();
    for (std::size_t j = 0; j < h.edges.size(); ++j)
        lp.add_row(inc.col(static_cast<Eigen::Index>(j)), RowSense::GE, 1);

    const LpResult res = solve(lp);
    if (res.status != LpStatus::Optimal)
        throw LpInternalError("fractional cover LP did not solve to optimality");
    return {-res.objective, res.primal};
}

std::optional<RVector> perfect_fractional_matching(const Hypergraph& h)
{
    if (h.num_vertices == 0)
        return RVector(static_cast<Eigen::Index>(h.edges.size())).setZero();
    if (h.edges.empty())
        return std::nullopt;
    reject_empty_edges(h);

    LinearProgram lp = LinearProgram::feasibility(static_cast<Eigen::Index>(h.edges.size()));
    const RMatrix inc = h.incidence();
    for (Eigen::Index v = 0; v < h.num_vertices; ++v)
        lp.add_row(inc.row(v).transpose(), RowSense::EQ, 1);

    const LpResult res = solve(lp);
    if (res.status == LpStatus::Optimal)
        return res.primal;
    return std::nullopt;
}

}  // namespace kkms
