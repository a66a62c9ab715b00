#include "kkms/linprog.hpp"

#include <algorithm>
#include <string>

namespace kkms {

LinearProgram LinearProgram::maximize(const RVector& objective)
{
    LinearProgram lp;
    lp.objective = objective;
    lp.rows.resize(0, objective.size());
    lp.rhs.resize(0);
    lp.kinds.assign(static_cast<std::size_t>(objective.size()), VarKind::NonNegative);
    return lp;
}

LinearProgram LinearProgram::feasibility(Eigen::Index num_vars)
{
    return maximize(RVector::Zero(num_vars));
}

LinearProgram& LinearProgram::add_row(const RVector& coeffs, RowSense sense, const Rational& b)
{
    if (coeffs.size() != objective.size())
        throw InvalidInput("constraint row length " + std::to_string(coeffs.size()) +
                           " does not match variable count " + std::to_string(objective.size()));
    rows.conservativeResize(rows.rows() + 1, objective.size());
    rows.row(rows.rows() - 1) = coeffs.transpose();
    senses.push_back(sense);
    rhs.conservativeResize(rhs.size() + 1);
    rhs(rhs.size() - 1) = b;
    return *this;
}

LinearProgram& LinearProgram::set_free(Eigen::Index var)
{
    kinds.at(static_cast<std::size_t>(var)) = VarKind::Free;
    return *this;
}

void LinearProgram::validate() const
{
    if (rows.rows() != rhs.size() || rows.rows() != static_cast<Eigen::Index>(senses.size()))
        throw InvalidInput("row/sense/rhs counts disagree");
    if (rows.rows() > 0 && rows.cols() != objective.size())
        throw InvalidInput("constraint matrix width does not match variable count");
    if (static_cast<Eigen::Index>(kinds.size()) != objective.size())
        throw InvalidInput("variable kind list does not match variable count");
}

LpStats& lp_stats()
{
    static LpStats stats;
    return stats;
}

namespace {

// Equality standard form: maximize g.z with G z = d, z >= 0, d >= 0.
// Column layout: structural columns (split free vars), then one slack or
// surplus per LE/GE row, then one artificial per EQ/GE row.
struct StandardForm
{
    RMatrix G;
    RVector d;
    RVector g;
    Eigen::Index first_artificial = 0;
    std::vector<int> flip;                                     // per row
    std::vector<std::pair<Eigen::Index, Eigen::Index>> var_cols;  // (pos, neg or -1)
    std::vector<Eigen::Index> row_basis_col;                   // initial basic column per row
};

StandardForm standardize(const LinearProgram& lp)
{
    const Eigen::Index n = lp.num_vars();
    const Eigen::Index m = lp.num_rows();

    StandardForm sf;
    sf.flip.resize(static_cast<std::size_t>(m), 1);
    std::vector<RowSense> sense(lp.senses);
    for (Eigen::Index i = 0; i < m; ++i)
    {
        if (lp.rhs(i) < 0)
        {
            sf.flip[static_cast<std::size_t>(i)] = -1;
            if (sense[static_cast<std::size_t>(i)] == RowSense::LE)
                sense[static_cast<std::size_t>(i)] = RowSense::GE;
            else if (sense[static_cast<std::size_t>(i)] == RowSense::GE)
                sense[static_cast<std::size_t>(i)] = RowSense::LE;
        }
    }

    Eigen::Index num_struct = 0;
    sf.var_cols.reserve(static_cast<std::size_t>(n));
    for (Eigen::Index j = 0; j < n; ++j)
    {
        if (lp.kinds[static_cast<std::size_t>(j)] == VarKind::Free)
        {
            sf.var_cols.emplace_back(num_struct, num_struct + 1);
            num_struct += 2;
        }
        else
        {
            sf.var_cols.emplace_back(num_struct, -1);
            num_struct += 1;
        }
    }

    Eigen::Index num_slack = 0, num_artificial = 0;
    for (Eigen::Index i = 0; i < m; ++i)
    {
        const RowSense s = sense[static_cast<std::size_t>(i)];
        if (s != RowSense::EQ)
            ++num_slack;
        if (s != RowSense::LE)
            ++num_artificial;
    }

    sf.first_artificial = num_struct + num_slack;
    const Eigen::Index total = sf.first_artificial + num_artificial;
    sf.G = RMatrix::Zero(m, total);
    sf.d.resize(m);
    sf.g = RVector::Zero(total);
    sf.row_basis_col.resize(static_cast<std::size_t>(m));

    for (Eigen::Index j = 0; j < n; ++j)
    {
        const auto [pos, neg] = sf.var_cols[static_cast<std::size_t>(j)];
        sf.g(pos) = lp.objective(j);
        if (neg >= 0)
            sf.g(neg) = -lp.objective(j);
    }

    Eigen::Index next_slack = num_struct;
    Eigen::Index next_art = sf.first_artificial;
    for (Eigen::Index i = 0; i < m; ++i)
    {
        const int f = sf.flip[static_cast<std::size_t>(i)];
        for (Eigen::Index j = 0; j < n; ++j)
        {
            const Rational a = f * lp.rows(i, j);
            const auto [pos, neg] = sf.var_cols[static_cast<std::size_t>(j)];
            sf.G(i, pos) = a;
            if (neg >= 0)
                sf.G(i, neg) = -a;
        }
        sf.d(i) = f * lp.rhs(i);

        const RowSense s = sense[static_cast<std::size_t>(i)];
        if (s == RowSense::LE)
        {
            sf.G(i, next_slack) = 1;
            sf.row_basis_col[static_cast<std::size_t>(i)] = next_slack;
            ++next_slack;
        }
        else if (s == RowSense::GE)
        {
            sf.G(i, next_slack) = -1;
            ++next_slack;
        }
        if (s != RowSense::LE)
        {
            sf.G(i, next_art) = 1;
            sf.row_basis_col[static_cast<std::size_t>(i)] = next_art;
            ++next_art;
        }
    }
    return sf;
}

// Dense tableau simplex with Bland's rule. Rows may be deactivated when
// phase 1 exposes them as redundant.
class Tableau
{
  public:
    Tableau(const StandardForm& sf)
        : sf_(sf), T_(sf.G.rows(), sf.G.cols() + 1), basis_(static_cast<std::size_t>(sf.G.rows())),
          active_(static_cast<std::size_t>(sf.G.rows()), true)
    {
        T_.leftCols(sf.G.cols()) = sf.G;
        T_.col(sf.G.cols()) = sf.d;
        for (Eigen::Index i = 0; i < sf.G.rows(); ++i)
        {
            basis_[static_cast<std::size_t>(i)] = sf.row_basis_col[static_cast<std::size_t>(i)];
            pivot(i, basis_[static_cast<std::size_t>(i)]);
        }
    }

    // Runs Bland's rule to optimality. Returns the entering column on
    // unboundedness, or -1 at optimality. Columns >= limit never enter.
    Eigen::Index run(const RVector& costs, Eigen::Index limit)
    {
        for (;;)
        {
            const Eigen::Index enter = entering_column(costs, limit);
            if (enter < 0)
                return -1;
            const Eigen::Index leave = ratio_test(enter);
            if (leave < 0)
                return enter;
            basis_[static_cast<std::size_t>(leave)] = enter;
            pivot(leave, enter);
        }
    }

    Rational objective_value(const RVector& costs) const
    {
        Rational z = 0;
        for (Eigen::Index r = 0; r < rows(); ++r)
            if (active_[static_cast<std::size_t>(r)])
                z += costs(basis_[static_cast<std::size_t>(r)]) * T_(r, rhs_col());
        return z;
    }

    RVector basic_solution(Eigen::Index num_cols) const
    {
        RVector z = RVector::Zero(num_cols);
        for (Eigen::Index r = 0; r < rows(); ++r)
            if (active_[static_cast<std::size_t>(r)])
                z(basis_[static_cast<std::size_t>(r)]) = T_(r, rhs_col());
        return z;
    }

    // Row multipliers for the active subsystem: solves B^T y = costs_B on the
    // original columns. Inactive rows get multiplier zero.
    RVector dual_multipliers(const RVector& costs) const
    {
        std::vector<Eigen::Index> act;
        for (Eigen::Index r = 0; r < rows(); ++r)
            if (active_[static_cast<std::size_t>(r)])
                act.push_back(r);
        const Eigen::Index k = static_cast<Eigen::Index>(act.size());
        RMatrix B(k, k);
        RVector cb(k);
        for (Eigen::Index c = 0; c < k; ++c)
        {
            const Eigen::Index col = basis_[static_cast<std::size_t>(act[static_cast<std::size_t>(c)])];
            for (Eigen::Index r = 0; r < k; ++r)
                B(r, c) = sf_.G(act[static_cast<std::size_t>(r)], col);
            cb(c) = costs(col);
        }
        const RVector y_act = B.transpose().fullPivLu().solve(cb);
        RVector y = RVector::Zero(rows());
        for (Eigen::Index r = 0; r < k; ++r)
            y(act[static_cast<std::size_t>(r)]) = y_act(r);
        return y;
    }

    // Clears artificials from the basis after a feasible phase 1; rows that
    // admit no pivot are redundant and get deactivated.
    void drive_out_artificials()
    {
        for (Eigen::Index r = 0; r < rows(); ++r)
        {
            if (!active_[static_cast<std::size_t>(r)] ||
                basis_[static_cast<std::size_t>(r)] < sf_.first_artificial)
                continue;
            Eigen::Index found = -1;
            for (Eigen::Index j = 0; j < sf_.first_artificial; ++j)
            {
                if (T_(r, j) != 0)
                {
                    found = j;
                    break;
                }
            }
            if (found >= 0)
            {
                basis_[static_cast<std::size_t>(r)] = found;
                pivot(r, found);
            }
            else
            {
                active_[static_cast<std::size_t>(r)] = false;
            }
        }
    }

    Eigen::Index rows() const { return T_.rows(); }
    Eigen::Index rhs_col() const { return T_.cols() - 1; }
    const std::vector<Eigen::Index>& basis() const { return basis_; }
    const Rational& entry(Eigen::Index r, Eigen::Index c) const { return T_(r, c); }
    bool row_active(Eigen::Index r) const { return active_[static_cast<std::size_t>(r)]; }

  private:
    Eigen::Index entering_column(const RVector& costs, Eigen::Index limit) const
    {
        for (Eigen::Index j = 0; j < limit; ++j)
        {
            Rational reduced = costs(j);
            for (Eigen::Index r = 0; r < rows(); ++r)
                if (active_[static_cast<std::size_t>(r)])
                    reduced -= costs(basis_[static_cast<std::size_t>(r)]) * T_(r, j);
            if (reduced > 0)
                return j;
        }
        return -1;
    }

    Eigen::Index ratio_test(Eigen::Index enter) const
    {
        Eigen::Index best = -1;
        Rational best_ratio = 0;
        for (Eigen::Index r = 0; r < rows(); ++r)
        {
            if (!active_[static_cast<std::size_t>(r)] || T_(r, enter) <= 0)
                continue;
            const Rational ratio = T_(r, rhs_col()) / T_(r, enter);
            if (best < 0 || ratio < best_ratio ||
                (ratio == best_ratio &&
                 basis_[static_cast<std::size_t>(r)] < basis_[static_cast<std::size_t>(best)]))
            {
                best = r;
                best_ratio = ratio;
            }
        }
        return best;
    }

    void pivot(Eigen::Index r, Eigen::Index c)
    {
        T_.row(r) /= T_(r, c);
        for (Eigen::Index i = 0; i < rows(); ++i)
        {
            if (i == r || T_(i, c) == 0)
                continue;
            T_.row(i) -= T_(i, c) * T_.row(r);
        }
    }

    const StandardForm& sf_;
    RMatrix T_;
    std::vector<Eigen::Index> basis_;
    std::vector<bool> active_;
};

RVector map_primal(const LinearProgram& lp, const StandardForm& sf, const RVector& z)
{
    RVector x(lp.num_vars());
    for (Eigen::Index j = 0; j < lp.num_vars(); ++j)
    {
        const auto [pos, neg] = sf.var_cols[static_cast<std::size_t>(j)];
        x(j) = neg >= 0 ? z(pos) - z(neg) : z(pos);
    }
    return x;
}

RVector map_rowspace(const StandardForm& sf, const RVector& u)
{
    RVector y(u.size());
    for (Eigen::Index i = 0; i < u.size(); ++i)
        y(i) = sf.flip[static_cast<std::size_t>(i)] * u(i);
    return y;
}

}  // namespace

LpResult solve(const LinearProgram& lp)
{
    lp.validate();
    const StandardForm sf = standardize(lp);
    Tableau tab(sf);

    // Phase 1: minimize the artificial sum.
    RVector phase1 = RVector::Zero(sf.G.cols());
    for (Eigen::Index j = sf.first_artificial; j < sf.G.cols(); ++j)
        phase1(j) = -1;
    tab.run(phase1, sf.G.cols());

    LpResult result;
    if (tab.objective_value(phase1) < 0)
    {
        result.status = LpStatus::Infeasible;
        const RVector u = -tab.dual_multipliers(phase1);
        result.farkas = map_rowspace(sf, u);
        verify(lp, result);
        return result;
    }

    tab.drive_out_artificials();

    // Phase 2 on the original costs; artificial columns never re-enter.
    const Eigen::Index enter = tab.run(sf.g, sf.first_artificial);
    if (enter >= 0)
    {
        result.status = LpStatus::Unbounded;
        result.primal = map_primal(lp, sf, tab.basic_solution(sf.G.cols()));
        RVector w = RVector::Zero(sf.G.cols());
        w(enter) = 1;
        for (Eigen::Index r = 0; r < tab.rows(); ++r)
            if (tab.row_active(r))
                w(tab.basis()[static_cast<std::size_t>(r)]) = -tab.entry(r, enter);
        result.ray = map_primal(lp, sf, w);
        verify(lp, result);
        return result;
    }

    result.status = LpStatus::Optimal;
    result.primal = map_primal(lp, sf, tab.basic_solution(sf.G.cols()));
    result.dual = map_rowspace(sf, tab.dual_multipliers(sf.g));
    result.objective = lp.objective.dot(result.primal);
    verify(lp, result);
    return result;
}

namespace {

void check(bool ok, const char* what)
{
    if (!ok)
        throw LpInternalError(std::string("LP certificate check failed: ") + what);
}

void check_point_feasible(const LinearProgram& lp, const RVector& x)
{
    check(x.size() == lp.num_vars(), "primal size");
    for (Eigen::Index j = 0; j < lp.num_vars(); ++j)
        if (lp.kinds[static_cast<std::size_t>(j)] == VarKind::NonNegative)
            check(x(j) >= 0, "primal nonnegativity");
    for (Eigen::Index i = 0; i < lp.num_rows(); ++i)
    {
        const Rational lhs = lp.rows.row(i).dot(x.transpose());
        switch (lp.senses[static_cast<std::size_t>(i)])
        {
            case RowSense::LE: check(lhs <= lp.rhs(i), "primal row <= rhs"); break;
            case RowSense::EQ: check(lhs == lp.rhs(i), "primal row == rhs"); break;
            case RowSense::GE: check(lhs >= lp.rhs(i), "primal row >= rhs"); break;
        }
    }
}

}  // namespace

void verify(const LinearProgram& lp, const LpResult& result)
{
    ++lp_stats().solves;
    switch (result.status)
    {
        case LpStatus::Optimal:
        {
            check_point_feasible(lp, result.primal);
            check(result.dual.size() == lp.num_rows(), "dual size");
            for (Eigen::Index i = 0; i < lp.num_rows(); ++i)
            {
                if (lp.senses[static_cast<std::size_t>(i)] == RowSense::LE)
                    check(result.dual(i) >= 0, "dual sign on <= row");
                if (lp.senses[static_cast<std::size_t>(i)] == RowSense::GE)
                    check(result.dual(i) <= 0, "dual sign on >= row");
            }
            for (Eigen::Index j = 0; j < lp.num_vars(); ++j)
            {
                const Rational slack = lp.rows.col(j).dot(result.dual) - lp.objective(j);
                if (lp.kinds[static_cast<std::size_t>(j)] == VarKind::NonNegative)
                    check(slack >= 0, "dual feasibility on nonnegative var");
                else
                    check(slack == 0, "dual feasibility on free var");
            }
            check(lp.objective.dot(result.primal) == result.objective, "objective value");
            check(result.dual.dot(lp.rhs) == result.objective, "strong duality");
            break;
        }
        case LpStatus::Infeasible:
        {
            check(result.farkas.size() == lp.num_rows(), "farkas size");
            for (Eigen::Index i = 0; i < lp.num_rows(); ++i)
            {
                if (lp.senses[static_cast<std::size_t>(i)] == RowSense::LE)
                    check(result.farkas(i) <= 0, "farkas sign on <= row");
                if (lp.senses[static_cast<std::size_t>(i)] == RowSense::GE)
                    check(result.farkas(i) >= 0, "farkas sign on >= row");
            }
            for (Eigen::Index j = 0; j < lp.num_vars(); ++j)
            {
                const Rational comb = lp.rows.col(j).dot(result.farkas);
                if (lp.kinds[static_cast<std::size_t>(j)] == VarKind::NonNegative)
                    check(comb <= 0, "farkas combination on nonnegative var");
                else
                    check(comb == 0, "farkas combination on free var");
            }
            check(result.farkas.dot(lp.rhs) > 0, "farkas positivity");
            break;
        }
        case LpStatus::Unbounded:
        {
            check_point_feasible(lp, result.primal);
            check(result.ray.size() == lp.num_vars(), "ray size");
            for (Eigen::Index j = 0; j < lp.num_vars(); ++j)
                if (lp.kinds[static_cast<std::size_t>(j)] == VarKind::NonNegative)
                    check(result.ray(j) >= 0, "ray nonnegativity");
            for (Eigen::Index i = 0; i < lp.num_rows(); ++i)
            {
                const Rational deriv = lp.rows.row(i).dot(result.ray.transpose());
                switch (lp.senses[static_cast<std::size_t>(i)])
                {
                    case RowSense::LE: check(deriv <= 0, "ray recession on <= row"); break;
                    case RowSense::EQ: check(deriv == 0, "ray recession on == row"); break;
                    case RowSense::GE: check(deriv >= 0, "ray recession on >= row"); break;
                }
            }
            check(lp.objective.dot(result.ray) > 0, "ray improves objective");
            break;
        }
    }
    ++lp_stats().verified;
}

}  // namespace kkms
