/**
 * Exact rational linear programming.
 *
 * A dense two-phase primal simplex over GMP rationals with Bland's pivot
 * rule: deterministic, terminating on every input, and certificate-producing.
 * Every solve re-verifies its own certificates by direct substitution before
 * returning (primal feasibility, dual feasibility, exact strong duality;
 * Farkas vectors for infeasible instances; improving rays for unbounded
 * ones). Problem sizes here are small, so no sparsity or revised-simplex
 * machinery is used anywhere.
 *
 * Conventions, for  maximize c.x  subject to  a_i.x {<=,=,>=} b_i  and
 * x_j >= 0 (or x_j free):
 *
 *  - optimal:    dual y satisfies y_i >= 0 on <= rows, y_i <= 0 on >= rows,
 *                (A^T y)_j >= c_j for nonnegative vars (= c_j for free vars),
 *                and c.x* = y.b exactly.
 *  - infeasible: Farkas y satisfies y_i <= 0 on <= rows, y_i >= 0 on >= rows,
 *                (A^T y)_j <= 0 for nonnegative vars (= 0 for free vars),
 *                and y.b > 0.
 *  - unbounded:  a feasible point plus a recession direction d with
 *                A d <= 0 / = 0 / >= 0 per row sense, d_j >= 0 on
 *                nonnegative vars, and c.d > 0.
 */

#ifndef KKMS_LINPROG_HPP
#define KKMS_LINPROG_HPP

#include "kkms/errors.hpp"
#include "kkms/rational.hpp"

#include <cstdint>
#include <vector>

namespace kkms {

enum class RowSense { LE, EQ, GE };
enum class VarKind { NonNegative, Free };
enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LinearProgram
{
    RVector objective;              // maximized
    RMatrix rows;                   // one constraint per row
    std::vector<RowSense> senses;
    RVector rhs;
    std::vector<VarKind> kinds;     // defaults to NonNegative

    /** Start a maximization problem over `num_vars` nonnegative variables. */
    static LinearProgram maximize(const RVector& objective);

    /** Feasibility problem (zero objective) over `num_vars` nonnegative variables. */
    static LinearProgram feasibility(Eigen::Index num_vars);

    LinearProgram& add_row(const RVector& coeffs, RowSense sense, const Rational& b);
    LinearProgram& set_free(Eigen::Index var);

    Eigen::Index num_vars() const { return objective.size(); }
    Eigen::Index num_rows() const { return rhs.size(); }

    /** Throws InvalidInput on any dimension inconsistency. */
    void validate() const;
};

struct LpResult
{
    LpStatus status = LpStatus::Infeasible;
    RVector primal;       // optimal / unbounded: a feasible point
    RVector dual;         // optimal: one multiplier per row
    Rational objective;   // optimal: the common primal/dual value
    RVector farkas;       // infeasible: certificate in row space
    RVector ray;          // unbounded: improving recession direction
};

/**
 * Solve the program. Deterministic: identical inputs produce identical
 * results, including tie-breaking. Throws LpInternalError if any exact
 * self-verification fails (never expected).
 */
LpResult solve(const LinearProgram& lp);

/**
 * Re-verify a result against a program by direct substitution; throws
 * LpInternalError with a description on the first failed check.
 */
void verify(const LinearProgram& lp, const LpResult& result);

/** Global exact-verification counters (for the acceptance suite). */
struct LpStats
{
    std::uint64_t solves = 0;
    std::uint64_t verified = 0;
};
LpStats& lp_stats();

}  // namespace kkms

#endif
