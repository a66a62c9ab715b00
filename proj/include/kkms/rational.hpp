/**
 * Exact rational scalars and dense rational vectors/matrices.
 *
 * Every quantity in this library is a GMP-backed rational; there is no
 * floating point anywhere in the computational core. Vectors and matrices
 * are Eigen dense types instantiated with the rational scalar, so all the
 * usual expression machinery (dot products, solves, determinants) is exact.
 */

#ifndef KKMS_RATIONAL_HPP
#define KKMS_RATIONAL_HPP

#include <Eigen/Dense>
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace kkms {

using Rational = boost::multiprecision::mpq_rational;
using Integer  = boost::multiprecision::mpz_int;

using RVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using RMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

/** Error used for malformed textual input (rationals, points, files). */
class ParseError : public std::runtime_error
{
  public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/** Error used for operand dimension mismatches. */
class DimensionMismatch : public std::invalid_argument
{
  public:
    explicit DimensionMismatch(const std::string& what) : std::invalid_argument(what) {}
};

/**
 * Parse a rational from "p" or "p/q" form. The denominator must be positive;
 * the result is reduced to canonical form.
 */
Rational parse_rational(const std::string& text);

/** Canonical "p/q" form (or "p" when the denominator is 1). */
std::string to_string(const Rational& q);

/** Space-separated canonical coordinates. */
std::string to_string(const RVector& v);

/** Build a point from coordinate strings, e.g. rpoint({"1/2", "-3"}). */
RVector rpoint(std::initializer_list<const char*> coords);

/** Build a point from integer coordinates. */
RVector rpoint_int(std::initializer_list<long> coords);

/** Parse a whitespace-separated coordinate list. */
RVector parse_point(const std::vector<std::string>& tokens);

}  // namespace kkms

#endif
