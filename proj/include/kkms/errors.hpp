#ifndef KKMS_ERRORS_HPP
#define KKMS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace kkms {

/** Structurally invalid input (bad dimensions, malformed instance data). */
class InvalidInput : public std::invalid_argument
{
  public:
    explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

/**
 * Input parses but violates a theorem hypothesis (e.g. a covering condition
 * fails, a piercing number is too small). Carries a human-readable witness.
 */
class HypothesisViolation : public std::runtime_error
{
  public:
    explicit HypothesisViolation(const std::string& what) : std::runtime_error(what) {}
};

/** A covering condition failed at a concrete point. */
class CoveringViolation : public HypothesisViolation
{
  public:
    explicit CoveringViolation(const std::string& what) : HypothesisViolation(what) {}
};

/**
 * An exhaustive search that a theorem guarantees must succeed came up empty.
 * This always indicates a bug (usually unvalidated input), never mathematics.
 */
class TheoremViolation : public std::logic_error
{
  public:
    explicit TheoremViolation(const std::string& what) : std::logic_error(what) {}
};

/**
 * The refinement loop hit its budget without resolving an exact certificate.
 * Expected only for open-region misuse or covering violations.
 */
class LimitUnresolved : public std::runtime_error
{
  public:
    explicit LimitUnresolved(const std::string& what) : std::runtime_error(what) {}
};

/** An exact self-check inside the LP solver failed; always a bug. */
class LpInternalError : public std::logic_error
{
  public:
    explicit LpInternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace kkms

#endif
