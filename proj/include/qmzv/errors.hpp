#pragma once

#include <stdexcept>
#include <string>

namespace qmzv {

/// A q-integer [k]_q that must be inverted vanished at the evaluation
/// point.  Carries the offending summation index k.
class SingularEvaluation : public std::runtime_error {
public:
    explicit SingularEvaluation(long k)
        : std::runtime_error("singular evaluation: [" + std::to_string(k) +
                             "]_q = 0 at the evaluation point"),
          index_(k) {}

    long offending_index() const noexcept { return index_; }

private:
    long index_;
};

/// Exact division by an exact zero (rational, polynomial, or field element).
class DivisionByZero : public std::domain_error {
public:
    DivisionByZero() : std::domain_error("division by zero") {}
    explicit DivisionByZero(const std::string& what) : std::domain_error(what) {}
};

} // namespace qmzv
