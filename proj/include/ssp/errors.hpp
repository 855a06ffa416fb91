#pragma once

#include <stdexcept>
#include <string>

namespace ssp {

/// Base class for all engine errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed textual input. Carries a 1-based position when known.
struct ParseError : Error {
    int line = 0;
    int col = 0;
    ParseError(std::string msg, int line_ = 0, int col_ = 0)
        : Error(line_ > 0 ? "parse error at " + std::to_string(line_) + ":" +
                                std::to_string(col_) + ": " + msg
                          : "parse error: " + std::move(msg)),
          line(line_),
          col(col_) {}
};

/// Instance payload violates its problem's structural rules.
struct ValidationError : Error {
    using Error::Error;
};

/// A subset mentions an element outside the instance universe.
struct ForeignElement : Error {
    using Error::Error;
};

/// Cost-structure operation on a problem that has no feasible-set form.
struct NotAnLop : Error {
    using Error::Error;
};

/// A transformation was handed an instance of the wrong problem.
struct KindMismatch : Error {
    using Error::Error;
};

/// A lift or solve was handed a robust variant of the wrong family.
struct FamilyMismatch : Error {
    using Error::Error;
};

/// A gadget construction was handed a formula with the wrong quantifier shape.
struct PrefixMismatch : Error {
    using Error::Error;
};

/// Checked 63-bit arithmetic left the representable range.
struct OverflowError : Error {
    using Error::Error;
};

/// An exhaustive routine refused to start or continue past its node budget.
struct BudgetExceeded : Error {
    using Error::Error;
};

/// QBF evaluation over a state space larger than the hard cap.
struct CapExceeded : Error {
    using Error::Error;
};

/// Max-regret is undefined because the underlying solution set is empty.
struct UndefinedRegret : Error {
    using Error::Error;
};

}  // namespace ssp
