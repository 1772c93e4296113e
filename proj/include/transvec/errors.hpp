#pragma once

#include <stdexcept>
#include <string>

namespace transvec {

// Common base so callers can catch everything from this library at once.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define TRANSVEC_ERROR(Name)                                        \
    struct Name : Error {                                           \
        explicit Name(const std::string& msg) : Error(msg) {}       \
    }

TRANSVEC_ERROR(DimensionMismatch);
TRANSVEC_ERROR(NotAlternating);
TRANSVEC_ERROR(ArfUndefined);
TRANSVEC_ERROR(NotSubspace);
TRANSVEC_ERROR(NotInSpan);
TRANSVEC_ERROR(InvalidTransvector);
TRANSVEC_ERROR(NotConnected);
TRANSVEC_ERROR(DomainTooLarge);
TRANSVEC_ERROR(NotBasis);
TRANSVEC_ERROR(Unclassifiable);
TRANSVEC_ERROR(BudgetExceeded);
TRANSVEC_ERROR(NotAdjacent);
TRANSVEC_ERROR(NoDecomposition);
TRANSVEC_ERROR(NotDType);
TRANSVEC_ERROR(InRadical);
TRANSVEC_ERROR(NotNormalForm);
TRANSVEC_ERROR(NoMinimalRepresentative);
TRANSVEC_ERROR(EmptyIntersection);
TRANSVEC_ERROR(SpanMismatch);
TRANSVEC_ERROR(CorollaryViolated);
TRANSVEC_ERROR(Dependent);
TRANSVEC_ERROR(NoExtensionFound);
TRANSVEC_ERROR(DimensionTooSmall);
TRANSVEC_ERROR(BlockConditionViolated);
TRANSVEC_ERROR(AllFixed);
TRANSVEC_ERROR(ParseError);

#undef TRANSVEC_ERROR

}  // namespace transvec
