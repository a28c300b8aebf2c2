#pragma once

#include <stdexcept>
#include <string>

namespace drg {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DisconnectedGraph : Error {
    using Error::Error;
};
struct EdgeNotPresent : Error {
    using Error::Error;
};
struct EvenLength : Error {
    using Error::Error;
};
struct BadParams : Error {
    using Error::Error;
};
struct NotRegular : Error {
    using Error::Error;
};

// Carries the first offending vertex pair found by the pairwise check.
struct NotDistanceRegular : Error {
    int x, y;
    NotDistanceRegular(const std::string& msg, int x_, int y_) : Error(msg), x(x_), y(y_) {}
};

struct InvalidArray : Error {
    using Error::Error;
};
struct NonIntegralMultiplicity : Error {
    using Error::Error;
};
struct UnknownName : Error {
    using Error::Error;
};
struct SelfValidationFailed : Error {
    using Error::Error;
};
struct ParseError : Error {
    int line;
    ParseError(const std::string& msg, int line_) : Error(msg), line(line_) {}
};
struct NoPerfectMatching : Error {
    using Error::Error;
};
struct OddOrder : Error {
    using Error::Error;
};
struct TTooLarge : Error {
    using Error::Error;
};
struct MatchingExtends : Error {
    using Error::Error;
};
struct BipartiteInapplicable : Error {
    using Error::Error;
};
struct BudgetExceeded : Error {
    using Error::Error;
};

}  // namespace drg
