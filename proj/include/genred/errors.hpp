#pragma once

#include <stdexcept>
#include <string>

namespace genred {

// Base class for all validation failures raised by the library.  Callers
// that only care about success/failure can catch this; the CLI maps it to
// exit code 1.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct NotCartan : Error {
    explicit NotCartan(const std::string& why) : Error("not a Cartan matrix: " + why) {}
};

struct BadRank : Error {
    explicit BadRank(const std::string& why) : Error("bad rank: " + why) {}
};

struct BadParams : Error {
    explicit BadParams(const std::string& why) : Error("bad parameters: " + why) {}
};

struct MixedRadicand : Error {
    MixedRadicand() : Error("mixed radicands") {}
};

struct ClosureBudgetExceeded : Error {
    ClosureBudgetExceeded() : Error("root closure exceeded the safety bound") {}
};

struct CapExceeded : Error {
    explicit CapExceeded(const std::string& why) : Error("enumeration cap exceeded: " + why) {}
};

struct LatticeNotAboveZC : Error {
    LatticeNotAboveZC() : Error("lattice does not contain ZC") {}
};

struct MI1Violation : Error {
    explicit MI1Violation(const std::string& why) : Error("(MI1) violated: " + why) {}
};

struct MI2Violation : Error {
    explicit MI2Violation(const std::string& why) : Error("(MI2) violated: " + why) {}
};

struct NotEndo : Error {
    NotEndo() : Error("operation requires source == target") {}
};

struct NotSteinberg : Error {
    NotSteinberg() : Error("isogeny is not of Steinberg type") {}
};

struct NotSemisimple : Error {
    NotSemisimple() : Error("operation requires a semisimple root datum") {}
};

struct NotSimple : Error {
    NotSimple() : Error("operation requires a simple (one component, semisimple) datum") {}
};

struct NotFiniteOrder : Error {
    NotFiniteOrder() : Error("matrix does not have finite order within the bound") {}
};

struct DoesNotNormalizeW : Error {
    explicit DoesNotNormalizeW(const std::string& why) : Error("map does not normalize the Weyl group: " + why) {}
};

struct QNotInP : Error {
    explicit QNotInP(const std::string& q) : Error("q = " + q + " is not admissible for this complete root datum") {}
};

struct WrongType : Error {
    explicit WrongType(const std::string& why) : Error("wrong Cartan type: " + why) {}
};

struct BadType : Error {
    explicit BadType(const std::string& why) : Error("unknown type: " + why) {}
};

struct ConsistencyFailure : Error {
    explicit ConsistencyFailure(const std::string& why) : Error("internal consistency failure: " + why) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& why) : Error("parse failure: " + why) {}
};

}  // namespace genred
