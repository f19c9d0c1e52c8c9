#ifndef GQU_ERRORS_HPP
#define GQU_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gqu {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// bad arguments, out-of-range points, malformed input
struct InvalidArgument : Error {
    using Error::Error;
};

struct UniverseMismatch : Error {
    UniverseMismatch() : Error("universe mismatch") {}
    explicit UniverseMismatch(const std::string& what) : Error(what) {}
};

// family not closed under union; carries a witness pair of member indices
struct NotUnionClosed : Error {
    int first;
    int second;
    NotUnionClosed(int a, int b)
        : Error("family is not union-closed: union of members " +
                std::to_string(a) + " and " + std::to_string(b) + " is missing"),
          first(a), second(b) {}
};

struct NotStrong : Error {
    NotStrong() : Error("generalized topology does not contain the whole universe") {}
};

// base element missing a diagonal pair (x,x)
struct MissingDiagonal : Error {
    int element;
    int point;
    MissingDiagonal(int e, int p)
        : Error("base element " + std::to_string(e) + " misses diagonal pair (" +
                std::to_string(p) + "," + std::to_string(p) + ")"),
          element(e), point(p) {}
};

// no base element V with V∘V contained in the named element
struct NoSquareRefinement : Error {
    int element;
    explicit NoSquareRefinement(int e)
        : Error("no base element squares into element " + std::to_string(e)),
          element(e) {}
};

struct CapExceeded : Error {
    int stage;
    int level;
    CapExceeded(int s, int j)
        : Error("extraction cap exceeded at stage " + std::to_string(s) +
                ", level " + std::to_string(j) +
                " (non-G-Cauchy input or recurring value?)"),
          stage(s), level(j) {}
};

} // namespace gqu

#endif
