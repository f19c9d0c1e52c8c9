#ifndef GQU_RATIONAL_HPP
#define GQU_RATIONAL_HPP

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "gqu/errors.hpp"

namespace gqu {

// Exact rational arithmetic; strict-inequality ball membership must be
// bit-exact, so no floating point anywhere near a predicate.
using Rat = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

// "p/q" (or plain "p") — the wire format for all rationals.
inline std::string rat_to_string(const Rat& r) {
    if (is_integer(r)) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline Rat rat_from_string(const std::string& s) {
    try {
        auto slash = s.find('/');
        if (slash == std::string::npos)
            return Rat(boost::multiprecision::cpp_int(s));
        return Rat(boost::multiprecision::cpp_int(s.substr(0, slash)),
                   boost::multiprecision::cpp_int(s.substr(slash + 1)));
    } catch (const std::exception&) {
        throw InvalidArgument("malformed rational: " + s);
    }
}

inline long ceil_to_long(const Rat& r) {
    boost::multiprecision::cpp_int q = numerator(r) / denominator(r);
    if (q * denominator(r) < numerator(r)) ++q;
    return static_cast<long>(q);
}

} // namespace gqu

#endif
