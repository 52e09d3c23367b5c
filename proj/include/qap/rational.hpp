#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qap {

/// Exact rational scalar. All arithmetic in this library is exact; there is
/// no floating-point code path.
using Rat = mpq_class;

class ParseError : public std::runtime_error {
public:
    ParseError(std::string msg, int line, int column)
        : std::runtime_error(std::move(msg)), line(line), column(column) {}
    int line;
    int column;
};

/// Parses "p", "-p" or "p/q" with q > 0. Throws std::invalid_argument on
/// malformed input or a non-positive denominator.
Rat parse_rational(std::string_view token);

/// Canonical form: "p/q" for non-integers, plain "p" otherwise.
std::string to_string(const Rat& value);

inline Rat rat_abs(const Rat& x) { return x < 0 ? Rat(-x) : x; }

/// mpq_class(num, den) does not reduce; every int-pair construction goes
/// through here.
inline Rat make_rat(long num, long den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rat& x) { return x.get_den() == 1; }

/// True when the value is an integer representable as int64.
bool fits_int64(const Rat& x);
std::int64_t to_int64(const Rat& x);

}  // namespace qap
