#ifndef TWISTCALC_ERRORS_HPP
#define TWISTCALC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace twistcalc {

/// Base class for all user-facing errors raised by the library.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// A move variant cannot apply at the requested index.
class illegal_site : public error {
public:
    using error::error;
};

/// The operation rejects zero (p = 0).
class zero_input : public error {
public:
    using error::error;
};

/// The operation requires an even numerator.
class odd_p : public error {
public:
    using error::error;
};

/// An even-denominator rational admits no odd-length even-tail coefficient
/// list: working mod 2, the (2,1) entry of the defining matrix product is
/// always odd for such lists, so q must be odd.
class no_normal_form : public error {
public:
    using error::error;
};

/// Operation called on the wrong normal-form kind.
class wrong_kind : public error {
public:
    using error::error;
};

class not_coprime : public error {
public:
    using error::error;
};

/// Unknown standard-form name.
class bad_name : public error {
public:
    using error::error;
};

class dimension_mismatch : public error {
public:
    using error::error;
};

/// Enumeration bound exceeds the complexity guard.
class bound_too_large : public error {
public:
    using error::error;
};

/// Argument parity does not match the case formula.
class parity_error : public error {
public:
    using error::error;
};

/// m and n have different parities; the two families are not comparable.
class parity_mismatch : public error {
public:
    using error::error;
};

/// A half-integer expansion failed to produce an integer (transcription bug).
class non_integer_coefficient : public error {
public:
    using error::error;
};

/// Argument outside the operation's domain (e.g. n <= 0).
class domain_error : public error {
public:
    using error::error;
};

/// Malformed textual input (rational, coefficient list, braid word).
class parse_error : public error {
public:
    using error::error;
};

/// int64 overflow in exact arithmetic.
class arithmetic_overflow : public error {
public:
    using error::error;
};

}  // namespace twistcalc

#endif
