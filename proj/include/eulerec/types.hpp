#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace eulerec {

/// Exact arbitrary-precision integer. All sequence values and series
/// coefficients live in this type; no floating point anywhere.
using Int = mpz_class;

enum class errc {
    invalid_argument,  // malformed input (bad selector, bad spec, ...)
    unknown_name,      // sequence or identity key not in the catalog
    domain,            // n outside the operation's stated domain
    guard,             // exhaustive-enumeration size guard exceeded
    inexact,           // a division that must be exact was not
    short_table,       // a FunctionTable does not cover a required index
};

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

}  // namespace eulerec
