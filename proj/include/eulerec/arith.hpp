#pragma once

#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "eulerec/types.hpp"

namespace eulerec {

/// Exact values f(0..N) of one arithmetical function, immutable once built.
/// Index 0 follows the per-function convention: divisor-sum style tables
/// (sigma, phi, tau, ...) store 0 there, partition-style tables store the
/// combinatorial value of the empty object.
struct FunctionTable {
    std::string name;
    std::vector<Int> values;

    long max_n() const { return static_cast<long>(values.size()) - 1; }

    const Int& at(long n) const {
        if (n < 0 || n > max_n())
            fail(errc::short_table, name + " table does not cover index " + std::to_string(n));
        return values[static_cast<std::size_t>(n)];
    }
};

/// Build a table by evaluating fn at 0..max_n.
template <typename F>
FunctionTable tabulate(std::string name, long max_n, F&& fn) {
    if (max_n < 0) fail(errc::invalid_argument, "tabulate: max_n must be >= 0");
    FunctionTable t{std::move(name), {}};
    t.values.reserve(static_cast<std::size_t>(max_n) + 1);
    for (long n = 0; n <= max_n; ++n) {
        if constexpr (std::is_integral_v<std::decay_t<decltype(fn(n))>>)
            t.values.emplace_back(static_cast<long>(fn(n)));
        else
            t.values.emplace_back(fn(n));
    }
    return t;
}

/// All positive divisors of n, ascending. Trial division up to sqrt(n).
std::vector<long long> divisor_list(long long n);

/// Prime factorization of n >= 1 as (prime, multiplicity) pairs, ascending.
std::vector<std::pair<long long, int>> factorize(long long n);

enum class SigmaKind {
    all,          // sigma(n)   = sum of all divisors
    odd,          // sigma_o(n) = sum of odd divisors
    even,         // sigma_e(n) = sum of even divisors
    alternating,  // sigma_s(n) = sum_{d|n} (-1)^(d-1) n/d
};

long long sigma_kind(long long n, SigmaKind kind);

long long phi(long long n);
long long tau(long long n);
int liouville(long long n);
int mobius(long long n);

/// Jacobi's weight functions: eta(n,1) = 0 for even n, (-1)^((n-1)/2) for odd n;
/// eta(n,2) = 0 when 4 | n, n otherwise.
long long eta(long long n, int which);

/// sum_{d|n} f(d). The table must cover every divisor of n (i.e. n itself).
Int divisor_sum(const FunctionTable& f, long long n);

/// Recover f from g(n) = sum_{d|n} f(d) via f(n) = sum_{d|n} mu(n/d) g(d).
/// Index 0 of the result is 0; the inversion lives on 1..N.
FunctionTable mobius_invert(const FunctionTable& g, std::string name = "");

/// r_k(n) for 0 <= n <= max_n: ordered signed representations of n as a sum of
/// k squares (zeros allowed), by k-fold self-convolution of the theta
/// coefficients 1 + 2 sum_{j>=1} q^(j^2). The brute-force oracle for sum-of-squares
/// identities.
FunctionTable r_table(long k, long max_n);

/// Jacobi's closed divisor-sum forms: r_2(n) = 4 sum eta_1(d),
/// r_4(n) = 8 sum eta_2(d), r_8(n) = 16 sum (-1)^(n+d) d^3. k in {2,4,8}.
Int r_jacobi(long long n, int k);

/// Convenience table builders used throughout the identity catalog.
FunctionTable sigma_table(long max_n, SigmaKind kind);
FunctionTable phi_table(long max_n);
FunctionTable tau_table(long max_n);
FunctionTable liouville_table(long max_n);
FunctionTable mobius_table(long max_n);

}  // namespace eulerec
