#pragma once

#include <cstdint>
#include <vector>

#include "eulerec/types.hpp"

namespace eulerec {

/// Exact integer square root of n >= 0 (largest r with r*r <= n).
long long isqrt(long long n);

/// Pentagonal sign sequence: omega(0) = 1, omega(m) = (-1)^k when
/// m = (3k^2 +- k)/2 for some k >= 1, and 0 otherwise (including all m < 0).
/// Membership is decided by a perfect-square test on 24m+1 whose root must be
/// congruent to +-1 mod 6; no iteration over k.
int omega(long long m);

/// omega'(n) = omega(n/2) for even n, 0 for odd n. Requires n >= 0.
int omega_prime(long long n);

/// Cumulative pentagonal sum omega_k(m) = omega(m) + omega(m-k) + omega(m-2k) + ...
/// (finitely many nonzero terms; 0 for m < 0). Requires k >= 1.
long long omega_k(long long k, long long m);

/// Table of omega_k(m) for m = 0..m_max, built by the telescoping relation
/// omega_k(m) = omega(m) + omega_k(m-k). Cheaper than repeated omega_k calls
/// when m sweeps upward at fixed k.
std::vector<long long> omega_k_table(long long k, long long m_max);

/// Square indicator: 1 iff n is a perfect square (delta_s(0) = 1). Requires n >= 0.
int delta_s(long long n);

/// Triangular indicator: 1 iff n = m(m+1)/2 for some m >= 0, i.e. iff 8n+1 is a
/// perfect square (delta_t(0) = 1). Requires n >= 0.
int delta_t(long long n);

/// One nonzero term of the pentagonal sign sequence.
struct PentTerm {
    long long index;  // a generalized pentagonal number >= 1
    int sign;         // omega(index), in {-1, +1}
};

/// All generalized pentagonal numbers in [1, n] with their signs, ascending.
/// The hot iteration set of every Euler-type convolution.
std::vector<PentTerm> pentagonal_terms_upto(long long n);

}  // namespace eulerec
