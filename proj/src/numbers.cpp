#include "eulerec/numbers.hpp"

#include <cmath>

namespace eulerec {

long long isqrt(long long n) {
    if (n < 0) fail(errc::invalid_argument, "isqrt: negative argument");
    if (n == 0) return 0;
    auto r = static_cast<long long>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

int omega(long long m) {
    if (m < 0) return 0;
    // m = (3k^2-k)/2  <=>  24m+1 = (6k-1)^2;  m = (3k^2+k)/2  <=>  24m+1 = (6k+1)^2.
    long long t = 24 * m + 1;
    long long r = isqrt(t);
    if (r * r != t) return 0;
    long long k;
    switch (r % 6) {
        case 1: k = (r - 1) / 6; break;  // covers m = 0 with k = 0
        case 5: k = (r + 1) / 6; break;
        default: return 0;
    }
    return (k % 2 == 0) ? 1 : -1;
}

int omega_prime(long long n) {
    if (n < 0) fail(errc::invalid_argument, "omega_prime: negative argument");
    return (n % 2 == 0) ? omega(n / 2) : 0;
}

long long omega_k(long long k, long long m) {
    if (k <= 0) fail(errc::invalid_argument, "omega_k: k must be >= 1");
    long long sum = 0;
    for (long long j = m; j >= 0; j -= k) sum += omega(j);
    return sum;
}

std::vector<long long> omega_k_table(long long k, long long m_max) {
    if (k <= 0) fail(errc::invalid_argument, "omega_k_table: k must be >= 1");
    if (m_max < 0) fail(errc::invalid_argument, "omega_k_table: negative m_max");
    std::vector<long long> table(static_cast<std::size_t>(m_max) + 1);
    for (long long m = 0; m <= m_max; ++m)
        table[m] = omega(m) + (m >= k ? table[m - k] : 0);
    return table;
}

int delta_s(long long n) {
    if (n < 0) fail(errc::invalid_argument, "delta_s: negative argument");
    long long r = isqrt(n);
    return r * r == n ? 1 : 0;
}

int delta_t(long long n) {
    if (n < 0) fail(errc::invalid_argument, "delta_t: negative argument");
    long long t = 8 * n + 1;
    long long r = isqrt(t);
    return r * r == t ? 1 : 0;
}

std::vector<PentTerm> pentagonal_terms_upto(long long n) {
    std::vector<PentTerm> terms;
    for (long long k = 1;; ++k) {
        long long lo = k * (3 * k - 1) / 2;
        if (lo > n) break;
        int sign = (k % 2 == 0) ? 1 : -1;
        terms.push_back({lo, sign});
        long long hi = k * (3 * k + 1) / 2;
        if (hi <= n) terms.push_back({hi, sign});
    }
    return terms;
}

}  // namespace eulerec
