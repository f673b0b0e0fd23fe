#include "eulerec/series.hpp"

#include <algorithm>
#include <cstdlib>
#include <utility>

namespace eulerec {

long Series::check_order(long order) {
    if (order < 0) fail(errc::invalid_argument, "Series: order must be >= 0");
    return order;
}

Series::Series(long order, std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
    check_order(order);
    coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

Series Series::constant(Int value, long order) {
    Series s(order);
    s.at(0) = std::move(value);
    return s;
}

Series Series::monomial(Int value, long exponent, long order) {
    if (exponent < 0) fail(errc::invalid_argument, "Series::monomial: negative exponent");
    Series s(order);
    if (exponent <= order) s.at(exponent) = std::move(value);
    return s;
}

Series operator+(const Series& f, const Series& g) {
    long n = std::min(f.order(), g.order());
    Series r(n);
    for (long i = 0; i <= n; ++i) r.at(i) = f[i] + g[i];
    return r;
}

Series operator-(const Series& f, const Series& g) {
    long n = std::min(f.order(), g.order());
    Series r(n);
    for (long i = 0; i <= n; ++i) r.at(i) = f[i] - g[i];
    return r;
}

Series operator-(const Series& f) {
    Series r(f.order());
    for (long i = 0; i <= f.order(); ++i) r.at(i) = -f[i];
    return r;
}

Series operator*(const Series& f, const Series& g) {
    long n = std::min(f.order(), g.order());
    Series r(n);
    for (long i = 0; i <= n; ++i) {
        if (f[i] == 0) continue;
        for (long j = 0; i + j <= n; ++j) {
            if (g[j] == 0) continue;
            mpz_addmul(r.at(i + j).get_mpz_t(), f[i].get_mpz_t(), g[j].get_mpz_t());
        }
    }
    return r;
}

namespace {

void require_unit_constant(const Series& f, const char* who) {
    if (f[0] != 1 && f[0] != -1)
        fail(errc::invalid_argument,
             std::string(who) + ": constant term must be +1 or -1, got " + f[0].get_str());
}

}  // namespace

Series reciprocal(const Series& f) {
    require_unit_constant(f, "reciprocal");
    long n = f.order();
    bool negate = f[0] == -1;
    Series g(n);
    g.at(0) = f[0];  // (+-1)^{-1} = +-1
    Int acc;
    for (long m = 1; m <= n; ++m) {
        acc = 0;
        for (long i = 1; i <= m; ++i) {
            if (f[i] == 0) continue;
            mpz_addmul(acc.get_mpz_t(), f[i].get_mpz_t(), g[m - i].get_mpz_t());
        }
        g.at(m) = negate ? acc : -acc;
    }
    return g;
}

Series q_dlog(const Series& f) {
    require_unit_constant(f, "q_dlog");
    long n = f.order();
    Series g(n);
    // Solve g*f = q*f' termwise: g_m f_0 = m f_m - sum_{i=0}^{m-1} g_i f_{m-i}.
    Int rhs;
    for (long m = 1; m <= n; ++m) {
        rhs = m * f[m];
        for (long i = 0; i < m; ++i) {
            if (g[i] == 0 || f[m - i] == 0) continue;
            mpz_submul(rhs.get_mpz_t(), g[i].get_mpz_t(), f[m - i].get_mpz_t());
        }
        // f_0 is +-1 here, so this division is always exact; the check guards
        // the stated contract should the precondition ever be relaxed.
        if (!mpz_divisible_p(rhs.get_mpz_t(), f[0].get_mpz_t()))
            fail(errc::inexact, "q_dlog: non-integral coefficient at q^" + std::to_string(m));
        mpz_divexact(g.at(m).get_mpz_t(), rhs.get_mpz_t(), f[0].get_mpz_t());
    }
    return g;
}

ProductSpec::ProductSpec(std::vector<ProductFactor> factors) : factors_(std::move(factors)) {
    for (const auto& f : factors_) validate(f);
}

ProductSpec& ProductSpec::add(long stride, long offset, int sign, long power) {
    ProductFactor f{stride, offset, sign, power};
    validate(f);
    factors_.push_back(f);
    return *this;
}

void ProductSpec::validate(const ProductFactor& f) {
    if (f.stride < 1) fail(errc::invalid_argument, "ProductSpec: stride must be >= 1");
    if (f.stride + f.offset < 1)
        fail(errc::invalid_argument, "ProductSpec: first exponent stride+offset must be >= 1");
    if (f.sign != 1 && f.sign != -1) fail(errc::invalid_argument, "ProductSpec: sign must be +-1");
    if (f.power == 0) fail(errc::invalid_argument, "ProductSpec: power must be nonzero");
}

namespace {

// In-place multiply by the sparse binomial (1 + sign*q^e): c_n += sign*c_{n-e}.
void apply_binomial(std::vector<Int>& coeffs, long order, long e, int sign) {
    for (long i = order; i >= e; --i) {
        if (coeffs[i - e] == 0) continue;
        if (sign > 0)
            coeffs[i] += coeffs[i - e];
        else
            coeffs[i] -= coeffs[i - e];
    }
}

}  // namespace

Series ProductSpec::expand(long order) const {
    Series::check_order(order);
    Series result = Series::constant(1, order);
    for (const auto& f : factors_) {
        long reps = std::labs(f.power);
        Series base = Series::constant(1, order);
        for (long rep = 0; rep < reps; ++rep)
            for (long e = f.stride + f.offset; e <= order; e += f.stride)
                apply_binomial(base.coeffs_, order, e, f.sign);
        // Negative powers reuse the positive-power expansion through reciprocal.
        result = (f.power > 0) ? result * base : result * reciprocal(base);
    }
    return result;
}

}  // namespace eulerec
