#pragma once

#include <vector>

#include "eulerec/types.hpp"

namespace eulerec {

/// Truncated formal power series in q with exact integer coefficients.
///
/// A value of order N stores the coefficients of q^0..q^N. Operations on
/// operands of different orders truncate to the smaller order. Values are
/// immutable once built; every operation returns a fresh series.
class Series {
public:
    Series() : coeffs_(1) {}
    explicit Series(long order) : coeffs_(check_order(order) + 1) {}
    Series(long order, std::vector<Int> coeffs);

    static Series constant(Int value, long order);
    /// value * q^exponent, truncated at `order`.
    static Series monomial(Int value, long exponent, long order);

    long order() const { return static_cast<long>(coeffs_.size()) - 1; }
    const Int& operator[](long i) const { return coeffs_[static_cast<std::size_t>(i)]; }
    const std::vector<Int>& coeffs() const { return coeffs_; }

    bool operator==(const Series& other) const { return coeffs_ == other.coeffs_; }

    friend Series operator+(const Series& f, const Series& g);
    friend Series operator-(const Series& f, const Series& g);
    friend Series operator-(const Series& f);
    /// Cauchy product: c_n = sum_{i=0}^{n} f_i g_{n-i}, up to the smaller order.
    friend Series operator*(const Series& f, const Series& g);

    friend Series reciprocal(const Series& f);
    friend Series q_dlog(const Series& f);
    friend class ProductSpec;

private:
    static long check_order(long order);
    Int& at(long i) { return coeffs_[static_cast<std::size_t>(i)]; }

    std::vector<Int> coeffs_;
};

/// Multiplicative inverse up to the truncation order, by forward substitution
///   g_n = f_0^{-1} (delta_{n,0} - sum_{i=1}^{n} f_i g_{n-i}).
/// The constant term must be +1 or -1 so the inverse stays integral.
Series reciprocal(const Series& f);

/// q d/dq log f, i.e. the solution g of g*f = q*f'. Requires f_0 in {+1,-1};
/// raises errc::inexact if any coefficient of the unique rational solution
/// fails to be an integer.
Series q_dlog(const Series& f);

/// One factor family prod_{m>=1} (1 + sign*q^(stride*m + offset))^power of an
/// infinite product. stride >= 1 and stride + offset >= 1, so every generated
/// exponent is positive; e.g. {1,0,-1,1} is prod(1-q^m), {2,-1,+1,2} is
/// prod(1+q^(2m-1))^2.
struct ProductFactor {
    long stride = 1;
    long offset = 0;
    int sign = -1;   // +1 or -1
    long power = 1;  // nonzero; negative powers go through reciprocal()
};

/// Finite description of an infinite product to be expanded to a truncation
/// order. Only factors whose smallest exponent is <= the order contribute.
class ProductSpec {
public:
    ProductSpec() = default;
    explicit ProductSpec(std::vector<ProductFactor> factors);

    ProductSpec& add(long stride, long offset, int sign, long power = 1);
    const std::vector<ProductFactor>& factors() const { return factors_; }

    /// Exact expansion truncated at `order`.
    Series expand(long order) const;

private:
    static void validate(const ProductFactor& f);
    std::vector<ProductFactor> factors_;
};

inline Series product_expand(const ProductSpec& spec, long order) { return spec.expand(order); }

}  // namespace eulerec
