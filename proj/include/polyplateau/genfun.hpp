#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "integer.hpp"

namespace polyplateau {

// Dense integer polynomial in t. Canonical form has no trailing zero
// coefficients; the zero polynomial is the empty vector.
struct IntPolynomial {
    std::vector<Integer> coeffs;  // coeffs[i] multiplies t^i

    static IntPolynomial from_coeffs(std::vector<Integer> c) {
        IntPolynomial p{std::move(c)};
        p.trim();
        return p;
    }
    static IntPolynomial monomial(Integer coefficient, int power) {
        if (power < 0) throw std::domain_error("IntPolynomial: negative power");
        if (coefficient == 0) return {};
        IntPolynomial p;
        p.coeffs.assign(static_cast<std::size_t>(power) + 1, Integer(0));
        p.coeffs.back() = std::move(coefficient);
        return p;
    }

    void trim() {
        while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    }
    bool is_zero() const { return coeffs.empty(); }
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }  // -1 for zero
    Integer coeff(std::size_t i) const { return i < coeffs.size() ? coeffs[i] : Integer(0); }
    bool operator==(const IntPolynomial&) const = default;
};

inline IntPolynomial poly_add(const IntPolynomial& a, const IntPolynomial& b) {
    IntPolynomial r;
    r.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()));
    for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] = a.coeff(i) + b.coeff(i);
    r.trim();
    return r;
}

inline IntPolynomial poly_sub(const IntPolynomial& a, const IntPolynomial& b) {
    IntPolynomial r;
    r.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()));
    for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] = a.coeff(i) - b.coeff(i);
    r.trim();
    return r;
}

inline IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    IntPolynomial r;
    r.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
        if (a.coeffs[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs.size(); ++j)
            r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    }
    return r;  // leading term is nonzero over the integers, nothing to trim
}

inline IntPolynomial poly_pow(const IntPolynomial& a, int m) {
    if (m < 0) throw std::domain_error("poly_pow: negative exponent");
    IntPolynomial result = IntPolynomial::from_coeffs({1});
    IntPolynomial base = a;
    while (m > 0) {
        if (m & 1) result = poly_mul(result, base);
        m >>= 1;
        if (m > 0) base = poly_mul(base, base);
    }
    return result;
}

inline IntPolynomial one_minus_t_pow(int m) {
    return poly_pow(IntPolynomial::from_coeffs({1, -1}), m);
}

// Rational generating function numerator/denominator. Not reduced: equality
// of two of these is tested by cross-multiplying, not by normal forms.
struct RationalGF {
    IntPolynomial numerator;
    IntPolynomial denominator;
    bool operator==(const RationalGF&) const = default;
};

// coeffs[i] is the t^i coefficient; coeffs.size() == order + 1.
struct SeriesPrefix {
    int order = -1;
    std::vector<Integer> coeffs;
    bool operator==(const SeriesPrefix&) const = default;
};

// Maclaurin prefix of f by long division. Requires a unit constant term in
// practice (a zero one is an error); a division that fails to come out exact
// would mean the series is not integral and is also an error.
inline SeriesPrefix series_expand(const RationalGF& f, int order) {
    if (order < 0) throw std::domain_error("series_expand: order must be >= 0");
    if (f.denominator.is_zero() || f.denominator.coeffs.front() == 0)
        throw std::domain_error("series_expand: denominator has zero constant term");
    const Integer& d0 = f.denominator.coeffs.front();
    SeriesPrefix s;
    s.order = order;
    s.coeffs.assign(static_cast<std::size_t>(order) + 1, Integer(0));
    for (std::size_t i = 0; i < s.coeffs.size(); ++i) {
        Integer acc = f.numerator.coeff(i);
        const std::size_t jmax = std::min(i, f.denominator.coeffs.size() - 1);
        for (std::size_t j = 1; j <= jmax; ++j) acc -= f.denominator.coeffs[j] * s.coeffs[i - j];
        if (acc % d0 != 0) throw std::domain_error("series_expand: non-integral coefficient");
        s.coeffs[i] = acc / d0;
    }
    return s;
}

// Generating function by lateral area of width-k directed plateau
// polyhypercubes in dimension d: t^{k(d-1)} / (1-t)^{(2k-1)(d-1)}.
inline RationalGF gf_fixed_width(int d, int k) {
    if (d < 3) throw std::domain_error("gf_fixed_width: dimension must be >= 3");
    if (k < 1) throw std::domain_error("gf_fixed_width: width must be >= 1");
    return {IntPolynomial::monomial(1, k * (d - 1)), one_minus_t_pow((2 * k - 1) * (d - 1))};
}

// Coefficient of x^k in the bivariate generating function
// x t^{d-1} (1-t)^{d-1} / ((1-t)^{2(d-1)} - x t^{d-1}), extracted by
// expanding the geometric series in x:
// t^{k(d-1)} (1-t)^{d-1} / (1-t)^{2k(d-1)}. Not reduced; equal to
// gf_fixed_width(d, k) after cancelling (1-t)^{d-1}.
inline RationalGF bivariate_width_slice(int d, int k) {
    if (d < 3) throw std::domain_error("bivariate_width_slice: dimension must be >= 3");
    if (k < 1) throw std::domain_error("bivariate_width_slice: width must be >= 1");
    return {poly_mul(IntPolynomial::monomial(1, k * (d - 1)), one_minus_t_pow(d - 1)),
            one_minus_t_pow(2 * k * (d - 1))};
}

// Generating function over all widths at once:
// t^{d-1} (1-t)^{d-1} / ((1-t)^{2(d-1)} - t^{d-1}).
inline RationalGF gf_total(int d) {
    if (d < 3) throw std::domain_error("gf_total: dimension must be >= 3");
    return {poly_mul(IntPolynomial::monomial(1, d - 1), one_minus_t_pow(d - 1)),
            poly_sub(one_minus_t_pow(2 * (d - 1)), IntPolynomial::monomial(1, d - 1))};
}

}  // namespace polyplateau
