#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "spectile/point_set.hpp"

namespace spectile {

/// Integer polynomial, coefficients in ascending degree. The zero
/// polynomial is the empty vector; otherwise the leading coefficient is
/// non-zero.
struct IntPolynomial {
    std::vector<std::int64_t> coeffs;

    bool is_zero() const { return coeffs.empty(); }
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;
};

IntPolynomial make_poly(std::vector<std::int64_t> coeffs);

/// The N-th cyclotomic polynomial Phi_N: monic, integer coefficients,
/// degree = Euler totient of N. Computed by exact division of x^N - 1 by
/// the product of Phi_d over proper divisors d of N; results are cached.
IntPolynomial cyclotomic_poly(std::int64_t N);

/// An integer combination of the M-th roots of unity:
/// value = sum_k counts[k] * exp(2*pi*i*k/M). counts may be negative.
struct CyclotomicSum {
    std::int64_t order = 1;            // M
    std::vector<std::int64_t> counts;  // length M

    static CyclotomicSum zeros(std::int64_t M);
};

/// Exact zero test: true iff sum_k counts[k] x^k is divisible by Phi_M,
/// equivalently the complex value of the sum is exactly 0. No floating
/// point is involved.
bool root_sum_is_zero(const CyclotomicSum& s);

/// Floating-point value of the sum. Test/prefilter use only; the exact
/// test above is authoritative.
std::complex<double> root_sum_value(const CyclotomicSum& s);

/// Fourier transform of the indicator of S at the character lambda, as a
/// CyclotomicSum of order exponent(g):
/// counts[k] = #{a in S : pairing(lambda, a) = k/M}. Throws if S is empty.
CyclotomicSum indicator_transform(const GroupSpec& g, const PointSet& S,
                                  const GroupElement& lambda);

/// All characters lambda (excluding 0) at which the transform of chi_S
/// vanishes exactly, in ascending index order. Closed under negation.
/// Requires the group within its enumeration cap and S non-empty.
PointSet zero_set(const GroupSpec& g, const PointSet& S);

} // namespace spectile
