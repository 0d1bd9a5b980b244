/*
   Copyright 2026 The dirspec Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef DIRSPEC_CYCLOTOMIC_HPP
#define DIRSPEC_CYCLOTOMIC_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "dirspec/rational.hpp"

namespace dirspec {

/// Dense integer polynomial, coefficient of x^i at index i.
using IntPoly = std::vector<mpz_class>;

/// The n-th cyclotomic polynomial, by exact division of x^n - 1 by the Phi_d of the proper divisors d of n.
IntPoly cyclotomic_poly(int n);

/// Euler's totient, the degree of Phi_n.
int euler_phi(int n);

/// Human-readable form, highest degree first, e.g. `x^2 + 1`.
std::string poly_to_string(const IntPoly& p, char var = 'x');

namespace detail {
struct CycloContext;
const CycloContext& cyclo_context(int n);
} // namespace detail

/// Element of the cyclotomic field Q(zeta_n), stored as a polynomial in zeta_n of degree < phi(n).
/**
 * The representation is reduced modulo Phi_n, so it is unique and equality is
 * structural. Internally the coefficients share one positive denominator and the
 * numerators are kept coprime to it; `coefficient(i)` hands out the reduced Rational.
 *
 * Elements of different order never mix: every binary operation throws DomainError
 * on an order mismatch. There is no division.
 */
class CycloElement {
public:
    static CycloElement zero(int n);
    static CycloElement one(int n);
    static CycloElement from_rational(int n, const Rational& r);
    /// zeta_n^k for any integer k (negative allowed).
    static CycloElement zeta_power(int n, long k);
    /// Coefficients in the basis 1, zeta, ..., zeta^(phi-1); `coeffs.size()` must equal phi(n).
    static CycloElement from_coefficients(int n, std::span<const Rational> coeffs);

    int order() const noexcept;
    /// phi(n), the length of the coefficient vector.
    std::size_t degree() const noexcept { return num_.size(); }

    Rational coefficient(std::size_t i) const;
    std::vector<Rational> coefficients() const;

    /// True when the element lies in Q (only the constant coefficient may be nonzero).
    bool is_rational() const;

    /// The automorphism zeta_n -> zeta_n^(n-1), i.e. complex conjugation.
    CycloElement conj() const;

    CycloElement& operator+=(const CycloElement& o);
    CycloElement& operator-=(const CycloElement& o);
    CycloElement& operator*=(const CycloElement& o);
    CycloElement& operator*=(const Rational& r);

    friend CycloElement operator+(CycloElement a, const CycloElement& b) { return a += b; }
    friend CycloElement operator-(CycloElement a, const CycloElement& b) { return a -= b; }
    friend CycloElement operator*(const CycloElement& a, const CycloElement& b);
    friend CycloElement operator*(CycloElement a, const Rational& r) { return a *= r; }
    friend CycloElement operator*(const Rational& r, CycloElement a) { return a *= r; }
    friend CycloElement operator-(const CycloElement& a);

    friend bool operator==(const CycloElement& a, const CycloElement& b);

    friend bool is_zero(const CycloElement& a);

    /// e.g. `1/2 + 3*z^2 - z^5`.
    std::string to_string() const;

private:
    CycloElement(const detail::CycloContext* ctx, std::vector<mpz_class> num, mpz_class den);
    void normalize();
    void require_same_order(const CycloElement& o) const;

    const detail::CycloContext* ctx_;
    std::vector<mpz_class> num_;
    mpz_class den_;
};

inline CycloElement conj(const CycloElement& a) { return a.conj(); }

/// Same field as `like`, holding the integer `value`.
inline CycloElement scalar_like(const CycloElement& like, long value) {
    return CycloElement::from_rational(like.order(), Rational(value));
}

/// Numeric value of `a` with zeta_n = exp(2*pi*i/n), evaluated with `precision_bits` bits of
/// working precision (>= 53) and rounded to double. Never used by exact predicates.
std::complex<double> approx(const CycloElement& a, int precision_bits = 53);

/// Upper bound on |approx(a, bits) - a|:
///   (sum of |coefficients|) * ((phi + 4) * 2^-bits + 2^-52).
/// The first term covers the working-precision evaluation, the second the final rounding to double.
double approx_error_bound(const CycloElement& a, int precision_bits);

/// Decimal rendering of the real and imaginary parts with `digits` significant digits.
std::pair<std::string, std::string> approx_decimal(const CycloElement& a, int precision_bits, int digits);

} // namespace dirspec

#endif // DIRSPEC_CYCLOTOMIC_HPP
