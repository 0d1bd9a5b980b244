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

#ifndef DIRSPEC_RATIONAL_HPP
#define DIRSPEC_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace dirspec {

/// Arbitrary-precision rational number, always in lowest terms with a positive denominator.
/**
 * Thin value wrapper around GMP's mpq_class. Results are materialized eagerly
 * so the type behaves like an ordinary value in generic code (no expression templates
 * leak out of the operators).
 */
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}
    Rational(long numerator, long denominator);
    Rational(const mpz_class& numerator, const mpz_class& denominator);
    explicit Rational(const mpz_class& integer) : value_(integer) {}
    explicit Rational(mpq_class value);

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }
    const mpq_class& get_mpq() const noexcept { return value_; }

    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }
    double to_double() const { return value_.get_d(); }

    /// `p/q`, or `p` when the denominator is 1.
    std::string to_string() const;

    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    /// Exact division. Throws InvalidArgumentError on a zero divisor.
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a);

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_class value_;
};

inline bool is_zero(const Rational& r) { return r.sign() == 0; }

/// Same domain as `like`, holding the integer `value`.
inline Rational scalar_like(const Rational& /*like*/, long value) { return Rational(value); }

/// Parses `p`, `-p`, `p/q` or `-p/q` (decimal digits, q nonzero). Throws ParseError.
Rational parse_rational(std::string_view text);

} // namespace dirspec

#endif // DIRSPEC_RATIONAL_HPP
