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

#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"

#include "dirspec/cyclotomic.hpp"
#include "dirspec/errors.hpp"
#include "dirspec/rational.hpp"
#include "support.hpp"

using namespace dirspec;
using dirspec::testing::q;

namespace {

// Schoolbook long division by x - 1 (synthetic division), independent of the library.
std::vector<long> divide_by_x_minus_1(const std::vector<long>& num) {
    std::vector<long> quot(num.size() - 1);
    long carry = 0;
    for (std::size_t k = num.size(); k-- > 1;) {
        carry += num[k];
        quot[k - 1] = carry;
    }
    REQUIRE(carry + num[0] == 0);
    return quot;
}

IntPoly ints(std::initializer_list<long> v) {
    IntPoly p;
    for (long c : v) p.emplace_back(c);
    return p;
}

CycloElement zeta(int n, long k) { return CycloElement::zeta_power(n, k); }

CycloElement random_element(std::mt19937_64& rng, int n) {
    std::vector<Rational> c;
    for (int i = 0; i < euler_phi(n); ++i) {
        const long p = static_cast<long>(rng() % 19) - 9;
        const long d = static_cast<long>(rng() % 4) + 1;
        c.emplace_back(p, d);
    }
    return CycloElement::from_coefficients(n, c);
}

} // namespace

TEST_CASE("rational arithmetic is exact and reduced") {
    CHECK(q(2, 4) == q(1, 2));
    CHECK(q(1, -3).denominator() == 3);
    CHECK(q(1, -3).numerator() == -1);
    CHECK(q(1, 3) + q(1, 6) == q(1, 2));
    CHECK((q(2, 3) * q(3, 4)).to_string() == "1/2");
    CHECK(q(-7).to_string() == "-7");
    CHECK(q(1, 3) < q(1, 2));
    CHECK_THROWS_AS(q(1, 0), InvalidArgumentError);
    CHECK_THROWS_AS(q(1) / q(0), InvalidArgumentError);
}

TEST_CASE("rational text grammar") {
    CHECK(parse_rational("3/4") == q(3, 4));
    CHECK(parse_rational("-3/4") == q(-3, 4));
    CHECK(parse_rational("5") == q(5));
    CHECK(parse_rational("4/6") == q(2, 3));
    CHECK(parse_rational("-0") == q(0));
    CHECK(parse_rational("123456789012345678901234567890").to_string() == "123456789012345678901234567890");
    for (const char* bad : {"", "-", "3/", "/3", "3/0", "+3", "1.5", "--1", "3/-4", "a", "1 /2"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(parse_rational(bad), ParseError);
    }
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_poly(1) == ints({-1, 1}));
    CHECK(cyclotomic_poly(2) == ints({1, 1}));
    CHECK(cyclotomic_poly(4) == ints({1, 0, 1}));
    CHECK(cyclotomic_poly(6) == ints({1, -1, 1}));
    CHECK(poly_to_string(cyclotomic_poly(4)) == "x^2 + 1");

    // Phi_7 = (x^7 - 1) / (x - 1)
    const auto phi7 = divide_by_x_minus_1({-1, 0, 0, 0, 0, 0, 0, 1});
    IntPoly expected;
    for (long c : phi7) expected.emplace_back(c);
    CHECK(cyclotomic_poly(7) == expected);
    CHECK(poly_to_string(cyclotomic_poly(7)) == "x^6 + x^5 + x^4 + x^3 + x^2 + x + 1");

    // Phi_105 is the first with a coefficient of magnitude 2.
    const auto p105 = cyclotomic_poly(105);
    bool has_minus_two = false;
    for (const auto& c : p105) has_minus_two = has_minus_two || c == -2;
    CHECK(has_minus_two);

    for (int n = 1; n <= 60; ++n) {
        CAPTURE(n);
        const auto p = cyclotomic_poly(n);
        CHECK(static_cast<int>(p.size()) - 1 == euler_phi(n));
        CHECK(p.back() == 1);
        // Phi_n(zeta_n) = 0 numerically.
        std::complex<double> v = 0, z = std::polar(1.0, 2 * M_PI / n), pw = 1;
        for (const auto& c : p) {
            v += c.get_d() * pw;
            pw *= z;
        }
        CHECK(std::abs(v) < 1e-6);
    }
    CHECK_THROWS_AS(cyclotomic_poly(0), InvalidArgumentError);
}

TEST_CASE("multiplication reduces modulo Phi_n") {
    CHECK(zeta(4, 1) * zeta(4, 1) == CycloElement::from_rational(4, q(-1)));
    CHECK(zeta(7, 3) * zeta(7, 4) == CycloElement::one(7));
    // (z + z^6)^2 = z^2 + 2 + z^12 = z^2 + 2 + z^5
    const auto s = zeta(7, 1) + zeta(7, 6);
    const auto sq = s * s;
    const std::vector<Rational> want{q(2), q(0), q(1), q(0), q(0), q(1)};
    CHECK(sq.coefficients() == want);
    CHECK(sq == zeta(7, 2) + CycloElement::from_rational(7, q(2)) + zeta(7, 5));
    // z^6 itself has no basis monomial: z^6 = -(1 + z + ... + z^5).
    CHECK(zeta(7, 6).coefficient(0) == q(-1));
    CHECK_THROWS_AS(zeta(7, 1) * zeta(5, 1), DomainError);
    CHECK_THROWS_AS(zeta(7, 1) + zeta(5, 1), DomainError);
}

TEST_CASE("conjugation") {
    CHECK(zeta(7, 1).conj() == zeta(7, 6));
    CHECK(CycloElement::from_rational(7, q(3, 2)).conj() == CycloElement::from_rational(7, q(3, 2)));
    CHECK((zeta(7, 1) + zeta(7, 2)).conj() == zeta(7, 6) + zeta(7, 5));
    CHECK(zeta(12, 5).conj() == zeta(12, 7));
}

TEST_CASE("exact zero test") {
    CycloElement sum = CycloElement::zero(7);
    for (int k = 0; k < 7; ++k) sum += zeta(7, k);
    CHECK(is_zero(sum));
    CHECK_FALSE(is_zero(zeta(7, 1) - zeta(7, 2)));
    // zeta_6 = 1 + zeta_3, with zeta_3 = zeta_6^2.
    const auto z6 = zeta(6, 1) - zeta(6, 2) - CycloElement::one(6);
    CHECK(is_zero(z6));
    CHECK(std::abs(std::exp(std::complex<double>(0, 2 * M_PI / 6)) - std::exp(std::complex<double>(0, 2 * M_PI / 3)) -
                   1.0) < 1e-12);
}

TEST_CASE("numeric approximation") {
    const auto i4 = approx(zeta(4, 1), 128);
    CHECK(std::abs(i4 - std::complex<double>(0, 1)) < 1e-15);
    const auto c = approx(zeta(7, 1) + zeta(7, 6), 128);
    CHECK(std::abs(c.real() - 2 * std::cos(2 * M_PI / 7)) < 1e-15);
    CHECK(std::abs(c.imag()) < 1e-15);
    CHECK(approx(CycloElement::zero(9), 53) == std::complex<double>(0, 0));
    CHECK(approx_error_bound(CycloElement::zero(9), 53) == 0.0);
    CHECK_THROWS_AS(approx(zeta(5, 1), 52), InvalidArgumentError);
    const auto dec = approx_decimal(zeta(7, 1) + zeta(7, 6), 128, 12);
    CHECK(dec.first == "1.24697960372");
}

TEST_CASE("ring laws on random elements") {
    std::mt19937_64 rng(2024);
    for (int n : {1, 5, 7, 12, 15, 28}) {
        CAPTURE(n);
        for (int trial = 0; trial < 20; ++trial) {
            const auto a = random_element(rng, n);
            const auto b = random_element(rng, n);
            const auto c = random_element(rng, n);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * b == b * a);
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(is_zero(a - a));
            CHECK(a + (-a) == CycloElement::zero(n));
            CHECK(a.conj().conj() == a);
            CHECK((a * b).conj() == a.conj() * b.conj());
            CHECK((a + b).conj() == a.conj() + b.conj());
            const auto re = a + a.conj();
            CHECK(re.conj() == re);
            // Numerical embedding is a ring homomorphism within the documented bound.
            const auto ab = approx(a * b, 128);
            const double tol = approx_error_bound(a * b, 128) + std::abs(approx(a, 128)) * approx_error_bound(b, 128) +
                               std::abs(approx(b, 128)) * approx_error_bound(a, 128) + 1e-12;
            CHECK(std::abs(ab - approx(a, 128) * approx(b, 128)) < tol);
        }
        for (int k = 0; k <= n; ++k) {
            CHECK(zeta(n, k) * zeta(n, n - k) == CycloElement::one(n));
        }
    }
}

TEST_CASE("from_coefficients validates length") {
    const std::vector<Rational> two{q(1), q(2)};
    CHECK_THROWS_AS(CycloElement::from_coefficients(7, two), InvalidArgumentError);
    const std::vector<Rational> six{q(1, 2), q(0), q(0), q(0), q(0), q(-3, 4)};
    const auto e = CycloElement::from_coefficients(7, six);
    CHECK(e.coefficients() == six);
    CHECK(e.to_string() == "1/2 - 3/4*z^5");
    CHECK_FALSE(e.is_rational());
    CHECK(CycloElement::from_rational(7, q(5)).is_rational());
}
