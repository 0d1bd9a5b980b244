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

#include "dirspec/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include <mpfr.h>

#include "dirspec/errors.hpp"

namespace dirspec {

namespace {

void trim(IntPoly& p) {
    while (p.size() > 1 && p.back() == 0) p.pop_back();
}

IntPoly multiply(const IntPoly& a, const IntPoly& b) {
    IntPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            r[i + j] += a[i] * b[j];
        }
    }
    return r;
}

// Exact quotient by a monic divisor; the remainder must vanish.
IntPoly divide_exact(IntPoly num, const IntPoly& den) {
    const std::size_t dd = den.size() - 1;
    if (num.size() < den.size()) {
        throw Error("cyclotomic division: dividend degree too small");
    }
    IntPoly q(num.size() - dd, 0);
    for (std::size_t k = num.size(); k-- > dd;) {
        const mpz_class c = num[k];
        q[k - dd] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= dd; ++j) {
            num[k - dd + j] -= c * den[j];
        }
    }
    for (std::size_t j = 0; j < dd; ++j) {
        if (num[j] != 0) throw Error("cyclotomic division left a remainder");
    }
    return q;
}

IntPoly cyclotomic_memo(int n, std::map<int, IntPoly>& memo) {
    if (auto it = memo.find(n); it != memo.end()) return it->second;
    IntPoly xn(static_cast<std::size_t>(n) + 1, 0);
    xn[0] = -1;
    xn[static_cast<std::size_t>(n)] = 1;
    IntPoly divisor{1};
    for (int d = 1; d < n; ++d) {
        if (n % d == 0) divisor = multiply(divisor, cyclotomic_memo(d, memo));
    }
    IntPoly result = divide_exact(std::move(xn), divisor);
    trim(result);
    memo.emplace(n, result);
    return result;
}

} // namespace

IntPoly cyclotomic_poly(int n) {
    if (n < 1) throw InvalidArgumentError("cyclotomic_poly: n must be positive");
    std::map<int, IntPoly> memo;
    return cyclotomic_memo(n, memo);
}

int euler_phi(int n) {
    if (n < 1) throw InvalidArgumentError("euler_phi: n must be positive");
    int result = n;
    int m = n;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

std::string poly_to_string(const IntPoly& p, char var) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = p.size(); k-- > 0;) {
        const mpz_class& c = p[k];
        if (c == 0) continue;
        const mpz_class mag = abs(c);
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (k == 0 || mag != 1) os << mag.get_str();
        if (k >= 1) os << var;
        if (k >= 2) os << '^' << k;
    }
    if (first) os << '0';
    return os.str();
}

namespace detail {

struct CycloContext {
    int n = 1;
    std::size_t phi = 1;
    IntPoly modulus;                           // monic, degree phi
    std::vector<std::vector<mpz_class>> powers; // x^k mod Phi_n for 0 <= k < n, each of length phi

    // Reduces a coefficient vector of any length in place to length phi.
    void reduce(std::vector<mpz_class>& r) const {
        for (std::size_t k = r.size(); k-- > phi;) {
            const mpz_class c = r[k];
            if (c == 0) continue;
            for (std::size_t j = 0; j < phi; ++j) {
                r[k - phi + j] -= c * modulus[j];
            }
        }
        r.resize(phi);
    }
};

const CycloContext& cyclo_context(int n) {
    if (n < 1) throw InvalidArgumentError("cyclotomic order must be positive");
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<CycloContext>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[n];
    if (!slot) {
        auto ctx = std::make_unique<CycloContext>();
        ctx->n = n;
        ctx->modulus = cyclotomic_poly(n);
        ctx->phi = ctx->modulus.size() - 1;
        ctx->powers.reserve(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k) {
            std::vector<mpz_class> v(static_cast<std::size_t>(k) + 1, 0);
            v[static_cast<std::size_t>(k)] = 1;
            ctx->reduce(v);
            ctx->powers.push_back(std::move(v));
        }
        slot = std::move(ctx);
    }
    return *slot;
}

} // namespace detail

CycloElement::CycloElement(const detail::CycloContext* ctx, std::vector<mpz_class> num, mpz_class den)
    : ctx_(ctx), num_(std::move(num)), den_(std::move(den)) {
    normalize();
}

void CycloElement::normalize() {
    if (den_ < 0) {
        den_ = -den_;
        for (auto& c : num_) c = -c;
    }
    mpz_class g = den_;
    for (const auto& c : num_) {
        if (g == 1) break;
        if (c != 0) g = gcd(g, c);
    }
    const bool all_zero = std::all_of(num_.begin(), num_.end(), [](const mpz_class& c) { return c == 0; });
    if (all_zero) {
        den_ = 1;
        return;
    }
    if (g != 1) {
        for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    }
}

void CycloElement::require_same_order(const CycloElement& o) const {
    if (ctx_ != o.ctx_) {
        throw DomainError("cyclotomic order mismatch: " + std::to_string(ctx_->n) + " vs " +
                          std::to_string(o.ctx_->n));
    }
}

CycloElement CycloElement::zero(int n) {
    const auto& ctx = detail::cyclo_context(n);
    return CycloElement(&ctx, std::vector<mpz_class>(ctx.phi, 0), 1);
}

CycloElement CycloElement::one(int n) { return from_rational(n, Rational(1)); }

CycloElement CycloElement::from_rational(int n, const Rational& r) {
    const auto& ctx = detail::cyclo_context(n);
    std::vector<mpz_class> num(ctx.phi, 0);
    num[0] = r.numerator();
    return CycloElement(&ctx, std::move(num), r.denominator());
}

CycloElement CycloElement::zeta_power(int n, long k) {
    const auto& ctx = detail::cyclo_context(n);
    long e = k % n;
    if (e < 0) e += n;
    return CycloElement(&ctx, ctx.powers[static_cast<std::size_t>(e)], 1);
}

CycloElement CycloElement::from_coefficients(int n, std::span<const Rational> coeffs) {
    const auto& ctx = detail::cyclo_context(n);
    if (coeffs.size() != ctx.phi) {
        throw InvalidArgumentError("expected " + std::to_string(ctx.phi) + " coefficients for order " +
                                   std::to_string(n) + ", got " + std::to_string(coeffs.size()));
    }
    mpz_class den = 1;
    for (const auto& c : coeffs) den = lcm(den, c.denominator());
    std::vector<mpz_class> num;
    num.reserve(coeffs.size());
    for (const auto& c : coeffs) num.push_back(c.numerator() * (den / c.denominator()));
    return CycloElement(&ctx, std::move(num), den);
}

int CycloElement::order() const noexcept { return ctx_->n; }

Rational CycloElement::coefficient(std::size_t i) const { return Rational(num_.at(i), den_); }

std::vector<Rational> CycloElement::coefficients() const {
    std::vector<Rational> out;
    out.reserve(num_.size());
    for (const auto& c : num_) out.emplace_back(c, den_);
    return out;
}

bool CycloElement::is_rational() const {
    return std::all_of(num_.begin() + 1, num_.end(), [](const mpz_class& c) { return c == 0; });
}

CycloElement CycloElement::conj() const {
    const int n = ctx_->n;
    std::vector<mpz_class> out(ctx_->phi, 0);
    for (std::size_t i = 0; i < num_.size(); ++i) {
        if (num_[i] == 0) continue;
        const auto& img = ctx_->powers[static_cast<std::size_t>((n - static_cast<int>(i) % n) % n)];
        for (std::size_t j = 0; j < out.size(); ++j) {
            if (img[j] != 0) out[j] += num_[i] * img[j];
        }
    }
    return CycloElement(ctx_, std::move(out), den_);
}

CycloElement& CycloElement::operator+=(const CycloElement& o) {
    require_same_order(o);
    if (den_ == o.den_) {
        for (std::size_t i = 0; i < num_.size(); ++i) num_[i] += o.num_[i];
    } else {
        for (std::size_t i = 0; i < num_.size(); ++i) num_[i] = num_[i] * o.den_ + o.num_[i] * den_;
        den_ *= o.den_;
    }
    normalize();
    return *this;
}

CycloElement& CycloElement::operator-=(const CycloElement& o) {
    require_same_order(o);
    if (den_ == o.den_) {
        for (std::size_t i = 0; i < num_.size(); ++i) num_[i] -= o.num_[i];
    } else {
        for (std::size_t i = 0; i < num_.size(); ++i) num_[i] = num_[i] * o.den_ - o.num_[i] * den_;
        den_ *= o.den_;
    }
    normalize();
    return *this;
}

CycloElement operator*(const CycloElement& a, const CycloElement& b) {
    a.require_same_order(b);
    const std::size_t phi = a.num_.size();
    std::vector<mpz_class> prod(2 * phi - 1, 0);
    for (std::size_t i = 0; i < phi; ++i) {
        if (a.num_[i] == 0) continue;
        for (std::size_t j = 0; j < phi; ++j) {
            if (b.num_[j] != 0) mpz_addmul(prod[i + j].get_mpz_t(), a.num_[i].get_mpz_t(), b.num_[j].get_mpz_t());
        }
    }
    a.ctx_->reduce(prod);
    return CycloElement(a.ctx_, std::move(prod), a.den_ * b.den_);
}

CycloElement& CycloElement::operator*=(const CycloElement& o) { return *this = *this * o; }

CycloElement& CycloElement::operator*=(const Rational& r) {
    const mpz_class p = r.numerator();
    for (auto& c : num_) c *= p;
    den_ *= r.denominator();
    normalize();
    return *this;
}

CycloElement operator-(const CycloElement& a) {
    CycloElement r = a;
    for (auto& c : r.num_) c = -c;
    return r;
}

bool operator==(const CycloElement& a, const CycloElement& b) {
    return a.ctx_ == b.ctx_ && a.den_ == b.den_ && a.num_ == b.num_;
}

bool is_zero(const CycloElement& a) {
    return std::all_of(a.num_.begin(), a.num_.end(), [](const mpz_class& c) { return c == 0; });
}

std::string CycloElement::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < num_.size(); ++k) {
        if (num_[k] == 0) continue;
        const Rational c(num_[k], den_);
        const Rational mag = c.sign() < 0 ? -c : c;
        if (first) {
            if (c.sign() < 0) os << '-';
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        if (k == 0) {
            os << mag;
        } else {
            if (mag != Rational(1)) os << mag << '*';
            os << 'z';
            if (k >= 2) os << '^' << k;
        }
    }
    if (first) os << '0';
    return os.str();
}

namespace {

// RAII holder for an mpfr_t.
class Mpfr {
public:
    explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    ~Mpfr() { mpfr_clear(v_); }
    Mpfr(const Mpfr&) = delete;
    Mpfr& operator=(const Mpfr&) = delete;
    mpfr_ptr get() { return v_; }

private:
    mpfr_t v_;
};

void evaluate(const CycloElement& a, int precision_bits, Mpfr& re, Mpfr& im) {
    if (precision_bits < 53) throw InvalidArgumentError("precision_bits must be at least 53");
    const mpfr_prec_t prec = precision_bits;
    const int n = a.order();
    Mpfr two_pi(prec), angle(prec), c(prec), s(prec), coef(prec), term(prec);
    mpfr_const_pi(two_pi.get(), MPFR_RNDN);
    mpfr_mul_ui(two_pi.get(), two_pi.get(), 2, MPFR_RNDN);
    for (std::size_t k = 0; k < a.degree(); ++k) {
        const Rational r = a.coefficient(k);
        if (r.sign() == 0) continue;
        mpfr_set_q(coef.get(), r.get_mpq().get_mpq_t(), MPFR_RNDN);
        mpfr_mul_ui(angle.get(), two_pi.get(), static_cast<unsigned long>(k), MPFR_RNDN);
        mpfr_div_ui(angle.get(), angle.get(), static_cast<unsigned long>(n), MPFR_RNDN);
        mpfr_sin_cos(s.get(), c.get(), angle.get(), MPFR_RNDN);
        mpfr_mul(term.get(), coef.get(), c.get(), MPFR_RNDN);
        mpfr_add(re.get(), re.get(), term.get(), MPFR_RNDN);
        mpfr_mul(term.get(), coef.get(), s.get(), MPFR_RNDN);
        mpfr_add(im.get(), im.get(), term.get(), MPFR_RNDN);
    }
}

std::string mpfr_decimal(Mpfr& v, int digits) {
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Rg", digits, v.get());
    std::string out(buf);
    mpfr_free_str(buf);
    return out;
}

} // namespace

std::complex<double> approx(const CycloElement& a, int precision_bits) {
    Mpfr re(precision_bits < 53 ? 53 : precision_bits), im(precision_bits < 53 ? 53 : precision_bits);
    evaluate(a, precision_bits, re, im);
    return {mpfr_get_d(re.get(), MPFR_RNDN), mpfr_get_d(im.get(), MPFR_RNDN)};
}

double approx_error_bound(const CycloElement& a, int precision_bits) {
    double mass = 0.0;
    for (std::size_t k = 0; k < a.degree(); ++k) mass += std::fabs(a.coefficient(k).to_double());
    const double phi = static_cast<double>(a.degree());
    return mass * ((phi + 4.0) * std::ldexp(1.0, -precision_bits) + std::ldexp(1.0, -52));
}

std::pair<std::string, std::string> approx_decimal(const CycloElement& a, int precision_bits, int digits) {
    Mpfr re(precision_bits < 53 ? 53 : precision_bits), im(precision_bits < 53 ? 53 : precision_bits);
    evaluate(a, precision_bits, re, im);
    return {mpfr_decimal(re, digits), mpfr_decimal(im, digits)};
}

} // namespace dirspec
