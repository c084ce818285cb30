// Copyright 2026 The pingpong-ghz Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pingpong/exact.h"

#include <cmath>
#include <ostream>
#include <sstream>

namespace pingpong {

namespace {

int rational_sign(const Rational &r) {
    return r > 0 ? 1 : (r < 0 ? -1 : 0);
}

std::string rational_text(const Rational &r) {
    std::ostringstream out;
    out << r;
    return out.str();
}

// Renders q*√2 as "a√2/b" with an explicit leading sign when `signed_form` is set.
std::string sqrt2_term_text(const Rational &q, bool signed_form) {
    std::string sign = q < 0 ? "-" : (signed_form ? "+" : "");
    Rational mag = q < 0 ? Rational(-q) : q;
    BigInt num = numerator(mag);
    BigInt den = denominator(mag);
    std::string out = sign + (num == 1 ? std::string() : num.str()) + "√2";
    if (den != 1) {
        out += "/" + den.str();
    }
    return out;
}

}  // namespace

ExactReal ExactReal::fraction(long long num, long long den) {
    if (den == 0) {
        throw std::domain_error("ExactReal::fraction: zero denominator");
    }
    return ExactReal(Rational(num, den));
}

ExactReal ExactReal::sqrt2_times(long long num, long long den) {
    if (den == 0) {
        throw std::domain_error("ExactReal::sqrt2_times: zero denominator");
    }
    return ExactReal(Rational(0), Rational(num, den));
}

ExactReal ExactReal::inv_sqrt2() {
    return sqrt2_times(1, 2);
}

int ExactReal::sign() const {
    int sp = rational_sign(p_);
    int sq = rational_sign(q_);
    if (sq == 0) {
        return sp;
    }
    if (sp == 0 || sp == sq) {
        return sq;
    }
    // Opposite signs: the larger magnitude wins. p^2 == 2q^2 is impossible.
    return p_ * p_ > 2 * q_ * q_ ? sp : sq;
}

ExactReal ExactReal::conjugate() const {
    return ExactReal(p_, -q_);
}

ExactReal ExactReal::inv() const {
    if (is_zero()) {
        throw std::domain_error("ExactReal::inv: division by zero");
    }
    Rational norm = p_ * p_ - 2 * q_ * q_;
    return ExactReal(p_ / norm, -q_ / norm);
}

double ExactReal::to_double() const {
    long double p = p_.convert_to<long double>();
    long double q = q_.convert_to<long double>();
    return static_cast<double>(p + q * std::sqrt(2.0L));
}

std::string ExactReal::to_string() const {
    if (q_ == 0) {
        return rational_text(p_);
    }
    if (p_ == 0) {
        return sqrt2_term_text(q_, false);
    }
    return rational_text(p_) + sqrt2_term_text(q_, true);
}

ExactReal &ExactReal::operator+=(const ExactReal &other) {
    p_ += other.p_;
    q_ += other.q_;
    return *this;
}

ExactReal &ExactReal::operator-=(const ExactReal &other) {
    p_ -= other.p_;
    q_ -= other.q_;
    return *this;
}

ExactReal &ExactReal::operator*=(const ExactReal &other) {
    Rational p = p_ * other.p_ + 2 * q_ * other.q_;
    Rational q = p_ * other.q_ + q_ * other.p_;
    p_ = std::move(p);
    q_ = std::move(q);
    return *this;
}

ExactReal &ExactReal::operator/=(const ExactReal &other) {
    return *this *= other.inv();
}

std::strong_ordering operator<=>(const ExactReal &a, const ExactReal &b) {
    int s = (a - b).sign();
    if (s < 0) {
        return std::strong_ordering::less;
    }
    if (s > 0) {
        return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

ExactReal add(const ExactReal &a, const ExactReal &b) {
    return a + b;
}

ExactReal mul(const ExactReal &a, const ExactReal &b) {
    return a * b;
}

ExactReal inv(const ExactReal &a) {
    return a.inv();
}

bool is_rational(const ExactReal &a) {
    return a.is_rational();
}

double to_float(const ExactReal &a) {
    return a.to_double();
}

std::optional<Rational> rational_sqrt(const Rational &r) {
    if (r < 0) {
        return std::nullopt;
    }
    BigInt num = numerator(r);
    BigInt den = denominator(r);
    BigInt num_root = boost::multiprecision::sqrt(num);
    BigInt den_root = boost::multiprecision::sqrt(den);
    if (num_root * num_root != num || den_root * den_root != den) {
        return std::nullopt;
    }
    return Rational(num_root, den_root);
}

std::optional<ExactReal> field_sqrt(const ExactReal &a) {
    if (a.is_zero()) {
        return ExactReal();
    }
    if (a.sign() < 0) {
        return std::nullopt;
    }
    if (a.q() == 0) {
        if (auto root = rational_sqrt(a.p())) {
            return ExactReal(*root);
        }
        if (auto root = rational_sqrt(a.p() / 2)) {
            return ExactReal(Rational(0), *root);
        }
        return std::nullopt;
    }
    // (x + y√2)^2 = (x^2 + 2y^2) + 2xy√2, so x^2 = (p +- sqrt(p^2 - 2q^2)) / 2.
    auto disc = rational_sqrt(a.p() * a.p() - 2 * a.q() * a.q());
    if (!disc) {
        return std::nullopt;
    }
    for (const Rational &x_squared : {Rational((a.p() + *disc) / 2), Rational((a.p() - *disc) / 2)}) {
        auto x = rational_sqrt(x_squared);
        if (!x || *x == 0) {
            continue;
        }
        for (const Rational &sx : {*x, Rational(-*x)}) {
            ExactReal candidate(sx, a.q() / (2 * sx));
            if (candidate.sign() >= 0 && candidate * candidate == a) {
                return candidate;
            }
        }
    }
    return std::nullopt;
}

std::string rational_to_decimal(const Rational &r, int max_digits) {
    BigInt num = numerator(r);
    BigInt den = denominator(r);
    std::string out;
    if (num < 0) {
        out += '-';
        num = -num;
    }
    BigInt whole = num / den;
    BigInt rem = num % den;
    out += whole.str();
    if (rem == 0) {
        return out;
    }
    out += '.';
    for (int i = 0; i < max_digits && rem != 0; ++i) {
        rem *= 10;
        out += static_cast<char>('0' + static_cast<int>(rem / den));
        rem %= den;
    }
    if (rem != 0) {
        out += "...";
    }
    return out;
}

std::ostream &operator<<(std::ostream &out, const ExactReal &value) {
    return out << value.to_string();
}

}  // namespace pingpong
