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

#ifndef PINGPONG_EXACT_H
#define PINGPONG_EXACT_H

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace pingpong {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// An element p + q*sqrt(2) of the real quadratic field Q(sqrt(2)).
///
/// Every amplitude the protocol produces lives in this field. Amplitudes are
/// REAL: all shipped gates (H, CNOT, PBS, CPBS and the four Pauli encodings)
/// have real matrix elements, so no complex extension exists. Adding a gate
/// with complex entries (S, T, phase shifters) requires revisiting this type.
///
/// Both components are kept in lowest terms by the underlying rational type,
/// and since sqrt(2) is irrational the (p, q) representation is unique. That
/// makes operator== an exact value comparison.
class ExactReal {
   public:
    ExactReal() = default;
    ExactReal(long long integer) : p_(integer) {
    }
    ExactReal(Rational p, Rational q = Rational(0)) : p_(std::move(p)), q_(std::move(q)) {
    }

    /// p/q_den + 0*sqrt(2).
    static ExactReal fraction(long long num, long long den);
    /// (num/den)*sqrt(2).
    static ExactReal sqrt2_times(long long num, long long den);
    /// 1/sqrt(2) == sqrt(2)/2.
    static ExactReal inv_sqrt2();

    const Rational &p() const {
        return p_;
    }
    const Rational &q() const {
        return q_;
    }

    bool is_zero() const {
        return p_ == 0 && q_ == 0;
    }
    bool is_rational() const {
        return q_ == 0;
    }

    /// -1, 0 or +1. Exact.
    int sign() const;
    /// Field conjugate p - q*sqrt(2).
    ExactReal conjugate() const;
    /// Multiplicative inverse. Throws std::domain_error on zero.
    ExactReal inv() const;
    /// Nearest double to the represented value (within an ulp or so).
    double to_double() const;
    /// Human readable form, e.g. "1/2", "√2/4", "-1+√2".
    std::string to_string() const;

    ExactReal operator-() const {
        return ExactReal(-p_, -q_);
    }
    ExactReal &operator+=(const ExactReal &other);
    ExactReal &operator-=(const ExactReal &other);
    ExactReal &operator*=(const ExactReal &other);
    ExactReal &operator/=(const ExactReal &other);

    friend ExactReal operator+(ExactReal a, const ExactReal &b) {
        return a += b;
    }
    friend ExactReal operator-(ExactReal a, const ExactReal &b) {
        return a -= b;
    }
    friend ExactReal operator*(ExactReal a, const ExactReal &b) {
        return a *= b;
    }
    friend ExactReal operator/(ExactReal a, const ExactReal &b) {
        return a /= b;
    }
    friend bool operator==(const ExactReal &a, const ExactReal &b) {
        return a.p_ == b.p_ && a.q_ == b.q_;
    }
    /// Orders by numeric value, not by representation.
    friend std::strong_ordering operator<=>(const ExactReal &a, const ExactReal &b);

   private:
    Rational p_{0};
    Rational q_{0};
};

ExactReal add(const ExactReal &a, const ExactReal &b);
ExactReal mul(const ExactReal &a, const ExactReal &b);
ExactReal inv(const ExactReal &a);
bool is_rational(const ExactReal &a);
double to_float(const ExactReal &a);

/// Exact square root of a rational, if it is rational.
std::optional<Rational> rational_sqrt(const Rational &r);

/// Exact non-negative square root inside Q(sqrt(2)), if one exists.
/// Used to normalize vectors during exact Gram-Schmidt.
std::optional<ExactReal> field_sqrt(const ExactReal &a);

/// Decimal rendering of a rational, e.g. "0.125". Non-terminating expansions
/// are cut at `max_digits` fractional digits and marked with a trailing "...".
std::string rational_to_decimal(const Rational &r, int max_digits = 20);

std::ostream &operator<<(std::ostream &out, const ExactReal &value);

}  // namespace pingpong

#endif
