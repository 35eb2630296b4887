/*
   Copyright 2026 The radicalc Authors

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

#pragma once

#include <compare>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>

#include <gmpxx.h>

namespace radicalc {

/// Arbitrary-precision signed integer. GMP is the substrate; every result
/// that matters downstream is exact at any magnitude.
using Integer = mpz_class;

/// Canonical arbitrary-precision fraction: denominator > 0,
/// gcd(|num|, den) = 1, zero stored as 0/1. Every constructor and every
/// operation returns canonical values, so two Rationals are equal exactly
/// when their fields are identical.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(n) {}
    Rational(const Integer& n) : v_(n) {}

    /// Normalizes num/den (sign to the numerator, gcd removed).
    /// Throws std::domain_error when den is zero.
    Rational(const Integer& num, const Integer& den);
    Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

    Integer num() const { return v_.get_num(); }
    Integer den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    bool is_positive() const { return sgn(v_) > 0; }
    bool is_negative() const { return sgn(v_) < 0; }
    int sign() const { return sgn(v_); }

    Rational abs() const;
    /// Multiplicative inverse; throws std::domain_error on zero.
    Rational inverse() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    /// Throws std::domain_error when dividing by zero.
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t());
        return c <=> 0;
    }

    /// "num/den", with "/den" elided for integers: "3", "-1/2".
    std::string to_string() const;

private:
    mpq_class v_;  // canonical at all times
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Floor of the k-th root of a non-negative integer, plus a flag telling
/// whether the root is exact. Bisection on the bit length of v; no
/// floating point anywhere. Throws std::domain_error for v < 0 or k = 0.
std::pair<Integer, bool> integer_kth_root(const Integer& v, unsigned long k);

/// The exact rational k-th root of a positive rational, when one exists.
/// For a = p/q in lowest terms, a = r^k with r rational iff p and q are
/// both perfect k-th powers (sound because gcd(p, q) = 1).
/// Throws std::domain_error for a <= 0 or k = 0.
std::optional<Rational> rational_kth_root(const Rational& a, unsigned long k);

/// Exact integer power of a rational, negative exponents included.
/// Throws std::domain_error for 0 raised to a negative power.
Rational pow(const Rational& a, long e);

/// base^k for k >= 0.
Integer pow(const Integer& base, unsigned long k);

}  // namespace radicalc
