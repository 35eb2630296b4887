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

#include <iosfwd>
#include <string>
#include <vector>

#include "radicalc/exact.hpp"

namespace radicalc {

/// Dense univariate polynomial over the rationals. Coefficients are stored
/// ascending by degree and kept trimmed: the zero polynomial is the empty
/// sequence, otherwise the last coefficient is nonzero.
///
/// All arithmetic is exact. The Euclidean routines make no attempt to tame
/// coefficient growth (no pseudo-remainders); at the degrees this library
/// works with, plain rational arithmetic is affordable, but coefficients of
/// intermediate remainders can grow large.
class Polynomial {
public:
    /// The zero polynomial.
    Polynomial() = default;
    /// Constant polynomial.
    explicit Polynomial(const Rational& c);
    /// From coefficients ascending by degree; trailing zeros are trimmed.
    explicit Polynomial(std::vector<Rational> coeffs);

    static Polynomial zero() { return Polynomial(); }
    static Polynomial one() { return Polynomial(Rational(1)); }
    /// c * x^deg
    static Polynomial monomial(std::size_t deg, const Rational& c = Rational(1));
    /// The identity polynomial x.
    static Polynomial x() { return monomial(1); }

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree; -1 stands in for the degree of the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    /// Coefficient of x^i (zero beyond the stored range).
    const Rational& coeff(std::size_t i) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    /// Leading coefficient; throws std::domain_error on the zero polynomial.
    const Rational& leading() const;
    bool is_monic() const { return !is_zero() && leading().is_one(); }

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& s, const Polynomial& p);

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

    /// Scaled so the leading coefficient is 1; throws on the zero polynomial.
    Polynomial monic() const;

    /// Exact evaluation by Horner's rule.
    Rational operator()(const Rational& x) const;

    /// Canonical text form, highest degree first: "x^3 - 3x^2 + 3x - 3".
    /// Fractional coefficients print with an explicit '*': "1/2*x^2".
    std::string to_string() const;
    /// Coefficient-sequence form ascending by degree: "[-3, 3, -3, 1]".
    /// The zero polynomial prints as "[]".
    std::string to_coeff_string() const;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

struct DivModResult {
    Polynomial quotient;
    Polynomial remainder;
};

/// Division with remainder: p = q * quotient + remainder with
/// degree(remainder) < degree(q). Throws std::domain_error when q is zero.
DivModResult divmod(const Polynomial& p, const Polynomial& q);

struct ExtendedGcd {
    Polynomial gcd;  // monic
    Polynomial u;
    Polynomial v;    // u*p + v*q = gcd
};

/// Extended Euclidean algorithm. The gcd is normalized monic and the
/// cofactors are carried through every step, so u*p + v*q = gcd holds
/// exactly. Throws std::domain_error when both inputs are zero.
ExtendedGcd extended_gcd(const Polynomial& p, const Polynomial& q);

/// The substituted polynomial p(a + b*x), computed by Horner-style
/// accumulation. Degree is preserved when b != 0.
Polynomial compose_linear(const Polynomial& p, const Rational& a, const Rational& b);

}  // namespace radicalc
