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

#include <cstdint>
#include <string>

#include "radicalc/exact.hpp"

namespace radicalc {

/// Fixed-point binary number: value = mantissa / 2^frac_bits, mantissa an
/// arbitrary-precision integer. This is the numeric side channel used to
/// cross-check the exact deciders; it is never part of a decision itself.
///
/// Every operation rounds toward minus infinity, so each step costs at most
/// one ulp (2^-frac_bits) of absolute error. Callers combining a handful of
/// operations stay within a few ulp, far below the thresholds the
/// cross-checks use.
class FixedPoint {
public:
    FixedPoint(Integer mantissa, unsigned frac_bits);

    /// floor(q * 2^frac_bits) / 2^frac_bits.
    static FixedPoint from_rational(const Rational& q, unsigned frac_bits);

    const Integer& mantissa() const { return mant_; }
    unsigned frac_bits() const { return bits_; }

    int sign() const { return sgn(mant_); }
    FixedPoint abs() const;

    /// Exact: the represented value as a rational.
    Rational to_rational() const;

    /// Operands must carry the same frac_bits; throws std::domain_error
    /// otherwise.
    FixedPoint operator+(const FixedPoint& o) const;
    FixedPoint operator-(const FixedPoint& o) const;
    FixedPoint operator*(const FixedPoint& o) const;
    FixedPoint mul_rational(const Rational& q) const;

    /// Floor of the k-th root at the same precision; requires a
    /// non-negative value and k >= 1.
    FixedPoint kth_root(unsigned long k) const;

private:
    Integer mant_;
    unsigned bits_;
};

/// radicand^(1/index) at the given precision.
FixedPoint radical_value(const Rational& radicand, std::uint32_t index, unsigned frac_bits);

/// Enough fractional bits for the given number of decimal digits.
unsigned frac_bits_for_digits(unsigned digits);

}  // namespace radicalc
