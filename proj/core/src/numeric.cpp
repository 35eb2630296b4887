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

#include "radicalc/numeric.hpp"

#include <stdexcept>
#include <utility>

namespace radicalc {

namespace {

Integer shift_left(const Integer& v, unsigned long bits) {
    Integer r;
    mpz_mul_2exp(r.get_mpz_t(), v.get_mpz_t(), bits);
    return r;
}

Integer floor_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Integer floor_shift_right(const Integer& v, unsigned long bits) {
    Integer r;
    mpz_fdiv_q_2exp(r.get_mpz_t(), v.get_mpz_t(), bits);
    return r;
}

}  // namespace

FixedPoint::FixedPoint(Integer mantissa, unsigned frac_bits)
    : mant_(std::move(mantissa)), bits_(frac_bits) {}

FixedPoint FixedPoint::from_rational(const Rational& q, unsigned frac_bits) {
    return FixedPoint(floor_div(shift_left(q.num(), frac_bits), q.den()), frac_bits);
}

FixedPoint FixedPoint::abs() const {
    return FixedPoint(::abs(mant_), bits_);
}

Rational FixedPoint::to_rational() const {
    return Rational(mant_, shift_left(1, bits_));
}

FixedPoint FixedPoint::operator+(const FixedPoint& o) const {
    if (bits_ != o.bits_) {
        throw std::domain_error("fixed-point precision mismatch");
    }
    return FixedPoint(mant_ + o.mant_, bits_);
}

FixedPoint FixedPoint::operator-(const FixedPoint& o) const {
    if (bits_ != o.bits_) {
        throw std::domain_error("fixed-point precision mismatch");
    }
    return FixedPoint(mant_ - o.mant_, bits_);
}

FixedPoint FixedPoint::operator*(const FixedPoint& o) const {
    if (bits_ != o.bits_) {
        throw std::domain_error("fixed-point precision mismatch");
    }
    return FixedPoint(floor_shift_right(mant_ * o.mant_, bits_), bits_);
}

FixedPoint FixedPoint::mul_rational(const Rational& q) const {
    return FixedPoint(floor_div(mant_ * q.num(), q.den()), bits_);
}

FixedPoint FixedPoint::kth_root(unsigned long k) const {
    if (sign() < 0) {
        throw std::domain_error("k-th root of a negative value");
    }
    if (k == 0) {
        throw std::domain_error("zeroth root");
    }
    // (m / 2^b)^(1/k) = (m * 2^(b(k-1)))^(1/k) / 2^b.
    const Integer scaled = shift_left(mant_, bits_ * (k - 1));
    return FixedPoint(integer_kth_root(scaled, k).first, bits_);
}

FixedPoint radical_value(const Rational& radicand, std::uint32_t index, unsigned frac_bits) {
    if (!radicand.is_positive()) {
        throw std::domain_error("radicand must be positive");
    }
    return FixedPoint::from_rational(radicand, frac_bits).kth_root(index);
}

unsigned frac_bits_for_digits(unsigned digits) {
    // log2(10) < 3.33; round up and keep a guard word.
    return digits * 10 / 3 + 16;
}

}  // namespace radicalc
