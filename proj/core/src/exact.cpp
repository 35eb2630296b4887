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

#include "radicalc/exact.hpp"

#include <ostream>
#include <stdexcept>

namespace radicalc {

Rational::Rational(const Integer& num, const Integer& den) {
    if (sgn(den) == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::abs() const {
    Rational r;
    r.v_ = ::abs(v_);
    return r;
}

Rational Rational::inverse() const {
    if (is_zero()) {
        throw std::domain_error("inverse of zero");
    }
    return Rational(den(), num());
}

Rational Rational::operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) {
        throw std::domain_error("division by zero");
    }
    v_ /= o.v_;
    return *this;
}

std::string Rational::to_string() const {
    if (is_integer()) {
        return num().get_str();
    }
    return num().get_str() + "/" + den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

Integer pow(const Integer& base, unsigned long k) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), k);
    return r;
}

std::pair<Integer, bool> integer_kth_root(const Integer& v, unsigned long k) {
    if (k == 0) {
        throw std::domain_error("zeroth root");
    }
    if (sgn(v) < 0) {
        throw std::domain_error("k-th root of a negative integer");
    }
    if (k == 1 || v == 0 || v == 1) {
        return {v, true};
    }

    // 2^(bits-1) <= v < 2^bits, so the root lies in
    // [2^floor((bits-1)/k), 2^(floor((bits-1)/k)+1)).
    const size_t bits = mpz_sizeinbase(v.get_mpz_t(), 2);
    Integer lo = 1, hi = 1;
    mpz_mul_2exp(lo.get_mpz_t(), lo.get_mpz_t(), (bits - 1) / k);
    mpz_mul_2exp(hi.get_mpz_t(), hi.get_mpz_t(), (bits - 1) / k + 1);

    while (hi - lo > 1) {
        const Integer mid = (lo + hi) / 2;
        if (pow(mid, k) <= v) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return {lo, pow(lo, k) == v};
}

std::optional<Rational> rational_kth_root(const Rational& a, unsigned long k) {
    if (k == 0) {
        throw std::domain_error("zeroth root");
    }
    if (!a.is_positive()) {
        throw std::domain_error("k-th root of a non-positive rational");
    }
    if (k == 1) {
        return a;
    }
    // a = p/q in lowest terms is a perfect k-th power iff p and q are.
    const auto [rn, num_exact] = integer_kth_root(a.num(), k);
    if (!num_exact) {
        return std::nullopt;
    }
    const auto [rd, den_exact] = integer_kth_root(a.den(), k);
    if (!den_exact) {
        return std::nullopt;
    }
    return Rational(rn, rd);
}

Rational pow(const Rational& a, long e) {
    if (e == 0) {
        return Rational(1);
    }
    if (a.is_zero() && e < 0) {
        throw std::domain_error("zero raised to a negative power");
    }
    const unsigned long k = e > 0 ? static_cast<unsigned long>(e)
                                  : -static_cast<unsigned long>(e);
    const Integer pn = pow(a.num(), k);
    const Integer pd = pow(a.den(), k);
    return e > 0 ? Rational(pn, pd) : Rational(pd, pn);
}

}  // namespace radicalc
