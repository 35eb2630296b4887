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

#include "radicalc/polynomial.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace radicalc {

namespace {
const Rational kZero{};
}

Polynomial::Polynomial(const Rational& c) {
    if (!c.is_zero()) {
        coeffs_.push_back(c);
    }
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

Polynomial Polynomial::monomial(std::size_t deg, const Rational& c) {
    if (c.is_zero()) {
        return Polynomial();
    }
    std::vector<Rational> coeffs(deg + 1);
    coeffs[deg] = c;
    return Polynomial(std::move(coeffs));
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) {
        coeffs_.pop_back();
    }
}

const Rational& Polynomial::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : kZero;
}

const Rational& Polynomial::leading() const {
    if (is_zero()) {
        throw std::domain_error("leading coefficient of the zero polynomial");
    }
    return coeffs_.back();
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& c : r.coeffs_) {
        c = -c;
    }
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (coeffs_.size() < o.coeffs_.size()) {
        coeffs_.resize(o.coeffs_.size());
    }
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
        coeffs_[i] += o.coeffs_[i];
    }
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (coeffs_.size() < o.coeffs_.size()) {
        coeffs_.resize(o.coeffs_.size());
    }
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
        coeffs_[i] -= o.coeffs_[i];
    }
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) {
        return Polynomial();
    }
    std::vector<Rational> prod(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return Polynomial(std::move(prod));
}

Polynomial operator*(const Rational& s, const Polynomial& p) {
    if (s.is_zero()) {
        return Polynomial();
    }
    Polynomial r(p);
    for (auto& c : r.coeffs_) {
        c *= s;
    }
    return r;
}

Polynomial Polynomial::monic() const {
    return leading().inverse() * *this;
}

Rational Polynomial::operator()(const Rational& x) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

DivModResult divmod(const Polynomial& p, const Polynomial& q) {
    if (q.is_zero()) {
        throw std::domain_error("polynomial division by zero");
    }
    Polynomial rem = p;
    Polynomial quot;
    const Rational lead_inv = q.leading().inverse();
    while (!rem.is_zero() && rem.degree() >= q.degree()) {
        const std::size_t shift = static_cast<std::size_t>(rem.degree() - q.degree());
        const Rational factor = rem.leading() * lead_inv;
        const Polynomial t = Polynomial::monomial(shift, factor);
        quot += t;
        rem -= t * q;
    }
    return {std::move(quot), std::move(rem)};
}

ExtendedGcd extended_gcd(const Polynomial& p, const Polynomial& q) {
    if (p.is_zero() && q.is_zero()) {
        throw std::domain_error("gcd of two zero polynomials");
    }
    // Invariants: r0 = u0*p + v0*q and r1 = u1*p + v1*q at every step.
    Polynomial r0 = p, r1 = q;
    Polynomial u0 = Polynomial::one(), u1;
    Polynomial v0, v1 = Polynomial::one();
    while (!r1.is_zero()) {
        auto [quot, rem] = divmod(r0, r1);
        r0 = std::exchange(r1, std::move(rem));
        u0 = std::exchange(u1, u0 - quot * u1);
        v0 = std::exchange(v1, v0 - quot * v1);
    }
    const Rational scale = r0.leading().inverse();
    return {scale * r0, scale * u0, scale * v0};
}

Polynomial compose_linear(const Polynomial& p, const Rational& a, const Rational& b) {
    // Horner on the substitution x -> a + b*x; each step multiplies by the
    // linear polynomial and adds the next coefficient, which expands the
    // binomial powers without computing them separately.
    const Polynomial lin({a, b});
    Polynomial acc;
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
        acc = acc * lin + Polynomial(*it);
    }
    return acc;
}

std::string Polynomial::to_string() const {
    if (is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const Rational& c = coeffs_[i];
        if (c.is_zero()) {
            continue;
        }
        const Rational mag = c.abs();
        if (first) {
            if (c.is_negative()) {
                os << "-";
            }
            first = false;
        } else {
            os << (c.is_negative() ? " - " : " + ");
        }
        if (i == 0) {
            os << mag.to_string();
        } else {
            if (!mag.is_one()) {
                os << mag.to_string();
                if (!mag.is_integer()) {
                    os << "*";
                }
            }
            os << "x";
            if (i > 1) {
                os << "^" << i;
            }
        }
    }
    return os.str();
}

std::string Polynomial::to_coeff_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i > 0) {
            os << ", ";
        }
        os << coeffs_[i].to_string();
    }
    os << "]";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    return os << p.to_string();
}

}  // namespace radicalc
