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
#include <optional>
#include <string>
#include <vector>

#include "radicalc/polynomial.hpp"
#include "radicalc/radical.hpp"

namespace radicalc {

/// An element of the field generated by an irreducible radical
/// theta = A^(1/n), stored as n rational coordinates on the power basis
/// 1, theta, ..., theta^(n-1). The representation is faithful: the
/// coordinates are all zero exactly when the element is zero as a real
/// number, which is what makes is_root a decision procedure.
class PowerBasisElement {
public:
    /// Requires an irrational (index >= 2) base and exactly index()
    /// coordinates; throws std::domain_error otherwise.
    PowerBasisElement(ReducedRadical base, std::vector<Rational> coords);

    static PowerBasisElement zero(const ReducedRadical& base);

    /// Coordinates of p(theta): exponents fold down via theta^n = A, so
    /// x^i contributes coeff * A^floor(i/n) at position i mod n. Accepts
    /// any degree.
    static PowerBasisElement from_polynomial(const Polynomial& p, const ReducedRadical& base);

    const ReducedRadical& base() const { return base_; }
    const std::vector<Rational>& coords() const { return coords_; }
    bool is_zero() const;

    /// Operands must share the base; throws std::domain_error otherwise.
    PowerBasisElement operator+(const PowerBasisElement& o) const;
    PowerBasisElement operator-(const PowerBasisElement& o) const;
    PowerBasisElement operator*(const PowerBasisElement& o) const;

    /// The degree < n polynomial whose coefficients are the coordinates.
    Polynomial to_polynomial() const;

    /// "(c0, c1, ..., c_{n-1})"
    std::string coords_string() const;

private:
    ReducedRadical base_;
    std::vector<Rational> coords_;
};

std::ostream& operator<<(std::ostream& os, const PowerBasisElement& e);

/// Proof that a polynomial shares no root with x^n - A: cofactors with
/// u*p + v*(x^n - A) = 1 exactly. Anything that can multiply polynomials
/// can re-check it; verify() does.
struct BezoutCertificate {
    Polynomial p;
    Polynomial modulus;  // always x^n - A
    Polynomial u;
    Polynomial v;

    bool verify() const;
};

/// Rationals a, b, c, not all zero, with a + b*theta1 + c*theta2 = 0;
/// refutes linear independence of (1, theta1, theta2).
struct DependencyWitness {
    Rational a;
    Rational b;
    Rational c;
};

/// The value constant + coef * radical with the radical part already
/// normalized: a rational-valued radical is folded into the constant, so
/// the radical field is engaged exactly when coef != 0, and then it is
/// irrational and irreducible.
struct AffineRadical {
    Rational constant;
    Rational coef;
    std::optional<ReducedRadical> radical;

    bool is_rational() const { return !radical.has_value(); }
};

/// Normalizes a + b * r: reduces r, folds it into the constant when the
/// reduced form is rational or when b = 0.
AffineRadical normalize_affine(const Rational& a, const Rational& b, const Radical& r);

struct EqualityResult {
    bool equal;
    std::string reason;  // empty when equal
    AffineRadical lhs;   // normalized forms; lhs is the canonical value when equal
    AffineRadical rhs;
};

/// Decides a + b*r1 = d + f*r2 exactly. After normalization: two rational
/// sides compare as constants; a rational side never equals an irrational
/// one; two irrational sides are equal iff the reduced indices match, the
/// constants match, the coefficients have the same sign, and
/// coef1^n * radicand1 = coef2^n * radicand2. The sign condition is
/// required because the radical values are positive reals.
EqualityResult decide_affine_equality(const AffineRadical& lhs, const AffineRadical& rhs);
EqualityResult decide_affine_equality(const Rational& a, const Rational& b, const Radical& r1,
                                      const Rational& d, const Rational& f, const Radical& r2);

struct IndependenceResult {
    bool independent;
    std::optional<DependencyWitness> witness;  // engaged when dependent
};

/// Decides whether 1, r1, r2 are linearly independent over the rationals.
/// Both radicals must reduce to irrational values (std::domain_error
/// otherwise). Independent when the reduced indices differ, or when they
/// agree at n and A/B has no rational n-th root; otherwise dependent with
/// the witness (0, 1, -r), r = (A/B)^(1/n), re-verified exactly before it
/// is returned.
IndependenceResult decide_triple_independence(const Radical& r1, const Radical& r2);

/// Decides a + b*r1 + c*r2 = 0 under the same hypotheses as
/// decide_triple_independence. With b = c = 0 this is a = 0; with exactly
/// one of b, c nonzero the sum is a rational plus a nonzero irrational and
/// never vanishes; with both nonzero it reduces to an affine equality.
bool decide_combination_zero(const Rational& a, const Rational& b, const Rational& c,
                             const Radical& r1, const Radical& r2);

/// Whether p(theta) = 0, decided through the power-basis coordinates.
/// For nonzero p of degree < index this is always false: no such
/// polynomial vanishes at an irreducible radical.
bool is_root(const Polynomial& p, const ReducedRadical& theta);

/// For nonzero p of degree < n, produces u, v with u*p + v*(x^n - A) = 1,
/// an independently checkable refutation of p(theta) = 0. The gcd is 1
/// because x^n - A is irreducible when theta is; a nontrivial gcd would
/// contradict that and raises InternalError. Throws std::domain_error for
/// zero p or degree >= n.
BezoutCertificate coprimality_certificate(const Polynomial& p, const ReducedRadical& theta);

/// Whether the polynomial x^n - A is irreducible over the rationals,
/// which holds exactly when A^(1/n) admits no smaller-index rewrite.
/// Requires A > 0 and n >= 2.
bool xn_minus_a_irreducible(const Rational& a, std::uint32_t n);

/// The monic degree-n polynomial vanishing at a + b*theta for irrational
/// theta = A^(1/n): substitute x -> (x - a)/b into x^n - A and scale
/// monic, giving (x - a)^n - b^n * A. No polynomial of smaller degree
/// vanishes there, so this is the minimal polynomial.
///
/// A rational value (b = 0, or theta reduced to a rational) has minimal
/// polynomial x minus the value; that degenerate case is only served when
/// allow_degenerate is set and throws std::domain_error otherwise.
Polynomial affine_minimal_polynomial(const Rational& a, const Rational& b,
                                     const ReducedRadical& theta,
                                     bool allow_degenerate = false);

/// x^index - radicand, the modulus every certificate is stated against.
Polynomial radical_modulus(const ReducedRadical& theta);

}  // namespace radicalc
