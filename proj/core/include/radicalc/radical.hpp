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
#include <iosfwd>
#include <string>

#include "radicalc/exact.hpp"

namespace radicalc {

/// The real number radicand^(1/index) for a positive rational radicand.
/// Index 1 is admitted and means the value is the radicand itself; that
/// degenerate form is what reduction produces when the whole radical is
/// rational. Negative and zero radicands are rejected outright.
class Radical {
public:
    /// Throws std::domain_error unless radicand > 0 and 1 <= index < 2^32.
    Radical(Rational radicand, std::uint64_t index);

    const Rational& radicand() const { return radicand_; }
    std::uint32_t index() const { return index_; }

    friend bool operator==(const Radical& a, const Radical& b) {
        return a.index_ == b.index_ && a.radicand_ == b.radicand_;
    }

    /// "root(A,n)", radicand rendered with no interior spaces.
    std::string to_string() const;

private:
    Rational radicand_;
    std::uint32_t index_;
};

/// A radical in reduced form: either index = 1 (the value is rational) or
/// the radical admits no rewrite with a smaller index and rational
/// radicand. Instances come out of reduce() only, so the invariant holds
/// by construction.
class ReducedRadical {
public:
    const Rational& radicand() const { return radicand_; }
    std::uint32_t index() const { return index_; }

    bool is_rational() const { return index_ == 1; }
    /// The exact value when is_rational(); throws otherwise.
    const Rational& rational_value() const;

    Radical as_radical() const { return Radical(radicand_, index_); }

    friend bool operator==(const ReducedRadical& a, const ReducedRadical& b) {
        return a.index_ == b.index_ && a.radicand_ == b.radicand_;
    }

    /// The rational value when index = 1, "root(A,n)" otherwise.
    std::string to_string() const;

private:
    friend ReducedRadical reduce(const Radical& r);
    ReducedRadical(Rational radicand, std::uint32_t index)
        : radicand_(std::move(radicand)), index_(index) {}

    Rational radicand_;
    std::uint32_t index_;
};

/// Rewrites radicand^(1/n) with the smallest possible index: scans the
/// divisors t of n in decreasing order and takes the first exact rational
/// t-th root B of the radicand, giving index m = n/t and radicand B. The
/// output equals the input as a real number, m divides n, and
/// B^(n/m) = radicand exactly.
ReducedRadical reduce(const Radical& r);

/// Whether the radical already has the smallest possible index. Requires
/// index >= 2 (index 1 is rational by definition); throws otherwise.
bool is_irreducible(const Radical& r);

/// Whether radicand^(k/n) is irrational for every k in 2..n-1. Requires
/// index >= 3. Equivalent to irreducibility; implemented independently so
/// the equivalence is testable.
bool intermediate_powers_irrational(const Radical& r);

/// Exact value equality, decided by comparing reduced forms, which are
/// unique by the minimality of the reduced index.
bool radical_equal(const Radical& a, const Radical& b);

std::ostream& operator<<(std::ostream& os, const Radical& r);
std::ostream& operator<<(std::ostream& os, const ReducedRadical& r);

}  // namespace radicalc
