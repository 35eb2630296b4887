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

#include "radicalc/radical.hpp"

#include "radicalc/errors.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace radicalc {

namespace {

// All divisors of n, descending. Trial division up to sqrt(n); n fits in
// 32 bits so nothing cleverer is called for.
std::vector<std::uint32_t> divisors_descending(std::uint32_t n) {
    std::vector<std::uint32_t> divs;
    for (std::uint32_t d = 1; static_cast<std::uint64_t>(d) * d <= n; ++d) {
        if (n % d == 0) {
            divs.push_back(d);
            if (d != n / d) {
                divs.push_back(n / d);
            }
        }
    }
    std::sort(divs.begin(), divs.end(), std::greater<>());
    return divs;
}

}  // namespace

Radical::Radical(Rational radicand, std::uint64_t index)
    : radicand_(std::move(radicand)) {
    if (!radicand_.is_positive()) {
        throw std::domain_error("radicand must be positive");
    }
    if (index == 0 || index > std::numeric_limits<std::uint32_t>::max()) {
        throw std::domain_error("radical index out of range");
    }
    index_ = static_cast<std::uint32_t>(index);
}

std::string Radical::to_string() const {
    return "root(" + radicand_.to_string() + "," + std::to_string(index_) + ")";
}

const Rational& ReducedRadical::rational_value() const {
    if (!is_rational()) {
        throw std::domain_error("radical is irrational");
    }
    return radicand_;
}

std::string ReducedRadical::to_string() const {
    return is_rational() ? radicand_.to_string() : as_radical().to_string();
}

ReducedRadical reduce(const Radical& r) {
    // Largest divisor t of n with an exact rational t-th root gives the
    // smallest surviving index m = n/t. t = 1 always succeeds, so the scan
    // terminates with the radical unchanged when it is already irreducible.
    const std::uint32_t n = r.index();
    for (const std::uint32_t t : divisors_descending(n)) {
        if (const auto root = rational_kth_root(r.radicand(), t)) {
            return ReducedRadical(*root, n / t);
        }
    }
    throw InternalError("divisor scan fell through");  // unreachable: t = 1 is exact
}

bool is_irreducible(const Radical& r) {
    if (r.index() < 2) {
        throw std::domain_error("irreducibility is defined for index >= 2");
    }
    return reduce(r).index() == r.index();
}

bool intermediate_powers_irrational(const Radical& r) {
    if (r.index() < 3) {
        throw std::domain_error("intermediate powers require index >= 3");
    }
    const std::uint32_t n = r.index();
    for (std::uint32_t k = 2; k < n; ++k) {
        if (rational_kth_root(pow(r.radicand(), k), n).has_value()) {
            return false;
        }
    }
    return true;
}

bool radical_equal(const Radical& a, const Radical& b) {
    return reduce(a) == reduce(b);
}

std::ostream& operator<<(std::ostream& os, const Radical& r) {
    return os << r.to_string();
}

std::ostream& operator<<(std::ostream& os, const ReducedRadical& r) {
    return os << r.to_string();
}

}  // namespace radicalc
