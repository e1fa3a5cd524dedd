// Copyright 2026 The tcount Authors
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

#ifndef TCOUNT_SCALAR_H
#define TCOUNT_SCALAR_H

#include <complex>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace tcount {

using BigInt = boost::multiprecision::cpp_int;
using Complex = std::complex<double>;

/// Exact rational with a power-of-two denominator: numerator / 2^exponent.
///
/// Values are kept normalized (odd numerator or zero exponent), so equal values
/// compare equal structurally. Products of pairs of 1/sqrt(2) factors land here.
class Dyadic {
   public:
    Dyadic() = default;
    Dyadic(BigInt numerator, std::uint32_t exponent = 0);
    Dyadic(int value) : Dyadic(BigInt(value)) {
    }

    static Dyadic half_power(std::uint32_t exponent);

    const BigInt &numerator() const {
        return numerator_;
    }
    std::uint32_t exponent() const {
        return exponent_;
    }
    bool is_integer() const {
        return exponent_ == 0;
    }
    double to_double() const;
    std::string str() const;

    Dyadic &operator+=(const Dyadic &other);
    Dyadic &operator-=(const Dyadic &other);
    Dyadic &operator*=(const Dyadic &other);
    friend Dyadic operator+(Dyadic a, const Dyadic &b) {
        return a += b;
    }
    friend Dyadic operator-(Dyadic a, const Dyadic &b) {
        return a -= b;
    }
    friend Dyadic operator*(Dyadic a, const Dyadic &b) {
        return a *= b;
    }
    friend Dyadic operator-(Dyadic a) {
        a.numerator_ = -a.numerator_;
        return a;
    }
    bool operator==(const Dyadic &other) const = default;

   private:
    void normalize();

    BigInt numerator_{0};
    std::uint32_t exponent_{0};
};

/// Per-number-system operations used by the tensor kernels.
template <typename T>
struct ScalarTraits;

template <>
struct ScalarTraits<BigInt> {
    static constexpr bool exact = true;
    static constexpr const char *name = "integer";
    static BigInt zero() {
        return 0;
    }
    static BigInt one() {
        return 1;
    }
    static BigInt conj(const BigInt &x) {
        return x;
    }
    static Complex to_complex(const BigInt &x) {
        return {x.convert_to<double>(), 0.0};
    }
    static std::string str(const BigInt &x) {
        return x.str();
    }
};

/// Machine words: the fast path of exact integer contraction. Overflow is
/// detected by the kernel, which then falls back to BigInt.
template <>
struct ScalarTraits<std::int64_t> {
    static constexpr bool exact = true;
    static constexpr const char *name = "word";
    static std::int64_t zero() {
        return 0;
    }
    static std::int64_t one() {
        return 1;
    }
    static std::int64_t conj(std::int64_t x) {
        return x;
    }
    static Complex to_complex(std::int64_t x) {
        return {static_cast<double>(x), 0.0};
    }
    static std::string str(std::int64_t x) {
        return std::to_string(x);
    }
};

template <>
struct ScalarTraits<Dyadic> {
    static constexpr bool exact = true;
    static constexpr const char *name = "dyadic";
    static Dyadic zero() {
        return {};
    }
    static Dyadic one() {
        return {1};
    }
    static Dyadic conj(const Dyadic &x) {
        return x;
    }
    static Complex to_complex(const Dyadic &x) {
        return {x.to_double(), 0.0};
    }
    static std::string str(const Dyadic &x) {
        return x.str();
    }
};

template <>
struct ScalarTraits<Complex> {
    static constexpr bool exact = false;
    static constexpr const char *name = "complex";
    static Complex zero() {
        return {};
    }
    static Complex one() {
        return {1.0, 0.0};
    }
    static Complex conj(const Complex &x) {
        return std::conj(x);
    }
    static Complex to_complex(const Complex &x) {
        return x;
    }
    static std::string str(const Complex &x);
};

/// Formats a double with a fixed number of significant digits ("%.*g").
std::string format_significant(double value, int digits);

}  // namespace tcount

#endif
