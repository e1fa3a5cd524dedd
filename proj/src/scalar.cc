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

#include "tcount/scalar.h"

#include <cmath>
#include <cstdio>

namespace tcount {

Dyadic::Dyadic(BigInt numerator, std::uint32_t exponent) : numerator_(std::move(numerator)), exponent_(exponent) {
    normalize();
}

Dyadic Dyadic::half_power(std::uint32_t exponent) {
    return Dyadic(BigInt(1), exponent);
}

void Dyadic::normalize() {
    if (numerator_ == 0) {
        exponent_ = 0;
        return;
    }
    while (exponent_ > 0 && (numerator_ & 1) == 0) {
        numerator_ >>= 1;
        exponent_--;
    }
}

double Dyadic::to_double() const {
    return std::ldexp(numerator_.convert_to<double>(), -static_cast<int>(exponent_));
}

std::string Dyadic::str() const {
    if (exponent_ == 0) {
        return numerator_.str();
    }
    return numerator_.str() + "/2^" + std::to_string(exponent_);
}

Dyadic &Dyadic::operator+=(const Dyadic &other) {
    if (exponent_ >= other.exponent_) {
        numerator_ += other.numerator_ << (exponent_ - other.exponent_);
    } else {
        numerator_ = (numerator_ << (other.exponent_ - exponent_)) + other.numerator_;
        exponent_ = other.exponent_;
    }
    normalize();
    return *this;
}

Dyadic &Dyadic::operator-=(const Dyadic &other) {
    return *this += -other;
}

Dyadic &Dyadic::operator*=(const Dyadic &other) {
    numerator_ *= other.numerator_;
    exponent_ += other.exponent_;
    normalize();
    return *this;
}

std::string format_significant(double value, int digits) {
    if (value == 0) {
        value = 0;  // drop the sign of negative zero
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", digits, value);
    return buf;
}

std::string ScalarTraits<Complex>::str(const Complex &x) {
    return format_significant(x.real(), 17) + "," + format_significant(x.imag(), 17);
}

}  // namespace tcount
