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

#ifndef TCOUNT_BITS_H
#define TCOUNT_BITS_H

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tcount {

/// Bitstring w = w_n ... w_1. Bit 1 is the least significant position: it is the
/// rightmost printed character and the first bit fixed by a suffix search.
class Bits {
   public:
    Bits() = default;

    /// Parses most-significant-first text such as "1001".
    static Bits parse(std::string_view text) {
        Bits b;
        for (std::size_t k = text.size(); k-- > 0;) {
            char c = text[k];
            if (c != '0' && c != '1') {
                throw std::invalid_argument("Bitstring may contain only '0' and '1': \"" + std::string(text) + "\".");
            }
            b.bits_.push_back(c == '1');
        }
        return b;
    }

    /// The low `length` bits of `value`; bit 1 is value & 1.
    static Bits from_integer(std::uint64_t value, std::size_t length) {
        Bits b;
        for (std::size_t k = 0; k < length; k++) {
            b.bits_.push_back(((value >> k) & 1) != 0);
        }
        return b;
    }

    std::size_t size() const {
        return bits_.size();
    }
    bool empty() const {
        return bits_.empty();
    }

    /// Bit at 1-based position k (w_k).
    bool at(std::size_t k) const {
        if (k == 0 || k > bits_.size()) {
            throw std::out_of_range("Bits::at: position " + std::to_string(k) + " out of range.");
        }
        return bits_[k - 1];
    }

    /// Returns b . w, a new most significant bit at position size() + 1.
    Bits extended(bool bit) const {
        Bits r = *this;
        r.bits_.push_back(bit);
        return r;
    }

    std::uint64_t to_integer() const {
        std::uint64_t v = 0;
        for (std::size_t k = bits_.size(); k-- > 0;) {
            v = (v << 1) | static_cast<std::uint64_t>(bits_[k]);
        }
        return v;
    }

    std::string str() const {
        std::string s;
        for (std::size_t k = bits_.size(); k-- > 0;) {
            s.push_back(bits_[k] ? '1' : '0');
        }
        return s;
    }

    /// True when the low size() bits of `w` equal this suffix.
    bool is_suffix_of(const Bits &w) const {
        if (w.size() < size()) {
            return false;
        }
        for (std::size_t k = 0; k < bits_.size(); k++) {
            if (bits_[k] != w.bits_[k]) {
                return false;
            }
        }
        return true;
    }

    bool operator==(const Bits &) const = default;

   private:
    std::vector<bool> bits_;
};

}  // namespace tcount

#endif
