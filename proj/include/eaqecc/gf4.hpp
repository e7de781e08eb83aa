// Copyright 2026 The eaqecc Authors
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

#ifndef EAQECC_GF4_HPP
#define EAQECC_GF4_HPP

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace eaqecc {

/// An element of GF(4) = {0, 1, w, W} with W = w^2 = 1 + w.
///
/// The numeric value is the bit pair (a, b) of the symplectic image, packed
/// as a | (b << 1): w <-> (1,0), W <-> (0,1), 1 <-> (1,1). Field addition is
/// therefore XOR of the encodings.
enum class Gf4 : uint8_t {
    Zero = 0b00,
    Omega = 0b01,
    OmegaBar = 0b10,
    One = 0b11,
};

constexpr uint8_t gf4_a_bit(Gf4 x) {
    return static_cast<uint8_t>(x) & 1;
}

constexpr uint8_t gf4_b_bit(Gf4 x) {
    return (static_cast<uint8_t>(x) >> 1) & 1;
}

constexpr Gf4 gf4_from_bits(bool a, bool b) {
    return static_cast<Gf4>(static_cast<uint8_t>(a) | (static_cast<uint8_t>(b) << 1));
}

constexpr Gf4 gf4_add(Gf4 x, Gf4 y) {
    return static_cast<Gf4>(static_cast<uint8_t>(x) ^ static_cast<uint8_t>(y));
}

namespace internal {

// Discrete log base w of the nonzero elements, indexed by encoding.
constexpr std::array<uint8_t, 4> kGf4Log{0, 1, 2, 0};
constexpr std::array<Gf4, 3> kGf4Exp{Gf4::One, Gf4::Omega, Gf4::OmegaBar};

}  // namespace internal

constexpr Gf4 gf4_mul(Gf4 x, Gf4 y) {
    if (x == Gf4::Zero || y == Gf4::Zero) {
        return Gf4::Zero;
    }
    auto lx = internal::kGf4Log[static_cast<uint8_t>(x)];
    auto ly = internal::kGf4Log[static_cast<uint8_t>(y)];
    return internal::kGf4Exp[(lx + ly) % 3];
}

/// Frobenius conjugation x -> x^2.
constexpr Gf4 gf4_conj(Gf4 x) {
    return gf4_mul(x, x);
}

constexpr Gf4 gf4_inv(Gf4 x) {
    if (x == Gf4::Zero) {
        throw std::domain_error("gf4_inv: zero has no inverse");
    }
    return internal::kGf4Exp[(3 - internal::kGf4Log[static_cast<uint8_t>(x)]) % 3];
}

/// Absolute trace GF(4) -> GF(2): x + x^2.
constexpr bool gf4_trace(Gf4 x) {
    return gf4_add(x, gf4_conj(x)) == Gf4::One;
}

inline constexpr std::array<Gf4, 4> kAllGf4{Gf4::Zero, Gf4::One, Gf4::Omega, Gf4::OmegaBar};

/// Text alphabet: '0', '1', 'w' (omega), 'W' (omega bar).
constexpr char gf4_char(Gf4 x) {
    switch (x) {
        case Gf4::Zero:
            return '0';
        case Gf4::One:
            return '1';
        case Gf4::Omega:
            return 'w';
        case Gf4::OmegaBar:
            return 'W';
    }
    return '?';
}

inline Gf4 gf4_from_char(char c) {
    switch (c) {
        case '0':
            return Gf4::Zero;
        case '1':
            return Gf4::One;
        case 'w':
            return Gf4::Omega;
        case 'W':
            return Gf4::OmegaBar;
        default:
            throw std::invalid_argument(std::string("not a GF(4) symbol: '") + c + "' (expected one of 0, 1, w, W)");
    }
}

}  // namespace eaqecc

#endif
