#ifndef QDC_GF4_HPP
#define QDC_GF4_HPP

#include <array>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "qdc/errors.hpp"

namespace qdc {

/// An element of GF(4) = GF(2)[z]/(z^2+z+1) = {0, 1, w, W} with W = w^2 = w+1.
///
/// The byte value is the coefficient pair b1*z + b0, so addition is XOR and
/// the subfield GF(2) sits at values {0, 1}.
class GF4 {
   public:
    constexpr GF4() noexcept = default;
    constexpr explicit GF4(uint8_t v) : v_(v) {
        if (v > 3) throw FieldMismatch("GF4 value out of range");
    }

    static constexpr GF4 zero() noexcept { return GF4(0, tag{}); }
    static constexpr GF4 one() noexcept { return GF4(1, tag{}); }
    static constexpr GF4 omega() noexcept { return GF4(2, tag{}); }
    static constexpr GF4 omega_bar() noexcept { return GF4(3, tag{}); }

    constexpr uint8_t value() const noexcept { return v_; }
    constexpr bool is_zero() const noexcept { return v_ == 0; }
    constexpr bool is_binary() const noexcept { return v_ <= 1; }

    friend constexpr GF4 operator+(GF4 a, GF4 b) noexcept { return GF4(a.v_ ^ b.v_, tag{}); }
    friend constexpr GF4 operator-(GF4 a, GF4 b) noexcept { return a + b; }
    GF4& operator+=(GF4 b) noexcept {
        v_ ^= b.v_;
        return *this;
    }

    friend constexpr GF4 operator*(GF4 a, GF4 b) noexcept {
        return GF4(mul_table[a.v_][b.v_], tag{});
    }
    GF4& operator*=(GF4 b) noexcept {
        v_ = mul_table[v_][b.v_];
        return *this;
    }

    friend constexpr bool operator==(GF4 a, GF4 b) noexcept { return a.v_ == b.v_; }
    friend constexpr bool operator!=(GF4 a, GF4 b) noexcept { return a.v_ != b.v_; }

    friend std::ostream& operator<<(std::ostream& os, GF4 a) { return os << a.to_char(); }

    constexpr char to_char() const noexcept { return "01wW"[v_]; }

    static GF4 from_char(char c) {
        switch (c) {
            case '0': return zero();
            case '1': return one();
            case 'w': return omega();
            case 'W': return omega_bar();
            default: throw FieldMismatch(std::string("not a GF(4) symbol: ") + c);
        }
    }

   private:
    struct tag {};
    constexpr GF4(uint8_t v, tag) noexcept : v_(v) {}

    static constexpr uint8_t mul_table[4][4] = {
        {0, 0, 0, 0},
        {0, 1, 2, 3},
        {0, 2, 3, 1},  // w*w = W, w*W = 1
        {0, 3, 1, 2},
    };

    uint8_t v_{0};
};

inline GF4 gf4_inverse(GF4 a) {
    if (a.is_zero()) throw DivisionByZero("inverse of 0 in GF(4)");
    // 1 -> 1, w -> W, W -> w
    static constexpr uint8_t inv[4] = {0, 1, 3, 2};
    return GF4(inv[a.value()]);
}

/// Trace map GF(4) -> GF(2), x -> x + x^2.  Kernel is the subfield {0, 1}.
constexpr uint8_t gf4_trace(GF4 x) noexcept {
    return x.is_binary() ? 0 : 1;
}

using Word = std::vector<GF4>;  // codewords / vectors over GF(4) (or its subfield)

}  // namespace qdc

#endif
