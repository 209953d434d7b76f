#ifndef QDC_GALOIS_HPP
#define QDC_GALOIS_HPP

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qdc/errors.hpp"
#include "qdc/gf4.hpp"

namespace qdc {

/// An element of GF(4^m)* represented by its discrete log, or zero.
///
/// Exponents are always reduced modulo n = 4^m - 1 by the owning FieldContext.
class ExtElem {
   public:
    constexpr ExtElem() noexcept = default;  // zero
    static constexpr ExtElem zero() noexcept { return ExtElem(); }
    static constexpr ExtElem from_log(uint32_t k) noexcept {
        ExtElem e;
        e.log_ = static_cast<int64_t>(k);
        return e;
    }

    constexpr bool is_zero() const noexcept { return log_ < 0; }
    /// Discrete log in [0, n); only valid when !is_zero().
    constexpr uint32_t log() const noexcept { return static_cast<uint32_t>(log_); }

    friend constexpr bool operator==(ExtElem a, ExtElem b) noexcept { return a.log_ == b.log_; }
    friend constexpr bool operator!=(ExtElem a, ExtElem b) noexcept { return a.log_ != b.log_; }

   private:
    int64_t log_{-1};
};

/// Immutable arithmetic context for GF(4^m) = GF(2^{2m}), built from a primitive
/// polynomial of degree 2m over GF(2).
///
/// Holds the log/antilog tables for the generator alpha, and the embedding of
/// GF(4) onto {0} and the order-3 subgroup.  Safe to share across threads once
/// built; every operation is a pure function of its inputs.
class FieldContext {
   public:
    /// Largest supported m; tables have 2^{2m} entries.
    static constexpr int kMaxM = 8;

    /// Builds the context, verifying at build time that z generates the full
    /// multiplicative group of order n = 4^m - 1 under the chosen modulus.
    ///
    /// Throws UnsupportedSize when m is outside [1, kMaxM] and
    /// NonPrimitiveModulus when the (possibly overridden) modulus is not
    /// primitive of degree 2m.
    static std::shared_ptr<const FieldContext> build(
        int m, std::optional<uint32_t> modulus_override = std::nullopt);

    /// Default primitive polynomial of degree 2m, as a coefficient bitmask
    /// (bit i = coefficient of z^i).
    static uint32_t default_modulus(int m);

    int m() const noexcept { return m_; }
    uint32_t n() const noexcept { return n_; }
    uint32_t modulus() const noexcept { return modulus_; }

    ExtElem alpha() const noexcept { return ExtElem::from_log(1); }

    /// alpha^e for any integer e (negative exponents allowed).
    ExtElem alpha_pow(int64_t e) const noexcept {
        int64_t r = e % n_;
        if (r < 0) r += n_;
        return ExtElem::from_log(static_cast<uint32_t>(r));
    }

    ExtElem add(ExtElem a, ExtElem b) const {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        uint32_t bits = exp_[a.log()] ^ exp_[b.log()];
        if (bits == 0) return ExtElem::zero();
        return ExtElem::from_log(static_cast<uint32_t>(log_[bits]));
    }

    ExtElem mul(ExtElem a, ExtElem b) const {
        if (a.is_zero() || b.is_zero()) return ExtElem::zero();
        uint32_t s = a.log() + b.log();
        if (s >= n_) s -= n_;
        return ExtElem::from_log(s);
    }

    ExtElem inv(ExtElem a) const {
        if (a.is_zero()) throw DivisionByZero("inverse of 0 in GF(4^m)");
        return ExtElem::from_log(a.log() == 0 ? 0 : n_ - a.log());
    }

    ExtElem pow(ExtElem a, uint64_t e) const {
        if (a.is_zero()) return e == 0 ? ExtElem::from_log(0) : ExtElem::zero();
        uint64_t r = (static_cast<uint64_t>(a.log()) * (e % n_)) % n_;
        return ExtElem::from_log(static_cast<uint32_t>(r));
    }

    /// GF(4) -> GF(4^m): 0 -> 0, 1 -> alpha^0, w -> alpha^{n/3}, W -> alpha^{2n/3}.
    ExtElem embed(GF4 x) const noexcept { return embed_[x.value()]; }

    /// Partial inverse of embed(); empty when the element is outside the image.
    std::optional<GF4> unembed(ExtElem x) const noexcept {
        if (x.is_zero()) return GF4::zero();
        if (x.log() == 0) return GF4::one();
        if (x.log() == n_ / 3) return GF4::omega();
        if (x.log() == 2 * (n_ / 3)) return GF4::omega_bar();
        return std::nullopt;
    }

    /// Polynomial-basis bit representation (for cross-checking the tables).
    uint32_t bits(ExtElem a) const noexcept { return a.is_zero() ? 0 : exp_[a.log()]; }

   private:
    FieldContext() = default;

    int m_{0};
    uint32_t n_{0};
    uint32_t modulus_{0};
    std::vector<uint32_t> exp_;  // exp_[k] = bit representation of alpha^k, k in [0, n)
    std::vector<int32_t> log_;   // inverse of exp_ on nonzero bit patterns
    std::array<ExtElem, 4> embed_{};
};

/// Parses "m:bitmask" modulus-config lines (decimal bitmask, bit i = coeff of z^i).
/// Returns the map m -> bitmask; lines starting with '#' and blank lines are skipped.
std::vector<std::pair<int, uint32_t>> parse_modulus_config(const std::string& text);

}  // namespace qdc

#endif
