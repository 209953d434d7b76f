#ifndef QDC_POLY_HPP
#define QDC_POLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "qdc/errors.hpp"
#include "qdc/galois.hpp"
#include "qdc/gf4.hpp"
#include "qdc/weights.hpp"

namespace qdc {

enum class Field : uint8_t { binary, quaternary };

inline const char* field_name(Field f) { return f == Field::binary ? "GF(2)" : "GF(4)"; }

/// Dense univariate polynomial over GF(2) or GF(4), one byte per coefficient,
/// ascending degree, canonical form (no trailing zeros; zero polynomial has an
/// empty coefficient sequence and degree() = -1).
///
/// Binary polynomials restrict coefficients to {0, 1}; combining operands over
/// different fields throws FieldMismatch.
class Poly {
   public:
    explicit Poly(Field f = Field::quaternary) : field_(f) {}

    /// Canonicalizes (strips trailing zeros) and validates binary coefficients.
    static Poly from_coeffs(Field f, std::vector<GF4> coeffs);

    /// Parses the comma-separated text form over alphabet {0,1,w,W},
    /// ascending degree: "1,w,1" = 1 + w x + x^2.
    static Poly parse(Field f, const std::string& text);

    static Poly zero(Field f) { return Poly(f); }
    static Poly one(Field f) { return from_coeffs(f, {GF4::one()}); }
    /// x^n - 1 (= x^n + 1 in characteristic 2).
    static Poly x_pow_n_minus_one(Field f, uint32_t n);

    Field field() const noexcept { return field_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// Degree, with -1 standing in for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<GF4>& coeffs() const noexcept { return coeffs_; }
    GF4 coeff(size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : GF4::zero(); }
    GF4 leading() const { return coeffs_.back(); }
    bool is_monic() const { return !is_zero() && leading() == GF4::one(); }

    GF4 eval(GF4 x) const noexcept;
    /// Evaluation at an extension-field point (coefficients embedded via ctx).
    ExtElem eval_ext(ExtElem x, const FieldContext& ctx) const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b) noexcept = default;

    std::string to_string() const;

   private:
    Field field_;
    std::vector<GF4> coeffs_;
};

/// Quotient and remainder with deg r < deg b.  Throws DivisionByZero.
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);

/// Monic greatest common divisor.
Poly poly_gcd(Poly a, Poly b);

/// Monic least common multiple.
Poly poly_lcm(const Poly& a, const Poly& b);

/// x^{deg a} * a(1/x), normalized monic.  Requires a(0) != 0 so the degree is
/// preserved.
Poly reciprocal(const Poly& a);

/// Product of (x - alpha^i) over the 4-cyclotomic coset of j, with
/// coefficients pulled back into GF(4).  The pull-back is a hard runtime
/// check: a coefficient outside the embedded GF(4) is an InternalError.
Poly minimal_poly(uint32_t j, const FieldContext& ctx);

/// Product of (x - alpha^t) over all t in T, pulled back to GF(4) (q = 4) or
/// GF(2) (q = 2).  T must be closed under multiplication by its q (NotClosed
/// otherwise); the result is monic of degree |T| and divides x^n - 1.
Poly generator_from_defining_set(const DefiningSet& T, const FieldContext& ctx);

}  // namespace qdc

#endif
