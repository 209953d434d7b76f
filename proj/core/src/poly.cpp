#include "qdc/poly.hpp"

#include <algorithm>
#include <sstream>

namespace qdc {

namespace {

void require_same_field(const Poly& a, const Poly& b) {
    if (a.field() != b.field())
        throw FieldMismatch(std::string("mixed ") + field_name(a.field()) + " and " +
                            field_name(b.field()) + " operands");
}

void require_binary_ok(Field f, const std::vector<GF4>& coeffs) {
    if (f != Field::binary) return;
    for (GF4 c : coeffs)
        if (!c.is_binary()) throw FieldMismatch("GF(2) polynomial with a nonbinary coefficient");
}

}  // namespace

Poly Poly::from_coeffs(Field f, std::vector<GF4> coeffs) {
    while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
    require_binary_ok(f, coeffs);
    Poly p(f);
    p.coeffs_ = std::move(coeffs);
    return p;
}

Poly Poly::parse(Field f, const std::string& text) {
    std::vector<GF4> coeffs;
    std::istringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        const auto b = tok.find_first_not_of(" \t");
        if (b == std::string::npos) throw Error("empty coefficient in polynomial text");
        coeffs.push_back(GF4::from_char(tok[b]));
    }
    return from_coeffs(f, std::move(coeffs));
}

Poly Poly::x_pow_n_minus_one(Field f, uint32_t n) {
    std::vector<GF4> c(n + 1, GF4::zero());
    c[0] = GF4::one();
    c[n] = GF4::one();
    return from_coeffs(f, std::move(c));
}

GF4 Poly::eval(GF4 x) const noexcept {
    GF4 acc = GF4::zero();
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

ExtElem Poly::eval_ext(ExtElem x, const FieldContext& ctx) const {
    ExtElem acc = ExtElem::zero();
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = ctx.add(ctx.mul(acc, x), ctx.embed(*it));
    return acc;
}

Poly operator+(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    std::vector<GF4> c(std::max(a.coeffs_.size(), b.coeffs_.size()), GF4::zero());
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return Poly::from_coeffs(a.field_, std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    if (a.is_zero() || b.is_zero()) return Poly::zero(a.field_);
    std::vector<GF4> c(a.coeffs_.size() + b.coeffs_.size() - 1, GF4::zero());
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly::from_coeffs(a.field_, std::move(c));
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly::zero(a.field()), a};

    std::vector<GF4> rem = a.coeffs();
    std::vector<GF4> quot(a.degree() - b.degree() + 1, GF4::zero());
    const GF4 lead_inv = gf4_inverse(b.leading());
    for (int d = a.degree(); d >= b.degree(); --d) {
        GF4 factor = rem[d] * lead_inv;
        if (factor.is_zero()) continue;
        quot[d - b.degree()] = factor;
        for (int i = 0; i <= b.degree(); ++i)
            rem[d - b.degree() + i] += factor * b.coeffs()[i];
    }
    return {Poly::from_coeffs(a.field(), std::move(quot)),
            Poly::from_coeffs(a.field(), std::move(rem))};
}

Poly poly_gcd(Poly a, Poly b) {
    require_same_field(a, b);
    while (!b.is_zero()) {
        Poly r = poly_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    // normalize monic
    GF4 inv = gf4_inverse(a.leading());
    std::vector<GF4> c = a.coeffs();
    for (auto& x : c) x *= inv;
    return Poly::from_coeffs(a.field(), std::move(c));
}

Poly poly_lcm(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly::zero(a.field());
    Poly g = poly_gcd(a, b);
    Poly q = poly_divmod(a, g).first;
    Poly prod = q * b;
    GF4 inv = gf4_inverse(prod.leading());
    std::vector<GF4> c = prod.coeffs();
    for (auto& x : c) x *= inv;
    return Poly::from_coeffs(a.field(), std::move(c));
}

Poly reciprocal(const Poly& a) {
    if (a.is_zero()) return a;
    if (a.coeff(0).is_zero()) throw Error("reciprocal requires a nonzero constant term");
    std::vector<GF4> c(a.coeffs().rbegin(), a.coeffs().rend());
    GF4 inv = gf4_inverse(c.back());
    for (auto& x : c) x *= inv;
    return Poly::from_coeffs(a.field(), std::move(c));
}

std::string Poly::to_string() const {
    std::string out;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) out += ',';
        out += coeffs_[i].to_char();
    }
    return out;
}

namespace {

// Multiplies the accumulator polynomial (over GF(4^m), ascending coeffs) by
// (x + root) in place.
void mul_linear_factor(std::vector<ExtElem>& acc, ExtElem root, const FieldContext& ctx) {
    acc.push_back(ExtElem::zero());
    for (size_t i = acc.size() - 1; i > 0; --i)
        acc[i] = ctx.add(acc[i - 1], ctx.mul(acc[i], root));
    acc[0] = ctx.mul(acc[0], root);
}

Poly pull_back(const std::vector<ExtElem>& acc, Field f, const FieldContext& ctx) {
    std::vector<GF4> coeffs;
    coeffs.reserve(acc.size());
    for (ExtElem e : acc) {
        auto c = ctx.unembed(e);
        if (!c) throw InternalError("generator coefficient outside embedded GF(4)");
        if (f == Field::binary && !c->is_binary())
            throw InternalError("generator coefficient outside GF(2)");
        coeffs.push_back(*c);
    }
    return Poly::from_coeffs(f, std::move(coeffs));
}

}  // namespace

Poly minimal_poly(uint32_t j, const FieldContext& ctx) {
    const auto coset = cyclotomic_coset(j % ctx.n(), 4, ctx.n());
    std::vector<ExtElem> acc{ExtElem::from_log(0)};  // 1
    for (uint32_t i : coset) mul_linear_factor(acc, ctx.alpha_pow(i), ctx);
    return pull_back(acc, Field::quaternary, ctx);
}

Poly generator_from_defining_set(const DefiningSet& T, const FieldContext& ctx) {
    if (T.n != ctx.n())
        throw Error("defining set modulus does not match the field context");
    if (T.q != 2 && T.q != 4) throw Error("defining set alphabet must be 2 or 4");
    if (!T.is_closed())
        throw NotClosed("defining set is not closed under multiplication by " +
                        std::to_string(T.q));
    std::vector<ExtElem> acc{ExtElem::from_log(0)};
    acc.reserve(T.members.size() + 1);
    for (uint32_t t : T.members) mul_linear_factor(acc, ctx.alpha_pow(t), ctx);
    Poly g = pull_back(acc, T.q == 2 ? Field::binary : Field::quaternary, ctx);
    if (g.degree() != static_cast<int>(T.members.size()) || !g.is_monic())
        throw InternalError("generator degree does not match the defining set size");
    return g;
}

}  // namespace qdc
