#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qdc/poly.hpp"

using namespace qdc;

namespace {

Poly random_poly(Field f, int max_deg, std::mt19937_64& rng) {
    const int deg = static_cast<int>(rng() % (max_deg + 1));
    std::vector<GF4> c(deg + 1);
    const uint8_t mask = f == Field::binary ? 1 : 3;
    for (auto& x : c) x = GF4(static_cast<uint8_t>(rng() & mask));
    return Poly::from_coeffs(f, std::move(c));
}

}  // namespace

TEST_CASE("construction and text form") {
    Poly p = Poly::parse(Field::quaternary, "1,w,1");
    CHECK(p.degree() == 2);
    CHECK(p.to_string() == "1,w,1");
    CHECK(p.coeff(1) == GF4::omega());
    CHECK(p.coeff(7).is_zero());

    CHECK(Poly::zero(Field::binary).degree() == -1);
    CHECK(Poly::one(Field::quaternary).degree() == 0);

    // canonicalization strips trailing zeros
    Poly q = Poly::from_coeffs(Field::quaternary, {GF4::one(), GF4::zero(), GF4::zero()});
    CHECK(q.degree() == 0);

    CHECK_THROWS_AS(Poly::parse(Field::binary, "1,w"), FieldMismatch);
    CHECK_THROWS_AS(Poly::parse(Field::quaternary, "1,,1"), Error);

    Poly r = Poly::x_pow_n_minus_one(Field::quaternary, 15);
    CHECK(r.degree() == 15);
    CHECK(r.coeff(0) == GF4::one());
    CHECK(r.coeff(15) == GF4::one());
}

TEST_CASE("evaluation") {
    Poly p = Poly::parse(Field::quaternary, "w,1");  // x + w
    CHECK(p.eval(GF4::omega()).is_zero());
    CHECK(p.eval(GF4::zero()) == GF4::omega());
    CHECK(p.eval(GF4::one()) == GF4::omega_bar());  // 1 + w = W
}

TEST_CASE("gcd, lcm, reciprocal") {
    // x^2+1 = (x+1)^2 over GF(2)
    Poly g = poly_gcd(Poly::parse(Field::binary, "1,0,1"), Poly::parse(Field::binary, "1,1"));
    CHECK(g.to_string() == "1,1");

    Poly l = poly_lcm(Poly::parse(Field::quaternary, "1,1"), Poly::parse(Field::quaternary, "w,1"));
    CHECK(l.to_string() == "w,W,1");  // (x+1)(x+w) = x^2 + (1+w)x + w

    Poly r = reciprocal(Poly::parse(Field::quaternary, "1,1,1"));
    CHECK(r.to_string() == "1,1,1");

    Poly s = reciprocal(Poly::parse(Field::quaternary, "w,1,1"));  // x^2+x+w
    CHECK(s.is_monic());
    CHECK(s.to_string() == "W,W,1");  // reversed, scaled by w^{-1}
    // reciprocal of reciprocal recovers the (already monic) original
    CHECK(reciprocal(s).to_string() == "w,1,1");

    CHECK_THROWS_AS(reciprocal(Poly::parse(Field::quaternary, "0,1")), Error);
    CHECK_THROWS_AS(poly_divmod(Poly::one(Field::binary), Poly::zero(Field::binary)),
                    DivisionByZero);
    CHECK_THROWS_AS(Poly::parse(Field::binary, "1,1") * Poly::parse(Field::quaternary, "w,1"),
                    FieldMismatch);
}

TEST_CASE("ring properties on random polynomials") {
    std::mt19937_64 rng(0xC0DE);
    for (int trial = 0; trial < 300; ++trial) {
        const Field f = trial % 2 ? Field::binary : Field::quaternary;
        Poly a = random_poly(f, 8, rng), b = random_poly(f, 8, rng), c = random_poly(f, 6, rng);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!b.is_zero()) {
            auto [quot, rem] = poly_divmod(a, b);
            CHECK(quot * b + rem == a);
            CHECK(rem.degree() < b.degree());
            if (!a.is_zero()) {
                Poly g = poly_gcd(a, b);
                CHECK(poly_divmod(a, g).second.is_zero());
                CHECK(poly_divmod(b, g).second.is_zero());
                CHECK(g.is_monic());
            }
        }
    }
}

TEST_CASE("generator synthesis basics") {
    auto ctx = FieldContext::build(2);

    CHECK(generator_from_defining_set(DefiningSet{15, 4, {0}}, *ctx).to_string() == "1,1");

    const DefiningSet T1 = defining_set(1, 2, 4);
    Poly g = generator_from_defining_set(T1, *ctx);
    CHECK(g.degree() == 8);
    CHECK(g.is_monic());
    CHECK(g.field() == Field::quaternary);
    CHECK(poly_divmod(Poly::x_pow_n_minus_one(Field::quaternary, 15), g).second.is_zero());

    CHECK_THROWS_AS(generator_from_defining_set(DefiningSet{15, 4, {1, 2, 4}}, *ctx), NotClosed);
    // {1,2,4,8} is closed under *4 mod 15 even though it looks binary
    CHECK(generator_from_defining_set(DefiningSet{15, 4, {1, 2, 4, 8}}, *ctx).degree() == 4);
}

TEST_CASE("generator roots are exactly the defining set, m <= 4") {
    for (int m = 1; m <= 4; ++m) {
        auto ctx = FieldContext::build(m);
        for (int i : {0, 1}) {
            const DefiningSet T = defining_set(i, m, 4);
            const Poly g = generator_from_defining_set(T, *ctx);
            CHECK(g.degree() == static_cast<int>(T.members.size()));
            CHECK(poly_divmod(Poly::x_pow_n_minus_one(Field::quaternary, ctx->n()), g)
                      .second.is_zero());
            for (uint32_t t = 0; t < ctx->n(); ++t)
                CHECK(g.eval_ext(ctx->alpha_pow(t), *ctx).is_zero() == T.contains(t));
        }
    }
}

TEST_CASE("binary generators from 2-closed sets") {
    auto ctx = FieldContext::build(2);
    DefiningSet T{15, 2, cyclotomic_coset(1, 2, 15)};  // {1,2,4,8}
    Poly g = generator_from_defining_set(T, *ctx);
    CHECK(g.field() == Field::binary);
    CHECK(g.degree() == 4);
    for (GF4 c : g.coeffs()) CHECK(c.is_binary());
    CHECK(poly_divmod(Poly::x_pow_n_minus_one(Field::binary, 15), g).second.is_zero());
}

TEST_CASE("parameters are independent of the primitive modulus") {
    const DefiningSet T1 = defining_set(1, 2, 4);
    auto a = FieldContext::build(2);
    auto b = FieldContext::build(2, 0x19u);
    Poly ga = generator_from_defining_set(T1, *a);
    Poly gb = generator_from_defining_set(T1, *b);
    CHECK(ga.degree() == gb.degree());
    CHECK(gb.is_monic());
    CHECK(poly_divmod(Poly::x_pow_n_minus_one(Field::quaternary, 15), gb).second.is_zero());
    // the coefficient strings are allowed to differ; the parameters are not
    for (uint32_t t = 0; t < 15; ++t)
        CHECK(gb.eval_ext(b->alpha_pow(t), *b).is_zero() == T1.contains(t));
}
