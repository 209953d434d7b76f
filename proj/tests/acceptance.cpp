// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one pass/fail line per criterion.  Exit code 0 only if all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "commands.hpp"
#include "qdc/derived.hpp"
#include "qdc/descriptor.hpp"

using namespace qdc;

namespace {

struct Outcome {
    bool pass{false};
    std::string detail;
};

Outcome criterion_m2_exact_parameters() {
    auto ctx = FieldContext::build(2);
    const struct {
        int i;
        bool dual_side;
        uint32_t n, k, d;
    } expected[] = {
        {0, false, 15, 9, 3},
        {1, false, 15, 7, 5},
        {0, true, 15, 6, 6},
        {1, true, 15, 8, 4},
    };
    for (const auto& e : expected) {
        CyclicCode C = build_code(e.i, 2, ctx);
        if (e.dual_side) C = dual(C);
        const WeightDistribution W = weight_distribution(C);  // full enumeration
        if (C.n != e.n || C.k != e.k || W.min_nonzero_weight() != e.d)
            return {false, "got [" + std::to_string(C.n) + "," + std::to_string(C.k) + "," +
                               std::to_string(W.min_nonzero_weight()) + "], want [" +
                               std::to_string(e.n) + "," + std::to_string(e.k) + "," +
                               std::to_string(e.d) + "]"};
    }
    return {true, "[15,9,3] [15,7,5] [15,6,6] [15,8,4] by enumeration"};
}

Outcome criterion_lcd() {
    for (int m : {2, 4}) {
        auto ctx = FieldContext::build(m);
        for (int i : {0, 1})
            if (!is_lcd(build_code(i, m, ctx)))
                return {false, "not LCD at i=" + std::to_string(i) + " m=" + std::to_string(m)};
    }
    auto c2 = FieldContext::build(2);
    for (int i : {0, 1}) {
        const CyclicCode C = build_code(i, 2, c2);
        for (const CyclicCode& X : {C, dual(C)}) {
            const uint32_t hull =
                code_intersection_dim(generator_matrix(X), generator_matrix(dual(X)));
            if (is_lcd(X) != (hull == 0))
                return {false, "hull method disagrees with row-space intersection at m=2"};
        }
    }
    return {true, "LCD at m=2,4; hull = linear-algebra intersection at m=2"};
}

Outcome criterion_duadic() {
    for (int m : {1, 3, 5}) {
        auto ctx = FieldContext::build(m);
        if (!is_duadic_pair(build_code(0, m, ctx), build_code(1, m, ctx), -1))
            return {false, "expected a pair at m=" + std::to_string(m)};
    }
    for (int m : {2, 4}) {
        auto ctx = FieldContext::build(m);
        if (is_duadic_pair(build_code(0, m, ctx), build_code(1, m, ctx), -1))
            return {false, "unexpected pair at m=" + std::to_string(m)};
    }
    return {true, "pair at m=1,3,5; no pair at m=2,4"};
}

Outcome criterion_dimensions() {
    for (int m = 1; m <= 6; ++m) {
        auto ctx = FieldContext::build(m);
        const uint32_t half = 1u << (2 * m - 1);
        for (int i : {0, 1}) {
            const CyclicCode C = build_code(i, m, ctx);
            const uint32_t expect = m % 2 == 1 ? half : (i == 0 ? half + 1 : half - 1);
            if (C.k != expect || C.g.degree() != static_cast<int>(C.n - expect))
                return {false, "dimension mismatch at i=" + std::to_string(i) +
                                   " m=" + std::to_string(m)};
        }
    }
    return {true, "generator degrees match 2^{2m-1} (odd m) and 2^{2m-1}+-1 (even m), m <= 6"};
}

Outcome criterion_bch_certification() {
    const struct {
        int m;
        BoundFamily family;
        uint64_t claimed;
    } cases[] = {
        {5, BoundFamily::odd_codes, 17},
        {7, BoundFamily::odd_codes, 17},
        {10, BoundFamily::even_c0, 65},
        {12, BoundFamily::even_c0, 257},
    };
    std::string detail;
    for (const auto& c : cases) {
        const DistanceBoundCheck r = verify_distance_bound(c.m, c.family);
        if (r.claimed_lower != c.claimed || !r.pass)
            return {false, "m=" + std::to_string(c.m) + ": claimed " + r.claimed_lower.str() +
                               ", certified " + r.certified_lower.str()};
        detail += (detail.empty() ? "" : ", ") + std::string("m=") + std::to_string(c.m) + ">=" +
                  r.claimed_lower.str();
    }
    return {true, detail};
}

Outcome criterion_trace_codes() {
    auto ctx = FieldContext::build(3);
    for (int i : {0, 1}) {
        const LinearCode T = trace_code(build_code(i, 3, ctx));
        if (T.n() != 63 || T.k() != 48) return {false, "trace code is not [63,48]"};
        const DistanceReport d = min_distance(T);
        if (d.method != DistanceMethod::via_dual || !d.exact || *d.exact != 5)
            return {false, "trace distance is not via-dual exact 5"};
        const DistanceReport ed = min_distance(extend(T));
        if (!ed.exact || *ed.exact != 6) return {false, "extended trace distance is not 6"};
    }
    return {true, "[63,48,5] via dual + MacWilliams; extension [64,48,6]"};
}

Outcome criterion_type_ii() {
    auto c1 = FieldContext::build(1);
    for (int i : {0, 1}) {
        const TypeVerdict v = classify_type(extend(build_code(i, 1, c1)));
        if (!v.self_dual || v.type_ii != TypeIIStatus::proven)
            return {false, "m=1 extension not proven Type II self-dual"};
    }
    auto c3 = FieldContext::build(3);
    for (int i : {0, 1}) {
        const LinearCode E = extend(build_code(i, 3, c3));
        const TypeVerdict v = classify_type(E, kDefaultBudget, 10000, kDefaultSeed);
        if (!v.self_dual) return {false, "m=3 extension not exactly self-dual"};
        if (v.type_ii != TypeIIStatus::sampled_consistent)
            return {false, "m=3 extension: sampled Type II check violated"};
    }
    return {true, "m=1 proven by enumeration; m=3 self-dual exact, 10^4 samples consistent"};
}

Outcome criterion_gcd_sweep() {
    uint64_t checked = 0;
    for (uint64_t a = 2; a <= 9; ++a)
        for (int m = 1; m <= 10; ++m)
            for (int l = 1; l <= 10; ++l) {
                if ((l / std::gcd(m, l)) % 2 == 0) continue;
                if (!verify_gcd_pattern(BigInt(a), m, l).match)
                    return {false, "mismatch at a=" + std::to_string(a) + " m=" +
                                       std::to_string(m) + " l=" + std::to_string(l)};
                ++checked;
            }
    return {true, std::to_string(checked) + " triples, zero mismatches"};
}

Outcome criterion_coupling_sweep() {
    for (uint64_t a = 1; a <= 1000000; ++a)
        if (!verify_weight_coupling(a)) return {false, "fails at a=" + std::to_string(a)};
    return {true, "biconditional holds for a in [1, 10^6]"};
}

Outcome criterion_mixed_containments() {
    const MixedCheck r = verify_mixed_containments(30);
    if (r.all_even_base4 && r.all_odd_base2 && r.doubled_all_odd_base4)
        return {true, "all three containments hold for a in [1, 16]"};
    std::string detail = "containments (even-w4, odd-w2, doubled odd-w4) = (";
    detail += std::string(r.all_even_base4 ? "true" : "false") + ", ";
    detail += std::string(r.all_odd_base2 ? "true" : "false") + ", ";
    detail += std::string(r.doubled_all_odd_base4 ? "true" : "false") + ")";
    return {false, detail};
}

Outcome criterion_structural_identities() {
    uint32_t round_trips = 0;
    for (int m = 1; m <= 4; ++m) {
        auto ctx = FieldContext::build(m);
        const CyclicCode C0 = build_code(0, m, ctx);
        const CyclicCode C1 = build_code(1, m, ctx);

        const bool even_ids =
            m % 2 == 0 ? dual(C0).same_code(even_weight_subcode(C1)) &&
                             dual(C1).same_code(even_weight_subcode(C0))
                       : dual(C0).same_code(even_weight_subcode(C0)) &&
                             dual(C1).same_code(even_weight_subcode(C1));
        if (!even_ids) return {false, "dual/even-weight identity fails at m=" + std::to_string(m)};

        const Poly all_ones = poly_divmod(Poly::x_pow_n_minus_one(Field::quaternary, ctx->n()),
                                          Poly::parse(Field::quaternary, "1,1"))
                                  .first;
        if (!(poly_lcm(C0.g, C1.g) == all_ones))
            return {false, "lcm identity fails at m=" + std::to_string(m)};

        for (int i : {0, 1}) {
            const CyclicCode C = build_code(i, m, ctx);
            if (!(trace_code(C) == generator_matrix(dual(subfield_subcode(dual(C))))))
                return {false, "Delsarte identity fails at m=" + std::to_string(m)};
        }

        // MacWilliams round-trip on every enumerable code of this m
        std::vector<CyclicCode> pool{C0, C1, dual(C0), dual(C1), subfield_subcode(C0),
                                     subfield_subcode(C1)};
        for (const CyclicCode& X : pool) {
            if (X.k == 0 || codeword_count(X.q, X.k, kDefaultBudget) > kDefaultBudget) continue;
            const WeightDistribution W = weight_distribution(X);
            if (macwilliams(macwilliams(W, X.n - X.k), X.k).counts != W.counts)
                return {false, "MacWilliams round-trip fails at m=" + std::to_string(m)};
            ++round_trips;
        }
    }
    return {true, "identities exact for m=1..4; " + std::to_string(round_trips) +
                      " MacWilliams round-trips"};
}

Outcome criterion_property_suites() {
    // Gray isometry on 1e5 seeded random vectors
    std::mt19937_64 rng(kDefaultSeed);
    for (int t = 0; t < 100000; ++t) {
        Word x(24, GF4::zero());
        for (auto& v : x) v = GF4(static_cast<uint8_t>(rng() & 3));
        uint32_t hw = 0;
        for (GF4 b : gray_map(x))
            if (!b.is_zero()) ++hw;
        if (hw != lee_weight(x)) return {false, "Gray isometry violated"};
    }
    // field axioms and embedding checks for every supported m
    for (int m = 1; m <= 8; ++m) {
        auto ctx = FieldContext::build(m);
        for (uint8_t i = 0; i < 4; ++i)
            for (uint8_t j = 0; j < 4; ++j) {
                const GF4 a(i), b(j);
                if (ctx->embed(a + b) != ctx->add(ctx->embed(a), ctx->embed(b)) ||
                    ctx->embed(a * b) != ctx->mul(ctx->embed(a), ctx->embed(b)))
                    return {false, "embedding homomorphism fails at m=" + std::to_string(m)};
            }
        for (uint32_t e : {uint32_t{1}, ctx->n() / 3, ctx->n() - 1}) {
            const ExtElem x = ctx->alpha_pow(e);
            if (ctx->pow(x, ctx->n()) != ctx->alpha_pow(0) || !ctx->add(x, x).is_zero())
                return {false, "field axiom fails at m=" + std::to_string(m)};
        }
    }
    // closure and negation laws of the defining sets for m <= 8
    for (int m = 1; m <= 8; ++m) {
        const DefiningSet T0 = defining_set(0, m, 4);
        const DefiningSet T1 = defining_set(1, m, 4);
        if (!T0.is_closed() || !T1.is_closed())
            return {false, "closure fails at m=" + std::to_string(m)};
        const bool neg_ok = m % 2 == 1 ? negated(T0) == T1
                                       : negated(T0) == T0 && negated(T1) == T1;
        if (!neg_ok) return {false, "negation law fails at m=" + std::to_string(m)};
    }
    return {true, "Gray isometry (10^5), embeddings m<=8, closure/negation m<=8"};
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        double time_limit_s;  // 0 = no stated limit
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {"m=2 exact parameters", 30, criterion_m2_exact_parameters},
        {"LCD predicates + hull agreement", 0, criterion_lcd},
        {"duadic splitting", 0, criterion_duadic},
        {"dimensions m=1..6", 300, criterion_dimensions},
        {"BCH bound certification", 60, criterion_bch_certification},
        {"trace codes at m=3", 60, criterion_trace_codes},
        {"self-dual / Type II extensions", 0, criterion_type_ii},
        {"gcd pattern sweep", 0, criterion_gcd_sweep},
        {"weight-coupling sweep to 10^6", 10, criterion_coupling_sweep},
        {"mixed containments at m=30", 1, criterion_mixed_containments},
        {"structural identities m=1..4", 0, criterion_structural_identities},
        {"property suites", 0, criterion_property_suites},
    };

    int failures = 0;
    for (size_t idx = 0; idx < criteria.size(); ++idx) {
        const auto& c = criteria[idx];
        const auto t0 = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.time_limit_s > 0 && secs > c.time_limit_s) {
            out.pass = false;
            out.detail += " [exceeded " + std::to_string(c.time_limit_s) + "s limit]";
        }
        std::printf("[%s] criterion %2zu: %-34s (%6.2fs) %s\n", out.pass ? "PASS" : "FAIL",
                    idx + 1, c.name, secs, out.detail.c_str());
        if (!out.pass) ++failures;
    }
    if (failures) std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
