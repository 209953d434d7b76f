#include "qdc/derived.hpp"

#include <random>

namespace qdc {

LeeComposition lee_composition(const Word& x) noexcept {
    LeeComposition c;
    for (GF4 v : x) {
        if (v.is_zero())
            ++c.n0;
        else if (v == GF4::one())
            ++c.n2;
        else
            ++c.n1;
    }
    return c;
}

uint32_t lee_weight(const Word& x) noexcept {
    const LeeComposition c = lee_composition(x);
    return c.n1 + 2 * c.n2;
}

Word gray_map(const Word& x) {
    const size_t n = x.size();
    Word out(2 * n, GF4::zero());
    for (size_t i = 0; i < n; ++i) {
        // v = w*a + W*b: decode (a, b) from the four symbols.
        switch (x[i].value()) {
            case 0: break;
            case 1:  // 1 = w + W
                out[i] = GF4::one();
                out[n + i] = GF4::one();
                break;
            case 2: out[i] = GF4::one(); break;      // w
            case 3: out[n + i] = GF4::one(); break;  // W
        }
    }
    return out;
}

LinearCode gray_image(const LinearCode& C) {
    Matrix rows;
    rows.reserve(2 * C.k());
    for (const auto& r : C.rows()) {
        rows.push_back(gray_map(r));
        Word wr = r;
        for (auto& x : wr) x *= GF4::omega();
        rows.push_back(gray_map(wr));
    }
    return LinearCode::from_rows(2, 2 * C.n(), std::move(rows));
}

CyclicCode subfield_subcode(const CyclicCode& C) {
    if (C.q != 4) throw Error("subfield subcode applies to quaternary codes");
    std::vector<bool> in(C.n, false);
    for (uint32_t t : C.T.members)
        for (uint32_t s : cyclotomic_coset(t, 2, C.n)) in[s] = true;
    DefiningSet T2{C.n, 2, {}};
    for (uint32_t t = 0; t < C.n; ++t)
        if (in[t]) T2.members.push_back(t);
    return make_cyclic_code(C.ctx, std::move(T2));
}

LinearCode subfield_subcode_exhaustive(const CyclicCode& C, uint64_t budget) {
    Matrix binary_words;
    for_each_codeword(C, budget, [&](const Word& w) {
        for (GF4 x : w)
            if (!x.is_binary()) return;
        binary_words.push_back(w);
    });
    return LinearCode::from_rows(2, C.n, std::move(binary_words));
}

namespace {

Word traced(const Word& r) {
    Word out(r.size(), GF4::zero());
    for (size_t i = 0; i < r.size(); ++i) out[i] = GF4(gf4_trace(r[i]));
    return out;
}

}  // namespace

LinearCode trace_code(const CyclicCode& C) {
    if (C.q != 4) throw Error("trace code applies to quaternary codes");
    Matrix rows;
    rows.reserve(2 * C.k);
    const LinearCode G = generator_matrix(C);
    for (const auto& r : G.rows()) {
        rows.push_back(traced(r));
        Word wr = r;
        for (auto& x : wr) x *= GF4::omega();
        rows.push_back(traced(wr));
    }
    LinearCode L = LinearCode::from_rows(2, C.n, std::move(rows));

    // tr(C) and the dual of the subfield subcode of the dual must coincide.
    const LinearCode R = generator_matrix(dual(subfield_subcode(dual(C))));
    if (!(L == R)) throw InternalError("trace code disagrees with the dual-subfield route");
    return L;
}

const char* type_ii_status_name(TypeIIStatus s) {
    switch (s) {
        case TypeIIStatus::proven: return "proven";
        case TypeIIStatus::refuted: return "refuted";
        default: return "sampled_consistent";
    }
}

TypeVerdict classify_type(const LinearCode& C, uint64_t budget, uint32_t samples, uint64_t seed) {
    TypeVerdict v;

    v.self_orthogonal = true;
    for (size_t i = 0; i < C.rows().size() && v.self_orthogonal; ++i) {
        for (size_t j = i; j < C.rows().size(); ++j) {
            GF4 dot = GF4::zero();
            for (uint32_t c = 0; c < C.n(); ++c) dot += C.rows()[i][c] * C.rows()[j][c];
            if (!dot.is_zero()) {
                v.self_orthogonal = false;
                break;
            }
        }
    }
    v.self_dual = v.self_orthogonal && 2 * C.k() == C.n();
    if (!v.self_dual) {
        v.type_ii = TypeIIStatus::refuted;
        return v;
    }

    if (codeword_count(C.q(), C.k(), budget) <= budget) {
        bool all_multiples_of_4 = true;
        for_each_codeword(C, budget, [&](const Word& w) {
            if (lee_weight(w) % 4 != 0) all_multiples_of_4 = false;
        });
        v.type_ii = all_multiples_of_4 ? TypeIIStatus::proven : TypeIIStatus::refuted;
        return v;
    }

    std::mt19937_64 rng(seed);
    Word cw(C.n(), GF4::zero());
    for (uint32_t s = 0; s < samples; ++s) {
        std::fill(cw.begin(), cw.end(), GF4::zero());
        for (uint32_t i = 0; i < C.k(); ++i) {
            const GF4 digit(static_cast<uint8_t>(rng() % static_cast<uint64_t>(C.q())));
            if (digit.is_zero()) continue;
            for (uint32_t j = 0; j < C.n(); ++j) cw[j] += digit * C.rows()[i][j];
        }
        if (lee_weight(cw) % 4 != 0) {
            v.type_ii = TypeIIStatus::refuted;
            return v;
        }
    }
    v.type_ii = TypeIIStatus::sampled_consistent;
    return v;
}

}  // namespace qdc
