#include "qdc/galois.hpp"

#include <sstream>

namespace qdc {

uint32_t FieldContext::default_modulus(int m) {
    // Primitive polynomials of degree 2m over GF(2), one per supported m.
    static constexpr uint32_t table[kMaxM + 1] = {
        0,
        0x7,      // z^2+z+1
        0x13,     // z^4+z+1
        0x43,     // z^6+z+1
        0x11D,    // z^8+z^4+z^3+z^2+1
        0x409,    // z^10+z^3+1
        0x1053,   // z^12+z^6+z^4+z+1
        0x4443,   // z^14+z^10+z^6+z+1
        0x1100B,  // z^16+z^12+z^3+z+1
    };
    if (m < 1 || m > kMaxM) throw UnsupportedSize("no default modulus for m=" + std::to_string(m));
    return table[m];
}

std::shared_ptr<const FieldContext> FieldContext::build(int m,
                                                        std::optional<uint32_t> modulus_override) {
    if (m < 1 || m > kMaxM)
        throw UnsupportedSize("m must be in [1, " + std::to_string(kMaxM) + "], got " +
                              std::to_string(m));

    const uint32_t modulus = modulus_override.value_or(default_modulus(m));
    const int deg = 2 * m;
    if (modulus >> deg != 1u)
        throw NonPrimitiveModulus("modulus must have degree exactly " + std::to_string(deg));

    auto ctx = std::shared_ptr<FieldContext>(new FieldContext());
    ctx->m_ = m;
    ctx->n_ = (1u << deg) - 1;
    ctx->modulus_ = modulus;
    ctx->exp_.assign(ctx->n_, 0);
    ctx->log_.assign(1u << deg, -1);

    // Fill the antilog table by repeated multiplication by z.  Primitivity is
    // verified, not assumed: z must visit n distinct nonzero patterns and
    // return to 1 only after exactly n steps.
    const uint32_t high = 1u << deg;
    uint32_t b = 1;
    for (uint32_t k = 0; k < ctx->n_; ++k) {
        if (b == 0 || ctx->log_[b] != -1)
            throw NonPrimitiveModulus("modulus " + std::to_string(modulus) +
                                      " does not generate the order-" + std::to_string(ctx->n_) +
                                      " group");
        ctx->exp_[k] = b;
        ctx->log_[b] = static_cast<int32_t>(k);
        b <<= 1;
        if (b & high) b ^= modulus;
    }
    if (b != 1)
        throw NonPrimitiveModulus("modulus " + std::to_string(modulus) +
                                  " does not generate the order-" + std::to_string(ctx->n_) +
                                  " group");

    // The order-3 subgroup together with 0 is the unique copy of GF(4).
    ctx->embed_[0] = ExtElem::zero();
    ctx->embed_[1] = ExtElem::from_log(0);
    ctx->embed_[2] = ExtElem::from_log(ctx->n_ / 3);
    ctx->embed_[3] = ExtElem::from_log(2 * (ctx->n_ / 3));

    // Build-time invariant check: the embedding must be a ring homomorphism.
    for (uint8_t i = 0; i < 4; ++i) {
        for (uint8_t j = 0; j < 4; ++j) {
            GF4 a(i), c(j);
            if (ctx->embed(a + c) != ctx->add(ctx->embed(a), ctx->embed(c)) ||
                ctx->embed(a * c) != ctx->mul(ctx->embed(a), ctx->embed(c)))
                throw InternalError("GF(4) embedding is not a ring homomorphism");
        }
    }
    return ctx;
}

std::vector<std::pair<int, uint32_t>> parse_modulus_config(const std::string& text) {
    std::vector<std::pair<int, uint32_t>> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        const auto colon = line.find(':', first);
        if (colon == std::string::npos)
            throw Error("malformed modulus line (expected m:bitmask): " + line);
        try {
            int m = std::stoi(line.substr(first, colon - first));
            unsigned long mask = std::stoul(line.substr(colon + 1), nullptr, 0);
            out.emplace_back(m, static_cast<uint32_t>(mask));
        } catch (const std::logic_error&) {
            throw Error("malformed modulus line (expected m:bitmask): " + line);
        }
    }
    return out;
}

}  // namespace qdc
