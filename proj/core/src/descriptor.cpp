#include "qdc/descriptor.hpp"

#include <json.hpp>

namespace qdc {

std::vector<std::pair<uint32_t, uint32_t>> run_length_encode(const std::vector<uint32_t>& sorted) {
    std::vector<std::pair<uint32_t, uint32_t>> runs;
    for (size_t i = 0; i < sorted.size();) {
        size_t j = i + 1;
        while (j < sorted.size() && sorted[j] == sorted[j - 1] + 1) ++j;
        runs.emplace_back(sorted[i], static_cast<uint32_t>(j - i));
        i = j;
    }
    return runs;
}

std::vector<uint32_t> run_length_decode(const std::vector<std::pair<uint32_t, uint32_t>>& runs) {
    std::vector<uint32_t> out;
    for (auto [start, len] : runs)
        for (uint32_t d = 0; d < len; ++d) out.push_back(start + d);
    return out;
}

std::string descriptor_to_json(const CyclicCode& C, std::optional<int> parity_index) {
    nlohmann::ordered_json j;
    j["q"] = C.q;
    j["m"] = C.ctx->m();
    j["n"] = C.n;
    if (parity_index)
        j["i"] = *parity_index;
    else
        j["i"] = nullptr;
    auto runs = nlohmann::ordered_json::array();
    for (auto [start, len] : run_length_encode(C.T.members))
        runs.push_back(nlohmann::ordered_json::array({start, len}));
    j["defining_set"] = std::move(runs);
    j["generator"] = C.g.to_string();
    j["k"] = C.k;
    return j.dump();
}

ParsedDescriptor parse_descriptor(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("malformed descriptor JSON: ") + e.what());
    }
    try {
        ParsedDescriptor d;
        d.q = j.at("q").get<int>();
        d.m = j.at("m").get<int>();
        d.n = j.at("n").get<uint32_t>();
        if (!j.at("i").is_null()) d.i = j.at("i").get<int>();
        std::vector<std::pair<uint32_t, uint32_t>> runs;
        for (const auto& r : j.at("defining_set"))
            runs.emplace_back(r.at(0).get<uint32_t>(), r.at(1).get<uint32_t>());
        d.T.n = d.n;
        d.T.q = d.q;
        d.T.members = run_length_decode(runs);
        d.generator_text = j.at("generator").get<std::string>();
        d.k = j.at("k").get<uint32_t>();
        return d;
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("descriptor missing or mistyped field: ") + e.what());
    }
}

CyclicCode code_from_descriptor(const ParsedDescriptor& d,
                                std::shared_ptr<const FieldContext> ctx) {
    if (!ctx || ctx->m() != d.m || ctx->n() != d.n)
        throw Error("descriptor does not match the field context");
    CyclicCode C = make_cyclic_code(std::move(ctx), d.T);
    if (C.k != d.k) throw Error("descriptor k disagrees with the defining set");
    if (C.g.to_string() != d.generator_text)
        throw Error("descriptor generator disagrees with the defining set (modulus mismatch?)");
    return C;
}

}  // namespace qdc
