#ifndef QDC_DESCRIPTOR_HPP
#define QDC_DESCRIPTOR_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qdc/codes.hpp"

namespace qdc {

/// Run-length encoding of a sorted residue set: [start, length] pairs.
std::vector<std::pair<uint32_t, uint32_t>> run_length_encode(const std::vector<uint32_t>& sorted);
std::vector<uint32_t> run_length_decode(const std::vector<std::pair<uint32_t, uint32_t>>& runs);

/// Code descriptor JSON: {q, m, n, i, defining_set (run-length-encoded),
/// generator (text form), k}.  `i` is the parity selector when the code is one
/// of the two built families, null otherwise.
std::string descriptor_to_json(const CyclicCode& C, std::optional<int> parity_index);

struct ParsedDescriptor {
    int q{4};
    int m{0};
    uint32_t n{0};
    std::optional<int> i;
    DefiningSet T;
    std::string generator_text;
    uint32_t k{0};
};

ParsedDescriptor parse_descriptor(const std::string& json_text);

/// Rebuilds the cyclic code from a parsed descriptor under the given context,
/// re-deriving the generator and cross-checking it (and k) against the
/// descriptor's claims.  Mismatches throw Error (a malformed descriptor is a
/// usage problem, not a bug).
CyclicCode code_from_descriptor(const ParsedDescriptor& d,
                                std::shared_ptr<const FieldContext> ctx);

}  // namespace qdc

#endif
