#ifndef QDC_DERIVED_HPP
#define QDC_DERIVED_HPP

#include <cstdint>

#include "qdc/codes.hpp"
#include "qdc/distance.hpp"

namespace qdc {

/// Coordinate census of a quaternary vector: n0 zeros, n2 ones, n1 entries in
/// {w, W}.  (The symbol 1 carries Lee weight 2; that is what makes the Gray
/// map an isometry, since 1 maps to the pair (1,1).)
struct LeeComposition {
    uint32_t n0{0};
    uint32_t n1{0};
    uint32_t n2{0};
};

LeeComposition lee_composition(const Word& x) noexcept;

/// n1 + 2*n2.
uint32_t lee_weight(const Word& x) noexcept;

/// GF(2)-linear isometry (GF(4)^n, Lee) -> (GF(2)^{2n}, Hamming), laid out as
/// two concatenated blocks: writing each coordinate as w*a + W*b, the output
/// is (a_0..a_{n-1}, b_0..b_{n-1}).  Per coordinate: 0 -> (0,0), w -> (1,0),
/// W -> (0,1), 1 -> (1,1).
Word gray_map(const Word& x);

/// Binary [2n, 2k] image of a quaternary linear code under gray_map.
LinearCode gray_image(const LinearCode& C);

/// Binary cyclic code of the all-binary codewords: defining set is the
/// closure of T under multiplication by 2 mod n.
CyclicCode subfield_subcode(const CyclicCode& C);

/// Same subcode constructed the slow way, by filtering the full enumeration
/// for all-binary words; the independent cross-check for subfield_subcode.
LinearCode subfield_subcode_exhaustive(const CyclicCode& C, uint64_t budget = kDefaultBudget);

/// Binary code of coordinatewise traces, spanned by tr(r) and tr(w r) over
/// the generator rows.  The result is cross-checked at runtime against the
/// dual-of-subfield-subcode-of-dual route; disagreement is an InternalError.
LinearCode trace_code(const CyclicCode& C);

enum class TypeIIStatus { proven, refuted, sampled_consistent };

const char* type_ii_status_name(TypeIIStatus s);

struct TypeVerdict {
    bool self_orthogonal{false};
    bool self_dual{false};
    TypeIIStatus type_ii{TypeIIStatus::refuted};
};

/// Self-orthogonality and self-duality are exact (G G^T = 0 plus the
/// dimension check).  The all-Lee-weights-divisible-by-4 property is proven
/// or refuted by full enumeration when q^k <= budget; otherwise `samples`
/// seeded random codewords are drawn and the verdict is sampled_consistent
/// unless a violation is found.  A code that is not self-dual is never
/// Type II, so its verdict is refuted regardless of weights.
TypeVerdict classify_type(const LinearCode& C, uint64_t budget = kDefaultBudget,
                          uint32_t samples = kDefaultSamples, uint64_t seed = kDefaultSeed);

}  // namespace qdc

#endif
