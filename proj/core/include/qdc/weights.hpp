#ifndef QDC_WEIGHTS_HPP
#define QDC_WEIGHTS_HPP

#include <cstdint>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qdc/errors.hpp"

namespace qdc {

using BigInt = boost::multiprecision::cpp_int;

/// Sum of base-4 digits.
int base4_weight(uint64_t i) noexcept;
int base4_weight(BigInt i);

/// Sum of base-2 digits (popcount).
int base2_weight(uint64_t i) noexcept;
int base2_weight(BigInt i);

/// A set of residues modulo n closed under multiplication by q; the
/// combinatorial identity of a q-ary cyclic code of length n.
struct DefiningSet {
    uint32_t n{0};
    int q{4};                       // alphabet size: 2 or 4
    std::vector<uint32_t> members;  // sorted, all in [0, n)

    bool contains(uint32_t t) const noexcept;
    bool is_closed() const noexcept;  // closed under *q mod n

    friend bool operator==(const DefiningSet&, const DefiningSet&) = default;
};

/// Orbit of i under multiplication by q modulo n, sorted.
/// Throws NonCoprime unless gcd(q, n) = 1.
std::vector<uint32_t> cyclotomic_coset(uint32_t i, int q, uint32_t n);

/// The residues j in [1, n-1], n = 4^m - 1, whose base-`base` digit sum has
/// parity i.  These are the defining sets of the two code families (base 4)
/// and their binary counterparts (base 2).
DefiningSet defining_set(int i, int m, int base = 4);

/// Number of residues in [1, n-1] with base-4 digit sum of parity i, without
/// materializing the set.
uint64_t defining_set_size(int i, int m);

// ---- set algebra on defining sets ----

DefiningSet negated(const DefiningSet& T);                 // {-t mod n}
DefiningSet complemented(const DefiningSet& T);            // Z_n \ T
DefiningSet scaled(const DefiningSet& T, uint64_t v);      // {v t mod n}; v coprime to n
DefiningSet with_zero(const DefiningSet& T);               // T + {0}
DefiningSet set_union(const DefiningSet&, const DefiningSet&);

/// Multiplicative inverse of a modulo n; throws NonCoprime when gcd(a,n) != 1.
uint32_t mod_inverse(int64_t a, uint32_t n);

// ---- arithmetic verifiers ----

/// Outcome of checking gcd(a^m + 1, a^l - 1) against the parity-of-a
/// prediction (1 for even a, 2 for odd a), valid when l/gcd(m,l) is odd.
struct GcdCheck {
    int predicted{0};
    BigInt actual;
    bool match{false};
};

/// Computes the gcd by Euclid on big integers and compares with the
/// prediction.  Throws HypothesisViolated when l/gcd(m,l) is even.
GcdCheck verify_gcd_pattern(const BigInt& a, int m, int l);

/// Outcome of checking that every av, 1 <= a <= a_max, has even base-4 digit
/// sum mod n (i.e. lies in the parity-0 defining set), where v depends on the
/// residue class of m.
struct MultiplesCheck {
    BigInt v;
    BigInt a_max;
    bool contained{false};
    std::vector<BigInt> witnesses;  // the failing a values, if any
};

/// Applicable cases (others throw InapplicableM):
///   m = 1 mod 4, m >= 5:  v = 4^{(m-1)/2}+1, a_max = 4^{(m-1)/2}
///   m = 3 mod 4, m >= 7:  v = 4^{(m+1)/2}+1, a_max = 4^{(m-3)/2}
///   m = 2 mod 4, m >= 8:  v = 4^{(m+2)/2}+1, a_max = 4^{(m-4)/2}
///   m = 4 mod 8, m >= 12: v = 4^{(m-4)/2}+1, a_max = 4^{(m-4)/2}
/// Also verifies gcd(v, n) = 1.  Pure big-integer arithmetic; no code is built.
MultiplesCheck verify_even_multiples(int m);

/// True iff [w4(2a) = w4(a) mod 2  <=>  w2(a) even] holds for this a,
/// checked in both directions.
bool verify_weight_coupling(uint64_t a);

/// Containment checks behind the m = 14 mod 16 case (m >= 30), with
/// v1 = 2^{(m-4)/2}-1 and v2 = 4^{(m+2)/8}+1: for all 1 <= a <= 2^{(m-14)/4},
/// reduced mod n = 4^m-1,
///   w4(a v1 v2) even, w2(a v1 v2) odd, w4(2a v1 v2) odd.
struct MixedCheck {
    BigInt v1, v2;
    BigInt a_max;
    bool all_even_base4{false};     // a v1 v2 in the even base-4 set
    bool all_odd_base2{false};      // a v1 v2 in the odd base-2 set
    bool doubled_all_odd_base4{false};  // 2a v1 v2 in the odd base-4 set
};

MixedCheck verify_mixed_containments(int m);

// ---- consecutive-run machinery for distance bounds ----

/// Length of the longest run of cyclically consecutive residues contained in
/// T.  A run may wrap around n-1 -> 0 only when 0 is a member.  Empty set: 0.
uint32_t longest_consecutive_run(const DefiningSet& T);

struct MultiplierRun {
    uint32_t v{1};
    uint32_t run{0};
};

/// Maximizes longest_consecutive_run(v*T mod n) over the candidate
/// multipliers.  Every candidate must be coprime to n (NonCoprime otherwise).
/// The associated distance bound is run + 1.
MultiplierRun bch_multiplier_search(const DefiningSet& T, std::span<const uint32_t> candidates);

/// All v in [1, n) with gcd(v, n) = 1; the exhaustive candidate list used for
/// n <= 4095.
std::vector<uint32_t> all_coprime_candidates(uint32_t n);

}  // namespace qdc

#endif
