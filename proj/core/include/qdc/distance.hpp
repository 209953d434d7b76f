#ifndef QDC_DISTANCE_HPP
#define QDC_DISTANCE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qdc/codes.hpp"
#include "qdc/weights.hpp"

namespace qdc {

inline constexpr uint64_t kDefaultBudget = uint64_t{1} << 22;
inline constexpr uint64_t kDefaultSeed = 0xC0DE;
inline constexpr uint32_t kDefaultSamples = 10000;

/// counts[w] = number of codewords of Hamming weight w.  Counters are
/// arbitrary-precision so MacWilliams outputs cannot overflow.
struct WeightDistribution {
    uint32_t n{0};
    int q{4};
    std::vector<BigInt> counts;  // size n+1

    /// Smallest w >= 1 with counts[w] != 0 (the minimum distance when exact).
    uint32_t min_nonzero_weight() const;
    BigInt total() const;
};

/// Exact distribution by full enumeration; BudgetExceeded when q^k > budget.
/// Enumeration is partitioned across threads with per-worker histograms
/// merged at the end (0 threads = use the hardware count).
WeightDistribution weight_distribution(const LinearCode& C, uint64_t budget = kDefaultBudget,
                                       unsigned threads = 0);
WeightDistribution weight_distribution(const CyclicCode& C, uint64_t budget = kDefaultBudget,
                                       unsigned threads = 0);

/// Dual distribution through the q-ary MacWilliams transform with
/// substitution (x + (q-1)y, x - y) and 1/|C| normalization.  k_dual is the
/// dual dimension (consistency-checked against |C|).  A non-integral or
/// negative output count throws NonIntegralResult.
WeightDistribution macwilliams(const WeightDistribution& Wd, uint32_t k_dual);

enum class DistanceMethod { exhaustive, via_dual, bounds_only };

const char* method_name(DistanceMethod m);

struct DistanceReport {
    std::optional<uint32_t> exact;
    uint32_t lower{1};
    uint32_t upper{0};
    DistanceMethod method{DistanceMethod::bounds_only};
    uint64_t seed{kDefaultSeed};
    uint64_t budget{kDefaultBudget};
};

/// Strategy dispatch:
///   q^k <= budget           -> exhaustive enumeration (exact);
///   q^{n-k} <= budget       -> dual enumeration + MacWilliams (exact);
///   otherwise               -> bounds_only: lower from consecutive-run
///     searches over the default multiplier candidates (cyclic codes only),
///     upper from generator rows plus `samples` seeded random codewords.
DistanceReport min_distance(const CyclicCode& C, uint64_t budget = kDefaultBudget,
                            uint64_t seed = kDefaultSeed, uint32_t samples = kDefaultSamples);
DistanceReport min_distance(const LinearCode& C, uint64_t budget = kDefaultBudget,
                            uint64_t seed = kDefaultSeed, uint32_t samples = kDefaultSamples);

/// Default multiplier candidates for run searches: every v coprime to n when
/// n <= 4095, otherwise 1 and the inverses of the case-prescribed multipliers
/// for this length (and their negatives).
std::vector<uint32_t> default_bch_candidates(const DefiningSet& T);

/// Which family of distance lower bounds to certify.
enum class BoundFamily { odd_codes, odd_duals, even_c0, even_c1_partial, even_c1_dual };

const char* bound_family_name(BoundFamily f);

struct DistanceBoundCheck {
    BigInt claimed_lower;
    BigInt certified_lower;
    bool pass{false};
};

/// Certifies the family's claimed lower bound for this m and reports whether
/// the certified bound reaches it.
///
/// For m <= 6 the defining sets are materialized and the consecutive-run
/// search runs directly (exhaustive multiplier candidates).  For larger m the
/// certificate is arithmetic only: the containment checks of the weights
/// module place an a_max-long run (plus the adjacent 0 for dual families) in
/// the scaled defining set, certifying a_max + 1 (resp. a_max + 2) without
/// building any code.  Throws InapplicableM when no case covers m.
DistanceBoundCheck verify_distance_bound(int m, BoundFamily which);

}  // namespace qdc

#endif
