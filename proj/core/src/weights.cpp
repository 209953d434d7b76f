#include "qdc/weights.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

namespace qdc {

int base4_weight(uint64_t i) noexcept {
    int s = 0;
    while (i) {
        s += static_cast<int>(i & 3u);
        i >>= 2;
    }
    return s;
}

int base4_weight(BigInt i) {
    int s = 0;
    while (i > 0) {
        s += static_cast<int>(i & 3u);
        i >>= 2;
    }
    return s;
}

int base2_weight(uint64_t i) noexcept { return std::popcount(i); }

int base2_weight(BigInt i) {
    int s = 0;
    while (i > 0) {
        s += static_cast<int>(i & 1u);
        i >>= 1;
    }
    return s;
}

bool DefiningSet::contains(uint32_t t) const noexcept {
    return std::binary_search(members.begin(), members.end(), t);
}

bool DefiningSet::is_closed() const noexcept {
    for (uint32_t t : members) {
        if (!contains(static_cast<uint32_t>((static_cast<uint64_t>(t) * q) % n))) return false;
    }
    return true;
}

std::vector<uint32_t> cyclotomic_coset(uint32_t i, int q, uint32_t n) {
    if (n == 0 || std::gcd(static_cast<uint64_t>(q), static_cast<uint64_t>(n)) != 1)
        throw NonCoprime("cyclotomic coset requires gcd(q, n) = 1");
    i %= n;
    std::vector<uint32_t> coset;
    uint32_t t = i;
    do {
        coset.push_back(t);
        t = static_cast<uint32_t>((static_cast<uint64_t>(t) * q) % n);
    } while (t != i);
    std::sort(coset.begin(), coset.end());
    return coset;
}

DefiningSet defining_set(int i, int m, int base) {
    if (m < 1 || m > 12) throw UnsupportedSize("defining_set materializes sets only for m <= 12");
    if (base != 2 && base != 4) throw Error("base must be 2 or 4");
    if (i != 0 && i != 1) throw Error("parity selector must be 0 or 1");
    const uint64_t n = (uint64_t{1} << (2 * m)) - 1;
    DefiningSet T;
    T.n = static_cast<uint32_t>(n);
    T.q = base;
    for (uint64_t j = 1; j < n; ++j) {
        const int w = base == 4 ? base4_weight(j) : base2_weight(j);
        if ((w & 1) == i) T.members.push_back(static_cast<uint32_t>(j));
    }
    return T;
}

uint64_t defining_set_size(int i, int m) {
    if (m < 1 || m > 30) throw UnsupportedSize("defining_set_size supports m <= 30");
    // Count base-4 strings of length m with digit-sum parity i: each of the
    // first m-1 digits is free and the last can take exactly two values per
    // parity, so each parity class holds 2*4^{m-1} strings.  Remove 0 (and n,
    // whose digit sum 3m decides which class loses it).
    uint64_t half = uint64_t{2} << (2 * (m - 1));
    uint64_t count = half;
    if (i == 0) count -= 1;                // exclude 0
    if ((3 * m) % 2 == i % 2) count -= 1;  // exclude n, whose digit sum is 3m
    return count;
}

DefiningSet negated(const DefiningSet& T) {
    DefiningSet R{T.n, T.q, {}};
    R.members.reserve(T.members.size());
    for (uint32_t t : T.members) R.members.push_back(t == 0 ? 0 : T.n - t);
    std::sort(R.members.begin(), R.members.end());
    return R;
}

DefiningSet complemented(const DefiningSet& T) {
    DefiningSet R{T.n, T.q, {}};
    R.members.reserve(T.n - T.members.size());
    size_t idx = 0;
    for (uint32_t t = 0; t < T.n; ++t) {
        if (idx < T.members.size() && T.members[idx] == t) {
            ++idx;
        } else {
            R.members.push_back(t);
        }
    }
    return R;
}

DefiningSet scaled(const DefiningSet& T, uint64_t v) {
    if (std::gcd(v % T.n, static_cast<uint64_t>(T.n)) != 1)
        throw NonCoprime("multiplier must be coprime to n");
    DefiningSet R{T.n, T.q, {}};
    R.members.reserve(T.members.size());
    for (uint32_t t : T.members)
        R.members.push_back(static_cast<uint32_t>((static_cast<uint64_t>(t) * v) % T.n));
    std::sort(R.members.begin(), R.members.end());
    return R;
}

DefiningSet with_zero(const DefiningSet& T) {
    DefiningSet R = T;
    if (R.members.empty() || R.members.front() != 0) R.members.insert(R.members.begin(), 0);
    return R;
}

DefiningSet set_union(const DefiningSet& A, const DefiningSet& B) {
    if (A.n != B.n) throw Error("set_union: mismatched moduli");
    DefiningSet R{A.n, A.q, {}};
    std::set_union(A.members.begin(), A.members.end(), B.members.begin(), B.members.end(),
                   std::back_inserter(R.members));
    return R;
}

uint32_t mod_inverse(int64_t a, uint32_t n) {
    int64_t r = a % static_cast<int64_t>(n);
    if (r < 0) r += n;
    // extended Euclid
    int64_t old_r = r, cur_r = n;
    int64_t old_s = 1, cur_s = 0;
    while (cur_r != 0) {
        const int64_t qt = old_r / cur_r;
        const int64_t next_r = old_r - qt * cur_r;
        const int64_t next_s = old_s - qt * cur_s;
        old_r = cur_r;
        cur_r = next_r;
        old_s = cur_s;
        cur_s = next_s;
    }
    if (old_r != 1) throw NonCoprime(std::to_string(a) + " is not invertible mod " + std::to_string(n));
    old_s %= static_cast<int64_t>(n);
    if (old_s < 0) old_s += n;
    return static_cast<uint32_t>(old_s);
}

GcdCheck verify_gcd_pattern(const BigInt& a, int m, int l) {
    if (a < 2) throw HypothesisViolated("requires a >= 2");
    if (m < 1 || l < 1) throw HypothesisViolated("requires m, l >= 1");
    if ((l / std::gcd(m, l)) % 2 == 0)
        throw HypothesisViolated("requires l/gcd(m,l) odd");
    GcdCheck out;
    out.predicted = (a % 2 == 0) ? 1 : 2;
    BigInt x = boost::multiprecision::pow(a, static_cast<unsigned>(m)) + 1;
    BigInt y = boost::multiprecision::pow(a, static_cast<unsigned>(l)) - 1;
    out.actual = boost::multiprecision::gcd(x, y);
    out.match = (out.actual == out.predicted);
    return out;
}

namespace {

BigInt pow4(int e) { return BigInt(1) << (2 * e); }

}  // namespace

MultiplesCheck verify_even_multiples(int m) {
    MultiplesCheck out;
    if (m % 4 == 1 && m >= 5) {
        out.v = pow4((m - 1) / 2) + 1;
        out.a_max = pow4((m - 1) / 2);
    } else if (m % 4 == 3 && m >= 7) {
        out.v = pow4((m + 1) / 2) + 1;
        out.a_max = pow4((m - 3) / 2);
    } else if (m % 4 == 2 && m >= 8) {
        out.v = pow4((m + 2) / 2) + 1;
        out.a_max = pow4((m - 4) / 2);
    } else if (m % 8 == 4 && m >= 12) {
        out.v = pow4((m - 4) / 2) + 1;
        out.a_max = pow4((m - 4) / 2);
    } else {
        throw InapplicableM("no applicable case for m=" + std::to_string(m));
    }
    const BigInt n = pow4(m) - 1;
    if (boost::multiprecision::gcd(out.v, n) != 1) {
        out.contained = false;
        out.witnesses.push_back(0);  // v itself fails the coprimality requirement
        return out;
    }
    out.contained = true;
    for (BigInt a = 1; a <= out.a_max; ++a) {
        if (base4_weight(a * out.v % n) % 2 != 0) {
            out.contained = false;
            out.witnesses.push_back(a);
        }
    }
    return out;
}

bool verify_weight_coupling(uint64_t a) {
    int w4_doubled;
    if (a >> 63) {
        w4_doubled = base4_weight(BigInt(a) * 2);
    } else {
        w4_doubled = base4_weight(2 * a);
    }
    const bool same_parity = (w4_doubled - base4_weight(a)) % 2 == 0;
    const bool w2_even = base2_weight(a) % 2 == 0;
    return same_parity == w2_even;
}

MixedCheck verify_mixed_containments(int m) {
    if (m % 16 != 14 || m < 30)
        throw InapplicableM("requires m = 14 mod 16 and m >= 30, got m=" + std::to_string(m));
    MixedCheck out;
    out.v1 = (BigInt(1) << ((m - 4) / 2)) - 1;
    out.v2 = pow4((m + 2) / 8) + 1;
    out.a_max = BigInt(1) << ((m - 14) / 4);
    const BigInt n = pow4(m) - 1;
    if (boost::multiprecision::gcd(out.v1, n) != 1 ||
        boost::multiprecision::gcd(out.v2, n) != 1) {
        return out;  // all flags false
    }
    out.all_even_base4 = out.all_odd_base2 = out.doubled_all_odd_base4 = true;
    const BigInt vv = out.v1 * out.v2;
    for (BigInt a = 1; a <= out.a_max; ++a) {
        const BigInt x = a * vv % n;
        if (base4_weight(x) % 2 != 0) out.all_even_base4 = false;
        if (base2_weight(x) % 2 != 1) out.all_odd_base2 = false;
        if (base4_weight(2 * a * vv % n) % 2 != 1) out.doubled_all_odd_base4 = false;
    }
    return out;
}

uint32_t longest_consecutive_run(const DefiningSet& T) {
    const auto& v = T.members;
    if (v.empty()) return 0;
    if (v.size() >= T.n) return T.n;
    uint32_t best = 0, cur = 1;
    for (size_t idx = 1; idx < v.size(); ++idx) {
        if (v[idx] == v[idx - 1] + 1) {
            ++cur;
        } else {
            best = std::max(best, cur);
            cur = 1;
        }
    }
    best = std::max(best, cur);
    // Wrap n-1 -> 0: splice the run ending at n-1 onto the run starting at 0.
    if (v.front() == 0 && v.back() == T.n - 1) {
        uint32_t head = 1;
        while (head < v.size() && v[head] == v[head - 1] + 1) ++head;
        uint32_t tail = 1;
        while (tail < v.size() && v[v.size() - tail] == v[v.size() - tail - 1] + 1) ++tail;
        best = std::max(best, head + tail);
    }
    return best;
}

MultiplierRun bch_multiplier_search(const DefiningSet& T, std::span<const uint32_t> candidates) {
    MultiplierRun best{1, 0};
    bool first = true;
    for (uint32_t v : candidates) {
        if (std::gcd(static_cast<uint64_t>(v % T.n), static_cast<uint64_t>(T.n)) != 1)
            throw NonCoprime("candidate multiplier " + std::to_string(v) +
                             " is not coprime to n=" + std::to_string(T.n));
        DefiningSet S = scaled(T, v);
        uint32_t run = longest_consecutive_run(S);
        if (first || run > best.run) {
            best = {v, run};
            first = false;
        }
    }
    return best;
}

std::vector<uint32_t> all_coprime_candidates(uint32_t n) {
    std::vector<uint32_t> out;
    for (uint32_t v = 1; v < n; ++v)
        if (std::gcd(static_cast<uint64_t>(v), static_cast<uint64_t>(n)) == 1) out.push_back(v);
    return out;
}

}  // namespace qdc
