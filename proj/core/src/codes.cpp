#include "qdc/codes.hpp"

#include <algorithm>
#include <string>

namespace qdc {

size_t rref_in_place(Matrix& rows) {
    if (rows.empty()) return 0;
    const size_t n = rows[0].size();
    size_t pivot_row = 0;
    for (size_t col = 0; col < n && pivot_row < rows.size(); ++col) {
        size_t sel = pivot_row;
        while (sel < rows.size() && rows[sel][col].is_zero()) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[pivot_row], rows[sel]);
        const GF4 inv = gf4_inverse(rows[pivot_row][col]);
        for (auto& x : rows[pivot_row]) x *= inv;
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r == pivot_row || rows[r][col].is_zero()) continue;
            const GF4 f = rows[r][col];
            for (size_t j = col; j < n; ++j) rows[r][j] += f * rows[pivot_row][j];
        }
        ++pivot_row;
    }
    rows.resize(pivot_row);
    return pivot_row;
}

Matrix nullspace(const Matrix& rref_rows, uint32_t n) {
    std::vector<int> pivot_of_col(n, -1);
    for (size_t r = 0; r < rref_rows.size(); ++r) {
        for (uint32_t c = 0; c < n; ++c) {
            if (!rref_rows[r][c].is_zero()) {
                pivot_of_col[c] = static_cast<int>(r);
                break;
            }
        }
    }
    Matrix basis;
    for (uint32_t free_col = 0; free_col < n; ++free_col) {
        if (pivot_of_col[free_col] >= 0) continue;
        Word v(n, GF4::zero());
        v[free_col] = GF4::one();
        for (uint32_t c = 0; c < n; ++c) {
            const int r = pivot_of_col[c];
            if (r >= 0) v[c] = rref_rows[static_cast<size_t>(r)][free_col];  // char 2: -x = x
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

LinearCode LinearCode::from_rows(int q, uint32_t n, Matrix rows) {
    if (q != 2 && q != 4) throw Error("alphabet must be 2 or 4");
    for (const auto& r : rows) {
        if (r.size() != n) throw Error("row length does not match code length");
        if (q == 2)
            for (GF4 x : r)
                if (!x.is_binary()) throw FieldMismatch("binary code with a nonbinary entry");
    }
    rref_in_place(rows);
    return LinearCode(q, n, std::move(rows));
}

CyclicCode make_cyclic_code(std::shared_ptr<const FieldContext> ctx, DefiningSet T) {
    CyclicCode C;
    C.ctx = std::move(ctx);
    C.q = T.q;
    C.n = T.n;
    C.g = generator_from_defining_set(T, *C.ctx);
    C.T = std::move(T);
    C.k = C.n - static_cast<uint32_t>(C.T.members.size());

    const Poly ring = Poly::x_pow_n_minus_one(C.g.field(), C.n);
    if (!poly_divmod(ring, C.g).second.is_zero())
        throw InternalError("generator does not divide x^n - 1");
    return C;
}

CyclicCode build_code(int i, int m, std::shared_ptr<const FieldContext> ctx) {
    if (!ctx || ctx->m() != m) throw Error("field context does not match m");
    return make_cyclic_code(std::move(ctx), defining_set(i, m, 4));
}

CyclicCode dual(const CyclicCode& C) {
    return make_cyclic_code(C.ctx, complemented(negated(C.T)));
}

CyclicCode even_weight_subcode(const CyclicCode& C) {
    if (C.T.contains(0)) throw AlreadyEven("defining set already contains 0");
    return make_cyclic_code(C.ctx, with_zero(C.T));
}

CyclicCode apply_multiplier(const CyclicCode& C, int64_t a) {
    const uint32_t a_inv = mod_inverse(a, C.n);
    return make_cyclic_code(C.ctx, scaled(C.T, a_inv));
}

bool is_duadic_pair(const CyclicCode& C1, const CyclicCode& C2, int64_t b) {
    if (C1.n != C2.n || C1.q != C2.q) return false;
    const bool z1 = C1.T.contains(0), z2 = C2.T.contains(0);
    if (z1 != z2) return false;
    // The halves that must partition {1..n-1}.
    const size_t s1 = C1.T.members.size() - (z1 ? 1 : 0);
    const size_t s2 = C2.T.members.size() - (z2 ? 1 : 0);
    if (s1 + s2 != C1.n - 1) return false;
    DefiningSet u = set_union(C1.T, C2.T);
    if (u.members.size() != s1 + s2 + (z1 ? 1 : 0)) return false;  // overlap beyond {0}

    int64_t bm = b % static_cast<int64_t>(C1.n);
    if (bm < 0) bm += C1.n;
    return scaled(C1.T, static_cast<uint64_t>(bm)) == C2.T &&
           scaled(C2.T, static_cast<uint64_t>(bm)) == C1.T;
}

bool is_lcd(const CyclicCode& C) {
    const DefiningSet hull = set_union(C.T, complemented(negated(C.T)));
    return hull.members.size() == C.n;
}

bool is_odd_like(const CyclicCode& C) {
    const bool by_set = !C.T.contains(0);
    const bool by_eval = !C.g.eval(GF4::one()).is_zero();
    if (by_set != by_eval) throw InternalError("g(1) disagrees with 0-membership of T");
    return by_set;
}

LinearCode generator_matrix(const CyclicCode& C) {
    Matrix rows;
    rows.reserve(C.k);
    for (uint32_t s = 0; s < C.k; ++s) {
        Word row(C.n, GF4::zero());
        for (int i = 0; i <= C.g.degree(); ++i) row[s + i] = C.g.coeff(i);
        rows.push_back(std::move(row));
    }
    LinearCode L = LinearCode::from_rows(C.q, C.n, std::move(rows));
    if (L.k() != C.k) throw InternalError("generator matrix rank does not match dimension");
    return L;
}

LinearCode dual(const LinearCode& C) {
    Matrix basis = nullspace(C.rows(), C.n());
    LinearCode D = LinearCode::from_rows(C.q(), C.n(), std::move(basis));
    if (D.k() != C.n() - C.k()) throw InternalError("dual dimension mismatch");
    return D;
}

LinearCode extend(const LinearCode& C) {
    Matrix rows;
    rows.reserve(C.k());
    for (const auto& r : C.rows()) {
        Word e = r;
        GF4 sum = GF4::zero();
        for (GF4 x : r) sum += x;
        e.push_back(sum);
        rows.push_back(std::move(e));
    }
    return LinearCode::from_rows(C.q(), C.n() + 1, std::move(rows));
}

LinearCode extend(const CyclicCode& C) { return extend(generator_matrix(C)); }

Word encode(const LinearCode& C, const Word& message) {
    if (message.size() != C.k()) throw Error("message length must equal k");
    Word cw(C.n(), GF4::zero());
    for (size_t i = 0; i < message.size(); ++i) {
        if (message[i].is_zero()) continue;
        const auto& row = C.rows()[i];
        for (uint32_t j = 0; j < C.n(); ++j) cw[j] += message[i] * row[j];
    }
    return cw;
}

Word encode(const CyclicCode& C, const Word& message) {
    return encode(generator_matrix(C), message);
}

uint64_t codeword_count(int q, uint32_t k, uint64_t budget) {
    uint64_t total = 1;
    for (uint32_t i = 0; i < k; ++i) {
        if (total > budget / static_cast<uint64_t>(q)) return budget + 1;
        total *= static_cast<uint64_t>(q);
    }
    return total;
}

namespace detail {

void add_scaled(Word& cw, const Word& row, GF4 f) {
    for (size_t j = 0; j < cw.size(); ++j) cw[j] += f * row[j];
}

}  // namespace detail

void enumerate_message_range(const LinearCode& C, uint64_t start, uint64_t count,
                             const std::function<void(const Word&)>& fn) {
    if (count == 0) return;
    const int q = C.q();

    Word cw(C.n(), GF4::zero());
    std::vector<uint8_t> digits(C.k(), 0);
    uint64_t s = start;
    for (size_t p = 0; p < digits.size(); ++p) {
        digits[p] = static_cast<uint8_t>(s % static_cast<uint64_t>(q));
        s /= static_cast<uint64_t>(q);
        if (digits[p]) detail::add_scaled(cw, C.rows()[p], GF4(digits[p]));
    }
    fn(cw);
    for (uint64_t idx = 1; idx < count; ++idx) {
        size_t p = 0;
        for (;;) {
            const uint8_t old = digits[p];
            const uint8_t next = static_cast<uint8_t>((old + 1) % q);
            digits[p] = next;
            detail::add_scaled(cw, C.rows()[p], GF4(static_cast<uint8_t>(old ^ next)));
            if (next != 0) break;
            ++p;
        }
        fn(cw);
    }
}

void for_each_codeword(const LinearCode& C, uint64_t budget,
                       const std::function<void(const Word&)>& fn) {
    const uint64_t total = codeword_count(C.q(), C.k(), budget);
    if (total > budget) throw BudgetExceeded("q^k exceeds the enumeration budget");
    enumerate_message_range(C, 0, total, fn);
}

void for_each_codeword(const CyclicCode& C, uint64_t budget,
                       const std::function<void(const Word&)>& fn) {
    for_each_codeword(generator_matrix(C), budget, fn);
}

uint32_t code_intersection_dim(const LinearCode& A, const LinearCode& B) {
    if (A.n() != B.n()) throw Error("length mismatch");
    Matrix stacked = A.rows();
    stacked.insert(stacked.end(), B.rows().begin(), B.rows().end());
    const size_t r = rref_in_place(stacked);
    return A.k() + B.k() - static_cast<uint32_t>(r);
}

}  // namespace qdc
