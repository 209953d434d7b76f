#ifndef QDC_CODES_HPP
#define QDC_CODES_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "qdc/galois.hpp"
#include "qdc/gf4.hpp"
#include "qdc/poly.hpp"
#include "qdc/weights.hpp"

namespace qdc {

using Matrix = std::vector<Word>;

/// Reduces rows to canonical reduced row echelon form in place (entries in
/// GF(4), or its subfield for binary matrices) and returns the rank.
size_t rref_in_place(Matrix& rows);

/// Basis of the right kernel {x : G x^T = 0} of a full-rank RREF matrix.
Matrix nullspace(const Matrix& rref_rows, uint32_t n);

/// Explicit generator-matrix code.  Rows are kept in canonical RREF, so two
/// LinearCodes are equal exactly when they are the same subspace.
class LinearCode {
   public:
    static LinearCode from_rows(int q, uint32_t n, Matrix rows);

    int q() const noexcept { return q_; }
    uint32_t n() const noexcept { return n_; }
    uint32_t k() const noexcept { return static_cast<uint32_t>(rows_.size()); }
    const Matrix& rows() const noexcept { return rows_; }

    friend bool operator==(const LinearCode&, const LinearCode&) = default;

   private:
    LinearCode(int q, uint32_t n, Matrix rows) : q_(q), n_(n), rows_(std::move(rows)) {}
    int q_{4};
    uint32_t n_{0};
    Matrix rows_;
};

/// Cyclic code presented by its defining set; the generator polynomial and
/// dimension are synthesized from it.  Code equality is defining-set equality
/// (under a fixed context).
struct CyclicCode {
    std::shared_ptr<const FieldContext> ctx;
    int q{4};
    uint32_t n{0};
    DefiningSet T;
    Poly g{Field::quaternary};
    uint32_t k{0};

    bool same_code(const CyclicCode& other) const { return q == other.q && T == other.T; }
};

/// Synthesizes the cyclic code with defining set T over the given context,
/// verifying deg g = |T| and g | x^n - 1.
CyclicCode make_cyclic_code(std::shared_ptr<const FieldContext> ctx, DefiningSet T);

/// The quaternary cyclic code of length 4^m - 1 whose defining set selects
/// base-4 digit-sum parity i.
CyclicCode build_code(int i, int m, std::shared_ptr<const FieldContext> ctx);

/// Dual code: defining set Z_n \ (-T), dimension n - k.
CyclicCode dual(const CyclicCode& C);

/// Subcode of words with zero coordinate sum: defining set T + {0}.
/// Throws AlreadyEven when 0 is already in T.
CyclicCode even_weight_subcode(const CyclicCode& C);

/// Equivalent code under the coordinate permutation x -> x^a: defining set
/// a^{-1} T mod n.  Throws NonCoprime when gcd(a, n) != 1.
CyclicCode apply_multiplier(const CyclicCode& C, int64_t a);

/// True when the two defining sets split {1..n-1} into halves swapped by the
/// multiplier b.  Both orientations are accepted: sets without 0 (odd-like
/// splitting) and sets that share exactly the extra member 0 (even-like);
/// mixed 0-membership is never a valid pair.
bool is_duadic_pair(const CyclicCode& C1, const CyclicCode& C2, int64_t b);

/// True when the code meets its dual only in 0, decided from the hull
/// defining set T u (Z_n \ -T) = Z_n.
bool is_lcd(const CyclicCode& C);

/// True when 0 is not in the defining set; equivalently g(1) != 0.
bool is_odd_like(const CyclicCode& C);

/// Generator matrix: cyclic shifts of g, reduced to canonical RREF.
LinearCode generator_matrix(const CyclicCode& C);

/// Dual of an explicit linear code via the kernel of its generator matrix.
LinearCode dual(const LinearCode& C);

/// Appends an overall parity coordinate (the coordinate sum; characteristic 2
/// makes it its own negative).  Length n+1, dimension unchanged.
LinearCode extend(const LinearCode& C);
LinearCode extend(const CyclicCode& C);

/// message (k symbols) * G.
Word encode(const LinearCode& C, const Word& message);
Word encode(const CyclicCode& C, const Word& message);

/// Number of codewords q^k, or budget+1 if it exceeds the budget (saturating).
uint64_t codeword_count(int q, uint32_t k, uint64_t budget);

/// Invokes fn with every one of the q^k codewords, in a fixed message order.
/// The visited reference is only valid during the call.  Throws BudgetExceeded
/// when q^k > budget.
void for_each_codeword(const LinearCode& C, uint64_t budget,
                       const std::function<void(const Word&)>& fn);
void for_each_codeword(const CyclicCode& C, uint64_t budget,
                       const std::function<void(const Word&)>& fn);

/// Visits the codewords of message indices [start, start+count), the
/// partitioning primitive for parallel consumers: disjoint ranges cover the
/// message space with no shared state.
void enumerate_message_range(const LinearCode& C, uint64_t start, uint64_t count,
                             const std::function<void(const Word&)>& fn);

/// dim(A n B) computed by rank of the stacked generator matrices.
uint32_t code_intersection_dim(const LinearCode& A, const LinearCode& B);

}  // namespace qdc

#endif
