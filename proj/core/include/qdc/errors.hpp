#ifndef QDC_ERRORS_HPP
#define QDC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qdc {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// The requested modulus does not generate the full multiplicative group.
struct NonPrimitiveModulus : Error {
    using Error::Error;
};

/// Table construction (or another size-limited facility) was asked for an m outside its range.
struct UnsupportedSize : Error {
    using Error::Error;
};

struct DivisionByZero : Error {
    using Error::Error;
};

/// Two polynomials over different coefficient fields were combined.
struct FieldMismatch : Error {
    using Error::Error;
};

/// An integer that must be invertible modulo n is not coprime to n.
struct NonCoprime : Error {
    using Error::Error;
};

/// A verifier was called on inputs violating its stated hypothesis.
struct HypothesisViolated : Error {
    using Error::Error;
};

/// No verifier case applies to this m.
struct InapplicableM : Error {
    using Error::Error;
};

/// A residue set that must be closed under multiplication by q is not.
struct NotClosed : Error {
    using Error::Error;
};

/// even_weight_subcode applied to a code whose defining set already contains 0.
struct AlreadyEven : Error {
    using Error::Error;
};

/// An enumeration was requested that exceeds the codeword budget.
struct BudgetExceeded : Error {
    using Error::Error;
};

/// A transform that must produce integers did not; signals an upstream bug.
struct NonIntegralResult : Error {
    using Error::Error;
};

/// A library invariant failed at runtime; always a bug, never a usage error.
struct InternalError : Error {
    using Error::Error;
};

}  // namespace qdc

#endif
