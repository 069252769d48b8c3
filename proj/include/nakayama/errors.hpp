#pragma once

#include <stdexcept>
#include <string>

namespace nakayama {

/// Base class of every error raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input text (sequence or module syntax).
struct ParseError : Error {
    using Error::Error;
};

/// A sequence violating the admissibility inequalities.
struct InadmissibleSequence : Error {
    using Error::Error;
};

/// An entry equal to 1 at a non-final position; such a sequence is never admissible.
struct MisplacedOne : InadmissibleSequence {
    using InadmissibleSequence::InadmissibleSequence;
};

/// The theta machinery is restricted to cycle algebras.
struct LineUnsupported : Error {
    using Error::Error;
};

/// A (top, length) pair that does not name a module over the given sequence.
struct InvalidModule : Error {
    using Error::Error;
};

/// A projective module was passed where a non-projective one is required.
struct ProjectiveInput : Error {
    using Error::Error;
};

/// Determinant of a non-square matrix.
struct NonSquare : Error {
    using Error::Error;
};

/// No retraction step exists: the algebra is already self-injective.
struct SelfInjectiveInput : Error {
    using Error::Error;
};

/// The simple-counting formula for r applies only to infinite global dimension.
struct FiniteGlobalDimension : Error {
    using Error::Error;
};

/// A composition-factor list that is not a module over the given sequence.
struct InvalidFactorList : Error {
    using Error::Error;
};

/// A certificate whose shape is broken (sizes, ranges), as opposed to one that fails verification.
struct MalformedCertificate : Error {
    using Error::Error;
};

/// A violated internal invariant; signals an implementation bug, not a user error.
struct InternalInconsistency : Error {
    using Error::Error;
};

} // namespace nakayama
