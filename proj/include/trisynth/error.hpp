#pragma once

#include <stdexcept>
#include <string>

namespace trisynth {

// Base class for all library errors. Subtypes distinguish the failure
// modes callers are expected to branch on (CLI exit codes, tests).
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact division requested for a non-multiple (e.g. div_chi with residue != 0).
struct NotDivisible : Error {
    using Error::Error;
};

// Shape violations: size mismatch in products, dimension not a power of 3,
// level-matrix index out of range or duplicated.
struct DimensionError : Error {
    using Error::Error;
};

// Operation applied to a value of the wrong coefficient ring.
struct RingError : Error {
    using Error::Error;
};

struct NotUnitary : Error {
    using Error::Error;
};

struct NotUnitVector : Error {
    using Error::Error;
};

// sde-lowering step requested on a column that is already integral.
struct SdeZero : Error {
    using Error::Error;
};

struct IndexError : Error {
    using Error::Error;
};

struct WireError : Error {
    using Error::Error;
};

// Routing requested for a level matrix whose index points coincide.
struct DegenerateIndices : Error {
    using Error::Error;
};

// Malformed input file or gate-word string.
struct ParseError : Error {
    using Error::Error;
};

}  // namespace trisynth
