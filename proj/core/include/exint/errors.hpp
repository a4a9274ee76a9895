#pragma once

#include <stdexcept>
#include <string>

namespace exint {

// Base class for everything this library throws on a precondition breach.
// Checks never report "pass" by swallowing one of these: the CLI maps them
// to status "error" and a nonzero exit.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed scalar string ("3//7", empty numerator, zero denominator, ...).
struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error(what) {}
};

// Evaluation of 1/(x - m/2) at its pole, or an R-block at a half-integer
// shifted point where the series denominators vanish.
struct PoleError : Error {
  explicit PoleError(const std::string& what) : Error(what) {}
};

// Lagrange interpolation fed two identical abscissae.
struct DuplicateAbscissa : Error {
  explicit DuplicateAbscissa(const std::string& what) : Error(what) {}
};

// An auxiliary-space construction needs more truncated dimensions than given.
struct TruncationTooSmall : Error {
  explicit TruncationTooSmall(const std::string& what) : Error(what) {}
};

// Two routes to one object disagreed (operator-built block vs closed form).
struct MismatchError : Error {
  explicit MismatchError(const std::string& what) : Error(what) {}
};

// Exact inversion of a singular matrix.
struct NotInvertible : Error {
  explicit NotInvertible(const std::string& what) : Error(what) {}
};

// Jordan-type factorisation requested where the weight matrix degenerates.
struct SingularW : Error {
  explicit SingularW(const std::string& what) : Error(what) {}
};

// Binary operation on operators living on different chain lengths.
struct DimensionMismatch : Error {
  explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

// Numeric steady-state solver found a null space of dimension != 1.
struct NullSpaceDimensionError : Error {
  explicit NullSpaceDimensionError(const std::string& what) : Error(what) {}
};

// A closed-form coefficient has a vanishing denominator at these parameters.
struct DenominatorZero : Error {
  explicit DenominatorZero(const std::string& what) : Error(what) {}
};

// A family advertised as linearly independent fails to reach full rank.
struct RankDeficient : Error {
  explicit RankDeficient(const std::string& what) : Error(what) {}
};

// An exact linear system that should be solvable is inconsistent.
struct NoSolution : Error {
  explicit NoSolution(const std::string& what) : Error(what) {}
};

// Eigenvalue ratio evaluated on its singular locus.
struct SingularDispersion : Error {
  explicit SingularDispersion(const std::string& what) : Error(what) {}
};

// Wronskian-type expansion coefficient evaluated on its singular locus.
struct SingularCoefficient : Error {
  explicit SingularCoefficient(const std::string& what) : Error(what) {}
};

// Root-finding polynomial lost its leading coefficient entirely.
struct DegenerateLeadingCoefficient : Error {
  explicit DegenerateLeadingCoefficient(const std::string& what) : Error(what) {}
};

// The two rapidities of a candidate pair coincide; no state can be built.
struct DegeneratePair : Error {
  explicit DegeneratePair(const std::string& what) : Error(what) {}
};

// Numeric 2x2 kernel expected to be (near-)singular is not.
struct KernelEmpty : Error {
  explicit KernelEmpty(const std::string& what) : Error(what) {}
};

}  // namespace exint
