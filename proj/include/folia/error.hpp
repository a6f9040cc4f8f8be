#pragma once

#include <stdexcept>
#include <string>

namespace folia {

/// Base class for all domain errors raised by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DimensionMismatch : Error {
  explicit DimensionMismatch(const std::string& msg) : Error(msg) {}
};
struct NonSymmetric : Error {
  explicit NonSymmetric(const std::string& msg) : Error(msg) {}
};
struct WrongDegree : Error {
  explicit WrongDegree(const std::string& msg) : Error(msg) {}
};
struct InvalidParams : Error {
  explicit InvalidParams(const std::string& msg) : Error(msg) {}
};

// Two eigenvalue clusters closer than 10*tol but farther than tol: the split
// is not trustworthy and the caller should perturb or adjust the tolerance.
struct ClusterAmbiguity : Error {
  explicit ClusterAmbiguity(const std::string& msg) : Error(msg) {}
};

struct NotIdempotent : Error {
  explicit NotIdempotent(const std::string& msg) : Error(msg) {}
};
struct NotFormallyReal : Error {
  explicit NotFormallyReal(const std::string& msg) : Error(msg) {}
};
struct UnrecognizedDimension : Error {
  explicit UnrecognizedDimension(const std::string& msg) : Error(msg) {}
};
struct ExceptionalAlbert : Error {
  explicit ExceptionalAlbert(const std::string& msg) : Error(msg) {}
};
struct RelationFailure : Error {
  explicit RelationFailure(const std::string& msg) : Error(msg) {}
};
struct NotInImage : Error {
  explicit NotInImage(const std::string& msg) : Error(msg) {}
};
struct NotInvariant : Error {
  explicit NotInvariant(const std::string& msg) : Error(msg) {}
};
struct GroupTooLarge : Error {
  explicit GroupTooLarge(const std::string& msg) : Error(msg) {}
};
struct NonConvergence : Error {
  explicit NonConvergence(const std::string& msg) : Error(msg) {}
};
struct UnsupportedType : Error {
  explicit UnsupportedType(const std::string& msg) : Error(msg) {}
};
struct NotSameDimension : Error {
  explicit NotSameDimension(const std::string& msg) : Error(msg) {}
};
struct InputError : Error {
  explicit InputError(const std::string& msg) : Error(msg) {}
};

}  // namespace folia
