#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace omltopo {

enum class ErrorKind {
  // structural validation of input lattices / posets
  NotAPoset,
  NotALattice,
  NotAnOrtholattice,
  NotOrthomodular,
  NotALowerSet,
  // generator and configuration limits
  SizeLimit,
  // standing hypotheses of the atom-based construction
  NotAtomic,
  NoAtomProjection,
  // argument errors
  NotAnAtom,
  DomainError,
  DimensionError,
  PreconditionError,
  DegenerateInput,
  // numeric certificates
  CertificateFailure,
  // interchange
  ParseError,
  IoError,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotAPoset: return "NotAPoset";
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::NotAnOrtholattice: return "NotAnOrtholattice";
    case ErrorKind::NotOrthomodular: return "NotOrthomodular";
    case ErrorKind::NotALowerSet: return "NotALowerSet";
    case ErrorKind::SizeLimit: return "SizeLimit";
    case ErrorKind::NotAtomic: return "NotAtomic";
    case ErrorKind::NoAtomProjection: return "NoAtomProjection";
    case ErrorKind::NotAnAtom: return "NotAnAtom";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::DimensionError: return "DimensionError";
    case ErrorKind::PreconditionError: return "PreconditionError";
    case ErrorKind::DegenerateInput: return "DegenerateInput";
    case ErrorKind::CertificateFailure: return "CertificateFailure";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

/// Library error; `witness()` names the elements that violate the failed law.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::vector<std::string> witness = {})
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind),
        witness_(std::move(witness)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::vector<std::string>& witness() const noexcept { return witness_; }

 private:
  ErrorKind kind_;
  std::vector<std::string> witness_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& message,
                               std::vector<std::string> witness = {}) {
  throw Error(kind, message, std::move(witness));
}

}  // namespace omltopo
