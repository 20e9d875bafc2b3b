#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ratass {

enum class ErrorKind {
  NotCoprime,
  BadOrder,
  CapExceeded,
  InvalidSource,
  InvalidPath,
  InvalidDiagonal,
  NonIntegral,
  NotAFaceOfHat,
  AdmissibilityViolated,
  LemmaViolated,
  NotConeVertex,
  NotAFace,
  NotFree,
  ScheduleFailed,
  NotPerfect,
  Overflow,
  Parse,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::BadOrder: return "BadOrder";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::InvalidSource: return "InvalidSource";
    case ErrorKind::InvalidPath: return "InvalidPath";
    case ErrorKind::InvalidDiagonal: return "InvalidDiagonal";
    case ErrorKind::NonIntegral: return "NonIntegral";
    case ErrorKind::NotAFaceOfHat: return "NotAFaceOfHat";
    case ErrorKind::AdmissibilityViolated: return "AdmissibilityViolated";
    case ErrorKind::LemmaViolated: return "LemmaViolated";
    case ErrorKind::NotConeVertex: return "NotConeVertex";
    case ErrorKind::NotAFace: return "NotAFace";
    case ErrorKind::NotFree: return "NotFree";
    case ErrorKind::ScheduleFailed: return "ScheduleFailed";
    case ErrorKind::NotPerfect: return "NotPerfect";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a kind so callers (the CLI in
/// particular) can map it onto an exit status without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised by the collapse schedule when a stage does not behave as the
/// cone-vertex argument predicts. `r` is the 1-based edge index, `q` the
/// crossing-face index (p+1 for the final wedge batch).
class ScheduleFailed : public Error {
 public:
  ScheduleFailed(int r, int q, std::string face, const std::string& why)
      : Error(ErrorKind::ScheduleFailed,
              "stage r=" + std::to_string(r) + " q=" + std::to_string(q) + " face " + face + ": " + why),
        r_(r), q_(q), face_(std::move(face)) {}

  int r() const noexcept { return r_; }
  int q() const noexcept { return q_; }
  const std::string& face() const noexcept { return face_; }

 private:
  int r_;
  int q_;
  std::string face_;
};

}  // namespace ratass
