#pragma once

#include <stdexcept>
#include <string>

namespace hurwitz {

enum class Errc {
  NonPositivePart,
  SumMismatch,
  TooFewPartitions,
  OddEuler,
  ChiTooLarge,
  HTooSmall,
  DegreeMismatch,
  Unsupported,
  NotThreePoint,
  InvalidDatum,
  InvalidConstellation,
  BadFaceId,
  MalformedLoop,
  BadInput,
};

const char* errc_name(Errc c);

// Single exception type for all domain errors; code() tells callers (and the
// CLI exit-code mapping) what went wrong.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg);
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& msg);

}  // namespace hurwitz
