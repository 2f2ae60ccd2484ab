#include "hurwitz/errors.hpp"

namespace hurwitz {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NonPositivePart: return "NonPositivePart";
    case Errc::SumMismatch: return "SumMismatch";
    case Errc::TooFewPartitions: return "TooFewPartitions";
    case Errc::OddEuler: return "OddEuler";
    case Errc::ChiTooLarge: return "ChiTooLarge";
    case Errc::HTooSmall: return "HTooSmall";
    case Errc::DegreeMismatch: return "DegreeMismatch";
    case Errc::Unsupported: return "Unsupported";
    case Errc::NotThreePoint: return "NotThreePoint";
    case Errc::InvalidDatum: return "InvalidDatum";
    case Errc::InvalidConstellation: return "InvalidConstellation";
    case Errc::BadFaceId: return "BadFaceId";
    case Errc::MalformedLoop: return "MalformedLoop";
    case Errc::BadInput: return "BadInput";
  }
  return "UnknownError";
}

Error::Error(Errc code, const std::string& msg)
    : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace hurwitz
