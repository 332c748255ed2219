#include "fastutf/types.hpp"

namespace fastutf {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::HeaderBits: return "HeaderBits";
    case ErrorKind::TooShort: return "TooShort";
    case ErrorKind::TooLong: return "TooLong";
    case ErrorKind::Overlong: return "Overlong";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::Surrogate: return "Surrogate";
  }
  return "Unknown";
}

}  // namespace fastutf
