#pragma once

#include <stdexcept>
#include <string>

namespace kflag {

// Error conditions surfaced across the library. The C API maps these 1:1 to
// kf_status codes; the CLI maps them to exit classes (input vs mathematical).
enum class Errc {
  none = 0,
  parse_error,
  invalid_argument,
  duplicate_abscissa,
  unverified_fit,
  zero_vector,
  zero_weight_vector,
  trivial_flag,
  almost_trivial,
  almost_trivial_image,
  zero_norm,
  fit_unstable,
  zero_b0,
  unreachable_point,
  internal,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

inline void require(bool ok, Errc code, const std::string& msg) {
  if (!ok) fail(code, msg);
}

}  // namespace kflag
