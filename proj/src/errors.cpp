#include "errors.hpp"

namespace kflag {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::none: return "Ok";
    case Errc::parse_error: return "ParseError";
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::duplicate_abscissa: return "DuplicateAbscissa";
    case Errc::unverified_fit: return "UnverifiedFit";
    case Errc::zero_vector: return "ZeroVector";
    case Errc::zero_weight_vector: return "ZeroWeightVector";
    case Errc::trivial_flag: return "TrivialFlag";
    case Errc::almost_trivial: return "AlmostTrivial";
    case Errc::almost_trivial_image: return "AlmostTrivialImage";
    case Errc::zero_norm: return "ZeroNorm";
    case Errc::fit_unstable: return "FitUnstable";
    case Errc::zero_b0: return "ZeroB0";
    case Errc::unreachable_point: return "UnreachablePoint";
    case Errc::internal: return "InternalError";
  }
  return "InternalError";
}

}  // namespace kflag
