#pragma once

#include <string>

#include "sliceball/quaternion.hpp"
#include "sliceball/series.hpp"
#include "sliceball/verify.hpp"

namespace sliceball {

/// Quaternions serialize as the JSON array [w, x, y, z].
std::string quaternion_to_json(const Quaternion& q);
Quaternion quaternion_from_json(const std::string& text);

/// Series serialize as {"coeffs": [[w,x,y,z], ...]} plus the bookkeeping
/// fields "eval_radius" and "exact" (both optional on input; a bare
/// coefficient list reads back as an exact polynomial).
std::string series_to_json(const SliceSeries& f);
SliceSeries series_from_json(const std::string& text);

/// Reports serialize as {"passed", "margin", "witness", "samples_used"}
/// plus "outcome" and "note".
std::string report_to_json(const VerificationReport& rep, int indent = -1);
VerificationReport report_from_json(const std::string& text);

/// A function argument as given on the command line or in a file, together
/// with its resolution to a series.
struct FunctionSpec {
  std::string source;
  SliceSeries resolved;
};

/// Resolves a function spec:
///   identity                  the identity polynomial [0, 1]
///   const:<quat>              a constant
///   poly:<q0>,<q1>,...        explicit polynomial coefficients
///   mobius:<u>,<v>            regular Moebius transformation (truncated)
///   extremal:<alpha>          the extremal self-map f_alpha (truncated)
///   @path                     JSON file in the series format
///   { ... }                   inline JSON in the series format
/// Quaternion literals are a bare real like 0.25 or a tuple (w,x,y,z).
/// Throws std::invalid_argument on malformed input.
FunctionSpec resolve_function_spec(const std::string& spec,
                                   int order = SliceSeries::kMaxOrder);

}  // namespace sliceball
