/*
 * Copyright 2026 The hmul Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef HMUL_CORE_ERRORS_HPP
#define HMUL_CORE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hmul {

// Stable error taxonomy; the C API exposes the same values as integer codes.
enum class Errc : int {
  ok = 0,
  invalid_argument = 1,
  grid_too_small = 2,
  not_power_of_two = 3,
  zero_input = 4,
  factorization_diverged = 5,
  size_limit = 6,
  sdp_nonconvergent = 7,
  degree_violation = 8,
  family_length_mismatch = 9,
  norm_violation = 10,
  dimension_mismatch = 11,
  not_certifiable = 12,
  not_a_contraction = 13,
  property_check_failed = 14,
  io_error = 15,
  parse_error = 16,
  checksum_mismatch = 17,
  not_found = 18,
  internal = 19,
};

inline const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::ok: return "Ok";
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::grid_too_small: return "GridTooSmall";
    case Errc::not_power_of_two: return "NotPowerOfTwo";
    case Errc::zero_input: return "ZeroInput";
    case Errc::factorization_diverged: return "FactorizationDiverged";
    case Errc::size_limit: return "SizeLimit";
    case Errc::sdp_nonconvergent: return "SdpNonConvergent";
    case Errc::degree_violation: return "DegreeViolation";
    case Errc::family_length_mismatch: return "FamilyLengthMismatch";
    case Errc::norm_violation: return "NormViolation";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::not_certifiable: return "NotCertifiable";
    case Errc::not_a_contraction: return "NotAContraction";
    case Errc::property_check_failed: return "PropertyCheckFailed";
    case Errc::io_error: return "IoError";
    case Errc::parse_error: return "ParseError";
    case Errc::checksum_mismatch: return "ChecksumMismatch";
    case Errc::not_found: return "NotFound";
    case Errc::internal: return "Internal";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, Errc code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace hmul

#endif
