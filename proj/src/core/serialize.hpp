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

#ifndef HMUL_CORE_SERIALIZE_HPP
#define HMUL_CORE_SERIALIZE_HPP

#include <Eigen/Dense>
#include <json.hpp>
#include <string>
#include <vector>

#include "core/coeffs.hpp"
#include "core/poly.hpp"
#include "core/sdp.hpp"
#include "core/shiftmul.hpp"
#include "core/witness.hpp"

namespace hmul {

using json = nlohmann::json;

// Coefficient objects: {"support": [[n, re, im], ...]}.
json poly_to_json(const AnalyticPoly& p);
AnalyticPoly poly_from_json(const json& j);
json seq_to_json(const MultiplierSeq& s);
MultiplierSeq seq_from_json(const json& j);

// Dense matrices: {"m": rows, "n": cols, "rows": [[re, im, re, im, ...], ...]}.
json matrix_to_json(const Eigen::MatrixXcd& a);
Eigen::MatrixXcd matrix_from_json(const json& j);

std::string base64_encode(const unsigned char* data, std::size_t len);
std::vector<unsigned char> base64_decode(const std::string& text);

// Certificates carry scalars plus base64-packed little-endian double arrays
// (re/im interleaved, row-major).
json certificate_to_json(const Gamma2Certificate& cert);

json shift_maximal_to_json(const ShiftMaximalResult& r);
json cq_to_json(const CqEstimate& e);
json separation_to_json(const SeparationReport& r);
std::string separation_to_csv(const SeparationReport& r);
std::string cq_table_to_csv(const std::vector<CqEstimate>& rows);
json powerop_to_json(const PowerBoundedOp& op);

}  // namespace hmul

#endif
