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

#include "core/serialize.hpp"

#include <cstring>
#include <sstream>

#include "core/errors.hpp"

namespace hmul {

namespace {

constexpr char kB64Alphabet[] =
    "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";

CoeffMap support_from_json(const json& j) {
  require(j.is_object() && j.contains("support") && j["support"].is_array(),
          Errc::parse_error, "expected an object with a \"support\" array");
  CoeffMap m;
  for (const auto& item : j["support"]) {
    require(item.is_array() && item.size() == 3, Errc::parse_error,
            "support entries must be [n, re, im] triples");
    require(item[0].is_number_integer() && item[1].is_number() && item[2].is_number(),
            Errc::parse_error, "support entries must be [n, re, im] triples");
    const Index n = item[0].get<Index>();
    require(n >= 0, Errc::parse_error, "support indices must be nonnegative");
    const cd c(item[1].get<double>(), item[2].get<double>());
    require(m.find(n) == m.end(), Errc::parse_error, "duplicate support index");
    if (c != cd(0.0, 0.0)) m.emplace(n, c);
  }
  return m;
}

json support_to_json(const CoeffMap& m) {
  json arr = json::array();
  for (const auto& [n, c] : m) arr.push_back({n, c.real(), c.imag()});
  return json{{"support", arr}};
}

std::string pack_matrix_b64(const Eigen::MatrixXcd& a) {
  std::vector<double> flat;
  flat.reserve(static_cast<std::size_t>(a.size()) * 2);
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      flat.push_back(a(i, j).real());
      flat.push_back(a(i, j).imag());
    }
  }
  return base64_encode(reinterpret_cast<const unsigned char*>(flat.data()),
                       flat.size() * sizeof(double));
}

}  // namespace

json poly_to_json(const AnalyticPoly& p) { return support_to_json(p.coeffs()); }

AnalyticPoly poly_from_json(const json& j) { return AnalyticPoly(support_from_json(j)); }

json seq_to_json(const MultiplierSeq& s) { return support_to_json(s.entries()); }

MultiplierSeq seq_from_json(const json& j) { return MultiplierSeq(support_from_json(j)); }

json matrix_to_json(const Eigen::MatrixXcd& a) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      row.push_back(a(i, j).real());
      row.push_back(a(i, j).imag());
    }
    rows.push_back(std::move(row));
  }
  return json{{"m", a.rows()}, {"n", a.cols()}, {"rows", std::move(rows)}};
}

Eigen::MatrixXcd matrix_from_json(const json& j) {
  require(j.is_object() && j.contains("n") && j.contains("rows") && j["rows"].is_array(),
          Errc::parse_error, "expected an object with \"n\" and \"rows\"");
  const Eigen::Index n = j["n"].get<Eigen::Index>();
  const Eigen::Index m = j.contains("m") ? j["m"].get<Eigen::Index>()
                                         : static_cast<Eigen::Index>(j["rows"].size());
  require(m >= 1 && n >= 1, Errc::parse_error, "matrix dimensions must be positive");
  require(static_cast<Eigen::Index>(j["rows"].size()) == m, Errc::parse_error,
          "row count mismatch");
  Eigen::MatrixXcd a(m, n);
  for (Eigen::Index i = 0; i < m; ++i) {
    const auto& row = j["rows"][static_cast<std::size_t>(i)];
    require(row.is_array() && static_cast<Eigen::Index>(row.size()) == 2 * n,
            Errc::parse_error, "each row must hold 2n numbers (re, im interleaved)");
    for (Eigen::Index c = 0; c < n; ++c) {
      a(i, c) = cd(row[static_cast<std::size_t>(2 * c)].get<double>(),
                   row[static_cast<std::size_t>(2 * c + 1)].get<double>());
    }
  }
  return a;
}

std::string base64_encode(const unsigned char* data, std::size_t len) {
  std::string out;
  out.reserve((len + 2) / 3 * 4);
  for (std::size_t i = 0; i < len; i += 3) {
    const unsigned b0 = data[i];
    const unsigned b1 = i + 1 < len ? data[i + 1] : 0;
    const unsigned b2 = i + 2 < len ? data[i + 2] : 0;
    out.push_back(kB64Alphabet[b0 >> 2]);
    out.push_back(kB64Alphabet[((b0 & 0x3) << 4) | (b1 >> 4)]);
    out.push_back(i + 1 < len ? kB64Alphabet[((b1 & 0xF) << 2) | (b2 >> 6)] : '=');
    out.push_back(i + 2 < len ? kB64Alphabet[b2 & 0x3F] : '=');
  }
  return out;
}

std::vector<unsigned char> base64_decode(const std::string& text) {
  int table[256];
  std::memset(table, -1, sizeof(table));
  for (int i = 0; i < 64; ++i) table[static_cast<unsigned char>(kB64Alphabet[i])] = i;
  std::vector<unsigned char> out;
  out.reserve(text.size() / 4 * 3);
  int buffer = 0;
  int bits = 0;
  for (char ch : text) {
    if (ch == '=' || ch == '\n' || ch == '\r') continue;
    const int v = table[static_cast<unsigned char>(ch)];
    require(v >= 0, Errc::parse_error, "invalid base64 character");
    buffer = (buffer << 6) | v;
    bits += 6;
    if (bits >= 8) {
      bits -= 8;
      out.push_back(static_cast<unsigned char>((buffer >> bits) & 0xFF));
    }
  }
  return out;
}

json certificate_to_json(const Gamma2Certificate& cert) {
  json j;
  j["value"] = cert.value;
  j["gap"] = cert.gap;
  j["dual_bound"] = cert.dual_bound;
  j["row_norm_max"] = cert.row_norm_max;
  j["col_norm_max"] = cert.col_norm_max;
  j["x_rows"] = cert.primal_x.rows();
  j["x_cols"] = cert.primal_x.cols();
  j["y_rows"] = cert.primal_y.rows();
  j["y_cols"] = cert.primal_y.cols();
  j["witness_n"] = cert.dual_witness.rows();
  j["x_b64"] = pack_matrix_b64(cert.primal_x);
  j["y_b64"] = pack_matrix_b64(cert.primal_y);
  j["witness_b64"] = pack_matrix_b64(cert.dual_witness);
  return j;
}

json shift_maximal_to_json(const ShiftMaximalResult& r) {
  return json{{"value", r.value},
              {"grid_size", r.grid_size},
              {"k_range", {0, r.k_max}},
              {"refinement_gap", r.refinement_gap}};
}

json cq_to_json(const CqEstimate& e) {
  return json{{"q", e.q},
              {"lower", e.lower},
              {"upper", e.upper},
              {"family", e.family_descriptor}};
}

json separation_to_json(const SeparationReport& r) {
  json rows = json::array();
  for (const SeparationRow& row : r.rows) {
    json jr{{"K", row.K},
            {"q", row.q},
            {"m2_upper_proof", row.m2_upper_proof},
            {"m3_lower", row.m3_lower},
            {"ratio", row.ratio}};
    if (row.m2_upper_sdp) jr["m2_upper_sdp"] = *row.m2_upper_sdp;
    rows.push_back(std::move(jr));
  }
  return json{{"rows", std::move(rows)},
              {"fit_exponent", r.fit_exponent},
              {"fit_r2", r.fit_r2}};
}

std::string separation_to_csv(const SeparationReport& r) {
  std::ostringstream os;
  os.precision(17);
  os << "K,q,m2_upper_proof,m2_upper_sdp,m3_lower,ratio\n";
  for (const SeparationRow& row : r.rows) {
    os << row.K << ',' << row.q << ',' << row.m2_upper_proof << ',';
    if (row.m2_upper_sdp) os << *row.m2_upper_sdp;
    os << ',' << row.m3_lower << ',' << row.ratio << '\n';
  }
  return os.str();
}

std::string cq_table_to_csv(const std::vector<CqEstimate>& rows) {
  std::ostringstream os;
  os.precision(17);
  os << "q,lower,upper,family\n";
  for (const CqEstimate& e : rows) {
    os << e.q << ',' << e.lower << ',' << e.upper << ',' << e.family_descriptor << '\n';
  }
  return os.str();
}

json powerop_to_json(const PowerBoundedOp& op) {
  return json{{"dim", op.T.rows()},
              {"horizon", op.horizon},
              {"certified_c", op.certified_c},
              {"contraction_branch", op.contraction_branch},
              {"norm_at_horizon", op.norm_at_horizon},
              {"tail_rationale", op.tail_rationale}};
}

}  // namespace hmul
