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

#include "hmul/hmul.h"

#include <cstring>
#include <new>
#include <string>

#include "core/coeffs.hpp"
#include "core/errors.hpp"
#include "core/hankel.hpp"
#include "core/poly.hpp"
#include "core/sdp.hpp"
#include "core/serialize.hpp"
#include "core/shiftmul.hpp"
#include "core/witness.hpp"

namespace {

thread_local std::string g_last_error;

hmul_status set_error(hmul::Errc code, const char* what) {
  g_last_error = what;
  return static_cast<hmul_status>(code);
}

template <typename Fn>
hmul_status guarded(Fn&& fn) {
  try {
    fn();
    return HMUL_OK;
  } catch (const hmul::Error& e) {
    return set_error(e.code(), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(hmul::Errc::internal, "out of memory");
  } catch (const std::exception& e) {
    return set_error(hmul::Errc::internal, e.what());
  } catch (...) {
    return set_error(hmul::Errc::internal, "unknown error");
  }
}

void check_ptr(const void* p, const char* name) {
  if (p == nullptr) {
    hmul::fail(hmul::Errc::invalid_argument, std::string(name) + " must not be NULL");
  }
}

hmul::CoeffMap map_from_arrays(const int64_t* indices, const double* re, const double* im,
                               size_t count) {
  check_ptr(indices, "indices");
  check_ptr(re, "re");
  hmul::CoeffMap m;
  for (size_t i = 0; i < count; ++i) {
    const hmul::cd c(re[i], im ? im[i] : 0.0);
    if (c != hmul::cd(0.0, 0.0)) m[indices[i]] = c;
  }
  return m;
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

Eigen::VectorXcd vector_from_arrays(const double* re, const double* im, size_t dim) {
  check_ptr(re, "vector re");
  Eigen::VectorXcd v(static_cast<Eigen::Index>(dim));
  for (size_t i = 0; i < dim; ++i) v(static_cast<Eigen::Index>(i)) = hmul::cd(re[i], im ? im[i] : 0.0);
  return v;
}

}  // namespace

struct hmul_poly {
  hmul::AnalyticPoly value;
};
struct hmul_seq {
  hmul::MultiplierSeq value;
};
struct hmul_matrix {
  Eigen::MatrixXcd value;
};
struct hmul_gamma2_cert {
  hmul::Gamma2Certificate value;
};
struct hmul_dyadic {
  hmul::DyadicFactorization value;
};
struct hmul_sep_report {
  hmul::SeparationReport value;
};
struct hmul_powerop {
  hmul::PowerBoundedOp value;
};
struct hmul_mdcert {
  hmul::MdCertificate value;
};

extern "C" {

const char* hmul_version_string(void) { return "hmul 0.1.0"; }

const char* hmul_status_name(hmul_status code) {
  return hmul::errc_name(static_cast<hmul::Errc>(code));
}

const char* hmul_last_error(void) { return g_last_error.c_str(); }

void hmul_string_free(char* s) { delete[] s; }

/* ------------------------------------------------------------ polynomials */

hmul_status hmul_poly_create(const int64_t* indices, const double* re, const double* im,
                             size_t count, hmul_poly** out) {
  return guarded([&] {
    check_ptr(out, "out");
    *out = new hmul_poly{hmul::AnalyticPoly(map_from_arrays(indices, re, im, count))};
  });
}

void hmul_poly_free(hmul_poly* p) { delete p; }

hmul_status hmul_poly_degree(const hmul_poly* p, int64_t* out) {
  return guarded([&] {
    check_ptr(p, "poly");
    check_ptr(out, "out");
    *out = p->value.degree();
  });
}

hmul_status hmul_poly_support_count(const hmul_poly* p, size_t* out) {
  return guarded([&] {
    check_ptr(p, "poly");
    check_ptr(out, "out");
    *out = p->value.support_size();
  });
}

hmul_status hmul_poly_export(const hmul_poly* p, int64_t* indices, double* re, double* im) {
  return guarded([&] {
    check_ptr(p, "poly");
    check_ptr(indices, "indices");
    check_ptr(re, "re");
    check_ptr(im, "im");
    size_t i = 0;
    for (const auto& [n, c] : p->value.coeffs()) {
      indices[i] = n;
      re[i] = c.real();
      im[i] = c.imag();
      ++i;
    }
  });
}

hmul_status hmul_poly_coeff(const hmul_poly* p, int64_t n, double* re, double* im) {
  return guarded([&] {
    check_ptr(p, "poly");
    check_ptr(re, "re");
    check_ptr(im, "im");
    const hmul::cd c = p->value.coeff(n);
    *re = c.real();
    *im = c.imag();
  });
}

hmul_status hmul_poly_to_json(const hmul_poly* p, char** out) {
  return guarded([&] {
    check_ptr(p, "poly");
    check_ptr(out, "out");
    *out = dup_string(hmul::poly_to_json(p->value).dump());
  });
}

hmul_status hmul_poly_from_json(const char* text, hmul_poly** out) {
  return guarded([&] {
    check_ptr(text, "text");
    check_ptr(out, "out");
    hmul::json j = hmul::json::parse(text, nullptr, false);
    if (j.is_discarded()) hmul::fail(hmul::Errc::parse_error, "invalid JSON");
    *out = new hmul_poly{hmul::poly_from_json(j)};
  });
}

/* -------------------------------------------------------------- sequences */

hmul_status hmul_seq_create(const int64_t* indices, const double* re, const double* im,
                            size_t count, hmul_seq** out) {
  return guarded([&] {
    check_ptr(out, "out");
    *out = new hmul_seq{hmul::MultiplierSeq(map_from_arrays(indices, re, im, count))};
  });
}

void hmul_seq_free(hmul_seq* s) { delete s; }

hmul_status hmul_seq_support_max(const hmul_seq* s, int64_t* out) {
  return guarded([&] {
    check_ptr(s, "seq");
    check_ptr(out, "out");
    *out = s->value.support_max();
  });
}

hmul_status hmul_seq_support_count(const hmul_seq* s, size_t* out) {
  return guarded([&] {
    check_ptr(s, "seq");
    check_ptr(out, "out");
    *out = s->value.entries().size();
  });
}

hmul_status hmul_seq_export(const hmul_seq* s, int64_t* indices, double* re, double* im) {
  return guarded([&] {
    check_ptr(s, "seq");
    check_ptr(indices, "indices");
    check_ptr(re, "re");
    check_ptr(im, "im");
    size_t i = 0;
    for (const auto& [n, c] : s->value.entries()) {
      indices[i] = n;
      re[i] = c.real();
      im[i] = c.imag();
      ++i;
    }
  });
}

hmul_status hmul_seq_entry(const hmul_seq* s, int64_t n, double* re, double* im) {
  return guarded([&] {
    check_ptr(s, "seq");
    check_ptr(re, "re");
    check_ptr(im, "im");
    const hmul::cd c = s->value.entry(n);
    *re = c.real();
    *im = c.imag();
  });
}

hmul_status hmul_seq_to_json(const hmul_seq* s, char** out) {
  return guarded([&] {
    check_ptr(s, "seq");
    check_ptr(out, "out");
    *out = dup_string(hmul::seq_to_json(s->value).dump());
  });
}

hmul_status hmul_seq_from_json(const char* text, hmul_seq** out) {
  return guarded([&] {
    check_ptr(text, "text");
    check_ptr(out, "out");
    hmul::json j = hmul::json::parse(text, nullptr, false);
    if (j.is_discarded()) hmul::fail(hmul::Errc::parse_error, "invalid JSON");
    *out = new hmul_seq{hmul::seq_from_json(j)};
  });
}

hmul_status hmul_seq_from_poly(const hmul_poly* p, hmul_seq** out) {
  return guarded([&] {
    check_ptr(p, "poly");
    check_ptr(out, "out");
    *out = new hmul_seq{hmul::MultiplierSeq::from_poly(p->value)};
  });
}

hmul_status hmul_seq_l2_norm(const hmul_seq* s, double* out) {
  return guarded([&] {
    check_ptr(s, "seq");
    check_ptr(out, "out");
    *out = s->value.l2_norm();
  });
}

/* ------------------------------------------------------- circle analysis  */

hmul_status hmul_eval_grid(const hmul_poly* p, uint64_t grid_size, double* out_re,
                           double* out_im) {
  return guarded([&] {
    check_ptr(p, "poly");
    check_ptr(out_re, "out_re");
    check_ptr(out_im, "out_im");
    const hmul::TorusGrid g = hmul::eval_grid(p->value, grid_size);
    for (uint64_t j = 0; j < grid_size; ++j) {
      out_re[j] = g.values[j].real();
      out_im[j] = g.values[j].imag();
    }
  });
}

hmul_status hmul_norm_p(const hmul_poly* p, int which, uint64_t grid_size, double* out) {
  return guarded([&] {
    check_ptr(p, "poly");
    check_ptr(out, "out");
    hmul::PNorm pn;
    switch (which) {
      case HMUL_NORM_L1: pn = hmul::PNorm::one; break;
      case HMUL_NORM_L2: pn = hmul::PNorm::two; break;
      case HMUL_NORM_INF: pn = hmul::PNorm::inf; break;
      default: hmul::fail(hmul::Errc::invalid_argument, "unknown norm selector");
    }
    *out = hmul::norm_p(p->value, pn, grid_size);
  });
}

hmul_status hmul_norm_inf_upper(const hmul_poly* p, uint64_t grid_size, double* out) {
  return guarded([&] {
    check_ptr(p, "poly");
    check_ptr(out, "out");
    *out = hmul::norm_inf_upper(p->value, grid_size);
  });
}

hmul_status hmul_riesz_factor(const hmul_poly* p, uint64_t grid_size, double tol, double* l2g,
                              double* l2h, double* residual, double* achieved_tol,
                              double* g_re, double* g_im, double* h_re, double* h_im) {
  return guarded([&] {
    check_ptr(p, "poly");
    const hmul::RieszFactorPair rf = hmul::riesz_factor(p->value, grid_size, tol);
    if (l2g) *l2g = rf.l2g;
    if (l2h) *l2h = rf.l2h;
    if (residual) *residual = rf.residual;
    if (achieved_tol) *achieved_tol = rf.achieved_tol;
    for (uint64_t j = 0; j < grid_size; ++j) {
      if (g_re) g_re[j] = rf.g.values[j].real();
      if (g_im) g_im[j] = rf.g.values[j].imag();
      if (h_re) h_re[j] = rf.h.values[j].real();
      if (h_im) h_im[j] = rf.h.values[j].imag();
    }
  });
}

hmul_status hmul_lvp_kernel(int K, hmul_poly** out) {
  return guarded([&] {
    check_ptr(out, "out");
    *out = new hmul_poly{hmul::lvp_kernel(K)};
  });
}

hmul_status hmul_dirichlet_poly(int64_t q, hmul_poly** out) {
  return guarded([&] {
    check_ptr(out, "out");
    *out = new hmul_poly{hmul::dirichlet_poly(q)};
  });
}

/* ----------------------------------------------------------- dense matrix */

hmul_status hmul_matrix_create(int64_t rows, int64_t cols, const double* re, const double* im,
                               hmul_matrix** out) {
  return guarded([&] {
    check_ptr(re, "re");
    check_ptr(out, "out");
    if (rows < 1 || cols < 1) {
      hmul::fail(hmul::Errc::invalid_argument, "matrix dimensions must be positive");
    }
    Eigen::MatrixXcd a(rows, cols);
    for (int64_t i = 0; i < rows; ++i) {
      for (int64_t j = 0; j < cols; ++j) {
        const size_t k = static_cast<size_t>(i * cols + j);
        a(i, j) = hmul::cd(re[k], im ? im[k] : 0.0);
      }
    }
    *out = new hmul_matrix{std::move(a)};
  });
}

void hmul_matrix_free(hmul_matrix* a) { delete a; }

hmul_status hmul_matrix_rows(const hmul_matrix* a, int64_t* out) {
  return guarded([&] {
    check_ptr(a, "matrix");
    check_ptr(out, "out");
    *out = a->value.rows();
  });
}

hmul_status hmul_matrix_cols(const hmul_matrix* a, int64_t* out) {
  return guarded([&] {
    check_ptr(a, "matrix");
    check_ptr(out, "out");
    *out = a->value.cols();
  });
}

hmul_status hmul_matrix_get(const hmul_matrix* a, int64_t i, int64_t j, double* re,
                            double* im) {
  return guarded([&] {
    check_ptr(a, "matrix");
    check_ptr(re, "re");
    check_ptr(im, "im");
    if (i < 0 || i >= a->value.rows() || j < 0 || j >= a->value.cols()) {
      hmul::fail(hmul::Errc::invalid_argument, "matrix index out of range");
    }
    *re = a->value(i, j).real();
    *im = a->value(i, j).imag();
  });
}

hmul_status hmul_matrix_to_json(const hmul_matrix* a, char** out) {
  return guarded([&] {
    check_ptr(a, "matrix");
    check_ptr(out, "out");
    *out = dup_string(hmul::matrix_to_json(a->value).dump());
  });
}

hmul_status hmul_matrix_from_json(const char* text, hmul_matrix** out) {
  return guarded([&] {
    check_ptr(text, "text");
    check_ptr(out, "out");
    hmul::json j = hmul::json::parse(text, nullptr, false);
    if (j.is_discarded()) hmul::fail(hmul::Errc::parse_error, "invalid JSON");
    *out = new hmul_matrix{hmul::matrix_from_json(j)};
  });
}

/* -------------------------------------------------- Hankel / gamma2 / x2  */

hmul_status hmul_build_hankel(const hmul_seq* phi, int64_t n, int64_t dense_cap,
                              hmul_matrix** out) {
  return guarded([&] {
    check_ptr(phi, "phi");
    check_ptr(out, "out");
    const hmul::HankelTruncation h = hmul::build_hankel(
        phi->value, n, dense_cap > 0 ? dense_cap : hmul::kDefaultDenseCap);
    *out = new hmul_matrix{h.entries};
  });
}

hmul_status hmul_gamma2(const hmul_matrix* a, double tol, int64_t size_cap,
                        hmul_gamma2_cert** out) {
  return guarded([&] {
    check_ptr(a, "matrix");
    check_ptr(out, "out");
    hmul::SdpOptions opts;
    if (size_cap > 0) opts.size_cap = size_cap;
    *out = new hmul_gamma2_cert{hmul::gamma2_sdp(a->value, tol, opts)};
  });
}

void hmul_gamma2_cert_free(hmul_gamma2_cert* c) { delete c; }

#define HMUL_CERT_SCALAR(fn, field)                                      \
  hmul_status fn(const hmul_gamma2_cert* c, double* out) {               \
    return guarded([&] {                                                 \
      check_ptr(c, "certificate");                                       \
      check_ptr(out, "out");                                             \
      *out = c->value.field;                                             \
    });                                                                  \
  }

HMUL_CERT_SCALAR(hmul_gamma2_value, value)
HMUL_CERT_SCALAR(hmul_gamma2_gap, gap)
HMUL_CERT_SCALAR(hmul_gamma2_dual_bound, dual_bound)
HMUL_CERT_SCALAR(hmul_gamma2_row_norm_max, row_norm_max)
HMUL_CERT_SCALAR(hmul_gamma2_col_norm_max, col_norm_max)
#undef HMUL_CERT_SCALAR

hmul_status hmul_gamma2_factor_rank(const hmul_gamma2_cert* c, int64_t* out) {
  return guarded([&] {
    check_ptr(c, "certificate");
    check_ptr(out, "out");
    *out = c->value.primal_x.cols();
  });
}

hmul_status hmul_gamma2_factor_x(const hmul_gamma2_cert* c, hmul_matrix** out) {
  return guarded([&] {
    check_ptr(c, "certificate");
    check_ptr(out, "out");
    *out = new hmul_matrix{c->value.primal_x};
  });
}

hmul_status hmul_gamma2_factor_y(const hmul_gamma2_cert* c, hmul_matrix** out) {
  return guarded([&] {
    check_ptr(c, "certificate");
    check_ptr(out, "out");
    *out = new hmul_matrix{c->value.primal_y};
  });
}

hmul_status hmul_gamma2_witness(const hmul_gamma2_cert* c, hmul_matrix** out) {
  return guarded([&] {
    check_ptr(c, "certificate");
    check_ptr(out, "out");
    *out = new hmul_matrix{c->value.dual_witness};
  });
}

hmul_status hmul_gamma2_cert_to_json(const hmul_gamma2_cert* c, char** out) {
  return guarded([&] {
    check_ptr(c, "certificate");
    check_ptr(out, "out");
    *out = dup_string(hmul::certificate_to_json(c->value).dump());
  });
}

hmul_status hmul_dyadic_upper(const hmul_seq* phi, hmul_dyadic** out) {
  return guarded([&] {
    check_ptr(phi, "phi");
    check_ptr(out, "out");
    *out = new hmul_dyadic{hmul::dyadic_upper(phi->value)};
  });
}

void hmul_dyadic_free(hmul_dyadic* d) { delete d; }

#define HMUL_DYADIC_SCALAR(fn, field)                            \
  hmul_status fn(const hmul_dyadic* d, double* out) {            \
    return guarded([&] {                                         \
      check_ptr(d, "dyadic");                                    \
      check_ptr(out, "out");                                     \
      *out = d->value.field;                                     \
    });                                                          \
  }

HMUL_DYADIC_SCALAR(hmul_dyadic_block_sup, block_sup)
HMUL_DYADIC_SCALAR(hmul_dyadic_statement_bound, statement_bound)
HMUL_DYADIC_SCALAR(hmul_dyadic_proof_bound, proof_bound)
HMUL_DYADIC_SCALAR(hmul_dyadic_two_proxy, two_proxy)
#undef HMUL_DYADIC_SCALAR

hmul_status hmul_dyadic_vectors_materialized(const hmul_dyadic* d, int* out) {
  return guarded([&] {
    check_ptr(d, "dyadic");
    check_ptr(out, "out");
    *out = d->value.vectors_materialized ? 1 : 0;
  });
}

hmul_status hmul_dyadic_reconstruct(const hmul_dyadic* d, int64_t i, int64_t j, double* re,
                                    double* im) {
  return guarded([&] {
    check_ptr(d, "dyadic");
    check_ptr(re, "re");
    check_ptr(im, "im");
    const hmul::cd c = d->value.reconstruct(i, j);
    *re = c.real();
    *im = c.imag();
  });
}

hmul_status hmul_x2_lower(const hmul_poly* g, double tol, double* out) {
  return guarded([&] {
    check_ptr(g, "poly");
    check_ptr(out, "out");
    *out = hmul::x2_lower_sdp(g->value, tol);
  });
}

hmul_status hmul_injective_norm(const hmul_matrix* a, int phase_resolution, double* value,
                                double* refinement_bound) {
  return guarded([&] {
    check_ptr(a, "matrix");
    check_ptr(value, "value");
    const hmul::InjectiveNormResult r =
        hmul::injective_norm_bruteforce(a->value, phase_resolution);
    *value = r.value;
    if (refinement_bound) *refinement_bound = r.refinement_bound;
  });
}

hmul_status hmul_lifting_norm_upper(const hmul_poly* p, int phase_resolution, double* out) {
  return guarded([&] {
    check_ptr(p, "poly");
    check_ptr(out, "out");
    *out = hmul::lifting_norm_upper(p->value, phase_resolution);
  });
}

/* ------------------------------------------------------ shifted multiplier */

hmul_status hmul_apply_multiplier(const hmul_seq* phi, const hmul_poly* x, hmul_poly** out) {
  return guarded([&] {
    check_ptr(phi, "phi");
    check_ptr(x, "x");
    check_ptr(out, "out");
    *out = new hmul_poly{hmul::apply_multiplier(phi->value, x->value)};
  });
}

hmul_status hmul_shift_maximal(const hmul_seq* phi, const hmul_poly* x, uint64_t grid_size,
                               double* value, int64_t* k_max, double* refinement_gap) {
  return guarded([&] {
    check_ptr(phi, "phi");
    check_ptr(x, "x");
    check_ptr(value, "value");
    const hmul::ShiftMaximalResult r = hmul::shift_maximal(phi->value, x->value, grid_size);
    *value = r.value;
    if (k_max) *k_max = r.k_max;
    if (refinement_gap) *refinement_gap = r.refinement_gap;
  });
}

hmul_status hmul_m3_lower_from_family(const hmul_poly* const* family, size_t count, int K,
                                      uint64_t grid_size, double* certified,
                                      double* conservative) {
  return guarded([&] {
    check_ptr(family, "family");
    check_ptr(certified, "certified");
    std::vector<hmul::AnalyticPoly> polys;
    polys.reserve(count);
    for (size_t i = 0; i < count; ++i) {
      check_ptr(family[i], "family member");
      polys.push_back(family[i]->value);
    }
    const hmul::FamilyLowerBound b = hmul::m3_lower_from_family(polys, K, grid_size);
    *certified = b.certified;
    if (conservative) *conservative = b.conservative;
  });
}

hmul_status hmul_extract_shift_window(const hmul_seq* phi, const hmul_poly* kernel, int64_t k,
                                      hmul_seq** out) {
  return guarded([&] {
    check_ptr(phi, "phi");
    check_ptr(kernel, "kernel");
    check_ptr(out, "out");
    *out = new hmul_seq{hmul::extract_shift_window(phi->value, kernel->value, k)};
  });
}

/* --------------------------------------------------- witness / separation */

hmul_status hmul_bernstein_grid(int64_t q, size_t* point_count, double* a, double* b,
                                double* thetas) {
  return guarded([&] {
    const hmul::BernsteinGrid g = hmul::bernstein_grid(q);
    if (point_count) *point_count = g.thetas.size();
    if (a) *a = g.a;
    if (b) *b = g.b;
    if (thetas) {
      for (size_t i = 0; i < g.thetas.size(); ++i) thetas[i] = g.thetas[i];
    }
  });
}

hmul_status hmul_cq_estimate(int64_t q, uint64_t grid_size, double* lower, double* upper) {
  return guarded([&] {
    check_ptr(lower, "lower");
    const hmul::CqEstimate e = hmul::cq_estimate(q, grid_size);
    *lower = e.lower;
    if (upper) *upper = e.upper;
  });
}

hmul_status hmul_rotated_dirichlet_family(int64_t q, hmul_poly*** out, size_t* count) {
  return guarded([&] {
    check_ptr(out, "out");
    check_ptr(count, "count");
    const std::vector<hmul::AnalyticPoly> family = hmul::rotated_dirichlet_family(q);
    hmul_poly** arr = new hmul_poly*[family.size()];
    for (size_t i = 0; i < family.size(); ++i) arr[i] = new hmul_poly{family[i]};
    *out = arr;
    *count = family.size();
  });
}

void hmul_poly_array_free(hmul_poly** family, size_t count) {
  if (!family) return;
  for (size_t i = 0; i < count; ++i) delete family[i];
  delete[] family;
}

hmul_status hmul_build_witness(int K, const hmul_poly* const* family, size_t count,
                               hmul_seq** out) {
  return guarded([&] {
    check_ptr(family, "family");
    check_ptr(out, "out");
    std::vector<hmul::AnalyticPoly> polys;
    polys.reserve(count);
    for (size_t i = 0; i < count; ++i) {
      check_ptr(family[i], "family member");
      polys.push_back(family[i]->value);
    }
    *out = new hmul_seq{hmul::build_witness(K, polys)};
  });
}

hmul_status hmul_separation_experiment(const int* Ks, size_t count, uint64_t grid_size,
                                       double sdp_tol, int sdp_max_K, hmul_sep_report** out) {
  return guarded([&] {
    check_ptr(Ks, "Ks");
    check_ptr(out, "out");
    hmul::SeparationOptions opts;
    opts.grid_size = grid_size;
    if (sdp_tol > 0.0) opts.sdp_tol = sdp_tol;
    opts.sdp_max_K = sdp_max_K;
    *out = new hmul_sep_report{
        hmul::separation_experiment(std::span<const int>(Ks, count), opts)};
  });
}

void hmul_sep_report_free(hmul_sep_report* r) { delete r; }

hmul_status hmul_sep_row_count(const hmul_sep_report* r, size_t* out) {
  return guarded([&] {
    check_ptr(r, "report");
    check_ptr(out, "out");
    *out = r->value.rows.size();
  });
}

hmul_status hmul_sep_row(const hmul_sep_report* r, size_t i, int* K, int64_t* q,
                         double* m2_upper_proof, double* m2_upper_sdp, double* m3_lower,
                         double* ratio) {
  return guarded([&] {
    check_ptr(r, "report");
    if (i >= r->value.rows.size()) {
      hmul::fail(hmul::Errc::invalid_argument, "row index out of range");
    }
    const hmul::SeparationRow& row = r->value.rows[i];
    if (K) *K = row.K;
    if (q) *q = row.q;
    if (m2_upper_proof) *m2_upper_proof = row.m2_upper_proof;
    if (m2_upper_sdp) {
      *m2_upper_sdp =
          row.m2_upper_sdp ? *row.m2_upper_sdp : std::numeric_limits<double>::quiet_NaN();
    }
    if (m3_lower) *m3_lower = row.m3_lower;
    if (ratio) *ratio = row.ratio;
  });
}

hmul_status hmul_sep_fit(const hmul_sep_report* r, double* exponent, double* r2) {
  return guarded([&] {
    check_ptr(r, "report");
    if (exponent) *exponent = r->value.fit_exponent;
    if (r2) *r2 = r->value.fit_r2;
  });
}

hmul_status hmul_sep_to_json(const hmul_sep_report* r, char** out) {
  return guarded([&] {
    check_ptr(r, "report");
    check_ptr(out, "out");
    *out = dup_string(hmul::separation_to_json(r->value).dump());
  });
}

hmul_status hmul_sep_to_csv(const hmul_sep_report* r, char** out) {
  return guarded([&] {
    check_ptr(r, "report");
    check_ptr(out, "out");
    *out = dup_string(hmul::separation_to_csv(r->value));
  });
}

/* ------------------------------------------------- power-bounded operators */

hmul_status hmul_power_bound_certify(const hmul_matrix* t, int n_max, hmul_powerop** out) {
  return guarded([&] {
    check_ptr(t, "matrix");
    check_ptr(out, "out");
    *out = new hmul_powerop{hmul::power_bound_certify(t->value, n_max)};
  });
}

void hmul_powerop_free(hmul_powerop* op) { delete op; }

hmul_status hmul_powerop_certified_c(const hmul_powerop* op, double* out) {
  return guarded([&] {
    check_ptr(op, "op");
    check_ptr(out, "out");
    *out = op->value.certified_c;
  });
}

hmul_status hmul_powerop_horizon(const hmul_powerop* op, int* out) {
  return guarded([&] {
    check_ptr(op, "op");
    check_ptr(out, "out");
    *out = op->value.horizon;
  });
}

hmul_status hmul_powerop_is_contraction(const hmul_powerop* op, int* out) {
  return guarded([&] {
    check_ptr(op, "op");
    check_ptr(out, "out");
    *out = op->value.contraction_branch ? 1 : 0;
  });
}

hmul_status hmul_powerop_norm_at_horizon(const hmul_powerop* op, double* out) {
  return guarded([&] {
    check_ptr(op, "op");
    check_ptr(out, "out");
    *out = op->value.norm_at_horizon;
  });
}

hmul_status hmul_powerop_rationale(const hmul_powerop* op, char** out) {
  return guarded([&] {
    check_ptr(op, "op");
    check_ptr(out, "out");
    *out = dup_string(op->value.tail_rationale);
  });
}

hmul_status hmul_powerop_to_json(const hmul_powerop* op, char** out) {
  return guarded([&] {
    check_ptr(op, "op");
    check_ptr(out, "out");
    *out = dup_string(hmul::powerop_to_json(op->value).dump());
  });
}

hmul_status hmul_coeff_sequence(const hmul_powerop* op, const double* xi_re,
                                const double* xi_im, const double* eta_re,
                                const double* eta_im, size_t dim, int64_t N, hmul_seq** out) {
  return guarded([&] {
    check_ptr(op, "op");
    check_ptr(out, "out");
    *out = new hmul_seq{hmul::coeff_sequence(op->value, vector_from_arrays(xi_re, xi_im, dim),
                                             vector_from_arrays(eta_re, eta_im, dim), N)};
  });
}

hmul_status hmul_md_certificate(const hmul_powerop* op, const double* xi_re,
                                const double* xi_im, const double* eta_re,
                                const double* eta_im, size_t dim, int d, hmul_mdcert** out) {
  return guarded([&] {
    check_ptr(op, "op");
    check_ptr(out, "out");
    *out = new hmul_mdcert{hmul::md_certificate(op->value, vector_from_arrays(xi_re, xi_im, dim),
                                                vector_from_arrays(eta_re, eta_im, dim), d)};
  });
}

void hmul_mdcert_free(hmul_mdcert* c) { delete c; }

hmul_status hmul_mdcert_norm_bound(const hmul_mdcert* c, double* out) {
  return guarded([&] {
    check_ptr(c, "certificate");
    check_ptr(out, "out");
    *out = c->value.norm_bound;
  });
}

hmul_status hmul_mdcert_eval(const hmul_mdcert* c, const int64_t* ts, size_t count, double* re,
                             double* im) {
  return guarded([&] {
    check_ptr(c, "certificate");
    check_ptr(ts, "ts");
    check_ptr(re, "re");
    check_ptr(im, "im");
    const hmul::cd v = c->value.eval(std::span<const hmul::Index>(ts, count));
    *re = v.real();
    *im = v.imag();
  });
}

hmul_status hmul_von_neumann_check(const hmul_poly* p, const hmul_matrix* t,
                                   uint64_t grid_size, double* lhs, double* rhs, int* pass) {
  return guarded([&] {
    check_ptr(p, "poly");
    check_ptr(t, "matrix");
    const hmul::VonNeumannCheck r = hmul::von_neumann_check(p->value, t->value, grid_size);
    if (lhs) *lhs = r.lhs;
    if (rhs) *rhs = r.rhs;
    if (pass) *pass = r.pass ? 1 : 0;
  });
}

}  // extern "C"
