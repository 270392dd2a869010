// Copyright 2026 The chainint Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "chainint/charge_solver.hpp"
#include "chainint/lattice.hpp"

namespace chainint {

// Gaussian integer with overflow-checked arithmetic.
struct GaussInt {
  long long re = 0, im = 0;
  bool is_zero() const { return re == 0 && im == 0; }
  bool operator==(const GaussInt&) const = default;
};

namespace detail {
inline long long checked(__int128 v) {
  if (v > static_cast<__int128>(INT64_MAX) || v < static_cast<__int128>(INT64_MIN)) {
    throw std::overflow_error("dense matrix entry overflow");
  }
  return static_cast<long long>(v);
}
}  // namespace detail

inline GaussInt operator+(GaussInt a, GaussInt b) {
  return {detail::checked(static_cast<__int128>(a.re) + b.re), detail::checked(static_cast<__int128>(a.im) + b.im)};
}
inline GaussInt operator-(GaussInt a, GaussInt b) {
  return {detail::checked(static_cast<__int128>(a.re) - b.re), detail::checked(static_cast<__int128>(a.im) - b.im)};
}
inline GaussInt operator*(GaussInt a, GaussInt b) {
  __int128 re = static_cast<__int128>(a.re) * b.re - static_cast<__int128>(a.im) * b.im;
  __int128 im = static_cast<__int128>(a.re) * b.im + static_cast<__int128>(a.im) * b.re;
  return {detail::checked(re), detail::checked(im)};
}

// Square matrix over Gaussian integers, row major.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  explicit DenseMatrix(size_t dim) : dim_(dim), a_(dim * dim) {}
  size_t dim() const { return dim_; }
  GaussInt& at(size_t r, size_t c) { return a_[r * dim_ + c]; }
  const GaussInt& at(size_t r, size_t c) const { return a_[r * dim_ + c]; }

  static DenseMatrix identity(size_t dim) {
    DenseMatrix m(dim);
    for (size_t i = 0; i < dim; ++i) m.at(i, i) = {1, 0};
    return m;
  }

  DenseMatrix kron(const DenseMatrix& b) const {
    DenseMatrix r(dim_ * b.dim_);
    for (size_t i = 0; i < dim_; ++i)
      for (size_t j = 0; j < dim_; ++j) {
        const GaussInt& x = at(i, j);
        if (x.is_zero()) continue;
        for (size_t k = 0; k < b.dim_; ++k)
          for (size_t l = 0; l < b.dim_; ++l) r.at(i * b.dim_ + k, j * b.dim_ + l) = x * b.at(k, l);
      }
    return r;
  }

  DenseMatrix operator*(const DenseMatrix& b) const {
    if (dim_ != b.dim_) throw std::invalid_argument("dimension mismatch");
    DenseMatrix r(dim_);
    for (size_t i = 0; i < dim_; ++i)
      for (size_t k = 0; k < dim_; ++k) {
        const GaussInt& x = at(i, k);
        if (x.is_zero()) continue;
        for (size_t j = 0; j < dim_; ++j) {
          const GaussInt& y = b.at(k, j);
          if (!y.is_zero()) r.at(i, j) = r.at(i, j) + x * y;
        }
      }
    return r;
  }
  DenseMatrix operator+(const DenseMatrix& b) const { return zip(b, [](GaussInt x, GaussInt y) { return x + y; }); }
  DenseMatrix operator-(const DenseMatrix& b) const { return zip(b, [](GaussInt x, GaussInt y) { return x - y; }); }
  DenseMatrix scaled(GaussInt s) const {
    DenseMatrix r = *this;
    for (auto& x : r.a_) x = x * s;
    return r;
  }
  bool is_zero() const {
    for (const auto& x : a_) {
      if (!x.is_zero()) return false;
    }
    return true;
  }
  bool operator==(const DenseMatrix& b) const { return dim_ == b.dim_ && a_ == b.a_; }

  // First nonzero entry in row-major order.
  std::optional<std::pair<size_t, size_t>> first_nonzero() const {
    for (size_t i = 0; i < a_.size(); ++i) {
      if (!a_[i].is_zero()) return std::make_pair(i / dim_, i % dim_);
    }
    return std::nullopt;
  }

 private:
  template <class Op>
  DenseMatrix zip(const DenseMatrix& b, Op op) const {
    if (dim_ != b.dim_) throw std::invalid_argument("dimension mismatch");
    DenseMatrix r(dim_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = op(a_[i], b.a_[i]);
    return r;
  }
  size_t dim_ = 0;
  std::vector<GaussInt> a_;
};

constexpr int kMaxDenseSites = 10;

inline DenseMatrix pauli_matrix(Letter l) {
  DenseMatrix m(2);
  switch (l) {
    case Letter::I: m.at(0, 0) = {1, 0}; m.at(1, 1) = {1, 0}; break;
    case Letter::X: m.at(0, 1) = {1, 0}; m.at(1, 0) = {1, 0}; break;
    case Letter::Y: m.at(0, 1) = {0, -1}; m.at(1, 0) = {0, 1}; break;
    case Letter::Z: m.at(0, 0) = {1, 0}; m.at(1, 1) = {-1, 0}; break;
  }
  return m;
}

// Kronecker product over sites 0..n-1, site 0 leftmost.
inline DenseMatrix string_matrix(const PauliString& s, int n_sites) {
  if (n_sites < 1 || n_sites > kMaxDenseSites) {
    throw ResourceCap("dense matrix sites", n_sites, kMaxDenseSites);
  }
  DenseMatrix m = pauli_matrix(s.letter(0));
  for (int k = 1; k < n_sites; ++k) m = m.kron(pauli_matrix(s.letter(k)));
  return m;
}

inline GaussInt to_gauss_int(const GaussRational& v) {
  if (v.re().get_den() != 1 || v.im().get_den() != 1) throw std::invalid_argument("coefficient is not integral");
  if (!v.re().get_num().fits_slong_p() || !v.im().get_num().fits_slong_p()) {
    throw std::overflow_error("coefficient too large for a dense matrix");
  }
  return {v.re().get_num().get_si(), v.im().get_num().get_si()};
}

// Least common denominator of all coefficient parts.
inline mpz_class common_denominator(const NumericOperator& op) {
  mpz_class d = 1;
  for (const auto& [k, v] : op.terms()) {
    mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), v.re().get_den_mpz_t());
    mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), v.im().get_den_mpz_t());
  }
  return d;
}

// Matrix of scale * op, where scale clears all denominators.
inline DenseMatrix operator_matrix(const NumericOperator& op, int n_sites, mpz_class* scale_out = nullptr) {
  mpz_class d = common_denominator(op);
  if (scale_out != nullptr) *scale_out = d;
  DenseMatrix m(static_cast<size_t>(1) << n_sites);
  for (const auto& [k, v] : op.terms()) {
    if (k.last_site() >= n_sites) throw LatticeError("string outside the dense window");
    GaussInt c = to_gauss_int(v * GaussRational(mpq_class(d)));
    m = m + string_matrix(k, n_sites).scaled(c);
  }
  return m;
}

struct DenseCheck {
  bool commutes = false;
  std::optional<std::pair<size_t, size_t>> witness;  // nonzero entry of HQ - QH
  std::string witness_value;                        // scaled entry
};

// H Q - Q H for operators on n_sites physical sites.
inline DenseCheck dense_commutes(const NumericOperator& h, const NumericOperator& q, int n_sites) {
  DenseMatrix H = operator_matrix(h, n_sites);
  DenseMatrix Q = operator_matrix(q, n_sites);
  DenseMatrix C = H * Q - Q * H;
  DenseCheck r;
  r.witness = C.first_nonzero();
  r.commutes = !r.witness.has_value();
  if (r.witness) {
    const GaussInt& x = C.at(r.witness->first, r.witness->second);
    r.witness_value = GaussRational(mpq_class(static_cast<long>(x.re)), mpq_class(static_cast<long>(x.im))).to_string();
  }
  return r;
}

// The finite-chain charge built from a density, checked with dense matrices
// at a rational parameter point.
inline DenseCheck dense_matrix_check(const Model& model, const LocalOperator& charge_density, int n_sites,
                                     const ParamPoint& point, std::optional<Boundary> boundary = std::nullopt) {
  if (n_sites > kMaxDenseSites) throw ResourceCap("dense matrix sites", n_sites, kMaxDenseSites);
  Boundary b = boundary.value_or(model_boundary(model));
  auto ip = index_point(point);
  int uc = model_unit_cell(model);
  NumericOperator h = evaluate(instantiate(model, n_sites, b), ip);
  NumericOperator q = evaluate(sum_translates(anchored(charge_density, uc), uc, n_sites, b), ip);
  return dense_commutes(h, q, n_sites);
}

}  // namespace chainint
