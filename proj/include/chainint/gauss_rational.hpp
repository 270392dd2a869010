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

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace chainint {

// Exact element of Q(i).
class GaussRational {
 public:
  GaussRational() : re_(0), im_(0) {}
  GaussRational(long v) : re_(v), im_(0) {}  // NOLINT
  GaussRational(mpq_class re) : re_(std::move(re)), im_(0) { re_.canonicalize(); }  // NOLINT
  GaussRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static GaussRational i() { return GaussRational(mpq_class(0), mpq_class(1)); }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

  GaussRational conj() const { return GaussRational(re_, -im_); }

  // Multiply by i^k.
  GaussRational times_i_power(int k) const {
    switch (((k % 4) + 4) % 4) {
      case 0: return *this;
      case 1: return GaussRational(-im_, re_);
      case 2: return GaussRational(-re_, -im_);
      default: return GaussRational(im_, -re_);
    }
  }

  GaussRational operator-() const { return GaussRational(-re_, -im_); }
  GaussRational& operator+=(const GaussRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussRational& operator-=(const GaussRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussRational& operator*=(const GaussRational& o) {
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
      re_ *= o.re_;
      return *this;
    }
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class m = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(m);
    return *this;
  }
  GaussRational& operator/=(const GaussRational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    if (sgn(o.im_) == 0) {
      re_ /= o.re_;
      im_ /= o.re_;
      return *this;
    }
    mpq_class n = o.re_ * o.re_ + o.im_ * o.im_;
    *this *= o.conj();
    re_ /= n;
    im_ /= n;
    return *this;
  }

  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
  friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }

  // Total order used only for canonical sorting.
  friend bool operator<(const GaussRational& a, const GaussRational& b) {
    int c = cmp(a.re_, b.re_);
    if (c != 0) return c < 0;
    return a.im_ < b.im_;
  }

  // True when the printed form would start with a minus sign.
  bool prints_negative() const {
    if (sgn(im_) == 0) return sgn(re_) < 0;
    if (sgn(re_) == 0) return sgn(im_) < 0;
    return false;
  }

  // Compact text: "3/2", "-i", "2/3*i", "(1+2*i)".
  std::string to_string() const {
    if (sgn(im_) == 0) return re_.get_str();
    if (sgn(re_) == 0) return imag_text(im_);
    std::string s = "(" + re_.get_str();
    if (sgn(im_) > 0) s += "+";
    s += imag_text(im_);
    return s + ")";
  }

 private:
  static std::string imag_text(const mpq_class& v) {
    if (v == 1) return "i";
    if (v == -1) return "-i";
    return v.get_str() + "*i";
  }

  mpq_class re_;
  mpq_class im_;
};

inline bool is_zero(const GaussRational& v) { return v.is_zero(); }

}  // namespace chainint
