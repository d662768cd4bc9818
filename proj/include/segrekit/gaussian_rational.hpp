#pragma once

#include <gmpxx.h>

#include <optional>
#include <ostream>
#include <string>

namespace segrekit {

/// Exact element of Q(i), stored as a pair of canonical GMP rationals.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(mpq_class re, mpq_class im = 0);

  static GaussianRational i() { return {0, 1}; }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  /// |a + bi|^2 = a^2 + b^2.
  mpq_class norm() const { return re_ * re_ + im_ * im_; }
  GaussianRational inverse() const;

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  GaussianRational pow(unsigned exponent) const;

  /// Text form: `a`, `a/b`, `b*i`, `a+b*i` (parseable by parse_poly).
  std::string to_string() const;

  /// Exact square root in Q(i) when one exists (the root with re > 0, or im > 0 if re = 0).
  std::optional<GaussianRational> sqrt() const;

 private:
  mpq_class re_ = 0;
  mpq_class im_ = 0;
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

/// Exact square root of a non-negative rational, if rational.
std::optional<mpq_class> rational_sqrt(const mpq_class& q);

}  // namespace segrekit
