#pragma once

// Exact scalars over the Gaussian rationals Q(i).

#include <gmpxx.h>

#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace brank {

/// Parses "p/q" or "p" into a canonical rational. Throws std::invalid_argument
/// on malformed text or a zero denominator.
inline mpq_class parse_rational(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  const auto slash = text.find('/');
  auto valid_integer = [](std::string_view s) {
    if (s.empty()) return false;
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) return false;
    for (std::size_t i = start; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  std::string num(text.substr(0, slash));
  std::string den = slash == std::string_view::npos ? std::string("1") : std::string(text.substr(slash + 1));
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  if (!valid_integer(num) || !valid_integer(den) || den[0] == '-' || den[0] == '+')
    throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
  mpz_class n(num, 10);
  mpz_class d(den, 10);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  mpq_class q(n, d);
  q.canonicalize();
  return q;
}

/// Canonical "p/q" text (q >= 1, gcd(p, q) = 1), always with an explicit denominator.
inline std::string rational_string(const mpq_class& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Element re + im*i of Q(i). Both parts are kept in canonical reduced form
/// by GMP after every operation.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  explicit GaussianRational(mpq_class re, mpq_class im = 0) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static GaussianRational parse(std::string_view re, std::string_view im) {
    return GaussianRational(parse_rational(re), parse_rational(im));
  }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussianRational conj() const { return GaussianRational(re_, -im_); }

  GaussianRational inverse() const {
    if (is_zero()) throw std::domain_error("division by zero in Q(i)");
    if (is_real()) return GaussianRational(1 / re_);
    mpq_class norm = re_ * re_ + im_ * im_;
    return GaussianRational(re_ / norm, -im_ / norm);
  }

  GaussianRational operator-() const { return GaussianRational(-re_, -im_); }

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    if (!o.is_real()) im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    if (!o.is_real()) im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    if (is_real() && o.is_real()) {
      re_ *= o.re_;
      return *this;
    }
    mpq_class re = re_ * o.re_ - im_ * o.im_;
    mpq_class im = re_ * o.im_ + im_ * o.re_;
    re_.swap(re);
    im_.swap(im);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o) {
    if (o.is_real()) {
      if (sgn(o.re_) == 0) throw std::domain_error("division by zero in Q(i)");
      re_ /= o.re_;
      if (!is_real()) im_ /= o.re_;
      return *this;
    }
    return *this *= o.inverse();
  }

  /// this += a * b without materializing the product.
  void add_product(const GaussianRational& a, const GaussianRational& b) {
    if (a.is_real() && b.is_real()) {
      if (sgn(a.re_) == 0 || sgn(b.re_) == 0) return;
      thread_local mpq_class scratch;
      mpq_mul(scratch.get_mpq_t(), a.re_.get_mpq_t(), b.re_.get_mpq_t());
      re_ += scratch;
      return;
    }
    *this += a * b;
  }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Human-readable form: "3/2", "-1/1+2/3i".
  std::string to_string() const {
    if (is_real()) return rational_string(re_);
    std::string s = rational_string(re_);
    if (sgn(im_) > 0) s += "+";
    return s + rational_string(im_) + "i";
  }

  friend std::ostream& operator<<(std::ostream& os, const GaussianRational& g) { return os << g.to_string(); }

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

using Scalar = GaussianRational;

}  // namespace brank
