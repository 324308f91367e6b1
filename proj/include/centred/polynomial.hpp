#pragma once

// Dense univariate polynomials with exact coefficients.

#include "centred/numeric.hpp"

#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace centred {

template <typename Coeff> class UniPoly {
public:
  UniPoly() = default;
  UniPoly(std::initializer_list<Coeff> ascending) : c_(ascending) { trim(); }
  explicit UniPoly(std::vector<Coeff> ascending) : c_(std::move(ascending)) {
    trim();
  }
  static UniPoly constant(const Coeff &v) { return UniPoly({v}); }
  /// The identity polynomial n.
  static UniPoly variable() { return UniPoly({Coeff(0), Coeff(1)}); }
  /// a*n + b.
  static UniPoly linear(const Coeff &a, const Coeff &b) { return UniPoly({b, a}); }

  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Coeff> &coefficients() const { return c_; }
  /// Coefficient of n^i (zero beyond the degree).
  Coeff operator[](long i) const {
    return (i >= 0 && i <= degree()) ? c_[static_cast<std::size_t>(i)] : Coeff(0);
  }
  Coeff leading() const { return is_zero() ? Coeff(0) : c_.back(); }

  template <typename X> X operator()(const X &x) const {
    X acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
      acc = acc * x + X(*it);
    return acc;
  }

  UniPoly &operator+=(const UniPoly &o) {
    if (o.c_.size() > c_.size())
      c_.resize(o.c_.size(), Coeff(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i)
      c_[i] += o.c_[i];
    trim();
    return *this;
  }
  UniPoly &operator-=(const UniPoly &o) {
    if (o.c_.size() > c_.size())
      c_.resize(o.c_.size(), Coeff(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i)
      c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  UniPoly &operator*=(const Coeff &s) {
    for (auto &v : c_)
      v *= s;
    trim();
    return *this;
  }
  friend UniPoly operator+(UniPoly a, const UniPoly &b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly &b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const Coeff &s) { return a *= s; }
  friend UniPoly operator*(const Coeff &s, UniPoly a) { return a *= s; }
  friend UniPoly operator*(const UniPoly &a, const UniPoly &b) {
    if (a.is_zero() || b.is_zero())
      return {};
    std::vector<Coeff> out(a.c_.size() + b.c_.size() - 1, Coeff(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        out[i + j] += a.c_[i] * b.c_[j];
    return UniPoly(std::move(out));
  }
  friend bool operator==(const UniPoly &a, const UniPoly &b) { return a.c_ == b.c_; }

  /// p(n + s), expanded with binomial coefficients.
  UniPoly shifted(const Coeff &s) const {
    std::vector<Coeff> out(c_.size(), Coeff(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
      // c_i (n+s)^i = c_i sum_k C(i,k) s^(i-k) n^k
      Coeff spow = 1;
      for (std::size_t t = 0; t <= i; ++t) {
        std::size_t k = i - t;
        out[k] += c_[i] * Coeff(binomial(static_cast<long>(i), static_cast<long>(k))) * spow;
        spow *= s;
      }
    }
    return UniPoly(std::move(out));
  }

  /// p(q(n)) by Horner's scheme.
  UniPoly compose(const UniPoly &q) const {
    UniPoly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
      acc = acc * q + UniPoly::constant(*it);
    return acc;
  }

  /// Exact division by n; throws if the constant term is nonzero.
  UniPoly divided_by_variable() const {
    if (is_zero())
      return {};
    if (c_[0] != 0)
      throw DomainError("polynomial is not divisible by n");
    return UniPoly(std::vector<Coeff>(c_.begin() + 1, c_.end()));
  }

private:
  void trim() {
    while (!c_.empty() && c_.back() == 0)
      c_.pop_back();
  }
  std::vector<Coeff> c_;
};

using IntPolynomial = UniPoly<BigInt>;
using RatPolynomial = UniPoly<BigRational>;

RatPolynomial to_rational(const IntPolynomial &p);
/// Throws std::logic_error if any coefficient is not an integer.
IntPolynomial to_integer(const RatPolynomial &p);

/// Descending-degree rendering with the factor n pulled out when the
/// constant term vanishes, e.g. "n(6n^2 - 8n + 3)".
std::string format_factored(const IntPolynomial &p, char var = 'n');
/// Plain descending rendering, e.g. "32n^2 - 56n + 25".
std::string format_plain(const IntPolynomial &p, char var = 'n');

/// The unique polynomial of degree < nodes.size() through the given points.
RatPolynomial lagrange_interpolate(std::span<const BigRational> nodes,
                                   std::span<const BigRational> values);

} // namespace centred
