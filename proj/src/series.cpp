#include "centred/series.hpp"

namespace centred {

PowerSeries::PowerSeries(long order) : order_(order) {
  if (order < 0)
    throw DomainError("power series order must be >= 0");
  c_.assign(static_cast<std::size_t>(order + 1), BigRational(0));
}

PowerSeries::PowerSeries(long order, std::vector<BigRational> coeffs)
    : PowerSeries(order) {
  for (std::size_t i = 0; i < coeffs.size() && i < c_.size(); ++i)
    c_[i] = std::move(coeffs[i]);
}

PowerSeries PowerSeries::one(long order) {
  PowerSeries s(order);
  s.c_[0] = 1;
  return s;
}

PowerSeries PowerSeries::variable(long order) {
  PowerSeries s(order);
  if (order >= 1)
    s.c_[1] = 1;
  return s;
}

const BigRational &PowerSeries::operator[](long i) const {
  return c_.at(static_cast<std::size_t>(i));
}
BigRational &PowerSeries::operator[](long i) { return c_.at(static_cast<std::size_t>(i)); }

BigRational PowerSeries::egf_coefficient(long i) const {
  return (*this)[i] * BigRational(factorial(i));
}

void PowerSeries::check_order(const PowerSeries &o) const {
  if (o.order_ != order_)
    throw DomainError("power series orders differ");
}

PowerSeries &PowerSeries::operator+=(const PowerSeries &o) {
  check_order(o);
  for (std::size_t i = 0; i < c_.size(); ++i)
    c_[i] += o.c_[i];
  return *this;
}

PowerSeries &PowerSeries::operator-=(const PowerSeries &o) {
  check_order(o);
  for (std::size_t i = 0; i < c_.size(); ++i)
    c_[i] -= o.c_[i];
  return *this;
}

PowerSeries &PowerSeries::operator*=(const BigRational &s) {
  for (auto &v : c_)
    v *= s;
  return *this;
}

PowerSeries operator*(const PowerSeries &a, const PowerSeries &b) {
  a.check_order(b);
  PowerSeries out(a.order_);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0)
      continue;
    for (std::size_t j = 0; i + j < a.c_.size(); ++j)
      out.c_[i + j] += a.c_[i] * b.c_[j];
  }
  return out;
}

PowerSeries PowerSeries::pow(unsigned long e) const {
  PowerSeries result = one(order_);
  PowerSeries base = *this;
  while (e > 0) {
    if (e & 1UL)
      result = result * base;
    e >>= 1;
    if (e > 0)
      base = base * base;
  }
  return result;
}

PowerSeries PowerSeries::reciprocal() const {
  if (c_[0] == 0)
    throw DomainError("reciprocal of a power series with zero constant term");
  PowerSeries out(order_);
  out.c_[0] = 1 / c_[0];
  for (std::size_t i = 1; i < c_.size(); ++i) {
    BigRational acc = 0;
    for (std::size_t j = 1; j <= i; ++j)
      acc += c_[j] * out.c_[i - j];
    out.c_[i] = -acc / c_[0];
  }
  return out;
}

PowerSeries series_elementary(Elementary kind, const BigRational &scale, long order) {
  if (kind == Elementary::Sec) {
    // cos(s z) is cosh(s z) with the signs of z^2, z^6, ... flipped
    PowerSeries cos = series_elementary(Elementary::Cosh, scale, order);
    for (long i = 2; i <= order; i += 4)
      cos[i] = -cos[i];
    return cos.reciprocal();
  }

  PowerSeries out(order);
  BigRational spow = 1;
  for (long i = 0; i <= order; ++i) {
    bool keep = kind == Elementary::Exp || (kind == Elementary::Cosh && i % 2 == 0) ||
                (kind == Elementary::Sinh && i % 2 == 1);
    if (keep)
      out[i] = spow / BigRational(factorial(i));
    spow *= scale;
  }
  return out;
}

} // namespace centred
