#include "centred/polynomial.hpp"

#include <stdexcept>

namespace centred {

RatPolynomial to_rational(const IntPolynomial &p) {
  std::vector<BigRational> out;
  out.reserve(p.coefficients().size());
  for (const auto &c : p.coefficients())
    out.emplace_back(c);
  return RatPolynomial(std::move(out));
}

IntPolynomial to_integer(const RatPolynomial &p) {
  std::vector<BigInt> out;
  out.reserve(p.coefficients().size());
  for (const auto &c : p.coefficients()) {
    if (!is_integer(c))
      throw std::logic_error("non-integral coefficient " + to_string(c));
    out.push_back(c.get_num());
  }
  return IntPolynomial(std::move(out));
}

std::string format_plain(const IntPolynomial &p, char var) {
  if (p.is_zero())
    return "0";
  std::string out;
  for (long i = p.degree(); i >= 0; --i) {
    BigInt c = p[i];
    if (c == 0)
      continue;
    bool neg = c < 0;
    BigInt mag = abs(c);
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    if (mag != 1 || i == 0)
      out += mag.get_str();
    if (i >= 1)
      out += var;
    if (i >= 2)
      out += "^" + std::to_string(i);
  }
  return out;
}

std::string format_factored(const IntPolynomial &p, char var) {
  if (p.is_zero() || p[0] != 0)
    return format_plain(p, var);
  IntPolynomial q = p.divided_by_variable();
  if (q.degree() == 0) {
    if (q[0] == 1)
      return std::string(1, var);
    if (q[0] == -1)
      return "-" + std::string(1, var);
    return q[0].get_str() + var;
  }
  return std::string(1, var) + "(" + format_plain(q, var) + ")";
}

RatPolynomial lagrange_interpolate(std::span<const BigRational> nodes,
                                   std::span<const BigRational> values) {
  if (nodes.size() != values.size() || nodes.empty())
    throw DomainError("lagrange_interpolate: need matching, nonempty node/value lists");
  RatPolynomial out;
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    RatPolynomial basis = RatPolynomial::constant(1);
    BigRational denom = 1;
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      if (j == k)
        continue;
      if (nodes[j] == nodes[k])
        throw DomainError("lagrange_interpolate: repeated node");
      basis = basis * RatPolynomial::linear(1, -nodes[j]);
      denom *= nodes[k] - nodes[j];
    }
    out += basis * BigRational(values[k] / denom);
  }
  return out;
}

} // namespace centred
