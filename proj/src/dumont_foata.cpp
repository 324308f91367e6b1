#include "centred/dumont_foata.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <stdexcept>

namespace centred {

TriPolynomial TriPolynomial::constant(const BigInt &c) {
  TriPolynomial p;
  p.add_term({0, 0, 0}, c);
  return p;
}

TriPolynomial TriPolynomial::variable(int var) {
  if (var < 0 || var > 2)
    throw DomainError("TriPolynomial::variable: index must be 0, 1 or 2");
  Exponents e{0, 0, 0};
  e[static_cast<std::size_t>(var)] = 1;
  TriPolynomial p;
  p.add_term(e, 1);
  return p;
}

void TriPolynomial::add_term(const Exponents &e, const BigInt &c) {
  if (c == 0)
    return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0)
      terms_.erase(it);
  }
}

BigInt TriPolynomial::coefficient(const Exponents &e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? BigInt(0) : it->second;
}

int TriPolynomial::degree_in(int var) const {
  int d = 0;
  for (const auto &[e, c] : terms_)
    d = std::max(d, e[static_cast<std::size_t>(var)]);
  return d;
}

TriPolynomial &TriPolynomial::operator+=(const TriPolynomial &o) {
  for (const auto &[e, c] : o.terms_)
    add_term(e, c);
  return *this;
}

TriPolynomial &TriPolynomial::operator-=(const TriPolynomial &o) {
  for (const auto &[e, c] : o.terms_)
    add_term(e, -c);
  return *this;
}

TriPolynomial operator*(const TriPolynomial &a, const TriPolynomial &b) {
  TriPolynomial out;
  for (const auto &[ea, ca] : a.terms_)
    for (const auto &[eb, cb] : b.terms_)
      out.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
  return out;
}

TriPolynomial TriPolynomial::shift_z() const {
  TriPolynomial out;
  for (const auto &[e, c] : terms_)
    for (int k = 0; k <= e[2]; ++k)
      out.add_term({e[0], e[1], k}, c * binomial(e[2], k));
  return out;
}

TriPolynomial TriPolynomial::permuted(const std::array<int, 3> &perm) const {
  TriPolynomial out;
  for (const auto &[e, c] : terms_) {
    Exponents f{};
    for (std::size_t i = 0; i < 3; ++i)
      f[static_cast<std::size_t>(perm[i])] = e[i];
    out.add_term(f, c);
  }
  return out;
}

BigRational TriPolynomial::operator()(const BigRational &x, const BigRational &y,
                                      const BigRational &z) const {
  BigRational acc = 0;
  for (const auto &[e, c] : terms_)
    acc += BigRational(c) * qpow(x, static_cast<unsigned long>(e[0])) *
           qpow(y, static_cast<unsigned long>(e[1])) *
           qpow(z, static_cast<unsigned long>(e[2]));
  return acc;
}

namespace {
// powers[i] = p^i for i = 0..max
std::vector<RatPolynomial> powers_of(const RatPolynomial &p, int max) {
  std::vector<RatPolynomial> out{RatPolynomial::constant(1)};
  for (int i = 1; i <= max; ++i)
    out.push_back(out.back() * p);
  return out;
}
} // namespace

RatPolynomial TriPolynomial::substitute(const RatPolynomial &x, const RatPolynomial &y,
                                        const RatPolynomial &z) const {
  auto px = powers_of(x, degree_in(0));
  auto py = powers_of(y, degree_in(1));
  auto pz = powers_of(z, degree_in(2));
  RatPolynomial acc;
  for (const auto &[e, c] : terms_) {
    acc += (px[static_cast<std::size_t>(e[0])] * py[static_cast<std::size_t>(e[1])] *
            pz[static_cast<std::size_t>(e[2])]) *
           BigRational(c);
  }
  return acc;
}

std::string TriPolynomial::to_string() const {
  if (terms_.empty())
    return "0";
  static constexpr char names[3] = {'x', 'y', 'z'};
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto &[e, c] = *it;
    bool neg = c < 0;
    BigInt mag = abs(c);
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    std::string mono;
    for (std::size_t v = 0; v < 3; ++v) {
      if (e[v] == 0)
        continue;
      if (!mono.empty())
        mono += '*';
      mono += names[v];
      if (e[v] > 1)
        mono += "^" + std::to_string(e[v]);
    }
    if (mono.empty())
      out += mag.get_str();
    else if (mag == 1)
      out += mono;
    else
      out += mag.get_str() + "*" + mono;
  }
  return out;
}

const TriPolynomial &df_poly(long r) {
  if (r < 1)
    throw DomainError("F_r is undefined for r <= 0 (got r = " + std::to_string(r) + ")");
  // deque: references stay valid as the cache grows
  static std::deque<TriPolynomial> cache;
  static std::mutex mutex;
  std::lock_guard lock(mutex);
  if (cache.empty())
    cache.push_back(TriPolynomial::constant(1));
  const TriPolynomial x = TriPolynomial::variable(0);
  const TriPolynomial y = TriPolynomial::variable(1);
  const TriPolynomial z = TriPolynomial::variable(2);
  const TriPolynomial front = (x + z) * (y + z);
  const TriPolynomial zz = z * z;
  while (static_cast<long>(cache.size()) < r) {
    const TriPolynomial &f = cache.back();
    cache.push_back(front * f.shift_z() - zz * f);
  }
  return cache[static_cast<std::size_t>(r - 1)];
}

BigRational df_eval(long r, const BigRational &x, const BigRational &y,
                    const BigRational &z) {
  return df_poly(r)(x, y, z);
}

BigRational df_carlitz(long r, const BigRational &x, const BigRational &y,
                       const BigRational &z) {
  if (r < 1)
    throw DomainError("Carlitz formula needs r >= 1");
  for (long i = 0; i < 2 * r - 1; ++i) {
    if (2 * z + i == 0)
      throw DomainError("Carlitz formula undefined: (2z)_" + std::to_string(2 * r - 1) +
                        " vanishes because its factor 2z+" + std::to_string(i) +
                        " is zero at z = " + to_string(z));
  }
  const unsigned long power = static_cast<unsigned long>(2 * r - 1);
  BigRational sum = 0;
  for (long k = 0; k < r; ++k) {
    const BigRational shared = pochhammer(x + z, k) * pochhammer(y + z, k);
    if (shared == 0)
      continue;
    for (long j = 0; j <= k; ++j) {
      BigRational den =
          BigRational(factorial(j) * factorial(k - j)) * pochhammer(2 * z + j, k + 1);
      sum += sign_pow(j) * shared * qpow(z + j, power) / den;
    }
  }
  return 2 * sign_pow(r - 1) * sum;
}

IntPolynomial family_from_df(FamilyId which, long r) {
  if (r < 1)
    throw DomainError("family_from_df: r must be >= 1");
  const BigRational half = rational(1, 2);
  const RatPolynomial n = RatPolynomial::variable();
  const auto c = [](const BigRational &v) { return RatPolynomial::constant(v); };
  RatPolynomial out;
  switch (which) {
  case FamilyId::P:
    out = n * df_poly(r).substitute(RatPolynomial::linear(-1, 0), c(1), c(1)) *
          BigRational(sign_pow(r - 1));
    break;
  case FamilyId::Pbar:
    out = df_poly(r + 1).substitute(RatPolynomial::linear(-1, half), c(half), c(half)) *
          BigRational(ipow(-4, static_cast<unsigned long>(r)));
    break;
  case FamilyId::Q:
    out = n * df_poly(r).substitute(RatPolynomial::linear(-1, 0), c(half), c(1)) *
          BigRational(ipow(-2, static_cast<unsigned long>(r - 1)));
    break;
  case FamilyId::Qbar:
    out = RatPolynomial::linear(1, half) *
          df_poly(r).substitute(RatPolynomial::linear(-1, -half), c(half), c(1)) *
          BigRational(sign_pow(r - 1) * pow2(static_cast<unsigned long>(2 * r - 1)));
    break;
  }
  return to_integer(out);
}

bool df_route_applies(long order, long n) {
  if (order < 0 || n < 1)
    return false;
  if (order % 2 == 0)
    return order >= 2;
  if (n % 2 == 0)
    return order >= 3;
  return true;
}

BigRational u_from_df(long order, long n) {
  if (!df_route_applies(order, n))
    throw DomainError("Dumont-Foata route covers U_{2s}(n) for s >= 1, U_{2s+1}(2m) for "
                      "s >= 1, and U_{2s+1}(2m-1) for s >= 0, all with n >= 1; got U_" +
                      std::to_string(order) + "(" + std::to_string(n) + ")");
  const BigRational half = rational(1, 2);
  const long s = order / 2;
  if (order % 2 == 0) {
    return pow2q(n - 2) * BigRational(n * sign_pow(s - 1)) *
           df_eval(s, rational(-n, 2), half, 1);
  }
  if (n % 2 == 0) {
    const long m = n / 2;
    return BigRational(BigInt(m * m) * sign_pow(s - 1) * binomial(2 * m, m)) *
           df_eval(s, -m, 1, 1);
  }
  const long m = (n + 1) / 2;
  return half * BigRational(BigInt(m) * sign_pow(s) * binomial(2 * m, m)) *
         df_eval(s + 1, half - m, half, half);
}

} // namespace centred
