#include "heckesign/forms/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace heckesign::forms {
namespace {

struct NttPrime {
  std::uint32_t modulus;
  std::uint32_t generator;
  int two_adicity;
};

// The last entry is the check modulus.
constexpr std::array<NttPrime, ModularSeries::moduli_count> kPrimes{{
    {998244353u, 3u, 23},
    {167772161u, 3u, 25},
    {469762049u, 3u, 26},
    {754974721u, 11u, 24},
    {2013265921u, 31u, 27},
    {1811939329u, 13u, 26},
    {2113929217u, 5u, 25},
    {1711276033u, 29u, 25},
    {1004535809u, 3u, 21},
}};

constexpr std::size_t kNaiveThreshold = 64;

std::uint32_t pow_mod32(std::uint64_t b, std::uint64_t e, std::uint32_t m) {
  std::uint64_t r = 1;
  b %= m;
  while (e) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

void ntt(std::vector<std::uint32_t>& a, const NttPrime& pr, bool invert) {
  const std::size_t n = a.size();
  const std::uint32_t m = pr.modulus;
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    std::uint32_t w = pow_mod32(pr.generator, (m - 1) / len, m);
    if (invert) w = pow_mod32(w, m - 2, m);
    const std::size_t half = len / 2;
    std::vector<std::uint32_t> tw(half);
    tw[0] = 1;
    for (std::size_t k = 1; k < half; ++k) tw[k] = static_cast<std::uint32_t>(std::uint64_t{tw[k - 1]} * w % m);
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t k = 0; k < half; ++k) {
        const std::uint32_t u = a[i + k];
        const std::uint32_t v = static_cast<std::uint32_t>(std::uint64_t{a[i + k + half]} * tw[k] % m);
        a[i + k] = u + v >= m ? u + v - m : u + v;
        a[i + k + half] = u >= v ? u - v : u + m - v;
      }
    }
  }
  if (invert) {
    const std::uint32_t inv_n = pow_mod32(n % m, m - 2, m);
    for (auto& x : a) x = static_cast<std::uint32_t>(std::uint64_t{x} * inv_n % m);
  }
}

std::vector<std::uint32_t> multiply_mod(const std::vector<std::uint32_t>& a,
                                        const std::vector<std::uint32_t>& b, std::size_t length,
                                        const NttPrime& pr) {
  const std::uint32_t m = pr.modulus;
  std::vector<std::uint32_t> out(length, 0);
  if (length <= kNaiveThreshold) {
    for (std::size_t i = 0; i < length; ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; i + j < length; ++j) {
        out[i + j] = static_cast<std::uint32_t>((out[i + j] + std::uint64_t{a[i]} * b[j]) % m);
      }
    }
    return out;
  }
  std::size_t size = 1;
  while (size < 2 * length) size <<= 1;
  if (size > (std::size_t{1} << pr.two_adicity)) {
    throw std::length_error("ModularSeries: length exceeds NTT capacity");
  }
  std::vector<std::uint32_t> fa(a.begin(), a.end()), fb(b.begin(), b.end());
  fa.resize(size, 0);
  fb.resize(size, 0);
  ntt(fa, pr, false);
  ntt(fb, pr, false);
  for (std::size_t i = 0; i < size; ++i) fa[i] = static_cast<std::uint32_t>(std::uint64_t{fa[i]} * fb[i] % m);
  ntt(fa, pr, true);
  std::copy_n(fa.begin(), length, out.begin());
  return out;
}

std::uint32_t reduce_signed(std::int64_t v, std::uint32_t m) {
  std::int64_t r = v % static_cast<std::int64_t>(m);
  if (r < 0) r += m;
  return static_cast<std::uint32_t>(r);
}

}  // namespace

ModularSeries::ModularSeries(std::size_t length) : length_(length) {
  for (auto& r : residues_) r.assign(length, 0);
}

ModularSeries ModularSeries::from_sparse(std::size_t length,
                                         const std::vector<std::pair<std::size_t, std::int64_t>>& terms) {
  ModularSeries s(length);
  for (const auto& [index, value] : terms) {
    if (index >= length) continue;
    for (std::size_t k = 0; k < moduli_count; ++k) {
      const std::uint32_t m = kPrimes[k].modulus;
      s.residues_[k][index] = (s.residues_[k][index] + reduce_signed(value, m)) % m;
    }
  }
  return s;
}

ModularSeries ModularSeries::from_integers(const std::vector<mpz_class>& coeffs) {
  ModularSeries s(coeffs.size());
  for (std::size_t k = 0; k < moduli_count; ++k) {
    const std::uint32_t m = kPrimes[k].modulus;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      s.residues_[k][i] = static_cast<std::uint32_t>(mpz_fdiv_ui(coeffs[i].get_mpz_t(), m));
    }
  }
  return s;
}

ModularSeries ModularSeries::operator*(const ModularSeries& other) const {
  if (other.length_ != length_) throw std::invalid_argument("ModularSeries: length mismatch");
  ModularSeries out(length_);
  for (std::size_t k = 0; k < moduli_count; ++k) {
    out.residues_[k] = multiply_mod(residues_[k], other.residues_[k], length_, kPrimes[k]);
  }
  return out;
}

ModularSeries ModularSeries::pow(unsigned exponent) const {
  ModularSeries result = from_sparse(length_, {{0, 1}});
  ModularSeries base = *this;
  bool first = true;
  while (exponent > 0) {
    if (exponent & 1) {
      result = first ? base : result * base;
      first = false;
    }
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

ModularSeries ModularSeries::shifted(std::size_t k) const {
  ModularSeries out(length_);
  for (std::size_t j = 0; j < moduli_count; ++j) {
    for (std::size_t i = k; i < length_; ++i) out.residues_[j][i] = residues_[j][i - k];
  }
  return out;
}

std::vector<mpz_class> ModularSeries::to_integers() const {
  constexpr std::size_t r = reconstruction_moduli;
  // Garner: x = d0 + d1*m0 + d2*m0*m1 + ... with 0 <= d_i < m_i.
  std::array<std::array<std::uint32_t, r>, r> inv{};
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      inv[j][i] = pow_mod32(kPrimes[j].modulus % kPrimes[i].modulus, kPrimes[i].modulus - 2, kPrimes[i].modulus);
    }
  }
  mpz_class full = 1;
  for (std::size_t i = 0; i < r; ++i) full *= kPrimes[i].modulus;
  const mpz_class half = full / 2;
  const std::uint32_t check = kPrimes[r].modulus;

  std::vector<mpz_class> out(length_);
  std::array<std::uint64_t, r> digit{};
  for (std::size_t idx = 0; idx < length_; ++idx) {
    for (std::size_t i = 0; i < r; ++i) {
      const std::uint64_t m = kPrimes[i].modulus;
      std::uint64_t x = residues_[i][idx];
      for (std::size_t j = 0; j < i; ++j) {
        x = (x + m - digit[j] % m) % m;
        x = x * inv[j][i] % m;
      }
      digit[i] = x;
    }
    mpz_class value = 0;
    for (std::size_t i = r; i-- > 0;) {
      value *= kPrimes[i].modulus;
      value += static_cast<unsigned long>(digit[i]);
    }
    if (value > half) value -= full;
    if (mpz_fdiv_ui(value.get_mpz_t(), check) != residues_[r][idx]) {
      throw std::overflow_error("ModularSeries: coefficient outside the exact reconstruction range");
    }
    out[idx] = value;
  }
  return out;
}

std::vector<std::pair<std::size_t, std::int64_t>> euler_function_terms(std::size_t length) {
  std::vector<std::pair<std::size_t, std::int64_t>> terms{{0, 1}};
  for (std::int64_t k = 1;; ++k) {
    const std::int64_t sign = (k % 2 == 0) ? 1 : -1;
    const auto a = static_cast<std::size_t>(k * (3 * k - 1) / 2);
    const auto b = static_cast<std::size_t>(k * (3 * k + 1) / 2);
    if (a >= length) break;
    terms.emplace_back(a, sign);
    if (b < length) terms.emplace_back(b, sign);
  }
  return terms;
}

}  // namespace heckesign::forms
