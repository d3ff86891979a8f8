#pragma once

#include <cassert>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace ample {

using Int = std::int64_t;
using Vec = std::vector<Int>;

inline Vec add(const Vec& a, const Vec& b) {
  assert(a.size() == b.size());
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Vec sub(const Vec& a, const Vec& b) {
  assert(a.size() == b.size());
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Vec neg(const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

inline Vec scale(const Vec& a, Int m) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = m * a[i];
  return r;
}

inline bool is_zero(const Vec& a) {
  for (Int x : a)
    if (x != 0) return false;
  return true;
}

inline bool all_nonneg(const Vec& a) {
  for (Int x : a)
    if (x < 0) return false;
  return true;
}

inline Int sum(const Vec& a) { return std::accumulate(a.begin(), a.end(), Int{0}); }

inline std::string to_string(const Vec& a) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) os << ',';
    os << a[i];
  }
  os << ')';
  return os.str();
}

// Exact rational on int64; inputs stay tiny (denominators are Cartan
// determinants or the splitting parameter q).
struct Rational {
  Int num = 0;
  Int den = 1;

  Rational() = default;
  Rational(Int n, Int d = 1) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    normalize();
  }

  void normalize() {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    Int g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    if (num == 0) den = 1;
  }

  friend Rational operator+(Rational a, Rational b) { return {a.num * b.den + b.num * a.den, a.den * b.den}; }
  friend Rational operator-(Rational a, Rational b) { return {a.num * b.den - b.num * a.den, a.den * b.den}; }
  friend Rational operator*(Rational a, Rational b) { return {a.num * b.num, a.den * b.den}; }
  friend bool operator==(Rational a, Rational b) { return a.num == b.num && a.den == b.den; }

  Rational abs() const { return {num < 0 ? -num : num, den}; }
  bool operator<(Rational o) const { return num * o.den < o.num * den; }
  bool operator>=(Rational o) const { return !(*this < o); }

  std::string str() const {
    std::ostringstream os;
    os << num;
    if (den != 1) os << '/' << den;
    return os.str();
  }
};

struct VecHash {
  std::size_t operator()(const Vec& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Int x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace ample
