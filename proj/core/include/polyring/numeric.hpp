#ifndef POLYRING_NUMERIC_HPP
#define POLYRING_NUMERIC_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace polyring {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Thrown when an operation is applied outside its domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline std::string to_string(const Int& x) { return x.str(); }

inline std::string to_string(const Rational& q) {
  if (boost::multiprecision::denominator(q) == 1)
    return boost::multiprecision::numerator(q).str();
  return boost::multiprecision::numerator(q).str() + "/" +
         boost::multiprecision::denominator(q).str();
}

inline Int binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Int r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline bool is_integer(const Rational& q) {
  return boost::multiprecision::denominator(q) == 1;
}

inline Int as_integer(const Rational& q) {
  if (!is_integer(q)) throw DomainError("non-integral rational " + to_string(q));
  return boost::multiprecision::numerator(q);
}

// Polynomial in a single variable alpha with integer coefficients.
class AlphaPoly {
 public:
  AlphaPoly() = default;
  AlphaPoly(Int c) { add(0, c); }
  static AlphaPoly monomial(int power, Int c = 1) {
    AlphaPoly a;
    a.add(power, std::move(c));
    return a;
  }

  void add(int power, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = coeffs_.try_emplace(power, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) coeffs_.erase(it);
    }
  }
  Int coeff(int power) const {
    auto it = coeffs_.find(power);
    return it == coeffs_.end() ? Int(0) : it->second;
  }
  const std::map<int, Int>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  AlphaPoly& operator+=(const AlphaPoly& o) {
    for (auto& [p, c] : o.coeffs_) add(p, c);
    return *this;
  }
  AlphaPoly& operator-=(const AlphaPoly& o) {
    for (auto& [p, c] : o.coeffs_) add(p, -c);
    return *this;
  }
  friend AlphaPoly operator+(AlphaPoly a, const AlphaPoly& b) { return a += b; }
  friend AlphaPoly operator-(AlphaPoly a, const AlphaPoly& b) { return a -= b; }
  friend AlphaPoly operator*(const AlphaPoly& a, const AlphaPoly& b) {
    AlphaPoly r;
    for (auto& [p, c] : a.coeffs_)
      for (auto& [q, d] : b.coeffs_) r.add(p + q, c * d);
    return r;
  }
  friend bool operator==(const AlphaPoly& a, const AlphaPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

  // Substitute alpha -> v.
  Int eval(const Int& v) const {
    Int r = 0;
    for (auto& [p, c] : coeffs_) r += c * boost::multiprecision::pow(v, p);
    return r;
  }

  std::string str() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      Int c = it->second;
      bool neg = c < 0;
      if (neg) c = -c;
      if (out.empty())
        out += neg ? "-" : "";
      else
        out += neg ? " - " : " + ";
      if (it->first == 0)
        out += c.str();
      else {
        if (c != 1) out += c.str() + "*";
        out += it->first == 1 ? "a" : "a^" + std::to_string(it->first);
      }
    }
    return out;
  }

 private:
  std::map<int, Int> coeffs_;
};

}  // namespace polyring

#endif
