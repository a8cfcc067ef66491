#pragma once

// Exact integers: machine words while they fit, GMP beyond. Every operation
// detects overflow and promotes; nothing wraps.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <variant>

namespace declab {

class Int {
 public:
  Int() = default;
  Int(std::int64_t v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  Int(int v) : v_(std::int64_t{v}) {}  // NOLINT(google-explicit-constructor)
  explicit Int(const mpz_class& v);

  bool is_small() const { return std::holds_alternative<std::int64_t>(v_); }
  bool is_zero() const;
  int sign() const;
  Int abs() const;
  mpz_class to_mpz() const;
  std::string to_string() const;

  friend Int operator+(const Int& a, const Int& b);
  friend Int operator-(const Int& a, const Int& b);
  friend Int operator*(const Int& a, const Int& b);
  // Truncating division and the matching remainder, as for built-in integers.
  // Division by zero throws PreconditionError.
  friend Int operator/(const Int& a, const Int& b);
  friend Int operator%(const Int& a, const Int& b);
  Int operator-() const;

  Int& operator+=(const Int& b) { return *this = *this + b; }
  Int& operator-=(const Int& b) { return *this = *this - b; }
  Int& operator*=(const Int& b) { return *this = *this * b; }

  friend bool operator==(const Int& a, const Int& b);
  friend std::strong_ordering operator<=>(const Int& a, const Int& b);

  friend std::ostream& operator<<(std::ostream& out, const Int& a) { return out << a.to_string(); }

 private:
  std::variant<std::int64_t, mpz_class> v_{std::int64_t{0}};
};

}  // namespace declab
