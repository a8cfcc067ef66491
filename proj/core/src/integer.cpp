#include "declab/integer.hpp"

#include <limits>

#include "declab/error.hpp"

namespace declab {

namespace {

bool fits(const mpz_class& v) {
  return v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max();
}

static_assert(sizeof(long) == sizeof(std::int64_t), "GMP conversions assume 64-bit long");

std::int64_t to_int64(const mpz_class& v) { return mpz_get_si(v.get_mpz_t()); }

mpz_class from_int64(std::int64_t v) { return mpz_class(static_cast<long>(v)); }

}  // namespace

Int::Int(const mpz_class& v) {
  if (fits(v))
    v_ = to_int64(v);
  else
    v_ = v;
}

bool Int::is_zero() const { return is_small() && std::get<std::int64_t>(v_) == 0; }

int Int::sign() const {
  if (is_small()) {
    const auto v = std::get<std::int64_t>(v_);
    return (v > 0) - (v < 0);
  }
  return sgn(std::get<mpz_class>(v_));
}

Int Int::abs() const { return sign() < 0 ? -*this : *this; }

mpz_class Int::to_mpz() const {
  if (is_small()) return from_int64(std::get<std::int64_t>(v_));
  return std::get<mpz_class>(v_);
}

std::string Int::to_string() const {
  if (is_small()) return std::to_string(std::get<std::int64_t>(v_));
  return std::get<mpz_class>(v_).get_str();
}

Int operator+(const Int& a, const Int& b) {
  if (a.is_small() && b.is_small()) {
    std::int64_t r;
    if (!__builtin_add_overflow(std::get<std::int64_t>(a.v_), std::get<std::int64_t>(b.v_), &r)) return r;
  }
  return Int(mpz_class(a.to_mpz() + b.to_mpz()));
}

Int operator-(const Int& a, const Int& b) {
  if (a.is_small() && b.is_small()) {
    std::int64_t r;
    if (!__builtin_sub_overflow(std::get<std::int64_t>(a.v_), std::get<std::int64_t>(b.v_), &r)) return r;
  }
  return Int(mpz_class(a.to_mpz() - b.to_mpz()));
}

Int operator*(const Int& a, const Int& b) {
  if (a.is_small() && b.is_small()) {
    std::int64_t r;
    if (!__builtin_mul_overflow(std::get<std::int64_t>(a.v_), std::get<std::int64_t>(b.v_), &r)) return r;
  }
  return Int(mpz_class(a.to_mpz() * b.to_mpz()));
}

Int operator/(const Int& a, const Int& b) {
  if (b.is_zero()) throw PreconditionError("integer division by zero");
  if (a.is_small() && b.is_small()) {
    const auto x = std::get<std::int64_t>(a.v_);
    const auto y = std::get<std::int64_t>(b.v_);
    if (!(x == std::numeric_limits<std::int64_t>::min() && y == -1)) return x / y;
  }
  mpz_class q;
  mpz_tdiv_q(q.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
  return Int(q);
}

Int operator%(const Int& a, const Int& b) {
  if (b.is_zero()) throw PreconditionError("integer division by zero");
  if (a.is_small() && b.is_small()) {
    const auto x = std::get<std::int64_t>(a.v_);
    const auto y = std::get<std::int64_t>(b.v_);
    if (y == -1) return 0;
    return x % y;
  }
  mpz_class r;
  mpz_tdiv_r(r.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
  return Int(r);
}

Int Int::operator-() const {
  if (is_small() && std::get<std::int64_t>(v_) != std::numeric_limits<std::int64_t>::min())
    return -std::get<std::int64_t>(v_);
  return Int(mpz_class(-to_mpz()));
}

bool operator==(const Int& a, const Int& b) {
  if (a.is_small() != b.is_small()) return false;  // representations are canonical
  if (a.is_small()) return std::get<std::int64_t>(a.v_) == std::get<std::int64_t>(b.v_);
  return std::get<mpz_class>(a.v_) == std::get<mpz_class>(b.v_);
}

std::strong_ordering operator<=>(const Int& a, const Int& b) {
  if (a.is_small() && b.is_small()) return std::get<std::int64_t>(a.v_) <=> std::get<std::int64_t>(b.v_);
  const int c = cmp(a.to_mpz(), b.to_mpz());
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

}  // namespace declab
