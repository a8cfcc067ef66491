#include "declab/matrix.hpp"

#include <utility>

#include "declab/error.hpp"

namespace declab {

MatrixZ::MatrixZ(std::size_t rows, std::size_t cols, const std::vector<std::vector<Int>>& entries)
    : MatrixZ(rows, cols) {
  if (entries.size() != rows) throw PreconditionError("matrix row count mismatch");
  for (std::size_t r = 0; r < rows; ++r) {
    if (entries[r].size() != cols) throw PreconditionError("matrix column count mismatch");
    for (std::size_t c = 0; c < cols; ++c) (*this)(r, c) = entries[r][c];
  }
}

MatrixZ MatrixZ::identity(std::size_t n) {
  MatrixZ m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool MatrixZ::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

MatrixZ MatrixZ::bottom_rows(std::size_t from) const {
  MatrixZ out(rows_ - from, cols_);
  for (std::size_t r = from; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(r - from, c) = (*this)(r, c);
  return out;
}

MatrixZ MatrixZ::right_columns(std::size_t from) const {
  MatrixZ out(rows_, cols_ - from);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = from; c < cols_; ++c) out(r, c - from) = (*this)(r, c);
  return out;
}

std::string MatrixZ::to_string() const {
  std::string s = "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    s += r ? ", [" : "[";
    for (std::size_t c = 0; c < cols_; ++c) s += (c ? ", " : "") + (*this)(r, c).to_string();
    s += "]";
  }
  return s + "]";
}

MatrixZ operator*(const MatrixZ& a, const MatrixZ& b) {
  if (a.cols() != b.rows()) throw PreconditionError("matrix product dimension mismatch");
  MatrixZ out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(r, k).is_zero()) continue;
      for (std::size_t c = 0; c < b.cols(); ++c)
        if (!b(k, c).is_zero()) out(r, c) += a(r, k) * b(k, c);
    }
  return out;
}

Int determinant(const MatrixZ& m) {
  if (m.rows() != m.cols()) throw PreconditionError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  MatrixZ a = m;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k).is_zero()) ++swap;
      if (swap == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(swap, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::vector<Int> SmithForm::diagonal() const {
  std::vector<Int> out;
  for (std::size_t i = 0; i < d.rows() && i < d.cols(); ++i) out.push_back(d(i, i));
  return out;
}

namespace {

// Elimination state: a = u * m * v throughout.
struct Reducer {
  MatrixZ a, u, u_inv, v, v_inv;

  explicit Reducer(const MatrixZ& m)
      : a(m), u(MatrixZ::identity(m.rows())), u_inv(u), v(MatrixZ::identity(m.cols())), v_inv(v) {}

  void swap_rows(std::size_t r, std::size_t s) {
    if (r == s) return;
    for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(r, c), a(s, c));
    for (std::size_t c = 0; c < u.cols(); ++c) std::swap(u(r, c), u(s, c));
    for (std::size_t i = 0; i < u_inv.rows(); ++i) std::swap(u_inv(i, r), u_inv(i, s));
  }
  void swap_cols(std::size_t c, std::size_t d) {
    if (c == d) return;
    for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a(r, c), a(r, d));
    for (std::size_t r = 0; r < v.rows(); ++r) std::swap(v(r, c), v(r, d));
    for (std::size_t j = 0; j < v_inv.cols(); ++j) std::swap(v_inv(c, j), v_inv(d, j));
  }
  // row r += q * row s
  void add_row(std::size_t r, std::size_t s, const Int& q) {
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (!a(s, c).is_zero()) a(r, c) += q * a(s, c);
    for (std::size_t c = 0; c < u.cols(); ++c)
      if (!u(s, c).is_zero()) u(r, c) += q * u(s, c);
    for (std::size_t i = 0; i < u_inv.rows(); ++i)
      if (!u_inv(i, r).is_zero()) u_inv(i, s) -= q * u_inv(i, r);
  }
  // column c += q * column s
  void add_col(std::size_t c, std::size_t s, const Int& q) {
    for (std::size_t r = 0; r < a.rows(); ++r)
      if (!a(r, s).is_zero()) a(r, c) += q * a(r, s);
    for (std::size_t r = 0; r < v.rows(); ++r)
      if (!v(r, s).is_zero()) v(r, c) += q * v(r, s);
    for (std::size_t j = 0; j < v_inv.cols(); ++j)
      if (!v_inv(c, j).is_zero()) v_inv(s, j) -= q * v_inv(c, j);
  }
  void negate_row(std::size_t r) {
    for (std::size_t c = 0; c < a.cols(); ++c) a(r, c) = -a(r, c);
    for (std::size_t c = 0; c < u.cols(); ++c) u(r, c) = -u(r, c);
    for (std::size_t i = 0; i < u_inv.rows(); ++i) u_inv(i, r) = -u_inv(i, r);
  }
};

void verify(const MatrixZ& m, const SmithForm& f) {
  auto fail = [](const std::string& what) { throw ValidationError("Smith normal form postcondition failed: " + what); };
  if (f.u * m * f.v != f.d) fail("u m v != d");
  if (f.u * f.u_inv != MatrixZ::identity(m.rows())) fail("u_inv is not the inverse of u");
  if (f.v * f.v_inv != MatrixZ::identity(m.cols())) fail("v_inv is not the inverse of v");
  if (determinant(f.u).abs() != 1) fail("u is not unimodular");
  if (determinant(f.v).abs() != 1) fail("v is not unimodular");
  for (std::size_t r = 0; r < f.d.rows(); ++r)
    for (std::size_t c = 0; c < f.d.cols(); ++c)
      if (r != c && !f.d(r, c).is_zero()) fail("d is not diagonal");
  const auto diag = f.diagonal();
  for (std::size_t i = 0; i < diag.size(); ++i) {
    if (diag[i].sign() < 0) fail("negative diagonal entry");
    if (i < f.rank && diag[i].is_zero()) fail("zero inside the rank");
    if (i >= f.rank && !diag[i].is_zero()) fail("nonzero beyond the rank");
    if (i + 1 < f.rank && !(diag[i + 1] % diag[i]).is_zero()) fail("divisibility chain broken");
  }
}

}  // namespace

SmithForm snf(const MatrixZ& m) {
  Reducer st(m);
  auto& a = st.a;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t t = 0;
  while (t < rows && t < cols) {
    std::size_t pr = rows;
    std::size_t pc = cols;
    for (std::size_t r = t; r < rows; ++r)
      for (std::size_t c = t; c < cols; ++c)
        if (!a(r, c).is_zero() && (pr == rows || a(r, c).abs() < a(pr, pc).abs())) {
          pr = r;
          pc = c;
        }
    if (pr == rows) break;
    st.swap_rows(t, pr);
    st.swap_cols(t, pc);

    bool clean = true;
    for (std::size_t r = t + 1; r < rows; ++r)
      if (!a(r, t).is_zero()) {
        st.add_row(r, t, -(a(r, t) / a(t, t)));
        clean = clean && a(r, t).is_zero();
      }
    for (std::size_t c = t + 1; c < cols; ++c)
      if (!a(t, c).is_zero()) {
        st.add_col(c, t, -(a(t, c) / a(t, t)));
        clean = clean && a(t, c).is_zero();
      }
    if (!clean) continue;

    bool divides = true;
    for (std::size_t r = t + 1; r < rows && divides; ++r)
      for (std::size_t c = t + 1; c < cols && divides; ++c)
        if (!(a(r, c) % a(t, t)).is_zero()) {
          st.add_row(t, r, 1);
          divides = false;
        }
    if (!divides) continue;

    if (a(t, t).sign() < 0) st.negate_row(t);
    ++t;
  }
  SmithForm f{std::move(st.u), std::move(st.u_inv), std::move(st.a), std::move(st.v), std::move(st.v_inv), t};
  verify(m, f);
  return f;
}

}  // namespace declab
