#include "phframe/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace phframe {

void RatMatrix::append_row(const RatVector& row) {
  if (rows_ == 0 && cols_ == 0) cols_ = row.size();
  if (row.size() != cols_) throw std::invalid_argument("row length does not match matrix width");
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

void RatMatrix::append_rows(const RatMatrix& other) {
  for (std::size_t r = 0; r < other.rows(); ++r) append_row(other.row(r));
}

RatVector RatMatrix::row(std::size_t r) const {
  return RatVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

void make_primitive_in_place(IntVector& v) {
  Int g(0);
  int lead_sign = 0;
  for (const auto& x : v) {
    if (sgn(x) == 0) continue;
    if (lead_sign == 0) lead_sign = sgn(x);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  }
  if (sgn(g) == 0) return;
  if (lead_sign < 0) g = -g;
  for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

IntVector make_primitive(const RatVector& v) {
  Int l(1);
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
  IntVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(Int(x.get_num() * (l / x.get_den())));
  make_primitive_in_place(out);
  return out;
}

namespace {

bool is_zero_row(const IntVector& v) {
  for (const auto& x : v) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

}  // namespace

EchelonForm fraction_free_rref(std::vector<IntVector> m, std::size_t cols) {
  std::size_t r = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    // Smallest nonzero entry as pivot keeps the integers short.
    std::size_t best = m.size();
    for (std::size_t i = r; i < m.size(); ++i) {
      if (sgn(m[i][c]) == 0) continue;
      if (best == m.size() || mpz_cmpabs(m[i][c].get_mpz_t(), m[best][c].get_mpz_t()) < 0) best = i;
    }
    if (best == m.size()) continue;
    std::swap(m[r], m[best]);
    make_primitive_in_place(m[r]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || sgn(m[i][c]) == 0) continue;
      Int g;
      mpz_gcd(g.get_mpz_t(), m[r][c].get_mpz_t(), m[i][c].get_mpz_t());
      Int a = m[r][c] / g;
      Int b = m[i][c] / g;
      for (std::size_t k = 0; k < cols; ++k) m[i][k] = a * m[i][k] - b * m[r][k];
      make_primitive_in_place(m[i]);
    }
    pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  for (auto& row : m) {
    if (is_zero_row(row)) throw std::logic_error("zero pivot row after elimination");
  }
  return {std::move(m), std::move(pivots), cols};
}

EchelonForm fraction_free_rref(const RatMatrix& mat) {
  std::vector<IntVector> rows;
  rows.reserve(mat.rows());
  for (std::size_t r = 0; r < mat.rows(); ++r) {
    IntVector v = make_primitive(mat.row(r));
    if (!is_zero_row(v)) rows.push_back(std::move(v));
  }
  return fraction_free_rref(std::move(rows), mat.cols());
}

std::size_t rank(const RatMatrix& m) { return fraction_free_rref(m).rows.size(); }

std::vector<IntVector> nullspace(const RatMatrix& m) {
  EchelonForm e = fraction_free_rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  std::vector<IntVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RatVector x(m.cols(), Rat(0));
    x[f] = 1;
    for (std::size_t r = 0; r < e.rows.size(); ++r) {
      const std::size_t pc = e.pivot_cols[r];
      Rat v(e.rows[r][f], e.rows[r][pc]);
      v.canonicalize();
      x[pc] = -v;
    }
    basis.push_back(make_primitive(x));
  }
  return basis;
}

std::vector<IntVector> canonical_basis(const std::vector<IntVector>& vectors, std::size_t cols) {
  std::vector<IntVector> rows;
  for (const auto& v : vectors) {
    if (v.size() != cols) throw std::invalid_argument("vector length does not match dimension");
    if (!is_zero_row(v)) rows.push_back(v);
  }
  return fraction_free_rref(std::move(rows), cols).rows;
}

bool in_span(const std::vector<IntVector>& basis, const IntVector& v) {
  if (is_zero_row(v)) return true;
  std::vector<IntVector> rows = basis;
  rows.push_back(v);
  std::size_t cols = v.size();
  return fraction_free_rref(std::move(rows), cols).rows.size() == fraction_free_rref(basis, cols).rows.size();
}

}  // namespace phframe
