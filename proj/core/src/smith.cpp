#include "raag/smith.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace raag {

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("IntegerMatrix rows must have equal length");
    for (long x : row) data_.emplace_back(x);
  }
}

namespace {

void swap_rows(IntegerMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

void swap_cols(IntegerMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
}

// Moves the entry of least nonzero absolute value in the trailing block to (t, t).
bool place_pivot(IntegerMatrix& m, std::size_t t) {
  std::size_t best_r = 0, best_c = 0;
  bool found = false;
  for (std::size_t r = t; r < m.rows(); ++r) {
    for (std::size_t c = t; c < m.cols(); ++c) {
      if (sgn(m(r, c)) == 0) continue;
      if (!found || abs(m(r, c)) < abs(m(best_r, best_c))) {
        best_r = r;
        best_c = c;
        found = true;
      }
    }
  }
  if (!found) return false;
  swap_rows(m, t, best_r);
  swap_cols(m, t, best_c);
  return true;
}

}  // namespace

std::vector<mpz_class> smith_normal_form(IntegerMatrix m) {
  std::vector<mpz_class> diagonal;
  const auto limit = std::min(m.rows(), m.cols());
  mpz_class q;

  for (std::size_t t = 0; t < limit; ++t) {
    if (!place_pivot(m, t)) break;
    // Euclidean reduction of row t and column t against the pivot; a nonzero
    // remainder strictly decreases the pivot and restarts the sweep.
    while (true) {
      bool clean = true;
      for (std::size_t r = t + 1; r < m.rows(); ++r) {
        if (sgn(m(r, t)) == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), m(r, t).get_mpz_t(), m(t, t).get_mpz_t());
        for (std::size_t c = t; c < m.cols(); ++c) m(r, c) -= q * m(t, c);
        if (sgn(m(r, t)) != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < m.cols(); ++c) {
        if (sgn(m(t, c)) == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), m(t, c).get_mpz_t(), m(t, t).get_mpz_t());
        for (std::size_t r = t; r < m.rows(); ++r) m(r, c) -= q * m(r, t);
        if (sgn(m(t, c)) != 0) clean = false;
      }
      if (clean) break;
      place_pivot(m, t);
    }
    diagonal.push_back(abs(m(t, t)));
  }

  // Diagonal entries to divisor chain: (a, b) -> (gcd, lcm) preserves the
  // group Z/a + Z/b.
  for (std::size_t i = 0; i < diagonal.size(); ++i) {
    for (std::size_t j = i + 1; j < diagonal.size(); ++j) {
      mpz_class g = gcd(diagonal[i], diagonal[j]);
      mpz_class l = lcm(diagonal[i], diagonal[j]);
      diagonal[i] = std::move(g);
      diagonal[j] = std::move(l);
    }
  }
  return diagonal;
}

}  // namespace raag
