#pragma once

// Homogeneous linear systems with polynomial coefficients. Elimination is
// fraction-free (Bareiss): every division is an exact polynomial division by
// the previous pivot, so entries stay polynomials. Back-substitution for the
// nullspace happens over rational functions.

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "wzkit/ratfun.hpp"

namespace wzkit {

using PolyMatrix = std::vector<std::vector<MultiPoly>>;

struct EchelonForm {
  PolyMatrix rows;                       // nonzero rows in echelon form
  std::vector<std::size_t> pivot_cols;   // pivot column of each row
};

inline EchelonForm bareiss_echelon(PolyMatrix a, std::size_t cols) {
  EchelonForm out;
  MultiPoly prev(1);
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < a.size(); ++c) {
    std::size_t pivot = row;
    while (pivot < a.size() && a[pivot][c].is_zero()) ++pivot;
    if (pivot == a.size()) continue;
    std::swap(a[row], a[pivot]);
    for (std::size_t i = row + 1; i < a.size(); ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        MultiPoly v = a[row][c] * a[i][j] - a[i][c] * a[row][j];
        auto q = v.divide_exact(prev);
        if (!q) throw std::logic_error("fraction-free elimination: inexact division");
        a[i][j] = std::move(*q);
      }
      a[i][c] = MultiPoly();
    }
    prev = a[row][c];
    out.pivot_cols.push_back(c);
    ++row;
  }
  a.resize(row);
  out.rows = std::move(a);
  return out;
}

/// A basis of {x : A x = 0}, one vector per free column.
inline std::vector<std::vector<RationalFunction>> nullspace(const PolyMatrix& a, std::size_t cols) {
  const EchelonForm e = bareiss_echelon(a, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;

  std::vector<std::vector<RationalFunction>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<RationalFunction> x(cols, RationalFunction(0));
    x[free] = RationalFunction(1);
    for (std::size_t r = e.rows.size(); r-- > 0;) {
      const std::size_t pc = e.pivot_cols[r];
      RationalFunction acc(0);
      for (std::size_t j = pc + 1; j < cols; ++j) {
        if (!e.rows[r][j].is_zero() && !x[j].is_zero()) acc += RationalFunction(e.rows[r][j]) * x[j];
      }
      x[pc] = -acc / RationalFunction(e.rows[r][pc]);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

}  // namespace wzkit
