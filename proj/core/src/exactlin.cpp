#include "udval/exactlin.hpp"

#include <stdexcept>
#include <utility>

namespace udval::exactlin {

int rank_bareiss(IntMatrix m) {
  if (m.empty()) return 0;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int rank = 0;
  mpz_class prev = 1;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (m[r][col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(m[pivot], m[rank]);
    for (int r = rank + 1; r < rows; ++r) {
      for (int c = col + 1; c < cols; ++c) {
        mpz_class num = m[r][c] * m[rank][col] - m[r][col] * m[rank][c];
        // Sylvester's identity guarantees exact divisibility by the previous
        // pivot; a failure here means the elimination state is corrupt.
        if (mpz_divisible_p(num.get_mpz_t(), prev.get_mpz_t()) == 0) {
          throw std::logic_error("bareiss: inexact division");
        }
        mpz_divexact(m[r][c].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      m[r][col] = 0;
    }
    prev = m[rank][col];
    ++rank;
  }
  return rank;
}

Echelon rref(Matrix m) {
  Echelon result;
  if (m.empty()) return result;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  result.columns = cols;

  int lead = 0;
  for (int col = 0; col < cols && lead < rows; ++col) {
    int pivot = -1;
    for (int r = lead; r < rows; ++r) {
      if (m[r][col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(m[pivot], m[lead]);
    const Rational inv = m[lead][col];
    for (int c = col; c < cols; ++c) m[lead][c] /= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == lead || m[r][col] == 0) continue;
      const Rational factor = m[r][col];
      for (int c = col; c < cols; ++c) m[r][c] -= factor * m[lead][c];
    }
    result.pivot_columns.push_back(col);
    ++lead;
  }
  m.resize(result.pivot_columns.size());
  result.rows = std::move(m);
  return result;
}

int rank(Matrix m) { return rref(std::move(m)).rank(); }

std::vector<Row> nullspace_basis(const Echelon& e) {
  std::vector<bool> is_pivot(e.columns, false);
  for (int c : e.pivot_columns) is_pivot[c] = true;
  std::vector<Row> basis;
  for (int free = 0; free < e.columns; ++free) {
    if (is_pivot[free]) continue;
    Row v(e.columns, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < e.rows.size(); ++r) {
      v[e.pivot_columns[r]] = -e.rows[r][free];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Row> nullspace_basis(const Matrix& a) { return nullspace_basis(rref(a)); }

std::optional<Row> solve_particular(const Matrix& a, const Row& b) {
  if (a.size() != b.size()) throw std::invalid_argument("solve_particular: size mismatch");
  if (a.empty()) return Row{};
  const int cols = static_cast<int>(a[0].size());
  Matrix augmented = a;
  for (std::size_t r = 0; r < a.size(); ++r) augmented[r].push_back(b[r]);
  const Echelon e = rref(std::move(augmented));
  Row x(cols, Rational(0));
  for (std::size_t r = 0; r < e.rows.size(); ++r) {
    if (e.pivot_columns[r] == cols) return std::nullopt;  // 0 = 1 row: inconsistent
    x[e.pivot_columns[r]] = e.rows[r][cols];
  }
  return x;
}

bool in_row_space(const Echelon& e, Row v) {
  for (std::size_t r = 0; r < e.rows.size(); ++r) {
    const int col = e.pivot_columns[r];
    if (v[col] == 0) continue;
    const Rational factor = v[col];
    for (int c = 0; c < e.columns; ++c) v[c] -= factor * e.rows[r][c];
  }
  for (const Rational& q : v) {
    if (q != 0) return false;
  }
  return true;
}

Row matvec(const Matrix& a, const Row& x) {
  Row out;
  out.reserve(a.size());
  for (const Row& row : a) {
    Rational acc(0);
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (row[c] != 0 && x[c] != 0) acc += row[c] * x[c];
    }
    out.push_back(std::move(acc));
  }
  return out;
}

}  // namespace udval::exactlin
