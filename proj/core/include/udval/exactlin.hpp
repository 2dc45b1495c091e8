#pragma once

#include <optional>
#include <vector>

#include "udval/rational.hpp"

namespace udval::exactlin {

using Row = std::vector<Rational>;
using Matrix = std::vector<Row>;
using IntMatrix = std::vector<std::vector<mpz_class>>;

/// Rank by fraction-free (Bareiss) elimination over the integers. Exactness
/// of the interleaved divisions is checked; a failed check would indicate a
/// broken pivoting invariant and throws.
int rank_bareiss(IntMatrix m);

/// Reduced row echelon form over the rationals.
struct Echelon {
  Matrix rows;                     // nonzero rows of the RREF
  std::vector<int> pivot_columns;  // one per row, strictly increasing
  int columns = 0;

  int rank() const { return static_cast<int>(rows.size()); }
};

Echelon rref(Matrix m);

int rank(Matrix m);

/// Basis of {x : Ax = 0}, one vector per free column of the RREF.
std::vector<Row> nullspace_basis(const Echelon& e);
std::vector<Row> nullspace_basis(const Matrix& a);

/// One solution of Ax = b, if the system is consistent.
std::optional<Row> solve_particular(const Matrix& a, const Row& b);

/// True iff v lies in the row space spanned by the echelon rows.
bool in_row_space(const Echelon& e, Row v);

Row matvec(const Matrix& a, const Row& x);

}  // namespace udval::exactlin
