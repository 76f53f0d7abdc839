#pragma once

#include "homni/rational.hpp"

#include <vector>

namespace homni {

/// Dense exact linear algebra over the rationals, row-major.
using Matrix = std::vector<std::vector<Rational>>;

/// In-place reduced row echelon form; returns the pivot columns.
std::vector<int> rref(Matrix& a);

int rank(Matrix a);

/// Basis of the right nullspace of an n_rows x n_cols matrix.
std::vector<std::vector<Rational>> nullspace(Matrix a, int n_cols);

int nullspace_dim(Matrix a, int n_cols);

/// Determinant of a square matrix by fraction-free forward elimination.
Rational determinant(Matrix a);

/// Inverse of a square nonsingular matrix; throws DegeneracyError otherwise.
Matrix inverse(Matrix a);

}  // namespace homni
