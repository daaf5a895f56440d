#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "oreaut/gf.hpp"

namespace oreaut {

/// Dense row-major matrix with entries in a finite field.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Elem> a;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}
  Elem& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  Elem operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
  bool operator==(const Matrix& o) const = default;
};

Matrix identity_matrix(const Field& F, std::size_t n);
Matrix scalar_matrix(const Field& F, std::size_t n, Elem c);
Matrix mat_add(const Field& F, const Matrix& A, const Matrix& B);
Matrix mat_sub(const Field& F, const Matrix& A, const Matrix& B);
Matrix mat_mul(const Field& F, const Matrix& A, const Matrix& B);
Matrix mat_scale(const Field& F, const Matrix& A, Elem c);
Matrix mat_pow(const Field& F, const Matrix& A, std::uint64_t e);
bool is_zero(const Matrix& A);

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(const Field& F, Matrix& A);
std::size_t rank(const Field& F, Matrix A);
/// Basis of {v : A v = 0}, each vector of length A.cols.
std::vector<std::vector<Elem>> nullspace(const Field& F, Matrix A);
/// Some solution of A v = b, if one exists.
std::optional<std::vector<Elem>> solve(const Field& F, const Matrix& A, const std::vector<Elem>& b);

/// F_p-coordinate helpers for elements of F viewed as vectors over the prime field.
/// Returns a basis (in reduced echelon order) of the F_p-span of the given elements.
std::vector<Elem> fp_basis(const Field& F, const std::vector<Elem>& elems);
/// All elements of the F_p-span of basis, in ascending code order.
std::vector<Elem> fp_span(const Field& F, const std::vector<Elem>& basis);
bool in_fp_span(const Field& F, const std::vector<Elem>& basis, Elem v);
/// True when elems is closed under addition and F_p-scaling (as a set).
bool is_fp_space(const Field& F, const std::vector<Elem>& elems);

}  // namespace oreaut
