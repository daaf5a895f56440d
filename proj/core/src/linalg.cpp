#include "oreaut/linalg.hpp"

#include <algorithm>
#include <set>

#include "oreaut/errors.hpp"

namespace oreaut {

Matrix identity_matrix(const Field& F, std::size_t n) { return scalar_matrix(F, n, F.one()); }

Matrix scalar_matrix(const Field&, std::size_t n, Elem c) {
  Matrix I(n, n);
  for (std::size_t i = 0; i < n; ++i) I(i, i) = c;
  return I;
}

Matrix mat_add(const Field& F, const Matrix& A, const Matrix& B) {
  require(A.rows == B.rows && A.cols == B.cols, "matrix shape mismatch");
  Matrix C(A.rows, A.cols);
  for (std::size_t i = 0; i < A.a.size(); ++i) C.a[i] = F.add(A.a[i], B.a[i]);
  return C;
}

Matrix mat_sub(const Field& F, const Matrix& A, const Matrix& B) {
  require(A.rows == B.rows && A.cols == B.cols, "matrix shape mismatch");
  Matrix C(A.rows, A.cols);
  for (std::size_t i = 0; i < A.a.size(); ++i) C.a[i] = F.sub(A.a[i], B.a[i]);
  return C;
}

Matrix mat_mul(const Field& F, const Matrix& A, const Matrix& B) {
  require(A.cols == B.rows, "matrix shape mismatch");
  Matrix C(A.rows, B.cols);
  for (std::size_t i = 0; i < A.rows; ++i)
    for (std::size_t k = 0; k < A.cols; ++k) {
      Elem aik = A(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < B.cols; ++j) C(i, j) = F.add(C(i, j), F.mul(aik, B(k, j)));
    }
  return C;
}

Matrix mat_scale(const Field& F, const Matrix& A, Elem c) {
  Matrix C = A;
  for (Elem& e : C.a) e = F.mul(e, c);
  return C;
}

Matrix mat_pow(const Field& F, const Matrix& A, std::uint64_t e) {
  require(A.rows == A.cols, "power of a non-square matrix");
  Matrix R = identity_matrix(F, A.rows);
  Matrix B = A;
  while (e) {
    if (e & 1) R = mat_mul(F, R, B);
    B = mat_mul(F, B, B);
    e >>= 1;
  }
  return R;
}

bool is_zero(const Matrix& A) {
  return std::all_of(A.a.begin(), A.a.end(), [](Elem e) { return e == 0; });
}

std::vector<std::size_t> rref(const Field& F, Matrix& A) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < A.cols && r < A.rows; ++c) {
    std::size_t piv = r;
    while (piv < A.rows && A(piv, c) == 0) ++piv;
    if (piv == A.rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < A.cols; ++j) std::swap(A(piv, j), A(r, j));
    Elem inv = F.inv(A(r, c));
    for (std::size_t j = 0; j < A.cols; ++j) A(r, j) = F.mul(A(r, j), inv);
    for (std::size_t i = 0; i < A.rows; ++i) {
      if (i == r || A(i, c) == 0) continue;
      Elem factor = A(i, c);
      for (std::size_t j = 0; j < A.cols; ++j) A(i, j) = F.sub(A(i, j), F.mul(factor, A(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(const Field& F, Matrix A) { return rref(F, A).size(); }

std::vector<std::vector<Elem>> nullspace(const Field& F, Matrix A) {
  std::vector<std::size_t> piv = rref(F, A);
  std::vector<bool> is_pivot(A.cols, false);
  for (std::size_t c : piv) is_pivot[c] = true;
  std::vector<std::vector<Elem>> basis;
  for (std::size_t free = 0; free < A.cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Elem> v(A.cols, 0);
    v[free] = F.one();
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = F.neg(A(r, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Elem>> solve(const Field& F, const Matrix& A, const std::vector<Elem>& b) {
  require(b.size() == A.rows, "right-hand side length mismatch");
  Matrix Ab(A.rows, A.cols + 1);
  for (std::size_t i = 0; i < A.rows; ++i) {
    for (std::size_t j = 0; j < A.cols; ++j) Ab(i, j) = A(i, j);
    Ab(i, A.cols) = b[i];
  }
  std::vector<std::size_t> piv = rref(F, Ab);
  if (!piv.empty() && piv.back() == A.cols) return std::nullopt;
  std::vector<Elem> x(A.cols, 0);
  for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = Ab(r, A.cols);
  return x;
}

namespace {

Matrix coord_rows(const Field& F, const std::vector<Elem>& elems) {
  Matrix M(elems.size(), F.m());
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (unsigned j = 0; j < F.m(); ++j) M(i, j) = F.coord(elems[i], j);
  return M;
}

}  // namespace

std::vector<Elem> fp_basis(const Field& F, const std::vector<Elem>& elems) {
  if (elems.empty()) return {};
  FieldPtr Fp = Field::make(F.p(), 1);
  Matrix M = coord_rows(F, elems);
  std::size_t r = rref(*Fp, M).size();
  std::vector<Elem> basis;
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<unsigned> c(F.m());
    for (unsigned j = 0; j < F.m(); ++j) c[j] = M(i, j);
    basis.push_back(F.from_coords(c));
  }
  return basis;
}

std::vector<Elem> fp_span(const Field& F, const std::vector<Elem>& basis) {
  std::vector<Elem> span{0};
  for (Elem b : basis) {
    std::vector<Elem> next;
    next.reserve(span.size() * F.p());
    for (Elem s : span) {
      Elem acc = s;
      for (unsigned c = 0; c < F.p(); ++c) {
        next.push_back(acc);
        acc = F.add(acc, b);
      }
    }
    span = std::move(next);
  }
  std::sort(span.begin(), span.end());
  span.erase(std::unique(span.begin(), span.end()), span.end());
  return span;
}

bool in_fp_span(const Field& F, const std::vector<Elem>& basis, Elem v) {
  std::vector<Elem> all = basis;
  std::size_t r0 = fp_basis(F, basis).size();
  all.push_back(v);
  return fp_basis(F, all).size() == r0;
}

bool is_fp_space(const Field& F, const std::vector<Elem>& elems) {
  std::set<Elem> s(elems.begin(), elems.end());
  if (!s.count(0)) return false;
  for (Elem a : s)
    for (Elem b : s)
      if (!s.count(F.add(a, b))) return false;
  return true;
}

}  // namespace oreaut
