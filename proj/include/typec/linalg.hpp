#pragma once

#include <cstddef>
#include <vector>

#include "typec/scalars.hpp"

namespace typec {

  // Dense matrix over one FieldElement field, row major.
  class Matrix {
   public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, FieldSpec const& spec);

    static Matrix identity(std::size_t size, FieldSpec const& spec);

    std::size_t rows() const noexcept {
      return _rows;
    }
    std::size_t cols() const noexcept {
      return _cols;
    }
    FieldSpec const& spec() const noexcept {
      return _spec;
    }

    FieldElement& operator()(std::size_t r, std::size_t c) {
      return _data[r * _cols + c];
    }
    FieldElement const& operator()(std::size_t r, std::size_t c) const {
      return _data[r * _cols + c];
    }

    bool   is_zero() const;
    Matrix transpose() const;
    // Columns [first, first + count).
    Matrix columns(std::size_t first, std::size_t count) const;

    Matrix& operator+=(Matrix const& other);
    friend Matrix operator+(Matrix a, Matrix const& b) {
      return a += b;
    }
    friend Matrix operator-(Matrix const& a, Matrix const& b);
    friend Matrix operator*(Matrix const& a, Matrix const& b);
    friend Matrix operator*(FieldElement const& s, Matrix a);
    friend bool   operator==(Matrix const& a, Matrix const& b) {
      return a._rows == b._rows && a._cols == b._cols && a._data == b._data;
    }

   private:
    std::size_t               _rows = 0;
    std::size_t               _cols = 0;
    FieldSpec                 _spec;
    std::vector<FieldElement> _data;
  };

  // Reduced row echelon form in place; returns the pivot columns.
  std::vector<std::size_t> row_reduce(Matrix& m);
  std::size_t              rank(Matrix m);
  FieldElement             determinant(Matrix m);
  // Basis of {x : m x = 0} as the columns of the result.
  Matrix nullspace(Matrix const& m);
  // Columns forming a basis of the column space, taken from m itself.
  Matrix column_basis(Matrix const& m);
  // Throws division-by-zero for singular input.
  Matrix inverse(Matrix const& m);
  // Horizontal concatenation.
  Matrix hconcat(Matrix const& a, Matrix const& b);
  // Kronecker product.
  Matrix kronecker(Matrix const& a, Matrix const& b);

}  // namespace typec
