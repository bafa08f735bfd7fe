#include "typec/linalg.hpp"

#include "typec/error.hpp"

namespace typec {

  Matrix::Matrix(std::size_t rows, std::size_t cols, FieldSpec const& spec)
      : _rows(rows),
        _cols(cols),
        _spec(spec),
        _data(rows * cols, FieldElement::zero(spec)) {}

  Matrix Matrix::identity(std::size_t size, FieldSpec const& spec) {
    Matrix m(size, size, spec);
    for (std::size_t i = 0; i < size; ++i) {
      m(i, i) = FieldElement::one(spec);
    }
    return m;
  }

  bool Matrix::is_zero() const {
    for (auto const& x : _data) {
      if (!x.is_zero()) {
        return false;
      }
    }
    return true;
  }

  Matrix Matrix::transpose() const {
    Matrix t(_cols, _rows, _spec);
    for (std::size_t r = 0; r < _rows; ++r) {
      for (std::size_t c = 0; c < _cols; ++c) {
        t(c, r) = (*this)(r, c);
      }
    }
    return t;
  }

  Matrix Matrix::columns(std::size_t first, std::size_t count) const {
    Matrix result(_rows, count, _spec);
    for (std::size_t r = 0; r < _rows; ++r) {
      for (std::size_t c = 0; c < count; ++c) {
        result(r, c) = (*this)(r, first + c);
      }
    }
    return result;
  }

  Matrix& Matrix::operator+=(Matrix const& other) {
    if (_rows != other._rows || _cols != other._cols) {
      throw Error(ErrorKind::shape_mismatch, "matrix sizes differ");
    }
    for (std::size_t i = 0; i < _data.size(); ++i) {
      _data[i] += other._data[i];
    }
    return *this;
  }

  Matrix operator-(Matrix const& a, Matrix const& b) {
    return a + (FieldElement::from_integer(b.spec(), -1) * b);
  }

  Matrix operator*(Matrix const& a, Matrix const& b) {
    if (a._cols != b._rows) {
      throw Error(ErrorKind::shape_mismatch, "matrix sizes do not chain");
    }
    Matrix result(a._rows, b._cols, a._spec);
    for (std::size_t i = 0; i < a._rows; ++i) {
      for (std::size_t k = 0; k < a._cols; ++k) {
        FieldElement const& x = a(i, k);
        if (x.is_zero()) {
          continue;
        }
        for (std::size_t j = 0; j < b._cols; ++j) {
          if (!b(k, j).is_zero()) {
            result(i, j) += x * b(k, j);
          }
        }
      }
    }
    return result;
  }

  Matrix operator*(FieldElement const& s, Matrix a) {
    for (auto& x : a._data) {
      if (!x.is_zero()) {
        x = s * x;
      }
    }
    return a;
  }

  std::vector<std::size_t> row_reduce(Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t              row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
      std::size_t pivot = row;
      while (pivot < m.rows() && m(pivot, col).is_zero()) {
        ++pivot;
      }
      if (pivot == m.rows()) {
        continue;
      }
      if (pivot != row) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
          std::swap(m(pivot, c), m(row, c));
        }
      }
      FieldElement inv = m(row, col).inverse();
      for (std::size_t c = col; c < m.cols(); ++c) {
        m(row, c) = m(row, c) * inv;
      }
      for (std::size_t r = 0; r < m.rows(); ++r) {
        if (r == row || m(r, col).is_zero()) {
          continue;
        }
        FieldElement factor = m(r, col);
        for (std::size_t c = col; c < m.cols(); ++c) {
          if (!m(row, c).is_zero()) {
            m(r, c) -= factor * m(row, c);
          }
        }
      }
      pivots.push_back(col);
      ++row;
    }
    return pivots;
  }

  std::size_t rank(Matrix m) {
    return row_reduce(m).size();
  }

  FieldElement determinant(Matrix m) {
    if (m.rows() != m.cols()) {
      throw Error(ErrorKind::shape_mismatch, "determinant of a non-square matrix");
    }
    FieldSpec const spec   = m.spec();
    FieldElement    result = FieldElement::one(spec);
    std::size_t const size = m.rows();
    for (std::size_t col = 0; col < size; ++col) {
      std::size_t pivot = col;
      while (pivot < size && m(pivot, col).is_zero()) {
        ++pivot;
      }
      if (pivot == size) {
        return FieldElement::zero(spec);
      }
      if (pivot != col) {
        for (std::size_t c = 0; c < size; ++c) {
          std::swap(m(pivot, c), m(col, c));
        }
        result = -result;
      }
      result *= m(col, col);
      FieldElement inv = m(col, col).inverse();
      for (std::size_t r = col + 1; r < size; ++r) {
        if (m(r, col).is_zero()) {
          continue;
        }
        FieldElement factor = m(r, col) * inv;
        for (std::size_t c = col; c < size; ++c) {
          m(r, c) -= factor * m(col, c);
        }
      }
    }
    return result;
  }

  Matrix nullspace(Matrix const& m) {
    Matrix                   reduced = m;
    std::vector<std::size_t> pivots  = row_reduce(reduced);
    std::vector<bool>        is_pivot(m.cols(), false);
    for (auto p : pivots) {
      is_pivot[p] = true;
    }
    Matrix basis(m.cols(), m.cols() - pivots.size(), m.spec());
    std::size_t k = 0;
    for (std::size_t free = 0; free < m.cols(); ++free) {
      if (is_pivot[free]) {
        continue;
      }
      basis(free, k) = FieldElement::one(m.spec());
      for (std::size_t r = 0; r < pivots.size(); ++r) {
        basis(pivots[r], k) = -reduced(r, free);
      }
      ++k;
    }
    return basis;
  }

  Matrix column_basis(Matrix const& m) {
    Matrix reduced = m;
    auto   pivots  = row_reduce(reduced);
    Matrix result(m.rows(), pivots.size(), m.spec());
    for (std::size_t k = 0; k < pivots.size(); ++k) {
      for (std::size_t r = 0; r < m.rows(); ++r) {
        result(r, k) = m(r, pivots[k]);
      }
    }
    return result;
  }

  Matrix inverse(Matrix const& m) {
    if (m.rows() != m.cols()) {
      throw Error(ErrorKind::shape_mismatch, "inverse of a non-square matrix");
    }
    std::size_t const size      = m.rows();
    Matrix            augmented = hconcat(m, Matrix::identity(size, m.spec()));
    auto              pivots    = row_reduce(augmented);
    if (pivots.size() < size || pivots[size - 1] != size - 1) {
      throw Error(ErrorKind::division_by_zero, "matrix is singular");
    }
    return augmented.columns(size, size);
  }

  Matrix hconcat(Matrix const& a, Matrix const& b) {
    if (a.rows() != b.rows()) {
      throw Error(ErrorKind::shape_mismatch, "row counts differ");
    }
    Matrix result(a.rows(), a.cols() + b.cols(), a.spec());
    for (std::size_t r = 0; r < a.rows(); ++r) {
      for (std::size_t c = 0; c < a.cols(); ++c) {
        result(r, c) = a(r, c);
      }
      for (std::size_t c = 0; c < b.cols(); ++c) {
        result(r, a.cols() + c) = b(r, c);
      }
    }
    return result;
  }

  Matrix kronecker(Matrix const& a, Matrix const& b) {
    Matrix result(a.rows() * b.rows(), a.cols() * b.cols(), a.spec());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) {
        if (a(i, j).is_zero()) {
          continue;
        }
        for (std::size_t k = 0; k < b.rows(); ++k) {
          for (std::size_t l = 0; l < b.cols(); ++l) {
            result(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
          }
        }
      }
    }
    return result;
  }

}  // namespace typec
