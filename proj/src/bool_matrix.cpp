#include "pbr/bool_matrix.hpp"

#include <bit>
#include <cassert>

namespace pbr {

  BoolMatrix::BoolMatrix(std::size_t rows, std::size_t cols)
      : _rows(rows),
        _cols(cols),
        _words(bits::words_for(cols)),
        _data(rows * bits::words_for(cols), 0) {}

  BoolMatrix BoolMatrix::identity(std::size_t n) {
    BoolMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      m.set(i, i);
    }
    return m;
  }

  BoolMatrix BoolMatrix::full(std::size_t rows, std::size_t cols) {
    BoolMatrix m(rows, cols);
    if (m._words == 0) {
      return m;
    }
    for (std::size_t r = 0; r < rows; ++r) {
      auto row = m.row(r);
      for (auto& w : row) {
        w = ~word_type{0};
      }
      row.back() &= m.tail_mask();
    }
    return m;
  }

  BoolMatrix::word_type BoolMatrix::tail_mask() const noexcept {
    std::size_t rem = _cols % word_bits;
    return rem == 0 ? ~word_type{0} : ((word_type{1} << rem) - 1);
  }

  std::size_t BoolMatrix::count() const noexcept {
    std::size_t total = 0;
    for (auto w : _data) {
      total += static_cast<std::size_t>(std::popcount(w));
    }
    return total;
  }

  std::size_t BoolMatrix::row_count(std::size_t r) const noexcept {
    std::size_t total = 0;
    for (auto w : row(r)) {
      total += static_cast<std::size_t>(std::popcount(w));
    }
    return total;
  }

  bool BoolMatrix::is_full() const noexcept {
    return count() == _rows * _cols;
  }

  BoolMatrix BoolMatrix::transpose() const {
    BoolMatrix result(_cols, _rows);
    for (std::size_t r = 0; r < _rows; ++r) {
      bits::for_each(row(r), [&](std::size_t c) { result.set(c, r); });
    }
    return result;
  }

  bool BoolMatrix::unite(BoolMatrix const& other) noexcept {
    assert(_rows == other._rows && _cols == other._cols);
    bool changed = false;
    for (std::size_t i = 0; i < _data.size(); ++i) {
      auto before = _data[i];
      _data[i] |= other._data[i];
      changed |= (_data[i] != before);
    }
    return changed;
  }

  BoolMatrix operator*(BoolMatrix const& lhs, BoolMatrix const& rhs) {
    assert(lhs.cols() == rhs.rows());
    BoolMatrix result(lhs.rows(), rhs.cols());
    for (std::size_t r = 0; r < lhs.rows(); ++r) {
      auto out = result.row(r);
      bits::for_each(lhs.row(r),
                     [&](std::size_t k) { bits::unite(out, rhs.row(k)); });
    }
    return result;
  }

}  // namespace pbr
