#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace pbr {

  // Dense Boolean matrix with each row packed into 64-bit words.
  //
  // Row r is the bitset of columns c with (r, c) set.  The matrix product
  // follows the usual Boolean semiring:
  //   (lhs * rhs)(r, c) = OR_k lhs(r, k) AND rhs(k, c),
  // evaluated row-wise as the union of the rows of rhs selected by row r of
  // lhs.
  class BoolMatrix {
   public:
    using word_type                        = std::uint64_t;
    static constexpr std::size_t word_bits = 64;

    BoolMatrix() = default;
    BoolMatrix(std::size_t rows, std::size_t cols);

    static BoolMatrix identity(std::size_t n);
    static BoolMatrix full(std::size_t rows, std::size_t cols);

    std::size_t rows() const noexcept {
      return _rows;
    }
    std::size_t cols() const noexcept {
      return _cols;
    }
    std::size_t words_per_row() const noexcept {
      return _words;
    }

    bool get(std::size_t r, std::size_t c) const noexcept {
      return (_data[r * _words + c / word_bits] >> (c % word_bits)) & 1U;
    }

    void set(std::size_t r, std::size_t c, bool value = true) noexcept {
      word_type& w   = _data[r * _words + c / word_bits];
      word_type  bit = word_type{1} << (c % word_bits);
      w              = value ? (w | bit) : (w & ~bit);
    }

    std::span<word_type const> row(std::size_t r) const noexcept {
      return {_data.data() + r * _words, _words};
    }
    std::span<word_type> row(std::size_t r) noexcept {
      return {_data.data() + r * _words, _words};
    }

    std::size_t count() const noexcept;
    std::size_t row_count(std::size_t r) const noexcept;
    bool        is_full() const noexcept;
    bool        empty() const noexcept {
      return count() == 0;
    }

    BoolMatrix transpose() const;

    // In-place union; shapes must agree.  Returns true if anything changed.
    bool unite(BoolMatrix const& other) noexcept;

    friend BoolMatrix operator*(BoolMatrix const& lhs, BoolMatrix const& rhs);
    friend BoolMatrix operator|(BoolMatrix lhs, BoolMatrix const& rhs) {
      lhs.unite(rhs);
      return lhs;
    }

    friend bool operator==(BoolMatrix const&, BoolMatrix const&) = default;

    // Mask clearing the unused high bits of the last word of a row.
    word_type tail_mask() const noexcept;

   private:
    std::size_t            _rows  = 0;
    std::size_t            _cols  = 0;
    std::size_t            _words = 0;
    std::vector<word_type> _data;
  };

  namespace bits {
    inline std::size_t words_for(std::size_t n) noexcept {
      return (n + BoolMatrix::word_bits - 1) / BoolMatrix::word_bits;
    }

    inline bool test(std::span<BoolMatrix::word_type const> s,
                     std::size_t                              i) noexcept {
      return (s[i / BoolMatrix::word_bits] >> (i % BoolMatrix::word_bits)) & 1U;
    }

    inline void set(std::span<BoolMatrix::word_type> s, std::size_t i) noexcept {
      s[i / BoolMatrix::word_bits]
          |= BoolMatrix::word_type{1} << (i % BoolMatrix::word_bits);
    }

    // dst |= src; returns true if dst changed.
    inline bool unite(std::span<BoolMatrix::word_type>       dst,
                      std::span<BoolMatrix::word_type const> src) noexcept {
      bool changed = false;
      for (std::size_t i = 0; i < dst.size(); ++i) {
        auto before = dst[i];
        dst[i] |= src[i];
        changed |= (dst[i] != before);
      }
      return changed;
    }

    // Calls f(i) for every set bit i, in increasing order.
    template <typename Func>
    void for_each(std::span<BoolMatrix::word_type const> s, Func&& f) {
      for (std::size_t w = 0; w < s.size(); ++w) {
        auto word = s[w];
        while (word != 0) {
          auto tz = static_cast<std::size_t>(std::countr_zero(word));
          f(w * BoolMatrix::word_bits + tz);
          word &= word - 1;
        }
      }
    }
  }  // namespace bits

}  // namespace pbr
