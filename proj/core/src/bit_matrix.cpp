#include <algorithm>
#include <bit>
#include <stdexcept>

#include "walkup/homology.hpp"

namespace walkup {

namespace {
constexpr std::size_t kWordBits = 64;
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_((cols + kWordBits - 1) / kWordBits), bits_(rows * words_, 0) {}

bool BitMatrix::get(std::size_t r, std::size_t c) const {
  return (bits_[r * words_ + c / kWordBits] >> (c % kWordBits)) & 1U;
}

void BitMatrix::set(std::size_t r, std::size_t c, bool value) {
  auto& w = bits_[r * words_ + c / kWordBits];
  const std::uint64_t mask = std::uint64_t{1} << (c % kWordBits);
  w = value ? (w | mask) : (w & ~mask);
}

void BitMatrix::flip(std::size_t r, std::size_t c) {
  bits_[r * words_ + c / kWordBits] ^= std::uint64_t{1} << (c % kWordBits);
}

std::span<const std::uint64_t> BitMatrix::row(std::size_t r) const {
  return {bits_.data() + r * words_, words_};
}

std::span<std::uint64_t> BitMatrix::row(std::size_t r) { return {bits_.data() + r * words_, words_}; }

std::size_t BitMatrix::rank() const {
  BitMatrix copy = *this;
  return copy.rank_in_place();
}

std::size_t BitMatrix::rank_in_place() {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
    const std::size_t w = c / kWordBits;
    const std::uint64_t mask = std::uint64_t{1} << (c % kWordBits);
    std::size_t pivot = rank;
    while (pivot < rows_ && !(bits_[pivot * words_ + w] & mask)) ++pivot;
    if (pivot == rows_) continue;
    if (pivot != rank) {
      std::swap_ranges(bits_.begin() + static_cast<std::ptrdiff_t>(pivot * words_ + w),
                       bits_.begin() + static_cast<std::ptrdiff_t>((pivot + 1) * words_),
                       bits_.begin() + static_cast<std::ptrdiff_t>(rank * words_ + w));
    }
    const std::uint64_t* src = bits_.data() + rank * words_;
    for (std::size_t r = rank + 1; r < rows_; ++r) {
      std::uint64_t* dst = bits_.data() + r * words_;
      if (dst[w] & mask)
        for (std::size_t k = w; k < words_; ++k) dst[k] ^= src[k];
    }
    ++rank;
  }
  return rank;
}

BitMatrix BitMatrix::kernel_basis() const {
  // Reduced row echelon form, then one basis vector per free column.
  BitMatrix m = *this;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows_ && !m.get(pivot, c)) ++pivot;
    if (pivot == rows_) continue;
    if (pivot != rank) {
      auto a = m.row(pivot);
      auto b = m.row(rank);
      std::swap_ranges(a.begin(), a.end(), b.begin());
    }
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r != rank && m.get(r, c)) {
        auto dst = m.row(r);
        auto src = m.row(rank);
        for (std::size_t k = 0; k < words_; ++k) dst[k] ^= src[k];
      }
    }
    pivot_cols.push_back(c);
    ++rank;
  }
  std::vector<bool> is_pivot(cols_, false);
  for (std::size_t c : pivot_cols) is_pivot[c] = true;
  BitMatrix basis(cols_ - rank, cols_);
  std::size_t out = 0;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    basis.set(out, free);
    for (std::size_t r = 0; r < rank; ++r)
      if (m.get(r, free)) basis.set(out, pivot_cols[r]);
    ++out;
  }
  return basis;
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (get(r, c)) t.set(c, r);
  return t;
}

BitMatrix BitMatrix::operator*(const BitMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("BitMatrix: dimension mismatch");
  BitMatrix out(rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    auto dst = out.row(r);
    for (std::size_t k = 0; k < cols_; ++k) {
      if (!get(r, k)) continue;
      auto src = rhs.row(k);
      for (std::size_t w = 0; w < out.words_; ++w) dst[w] ^= src[w];
    }
  }
  return out;
}

bool BitMatrix::is_zero() const noexcept {
  return std::all_of(bits_.begin(), bits_.end(), [](std::uint64_t w) { return w == 0; });
}

BitMatrix BitMatrix::stack(const BitMatrix& top, const BitMatrix& bottom) {
  if (top.cols_ != bottom.cols_) throw std::invalid_argument("BitMatrix: column mismatch");
  BitMatrix out(top.rows_ + bottom.rows_, top.cols_);
  std::copy(top.bits_.begin(), top.bits_.end(), out.bits_.begin());
  std::copy(bottom.bits_.begin(), bottom.bits_.end(),
            out.bits_.begin() + static_cast<std::ptrdiff_t>(top.bits_.size()));
  return out;
}

}  // namespace walkup
