#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace zdg {

// Square boolean matrix with bit-packed rows.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

  std::size_t size() const noexcept { return n_; }

  bool get(std::size_t i, std::size_t j) const noexcept {
    return (bits_[i * words_ + j / 64] >> (j % 64)) & 1U;
  }
  void set(std::size_t i, std::size_t j, bool value = true) noexcept {
    auto& w = bits_[i * words_ + j / 64];
    const std::uint64_t mask = std::uint64_t{1} << (j % 64);
    w = value ? (w | mask) : (w & ~mask);
  }

  std::span<const std::uint64_t> row(std::size_t i) const noexcept {
    return {bits_.data() + i * words_, words_};
  }

  std::size_t row_count(std::size_t i) const noexcept {
    std::size_t c = 0;
    for (auto w : row(i)) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool rows_equal(std::size_t i, std::size_t j) const noexcept {
    const auto a = row(i);
    const auto b = row(j);
    for (std::size_t k = 0; k < words_; ++k)
      if (a[k] != b[k]) return false;
    return true;
  }

  template <typename F>
  void for_each_in_row(std::size_t i, F&& visit) const {
    const auto r = row(i);
    for (std::size_t k = 0; k < words_; ++k) {
      std::uint64_t w = r[k];
      while (w != 0) {
        visit(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

}  // namespace zdg
