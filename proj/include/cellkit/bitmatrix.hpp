#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace cellkit {

/// Dense square bit matrix, row-major.
class BitMatrix {
public:
  BitMatrix() = default;
  explicit BitMatrix(std::size_t n)
      : n_(n), stride_((n + 63) / 64), bits_(n * stride_, 0) {}

  std::size_t size() const { return n_; }

  bool get(std::size_t r, std::size_t c) const {
    return (bits_[r * stride_ + c / 64] >> (c % 64)) & 1u;
  }
  void set(std::size_t r, std::size_t c) {
    bits_[r * stride_ + c / 64] |= std::uint64_t(1) << (c % 64);
  }
  /// row r |= row s
  void or_row(std::size_t r, std::size_t s) {
    std::uint64_t* a = &bits_[r * stride_];
    const std::uint64_t* b = &bits_[s * stride_];
    for (std::size_t i = 0; i < stride_; ++i) a[i] |= b[i];
  }

private:
  std::size_t n_ = 0;
  std::size_t stride_ = 0;
  std::vector<std::uint64_t> bits_;
};

}  // namespace cellkit
