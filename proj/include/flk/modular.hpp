#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "flk/error.hpp"

namespace flk {

/// Largest supported modulus; keeps every product of two residues below 2^32
/// and dot products of length <= 2^16 inside 64 bits.
inline constexpr std::uint32_t kMaxModulus = 1u << 16;

inline std::uint32_t mod_reduce(std::int64_t v, std::uint32_t m) {
  const std::int64_t r = v % static_cast<std::int64_t>(m);
  return static_cast<std::uint32_t>(r < 0 ? r + m : r);
}

/// Dense square matrix over Z_m.
class ModMatrix {
 public:
  ModMatrix(std::size_t dim, std::uint32_t modulus) : dim_(dim), modulus_(modulus), entries_(dim * dim, 0) {
    if (modulus < 2) throw Error(ErrorCode::OutOfRange, "modulus must be >= 2");
    if (modulus > kMaxModulus) {
      throw Error(ErrorCode::ModulusTooLarge, "modulus " + std::to_string(modulus) + " exceeds 65536");
    }
  }

  ModMatrix(std::size_t dim, std::uint32_t modulus, const std::vector<std::int64_t>& row_major)
      : ModMatrix(dim, modulus) {
    if (row_major.size() != dim * dim) throw Error(ErrorCode::OutOfRange, "entry count does not match dimension");
    for (std::size_t k = 0; k < row_major.size(); ++k) entries_[k] = mod_reduce(row_major[k], modulus);
  }

  static ModMatrix identity(std::size_t dim, std::uint32_t modulus) {
    ModMatrix id(dim, modulus);
    for (std::size_t k = 0; k < dim; ++k) id.set(k, k, 1);
    return id;
  }

  std::size_t dim() const noexcept { return dim_; }
  std::uint32_t modulus() const noexcept { return modulus_; }
  const std::vector<std::uint32_t>& entries() const noexcept { return entries_; }

  std::uint32_t operator()(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }
  void set(std::size_t row, std::size_t col, std::int64_t value) {
    entries_[row * dim_ + col] = mod_reduce(value, modulus_);
  }

  friend ModMatrix operator*(const ModMatrix& a, const ModMatrix& b) {
    a.require_compatible(b);
    ModMatrix out(a.dim_, a.modulus_);
    for (std::size_t r = 0; r < a.dim_; ++r) {
      for (std::size_t k = 0; k < a.dim_; ++k) {
        const std::uint64_t x = a(r, k);
        if (x == 0) continue;
        for (std::size_t c = 0; c < a.dim_; ++c) {
          out.entries_[r * a.dim_ + c] =
              static_cast<std::uint32_t>((out.entries_[r * a.dim_ + c] + x * b(k, c)) % a.modulus_);
        }
      }
    }
    return out;
  }

  friend bool operator==(const ModMatrix&, const ModMatrix&) = default;

 private:
  void require_compatible(const ModMatrix& o) const {
    if (o.dim_ != dim_ || o.modulus_ != modulus_) {
      throw Error(ErrorCode::StrandMismatch, "matrix dimension or modulus mismatch");
    }
  }

  std::size_t dim_;
  std::uint32_t modulus_;
  std::vector<std::uint32_t> entries_;
};

/// Kronecker product; the left factor indexes the high-order part of the basis.
inline ModMatrix kron(const ModMatrix& a, const ModMatrix& b) {
  if (a.modulus() != b.modulus()) throw Error(ErrorCode::StrandMismatch, "modulus mismatch in kron");
  const std::size_t n = a.dim() * b.dim();
  ModMatrix out(n, a.modulus());
  for (std::size_t ar = 0; ar < a.dim(); ++ar)
    for (std::size_t ac = 0; ac < a.dim(); ++ac) {
      const std::uint64_t x = a(ar, ac);
      if (x == 0) continue;
      for (std::size_t br = 0; br < b.dim(); ++br)
        for (std::size_t bc = 0; bc < b.dim(); ++bc)
          out.set(ar * b.dim() + br, ac * b.dim() + bc, static_cast<std::int64_t>((x * b(br, bc)) % a.modulus()));
    }
  return out;
}

}  // namespace flk
