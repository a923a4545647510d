#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "grpring/modular_ring.hpp"

namespace grpring {

using Vector = std::vector<Residue>;

/// Dense row-major matrix over F_p.
class FpMatrix {
 public:
  FpMatrix(std::uint64_t p, std::size_t rows, std::size_t cols)
      : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::uint64_t prime() const noexcept { return p_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Residue& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Residue operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Residue> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

 private:
  std::uint64_t p_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Residue> data_;
};

/// Reduced row-echelon basis of a subspace of F_p^width, kept canonical under
/// insertion: rows are sorted by pivot, each pivot is 1 and is the only
/// nonzero entry of its column. Two subspaces are equal iff their bases are.
class EchelonBasis {
 public:
  EchelonBasis(std::uint64_t p, std::size_t width) : p_(p), width_(width) {}

  std::uint64_t prime() const noexcept { return p_; }
  std::size_t width() const noexcept { return width_; }
  std::size_t dimension() const noexcept { return rows_.size(); }
  const std::vector<Vector>& rows() const noexcept { return rows_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  /// Adds v to the span; returns true when the dimension grew.
  bool insert(std::span<const Residue> v);
  /// Normal form of v modulo the span (zero at every pivot column).
  Vector reduce(std::span<const Residue> v) const;
  bool contains(std::span<const Residue> v) const;
  bool contains(const EchelonBasis& other) const;

  friend bool operator==(const EchelonBasis& a, const EchelonBasis& b) {
    return a.p_ == b.p_ && a.width_ == b.width_ && a.rows_ == b.rows_;
  }

 private:
  void reduce_in_place(Vector& v) const;

  std::uint64_t p_;
  std::size_t width_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

std::size_t rank(const FpMatrix& m);

/// Basis of {x : m x = 0}, echelonized.
EchelonBasis null_space(const FpMatrix& m);

/// Row space of m.
EchelonBasis row_space(const FpMatrix& m);

}  // namespace grpring
