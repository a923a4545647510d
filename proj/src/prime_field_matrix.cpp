#include "grpring/prime_field_matrix.hpp"

#include <algorithm>

namespace grpring {

namespace {

Residue inv_mod_prime(Residue a, std::uint64_t p) {
  Residue result = 1, base = a % p;
  std::uint64_t e = p - 2;
  while (e) {
    if (e & 1U) result = result * base % p;
    base = base * base % p;
    e >>= 1U;
  }
  return result;
}

// dst -= factor * src, entries mod p.
void axpy(Vector& dst, std::span<const Residue> src, Residue factor, std::uint64_t p) {
  if (factor == 0) return;
  const Residue neg = p - factor;
  for (std::size_t i = 0; i < dst.size(); ++i)
    if (src[i]) dst[i] = (dst[i] + neg * src[i]) % p;
}

}  // namespace

void EchelonBasis::reduce_in_place(Vector& v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) axpy(v, rows_[i], v[pivots_[i]], p_);
}

Vector EchelonBasis::reduce(std::span<const Residue> v) const {
  if (v.size() != width_) throw Error(Errc::incompatible_operands, "vector width does not match subspace");
  Vector w;
  w.reserve(width_);
  for (auto x : v) w.push_back(x % p_);
  reduce_in_place(w);
  return w;
}

bool EchelonBasis::contains(std::span<const Residue> v) const {
  const auto w = reduce(v);
  return std::all_of(w.begin(), w.end(), [](Residue x) { return x == 0; });
}

bool EchelonBasis::contains(const EchelonBasis& other) const {
  return std::all_of(other.rows_.begin(), other.rows_.end(), [&](const Vector& r) { return contains(r); });
}

bool EchelonBasis::insert(std::span<const Residue> v) {
  Vector w = reduce(v);
  const auto it = std::find_if(w.begin(), w.end(), [](Residue x) { return x != 0; });
  if (it == w.end()) return false;
  const auto pivot = static_cast<std::size_t>(it - w.begin());
  const Residue scale = inv_mod_prime(*it, p_);
  for (auto& x : w) x = x * scale % p_;
  for (auto& r : rows_) axpy(r, w, r[pivot], p_);
  const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, pivot);
  rows_.insert(rows_.begin() + pos, std::move(w));
  return true;
}

EchelonBasis row_space(const FpMatrix& m) {
  EchelonBasis basis(m.prime(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) basis.insert(m.row(r));
  return basis;
}

std::size_t rank(const FpMatrix& m) { return row_space(m).dimension(); }

EchelonBasis null_space(const FpMatrix& m) {
  const auto p = m.prime();
  const auto rs = row_space(m);
  EchelonBasis kernel(p, m.cols());
  std::vector<char> is_pivot(m.cols(), 0);
  for (auto c : rs.pivots()) is_pivot[c] = 1;
  // One kernel vector per free column: set it to 1 and solve pivots from the RREF rows.
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t i = 0; i < rs.dimension(); ++i) {
      const Residue a = rs.rows()[i][free];
      v[rs.pivots()[i]] = a == 0 ? 0 : p - a;
    }
    kernel.insert(v);
  }
  return kernel;
}

}  // namespace grpring
