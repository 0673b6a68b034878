#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "adolg/ring.hpp"

namespace adolg {

// Multiplicative identity for each coefficient ring. Extension rings carry
// their canonical modulus.
template <class Ring>
struct RingTraits {
  static Ring one() { return Ring(1); }
};
template <>
struct RingTraits<GenericScalar> {
  static GenericScalar one() { return GenericScalar::constant(1, generic_modulus()); }
};
template <>
struct RingTraits<SpecScalar> {
  static SpecScalar one() { return SpecScalar::constant(1, specialized_modulus()); }
};

// Dense square matrix over an exact ring, row-major. Products skip zero
// entries, so sparse operands stay cheap.
template <class Ring>
class SquareMatrix {
public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t n) : n_(n), data_(n * n) {}

  static SquareMatrix identity(std::size_t n, const Ring& one = RingTraits<Ring>::one()) {
    SquareMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  std::size_t size() const { return n_; }
  Ring& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
  const Ring& operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }

  bool is_zero() const {
    for (const auto& x : data_) {
      if (!x.is_zero()) return false;
    }
    return true;
  }
  std::size_t nonzeros() const {
    std::size_t k = 0;
    for (const auto& x : data_) k += x.is_zero() ? 0 : 1;
    return k;
  }

  SquareMatrix& operator+=(const SquareMatrix& rhs) {
    check(rhs);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
    return *this;
  }
  SquareMatrix& operator-=(const SquareMatrix& rhs) {
    check(rhs);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
    return *this;
  }
  friend SquareMatrix operator+(SquareMatrix a, const SquareMatrix& b) { return a += b; }
  friend SquareMatrix operator-(SquareMatrix a, const SquareMatrix& b) { return a -= b; }

  friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
    a.check(b);
    std::size_t n = a.n_;
    std::vector<std::vector<std::size_t>> row_nz(n);
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t j = 0; j < n; ++j) {
        if (!b(k, j).is_zero()) row_nz[k].push_back(j);
      }
    }
    SquareMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        const Ring& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j : row_nz[k]) out(i, j).add_product(aik, b(k, j));
      }
    }
    return out;
  }

  friend SquareMatrix operator*(const Ring& s, const SquareMatrix& m) {
    SquareMatrix out(m.n_);
    if (s.is_zero()) return out;
    for (std::size_t i = 0; i < m.data_.size(); ++i) {
      if (!m.data_[i].is_zero()) out.data_[i] = s * m.data_[i];
    }
    return out;
  }

  friend bool operator==(const SquareMatrix& a, const SquareMatrix& b) { return a.n_ == b.n_ && a.data_ == b.data_; }
  friend bool operator!=(const SquareMatrix& a, const SquareMatrix& b) { return !(a == b); }

  // Kronecker products with an identity of size k: (this (x) I_k) and (I_k (x) this).
  SquareMatrix kron_identity_right(std::size_t k) const {
    SquareMatrix out(n_ * k);
    for (std::size_t r = 0; r < n_; ++r) {
      for (std::size_t c = 0; c < n_; ++c) {
        const Ring& v = (*this)(r, c);
        if (v.is_zero()) continue;
        for (std::size_t i = 0; i < k; ++i) out(r * k + i, c * k + i) = v;
      }
    }
    return out;
  }
  SquareMatrix kron_identity_left(std::size_t k) const {
    SquareMatrix out(n_ * k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t r = 0; r < n_; ++r) {
        for (std::size_t c = 0; c < n_; ++c) {
          const Ring& v = (*this)(r, c);
          if (!v.is_zero()) out(i * n_ + r, i * n_ + c) = v;
        }
      }
    }
    return out;
  }

  // Row-major matrix of canonical entry strings, one row per line, entries
  // separated by " | ".
  std::string dump() const {
    std::string s;
    for (std::size_t r = 0; r < n_; ++r) {
      for (std::size_t c = 0; c < n_; ++c) {
        if (c) s += " | ";
        s += to_text((*this)(r, c));
      }
      s += '\n';
    }
    return s;
  }

private:
  void check(const SquareMatrix& rhs) const {
    if (n_ != rhs.n_) throw std::invalid_argument("matrix size mismatch");
  }

  std::size_t n_ = 0;
  std::vector<Ring> data_;
};

}  // namespace adolg
