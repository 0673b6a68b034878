#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "adolg/matrix.hpp"
#include "adolg/ring.hpp"

namespace adolg {

// Sparse operator on V (x) V with dim V = d. Basis index of v_i (x) v_j is
// d*i + j; entry (row, col) is the coefficient of basis row in the image of
// basis col.
template <class Ring>
class LocalOperator {
public:
  struct Entry {
    int row;
    int col;
    Ring value;
  };
  struct Image {
    int row;
    Ring value;
  };

  LocalOperator() = default;
  LocalOperator(int dim, std::vector<Entry> entries) : dim_(dim) {
    if (dim < 1) throw std::invalid_argument("operator dimension must be positive");
    std::map<std::pair<int, int>, Ring> merged;
    for (auto& e : entries) {
      if (e.row < 0 || e.row >= size() || e.col < 0 || e.col >= size()) {
        throw std::out_of_range("operator entry (" + std::to_string(e.row) + "," + std::to_string(e.col) +
                                ") outside " + std::to_string(size()) + "x" + std::to_string(size()));
      }
      if (merged.count({e.row, e.col})) throw std::invalid_argument("duplicate operator entry");
      if (!e.value.is_zero()) merged.emplace(std::make_pair(e.row, e.col), std::move(e.value));
    }
    columns_.resize(static_cast<std::size_t>(size()));
    for (auto& [rc, v] : merged) {
      entries_.push_back({rc.first, rc.second, v});
      columns_[static_cast<std::size_t>(rc.second)].push_back({rc.first, v});
    }
  }

  static LocalOperator from_matrix(int dim, const SquareMatrix<Ring>& m) {
    if (m.size() != static_cast<std::size_t>(dim * dim)) throw std::invalid_argument("matrix size does not match dim^2");
    std::vector<Entry> entries;
    for (int r = 0; r < dim * dim; ++r) {
      for (int c = 0; c < dim * dim; ++c) {
        const Ring& v = m(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
        if (!v.is_zero()) entries.push_back({r, c, v});
      }
    }
    return LocalOperator(dim, std::move(entries));
  }

  int dim() const { return dim_; }
  int size() const { return dim_ * dim_; }
  const std::vector<Entry>& entries() const { return entries_; }
  // Nonzero images of each input basis vector, for the evolution kernels.
  const std::vector<Image>& column(int col) const { return columns_[static_cast<std::size_t>(col)]; }

  Ring at(int row, int col) const {
    for (const auto& img : column(col)) {
      if (img.row == row) return img.value;
    }
    return Ring();
  }

  SquareMatrix<Ring> to_matrix() const {
    SquareMatrix<Ring> m(static_cast<std::size_t>(size()));
    for (const auto& e : entries_) m(static_cast<std::size_t>(e.row), static_cast<std::size_t>(e.col)) = e.value;
    return m;
  }

  std::string dump() const { return to_matrix().dump(); }

private:
  int dim_ = 0;
  std::vector<Entry> entries_;
  std::vector<std::vector<Image>> columns_;
};

// The closing map h : V -> V, diagonal in the standard basis.
template <class Ring>
struct DiagonalOperator {
  std::vector<Ring> values;
  int dim() const { return static_cast<int>(values.size()); }
};

// R^3 = c2 R^2 + c1 R + c0 Id.
template <class Ring>
struct CubicRelation {
  Ring c2;
  Ring c1;
  Ring c0;
};

// Crossing operators plus closing map for one operator invariant.
template <class Ring>
struct Representation {
  LocalOperator<Ring> r;
  LocalOperator<Ring> r_inv;
  DiagonalOperator<Ring> h;
  int dim() const { return r.dim(); }
};

// Ishii's Q operators with the denominators t0 - t1 and t1 - t0 cleared:
// q0 = (t0 - t1) Q0 and q1 = (t1 - t0) Q1.
template <class Ring>
struct QOperators {
  LocalOperator<Ring> q0;
  LocalOperator<Ring> q1;
  Ring q0_denominator;
  Ring q1_denominator;
};

// {x; n} = prod_{k<n} {x - k} with {a} = w^a - w^-a, for x = shift (or
// lambda + shift when `with_lambda`, where w^lambda = t). {x; 0} = 1.
LaurentPoly1 q_pochhammer(int shift, bool with_lambda, int n);

LocalOperator<LaurentPoly1> build_ado3_r();
DiagonalOperator<LaurentPoly1> build_ado3_h();
CubicRelation<LaurentPoly1> ado3_cubic();

LocalOperator<GenericScalar> build_lg_r();
DiagonalOperator<GenericScalar> build_lg_h();
// R^3 = (t0 + t1 - 1) R^2 + (t0 + t1 - t0 t1) R - t0 t1 Id.
CubicRelation<GenericScalar> lg_cubic();

LocalOperator<SpecScalar> specialize(const LocalOperator<GenericScalar>& op);
DiagonalOperator<SpecScalar> specialize(const DiagonalOperator<GenericScalar>& h);
CubicRelation<SpecScalar> specialize(const CubicRelation<GenericScalar>& c);

// R^-1 = c0^-1 (R^2 - c2 R - c1 Id), checked against R R^-1 = Id.
template <class Ring>
LocalOperator<Ring> invert_r(const LocalOperator<Ring>& r, const CubicRelation<Ring>& cubic,
                             const Ring& one = RingTraits<Ring>::one()) {
  if (!cubic.c0.is_unit()) throw std::domain_error("cubic constant term is not a unit: " + to_text(cubic.c0));
  auto m = r.to_matrix();
  auto id = SquareMatrix<Ring>::identity(m.size(), one);
  auto inv = cubic.c0.inverse() * (m * m - cubic.c2 * m - cubic.c1 * id);
  if (m * inv != id || inv * m != id) {
    throw std::logic_error("R does not satisfy the supplied cubic relation; inverse check failed");
  }
  return LocalOperator<Ring>::from_matrix(r.dim(), inv);
}

template <class Ring>
QOperators<Ring> build_q_operators(const LocalOperator<Ring>& r, const LocalOperator<Ring>& r_inv, const Ring& t0,
                                   const Ring& t1, const Ring& one = RingTraits<Ring>::one()) {
  auto m = r.to_matrix();
  auto mi = r_inv.to_matrix();
  auto id = SquareMatrix<Ring>::identity(m.size(), one);
  Ring t0t1 = t0 * t1;
  auto q0 = t0 * m + (t0 * (one - t1)) * id - t0t1 * mi;
  auto q1 = t1 * m + (t1 * (one - t0)) * id - t0t1 * mi;
  return {LocalOperator<Ring>::from_matrix(r.dim(), q0), LocalOperator<Ring>::from_matrix(r.dim(), q1), t0 - t1,
          t1 - t0};
}

// Shared, lazily built operator tables (immutable; safe for concurrent reads).
const Representation<LaurentPoly1>& ado3_representation();
const Representation<GenericScalar>& lg_representation();
const Representation<SpecScalar>& lg_specialized_representation();

}  // namespace adolg
