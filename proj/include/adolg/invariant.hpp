#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "adolg/braid.hpp"
#include "adolg/matrix.hpp"
#include "adolg/rep.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace adolg {

class ProportionalityError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class IntegralityError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Multi-indices over {0..d-1}^n are packed as sum_s i_s d^(n-s): strand 1
// is the most significant digit, matching v_i (x) v_j -> d*i + j.
inline std::size_t int_pow(std::size_t base, int exp) {
  std::size_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

// Amplitudes over the tensor basis of V^(x)n. Storage is a dense array with
// zero entries standing for absent keys; nonzero() enumerates the support.
template <class Ring>
class StateVector {
public:
  StateVector() = default;
  StateVector(int strands, int dim) : strands_(strands), dim_(dim), amps_(int_pow(static_cast<std::size_t>(dim), strands)) {}

  static StateVector basis(int strands, int dim, std::size_t index, const Ring& one = RingTraits<Ring>::one()) {
    StateVector s(strands, dim);
    s.amps_.at(index) = one;
    return s;
  }

  int strands() const { return strands_; }
  int dim() const { return dim_; }
  std::size_t size() const { return amps_.size(); }
  const Ring& operator[](std::size_t index) const { return amps_[index]; }
  Ring& operator[](std::size_t index) { return amps_[index]; }

  std::vector<std::size_t> nonzero() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < amps_.size(); ++i) {
      if (!amps_[i].is_zero()) out.push_back(i);
    }
    return out;
  }

  friend bool operator==(const StateVector& a, const StateVector& b) {
    return a.strands_ == b.strands_ && a.dim_ == b.dim_ && a.amps_ == b.amps_;
  }

private:
  int strands_ = 0;
  int dim_ = 0;
  std::vector<Ring> amps_;
};

// id^(k-1) (x) op (x) id^(n-k-1) applied to `state`, 1 <= k <= n-1.
template <class Ring>
StateVector<Ring> apply_local(const StateVector<Ring>& state, const LocalOperator<Ring>& op, int position) {
  const int n = state.strands();
  const int d = state.dim();
  if (op.dim() != d) throw std::invalid_argument("operator dimension does not match state");
  if (position < 1 || position > n - 1) {
    throw std::out_of_range("crossing position " + std::to_string(position) + " outside 1.." + std::to_string(n - 1));
  }
  const std::size_t stride = int_pow(static_cast<std::size_t>(d), n - position - 1);
  const std::size_t pairs = static_cast<std::size_t>(d * d);
  StateVector<Ring> out(n, d);
  for (std::size_t idx = 0; idx < state.size(); ++idx) {
    const Ring& amp = state[idx];
    if (amp.is_zero()) continue;
    std::size_t p = (idx / stride) % pairs;
    std::size_t base = idx - p * stride;
    for (const auto& img : op.column(static_cast<int>(p))) {
      out[base + static_cast<std::size_t>(img.row) * stride].add_product(img.value, amp);
    }
  }
  return out;
}

// Applies the letters in order (first letter first): k > 0 uses R at
// position k, k < 0 uses R^-1 at position |k|.
template <class Ring>
StateVector<Ring> braid_action(const BraidWord& b, StateVector<Ring> state, const Representation<Ring>& rep) {
  if (state.strands() != b.strands()) throw std::invalid_argument("state strand count differs from braid");
  for (int k : b.word()) state = apply_local(state, k > 0 ? rep.r : rep.r_inv, k > 0 ? k : -k);
  return state;
}

enum class OpenStrand { first, last };

struct TraceOptions {
  // Compute every column of the open-strand operator and require O = c Id.
  bool paranoid = false;
  bool parallel = true;
  // Which strand stays open; the remaining n-1 strands are closed with h.
  OpenStrand open = OpenStrand::first;
};

// Produces the starting vector for input basis (open index b, closed
// multi-index m). The default is the basis vector itself.
template <class Ring>
using ColumnSource = std::function<StateVector<Ring>(int b, std::size_t m)>;

namespace detail {

template <class Ring>
struct TraceLayout {
  int strands;
  int dim;
  OpenStrand open;
  std::size_t closed_count;  // d^(n-1)

  std::size_t index(int a, std::size_t m) const {
    return open == OpenStrand::first ? static_cast<std::size_t>(a) * closed_count + m
                                     : m * static_cast<std::size_t>(dim) + static_cast<std::size_t>(a);
  }
};

// prod_j h[m_j] for every closed multi-index m.
template <class Ring>
std::vector<Ring> closing_weights(const DiagonalOperator<Ring>& h, int closed_strands) {
  std::vector<Ring> w{RingTraits<Ring>::one()};
  for (int s = 0; s < closed_strands; ++s) {
    std::vector<Ring> next;
    next.reserve(w.size() * h.values.size());
    for (const auto& prefix : w) {
      for (const auto& hv : h.values) next.push_back(prefix * hv);
    }
    w = std::move(next);
  }
  return w;
}

// Accumulates column b of the open-strand operator for one closed index m.
template <class Ring>
void accumulate_column(SquareMatrix<Ring>& acc, const TraceLayout<Ring>& layout, const StateVector<Ring>& evolved,
                       int b, std::size_t m, const Ring& weight) {
  for (int a = 0; a < layout.dim; ++a) {
    const Ring& amp = evolved[layout.index(a, m)];
    if (!amp.is_zero()) acc(static_cast<std::size_t>(a), static_cast<std::size_t>(b)).add_product(weight, amp);
  }
}

template <class Ring>
Ring extract_scalar(const SquareMatrix<Ring>& o, bool paranoid, const BraidWord& b) {
  const std::size_t d = o.size();
  for (std::size_t a = 1; a < d; ++a) {
    if (!o(a, 0).is_zero()) {
      throw ProportionalityError("open-strand operator of " + b.to_string() + " is not scalar: O[" +
                                 std::to_string(a) + ",0] = " + to_text(o(a, 0)));
    }
  }
  if (paranoid) {
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t c = 0; c < d; ++c) {
        bool ok = r == c ? o(r, c) == o(0, 0) : o(r, c).is_zero();
        if (!ok) {
          throw ProportionalityError("open-strand operator of " + b.to_string() + " is not c*Id at (" +
                                     std::to_string(r) + "," + std::to_string(c) + ")");
        }
      }
    }
  }
  return o(0, 0);
}

}  // namespace detail

// Serial reference: the h-weighted partial trace over the closed strands,
// one state evolution per input column.
template <class Ring>
SquareMatrix<Ring> open_strand_operator_serial(const BraidWord& b, const Representation<Ring>& rep,
                                               const TraceOptions& opt, const ColumnSource<Ring>& source = {}) {
  const int n = b.strands();
  const int d = rep.dim();
  detail::TraceLayout<Ring> layout{n, d, opt.open, int_pow(static_cast<std::size_t>(d), n - 1)};
  auto weights = detail::closing_weights(rep.h, n - 1);
  const int columns = opt.paranoid ? d : 1;
  SquareMatrix<Ring> o(static_cast<std::size_t>(d));
  for (int col = 0; col < columns; ++col) {
    for (std::size_t m = 0; m < layout.closed_count; ++m) {
      StateVector<Ring> start = source ? source(col, m) : StateVector<Ring>::basis(n, d, layout.index(col, m));
      auto evolved = braid_action(b, std::move(start), rep);
      detail::accumulate_column(o, layout, evolved, col, m, weights[m]);
    }
  }
  return o;
}

// OpenMP version: input columns are independent, each thread sums into a
// private accumulator and the exact partial sums are merged at the end.
template <class Ring>
SquareMatrix<Ring> open_strand_operator_parallel(const BraidWord& b, const Representation<Ring>& rep,
                                                 const TraceOptions& opt, const ColumnSource<Ring>& source = {}) {
  const int n = b.strands();
  const int d = rep.dim();
  detail::TraceLayout<Ring> layout{n, d, opt.open, int_pow(static_cast<std::size_t>(d), n - 1)};
  auto weights = detail::closing_weights(rep.h, n - 1);
  const int columns = opt.paranoid ? d : 1;
  const long total = static_cast<long>(columns) * static_cast<long>(layout.closed_count);
  SquareMatrix<Ring> o(static_cast<std::size_t>(d));
  std::exception_ptr failure;
#pragma omp parallel
  {
    SquareMatrix<Ring> local(static_cast<std::size_t>(d));
#pragma omp for schedule(dynamic, 1)
    for (long job = 0; job < total; ++job) {
      try {
        int col = static_cast<int>(job / static_cast<long>(layout.closed_count));
        std::size_t m = static_cast<std::size_t>(job % static_cast<long>(layout.closed_count));
        StateVector<Ring> start = source ? source(col, m) : StateVector<Ring>::basis(n, d, layout.index(col, m));
        auto evolved = braid_action(b, std::move(start), rep);
        detail::accumulate_column(local, layout, evolved, col, m, weights[m]);
      } catch (...) {
#pragma omp critical(adolg_trace_failure)
        if (!failure) failure = std::current_exception();
      }
    }
#pragma omp critical(adolg_trace_merge)
    o += local;
  }
  if (failure) std::rethrow_exception(failure);
  return o;
}

template <class Ring>
SquareMatrix<Ring> open_strand_operator(const BraidWord& b, const Representation<Ring>& rep, const TraceOptions& opt,
                                        const ColumnSource<Ring>& source = {}) {
  return opt.parallel ? open_strand_operator_parallel(b, rep, opt, source)
                      : open_strand_operator_serial(b, rep, opt, source);
}

// The scalar c with O_b = c Id. Throws ProportionalityError if the computed
// columns are not those of a scalar operator.
template <class Ring>
Ring partial_trace_scalar(const BraidWord& b, const Representation<Ring>& rep, const TraceOptions& opt = {},
                          const ColumnSource<Ring>& source = {}) {
  return detail::extract_scalar(open_strand_operator(b, rep, opt, source), opt.paranoid, b);
}

template <class Value>
struct InvariantValue {
  Value value;
  BraidWord braid;
  bool proportionality_checked = false;
};

InvariantValue<LaurentPoly1> compute_ado3(const BraidWord& b, const TraceOptions& opt = {});
// Generic Links-Gould value in s0 = sqrt(t0), s1 = sqrt(t1); throws
// IntegralityError unless it is Y-free with only even exponents.
InvariantValue<LaurentPoly2> compute_lg(const BraidWord& b, const TraceOptions& opt = {});
// Links-Gould at t0 = t^2, t1 = w^2 t^-2, evaluated directly in the specialized ring.
InvariantValue<LaurentPoly1> compute_lg_specialized(const BraidWord& b, const TraceOptions& opt = {});

// Y-free even part of an extension-ring value, or IntegralityError.
LaurentPoly1 require_y_free(const SpecScalar& x, const BraidWord& b);
LaurentPoly2 require_integral(const GenericScalar& x, const BraidWord& b);

// Sets the worker count used by the OpenMP kernels (<= 0 keeps the default).
void set_worker_count(int jobs);
int worker_count();

}  // namespace adolg
