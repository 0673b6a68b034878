#include "adolg/invariant.hpp"

namespace adolg {

LaurentPoly1 require_y_free(const SpecScalar& x, const BraidWord& b) {
  if (!x.odd().is_zero()) {
    throw IntegralityError("specialized Links-Gould value of " + b.to_string() + " has a Y component");
  }
  return x.even();
}

LaurentPoly2 require_integral(const GenericScalar& x, const BraidWord& b) {
  if (!x.odd().is_zero()) throw IntegralityError("Links-Gould value of " + b.to_string() + " has a Y component");
  if (!x.even().all_exponents_even()) {
    throw IntegralityError("Links-Gould value of " + b.to_string() + " has half-integer powers of t0/t1");
  }
  return x.even();
}

InvariantValue<LaurentPoly1> compute_ado3(const BraidWord& b, const TraceOptions& opt) {
  return {partial_trace_scalar(b, ado3_representation(), opt), b, true};
}

InvariantValue<LaurentPoly2> compute_lg(const BraidWord& b, const TraceOptions& opt) {
  return {require_integral(partial_trace_scalar(b, lg_representation(), opt), b), b, true};
}

InvariantValue<LaurentPoly1> compute_lg_specialized(const BraidWord& b, const TraceOptions& opt) {
  return {require_y_free(partial_trace_scalar(b, lg_specialized_representation(), opt), b), b, true};
}

void set_worker_count(int jobs) {
#ifdef _OPENMP
  if (jobs > 0) omp_set_num_threads(jobs);
#else
  (void)jobs;
#endif
}

int worker_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace adolg
