#pragma once

#include <chrono>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"

#include "adolg/hecke.hpp"
#include "adolg/invariant.hpp"

namespace adolg {

// ---------------------------------------------------------------------------
// Matrix identities

struct IdentityCheck {
  std::string name;
  bool passed = false;
  std::size_t residual_nonzeros = 0;  // nonzero entries of LHS - RHS
  std::string detail;
};

template <class Ring>
SquareMatrix<Ring> cubic_residual(const SquareMatrix<Ring>& r, const CubicRelation<Ring>& c,
                                  const Ring& one = RingTraits<Ring>::one()) {
  auto id = SquareMatrix<Ring>::identity(r.size(), one);
  auto r2 = r * r;
  return r2 * r - c.c2 * r2 - c.c1 * r - c.c0 * id;
}

// (R (x) I)(I (x) R)(R (x) I) - (I (x) R)(R (x) I)(I (x) R) on V^(x)3.
template <class Ring>
SquareMatrix<Ring> yang_baxter_residual(const LocalOperator<Ring>& r) {
  const auto d = static_cast<std::size_t>(r.dim());
  auto m = r.to_matrix();
  auto left = m.kron_identity_right(d);
  auto right = m.kron_identity_left(d);
  return left * right * left - right * left * right;
}

// Ishii's three-strand relation
//   (Q0 (x) I)(I (x) Q1)(Q1 (x) I) = k (Q0 (x) I)(I (x) Q0)(Q1 (x) I),
//   k = t1 (t0 - 1) / (t0 (1 - t1)),
// with Q0 = q0 / den0 and Q1 = q1 / den1 (denominator-cleared operators).
// Multiplying through by den0^2 den1^2 t0 (1 - t1) gives the polynomial form
//   den0 t0 (1 - t1) q0 q1' q1  =  den1 t1 (t0 - 1) q0 q0' q1
// whose residual is returned. `swap_control` swaps q0 and q1 in the first
// factor of the left side (a negative control that must fail).
template <class Ring>
SquareMatrix<Ring> ishii_residual(const QOperators<Ring>& q, const Ring& t0, const Ring& t1,
                                  bool swap_control = false, const Ring& one = RingTraits<Ring>::one()) {
  const auto d = static_cast<std::size_t>(q.q0.dim());
  auto q0 = q.q0.to_matrix();
  auto q1 = q.q1.to_matrix();
  auto q0_left = q0.kron_identity_right(d), q0_right = q0.kron_identity_left(d);
  auto q1_left = q1.kron_identity_right(d), q1_right = q1.kron_identity_left(d);
  auto lhs_first = swap_control ? q1_left : q0_left;
  auto lhs = (q.q0_denominator * t0 * (one - t1)) * (lhs_first * q1_right * q1_left);
  auto rhs = (q.q1_denominator * t1 * (t0 - one)) * (q0_left * q0_right * q1_left);
  return lhs - rhs;
}

template <class Ring>
IdentityCheck identity_report(std::string name, const SquareMatrix<Ring>& residual) {
  IdentityCheck c;
  c.name = std::move(name);
  c.residual_nonzeros = residual.nonzeros();
  c.passed = c.residual_nonzeros == 0;
  c.detail = c.passed ? "zero residual" : std::to_string(c.residual_nonzeros) + " nonzero residual entries";
  return c;
}

IdentityCheck check_cubic_ado();
IdentityCheck check_skein_lg();
IdentityCheck check_skein_lg_specialized();
IdentityCheck check_cubic_coefficients_match();
IdentityCheck check_yang_baxter_ado();
IdentityCheck check_yang_baxter_lg();
IdentityCheck check_ishii_generic(bool swap_control = false);
IdentityCheck check_ishii_ado(bool swap_control = false);
// Every identity above, in a fixed order.
std::vector<IdentityCheck> check_relations();

// ---------------------------------------------------------------------------
// Prefix caching

// Action of a family's fixed word on every input basis state of the column
// set, together with the 4-strand starting vectors obtained by closing the
// fifth strand with h. Suffix words only touch strands 1..4, so
//   O[a,b] = sum_{m1..m3} h(m) (S K_{b,m})[(a, m)]
// where K_{b,m}[x] = sum_{m4} h(m4) (P e_{(b,m,m4)})[(x, m4)].
template <class Ring>
class PrefixCache {
public:
  PrefixCache(Family family, const BraidWord& prefix, const Representation<Ring>& rep, bool all_columns)
      : family_(family), prefix_(prefix), rep_(&rep) {
    if (prefix.strands() != 5) throw std::invalid_argument("prefix caching expects five-strand fixed words");
    const int d = rep.dim();
    const std::size_t closed5 = int_pow(static_cast<std::size_t>(d), 4);
    const std::size_t closed4 = int_pow(static_cast<std::size_t>(d), 3);
    const int columns = all_columns ? d : 1;
    for (int b = 0; b < columns; ++b) {
      for (std::size_t m = 0; m < closed5; ++m) {
        std::size_t input = static_cast<std::size_t>(b) * closed5 + m;
        actions_.emplace(input, braid_action(prefix, StateVector<Ring>::basis(5, d, input), rep));
      }
    }
    for (int b = 0; b < columns; ++b) {
      for (std::size_t m = 0; m < closed4; ++m) {
        StateVector<Ring> k(4, d);
        for (int m4 = 0; m4 < d; ++m4) {
          std::size_t input = (static_cast<std::size_t>(b) * closed4 + m) * static_cast<std::size_t>(d) +
                              static_cast<std::size_t>(m4);
          const auto& evolved = actions_.at(input);
          const Ring& h = rep.h.values[static_cast<std::size_t>(m4)];
          for (std::size_t x = 0; x < k.size(); ++x) {
            const Ring& amp = evolved[x * static_cast<std::size_t>(d) + static_cast<std::size_t>(m4)];
            if (!amp.is_zero()) k[x].add_product(h, amp);
          }
        }
        reduced_.push_back(std::move(k));
      }
    }
    closed4_ = closed4;
  }

  Family family() const { return family_; }
  const BraidWord& prefix() const { return prefix_; }
  const std::map<std::size_t, StateVector<Ring>>& actions() const { return actions_; }

  ColumnSource<Ring> column_source() const {
    return [this](int b, std::size_t m) { return reduced_.at(static_cast<std::size_t>(b) * closed4_ + m); };
  }

  // Recomputes the prefix action on `samples` cached inputs from scratch.
  bool spot_check(std::size_t samples, std::uint64_t seed) const {
    std::vector<std::size_t> keys;
    for (const auto& [k, v] : actions_) keys.push_back(k);
    if (keys.empty()) return true;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, keys.size() - 1);
    for (std::size_t i = 0; i < samples; ++i) {
      std::size_t input = keys[pick(rng)];
      if (braid_action(prefix_, StateVector<Ring>::basis(5, rep_->dim(), input), *rep_) != actions_.at(input)) {
        return false;
      }
    }
    return true;
  }

  // Scalar of prefix * suffix, where `suffix` is a 4-strand word.
  Ring evaluate(const BraidWord& suffix, const TraceOptions& opt) const {
    if (suffix.strands() != 4) throw std::invalid_argument("cached suffix must be a 4-strand word");
    TraceOptions o = opt;
    o.open = OpenStrand::first;
    return detail::extract_scalar(open_strand_operator(suffix, *rep_, o, column_source()), opt.paranoid,
                                  prefix_ * suffix.embedded(5));
  }

private:
  Family family_;
  BraidWord prefix_;
  const Representation<Ring>* rep_;
  std::map<std::size_t, StateVector<Ring>> actions_;
  std::vector<StateVector<Ring>> reduced_;
  std::size_t closed4_ = 0;
};

// ---------------------------------------------------------------------------
// Sweeps

struct SweepOptions {
  int jobs = 0;                // <= 0: default worker count
  bool paranoid = false;
  bool use_prefix_cache = true;
  double audit_fraction = 0.01;  // share of words also run through generic LG
  bool progress = false;         // progress lines on stderr
};

struct SweepEntry {
  Family family;
  std::size_t index;
  BraidWord braid;
  int components;
  LaurentPoly1 ado3;
  LaurentPoly1 lg_spec;
  bool equal;
  LaurentPoly1 diff;  // ado3 - lg_spec
  bool audited = false;
  bool audit_passed = true;
};

struct FamilySummary {
  std::size_t total = 0;
  std::size_t equal = 0;
  std::size_t audited = 0;
  std::size_t audit_failures = 0;
};

struct SweepReport {
  std::vector<SweepEntry> entries;
  std::map<std::string, FamilySummary> summary;  // by family tag
  double seconds = 0;

  bool all_equal() const;
  bool audits_passed() const;
};

SweepReport run_equality_sweep(const std::vector<CheckWord>& words, const SweepOptions& opt);

// ---------------------------------------------------------------------------
// Values at t = 1, t = w and symmetry

struct ValueCheck {
  std::string braid;
  std::string detail;
};

struct PropertyReport {
  std::string name;
  std::size_t checked = 0;
  std::vector<ValueCheck> failures;
  bool passed() const { return failures.empty(); }
};

// Knots (one component) take the value 1 at t = 1 and t = w; links take 0.
PropertyReport check_corollary(const std::vector<SweepEntry>& entries);
// P(t) = P(w / t).
bool is_almost_symmetric(const LaurentPoly1& p);
PropertyReport check_symmetry(const std::vector<SweepEntry>& entries);

// ADO-3 values only (no Links-Gould), for the value and symmetry suites.
std::vector<SweepEntry> compute_ado3_values(const std::vector<CheckWord>& words, const SweepOptions& opt);

// ---------------------------------------------------------------------------
// Reports

nlohmann::json to_json(const IdentityCheck& c);
nlohmann::json to_json(const SweepReport& r, bool include_timing = true);
nlohmann::json to_json(const PropertyReport& r);

}  // namespace adolg
