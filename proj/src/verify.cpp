#include "adolg/verify.hpp"

#include <cmath>
#include <exception>
#include <iostream>
#include <memory>

namespace adolg {

namespace {

LaurentPoly1 ado_t0() { return LaurentPoly1::t(2); }
LaurentPoly1 ado_t1() { return LaurentPoly1::monomial(CycScalar::omega_pow(2), -2); }

GenericScalar generic(LaurentPoly2 p) { return GenericScalar::constant(std::move(p), generic_modulus()); }
SpecScalar lifted(LaurentPoly1 p) { return SpecScalar::constant(std::move(p), specialized_modulus()); }

CubicRelation<SpecScalar> lifted(const CubicRelation<LaurentPoly1>& c) {
  return {lifted(c.c2), lifted(c.c1), lifted(c.c0)};
}

std::size_t audit_stride(double fraction) {
  if (!(fraction > 0)) return 0;
  if (fraction >= 1) return 1;
  return static_cast<std::size_t>(std::ceil(1.0 / fraction));
}

// Runs body(i) for i in [0, count), in parallel unless jobs == 1; the first
// exception thrown by any iteration is rethrown after the loop.
template <class Body>
void for_each_index(std::size_t count, int jobs, Body&& body) {
  std::exception_ptr failure;
  const long n = static_cast<long>(count);
#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs > 0 ? jobs : worker_count()) if (jobs != 1)
  for (long i = 0; i < n; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(adolg_sweep_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

// Contiguous runs of words sharing a family, in input order.
std::vector<std::pair<std::size_t, std::size_t>> family_ranges(const std::vector<CheckWord>& words) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < words.size();) {
    std::size_t j = i;
    while (j < words.size() && words[j].family == words[i].family &&
           words[j].prefix == words[i].prefix) {
      ++j;
    }
    out.emplace_back(i, j);
    i = j;
  }
  return out;
}

bool cacheable(const CheckWord& w) { return w.prefix.strands() == 5 && w.suffix.strands() == 4; }

constexpr std::size_t kSpotChecks = 5;
constexpr std::uint64_t kSpotSeed = 20240613;

template <class Ring>
std::unique_ptr<PrefixCache<Ring>> make_cache(const CheckWord& w, const Representation<Ring>& rep, bool paranoid) {
  auto cache = std::make_unique<PrefixCache<Ring>>(w.family, w.prefix, rep, paranoid);
  if (!cache->spot_check(kSpotChecks, kSpotSeed)) {
    throw std::logic_error("prefix cache for " + family_tag(w.family) + " disagrees with a direct recomputation");
  }
  return cache;
}

SweepEntry make_entry(const CheckWord& w) {
  SweepEntry e{w.family, w.index, w.full, closure_info(w.full).components, {}, {}, false, {}, false, true};
  return e;
}

}  // namespace

// ---------------------------------------------------------------------------
// Matrix identities

IdentityCheck check_cubic_ado() {
  return identity_report("cubic relation (ADO-3)", cubic_residual(build_ado3_r().to_matrix(), ado3_cubic()));
}

IdentityCheck check_skein_lg() {
  return identity_report("skein relation (Links-Gould)", cubic_residual(build_lg_r().to_matrix(), lg_cubic()));
}

IdentityCheck check_skein_lg_specialized() {
  const auto r = specialize(build_lg_r()).to_matrix();
  return identity_report("specialized Links-Gould R with ADO-3 cubic", cubic_residual(r, lifted(ado3_cubic())));
}

IdentityCheck check_cubic_coefficients_match() {
  IdentityCheck c;
  c.name = "specialized Links-Gould cubic = ADO-3 cubic";
  const auto lg = specialize(lg_cubic());
  const auto ado = lifted(ado3_cubic());
  c.residual_nonzeros = static_cast<std::size_t>(!(lg.c2 == ado.c2)) + static_cast<std::size_t>(!(lg.c1 == ado.c1)) +
                        static_cast<std::size_t>(!(lg.c0 == ado.c0));
  c.passed = c.residual_nonzeros == 0;
  c.detail = c.passed ? "coefficients agree" : std::to_string(c.residual_nonzeros) + " coefficients differ";
  return c;
}

IdentityCheck check_yang_baxter_ado() {
  return identity_report("Yang-Baxter (ADO-3, V^3 of dimension 27)", yang_baxter_residual(build_ado3_r()));
}

IdentityCheck check_yang_baxter_lg() {
  return identity_report("Yang-Baxter (Links-Gould, V^3 of dimension 64)", yang_baxter_residual(build_lg_r()));
}

IdentityCheck check_ishii_generic(bool swap_control) {
  const auto& rep = lg_representation();
  const auto t0 = generic(LaurentPoly2::t0()), t1 = generic(LaurentPoly2::t1());
  auto q = build_q_operators(rep.r, rep.r_inv, t0, t1);
  std::string name = "Ishii relation (Links-Gould, generic)";
  if (swap_control) name += " [swapped control]";
  return identity_report(name, ishii_residual(q, t0, t1, swap_control));
}

IdentityCheck check_ishii_ado(bool swap_control) {
  const auto& rep = ado3_representation();
  const auto t0 = ado_t0(), t1 = ado_t1();
  auto q = build_q_operators(rep.r, rep.r_inv, t0, t1);
  std::string name = "Ishii relation (ADO-3, t0 = t^2, t1 = w^2 t^-2)";
  if (swap_control) name += " [swapped control]";
  return identity_report(name, ishii_residual(q, t0, t1, swap_control));
}

std::vector<IdentityCheck> check_relations() {
  return {check_cubic_ado(),       check_skein_lg(),       check_skein_lg_specialized(), check_cubic_coefficients_match(),
          check_yang_baxter_ado(), check_yang_baxter_lg(), check_ishii_generic(),        check_ishii_ado()};
}

// ---------------------------------------------------------------------------
// Sweeps

bool SweepReport::all_equal() const {
  for (const auto& e : entries) {
    if (!e.equal) return false;
  }
  return true;
}

bool SweepReport::audits_passed() const {
  for (const auto& e : entries) {
    if (e.audited && !e.audit_passed) return false;
  }
  return true;
}

SweepReport run_equality_sweep(const std::vector<CheckWord>& words, const SweepOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  const auto& ado_rep = ado3_representation();
  const auto& lg_rep = lg_specialized_representation();
  const std::size_t stride = audit_stride(opt.audit_fraction);
  TraceOptions trace;
  trace.paranoid = opt.paranoid;
  trace.parallel = false;

  SweepReport report;
  report.entries.reserve(words.size());
  for (const auto& w : words) report.entries.push_back(make_entry(w));

  for (auto [begin, end] : family_ranges(words)) {
    const CheckWord& head = words[begin];
    std::unique_ptr<PrefixCache<LaurentPoly1>> ado_cache;
    std::unique_ptr<PrefixCache<SpecScalar>> lg_cache;
    if (opt.use_prefix_cache && cacheable(head)) {
      ado_cache = make_cache(head, ado_rep, opt.paranoid);
      lg_cache = make_cache(head, lg_rep, opt.paranoid);
    }
    for_each_index(end - begin, opt.jobs, [&](std::size_t offset) {
      const CheckWord& w = words[begin + offset];
      SweepEntry& e = report.entries[begin + offset];
      if (ado_cache) {
        e.ado3 = ado_cache->evaluate(w.suffix, trace);
        e.lg_spec = require_y_free(lg_cache->evaluate(w.suffix, trace), w.full);
      } else {
        e.ado3 = compute_ado3(w.full, trace).value;
        e.lg_spec = compute_lg_specialized(w.full, trace).value;
      }
      e.diff = e.ado3 - e.lg_spec;
      e.equal = e.diff.is_zero();
      if (stride != 0 && w.index % stride == 0) {
        e.audited = true;
        e.audit_passed = specialize(compute_lg(w.full, trace).value) == e.lg_spec;
      }
    });

    FamilySummary& s = report.summary[family_tag(head.family)];
    for (std::size_t i = begin; i < end; ++i) {
      const auto& e = report.entries[i];
      ++s.total;
      s.equal += e.equal ? 1 : 0;
      s.audited += e.audited ? 1 : 0;
      s.audit_failures += (e.audited && !e.audit_passed) ? 1 : 0;
    }
    if (opt.progress) {
      std::cerr << "[sweep] " << family_tag(head.family) << ": " << s.equal << "/" << s.total << " equal, "
                << s.audited - s.audit_failures << "/" << s.audited << " audits passed" << std::endl;
    }
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<SweepEntry> compute_ado3_values(const std::vector<CheckWord>& words, const SweepOptions& opt) {
  const auto& rep = ado3_representation();
  TraceOptions trace;
  trace.paranoid = opt.paranoid;
  trace.parallel = false;
  std::vector<SweepEntry> entries;
  entries.reserve(words.size());
  for (const auto& w : words) entries.push_back(make_entry(w));
  for (auto [begin, end] : family_ranges(words)) {
    std::unique_ptr<PrefixCache<LaurentPoly1>> cache;
    if (opt.use_prefix_cache && cacheable(words[begin])) cache = make_cache(words[begin], rep, opt.paranoid);
    for_each_index(end - begin, opt.jobs, [&](std::size_t offset) {
      const CheckWord& w = words[begin + offset];
      SweepEntry& e = entries[begin + offset];
      e.ado3 = cache ? cache->evaluate(w.suffix, trace) : compute_ado3(w.full, trace).value;
      e.lg_spec = e.ado3;
      e.equal = true;
    });
  }
  return entries;
}

// ---------------------------------------------------------------------------
// Values at t = 1, t = w and symmetry

PropertyReport check_corollary(const std::vector<SweepEntry>& entries) {
  PropertyReport r;
  r.name = "values at t = 1 and t = w";
  for (const auto& e : entries) {
    ++r.checked;
    const CycScalar expected = e.components == 1 ? CycScalar(1) : CycScalar(0);
    const CycScalar at_one = e.ado3.evaluate_at(CycScalar(1));
    const CycScalar at_omega = e.ado3.evaluate_at(CycScalar::omega());
    if (!(at_one == expected) || !(at_omega == expected)) {
      r.failures.push_back({e.braid.to_string(), "components " + std::to_string(e.components) + ", P(1) = " +
                                                     at_one.to_string() + ", P(w) = " + at_omega.to_string()});
    }
  }
  return r;
}

bool is_almost_symmetric(const LaurentPoly1& p) { return p == p.substitute(CycScalar::omega(), -1); }

PropertyReport check_symmetry(const std::vector<SweepEntry>& entries) {
  PropertyReport r;
  r.name = "P(t) = P(w/t)";
  for (const auto& e : entries) {
    ++r.checked;
    if (!is_almost_symmetric(e.ado3)) {
      r.failures.push_back({e.braid.to_string(), "P(w/t) = " + e.ado3.substitute(CycScalar::omega(), -1).to_string()});
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Reports

nlohmann::json to_json(const IdentityCheck& c) {
  return {{"name", c.name}, {"passed", c.passed}, {"residual_nonzeros", c.residual_nonzeros}, {"detail", c.detail}};
}

nlohmann::json to_json(const SweepReport& r, bool include_timing) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : r.entries) {
    nlohmann::json j = {{"family", family_tag(e.family)},
                        {"braid", e.braid.to_string()},
                        {"ado3", e.ado3.to_string()},
                        {"lg_spec", e.lg_spec.to_string()},
                        {"equal", e.equal}};
    j["diff"] = e.equal ? nlohmann::json(nullptr) : nlohmann::json(e.diff.to_string());
    if (e.audited) j["audit_passed"] = e.audit_passed;
    entries.push_back(std::move(j));
  }
  nlohmann::json summary = nlohmann::json::object();
  for (const auto& [tag, s] : r.summary) {
    summary[tag] = {{"total", s.total}, {"equal", s.equal}, {"audited", s.audited}, {"audit_failures", s.audit_failures}};
  }
  nlohmann::json out = {{"entries", std::move(entries)},
                        {"summary", std::move(summary)},
                        {"all_equal", r.all_equal()},
                        {"audits_passed", r.audits_passed()}};
  if (include_timing) out["timing"] = {{"seconds", r.seconds}};
  return out;
}

nlohmann::json to_json(const PropertyReport& r) {
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& f : r.failures) failures.push_back({{"braid", f.braid}, {"detail", f.detail}});
  return {{"name", r.name}, {"checked", r.checked}, {"passed", r.passed()}, {"failures", std::move(failures)}};
}

}  // namespace adolg
