// adolg: compute ADO-3 / Links-Gould invariants of braid closures and run
// the verification suites.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "adolg/braid.hpp"
#include "adolg/hecke.hpp"
#include "adolg/invariant.hpp"
#include "adolg/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct ComputeArgs {
  std::string invariant;
  std::string braid;
  std::string file;
  bool paranoid = false;
  int jobs = 0;
};

struct VerifyArgs {
  std::string suite;
  int jobs = 0;
  bool paranoid = false;
  std::string report;
  double audit_fraction = 0.01;
  bool no_prefix_cache = false;
  bool quiet = false;
};

struct EnumerateArgs {
  std::string out;
};

int cmd_compute(const ComputeArgs& args) {
  std::vector<adolg::BraidWord> braids;
  if (!args.braid.empty()) {
    braids.push_back(adolg::parse_braid(args.braid));
  } else {
    braids = adolg::read_braid_list(std::filesystem::path(args.file));
  }
  adolg::set_worker_count(args.jobs);
  adolg::TraceOptions opt;
  opt.paranoid = args.paranoid;
  opt.parallel = args.jobs != 1;
  for (const auto& b : braids) {
    if (args.invariant == "ado3") {
      std::cout << adolg::compute_ado3(b, opt).value.to_string() << '\n';
    } else if (args.invariant == "lg") {
      std::cout << adolg::compute_lg(b, opt).value.to_string_t() << '\n';
    } else {
      std::cout << adolg::compute_lg_specialized(b, opt).value.to_string() << '\n';
    }
  }
  return kExitOk;
}

class SuiteRunner {
public:
  explicit SuiteRunner(const VerifyArgs& args) : args_(args) {
    opt_.jobs = args.jobs;
    opt_.paranoid = args.paranoid;
    opt_.use_prefix_cache = !args.no_prefix_cache;
    opt_.audit_fraction = args.audit_fraction;
    opt_.progress = !args.quiet;
  }

  bool relations() {
    nlohmann::json out = nlohmann::json::array();
    bool ok = true;
    for (const auto& c : adolg::check_relations()) {
      std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
      ok = ok && c.passed;
      out.push_back(adolg::to_json(c));
    }
    report_["relations"] = std::move(out);
    return ok;
  }

  bool sweep(const std::string& name, const std::vector<adolg::CheckWord>& words) {
    auto r = adolg::run_equality_sweep(words, opt_);
    for (const auto& [tag, s] : r.summary) {
      std::cout << tag << ": " << s.equal << "/" << s.total << " equal";
      if (s.audited > 0) std::cout << ", audits " << s.audited - s.audit_failures << "/" << s.audited;
      std::cout << '\n';
    }
    for (const auto& e : r.entries) {
      if (!e.equal) std::cout << "UNEQUAL " << e.braid.to_string() << ": diff " << e.diff.to_string() << '\n';
      if (e.audited && !e.audit_passed) std::cout << "AUDIT FAILED " << e.braid.to_string() << '\n';
    }
    const bool ok = r.all_equal() && r.audits_passed();
    std::cout << (ok ? "PASS " : "FAIL ") << name << ": " << r.entries.size() << " words\n";
    swept_.insert(swept_.end(), r.entries.begin(), r.entries.end());
    report_["sweeps"][name] = adolg::to_json(r);
    return ok;
  }

  bool property(const adolg::PropertyReport& r, const std::string& key) {
    for (const auto& f : r.failures) std::cout << "FAIL " << f.braid << ": " << f.detail << '\n';
    std::cout << (r.passed() ? "PASS " : "FAIL ") << r.name << ": " << r.checked << " closures\n";
    report_[key] = adolg::to_json(r);
    return r.passed();
  }

  std::vector<adolg::SweepEntry> ado3_values(const std::vector<adolg::CheckWord>& words) {
    return adolg::compute_ado3_values(words, opt_);
  }

  const std::vector<adolg::SweepEntry>& swept() const { return swept_; }

  bool write_report(const std::string& suite, bool passed) {
    report_["suite"] = suite;
    report_["passed"] = passed;
    if (args_.report.empty()) return true;
    std::ofstream out(args_.report);
    if (!out) {
      std::cerr << "error: cannot write report " << args_.report << '\n';
      return false;
    }
    out << report_.dump(2) << '\n';
    return static_cast<bool>(out);
  }

private:
  const VerifyArgs& args_;
  adolg::SweepOptions opt_;
  nlohmann::json report_ = nlohmann::json::object();
  std::vector<adolg::SweepEntry> swept_;
};

std::vector<adolg::SweepEntry> s4_only(const std::vector<adolg::SweepEntry>& entries) {
  std::vector<adolg::SweepEntry> out;
  for (const auto& e : entries) {
    if (e.family == adolg::Family::S4) out.push_back(e);
  }
  return out;
}

std::vector<adolg::CheckWord> all_words() {
  auto words = adolg::s4_check_words();
  auto s5 = adolg::enumerate_s5_check_words();
  words.insert(words.end(), s5.begin(), s5.end());
  return words;
}

int cmd_verify(const VerifyArgs& args) {
  adolg::set_worker_count(args.jobs);
  SuiteRunner run(args);
  const std::string& suite = args.suite;
  bool ok = true;
  if (suite == "relations") {
    ok = run.relations();
  } else if (suite == "s4") {
    ok = run.sweep("s4", adolg::s4_check_words());
  } else if (suite == "s5") {
    ok = run.sweep("s5", adolg::enumerate_s5_check_words());
  } else if (suite.rfind("s5-type=", 0) == 0) {
    int k = 0;
    try {
      std::size_t used = 0;
      k = std::stoi(suite.substr(8), &used);
      if (used != suite.size() - 8) throw std::invalid_argument("trailing characters");
      adolg::five_strand_family(k);
    } catch (const std::exception&) {
      std::cerr << "error: suite " << suite << ": type must be an integer in 1..10\n";
      return kExitUsage;
    }
    ok = run.sweep(suite, adolg::family_check_words(adolg::five_strand_family(k)));
  } else if (suite == "corollary") {
    ok = run.property(adolg::check_corollary(run.ado3_values(all_words())), "corollary");
  } else if (suite == "symmetry") {
    ok = run.property(adolg::check_symmetry(run.ado3_values(adolg::s4_check_words())), "symmetry");
  } else if (suite == "all") {
    ok = run.relations();
    ok = run.sweep("s4", adolg::s4_check_words()) && ok;
    ok = run.sweep("s5", adolg::enumerate_s5_check_words()) && ok;
    ok = run.property(adolg::check_corollary(run.swept()), "corollary") && ok;
    ok = run.property(adolg::check_symmetry(s4_only(run.swept())), "symmetry") && ok;
  } else {
    std::cerr << "error: unknown suite '" << suite
              << "' (expected relations, s4, s5, s5-type=K, corollary, symmetry or all)\n";
    return kExitUsage;
  }
  if (!run.write_report(suite, ok)) return kExitCheckFailed;
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_enumerate(const EnumerateArgs& args) {
  for (const auto& path : adolg::write_family_files(args.out)) std::cout << path.string() << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact ADO-3 and Links-Gould invariants of braid closures"};
  app.require_subcommand(1);

  ComputeArgs compute;
  auto* c = app.add_subcommand("compute", "Print the invariant of each braid, one polynomial per line");
  c->add_option("--invariant", compute.invariant, "ado3, lg or lg-spec")
      ->required()
      ->check(CLI::IsMember({"ado3", "lg", "lg-spec"}));
  auto* braid_opt = c->add_option("--braid", compute.braid, "Braid text, e.g. {3,{1,-2,1,-2}}");
  auto* file_opt = c->add_option("--file", compute.file, "Braid-list file")->check(CLI::ExistingFile);
  braid_opt->excludes(file_opt);
  c->add_flag("--paranoid", compute.paranoid, "Compute every column and require a scalar operator");
  c->add_option("--jobs", compute.jobs, "Worker threads (1 = serial)")->check(CLI::NonNegativeNumber);

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Run a verification suite");
  v->add_option("suite", verify.suite, "relations | s4 | s5 | s5-type=K | corollary | symmetry | all")->required();
  v->add_option("--jobs", verify.jobs, "Worker threads (1 = serial)")->check(CLI::NonNegativeNumber);
  v->add_flag("--paranoid", verify.paranoid, "Compute every column and require a scalar operator");
  v->add_option("--report", verify.report, "Write a JSON report to this path");
  v->add_option("--audit-fraction", verify.audit_fraction, "Share of words also checked through generic Links-Gould")
      ->check(CLI::Range(0.0, 1.0));
  v->add_flag("--no-prefix-cache", verify.no_prefix_cache, "Evaluate every five-strand word from scratch");
  v->add_flag("--quiet", verify.quiet, "No progress lines on standard error");

  EnumerateArgs enumerate;
  auto* e = app.add_subcommand("enumerate", "Write the S4 and five-strand check words as braid-list files");
  e->add_option("--out", enumerate.out, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    int code = app.exit(err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  if (c->parsed() && compute.braid.empty() && compute.file.empty()) {
    std::cerr << "error: compute needs --braid or --file\n";
    return kExitUsage;
  }

  try {
    if (c->parsed()) return cmd_compute(compute);
    if (v->parsed()) return cmd_verify(verify);
    return cmd_enumerate(enumerate);
  } catch (const adolg::BraidParseError& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kExitUsage;
  } catch (const adolg::ProportionalityError& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kExitCheckFailed;
  } catch (const adolg::IntegralityError& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kExitCheckFailed;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kExitCheckFailed;
  }
}
