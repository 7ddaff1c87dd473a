// Copyright 2026 The rsdl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// rsdl command-line front end.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "rsdl/collector.hpp"
#include "rsdl/error.hpp"
#include "rsdl/io.hpp"
#include "rsdl/orbit_basis.hpp"
#include "rsdl/pipeline.hpp"
#include "rsdl/solver.hpp"

namespace fs = std::filesystem;
using namespace rsdl;

namespace {

enum Exit : int {
  kOk = 0,
  kUsage = 1,
  kIo = 2,
  kRank = 3,
  kVerification = 4,
  kBudget = 5,
};

struct FieldFlags {
  std::string context;
  u64 p = 0;
  unsigned h = 0;
  std::string Q;
  std::string mode = "fq";
  unsigned e = 0;
  u64 seed = 0;
};

void add_field_flags(CLI::App* cmd, FieldFlags& f, bool with_q = true) {
  cmd->add_option("--context", f.context, "context file written by setup");
  cmd->add_option("--p", f.p, "prime q of the base field");
  cmd->add_option("--h", f.h, "extension degree");
  if (with_q) cmd->add_option("--Q", f.Q, "Q coefficients, least degree first, or 'auto'");
  cmd->add_option("--mode", f.mode, "fq or hf")->check(CLI::IsMember({"fq", "hf"}));
  cmd->add_option("--e", f.e, "helper field degree (hf mode)");
  cmd->add_option("--seed", f.seed, "seed for every random choice");
}

// Context file when given, explicit flags otherwise. Q may stay empty.
FieldParams resolve_params(const FieldFlags& f) {
  if (!f.context.empty()) return read_context(f.context);
  FieldParams params;
  params.p = f.p;
  params.h = f.h;
  params.mode = parse_mode(f.mode);
  params.e = params.mode == Mode::hf ? f.e : (f.e ? f.e : 1);
  params.seed = f.seed;
  if (params.p == 0 || params.h == 0) {
    throw std::invalid_argument("give --context or both --p and --h");
  }
  if (!f.Q.empty() && f.Q != "auto") params.Q = parse_coeffs(f.Q);
  validate_params(params);
  if (f.Q == "auto") params = with_random_modulus(params);
  return params;
}

Instance load_instance(const FieldFlags& f) {
  FieldParams params = resolve_params(f);
  if (params.Q.empty()) throw std::invalid_argument("Q is required (coefficients or 'auto')");
  return make_instance(params);
}

// Output goes to a sibling temporary first so a failure never leaves a
// half-written file behind.
template <class Fn>
void write_file(const fs::path& path, Fn&& fn) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw IoError("cannot write " + path.string());
    fn(out);
    out.flush();
    if (!out) throw IoError("write failed for " + path.string());
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) throw IoError("cannot replace " + path.string() + ": " + ec.message());
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path);
  return in;
}

std::pair<u64, u64> parse_range(const std::string& s) {
  auto colon = s.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("range must look like a:b");
  return {std::stoull(s.substr(0, colon)), std::stoull(s.substr(colon + 1))};
}

std::string fmt_seconds(double s) {
  std::ostringstream o;
  o << std::fixed << std::setprecision(3) << s;
  return o.str();
}

void print_timing(std::ostream& os, const ScanStats& scan, const SolveStats* solve,
                  std::size_t relations) {
  os << "timing (seconds)\n"
     << "  update          " << fmt_seconds(scan.update) << '\n'
     << "  EEA             " << fmt_seconds(scan.decode.eea) << '\n'
     << "  X^{q^e} mod v   " << fmt_seconds(scan.decode.frobenius) << '\n'
     << "  roots           " << fmt_seconds(scan.decode.roots) << '\n'
     << "  linear algebra  " << fmt_seconds(solve ? solve->linear_algebra + solve->small_logs : 0.0)
     << '\n'
     << "relations " << relations << " from " << scan.steps << " steps, success rate "
     << std::setprecision(6) << scan.success_rate() << '\n';
}

void print_estimate(std::ostream& os, const Instance* inst, const FieldParams& params) {
  ProbabilityEstimate est;
  if (params.mode == Mode::fq) {
    const u64 n = inst ? inst->code.n : params.p;
    est = estimate_probability_fq(n, params.h, params.p);
  } else {
    OrbitBasis basis = inst ? *inst->basis : build_orbit_basis(params.p, params.e);
    est = estimate_probability_hf(basis, params.h);
  }
  os << "decodable words " << est.relation_count << '\n'
     << "success probability exact " << est.relation_count << '/'
     << pow(BigInt(params.p), params.h) << " ~ " << format_significant(est.exact, 4) << '\n'
     << "success probability asymptotic " << format_significant(est.asymptotic, 3) << '\n';
}

int cmd_setup(const FieldFlags& f, const std::string& out) {
  if (f.Q.empty() && f.context.empty()) throw std::invalid_argument("--Q is required for setup");
  Instance inst = load_instance(f);
  const CodeSpec& c = inst.code;
  std::cout << "field GF(" << inst.params.p << "^" << inst.params.h << "), Q = "
            << to_string(inst.tower.Q()) << '\n'
            << "Q coefficients " << format_coeffs(inst.params.Q) << '\n'
            << "group order " << inst.tower.factorization().to_string() << '\n'
            << "mode " << to_string(inst.params.mode);
  if (inst.params.mode == Mode::hf) {
    std::cout << ", helper GF(" << inst.params.p << "^" << inst.params.e << ") modulus "
              << to_string(inst.basis->helper_modulus);
  }
  std::cout << '\n'
            << "(n,k,mu,d) = (" << c.n << ',' << c.k << ',' << c.mu << ',' << c.d << ")\n"
            << "factor base size " << c.base.size() << '\n';
  print_estimate(std::cout, &inst, inst.params);
  if (!out.empty()) {
    write_context(out, inst.params);
    std::cout << "context written to " << out << '\n';
  }
  return kOk;
}

struct CollectFlags {
  std::string out;
  std::string range;
  std::optional<std::size_t> count;
  int workers = 1;
  u64 budget = 0;
  bool append = false;
};

int cmd_collect(const FieldFlags& f, const CollectFlags& cf) {
  Instance inst = load_instance(f);
  if (cf.out.empty()) throw std::invalid_argument("--out is required");
  const u64 last = inst.tower.group_order() - 1;

  RelationSet previous;
  bool have_previous = false;
  if (cf.append && fs::exists(cf.out)) {
    std::ifstream in = open_input(cf.out);
    RelationFile file = read_relations(in);
    if (file.params != inst.params) throw IoError(cf.out + " was written for different parameters");
    previous = std::move(file.set);
    have_previous = true;
  }

  ScanStats stats;
  RelationSet found;
  int status = kOk;
  std::string budget_msg;
  if (cf.count) {
    const u64 budget = cf.budget ? cf.budget : 10'000'000;
    try {
      found = collect_random(inst.code, inst.tower, *cf.count, inst.params.seed, budget, &stats);
    } catch (const BudgetExceededError& e) {
      budget_msg = e.what();
      status = kBudget;
      found.mode = inst.code.mode;
      found.e = inst.code.e;
      found.seed = inst.params.seed;
      found.target = *cf.count;
    }
  } else {
    u64 a = have_previous ? previous.cursor : 0, b = last;
    if (!cf.range.empty()) std::tie(a, b) = parse_range(cf.range);
    if (a > b || b > last) {
      throw std::invalid_argument("range must satisfy a <= b <= " + std::to_string(last));
    }
    if (cf.budget && b - a + 1 > cf.budget) {
      b = a + cf.budget - 1;
      budget_msg = "budget of " + std::to_string(cf.budget) + " steps reached; resume from " +
                   std::to_string(b + 1);
      status = kBudget;
    }
    ScanOptions so;
    so.workers = cf.workers;
    so.seed = inst.params.seed;
    found = scan_incremental(inst.code, inst.tower, a, b, so, &stats);
  }

  if (have_previous) {
    for (auto& [u, r] : found.relations) previous.insert(r);
    if (!cf.count) previous.cursor = std::max(previous.cursor, found.cursor);
    found = std::move(previous);
  }
  write_file(cf.out, [&](std::ostream& os) { write_relations(os, inst.params, found); });
  std::cout << "wrote " << found.size() << " relations to " << cf.out << '\n';
  print_timing(std::cout, stats, nullptr, found.size());
  if (status == kBudget) std::cerr << "rsdl: " << budget_msg << '\n';
  return status;
}

struct SolveFlags {
  std::string relations;
  std::string out;
  int workers = 1;
  u64 small_threshold = u64{1} << 20;
  unsigned max_rounds = 4;
};

int cmd_solve(const FieldFlags& f, const SolveFlags& sf) {
  FieldFlags ff = f;
  std::ifstream in = open_input(sf.relations);
  RelationFile file = read_relations(in);
  Instance inst = ff.context.empty() && ff.p == 0 ? make_instance(file.params) : load_instance(ff);
  if (file.params != inst.params) throw IoError(sf.relations + " was written for different parameters");
  for (const auto& line : file.lines) {
    if (!verify_relation(line.relation, inst.code, inst.tower)) {
      throw VerificationError(sf.relations + ":" + std::to_string(line.line) +
                              ": relation does not hold");
    }
  }
  if (sf.out.empty()) throw std::invalid_argument("--out is required");
  PipelineOptions po;
  po.scan.workers = sf.workers;
  po.scan.seed = inst.params.seed;
  po.solve.workers = sf.workers;
  po.solve.small_threshold = sf.small_threshold;
  po.max_rounds = sf.max_rounds;
  SolveStats solve_stats;
  ScanStats scan_stats;
  const std::size_t before = file.set.size();
  LogTable table = solve_collecting_more(file.set, inst, po, &solve_stats, &scan_stats);
  write_file(sf.out, [&](std::ostream& os) { write_log_table(os, inst, table); });
  std::cout << "log table with " << table.logs.size() << " entries written to " << sf.out << '\n'
            << "logG = " << table.log_G << '\n'
            << "prime powers:";
  for (const auto& r : solve_stats.routes) std::cout << ' ' << r;
  std::cout << '\n';
  if (file.set.size() > before) {
    std::cout << "collected " << file.set.size() - before
              << " extra relations (not written back to " << sf.relations << ")\n";
  }
  print_timing(std::cout, scan_stats, &solve_stats, file.set.size());
  return kOk;
}

int cmd_log(const FieldFlags& f, const std::string& table_path, const std::string& target,
            u64 budget) {
  std::ifstream in = open_input(table_path);
  LogTableFile file = read_log_table(in);
  Instance inst = f.context.empty() && f.p == 0 ? make_instance(file.params) : load_instance(f);
  if (file.params != inst.params) throw IoError(table_path + " was written for different parameters");
  LogTable table = to_log_table(file, inst);
  auto bad = verify_log_table(table, inst.code, inst.tower);
  if (!bad.empty()) throw VerificationError("log table fails verification; run verify for details");
  const QuotientElem t = parse_target(target, inst.tower.field());
  const u64 lg = individual_log(table, inst.code, inst.tower, t, inst.params.seed, budget);
  std::cout << lg << '\n';
  return kOk;
}

int cmd_estimate(const FieldFlags& f) {
  FieldParams params = resolve_params(f);
  std::optional<Instance> inst;
  if (!params.Q.empty()) inst = make_instance(params);
  print_estimate(std::cout, inst ? &*inst : nullptr, params);
  return kOk;
}

int cmd_verify(const FieldFlags& f, const std::string& table_path, const std::string& rel_path) {
  if (table_path.empty() && rel_path.empty()) {
    throw std::invalid_argument("give --table and/or --relations");
  }
  std::optional<LogTableFile> tfile;
  std::optional<RelationFile> rfile;
  if (!table_path.empty()) {
    std::ifstream in = open_input(table_path);
    tfile = read_log_table(in);
  }
  if (!rel_path.empty()) {
    std::ifstream in = open_input(rel_path);
    rfile = read_relations(in);
  }
  const FieldParams& file_params = tfile ? tfile->params : rfile->params;
  Instance inst = f.context.empty() && f.p == 0 ? make_instance(file_params) : load_instance(f);
  if ((tfile && tfile->params != inst.params) || (rfile && rfile->params != inst.params)) {
    throw IoError("input files were written for different parameters");
  }

  std::size_t failures = 0;
  if (tfile) {
    const ExtensionField& K = inst.tower.field();
    std::unordered_map<u64, bool> in_base;
    for (const auto& entry : inst.code.base) in_base[K.serialize(K.from_poly(entry.minpoly))] = true;
    for (const auto& l : tfile->lines) {
      const bool ok = in_base.count(l.element) && l.log < inst.tower.group_order() &&
                      K.pow(K.x(), l.log) == K.deserialize(l.element);
      if (!ok) {
        std::cout << table_path << ":" << l.line << ": FAIL " << l.element << ';' << l.log << '\n';
        ++failures;
      }
    }
    if (K.pow(K.x(), tfile->log_G) != K.from_poly(inst.code.G_mod_Q)) {
      std::cout << table_path << ":" << tfile->log_G_line << ": FAIL logG=" << tfile->log_G << '\n';
      ++failures;
    }
    if (tfile->lines.size() != inst.code.base.size()) {
      std::cout << table_path << ": table has " << tfile->lines.size() << " entries, factor base has "
                << inst.code.base.size() << '\n';
    }
    std::cout << "table: " << tfile->lines.size() + 1 << " entries checked\n";
  }
  if (rfile) {
    for (const auto& l : rfile->lines) {
      if (!verify_relation(l.relation, inst.code, inst.tower)) {
        std::cout << rel_path << ":" << l.line << ": FAIL relation u=" << l.relation.u << '\n';
        ++failures;
      }
    }
    std::cout << "relations: " << rfile->lines.size() << " lines checked\n";
  }
  if (failures) {
    std::cout << failures << " failure(s)\n";
    return kVerification;
  }
  std::cout << "all checks passed\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rsdl: discrete logarithms in GF(q^h) via Reed-Solomon decoding"};
  app.set_help_flag("--help", "print help and exit");
  app.require_subcommand(1);

  FieldFlags f;
  std::string setup_out;
  auto* setup = app.add_subcommand("setup", "validate a field and write a context file");
  add_field_flags(setup, f);
  setup->add_option("--out", setup_out, "context file to write");

  CollectFlags cf;
  auto* collect = app.add_subcommand("collect", "collect relations");
  add_field_flags(collect, f);
  collect->add_option("--out", cf.out, "relation file")->required();
  collect->add_option("--range", cf.range, "exponent range a:b for the incremental scan");
  collect->add_option("--count", cf.count, "random collection of this many relations");
  collect->add_option("--workers", cf.workers, "worker threads")->check(CLI::PositiveNumber);
  collect->add_option("--budget", cf.budget, "maximum decoding attempts");
  collect->add_flag("--append", cf.append, "merge into an existing relation file");

  SolveFlags sf;
  auto* solve = app.add_subcommand("solve", "build a verified log table from relations");
  add_field_flags(solve, f);
  solve->add_option("--relations", sf.relations, "relation file")->required();
  solve->add_option("--out", sf.out, "log table file")->required();
  solve->add_option("--workers", sf.workers, "worker threads")->check(CLI::PositiveNumber);
  solve->add_option("--small-threshold", sf.small_threshold,
                    "prime powers up to this use Pohlig-Hellman");
  solve->add_option("--max-rounds", sf.max_rounds, "extra collection rounds on rank deficiency");

  std::string table_path, target, rel_path;
  u64 log_budget = 10'000'000;
  auto* log = app.add_subcommand("log", "individual logarithm of a target");
  add_field_flags(log, f);
  log->add_option("--table", table_path, "log table file")->required();
  log->add_option("--target", target, "polynomial in X, e.g. X^2+1")->required();
  log->add_option("--budget", log_budget, "maximum decoding attempts");

  auto* estimate = app.add_subcommand("estimate", "success probability of one decoding attempt");
  add_field_flags(estimate, f);

  auto* verify = app.add_subcommand("verify", "re-check a log table and/or a relation file");
  add_field_flags(verify, f);
  verify->add_option("--table", table_path, "log table file");
  verify->add_option("--relations", rel_path, "relation file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*setup) return cmd_setup(f, setup_out);
    if (*collect) return cmd_collect(f, cf);
    if (*solve) return cmd_solve(f, sf);
    if (*log) return cmd_log(f, table_path, target, log_budget);
    if (*estimate) return cmd_estimate(f);
    if (*verify) return cmd_verify(f, table_path, rel_path);
  } catch (const IoError& e) {
    std::cerr << "rsdl: I/O error: " << e.what() << '\n';
    return kIo;
  } catch (const RankDeficiencyError& e) {
    std::cerr << "rsdl: rank deficiency: " << e.what() << '\n';
    return kRank;
  } catch (const VerificationError& e) {
    std::cerr << "rsdl: verification failed: " << e.what() << '\n';
    return kVerification;
  } catch (const BudgetExceededError& e) {
    std::cerr << "rsdl: budget exhausted: " << e.what() << '\n';
    return kBudget;
  } catch (const std::exception& e) {
    std::cerr << "rsdl: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
