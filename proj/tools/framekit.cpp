// framekit: command-line front end for the frame/operator checks.
//
//   framekit check <what> <file> [--frame N] [--op N] [--op2 N] [--pair N]
//   framekit generate <kind> [--d N] [--m N] [--M N] [--seed S]
//   framekit verify [--suite NAME]... [--seed S] [--trials N] [--dims-max N]
//
// stdout carries data (JSON unless --pretty table for verify); stderr carries
// diagnostics.  Exit codes: 0 pass, 1 verdict/property failure, 2 usage or
// parse/validation error.  FRAMEKIT_SEED provides the default seed.

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "framekit/errors.hpp"
#include "framekit/generators.hpp"
#include "framekit/instance_io.hpp"
#include "framekit/kframe.hpp"
#include "framekit/propcheck.hpp"
#include "framekit/superframe.hpp"

namespace {

using framekit::FrameSequence;
using framekit::Instance;
using framekit::Matrix;
using framekit::SuperFramePair;
using framekit::ToleranceConfig;
using nlohmann::json;

constexpr std::uint64_t kDefaultSeed = 0x5eed5eed5eed5eedULL;

std::uint64_t seed_from_env_or(std::uint64_t fallback) {
  const char* env = std::getenv("FRAMEKIT_SEED");
  if (env == nullptr || *env == '\0') return fallback;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 0);
  if (end == nullptr || *end != '\0') {
    throw framekit::InvalidSpec(std::string("FRAMEKIT_SEED is not an integer: ") + env);
  }
  return static_cast<std::uint64_t>(v);
}

struct TolFlags {
  double rank = -1.0;
  double psd = -1.0;
  double residual = -1.0;

  void attach(CLI::App* cmd) {
    cmd->add_option("--tol-rank", rank, "relative rank / spanning threshold")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--tol-psd", psd, "relative Loewner-order slack")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--tol-residual", residual, "relative residual threshold")
        ->check(CLI::PositiveNumber);
  }

  ToleranceConfig resolve(const Instance& inst) const {
    ToleranceConfig tol = inst.tolerance.value_or(ToleranceConfig{});
    if (rank > 0) tol.rank_rel = rank;
    if (psd > 0) tol.psd_rel = psd;
    if (residual > 0) tol.residual_rel = residual;
    return tol;
  }
};

json tol_json(const ToleranceConfig& tol) {
  return json{{"rank_rel", tol.rank_rel},
              {"psd_rel", tol.psd_rel},
              {"residual_rel", tol.residual_rel}};
}

json finite_or_null(double x) {
  if (std::isfinite(x)) return json(x);
  return json(nullptr);
}

// ---- object name resolution ------------------------------------------------

const FrameSequence& resolve_frame(const Instance& inst, const std::string& name) {
  if (!name.empty()) {
    const auto it = inst.frames.find(name);
    if (it == inst.frames.end()) throw framekit::ParseError("no frame named '" + name + "'");
    return it->second;
  }
  if (inst.frames.size() == 1) return inst.frames.begin()->second;
  const auto it = inst.frames.find("F");
  if (it != inst.frames.end()) return it->second;
  throw framekit::ParseError("instance has several frames; select one with --frame");
}

const Matrix& op_by_name(const Instance& inst, const std::string& name) {
  const auto it = inst.operators.find(name);
  if (it == inst.operators.end())
    throw framekit::ParseError("no operator named '" + name + "'");
  return it->second;
}

const Matrix& resolve_op(const Instance& inst, const std::string& name,
                         const std::string& preferred) {
  if (!name.empty()) return op_by_name(inst, name);
  if (inst.operators.count(preferred) > 0) return inst.operators.at(preferred);
  if (inst.operators.size() == 1) return inst.operators.begin()->second;
  throw framekit::ParseError(inst.operators.empty()
                                 ? "instance has no operator"
                                 : "several operators present; select with --op");
}

// Joint resolution for checks needing two operators.  Inference: explicit
// names win, then the conventional names K / L, then (with exactly two
// operators in the file) the two names in sorted order.
std::pair<const Matrix*, const Matrix*> resolve_two_ops(const Instance& inst,
                                                        const std::string& first,
                                                        const std::string& second) {
  std::string kn = first;
  std::string ln = second;
  if (kn.empty() && inst.operators.count("K") > 0) kn = "K";
  if (ln.empty() && inst.operators.count("L") > 0) ln = "L";
  if (kn.empty() && ln.empty() && inst.operators.size() == 2) {
    auto it = inst.operators.begin();
    kn = it->first;
    ln = std::next(it)->first;
  } else if (kn.empty() || ln.empty()) {
    std::string* hole = kn.empty() ? &kn : &ln;
    const std::string& other = kn.empty() ? ln : kn;
    for (const auto& [key, op] : inst.operators) {
      if (key == other) continue;
      if (!hole->empty())
        throw framekit::ParseError("several operators present; select with --op / --op2");
      *hole = key;
    }
    if (hole->empty())
      throw framekit::ParseError("this check needs two operators; found fewer");
  }
  return {&op_by_name(inst, kn), &op_by_name(inst, ln)};
}

SuperFramePair resolve_pair(const Instance& inst, const std::string& name) {
  std::pair<std::string, std::string> ref;
  if (!name.empty()) {
    const auto it = inst.pairs.find(name);
    if (it == inst.pairs.end()) throw framekit::ParseError("no pair named '" + name + "'");
    ref = it->second;
  } else if (inst.pairs.size() == 1) {
    ref = inst.pairs.begin()->second;
  } else if (inst.pairs.empty() && inst.frames.size() == 2) {
    auto it = inst.frames.begin();
    ref.first = it->first;
    ref.second = std::next(it)->first;
  } else {
    throw framekit::ParseError("cannot determine the frame pair; select with --pair");
  }
  return SuperFramePair{inst.frames.at(ref.first), inst.frames.at(ref.second)};
}

// ---- check -----------------------------------------------------------------

struct CheckArgs {
  std::string what;
  std::string file;
  std::string frame;
  std::string op;
  std::string op2;
  std::string pair;
  bool pretty = false;
  TolFlags tol;
};

int emit_report(json j, bool pretty, bool verdict) {
  std::cout << (pretty ? j.dump(2) : j.dump()) << "\n";
  return verdict ? 0 : 1;
}

int run_check(const CheckArgs& a) {
  const Instance inst = framekit::load_instance(a.file);
  const ToleranceConfig tol = a.tol.resolve(inst);
  json j;
  j["what"] = a.what;
  j["tolerance"] = tol_json(tol);

  try {
    if (a.what == "bessel") {
      const FrameSequence& f = resolve_frame(inst, a.frame);
      const auto bc = framekit::frame_bounds(f, tol);
      j["verdict"] = true;  // every finite sequence is Bessel; report the bound
      j["upper"] = bc.upper;
      j["kind"] = framekit::to_string(bc.kind);
      return emit_report(j, a.pretty, true);
    }
    if (a.what == "frame") {
      const FrameSequence& f = resolve_frame(inst, a.frame);
      const auto bc = framekit::frame_bounds(f, tol);
      const bool ok = framekit::is_frame_kind(bc.kind);
      j["verdict"] = ok;
      j["lower"] = bc.lower;
      j["upper"] = bc.upper;
      j["kind"] = framekit::to_string(bc.kind);
      return emit_report(j, a.pretty, ok);
    }
    if (a.what == "kframe") {
      const FrameSequence& f = resolve_frame(inst, a.frame);
      const Matrix& k = resolve_op(inst, a.op, "K");
      const auto cert = framekit::is_kframe(f, k, tol);
      j["verdict"] = cert.verdict;
      j["lower"] = finite_or_null(cert.lower);
      j["lower_unconstrained"] = cert.lower_unconstrained;
      j["upper"] = cert.upper;
      j["via_psd"] = cert.via_psd;
      j["via_range"] = cert.via_range;
      return emit_report(j, a.pretty, cert.verdict);
    }
    if (a.what == "kminimal") {
      const FrameSequence& f = resolve_frame(inst, a.frame);
      const Matrix& k = resolve_op(inst, a.op, "K");
      const bool ok = framekit::is_k_minimal(f, k, tol);
      j["verdict"] = ok;
      return emit_report(j, a.pretty, ok);
    }
    if (a.what == "konb") {
      const FrameSequence& f = resolve_frame(inst, a.frame);
      const Matrix& k = resolve_op(inst, a.op, "K");
      const bool ok = framekit::is_k_orthonormal_basis(f, k, tol);
      j["verdict"] = ok;
      return emit_report(j, a.pretty, ok);
    }
    if (a.what == "super") {
      const SuperFramePair p = resolve_pair(inst, a.pair);
      const auto [k, l] = resolve_two_ops(inst, a.op, a.op2);
      const auto rep = framekit::is_super_klframe(p, *k, *l, tol);
      j["verdict"] = rep.combined.verdict;
      j["is_bessel"] = rep.is_bessel;
      j["lower"] = finite_or_null(rep.combined.lower);
      j["lower_unconstrained"] = rep.combined.lower_unconstrained;
      j["upper"] = rep.combined.upper;
      j["left_is_kframe"] = rep.left_is_kframe;
      j["right_is_lframe"] = rep.right_is_lframe;
      j["is_minimal"] = rep.is_minimal;
      j["disjoint"] = rep.disjoint;
      j["necessary_ranges"] = json::array({rep.necessary_ranges.first,
                                           rep.necessary_ranges.second});
      j["notes"] = rep.notes;
      return emit_report(j, a.pretty, rep.combined.verdict);
    }
    if (a.what == "superminimal") {
      const SuperFramePair p = resolve_pair(inst, a.pair);
      const bool minimal = framekit::is_super_minimal(p, tol);
      j["verdict"] = minimal;
      j["count"] = p.count();
      if (!a.op.empty() || !a.op2.empty() || !inst.operators.empty()) {
        const auto [k, l] = resolve_two_ops(inst, a.op, a.op2);
        try {
          j["sufficient"] = framekit::minimality_sufficient(p, *k, *l, tol);
        } catch (const framekit::PreconditionViolation&) {
          j["sufficient"] = nullptr;  // components are not K-/L-frames
        }
      }
      return emit_report(j, a.pretty, minimal);
    }
    if (a.what == "superonb") {
      const SuperFramePair p = resolve_pair(inst, a.pair);
      const auto [k, l] = resolve_two_ops(inst, a.op, a.op2);
      const bool ok = framekit::is_super_onb(p, *k, *l, tol);
      j["verdict"] = ok;
      if (ok) j["dual_is_onb"] = framekit::onb_dual_is_onb(p, *k, *l, tol);
      return emit_report(j, a.pretty, ok);
    }
    throw framekit::InvalidSpec("unknown check: " + a.what);
  } catch (const framekit::ParseError&) {
    throw;  // name-resolution problems are usage errors (exit 2)
  } catch (const framekit::CharacterizationMismatch& e) {
    std::cerr << "framekit: " << e.what() << "\n";
    j["verdict"] = false;
    j["error"] = e.what();
    return emit_report(j, a.pretty, false);
  } catch (const framekit::NotKFrame& e) {
    std::cerr << "framekit: " << e.what() << "\n";
    j["verdict"] = false;
    j["error"] = e.what();
    return emit_report(j, a.pretty, false);
  } catch (const framekit::NotAFrame& e) {
    std::cerr << "framekit: " << e.what() << "\n";
    j["verdict"] = false;
    j["error"] = e.what();
    return emit_report(j, a.pretty, false);
  } catch (const framekit::ZeroOperator& e) {
    std::cerr << "framekit: " << e.what() << "\n";
    j["verdict"] = false;
    j["error"] = e.what();
    return emit_report(j, a.pretty, false);
  }
}

// ---- generate ----------------------------------------------------------------

struct GenerateArgs {
  std::string kind;
  Eigen::Index d = 4;
  Eigen::Index m = 2;
  Eigen::Index count = 6;
  std::uint64_t seed = 0;
  bool seed_given = false;
  bool pretty = false;
};

int run_generate(const GenerateArgs& a) {
  framekit::GeneratorSpec spec;
  spec.seed = a.seed_given ? a.seed : seed_from_env_or(0);
  if (a.kind == "shift") {
    spec.kind = framekit::InstanceKind::Shift;
    spec.d1 = a.d;
  } else if (a.kind == "projection-pair") {
    spec.kind = framekit::InstanceKind::ProjectionPair;
    spec.d1 = a.d;
  } else if (a.kind == "interleaved") {
    spec.kind = framekit::InstanceKind::Interleaved;
    spec.d1 = a.m;
  } else if (a.kind == "nonminimal") {
    spec.kind = framekit::InstanceKind::NonMinimal;
    spec.d1 = a.m;
  } else if (a.kind == "random-frame") {
    spec.kind = framekit::InstanceKind::RandomFrame;
    spec.d1 = a.d;
    spec.count = a.count;
  } else if (a.kind == "random-kframe") {
    spec.kind = framekit::InstanceKind::RandomKFrame;
    spec.d1 = a.d;
    spec.count = a.count;
  } else {
    throw framekit::InvalidSpec("unknown generator kind: " + a.kind);
  }
  const Instance inst = framekit::make_instance(spec);
  std::cout << framekit::serialize_instance(inst, a.pretty);
  return 0;
}

// ---- verify ------------------------------------------------------------------

struct VerifyArgs {
  std::vector<std::string> suites;
  std::uint64_t seed = 0;
  bool seed_given = false;
  int trials = 0;
  int dims_max = 6;
  bool pretty = false;
  TolFlags tol;
};

void print_pretty_report(const framekit::SuiteReport& rep) {
  std::size_t width = 8;
  for (const auto& p : rep.properties) width = std::max(width, p.name.size());
  std::cout << std::left << std::setw(static_cast<int>(width) + 2) << "property"
            << std::right << std::setw(8) << "trials" << std::setw(8) << "passes"
            << std::setw(10) << "failures" << "\n";
  for (const auto& p : rep.properties) {
    std::cout << std::left << std::setw(static_cast<int>(width) + 2) << p.name
              << std::right << std::setw(8) << p.trials << std::setw(8) << p.passes
              << std::setw(10) << p.failures.size() << "\n";
  }
  std::cout << std::left << std::setw(static_cast<int>(width) + 2) << "total"
            << std::right << std::setw(8) << rep.total_trials << std::setw(8)
            << (rep.total_trials - rep.total_failures) << std::setw(10)
            << rep.total_failures << "\n";
  for (const auto& p : rep.properties) {
    for (const auto& f : p.failures) {
      std::cout << "FAIL " << f.property << " trial=" << f.trial_index
                << " seed=" << f.seed << " :: " << f.detail << "\n";
    }
  }
}

int run_verify(const VerifyArgs& a) {
  framekit::SuiteConfig cfg;
  cfg.master_seed = a.seed_given ? a.seed : seed_from_env_or(kDefaultSeed);
  cfg.dims_max = a.dims_max;
  cfg.trials_override = a.trials;
  cfg.selected = a.suites;
  Instance empty;
  cfg.tol = a.tol.resolve(empty);
  const framekit::SuiteReport rep = framekit::run_suite(cfg);
  if (a.pretty) {
    print_pretty_report(rep);
  } else {
    std::cout << framekit::serialize_report(rep, false);
  }
  return rep.total_failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical checks for operator-relative frames and their"
               " two-component combinations"};
  app.require_subcommand(1);

  CheckArgs check;
  CLI::App* c = app.add_subcommand("check", "run a verdict check on an instance file");
  c->add_option("what", check.what, "one of: bessel frame kframe kminimal konb"
                                    " super superminimal superonb")
      ->required()
      ->check(CLI::IsMember({"bessel", "frame", "kframe", "kminimal", "konb",
                             "super", "superminimal", "superonb"}));
  c->add_option("file", check.file, "instance file (JSON)")->required();
  c->add_option("--frame", check.frame, "frame name (default: sole frame, or 'F')");
  c->add_option("--op", check.op, "operator name (default: 'K', or the sole operator)");
  c->add_option("--op2", check.op2, "second operator name (default: 'L')");
  c->add_option("--pair", check.pair, "pair name (default: sole pair)");
  c->add_flag("--pretty", check.pretty, "indent the JSON report");
  check.tol.attach(c);

  GenerateArgs gen;
  CLI::App* g = app.add_subcommand("generate", "emit an instance file on stdout");
  g->add_option("kind", gen.kind, "one of: shift projection-pair interleaved"
                                  " nonminimal random-frame random-kframe")
      ->required()
      ->check(CLI::IsMember({"shift", "projection-pair", "interleaved", "nonminimal",
                             "random-frame", "random-kframe"}));
  g->add_option("--d", gen.d, "space dimension")->check(CLI::PositiveNumber);
  g->add_option("--m", gen.m, "size parameter for interleaved / nonminimal")
      ->check(CLI::PositiveNumber);
  g->add_option("--M", gen.count, "member count for random kinds")
      ->check(CLI::PositiveNumber);
  auto* seed_opt = g->add_option("--seed", gen.seed, "generator seed (default: FRAMEKIT_SEED or 0)");
  g->add_flag("--pretty", gen.pretty, "indent the JSON output");

  VerifyArgs ver;
  CLI::App* v = app.add_subcommand("verify", "run the registered property suite");
  v->add_option("--suite", ver.suites, "property name (repeatable; default: all)");
  auto* vseed_opt = v->add_option("--seed", ver.seed,
                                  "master seed (default: FRAMEKIT_SEED or built-in)");
  v->add_option("--trials", ver.trials, "override per-property trial count")
      ->check(CLI::PositiveNumber);
  v->add_option("--dims-max", ver.dims_max, "cap for sampled dimensions")
      ->check(CLI::Range(1, 32));
  v->add_flag("--pretty", ver.pretty, "human-readable table instead of JSON");
  ver.tol.attach(v);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  gen.seed_given = seed_opt->count() > 0;
  ver.seed_given = vseed_opt->count() > 0;

  try {
    if (c->parsed()) return run_check(check);
    if (g->parsed()) return run_generate(gen);
    return run_verify(ver);
  } catch (const framekit::ParseError& e) {
    std::cerr << "framekit: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "framekit: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "framekit: " << e.what() << "\n";
    return 1;
  }
}
