#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "graycode/graycode.hpp"

namespace {

using namespace graycode;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

void print_stats(const SolveStats& s) {
  std::cout << "nodes=" << s.nodes << "\n"
            << "pre_disconnected=" << s.pre_disconnected << "\n"
            << "pre_degree=" << s.pre_degree << "\n"
            << "pre_articulation=" << s.pre_articulation << "\n"
            << "pre_isolated=" << s.pre_isolated << "\n"
            << "search_connectivity=" << s.search_connectivity << "\n"
            << "search_degree=" << s.search_degree << "\n"
            << "budget_exhausted=" << (s.budget_exhausted ? 1 : 0) << "\n";
}

Instance load_instance(const std::string& path, const std::string& flip_override) {
  Instance inst = read_instance_file(path);
  if (!flip_override.empty()) {
    inst.flip = flip_from_name(flip_override);
    validate_instance(inst);
  }
  return inst;
}

int run_solve(const std::string& in, std::string out, const std::string& flip, uint64_t budget,
              int threads, bool cycle) {
  Instance inst = load_instance(in, flip);
  FlipGraph g = build_flip_graph(inst, threads);
  SolveOptions opt;
  opt.budget = budget;
  opt.threads = threads;
  SolveResult res = cycle ? has_hamilton_cycle(g, opt) : has_hamilton_path(g, opt);
  std::cout << "answer=" << answer_name(res.answer) << "\n";
  print_stats(res.stats);
  if (res.answer == Answer::yes && res.certificate) {
    if (out.empty()) out = in + ".cert";
    write_certificate_file(*res.certificate, out);
    std::cout << "certificate=" << out << "\n";
  }
  return res.answer == Answer::unknown ? kExitResource : kExitOk;
}

int run_count(const std::string& in, const std::string& flip, int bound) {
  Instance inst = load_instance(in, flip);
  FlipGraph g = build_flip_graph(inst);
  std::cout << "count=" << count_hamilton_paths(g, bound) << "\n";
  return kExitOk;
}

int run_reduce(const std::string& in, std::string out, const std::string& tag_name) {
  Instance inst = read_instance_file(in);
  ReductionTag tag = reduction_from_name(tag_name);
  ReduceOutcome res = reduce_instance(inst, tag);
  if (res.no_instance) {
    std::cout << "answer=no\ncase=" << res.reason_case << "\ngap=" << res.gap_value << "\n";
    return kExitOk;
  }
  if (out.empty()) out = in + ".reduced";
  write_instance_file(*res.target, out);
  std::cout << "target=" << out << "\n"
            << "kind=" << kind_name(res.target->kind) << "\n"
            << "flip=" << flip_name(res.target->flip) << "\n"
            << "m=" << res.target->objects.size() << "\n";
  return kExitOk;
}

int run_verify(const std::string& in, const std::string& cert_path, const std::string& flip,
               bool cyclic) {
  Instance inst = load_instance(in, flip);
  Certificate cert = read_certificate_file(cert_path);
  bool ok = verify_certificate(inst, cert);
  if (ok && cyclic) {
    if (cert.indices.size() < 3)
      ok = false;
    else
      ok = flip_adjacent(inst.flip, inst.objects[cert.indices.back() - 1],
                         inst.objects[cert.indices.front() - 1]);
  }
  std::cout << "verified=" << (ok ? "true" : "false") << "\n";
  return ok ? kExitOk : kExitVerifyFail;
}

int run_verify_reduction(const std::string& tag_name, int n, uint64_t seed, int samples) {
  ReductionTag tag = reduction_from_name(tag_name);
  ReductionReport rep = run_reduction_verification(tag, n, seed, samples);
  std::cout << "tag=" << reduction_name(rep.tag) << "\n"
            << "pairs_checked=" << rep.pairs_checked << "\n"
            << "adjacency_iff_violations=" << rep.adjacency_iff_violations << "\n"
            << "injective=" << (rep.injective ? "true" : "false") << "\n"
            << "no_instance_sound=" << (rep.no_instance_sound ? "true" : "false") << "\n";
  long long mismatched = 0;
  for (const auto& [s, t] : rep.parsimony_samples)
    if (s != t) ++mismatched;
  std::cout << "parsimony_samples=" << rep.parsimony_samples.size() << "\n"
            << "parsimony_mismatches=" << mismatched << "\n";
  for (const auto& [k, ok] : rep.hypercube_checks)
    std::cout << "hypercube_n" << k << "=" << (ok ? "true" : "false") << "\n";
  bool pass = rep.pass();
  std::cout << "pass=" << (pass ? "true" : "false") << "\n";
  return pass ? kExitOk : kExitVerifyFail;
}

int run_ucycle(const std::string& in, bool cyclic) {
  Instance inst = read_instance_file(in);
  UcycleResult res;
  int n = 0;
  bool bits = false;
  if (inst.kind == Kind::bitstring) {
    bits = true;
    std::vector<std::string> strings;
    for (const auto& o : inst.objects) strings.push_back(std::get<BitString>(o).bits);
    if (!strings.empty()) n = static_cast<int>(strings[0].size());
    res = solve_debruijn_subset(strings, cyclic);
  } else if (inst.kind == Kind::permutation) {
    std::vector<Permutation> perms;
    for (const auto& o : inst.objects) perms.push_back(std::get<Permutation>(o));
    if (!perms.empty()) n = static_cast<int>(perms[0].vals.size());
    res = solve_shorthand_ucycle(perms, cyclic);
  } else {
    fail(errc::kind_mismatch, "ucycle needs a bitstring or permutation instance");
  }
  std::cout << "answer=" << answer_name(res.answer) << "\n"
            << "cyclic=" << (cyclic ? 1 : 0) << "\n";
  if (res.answer == Answer::yes) {
    std::cout << "length=" << res.sequence.size() << "\nsequence=";
    bool spaced = !bits && n > 9;
    for (size_t i = 0; i < res.sequence.size(); ++i) {
      if (spaced && i) std::cout << ' ';
      std::cout << res.sequence[i];
    }
    std::cout << "\n";
  }
  return kExitOk;
}

int run_gen(const std::string& name, std::optional<int> n, const std::string& out) {
  Instance inst = make_named_instance(name, n);
  if (out.empty()) {
    write_instance(inst, std::cout);
  } else {
    write_instance_file(inst, out);
    std::cout << "instance=" << out << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gray code workbench: flip graphs, Hamilton search, reductions"};
  app.require_subcommand(1);

  std::string in, out, flip, tag, name;
  uint64_t budget = SolveOptions{}.budget;
  uint64_t seed = 1;
  int threads = 1, bound = 10, n_flag = 0, samples = 100;
  bool cyclic = false;
  std::string cert_path;
  std::optional<int> gen_n;

  auto* solve = app.add_subcommand("solve", "decide Hamilton path in the flip graph");
  solve->add_option("--in", in)->required();
  solve->add_option("--out", out);
  solve->add_option("--flip", flip);
  solve->add_option("--budget", budget);
  solve->add_option("--threads", threads);

  auto* cycle = app.add_subcommand("cycle", "decide Hamilton cycle in the flip graph");
  cycle->add_option("--in", in)->required();
  cycle->add_option("--out", out);
  cycle->add_option("--flip", flip);
  cycle->add_option("--budget", budget);
  cycle->add_option("--threads", threads);

  auto* count = app.add_subcommand("count", "count Hamilton paths (small instances)");
  count->add_option("--in", in)->required();
  count->add_option("--flip", flip);
  count->add_option("--bound", bound);

  auto* reduce = app.add_subcommand("reduce", "apply a Gray code reduction");
  reduce->add_option("--in", in)->required();
  reduce->add_option("--out", out);
  reduce->add_option("--tag", tag)->required();

  auto* verify = app.add_subcommand("verify", "check a certificate against an instance");
  verify->add_option("--in", in)->required();
  verify->add_option("--cert", cert_path)->required();
  verify->add_option("--flip", flip);
  verify->add_flag("--cyclic", cyclic);

  auto* vred = app.add_subcommand("verify-reduction", "scan a reduction for violations");
  vred->add_option("--tag", tag)->required();
  vred->add_option("--n", n_flag)->required();
  vred->add_option("--seed", seed);
  vred->add_option("--samples", samples);

  auto* ucycle = app.add_subcommand("ucycle", "de Bruijn / shorthand universal cycle");
  ucycle->add_option("--in", in)->required();
  ucycle->add_flag("--cyclic", cyclic);

  auto* gen = app.add_subcommand("gen", "emit a named example instance");
  gen->add_option("--name", name)->required();
  gen->add_option("--n", gen_n);
  gen->add_option("--out", out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (solve->parsed()) return run_solve(in, out, flip, budget, threads, false);
    if (cycle->parsed()) return run_solve(in, out, flip, budget, threads, true);
    if (count->parsed()) return run_count(in, flip, bound);
    if (reduce->parsed()) return run_reduce(in, out, tag);
    if (verify->parsed()) return run_verify(in, cert_path, flip, cyclic);
    if (vred->parsed()) return run_verify_reduction(tag, n_flag, seed, samples);
    if (ucycle->parsed()) return run_ucycle(in, cyclic);
    if (gen->parsed()) return run_gen(name, gen_n, out);
  } catch (const graycode::Error& e) {
    std::cerr << "error=" << errc_name(e.code()) << " " << e.what() << "\n";
    return e.code() == errc::bound_exceeded ? kExitResource : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error=Internal " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
