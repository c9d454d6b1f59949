// Command-line front end: every computation the library exposes, plus the
// exhaustive verification harness. Exit codes: 0 ok, 1 domain or usage
// error, 2 verification failure.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <klcells.hpp>

namespace {

using namespace klcells;

struct Options {
  std::string format = "ascii";
  bool parallel = false;
  int max_n = 0;  // 0 = unset
};

void emit(const Options& opt, const nlohmann::json& j, const std::string& ascii) {
  if (opt.format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << ascii;
}

std::string perm_line(const Permutation& w) {
  return to_string(w) + "  len " + std::to_string(length(w)) + "  " + to_string(reduced_word(w));
}

std::string list_block(const std::string& title, const std::vector<Permutation>& v) {
  std::string out = title + " (" + std::to_string(v.size()) + "):\n";
  for (const Permutation& w : v) out += "  " + perm_line(w) + "\n";
  return out;
}

std::string indent(const std::string& text) {
  std::string out;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    out += "  " + text.substr(start, end - start) + "\n";
    start = end + 1;
  }
  return out;
}

void run_rim(const Options& opt, const std::string& lambda_text) {
  Composition lambda = parse_composition(lambda_text);
  CellReport r = cell_report(lambda);
  std::string ascii = "lambda: " + to_string(lambda) + "\n|Z| = " + std::to_string(r.z.size()) +
                      "\n" + list_block("Y", r.rim) + list_block("Y_s", r.special) +
                      "E (" + std::to_string(r.diagrams.size()) + "):\n";
  for (std::size_t i = 0; i < r.diagrams.size(); ++i)
    ascii += "  for " + to_string(r.rim[i]) + ":\n" + indent(indent(render_ascii(r.diagrams[i])));
  emit(opt, json_of(r), ascii);
}

void run_cell(const Options& opt, const std::string& lambda_text) {
  Composition lambda = parse_composition(lambda_text);
  CellReport r = cell_report(lambda);
  std::string ascii = "lambda: " + to_string(lambda) + "\nw_J = " +
                      to_string(parabolic_longest(lambda)) + "\n" + list_block("cell", r.cell);
  emit(opt, json_of(r), ascii);
}

void run_zset(const Options& opt, const std::string& lambda_text) {
  Composition lambda = parse_composition(lambda_text);
  std::vector<Permutation> z = enumerate_Z(lambda);
  nlohmann::json jz = nlohmann::json::array();
  for (const Permutation& e : z) jz.push_back(json_of(e));
  emit(opt, nlohmann::json{{"lambda", json_of(lambda)}, {"Z", jz}},
       "lambda: " + to_string(lambda) + "\n" + list_block("Z", z));
}

void run_rs(const Options& opt, const std::string& perm_text) {
  Permutation w = parse_permutation(perm_text);
  RSPair pq = rs_pair(w);
  emit(opt, json_of(pq),
       "w = " + to_string(w) + "\nP:\n" + indent(render_ascii(pq.p)) + "Q:\n" +
           indent(render_ascii(pq.q)));
}

void run_diagram_info(const Options& opt, const std::string& diagram_text) {
  Diagram d = parse_diagram(diagram_text);
  Partition nu = subsequence_type(d);
  nlohmann::json j{{"rows", json_of(row_composition(d))},
                   {"cols", json_of(column_composition(d))},
                   {"special", is_special(d)},
                   {"admissible", is_admissible(d)},
                   {"subsequence_type", json_of(nu)},
                   {"w", json_of(w_of(d))}};
  std::string ascii = render_ascii(d) + "\nrows: " + to_string(row_composition(d)) +
                      "\ncols: " + to_string(column_composition(d)) +
                      "\nspecial: " + (is_special(d) ? "yes" : "no") +
                      "\nadmissible: " + (is_admissible(d) ? "yes" : "no") +
                      "\nsubsequence type: " + to_string(nu) + "\n";
  emit(opt, j, ascii);
}

void run_diagram_wd(const Options& opt, const std::string& diagram_text) {
  Diagram d = parse_diagram(diagram_text);
  Permutation w = w_of(d);
  emit(opt, nlohmann::json{{"w", json_of(w)}}, "w_D = " + to_string(w) + "\n");
}

void run_dlambda(const Options& opt, const std::string& perm_text, const std::string& lambda_text) {
  Composition lambda = parse_composition(lambda_text);
  Permutation d = parse_permutation(perm_text, lambda.n());
  Diagram canon = canonical_diagram(d, lambda);
  emit(opt, json_of(canon), render_ascii(canon) + "\n");
}

std::string lift_ascii(const LiftReport& r) {
  std::string ascii = "lambda: " + to_string(r.lambda) + " -> " + to_string(r.target) + "\n";
  if (r.kind == "k") ascii += "k = " + std::to_string(r.k) + "  condition: " + r.condition + "\n";
  ascii += "pairs:\n";
  for (const LiftPair& p : r.pairs)
    ascii += "  " + to_string(p.z) + " -> " + to_string(p.image) + "   connector " +
             to_string(reduced_word(p.connector)) + "\n";
  ascii += "checks:\n";
  for (const auto& [name, ok] : r.checks)
    ascii += "  " + name + ": " + (ok ? "yes" : "no") + "\n";
  return ascii;
}

void run_lift_star(const Options& opt, const std::string& lambda_text) {
  Composition lambda = parse_composition(lambda_text);
  LiftReport r = lift_star_report(lambda);
  emit(opt, json_of(r), lift_ascii(r));
}

void run_lift_k(const Options& opt, const std::string& lambda_text, int k) {
  Composition lambda = parse_composition(lambda_text);
  LiftReport r = lift_k_report(lambda, k);
  emit(opt, json_of(r), lift_ascii(r));
}

void run_induce(const Options& opt, const std::string& lambda_text) {
  Composition lambda = parse_composition(lambda_text);
  CellId a{rs_pair(parabolic_longest(lambda)).q};
  std::vector<CellId> children = induce_cell(a);
  std::string ascii = "lambda: " + to_string(lambda) + "\nQ(w_J):\n" +
                      indent(render_ascii(a.recording)) + "children (" +
                      std::to_string(children.size()) + "):\n";
  for (const CellId& c : children)
    ascii += "  shape " + to_string(c.recording.shape()) + ":\n" +
             indent(indent(render_ascii(c.recording)));
  emit(opt, nlohmann::json{{"lambda", json_of(lambda)}, {"children", json_of(children)}}, ascii);
}

void run_restrict(const Options& opt, const std::string& lambda_text) {
  Composition lambda = parse_composition(lambda_text);
  CellId a{rs_pair(parabolic_longest(lambda)).q};
  std::vector<RestrictionPair> parts = restrict_cell(a);
  std::string ascii = "lambda: " + to_string(lambda) + "\nQ(w_J):\n" +
                      indent(render_ascii(a.recording)) + "parts (" +
                      std::to_string(parts.size()) + "):\n";
  for (const RestrictionPair& p : parts)
    ascii += "  corner (" + std::to_string(p.corner.row) + "," + std::to_string(p.corner.col) +
             ") expels " + std::to_string(p.expelled) + ", d = " + to_string(p.d) + "\n" +
             indent(indent(render_ascii(p.child.recording)));
  emit(opt, nlohmann::json{{"lambda", json_of(lambda)}, {"parts", json_of(parts)}}, ascii);
}

void run_families(const Options& opt, const std::string& lambda_text) {
  Composition lambda = parse_composition(lambda_text);
  FamilyRim f = family_rim(lambda);
  std::string ascii = "lambda: " + to_string(lambda) + "\nfamily: " + to_string(f.family) +
                      "\npredicted size: " + std::to_string(f.predicted_size) + "\n" +
                      list_block("rim", f.rim);
  emit(opt, json_of(f), ascii);
}

int run_verify(const Options& opt, int bound) {
  std::vector<CheckResult> results = run_verification(bound, opt.parallel);
  bool all_ok = true;
  nlohmann::json jr = nlohmann::json::array();
  std::string ascii;
  for (const CheckResult& r : results) {
    all_ok = all_ok && r.passed;
    jr.push_back(nlohmann::json{{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    ascii += r.name + ": " + (r.passed ? "ok" : "FAIL  " + r.detail) + "\n";
  }
  ascii += all_ok ? "all checks passed\n" : "verification failed\n";
  emit(opt, nlohmann::json{{"max_n", bound}, {"checks", jr}, {"passed", all_ok}}, ascii);
  return all_ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Right cells of symmetric groups through the diagram calculus"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"ascii", "json"}))
      ->capture_default_str();
  app.add_flag("--parallel", opt.parallel, "Shard verification across threads");
  app.add_option("--max-n", opt.max_n, "Verification bound (alternative to the positional)");

  std::string lambda_text, perm_text, diagram_text;
  int k = 0, verify_n = 0;
  int exit_code = 0;

  CLI::App* rim = app.add_subcommand("rim", "Y(lambda), Y_s(lambda), rim diagrams, reduced words");
  rim->add_option("lambda", lambda_text)->required();
  rim->callback([&] { run_rim(opt, lambda_text); });

  CLI::App* cell = app.add_subcommand("cell", "The full right cell of w_J(lambda)");
  cell->add_option("lambda", lambda_text)->required();
  cell->callback([&] { run_cell(opt, lambda_text); });

  CLI::App* zset = app.add_subcommand("zset", "The distinguished set Z(lambda)");
  zset->add_option("lambda", lambda_text)->required();
  zset->callback([&] { run_zset(opt, lambda_text); });

  CLI::App* rs = app.add_subcommand("rs", "Insertion and recording tableaux of a permutation");
  rs->add_option("perm", perm_text)->required();
  rs->callback([&] { run_rs(opt, perm_text); });

  CLI::App* diagram = app.add_subcommand("diagram", "Diagram inspection");
  diagram->require_subcommand(1);
  CLI::App* dinfo = diagram->add_subcommand("info", "Compositions, specialness, path invariant");
  dinfo->add_option("diagram", diagram_text)->required();
  dinfo->callback([&] { run_diagram_info(opt, diagram_text); });
  CLI::App* dwd = diagram->add_subcommand("wd", "The permutation w_D");
  dwd->add_option("diagram", diagram_text)->required();
  dwd->callback([&] { run_diagram_wd(opt, diagram_text); });

  CLI::App* dlambda = app.add_subcommand("dlambda", "Canonical diagram D(d,lambda)");
  dlambda->add_option("perm", perm_text)->required();
  dlambda->add_option("lambda", lambda_text)->required();
  dlambda->callback([&] { run_dlambda(opt, perm_text, lambda_text); });

  CLI::App* lift = app.add_subcommand("lift", "Lifting maps into larger symmetric groups");
  lift->require_subcommand(1);
  CLI::App* lstar = lift->add_subcommand("star", "theta_*: append a part 1");
  lstar->add_option("lambda", lambda_text)->required();
  lstar->callback([&] { run_lift_star(opt, lambda_text); });
  CLI::App* lk = lift->add_subcommand("k", "theta_k: grow a maximal part");
  lk->add_option("lambda", lambda_text)->required();
  lk->add_option("k", k)->required();
  lk->callback([&] { run_lift_k(opt, lambda_text, k); });

  CLI::App* induce = app.add_subcommand("induce", "Cell decomposition one degree up");
  induce->add_option("lambda", lambda_text)->required();
  induce->callback([&] { run_induce(opt, lambda_text); });

  CLI::App* restr = app.add_subcommand("restrict", "Cell decomposition one degree down");
  restr->add_option("lambda", lambda_text)->required();
  restr->callback([&] { run_restrict(opt, lambda_text); });

  CLI::App* families = app.add_subcommand("families", "Closed-form rim when one applies");
  families->add_option("lambda", lambda_text)->required();
  families->callback([&] { run_families(opt, lambda_text); });

  CLI::App* verify = app.add_subcommand("verify", "Exhaustive checks for all lambda up to a bound");
  verify->add_option("n", verify_n, "Bound on the composition size");
  verify->callback([&] {
    int bound = verify_n > 0 ? verify_n : (opt.max_n > 0 ? opt.max_n : 5);
    exit_code = run_verify(opt, bound);
  });

  for (CLI::App* sub : {rim, cell, zset, rs, diagram, dinfo, dwd, dlambda, lift, lstar, lk,
                        induce, restr, families, verify})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
  return exit_code;
}
