#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "toricoh/oracle.hpp"
#include "toricoh/report.hpp"

namespace {

using namespace toricoh;

// Exit codes: 0 ok, 1 invalid fan, 2 unsupported fan class, 3 I/O or syntax.
constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitUnsupported = 2;
constexpr int kExitInput = 3;

int exit_code_for(const Error& e) {
  return e.code() == Errc::unsupported_fan ? kExitUnsupported : kExitInput;
}

struct Input {
  std::string label;
  Fan fan;
};

Input load_input(const std::string& file, const std::string& builtin) {
  if (!builtin.empty()) return {"builtin:" + builtin, builtin_fan(builtin)};
  std::ifstream in(file);
  if (!in) fail(Errc::syntax_error, "cannot open '" + file + "'");
  return {file, parse_fan(in)};
}

int run_validate(const std::string& file) {
  std::ifstream in(file);
  if (!in) fail(Errc::syntax_error, "cannot open '" + file + "'");
  Fan fan = parse_fan(in);
  auto report = validate_fan(fan);
  if (report.ok()) {
    std::cout << "ok\n";
    return kExitOk;
  }
  for (const auto& v : report.violations) std::cout << v.to_line() << "\n";
  return kExitInvalid;
}

int reject_if_unusable(const Fan& fan) {
  auto report = validate_fan(fan);
  if (!report.ok()) {
    for (const auto& v : report.violations) std::cerr << v.to_line() << "\n";
    return kExitInvalid;
  }
  auto cls = classify_fan(fan);
  if (cls.kind == FanClassKind::unsupported) {
    std::cerr << "unsupported: " << cls.reason << "\n";
    return kExitUnsupported;
  }
  return kExitOk;
}

int run_analyze(const Input& input, bool as_json, std::optional<Coord> max_degree) {
  if (int rc = reject_if_unusable(input.fan); rc != kExitOk) return rc;
  AnalyzeOptions opts{max_degree};
  if (as_json)
    std::cout << analysis_json(input.label, input.fan, opts).dump(2) << "\n";
  else
    std::cout << analysis_text(input.label, input.fan, opts);
  return kExitOk;
}

int run_complete(const Input& input, const std::string& fan_out, bool as_json) {
  if (int rc = reject_if_unusable(input.fan); rc != kExitOk) return rc;
  if (as_json) {
    std::cout << completion_json(input.label, input.fan).dump(2) << "\n";
    return kExitOk;
  }
  std::string text = serialize_completion(complete_fan(input.fan));
  if (fan_out.empty()) {
    std::cout << text;
    return kExitOk;
  }
  std::ofstream out(fan_out);
  if (!out) fail(Errc::syntax_error, "cannot open '" + fan_out + "' for writing");
  out << text;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"compactly supported cohomology of smooth toric surfaces"};
  app.require_subcommand(1);

  std::string file, builtin, fan_out;
  bool as_json = false, as_text = false;
  std::optional<Coord> max_degree;

  auto* validate = app.add_subcommand("validate", "check a fan file against the model invariants");
  std::string validate_file;
  validate->add_option("file", validate_file, "fan file")->required();

  auto add_input_options = [&](CLI::App* sub) {
    auto* pos = sub->add_option("file", file, "fan file");
    auto* opt = sub->add_option("--builtin", builtin, "builtin fan name");
    pos->excludes(opt);
    sub->callback([pos, opt]() {
      if (pos->count() == 0 && opt->count() == 0)
        throw CLI::RequiredError("a fan file or --builtin NAME");
    });
  };

  auto* analyze = app.add_subcommand("analyze", "classify a fan and report its cohomology");
  add_input_options(analyze);
  auto* json_flag = analyze->add_flag("--json", as_json, "emit the JSON document");
  auto* text_flag = analyze->add_flag("--text", as_text, "emit the text report (default)");
  json_flag->excludes(text_flag);
  Coord max_degree_value = -1;
  analyze->add_option("--max-degree", max_degree_value, "graded dimension table up to this degree")
      ->check(CLI::NonNegativeNumber);

  auto* complete = app.add_subcommand("complete", "embed the fan in a complete smooth fan");
  add_input_options(complete);
  complete->add_option("--fan-out", fan_out, "write the completed fan file here");
  complete->add_flag("--json", as_json, "emit a JSON summary instead of a fan file");

  // Debugging aid, intentionally undocumented: exposes the brute-force
  // oracles the tests use.
  auto* oracle_cmd = app.add_subcommand("oracle", "");
  oracle_cmd->group("");
  auto* nf = oracle_cmd->add_subcommand("normal-form", "");
  std::vector<Coord> nf_coords;
  Coord nf_max_entry = 64;
  nf->add_option("coords", nf_coords, "vx vy wx wy")->expected(4);
  nf->add_option("--max-entry", nf_max_entry, "");
  auto* cnt = oracle_cmd->add_subcommand("count", "");
  std::vector<Coord> cnt_args;
  cnt->add_option("pqd", cnt_args, "p q d")->expected(3);
  auto* cover = oracle_cmd->add_subcommand("cover", "");
  add_input_options(cover);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Keep the exit-code contract: any usage problem is an input error.
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInput;
  }

  try {
    if (validate->parsed()) return run_validate(validate_file);
    if (analyze->parsed()) {
      if (analyze->count("--max-degree")) max_degree = max_degree_value;
      return run_analyze(load_input(file, builtin), as_json, max_degree);
    }
    if (complete->parsed()) return run_complete(load_input(file, builtin), fan_out, as_json);
    if (oracle_cmd->parsed()) {
      if (nf->parsed()) {
        auto t = toricoh::oracle::normal_form_search({nf_coords[0], nf_coords[1]},
                                                     {nf_coords[2], nf_coords[3]},
                                                     {nf_max_entry, 200});
        std::cout << t.p << " " << t.q << "\n";
        return kExitOk;
      }
      if (cnt->parsed()) {
        std::cout << toricoh::oracle::count_lattice_slice(cnt_args[0], cnt_args[1], cnt_args[2])
                  << "\n";
        return kExitOk;
      }
      if (cover->parsed()) {
        auto input = load_input(file, builtin);
        std::cout << (toricoh::oracle::check_complete_cover(input.fan) ? "true" : "false") << "\n";
        return kExitOk;
      }
      std::cerr << "oracle: expected a subcommand\n";
      return kExitInput;
    }
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
