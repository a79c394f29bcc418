#include "patchpencil/cli/run.h"

#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>

#include <CLI11.hpp>

#include "patchpencil/cli/render.h"
#include "patchpencil/construct/certify.h"
#include "patchpencil/exactalg/rational.h"
#include "patchpencil/obstruct/obstruct.h"
#include "patchpencil/patchwork/assemble.h"
#include "patchpencil/patchwork/profile.h"

namespace patchpencil::cli {

namespace {

using exactalg::Rat;

const std::regex kFraction(R"(-?[0-9]+(/[0-9]+)?)");

bool is_fraction(const nlohmann::json& j) {
  return j.is_string() && std::regex_match(j.get_ref<const std::string&>(), kFraction);
}

std::string decimal(const nlohmann::json& j) { return exactalg::approx_string(exactalg::parse_rat(j.get<std::string>())); }

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto a = item.find_first_not_of(" \t"), b = item.find_last_not_of(" \t");
    if (a == std::string::npos) fail(ErrorKind::Parse, "empty entry in list '" + s + "'");
    out.push_back(item.substr(a, b - a + 1));
  }
  return out;
}

std::vector<Rat> parse_rats(const std::vector<std::string>& items) {
  std::vector<Rat> out;
  for (const auto& s : items)
    for (const auto& t : split_list(s)) out.push_back(exactalg::parse_rat(t));
  return out;
}

nlohmann::json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Precondition, "cannot read " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::Parse, path + ": " + e.what());
  }
}

std::string render_json(const nlohmann::json& j, const RunConfig& cfg) {
  return (cfg.approx ? with_approx(j) : j).dump(2) + "\n";
}

void emit(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty() || path == "-")
    out << content;
  else
    write_atomic(path, content);
}

void note(const RunConfig& cfg, std::ostream& err, const std::string& msg) {
  if (cfg.verbose) err << "patchpencil: " << msg << "\n";
}

construct::ConstructionParams params_from(int d, const std::vector<std::string>& alphas,
                                          const std::string& epsilon, const std::vector<std::string>& grid) {
  if (d < 3) fail(ErrorKind::Precondition, "d must be at least 3, got " + std::to_string(d));
  auto p = construct::default_params(d);
  if (!alphas.empty()) p.alphas = parse_rats(alphas);
  if (!epsilon.empty()) p.epsilon = exactalg::parse_rat(epsilon);
  if (!grid.empty()) p.a_grid = parse_rats(grid);
  construct::validate(p);
  return p;
}

struct ConstructOpts {
  int d = 0;
  std::vector<std::string> alphas, grid;
  std::string epsilon, out;
  long split_budget = 256;
};

struct PatchworkOpts {
  ConstructOpts c;
  std::string svg, subdivision;
};

struct ProfileOpts {
  std::string poly, half, out;
};

struct ObstructOpts {
  long n = 0, k = 1, l = 0;
  std::string word, positions, out;
};

struct RenderOpts {
  std::string scheme, subdivision, out;
};

void add_construct_flags(CLI::App* cmd, ConstructOpts& o) {
  cmd->add_option("--d", o.d, "degree in Y of the curve C (at least 3)")->required();
  cmd->add_option("--alpha", o.alphas, "roots of the branch parabolas, comma-separated fractions")->delimiter(',');
  cmd->add_option("--epsilon", o.epsilon, "fixed perturbation size; omitted means halving search from 1");
  cmd->add_option("--grid", o.grid, "x-values tried for the all-real fiber")->delimiter(',');
  cmd->add_option("--split-budget", o.split_budget, "branch budget of the smoothness check")->check(CLI::PositiveNumber);
}

int do_construct(const ConstructOpts& o, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto p = params_from(o.d, o.alphas, o.epsilon, o.grid);
  note(cfg, err, "certifying C for d=" + std::to_string(o.d));
  try {
    const auto curve = construct::build_c(p, o.split_budget);
    note(cfg, err, "certified at epsilon " + exactalg::format_rat(curve.epsilon));
    emit(o.out, render_json(construct::to_json(curve), cfg), out);
    return kExitOk;
  } catch (const construct::CertificationError& e) {
    // The failed certificates are still worth reporting.
    nlohmann::json report{{"error", e.what()},
                          {"epsilon", exactalg::format_rat(e.epsilon())},
                          {"certificates", construct::to_json(e.certificates())}};
    emit(o.out, render_json(report, cfg), out);
    throw;
  }
}

int do_patchwork(const PatchworkOpts& o, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto p = params_from(o.c.d, o.c.alphas, o.c.epsilon, o.c.grid);
  note(cfg, err, "assembling the fan patchwork for d=" + std::to_string(o.c.d));
  const auto a = patchwork::assemble_fan(p, cfg.budget, o.c.split_budget);
  note(cfg, err, "word " + a.scheme.word_string());
  emit(o.c.out, render_json(patchwork::to_json(a.scheme), cfg), out);
  if (!o.subdivision.empty()) write_atomic(o.subdivision, render_json(polygon::to_json(a.subdivision), cfg));
  if (!o.svg.empty()) write_atomic(o.svg, render_svg(a.scheme, a.subdivision));
  return kExitOk;
}

int do_profile(const ProfileOpts& o, const RunConfig& cfg, std::ostream& out) {
  const auto doc = read_json(o.poly);
  // Either a bare polynomial or any document with a "poly" field.
  const auto poly = exactalg::bipoly_from_json(doc.is_object() && doc.contains("poly") ? doc.at("poly") : doc);
  nlohmann::json result;
  if (o.half.empty()) {
    result = nlohmann::json::array();
    for (auto h : {patchwork::Half::Negative, patchwork::Half::Positive})
      result.push_back(patchwork::to_json(patchwork::fiber_profile(poly, h, cfg.budget)));
  } else {
    result = patchwork::to_json(patchwork::fiber_profile(poly, patchwork::half_from_string(o.half), cfg.budget));
  }
  emit(o.out, render_json(result, cfg), out);
  return kExitOk;
}

int do_obstruct(const ObstructOpts& o, const RunConfig& cfg, std::ostream& out) {
  std::optional<std::vector<Rat>> positions;
  if (!o.positions.empty()) positions = parse_rats({o.positions});
  const auto word = obstruct::parse_event_word(o.word, positions);
  const auto v = obstruct::decide({o.n, o.k, o.l}, word);
  emit(o.out, render_json(obstruct::to_json(v), cfg), out);
  return kExitOk;
}

int do_render(const RenderOpts& o, std::ostream& out) {
  const auto scheme = patchwork::lscheme_from_json(read_json(o.scheme));
  const auto sub = polygon::subdivision_from_json(read_json(o.subdivision));
  emit(o.out, render_svg(scheme, sub), out);
  return kExitOk;
}

}  // namespace

int exit_code_for(const Error& e, bool explicit_epsilon) {
  switch (e.kind()) {
    case ErrorKind::Precondition:
    case ErrorKind::Parse:
      return kExitUsage;
    case ErrorKind::Inconsistent:
      return kExitRefuted;
    case ErrorKind::Certification:
      return explicit_epsilon ? kExitRefuted : kExitUnverified;
    case ErrorKind::Inconclusive:
      return kExitUnverified;
  }
  return kExitFailure;
}

long budget_from_env(long fallback) {
  const char* raw = std::getenv(kBudgetEnv);
  if (!raw) return fallback;
  const std::string s(raw);
  char* end = nullptr;
  const long v = std::strtol(s.c_str(), &end, 10);
  if (s.empty() || *end != '\0' || v <= 0)
    fail(ErrorKind::Precondition, std::string(kBudgetEnv) + " must be a positive integer, got '" + s + "'");
  return v;
}

nlohmann::json with_approx(const nlohmann::json& j) {
  if (j.is_array()) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& e : j) out.push_back(with_approx(e));
    return out;
  }
  if (!j.is_object()) return j;
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [key, value] : j.items()) {
    out[key] = with_approx(value);
    if (is_fraction(value)) {
      out[key + "_approx"] = decimal(value);
    } else if (value.is_array() && !value.empty() &&
               std::all_of(value.begin(), value.end(), [](const nlohmann::json& v) { return is_fraction(v); })) {
      nlohmann::json list = nlohmann::json::array();
      for (const auto& v : value) list.push_back(decimal(v));
      out[key + "_approx"] = list;
    }
  }
  if (j.contains("root_of") && is_fraction(j.value("lo", nlohmann::json())) && is_fraction(j.value("hi", nlohmann::json())))
    out["approx"] = exactalg::approx_string((exactalg::parse_rat(j["lo"].get<std::string>()) +
                                             exactalg::parse_rat(j["hi"].get<std::string>())) / 2);
  return out;
}

void write_atomic(const std::filesystem::path& path, const std::string& content) {
  auto tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write " + tmp.string());
    f << content;
    f.flush();
    if (!f) {
      std::error_code ec;
      std::filesystem::remove(tmp, ec);
      throw std::runtime_error("cannot write " + tmp.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw std::runtime_error("cannot move output into place at " + path.string());
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact patchworking, fiber profiles and tangency obstructions for real plane curves."};
  app.name(args.empty() ? "patchpencil" : std::filesystem::path(args[0]).filename().string());
  app.require_subcommand(1);

  RunConfig cfg;
  std::optional<long> budget_flag;
  app.add_flag("--approx", cfg.approx, "add decimal annotations next to exact fractions");
  app.add_flag("-v,--verbose", cfg.verbose, "progress notes on stderr");
  app.add_option("--budget", budget_flag, "refinement budget (overrides " + std::string(kBudgetEnv) + ")")
      ->check(CLI::PositiveNumber);

  ConstructOpts construct_opts;
  auto* construct_cmd = app.add_subcommand("construct", "certify the perturbed curve C");
  add_construct_flags(construct_cmd, construct_opts);
  construct_cmd->add_option("--out", construct_opts.out, "output JSON (default stdout)");

  PatchworkOpts patch_opts;
  auto* patch_cmd = app.add_subcommand("patchwork", "glue the six-piece fan and report its event scheme");
  add_construct_flags(patch_cmd, patch_opts.c);
  patch_cmd->add_option("--out", patch_opts.c.out, "scheme JSON (default stdout)");
  patch_cmd->add_option("--svg", patch_opts.svg, "diagram of the subdivision and the event strip");
  patch_cmd->add_option("--subdivision", patch_opts.subdivision, "subdivision JSON");

  ProfileOpts profile_opts;
  auto* profile_cmd = app.add_subcommand("profile", "fiber events of one polynomial");
  profile_cmd->add_option("--poly", profile_opts.poly, "polynomial JSON (monomial list or a document with \"poly\")")
      ->required();
  profile_cmd->add_option("--half", profile_opts.half, "pos or neg (default both)")
      ->check(CLI::IsMember({"pos", "neg"}));
  profile_cmd->add_option("--out", profile_opts.out, "output JSON (default stdout)");

  ObstructOpts obstruct_opts;
  auto* obstruct_cmd = app.add_subcommand("obstruct", "degree obstruction for an event word");
  obstruct_cmd->add_option("--n", obstruct_opts.n, "Hirzebruch index")->required()->check(CLI::NonNegativeNumber);
  obstruct_cmd->add_option("--l", obstruct_opts.l, "second bidegree entry")->required()->check(CLI::NonNegativeNumber);
  obstruct_cmd->add_option("--k", obstruct_opts.k, "first bidegree entry")->check(CLI::PositiveNumber);
  obstruct_cmd->add_option("--word", obstruct_opts.word, "letters T and R, e.g. \"T T R T R T\"")->required();
  obstruct_cmd->add_option("--positions", obstruct_opts.positions, "strictly increasing fractions, comma-separated");
  obstruct_cmd->add_option("--out", obstruct_opts.out, "output JSON (default stdout)");

  RenderOpts render_opts;
  auto* render_cmd = app.add_subcommand("render", "draw a scheme and its subdivision as SVG");
  render_cmd->add_option("--scheme", render_opts.scheme, "scheme JSON")->required();
  render_cmd->add_option("--subdivision", render_opts.subdivision, "subdivision JSON")->required();
  render_cmd->add_option("--out", render_opts.out, "output SVG (default stdout)");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << app.get_name() << ": " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  bool explicit_epsilon = false;
  try {
    cfg.budget = budget_flag ? *budget_flag : budget_from_env(kDefaultBudget);
    if (construct_cmd->parsed()) {
      explicit_epsilon = !construct_opts.epsilon.empty();
      return do_construct(construct_opts, cfg, out, err);
    }
    if (patch_cmd->parsed()) {
      explicit_epsilon = !patch_opts.c.epsilon.empty();
      return do_patchwork(patch_opts, cfg, out, err);
    }
    if (profile_cmd->parsed()) return do_profile(profile_opts, cfg, out);
    if (obstruct_cmd->parsed()) return do_obstruct(obstruct_opts, cfg, out);
    if (render_cmd->parsed()) return do_render(render_opts, out);
  } catch (const Error& e) {
    err << app.get_name() << ": " << e.what() << "\n";
    return exit_code_for(e, explicit_epsilon);
  } catch (const std::exception& e) {
    err << app.get_name() << ": " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace patchpencil::cli
