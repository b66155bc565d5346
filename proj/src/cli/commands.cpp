#include "ncq/cli/commands.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "ncq/checks/associativity.hpp"
#include "ncq/checks/centrality.hpp"
#include "ncq/checks/jacobi.hpp"
#include "ncq/checks/star.hpp"
#include "ncq/dsl/elaborate.hpp"
#include "ncq/dsl/parser.hpp"
#include "ncq/dsl/printer.hpp"
#include "ncq/ordering/orderer.hpp"

namespace ncq::cli {

namespace {

using nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string through(std::size_t order) { return "through e^" + std::to_string(order); }

struct Context {
  const RunConfig& config;
  dsl::SystemSpec spec;
  std::size_t order;
  Orderer orderer;
  std::vector<EpsSeries> central;

  const NameTable& names() const { return orderer.system().names(); }
};

ordered_json header(const Context& ctx, const std::string& command) {
  ordered_json j;
  j["system"] = ctx.config.input;
  j["command"] = command;
  j["trunc_order"] = ctx.order;
  j["seed"] = ctx.config.seed;
  j["verdict"] = "INFO";
  j["residuals"] = ordered_json::array();
  j["witnesses"] = ordered_json::array();
  return j;
}

void text_header(std::ostream& out, const ordered_json& j) {
  out << "system: " << j["system"].get<std::string>() << "\n"
      << "command: " << j["command"].get<std::string>() << "\n"
      << "trunc_order: " << j["trunc_order"].get<std::size_t>() << "\n"
      << "seed: " << j["seed"].get<std::uint64_t>() << "\n";
}

std::string verdict_line(const ordered_json& j) {
  return "verdict: " + j["verdict"].get<std::string>() + " (" + through(j["trunc_order"]) + ")";
}

// --- individual commands: fill the JSON and append text lines ------------

ordered_json jacobi_json(const Context& ctx, std::vector<std::string>& lines) {
  ordered_json j = header(ctx, "jacobi");
  JacobiReport report = check_jacobi(ctx.orderer, ctx.config.threads);
  const auto& sys = ctx.orderer.system();
  for (const auto& e : report.entries) {
    std::string residual = e.residual.to_string(ctx.names());
    j["residuals"].push_back({{"triple", {sys.name(e.i), sys.name(e.j), sys.name(e.k)}},
                              {"residual", residual},
                              {"pass", e.passed()}});
    lines.push_back("jacobi [" + sys.name(e.i) + ", " + sys.name(e.j) + ", " + sys.name(e.k) +
                    "]: " + residual);
  }
  j["vacuous"] = report.vacuous();
  if (report.vacuous()) {
    j["note"] = "no generator triples; Corollary: n=2 always passes";
    lines.push_back("note: " + j["note"].get<std::string>());
  }
  j["verdict"] = report.passed() ? "PASS" : "FAIL";
  return j;
}

ordered_json assoc_json(const Context& ctx, std::vector<std::string>& lines) {
  ordered_json j = header(ctx, "assoc");
  const auto& cfg = ctx.config;
  AssocReport report = check_associativity(ctx.orderer, cfg.max_len, cfg.samples, cfg.seed, cfg.threads);
  std::size_t generator_triples = 0;
  for (const auto& s : report.samples) generator_triples += s.generator_triple ? 1 : 0;
  j["generator_triples"] = generator_triples;
  j["random_samples"] = cfg.samples;
  j["max_len"] = cfg.max_len;
  lines.push_back("samples: " + std::to_string(generator_triples) + " generator triples + " +
                  std::to_string(cfg.samples) + " random (max_len " + std::to_string(cfg.max_len) + ")");
  for (const auto& f : report.failures) {
    const auto& s = report.samples[f.sample];
    std::string fs = s.f.to_string(ctx.names()), gs = s.g.to_string(ctx.names()),
                hs = s.h.to_string(ctx.names());
    std::string d = f.discrepancy.to_string(ctx.names());
    j["witnesses"].push_back({{"sample", f.sample},
                              {"f", fs},
                              {"g", gs},
                              {"h", hs},
                              {"generator_triple", s.generator_triple},
                              {"discrepancy", d}});
    lines.push_back("witness (" + fs + ", " + gs + ", " + hs + "): " + d);
  }
  j["failures"] = report.failures.size();
  j["verdict"] = report.passed() ? "PASS" : "FAIL";
  return j;
}

ordered_json center_json(const Context& ctx, std::vector<std::string>& lines) {
  ordered_json j = header(ctx, "center");
  bool all = true;
  const auto& sys = ctx.orderer.system();
  j["candidates"] = ordered_json::array();
  for (std::size_t c = 0; c < ctx.central.size(); ++c) {
    std::string name = dsl::print(ctx.spec.central[c]);
    CentralityReport report = check_central(ctx.orderer, ctx.central[c]);
    std::string line = name + ": ";
    std::vector<std::string> bad;
    for (std::size_t k = 0; k < report.residuals.size(); ++k) {
      std::string gen = sys.name(static_cast<Letter>(k + 1));
      std::string r = report.residuals[k].to_string(ctx.names());
      bool ok = report.residuals[k].is_zero();
      j["residuals"].push_back({{"candidate", name}, {"generator", gen}, {"residual", r}, {"pass", ok}});
      if (!ok) bad.push_back("[" + name + ", " + gen + "] = " + r);
    }
    j["candidates"].push_back({{"candidate", name}, {"central", report.central()}});
    if (report.central()) {
      line += "central " + through(ctx.order);
    } else {
      all = false;
      line += "NOT central";
      for (const auto& b : bad) line += ", " + b;
    }
    lines.push_back(line);
  }
  if (ctx.central.empty()) lines.push_back("note: no central candidates declared");
  j["verdict"] = all ? "PASS" : "FAIL";
  return j;
}

ordered_json poisson_json(const Context& ctx, std::vector<std::string>& lines) {
  ordered_json arr = ordered_json::array();
  const auto& sys = ctx.orderer.system();
  const auto n = static_cast<Letter>(sys.size());
  for (Letter a = 1; a <= n; ++a)
    for (Letter b = a + 1; b <= n; ++b) {
      std::string p = poisson_bracket(sys, a, b).to_string(ctx.names());
      arr.push_back({{"pair", {sys.name(a), sys.name(b)}}, {"bracket", p}});
      lines.push_back("poisson {" + sys.name(a) + ", " + sys.name(b) + "} = " + p);
    }
  return arr;
}

EpsSeries argument_series(const Context& ctx, const std::string& text) {
  try {
    return dsl::elaborate_expr(ctx.spec, dsl::parse_expression(text), ctx.order);
  } catch (const dsl::ParseError& e) {
    throw UsageError("in expression '" + text + "': " + e.what());
  }
}

CommPoly classical_argument(const Context& ctx, const std::string& text) {
  EpsSeries s = argument_series(ctx, text);
  for (std::size_t r = 1; r <= s.order(); ++r)
    if (!s.layer(r).is_zero()) throw UsageError("star arguments must not contain e: '" + text + "'");
  return project_classical(s);
}

void emit(const Context& ctx, std::ostream& out, const ordered_json& j, const std::vector<std::string>& lines,
          bool with_verdict) {
  if (ctx.config.format == Format::Json) {
    out << j.dump(2) << "\n";
    return;
  }
  text_header(out, j);
  for (const auto& l : lines) out << l << "\n";
  if (with_verdict) out << verdict_line(j) << "\n";
}

int exit_for(const ordered_json& j) { return j["verdict"] == "FAIL" ? kCheckFailed : kPass; }

int dispatch(Context& ctx, std::ostream& out) {
  const auto& cfg = ctx.config;
  std::vector<std::string> lines;
  auto need_args = [&](std::size_t k) {
    if (cfg.args.size() != k)
      throw UsageError("'" + cfg.command + "' expects " + std::to_string(k) + " argument(s) after the file");
  };

  if (cfg.command == "order") {
    need_args(1);
    ordered_json j = header(ctx, "order");
    EpsSeries f = argument_series(ctx, cfg.args[0]);
    std::string result = ctx.orderer.phi_inf(f).to_string(ctx.names());
    j["expr"] = cfg.args[0];
    j["result"] = result;
    lines.push_back("expr: " + cfg.args[0]);
    lines.push_back("result: " + result);
    emit(ctx, out, j, lines, false);
    return kPass;
  }
  if (cfg.command == "star") {
    need_args(2);
    ordered_json j = header(ctx, "star");
    CommPoly f = classical_argument(ctx, cfg.args[0]);
    CommPoly g = classical_argument(ctx, cfg.args[1]);
    j["f"] = cfg.args[0];
    j["g"] = cfg.args[1];
    j["coefficients"] = ordered_json::array();
    lines.push_back("star " + cfg.args[0] + " " + cfg.args[1]);
    auto coeffs = star_coefficients(ctx.orderer, f, g);
    for (std::size_t r = 0; r < coeffs.size(); ++r) {
      std::string c = coeffs[r].to_string(ctx.names());
      j["coefficients"].push_back(c);
      lines.push_back("C_" + std::to_string(r) + " = " + c);
    }
    emit(ctx, out, j, lines, false);
    return kPass;
  }
  need_args(0);
  if (cfg.command == "jacobi") {
    auto j = jacobi_json(ctx, lines);
    emit(ctx, out, j, lines, true);
    return exit_for(j);
  }
  if (cfg.command == "assoc") {
    auto j = assoc_json(ctx, lines);
    emit(ctx, out, j, lines, true);
    return exit_for(j);
  }
  if (cfg.command == "center") {
    auto j = center_json(ctx, lines);
    emit(ctx, out, j, lines, true);
    return exit_for(j);
  }
  if (cfg.command == "report") {
    ordered_json j = header(ctx, "report");
    std::vector<std::string> scratch;
    ordered_json checks;
    checks["jacobi"] = jacobi_json(ctx, scratch);
    lines.insert(lines.end(), scratch.begin(), scratch.end());
    lines.push_back("jacobi " + verdict_line(checks["jacobi"]));
    scratch.clear();
    checks["assoc"] = assoc_json(ctx, scratch);
    lines.insert(lines.end(), scratch.begin(), scratch.end());
    lines.push_back("assoc " + verdict_line(checks["assoc"]));
    scratch.clear();
    checks["center"] = center_json(ctx, scratch);
    lines.insert(lines.end(), scratch.begin(), scratch.end());
    lines.push_back("center " + verdict_line(checks["center"]));
    scratch.clear();
    checks["poisson"] = poisson_json(ctx, scratch);
    lines.insert(lines.end(), scratch.begin(), scratch.end());
    bool ok = checks["jacobi"]["verdict"] == "PASS" && checks["assoc"]["verdict"] == "PASS" &&
              checks["center"]["verdict"] == "PASS";
    j["verdict"] = ok ? "PASS" : "FAIL";
    for (const char* name : {"jacobi", "assoc", "center"}) {
      for (const auto& r : checks[name]["residuals"]) j["residuals"].push_back(r);
      for (const auto& w : checks[name]["witnesses"]) j["witnesses"].push_back(w);
    }
    j["checks"] = std::move(checks);
    emit(ctx, out, j, lines, true);
    return exit_for(j);
  }
  throw UsageError("unknown command '" + cfg.command + "'");
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::string text;
  try {
    text = read_file(config.input);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  try {
    dsl::SystemSpec spec = dsl::parse_system(text);
    std::size_t order = dsl::effective_order(spec, config.order);
    dsl::ElaboratedSystem elab = dsl::elaborate(spec, order);
    Context ctx{config, std::move(spec), order, Orderer(std::move(elab.system), config.cache_limit),
                std::move(elab.central)};
    int code = dispatch(ctx, out);
    if (config.verbosity > 0) {
      auto stats = ctx.orderer.cache_stats();
      err << "cache: " << stats.phi_entries << " phi entries, " << stats.complete_entries
          << " complete entries, " << stats.hits << " hits, " << stats.misses << " misses\n";
    }
    return code;
  } catch (const dsl::ParseError& e) {
    err << config.input << ":" << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
}

int main_entry(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Normal-ordering engine and deformation-quantization checks for .ncq systems", "ncq"};
  app.require_subcommand(1);
  RunConfig config;
  if (const char* env = std::getenv("NCQ_CACHE_SIZE")) {
    try {
      config.cache_limit = std::stoull(env);
    } catch (const std::exception&) {
      err << "error: NCQ_CACHE_SIZE must be a non-negative integer\n";
      return kUsageError;
    }
  }

  std::size_t order_value = 0;
  std::string format = "text";
  struct Sub {
    const char* name;
    const char* help;
    std::vector<const char*> positional;
  };
  const std::vector<Sub> subs = {
      {"order", "complete ordering map of an expression", {"expr"}},
      {"jacobi", "Jacobi residual for every generator triple", {}},
      {"assoc", "sampled associativity of the normal-ordered product", {}},
      {"star", "star-product coefficients C_0..C_N of f and g", {"f", "g"}},
      {"center", "centrality of the declared candidates", {}},
      {"report", "all checks as one report", {}},
  };
  std::vector<std::string> positional_values(2);
  std::vector<CLI::App*> apps;
  for (const auto& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    apps.push_back(sub);
    sub->add_option("file", config.input, ".ncq system file")->required();
    for (std::size_t k = 0; k < s.positional.size(); ++k)
      sub->add_option(s.positional[k], positional_values[k])->required();
    sub->add_option("--order", order_value, "truncation order N");
    sub->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--seed", config.seed, "sampling seed");
    sub->add_option("--samples", config.samples, "random associativity samples")->check(CLI::PositiveNumber);
    sub->add_option("--max-len", config.max_len, "maximal sampled monomial length")->check(CLI::PositiveNumber);
    sub->add_option("--threads", config.threads, "worker threads for independent checks")->check(CLI::PositiveNumber);
    sub->add_flag("-v,--verbose", config.verbosity, "print cache statistics");
  }

  std::vector<const char*> raw;
  raw.reserve(argv.size());
  for (const auto& a : argv) raw.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(raw.size()), raw.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  for (std::size_t k = 0; k < subs.size(); ++k) {
    CLI::App* sub = apps[k];
    if (!sub->parsed()) continue;
    config.command = subs[k].name;
    for (std::size_t p = 0; p < subs[k].positional.size(); ++p) config.args.push_back(positional_values[p]);
    if (sub->count("--order")) config.order = order_value;
  }
  config.format = format == "json" ? Format::Json : Format::Text;
  return run(config, out, err);
}

}  // namespace ncq::cli
