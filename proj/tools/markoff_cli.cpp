#include <CLI11.hpp>
#include <algorithm>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "markoff/markoff.h"

using json = nlohmann::ordered_json;

namespace {

struct Command {
  CLI::App* app = nullptr;
  std::map<std::string, std::string> values;  // json key -> raw flag text
  std::map<std::string, bool> flags;
  std::vector<std::pair<std::string, CLI::Option*>> options;
  std::vector<std::pair<std::string, CLI::Option*>> switches;
};

class Cli {
 public:
  Command& add(CLI::App& root, const std::string& name, const std::string& help) {
    auto cmd = std::make_unique<Command>();
    cmd->app = root.add_subcommand(name, help);
    commands_.push_back(std::move(cmd));
    return *commands_.back();
  }

  static CLI::Option* opt(Command& c, const std::string& flag, const std::string& key, const std::string& help) {
    CLI::Option* o = c.app->add_option(flag, c.values[key], help);
    c.options.emplace_back(key, o);
    return o;
  }

  static void sw(Command& c, const std::string& flag, const std::string& key, const std::string& help) {
    c.switches.emplace_back(key, c.app->add_flag(flag, c.flags[key], help));
  }

  const Command* selected() const {
    for (const auto& c : commands_)
      if (c->app->parsed()) return c.get();
    return nullptr;
  }

 private:
  std::vector<std::unique_ptr<Command>> commands_;
};

json build_args(const Command& c) {
  json args = json::object();
  for (const auto& [key, o] : c.options)
    if (o->count() > 0) args[key] = c.values.at(key);
  for (const auto& [key, o] : c.switches)
    if (o->count() > 0) args[key] = c.flags.at(key);
  return args;
}

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  if (v.is_array()) {
    std::string s;
    for (const auto& e : v) s += (s.empty() ? "" : ",") + scalar_text(e);
    return "(" + s + ")";
  }
  if (v.is_object() && v.contains("decimal")) return v.at("decimal").get<std::string>();
  return v.dump();
}

void write_text(std::ostream& os, const json& v, const std::string& indent) {
  for (const auto& [key, item] : v.items()) {
    bool nested = item.is_object() && !item.contains("decimal");
    bool table = item.is_array() && !item.empty() && item.front().is_object() && !item.front().contains("decimal");
    if (nested) {
      os << indent << key << ":\n";
      write_text(os, item, indent + "  ");
    } else if (table) {
      os << indent << key << ":\n";
      for (const auto& row : item) {
        std::string line;
        for (const auto& [k, x] : row.items()) line += (line.empty() ? "" : "  ") + k + "=" + scalar_text(x);
        os << indent << "  " << line << "\n";
      }
    } else {
      os << indent << key << ": " << scalar_text(item) << "\n";
    }
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string csv_cell(const json& v) {
  if (v.is_array()) {
    std::string s;
    for (const auto& e : v) s += (s.empty() ? "" : ",") + csv_cell(e);
    return s;
  }
  return scalar_text(v);
}

const char* table_key(const std::string& command) {
  static const std::map<std::string, const char*> keys{
      {"forest", "entries"},       {"scan-s", "records"},         {"spectrum", "records"},
      {"section-cubic", "points"}, {"audit-hyperbolic", "items"}, {"reconstruct", "candidates"}};
  auto it = keys.find(command);
  return it == keys.end() ? nullptr : it->second;
}

void write_csv(std::ostream& os, const std::string& command, const json& v) {
  const char* key = table_key(command);
  if (key && v.contains(key)) {
    const json& rows = v.at(key);
    std::vector<std::string> cols;
    for (const auto& row : rows)
      for (const auto& [k, x] : row.items())
        if (std::find(cols.begin(), cols.end(), k) == cols.end()) cols.push_back(k);
    for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << cols[i];
    os << "\n";
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < cols.size(); ++i) {
        os << (i ? "," : "");
        if (row.contains(cols[i])) os << csv_field(csv_cell(row.at(cols[i])));
      }
      os << "\n";
    }
    return;
  }
  os << "key,value\n";
  std::function<void(const std::string&, const json&)> walk = [&](const std::string& prefix, const json& x) {
    if (x.is_object() && !x.contains("decimal")) {
      for (const auto& [k, y] : x.items()) walk(prefix.empty() ? k : prefix + "." + k, y);
    } else {
      os << csv_field(prefix) << "," << csv_field(csv_cell(x)) << "\n";
    }
  };
  walk("", v);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized Markoff equations, spectra, GL(2,Z) words and punctured-torus traces"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  long precision = 64;
  unsigned threads = 1;
  app.add_option("-f,--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("-p,--precision", precision, "Decimal digits for real output")->envname("MARKOFF_PRECISION");
  app.add_option("-j,--threads", threads, "Worker threads for scans");
  app.set_version_flag("--version", std::string(mk_version()));

  Cli cli;
  auto& solve = cli.add(app, "solve", "Check a triple and report its classification and images");
  Cli::opt(solve, "--eq", "equation", "Equation literal s1s2,a,dK,u")->required();
  Cli::opt(solve, "--triple", "triple", "Triple m,m1,m2")->required();
  Cli::opt(solve, "--b", "b", "Reparametrize to a = b");

  auto& descend = cli.add(app, "descend", "Descend a positive solution to its fundamental triple");
  Cli::opt(descend, "--eq", "equation", "Equation literal")->required();
  Cli::opt(descend, "--triple", "triple", "Triple m,m1,m2")->required();

  auto& forest = cli.add(app, "forest", "Enumerate positive solutions up to a height bound");
  Cli::opt(forest, "--eq", "equation", "Equation literal")->required();
  Cli::opt(forest, "--bound", "bound", "Height bound")->required();
  Cli::opt(forest, "--symmetry", "symmetry", "auto, none, swap12 or full");
  Cli::sw(forest, "--include-negated", "include_negated", "Also list (m,-m1,-m2)");

  auto& scan = cli.add(app, "scan-s", "Solvability of x^2+y^2+z^2 = 3xyz + sx");
  Cli::opt(scan, "--from", "from", "First s");
  Cli::opt(scan, "--to", "to", "Last s");

  auto& constant = cli.add(app, "constant", "Markoff constant of a period, triple or family member");
  Cli::opt(constant, "--period", "period", "Period (b1,...,bn)");
  Cli::opt(constant, "--eq", "equation", "Equation literal");
  Cli::opt(constant, "--triple", "triple", "Solution triple");
  Cli::opt(constant, "--fibonacci", "fibonacci", "Fibonacci family index t");
  Cli::opt(constant, "--segment", "segment", "Segment U_a endpoints for a");

  auto& spectrum = cli.add(app, "spectrum", "Constants of every solution up to a bound");
  Cli::opt(spectrum, "--eq", "equation", "Equation literal")->required();
  Cli::opt(spectrum, "--bound", "bound", "Height bound")->required();

  auto& decomp = cli.add(app, "decompose-seq", "Decompose a sequence into X1, b, X2 and T");
  Cli::opt(decomp, "--seq", "seq", "Sequence S");
  Cli::opt(decomp, "--star", "star", "S* given as X1;b;X2");
  Cli::opt(decomp, "--a", "a", "Report the equation for this a");

  auto& recon = cli.add(app, "reconstruct", "Rebuild sequences from a solution");
  Cli::opt(recon, "--triple", "triple", "Triple m,m1,m2")->required();
  Cli::opt(recon, "--eq", "equation", "Equation literal");
  Cli::opt(recon, "--eps1", "eps1", "+1 or -1");
  Cli::opt(recon, "--eps2", "eps2", "+1 or -1");
  Cli::opt(recon, "--a", "a", "Parameter a");

  auto& construct = cli.add(app, "construct", "Apply G, DD or GD to a decomposition");
  Cli::opt(construct, "kind", "kind", "G, DD or GD")->required();
  Cli::opt(construct, "--seq", "seq", "Source sequence");
  Cli::opt(construct, "--star", "star", "Source X1;b;X2");
  Cli::opt(construct, "--eq", "equation", "Source equation (with --triple)");
  Cli::opt(construct, "--triple", "triple", "Source triple");

  auto& gl2z = cli.add(app, "gl2z-decompose", "Ternary and (A0,B0) words of a GL(2,Z) matrix");
  Cli::opt(gl2z, "--matrix", "matrix", "Row-major a,b,c,d")->required();

  auto& fricke = cli.add(app, "fricke", "Commutator trace via the Fricke identity");
  Cli::opt(fricke, "--a", "a", "Matrix A as a,b,c,d")->required();
  Cli::opt(fricke, "--b", "b", "Matrix B as a,b,c,d")->required();

  auto& dedekind = cli.add(app, "dedekind", "Dedekind sum s(delta, gamma)");
  Cli::opt(dedekind, "--delta", "delta", "delta")->required();
  Cli::opt(dedekind, "--gamma", "gamma", "gamma")->required();

  auto& treduce = cli.add(app, "torus-reduce", "Reduce and super-reduce a parabolic trace triple");
  Cli::opt(treduce, "--triple", "triple", "x,y,z as surds, e.g. 2sqrt(2),2sqrt(2),4");
  Cli::opt(treduce, "--lambda", "lambda", "lambda as a surd");
  Cli::opt(treduce, "--mu", "mu", "mu as a surd");

  auto& tparams = cli.add(app, "torus-params", "Parameters, matrices and cone of a trace triple");
  Cli::opt(tparams, "--triple", "triple", "x,y,z = trB,trA,trAB");
  Cli::opt(tparams, "--epsilon", "epsilon", "Branch +1 or -1");
  Cli::sw(tparams, "--allow-positive-sigma", "allow_positive_sigma", "Accept sigma >= 4");
  Cli::opt(tparams, "--lambda", "lambda", "lambda");
  Cli::opt(tparams, "--mu", "mu", "mu");
  Cli::opt(tparams, "--theta", "theta", "theta");

  cli.add(app, "audit-hyperbolic", "Recompute the worked hyperbolic torus example");

  auto& cubic = cli.add(app, "section-cubic", "Plane section cubic and its integer points");
  Cli::opt(cubic, "--eq", "equation", "Equation literal")->required();
  Cli::opt(cubic, "--triple", "triple", "Solution on the plane")->required();
  Cli::opt(cubic, "--relation", "relation", "p,q,r with p*m1 = q*m2 + r")->required();
  Cli::opt(cubic, "--radius", "radius", "Scan |x|,|z| <= radius");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return MK_ERR_USAGE;
  }

  const Command* cmd = cli.selected();
  if (!cmd) return MK_ERR_USAGE;
  const std::string name = cmd->app->get_name();

  std::unique_ptr<mk_context, decltype(&mk_context_free)> ctx(mk_context_new(), mk_context_free);
  if (!ctx) return MK_ERR_INTERNAL;
  if (mk_context_set_precision(ctx.get(), precision) != MK_OK ||
      mk_context_set_threads(ctx.get(), threads) != MK_OK) {
    std::cerr << mk_last_error(ctx.get()) << "\n";
    return MK_ERR_USAGE;
  }
  mk_result* raw = nullptr;
  mk_status st = mk_run(ctx.get(), name.c_str(), build_args(*cmd).dump().c_str(), &raw);
  if (st != MK_OK) {
    std::cerr << name << ": " << mk_last_error(ctx.get()) << "\n";
    return st;
  }
  std::unique_ptr<mk_result, decltype(&mk_result_free)> result(raw, mk_result_free);
  json out = json::parse(mk_result_json(result.get()));
  if (format == "json")
    std::cout << out.dump(2) << "\n";
  else if (format == "csv")
    write_csv(std::cout, name, out);
  else
    write_text(std::cout, out, "");
  return MK_OK;
}
