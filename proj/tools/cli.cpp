#include "cli.hpp"

#include "toricquiver/builtins.hpp"
#include "toricquiver/category.hpp"
#include "toricquiver/io.hpp"
#include "toricquiver/quiver.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

namespace toricquiver::cli {

namespace {

using nlohmann::json;

struct Globals {
  bool json = false;
  bool trust_fan = false;
};

class Session {
 public:
  Session(const Globals& g, std::istream& in, std::ostream& out, std::ostream& err)
      : g_(g), in_(in), out_(out), err_(err) {}

  std::string slurp(const std::string& path) {
    if (path == "-") {
      std::ostringstream ss;
      ss << in_.rdbuf();
      return ss.str();
    }
    std::ifstream f(path, std::ios::binary);
    if (!f) throw InputError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
  }

  Fan fan(const std::string& path) { return parse_fan_json(slurp(path)).load({g_.trust_fan}); }

  Representation rep(const std::string& path) { return parse_representation_json(slurp(path)); }

  int fan_check(const std::string& path) {
    FanData data = parse_fan_json(slurp(path));
    try {
      Fan f = data.load({g_.trust_fan});
      if (g_.json)
        out_ << json{{"valid", true}, {"dim", f.dim()}, {"rays", f.num_rays()}, {"cones", f.cones().size()},
                     {"max_cones", f.maximal_cones().size()}, {"trust_fan", f.trust_fan()}}
                    .dump()
             << "\n";
      else
        out_ << "valid fan: dim " << f.dim() << ", " << f.num_rays() << " rays, " << f.cones().size() << " cones, "
             << f.maximal_cones().size() << " maximal\n";
      return kOk;
    } catch (const FanValidationError& e) {
      report_fan_issues(e);
      return kFailure;
    }
  }

  void report_fan_issues(const FanValidationError& e) {
    if (g_.json) {
      json errors = json::array();
      for (const auto& i : e.issues()) errors.push_back(fan_issue_json(i));
      err_ << json{{"valid", false}, {"index_base", 0}, {"errors", std::move(errors)}}.dump() << "\n";
    } else {
      for (const auto& i : e.issues()) err_ << to_string(i.kind) << ": " << i.message << "\n";
    }
  }

  int fan_info(const std::string& path) {
    out_ << fan_info_json(fan(path));
    return kOk;
  }

  int quiver(const std::string& path, const std::string& format) {
    Quiver q = build_quiver(fan(path));
    out_ << (format == "dot" ? export_dot(q) : export_json(q));
    return kOk;
  }

  int relations(const std::string& path) {
    for (const auto& w : toricquiver::relations(fan(path))) out_ << w.to_string() << "\n";
    return kOk;
  }

  int rep_check(const std::string& fan_path, const std::string& rep_path) {
    Category cat(fan(fan_path));
    Representation r = rep(rep_path);
    ConditionReport report = check_all(cat, r);
    const bool shape_bad = report.violated().count(Condition::Shape) > 0;
    if (g_.json) {
      if (!report.passed()) err_ << report_to_json(report).dump() << "\n";
    } else {
      for (const auto& f : report.failures) err_ << f.location() << ": " << f.message << "\n";
    }
    if (shape_bad) return kMalformedInput;
    out_ << (report.passed() ? "member" : "not a member") << "\n";
    return report.passed() ? kOk : kFailure;
  }

  int rep_hom(const std::string& fan_path, const std::string& a, const std::string& b, bool basis) {
    Category cat(fan(fan_path));
    HomSpace h = hom_dim(cat.quiver(), rep(a), rep(b));
    if (basis) {
      json list = json::array();
      for (const auto& m : h.basis) list.push_back(morphism_to_json(m));
      out_ << json{{"index_base", 0}, {"dimension", h.dimension}, {"basis", std::move(list)}}.dump(2) << "\n";
    } else {
      out_ << h.dimension << "\n";
    }
    return kOk;
  }

  int rep_constant(const std::string& fan_path, std::size_t d) {
    out_ << representation_to_json(constant_object(fan(fan_path), d));
    return kOk;
  }

  int example(const std::string& name) {
    out_ << fan_to_json(example_fan(name));
    return kOk;
  }

  void internal_error(const std::string& what) {
    if (g_.json)
      err_ << json{{"error", "internal"}, {"message", what}}.dump() << "\n";
    else
      err_ << "internal error: " << what << "\n";
  }

  void input_error(const std::string& what) {
    if (g_.json)
      err_ << json{{"error", "malformed input"}, {"message", what}}.dump() << "\n";
    else
      err_ << "malformed input: " << what << "\n";
  }

 private:
  const Globals& g_;
  std::istream& in_;
  std::ostream& out_;
  std::ostream& err_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quivers and perverse-sheaf quiver categories of smooth toric fans", "toricq"};
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--json", g.json, "Structured JSON diagnostics on standard error");
  app.add_flag("--trust-fan", g.trust_fan, "Skip the exact Fourier-Motzkin part of the fan-axiom check");

  std::string fan_path, rep_path, rep_b, format = "dot", name;
  std::size_t constant_dim = 1;
  bool basis = false;

  auto* fan_cmd = app.add_subcommand("fan", "Validate or describe a fan");
  fan_cmd->require_subcommand(1);
  auto* fan_check = fan_cmd->add_subcommand("check", "Validate a fan file");
  fan_check->add_option("fan", fan_path, "Fan JSON file, or - for stdin")->required();
  auto* fan_info = fan_cmd->add_subcommand("info", "Cones, l-values and chart bases of a fan");
  fan_info->add_option("fan", fan_path, "Fan JSON file, or - for stdin")->required();

  auto* quiver_cmd = app.add_subcommand("quiver", "Export the quiver of a fan");
  quiver_cmd->add_option("fan", fan_path, "Fan JSON file, or - for stdin")->required();
  quiver_cmd->add_option("--format", format, "dot or json")->check(CLI::IsMember({"dot", "json"}));

  auto* rel_cmd = app.add_subcommand("relations", "List the monodromy relations of condition (iv)");
  rel_cmd->add_option("fan", fan_path, "Fan JSON file, or - for stdin")->required();

  auto* rep_cmd = app.add_subcommand("rep", "Work with representations");
  rep_cmd->require_subcommand(1);
  auto* rep_check = rep_cmd->add_subcommand("check", "Decide membership of a representation");
  rep_check->add_option("fan", fan_path)->required();
  rep_check->add_option("rep", rep_path)->required();
  auto* rep_hom = rep_cmd->add_subcommand("hom", "Dimension of the space of morphisms A -> B");
  rep_hom->add_option("fan", fan_path)->required();
  rep_hom->add_option("a", rep_path)->required();
  rep_hom->add_option("b", rep_b)->required();
  rep_hom->add_flag("--basis", basis, "Print a basis of morphisms as JSON");
  auto* rep_const = rep_cmd->add_subcommand("constant", "Write the constant object of dimension d");
  rep_const->add_option("fan", fan_path)->required();
  rep_const->add_option("d", constant_dim)->required();

  auto* example_cmd = app.add_subcommand("example", "Print a built-in fan: cn:<n>, cstar:<l>,<n>, p1, p2, fan1");
  example_cmd->add_option("name", name)->required();

  for (auto* sub : {fan_cmd, fan_check, fan_info, quiver_cmd, rel_cmd, rep_cmd, rep_check, rep_hom, rep_const, example_cmd})
    sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kMalformedInput;
  }

  Session s(g, in, out, err);
  try {
    if (*fan_check) return s.fan_check(fan_path);
    if (*fan_info) return s.fan_info(fan_path);
    if (*quiver_cmd) return s.quiver(fan_path, format);
    if (*rel_cmd) return s.relations(fan_path);
    if (*rep_check) return s.rep_check(fan_path, rep_path);
    if (*rep_hom) return s.rep_hom(fan_path, rep_path, rep_b, basis);
    if (*rep_const) return s.rep_constant(fan_path, constant_dim);
    if (*example_cmd) return s.example(name);
  } catch (const FanValidationError& e) {
    s.report_fan_issues(e);
    return kFailure;
  } catch (const nlohmann::json::exception& e) {
    s.input_error(e.what());
    return kMalformedInput;
  } catch (const std::invalid_argument& e) {
    s.input_error(e.what());
    return kMalformedInput;
  } catch (const std::exception& e) {
    s.internal_error(e.what());
    return kInternalError;
  }
  s.internal_error("no command dispatched");
  return kInternalError;
}

}  // namespace toricquiver::cli
