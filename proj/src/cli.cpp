#include "qramsey/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>
#include <openssl/evp.h>

#include "qramsey/bounds.hpp"
#include "qramsey/constructions.hpp"
#include "qramsey/errors.hpp"
#include "qramsey/exact.hpp"
#include "qramsey/finders.hpp"
#include "qramsey/graph6.hpp"
#include "qramsey/serialize.hpp"
#include "qramsey/version.hpp"

namespace qramsey::cli {

using nlohmann::json;

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << bytes;
  if (!out) throw UsageError("write to '" + path + "' failed");
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw Error("SHA-256 digest failed");
  }
  std::ostringstream hex;
  for (unsigned int i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int{digest[i]};
  return hex.str();
}

std::string format_number(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

// Bookkeeping for one invocation: files touched and the sidecar manifest.
class Run {
 public:
  Run(std::string command, const CLI::App& sub, std::ostream& out)
      : command_(std::move(command)), out_(out), start_(std::chrono::steady_clock::now()) {
    for (const CLI::Option* opt : sub.get_options()) {
      if (opt->get_name() == "--help" || opt->get_name().empty()) continue;
      std::string name = opt->get_name();
      name.erase(0, name.find_first_not_of('-'));
      if (opt->count() > 0) {
        const auto& results = opt->results();
        params_[name] = results.size() == 1 ? json(results.front()) : json(results);
      } else if (!opt->get_default_str().empty()) {
        params_[name] = opt->get_default_str();
      }
    }
  }

  std::string input(const std::string& path) {
    std::string bytes = read_file(path);
    inputs_.push_back({{"path", path}, {"sha256", sha256_hex(bytes)}});
    return bytes;
  }

  // Writes to `path`, or to the output stream when the path is empty.
  void output(const std::string& path, const std::string& bytes) {
    if (path.empty()) {
      out_ << bytes;
      return;
    }
    write_file(path, bytes);
    outputs_.push_back({{"path", path}, {"sha256", sha256_hex(bytes)}});
    if (manifest_path_.empty()) manifest_path_ = path + ".manifest.json";
  }

  void set_seed(std::uint64_t seed) { seed_ = seed; }

  void write_manifest() const {
    if (manifest_path_.empty()) return;
    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    json m = {{"schema", "qramsey.manifest/1"},
              {"command", command_},
              {"params", params_},
              {"seed", seed_ ? json(*seed_) : json(nullptr)},
              {"version", kVersion},
              {"inputs", inputs_},
              {"outputs", outputs_},
              {"wall_seconds", wall}};
    write_file(manifest_path_, m.dump(2) + "\n");
  }

 private:
  std::string command_;
  std::ostream& out_;
  std::chrono::steady_clock::time_point start_;
  json params_ = json::object();
  json inputs_ = json::array();
  json outputs_ = json::array();
  std::optional<std::uint64_t> seed_;
  std::string manifest_path_;
};

Graph parse_graph(const std::string& bytes, const std::string& path) {
  std::string_view body = bytes;
  constexpr std::string_view header = ">>graph6<<";
  if (body.starts_with(header)) body.remove_prefix(header.size());
  while (!body.empty() && (body.back() == '\n' || body.back() == '\r')) body.remove_suffix(1);
  if (body.find('\n') != std::string_view::npos) throw UsageError("'" + path + "' holds more than one graph");
  return decode_graph6(body);
}

void require(const CLI::Option* opt, const std::string& context) {
  if (opt->count() == 0) throw UsageError(opt->get_name() + " is required " + context);
}

struct FindArgs {
  std::string mode, input, output;
  finders::FinderConfig config;
};

struct ConstructArgs {
  std::string family, output, labels;
  std::size_t k = 0, t = 0, n = 0, z_override = 0;
  double nu = 0.0;
  std::uint64_t seed = 0;
};

struct VerifyArgs {
  std::string claim, input, output, threshold;
  std::size_t k = 0;
  double t = 0.0;
  std::uint64_t budget = exact::kDefaultBudget;
};

struct ExactArgs {
  std::string threshold, output;
  std::size_t k = 0, t = 0;
  exact::ExactOptions options;
};

struct BoundsArgs {
  std::string table, grid, output;
  std::size_t k = 0;
};

int cmd_find(const FindArgs& a, const CLI::App& sub, std::ostream& out, std::ostream& err) {
  const auto mode = finders::parse_mode(a.mode);
  if (!mode) throw UsageError("unknown mode '" + a.mode + "'");
  auto opt = [&](const char* name) { return sub.get_option(name); };
  const std::string context = "for --mode " + a.mode;
  switch (*mode) {
    case finders::Mode::peel:
      require(opt("--alpha"), context);
      break;
    case finders::Mode::skew:
      require(opt("--nu"), context);
      break;
    case finders::Mode::thin:
      require(opt("--k"), context);
      require(opt("--eps"), context);
      break;
    case finders::Mode::fixed:
      require(opt("--k"), context);
      break;
    case finders::Mode::variable:
      require(opt("--k"), context);
      require(opt("--nu"), context);
      break;
  }

  Run run("find", sub, out);
  const Graph g = parse_graph(run.input(a.input), a.input);
  const bool seeded = *mode != finders::Mode::peel;
  if (seeded) run.set_seed(a.config.seed);

  WitnessRecord record;
  record.graph6 = encode_graph6(g);
  record.mode = a.mode;
  json& p = record.params;
  switch (*mode) {
    case finders::Mode::peel:
      p["alpha"] = a.config.alpha;
      break;
    case finders::Mode::skew:
      p["nu"] = a.config.nu;
      p["max_restarts"] = a.config.max_restarts;
      break;
    case finders::Mode::thin:
      p["k"] = a.config.k;
      p["eps"] = a.config.eps;
      p["max_samples"] = a.config.max_samples;
      break;
    case finders::Mode::fixed:
      p["k"] = a.config.k;
      p["max_samples"] = a.config.max_samples;
      break;
    case finders::Mode::variable:
      p["k"] = a.config.k;
      p["nu"] = a.config.nu;
      p["max_restarts"] = a.config.max_restarts;
      break;
  }
  try {
    record.witness = finders::find(g, *mode, a.config);
  } catch (const NoWitness& e) {
    err << "no witness: " << e.what() << "\n";
    run.write_manifest();
    return kNegative;
  } catch (const SamplesExhausted& e) {
    err << "no witness: " << e.what() << "\n";
    run.write_manifest();
    return kNegative;
  }
  run.output(a.output, to_json(record).dump() + "\n");
  run.write_manifest();
  return kSuccess;
}

int cmd_construct(const ConstructArgs& a, const CLI::App& sub, std::ostream& out) {
  auto opt = [&](const char* name) { return sub.get_option(name); };
  Run run("construct", sub, out);
  Graph g;
  std::vector<std::size_t> blocks;
  if (a.family == "chappell-gimbel") {
    require(opt("--k"), "for the chappell-gimbel family");
    require(opt("--t"), "for the chappell-gimbel family");
    g = constructions::construct_chappell_gimbel(a.k, a.t);
  } else if (a.family == "gnp") {
    require(opt("--n"), "for the gnp family");
    run.set_seed(a.seed);
    g = constructions::sample_gnp_half(a.n, a.seed);
  } else if (a.family == "weighted") {
    require(opt("--k"), "for the weighted family");
    require(opt("--nu"), "for the weighted family");
    run.set_seed(a.seed);
    std::optional<std::size_t> z;
    if (opt("--z-override")->count() > 0) z = a.z_override;
    auto sample = constructions::sample_weighted(constructions::weighted_params(a.k, a.nu, z), a.seed);
    g = std::move(sample.graph);
    blocks = std::move(sample.blocks);
  } else {
    throw UsageError("unknown family '" + a.family + "'");
  }
  run.output(a.output, encode_graph6(g) + "\n");
  if (!a.labels.empty()) {
    if (blocks.empty() && a.family != "weighted") throw UsageError("--labels applies to the weighted family only");
    std::string text;
    for (std::size_t b : blocks) text += std::to_string(b) + "\n";
    run.output(a.labels, text);
  }
  run.write_manifest();
  return kSuccess;
}

int cmd_verify(const VerifyArgs& a, const CLI::App& sub, std::ostream& out, std::ostream& err) {
  auto opt = [&](const char* name) { return sub.get_option(name); };
  Run run("verify", sub, out);
  if (a.claim == "witness") {
    const WitnessRecord record = witness_from_json(json::parse(run.input(a.input)));
    const Graph g = decode_graph6(record.graph6);
    bool ok = false;
    try {
      ok = finders::verify_witness(g, record.witness);
    } catch (const InvalidVertex&) {
      ok = false;
    }
    json report = {{"schema", "qramsey.witness-check/1"}, {"graph6", record.graph6}, {"valid", ok}};
    run.output(a.output, report.dump() + "\n");
    run.write_manifest();
    if (!ok) err << "witness does not re-verify\n";
    return ok ? kSuccess : kNegative;
  }

  require(opt("--k"), "for verify");
  const Graph g = parse_graph(run.input(a.input), a.input);
  exact::LowerBoundCertificate cert;
  try {
    if (a.claim == "fixed") {
      require(opt("--t"), "for --claim fixed");
      cert = exact::verify_no_homogeneous_fixed(g, a.k, a.t, a.budget);
    } else if (a.claim == "variable") {
      require(opt("--threshold"), "for --claim variable");
      cert = exact::verify_no_homogeneous_variable(g, a.k, exact::parse_threshold(a.threshold), a.budget);
    } else {
      throw UsageError("unknown claim '" + a.claim + "'");
    }
  } catch (const BudgetExceeded& e) {
    const auto claim = a.claim == "fixed" ? exact::ClaimType::fixed : exact::ClaimType::variable;
    err << "budget exhausted: " << e.what() << "; " << exact::subsets_required(g.order(), a.k, claim)
        << " subsets needed in the worst case\n";
    run.write_manifest();
    return kBudget;
  }
  run.output(a.output, to_json(cert).dump() + "\n");
  run.write_manifest();
  if (!cert.verified) err << "claim refuted: homogeneous set found\n";
  return cert.verified ? kSuccess : kNegative;
}

int cmd_exact(const ExactArgs& a, const CLI::App& sub, std::ostream& out, std::ostream& err) {
  auto opt = [&](const char* name) { return sub.get_option(name); };
  Run run("exact", sub, out);
  const bool variable = opt("--threshold")->count() > 0;
  if (!variable) require(opt("--t"), "unless --threshold is given");
  try {
    const exact::ExactResult result = variable
                                          ? exact::exact_variable(exact::parse_threshold(a.threshold), a.k, a.options)
                                          : exact::exact_fixed(a.t, a.k, a.options);
    run.output(a.output, to_json(result).dump() + "\n");
  } catch (const BudgetExceeded& e) {
    err << e.what() << "\nbracket: [" << e.lower() << ", inf)\n";
    run.write_manifest();
    return kBudget;
  }
  run.write_manifest();
  return kSuccess;
}

std::vector<double> parse_grid(const std::string& spec) {
  std::vector<double> parts;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ':')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size()) throw UsageError("bad grid '" + spec + "'");
    parts.push_back(v);
  }
  if (parts.size() != 3 || !(parts[2] > 0.0) || parts[1] < parts[0]) {
    throw UsageError("grid must be start:stop:step with step > 0 and stop >= start");
  }
  // Points are start + i*step; the tolerance keeps `stop` itself on the grid.
  const auto count = static_cast<std::size_t>(std::floor((parts[1] - parts[0]) / parts[2] + 1e-9)) + 1;
  if (count > 10'000'000) throw UsageError("grid has too many points");
  std::vector<double> grid(count);
  for (std::size_t i = 0; i < count; ++i) grid[i] = parts[0] + static_cast<double>(i) * parts[2];
  return grid;
}

int cmd_bounds(const BoundsArgs& a, const CLI::App& sub, std::ostream& out) {
  auto opt = [&](const char* name) { return sub.get_option(name); };
  Run run("bounds", sub, out);
  const std::vector<double> grid = parse_grid(a.grid);
  std::vector<bounds::BoundValue> rows;
  std::vector<std::string> columns;

  if (a.table == "lambda") {
    columns = {"x"};
    for (double x : grid) rows.push_back({"lambda_star", {{"x", x}}, bounds::lambda_star(x)});
  } else if (a.table == "variable-lower" || a.table == "fixed-lower") {
    require(opt("--k"), "for --table " + a.table);
    columns = {"k", "eps"};
    const bool fixed = a.table == "fixed-lower";
    const std::string name = fixed ? "fixed_lower" : "variable_lower";
    const double k = static_cast<double>(a.k);
    for (double eps : grid) {
      const double log_value =
          fixed ? bounds::log_fixed_lower_bound_lll(a.k, eps) : bounds::log_variable_lower_bound(a.k, eps);
      rows.push_back({name, {{"k", k}, {"eps", eps}}, std::exp(log_value)});
      rows.push_back({"log_" + name, {{"k", k}, {"eps", eps}}, log_value});
    }
  } else if (a.table == "brackets") {
    columns = {"alpha"};
    for (double alpha : grid) {
      bounds::Bracket b{};
      try {
        b = bounds::conclusion_brackets(alpha);
      } catch (const DomainError&) {
        continue;  // between the two regimes
      }
      const std::string prefix = b.regime == bounds::Regime::exponential ? "exponential" : "linear";
      rows.push_back({prefix + "_lower", {{"alpha", alpha}}, b.lower});
      rows.push_back({prefix + "_upper", {{"alpha", alpha}}, b.upper});
    }
  } else if (a.table == "cg") {
    require(opt("--k"), "for --table cg");
    columns = {"k", "t"};
    const double k = static_cast<double>(a.k);
    for (double tv : grid) {
      if (tv < 1.0 || tv != std::floor(tv)) throw UsageError("--table cg needs integer t >= 1 on the grid");
      const auto t = static_cast<std::size_t>(tv);
      if (t >= a.k) continue;
      if (2 * t <= a.k + 1) {
        rows.push_back({"cg_lower", {{"k", k}, {"t", tv}}, static_cast<double>(bounds::chappell_gimbel_lower(a.k, t))});
      }
      rows.push_back({"cg_upper", {{"k", k}, {"t", tv}}, static_cast<double>(bounds::chappell_gimbel_upper(a.k, t))});
      if (auto exact_value = bounds::chappell_gimbel_exact(a.k, t)) {
        rows.push_back({"cg_exact", {{"k", k}, {"t", tv}}, static_cast<double>(*exact_value)});
      }
    }
  } else {
    throw UsageError("unknown table '" + a.table + "'");
  }

  std::string csv = "name";
  for (const auto& c : columns) csv += "," + c;
  csv += ",value\n";
  for (const auto& row : rows) {
    csv += row.name;
    for (const auto& [_, v] : row.params) csv += "," + format_number(v);
    csv += "," + format_number(row.value) + "\n";
  }
  run.output(a.output, csv);
  run.write_manifest();
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quasi-Ramsey toolkit: homogeneous-set finders, constructions, bounds and exact values", "qramsey"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  FindArgs fa;
  auto* find = app.add_subcommand("find", "find a t-homogeneous set in a graph6 graph");
  find->add_option("--mode", fa.mode, "peel|skew|thin|fixed|variable")->required();
  find->add_option("--input", fa.input, "graph6 file")->required();
  find->add_option("--output", fa.output, "witness JSON (default: stdout)");
  find->add_option("--alpha", fa.config.alpha, "peel ratio")->capture_default_str();
  find->add_option("--nu", fa.config.nu, "skew weight")->capture_default_str();
  find->add_option("--eps", fa.config.eps, "thinning slack")->capture_default_str();
  find->add_option("--k", fa.config.k, "target order");
  find->add_option("--seed", fa.config.seed, "random seed")->capture_default_str();
  find->add_option("--max-restarts", fa.config.max_restarts)->capture_default_str();
  find->add_option("--max-samples", fa.config.max_samples)->capture_default_str();
  find->add_option("--threads", fa.config.threads)->capture_default_str();

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "build a graph from one of the families");
  construct->add_option("--family", ca.family, "chappell-gimbel|gnp|weighted")->required();
  construct->add_option("--k", ca.k);
  construct->add_option("--t", ca.t);
  construct->add_option("--n", ca.n);
  construct->add_option("--nu", ca.nu);
  construct->add_option("--z-override", ca.z_override, "number of blocks for the weighted family");
  construct->add_option("--seed", ca.seed)->capture_default_str();
  construct->add_option("--output", ca.output, "graph6 file (default: stdout)");
  construct->add_option("--labels", ca.labels, "block label file for the weighted family");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "check a no-homogeneous-set claim or a witness file");
  verify->add_option("--claim", va.claim, "fixed|variable|witness")->required();
  verify->add_option("--input", va.input, "graph6 file, or witness JSON for --claim witness")->required();
  verify->add_option("--k", va.k);
  verify->add_option("--t", va.t);
  verify->add_option("--threshold", va.threshold, "const:T | ratio:A | half-plus-nu:NU | weighted:NU");
  verify->add_option("--budget", va.budget, "maximum subsets examined")->capture_default_str();
  verify->add_option("--output", va.output, "certificate JSON (default: stdout)");

  ExactArgs ea;
  auto* exact_cmd = app.add_subcommand("exact", "compute a small quasi-Ramsey number by enumeration");
  exact_cmd->add_option("--k", ea.k)->required();
  exact_cmd->add_option("--t", ea.t);
  exact_cmd->add_option("--threshold", ea.threshold, "variable problem threshold function");
  exact_cmd->add_option("--budget", ea.options.budget, "maximum subsets examined")->capture_default_str();
  exact_cmd->add_option("--threads", ea.options.threads)->capture_default_str();
  exact_cmd->add_option("--ceiling", ea.options.ceiling, "largest order enumerated")->capture_default_str();
  exact_cmd->add_option("--output", ea.output, "result JSON (default: stdout)");
  exact_cmd->get_option("--t")->excludes(exact_cmd->get_option("--threshold"));

  BoundsArgs ba;
  auto* bounds_cmd = app.add_subcommand("bounds", "tabulate closed-form bounds as CSV");
  bounds_cmd->add_option("--table", ba.table, "lambda|variable-lower|fixed-lower|brackets|cg")->required();
  bounds_cmd->add_option("--grid", ba.grid, "start:stop:step")->required();
  bounds_cmd->add_option("--k", ba.k);
  bounds_cmd->add_option("--output", ba.output, "CSV file (default: stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  try {
    if (find->parsed()) return cmd_find(fa, *find, out, err);
    if (construct->parsed()) return cmd_construct(ca, *construct, out);
    if (verify->parsed()) return cmd_verify(va, *verify, out, err);
    if (exact_cmd->parsed()) return cmd_exact(ea, *exact_cmd, out, err);
    if (bounds_cmd->parsed()) return cmd_bounds(ba, *bounds_cmd, out);
  } catch (const DegenerateParameters& e) {
    err << "degenerate parameters: " << e.what() << "\n";
    return kDegenerate;
  } catch (const PreconditionFailed& e) {
    err << "degenerate parameters: " << e.what() << "\n";
    return kDegenerate;
  } catch (const BudgetExceeded& e) {
    err << e.what() << "\n";
    return kBudget;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace qramsey::cli
