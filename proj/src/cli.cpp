#include "knotcol/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "knotcol/colouring.hpp"
#include "knotcol/errors.hpp"
#include "knotcol/fixtures.hpp"
#include "knotcol/state_sum.hpp"
#include "knotcol/verify.hpp"
#include "knotcol/yang_baxter.hpp"

namespace knotcol {

namespace {

using nlohmann::json;

struct RunConfig {
  std::string knot, braid, pd, wirtinger_file;
  int cut_edge = 0;
  std::string group = "A5";
  std::string basepoint;
  std::string symmetries = "identity";
  std::string format = "text";
  int workers = 1;
  std::uint64_t node_cap = 10'000'000'000ULL;

  SearchOptions search() const { return {node_cap, workers}; }
  bool as_json() const { return format == "json"; }
};

struct LoadedKnot {
  std::string label;
  KnotSource source;
};

std::string read_file(const std::string &path)
{
  std::ifstream in(path);
  if (!in)
    throw ParseError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

LoadedKnot load_knot(const RunConfig &cfg)
{
  const int given = !cfg.knot.empty() + !cfg.braid.empty() + !cfg.pd.empty() +
                    !cfg.wirtinger_file.empty();
  if (given != 1)
    throw ParseError("give exactly one of --knot, --braid, --pd, --wirtinger");
  if (!cfg.knot.empty())
    return {cfg.knot, load_fixture(cfg.knot).source()};
  if (!cfg.braid.empty())
    return {"braid " + cfg.braid, KnotSource::from_braid(parse_braid_word(cfg.braid))};
  if (!cfg.pd.empty()) {
    std::optional<int> cut;
    if (cfg.cut_edge != 0)
      cut = cfg.cut_edge;
    return {"pd code", KnotSource::from_code(pd_to_long_wirtinger(parse_pd_code(cfg.pd), cut))};
  }
  return {cfg.wirtinger_file, KnotSource::from_code(parse_wirtinger(read_file(cfg.wirtinger_file)))};
}

std::vector<Symmetry> parse_symmetries(const std::string &text)
{
  std::vector<Symmetry> r;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    if (item == "all") {
      for (Symmetry s : {Symmetry::Identity, Symmetry::Obverse, Symmetry::Inverse, Symmetry::Reverse})
        r.push_back(s);
    } else if (!item.empty()) {
      r.push_back(parse_symmetry(item));
    }
  }
  if (r.empty())
    throw ParseError("empty symmetry list");
  return r;
}

std::string lambda_text(const PointedGroup &g)
{
  const auto &lam = g.longitude();
  std::ostringstream s;
  s << "Lambda = C(x) & G' of order " << lam.subgroup.order();
  if (lam.generator)
    s << ", cyclic, x = " << g.format(*lam.generator);
  else
    s << (lam.is_abelian ? ", abelian" : ", non-abelian");
  return s.str();
}

json group_json(const PointedGroup &g)
{
  const auto &lam = g.longitude();
  json l = {{"order", lam.subgroup.order()}, {"abelian", lam.is_abelian}};
  if (lam.generator)
    l["generator"] = g.format(*lam.generator);
  return {{"name", g.name()},
          {"order", g.order()},
          {"basepoint", g.format(g.basepoint())},
          {"class_size", g.basepoint_class().size()},
          {"lambda", l}};
}

double seconds_since(std::chrono::steady_clock::time_point t0)
{
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

enum class Pipeline { Colouring, StateSum, YBClosed, YBLong };

Pipeline parse_pipeline(const std::string &s)
{
  if (s == "colouring")
    return Pipeline::Colouring;
  if (s == "statesum")
    return Pipeline::StateSum;
  if (s == "yb-closed")
    return Pipeline::YBClosed;
  if (s == "yb-long")
    return Pipeline::YBLong;
  throw ParseError("unknown pipeline '" + s + "'");
}

struct PipelineExtras {
  std::string cocycle_file;
  bool plain = false;
  int markov = 0;
};

int run_invariant(const RunConfig &cfg, Pipeline pipeline, const PipelineExtras &extra,
                  std::ostream &out)
{
  const auto knot = load_knot(cfg);
  const auto symmetries = parse_symmetries(cfg.symmetries);
  const auto g = build_named_group(cfg.group, cfg.basepoint);
  if (!g->is_colouring_group())
    throw HypothesisError(g->name() + " is not generated by the class of its basepoint");

  // hypotheses are checked before any search starts
  std::optional<CoveringQuandle> cov;
  std::optional<Cocycle2> cocycle;
  std::optional<YBOperator> op;
  if (pipeline != Pipeline::Colouring && !g->longitude().is_abelian)
    throw HypothesisError("this pipeline needs an abelian longitude group");
  if ((pipeline == Pipeline::YBClosed || pipeline == Pipeline::YBLong) && !knot.source.braid)
    throw HypothesisError("Yang-Baxter traces need a braid source");
  if (pipeline == Pipeline::StateSum) {
    cov.emplace(g);
    cocycle = extra.cocycle_file.empty() ? cocycle_from_section(*cov)
                                         : cocycle_from_csv(read_file(extra.cocycle_file), g);
    auto rep = verify_cocycle(cov->base().quandle, *cocycle);
    if (!rep.ok)
      throw HypothesisError("not a 2-cocycle: " + rep.violation);
  }
  if (pipeline == Pipeline::YBClosed)
    op = build_yb_operator(g, !extra.plain);

  json results = json::array();
  bool all_ok = true;
  for (Symmetry s : symmetries) {
    const auto t0 = std::chrono::steady_clock::now();
    RingElement value;
    json row = {{"symmetry", symmetry_name(s)}};
    switch (pipeline) {
    case Pipeline::Colouring: {
      auto p = colouring_polynomial(knot.source.variant(s), g, cfg.search());
      value = p.value;
      row["colourings"] = augmentation(value);
      row["in_longitude_group"] = p.in_longitude_group;
      break;
    }
    case Pipeline::StateSum:
      value = state_sum(knot.source.variant(s), cov->base().quandle, *cocycle, cfg.search());
      row["quandle_size"] = cov->base().quandle.size();
      break;
    case Pipeline::YBClosed: {
      const auto b = knot.source.braid_variant(s);
      value = closed_trace(b, *op, cfg.search());
      row["braid"] = format_braid_word(b);
      if (extra.markov > 0) {
        auto m = markov_spot_check(b, *op, extra.markov);
        row["markov"] = {{"checks", m.checks}, {"failures", m.failures}, {"details", m.details}};
        all_ok = all_ok && m.ok();
      }
      break;
    }
    case Pipeline::YBLong: {
      const auto b = knot.source.braid_variant(s);
      value = long_partial_trace(b, g, cfg.search());
      row["braid"] = format_braid_word(b);
      break;
    }
    }
    row["polynomial"] = render(value, "x");
    row["value"] = to_json(value);
    row["seconds"] = seconds_since(t0);
    results.push_back(row);
  }

  if (cfg.as_json()) {
    out << json{{"knot", knot.label}, {"group", group_json(*g)}, {"results", results}}.dump(2)
        << "\n";
  } else {
    out << "knot " << knot.label << ", group " << g->name() << " (order " << g->order()
        << "), basepoint " << g->format(g->basepoint()) << "\n";
    out << lambda_text(*g) << "\n";
    for (const auto &r : results) {
      out << r["symmetry"].get<std::string>() << ": " << r["polynomial"].get<std::string>();
      if (r.contains("colourings"))
        out << "   [F = " << r["colourings"] << "]";
      if (r.contains("markov"))
        out << "   [Markov " << r["markov"]["checks"] << " moves, " << r["markov"]["failures"]
            << " failures]";
      out << "\n";
    }
  }
  return all_ok ? kExitOk : kExitVerifyFailed;
}

int run_colourings(const RunConfig &cfg, std::ostream &out)
{
  const auto knot = load_knot(cfg);
  const auto g = build_named_group(cfg.group, cfg.basepoint);
  json dump = json::array();
  for (Symmetry s : parse_symmetries(cfg.symmetries)) {
    const auto cols = enumerate_colourings(knot.source.variant(s), g, cfg.search());
    json list = json::array();
    for (const auto &c : cols) {
      json arcs = json::array();
      for (Element e : c.arcs)
        arcs.push_back(g->format(e));
      list.push_back({{"arcs", arcs}, {"longitude", g->format(c.longitude)}});
    }
    if (!cfg.as_json()) {
      out << symmetry_name(s) << ": " << cols.size() << " colourings\n";
      for (const auto &c : list) {
        out << "  l = " << c["longitude"].get<std::string>() << " :";
        for (const auto &a : c["arcs"])
          out << " " << a.get<std::string>();
        out << "\n";
      }
    }
    dump.push_back({{"symmetry", symmetry_name(s)}, {"count", cols.size()}, {"colourings", list}});
  }
  if (cfg.as_json())
    out << json{{"knot", knot.label}, {"group", group_json(*g)}, {"results", dump}}.dump(2)
        << "\n";
  return kExitOk;
}

int run_verify(const std::string &suite, const VerifyOptions &opt, bool as_json, std::ostream &out)
{
  const auto report = run_verify_suite(suite, opt);
  if (as_json) {
    out << report.to_json().dump(2) << "\n";
  } else {
    for (const auto &c : report.checks) {
      out << (c.passed ? "PASS " : "FAIL ") << c.name;
      if (!c.detail.empty())
        out << "  (" << c.detail << ")";
      out << "\n";
    }
    out << suite << ": " << report.passed() << " passed, " << report.failed() << " failed\n";
  }
  return report.ok() ? kExitOk : kExitVerifyFailed;
}

int run_fixtures(const std::string &name, bool as_json, std::ostream &out)
{
  std::vector<std::string> names = name.empty() ? fixture_names() : std::vector<std::string>{name};
  json list = json::array();
  for (const auto &n : names) {
    const auto f = load_fixture(n);
    const auto src = f.source();
    json row = {{"name", f.name},
                {"encoding", f.encoding},
                {"provenance", f.provenance},
                {"crossings", src.code.crossings()},
                {"wirtinger", format_wirtinger(src.code)}};
    if (src.braid)
      row["braid"] = format_braid_word(*src.braid);
    list.push_back(row);
    if (!as_json) {
      out << f.name << "  (" << f.encoding << ", " << src.code.crossings() << " crossings)  "
          << f.provenance << "\n";
      if (!name.empty())
        out << "  wirtinger: " << format_wirtinger(src.code) << "\n";
    }
  }
  if (as_json)
    out << json{{"directory", fixture_directory().string()}, {"fixtures", list}}.dump(2) << "\n";
  return kExitOk;
}

void add_knot_options(CLI::App *cmd, RunConfig &cfg)
{
  cmd->add_option("--knot", cfg.knot, "fixture name");
  cmd->add_option("--braid", cfg.braid, "braid word, e.g. \"s1 s2^-1 s1 s2^-1\"");
  cmd->add_option("--pd", cfg.pd, "PD code, e.g. \"X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]\"");
  cmd->add_option("--wirtinger", cfg.wirtinger_file, "file with a long-knot Wirtinger code");
  cmd->add_option("--cut-edge", cfg.cut_edge, "PD edge at which the knot is cut open");
  cmd->add_option("--group", cfg.group, "group descriptor (A5, PSL2_7, M11, Aff5, gens:...)")
      ->capture_default_str();
  cmd->add_option("--basepoint", cfg.basepoint, "cycles, order:k or matrix:a,b,c,d");
  cmd->add_option("--symmetries", cfg.symmetries, "comma list of identity,inv,rev,obv or all")
      ->capture_default_str();
  cmd->add_option("--format", cfg.format)->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  cmd->add_option("--workers", cfg.workers, "1 = serial, 0 = all threads")->capture_default_str();
  cmd->add_option("--node-cap", cfg.node_cap, "search step budget")->capture_default_str();
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
  CLI::App app{"knot colouring polynomials, quandle state sums and Yang-Baxter traces", "knotcol"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string pipeline = "colouring";
  PipelineExtras extra;
  auto *invariant = app.add_subcommand("invariant", "colouring polynomial of each symmetry variant");
  add_knot_options(invariant, cfg);
  invariant->add_option("--pipeline", pipeline)
      ->check(CLI::IsMember({"colouring", "statesum", "yb-closed", "yb-long"}))
      ->capture_default_str();

  auto *colourings = app.add_subcommand("colourings", "list all colourings with their longitudes");
  add_knot_options(colourings, cfg);

  auto *statesum = app.add_subcommand("statesum", "quandle 2-cocycle state sum on the class of x");
  add_knot_options(statesum, cfg);
  statesum->add_option("--cocycle", extra.cocycle_file,
                       "CSV cocycle table (default: from the covering quandle)");

  std::string mode = "closed";
  auto *yb = app.add_subcommand("yb-trace", "trace of the Yang-Baxter braid representation");
  add_knot_options(yb, cfg);
  yb->add_option("--mode", mode)->check(CLI::IsMember({"closed", "long"}))->capture_default_str();
  yb->add_flag("--plain", extra.plain, "undeformed operator (trivial labels)");
  yb->add_option("--markov", extra.markov, "random conjugations to spot-check");

  std::string suite;
  VerifyOptions vopt;
  bool quick = false;
  auto *verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "axioms | cocycle | yb | theorems | golden | all")
      ->required()
      ->check(CLI::IsMember(verify_suite_names()));
  verify->add_option("--format", cfg.format)->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--seed", vopt.seed)->capture_default_str();
  verify->add_option("--workers", cfg.workers)->capture_default_str();
  verify->add_flag("--quick", quick, "skip the exhaustive checks on M11");

  std::string fixture;
  auto *fixtures = app.add_subcommand("fixtures", "list the shipped knots");
  fixtures->add_option("name", fixture, "show a single fixture");
  fixtures->add_option("--format", cfg.format)->check(CLI::IsMember({"text", "json"}));

  try {
    std::vector<std::string> rest(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
    app.parse(rest);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    if (*invariant)
      return run_invariant(cfg, parse_pipeline(pipeline), extra, out);
    if (*colourings)
      return run_colourings(cfg, out);
    if (*statesum)
      return run_invariant(cfg, Pipeline::StateSum, extra, out);
    if (*yb)
      return run_invariant(cfg, mode == "long" ? Pipeline::YBLong : Pipeline::YBClosed, extra, out);
    if (*verify) {
      vopt.search = cfg.search();
      vopt.large = !quick;
      return run_verify(suite, vopt, cfg.as_json(), out);
    }
    if (*fixtures)
      return run_fixtures(fixture, cfg.as_json(), out);
  } catch (const ParseError &e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const HypothesisError &e) {
    err << "hypothesis not satisfied: " << e.what() << "\n";
    return kExitHypothesis;
  } catch (const LimitExceeded &e) {
    err << "limit exceeded: " << e.what() << "\n";
    return kExitLimit;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return kExitOther;
  }
  return kExitOther;
}

} // namespace knotcol
