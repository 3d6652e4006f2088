#include "walkup_cli/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <thread>

#include "walkup/walkup.hpp"

namespace walkup::cli {

namespace {

using json = nlohmann::json;

struct Context {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
  std::string echo;
  bool porcelain = false;

  /// Prints the structured section (porcelain) or the echo line and summary.
  void report(const json& data, const std::vector<std::string>& summary) const {
    if (porcelain) {
      out << data.dump() << '\n';
      return;
    }
    out << echo << '\n';
    for (const auto& line : summary) out << line << '\n';
  }
};

/// Unreadable or malformed input; reported with exit code 2.
struct InputFailure {
  std::string message;
};

std::string join(const std::vector<std::int64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

std::string join(const std::vector<std::string>& v, const char* sep = " ") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
  return s;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string load_text(const Context& ctx, const std::string& file) {
  if (file.empty() || file == "-") return read_text(ctx.in);
  std::ifstream f(file, std::ios::binary);
  if (!f) throw InputFailure{"cannot open '" + file + "'"};
  return read_text(f);
}

SimplicialComplex load_complex(const Context& ctx, const std::string& file) {
  const std::string name = file.empty() || file == "-" ? "<stdin>" : file;
  const std::string text = load_text(ctx, file);
  try {
    return parse_complex(text);
  } catch (const Error& e) {
    throw InputFailure{name + ": " + e.what()};
  }
}

void write_text(const Context& ctx, const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    ctx.out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputFailure{"cannot write '" + path + "'"};
  f << text;
}

int cmd_info(const Context& ctx, const std::string& file) {
  const SimplicialComplex x = load_complex(ctx, file);
  const DualGraph g = dual_graph(x);
  const FVector f = f_vector(x);
  const bool connected = connected_components(x).size() == 1;
  const std::int64_t chi = euler_characteristic(x);
  json data = {{"command", "info"},      {"dimension", x.dimension()},
               {"f_vector", f},          {"pure", x.is_pure()},
               {"closed_pseudomanifold", g.closed},
               {"pseudomanifold", g.weak_pseudomanifold},
               {"connected", connected}, {"euler_characteristic", chi}};
  ctx.report(data, {"dimension: " + std::to_string(x.dimension()), "f-vector: " + join(f),
                    std::string("weak pseudomanifold: ") + yes_no(g.weak_pseudomanifold),
                    std::string("closed: ") + yes_no(g.closed),
                    std::string("connected: ") + yes_no(connected),
                    "euler characteristic: " + std::to_string(chi)});
  return kOk;
}

const char* orientability_name(Orientability o) {
  switch (o) {
    case Orientability::Orientable: return "orientable";
    case Orientability::NonOrientable: return "non-orientable";
    case Orientability::NotApplicable: return "not-applicable";
  }
  return "not-applicable";
}

int cmd_homology(const Context& ctx, const std::string& file) {
  const SimplicialComplex x = load_complex(ctx, file);
  const HomologyProfile p = homology_profile(x);
  json data = {{"command", "homology"},
               {"betti", p.betti},
               {"euler_characteristic", p.euler},
               {"orientability", orientability_name(p.orientable)},
               {"connected", p.connected}};
  ctx.report(data, {"betti (Z/2): " + join(p.betti),
                    "euler characteristic: " + std::to_string(p.euler),
                    std::string("orientability: ") + orientability_name(p.orientable),
                    std::string("connected: ") + yes_no(p.connected)});
  return kOk;
}

int cmd_check_walkup(const Context& ctx, const std::string& file) {
  const SimplicialComplex x = load_complex(ctx, file);
  std::optional<VertexLabel> witness;
  if (x.is_pure() && x.dimension() >= 1) {
    for (const auto& v : x.vertices())
      if (!is_stacked_sphere(link(x, {v}))) {
        witness = v;
        break;
      }
  }
  const bool member = x.is_pure() && x.dimension() >= 1 && !witness;
  json data = {{"command", "check walkup"}, {"walkup", member}};
  std::vector<std::string> summary{std::string("walkup class: ") + yes_no(member)};
  if (witness) {
    data["witness_vertex"] = *witness;
    summary.push_back("link of " + *witness + " is not a stacked sphere");
  }
  ctx.report(data, summary);
  return member ? kOk : kFalse;
}

int cmd_check_stacked(const Context& ctx, const std::string& file) {
  const SimplicialComplex x = load_complex(ctx, file);
  const bool closed = is_closed_pseudomanifold(x);
  json data = {{"command", "check stacked"}, {"kind", closed ? "sphere" : "ball"}};
  bool stacked = false;
  std::vector<std::string> summary;
  if (closed) {
    stacked = is_stacked_sphere(x);
    bool reduced = false;
    if (x.dimension() >= 1) reduced = is_standard_sphere(reduce_to_core(x).residue);
    data["clique_route"] = stacked;
    data["reduction_route"] = reduced;
    summary.push_back(std::string("stacked sphere: ") + yes_no(stacked));
    summary.push_back(std::string("reduction to standard sphere: ") + yes_no(reduced));
  } else {
    stacked = is_stacked_ball(x);
    summary.push_back(std::string("stacked ball: ") + yes_no(stacked));
  }
  data["stacked"] = stacked;
  ctx.report(data, summary);
  return stacked ? kOk : kFalse;
}

int cmd_check_bounds4(const Context& ctx, const std::string& file) {
  const SimplicialComplex x = load_complex(ctx, file);
  const BoundReport r = check_bounds_4manifold(x);
  json inst = json::array();
  std::vector<std::string> summary{"euler characteristic: " + std::to_string(r.chi)};
  bool holds = true;
  for (const auto& i : r.instances) {
    inst.push_back({{"name", i.name}, {"lhs", i.lhs}, {"rhs", i.rhs}, {"tight", i.tight}});
    holds = holds && i.lhs >= i.rhs;
    summary.push_back(i.name + ": " + std::to_string(i.lhs) + " >= " + std::to_string(i.rhs) +
                      (i.tight ? " (equality)" : ""));
  }
  summary.push_back(std::string("face-count bounds tight: ") + yes_no(r.walkup_equality));
  summary.push_back(std::string("vertex bound tight: ") + yes_no(r.neighborly_equality));
  json data = {{"command", "check bounds4"},     {"euler_characteristic", r.chi},
               {"instances", inst},              {"walkup_equality", r.walkup_equality},
               {"neighborly_equality", r.neighborly_equality},
               {"overall_equality", r.overall_equality}, {"holds", holds}};
  ctx.report(data, summary);
  return holds ? kOk : kFalse;
}

struct TightArgs {
  bool exhaustive = false;
  std::uint64_t sample = 0;
  std::uint64_t seed = 1;
  std::size_t ceiling = 20;
  unsigned jobs = 0;
  bool all = false;
};

int cmd_check_tight(const Context& ctx, const std::string& file, const TightArgs& a) {
  const SimplicialComplex x = load_complex(ctx, file);
  TightnessOptions o;
  if (a.sample > 0) {
    o.mode = TightnessMode::Sampled;
    o.samples = a.sample;
  }
  o.seed = a.seed;
  o.ceiling = a.ceiling;
  o.jobs = a.jobs;
  o.collect_all = a.all;
  const TightnessReport r = is_tight_z2(x, o);
  const char* verdict = r.verdict == TightVerdict::Tight           ? "tight"
                        : r.verdict == TightVerdict::TightOnSample ? "tight-on-sample"
                                                                   : "not-tight";
  json violations = json::array();
  for (const auto& v : r.violations) violations.push_back({{"subset", v.subset}, {"degree", v.degree}});
  json data = {{"command", "check tight"},
               {"mode", r.mode == TightnessMode::Exhaustive ? "exhaustive" : "sampled"},
               {"checked", r.checked},
               {"verdict", verdict},
               {"violations", violations}};
  if (r.mode == TightnessMode::Sampled) {
    data["samples"] = r.samples;
    data["seed"] = r.seed;
  }
  std::vector<std::string> summary{std::string("verdict: ") + verdict,
                                   "subsets checked: " + std::to_string(r.checked),
                                   "violations: " + std::to_string(r.violations.size())};
  if (!r.violations.empty())
    summary.push_back("first violation: degree " + std::to_string(r.violations.front().degree) +
                      " on {" + join(r.violations.front().subset) + "}");
  ctx.report(data, summary);
  return r.violations.empty() ? kOk : kFalse;
}

int report_fvector(const Context& ctx, const std::string& kind, const FVector& f) {
  json data = {{"command", "fvector " + kind}, {"f_vector", f}};
  ctx.report(data, {"f-vector: " + join(f)});
  return kOk;
}

int cmd_generate(const Context& ctx, const std::string& what, int dim, std::size_t n,
                 std::uint64_t seed, bool as_json, bool dim_given) {
  auto need_dim = [&] {
    if (!dim_given) throw InputFailure{"generate " + what + " needs --dim"};
  };
  SimplicialComplex x;
  if (what == "m4-15") {
    x = build_m4_15();
  } else if (what == "b5-30") {
    x = build_b5_30();
  } else if (what == "s4-30") {
    x = build_s4_30();
  } else if (what == "n5-15") {
    x = build_n5_15();
  } else if (what == "sphere") {
    need_dim();
    x = standard_sphere(dim);
  } else if (what == "ball") {
    need_dim();
    x = standard_ball(dim);
  } else if (what == "stacked") {
    need_dim();
    if (n == 0) throw InputFailure{"generate stacked needs --n"};
    x = random_stacked_sphere(dim, n, seed);
  } else {
    throw InputFailure{"unknown generator '" + what + "'"};
  }
  ctx.out << (as_json ? format_facets_json(x) + "\n" : format_facet_list(x));
  return kOk;
}

json ledger_json(const HandleLedger& l) { return json::parse(format_ledger(l)); }

int cmd_decompose(const Context& ctx, const std::string& file, const std::string& ledger_out) {
  const SimplicialComplex x = load_complex(ctx, file);
  HandleLedger ledger;
  try {
    ledger = kalai_decompose(x);
  } catch (const Error& e) {
    if (e.code() != Errc::NotWalkup) throw;
    json data = {{"command", "decompose"}, {"walkup", false}, {"reason", e.what()}};
    ctx.report(data, {"not in the Walkup class: " + std::string(e.what())});
    return kFalse;
  }
  if (!ledger_out.empty()) write_text(ctx, ledger_out, format_ledger(ledger));
  json data = {{"command", "decompose"},
               {"walkup", true},
               {"handles", ledger.handles.size()},
               {"base_vertices", ledger.base.num_vertices()},
               {"base_f_vector", f_vector(ledger.base)}};
  if (ledger_out.empty())
    data["ledger"] = ledger_json(ledger);
  else
    data["ledger_file"] = ledger_out;
  std::vector<std::string> summary{
      "handles: " + std::to_string(ledger.handles.size()),
      "base: stacked sphere with " + std::to_string(ledger.base.num_vertices()) + " vertices"};
  for (std::size_t i = 0; i < ledger.handles.size(); ++i) {
    const auto& h = ledger.handles[i];
    summary.push_back("handle " + std::to_string(i + 1) + ": {" + join(h.sigma1) + "} -> {" +
                      join(h.sigma2) + "}");
  }
  if (!ledger_out.empty()) summary.push_back("ledger written to " + ledger_out);
  ctx.report(data, summary);
  return kOk;
}

int cmd_replay(const Context& ctx, const std::string& file, bool as_json) {
  const std::string name = file.empty() || file == "-" ? "<stdin>" : file;
  HandleLedger ledger;
  try {
    ledger = parse_ledger(load_text(ctx, file));
  } catch (const ParseError& e) {
    throw InputFailure{name + ": " + e.what()};
  }
  const SimplicialComplex x = replay(ledger);
  ctx.out << (as_json ? format_facets_json(x) + "\n" : format_facet_list(x));
  return kOk;
}

int cmd_automorphisms(const Context& ctx, const std::string& file) {
  const SimplicialComplex x = load_complex(ctx, file);
  const auto group = automorphism_group(x);
  json elements = json::array();
  std::vector<std::string> summary{"order: " + std::to_string(group.size())};
  for (const auto& p : group) {
    elements.push_back(p.cycle_notation());
    summary.push_back(p.cycle_notation());
  }
  json data = {{"command", "automorphisms"}, {"order", group.size()}, {"elements", elements}};
  ctx.report(data, summary);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Context ctx{in, out, err, "# walkup " + join(args), false};

  CLI::App app{"Walkup-class complexes: stacked spheres, handles and tightness", "walkup"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--porcelain", ctx.porcelain, "print only the JSON result");
  app.set_version_flag("--version", "walkup 0.1.0");

  std::function<int()> action;
  std::string file;

  auto* info = app.add_subcommand("info", "dimension, f-vector, closedness, Euler characteristic");
  info->add_option("file", file, "facet-list or JSON file (stdin if omitted)");
  info->callback([&] { action = [&] { return cmd_info(ctx, file); }; });

  auto* hom = app.add_subcommand("homology", "Z/2 Betti numbers and orientability");
  hom->add_option("file", file, "input file (stdin if omitted)");
  hom->callback([&] { action = [&] { return cmd_homology(ctx, file); }; });

  auto* check = app.add_subcommand("check", "predicates with 0/1 exit status");
  check->require_subcommand(1);
  auto* cw = check->add_subcommand("walkup", "every vertex link is a stacked sphere");
  cw->add_option("file", file, "input file (stdin if omitted)");
  cw->callback([&] { action = [&] { return cmd_check_walkup(ctx, file); }; });
  auto* cs = check->add_subcommand("stacked", "stacked sphere (closed input) or stacked ball");
  cs->add_option("file", file, "input file (stdin if omitted)");
  cs->callback([&] { action = [&] { return cmd_check_stacked(ctx, file); }; });
  auto* cb = check->add_subcommand("bounds4", "face-number lower bounds for closed 4-manifolds");
  cb->add_option("file", file, "input file (stdin if omitted)");
  cb->callback([&] { action = [&] { return cmd_check_bounds4(ctx, file); }; });

  TightArgs targs;
  auto* ct = check->add_subcommand("tight", "Z/2-tightness over induced subcomplexes");
  ct->add_option("file", file, "input file (stdin if omitted)");
  auto* ex = ct->add_flag("--exhaustive", targs.exhaustive, "scan every vertex subset (default)");
  auto* sm = ct->add_option("--sample", targs.sample, "scan N seeded random subsets instead")
                 ->check(CLI::PositiveNumber);
  ex->excludes(sm);
  ct->add_option("--seed", targs.seed, "seed for --sample");
  ct->add_option("--ceiling", targs.ceiling, "largest f0 allowed in exhaustive mode")
      ->capture_default_str();
  ct->add_option("--jobs", targs.jobs, "worker threads (0 = all cores)");
  ct->add_flag("--all", targs.all, "report every violation instead of the first");
  ct->callback([&] { action = [&] { return cmd_check_tight(ctx, file, targs); }; });

  int dim = 0;
  std::int64_t n = 0, chi = 0, f1 = 0;
  auto* fv = app.add_subcommand("fvector", "f-vector formulas");
  fv->require_subcommand(1);
  auto* fvs = fv->add_subcommand("stacked", "stacked d-sphere with n vertices");
  fvs->add_option("--dim", dim)->required();
  fvs->add_option("--n", n)->required();
  fvs->callback(
      [&] { action = [&] { return report_fvector(ctx, "stacked", stacked_sphere_fvector(dim, n)); }; });
  auto* fvw = fv->add_subcommand("walkup", "even-dimensional Walkup-class member from (n, chi)");
  fvw->add_option("--dim", dim)->required();
  fvw->add_option("--n", n)->required();
  fvw->add_option("--chi", chi)->required();
  fvw->callback([&] {
    action = [&] { return report_fvector(ctx, "walkup", walkup_fvector_even(dim, n, chi)); };
  });
  auto* fvf = fv->add_subcommand("from-f1", "Walkup-class member from (n, f1)");
  fvf->add_option("--dim", dim)->required();
  fvf->add_option("--n", n)->required();
  fvf->add_option("--f1", f1)->required();
  fvf->callback([&] {
    action = [&] { return report_fvector(ctx, "from-f1", fvector_from_f0_f1(dim, n, f1)); };
  });

  std::string what;
  std::size_t gen_n = 0;
  std::uint64_t gen_seed = 1;
  bool as_json = false;
  auto* gen = app.add_subcommand("generate", "print a built-in complex as a facet list");
  gen->add_option("what", what, "m4-15 | b5-30 | s4-30 | n5-15 | sphere | ball | stacked")
      ->required();
  auto* gen_dim = gen->add_option("--dim", dim, "dimension (sphere, ball, stacked)");
  gen->add_option("--n", gen_n, "vertex count (stacked)");
  gen->add_option("--seed", gen_seed, "seed (stacked)");
  gen->add_flag("--json", as_json, "emit {\"facets\": ...} instead of text");
  gen->callback([&] {
    action = [&] {
      return cmd_generate(ctx, what, dim, gen_n, gen_seed, as_json, gen_dim->count() > 0);
    };
  });

  std::string ledger_out;
  auto* dec = app.add_subcommand("decompose", "split into a stacked sphere plus handles");
  dec->add_option("file", file, "input file (stdin if omitted)");
  dec->add_option("--ledger", ledger_out, "write the handle ledger to this file");
  dec->callback([&] { action = [&] { return cmd_decompose(ctx, file, ledger_out); }; });

  auto* rep = app.add_subcommand("replay", "rebuild a complex from a handle ledger");
  rep->add_option("ledger", file, "ledger file (stdin if omitted)");
  rep->add_flag("--json", as_json, "emit {\"facets\": ...} instead of text");
  rep->callback([&] { action = [&] { return cmd_replay(ctx, file, as_json); }; });

  auto* aut = app.add_subcommand("automorphisms", "automorphism group in cycle notation");
  aut->add_option("file", file, "input file (stdin if omitted)");
  aut->callback([&] { action = [&] { return cmd_automorphisms(ctx, file); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion& e) {
    out << e.what() << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    return action ? action() : kUsage;
  } catch (const InputFailure& f) {
    err << "error: " << f.message << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace walkup::cli
