// Copyright 2026 The qdom Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qdom_cli/cli.hpp"

#include <iomanip>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qdom/annulus.hpp"
#include "qdom/bounds.hpp"
#include "qdom/construction.hpp"
#include "qdom/errors.hpp"
#include "qdom/placement_io.hpp"
#include "qdom/solver.hpp"
#include "qdom/visibility.hpp"
#include "qdom_cli/record.hpp"

namespace qdom::cli {
namespace {

using nlohmann::json;

const char* yes_no(bool b) { return b ? "yes" : "no"; }

void row(std::ostream& out, const std::string& key, const std::string& value) {
  out << std::left << std::setw(14) << key << value << '\n';
}

std::string join_squares(const std::vector<Square>& squares) {
  std::string s;
  for (const Square& sq : squares) {
    if (!s.empty()) s += ' ';
    s += to_string(sq);
  }
  return s.empty() ? "-" : s;
}

json squares_json(const std::vector<Square>& squares) {
  json a = json::array();
  for (const Square& sq : squares) a.push_back({sq.x, sq.y});
  return a;
}

std::string opt_int(std::optional<int> v) { return v ? std::to_string(*v) : "-"; }

// Exact connected optimum for boards too small for the closed-form upper bound.
int exact_connected(int n) {
  SolveRequest req;
  req.n = n;
  req.variant = Variant::connected;
  return solve_bb(req).value.value_or(0);
}

struct SolveOptions {
  int n = 0;
  std::string variant = "simple";
  int k = 1;
  std::string method = "bb";
  std::optional<int> max_size;
  std::optional<std::uint64_t> node_limit;
  int workers = 1;
  std::string cache;
  std::string out;
};

SolveRequest make_request(int n, Variant variant, int k, Method method, int workers) {
  SolveRequest req;
  req.n = n;
  req.variant = variant;
  req.k = k;
  req.method = method;
  req.worker_count = workers;
  return req;
}

int cmd_solve(const SolveOptions& o, std::ostream& out, std::ostream& err) {
  const auto variant = parse_variant(o.variant);
  const auto method = parse_method(o.method);
  if (!variant || !method) {
    err << "unknown variant or method\n";
    return kExitUsage;
  }
  SolveRequest req = make_request(o.n, *variant, o.k, *method, o.workers);
  req.max_size = o.max_size;
  req.node_limit = o.node_limit;
  const SolveResult res = solve(req);
  const ResultRecord rec = make_record(req, res);

  row(out, "n", std::to_string(req.n));
  row(out, "variant", to_string(req.variant));
  row(out, "k", std::to_string(rec.k));
  row(out, "method", to_string(res.method));
  row(out, "status", to_string(res.status));
  row(out, "value", opt_int(res.value));
  row(out, "lb", std::to_string(rec.lb));
  row(out, "ub", opt_int(rec.ub));
  row(out, "nodes", std::to_string(res.nodes_explored));
  row(out, "elapsed_ms", std::to_string(rec.elapsed_ms));
  row(out, "witness", res.witness ? join_squares(res.witness->queens()) : "-");
  out << to_json(rec).dump() << '\n';

  if (!o.cache.empty()) append_record(o.cache, rec);
  if (!o.out.empty() && res.witness) write_placement_file(o.out, *res.witness);

  if (!consistent(rec)) {
    err << "violation: value outside [lb, ub]\n";
    return kExitFinding;
  }
  return res.status == SolveStatus::optimal ? kExitOk : kExitFinding;
}

json bound_json(const BoundReport& b) {
  return {{"variant", to_string(b.variant)}, {"n", b.n}, {"k", b.k}, {"lb", b.lb},
          {"ub", b.ub ? json(*b.ub) : json(nullptr)}, {"ub_from_solver", b.ub_from_solver}};
}

int cmd_bounds(int n, int k, std::ostream& out) {
  std::vector<BoundReport> reports = {bound_report(Variant::simple, n),
                                      bound_report(Variant::connected, n),
                                      bound_report(Variant::kcolored, n, k)};
  if (n < 4) {
    const int exact = exact_connected(n);
    for (BoundReport& r : reports) {
      if (r.variant == Variant::simple) continue;
      r.ub = exact;
      r.ub_from_solver = true;
    }
  }
  const FixpointResult fp = fixpoint_lb(n);

  out << std::left << std::setw(11) << "variant" << std::setw(5) << "n" << std::setw(5) << "k"
      << std::setw(5) << "lb" << "ub\n";
  for (const BoundReport& r : reports) {
    out << std::left << std::setw(11) << to_string(r.variant) << std::setw(5) << r.n
        << std::setw(5) << r.k << std::setw(5) << r.lb << opt_int(r.ub)
        << (r.ub_from_solver ? " (exact, solver)" : "") << '\n';
  }
  out << "fixpoint_lb  " << fp.reported << " (raw " << fp.value << ", " << fp.iterations
      << " iterations)\n";
  const BoundReport& headline = k == 1 ? reports[1] : reports[2];
  out << "lb=" << headline.lb << " ub=" << opt_int(headline.ub) << '\n';

  json j = {{"n", n}, {"k", k}, {"reports", json::array()}};
  for (const BoundReport& r : reports) j["reports"].push_back(bound_json(r));
  j["fixpoint"] = {{"value", fp.value}, {"reported", fp.reported}, {"iterations", fp.iterations}};
  out << j.dump() << '\n';
  return kExitOk;
}

int cmd_construct(int n, const std::string& path, std::ostream& out) {
  const ConstructionOutcome o = construct_connected(n);
  const ConstructionReport rep = validate_construction(o);
  row(out, "n", std::to_string(n));
  row(out, "layout", o.from_solver ? "solver optimum" : "3x3 blocks of n=" + std::to_string(o.layout_n));
  row(out, "alignment", o.alignment);
  row(out, "literal_size", std::to_string(o.literal_size));
  row(out, "size", std::to_string(rep.size));
  row(out, "dominating", yes_no(rep.dominating));
  row(out, "connected", yes_no(rep.connected));
  row(out, "repaired", yes_no(o.repaired));
  row(out, "lb", std::to_string(rep.lb));
  row(out, "claimed_ub", opt_int(rep.claimed_ub));
  row(out, "meets_claim", yes_no(rep.meets_claimed_ub));
  row(out, "gap_to_lb", std::to_string(rep.gap_to_lb));
  row(out, "removed", join_squares(o.removed_by_minimization));
  row(out, "placement", join_squares(o.placement.queens()));

  json j = {{"n", n},
            {"layout_n", o.layout_n},
            {"alignment", o.alignment},
            {"literal_size", o.literal_size},
            {"size", rep.size},
            {"dominating", rep.dominating},
            {"connected", rep.connected},
            {"repaired", o.repaired},
            {"repair_added", squares_json(o.repair_added)},
            {"uncovered_before_repair", squares_json(o.uncovered_before_repair)},
            {"removed_by_minimization", squares_json(o.removed_by_minimization)},
            {"lb", rep.lb},
            {"claimed_ub", rep.claimed_ub ? json(*rep.claimed_ub) : json(nullptr)},
            {"meets_claimed_ub", rep.meets_claimed_ub},
            {"within_literal_bound", rep.within_literal_bound},
            {"base_misses_only_first_column", rep.base_misses_only_first_column},
            {"from_solver", o.from_solver},
            {"placement", squares_json(o.placement.queens())}};
  out << j.dump() << '\n';

  if (!path.empty()) write_placement_file(path, o.placement);
  return rep.dominating && rep.connected ? kExitOk : kExitFinding;
}

int cmd_analyze(const std::string& path, std::ostream& out) {
  const Placement p = read_placement_file(path);
  const CoverageMap cov = coverage(p);
  const bool dom = !p.empty() && cov.uncovered_count() == 0;
  const VisibilityGraph g = build_visibility(p);

  row(out, "board", "N=" + std::to_string(p.n()) + " queens=" + std::to_string(p.queen_count()));
  row(out, "coverage", "occupied=" + std::to_string(cov.occupied_count()) +
                           " covered=" + std::to_string(cov.covered_count()) +
                           " uncovered=" + std::to_string(cov.uncovered_count()));
  row(out, "dominating", yes_no(dom));
  row(out, "edges", std::to_string(g.edge_count()));
  json edges = json::array();
  for (const VisibilityEdge& e : g.edges()) {
    const std::string s = to_string(g.queens()[static_cast<std::size_t>(e.a)]) + "-" +
                          to_string(g.queens()[static_cast<std::size_t>(e.b)]);
    out << "  " << s << '\n';
    edges.push_back(s);
  }
  row(out, "components", std::to_string(g.components()));

  json j = {{"n", p.n()},
            {"queens", p.queen_count()},
            {"uncovered", cov.uncovered_count()},
            {"dominating", dom},
            {"edges", edges},
            {"components", g.components()}};

  std::optional<RegionMap> map;
  try {
    map.emplace(decompose(p));
  } catch (const DegeneratePlacementError& e) {
    row(out, "annulus", std::string("not applicable (") + e.what() + ")");
    j["annulus"] = nullptr;
    j["not_applicable"] = e.what();
    out << j.dump() << '\n';
    return kExitOk;
  }

  const Sentinels& s = map->sentinels();
  row(out, "sentinels", "x1=" + std::to_string(s.x1) + " x2=" + std::to_string(s.x2) +
                            " y1=" + std::to_string(s.y1) + " y2=" + std::to_string(s.y2));
  std::string regions;
  for (int r = 1; r <= 9; ++r) {
    regions += (r > 1 ? " Q" : "Q") + std::to_string(r) + "=" + std::to_string(map->queen_count(r));
  }
  row(out, "regions", regions);
  row(out, "annulus", "size=" + std::to_string(map->annulus_size()) + " frame=" +
                          std::to_string(map->frame_width()) + "x" +
                          std::to_string(map->frame_height()));
  const CommonalityTally t = tally_commonality(p, *map);
  row(out, "commonality",
      "R(I)=" + std::to_string(t.common_r_I) + " C(I)=" + std::to_string(t.common_c_I) +
          " D(on)=" + std::to_string(t.common_d_on_annulus) +
          " D(off)=" + std::to_string(t.common_d_off_annulus) +
          " R(II)=" + std::to_string(t.common_r_II) + " C(II)=" + std::to_string(t.common_c_II) +
          " total=" + std::to_string(t.total()));

  bool violation = false;
  json ineqs = json::array();
  for (Inequality which : kAllInequalities) {
    const InequalityReport rep = check_inequality(which, p, *map);
    const bool guaranteed = which == Inequality::II || which == Inequality::V || dom;
    if (guaranteed && !rep.holds) violation = true;
    out << "inequality " << std::left << std::setw(4) << to_string(which) << "lhs=" << rep.lhs
        << " rhs=" << rep.rhs << ' ' << (rep.holds ? "holds" : "fails")
        << (guaranteed || rep.holds ? "" : " (not dominating)") << '\n';
    json terms = json::object();
    for (const auto& [name, v] : rep.breakdown) terms[name] = v;
    ineqs.push_back({{"which", to_string(which)},
                     {"lhs", rep.lhs},
                     {"rhs", rep.rhs},
                     {"holds", rep.holds},
                     {"breakdown", terms}});
  }
  for (const QueenReach& r : annulus_reach(p, *map)) {
    if (r.reach > r.cap) {
      violation = true;
      out << "reach violation: queen " << to_string(r.queen) << " in " << to_string(r.region)
          << " reaches " << r.reach << " > " << r.cap << '\n';
    }
  }

  json counts = json::array();
  for (int r = 1; r <= 9; ++r) counts.push_back(map->queen_count(r));
  j["sentinels"] = {{"x1", s.x1}, {"x2", s.x2}, {"y1", s.y1}, {"y2", s.y2}};
  j["q"] = counts;
  j["annulus_size"] = map->annulus_size();
  j["commonality"] = {{"common_r_I", t.common_r_I},
                      {"common_c_I", t.common_c_I},
                      {"common_d_on_annulus", t.common_d_on_annulus},
                      {"common_d_off_annulus", t.common_d_off_annulus},
                      {"common_r_II", t.common_r_II},
                      {"common_c_II", t.common_c_II},
                      {"total", t.total()}};
  j["inequalities"] = ineqs;
  out << j.dump() << '\n';
  return violation ? kExitFinding : kExitOk;
}

int cmd_verify(const std::string& path, const std::string& variant_name, int k,
               std::ostream& out, std::ostream& err) {
  const auto variant = parse_variant(variant_name);
  if (!variant) {
    err << "unknown variant " << variant_name << '\n';
    return kExitUsage;
  }
  const Placement p = read_placement_file(path);
  const bool dom = !p.empty() && dominates(p);
  out << "dominating: " << yes_no(dom) << '\n';
  if (p.empty()) {
    out << "connected: no\n";
  } else {
    const VisibilityGraph g = build_visibility(p);
    out << "connected: " << yes_no(is_connected(g)) << '\n';
    out << "every queen sees another: " << yes_no(every_queen_sees_another(g)) << '\n';
    out << "components: " << component_count(g) << '\n';
  }
  const bool ok = feasible(p, *variant, k);
  out << "feasible (" << to_string(*variant);
  if (*variant == Variant::kcolored) out << ", k=" << k;
  out << "): " << yes_no(ok) << '\n';
  return ok ? kExitOk : kExitFinding;
}

int cmd_scan(int n_min, int n_max, const std::vector<std::string>& variants, int k,
             const std::string& method_name, int workers, const std::string& cache,
             std::ostream& out, std::ostream& err) {
  const auto method = parse_method(method_name);
  if (!method || n_min < 1 || n_max < n_min) {
    err << "bad scan range or method\n";
    return kExitUsage;
  }
  std::vector<Variant> parsed;
  for (const std::string& v : variants) {
    const auto pv = parse_variant(v);
    if (!pv) {
      err << "unknown variant " << v << '\n';
      return kExitUsage;
    }
    parsed.push_back(*pv);
  }
  const int limit =
      *method == Method::exhaustive ? kDefaultExhaustiveLimit : kDefaultBranchAndBoundLimit;
  int status = kExitOk;
  for (int n = n_min; n <= n_max; ++n) {
    for (Variant v : parsed) {
      const int lb = lower_bound(v, n, k);
      if (n > limit) {
        out << "n=" << n << " variant=" << to_string(v) << " bounds only: lb=" << lb
            << " ub=" << opt_int(v == Variant::total ? std::nullopt : ub_connected(n)) << '\n';
        continue;
      }
      const SolveRequest req = make_request(n, v, k, *method, workers);
      const SolveResult res = solve(req);
      const ResultRecord rec = make_record(req, res);
      out << "n=" << n << " variant=" << to_string(v);
      if (v == Variant::kcolored) out << " k=" << k;
      out << " value=" << opt_int(res.value) << " lb=" << lb << " ub=" << opt_int(rec.ub)
          << " status=" << to_string(res.status) << '\n';
      if (!cache.empty()) append_record(cache, rec);
      if (!consistent(rec) || res.status != SolveStatus::optimal) status = kExitFinding;
    }
  }
  return status;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact solver and verifier for queen domination variants"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(tool_version()));

  SolveOptions so;
  auto* solve_cmd = app.add_subcommand("solve", "Exact minimum for a variant");
  solve_cmd->add_option("--n", so.n, "Board size")->required()->check(CLI::Range(1, kMaxSolverBoard));
  solve_cmd->add_option("--variant", so.variant, "simple|connected|total|kcolored")
      ->check(CLI::IsMember({"simple", "connected", "total", "kcolored"}));
  solve_cmd->add_option("--k", so.k, "Color count for kcolored")->check(CLI::PositiveNumber);
  solve_cmd->add_option("--method", so.method, "exhaustive|bb")
      ->check(CLI::IsMember({"exhaustive", "bb"}));
  solve_cmd->add_option("--max-size", so.max_size, "Largest size to try")->check(CLI::PositiveNumber);
  solve_cmd->add_option("--node-limit", so.node_limit, "Abort after this many search nodes");
  solve_cmd->add_option("--workers", so.workers, "Worker threads")->check(CLI::PositiveNumber);
  solve_cmd->add_option("--cache", so.cache, "Append the result record to this ledger");
  solve_cmd->add_option("--out", so.out, "Write the witness placement here");

  int bn = 0, bk = 1;
  auto* bounds_cmd = app.add_subcommand("bounds", "Closed-form lower and upper bounds");
  bounds_cmd->add_option("--n", bn, "Board size")->required()->check(CLI::PositiveNumber);
  bounds_cmd->add_option("--k", bk, "Color count")->check(CLI::PositiveNumber);

  int cn = 0;
  std::string cout_path;
  auto* construct_cmd = app.add_subcommand("construct", "Block-diagonal connected cover");
  construct_cmd->add_option("--n", cn, "Board size")->required()->check(CLI::PositiveNumber);
  construct_cmd->add_option("--out", cout_path, "Write the placement here");

  std::string apath;
  auto* analyze_cmd = app.add_subcommand("analyze", "Region decomposition and inequalities");
  analyze_cmd->add_option("--placement", apath, "Placement file")->required();

  std::string vpath, vvariant = "connected";
  int vk = 1;
  auto* verify_cmd = app.add_subcommand("verify", "Check a placement against a variant");
  verify_cmd->add_option("--placement", vpath, "Placement file")->required();
  verify_cmd->add_option("--variant", vvariant, "simple|connected|total|kcolored")->required();
  verify_cmd->add_option("--k", vk, "Color count for kcolored")->check(CLI::PositiveNumber);

  int smin = 0, smax = 0, sk = 1, sworkers = 1;
  std::vector<std::string> svariants;
  std::string scache, smethod = "bb";
  auto* scan_cmd = app.add_subcommand("scan", "Solve a range of boards");
  scan_cmd->add_option("--n-min", smin, "Smallest board")->required();
  scan_cmd->add_option("--n-max", smax, "Largest board")->required();
  scan_cmd->add_option("--variant", svariants, "Comma-separated variants")
      ->required()
      ->delimiter(',');
  scan_cmd->add_option("--k", sk, "Color count for kcolored")->check(CLI::PositiveNumber);
  scan_cmd->add_option("--method", smethod, "exhaustive|bb");
  scan_cmd->add_option("--workers", sworkers, "Worker threads")->check(CLI::PositiveNumber);
  scan_cmd->add_option("--cache", scache, "Append result records to this ledger");

  std::vector<const char*> argv{"qdom"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*solve_cmd) return cmd_solve(so, out, err);
    if (*bounds_cmd) return cmd_bounds(bn, bk, out);
    if (*construct_cmd) return cmd_construct(cn, cout_path, out);
    if (*analyze_cmd) return cmd_analyze(apath, out);
    if (*verify_cmd) return cmd_verify(vpath, vvariant, vk, out, err);
    if (*scan_cmd) return cmd_scan(smin, smax, svariants, sk, smethod, sworkers, scache, out, err);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace qdom::cli
