// dsgrp: invariants of finite permutation groups from the command line.
//
// Subcommands:
//   compute <expr>          invariants of one group (text or JSON)
//   verify  --suite paper   run a registered claim suite (fast or full tier)
//   lattice <expr> --out P  write the full subgroup lattice to a file
//   catalog list            print the group-expression grammar
//
// Primary output (stdout) is byte-identical across runs; wall-clock numbers
// only ever go to the --timings sidecar file. Lattice runs are cached under
// .ds-cache/ (override with the DSGRP_CACHE_DIR environment variable).

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "dsgrp/catalog.hpp"
#include "dsgrp/common.hpp"
#include "dsgrp/invariants.hpp"
#include "dsgrp/subgroups.hpp"
#include "dsgrp/verify.hpp"

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

namespace {

class Stopwatch {
 public:
  Stopwatch() : last_(std::chrono::steady_clock::now()) {}
  double lap() {
    auto now = std::chrono::steady_clock::now();
    double s = std::chrono::duration<double>(now - last_).count();
    last_ = now;
    return s;
  }

 private:
  std::chrono::steady_clock::time_point last_;
};

using TimingRows = std::vector<std::pair<std::string, double>>;

void write_timings(const std::string& path, const TimingRows& rows) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write timings file: " + path);
  double total = 0.0;
  out.setf(std::ios::fixed);
  out.precision(6);
  for (const auto& [phase, secs] : rows) {
    out << phase << " " << secs << "\n";
    total += secs;
  }
  out << "total " << total << "\n";
}

std::string join(const std::vector<std::string>& parts,
                 const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string format_pi(const std::vector<std::uint64_t>& pi) {
  std::string out = "{";
  for (std::size_t i = 0; i < pi.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(pi[i]);
  }
  return out + "}";
}

// ---------------------------------------------------------------- compute

dsgrp::ReportOptions parse_invariant_list(const std::string& list) {
  dsgrp::ReportOptions o;
  o.want_d = o.want_gr = o.want_pi = o.want_bound = o.want_witnesses = false;
  std::stringstream ss(list);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok == "d") {
      o.want_d = true;
    } else if (tok == "gr") {
      o.want_gr = true;
    } else if (tok == "pi") {
      o.want_pi = true;
    } else if (tok == "bound") {
      o.want_bound = true;
    } else if (tok == "witnesses") {
      o.want_witnesses = true;
    } else {
      throw std::invalid_argument(
          "unknown invariant: " + tok +
          " (available: d, gr, pi, bound, witnesses)");
    }
  }
  return o;
}

void render_compute_text(const dsgrp::InvariantReport& r,
                         const dsgrp::ReportOptions& o, std::ostream& os) {
  os << "group: " << r.label << "\n";
  os << "order: " << r.order << "\n";
  os << "tier: " << r.tier << "\n";
  if (o.want_pi) os << "pi: " << format_pi(r.pi) << "\n";
  if (r.d_value) {
    os << "d: " << *r.d_value << "\n";
    os << "classes: " << join(r.d_class_reps, ", ") << "\n";
  }
  if (r.gr_value) os << "gr: " << *r.gr_value << "\n";
  if (r.bound) {
    os << "bound: " << dsgrp::to_string(r.bound->verdict) << "; "
       << r.bound->detail << "\n";
  }
  for (const auto& [p, text] : r.witnesses) {
    os << "witness p=" << p << ": " << text << "\n";
  }
}

ordered_json compute_json(const dsgrp::InvariantReport& r,
                          const dsgrp::ReportOptions& o) {
  ordered_json j;
  j["label"] = r.label;
  j["order"] = r.order;
  j["tier"] = r.tier;
  if (o.want_pi) j["pi"] = r.pi;
  if (r.d_value) {
    j["d_value"] = *r.d_value;
    j["d_class_reps"] = r.d_class_reps;
  }
  if (r.gr_value) j["gr_value"] = *r.gr_value;
  if (r.bound) {
    j["bound_verdict"] = dsgrp::to_string(r.bound->verdict);
    j["bound_detail"] = r.bound->detail;
  }
  if (o.want_witnesses) {
    ordered_json w = ordered_json::object();
    for (const auto& [p, text] : r.witnesses) w[std::to_string(p)] = text;
    j["witnesses"] = w;
  }
  return j;
}

int cmd_compute(const std::string& expr, const std::string& invariants,
                bool json, bool slow, const std::string& timings_path) {
  dsgrp::ReportOptions opts = parse_invariant_list(invariants);
  opts.allow_slow = slow;
  Stopwatch sw;
  dsgrp::PermGroup g = dsgrp::make_group(expr);
  TimingRows t;
  t.emplace_back("construct", sw.lap());
  dsgrp::InvariantReport rep = dsgrp::make_report(g, opts);
  t.emplace_back("report", sw.lap());
  if (json) {
    std::cout << compute_json(rep, opts).dump(2) << "\n";
  } else {
    render_compute_text(rep, opts, std::cout);
  }
  write_timings(timings_path, t);
  return 0;
}

// ----------------------------------------------------------------- verify

ordered_json suite_json(const dsgrp::SuiteResult& r) {
  ordered_json j;
  j["suite"] = r.suite;
  j["tier"] = r.tier;
  j["ok"] = r.ok();
  ordered_json claims = ordered_json::array();
  for (const dsgrp::ClaimResult& c : r.claims) {
    ordered_json jc;
    jc["id"] = c.id;
    jc["description"] = c.description;
    jc["anchor"] = c.anchor;
    jc["status"] = dsgrp::to_string(c.status);
    jc["details"] = c.details;
    claims.push_back(std::move(jc));
  }
  j["claims"] = std::move(claims);
  return j;
}

void render_suite_text(const dsgrp::SuiteResult& r, std::ostream& os) {
  os << "suite: " << r.suite << "\n";
  os << "tier: " << r.tier << "\n";
  std::size_t counts[4] = {0, 0, 0, 0};
  for (const dsgrp::ClaimResult& c : r.claims) {
    ++counts[static_cast<int>(c.status)];
    std::string status = dsgrp::to_string(c.status);
    status.resize(7, ' ');
    os << "[" << status << "] " << c.id << " (" << c.anchor
       << "): " << c.details << "\n";
  }
  os << "summary: " << counts[0] << " pass, " << counts[2] << " flagged, "
     << counts[3] << " skipped, " << counts[1] << " fail\n";
}

int cmd_verify(const std::string& suite, const dsgrp::SuiteOptions& opt,
               bool json, const std::string& timings_path) {
  Stopwatch sw;
  dsgrp::SuiteResult r = dsgrp::run_suite(suite, opt);
  TimingRows t;
  t.emplace_back("suite", sw.lap());
  if (json) {
    std::cout << suite_json(r).dump(2) << "\n";
  } else {
    render_suite_text(r, std::cout);
  }
  write_timings(timings_path, t);
  return r.ok() ? 0 : 1;
}

// ---------------------------------------------------------------- lattice

std::string hex16(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(v));
  return buf;
}

std::string render_lattice_file(const std::string& expr,
                                const dsgrp::PermGroup& g,
                                const dsgrp::Lattice& lat) {
  std::ostringstream os;
  os << "lattice v1\n";
  os << "expr " << expr << "\n";
  os << "engine " << dsgrp::kEngineVersion << "\n";
  os << "degree " << g.degree() << "\n";
  os << "order " << g.order() << "\n";
  os << "subgroups " << lat.subs.size() << "\n";
  for (const dsgrp::SubgroupRecord& rec : lat.subs) {
    os << "sub order=" << rec.order << " class=" << rec.class_id
       << " fingerprint=" << hex16(rec.fingerprint) << " gens=";
    std::string gens;
    for (const dsgrp::Perm& p : rec.gens) {
      if (!gens.empty()) gens += ";";
      std::string c = p.cycles();
      gens += c.empty() ? "()" : c;
    }
    os << (gens.empty() ? "()" : gens) << "\n";
  }
  return os.str();
}

std::uint64_t parse_subgroup_count(const std::string& content) {
  std::istringstream is(content);
  std::string line;
  while (std::getline(is, line)) {
    if (line.rfind("subgroups ", 0) == 0) {
      return std::stoull(line.substr(10));
    }
  }
  throw std::runtime_error("lattice cache record has no subgroup count");
}

int cmd_lattice(const std::string& expr, const std::string& out_path,
                bool slow, const std::string& timings_path) {
  const dsgrp::Limits limits;
  std::string cache_dir = ".ds-cache";
  if (const char* env = std::getenv("DSGRP_CACHE_DIR")) cache_dir = env;
  const std::uint64_t key = dsgrp::fnv1a64(
      expr.data(), expr.size(),
      dsgrp::fnv1a64(dsgrp::kEngineVersion,
                     std::string_view(dsgrp::kEngineVersion).size()));
  const fs::path cache_file = fs::path(cache_dir) / (hex16(key) + ".lat");

  Stopwatch sw;
  TimingRows t;
  std::string content;
  if (fs::exists(cache_file)) {
    std::ifstream in(cache_file, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    content = buf.str();
    std::cerr << "cache hit: " << cache_file.string() << "\n";
    t.emplace_back("cache-read", sw.lap());
  } else {
    dsgrp::PermGroup g = dsgrp::make_group(expr);
    if (g.order() > limits.fast_lattice_bound && !slow) {
      throw dsgrp::TooLargeError(
          "group of order " + std::to_string(g.order()) +
          " is past the fast lattice tier (fast_lattice_bound = " +
          std::to_string(limits.fast_lattice_bound) +
          "); pass --slow to enumerate up to lattice_threshold = " +
          std::to_string(limits.lattice_threshold));
    }
    dsgrp::Lattice lat = dsgrp::all_subgroups(g, limits);
    content = render_lattice_file(expr, g, lat);
    t.emplace_back("enumerate", sw.lap());
    fs::create_directories(cache_file.parent_path());
    std::ofstream cache(cache_file, std::ios::binary);
    if (!cache) {
      throw std::runtime_error("cannot write cache file: " +
                               cache_file.string());
    }
    cache << content;
  }

  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write output file: " + out_path);
  out << content;
  out.close();
  t.emplace_back("write", sw.lap());
  std::cout << parse_subgroup_count(content) << " subgroups written to "
            << out_path << "\n";
  write_timings(timings_path, t);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "dsgrp: invariants of finite permutation groups.\n"
      "Counts isomorphism classes of derived subgroups of subgroups (d),\n"
      "distinct derived subgroups as sets (gr), prime spectra, and bound\n"
      "comparisons; runs registered claim-verification suites."};
  app.require_subcommand(1);

  // compute
  std::string c_expr, c_inv = "d,gr,pi,bound", c_timings;
  bool c_json = false, c_slow = false;
  CLI::App* compute =
      app.add_subcommand("compute", "invariants of one group expression");
  compute->add_option("expr", c_expr, "group expression (see: catalog list)")
      ->required();
  compute->add_option("--invariants", c_inv,
                      "comma-separated subset of d,gr,pi,bound,witnesses");
  compute->add_flag("--json", c_json, "emit a JSON report");
  compute->add_flag("--slow", c_slow,
                    "allow slow-tier lattice enumeration (orders up to the "
                    "lattice threshold)");
  compute->add_option("--timings", c_timings,
                      "write wall-clock phase timings to this sidecar file");

  // verify
  std::string v_suite = "paper", v_timings;
  dsgrp::SuiteOptions v_opt;
  bool v_json = false;
  CLI::App* verify =
      app.add_subcommand("verify", "run a registered claim suite");
  verify->add_option("--suite", v_suite, "suite name (available: paper)");
  verify->add_option("--tier", v_opt.tier, "fast or full");
  verify->add_flag("--json", v_json, "emit a JSON report");
  verify->add_flag("--with-u42", v_opt.with_u42,
                   "include the optional order-25920 witness row");
  verify->add_option("--data-dir", v_opt.data_dir,
                     "directory holding shipped group files");
  verify->add_option("--timings", v_timings,
                     "write wall-clock phase timings to this sidecar file");

  // lattice
  std::string l_expr, l_out, l_timings;
  bool l_slow = false;
  CLI::App* lattice = app.add_subcommand(
      "lattice",
      "write the full subgroup lattice of a group to a file (cached under "
      ".ds-cache/ or $DSGRP_CACHE_DIR)");
  lattice->add_option("expr", l_expr, "group expression")->required();
  lattice->add_option("--out", l_out, "output path")->required();
  lattice->add_flag("--slow", l_slow,
                    "allow slow-tier lattice enumeration");
  lattice->add_option("--timings", l_timings,
                      "write wall-clock phase timings to this sidecar file");

  // catalog
  CLI::App* catalog =
      app.add_subcommand("catalog", "describe the group-expression grammar");
  catalog->add_subcommand("list", "print grammar and named entries");
  catalog->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (compute->parsed()) {
      return cmd_compute(c_expr, c_inv, c_json, c_slow, c_timings);
    }
    if (verify->parsed()) {
      return cmd_verify(v_suite, v_opt, v_json, v_timings);
    }
    if (lattice->parsed()) {
      return cmd_lattice(l_expr, l_out, l_slow, l_timings);
    }
    for (const std::string& line : dsgrp::catalog_lines()) {
      std::cout << line << "\n";
    }
    return 0;
  } catch (const dsgrp::TooLargeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const dsgrp::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
