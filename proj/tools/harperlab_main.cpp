// harperlab command line interface.
//
// Subcommands:
//   construct <kind>  emit a named family as a JSON family document
//   check FILE        per-t extremality report for a family document
//   enumerate         isomorphism classes of extremal families of one size
//   verify <name>     run one statement checker, emit a run report
//   iso A.json B.json isomorphism test for two family documents
//
// Exit codes: 0 = verified / property holds, 1 = property violated
// (witness emitted), 2 = usage, parse or infeasibility error.
//
// HARPERLAB_MAX_N may lower (never raise) the dimension cap of 20.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "harperlab/classifier.hpp"
#include "harperlab/constructions.hpp"
#include "harperlab/extremality.hpp"
#include "harperlab/isomorphism.hpp"
#include "harperlab/serialization.hpp"

namespace {

using namespace harperlab;
using nlohmann::json;

int dimension_cap() {
  int cap = kMaxDimension;
  if (const char* env = std::getenv("HARPERLAB_MAX_N")) {
    try {
      const int requested = std::stoi(env);
      cap = std::min(cap, requested);
    } catch (...) {
      // ignored: a malformed override never raises the cap
    }
  }
  return cap;
}

void check_cap(int n) {
  if (n > dimension_cap()) {
    throw std::invalid_argument("dimension " + std::to_string(n) +
                                " exceeds the configured cap " +
                                std::to_string(dimension_cap()));
  }
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open output file: " + out_path);
  }
  out << text;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct CommonOptions {
  std::string out;
  std::string format = "json";
};

void add_common(CLI::App* cmd, CommonOptions& common) {
  cmd->add_option("--out", common.out, "Write the result to FILE");
  cmd->add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));
}

std::int64_t elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact extremal-set computations on the hypercube"};
  app.set_version_flag("--version", std::string("harperlab ") + library_version());
  app.require_subcommand(1);

  // ------------------------------------------------------------ construct
  auto* construct = app.add_subcommand("construct", "emit a named family");
  construct->require_subcommand(1);
  struct {
    int n = 0;
    int r = -1;
    std::uint64_t k = 0;
    bool has_k = false;
    std::uint64_t size = 0;
    bool has_size = false;
    int i = -1;
    int s = -1;
    std::uint32_t x = 0;
    bool has_x = false;
    std::uint32_t y = 0;
    bool has_y = false;
    CommonOptions common;
  } con;

  auto add_construct_kind = [&](const std::string& name,
                                const std::string& desc) {
    auto* kind = construct->add_subcommand(name, desc);
    kind->add_option("--n", con.n, "dimension");
    kind->add_option("--r", con.r, "radius / layer index");
    kind->add_option("--k", con.k, "colex segment size")
        ->each([&](const std::string&) { con.has_k = true; });
    kind->add_option("--size", con.size, "segment size")
        ->each([&](const std::string&) { con.has_size = true; });
    kind->add_option("--i", con.i, "section direction");
    kind->add_option("--s", con.s, "gap parameter");
    kind->add_option("--x", con.x, "first centre (vertex mask)")
        ->each([&](const std::string&) { con.has_x = true; });
    kind->add_option("--y", con.y, "second centre (vertex mask)")
        ->each([&](const std::string&) { con.has_y = true; });
    add_common(kind, con.common);
    return kind;
  };

  auto* con_segment = add_construct_kind(
      "segment", "initial segment of the simplicial order (--n --size)");
  con_segment->alias("initial_segment");
  auto* con_g = add_construct_kind("gr", "the segment-with-star family G_r");
  con_g->alias("g");
  auto* con_c = add_construct_kind("cr", "simplicial segment of size g(n,r)");
  con_c->alias("c");
  auto* con_b = add_construct_kind("br", "two-ball union B_r (--n --r)");
  con_b->alias("b");
  auto* con_ai = add_construct_kind("ai", "A_i family (--n --r --k --i)");
  con_ai->alias("a_i");
  auto* con_p10 = add_construct_kind("prop10", "unbounded-gap family (--s)");
  auto* con_punct =
      add_construct_kind("punctured", "B(x,r) minus its centre (--n --x --r)");
  con_punct->alias("punctured_ball");
  auto* con_two = add_construct_kind(
      "twoballs", "union of two radius-r balls (--n --x --y --r)");
  con_two->alias("two_ball_union");

  // ---------------------------------------------------------------- check
  auto* check = app.add_subcommand("check", "extremality report for a family");
  std::string check_file;
  bool check_weak = false;
  CommonOptions check_common;
  check->add_option("file", check_file, "family document")->required();
  check->add_flag("--weak", check_weak,
                  "gate the exit code on weak extremality (t = 1 only)");
  add_common(check, check_common);

  // ------------------------------------------------------------ enumerate
  auto* enumerate = app.add_subcommand(
      "enumerate", "isomorphism classes of extremal families");
  struct {
    int n = 0;
    std::uint64_t size = 0;
    std::string mode = "full";
    bool weak = false;
    int threads = 1;
    CommonOptions common;
  } enu;
  enumerate->add_option("--n", enu.n, "dimension")->required();
  enumerate->add_option("--size", enu.size, "family size")->required();
  enumerate->add_option("--mode", enu.mode, "enumeration mode")
      ->check(CLI::IsMember({"full", "sandwich"}));
  enumerate->add_flag("--weak", enu.weak, "weak extremality (t = 1 only)");
  enumerate->add_option("--threads", enu.threads, "worker threads");
  add_common(enumerate, enu.common);

  // --------------------------------------------------------------- verify
  auto* verify = app.add_subcommand("verify", "run one statement checker");
  struct {
    std::string name;
    StatementParams params;
    int n = -1, r = -1, i = -1, s = -1, t = -1;
    std::int64_t k = -1;
    std::string mode;
    CommonOptions common;
  } ver;
  verify->add_option("statement", ver.name, "statement name")->required();
  verify->add_option("--n", ver.n, "dimension");
  verify->add_option("--r", ver.r, "radius / uniformity");
  verify->add_option("--k", ver.k, "size parameter");
  verify->add_option("--i", ver.i, "direction");
  verify->add_option("--s", ver.s, "gap parameter");
  verify->add_option("--t", ver.t, "iteration depth");
  verify->add_option("--mode", ver.mode, "enumeration mode")
      ->check(CLI::IsMember({"full", "sandwich"}));
  verify->add_flag("--weak", ver.params.weak, "weak extremality variant");
  verify->add_option("--threads", ver.params.threads, "worker threads");
  add_common(verify, ver.common);

  // ------------------------------------------------------------------ iso
  auto* iso = app.add_subcommand("iso", "isomorphism test for two families");
  std::string iso_a, iso_b;
  CommonOptions iso_common;
  iso->add_option("a", iso_a, "first family document")->required();
  iso->add_option("b", iso_b, "second family document")->required();
  add_common(iso, iso_common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    return app.exit(err) == 0 ? 0 : 2;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    if (construct->parsed()) {
      ConstructionSpec spec;
      std::string label;
      if (con_segment->parsed()) {
        spec.kind = ConstructionKind::kInitialSegment;
        label = "segment";
      } else if (con_g->parsed()) {
        spec.kind = ConstructionKind::kG;
        label = "gr";
      } else if (con_c->parsed()) {
        spec.kind = ConstructionKind::kC;
        label = "cr";
      } else if (con_b->parsed()) {
        spec.kind = ConstructionKind::kB;
        label = "br";
      } else if (con_ai->parsed()) {
        spec.kind = ConstructionKind::kAI;
        label = "ai";
      } else if (con_p10->parsed()) {
        spec.kind = ConstructionKind::kProp10;
        label = "prop10";
        if (con.s >= 0) con.n = 2 * con.s + 8;
      } else if (con_punct->parsed()) {
        spec.kind = ConstructionKind::kPuncturedBall;
        label = "punctured";
      } else {
        spec.kind = ConstructionKind::kTwoBallUnion;
        label = "twoballs";
      }
      check_cap(con.n);
      spec.n = con.n;
      if (con.r >= 0) spec.r = con.r;
      if (con.has_k) spec.k = con.k;
      if (con.has_size) spec.size = con.size;
      if (con.i >= 0) spec.i = con.i;
      if (con.s >= 0) spec.s = con.s;
      if (con.has_x) spec.x = con.x;
      if (con.has_y) spec.y = con.y;
      const Family fam = build_from_spec(spec);
      std::ostringstream tag;
      tag << label << " n=" << fam.dim();
      if (spec.r) tag << " r=" << *spec.r;
      if (spec.k) tag << " k=" << *spec.k;
      if (spec.size) tag << " size=" << *spec.size;
      if (spec.i) tag << " i=" << *spec.i;
      if (spec.s) tag << " s=" << *spec.s;
      if (con.common.format == "csv") {
        std::string csv = "mask\n";
        for (auto m : fam.members()) csv += std::to_string(m) + "\n";
        write_output(csv, con.common.out);
      } else {
        write_output(emit_family(fam, tag.str()), con.common.out);
      }
      return 0;
    }

    if (check->parsed()) {
      const Family fam = parse_family(read_file(check_file));
      check_cap(fam.dim());
      const ExtremalityReport report = extremality_report(fam);
      write_output(check_common.format == "csv"
                       ? extremality_report_to_csv(report)
                       : extremality_report_to_json(report),
                   check_common.out);
      const bool ok = check_weak ? report.weak_extremal : report.strong_extremal;
      return ok ? 0 : 1;
    }

    if (enumerate->parsed()) {
      check_cap(enu.n);
      const EnumerationMode mode = enu.mode == "full"
                                       ? EnumerationMode::kFull
                                       : EnumerationMode::kSandwich;
      const ClassificationResult result =
          enumerate_extremal(enu.n, enu.size, mode, enu.weak, enu.threads);
      write_output(enu.common.format == "csv"
                       ? classification_to_csv(result)
                       : classification_to_json(result),
                   enu.common.out);
      if (!enu.weak && result.theorem2_verified.has_value()) {
        return *result.theorem2_verified ? 0 : 1;
      }
      return 0;
    }

    if (verify->parsed()) {
      if (ver.n >= 0) {
        check_cap(ver.n);
        ver.params.n = ver.n;
      }
      if (ver.r >= 0) ver.params.r = ver.r;
      if (ver.k >= 0) ver.params.k = static_cast<std::uint64_t>(ver.k);
      if (ver.i >= 0) ver.params.i = ver.i;
      if (ver.s >= 0) ver.params.s = ver.s;
      if (ver.t >= 0) ver.params.t = ver.t;
      if (!ver.mode.empty()) {
        ver.params.mode = ver.mode == "full" ? EnumerationMode::kFull
                                             : EnumerationMode::kSandwich;
      }
      const StatementResult result = verify_statement(ver.name, ver.params);

      RunReport report;
      report.subcommand = "verify";
      for (int j = 0; j < argc; ++j) report.argv.push_back(argv[j]);
      json params = json::object();
      params["statement"] = ver.name;
      if (ver.params.n) params["n"] = *ver.params.n;
      if (ver.params.r) params["r"] = *ver.params.r;
      if (ver.params.k) params["k"] = *ver.params.k;
      if (ver.params.i) params["i"] = *ver.params.i;
      if (ver.params.s) params["s"] = *ver.params.s;
      if (ver.params.t) params["t"] = *ver.params.t;
      if (ver.params.mode) {
        params["mode"] = *ver.params.mode == EnumerationMode::kFull
                             ? "full"
                             : "sandwich";
      }
      params["weak"] = ver.params.weak;
      report.parameters_json = params.dump();
      report.verified = result.verified;
      report.details = result.details;
      for (const auto& [key, value] : result.stats) {
        report.stats.emplace_back(key, value);
      }
      for (const Family& witness : result.witnesses) {
        report.witnesses.push_back(family_to_document(witness, "witness"));
      }
      report.timing_ms = elapsed_ms(start);
      write_output(ver.common.format == "csv" ? run_report_to_csv(report)
                                              : run_report_to_json(report),
                   ver.common.out);
      return result.verified ? 0 : 1;
    }

    if (iso->parsed()) {
      const Family a = parse_family(read_file(iso_a));
      const Family b = parse_family(read_file(iso_b));
      check_cap(a.dim());
      check_cap(b.dim());
      const IsoCheck check_result = are_isomorphic_detailed(a, b);

      RunReport report;
      report.subcommand = "iso";
      for (int j = 0; j < argc; ++j) report.argv.push_back(argv[j]);
      report.parameters_json =
          std::string(R"({"a":")") + iso_a + R"(","b":")" + iso_b + "\"}";
      report.verified = check_result.isomorphic;
      report.details = check_result.isomorphic
                           ? "families are isomorphic"
                           : "families are not isomorphic";
      report.stats.emplace_back("verified_exact",
                                check_result.verified_exact ? 1 : 0);
      if (!check_result.isomorphic) {
        report.witnesses.push_back(family_to_document(a, "first"));
        report.witnesses.push_back(family_to_document(b, "second"));
      }
      report.timing_ms = elapsed_ms(start);
      write_output(iso_common.format == "csv" ? run_report_to_csv(report)
                                              : run_report_to_json(report),
                   iso_common.out);
      return check_result.isomorphic ? 0 : 1;
    }
  } catch (const ParseError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  }
  return 2;
}
