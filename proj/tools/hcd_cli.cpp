// Command-line front end: sequences, enumerations, maps, growth constants,
// lcm counts and the verification suites. Output is JSON lines by default,
// CSV with --format csv.
#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hcd/json_io.hpp"
#include "hcd/lcm_counts.hpp"
#include "hcd/verify.hpp"

namespace {

using hcd::json;

constexpr const char* kSchema = "hcd.output/1";

// Largest number of objects an enumeration may produce without --force.
constexpr std::int64_t kEnumerationCap = 2'000'000;
// Largest grid volume accepted by lcm-count without --force.
constexpr std::int64_t kGridCap = 10'000;

struct ResourceCap : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "json";
  unsigned threads = 1;
  bool force = false;
};

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const auto v = std::stoll(text);
      return {v, v};
    }
    return {std::stoll(text.substr(0, dots)), std::stoll(text.substr(dots + 2))};
  } catch (const std::logic_error&) {
    throw std::invalid_argument("bad range '" + text + "', expected A..B");
  }
}

std::string shortest(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

void emit_record(const std::string& command, json params, json results, const std::string& provenance) {
  json rec = {{"schema", kSchema},
              {"command", command},
              {"parameters", std::move(params)},
              {"results", std::move(results)},
              {"provenance", provenance}};
  std::cout << rec.dump() << '\n';
}

template <class Range>
void emit_csv_row(const Range& values) {
  bool first = true;
  for (const auto& v : values) {
    std::cout << (first ? "" : ",") << v;
    first = false;
  }
  std::cout << '\n';
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("'" + path + "' is not valid JSON: " + e.what());
  }
}

void check_cap(std::int64_t size, std::int64_t cap, const std::string& what, const Options& opt) {
  if (size > cap && !opt.force) {
    throw ResourceCap("resource cap: " + what + " is " + std::to_string(size) + ", above the limit " +
                      std::to_string(cap) + " (pass --force to override)");
  }
}

void run_mu(int d, const std::string& range, const Options& opt) {
  const auto [a, b] = parse_range(range);
  if (d < 1 || a < 1 || b < a) throw std::invalid_argument("mu: need d >= 1 and 1 <= A <= B");
  std::vector<std::int64_t> values;
  for (auto n = a; n <= b; ++n) values.push_back(hcd::mobius_d(d, n));
  if (opt.format == "csv") return emit_csv_row(values);
  emit_record("mu", {{"d", d}, {"n", range}}, values, "recursion");
}

void run_seq(const std::string& which, int d, std::size_t max_n, const Options& opt) {
  if (d < 1 || max_n < 1) throw std::invalid_argument("seq: need d >= 1 and max-n >= 1");
  hcd::TruncatedSeries s;
  std::size_t from = 1;
  std::string provenance = "series";
  if (which == "sd") {
    s = hcd::decomposition_counts(d, max_n);
  } else if (which == "ad") {
    s = hcd::auxiliary_counts(d, max_n);
    from = 0;
  } else {
    s = hcd::tree_counts(d, max_n);
    provenance = "recursion";
  }
  const json values = hcd::coefficients_json(s, from);
  if (opt.format == "csv") {
    std::vector<std::string> row;
    for (const auto& v : values) row.push_back(v.get<std::string>());
    return emit_csv_row(row);
  }
  emit_record("seq " + which, {{"d", d}, {"max_n", max_n}, {"first_n", from}}, values, provenance);
}

void run_refined(int d, const std::vector<long long>& r, std::size_t max_n, const Options& opt) {
  const auto s = hcd::refined_counts(d, r, max_n);
  const json values = hcd::coefficients_json(s);
  if (opt.format == "csv") {
    std::vector<std::string> row;
    for (const auto& v : values) row.push_back(v.get<std::string>());
    return emit_csv_row(row);
  }
  emit_record("refined", {{"d", d}, {"r", r}, {"max_n", max_n}}, values, "series");
}

void run_enum(const std::string& kind, int d, std::size_t n, const std::string& emit_path,
              const Options& opt) {
  if (d < 1 || n < 1) throw std::invalid_argument("enum: need d >= 1 and n >= 1");
  if (kind == "necs" && d != 1) throw std::invalid_argument("enum necs: only d = 1");
  const auto expected = kind == "trees" ? hcd::tree_counts(d, n)[n] : hcd::decomposition_counts(d, n)[n];
  check_cap(expected > kEnumerationCap ? kEnumerationCap + 1 : expected.convert_to<std::int64_t>(),
            kEnumerationCap, "expected object count", opt);
  std::vector<json> objects;
  if (kind == "decomp") {
    for (const auto& S : hcd::enumerate_decompositions(d, n, opt.threads)) objects.push_back(hcd::to_json(S));
  } else if (kind == "necs") {
    for (const auto& C : hcd::enumerate_necs(n)) objects.push_back(hcd::to_json(C));
  } else {
    for (const auto& T : hcd::enumerate_trees(d, n)) objects.push_back(hcd::to_json(T, d));
  }
  if (!emit_path.empty()) {
    std::ofstream out(emit_path);
    if (!out) throw std::invalid_argument("cannot write '" + emit_path + "'");
    for (const auto& o : objects) out << o.dump() << '\n';
  }
  if (opt.format == "csv") {
    std::cout << kind << ',' << d << ',' << n << ',' << objects.size() << '\n';
    return;
  }
  emit_record("enum " + kind, {{"d", d}, {"n", n}}, {{"count", std::to_string(objects.size())}},
              "enumeration");
}

void run_phi(const std::string& path, const Options& opt) {
  const auto S = hcd::decomposition_from_json(read_json_file(path));
  if (!hcd::is_split_generated(S)) throw std::invalid_argument("phi: input is not split-generated");
  const auto C = hcd::phi(S);
  if (opt.format == "csv") {
    for (const auto& c : C.classes()) std::cout << c.a << ',' << c.n << '\n';
    return;
  }
  emit_record("phi", {{"in", path}},
              {{"necs", hcd::to_json(C)}, {"gcd", hcd::gcd_necs(C)}, {"lcm", hcd::lcm_necs(C)}},
              "recursion");
}

void run_psi(const std::string& path, const Options& opt) {
  const json in = read_json_file(path);
  const int d = in.at("d").get<int>();
  const auto T = hcd::parse_tree(in.at("tree").get<std::string>());
  const auto S = hcd::psi(T, d);
  if (opt.format == "csv") {
    for (const auto& R : S.regions()) {
      std::vector<std::string> row;
      for (const auto& side : R.sides) {
        row.push_back(hcd::to_string(side.lo));
        row.push_back(hcd::to_string(side.hi));
      }
      emit_csv_row(row);
    }
    return;
  }
  emit_record("psi", {{"in", path}}, hcd::to_json(S), "recursion");
}

void run_growth(const std::string& range, double tol, const Options& opt) {
  const auto [a, b] = parse_range(range);
  if (a < 1 || b < a) throw std::invalid_argument("growth: need 1 <= D1 <= D2");
  if (opt.format == "csv") std::cout << "d,s,K,excess,M2,bounds\n";
  for (auto d = a; d <= b; ++d) {
    const auto r = hcd::find_saddle(static_cast<int>(d), tol);
    const bool bounded = d >= 2 && hcd::check_growth_bounds(r);
    if (opt.format == "csv") {
      std::cout << d << ',' << shortest(r.s) << ',' << shortest(r.growth_rate) << ','
                << shortest(r.growth_rate - (4.0 * d + 1.5)) << ',' << shortest(r.M2_at_s) << ','
                << (d >= 2 ? (bounded ? "true" : "false") : "n/a") << '\n';
      continue;
    }
    json res = hcd::to_json(r);
    if (d >= 2) res["bounds_hold"] = bounded;
    emit_record("growth", {{"d", d}, {"tol", tol}}, std::move(res), "saddle");
  }
}

void run_lcm(const std::string& which, const std::vector<std::int64_t>& r, const Options& opt) {
  std::int64_t volume = 1;
  for (auto v : r) {
    if (v < 1) throw std::invalid_argument("lcm-count: entries must be >= 1");
    volume = volume > kGridCap ? volume : volume * v;
  }
  check_cap(volume, kGridCap, "grid volume prod r_i", opt);
  const auto value = which == "g" ? hcd::g_count(r) : hcd::h_count(r);
  if (opt.format == "csv") {
    std::cout << hcd::to_decimal(value) << '\n';
    return;
  }
  emit_record("lcm-count " + which, {{"r", r}}, hcd::to_decimal(value), "recursion");
}

int run_verify(const std::string& suite, const Options& opt) {
  bool all_passed = true;
  if (opt.format == "csv") std::cout << "criterion,name,status,seconds\n";
  for (int id : hcd::verify::suite_members(suite)) {
    const auto r = hcd::verify::run_criterion(id, opt.threads);
    all_passed = all_passed && r.passed;
    if (opt.format == "csv") {
      std::cout << r.id << ',' << r.name << ',' << (r.passed ? "pass" : "fail") << ','
                << shortest(r.seconds) << '\n';
    } else {
      emit_record("verify", {{"suite", suite}, {"criterion", r.id}},
                  {{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}}, "enumeration");
    }
    std::cout.flush();
  }
  return all_passed ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hypercube decompositions, covering systems and their counts"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_option("--threads", opt.threads, "Worker threads for enumeration (1 = reference path)")
      ->check(CLI::Range(1u, 256u))
      ->capture_default_str();
  app.add_flag("--force", opt.force, "Lift the resource caps");

  int d = 1;
  std::string range;
  std::size_t max_n = 10;
  std::string which;
  std::string path;
  std::vector<long long> r_ll;
  std::vector<std::int64_t> r;
  double tol = 1e-12;
  std::string suite = "all";

  auto* mu = app.add_subcommand("mu", "Generalized Moebius values mu_d(n)");
  mu->add_option("--d", d)->required();
  mu->add_option("--n", range, "Range A..B")->required();

  auto* seq = app.add_subcommand("seq", "Series coefficients: sd (decompositions), ad, td (trees)");
  seq->add_option("kind", which)->required()->check(CLI::IsMember({"sd", "ad", "td"}));
  seq->add_option("--d", d)->required();
  seq->add_option("--max-n", max_n)->required();

  auto* refined = app.add_subcommand("refined", "Counts of decompositions with gcd exactly r");
  refined->add_option("--d", d)->required();
  refined->add_option("--r", r_ll, "R1,..,RD")->required()->delimiter(',');
  refined->add_option("--max-n", max_n)->required();

  auto* en = app.add_subcommand("enum", "Exhaustive enumeration");
  std::string emit_path;
  en->add_option("kind", which)->required()->check(CLI::IsMember({"decomp", "necs", "trees"}));
  en->add_option("--d", d)->capture_default_str();
  std::size_t n = 1;
  en->add_option("--n", n)->required();
  en->add_option("--emit", emit_path, "Write every object as a JSON line to this file");

  auto* phi = app.add_subcommand("phi", "Map a 1-d decomposition to its covering system");
  phi->add_option("--in", path)->required()->check(CLI::ExistingFile);

  auto* psi = app.add_subcommand("psi", "Map a labelled plane tree to a decomposition");
  psi->add_option("--in", path)->required()->check(CLI::ExistingFile);

  auto* growth = app.add_subcommand("growth", "Saddle point and growth constant K_d");
  growth->add_option("--d", range, "Range D1..D2")->required();
  growth->add_option("--tol", tol)->capture_default_str();

  auto* lcm = app.add_subcommand("lcm-count", "g (refining a grid) or h (exact lcm) counts");
  lcm->add_option("kind", which)->required()->check(CLI::IsMember({"g", "h"}));
  lcm->add_option("--r", r, "R1 .. RD")->required()->delimiter(',');

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", suite)
      ->check(CLI::IsMember({"tables", "oracles", "bijection", "asymptotics", "all"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*mu) run_mu(d, range, opt);
    if (*seq) run_seq(which, d, max_n, opt);
    if (*refined) run_refined(d, r_ll, max_n, opt);
    if (*en) run_enum(which, d, n, emit_path, opt);
    if (*phi) run_phi(path, opt);
    if (*psi) run_psi(path, opt);
    if (*growth) run_growth(range, tol, opt);
    if (*lcm) run_lcm(which, r, opt);
    if (*verify) return run_verify(suite, opt);
  } catch (const ResourceCap& e) {
    std::cerr << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
