#include "steinberg/cli.hpp"

#include <array>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "steinberg/certificate_io.hpp"
#include "steinberg/engine.hpp"
#include "steinberg/errors.hpp"
#include "steinberg/quasifinite.hpp"

namespace steinberg::cli {

namespace {

using json = nlohmann::ordered_json;

struct RunConfig {
  std::string command;
  std::vector<std::uint32_t> n;
  std::vector<std::string> q;
  std::vector<std::uint32_t> a;
  std::vector<std::uint64_t> ell;
  std::uint32_t amax = 64;
  std::uint64_t seed = 0;
  bool all_vectors = false;
  std::optional<std::size_t> random;
  std::optional<std::size_t> sample;
  std::string format = "json";
  std::string out;
  std::string cert_dir;
  std::string cert;
  bool timing = false;
};

struct Outcome {
  json cases = json::array();
  std::vector<json> table;  // flat rows for csv/human output
  bool pass = true;
};

// Field, group, module and engine for one (q, n, ell); the tower is shared by q.
class Workspace {
 public:
  const FieldTower& tower(std::uint32_t p, std::uint32_t d) {
    auto& slot = towers_[{p, d}];
    if (!slot) slot = std::make_unique<FieldTower>(p, d);
    return *slot;
  }
  const SLGroup& group(std::uint32_t p, std::uint32_t d, std::uint32_t n) {
    auto& slot = groups_[{p, d, n}];
    if (!slot) slot = std::make_unique<SLGroup>(tower(p, d), n);
    return *slot;
  }
  const InducedModule& module(std::uint32_t p, std::uint32_t d, std::uint32_t n, std::uint64_t ell) {
    auto& slot = modules_[{p, d, n, static_cast<std::uint32_t>(ell)}];
    if (!slot) slot = std::make_unique<InducedModule>(group(p, d, n), CoeffField(static_cast<std::uint32_t>(ell)));
    return *slot;
  }
  const SteinbergEngine& engine(std::uint32_t p, std::uint32_t d, std::uint32_t n, std::uint64_t ell) {
    auto& slot = engines_[{p, d, n, static_cast<std::uint32_t>(ell)}];
    if (!slot) slot = std::make_unique<SteinbergEngine>(module(p, d, n, ell));
    return *slot;
  }

  json fields() const {
    json out = json::array();
    for (const auto& [key, t] : towers_) {
      json levels = json::object();
      for (auto level : t->built_levels()) levels[std::to_string(level)] = t->polynomial_string(level);
      out.push_back({{"q", std::to_string(key.first) + "^" + std::to_string(key.second)}, {"polynomials", levels}});
    }
    return out;
  }

 private:
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::unique_ptr<FieldTower>> towers_;
  std::map<std::array<std::uint32_t, 3>, std::unique_ptr<SLGroup>> groups_;
  std::map<std::array<std::uint32_t, 4>, std::unique_ptr<InducedModule>> modules_;
  std::map<std::array<std::uint32_t, 4>, std::unique_ptr<SteinbergEngine>> engines_;
};

std::string q_name(std::uint32_t p, std::uint32_t d) { return std::to_string(p) + "^" + std::to_string(d); }

std::vector<std::pair<std::uint32_t, std::uint32_t>> parsed_qs(const RunConfig& cfg) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  for (const auto& text : cfg.q) out.push_back(parse_prime_power(text));
  return out;
}

void validate(const RunConfig& cfg, bool needs_ell, bool ell_vs_p, std::uint32_t n_max = 6) {
  if (cfg.n.empty()) throw ValidationError("--n is required");
  if (cfg.q.empty()) throw ValidationError("--q is required");
  for (auto n : cfg.n)
    if (n < 2 || n > n_max) throw ValidationError("--n must lie in [2, " + std::to_string(n_max) + "]");
  for (auto a : cfg.a)
    if (a < 1) throw ValidationError("--a must be positive");
  if (needs_ell && cfg.ell.empty()) throw ValidationError("--ell is required");
  for (auto ell : cfg.ell)
    if (!is_prime(ell) || ell > 0x7fffffffu) throw ValidationError("--ell must be a prime below 2^31");
  const auto qs = parsed_qs(cfg);
  if (ell_vs_p)
    for (auto ell : cfg.ell)
      for (const auto& [p, d] : qs)
        if (ell == p)
          throw CharacteristicClash("ell = " + std::to_string(ell) + " is the characteristic of F_" + q_name(p, d));
}

std::vector<std::uint32_t> levels(const RunConfig& cfg) {
  return cfg.a.empty() ? std::vector<std::uint32_t>{1} : cfg.a;
}

json coords_json(const InducedModule& M, const StVector& v) { return M.serialize(v); }

// ---------------------------------------------------------------------------

Outcome cmd_verify_bruhat(const RunConfig& cfg, Workspace& ws) {
  validate(cfg, false, false);
  Outcome out;
  for (const auto& [p, d] : parsed_qs(cfg))
    for (auto n : cfg.n)
      for (auto a : levels(cfg)) {
        const FieldTower& T = ws.tower(p, d);
        const SLGroup& G = ws.group(p, d, n);
        const InducedModule M(G, CoeffField(p == 2 ? 3 : 2));
        const double order = G.group_order(a);
        const bool exhaustive = order <= 1e5;
        if (!exhaustive && !cfg.sample)
          throw ValidationError("|SL_" + std::to_string(n) + "(F_" + q_name(p, d) + "^" + std::to_string(a) +
                                ")| exceeds 10^5; pass --sample N");

        std::vector<GroupElement> elems;
        if (exhaustive) {
          elems = G.enumerate_group(a);
        } else {
          std::mt19937_64 rng(cfg.seed);
          const std::uint64_t Q = T.size(a);
          while (elems.size() < *cfg.sample) {
            std::vector<FieldElement> e(n * n);
            for (auto& x : e) x = {a, static_cast<std::uint32_t>(rng() % Q)};
            std::vector<std::uint32_t> raw;
            for (const auto& x : e) raw.push_back(x.value);
            const FieldElement det = G.det(G.make(a, raw));
            if (det.is_zero()) continue;
            for (std::uint32_t j = 0; j < n; ++j) e[j] = T.div(e[j], det);
            elems.push_back(G.from_entries(e));
          }
        }

        std::size_t roundtrip = 0, shape = 0, labels_ok = 0;
        std::set<CosetLabel> labels;
        for (const auto& g : elems) {
          const auto dec = G.bruhat_decompose(g);
          if (G.recompose(dec) == g) ++roundtrip;
          if (G.is_upper_unipotent(dec.left) && G.is_diagonal(dec.torus) && G.is_upper_unipotent(dec.right)) ++shape;
          const CosetLabel label = M.coset_label(g);
          if (M.coset_label(M.representative(label)) == label) ++labels_ok;
          labels.insert(label);
        }
        std::uint64_t expected_cosets = 0;
        for (const auto& w : G.weyl_group()) {
          std::uint64_t term = 1;
          for (std::size_t t = 0; t < w.length(); ++t) term *= T.size(a);
          expected_cosets += term;
        }
        const bool ok = roundtrip == elems.size() && shape == elems.size() && labels_ok == elems.size() &&
                        (!exhaustive || labels.size() == expected_cosets);
        json c = {{"n", n},
                  {"q", q_name(p, d)},
                  {"a", a},
                  {"mode", exhaustive ? "exhaustive" : "sampled"},
                  {"elements", elems.size()},
                  {"roundtrip_ok", roundtrip},
                  {"factor_shapes_ok", shape},
                  {"labels_ok", labels_ok},
                  {"distinct_cosets", labels.size()},
                  {"expected_cosets", expected_cosets},
                  {"pass", ok}};
        out.pass = out.pass && ok;
        out.table.push_back(c);
        out.cases.push_back(std::move(c));
      }
  return out;
}

Outcome cmd_verify_coeff_sums(const RunConfig& cfg, Workspace& ws) {
  validate(cfg, true, true);
  Outcome out;
  for (const auto& [p, d] : parsed_qs(cfg))
    for (auto n : cfg.n)
      for (auto a : levels(cfg))
        for (auto ell : cfg.ell) {
          const SteinbergEngine& E = ws.engine(p, d, n, ell);
          const auto rep = E.check_coefficient_sums(a);
          json c = {{"n", n}, {"q", q_name(p, d)}, {"a", a}, {"ell", ell}, {"cases", rep.cases.size()},
                    {"passed", rep.passed}, {"pass", rep.pass}};
          if (rep.counterexample) c["counterexample"] = E.module().format_coords(*rep.counterexample);
          out.pass = out.pass && rep.pass;
          out.table.push_back(c);
          out.cases.push_back(std::move(c));
        }
  return out;
}

Outcome cmd_verify_certificate(const RunConfig& cfg, Workspace& ws) {
  if (cfg.cert.empty()) throw ValidationError("--cert is required");
  std::ifstream in(cfg.cert);
  if (!in) throw ValidationError("cannot open certificate '" + cfg.cert + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();

  // The header fixes the field; parse it with a throwaway read of the q line.
  std::uint32_t p = 0, d = 0;
  {
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line))
      if (line.rfind("q ", 0) == 0) {
        std::tie(p, d) = parse_prime_power(line.substr(2));
        break;
      }
    if (p == 0) throw ValidationError("certificate has no q line");
  }
  const Certificate cert = read_certificate(text, ws.tower(p, d));
  if (!is_prime(cert.ell)) throw ValidationError("certificate ell is not prime");
  if (cert.ell == p) throw CharacteristicClash("certificate ell equals the characteristic of F_q");
  const SteinbergEngine& E = ws.engine(p, d, cert.n, cert.ell);
  const bool ok = E.verify_certificate(cert, cert.input);
  json c = {{"certificate", cfg.cert}, {"n", cert.n},       {"q", q_name(p, d)},
            {"ell", cert.ell},         {"steps", cert.steps.size()}, {"claimed", cert.claimed_scalar},
            {"verified", ok},          {"pass", ok}};
  Outcome out;
  out.pass = ok;
  out.table.push_back(c);
  out.cases.push_back(std::move(c));
  return out;
}

Outcome cmd_reach_eta(const RunConfig& cfg, Workspace& ws) {
  validate(cfg, true, true);
  if (cfg.all_vectors && cfg.random) throw ValidationError("--all-vectors and --random are exclusive");
  Outcome out;
  if (!cfg.cert_dir.empty()) std::filesystem::create_directories(cfg.cert_dir);
  for (const auto& [p, d] : parsed_qs(cfg))
    for (auto n : cfg.n)
      for (auto a : levels(cfg))
        for (auto ell : cfg.ell) {
          const SteinbergEngine& E = ws.engine(p, d, n, ell);
          const InducedModule& M = E.module();
          std::vector<StVector> inputs;
          if (cfg.all_vectors) {
            inputs = E.all_nonzero_vectors(a);
          } else {
            std::mt19937_64 rng(cfg.seed);
            for (std::size_t t = 0; t < cfg.random.value_or(20); ++t) inputs.push_back(E.random_vector(a, rng));
          }
          const std::uint32_t r = E.group().roots().r;
          const std::uint64_t bound = std::uint64_t{a} << r;
          for (std::size_t t = 0; t < inputs.size(); ++t) {
            const Certificate cert = E.reach_eta(inputs[t]);
            const bool ok = E.verify_certificate(cert, inputs[t]);
            const bool within = cert.max_level <= bound;
            std::size_t terms = 0;
            for (const auto& s : cert.steps) terms += s.terms.size();
            json c = {{"n", n},
                      {"q", q_name(p, d)},
                      {"a", a},
                      {"ell", ell},
                      {"index", t},
                      {"vector", coords_json(M, inputs[t])},
                      {"claimed", cert.claimed_scalar},
                      {"steps", cert.steps.size()},
                      {"terms", terms},
                      {"max_level", cert.max_level},
                      {"max_entry_level", cert.max_entry_level},
                      {"level_bound", bound},
                      {"verified", ok},
                      {"pass", ok && within}};
            if (!cfg.cert_dir.empty()) {
              const std::string name = "cert_n" + std::to_string(n) + "_q" + std::to_string(p) + "^" +
                                       std::to_string(d) + "_a" + std::to_string(a) + "_ell" + std::to_string(ell) +
                                       "_" + std::to_string(t) + ".txt";
              const auto path = (std::filesystem::path(cfg.cert_dir) / name).string();
              std::ofstream(path, std::ios::binary) << write_certificate(cert, M.tower());
              c["certificate"] = path;
            }
            out.pass = out.pass && ok && within;
            out.table.push_back(c);
            out.cases.push_back(std::move(c));
          }
        }
  return out;
}

Outcome cmd_steinberg_report(const RunConfig& cfg, Workspace& ws) {
  validate(cfg, true, true);
  Outcome out;
  for (const auto& [p, d] : parsed_qs(cfg))
    for (auto n : cfg.n)
      for (auto a : levels(cfg))
        for (auto ell : cfg.ell) {
          const SteinbergEngine& E = ws.engine(p, d, n, ell);
          const auto rep = E.finite_steinberg_report(a, cfg.seed);
          // Probable verdicts never fail the command; only the exact counts do.
          const bool ok = rep.basis_rank == rep.dim && rep.eta_spin_dim == rep.dim;
          json dims = json::array();
          for (auto x : rep.proper_dims) dims.push_back(x);
          json c = {{"n", n},
                    {"q", q_name(p, d)},
                    {"a", a},
                    {"ell", ell},
                    {"dim", rep.dim},
                    {"basis_rank", rep.basis_rank},
                    {"cosets", rep.cosets},
                    {"eta_spin_dim", rep.eta_spin_dim},
                    {"mode", rep.certified ? "certified" : "probable"},
                    {"verdict", rep.verdict()},
                    {"proper_dims", dims},
                    {"vectors_covered", rep.vectors_covered},
                    {"spins", rep.spins},
                    {"pass", ok}};
          if (rep.witness) {
            c["witness"] = E.module().serialize(*rep.witness);
            c["witness_dim"] = rep.witness_dim;
          }
          out.pass = out.pass && ok;
          out.table.push_back(c);
          out.cases.push_back(std::move(c));
        }
  return out;
}

Outcome cmd_scan_quasifinite(const RunConfig& cfg, Workspace&) {
  validate(cfg, true, false, 1000);
  Outcome out;
  for (const auto& [p, d] : parsed_qs(cfg))
    for (auto n : cfg.n)
      for (auto ell : cfg.ell) {
        if (ell == p)
          throw CharacteristicClash("ell = " + std::to_string(ell) + " divides q = " + q_name(p, d));
        BigInt q = 1;
        for (std::uint32_t t = 0; t < d; ++t) q *= p;
        const auto scan = divides_for_all_a(ell, n, q, cfg.amax);
        json c = {{"n", n},
                  {"q", q.str()},
                  {"ell", ell},
                  {"amax", cfg.amax},
                  {"all_divisible", scan.all_divisible},
                  {"order", scan.order},
                  {"period_covered", scan.period_covered}};
        c["first_failure"] = scan.first_failure ? json(*scan.first_failure) : json(nullptr);
        for (const auto& row : scan.rows) {
          json t = {{"n", row.n}, {"q", row.q.str()}, {"ell", row.ell}, {"a", row.a}};
          for (std::size_t m = 0; m < row.residues.size(); ++m) t["A" + std::to_string(m + 2)] = row.residues[m];
          t["product"] = row.product_residue;
          t["divisible"] = row.divisible;
          out.table.push_back(std::move(t));
        }
        out.cases.push_back(std::move(c));
      }
  // A scan reports a fact in either direction; it fails only on bad input.
  return out;
}

Outcome cmd_scan_prime_power(const RunConfig& cfg, Workspace&) {
  if (cfg.n.empty() || cfg.q.empty()) throw ValidationError("--n and --q are required");
  Outcome out;
  for (const auto& [p, d] : parsed_qs(cfg))
    for (auto n : cfg.n) {
      BigInt q = 1;
      for (std::uint32_t t = 0; t < d; ++t) q *= p;
      // In a grid, pairs sharing a prime are outside the hypothesis and skipped.
      if (cfg.n.size() * cfg.q.size() > 1 && n % p == 0) {
        out.cases.push_back({{"n", n}, {"q", q.str()}, {"skipped", "n and q are not coprime"}});
        continue;
      }
      const auto rep = prime_power_check(n, q, cfg.amax);
      json c = {{"n", n}, {"q", q.str()}, {"amax", cfg.amax}, {"prime", rep.prime}, {"pass", rep.pass}};
      c["counterexample"] = rep.counterexample ? json(*rep.counterexample) : json(nullptr);
      for (const auto& row : rep.rows) {
        json t = {{"n", n}, {"q", q.str()}, {"a", row.a}, {"divisible", row.divisible}};
        t["single_factor"] = row.single_factor ? json(*row.single_factor) : json(nullptr);
        t["pigeonhole"] = row.pigeonhole ? json(std::to_string(row.pigeonhole->first) + "," +
                                                std::to_string(row.pigeonhole->second))
                                         : json(nullptr);
        out.table.push_back(std::move(t));
      }
      out.pass = out.pass && rep.pass;
      out.cases.push_back(std::move(c));
    }
  return out;
}

// ---------------------------------------------------------------------------

std::string cell(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  if (v.is_array()) {
    std::string s;
    for (std::size_t t = 0; t < v.size(); ++t) s += (t ? ";" : "") + cell(v[t]);
    return s;
  }
  return v.dump();
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

void write_csv(std::ostream& os, const std::vector<json>& rows) {
  std::vector<std::string> header;
  for (const auto& row : rows)
    for (const auto& [key, _] : row.items())
      if (std::find(header.begin(), header.end(), key) == header.end()) header.push_back(key);
  for (std::size_t t = 0; t < header.size(); ++t) os << (t ? "," : "") << header[t];
  os << "\n";
  for (const auto& row : rows) {
    for (std::size_t t = 0; t < header.size(); ++t)
      os << (t ? "," : "") << (row.contains(header[t]) ? csv_escape(cell(row[header[t]])) : "");
    os << "\n";
  }
}

void write_human(std::ostream& os, const json& report, const std::vector<json>& rows) {
  os << report["command"].get<std::string>() << ": " << (report["pass"].get<bool>() ? "PASS" : "FAIL") << "\n";
  for (const auto& c : report["cases"]) {
    os << " ";
    for (const auto& [key, v] : c.items()) os << " " << key << "=" << cell(v);
    os << "\n";
  }
  if (rows.size() != report["cases"].size()) os << "  (" << rows.size() << " rows; use --format csv)\n";
}

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--format", cfg.format, "json, csv or human")->check(CLI::IsMember({"json", "csv", "human"}));
  sub->add_option("--out", cfg.out, "write the report to this file");
  sub->add_option("--seed", cfg.seed, "64-bit seed");
  sub->add_flag("--timing", cfg.timing, "include wall time in the report");
}

void add_grid(CLI::App* sub, RunConfig& cfg, bool with_a, bool with_ell) {
  sub->add_option("--n", cfg.n, "rank parameter n of SL_n (repeatable)")->take_all();
  sub->add_option("--q", cfg.q, "field size p or p^d (repeatable)")->take_all();
  if (with_a) sub->add_option("--a", cfg.a, "field level a (repeatable, default 1)")->take_all();
  if (with_ell) sub->add_option("--ell", cfg.ell, "coefficient characteristic (repeatable)")->take_all();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Steinberg module computations over finite field towers", "steinberg"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "exhaustive identity checks");
  verify->require_subcommand(1);
  auto* bruhat = verify->add_subcommand("bruhat", "Bruhat decomposition roundtrip");
  add_grid(bruhat, cfg, true, false);
  bruhat->add_option("--sample", cfg.sample, "sample this many elements when the group is large");
  add_common(bruhat, cfg);
  auto* coeff_sums = verify->add_subcommand("coeff-sums", "coefficient sums of n u eta over U_{q^a}");
  add_grid(coeff_sums, cfg, true, true);
  add_common(coeff_sums, cfg);
  auto* certificate = verify->add_subcommand("certificate", "replay a certificate file");
  certificate->add_option("--cert", cfg.cert, "certificate file")->required();
  add_common(certificate, cfg);

  auto* reach = app.add_subcommand("reach-eta", "build and verify certificates carrying v to c eta");
  add_grid(reach, cfg, true, true);
  reach->add_flag("--all-vectors", cfg.all_vectors, "every nonzero vector of St_a");
  reach->add_option("--random", cfg.random, "this many seeded random vectors (default 20)");
  reach->add_option("--cert-dir", cfg.cert_dir, "write certificate files here");
  add_common(reach, cfg);

  auto* report = app.add_subcommand("steinberg-report", "finite-level irreducibility report by spinning");
  add_grid(report, cfg, true, true);
  add_common(report, cfg);

  auto* scan = app.add_subcommand("scan", "q-integer divisibility scans");
  scan->require_subcommand(1);
  auto* quasi = scan->add_subcommand("quasifinite", "ell | A_2 ... A_n for a = 1..amax");
  add_grid(quasi, cfg, false, true);
  quasi->add_option("--amax", cfg.amax, "scan horizon (default 64)");
  add_common(quasi, cfg);
  auto* prime_power = scan->add_subcommand("prime-power", "n | A_2 ... A_n for prime powers n coprime to q");
  add_grid(prime_power, cfg, false, false);
  prime_power->add_option("--amax", cfg.amax, "scan horizon (default 64)");
  add_common(prime_power, cfg);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << "\n";
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidConfig;
  }

  Outcome result;
  Workspace ws;
  const auto start = std::chrono::steady_clock::now();
  try {
    if (bruhat->parsed()) {
      cfg.command = "verify bruhat";
      result = cmd_verify_bruhat(cfg, ws);
    } else if (coeff_sums->parsed()) {
      cfg.command = "verify coeff-sums";
      result = cmd_verify_coeff_sums(cfg, ws);
    } else if (certificate->parsed()) {
      cfg.command = "verify certificate";
      result = cmd_verify_certificate(cfg, ws);
    } else if (reach->parsed()) {
      cfg.command = "reach-eta";
      result = cmd_reach_eta(cfg, ws);
    } else if (report->parsed()) {
      cfg.command = "steinberg-report";
      result = cmd_steinberg_report(cfg, ws);
    } else if (quasi->parsed()) {
      cfg.command = "scan quasifinite";
      result = cmd_scan_quasifinite(cfg, ws);
    } else if (prime_power->parsed()) {
      cfg.command = "scan prime-power";
      result = cmd_scan_prime_power(cfg, ws);
    } else {
      err << "error: missing subcommand\n";
      return kInvalidConfig;
    }
  } catch (const CharacteristicClash& e) {
    err << "error: " << e.what() << "\n";
    return kCharacteristicClash;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidConfig;
  } catch (const LevelError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidConfig;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidConfig;
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  json params = {{"n", cfg.n}, {"q", cfg.q}, {"a", cfg.a}, {"ell", cfg.ell}};
  if (cfg.command.rfind("scan", 0) == 0) params["amax"] = cfg.amax;
  if (cfg.command == "reach-eta") {
    params["all_vectors"] = cfg.all_vectors;
    params["random"] = cfg.all_vectors ? json(nullptr) : json(cfg.random.value_or(20));
  }
  if (cfg.sample) params["sample"] = *cfg.sample;
  if (!cfg.cert.empty()) params["cert"] = cfg.cert;

  json doc;
  doc["command"] = cfg.command;
  doc["tool_version"] = kToolVersion;
  doc["seed"] = cfg.seed;
  doc["parameters"] = params;
  if (cfg.command.rfind("scan", 0) != 0) {
    json words = json::array();
    for (auto n : cfg.n) words.push_back({{"n", n}, {"w0", RootDatum(n).w0_word_string()}});
    doc["w0_words"] = words;
    doc["fields"] = ws.fields();
  }
  doc["cases"] = result.cases;
  if (cfg.command.rfind("scan", 0) == 0) doc["rows"] = result.table;
  doc["pass"] = result.pass;
  if (cfg.timing) doc["wall_time_ms"] = ms;

  std::ostringstream text;
  if (cfg.format == "json") {
    text << doc.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    write_csv(text, result.table);
  } else {
    write_human(text, doc, result.table);
  }
  if (cfg.out.empty()) {
    out << text.str();
  } else {
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) {
      err << "error: cannot write " << cfg.out << "\n";
      return kInvalidConfig;
    }
    f << text.str();
  }
  return result.pass ? kPass : kAssertionFailure;
}

}  // namespace steinberg::cli
