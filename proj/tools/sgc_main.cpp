// Command-line front end. Subcommands wrap the library operations
// one-to-one; every JSON result echoes the effective configuration so
// saved outputs are reproducible. Exit codes: 0 ok, 1 parse/validity
// error, 2 a verdict stayed indeterminate under the current caps.
#include <chrono>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "sgc/catalog.hpp"
#include "sgc/classify.hpp"
#include "sgc/extend.hpp"
#include "sgc/fracture.hpp"
#include "sgc/group.hpp"
#include "sgc/reps.hpp"
#include "sgc/sggi.hpp"

namespace {

using nlohmann::json;
using namespace sgc;

struct Config {
  std::uint64_t cap = 1000000;
  unsigned max_degree = 9;
  unsigned workers = 1;
  bool json_out = false;

  IntersectConfig intersect() const {
    IntersectConfig c;
    c.enumeration_cap = cap;
    return c;
  }
  json echo() const {
    json j;
    j["intersection_cap"] = cap;
    j["max_degree"] = max_degree;
    j["workers"] = workers;
    j["output"] = "json";
    return j;
  }
};

std::string timestamp_utc() {
  std::time_t now = std::chrono::system_clock::to_time_t(
      std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void emit_json(json j, const Config& cfg) {
  j["config"] = cfg.echo();
  j["timestamp"] = timestamp_utc();
  std::cout << j.dump(2) << "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Inputs are either "catalog:<id>" or a file in one of the two text
// formats; a line starting with "edge" marks the graph DSL.
Sggi load_input(const std::string& spec) {
  if (spec.rfind("catalog:", 0) == 0)
    return sggi_of(instantiate(spec.substr(8)).graph);
  std::string text = read_file(spec);
  std::istringstream ss(text);
  std::string line;
  bool dsl = false;
  while (std::getline(ss, line)) {
    auto pos = line.find_first_not_of(" \t");
    if (pos != std::string::npos && line.compare(pos, 4, "edge") == 0) {
      dsl = true;
      break;
    }
  }
  if (dsl) {
    PermRepGraph g = parse_dsl(text);
    validate_graph(g);
    return sggi_of(g);
  }
  return parse_sggi_text(text);
}

json edges_json(const std::vector<Edge>& edges) {
  json a = json::array();
  for (const Edge& e : edges) a.push_back({e.u + 1, e.v + 1, e.label});
  return a;
}

std::string edges_str(const std::vector<Edge>& edges) {
  std::string s;
  for (const Edge& e : edges) {
    if (!s.empty()) s += " ";
    s += std::to_string(e.u + 1) + "-" + std::to_string(e.v + 1) + ":" +
         std::to_string(e.label);
  }
  return s;
}

std::string index_set_str(const std::vector<unsigned>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i)
    s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

std::string schlafli_str(const std::vector<unsigned>& type) {
  std::string s = "(";
  for (std::size_t i = 0; i < type.size(); ++i)
    s += (i ? "," : "") + std::to_string(type[i]);
  return s + ")";
}

const char* tri_name(Tri t) {
  switch (t) {
    case Tri::True: return "true";
    case Tri::False: return "false";
    default: return "indeterminate";
  }
}

int cmd_verify(const std::string& input, const Config& cfg) {
  Sggi s = load_input(input);
  PermGroup g = group_of(s);
  GroupIdentity id = identify(g);
  std::vector<unsigned> type;
  if (s.rank() >= 2) type = schlafli(s);
  CVerdict verdict = is_string_cgroup(s, cfg.intersect());
  std::vector<SplitReport> splits = find_splits(s);
  auto frac = fracture_graph(s);
  auto frac2 = two_fracture_graph(s);

  if (cfg.json_out) {
    json j;
    j["input"] = input;
    j["degree"] = s.degree;
    j["rank"] = s.rank();
    j["valid"] = true;
    j["schlafli"] = type;
    j["group"] = {{"str", id.str()},
                  {"order", u128_str(id.order)},
                  {"transitive", id.transitive},
                  {"primitive", id.primitive}};
    j["string_c"] = tri_name(verdict.value);
    if (verdict.witness) {
      j["witness"] = {{"J", verdict.witness->J},
                      {"K", verdict.witness->K},
                      {"expected", u128_str(verdict.witness->expected_order)},
                      {"actual", u128_str(verdict.witness->actual_order)}};
    }
    json sp = json::array();
    for (const SplitReport& r : splits) sp.push_back(json::parse(split_json(r)));
    j["splits"] = std::move(sp);
    j["fracture"] = json{{"exists", frac.has_value()}};
    if (frac) j["fracture"]["edges"] = edges_json(frac->edges);
    j["two_fracture"] = json{{"exists", frac2.has_value()}};
    if (frac2) j["two_fracture"]["edges"] = edges_json(*frac2);
    emit_json(std::move(j), cfg);
  } else {
    std::cout << "input: " << input << "\n";
    std::cout << "degree " << s.degree << ", rank " << s.rank()
              << ", valid sggi\n";
    if (!type.empty()) std::cout << "schlafli type: " << schlafli_str(type) << "\n";
    std::cout << "group: " << id.str() << ", order " << u128_str(id.order)
              << (id.transitive ? ", transitive" : ", intransitive")
              << (id.transitive ? (id.primitive ? ", primitive" : ", imprimitive")
                                : "")
              << "\n";
    std::cout << "string C-group: " << tri_name(verdict.value) << "\n";
    if (verdict.witness) {
      const CWitness& w = *verdict.witness;
      std::cout << "  witness orders |G_J meet G_K| = "
                << u128_str(w.actual_order) << " vs |G_{J meet K}| = "
                << u128_str(w.expected_order) << " for J=" << index_set_str(w.J)
                << " K=" << index_set_str(w.K) << "\n";
    }
    if (splits.empty()) {
      std::cout << "splits: none\n";
    } else {
      std::cout << "splits:\n";
      for (const SplitReport& r : splits)
        std::cout << "  label " << r.label << " at {" << r.a + 1 << ","
                  << r.b + 1 << "}: " << (r.perfect ? "perfect" : "not perfect")
                  << ", J_A=" << index_set_str(r.J_A)
                  << " J_B=" << index_set_str(r.J_B) << "\n";
    }
    std::cout << "fracture graph: "
              << (frac ? edges_str(frac->edges) : std::string("none")) << "\n";
    std::cout << "2-fracture graph: "
              << (frac2 ? edges_str(*frac2) : std::string("none")) << "\n";
  }
  return verdict.value == Tri::Indeterminate ? 2 : 0;
}

json representative_json(const Sggi& s) {
  json gens = json::array();
  for (const Perm& p : s.gens) gens.push_back(p.str());
  json j;
  j["generators"] = std::move(gens);
  j["schlafli"] = s.rank() >= 2 ? json(schlafli(s)) : json::array();
  j["graph_dsl"] = print_dsl(graph_of(s));
  return j;
}

json classification_json(const ClassificationResult& res) {
  json reps = json::array();
  for (const Sggi& s : res.representatives) reps.push_back(representative_json(s));
  json stats;
  stats["nodes"] = res.stats.nodes;
  stats["leaves"] = res.stats.leaves;
  stats["accepted_raw"] = res.stats.accepted_raw;
  stats["indeterminate_leaves"] = res.stats.indeterminate_leaves;
  stats["conj_duplicates"] = res.stats.conj_duplicates;
  stats["dual_duplicates"] = res.stats.dual_duplicates;
  stats["outer_duplicates"] = res.stats.outer_duplicates;
  stats["prunes"] = res.stats.prunes;
  json j;
  j["degree"] = res.degree;
  j["rank"] = res.rank;
  j["count"] = res.count();
  j["count_inner"] = res.count_inner;
  j["complete"] = res.complete;
  j["representatives"] = std::move(reps);
  j["stats"] = std::move(stats);
  return j;
}

int cmd_classify(unsigned n, unsigned r, bool seed_check, const Config& cfg) {
  EnumerateOptions opts;
  opts.workers = cfg.workers;
  opts.max_degree = cfg.max_degree;
  opts.intersect = cfg.intersect();
  std::cerr << "classify: degree " << n << " rank " << r << ", workers "
            << opts.workers << "\n";
  auto t0 = std::chrono::steady_clock::now();
  ClassificationResult res = enumerate_sggi(n, r, opts);
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
  std::cerr << "classify: " << res.count() << " classes, "
            << res.stats.nodes << " nodes, " << ms << " ms\n";
  json j = classification_json(res);
  if (seed_check) {
    EnumerateOptions solo = opts;
    solo.workers = 1;
    std::cerr << "seed-check: rerunning single-worker\n";
    ClassificationResult again = enumerate_sggi(n, r, solo);
    json a = classification_json(res), b = classification_json(again);
    a.erase("stats");
    b.erase("stats");
    if (a != b) {
      std::cerr << "seed-check: MISMATCH between " << opts.workers
                << "-worker and single-worker runs\n";
      return 1;
    }
    std::cerr << "seed-check: ok\n";
    j["seed_check"] = "ok";
  }
  emit_json(std::move(j), cfg);
  return res.stats.indeterminate_leaves > 0 ? 2 : 0;
}

int cmd_sigma(unsigned n, unsigned kappa, const Config& cfg) {
  EnumerateOptions opts;
  opts.workers = cfg.workers;
  opts.max_degree = cfg.max_degree;
  opts.intersect = cfg.intersect();
  std::size_t count = sigma(n, kappa, opts);
  if (cfg.json_out) {
    json j;
    j["n"] = n;
    j["kappa"] = kappa;
    j["rank"] = n - kappa;
    j["sigma"] = count;
    emit_json(std::move(j), cfg);
  } else {
    std::cout << count << "\n";
  }
  return 0;
}

// Parses disjoint cycles on whatever degree the text and base tuple need.
Perm parse_tau(const std::string& text, unsigned base_degree) {
  unsigned max_point = base_degree;
  unsigned cur = 0;
  bool in_num = false;
  for (char c : text) {
    if (c >= '0' && c <= '9') {
      cur = cur * 10 + static_cast<unsigned>(c - '0');
      in_num = true;
    } else {
      if (in_num && cur > max_point) max_point = cur;
      cur = 0;
      in_num = false;
    }
  }
  if (in_num && cur > max_point) max_point = cur;
  return Perm::parse(text, max_point);
}

int cmd_extend(const std::string& input, std::optional<unsigned> split_label,
               std::optional<unsigned> sesqui_k, const std::string& tau_text,
               bool dualize, const Config& cfg) {
  Sggi s = load_input(input);
  Sggi out;
  json meta;
  if (split_label) {
    RdGuard guard = rd_guard(s, *split_label);
    RdExtension ext = rd_extend(s, *split_label);
    out = ext.result;
    meta["operation"] = "split";
    meta["label"] = *split_label;
    meta["new_point"] = ext.new_point + 1;
    meta["guard"] = guard == RdGuard::GuaranteedStringC ? "guaranteed"
                                                        : "no guarantee";
    std::cerr << "extend: split " << *split_label << ", new point "
              << ext.new_point + 1 << ", guard: " << meta["guard"].get<std::string>()
              << "\n";
  } else if (sesqui_k) {
    Perm tau = parse_tau(tau_text, s.degree);
    SesquiResult ext = sesqui_extend(s, *sesqui_k, tau);
    out = ext.extended;
    meta["operation"] = "sesqui";
    meta["k"] = *sesqui_k;
    meta["tau"] = ext.tau.str();
    meta["kind"] = ext.kind == SesquiKind::Proper ? "proper" : "improper";
    std::cerr << "extend: sesqui at " << *sesqui_k << ", "
              << meta["kind"].get<std::string>() << "\n";
  } else {
    out = dual(s);
    meta["operation"] = "dual";
  }
  if (cfg.json_out) {
    json j = std::move(meta);
    j["input"] = input;
    j["degree"] = out.degree;
    j["rank"] = out.rank();
    j["result_sggi"] = print_sggi_text(out);
    j["result_dsl"] = print_dsl(graph_of(out));
    emit_json(std::move(j), cfg);
  } else {
    std::cout << print_sggi_text(out);
  }
  return 0;
}

int cmd_export_dot(const std::string& input) {
  if (input.rfind("catalog:", 0) == 0) {
    std::cout << export_dot(instantiate(input.substr(8)).graph);
    return 0;
  }
  std::cout << export_dot(graph_of(load_input(input)));
  return 0;
}

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Indeterminate: return "indeterminate";
    default: return "info";
  }
}

int cmd_catalog_verify(const std::string& pattern, const Config& cfg) {
  std::vector<CatalogEntry> entries = catalog_match(pattern);
  if (entries.empty()) throw Error("no catalog entry matches " + pattern);
  unsigned failed = 0, indet = 0;
  json jentries = json::array();
  for (const CatalogEntry& e : entries) {
    CatalogReport rep = verify_entry(e, cfg.intersect());
    if (!rep.pass) ++failed;
    if (rep.indeterminate) ++indet;
    if (cfg.json_out) {
      json checks = json::array();
      for (const ClaimCheck& c : rep.checks)
        checks.push_back({{"what", c.what},
                          {"status", status_name(c.status)},
                          {"detail", c.detail}});
      jentries.push_back({{"id", rep.id},
                          {"pass", rep.pass},
                          {"indeterminate", rep.indeterminate},
                          {"checks", std::move(checks)}});
    } else {
      std::cout << rep.id << ": "
                << (rep.pass ? (rep.indeterminate ? "INDETERMINATE" : "pass")
                             : "FAIL")
                << "\n";
      for (const ClaimCheck& c : rep.checks) {
        bool noisy = c.status == CheckStatus::Fail ||
                     c.status == CheckStatus::Indeterminate;
        if (noisy || c.status == CheckStatus::Info)
          std::cout << "  [" << status_name(c.status) << "] " << c.what
                    << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
      }
    }
  }
  if (cfg.json_out) {
    json j;
    j["pattern"] = pattern;
    j["entries"] = std::move(jentries);
    j["summary"] = {{"total", entries.size()},
                    {"failed", failed},
                    {"indeterminate", indet}};
    emit_json(std::move(j), cfg);
  } else {
    std::cout << entries.size() << " entries, " << failed << " failed, "
              << indet << " indeterminate\n";
  }
  if (failed) return 1;
  return indet ? 2 : 0;
}

int cmd_catalog_dump(const std::string& dir) {
  std::filesystem::create_directories(dir);
  for (const CatalogEntry& e : instantiate_all()) {
    std::string path = dir + "/" + catalog_file_stem(e.id) + ".graph";
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << catalog_file_content(e);
  }
  std::ofstream out(dir + "/manifest.json", std::ios::binary);
  if (!out) throw Error("cannot write " + dir + "/manifest.json");
  out << catalog_manifest_json();
  std::cerr << "catalog-dump: " << instantiate_all().size() << " entries -> "
            << dir << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"string C-group construction, verification and classification"};
  app.require_subcommand(1);

  Config cfg;
  app.add_option("--cap", cfg.cap, "element cap for intersection checks")
      ->envname("SGC_CAP");
  app.add_option("--max-degree", cfg.max_degree, "largest admissible degree")
      ->envname("SGC_MAX_DEGREE");
  app.add_option("--workers", cfg.workers, "worker threads for classify")
      ->envname("SGC_WORKERS");
  app.add_flag("--json", cfg.json_out, "JSON output")->envname("SGC_JSON");

  std::string input, pattern = "*", tau_text, dump_dir;
  unsigned n = 0, r = 0, kappa = 0;
  bool seed_check = false, dualize = false;
  std::optional<unsigned> split_label, sesqui_k;

  CLI::App* verify = app.add_subcommand("verify", "report on one sggi");
  verify->fallthrough();
  verify->add_option("input", input, "file or catalog:<id>")->required();

  CLI::App* classify = app.add_subcommand("classify", "enumerate classes");
  classify->fallthrough();
  classify->add_option("degree", n)->required();
  classify->add_option("rank", r)->required();
  classify->add_flag("--seed-check", seed_check, "diff against a single-worker rerun")
      ->envname("SGC_SEED_CHECK");

  CLI::App* sig = app.add_subcommand("sigma", "class count at a corank");
  sig->fallthrough();
  sig->add_option("degree", n)->required();
  sig->add_option("kappa", kappa)->required();

  CLI::App* extend = app.add_subcommand("extend", "derive a new sggi");
  extend->fallthrough();
  extend->add_option("input", input, "file or catalog:<id>")->required();
  auto* opt_split = extend->add_option("--split", split_label,
                                       "rank-and-degree extension at a label");
  auto* opt_sesqui = extend->add_option("--sesqui", sesqui_k,
                                        "multiply generator k by --tau");
  auto* opt_tau = extend->add_option("--tau", tau_text, "outside involution");
  auto* opt_dual = extend->add_flag("--dual", dualize, "reverse the tuple");
  opt_split->excludes(opt_sesqui)->excludes(opt_dual);
  opt_sesqui->excludes(opt_dual)->needs(opt_tau);

  CLI::App* dot = app.add_subcommand("export-dot", "print the graph as DOT");
  dot->fallthrough();
  dot->add_option("input", input, "file or catalog:<id>")->required();

  CLI::App* catver = app.add_subcommand("catalog-verify",
                                        "recheck catalog claims");
  catver->fallthrough();
  catver->add_option("pattern", pattern, "id glob, default *");

  CLI::App* catdump = app.add_subcommand("catalog-dump",
                                         "write DSL files and manifest");
  catdump->fallthrough();
  catdump->add_option("dir", dump_dir)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(verify)) return cmd_verify(input, cfg);
    if (app.got_subcommand(classify)) return cmd_classify(n, r, seed_check, cfg);
    if (app.got_subcommand(sig)) return cmd_sigma(n, kappa, cfg);
    if (app.got_subcommand(extend)) {
      if (!split_label && !sesqui_k && !dualize)
        throw Error("extend needs one of --split, --sesqui, --dual");
      return cmd_extend(input, split_label, sesqui_k, tau_text, dualize, cfg);
    }
    if (app.got_subcommand(dot)) return cmd_export_dot(input);
    if (app.got_subcommand(catver)) return cmd_catalog_verify(pattern, cfg);
    if (app.got_subcommand(catdump)) return cmd_catalog_dump(dump_dir);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
  return 0;
}
