#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "qaff/cartan.hpp"
#include "qaff/cluster.hpp"
#include "qaff/error.hpp"
#include "qaff/krcache.hpp"
#include "qaff/quiver.hpp"
#include "qaff/quivrep.hpp"
#include "qaff/sl2strings.hpp"
#include "qaff/tsystem.hpp"
#include "qaff/verify.hpp"

using namespace qaff;

namespace {

struct RunConfig {
  std::string type;
  int ell = -1;
  std::string anchor;
  std::string preset;
  std::string fundamentals;
  std::string cache;
  std::string format = "text";
};

// Fills type / ell / anchor from --preset where not given explicitly.
void apply_preset(RunConfig& cfg) {
  if (cfg.preset.empty()) return;
  const Preset& p = find_preset(cfg.preset);
  if (cfg.type.empty()) cfg.type = p.type;
  if (cfg.ell < 0) cfg.ell = p.ell;
  if (cfg.anchor.empty()) cfg.anchor = p.anchor.to_string();
}

CartanData need_type(const RunConfig& cfg) {
  if (cfg.type.empty()) throw Error(ErrorCode::InvalidConfig, "a Lie type (or --preset) is required");
  return cartan_from_label(cfg.type);
}

TruncationParams need_truncation(const RunConfig& cfg, const CartanData& cd) {
  if (cfg.ell < 0) throw Error(ErrorCode::InvalidConfig, "ell (or --preset) is required");
  const Vertex anchor = cfg.anchor.empty() ? default_anchor(cd) : parse_vertex(cfg.anchor);
  if (!cd.valid_node(anchor.i)) throw Error(ErrorCode::InvalidConfig, "anchor " + anchor.to_string() + " has no such node");
  return {cfg.ell, anchor};
}

std::optional<FundamentalProvider> load_fundamentals(const RunConfig& cfg, const CartanData& cd) {
  if (!cfg.fundamentals.empty()) return FundamentalProvider::from_file(cd, cfg.fundamentals);
  if (has_builtin_K(cd)) return FundamentalProvider::builtin(cd);
  return std::nullopt;
}

FundamentalProvider need_fundamentals(const RunConfig& cfg, const CartanData& cd) {
  auto fp = load_fundamentals(cfg, cd);
  if (!fp)
    throw Error(ErrorCode::MissingFundamental,
                "no built-in fundamentals for " + cd.label().to_string() + "; pass --fundamentals FILE");
  return *fp;
}

std::string cache_path(const RunConfig& cfg) {
  if (const char* env = std::getenv("QAFF_CACHE"); env && *env) return env;
  return cfg.cache;
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_info(const RunConfig& cfg) {
  const CartanData cd = need_type(cfg);
  const TruncationParams tp = need_truncation(cfg, cd);
  const QuiverGraph q = truncated_quiver(cd, tp);
  if (cfg.format == "json") {
    json j = q.to_json();
    json labels = json::object();
    for (const auto& v : q.vertices) {
      const KRIndex idx = kr_label(cd, v, tp.ell);
      labels[v.to_string()] = json{{"i", idx.i}, {"k", idx.k}, {"r", idx.r}};
    }
    j["labels"] = labels;
    j["type"] = cd.label().to_string();
    j["ell"] = tp.ell;
    j["anchor"] = vertex_to_json(tp.anchor);
    print_json(j);
    return 0;
  }
  std::cout << "type " << cd.label().to_string() << ", ell = " << tp.ell << ", anchor " << tp.anchor.to_string() << "\n";
  std::cout << q.vertices.size() << " vertices, " << q.frozen.size() << " frozen\n";
  // One column per node, rows by decreasing r, as in the figures.
  int top = q.vertices.front().r, bottom = top;
  for (const auto& v : q.vertices) {
    top = std::max(top, v.r);
    bottom = std::min(bottom, v.r);
  }
  for (int r = top; r >= bottom; --r) {
    std::string line;
    bool any = false;
    for (int i = 1; i <= cd.rank(); ++i) {
      std::string cell;
      if (q.has_vertex({i, r})) {
        const KRIndex idx = kr_label(cd, {i, r}, tp.ell);
        cell = Vertex{i, r}.to_string() + (q.is_frozen({i, r}) ? "*" : " ") + " " + idx.to_string();
        any = true;
      }
      cell.resize(30, ' ');
      line += cell;
    }
    if (any) std::cout << line.substr(0, line.find_last_not_of(' ') + 1) << "\n";
  }
  std::cout << "arrows:\n";
  for (const auto& [a, b] : q.arrows) std::cout << "  " << a.to_string() << " -> " << b.to_string() << "\n";
  std::cout << "(* = frozen)\n";
  return 0;
}

int cmd_qchar(const RunConfig& cfg, int i, int k, int r) {
  const CartanData cd = need_type(cfg);
  TSystemSolver solver(cd, need_fundamentals(cfg, cd));
  const std::string path = cache_path(cfg);
  KRTable table;
  if (!path.empty() && std::ifstream(path).good()) {
    table = load_kr_cache(path);
    preload_solver(solver, table);
  }
  const LaurentPoly p = solver.kr_qchar(i, k, r);
  if (!path.empty()) {
    export_solver(solver, table);
    save_kr_cache(path, table);
  }
  if (cfg.format == "json") {
    print_json(json{{"index", json{{"i", i}, {"k", k}, {"r", r}}},
                    {"type", cd.label().to_string()},
                    {"qchar", p.to_json()},
                    {"dimension", dimension(p).str()}});
  } else {
    std::cout << KRIndex{i, k, r}.to_string() << ": " << p.to_string() << "\n";
    std::cout << "dimension " << dimension(p).str() << ", " << p.size() << " monomials\n";
  }
  return 0;
}

int cmd_tsys_verify(const RunConfig& cfg, int kmax, int window) {
  const CartanData cd = need_type(cfg);
  TSystemSolver solver(cd, need_fundamentals(cfg, cd));
  int failures = 0;
  for (int i = 1; i <= cd.rank(); ++i)
    for (int k = 1; k <= kmax; ++k) {
      int bad = 0;
      for (int r = -window; r <= window; ++r)
        if (!solver.verify(i, k, r)) ++bad;
      std::cout << (bad ? "FAIL" : "PASS") << " i=" << i << " k=" << k << " r in [" << -window << "," << window << "]";
      if (bad) std::cout << " (" << bad << " failures)";
      std::cout << "\n";
      failures += bad;
    }
  return failures ? 1 : 0;
}

int cmd_mutate(const RunConfig& cfg, const std::string& seq) {
  const CartanData cd = need_type(cfg);
  const TruncationParams tp = need_truncation(cfg, cd);
  const Seed s = mutate_sequence(initial_seed(cd, tp), seq.empty() ? std::vector<Vertex>{} : parse_vertex_list(seq));
  print_json(s.to_json());
  return 0;
}

int cmd_enumerate(const RunConfig& cfg, std::size_t max_seeds, bool dump) {
  const CartanData cd = need_type(cfg);
  const TruncationParams tp = need_truncation(cfg, cd);
  const Seed s0 = initial_seed(cd, tp);
  const ClosureResult res = enumerate_closure(s0, max_seeds);
  if (cfg.format == "json") {
    json j{{"cluster_variables", res.variables.size()},
           {"frozen", res.frozen.size()},
           {"seeds", res.seed_count},
           {"closed", res.closed}};
    if (dump) {
      json vars = json::array();
      for (const auto& x : res.variables) {
        json dv = denominator_vector(x, s0);
        vars.push_back(json{{"variable", x.to_string()}, {"denominator_vector", dv}});
      }
      j["variables"] = vars;
    }
    print_json(j);
  } else {
    std::cout << res.variables.size() << " cluster variables, " << res.frozen.size() << " frozen, " << res.seed_count
              << " seeds, " << (res.closed ? "closed" : "cap reached") << "\n";
    if (dump) {
      for (const auto& x : res.variables) {
        std::cout << "  d = (";
        const auto dv = denominator_vector(x, s0);
        for (std::size_t n = 0; n < dv.size(); ++n) std::cout << (n ? "," : "") << dv[n];
        std::cout << ")  " << x.to_string() << "\n";
      }
    }
  }
  return 0;
}

int cmd_sl2_decompose(const std::string& strings) {
  const K0Elem e = normalize(parse_strings(strings));
  print_json(k0_to_json(e));
  return 0;
}

int cmd_fpoly(const RunConfig& cfg, const std::string& module, const std::string& builtin, bool qchar) {
  const CartanData cd = need_type(cfg);
  if (module.empty() == builtin.empty()) throw Error(ErrorCode::InvalidConfig, "give exactly one of --module, --builtin");
  ThinRep K;
  Vertex at;
  if (!builtin.empty()) {
    at = parse_vertex(builtin.front() == '(' ? builtin : "(" + builtin + ")");
    K = builtin_K(cd, at.i, at.r);
  } else {
    std::ifstream in(module);
    if (!in) throw Error(ErrorCode::IoError, "cannot open " + module);
    json j;
    try {
      j = json::parse(in);
    } catch (const json::exception& e) {
      throw Error(ErrorCode::ParseError, module + ": " + e.what());
    }
    K = ThinRep::from_json(j);
    validate_rep(cd, K);
    if (qchar) {
      // The sink of K_{(i,r)} is (i,r): the unique vertex without outgoing arrows.
      std::vector<Vertex> sinks;
      for (const auto& v : K.support) {
        bool out = false;
        for (const auto& [ft, s] : K.arrows) out = out || ft.first == v;
        if (!out) sinks.push_back(v);
      }
      if (sinks.size() != 1) throw Error(ErrorCode::InvalidRepresentation, "module has no unique sink");
      at = sinks.front();
    }
  }
  const bool relations_ok = check_relations(K, cd);
  const LaurentPoly F = f_polynomial(K);
  if (cfg.format == "json") {
    json j{{"module", K.to_json()}, {"relations_satisfied", relations_ok}, {"fpoly", F.to_json()}};
    if (qchar) j["qchar"] = geometric_qchar(cd, at.i, at.r, K).to_json();
    print_json(j);
  } else {
    std::cout << "F = " << F.to_string() << "\n";
    if (!relations_ok) std::cout << "warning: module violates the potential relations\n";
    if (qchar) std::cout << "qchar = " << geometric_qchar(cd, at.i, at.r, K).to_string() << "\n";
  }
  return 0;
}

int cmd_verify(const RunConfig& cfg, const std::string& suite, int kmax, int window) {
  const CartanData cd = need_type(cfg);
  VerifyOptions opt;
  opt.cd = cd;
  opt.kmax = kmax;
  opt.window = window;
  opt.ell = cfg.ell < 0 ? 1 : cfg.ell;
  opt.anchor = cfg.anchor.empty() ? default_anchor(cd) : parse_vertex(cfg.anchor);
  if (!cfg.fundamentals.empty()) opt.fundamentals = FundamentalProvider::from_file(cd, cfg.fundamentals);
  const std::string path = cache_path(cfg);
  if (!path.empty() && std::ifstream(path).good()) load_kr_cache(path);  // surfaces CorruptCache
  const SuiteReport rep = run_suite(suite, opt);
  for (const auto& c : rep.checks) {
    std::cout << (c.skipped ? "SKIP" : c.passed ? "PASS" : "FAIL") << "  " << c.name;
    if (!c.detail.empty()) std::cout << "  (" << c.detail << ")";
    std::cout << "\n";
  }
  std::cout << (rep.ok() ? "all checks passed" : "some checks FAILED") << "\n";
  return rep.ok() ? 0 : 1;
}

bool is_config_error(ErrorCode c) {
  switch (c) {
    case ErrorCode::UnknownLabel:
    case ErrorCode::RankOutOfRange:
    case ErrorCode::ParseError:
    case ErrorCode::IoError:
    case ErrorCode::CorruptCache:
    case ErrorCode::InvalidConfig:
    case ErrorCode::MissingFundamental:
    case ErrorCode::InvalidFundamental:
    case ErrorCode::UnsupportedType:
    case ErrorCode::EmptyTruncation:
      return true;
    default:
      return false;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cluster algebras and q-characters of quantum affine algebras"};
  app.require_subcommand(1);
  RunConfig cfg;
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));

  auto add_truncation = [&cfg](CLI::App* sub) {
    sub->add_option("type", cfg.type, "Lie type, e.g. A3");
    sub->add_option("ell", cfg.ell, "Truncation level");
    sub->add_option("--anchor", cfg.anchor, "Anchor vertex \"(i,r)\" selecting the component");
    sub->add_option("--preset", cfg.preset, "paper-A3-l1, paper-B2-l2, paper-G2-l3, paper-A2-l1");
  };

  auto* info = app.add_subcommand("info", "Truncated quiver with frozen vertices and KR labels");
  add_truncation(info);

  int qi = 1, qk = 1, qr = 0;
  auto* qchar = app.add_subcommand("qchar", "q-character of a Kirillov-Reshetikhin module");
  qchar->add_option("type", cfg.type)->required();
  qchar->add_option("--i", qi)->required();
  qchar->add_option("--k", qk)->required();
  qchar->add_option("--r", qr)->required();
  qchar->add_option("--fundamentals", cfg.fundamentals, "JSON file of fundamental q-characters");
  qchar->add_option("--cache", cfg.cache, "KR table cache file (QAFF_CACHE overrides)");

  int kmax = 4, window = 10;
  auto* tsys = app.add_subcommand("tsys-verify", "Check the T-system identities");
  tsys->add_option("type", cfg.type)->required();
  tsys->add_option("--kmax", kmax);
  tsys->add_option("--window", window, "Check r in [-W, W]");
  tsys->add_option("--fundamentals", cfg.fundamentals);

  std::string seq;
  auto* mut = app.add_subcommand("mutate", "Apply a mutation sequence to the initial seed");
  add_truncation(mut);
  mut->add_option("--seq", seq, "\"(3,-2),(2,-1),(1,-2)\"");

  std::size_t max_seeds = 10000;
  bool dump = false;
  auto* en = app.add_subcommand("enumerate", "Breadth-first closure of the initial seed");
  add_truncation(en);
  en->add_option("--max-seeds", max_seeds);
  en->add_flag("--dump", dump, "List every cluster variable");

  std::string strings;
  auto* sl2 = app.add_subcommand("sl2", "String combinatorics for sl2");
  auto* dec = sl2->add_subcommand("decompose", "Decompose a tensor product of evaluation modules");
  dec->add_option("--strings", strings, "\"(lo,n);(lo,n);...\"")->required();
  sl2->require_subcommand(1);

  std::string module, builtin;
  bool with_qchar = false;
  auto* fp = app.add_subcommand("fpoly", "F-polynomial of a thin representation");
  fp->add_option("--type", cfg.type)->required();
  fp->add_option("--module", module, "ThinRep JSON file");
  fp->add_option("--builtin", builtin, "i,r");
  fp->add_flag("--qchar", with_qchar, "Also print the geometric q-character");

  std::string suite = "all";
  auto* ver = app.add_subcommand("verify", "Run identity suites");
  ver->add_option("--type", cfg.type)->required();
  ver->add_option("--suite", suite)->check(CLI::IsMember(suite_names()));
  ver->add_option("--kmax", kmax);
  ver->add_option("--window", window);
  ver->add_option("--ell", cfg.ell);
  ver->add_option("--anchor", cfg.anchor);
  ver->add_option("--preset", cfg.preset);
  ver->add_option("--fundamentals", cfg.fundamentals);
  ver->add_option("--cache", cfg.cache);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    apply_preset(cfg);
    if (*info) return cmd_info(cfg);
    if (*qchar) return cmd_qchar(cfg, qi, qk, qr);
    if (*tsys) return cmd_tsys_verify(cfg, kmax, window);
    if (*mut) return cmd_mutate(cfg, seq);
    if (*en) return cmd_enumerate(cfg, max_seeds, dump);
    if (*dec) return cmd_sl2_decompose(strings);
    if (*fp) return cmd_fpoly(cfg, module, builtin, with_qchar);
    if (*ver) return cmd_verify(cfg, suite, kmax, window);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return is_config_error(e.code()) ? 2 : 1;
  }
  return 2;
}
