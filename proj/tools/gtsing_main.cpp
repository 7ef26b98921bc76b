// gtsing: command-line front end for the 1-singular Gelfand-Tsetlin library.
//
// Exit codes: 0 success, 1 failed verification (or an internal error),
// 2 bad usage or input.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "gtsing/cache.hpp"
#include "gtsing/error.hpp"
#include "gtsing/expression.hpp"
#include "gtsing/serialize.hpp"

namespace {

using namespace gtsing;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct Config {
  std::optional<int> n;
  std::optional<std::string> singular;
  std::optional<std::string> point_file;
  std::optional<std::string> format;
  std::optional<std::string> cache_dir;
  bool no_cache = false;

  std::string gen;
  std::string basis;
  std::string suite;
  std::string suite_flag;
  std::optional<std::string> convention;
};

std::vector<int> parse_int_list(const std::string& text, std::size_t count, const char* what) {
  std::vector<int> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw ParseError(std::string(what) + ": '" + text + "' is not a comma-separated integer list");
    out.push_back(v);
  }
  if (out.size() != count)
    throw ParseError(std::string(what) + ": expected " + std::to_string(count) + " integers, got '" + text + "'");
  return out;
}

GeneratorId parse_gen(const std::string& text, int n) {
  auto v = parse_int_list(text, 2, "--gen");
  GeneratorId g{v[0], v[1]};
  if (g.r < 1 || g.r > n || g.s < 1 || g.s > n)
    throw DomainError("--gen " + text + ": indices must lie in [1, " + std::to_string(n) + "]");
  return g;
}

bool json_output(const Config& c, bool json_default) {
  if (!c.format) return json_default;
  return *c.format == "json";
}

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

Cache open_cache(const Config& c) {
  if (c.no_cache) return {};
  auto dir = resolve_cache_dir(c.cache_dir);
  return dir ? Cache(*dir) : Cache();
}

void store(const Cache& cache, const CacheKey& key, const json& value) {
  if (cache.enabled() && !cache.store(key, value))
    std::cerr << "warning: could not write cache entry " << cache.entry_path(key).string() << '\n';
}

std::optional<Point> load_point(const Config& c) {
  if (!c.point_file) return std::nullopt;
  Point p = read_point_file(*c.point_file);
  if (c.n && *c.n != p.order())
    throw DomainError("--n " + std::to_string(*c.n) + " does not match the point order " + std::to_string(p.order()));
  return p;
}

int order_of(const Config& c, const std::optional<Point>& p) {
  int n = p ? p->order() : c.n.value_or(3);
  if (n < 2 || n > kMaxOrder) throw DomainError("--n must lie in [2, " + std::to_string(kMaxOrder) + "]");
  return n;
}

// --point and --singular, falling back to the canonical point and to the
// classifier's witness.
SingularContext make_context(const Config& c) {
  std::optional<Point> p = load_point(c);
  int n = order_of(c, p);
  std::vector<int> kij;
  if (c.singular) {
    kij = parse_int_list(*c.singular, 3, "--singular");
  } else if (p) {
    PointClass pc = classify_point(*p);
    if (pc.tag != PointClass::Tag::OneSingular) throw DomainError("the point is " + to_string(pc) + ", not 1-singular");
    kij = {pc.k, pc.i, pc.j};
  } else {
    kij = {2, 1, 2};
  }
  if (!p) p = canonical_point(n, kij[0], kij[1], kij[2]);
  return SingularContext(*p, kij[0], kij[1], kij[2]);
}

int cmd_phi(const Config& c) {
  std::optional<Point> p = load_point(c);
  int n = order_of(c, p);
  GeneratorId g = parse_gen(c.gen, n);
  Cache cache = open_cache(c);
  CacheKey key{n, "phi", to_string(g)};
  std::optional<RingElement> image;
  if (auto hit = cache.load(key)) {
    try {
      image = ring_from_json(*hit, n);
    } catch (const Error&) {
      image.reset();
    }
  }
  if (!image) {
    image = phi_general(n, g);
    store(cache, key, ring_to_json(*image));
  }
  if (json_output(c, false)) {
    print_json(ring_to_json(*image));
  } else {
    std::cout << to_string(*image) << '\n';
  }
  return kExitOk;
}

int cmd_act(const Config& c) {
  SingularContext ctx = make_context(c);
  int n = ctx.order();
  GeneratorId g = parse_gen(c.gen, n);
  BasisVec b = parse_basis_spec(c.basis, n);
  validate_basis(ctx, b);

  Cache cache = open_cache(c);
  std::string args = "point=" + point_to_json(ctx.point()).dump() + ";singular=" + std::to_string(ctx.row()) + "," +
                     std::to_string(ctx.col_i()) + "," + std::to_string(ctx.col_j()) + ";gen=" + to_string(g) +
                     ";basis=" + to_string(b);
  CacheKey key{n, "act", args};
  std::optional<DistVector> result;
  if (auto hit = cache.load(key)) {
    try {
      result = dist_from_json(ctx, *hit);
    } catch (const Error&) {
      result.reset();
    }
  }
  if (!result) {
    result = act_lie(ctx, g, b);
    store(cache, key, dist_to_json(*result));
  }
  if (json_output(c, true)) {
    print_json(dist_to_json(*result));
  } else {
    std::cout << to_string(*result) << '\n';
  }
  return kExitOk;
}

int cmd_verify(const Config& c) {
  if (!c.suite.empty() && !c.suite_flag.empty() && c.suite != c.suite_flag)
    throw DomainError("suite given twice: '" + c.suite + "' and '" + c.suite_flag + "'");
  std::string suite = c.suite.empty() ? c.suite_flag : c.suite;
  if (suite.empty()) throw DomainError("verify needs a suite: ring, homomorphism, singularity, module, appendix or generic");

  SuiteReport report;
  if (suite == "ring") {
    report = run_ring_suite(order_of(c, load_point(c)));
  } else if (suite == "homomorphism") {
    Convention conv = calibrated_convention();
    if (c.convention) conv = parse_convention(*c.convention);
    report = run_homomorphism_suite(order_of(c, load_point(c)), conv);
  } else if (suite == "singularity") {
    report = run_singularity_suite(make_context(c));
  } else if (suite == "module") {
    report = run_module_suite(make_context(c));
  } else if (suite == "appendix") {
    report = run_appendix_suite(make_context(c));
  } else if (suite == "generic") {
    std::optional<Point> p = load_point(c);
    report = run_generic_suite(p ? *p : generic_point(order_of(c, p)));
  } else {
    throw DomainError("unknown suite '" + suite + "'");
  }

  if (json_output(c, true)) {
    print_json(suite_report_to_json(report));
  } else {
    std::cout << report.suite << " n=" << report.n << ": " << (report.ok() ? "PASS" : "FAIL") << ' ' << report.passed << '/'
              << report.total << '\n';
    for (const auto& f : report.failures) {
      std::cout << "  failed " << f.what << '\n';
      if (!f.detail.empty()) std::cout << "    " << f.detail << '\n';
      if (f.action) std::cout << "    lhs:\n" << to_string(f.action->lhs) << "\n    rhs:\n" << to_string(f.action->rhs) << '\n';
    }
  }
  return report.ok() ? kExitOk : kExitFailed;
}

int cmd_classify(const Config& c) {
  std::optional<Point> p = load_point(c);
  if (!p) throw DomainError("classify needs --point FILE");
  PointClass pc = classify_point(*p);
  if (json_output(c, false)) {
    print_json(point_class_to_json(pc));
  } else {
    std::cout << to_string(pc) << '\n';
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with 1-singular Gelfand-Tsetlin modules"};
  app.fallthrough();
  app.require_subcommand(1);

  Config c;
  app.add_option("--n", c.n, "Order of gl_n (default 3, or the order of --point)");
  app.add_option("--singular", c.singular, "Singular pair k,i,j");
  app.add_option("--point", c.point_file, "Point JSON file");
  app.add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--cache", c.cache_dir, std::string("Cache directory (else $") + kCacheDirEnv + ")");
  app.add_flag("--no-cache", c.no_cache, "Neither read nor write the cache");

  auto* phi = app.add_subcommand("phi", "Print the ring image of a generator E_rs");
  phi->add_option("--gen", c.gen, "r,s")->required();

  auto* act = app.add_subcommand("act", "Act by E_rs on a basis vector of the singular module");
  act->add_option("--gen", c.gen, "r,s")->required();
  act->add_option("--basis", c.basis, "KIND:SHIFTSPEC, e.g. D1:id or D2:(2,2)+1")->required();

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("SUITE", c.suite, "ring | homomorphism | singularity | module | appendix | generic");
  verify->add_option("--suite", c.suite_flag, "Same as the positional suite name");
  verify->add_option("--convention", c.convention, "Override the multiplication in the homomorphism suite")
      ->check(CLI::IsMember({"circ", "star"}));

  auto* classify = app.add_subcommand("classify", "Classify the point given by --point");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*phi) return cmd_phi(c);
    if (*act) return cmd_act(c);
    if (*verify) return cmd_verify(c);
    if (*classify) return cmd_classify(c);
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitFailed;
  }
  return kExitUsage;
}
