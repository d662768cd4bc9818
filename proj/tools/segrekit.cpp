// segrekit command-line front end. A JSON report goes to stdout, a short
// human summary to stderr.
#include <CLI11.hpp>
#include <openssl/evp.h>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>

#include "segrekit/catalog.hpp"
#include "segrekit/correspondence.hpp"
#include "segrekit/errors.hpp"
#include "segrekit/manifold_io.hpp"
#include "segrekit/segre.hpp"

using namespace segrekit;

namespace {

enum Exit { kOk = 0, kMismatch = 1, kInput = 2, kResource = 3 };

struct Context {
  std::vector<std::string> argv;
  std::vector<std::string> inputs;  // file contents, in argument order
  std::uint64_t seed = 20161016;
  EngineConfig config;
  bool timings = false;
  bool quiet = false;
  Json results = Json::object();
  Json excluded = Json::array();
  int exit_code = kOk;
  std::string status = "ok";

  void say(const std::string& line) const {
    if (!quiet) std::cerr << line << "\n";
  }
};

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr);
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int k = 0; k < len; ++k) {
    out += hex[digest[k] >> 4];
    out += hex[digest[k] & 15];
  }
  return out;
}

std::string inputs_digest(const Context& ctx) {
  std::string data;
  for (const auto& a : ctx.argv) data += a + '\0';
  for (const auto& in : ctx.inputs) data += in + '\0';
  return sha256_hex(data);
}

CRManifold read_manifold(Context& ctx, const std::string& path) {
  std::string text = read_text_file(path);
  ctx.inputs.push_back(text);
  try {
    return parse_manifold(text);
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
}

AlgebraicMap read_map(Context& ctx, const std::string& path) {
  std::string text = read_text_file(path);
  ctx.inputs.push_back(text);
  try {
    return parse_map(text);
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
}

Point read_point(const std::string& text, std::size_t n) {
  Point p = parse_point(text);
  if (p.size() != n) {
    throw InputError("point '" + text + "' has " + std::to_string(p.size()) + " coordinates, expected " +
                     std::to_string(n));
  }
  return p;
}

Json strings(const std::vector<Poly>& polys) {
  Json out = Json::array();
  for (const auto& p : polys) out.push_back(p.to_string());
  return out;
}

Json point_json(const Point& p) {
  Json out = Json::array();
  for (const auto& c : p) out.push_back(c.to_string());
  return out;
}

// Each entry names a hypersurface on which the generic computation is not valid.
Json locus(const std::vector<Poly>& polys) {
  Json out = Json::array();
  for (const auto& p : polys) out.push_back(p.to_string() + " = 0");
  return out;
}

Json signature_json(const Signature& s) { return Json::array({s.positive, s.negative, s.zero}); }

// ---------------------------------------------------------------------------

struct SegreArgs {
  std::string manifold;
  std::string point;
  bool symbolic = false;
};

void cmd_segre(Context& ctx, const SegreArgs& a) {
  CRManifold m = read_manifold(ctx, a.manifold);
  if (a.symbolic == !a.point.empty()) throw InputError("give exactly one of --point and --symbolic");
  SegreVariety q = a.symbolic ? segre_variety_symbolic(m) : segre_variety(m, read_point(a.point, m.n()));
  ctx.results["symbolic"] = a.symbolic;
  if (q.point) ctx.results["point"] = point_json(*q.point);
  ctx.results["variables"] = q.ideal.table()->names();
  ctx.results["generators"] = strings(q.ideal.generators());
  for (const auto& g : q.ideal.generators()) ctx.say(g.to_string() + " = 0");
}

struct PointArgs {
  std::string manifold;
  std::string point;
  std::size_t jmax = 0;
  std::string conormal;
};

void cmd_essfin(Context& ctx, const PointArgs& a) {
  CRManifold m = read_manifold(ctx, a.manifold);
  Point w = read_point(a.point, m.n());
  auto inv = inversion_set(m, w, ctx.config);
  auto ef = essential_finiteness(m, w, ctx.config);
  ctx.results["point"] = point_json(w);
  ctx.results["finite"] = ef.finite;
  ctx.results["dimension"] = ef.dimension;
  ctx.results["degree"] = ef.degree ? Json(*ef.degree) : Json(nullptr);
  ctx.results["inversion_set"] = strings(groebner_basis(inv.ideal, ctx.config).basis());
  ctx.results["segre_map_locally_injective"] = ef.finite && ef.degree == 1u;
  ctx.excluded = locus(inv.excluded);
  if (ef.finite) ctx.say("essentially finite at the point, inversion set degree " + std::to_string(*ef.degree));
  else ctx.say("not essentially finite (inversion set of dimension " + std::to_string(ef.dimension) + ")");
}

void cmd_minimal(Context& ctx, const PointArgs& a) {
  CRManifold m = read_manifold(ctx, a.manifold);
  Point p = read_point(a.point, m.n());
  auto res = minimality(m, p, a.jmax, ctx.config);
  ctx.results["point"] = point_json(p);
  ctx.results["status"] = to_string(res.status);
  ctx.results["minimal"] = res.minimal;
  ctx.results["j0"] = res.j0 ? Json(*res.j0) : Json(nullptr);
  ctx.results["dims"] = res.chain.dims;
  Json sets = Json::array();
  for (const auto& ideal : res.chain.ideals) sets.push_back(strings(ideal.basis()));
  ctx.results["segre_sets"] = std::move(sets);
  switch (res.status) {
    case ChainStatus::Minimal:
      ctx.say("minimal: Segre set Q^" + std::to_string(*res.j0) + " has full dimension");
      break;
    case ChainStatus::Stabilized:
      ctx.say("not minimal: Segre sets stabilized at dimension " + std::to_string(res.chain.dims.back()));
      break;
    case ChainStatus::Inconclusive:
      ctx.say("inconclusive: no full-dimensional Segre set up to j = " + std::to_string(res.chain.dims.size()));
      ctx.exit_code = kResource;
      ctx.status = "inconclusive";
      break;
  }
}

void cmd_levi(Context& ctx, const PointArgs& a) {
  CRManifold m = read_manifold(ctx, a.manifold);
  Point p = read_point(a.point, m.n());
  std::vector<mpq_class> c;
  for (const auto& v : parse_point(a.conormal)) {
    if (!v.is_real()) throw InputError("conormal entries must be real");
    c.push_back(v.re());
  }
  auto rep = levi_signature(m, p, c);
  ctx.results["point"] = point_json(p);
  Json cj = Json::array();
  for (const auto& v : c) cj.push_back(v.get_str());
  ctx.results["conormal"] = std::move(cj);
  ctx.results["signature"] = signature_json(rep.signature);
  bool mixed = rep.signature.positive > 0 && rep.signature.negative > 0;
  ctx.results["mixed"] = mixed;
  ctx.say("Levi signature (+, -, 0) = (" + std::to_string(rep.signature.positive) + ", " +
          std::to_string(rep.signature.negative) + ", " + std::to_string(rep.signature.zero) + ")" +
          (mixed ? ", mixed" : ""));
}

struct CorrespondArgs {
  std::string source;
  std::string target;
  std::string map;
  std::string fiber;
  bool reverse = false;
  std::size_t invariance_points = 60;
};

void cmd_correspond(Context& ctx, const CorrespondArgs& a) {
  CRManifold src = read_manifold(ctx, a.source);
  CRManifold tgt = read_manifold(ctx, a.target);
  AlgebraicMap f = read_map(ctx, a.map);
  Correspondence c = build_correspondence(src, tgt, f, ctx.config);
  ctx.results["route"] = c.route;
  ctx.results["variables"] = c.table->names();
  ctx.results["graph"] = strings(c.graph.basis());
  ctx.excluded = locus(c.excluded);
  ctx.say("graph: " + std::to_string(c.graph.basis().size()) + " generators over " + c.route + " route");
  if (a.fiber.empty()) return;

  Correspondence use = a.reverse ? transpose(c) : c;
  Point w = read_point(a.fiber, use.source_block.size());
  auto fb = fiber(use, w, ctx.config);
  Json fj;
  fj["direction"] = a.reverse ? "reverse" : "forward";
  fj["point"] = point_json(w);
  fj["degree"] = fb.degree;
  fj["distinct"] = fb.distinct;
  Json sols = Json::array();
  for (const auto& s : fb.solutions) sols.push_back(point_json(s));
  fj["solutions"] = std::move(sols);
  fj["solutions_complete"] = fb.solutions_complete;
  fj["on_excluded_locus"] = fb.on_excluded_locus;
  ctx.results["fiber"] = std::move(fj);
  ctx.say("fiber degree " + std::to_string(fb.degree) + " (" + std::to_string(fb.distinct) + " distinct)");
  if (fb.on_excluded_locus) {
    ctx.say("warning: the point lies on the excluded locus; the fiber may be degenerate");
  }

  const CRManifold& base = a.reverse ? tgt : src;
  if (!base.contains(w)) {
    ctx.say("note: the point is not on the manifold; splitting and invariance skipped");
    return;
  }
  auto sp = splits_at(use, w, ctx.config);
  Json sj;
  sj["splits"] = sp.splits;
  sj["simple_roots"] = sp.simple_roots;
  sj["target_segre_map_injective"] = sp.target_injective;
  ctx.results["splits"] = std::move(sj);
  ctx.say(std::string("splits at the point: ") + (sp.splits ? "yes" : "no"));
  if (!a.reverse && !f.is_relation()) {
    auto rk = max_rank_check(f, w, &src);
    Json rj;
    rj["rank"] = rk.rank;
    rj["expected"] = rk.expected;
    rj["maximal"] = rk.maximal;
    if (rk.restricted_rank) rj["restricted_rank"] = *rk.restricted_rank;
    ctx.results["max_rank"] = std::move(rj);
    Rng rng(ctx.seed);
    auto inv = verify_invariance(src, tgt, f, {w}, a.invariance_points, 10, rng);
    Json ij;
    ij["evaluations"] = inv.evaluations;
    ij["failures"] = inv.failures;
    ij["manifold_points"] = inv.manifold_points;
    ij["manifold_failures"] = inv.manifold_failures;
    ij["passed"] = inv.passed();
    ctx.results["invariance"] = std::move(ij);
    ctx.say("invariance: " + std::to_string(inv.evaluations - inv.failures) + "/" + std::to_string(inv.evaluations) +
            " checks pass");
    if (!inv.passed()) {
      ctx.exit_code = kMismatch;
      ctx.status = "mismatch";
    }
  }
}

struct SuiteArgs {
  std::string name;
  bool all = false;
  std::string catalog;
};

void cmd_suite(Context& ctx, const SuiteArgs& a) {
  if (a.all == !a.name.empty()) throw InputError("give exactly one of a catalog name and --all");
  std::filesystem::path dir = a.catalog.empty() ? default_catalog_dir() : std::filesystem::path(a.catalog);
  ctx.inputs.push_back(read_text_file(dir / "manifest.json"));
  auto entries = load_catalog(dir);
  std::vector<const CatalogEntry*> chosen;
  if (a.all) {
    for (const auto& e : entries) chosen.push_back(&e);
  } else {
    chosen.push_back(&find_entry(entries, a.name));
  }
  SuiteOptions opt;
  opt.seed = ctx.seed;
  opt.config = ctx.config;
  Json reports = Json::array();
  bool mismatch = false;
  bool limited = false;
  for (const auto* e : chosen) {
    auto r = run_suite(*e, opt);
    std::size_t ok = 0;
    for (const auto& c : r.checks) ok += c.passed ? 1 : 0;
    ctx.say(e->name + ": " + std::to_string(ok) + "/" + std::to_string(r.checks.size()) + " checks pass" +
            (r.passed ? "" : "  MISMATCH"));
    for (const auto& c : r.checks) {
      if (!c.passed) ctx.say("  " + c.check + " " + c.subject + ": expected " + c.expected.dump() + ", got " +
                             c.actual.dump() + (c.note.empty() ? "" : " (" + c.note + ")"));
    }
    mismatch = mismatch || !r.passed;
    limited = limited || r.resource_limited;
    for (const auto& x : r.excluded) ctx.excluded.push_back(e->name + "/" + x);
    reports.push_back(r.to_json(ctx.timings));
  }
  ctx.results["entries"] = std::move(reports);
  if (limited) {
    ctx.exit_code = kResource;
    ctx.status = "resource_limit";
  } else if (mismatch) {
    ctx.exit_code = kMismatch;
    ctx.status = "mismatch";
  }
}

std::optional<std::uint64_t> env_number(const char* name) {
  const char* v = std::getenv(name);
  if (!v || !*v) return std::nullopt;
  try {
    std::size_t used = 0;
    auto out = std::stoull(v, &used);
    if (used != std::string(v).size()) throw std::invalid_argument(v);
    return out;
  } catch (const std::exception&) {
    throw InputError(std::string(name) + " must be a nonnegative integer");
  }
}

}  // namespace

int main(int argc, char** argv) {
  Context ctx;
  for (int k = 1; k < argc; ++k) ctx.argv.emplace_back(argv[k]);

  CLI::App app{"Segre varieties, essential finiteness, minimality and holomorphic correspondences"};
  app.require_subcommand(1);
  std::optional<std::uint64_t> max_degree, max_basis;
  app.add_option("--max-degree", max_degree, "cap on the degree of basis elements (env SEGREKIT_MAX_DEGREE)");
  app.add_option("--max-basis", max_basis, "cap on the basis size (env SEGREKIT_MAX_BASIS)");
  app.add_option("--seed", ctx.seed, "seed for sampling");
  app.add_flag("--timings", ctx.timings, "include wall-clock timings in the report");
  app.add_flag("-q,--quiet", ctx.quiet, "no human summary on stderr");

  SegreArgs segre;
  auto* s = app.add_subcommand("segre", "Segre variety at a point or with a symbolic point");
  s->add_option("manifold", segre.manifold, "manifold file")->required();
  s->add_option("--point", segre.point, "comma-separated coordinates, e.g. \"3/5, 4/5*i\"");
  s->add_flag("--symbolic", segre.symbolic, "keep the point symbolic");

  PointArgs essfin;
  auto* e = app.add_subcommand("essfin", "essential finiteness via the inversion set");
  e->add_option("manifold", essfin.manifold, "manifold file")->required();
  e->add_option("--point", essfin.point, "point w")->required();

  PointArgs minimal;
  auto* mi = app.add_subcommand("minimal", "minimality via Segre sets");
  mi->add_option("manifold", minimal.manifold, "manifold file")->required();
  mi->add_option("--point", minimal.point, "base point on the manifold")->required();
  mi->add_option("--jmax", minimal.jmax, "largest Segre set index (default n + 2)");

  PointArgs levi;
  auto* l = app.add_subcommand("levi", "Levi form signature at a point for a conormal");
  l->add_option("manifold", levi.manifold, "manifold file")->required();
  l->add_option("--point", levi.point, "point on the manifold")->required();
  l->add_option("--conormal", levi.conormal, "real coefficients c_1..c_d")->default_val("1");

  CorrespondArgs corr;
  auto* c = app.add_subcommand("correspond", "correspondence graph of a map between manifolds");
  c->add_option("source", corr.source, "source manifold file")->required();
  c->add_option("target", corr.target, "target manifold file")->required();
  c->add_option("map", corr.map, "map file")->required();
  c->add_option("--fiber", corr.fiber, "point whose fiber is computed");
  c->add_flag("--reverse", corr.reverse, "fiber of the transposed correspondence");
  c->add_option("--invariance-points", corr.invariance_points, "manifold points sampled for the invariance check");

  SuiteArgs suite;
  auto* su = app.add_subcommand("suite", "run catalog suites");
  su->add_option("name", suite.name, "catalog entry");
  su->add_flag("--all", suite.all, "every catalog entry");
  su->add_option("--catalog", suite.catalog, "catalog directory");

  std::string command;
  auto start = std::chrono::steady_clock::now();
  try {
    try {
      app.parse(argc, argv);
    } catch (const CLI::CallForHelp& err) {
      return app.exit(err);
    } catch (const CLI::CallForAllHelp& err) {
      return app.exit(err);
    } catch (const CLI::ParseError& err) {
      throw InputError(err.what());
    }
    command = app.get_subcommands().front()->get_name();
    if (auto v = env_number("SEGREKIT_MAX_DEGREE")) ctx.config.max_degree = *v;
    if (auto v = env_number("SEGREKIT_MAX_BASIS")) ctx.config.max_basis = *v;
    if (max_degree) ctx.config.max_degree = *max_degree;
    if (max_basis) ctx.config.max_basis = *max_basis;

    if (command == "segre") cmd_segre(ctx, segre);
    else if (command == "essfin") cmd_essfin(ctx, essfin);
    else if (command == "minimal") cmd_minimal(ctx, minimal);
    else if (command == "levi") cmd_levi(ctx, levi);
    else if (command == "correspond") cmd_correspond(ctx, corr);
    else cmd_suite(ctx, suite);
  } catch (const ResourceLimitError& err) {
    ctx.exit_code = kResource;
    ctx.status = "resource_limit";
    ctx.results["error"] = err.what();
    ctx.say(std::string("resource limit: ") + err.what());
  } catch (const Error& err) {
    ctx.exit_code = kInput;
    ctx.status = "input_error";
    ctx.results["error"] = err.what();
    ctx.say(std::string("error: ") + err.what());
  }

  Json report;
  report["schema"] = 1;
  report["command"] = {{"name", command}, {"args", ctx.argv}};
  report["inputs_digest"] = inputs_digest(ctx);
  report["seed"] = ctx.seed;
  report["limits"] = {{"max_degree", ctx.config.max_degree}, {"max_basis", ctx.config.max_basis}};
  report["status"] = ctx.status;
  report["exit_code"] = ctx.exit_code;
  report["results"] = ctx.results;
  report["excluded_locus"] = ctx.excluded;
  if (ctx.timings) {
    report["timings"] = {
        {"total_seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()}};
  }
  std::cout << report.dump(2) << "\n";
  return ctx.exit_code;
}
