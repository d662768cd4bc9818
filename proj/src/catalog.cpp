#include "segrekit/catalog.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <random>

#include "segrekit/errors.hpp"
#include "segrekit/manifold_io.hpp"
#include "segrekit/sampling.hpp"
#include "segrekit/segre.hpp"
#include "segrekit/solve.hpp"

#ifndef SEGREKIT_CATALOG_DIR
#define SEGREKIT_CATALOG_DIR "catalog"
#endif

namespace segrekit {

const CatalogManifold& CatalogEntry::manifold(const std::string& id) const {
  for (const auto& m : manifolds) {
    if (m.id == id) return m;
  }
  throw InputError(name + ": no manifold '" + id + "'");
}

const CatalogMap& CatalogEntry::map(const std::string& id) const {
  for (const auto& m : maps) {
    if (m.id == id) return m;
  }
  throw InputError(name + ": no map '" + id + "'");
}

std::filesystem::path default_catalog_dir() {
  if (const char* env = std::getenv("SEGREKIT_CATALOG"); env && *env) return env;
  return SEGREKIT_CATALOG_DIR;
}

namespace {

std::string need_string(const Json& j, const char* key, const std::string& where) {
  if (!j.contains(key) || !j[key].is_string()) throw InputError(where + ": missing string field '" + key + "'");
  return j[key].get<std::string>();
}

CatalogEntry parse_entry(const Json& j, const std::filesystem::path& dir) {
  CatalogEntry entry;
  entry.name = need_string(j, "name", "catalog entry");
  entry.description = j.value("description", "");
  const std::string where = "catalog entry " + entry.name;
  for (const auto& jm : j.value("manifolds", Json::array())) {
    std::string id = need_string(jm, "id", where);
    std::string file = need_string(jm, "file", where);
    CRManifold m = load_manifold(dir / file);
    if (jm.contains("dehomogenize")) m = dehomogenize(m, jm["dehomogenize"].get<std::size_t>());
    if (!check_reality(m)) throw InputError(where + ": manifold " + id + " is not real");
    std::vector<Point> points;
    for (const auto& jp : jm.value("points", Json::array())) {
      Point p = parse_point(jp.get<std::string>());
      if (p.size() != m.n() || !m.contains(p)) {
        throw InputError(where + ": point " + jp.get<std::string>() + " is not on " + id);
      }
      points.push_back(std::move(p));
    }
    if (points.empty()) throw InputError(where + ": manifold " + id + " needs at least one point");
    entry.manifolds.push_back({id, file, std::move(m), std::move(points)});
  }
  for (const auto& jm : j.value("maps", Json::array())) {
    std::string id = need_string(jm, "id", where);
    std::string file = need_string(jm, "file", where);
    CatalogMap cm{id, file, need_string(jm, "source", where), need_string(jm, "target", where), load_map(dir / file)};
    entry.manifold(cm.source);
    entry.manifold(cm.target);
    entry.maps.push_back(std::move(cm));
  }
  for (const auto& je : j.value("expected", Json::array())) {
    Expectation e;
    e.check = need_string(je, "check", where);
    e.subject = need_string(je, "subject", where);
    e.provenance = need_string(je, "provenance", where);
    if (e.provenance != "published" && e.provenance != "derived" && e.provenance != "definition") {
      throw InputError(where + ": unknown provenance '" + e.provenance + "'");
    }
    if (!je.contains("value")) throw InputError(where + ": expectation without value");
    e.value = je["value"];
    e.params = Json::object();
    for (const auto& [key, val] : je.items()) {
      if (key != "check" && key != "subject" && key != "value" && key != "provenance") e.params[key] = val;
    }
    entry.expected.push_back(std::move(e));
  }
  return entry;
}

}  // namespace

std::vector<CatalogEntry> load_catalog(const std::filesystem::path& dir) {
  std::ifstream in(dir / "manifest.json");
  if (!in) throw InputError("cannot read " + (dir / "manifest.json").string());
  Json manifest;
  try {
    manifest = Json::parse(in);
  } catch (const Json::exception& e) {
    throw InputError("manifest.json: " + std::string(e.what()));
  }
  std::vector<CatalogEntry> out;
  try {
    for (const auto& j : manifest.at("entries")) out.push_back(parse_entry(j, dir));
  } catch (const Json::exception& e) {
    throw InputError("manifest.json: " + std::string(e.what()));
  }
  return out;
}

const CatalogEntry& find_entry(const std::vector<CatalogEntry>& entries, const std::string& name) {
  for (const auto& e : entries) {
    if (e.name == name) return e;
  }
  throw InputError("no catalog entry named '" + name + "'");
}

// ---------------------------------------------------------------------------
// Numeric oracle

namespace {

using Cplx = std::complex<double>;
using CVec = Eigen::VectorXcd;

struct CompiledPoly {
  std::vector<std::pair<Cplx, Monomial>> terms;

  explicit CompiledPoly(const Poly& p) {
    for (const auto& t : p.terms()) terms.emplace_back(Cplx(t.coeff.re().get_d(), t.coeff.im().get_d()), t.mono);
  }

  Cplx operator()(const CVec& x) const {
    Cplx acc = 0;
    for (const auto& [c, m] : terms) {
      Cplx v = c;
      for (std::size_t k = 0; k < m.size(); ++k) {
        for (Exponent e = 0; e < m[k]; ++e) v *= x[static_cast<Eigen::Index>(k)];
      }
      acc += v;
    }
    return acc;
  }
};

}  // namespace

NumericOracleResult numeric_oracle(const std::vector<Poly>& system, double box, std::size_t samples,
                                   std::uint64_t seed) {
  NumericOracleResult out;
  std::vector<Poly> eqs;
  for (const auto& p : system) {
    if (!p.is_zero()) eqs.push_back(p);
  }
  if (eqs.empty()) throw DomainError("numeric oracle needs a nonzero system");
  const std::size_t nv = eqs.front().table()->size();
  std::vector<CompiledPoly> f;
  std::vector<std::vector<CompiledPoly>> jac;
  for (const auto& p : eqs) {
    f.emplace_back(p);
    jac.emplace_back();
    for (std::size_t k = 0; k < nv; ++k) jac.back().emplace_back(p.derivative(k));
  }
  const auto m = static_cast<Eigen::Index>(eqs.size());
  const auto n = static_cast<Eigen::Index>(nv);
  auto residual = [&](const CVec& x) {
    CVec r(m);
    for (Eigen::Index i = 0; i < m; ++i) r[i] = f[i](x);
    return r;
  };

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(-box, box);
  for (std::size_t s = 0; s < samples; ++s) {
    ++out.starts;
    CVec x(n);
    for (Eigen::Index k = 0; k < n; ++k) x[k] = Cplx(coord(rng), coord(rng));
    CVec r = residual(x);
    double norm = r.norm();
    for (int it = 0; it < 100 && norm > 1e-14; ++it) {
      Eigen::MatrixXcd j(m, n);
      for (Eigen::Index a = 0; a < m; ++a) {
        for (Eigen::Index b = 0; b < n; ++b) j(a, b) = jac[a][b](x);
      }
      CVec step = j.colPivHouseholderQr().solve(-r);
      double lambda = 1;
      bool moved = false;
      for (int h = 0; h < 30; ++h, lambda /= 2) {
        CVec y = x + lambda * step;
        CVec ry = residual(y);
        if (ry.norm() < norm) {
          x = y;
          r = ry;
          norm = ry.norm();
          moved = true;
          break;
        }
      }
      if (!moved) break;
    }
    double res = r.cwiseAbs().maxCoeff();
    if (!std::isfinite(res) || res >= 1e-9) {
      ++out.failures;
      continue;
    }
    std::vector<Cplx> root(x.data(), x.data() + n);
    bool seen = std::any_of(out.roots.begin(), out.roots.end(), [&](const std::vector<Cplx>& other) {
      double d = 0;
      for (std::size_t k = 0; k < root.size(); ++k) d = std::max(d, std::abs(root[k] - other[k]));
      return d < 1e-6 * (1 + std::abs(root[0]));
    });
    if (!seen) {
      out.roots.push_back(std::move(root));
      out.max_residual = std::max(out.max_residual, res);
    }
  }
  out.count = out.roots.size();
  return out;
}

// ---------------------------------------------------------------------------
// Suite

namespace {

Json signature_json(const Signature& s) { return Json::array({s.positive, s.negative, s.zero}); }

double magnitude(const Point& p) {
  double best = 0;
  for (const auto& c : p) best = std::max(best, std::hypot(c.re().get_d(), c.im().get_d()));
  return best;
}

class SuiteRunner {
 public:
  SuiteRunner(const CatalogEntry& entry, const SuiteOptions& options) : entry_(entry), opt_(options) {}

  SuiteReport run() {
    auto start = std::chrono::steady_clock::now();
    report_.name = entry_.name;
    std::size_t index = 0;
    for (const auto& m : entry_.manifolds) {
      Expectation e{"segre_symmetry", m.id, Json::object(), true, "definition"};
      execute(e, index++);
    }
    for (const auto& e : entry_.expected) execute(e, index++);
    for (const auto& [id, c] : correspondences_) {
      for (const auto& p : c.excluded) report_.excluded.push_back(id + ": " + p.to_string() + " = 0");
    }
    report_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report_;
  }

 private:
  void execute(const Expectation& e, std::size_t index) {
    CheckResult r{e.check, e.subject, e.provenance, e.params, e.value, nullptr, false, "", 0};
    Rng rng(opt_.seed + 7919 * index);
    auto start = std::chrono::steady_clock::now();
    try {
      r.actual = evaluate(e, rng, r.note);
      r.passed = matches(e, r.actual);
    } catch (const ResourceLimitError& err) {
      r.note = std::string("resource limit: ") + err.what();
      report_.resource_limited = true;
    } catch (const Error& err) {
      r.note = err.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!r.passed) report_.passed = false;
    report_.checks.push_back(std::move(r));
  }

  static bool matches(const Expectation& e, const Json& actual) {
    if (e.check == "minimality") {
      for (const auto& [key, val] : e.value.items()) {
        if (!actual.contains(key) || actual[key] != val) return false;
      }
      return true;
    }
    if (e.check == "invariance" || e.check == "segre_symmetry") return actual.at("passed") == e.value;
    if (e.check == "levi_mixed") return actual.at("all_mixed") == e.value;
    if (e.check == "essential_finiteness" || e.check == "fiber_degree" || e.check == "splits") {
      return actual.at("value") == e.value;
    }
    return actual == e.value;
  }

  const Correspondence& correspondence(const std::string& id) {
    auto it = correspondences_.find(id);
    if (it != correspondences_.end()) return it->second;
    const auto& cm = entry_.map(id);
    auto c = build_correspondence(entry_.manifold(cm.source).manifold, entry_.manifold(cm.target).manifold, cm.map,
                                  opt_.config);
    return correspondences_.emplace(id, std::move(c)).first->second;
  }

  void cross_check(const std::string& label, const Ideal& ideal, const Point& at) {
    Ideal gb = groebner_basis(ideal, opt_.config);
    if (dimension(gb, opt_.config) != 0) return;
    OracleRecord rec;
    rec.system = label;
    rec.exact_degree = degree_zero_dim(gb, opt_.config);
    rec.exact_distinct = radical_degree(gb, opt_.config);
    double box = 2 + 2 * magnitude(at) * magnitude(at);
    auto num = numeric_oracle(ideal.generators(), box, opt_.oracle_starts, opt_.seed + report_.oracle.size());
    rec.numeric_count = num.count;
    rec.max_residual = num.max_residual;
    rec.agree = num.count == rec.exact_distinct && num.max_residual < 1e-9;
    if (!rec.agree) report_.passed = false;
    report_.oracle.push_back(rec);
  }

  // Seeded from the first listed point only; later points may be special (branch points, axes).
  std::vector<Point> generic_source_points(const CatalogManifold& m, std::size_t count, Rng& rng) {
    return sample_manifold_points(m.manifold, {m.points.front()}, count, rng);
  }

  Json evaluate(const Expectation& e, Rng& rng, std::string& note) {
    const std::string& c = e.check;
    if (c == "reality") return check_reality(entry_.manifold(e.subject).manifold);
    if (c == "genericity") {
      const auto& m = entry_.manifold(e.subject);
      std::size_t rank = genericity_rank(m.manifold, m.points.front());
      for (const auto& p : m.points) {
        if (genericity_rank(m.manifold, p) != rank) note = "rank varies across base points";
      }
      return rank;
    }
    if (c == "levi_signature") {
      const auto& m = entry_.manifold(e.subject);
      std::vector<mpq_class> conormal;
      for (const auto& v : e.params.at("conormal")) conormal.emplace_back(v.get<long>());
      const Point& p = m.points.at(e.params.value("point", std::size_t{0}));
      return signature_json(levi_signature(m.manifold, p, conormal).signature);
    }
    if (c == "levi_mixed") {
      const auto& m = entry_.manifold(e.subject);
      auto pts = sample_manifold_points(m.manifold, m.points, 20, rng);
      auto probe = pseudoconcavity_probe(m.manifold, pts, default_conormal_grid(m.manifold.d()));
      Json out;
      out["all_mixed"] = probe.all_mixed && pts.size() >= 20;
      out["samples"] = probe.samples.size();
      return out;
    }
    if (c == "segre_symmetry") return segre_symmetry(entry_.manifold(e.subject), rng);
    if (c == "essential_finiteness") {
      const auto& m = entry_.manifold(e.subject);
      auto pts = generic_source_points(m, opt_.generic_samples, rng);
      pts.insert(pts.begin(), m.points.front());
      Json degrees = Json::array();
      for (const auto& p : pts) {
        auto ef = essential_finiteness(m.manifold, p, opt_.config);
        degrees.push_back(ef.finite ? Json(*ef.degree) : Json(nullptr));
      }
      if (!degrees.front().is_null()) {
        cross_check("inversion set of " + e.subject + " at " + format_point(pts.front()),
                    inversion_set(m.manifold, pts.front(), opt_.config).ideal, pts.front());
      }
      return constant_value(degrees, pts.size(), note);
    }
    if (c == "segre_map_injective") {
      const auto& m = entry_.manifold(e.subject);
      return segre_map_locally_injective(m.manifold, m.points.front(), opt_.config);
    }
    if (c == "minimality") {
      const auto& m = entry_.manifold(e.subject);
      auto res = minimality(m.manifold, m.points.front(), 0, opt_.config);
      Json out;
      out["status"] = to_string(res.status);
      if (res.j0) out["j0"] = *res.j0;
      out["dims"] = res.chain.dims;
      return out;
    }
    if (c == "fiber_degree") {
      const auto& cm = entry_.map(e.subject);
      const std::string dir = e.params.value("direction", "forward");
      const Correspondence& fwd = correspondence(e.subject);
      Correspondence use = dir == "reverse" ? transpose(fwd) : fwd;
      const auto& m = entry_.manifold(dir == "reverse" ? cm.target : cm.source);
      auto pts = usable_points(use, m, rng);
      Json degrees = Json::array();
      std::size_t checked = 0;
      for (const auto& p : pts) {
        auto fb = fiber(use, p, opt_.config);
        degrees.push_back(fb.degree);
        if (checked++ < opt_.oracle_systems) {
          cross_check(dir + " fiber of " + e.subject + " at " + format_point(p), fiber_ideal(use, p), p);
        }
      }
      return constant_value(degrees, opt_.generic_samples, note);
    }
    if (c == "invariance") {
      const auto& cm = entry_.map(e.subject);
      const auto& src = entry_.manifold(cm.source);
      auto rep = verify_invariance(src.manifold, entry_.manifold(cm.target).manifold, cm.map, src.points,
                                   opt_.invariance_points, opt_.segre_per_point, rng);
      Json out;
      out["passed"] = rep.passed() && rep.evaluations >= 500;
      out["evaluations"] = rep.evaluations;
      out["failures"] = rep.failures;
      out["manifold_points"] = rep.manifold_points;
      out["manifold_failures"] = rep.manifold_failures;
      return out;
    }
    if (c == "splits") {
      const auto& cm = entry_.map(e.subject);
      const Correspondence& corr = correspondence(e.subject);
      const auto& m = entry_.manifold(cm.source);
      std::vector<Point> pts;
      if (e.params.contains("point")) pts.push_back(m.points.at(e.params["point"].get<std::size_t>()));
      else pts = usable_points(corr, m, rng);
      Json values = Json::array();
      for (const auto& p : pts) values.push_back(splits(corr, p, opt_.config));
      return constant_value(values, pts.size() == 1 ? 1 : opt_.generic_samples, note);
    }
    throw InputError("unknown check '" + c + "'");
  }

  // Sampled points off the excluded locus of `c`.
  std::vector<Point> usable_points(const Correspondence& c, const CatalogManifold& m, Rng& rng) {
    auto pool = generic_source_points(m, 3 * opt_.generic_samples, rng);
    std::vector<Point> out;
    for (const auto& p : pool) {
      if (out.size() == opt_.generic_samples) break;
      bool bad = false;
      std::map<std::string, GaussianRational> values;
      for (std::size_t k = 0; k < p.size(); ++k) values[c.source_block[k]] = p[k];
      for (const auto& e : c.excluded) {
        auto support = e.support();
        bool source_only = std::all_of(support.begin(), support.end(), [&](std::size_t k) {
          return values.count(e.table()->name(k)) > 0;
        });
        if (source_only && eval(e, values).is_zero()) bad = true;
      }
      if (!bad) out.push_back(p);
    }
    return out;
  }

  // {"value": v, "samples": [...]} when every sample agrees; value is "varies" otherwise.
  static Json constant_value(const Json& samples, std::size_t wanted, std::string& note) {
    Json out;
    bool same = std::all_of(samples.begin(), samples.end(), [&](const Json& v) { return v == samples.front(); });
    if (samples.size() < wanted) {
      note = "only " + std::to_string(samples.size()) + " of " + std::to_string(wanted) + " samples available";
      out["value"] = "insufficient samples";
    } else {
      out["value"] = same ? samples.front() : Json("varies");
    }
    out["samples"] = samples;
    return out;
  }

  Json segre_symmetry(const CatalogManifold& m, Rng& rng) {
    std::size_t checked = 0;
    std::size_t violations = 0;
    for (const auto& [z, w] : sample_segre_pairs(m.manifold, m.points, opt_.symmetry_pairs, rng)) {
      ++checked;
      if (!in_segre(m.manifold, z, w) || !check_symmetry(m.manifold, z, w)) ++violations;
    }
    const std::size_t sampled = checked;
    auto on_m = sample_manifold_points(m.manifold, m.points, opt_.symmetry_pairs / 4, rng);
    for (std::size_t k = 0; k < opt_.symmetry_pairs; ++k) {
      Point z(m.manifold.n()), w(m.manifold.n());
      for (auto& c : z) c = random_gaussian(rng);
      for (auto& c : w) c = random_gaussian(rng);
      ++checked;
      if (!check_symmetry(m.manifold, z, w)) ++violations;
      if (in_segre(m.manifold, z, z) != m.manifold.contains(z)) ++violations;
    }
    for (const auto& p : on_m) {
      ++checked;
      if (!in_segre(m.manifold, p, p)) ++violations;
    }
    Json out;
    out["passed"] = violations == 0 && sampled >= opt_.symmetry_pairs;
    out["segre_pairs"] = sampled;
    out["checks"] = checked;
    out["violations"] = violations;
    return out;
  }

  const CatalogEntry& entry_;
  const SuiteOptions& opt_;
  SuiteReport report_;
  std::map<std::string, Correspondence> correspondences_;
};

}  // namespace

SuiteReport run_suite(const CatalogEntry& entry, const SuiteOptions& options) {
  return SuiteRunner(entry, options).run();
}

Json SuiteReport::to_json(bool timings) const {
  Json out;
  out["name"] = name;
  out["passed"] = passed;
  out["resource_limited"] = resource_limited;
  Json checks_json = Json::array();
  for (const auto& c : checks) {
    Json j;
    j["check"] = c.check;
    j["subject"] = c.subject;
    if (!c.params.empty()) j["params"] = c.params;
    j["provenance"] = c.provenance;
    j["expected"] = c.expected;
    j["actual"] = c.actual;
    j["passed"] = c.passed;
    if (!c.note.empty()) j["note"] = c.note;
    if (timings) j["seconds"] = c.seconds;
    checks_json.push_back(std::move(j));
  }
  out["checks"] = std::move(checks_json);
  Json oracle_json = Json::array();
  for (const auto& o : oracle) {
    Json j;
    j["system"] = o.system;
    j["exact_degree"] = o.exact_degree;
    j["exact_distinct"] = o.exact_distinct;
    j["numeric_count"] = o.numeric_count;
    j["max_residual"] = o.max_residual;
    j["agree"] = o.agree;
    oracle_json.push_back(std::move(j));
  }
  out["numeric_oracle"] = std::move(oracle_json);
  out["excluded_locus"] = excluded;
  if (timings) out["seconds"] = seconds;
  return out;
}

}  // namespace segrekit
