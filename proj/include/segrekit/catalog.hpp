#pragma once

#include <complex>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "segrekit/algebraic_map.hpp"
#include "segrekit/correspondence.hpp"
#include "segrekit/cr_manifold.hpp"

namespace segrekit {

using Json = nlohmann::ordered_json;

struct CatalogManifold {
  std::string id;
  std::string file;
  CRManifold manifold;
  std::vector<Point> points;
};

struct CatalogMap {
  std::string id;
  std::string file;
  std::string source;
  std::string target;
  AlgebraicMap map;
};

/// One expected value. `params` keeps the check-specific keys (point, conormal, direction).
struct Expectation {
  std::string check;
  std::string subject;
  Json params;
  Json value;
  std::string provenance;
};

struct CatalogEntry {
  std::string name;
  std::string description;
  std::vector<CatalogManifold> manifolds;
  std::vector<CatalogMap> maps;
  std::vector<Expectation> expected;

  const CatalogManifold& manifold(const std::string& id) const;
  const CatalogMap& map(const std::string& id) const;
};

/// SEGREKIT_CATALOG when set, else the catalog shipped with the sources.
std::filesystem::path default_catalog_dir();

/// Parses manifest.json and every referenced file. InputError on malformed data.
std::vector<CatalogEntry> load_catalog(const std::filesystem::path& dir = default_catalog_dir());
const CatalogEntry& find_entry(const std::vector<CatalogEntry>& entries, const std::string& name);

struct NumericOracleResult {
  std::size_t count = 0;       // distinct converged roots
  double max_residual = 0;     // over the distinct roots
  std::size_t starts = 0;
  std::size_t failures = 0;    // starts that did not converge
  std::vector<std::vector<std::complex<double>>> roots;
};

/// Damped Newton (least squares steps for overdetermined systems) from random
/// starts in [-box, box]^2 per coordinate; roots with residual below 1e-9 are
/// kept and deduplicated. A cross-check only, never a source of truth.
NumericOracleResult numeric_oracle(const std::vector<Poly>& system, double box, std::size_t samples,
                                   std::uint64_t seed);

struct SuiteOptions {
  std::uint64_t seed = 20161016;
  std::size_t generic_samples = 10;
  std::size_t symmetry_pairs = 200;
  std::size_t invariance_points = 60;
  std::size_t segre_per_point = 10;
  std::size_t oracle_starts = 120;
  std::size_t oracle_systems = 3;  // per check
  EngineConfig config;
};

struct CheckResult {
  std::string check;
  std::string subject;
  std::string provenance;
  Json params;
  Json expected;
  Json actual;
  bool passed = false;
  std::string note;
  double seconds = 0;
};

struct OracleRecord {
  std::string system;
  std::uint64_t exact_degree = 0;
  std::uint64_t exact_distinct = 0;
  std::size_t numeric_count = 0;
  double max_residual = 0;
  bool agree = false;
};

struct SuiteReport {
  std::string name;
  std::vector<CheckResult> checks;
  std::vector<OracleRecord> oracle;
  std::vector<std::string> excluded;
  bool passed = true;
  bool resource_limited = false;
  double seconds = 0;

  Json to_json(bool timings) const;
};

/// Runs every expectation of the entry plus the Segre symmetry check on each manifold.
SuiteReport run_suite(const CatalogEntry& entry, const SuiteOptions& options = {});

}  // namespace segrekit
