#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "coskel/kneser.hpp"
#include "coskel/obstructions.hpp"
#include "coskel/polytopes.hpp"

namespace coskel {

enum class Target { skeleton, special_faces, surface, neighborly };
enum class Mode { closed_form, ilp, brute_force, all };

const char* to_string(Mode m);
Mode mode_from_string(const std::string& s);

// Targets render as "skeleton:K", "special:K", "surface", "neighborly".
std::string render_target(Target t, std::optional<int> k);
std::pair<Target, std::optional<int>> parse_target(const std::string& s);

struct Query {
  std::string spec;
  Target target = Target::skeleton;
  std::optional<int> k; // required for skeleton and special targets
  int e = 0;
  Mode mode = Mode::all;
};

struct EngineOptions {
  SarkariaOptions sarkaria; // guards for the brute-force path
};

// One computation path's contribution to a report.  applicable says the path
// is defined for the query's family and target; ran says it produced numbers
// (it may be skipped when another mode was requested, or stopped by a
// resource guard, with the reason in detail).
struct PathOutcome {
  bool applicable = false;
  bool ran = false;
  std::string detail;
  std::optional<int> edim_lower;
  std::optional<int> edim_upper;
  std::optional<int> sind;
  std::optional<int> threshold_e;
  std::optional<bool> obstructed;
  std::optional<std::vector<int>> face_type;      // brute force: best cotype
  std::optional<std::vector<int>> multiplicities; // ilp: best class counts
  std::optional<std::int64_t> nonface_count;      // brute force
  std::optional<int> chromatic_number;            // brute force
};

struct Report {
  std::string engine_name;
  std::string engine_version;
  std::string schema_version;
  // query echo
  std::string spec;
  Target target = Target::skeleton;
  std::optional<int> k;
  int e = 0;
  Mode mode = Mode::all;
  // polytope summary
  std::string canonical_spec;
  std::string kind; // polygon | simplex | product | wedge
  int d = 0;
  int m = 0;
  // computation paths
  PathOutcome closed_form;
  PathOutcome ilp;
  PathOutcome brute_force;
  // combined verdict
  bool obstruction_available = true;
  std::optional<bool> obstructed;
  std::optional<int> threshold_e;
  bool agreement = true;
  std::string note;
};

// Runs every applicable path (or just the requested one), checks that all
// paths that ran agree on the verdict, and assembles the report.  Disagreement
// raises consistency_error; a resource guard on a single-mode query raises
// resource_error, while under mode=all it only annotates the path.
Report run_query(const Query& q, const EngineOptions& opts = {});

nlohmann::ordered_json report_to_json(const Report& r);
Report report_from_json(const nlohmann::ordered_json& j);
std::string render_report_table(const Report& r);

} // namespace coskel
