#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "coskel/engine.hpp"
#include "coskel/errors.hpp"
#include "coskel/kneser.hpp"
#include "coskel/polytopes.hpp"
#include "coskel/specparse.hpp"
#include "coskel/verify.hpp"
#include "coskel/version.hpp"

namespace {

using nlohmann::ordered_json;

struct GuardFlags {
  int coloring_budget = 64;
  int ground_limit = 24;
  std::uint64_t work_limit = std::uint64_t{1} << 22;

  void attach(CLI::App* cmd) {
    cmd->add_option("--coloring-budget", coloring_budget,
                    "largest Kneser graph the exact coloring solver accepts")
        ->capture_default_str();
    cmd->add_option("--ground-limit", ground_limit,
                    "largest ground set enumerated by the exhaustive non-face table")
        ->capture_default_str();
    cmd->add_option("--work-limit", work_limit,
                    "cap on partial transversals in the non-face enumeration")
        ->capture_default_str();
  }

  coskel::EngineOptions engine_options() const {
    coskel::EngineOptions eo;
    eo.sarkaria.coloring.budget = coloring_budget;
    eo.sarkaria.nonface.exhaustive_ground_limit = ground_limit;
    eo.sarkaria.nonface.work_limit = work_limit;
    return eo;
  }
};

ordered_json faces_to_json(const std::vector<coskel::Face>& faces) {
  ordered_json arr = ordered_json::array();
  for (const coskel::Face& f : faces) arr.push_back(f.elements());
  return arr;
}

std::string face_display(const coskel::GroundSet& g, const coskel::Face& f) {
  if (!g.has_labels()) return coskel::to_string(f);
  std::string out = "{";
  bool first = true;
  for (int i : f.elements()) {
    if (!first) out += ' ';
    out += g.label(i);
    first = false;
  }
  return out + "}";
}

ordered_json engine_stamp() {
  return ordered_json{{"name", coskel::kEngineName},
                      {"version", coskel::kEngineVersion}};
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto pos = text.find("..");
  if (pos == std::string::npos)
    throw coskel::input_error("range must look like A..B, got '" + text + "'");
  int a = 0, b = 0;
  try {
    a = std::stoi(text.substr(0, pos));
    b = std::stoi(text.substr(pos + 2));
  } catch (const std::logic_error&) {
    throw coskel::input_error("range must look like A..B, got '" + text + "'");
  }
  if (a > b)
    throw coskel::input_error("empty range '" + text + "'");
  return {a, b};
}

std::vector<int> parse_cotype(const std::string& text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const std::string piece =
        text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    try {
      out.push_back(std::stoi(piece));
    } catch (const std::logic_error&) {
      throw coskel::input_error("cotype must be a comma-separated list of "
                                "integers, got '" + text + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

void cmd_obstruct(const std::string& spec, const std::string& target, int e,
                  const std::string& mode, const std::string& format,
                  const GuardFlags& guards) {
  coskel::Query q;
  q.spec = spec;
  std::tie(q.target, q.k) = coskel::parse_target(target);
  q.e = e;
  q.mode = coskel::mode_from_string(mode);
  const coskel::Report rep = coskel::run_query(q, guards.engine_options());
  if (format == "json")
    std::cout << coskel::report_to_json(rep).dump(2) << '\n';
  else
    std::cout << coskel::render_report_table(rep);
}

void cmd_coskeleton(const std::string& spec, int k, const std::string& what,
                    const std::string& format, const GuardFlags& guards) {
  const coskel::PolytopeType p = coskel::parse_polytope_spec(spec);
  const coskel::SimplicialComplex c = coskel::coskeleton(p, k);
  if (format == "table") {
    std::cout << "spec: " << coskel::render_polytope_spec(p) << "\nk: " << k
              << "\nm: " << c.ground_size() << "\ndim: " << c.dim() << '\n';
    if (what == "facets") {
      std::cout << "facets (" << c.facets().size() << "):\n";
      for (const coskel::Face& f : c.facets())
        std::cout << "  " << face_display(c.ground(), f) << '\n';
    } else if (what == "fvector") {
      std::cout << "f-vector:";
      for (std::int64_t v : c.f_vector()) std::cout << ' ' << v;
      std::cout << "\neuler characteristic: " << c.euler_characteristic() << '\n';
    } else {
      const auto nf = c.minimal_non_faces(guards.engine_options().sarkaria.nonface);
      std::cout << "minimal non-faces (" << nf.size() << "):\n";
      for (const coskel::Face& f : nf)
        std::cout << "  " << face_display(c.ground(), f) << '\n';
    }
    return;
  }
  ordered_json out;
  out["schema_version"] = coskel::kReportSchemaVersion;
  out["engine"] = engine_stamp();
  out["spec"] = spec;
  out["canonical_spec"] = coskel::render_polytope_spec(p);
  out["k"] = k;
  out["m"] = c.ground_size();
  out["dim"] = c.dim();
  if (c.ground().has_labels()) out["labels"] = c.ground().labels();
  if (what == "facets") {
    out["facet_count"] = c.facets().size();
    out["facets"] = faces_to_json(c.facets());
  } else if (what == "fvector") {
    out["f_vector"] = c.f_vector();
    out["euler_characteristic"] = c.euler_characteristic();
  } else {
    const auto nf = c.minimal_non_faces(guards.engine_options().sarkaria.nonface);
    out["nonface_count"] = nf.size();
    out["minimal_non_faces"] = faces_to_json(nf);
  }
  std::cout << out.dump(2) << '\n';
}

void cmd_sarkaria(const std::string& spec, std::optional<int> k,
                  const std::string& cotype, const std::string& format,
                  const GuardFlags& guards) {
  const coskel::PolytopeType p = coskel::parse_polytope_spec(spec);
  coskel::SimplicialComplex c;
  std::string which;
  if (k.has_value()) {
    c = coskel::coskeleton(p, *k);
    which = "coskeleton:" + std::to_string(*k);
  } else {
    const coskel::ProductType prod = coskel::as_product(p);
    c = prod.cotype_complex(parse_cotype(cotype));
    which = "cotype:" + cotype;
  }
  const coskel::SarkariaDetail detail =
      coskel::sarkaria_index_detail(c, guards.engine_options().sarkaria);
  if (format == "table") {
    std::cout << "spec: " << coskel::render_polytope_spec(p) << "\ncomplex: "
              << which << "\nm: " << detail.ground << "\nminimal non-faces: "
              << detail.nonface_count << "\nchromatic number: "
              << detail.chromatic_number << "\nsarkaria index: " << detail.sind
              << '\n';
    return;
  }
  ordered_json out;
  out["schema_version"] = coskel::kReportSchemaVersion;
  out["engine"] = engine_stamp();
  out["spec"] = spec;
  out["canonical_spec"] = coskel::render_polytope_spec(p);
  out["complex"] = which;
  out["m"] = detail.ground;
  out["nonface_count"] = detail.nonface_count;
  out["chromatic_number"] = detail.chromatic_number;
  out["sind"] = detail.sind;
  std::cout << out.dump(2) << '\n';
}

int cmd_verify(const std::string& scope) {
  const std::vector<coskel::CheckResult> results = coskel::verify_suite(scope);
  int failed = 0;
  for (const coskel::CheckResult& r : results) {
    if (r.passed) {
      std::cout << "PASS " << r.name << '\n';
    } else {
      ++failed;
      std::cout << "FAIL " << r.name << ": " << r.detail << '\n';
    }
  }
  std::cout << results.size() << " checks, " << failed << " failed\n";
  return failed == 0 ? 0 : 1;
}

void cmd_sweep(const std::string& spec, const std::string& target,
               const std::string& e_range, const std::string& k_range,
               const std::string& mode, const std::string& format,
               const GuardFlags& guards) {
  const auto [e_lo, e_hi] = parse_range(e_range);
  coskel::Target tgt;
  std::vector<std::optional<int>> ks;
  if (!k_range.empty()) {
    if (target == "skeleton")
      tgt = coskel::Target::skeleton;
    else if (target == "special")
      tgt = coskel::Target::special_faces;
    else
      throw coskel::input_error(
          "--k-range needs a bare 'skeleton' or 'special' target, got '" +
          target + "'");
    const auto [k_lo, k_hi] = parse_range(k_range);
    for (int k = k_lo; k <= k_hi; ++k) ks.emplace_back(k);
  } else {
    const auto [t, k] = coskel::parse_target(target);
    tgt = t;
    ks.push_back(k);
  }
  const coskel::EngineOptions opts = guards.engine_options();
  ordered_json rows = ordered_json::array();
  std::string canonical;
  for (const std::optional<int>& k : ks) {
    for (int e = e_lo; e <= e_hi; ++e) {
      coskel::Query q;
      q.spec = spec;
      q.target = tgt;
      q.k = k;
      q.e = e;
      q.mode = coskel::mode_from_string(mode);
      const coskel::Report rep = coskel::run_query(q, opts);
      canonical = rep.canonical_spec;
      ordered_json row;
      row["target"] = coskel::render_target(tgt, k);
      row["e"] = e;
      row["obstruction_available"] = rep.obstruction_available;
      row["obstructed"] =
          rep.obstructed.has_value() ? ordered_json(*rep.obstructed) : nullptr;
      row["threshold_e"] =
          rep.threshold_e.has_value() ? ordered_json(*rep.threshold_e) : nullptr;
      rows.push_back(std::move(row));
    }
  }
  if (format == "table") {
    std::cout << "spec: " << canonical << "  mode: " << mode << '\n';
    std::cout << "target        e   obstructed  threshold_e\n";
    for (const auto& row : rows) {
      std::string t = row["target"].get<std::string>();
      t.resize(12, ' ');
      std::string ob = row["obstructed"].is_null()
                           ? "n/a"
                           : (row["obstructed"].get<bool>() ? "yes" : "no");
      ob.resize(10, ' ');
      std::string th =
          row["threshold_e"].is_null()
              ? "n/a"
              : std::to_string(row["threshold_e"].get<int>());
      std::string e_str = std::to_string(row["e"].get<int>());
      e_str.resize(3, ' ');
      std::cout << t << "  " << e_str << " " << ob << "  " << th << '\n';
    }
    return;
  }
  ordered_json out;
  out["schema_version"] = coskel::kReportSchemaVersion;
  out["engine"] = engine_stamp();
  out["spec"] = spec;
  out["canonical_spec"] = canonical;
  out["mode"] = mode;
  out["rows"] = std::move(rows);
  std::cout << out.dump(2) << '\n';
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"coskel: topological obstructions to skeleton-preserving "
               "projections of product-type polytopes"};
  app.require_subcommand(1);

  const auto format_validator = CLI::IsMember({"json", "table"});
  const auto mode_validator =
      CLI::IsMember({"all", "closed_form", "ilp", "brute_force"});

  // obstruct
  std::string ob_spec, ob_target, ob_mode = "all", ob_format = "json";
  int ob_e = 0;
  GuardFlags ob_guards;
  CLI::App* obstruct =
      app.add_subcommand("obstruct", "decide whether a projection to e-space "
                                     "can keep the chosen faces");
  obstruct->add_option("spec", ob_spec, "polytope spec, e.g. product:(polygon:5,polygon:5)")
      ->required();
  obstruct->add_option("--target", ob_target,
                       "skeleton:K, special:K, surface or neighborly")
      ->required();
  obstruct->add_option("--e", ob_e, "dimension of the projection's image")->required();
  obstruct->add_option("--mode", ob_mode, "computation path")
      ->check(mode_validator)
      ->capture_default_str();
  obstruct->add_option("--format", ob_format, "output format")
      ->check(format_validator)
      ->capture_default_str();
  ob_guards.attach(obstruct);
  obstruct->callback(
      [&] { cmd_obstruct(ob_spec, ob_target, ob_e, ob_mode, ob_format, ob_guards); });

  // coskeleton
  std::string co_spec, co_out = "facets", co_format = "json";
  int co_k = 0;
  GuardFlags co_guards;
  CLI::App* cosk = app.add_subcommand(
      "coskeleton", "print the complex generated by complements of k-face "
                    "incidence sets");
  cosk->add_option("spec", co_spec, "polytope spec")->required();
  cosk->add_option("--k", co_k, "face dimension, -1 through dim")->required();
  cosk->add_option("--out", co_out, "what to print")
      ->check(CLI::IsMember({"facets", "fvector", "nonfaces"}))
      ->capture_default_str();
  cosk->add_option("--format", co_format, "output format")
      ->check(format_validator)
      ->capture_default_str();
  co_guards.attach(cosk);
  cosk->callback([&] { cmd_coskeleton(co_spec, co_k, co_out, co_format, co_guards); });

  // sarkaria
  std::string sa_spec, sa_cotype, sa_format = "json";
  int sa_k = 0;
  GuardFlags sa_guards;
  CLI::App* sark = app.add_subcommand(
      "sarkaria", "Sarkaria index of a coskeleton or of one cotype complex");
  sark->add_option("spec", sa_spec, "polytope spec")->required();
  CLI::Option* sa_k_opt = sark->add_option("--k", sa_k, "coskeleton dimension");
  CLI::Option* sa_ct_opt =
      sark->add_option("--cotype", sa_cotype,
                       "comma-separated face type, one entry per factor");
  sa_k_opt->excludes(sa_ct_opt);
  sa_ct_opt->excludes(sa_k_opt);
  sark->add_option("--format", sa_format, "output format")
      ->check(format_validator)
      ->capture_default_str();
  sa_guards.attach(sark);
  sark->callback([&] {
    if (sa_k_opt->count() == 0 && sa_ct_opt->count() == 0)
      throw coskel::input_error("sarkaria needs either --k or --cotype");
    cmd_sarkaria(sa_spec,
                 sa_k_opt->count() ? std::optional<int>(sa_k) : std::nullopt,
                 sa_cotype, sa_format, sa_guards);
  });

  // verify
  std::string ve_scope = "all";
  int verify_rc = 0;
  CLI::App* verify = app.add_subcommand("verify", "run the self-check suite");
  verify->add_option("--scope", ve_scope,
                     "all, simplicial_core, polytope_types, kneser_coloring, "
                     "obstruction_engine or cli_reports")
      ->capture_default_str();
  verify->callback([&] { verify_rc = cmd_verify(ve_scope); });

  // sweep
  std::string sw_spec, sw_target, sw_e_range, sw_k_range, sw_mode = "closed_form",
                                                          sw_format = "json";
  GuardFlags sw_guards;
  CLI::App* sweep = app.add_subcommand(
      "sweep", "tabulate verdicts over ranges of e (and optionally k)");
  sweep->add_option("spec", sw_spec, "polytope spec")->required();
  sweep->add_option("--target", sw_target,
                    "as in obstruct; bare skeleton/special with --k-range")
      ->required();
  sweep->add_option("--e-range", sw_e_range, "inclusive range A..B")->required();
  sweep->add_option("--k-range", sw_k_range, "inclusive range C..D");
  sweep->add_option("--mode", sw_mode, "computation path")
      ->check(mode_validator)
      ->capture_default_str();
  sweep->add_option("--format", sw_format, "output format")
      ->check(format_validator)
      ->capture_default_str();
  sw_guards.attach(sweep);
  sweep->callback([&] {
    cmd_sweep(sw_spec, sw_target, sw_e_range, sw_k_range, sw_mode, sw_format,
              sw_guards);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const coskel::input_error& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 2;
  } catch (const coskel::resource_error& e) {
    std::cerr << "resource guard: " << e.what() << '\n';
    return 3;
  } catch (const coskel::consistency_error& e) {
    std::cerr << "consistency failure: " << e.what() << '\n';
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 4;
  }
  return verify_rc;
}
