#include "coskel/engine.hpp"

#include <algorithm>
#include <sstream>

#include "coskel/bounds.hpp"
#include "coskel/errors.hpp"
#include "coskel/specparse.hpp"
#include "coskel/version.hpp"

namespace coskel {

namespace {

const char* to_string(Target t) {
  switch (t) {
    case Target::skeleton: return "skeleton";
    case Target::special_faces: return "special";
    case Target::surface: return "surface";
    case Target::neighborly: return "neighborly";
  }
  return "?";
}

// Families with distinct computation paths.
struct Classified {
  enum class Family { polygon_product, simplex_product, hetero_product, wedge };
  Family family = Family::hetero_product;
  std::string kind; // polygon | simplex | product | wedge
  int d = 0, m = 0;
  // polygon products
  int r_e = 0, r_o = 0;
  // products of identical simplices
  int n = 0;
  int r = 0; // factors (products) or gon size (wedge)
  std::optional<ProductType> product;
  std::optional<WedgeProductType> wedge;
};

Classified classify(const PolytopeType& p) {
  Classified c;
  c.d = poly_dim(p);
  c.m = poly_num_facets(p);
  if (const auto* w = std::get_if<WedgeProductType>(&p)) {
    c.family = Classified::Family::wedge;
    c.kind = "wedge";
    c.wedge = *w;
    c.r = w->gon();
    c.n = w->simplex_facets();
    return c;
  }
  c.kind = std::holds_alternative<PolygonType>(p)   ? "polygon"
           : std::holds_alternative<SimplexType>(p) ? "simplex"
                                                    : "product";
  c.product = as_product(p);
  c.r = c.product->num_factors();
  bool all_polygons = true, all_simplices = true;
  int common_n = -1;
  for (const FactorType& f : c.product->factors()) {
    if (const auto* poly = std::get_if<PolygonType>(&f)) {
      all_simplices = false;
      (poly->odd() ? c.r_o : c.r_e) += 1;
    } else {
      all_polygons = false;
      const int nf = std::get<SimplexType>(f).num_facets();
      if (common_n < 0) common_n = nf;
      if (nf != common_n) common_n = -2;
    }
  }
  if (all_polygons) {
    c.family = Classified::Family::polygon_product;
  } else if (all_simplices && common_n >= 2) {
    c.family = Classified::Family::simplex_product;
    c.n = common_n;
  } else {
    c.family = Classified::Family::hetero_product;
  }
  return c;
}

std::string face_type_to_string(const std::vector<int>& lambda) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (i) out << ',';
    out << lambda[i];
  }
  out << ')';
  return out.str();
}

void fill_from_certificate(PathOutcome& path, const ObstructionCertificate& cert) {
  path.ran = true;
  path.threshold_e = cert.threshold_e;
  path.obstructed = cert.obstructed;
  if (cert.bound) {
    path.edim_lower = cert.bound->edim_lower;
    path.edim_upper = cert.bound->edim_upper;
    path.sind = cert.bound->sind;
  }
  if (cert.face_type) path.face_type = cert.face_type;
  if (path.detail.empty()) path.detail = cert.note;
}

// Closed-form path for a query that already passed validation.
PathOutcome run_closed_form(const Classified& c, Target target, int k, int e) {
  PathOutcome path;
  path.applicable = true;
  switch (target) {
    case Target::skeleton: {
      if (c.family == Classified::Family::polygon_product) {
        ObstructionCertificate cert = obstruct_polygon_products(c.r_e, c.r_o, k, e);
        BoundResult bound;
        bound.source = BoundResult::Source::closed_form;
        bound.edim_lower = edim_lower_polygon_products(c.m, c.r_e, c.r_o, k);
        bound.edim_upper = edim_upper_polygon_products(c.m, c.r, c.r_e, k);
        if (*cert.threshold_e != bound.edim_lower + c.d - c.m + 2)
          throw consistency_error("size-free threshold disagrees with the "
                                  "concrete bound after cancellation");
        cert.m = c.m;
        cert.bound = bound;
        fill_from_certificate(path, cert);
      } else if (c.family == Classified::Family::simplex_product) {
        fill_from_certificate(path, obstruct_simplex_products(c.n, c.r, k, e));
      } else { // wedge
        fill_from_certificate(path, obstruct_wedge_skeleton(c.r, c.n, k, e));
      }
      break;
    }
    case Target::special_faces:
      fill_from_certificate(path, obstruct_wedge_special_faces(c.r, c.n, k, e));
      break;
    case Target::surface:
      fill_from_certificate(path, obstruct_wedge_surface(c.r, c.n, e));
      break;
    case Target::neighborly:
      fill_from_certificate(path, obstruct_neighborly_polygons(c.r_e, c.r_o, e));
      break;
  }
  return path;
}

// ILP path: knapsack over per-factor coskeleton indices.
PathOutcome run_ilp(const Classified& c, Target target, int k, int e) {
  PathOutcome path;
  path.applicable = true;
  KnapsackInstance inst;
  int lower = 0;
  int verdict_k = k;
  if (target == Target::skeleton &&
      c.family == Classified::Family::polygon_product) {
    inst = polygon_product_cost_instance(c.r_e, c.r_o, k);
    const KnapsackSolution sol = knapsack_bound(inst);
    if (!sol.feasible)
      throw consistency_error("polygon knapsack infeasible on a valid range");
    lower = c.m - 1 + static_cast<int>(sol.value); // value is -(cost)
    path.multiplicities = sol.multiplicities;
    path.detail = "cost optimum mu* = " + std::to_string(-sol.value) +
                  " over classes (even,0|odd,0|1|2)";
  } else {
    int n = 0, factors = 0, kk = 0;
    if (target == Target::skeleton &&
        c.family == Classified::Family::simplex_product) {
      n = c.n; factors = c.r; kk = k;
    } else if (target == Target::special_faces ||
               (target == Target::skeleton && k >= 2)) {
      n = c.n; factors = c.r; kk = k - 2;
    } else if (target == Target::skeleton) { // wedge, k in {0, 1}
      n = c.n; factors = c.r - 2 + k; kk = 0;
    } else { // surface
      n = c.n; factors = c.r - 1; kk = 0;
      verdict_k = 2;
    }
    inst = simplex_product_instance(n, factors, kk);
    const KnapsackSolution sol = knapsack_bound(inst);
    if (!sol.feasible)
      throw consistency_error("simplex knapsack infeasible on a valid range");
    lower = static_cast<int>(sol.value) + factors - 1;
    path.multiplicities = sol.multiplicities;
    path.detail = "index optimum s* = " + std::to_string(sol.value) + " over " +
                  std::to_string(factors) + " factors";
  }
  BoundResult bound;
  bound.source = BoundResult::Source::ilp;
  bound.edim_lower = lower;
  ObstructionCertificate cert = obstruction_verdict(c.d, c.m, verdict_k, e, bound);
  fill_from_certificate(path, cert);
  return path;
}

// Brute-force path: explicit complexes, minimal non-faces, exact coloring.
PathOutcome run_brute(const Classified& c, Target target, int k, int e,
                      const EngineOptions& opts) {
  PathOutcome path;
  path.applicable = true;
  ProductType certificate_product = [&] {
    if (c.family != Classified::Family::wedge) return *c.product;
    const int n = c.n;
    int factors = c.r;
    if (target == Target::surface) factors = c.r - 1;
    else if (target == Target::skeleton && k < 2) factors = c.r - 2 + k;
    std::vector<FactorType> fs(static_cast<std::size_t>(factors),
                               FactorType{SimplexType(n)});
    return ProductType(std::move(fs));
  }();
  const int cert_k = [&] {
    if (c.family != Classified::Family::wedge) return k;
    if (target == Target::surface || (target == Target::skeleton && k < 2)) return 0;
    return k - 2; // special faces, or skeleton with k >= 2
  }();

  int best = -2;
  std::vector<int> best_type;
  SarkariaDetail best_detail;
  for (const std::vector<int>& lambda : certificate_product.face_types(cert_k)) {
    const SarkariaDetail detail = sarkaria_index_detail(
        certificate_product.cotype_complex(lambda), opts.sarkaria);
    if (detail.sind > best) {
      best = detail.sind;
      best_type = lambda;
      best_detail = detail;
    }
  }
  BoundResult bound;
  bound.source = BoundResult::Source::brute_force;
  bound.edim_lower = best;
  bound.sind = best;
  const int verdict_k = target == Target::surface ? 2 : k;
  ObstructionCertificate cert = obstruction_verdict(c.d, c.m, verdict_k, e, bound);
  cert.face_type = best_type;
  fill_from_certificate(path, cert);
  path.nonface_count = best_detail.nonface_count;
  path.chromatic_number = best_detail.chromatic_number;
  path.detail = "best cotype " + face_type_to_string(best_type) + ": " +
                std::to_string(best_detail.nonface_count) +
                " minimal non-faces, chromatic number " +
                std::to_string(best_detail.chromatic_number);
  if (c.family == Classified::Family::wedge)
    path.detail += "; certificate complex of the embedded simplex product";
  return path;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw input_error(what);
}

} // namespace

const char* to_string(Mode m) {
  switch (m) {
    case Mode::closed_form: return "closed_form";
    case Mode::ilp: return "ilp";
    case Mode::brute_force: return "brute_force";
    case Mode::all: return "all";
  }
  return "?";
}

Mode mode_from_string(const std::string& s) {
  if (s == "closed_form") return Mode::closed_form;
  if (s == "ilp") return Mode::ilp;
  if (s == "brute_force") return Mode::brute_force;
  if (s == "all") return Mode::all;
  throw input_error("unknown mode '" + s +
                    "' (expected closed_form, ilp, brute_force or all)");
}

std::string render_target(Target t, std::optional<int> k) {
  std::string out = to_string(t);
  if (t == Target::skeleton || t == Target::special_faces) {
    out += ':';
    out += k ? std::to_string(*k) : std::string("?");
  }
  return out;
}

std::pair<Target, std::optional<int>> parse_target(const std::string& s) {
  auto with_k = [&](std::string_view prefix,
                    Target t) -> std::optional<std::pair<Target, std::optional<int>>> {
    if (s.size() <= prefix.size() || s.compare(0, prefix.size(), prefix) != 0 ||
        s[prefix.size()] != ':')
      return std::nullopt;
    const std::string num = s.substr(prefix.size() + 1);
    if (num.empty() || num.size() > 7 ||
        num.find_first_not_of("0123456789") != std::string::npos)
      throw input_error("target '" + s + "' needs a numeric dimension");
    return std::make_pair(t, std::optional<int>(std::stoi(num)));
  };
  if (auto r = with_k("skeleton", Target::skeleton)) return *r;
  if (auto r = with_k("special", Target::special_faces)) return *r;
  if (s == "surface") return {Target::surface, std::nullopt};
  if (s == "neighborly") return {Target::neighborly, std::nullopt};
  throw input_error("unknown target '" + s +
                    "' (expected skeleton:K, special:K, surface or neighborly)");
}

Report run_query(const Query& q, const EngineOptions& opts) {
  const PolytopeType p = parse_polytope_spec(q.spec);
  const Classified c = classify(p);

  Report rep;
  rep.engine_name = kEngineName;
  rep.engine_version = kEngineVersion;
  rep.schema_version = kReportSchemaVersion;
  rep.spec = q.spec;
  rep.target = q.target;
  rep.k = q.k;
  rep.e = q.e;
  rep.mode = q.mode;
  rep.canonical_spec = render_polytope_spec(p);
  rep.kind = c.kind;
  rep.d = c.d;
  rep.m = c.m;

  require(q.e >= 0, "target dimension e must be nonnegative");
  const bool is_wedge = c.family == Classified::Family::wedge;
  int k = 0;
  switch (q.target) {
    case Target::skeleton:
      require(q.k.has_value(), "skeleton target needs a dimension k");
      k = *q.k;
      require(k >= 0 && k < c.d, "skeleton target needs 0 <= k < d");
      break;
    case Target::special_faces:
      require(is_wedge, "special-face targets only apply to wedge products");
      require(q.k.has_value(), "special target needs a dimension k");
      k = *q.k;
      require(k >= 2 && k < c.d, "special target needs 2 <= k < d");
      break;
    case Target::surface:
      require(is_wedge, "surface targets only apply to wedge products");
      break;
    case Target::neighborly:
      require(c.family == Classified::Family::polygon_product,
              "neighborly targets only apply to products of polygons");
      require(q.e >= 2, "neighborliness needs e >= 2");
      require(q.e / 2 - 1 < 2 * c.r,
              "required skeleton exceeds the product dimension");
      break;
  }

  // Applicability matrix.
  bool can_closed = true, can_ilp = true, can_brute = true;
  if (q.target == Target::neighborly) {
    // the published conditions are a corollary shape, not a k-threshold
    can_ilp = can_brute = false;
  } else if (c.family == Classified::Family::hetero_product) {
    can_closed = can_ilp = false; // closed forms need one factor family
  }
  bool available = true;
  std::string unavailable_note;
  if (is_wedge) {
    if (c.r == 3) {
      available = false;
      unavailable_note = "no obstruction available: the triangle wedge has no "
                         "certificate complex";
    } else if (q.target == Target::surface && c.n == 2) {
      available = false;
      unavailable_note = "no obstruction available: the digon wedge surface "
                         "has no certificate complex";
    }
  }

  rep.closed_form.applicable = can_closed;
  rep.ilp.applicable = can_ilp;
  rep.brute_force.applicable = can_brute;

  if (!available) {
    // one consistent outcome across every path; nothing to compute
    rep.obstruction_available = false;
    rep.obstructed = false;
    rep.note = unavailable_note;
    rep.closed_form.detail = rep.ilp.detail = rep.brute_force.detail =
        unavailable_note;
    return rep;
  }

  const bool want_closed =
      can_closed && (q.mode == Mode::all || q.mode == Mode::closed_form);
  const bool want_ilp = can_ilp && (q.mode == Mode::all || q.mode == Mode::ilp);
  const bool want_brute =
      can_brute && (q.mode == Mode::all || q.mode == Mode::brute_force);
  if (q.mode == Mode::closed_form && !can_closed)
    throw input_error("closed_form mode is not applicable here; "
                      "use brute_force or all");
  if (q.mode == Mode::ilp && !can_ilp)
    throw input_error("ilp mode is not applicable here; use brute_force or all");
  if (q.mode == Mode::brute_force && !can_brute)
    throw input_error("brute_force mode is not applicable here; "
                      "use closed_form or all");

  if (want_closed) rep.closed_form = run_closed_form(c, q.target, k, q.e);
  if (want_ilp) rep.ilp = run_ilp(c, q.target, k, q.e);
  if (want_brute) {
    try {
      rep.brute_force = run_brute(c, q.target, k, q.e, opts);
    } catch (const resource_error& err) {
      if (q.mode == Mode::brute_force) throw;
      rep.brute_force.applicable = true;
      rep.brute_force.ran = false;
      rep.brute_force.detail = std::string("resource guard: ") + err.what();
    }
  }
  if (!want_closed && can_closed) rep.closed_form.detail = "not requested";
  if (!want_ilp && can_ilp) rep.ilp.detail = "not requested";
  if (!want_brute && can_brute) rep.brute_force.detail = "not requested";

  // Verdict and agreement.
  const PathOutcome* primary = nullptr;
  for (const PathOutcome* path : {&rep.closed_form, &rep.ilp, &rep.brute_force}) {
    if (!path->ran) continue;
    if (!primary) primary = path;
    const bool same_verdict = path->obstructed == primary->obstructed;
    const bool same_threshold =
        !path->threshold_e || !primary->threshold_e ||
        *path->threshold_e == *primary->threshold_e;
    if (!same_verdict || !same_threshold) {
      rep.agreement = false;
      std::ostringstream msg;
      msg << "computation paths disagree on " << rep.canonical_spec
          << " target " << render_target(q.target, q.k) << " e=" << q.e << ": ";
      for (const PathOutcome* pp : {&rep.closed_form, &rep.ilp, &rep.brute_force})
        if (pp->ran && pp->obstructed)
          msg << (pp->obstructed.value() ? "obstructed" : "unobstructed")
              << "(threshold "
              << (pp->threshold_e ? std::to_string(*pp->threshold_e) : "-")
              << ") ";
      throw consistency_error(msg.str());
    }
  }
  if (!primary)
    throw resource_error("no computation path produced a result");
  rep.obstructed = primary->obstructed;
  rep.threshold_e = primary->threshold_e;
  rep.note = primary->detail;
  return rep;
}

namespace {

using nlohmann::ordered_json;

ordered_json opt_json(const std::optional<int>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}
ordered_json opt_json(const std::optional<std::int64_t>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}
ordered_json opt_json(const std::optional<bool>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}
ordered_json opt_json(const std::optional<std::vector<int>>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

ordered_json path_to_json(const PathOutcome& p) {
  ordered_json j;
  j["applicable"] = p.applicable;
  j["ran"] = p.ran;
  j["edim_lower"] = opt_json(p.edim_lower);
  j["edim_upper"] = opt_json(p.edim_upper);
  j["sind"] = opt_json(p.sind);
  j["threshold_e"] = opt_json(p.threshold_e);
  j["obstructed"] = opt_json(p.obstructed);
  j["face_type"] = opt_json(p.face_type);
  j["multiplicities"] = opt_json(p.multiplicities);
  j["nonface_count"] = opt_json(p.nonface_count);
  j["chromatic_number"] = opt_json(p.chromatic_number);
  j["detail"] = p.detail;
  return j;
}

template <typename T>
std::optional<T> opt_from(const ordered_json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<T>();
}

PathOutcome path_from_json(const ordered_json& j) {
  PathOutcome p;
  p.applicable = j.at("applicable").get<bool>();
  p.ran = j.at("ran").get<bool>();
  p.edim_lower = opt_from<int>(j.at("edim_lower"));
  p.edim_upper = opt_from<int>(j.at("edim_upper"));
  p.sind = opt_from<int>(j.at("sind"));
  p.threshold_e = opt_from<int>(j.at("threshold_e"));
  p.obstructed = opt_from<bool>(j.at("obstructed"));
  p.face_type = opt_from<std::vector<int>>(j.at("face_type"));
  p.multiplicities = opt_from<std::vector<int>>(j.at("multiplicities"));
  p.nonface_count = opt_from<std::int64_t>(j.at("nonface_count"));
  p.chromatic_number = opt_from<int>(j.at("chromatic_number"));
  p.detail = j.at("detail").get<std::string>();
  return p;
}

} // namespace

nlohmann::ordered_json report_to_json(const Report& r) {
  ordered_json j;
  j["schema_version"] = r.schema_version;
  j["engine"] = {{"name", r.engine_name}, {"version", r.engine_version}};
  j["query"] = {{"spec", r.spec},
                {"target", render_target(r.target, r.k)},
                {"e", r.e},
                {"mode", to_string(r.mode)}};
  j["polytope"] = {{"spec", r.canonical_spec},
                   {"kind", r.kind},
                   {"d", r.d},
                   {"m", r.m}};
  j["paths"] = {{"closed_form", path_to_json(r.closed_form)},
                {"ilp", path_to_json(r.ilp)},
                {"brute_force", path_to_json(r.brute_force)}};
  j["verdict"] = {{"obstruction_available", r.obstruction_available},
                  {"obstructed", opt_json(r.obstructed)},
                  {"threshold_e", opt_json(r.threshold_e)},
                  {"agreement", r.agreement},
                  {"note", r.note}};
  return j;
}

Report report_from_json(const nlohmann::ordered_json& j) {
  Report r;
  r.schema_version = j.at("schema_version").get<std::string>();
  r.engine_name = j.at("engine").at("name").get<std::string>();
  r.engine_version = j.at("engine").at("version").get<std::string>();
  r.spec = j.at("query").at("spec").get<std::string>();
  const auto [target, k] =
      parse_target(j.at("query").at("target").get<std::string>());
  r.target = target;
  r.k = k;
  r.e = j.at("query").at("e").get<int>();
  r.mode = mode_from_string(j.at("query").at("mode").get<std::string>());
  r.canonical_spec = j.at("polytope").at("spec").get<std::string>();
  r.kind = j.at("polytope").at("kind").get<std::string>();
  r.d = j.at("polytope").at("d").get<int>();
  r.m = j.at("polytope").at("m").get<int>();
  r.closed_form = path_from_json(j.at("paths").at("closed_form"));
  r.ilp = path_from_json(j.at("paths").at("ilp"));
  r.brute_force = path_from_json(j.at("paths").at("brute_force"));
  r.obstruction_available = j.at("verdict").at("obstruction_available").get<bool>();
  r.obstructed = opt_from<bool>(j.at("verdict").at("obstructed"));
  r.threshold_e = opt_from<int>(j.at("verdict").at("threshold_e"));
  r.agreement = j.at("verdict").at("agreement").get<bool>();
  r.note = j.at("verdict").at("note").get<std::string>();
  return r;
}

namespace {

std::string cell(const std::optional<int>& v) {
  return v ? std::to_string(*v) : std::string("-");
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

} // namespace

std::string render_report_table(const Report& r) {
  std::ostringstream out;
  out << "spec:      " << r.canonical_spec << "\n";
  out << "query:     target=" << render_target(r.target, r.k) << "  e=" << r.e
      << "  mode=" << to_string(r.mode) << "\n";
  out << "polytope:  kind=" << r.kind << "  d=" << r.d << "  m=" << r.m << "\n";
  if (!r.obstruction_available) {
    out << "verdict:   " << r.note << "\n";
    return out.str();
  }
  out << "verdict:   "
      << (r.obstructed.value_or(false) ? "OBSTRUCTED" : "not obstructed");
  if (r.threshold_e) out << "  (obstructed for all e < " << *r.threshold_e << ")";
  out << "  agreement=" << (r.agreement ? "yes" : "NO") << "\n";
  if (!r.note.empty()) out << "note:      " << r.note << "\n";
  out << pad("path", 12) << pad("ran", 5) << pad("edim>=", 8) << pad("edim<=", 8)
      << pad("sind", 6) << pad("thr_e", 7) << pad("obstr", 7) << "detail\n";
  const std::pair<const char*, const PathOutcome*> rows[] = {
      {"closed_form", &r.closed_form},
      {"ilp", &r.ilp},
      {"brute_force", &r.brute_force}};
  for (const auto& [name, p] : rows) {
    out << pad(name, 12) << pad(p->ran ? "yes" : "no", 5)
        << pad(cell(p->edim_lower), 8) << pad(cell(p->edim_upper), 8)
        << pad(cell(p->sind), 6) << pad(cell(p->threshold_e), 7)
        << pad(!p->obstructed ? "-" : (*p->obstructed ? "yes" : "no"), 7)
        << p->detail << "\n";
  }
  return out.str();
}

} // namespace coskel
