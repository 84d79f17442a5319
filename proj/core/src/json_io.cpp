#include "thetamirror/json_io.hpp"

#include <fstream>
#include <sstream>

namespace thetamirror::io {

namespace {

const json& field(const json& j, const char* key) {
  require(j.is_object() && j.contains(key), "malformed-json",
          std::string("missing field '") + key + "'");
  return j.at(key);
}

template <class T>
T get(const json& j, const char* key) {
  try {
    return field(j, key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    fail("malformed-json", std::string("field '") + key + "': " + e.what());
  }
}

std::vector<std::int64_t> ints(const json& j) {
  require(j.is_array(), "malformed-json", "expected an integer array");
  std::vector<std::int64_t> out;
  for (const auto& x : j) {
    require(x.is_number_integer(), "malformed-json", "expected an integer");
    out.push_back(x.get<std::int64_t>());
  }
  return out;
}

std::size_t index_of(const std::vector<std::string>& names, const std::string& n,
                     const char* what) {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == n) return i;
  fail("malformed-json", std::string("unknown ") + what + " '" + n + "'");
}

std::vector<std::size_t> name_list(const json& j, const std::vector<std::string>& names) {
  require(j.is_array(), "malformed-json", "expected a list of component names");
  std::vector<std::size_t> out;
  for (const auto& x : j) {
    require(x.is_string(), "malformed-json", "expected a component name");
    out.push_back(index_of(names, x.get<std::string>(), "component"));
  }
  return out;
}

json names_of(const std::vector<std::size_t>& idx, const std::vector<std::string>& names) {
  json a = json::array();
  for (auto i : idx) a.push_back(names.at(i));
  return a;
}

json rational_point(const RationalPoint& x) {
  json a = json::array();
  for (const auto& v : x) a.push_back(rational_to_json(v));
  return a;
}

json lattice(const LatticeVector& v) { return json(v.values()); }

}  // namespace

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail("malformed-json", e.what());
  }
}

json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), "malformed-json", "cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

void check_header(const json& j, std::string_view kind) {
  require(j.is_object(), "malformed-json", "top level must be an object");
  require(j.contains("schema_version") && j["schema_version"].is_number_integer(),
          "schema-version", "missing schema_version");
  const int v = j["schema_version"].get<int>();
  require(v == schema_version, "schema-version",
          "schema_version " + std::to_string(v) + " is not supported");
  const auto k = get<std::string>(j, "kind");
  require(k == kind, "malformed-json", "expected kind '" + std::string(kind) + "', got '" + k + "'");
}

json header(std::string_view kind) {
  json j = json::object();
  j["schema_version"] = schema_version;
  j["kind"] = std::string(kind);
  return j;
}

json rational_to_json(const Rational& x) {
  if (x.get_den() == 1 && x.get_num().fits_slong_p()) return x.get_num().get_si();
  return to_string(x);
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<std::int64_t>()));
  require(j.is_string(), "malformed-json", "a rational is an integer or a string 'a/b'");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const Error& e) {
    fail("malformed-json", e.what());
  }
}

json class_to_json(const ClassVector& beta, const std::vector<std::string>& names) {
  json o = json::object();
  for (std::size_t i = 0; i < beta.size(); ++i)
    if (beta[i] != 0) o[names.at(i)] = beta[i];
  return o;
}

ClassVector class_from_json(const json& j, const std::vector<std::string>& names) {
  ClassVector beta(names.size());
  if (j.is_array()) {
    auto v = ints(j);
    require(v.size() == names.size(), "dimension-mismatch", "class vector has wrong length");
    return ClassVector(std::move(v));
  }
  require(j.is_object(), "malformed-json", "a class is an object {name: coefficient}");
  for (const auto& [k, v] : j.items()) {
    require(v.is_number_integer(), "malformed-json", "class coefficients are integers");
    beta[index_of(names, k, "class")] += v.get<std::int64_t>();
  }
  return beta;
}

LatticeVector lattice_from_json(const json& j, std::size_t rank) {
  auto v = ints(j);
  require(v.size() == rank, "dimension-mismatch",
          "expected a vector of length " + std::to_string(rank));
  return LatticeVector(std::move(v));
}

// ---- pair ----

PairDescriptor pair_from_json(const json& j) {
  check_header(j, "pair");
  PairDescriptor p;
  p.name = j.value("name", std::string());
  p.dimension = get<std::size_t>(j, "dimension");
  p.components = get<std::vector<std::string>>(j, "components");
  for (const auto& s : field(j, "strata")) p.strata.push_back(name_list(s, p.components));
  if (j.contains("empty_intersections"))
    for (const auto& s : j["empty_intersections"])
      p.empty_intersections.push_back(name_list(s, p.components));
  p.class_names = j.contains("class_names") ? get<std::vector<std::string>>(j, "class_names")
                                            : std::vector<std::string>{};
  if (j.contains("intersection_matrix"))
    for (const auto& row : j["intersection_matrix"]) p.intersection_matrix.push_back(ints(row));
  p.discrepancies = j.contains("discrepancies")
                        ? ints(j["discrepancies"])
                        : std::vector<std::int64_t>(p.components.size(), 0);
  if (j.contains("curve_strata")) {
    for (const auto& c : j["curve_strata"]) {
      auto cone = BasisCone::from_indices(name_list(field(c, "cone"), p.components));
      auto& numbers = p.curve_strata[cone];
      for (const auto& [k, v] : field(c, "numbers").items()) {
        require(v.is_number_integer(), "malformed-json", "intersection numbers are integers");
        numbers[index_of(p.components, k, "component")] = v.get<std::int64_t>();
      }
    }
  }
  if (j.contains("component_classes")) {
    const auto& cc = j["component_classes"];
    std::vector<ClassVector> classes;
    for (const auto& name : p.components) {
      require(cc.contains(name), "malformed-json", "component_classes lacks " + name);
      classes.push_back(class_from_json(cc[name], p.class_names));
    }
    p.component_classes = std::move(classes);
  }
  if (j.contains("central_fiber"))
    p.central_fiber = lattice_from_json(j["central_fiber"], p.components.size());
  const auto sign = j.value("log_canonical", std::string("unspecified"));
  if (sign == "nef") {
    p.log_canonical = LogCanonicalSign::nef;
  } else if (sign == "antinef") {
    p.log_canonical = LogCanonicalSign::antinef;
  } else {
    require(sign == "unspecified", "malformed-json", "log_canonical: " + sign);
  }
  p.validate();
  return p;
}

json to_json(const PairDescriptor& p) {
  json j = header("pair");
  j["name"] = p.name;
  j["dimension"] = p.dimension;
  j["components"] = p.components;
  j["strata"] = json::array();
  for (const auto& s : p.strata) j["strata"].push_back(names_of(s, p.components));
  if (!p.empty_intersections.empty()) {
    j["empty_intersections"] = json::array();
    for (const auto& s : p.empty_intersections)
      j["empty_intersections"].push_back(names_of(s, p.components));
  }
  j["class_names"] = p.class_names;
  j["intersection_matrix"] = p.intersection_matrix;
  j["discrepancies"] = p.discrepancies;
  if (!p.curve_strata.empty()) {
    j["curve_strata"] = json::array();
    for (const auto& [cone, numbers] : p.curve_strata) {
      json n = json::object();
      for (const auto& [i, v] : numbers) n[p.components.at(i)] = v;
      j["curve_strata"].push_back({{"cone", names_of(cone.indices(), p.components)},
                                   {"numbers", n}});
    }
  }
  if (p.component_classes) {
    json cc = json::object();
    for (std::size_t i = 0; i < p.components.size(); ++i)
      cc[p.components[i]] = class_to_json((*p.component_classes)[i], p.class_names);
    j["component_classes"] = cc;
  }
  if (p.central_fiber) j["central_fiber"] = p.central_fiber->values();
  if (p.log_canonical == LogCanonicalSign::nef) j["log_canonical"] = "nef";
  if (p.log_canonical == LogCanonicalSign::antinef) j["log_canonical"] = "antinef";
  return j;
}

// ---- invariant table ----

InvariantTable table_from_json(const json& j, const PairDescriptor& pair) {
  check_header(j, "invariant_table");
  InvariantTable t;
  const auto m = pair.num_components();
  for (const auto& e : field(j, "entries")) {
    InvariantKey k{lattice_from_json(field(e, "p"), m), lattice_from_json(field(e, "q"), m),
                   lattice_from_json(field(e, "r"), m),
                   class_from_json(field(e, "beta"), pair.class_names)};
    t.set(k, rational_from_json(field(e, "N")));
  }
  t.validate_against(pair);
  return t;
}

json table_to_json(const InvariantTable& table, const PairDescriptor& pair) {
  json j = header("invariant_table");
  j["pair"] = pair.name;
  j["entries"] = json::array();
  for (const auto& [k, v] : table.entries())
    j["entries"].push_back({{"p", lattice(k.p)},
                            {"q", lattice(k.q)},
                            {"r", lattice(k.r)},
                            {"beta", class_to_json(k.beta, pair.class_names)},
                            {"N", rational_to_json(v)}});
  return j;
}

// ---- walls ----

json laurent_to_json(const LaurentElement& x, const std::vector<std::string>& names) {
  json a = json::array();
  for (const auto& [k, c] : x.terms())
    a.push_back({{"coeff", rational_to_json(c)},
                 {"class", class_to_json(k.beta, names)},
                 {"exponent", lattice(k.exponent)}});
  return a;
}

LaurentElement laurent_from_json(const json& j, const std::vector<std::string>& names,
                                 const TruncationIdeal& ideal, std::size_t lattice_rank) {
  require(j.is_array(), "malformed-json", "terms must be a list");
  LaurentElement x(ideal, lattice_rank);
  for (const auto& t : j)
    x.add_term({class_from_json(field(t, "class"), names),
                lattice_from_json(field(t, "exponent"), lattice_rank)},
               rational_from_json(field(t, "coeff")));
  return x;
}

WallStructure walls_from_json(const json& j, const PairDescriptor* pair,
                              const std::optional<TruncationIdeal>& ideal_override) {
  check_header(j, "walls");
  const auto mode = get<std::string>(j, "mode");
  require(mode == "planar" || mode == "looijenga", "malformed-json", "mode: " + mode);
  const bool planar = mode == "planar";
  require(planar || pair != nullptr, "precondition", "looijenga walls need a pair descriptor");
  std::vector<std::string> names =
      planar ? get<std::vector<std::string>>(j, "class_names") : pair->class_names;
  TruncationIdeal ideal;
  if (ideal_override) {
    ideal = *ideal_override;
  } else {
    ClassVector w = j.contains("weights") ? ClassVector(ints(j["weights"]))
                                          : ClassVector(names.size(), 1);
    ideal = TruncationIdeal(w, get<std::int64_t>(j, "bound"));
  }
  require(ideal.rank() == names.size(), "dimension-mismatch",
          "weights do not match the class generators");
  const std::size_t rank = planar ? 2 : pair->num_components();
  std::vector<Wall> walls;
  for (const auto& w : field(j, "walls")) {
    Wall wall;
    wall.direction = lattice_from_json(field(w, "direction"), rank);
    wall.line = w.value("line", false);
    wall.origin = w.value("origin", std::string("initial"));
    wall.fn = LaurentElement::one(ideal, rank) +
              laurent_from_json(field(w, "terms"), names, ideal, rank);
    walls.push_back(std::move(wall));
  }
  if (planar) return WallStructure::planar(ideal, std::move(walls), names);
  return WallStructure::looijenga(*pair, ideal, std::move(walls));
}

json walls_to_json(const WallStructure& s) {
  json j = header("walls");
  const bool planar = s.mode() == StructureMode::planar;
  j["mode"] = planar ? "planar" : "looijenga";
  if (planar) {
    j["class_names"] = s.class_names();
  } else {
    j["pair"] = s.geometry().pair().name;
  }
  j["weights"] = s.ideal().weights().values();
  j["bound"] = s.ideal().bound();
  j["walls"] = json::array();
  for (const auto& w : s.walls()) {
    LaurentElement rest = w.fn - LaurentElement::one(s.ideal(), s.lattice_rank());
    json e = {{"direction", lattice(w.direction)},
              {"terms", laurent_to_json(rest, s.class_names())},
              {"origin", w.origin}};
    if (w.line) e["line"] = true;
    j["walls"].push_back(std::move(e));
  }
  return j;
}

std::vector<CanonicalWallEntry> canonical_from_json(const json& j, const PairDescriptor& pair) {
  check_header(j, "canonical_walls");
  std::vector<CanonicalWallEntry> out;
  const auto m = pair.num_components();
  for (const auto& e : field(j, "entries")) {
    CanonicalWallEntry c;
    c.direction = lattice_from_json(field(e, "direction"), m);
    c.beta = class_from_json(field(e, "beta"), pair.class_names);
    c.u = lattice_from_json(field(e, "u"), m);
    c.k = e.value("k", std::int64_t{1});
    c.n = rational_from_json(field(e, "N"));
    out.push_back(std::move(c));
  }
  return out;
}

// ---- tropical types ----

TropicalType trop_type_from_json(const json& j) {
  check_header(j, "tropical_type");
  TropicalType t;
  t.rank = get<std::size_t>(j, "rank");
  for (const auto& v : field(j, "vertices")) {
    auto idx = ints(field(v, "cone"));
    std::vector<std::size_t> cone;
    for (auto i : idx) {
      require(i >= 0, "malformed-json", "cone indices are nonnegative");
      cone.push_back(static_cast<std::size_t>(i));
    }
    t.vertices.push_back({get<std::string>(v, "name"), BasisCone::from_indices(cone)});
  }
  for (const auto& e : j.value("edges", json::array()))
    t.edges.push_back({get<std::size_t>(e, "from"), get<std::size_t>(e, "to"),
                       lattice_from_json(field(e, "slope"), t.rank)});
  for (const auto& l : j.value("legs", json::array())) {
    const auto kind = l.value("kind", std::string("marked"));
    require(kind == "marked" || kind == "punctured", "malformed-json", "leg kind: " + kind);
    t.legs.push_back({get<std::string>(l, "name"), get<std::size_t>(l, "vertex"),
                      lattice_from_json(field(l, "contact"), t.rank),
                      kind == "marked" ? LegKind::marked : LegKind::punctured});
  }
  if (j.contains("fan_rays")) {
    std::vector<std::vector<std::int64_t>> rays;
    for (const auto& r : j["fan_rays"]) rays.push_back(ints(r));
    t.fan_rays = std::move(rays);
  }
  t.validate();
  return t;
}

json trop_type_to_json(const TropicalType& t) {
  json j = header("tropical_type");
  j["rank"] = t.rank;
  j["vertices"] = json::array();
  for (const auto& v : t.vertices) j["vertices"].push_back({{"name", v.name}, {"cone", v.cone.indices()}});
  j["edges"] = json::array();
  for (const auto& e : t.edges)
    j["edges"].push_back({{"from", e.from}, {"to", e.to}, {"slope", lattice(e.slope)}});
  j["legs"] = json::array();
  for (const auto& l : t.legs)
    j["legs"].push_back({{"name", l.name},
                         {"vertex", l.vertex},
                         {"contact", lattice(l.contact)},
                         {"kind", l.kind == LegKind::marked ? "marked" : "punctured"}});
  if (t.fan_rays) j["fan_rays"] = *t.fan_rays;
  return j;
}

std::optional<TropAssignment> assignment_from_json(const json& j) {
  if (!j.contains("assignment")) return std::nullopt;
  const auto& a = j["assignment"];
  TropAssignment out;
  for (const auto& row : field(a, "positions")) {
    std::vector<Rational> x;
    for (const auto& v : row) x.push_back(rational_from_json(v));
    out.positions.push_back(std::move(x));
  }
  for (const auto& v : field(a, "lengths")) out.lengths.push_back(rational_from_json(v));
  return out;
}

// ---- reports ----

json candidates_to_json(const CandidateSet& set, const PairDescriptor& pair) {
  json j = header("candidates");
  j["p"] = lattice(set.p);
  j["q"] = lattice(set.q);
  j["entries"] = json::array();
  for (const auto& c : set.entries)
    j["entries"].push_back({{"r", lattice(c.r)},
                            {"r_name", format_point(c.r, pair)},
                            {"beta", class_to_json(c.beta, pair.class_names)},
                            {"forced", c.forced_by_constants}});
  j["dropped_by_dimension"] = set.dropped_by_dimension;
  j["dropped_by_contact"] = set.dropped_by_contact;
  return j;
}

json product_to_json(const std::vector<ProductTerm>& terms, const PairDescriptor* pair,
                     const std::vector<std::string>& names) {
  json a = json::array();
  for (const auto& t : terms) {
    json c = json::array();
    for (const auto& [beta, v] : t.coefficient.terms())
      c.push_back({{"class", class_to_json(beta, names)}, {"coeff", rational_to_json(v)}});
    json e = {{"r", lattice(t.r)}, {"coefficient", c},
              {"text", format_series(t.coefficient, names)}};
    if (pair) e["r_name"] = format_point(t.r, *pair);
    a.push_back(std::move(e));
  }
  return a;
}

json presentation_to_json(const Presentation& pres, const PairDescriptor& pair) {
  json j = header("presentation");
  j["generators"] = json::array();
  for (const auto& g : pres.generators)
    j["generators"].push_back({{"point", lattice(g)}, {"name", format_point(g, pair)}});
  j["relations"] = json::array();
  for (const auto& r : pres.relations) j["relations"].push_back(format_relation(r, pres, pair));
  j["closed"] = pres.closed;
  return j;
}

json consistency_to_json(const ConsistencyReport& r, const std::vector<std::string>& names) {
  json j = header("consistency");
  j["consistent"] = r.consistent;
  j["checks"] = r.checks;
  j["defects"] = json::array();
  for (const auto& d : r.defects)
    j["defects"].push_back({{"where", d.where},
                            {"probe", lattice(d.probe)},
                            {"expected", format_laurent(d.expected, names)},
                            {"actual", format_laurent(d.actual, names)},
                            {"difference", laurent_to_json(d.actual - d.expected, names)}});
  return j;
}

json broken_lines_to_json(const std::vector<BrokenLine>& lines,
                          const std::vector<std::string>& names) {
  json j = header("broken_lines");
  j["lines"] = json::array();
  for (const auto& l : lines) {
    json segs = json::array();
    for (const auto& s : l.segments) {
      json e = {{"chamber", s.chamber},
                {"end", rational_point(s.end)},
                {"coeff", rational_to_json(s.coefficient)},
                {"class", class_to_json(s.beta, names)},
                {"exponent", lattice(s.exponent)}};
      e["start"] = s.start ? rational_point(*s.start) : json(nullptr);
      segs.push_back(std::move(e));
    }
    j["lines"].push_back({{"asymptotic", lattice(l.asymptotic)},
                          {"endpoint", rational_point(l.endpoint)},
                          {"segments", segs}});
  }
  return j;
}

json missing_to_json(const MissingInvariantError& e, const PairDescriptor& pair) {
  json j = header("error");
  j["error"] = "missing-invariant";
  j["missing"] = json::array();
  for (const auto& k : e.missing())
    j["missing"].push_back({{"p", lattice(k.p)},
                            {"q", lattice(k.q)},
                            {"r", lattice(k.r)},
                            {"beta", class_to_json(k.beta, pair.class_names)}});
  return j;
}

json moduli_cone_to_json(const ModuliCone& c) {
  json j = header("moduli_cone");
  j["variables"] = c.variables;
  j["dimension"] = c.dimension;
  j["linear_dimension"] = c.linear_dimension;
  j["rays"] = c.rays;
  return j;
}

}  // namespace thetamirror::io
