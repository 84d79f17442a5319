#include <CLI11.hpp>

#include <iostream>

#include "cli_support.hpp"
#include "thetamirror/render.hpp"

using namespace thetamirror;
using namespace thetamirror::cli;

namespace {

enum Exit { ok = 0, validation = 2, missing = 3 };

std::vector<std::string> theta_names(const PairDescriptor& pair) { return pair.components; }

ThetaElement as_theta(const std::vector<ProductTerm>& terms, const TruncationIdeal& ideal) {
  ThetaElement x(ideal);
  for (const auto& t : terms) x.add(t.r, t.coefficient);
  return x;
}

std::vector<LatticeVector> points_of(const std::vector<std::string>& args,
                                     const PairDescriptor& pair) {
  std::vector<LatticeVector> out;
  for (const auto& a : args) out.push_back(parse_point(a, theta_names(pair), pair.num_components()));
  return out;
}

std::vector<LatticeVector> default_points(const PairDescriptor& pair) {
  std::vector<LatticeVector> out{LatticeVector(pair.num_components())};
  for (std::size_t i = 0; i < pair.num_components(); ++i) {
    LatticeVector e(pair.num_components());
    e[i] = 1;
    out.push_back(e);
  }
  return out;
}

int cmd_tropicalize(const RunConfig& c) {
  auto pair = load_pair(c.pair_path);
  auto space = tropicalize(pair);
  json j = io::header("tropicalization");
  auto cones = [&](const ConeComplex& cx) {
    json a = json::array();
    for (auto cone : cx.cones()) {
      json n = json::array();
      for (auto i : cone.indices()) n.push_back(pair.components[i]);
      a.push_back(n);
    }
    return a;
  };
  j["dimension"] = space.n;
  j["cones"] = cones(space.full);
  j["skeleton"] = cones(space.cy_sub);
  j["maximal"] = maximality_check(space);
  j["dual_graph_connected"] = dual_graph_connected(space);
  if (c.format == "json") {
    emit(j);
  } else {
    std::cout << "cones of Trop(X): " << space.full.cones().size() << '\n';
    for (auto cone : space.full.maximal_cones()) std::cout << "  max " << to_string(cone) << '\n';
    std::cout << "skeleton cones: " << space.cy_sub.cones().size() << '\n';
    std::cout << "maximal: " << (j["maximal"].get<bool>() ? "yes" : "no") << '\n';
    std::cout << "dual graph connected: " << (j["dual_graph_connected"].get<bool>() ? "yes" : "no")
              << '\n';
  }
  return ok;
}

int cmd_points(const RunConfig& c, std::int64_t height, bool graded) {
  auto pair = load_pair(c.pair_path);
  auto space = tropicalize(pair);
  json j = io::header("points");
  j["points"] = json::array();
  for (const auto& p : integral_points(space.cy_sub, height)) {
    json e = {{"point", p.values()}, {"name", format_point(p, pair)}};
    if (graded) e["degree"] = grading(space, p);
    j["points"].push_back(e);
  }
  if (c.format == "json") {
    emit(j);
  } else {
    for (const auto& e : j["points"]) {
      std::cout << e["name"].get<std::string>();
      if (graded) std::cout << "  degree " << e["degree"].get<std::int64_t>();
      std::cout << '\n';
    }
  }
  return ok;
}

int cmd_transport(const RunConfig& c, const std::string& rho_s, const std::string& s1,
                  const std::string& s2, const std::vector<std::string>& args) {
  auto pair = load_pair(c.pair_path);
  auto space = tropicalize(pair);
  auto cone_of = [&](const std::string& t) {
    auto v = parse_point(t, pair.components, pair.num_components());
    return support(v);
  };
  BasisCone rho = cone_of(rho_s), sigma1 = cone_of(s1), sigma2 = cone_of(s2);
  auto it = pair.curve_strata.find(rho);
  require(it != pair.curve_strata.end(), "missing-intersection-number",
          "no curve stratum numbers for " + to_string(rho));
  auto chart = parallel_transport(space.full, rho, sigma1, sigma2, it->second);
  json j = io::header("transport");
  j["matrix"] = chart.transport;
  j["restricted_determinant"] = chart.restricted_determinant();
  j["images"] = json::array();
  for (const auto& p : points_of(args, pair))
    j["images"].push_back({{"point", p.values()}, {"image", chart.apply(p).values()}});
  if (c.format == "json") {
    emit(j);
  } else {
    for (const auto& row : chart.transport) {
      for (std::size_t k = 0; k < row.size(); ++k) std::cout << (k ? " " : "") << row[k];
      std::cout << '\n';
    }
    for (const auto& e : j["images"])
      std::cout << e["point"].dump() << " -> " << e["image"].dump() << '\n';
  }
  return ok;
}

int cmd_candidates(const RunConfig& c, const std::vector<std::string>& args, bool no_contact) {
  auto pair = load_pair(c.pair_path);
  auto space = tropicalize(pair);
  auto pts = points_of(args, pair);
  require(pts.size() == 2, "precondition", "candidates takes two points");
  CandidateOptions opts;
  opts.contact_filter = !no_contact;
  auto set = candidates(pair, space, pts[0], pts[1], ideal_for(c, pair.class_rank()), opts);
  if (c.format == "json") {
    emit(io::candidates_to_json(set, pair));
  } else {
    for (const auto& e : set.entries)
      std::cout << "r=" << format_point(e.r, pair) << " beta=" << format_class(e.beta, pair.class_names)
                << (e.forced_by_constants ? " (constant)" : "") << '\n';
  }
  return ok;
}

int cmd_theta_mult(const RunConfig& c, const std::vector<std::string>& args, std::int64_t graded) {
  auto pair = load_pair(c.pair_path);
  auto table = load_table(c.table_path, pair);
  ThetaAlgebra alg(pair, table, ideal_for(c, pair.class_rank()));
  if (graded > 0) {
    json j = io::header("graded_ring");
    j["degrees"] = json::object();
    for (const auto& [d, pts] : alg.graded_points(graded)) {
      json a = json::array();
      for (const auto& p : pts) a.push_back(format_point(p, pair));
      j["degrees"][std::to_string(d)] = a;
    }
    if (c.format == "json") {
      emit(j);
    } else {
      for (const auto& [d, a] : j["degrees"].items()) std::cout << "degree " << d << ": " << a.size() << " points\n";
    }
    return ok;
  }
  if (!args.empty()) {
    auto pts = points_of(args, pair);
    require(pts.size() == 2, "precondition", "theta-mult takes zero or two points");
    auto x = alg.product(pts[0], pts[1]);
    std::string lhs = "theta[" + format_point(pts[0], pair) + "]*theta[" + format_point(pts[1], pair) + "]";
    if (c.format == "json") {
      json j = io::header("product");
      j["lhs"] = lhs;
      j["rhs"] = format_theta(x, pair);
      emit(j);
    } else {
      std::cout << lhs << " = " << format_theta(x, pair) << '\n';
    }
    return ok;
  }
  auto pres = alg.presentation();
  const auto& gens = pres.generators;
  json prods = json::array();
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = a + 1; b < gens.size(); ++b) {
      auto x = alg.product(gens[a], gens[b]);
      prods.push_back("theta[" + format_point(gens[a], pair) + "]*theta[" + format_point(gens[b], pair) +
                      "] = " + format_theta(x, pair));
    }
  if (c.format == "json") {
    json j = io::presentation_to_json(pres, pair);
    j["products"] = prods;
    emit(j);
  } else {
    for (const auto& p : prods) std::cout << p.get<std::string>() << '\n';
    std::cout << "relations" << (pres.closed ? "" : " (not closed)") << ":"
              << (pres.relations.empty() ? " none" : "") << '\n';
    for (const auto& r : pres.relations) std::cout << "  " << format_relation(r, pres, pair) << '\n';
  }
  return ok;
}

int cmd_assoc(const RunConfig& c, const std::vector<std::string>& args) {
  auto pair = load_pair(c.pair_path);
  auto table = load_table(c.table_path, pair);
  ThetaAlgebra alg(pair, table, ideal_for(c, pair.class_rank()));
  auto pts = args.empty() ? default_points(pair) : points_of(args, pair);
  auto v = alg.associativity_check(pts);
  json j = io::header("associativity");
  j["violations"] = json::array();
  for (const auto& x : v)
    j["violations"].push_back({{"a", format_point(x.a, pair)},
                               {"b", format_point(x.b, pair)},
                               {"c", format_point(x.c, pair)},
                               {"r", format_point(x.r, pair)},
                               {"beta", io::class_to_json(x.beta, pair.class_names)},
                               {"lhs", io::rational_to_json(x.lhs)},
                               {"rhs", io::rational_to_json(x.rhs)}});
  j["associative"] = v.empty();
  if (c.format == "json") {
    emit(j);
  } else {
    std::cout << (v.empty() ? "associative" : "violations: " + std::to_string(v.size())) << '\n';
    for (const auto& e : j["violations"]) std::cout << "  " << e.dump() << '\n';
  }
  return v.empty() ? ok : validation;
}

int cmd_complete(const RunConfig& c, const ConsistencyOptions& co) {
  auto w = load_walls(c, true);
  auto done = complete(w.walls, co);
  if (c.format == "json") {
    emit(io::walls_to_json(done));
  } else if (c.format == "svg") {
    std::cout << render_svg(done);
  } else {
    std::cout << render_text(done);
  }
  return ok;
}

int cmd_consistency(const RunConfig& c, const ConsistencyOptions& co) {
  auto w = load_walls(c, true);
  auto r = consistency_check(w.walls, co);
  if (c.format == "json") {
    emit(io::consistency_to_json(r, w.walls.class_names()));
  } else {
    std::cout << (r.consistent ? "consistent" : "inconsistent") << " (" << r.checks << " checks)\n";
    for (const auto& d : r.defects)
      std::cout << "  " << d.where << " probe " << to_string(d.probe) << ": "
                << format_laurent(d.actual - d.expected, w.walls.class_names()) << '\n';
  }
  return r.consistent ? ok : validation;
}

LatticeVector walls_point(const LoadedWalls& w, const std::string& s) {
  if (w.pair) return parse_point(s, w.pair->components, w.pair->num_components());
  return parse_point(s, {}, 2);
}

int cmd_broken_lines(const RunConfig& c, const std::string& p, const std::string& q) {
  auto w = load_walls(c, true);
  auto lines = enumerate(w.walls, walls_point(w, p), parse_rational_point(q));
  const auto& names = w.walls.class_names();
  if (c.format == "json") {
    auto j = io::broken_lines_to_json(lines, names);
    j["theta"] = format_laurent(theta_function(w.walls, walls_point(w, p), parse_rational_point(q)), names);
    emit(j);
  } else if (c.format == "svg") {
    std::cout << render_svg(w.walls, lines);
  } else {
    for (const auto& l : lines) {
      const auto& s = l.last();
      std::cout << l.segments.size() << " segments, final "
                << format_laurent(laurent_monomial(w.walls.ideal(), s.beta, s.exponent, s.coefficient), names)
                << '\n';
    }
  }
  return ok;
}

int cmd_theta_product(const RunConfig& c, const std::vector<std::string>& args,
                      const ThetaProductOptions& o) {
  auto w = load_walls(c, true);
  require(args.size() == 2, "precondition", "theta-product takes two points");
  auto p = walls_point(w, args[0]);
  auto q = walls_point(w, args[1]);
  auto terms = theta_product(w.walls, p, q, o);
  const auto& names = w.walls.class_names();
  if (c.format == "json") {
    json j = io::header("theta_product");
    j["terms"] = io::product_to_json(terms, w.pair ? &*w.pair : nullptr, names);
    emit(j);
  } else if (w.pair) {
    std::cout << "theta[" << format_point(p, *w.pair) << "]*theta[" << format_point(q, *w.pair)
              << "] = " << format_theta(as_theta(terms, w.walls.ideal()), *w.pair) << '\n';
  } else {
    for (const auto& t : terms)
      std::cout << to_string(t.r) << ": " << format_series(t.coefficient, names) << '\n';
  }
  return ok;
}

int cmd_trop_check(const RunConfig& c, const std::string& path) {
  const json in = io::read_json(path);
  auto type = io::trop_type_from_json(in);
  auto cone = basic_monoid(type);
  auto bal = balancing_check(type);
  json j = io::moduli_cone_to_json(cone);
  j["balanced"] = bal.balanced;
  j["residuals"] = bal.residuals;
  bool good = bal.balanced;
  if (auto a = io::assignment_from_json(in)) {
    j["node_equations"] = node_equation_check(type, *a);
    good = good && j["node_equations"].get<bool>();
  }
  if (c.format == "json") {
    emit(j);
  } else {
    std::cout << "moduli cone dimension " << cone.dimension << " (expected "
              << cone.linear_dimension << "), " << cone.rays.size() << " rays\n";
    std::cout << "balanced: " << (bal.balanced ? "yes" : "no") << '\n';
    if (j.contains("node_equations"))
      std::cout << "node equations: " << (j["node_equations"].get<bool>() ? "yes" : "no") << '\n';
  }
  return good ? ok : validation;
}

int cmd_render(const RunConfig& c, const std::string& p, const std::string& q) {
  auto w = load_walls(c, false);
  std::vector<BrokenLine> lines;
  if (!p.empty() && !q.empty()) lines = enumerate(w.walls, walls_point(w, p), parse_rational_point(q));
  if (c.format == "text") {
    std::cout << render_text(w.walls);
  } else if (c.format == "json") {
    emit(io::walls_to_json(w.walls));
  } else {
    std::cout << render_svg(w.walls, lines);
  }
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"thetamirror: theta functions, scattering and tropical types"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::vector<std::string> points;
  std::int64_t height = 3, graded = 0, probe = 2, extra = 2;
  std::size_t samples = 3;
  std::string rho, from, to, endpoint, type_path, point;
  bool no_contact = false, with_degree = false;

  auto common = [&](CLI::App* s, bool pair, bool walls) {
    if (pair) s->add_option("--pair", cfg.pair_path, "pair descriptor JSON");
    if (walls) {
      s->add_option("--walls,--planar", cfg.walls_path, "wall structure JSON");
      if (!pair) s->add_option("--pair", cfg.pair_path, "pair descriptor for looijenga walls");
    }
    s->add_option("--bound", cfg.bound, "truncation bound");
    s->add_option("--weights", cfg.weights, "class weights")->delimiter(',');
    s->add_option("--format", cfg.format, "json | text | svg");
    s->add_option("--seed", cfg.seed, "seed for endpoint sampling");
  };

  auto* trop = app.add_subcommand("tropicalize", "cone complex of the pair");
  common(trop, true, false);
  auto* pts = app.add_subcommand("points", "integral points of B");
  common(pts, true, false);
  pts->add_option("--height", height, "maximal height");
  pts->add_flag("--degree", with_degree, "report degrees (degenerations)");
  auto* tr = app.add_subcommand("transport", "parallel transport across a codimension-one cone");
  common(tr, true, false);
  tr->add_option("--rho", rho)->required();
  tr->add_option("--from", from)->required();
  tr->add_option("--to", to)->required();
  tr->add_option("point", points);
  auto* cand = app.add_subcommand("candidates", "(r, beta) candidates for theta_p theta_q");
  common(cand, true, false);
  cand->add_option("point", points)->expected(2);
  cand->add_flag("--no-contact-filter", no_contact);
  auto* mult = app.add_subcommand("theta-mult", "products and presentation");
  common(mult, true, false);
  mult->add_option("--table", cfg.table_path, "invariant table JSON");
  mult->add_option("--graded", graded, "degeneration mode: list points up to this degree");
  mult->add_option("point", points);
  auto* assoc = app.add_subcommand("assoc-check", "associativity of the product");
  common(assoc, true, false);
  assoc->add_option("--table", cfg.table_path, "invariant table JSON");
  assoc->add_option("point", points);
  auto* comp = app.add_subcommand("scatter-complete", "complete a wall structure");
  common(comp, false, true);
  auto* cons = app.add_subcommand("consistency", "consistency of a wall structure");
  common(cons, false, true);
  cons->add_option("--probe-height", probe);
  auto* bl = app.add_subcommand("broken-lines", "broken lines for theta_p at Q");
  common(bl, false, true);
  bl->add_option("--point", point)->required();
  bl->add_option("--endpoint", endpoint)->required();
  auto* tp = app.add_subcommand("theta-product", "theta_p theta_q from broken lines");
  common(tp, false, true);
  tp->add_option("point", points)->expected(2);
  tp->add_option("--samples", samples);
  tp->add_option("--extra-height", extra);
  auto* tc = app.add_subcommand("trop-check", "basic monoid and balancing of a tropical type");
  common(tc, false, false);
  tc->add_option("--type", type_path)->required();
  auto* rd = app.add_subcommand("render", "SVG or text rendering of a wall structure");
  common(rd, false, true);
  rd->add_option("--point", point);
  rd->add_option("--endpoint", endpoint);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : validation;
  }

  PairDescriptor const* pair_for_missing = nullptr;
  std::optional<PairDescriptor> loaded;
  try {
    validate(cfg);
    ConsistencyOptions co;
    co.probe_height = probe;
    co.seed = cfg.seed;
    if (*trop) return cmd_tropicalize(cfg);
    if (*pts) return cmd_points(cfg, height, with_degree);
    if (*tr) return cmd_transport(cfg, rho, from, to, points);
    if (*cand) return cmd_candidates(cfg, points, no_contact);
    if (*mult) return cmd_theta_mult(cfg, points, graded);
    if (*assoc) return cmd_assoc(cfg, points);
    if (*comp) return cmd_complete(cfg, co);
    if (*cons) return cmd_consistency(cfg, co);
    if (*bl) return cmd_broken_lines(cfg, point, endpoint);
    if (*tp) return cmd_theta_product(cfg, points, {cfg.seed, samples, extra});
    if (*tc) return cmd_trop_check(cfg, type_path);
    if (*rd) return cmd_render(cfg, point, endpoint);
  } catch (const MissingInvariantError& e) {
    try {
      loaded = load_pair(cfg.pair_path);
      pair_for_missing = &*loaded;
    } catch (const Error&) {
    }
    if (pair_for_missing) {
      emit(io::missing_to_json(e, *pair_for_missing));
    } else {
      std::cerr << "error: " << e.what() << '\n';
    }
    return missing;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return validation;
  }
  return ok;
}
