#include "tilegrow/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace tilegrow {

namespace {

json pt(const Vec2& v) { return json::array({v.x(), v.y()}); }
json pt(const Vec3& v) { return json::array({v.x(), v.y(), v.z()}); }

json polygon_json(const Polygon& p) {
  json a = json::array();
  for (const auto& v : p.vertices) a.push_back(pt(v));
  return a;
}

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::InvalidSpec, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

double num(const json& j, const char* what) {
  if (!j.is_number()) bad(std::string(what) + " must be a number");
  return j.get<double>();
}

Vec2 vec2(const json& j) {
  if (!j.is_array() || j.size() != 2) bad("expected a point [x, y]");
  return Vec2(num(j[0], "coordinate"), num(j[1], "coordinate"));
}

Polygon polygon(const json& j) {
  if (!j.is_array()) bad("vertices must be an array");
  Polygon p;
  for (const auto& v : j) p.vertices.push_back(vec2(v));
  return p;
}

Eigen::Matrix2d mat2(const json& j) {
  if (!j.is_array() || j.size() != 4) bad("expected a row-major 2x2 matrix [a, b, c, d]");
  Eigen::Matrix2d m;
  m << num(j[0], "matrix entry"), num(j[1], "matrix entry"), num(j[2], "matrix entry"), num(j[3], "matrix entry");
  return m;
}

json mat2_json(const Eigen::Matrix2d& m) { return json::array({m(0, 0), m(0, 1), m(1, 0), m(1, 1)}); }

std::ofstream open_out(const std::string& path) {
  std::ofstream f(path);
  if (!f) throw Error(ErrorKind::InvalidSpec, "cannot write '" + path + "'");
  return f;
}

// Maps world coordinates into an 800 px wide picture with y pointing up.
struct Frame {
  Vec2 lo, hi;
  double s = 1.0, pad = 10.0;

  explicit Frame(const std::vector<Vec2>& pts) {
    lo = hi = pts.empty() ? Vec2::Zero() : pts.front();
    for (const auto& p : pts) {
      lo = lo.cwiseMin(p);
      hi = hi.cwiseMax(p);
    }
    const double w = std::max(hi.x() - lo.x(), 1e-9), h = std::max(hi.y() - lo.y(), 1e-9);
    s = 800.0 / std::max(w, h);
  }
  double width() const { return (hi.x() - lo.x()) * s + 2 * pad; }
  double height() const { return (hi.y() - lo.y()) * s + 2 * pad; }
  std::string xy(const Vec2& p) const {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f,%.3f", (p.x() - lo.x()) * s + pad, (hi.y() - p.y()) * s + pad);
    return buf;
  }
};

std::string svg_head(const Frame& f) {
  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << static_cast<int>(std::ceil(f.width())) << "\" height=\""
    << static_cast<int>(std::ceil(f.height())) << "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  return o.str();
}

std::string svg_polygon(const Frame& f, const Polygon& p, const char* fill, const char* stroke, double width) {
  std::ostringstream o;
  o << "<polygon points=\"";
  for (std::size_t i = 0; i < p.size(); ++i) o << (i ? " " : "") << f.xy(p[i]);
  o << "\" fill=\"" << fill << "\" stroke=\"" << stroke << "\" stroke-width=\"" << width << "\"/>\n";
  return o.str();
}

const char* parity_colour(int n) { return n < 0 ? "#dddddd" : (n % 2 ? "#6cbf5a" : "#f2e05a"); }

}  // namespace

json to_json(const Source& src) {
  json j = {{"schema", kSchema}, {"kind", std::string(to_string(src.kind))}, {"name", src.name}};
  switch (src.kind) {
    case SourceKind::Periodic: {
      j["lattice"] = json::array({pt(Vec2(src.periodic.basis.col(0))), pt(Vec2(src.periodic.basis.col(1)))});
      json tiles = json::array();
      for (const auto& t : src.periodic.tiles) tiles.push_back({{"label", t.label}, {"vertices", polygon_json(t.polygon)}});
      j["tiles"] = tiles;
      break;
    }
    case SourceKind::Grid: {
      j["dim"] = src.grid.d;
      json v = json::array();
      for (int i = 0; i < src.grid.N(); ++i) {
        json g = json::array();
        for (int k = 0; k < src.grid.d; ++k) g.push_back(src.grid.vectors(k, i));
        v.push_back(g);
      }
      j["vectors"] = v;
      j["phases"] = std::vector<double>(src.grid.phases.data(), src.grid.phases.data() + src.grid.phases.size());
      break;
    }
    case SourceKind::Substitution: {
      const auto& s = src.substitution;
      j["inflation"] = mat2_json(s.Q);
      json protos = json::array(), rules = json::array();
      for (const auto& p : s.prototiles) protos.push_back({{"label", p.label}, {"vertices", polygon_json(p.polygon)}});
      for (const auto& rs : s.rules) {
        json r = json::array();
        for (const auto& pl : rs)
          r.push_back({{"matrix", mat2_json(pl.motion.A)},
                       {"translation", pt(pl.motion.t)},
                       {"target", s.prototiles[pl.target].label}});
        rules.push_back(r);
      }
      j["prototiles"] = protos;
      j["rules"] = rules;
      j["seed"] = src.seed_label;
      j["level"] = src.level;
      break;
    }
    case SourceKind::Strips:
      j["levels"] = src.strips_levels;
      j["half_height"] = src.strips_half_height;
      break;
  }
  return j;
}

Source source_from_json(const json& j) {
  if (!j.is_object()) bad("spec must be a JSON object");
  if (j.contains("schema") && j.at("schema") != kSchema) bad("unsupported schema version");
  const std::string kind = field(j, "kind").get<std::string>();
  Source s;
  s.name = j.value("name", std::string("custom"));
  if (kind == "periodic") {
    s.kind = SourceKind::Periodic;
    s.periodic.name = s.name;
    const auto& l = field(j, "lattice");
    if (!l.is_array() || l.size() != 2) bad("lattice must list two vectors");
    s.periodic.basis.col(0) = vec2(l[0]);
    s.periodic.basis.col(1) = vec2(l[1]);
    for (const auto& t : field(j, "tiles"))
      s.periodic.tiles.push_back({t.value("label", std::string("tile")), polygon(field(t, "vertices"))});
  } else if (kind == "grid") {
    s.kind = SourceKind::Grid;
    s.grid.name = s.name;
    s.grid.d = field(j, "dim").get<int>();
    const auto& v = field(j, "vectors");
    const auto& ph = field(j, "phases");
    if (!v.is_array() || !ph.is_array() || v.size() != ph.size()) bad("need one phase per grid vector");
    s.grid.vectors.resize(s.grid.d, static_cast<Eigen::Index>(v.size()));
    s.grid.phases.resize(static_cast<Eigen::Index>(ph.size()));
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!v[i].is_array() || static_cast<int>(v[i].size()) != s.grid.d) bad("grid vector has the wrong dimension");
      for (int k = 0; k < s.grid.d; ++k) s.grid.vectors(k, static_cast<Eigen::Index>(i)) = num(v[i][k], "grid vector entry");
      s.grid.phases[static_cast<Eigen::Index>(i)] = num(ph[i], "phase");
    }
  } else if (kind == "substitution") {
    s.kind = SourceKind::Substitution;
    auto& sys = s.substitution;
    sys.name = s.name;
    sys.Q = mat2(field(j, "inflation"));
    for (const auto& p : field(j, "prototiles"))
      sys.prototiles.push_back({field(p, "label").get<std::string>(), polygon(field(p, "vertices"))});
    for (const auto& rs : field(j, "rules")) {
      std::vector<Placement> r;
      for (const auto& pl : rs) {
        Placement x;
        x.motion.A = mat2(field(pl, "matrix"));
        x.motion.t = vec2(field(pl, "translation"));
        x.target = sys.prototile_index(field(pl, "target").get<std::string>());
        r.push_back(x);
      }
      sys.rules.push_back(std::move(r));
    }
    s.seed_label = field(j, "seed").get<std::string>();
    s.level = j.value("level", 0);
  } else if (kind == "strips") {
    s.kind = SourceKind::Strips;
    s.strips_levels = j.value("levels", 5);
    s.strips_half_height = j.value("half_height", 560);
  } else {
    bad("unknown kind '" + kind + "'");
  }
  s.validate();
  return s;
}

Source load_source(const std::string& path) {
  std::ifstream f(path);
  if (!f) bad("cannot read '" + path + "'");
  json j;
  try {
    f >> j;
  } catch (const json::exception& e) {
    bad(path + ": " + e.what());
  }
  return source_from_json(j);
}

json patch_json(const Generated& g, const std::string& source, const NeighborRule& rule) {
  json j = {{"schema", kSchema}, {"kind", "patch"}, {"source", source}, {"dim", g.dim},
            {"rule", rule.kind == NeighborKind::EdgeShare ? "edge" : "heesch"}, {"radius", g.radius}};
  json tiles = json::array();
  auto emit = [&](const auto& p) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      const auto& t = p.tiles[i];
      json o = {{"id", t.id}, {"label", t.label}, {"centroid", pt(t.centroid)}, {"complete", p.complete[i] != 0}};
      if constexpr (std::is_same_v<std::decay_t<decltype(t.shape)>, Polygon>) {
        o["vertices"] = polygon_json(t.shape);
      } else {
        o["origin"] = pt(t.shape.origin);
        json e = json::array();
        for (int k = 0; k < 3; ++k) e.push_back(pt(Vec3(t.shape.edges.col(k))));
        o["edges"] = e;
      }
      tiles.push_back(o);
    }
    j["adjacency"] = p.adjacency;
  };
  if (g.dim == 2)
    emit(g.p2);
  else
    emit(g.p3);
  j["tiles"] = tiles;
  j["seeds"] = g.seeds;
  return j;
}

json form_json(const GrowthForm& f, const std::string& source) {
  json j = {{"schema", kSchema}, {"kind", "form"}, {"source", source}, {"provenance", std::string(to_string(f.provenance))},
            {"dim", f.dim}};
  json v = json::array();
  if (f.dim == 2) {
    for (const auto& p : f.polygon.vertices) v.push_back(pt(p));
  } else {
    for (const auto& p : f.polytope.vertices) v.push_back(pt(p));
    j["faces"] = f.polytope.faces;
  }
  j["vertices"] = v;
  j["circumradius"] = f.circumradius();
  return j;
}

json report_json(const ConvergenceReport& r) {
  json j = {{"n", r.n}, {"count", r.count}, {"d_successive", r.d_successive}, {"fitted_C", r.fitted_C}};
  if (!r.d_to_candidate.empty()) j["d_to_candidate"] = r.d_to_candidate;
  return j;
}

json no_growth_json(const NoGrowthReport& r) {
  return {{"n", r.n}, {"ratio", r.ratio}, {"range", r.range}, {"gap", r.gap}, {"non_convergent", r.non_convergent}};
}

void write_json(const std::string& path, const json& j) {
  auto f = open_out(path);
  f << j.dump(2) << '\n';
}

void write_svg_patch(const std::string& path, const Patch<2>& p, const std::vector<int>* shell_index) {
  std::vector<Vec2> all;
  for (const auto& t : p.tiles) all.insert(all.end(), t.shape.vertices.begin(), t.shape.vertices.end());
  const Frame fr(all);
  auto f = open_out(path);
  f << svg_head(fr);
  for (std::size_t i = 0; i < p.size(); ++i) {
    const char* fill = shell_index ? parity_colour((*shell_index)[i]) : "#eeeeee";
    f << svg_polygon(fr, p.tiles[i].shape, fill, "#333333", 0.3);
  }
  f << "</svg>\n";
}

void write_svg_shells(const std::string& path, const std::vector<std::vector<Vec2>>& shells, const std::vector<int>& n) {
  std::vector<Vec2> all;
  for (const auto& s : shells) all.insert(all.end(), s.begin(), s.end());
  const Frame fr(all);
  auto f = open_out(path);
  f << svg_head(fr);
  for (std::size_t k = 0; k < shells.size(); ++k) {
    f << "<g fill=\"" << parity_colour(n[k]) << "\" stroke=\"#555555\" stroke-width=\"0.2\">\n";
    for (const auto& p : shells[k]) {
      const std::string xy = fr.xy(p);
      const auto comma = xy.find(',');
      f << "<circle cx=\"" << xy.substr(0, comma) << "\" cy=\"" << xy.substr(comma + 1) << "\" r=\"2\"/>\n";
    }
    f << "</g>\n";
  }
  f << "</svg>\n";
}

void write_svg_forms(const std::string& path, const std::vector<GrowthForm>& forms) {
  static const char* colours[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};
  std::vector<Vec2> all;
  for (const auto& fm : forms) {
    if (fm.dim != 2) throw Error(ErrorKind::MethodMismatch, "only planar forms can be drawn");
    all.insert(all.end(), fm.polygon.vertices.begin(), fm.polygon.vertices.end());
  }
  const Frame fr(all);
  auto f = open_out(path);
  f << svg_head(fr);
  for (std::size_t k = 0; k < forms.size(); ++k) f << svg_polygon(fr, forms[k].polygon, "none", colours[k % 5], 1.5);
  f << "</svg>\n";
}

void write_off(const std::string& path, const GrowthForm& fm) {
  auto f = open_out(path);
  f.precision(17);
  if (fm.dim == 2) {
    const auto& v = fm.polygon.vertices;
    f << "OFF\n" << v.size() << " 1 0\n";
    for (const auto& p : v) f << p.x() << ' ' << p.y() << " 0\n";
    f << v.size();
    for (std::size_t i = 0; i < v.size(); ++i) f << ' ' << i;
    f << '\n';
    return;
  }
  const auto& P = fm.polytope;
  f << "OFF\n" << P.vertices.size() << ' ' << P.faces.size() << ' ' << P.edge_count() << '\n';
  for (const auto& p : P.vertices) f << p.x() << ' ' << p.y() << ' ' << p.z() << '\n';
  for (const auto& face : P.faces) {
    f << face.size();
    for (int i : face) f << ' ' << i;
    f << '\n';
  }
}

void write_off_patch(const std::string& path, const Patch<3>& p) {
  auto f = open_out(path);
  f.precision(12);
  // Corner k of a cell is origin + sum of the edges selected by the bits of k.
  static const int faces[6][4] = {{0, 2, 3, 1}, {4, 5, 7, 6}, {0, 1, 5, 4}, {2, 6, 7, 3}, {0, 4, 6, 2}, {1, 3, 7, 5}};
  f << "OFF\n" << 8 * p.size() << ' ' << 6 * p.size() << " 0\n";
  for (const auto& t : p.tiles)
    for (int k = 0; k < 8; ++k) {
      Vec3 c = t.shape.origin;
      for (int e = 0; e < 3; ++e)
        if (k >> e & 1) c += t.shape.edges.col(e);
      f << c.x() << ' ' << c.y() << ' ' << c.z() << '\n';
    }
  for (std::size_t t = 0; t < p.size(); ++t)
    for (const auto& fc : faces) f << "4 " << 8 * t + fc[0] << ' ' << 8 * t + fc[1] << ' ' << 8 * t + fc[2] << ' ' << 8 * t + fc[3] << '\n';
}

std::vector<int> parse_shell_list(const std::string& text) {
  auto to_int = [&](const std::string& t) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(t, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != t.size() || v < 1) bad("bad shell index '" + t + "' in '" + text + "'");
    return v;
  };
  std::vector<int> out;
  const auto dots = text.find("..");
  if (dots != std::string::npos) {
    const int a = to_int(text.substr(0, dots));
    std::string rest = text.substr(dots + 2);
    int step = a;
    if (const auto colon = rest.find(':'); colon != std::string::npos) {
      step = to_int(rest.substr(colon + 1));
      rest = rest.substr(0, colon);
    }
    const int b = to_int(rest);
    if (b < a) bad("empty shell range '" + text + "'");
    for (int n = a; n <= b; n += step) out.push_back(n);
    return out;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(to_int(item));
  if (out.empty()) bad("no shell indices given");
  return out;
}

void write_csv_counts(const std::string& path, const std::vector<long>& counts) {
  auto f = open_out(path);
  f << "n,count\n";
  for (std::size_t i = 0; i < counts.size(); ++i) f << i + 1 << ',' << counts[i] << '\n';
}

}  // namespace tilegrow
