#include "tolkit/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace tolkit {

using nlohmann::json;

namespace {

Error parse_error(const std::string& m) { return Error(ErrorKind::ParseError, m); }

std::string coord_field(const Coord& c) { return to_string(c); }

Coord read_coord(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) throw parse_error(std::string("missing field '") + key + "'");
  const json& v = obj.at(key);
  if (v.is_string()) return parse_coord(v.get<std::string>());
  if (v.is_number_integer()) return Coord(v.get<long>());
  throw parse_error(std::string("field '") + key + "' is not a \"p/q\" string");
}

json graph_json(const Graph& g) {
  json edges = json::array();
  for (auto [a, b] : g.edges()) edges.push_back({a, b});
  return json{{"n", g.size()}, {"edges", edges}};
}

Graph graph_from(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.at("n").is_number_integer())
    throw parse_error("graph needs an integer 'n'");
  const int n = j.at("n").get<int>();
  if (n < 0) throw parse_error("negative vertex count");
  Graph g(n);
  if (!j.contains("edges")) return g;
  for (const json& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw parse_error("edge must be a pair of integers");
    const int a = e[0].get<int>(), b = e[1].get<int>();
    if (a < 0 || b < 0 || a >= n || b >= n || a == b) throw parse_error("edge out of range");
    g.add_edge(a, b);
  }
  return g;
}

json projection_json(const ProjectionRep& rep) {
  json arr = json::array();
  for (const Pgram& p : rep.v)
    arr.push_back({{"L", coord_field(p.L)},
                   {"R", coord_field(p.R)},
                   {"l", coord_field(p.l)},
                   {"r", coord_field(p.r)},
                   {"kind", p.bounded() ? "bounded" : "unbounded"}});
  return arr;
}

ProjectionRep projection_from(const json& arr) {
  if (!arr.is_array()) throw parse_error("projection must be an array");
  ProjectionRep rep;
  for (const json& x : arr) {
    Pgram p{read_coord(x, "L"), read_coord(x, "R"), read_coord(x, "l"), read_coord(x, "r"), Kind::Bounded};
    const std::string kind = x.value("kind", std::string("bounded"));
    if (kind == "unbounded")
      p.kind = Kind::Unbounded;
    else if (kind != "bounded")
      throw parse_error("unknown kind '" + kind + "'");
    rep.v.push_back(p);
  }
  return rep;
}

json trapezoid_json(const TrapezoidRep& rep) {
  json arr = json::array();
  for (const Trapezoid& t : rep.v)
    arr.push_back({{"A", coord_field(t.A)}, {"B", coord_field(t.B)}, {"a", coord_field(t.a)}, {"b", coord_field(t.b)}});
  return arr;
}

TrapezoidRep trapezoid_from(const json& arr) {
  if (!arr.is_array()) throw parse_error("trapezoid must be an array");
  TrapezoidRep rep;
  for (const json& x : arr) rep.v.push_back({read_coord(x, "A"), read_coord(x, "B"), read_coord(x, "a"), read_coord(x, "b")});
  return rep;
}

json tolerance_json(const ToleranceRep& tr) {
  json arr = json::array();
  for (const auto& x : tr.v) arr.push_back({{"lo", coord_field(x.lo)}, {"hi", coord_field(x.hi)}, {"t", coord_field(x.t)}});
  return arr;
}

ToleranceRep tolerance_from(const json& arr) {
  if (!arr.is_array()) throw parse_error("tolerance must be an array");
  ToleranceRep tr;
  for (const json& x : arr) tr.v.push_back({read_coord(x, "lo"), read_coord(x, "hi"), read_coord(x, "t")});
  return tr;
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw parse_error(e.what());
  }
}

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  return buf;
}

struct Scale {
  double lo = 0, span = 1;
  double operator()(const Coord& c) const { return (c.get_d() - lo) / span * 1000.0; }
};

Scale make_scale(const std::vector<Coord>& pts) {
  Scale s;
  if (pts.empty()) return s;
  const auto [mn, mx] = std::minmax_element(pts.begin(), pts.end());
  s.lo = mn->get_d();
  s.span = Coord(*mx - *mn).get_d();
  if (s.span <= 0) {
    s.lo -= 1;
    s.span = 2;
  }
  return s;
}

const char* palette(int i) {
  static const char* colors[] = {"#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f",
                                 "#edc948", "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac"};
  return colors[i % 10];
}

std::string svg_frame(const std::string& title, const std::string& body) {
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-20 -40 1040 170\">\n";
  if (!title.empty()) os << "  <title>" << title << "</title>\n";
  os << "  <line x1=\"-20\" y1=\"0\" x2=\"1020\" y2=\"0\" stroke=\"#000\" stroke-width=\"0.5\"/>\n";
  os << "  <line x1=\"-20\" y1=\"100\" x2=\"1020\" y2=\"100\" stroke=\"#000\" stroke-width=\"0.5\"/>\n";
  os << body << "</svg>\n";
  return os.str();
}

}  // namespace

InstanceFile parse_instance(const std::string& text) {
  const json j = parse_json(text);
  if (!j.is_object()) throw parse_error("instance must be a JSON object");
  InstanceFile f;
  f.format_version = j.value("format_version", 1);
  try {
    if (j.contains("projection")) f.projection = projection_from(j.at("projection"));
    if (j.contains("trapezoid")) f.trapezoid = trapezoid_from(j.at("trapezoid"));
    if (j.contains("tolerance")) f.tolerance = tolerance_from(j.at("tolerance"));
    if (j.contains("graph")) f.expected_graph = graph_from(j.at("graph"));
  } catch (const json::exception& e) {
    throw parse_error(e.what());
  }
  if (!f.projection && !f.trapezoid && !f.tolerance) throw parse_error("no representation present");
  return f;
}

std::string print_instance(const InstanceFile& f) {
  json j;
  j["format_version"] = f.format_version;
  if (f.projection) j["projection"] = projection_json(*f.projection);
  if (f.trapezoid) j["trapezoid"] = trapezoid_json(*f.trapezoid);
  if (f.tolerance) j["tolerance"] = tolerance_json(*f.tolerance);
  if (f.expected_graph) j["graph"] = graph_json(*f.expected_graph);
  return j.dump(2) + "\n";
}

InstanceFile read_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_instance(ss.str());
}

void write_instance(const std::string& path, const InstanceFile& f) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << print_instance(f);
}

std::string print_graph(const Graph& g) { return graph_json(g).dump() + "\n"; }

Graph parse_graph(const std::string& text) { return graph_from(parse_json(text)); }

std::string render_svg(const ProjectionRep& rep, const std::string& title) {
  std::vector<Coord> pts = endpoints_upper(rep);
  const auto low = endpoints_lower(rep);
  pts.insert(pts.end(), low.begin(), low.end());
  const Scale x = make_scale(pts);
  std::ostringstream body;
  for (int i = 0; i < rep.size(); ++i) {
    const Pgram& p = rep[i];
    if (p.unbounded()) {
      body << "  <line x1=\"" << num(x(p.L)) << "\" y1=\"0\" x2=\"" << num(x(p.l))
           << "\" y2=\"100\" stroke=\"#000\" stroke-width=\"3\"/>\n";
    } else {
      body << "  <polygon points=\"" << num(x(p.L)) << ",0 " << num(x(p.R)) << ",0 " << num(x(p.r)) << ",100 "
           << num(x(p.l)) << ",100\" fill=\"" << palette(i) << "\" fill-opacity=\"0.4\" stroke=\"" << palette(i)
           << "\"/>\n";
    }
    body << "  <text x=\"" << num(x(p.L)) << "\" y=\"" << (-8 - 12 * (i % 2)) << "\" font-size=\"10\">" << i
         << "</text>\n";
  }
  return svg_frame(title, body.str());
}

std::string render_svg(const TrapezoidRep& rep, const std::string& title) {
  std::vector<Coord> pts;
  for (const Trapezoid& t : rep.v) pts.insert(pts.end(), {t.A, t.B, t.a, t.b});
  const Scale x = make_scale(pts);
  std::ostringstream body;
  for (int i = 0; i < rep.size(); ++i) {
    const Trapezoid& t = rep[i];
    body << "  <polygon points=\"" << num(x(t.A)) << ",0 " << num(x(t.B)) << ",0 " << num(x(t.b)) << ",100 "
         << num(x(t.a)) << ",100\" fill=\"" << palette(i) << "\" fill-opacity=\"0.4\" stroke=\"" << palette(i)
         << "\"/>\n";
    body << "  <text x=\"" << num(x(t.A)) << "\" y=\"" << (-8 - 12 * (i % 2)) << "\" font-size=\"10\">" << i
         << "</text>\n";
  }
  return svg_frame(title, body.str());
}

}  // namespace tolkit
