#include "shiftalg/json_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace shiftalg {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::Io, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) bad("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing field \"") + key + "\"");
  return *it;
}

double number(const Json& j, const char* what) {
  if (!j.is_number()) bad(std::string("field \"") + what + "\" must be a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) bad(std::string("field \"") + what + "\" must be finite");
  return v;
}

double number_field(const Json& j, const char* key) { return number(field(j, key), key); }

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) bad(std::string("field \"") + key + "\" must be an integer");
  return v.get<int>();
}

std::vector<double> number_array(const Json& j, const char* key) {
  if (!j.is_array()) bad(std::string("field \"") + key + "\" must be an array");
  std::vector<double> out;
  out.reserve(j.size());
  for (const Json& e : j) out.push_back(number(e, key));
  return out;
}

Point2 point(const Json& j, const char* key) {
  const std::vector<double> p = number_array(j, key);
  if (p.size() != 2) bad(std::string("field \"") + key + "\" must be [x, y]");
  return {p[0], p[1]};
}

// Runs a constructor that validates its input, reporting failures as I/O.
template <class F>
auto validated(F&& make) -> decltype(make()) {
  try {
    return make();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Io) throw;
    bad(std::string("invalid content: ") + e.what());
  }
}

}  // namespace

Json to_json(const Binarion& a) { return {{"x", a.x()}, {"y", a.y()}, {"eps", a.eps()}}; }

Binarion binarion_from_json(const Json& j) {
  const double x = number_field(j, "x");
  const double y = number_field(j, "y");
  const int eps = j.contains("eps") ? int_field(j, "eps") : 1;
  return validated([&] { return Binarion(x, y, signature_from_int(eps)); });
}

Json to_json(const HyperbolicForm& h) { return {{"rho", h.rho}, {"theta", h.theta}}; }

HyperbolicForm hyperbolic_from_json(const Json& j) {
  return {number_field(j, "rho"), number_field(j, "theta")};
}

Json to_json(const Mat2& m) {
  return {{"m", Json::array({Json::array({m.m11, m.m12}), Json::array({m.m21, m.m22})})}};
}

Mat2 mat2_from_json(const Json& j) {
  const Json& m = field(j, "m");
  if (!m.is_array() || m.size() != 2) bad("field \"m\" must be a 2x2 array");
  const std::vector<double> r1 = number_array(m[0], "m");
  const std::vector<double> r2 = number_array(m[1], "m");
  if (r1.size() != 2 || r2.size() != 2) bad("field \"m\" must be a 2x2 array");
  return {r1[0], r1[1], r2[0], r2[1]};
}

Json to_json(const Region& r) {
  return {{"tag", region_tag_name(r.tag)}, {"det", r.det},
          {"LC2_star", r.in_LC2_star},     {"H", r.in_H},
          {"V", r.in_V},                   {"U", r.in_U},
          {"N", r.in_N},                   {"E", r.in_Ecal}};
}

Json to_json(const SampledSignal& s) {
  return {{"kind", signal_kind_name(s.kind())}, {"n", s.size()}, {"samples", s.samples()}};
}

SampledSignal signal_from_json(const Json& j) {
  const Json& kind = field(j, "kind");
  if (!kind.is_string()) bad("field \"kind\" must be a string");
  std::vector<double> samples = number_array(field(j, "samples"), "samples");
  if (j.contains("n")) {
    const int n = int_field(j, "n");
    if (n < 0 || static_cast<std::size_t>(n) != samples.size()) {
      bad("field \"n\" does not match the number of samples");
    }
  }
  return validated([&] {
    return SampledSignal(std::move(samples), signal_kind_from_name(kind.get<std::string>()));
  });
}

SampledSignal signal_from_csv(const std::string& text, SignalKind kind) {
  std::istringstream in(text);
  std::string line;
  std::vector<double> values;
  double last_t = -INFINITY;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) bad("CSV line " + std::to_string(lineno) + ": expected t,value");
    double t = 0.0;
    double v = 0.0;
    try {
      std::size_t used = 0;
      t = std::stod(line.substr(0, comma), &used);
      v = std::stod(line.substr(comma + 1), &used);
    } catch (const std::exception&) {
      if (values.empty() && lineno == 1) continue;  // header
      bad("CSV line " + std::to_string(lineno) + ": expected t,value");
    }
    if (!(t > last_t)) bad("CSV line " + std::to_string(lineno) + ": t must increase");
    last_t = t;
    values.push_back(v);
  }
  return validated([&] { return SampledSignal(std::move(values), kind); });
}

FieldGrid grid_from_json(const Json& j, Signature sig) {
  GridGeometry g;
  g.xmin = number_field(j, "xmin");
  g.xmax = number_field(j, "xmax");
  g.ymin = number_field(j, "ymin");
  g.ymax = number_field(j, "ymax");
  g.nx = int_field(j, "nx");
  g.ny = int_field(j, "ny");
  if (j.contains("eps")) sig = validated([&] { return signature_from_int(int_field(j, "eps")); });
  std::vector<double> u = number_array(field(j, "u"), "u");
  std::vector<double> v = number_array(field(j, "v"), "v");
  return validated([&] { return FieldGrid::from_arrays(g, sig, std::move(u), std::move(v)); });
}

Json to_json(const FieldGrid& g) {
  return {{"xmin", g.geom.xmin}, {"xmax", g.geom.xmax}, {"ymin", g.geom.ymin},
          {"ymax", g.geom.ymax}, {"nx", g.geom.nx},     {"ny", g.geom.ny},
          {"eps", eps_of(g.sig)}, {"u", g.u},           {"v", g.v}};
}

namespace {

Json segment_json(const Segment& s) {
  if (const auto* c = std::get_if<Circle>(&s)) {
    Json j = {{"type", "circle"}, {"cx", c->cx}, {"cy", c->cy}, {"r", c->r}};
    if (c->orientation != 1) j["orientation"] = c->orientation;
    return j;
  }
  if (const auto* l = std::get_if<LineSegment>(&s)) {
    return {{"type", "line"},
            {"from", Json::array({l->x0, l->y0})},
            {"to", Json::array({l->x1, l->y1})}};
  }
  Json pts = Json::array();
  for (const PathPoint& p : std::get<SampledPath>(s).points) pts.push_back({p.t, p.x, p.y});
  return {{"type", "path"}, {"points", std::move(pts)}};
}

Segment segment_from_json(const Json& j) {
  const Json& type = field(j, "type");
  if (!type.is_string()) bad("segment \"type\" must be a string");
  const std::string t = type.get<std::string>();
  if (t == "circle") {
    Circle c{number_field(j, "cx"), number_field(j, "cy"), number_field(j, "r"), 1};
    if (j.contains("orientation")) c.orientation = int_field(j, "orientation");
    return c;
  }
  if (t == "line") {
    const Point2 a = point(field(j, "from"), "from");
    const Point2 b = point(field(j, "to"), "to");
    return LineSegment{a.x, a.y, b.x, b.y};
  }
  if (t == "path") {
    const Json& pts = field(j, "points");
    if (!pts.is_array()) bad("field \"points\" must be an array");
    SampledPath path;
    for (const Json& p : pts) {
      const std::vector<double> v = number_array(p, "points");
      if (v.size() != 3) bad("path points must be [t, x, y]");
      path.points.push_back({v[0], v[1], v[2]});
    }
    return path;
  }
  bad("unknown segment type \"" + t + "\"");
}

}  // namespace

Json to_json(const Contour& c) {
  Json segs = Json::array();
  for (const Segment& s : c.segments()) segs.push_back(segment_json(s));
  return {{"closed", c.closed()}, {"segments", std::move(segs)}};
}

Contour contour_from_json(const Json& j) {
  const Json& closed = field(j, "closed");
  if (!closed.is_boolean()) bad("field \"closed\" must be a boolean");
  const Json& segs = field(j, "segments");
  if (!segs.is_array()) bad("field \"segments\" must be an array");
  std::vector<Segment> segments;
  for (const Json& s : segs) segments.push_back(segment_from_json(s));
  return validated([&] { return Contour(std::move(segments), closed.get<bool>()); });
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) bad("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) bad("cannot read " + path);
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) bad("cannot write " + path);
  out << text;
  if (!out) bad("cannot write " + path);
}

Json read_json_file(const std::string& path) {
  const std::string text = read_text_file(path);
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    bad(path + ": " + e.what());
  }
}

}  // namespace shiftalg
