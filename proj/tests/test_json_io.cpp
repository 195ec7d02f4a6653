#include <doctest.h>

#include <cstdio>
#include <filesystem>

#include "shiftalg/json_io.hpp"

using namespace shiftalg;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvalidValue;
}

}  // namespace

TEST_CASE("Binarion round trip") {
  const Binarion a(0.1, -2.5, Signature::Complex);
  const Json j = to_json(a);
  CHECK(j.dump() == R"({"x":0.1,"y":-2.5,"eps":-1})");
  CHECK(binarion_from_json(j) == a);
  CHECK(binarion_from_json(Json::parse(R"({"x":1,"y":2})")) == Binarion(1, 2));
  CHECK(code_of([] { binarion_from_json(Json::parse(R"({"x":1})")); }) == ErrorCode::Io);
  CHECK(code_of([] { binarion_from_json(Json::parse(R"({"x":1,"y":"2"})")); }) == ErrorCode::Io);
  CHECK(code_of([] { binarion_from_json(Json::parse(R"({"x":1,"y":2,"eps":3})")); }) == ErrorCode::Io);
}

TEST_CASE("small value types") {
  CHECK(to_json(HyperbolicForm{4, 0.5}).dump() == R"({"rho":4.0,"theta":0.5})");
  const HyperbolicForm h = hyperbolic_from_json(Json::parse(R"({"rho":2,"theta":-1})"));
  CHECK(h.rho == 2.0);
  CHECK(h.theta == -1.0);
  const Mat2 m{1, 2, 3, 4};
  CHECK(to_json(m).dump() == R"({"m":[[1.0,2.0],[3.0,4.0]]})");
  CHECK(mat2_from_json(to_json(m)) == m);
  CHECK(code_of([] { mat2_from_json(Json::parse(R"({"m":[[1,2,3],[3,4]]})")); }) == ErrorCode::Io);
  Region r;
  r.tag = RegionTag::V;
  r.det = -0.28;
  r.in_V = true;
  r.in_LC2_star = true;
  const Json rj = to_json(r);
  CHECK(rj["tag"] == "V");
  CHECK(rj["V"] == true);
  CHECK(rj["H"] == false);
}

TEST_CASE("signals") {
  const SampledSignal s({1, 2, 3, 4}, SignalKind::Antiperiodic2);
  const Json j = to_json(s);
  CHECK(j.dump() == R"({"kind":"antiperiodic2","n":4,"samples":[1.0,2.0,3.0,4.0]})");
  const SampledSignal back = signal_from_json(j);
  CHECK(back.samples() == s.samples());
  CHECK(back.kind() == s.kind());
  CHECK(code_of([] { signal_from_json(Json::parse(R"({"kind":"periodic2","samples":[1,2,3]})")); }) ==
        ErrorCode::Io);
  CHECK(code_of([] {
          signal_from_json(Json::parse(R"({"kind":"periodic2","n":4,"samples":[1,2]})"));
        }) == ErrorCode::Io);
  CHECK(code_of([] { signal_from_json(Json::parse(R"({"kind":"odd","samples":[1,2]})")); }) ==
        ErrorCode::Io);

  const SampledSignal c = signal_from_csv("t,value\n0,1\n0.5,2\n1,3\r\n1.5,4\n\n", SignalKind::Periodic2);
  CHECK(c.samples() == std::vector<double>{1, 2, 3, 4});
  CHECK(code_of([] { signal_from_csv("0,1\n0,2\n", SignalKind::Periodic2); }) == ErrorCode::Io);
  CHECK(code_of([] { signal_from_csv("0,1\nx,2\n", SignalKind::Periodic2); }) == ErrorCode::Io);
}

TEST_CASE("field grids") {
  const Json j = Json::parse(R"({"xmin":0,"xmax":1,"ymin":0,"ymax":1,"nx":3,"ny":3,
    "u":[0,1,2,3,4,5,6,7,8],"v":[0,0,0,0,0,0,0,0,0]})");
  const FieldGrid g = grid_from_json(j);
  CHECK(g.geom.nx == 3);
  CHECK(g.u[g.geom.index(2, 1)] == 5.0);
  CHECK(g.sig == Signature::Split);
  Json k = j;
  k["eps"] = -1;
  CHECK(grid_from_json(k).sig == Signature::Complex);
  CHECK(grid_from_json(to_json(g)).u == g.u);
  Json bad = j;
  bad["u"].erase(0);
  CHECK(code_of([&] { grid_from_json(bad); }) == ErrorCode::Io);
}

TEST_CASE("contours") {
  const Json j = Json::parse(R"({"closed":true,"segments":[
    {"type":"line","from":[0,0],"to":[1,0]},
    {"type":"path","points":[[0,1,0],[0.5,0.5,0.5],[1,0,1]]},
    {"type":"line","from":[0,1],"to":[0,0]}]})");
  const Contour c = contour_from_json(j);
  CHECK(c.closed());
  CHECK(c.segments().size() == 3);
  CHECK(contour_from_json(to_json(c)).segments().size() == 3);
  CHECK(to_json(c) == to_json(contour_from_json(to_json(c))));

  const Contour circ = contour_from_json(
      Json::parse(R"({"closed":true,"segments":[{"type":"circle","cx":1,"cy":2,"r":3,"orientation":-1}]})"));
  CHECK(std::get<Circle>(circ.segments()[0]).orientation == -1);

  CHECK(code_of([] {
          contour_from_json(Json::parse(R"({"closed":true,"segments":[{"type":"spiral"}]})"));
        }) == ErrorCode::Io);
  CHECK(code_of([] {
          contour_from_json(Json::parse(
              R"({"closed":true,"segments":[{"type":"line","from":[0,0],"to":[1,0]}]})"));
        }) == ErrorCode::Io);
}

TEST_CASE("files") {
  const auto dir = std::filesystem::temp_directory_path() / "shiftalg_json_io_test";
  std::filesystem::create_directories(dir);
  const std::string path = (dir / "a.json").string();
  write_text_file(path, R"({"x":1,"y":2,"eps":0})");
  CHECK(binarion_from_json(read_json_file(path)) == Binarion(1, 2, Signature::Parabolic));
  write_text_file(path, "{not json");
  CHECK(code_of([&] { read_json_file(path); }) == ErrorCode::Io);
  CHECK(code_of([&] { read_text_file((dir / "missing.json").string()); }) == ErrorCode::Io);
  CHECK(code_of([&] { write_text_file((dir / "no/such/dir/x").string(), "x"); }) == ErrorCode::Io);
  std::filesystem::remove_all(dir);
}
