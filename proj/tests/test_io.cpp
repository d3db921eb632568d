#include <gtest/gtest.h>

#include "railstick/catalog.hpp"
#include "railstick/io.hpp"

using namespace railstick;

TEST(Io, Rationals) {
  EXPECT_EQ(parse_rational(Json(3)), Rational(3));
  EXPECT_EQ(parse_rational(Json("-3/4")), Rational(-3, 4));
  EXPECT_EQ(rational_json(make_rational(6, 8)), Json("3/4"));
  EXPECT_EQ(rational_json(Rational(2)), Json(2));
  EXPECT_THROW(parse_rational(Json("x/2")), InputError);
  EXPECT_THROW(parse_rational(Json("1/0")), InputError);
  EXPECT_THROW(parse_rational(Json(0.5)), InputError);
}

TEST(Io, ObjectsRoundTrip) {
  for (const auto& name : Catalog::shipped().names()) {
    const Object& o = Catalog::shipped().get(name).conformation;
    const Json j = to_json(o);
    EXPECT_EQ(to_json(parse_object(j)), j) << name;
    EXPECT_EQ(to_json(parse_object(Json::parse(j.dump()))), j) << name;
  }
}

TEST(Io, CodesRoundTrip) {
  const Json k = {{"type", "knotoid"}, {"code", "O1+ U1+ / outer=0:1R"}};
  EXPECT_EQ(to_json(parse_object(k)), k);
  const Object pd = parse_object(Json{{"type", "pd"}, {"pd", "X(1,1,2,2)"}});
  EXPECT_TRUE(std::holds_alternative<PDCode>(pd));
}

TEST(Io, RejectsMalformed) {
  EXPECT_THROW(parse_object(Json{{"type", "spline"}}), InputError);
  EXPECT_THROW(parse_object(Json{{"type", "rail-arc"}, {"vertices", {{0, 0}}}}), InputError);
  EXPECT_THROW(read_object("/nonexistent/arc.json"), InputError);
}

TEST(Io, SvgMarksEndpoints) {
  const auto& a = std::get<StickRailArc>(Catalog::shipped().get("2_1").conformation);
  const std::string svg = render_svg(project(a));
  EXPECT_EQ(svg.rfind("<svg", 0), 0u);
  EXPECT_NE(svg.find("<circle"), std::string::npos);
  const std::string obj = render_obj({{a.vertices, false}}, true);
  EXPECT_NE(obj.find("\nl "), std::string::npos);
}
