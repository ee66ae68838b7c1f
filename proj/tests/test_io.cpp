#include <doctest.h>

#include "ptcat/dot.hpp"
#include "ptcat/json_io.hpp"
#include "ptcat/rng.hpp"

using namespace ptcat;

TEST_SUITE_BEGIN("io");

namespace {

IPath random_ipath(Rng& rng, int len) {
  std::vector<intp::IObj> objs;
  for (int i = 0; i <= len; ++i)
    objs.push_back({rng.uniform(0, 3), rng.uniform(0, 3)});
  IPath p;
  p.start = objs[0];
  for (int i = 0; i < len; ++i) {
    const auto& d = objs[static_cast<size_t>(i)];
    const auto& c = objs[static_cast<size_t>(i + 1)];
    p.arrows.push_back(intp::make_imor(
        d, c, random_matrix(rng, c.plus + d.minus, d.plus + c.minus)));
  }
  return p;
}

}  // namespace

TEST_CASE("matrix and path JSON round-trips") {
  Rng rng(71);
  for (int t = 0; t < 50; ++t) {
    Matrix m = random_matrix(rng, rng.uniform(0, 4), rng.uniform(0, 4));
    CHECK(matrix_from_json(matrix_to_json(m)) == m);
  }
  for (int t = 0; t < 20; ++t) {
    IPath p = random_ipath(rng, rng.uniform(0, 4));
    CHECK(ipath_from_json(ipath_to_json(p)) == p);
  }
  CHECK_THROWS(matrix_from_json(nlohmann::json{{"rows", 2}, {"cols", 2},
                                               {"entries", {"1"}}}));
  CHECK_THROWS(ipath_from_json(nlohmann::json{{"objects", nlohmann::json::array()},
                                              {"arrows", nlohmann::json::array()}}));
}

TEST_CASE("certificate JSON round-trips through the checker") {
  intp::IntpInstance ip;
  Rng rng(72);
  int found = 0;
  for (int t = 0; t < 20 && found < 5; ++t) {
    IPath p = random_ipath(rng, 2);
    auto c = paracat::pcompose(ip, p);
    if (!c.is_defined()) continue;
    ++found;
    auto cert = pathcomp::search_equiv(ip, p, paracat::single(ip, c.value()), 2);
    REQUIRE(cert.is_defined());
    ICert back = icert_from_json(icert_to_json(cert.value()));
    CHECK(back.start == cert.value().start);
    CHECK(back.steps.size() == cert.value().steps.size());
    CHECK(pathcomp::check_certificate(ip, back));
  }
  CHECK(found > 0);

  // Nested whisker certificates survive the round-trip too.
  IPath base = random_ipath(rng, 2);
  auto c = paracat::pcompose(ip, base);
  if (c.is_defined()) {
    pathcomp::Certificate<intp::IntpInstance> inner;
    inner.start = base;
    pathcomp::Step<intp::IntpInstance> s;
    s.rule = pathcomp::Rule::collapse;
    s.begin = 0;
    s.end = 2;
    s.result = paracat::single(ip, c.value());
    inner.steps.push_back(s);

    pathcomp::Certificate<intp::IntpInstance> outer;
    intp::IObj b{1, 1};
    outer.start = paracat::whisker_left(ip, b, base);
    pathcomp::Step<intp::IntpInstance> w;
    w.rule = pathcomp::Rule::whisker_left;
    w.object = b;
    w.inner.push_back(inner);
    w.result = paracat::whisker_left(ip, b, inner.final_path());
    outer.steps.push_back(w);
    REQUIRE(pathcomp::check_certificate(ip, outer));
    ICert back = icert_from_json(icert_to_json(outer));
    CHECK(pathcomp::check_certificate(ip, back));
  }
}

TEST_CASE("law report JSON schema") {
  AxiomReport good{"yanking", "#0", "≃", true, "l", "r", "DD"};
  AxiomReport bad{"vanishing-ii", "#1", "≃", false, "l", "r", "DDU"};
  auto j = reports_to_json("axioms", "ki", 2, 7, {good, bad});
  CHECK(j.at("suite") == "axioms");
  CHECK(j.at("impl") == "ki");
  CHECK(j.at("cases") == 2);
  CHECK(j.at("seed") == 7);
  CHECK(j.at("violations") == 1);
  CHECK(j.at("reports").size() == 2);
  CHECK(j.at("reports").at(0).at("verdict") == "pass");
  CHECK(j.at("reports").at(1).at("verdict") == "violation");
  CHECK(j.at("reports").at(1).at("law") == "vanishing-ii");

  // The paracategory checkers emit the same record type, so their reports
  // serialize through the same schema.
  auto j2 = reports_to_json("paracat", "ki", 1, 1,
                            {AxiomReport{"paracat-(c)", "path#0", "≃", true,
                                         "l", "r", "DD"}});
  CHECK(j2.at("suite") == "paracat");
  CHECK(j2.at("reports").at(0).at("law") == "paracat-(c)");
}

TEST_CASE("dot rendering has one dashed trace box") {
  Rng rng(73);
  IPath p = random_ipath(rng, 3);
  std::string dot = render_intp_path_dot(p.start, p.arrows);
  size_t count = 0;
  for (size_t pos = 0; (pos = dot.find("style=dashed", pos)) != std::string::npos;
       ++pos)
    ++count;
  CHECK(count == 1);
  CHECK(dot.find("digraph") == 0);
  CHECK(dot.find("p3") != std::string::npos);

  // Empty path renders too.
  std::string empty = render_intp_path_dot({1, 1}, {});
  CHECK(empty.find("id (1,1)") != std::string::npos);
}

TEST_SUITE_END();
