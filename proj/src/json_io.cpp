#include "ptcat/json_io.hpp"

#include <json.hpp>

namespace ptcat {

using nlohmann::json;

json matrix_to_json(const Matrix& m) {
  json entries = json::array();
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) entries.push_back(format_rational(m.at(i, j)));
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

Matrix matrix_from_json(const json& j) {
  int rows = j.at("rows").get<int>();
  int cols = j.at("cols").get<int>();
  const auto& entries = j.at("entries");
  if (static_cast<int>(entries.size()) != rows * cols)
    throw std::invalid_argument("matrix JSON: entry count does not match rows*cols");
  Matrix m(rows, cols);
  size_t k = 0;
  for (int i = 0; i < rows; ++i)
    for (int c = 0; c < cols; ++c)
      m.at(i, c) = parse_rational(entries.at(k++).get<std::string>());
  return m;
}

namespace {

json iobj_to_json(const intp::IObj& a) {
  return json{{"plus", a.plus}, {"minus", a.minus}};
}

intp::IObj iobj_from_json(const json& j) {
  return {j.at("plus").get<int>(), j.at("minus").get<int>()};
}

const char* rule_token(pathcomp::Rule r) {
  switch (r) {
    case pathcomp::Rule::collapse: return "collapse";
    case pathcomp::Rule::paracat_law: return "paracat-law";
    case pathcomp::Rule::concat_compat: return "concat-compat";
    case pathcomp::Rule::whisker_left: return "whisker-left";
    case pathcomp::Rule::whisker_right: return "whisker-right";
  }
  return "?";
}

pathcomp::Rule rule_from_token(const std::string& s) {
  if (s == "collapse") return pathcomp::Rule::collapse;
  if (s == "paracat-law") return pathcomp::Rule::paracat_law;
  if (s == "concat-compat") return pathcomp::Rule::concat_compat;
  if (s == "whisker-left") return pathcomp::Rule::whisker_left;
  if (s == "whisker-right") return pathcomp::Rule::whisker_right;
  throw std::invalid_argument("unknown rewrite rule '" + s + "'");
}

}  // namespace

json ipath_to_json(const IPath& p) {
  intp::IntpInstance inst;
  json objects = json::array();
  for (size_t i = 0; i <= p.arrows.size(); ++i)
    objects.push_back(iobj_to_json(paracat::obj_at(inst, p, i)));
  json arrows = json::array();
  for (const auto& f : p.arrows) arrows.push_back(matrix_to_json(f.under));
  return json{{"objects", objects}, {"arrows", arrows}};
}

IPath ipath_from_json(const json& j) {
  const auto& objects = j.at("objects");
  const auto& arrows = j.at("arrows");
  if (objects.size() != arrows.size() + 1)
    throw std::invalid_argument("path JSON: need one more object than arrows");
  IPath p;
  p.start = iobj_from_json(objects.at(0));
  for (size_t i = 0; i < arrows.size(); ++i)
    p.arrows.push_back(intp::make_imor(iobj_from_json(objects.at(i)),
                                       iobj_from_json(objects.at(i + 1)),
                                       matrix_from_json(arrows.at(i))));
  return p;
}

json icert_to_json(const ICert& c) {
  json steps = json::array();
  for (const auto& s : c.steps) {
    json step{{"rule", rule_token(s.rule)},
              {"reversed", s.reversed},
              {"begin", s.begin},
              {"end", s.end},
              {"result", ipath_to_json(s.result)}};
    if (s.rule == pathcomp::Rule::whisker_left ||
        s.rule == pathcomp::Rule::whisker_right)
      step["object"] = iobj_to_json(s.object);
    if (!s.inner.empty()) {
      json inner = json::array();
      for (const auto& ic : s.inner) inner.push_back(icert_to_json(ic));
      step["inner"] = inner;
    }
    steps.push_back(std::move(step));
  }
  return json{{"start", ipath_to_json(c.start)}, {"steps", steps}};
}

ICert icert_from_json(const json& j) {
  ICert c;
  c.start = ipath_from_json(j.at("start"));
  for (const auto& sj : j.at("steps")) {
    pathcomp::Step<intp::IntpInstance> s;
    s.rule = rule_from_token(sj.at("rule").get<std::string>());
    s.reversed = sj.value("reversed", false);
    s.begin = sj.value("begin", size_t{0});
    s.end = sj.value("end", size_t{0});
    if (sj.contains("object")) s.object = iobj_from_json(sj.at("object"));
    if (sj.contains("inner"))
      for (const auto& ij : sj.at("inner")) s.inner.push_back(icert_from_json(ij));
    s.result = ipath_from_json(sj.at("result"));
    c.steps.push_back(std::move(s));
  }
  return c;
}

json reports_to_json(const std::string& suite, const std::string& impl, int cases,
                     uint64_t seed, const std::vector<AxiomReport>& reports) {
  json list = json::array();
  for (const auto& r : reports)
    list.push_back(json{{"law", r.axiom},
                        {"instance", r.instance},
                        {"relation", r.relation},
                        {"verdict", r.pass ? "pass" : "violation"},
                        {"left", r.left},
                        {"right", r.right}});
  return json{{"suite", suite},
              {"impl", impl},
              {"cases", cases},
              {"seed", seed},
              {"violations", count_violations(reports)},
              {"reports", list}};
}

}  // namespace ptcat
