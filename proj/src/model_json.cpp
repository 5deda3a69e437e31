/* JSON forms of path families, plane partition pairs, and Magog triangles. */
#include "vsasm/model_json.hpp"

#include <stdexcept>

#include "vsasm/poly_json.hpp"

namespace vsasm {

namespace {

const char* interp_name(Interp interp) {
  switch (interp) {
    case Interp::I1:
      return "I1";
    case Interp::I2:
      return "I2";
    case Interp::I3:
      return "I3";
    default:
      return "JT4";
  }
}

nlohmann::json rows_to_json(const PPRows& rows) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& row : rows) j.push_back(row);
  return j;
}

PPRows rows_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an array of rows");
  PPRows rows;
  for (const auto& row : j) rows.push_back(row.get<std::vector<int>>());
  return rows;
}

}  // namespace

nlohmann::json family_to_json(const PathFamily& f) {
  nlohmann::json paths = nlohmann::json::array();
  for (const auto& p : f.paths) {
    nlohmann::json path = nlohmann::json::array();
    for (const Point& q : p) path.push_back({q.x, q.y});
    paths.push_back(path);
  }
  nlohmann::json sigma = nlohmann::json::array();
  for (int s : f.sigma) sigma.push_back(s + 1);
  return {{"interpretation", interp_name(f.interp)},
          {"sigma", sigma},
          {"paths", paths},
          {"weight", poly_to_json(f.weight)}};
}

nlohmann::json pair_to_json(const PPPair& pair) {
  return {{"P", rows_to_json(pair.p)}, {"Q", rows_to_json(pair.q)}};
}

PPPair pair_from_json(const nlohmann::json& j) {
  return PPPair{rows_from_json(j.at("P")), rows_from_json(j.at("Q"))};
}

nlohmann::json magog_to_json(const MagogTriangle& m) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& row : m) j.push_back(row);
  return j;
}

PPRows rspp_from_json(const nlohmann::json& j) {
  if (j.is_object()) return rows_from_json(j.at("Q"));
  return rows_from_json(j);
}

}  // namespace vsasm
