#pragma once

// JSON and CSV serialization for algebra elements and representation
// matrices.  Scalars travel as strings in the text grammar, everything
// structural as plain arrays, so files round-trip exactly.

#include <yhe/parse.hpp>
#include <yhe/tensorrep.hpp>

#include <json.hpp>

namespace yhe {

using nlohmann::json;

inline json to_json(const YElement& a) {
  json terms = json::array();
  for (const auto& [key, c] : a.terms()) {
    json t = json::object();
    t["coeff"] = c.str();
    t["t"] = key.first;
    t["w"] = key.second.images();
    terms.push_back(t);
  }
  return json{{"r", a.r()}, {"n", a.n()}, {"terms", terms}};
}

inline YElement y_from_json(const json& j) {
  int r = j.at("r"), n = j.at("n");
  YElement out = YElement::zero(r, n);
  for (const auto& t : j.at("terms")) {
    std::vector<int> tv = t.at("t");
    Perm w(t.at("w").get<std::vector<int>>());
    out.add_term(tv, w, parse_scalar(t.at("coeff"), r));
  }
  return out;
}

inline json to_json(const EtElement& a) {
  json terms = json::array();
  for (const auto& [key, c] : a.terms()) {
    json t = json::object();
    t["coeff"] = c.str();
    t["A"] = key.first.blocks();
    t["w"] = key.second.images();
    terms.push_back(t);
  }
  return json{{"n", a.n()}, {"terms", terms}};
}

inline EtElement et_from_json(const json& j) {
  int n = j.at("n");
  EtElement out = EtElement::zero(n);
  for (const auto& t : j.at("terms")) {
    SetPartition A(n, t.at("A").get<std::vector<std::vector<int>>>());
    Perm w(t.at("w").get<std::vector<int>>());
    out.add_term(A, w, parse_scalar(t.at("coeff"), 1));
  }
  return out;
}

// Matrices carry the index convention in the header so two exports of the
// same operator are bit-for-bit identical.
inline json to_json(const TensorSpace& ts, const OpMatrix& m) {
  json entries = json::array();
  for (long x = 0; x < m.dim(); x++)
    for (const auto& [y, c] : m.row(x)) entries.push_back(json::array({x, y, c.str()}));
  return json{{"r", ts.r()},
              {"n", ts.n()},
              {"dim", m.dim()},
              {"index", "row-major over factors, position 1 most significant; "
                        "factor index (i-1)*r+t for basis vector v_i^t"},
              {"entries", entries}};
}

inline OpMatrix matrix_from_json(const json& j) {
  int r = j.at("r");
  OpMatrix m(r, (long)j.at("dim"));
  for (const auto& e : j.at("entries"))
    m.add((long)e.at(0), (long)e.at(1), parse_scalar(e.at(2), r));
  return m;
}

inline std::string to_csv(const OpMatrix& m) {
  std::string out = "row,col,value\n";
  for (long x = 0; x < m.dim(); x++)
    for (const auto& [y, c] : m.row(x))
      out += std::to_string(x) + "," + std::to_string(y) + "," + c.str() + "\n";
  return out;
}

}  // namespace yhe
