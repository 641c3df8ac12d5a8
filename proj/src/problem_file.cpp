#include "liegeo/problem_file.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "liegeo/tolerances.hpp"

namespace liegeo {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& msg) { throw ProblemFileError(msg); }

int get_index(const json& j, const char* field, int dim, const std::string& where) {
  if (!j.contains(field) || !j[field].is_number_integer())
    fail(where + ": missing integer field '" + field + "'");
  const int v = j[field].get<int>();
  if (v < 1 || v > dim)
    fail(where + ": index " + field + "=" + std::to_string(v) + " outside [1, " +
         std::to_string(dim) + "]");
  return v;
}

}  // namespace

ProblemFile parse_problem_file(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) fail("top level must be an object");
  ProblemFile pf;
  if (j.contains("name")) {
    if (!j["name"].is_string()) fail("'name' must be a string");
    pf.name = j["name"].get<std::string>();
  }
  if (!j.contains("dim") || !j["dim"].is_number_integer()) fail("missing integer field 'dim'");
  pf.dim = j["dim"].get<int>();
  if (pf.dim < 0 || pf.dim > 64) fail("'dim' must lie in [0, 64]");

  std::set<std::pair<int, int>> seen;
  if (j.contains("brackets")) {
    if (!j["brackets"].is_array()) fail("'brackets' must be an array");
    int entry = 0;
    for (const auto& b : j["brackets"]) {
      ++entry;
      const std::string where = "brackets[" + std::to_string(entry - 1) + "]";
      if (!b.is_object()) fail(where + ": must be an object");
      ProblemFile::Bracket br;
      br.i = get_index(b, "i", pf.dim, where);
      br.j = get_index(b, "j", pf.dim, where);
      if (br.i == br.j) fail(where + ": i and j must differ");
      const auto key = std::minmax(br.i, br.j);
      if (!seen.insert({key.first, key.second}).second)
        fail(where + ": pair (" + std::to_string(br.i) + ", " + std::to_string(br.j) +
             ") specified twice");
      if (!b.contains("coeffs") || !b["coeffs"].is_object())
        fail(where + ": missing object field 'coeffs'");
      for (const auto& [k_str, val] : b["coeffs"].items()) {
        int k = 0;
        try {
          size_t used = 0;
          k = std::stoi(k_str, &used);
          if (used != k_str.size()) fail("");
        } catch (...) {
          fail(where + ": coefficient key '" + k_str + "' is not an index");
        }
        if (k < 1 || k > pf.dim)
          fail(where + ": coefficient index " + std::to_string(k) + " outside [1, " +
               std::to_string(pf.dim) + "]");
        if (!val.is_number()) fail(where + ": coefficient for '" + k_str + "' must be a number");
        br.coeffs.emplace_back(k, val.get<double>());
      }
      std::sort(br.coeffs.begin(), br.coeffs.end());
      pf.brackets.push_back(std::move(br));
    }
  }

  if (j.contains("gram")) {
    const auto& g = j["gram"];
    if (!g.is_array() || static_cast<int>(g.size()) != pf.dim) fail("'gram' must be a dim x dim matrix");
    Mat gram(pf.dim, pf.dim);
    for (int r = 0; r < pf.dim; ++r) {
      if (!g[r].is_array() || static_cast<int>(g[r].size()) != pf.dim)
        fail("'gram' row " + std::to_string(r) + " must have dim entries");
      for (int c = 0; c < pf.dim; ++c) {
        if (!g[r][c].is_number()) fail("'gram' entries must be numbers");
        gram(r, c) = g[r][c].get<double>();
      }
    }
    pf.gram = std::move(gram);
  }
  return pf;
}

ProblemFile load_problem_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_problem_file(ss.str());
}

std::string serialize_problem_file(const ProblemFile& pf) {
  json j;
  if (!pf.name.empty()) j["name"] = pf.name;
  j["dim"] = pf.dim;
  j["brackets"] = json::array();
  for (const auto& b : pf.brackets) {
    json coeffs = json::object();
    for (const auto& [k, v] : b.coeffs) coeffs[std::to_string(k)] = v;
    j["brackets"].push_back(json{{"i", b.i}, {"j", b.j}, {"coeffs", std::move(coeffs)}});
  }
  if (pf.gram.has_value()) {
    json rows = json::array();
    for (const Vec& r : pf.gram->rows_as_vectors()) rows.push_back(r);
    j["gram"] = std::move(rows);
  }
  return j.dump(2) + "\n";
}

LieAlgebra to_algebra(const ProblemFile& pf) {
  std::vector<BracketRelation> rel;
  rel.reserve(pf.brackets.size());
  for (const auto& b : pf.brackets) {
    BracketRelation r;
    r.i = b.i - 1;
    r.j = b.j - 1;
    for (const auto& [k, v] : b.coeffs) r.coeffs.emplace_back(k - 1, v);
    rel.push_back(std::move(r));
  }
  return LieAlgebra::from_relations(pf.dim, rel);
}

InnerProduct to_metric(const ProblemFile& pf) {
  if (!pf.gram.has_value()) return InnerProduct::identity(pf.dim);
  try {
    return InnerProduct(*pf.gram);
  } catch (const std::invalid_argument& e) {
    throw ProblemFileError(std::string("'gram' is not a valid inner product: ") + e.what());
  }
}

ProblemFile from_algebra(const std::string& name, const LieAlgebra& alg,
                         const std::optional<Mat>& gram) {
  ProblemFile pf;
  pf.name = name;
  pf.dim = alg.dim();
  for (int i = 0; i < alg.dim(); ++i)
    for (int j = i + 1; j < alg.dim(); ++j) {
      ProblemFile::Bracket b;
      b.i = i + 1;
      b.j = j + 1;
      for (int k = 0; k < alg.dim(); ++k) {
        const double c = alg.structure_constant(i, j, k);
        if (c != 0.0) b.coeffs.emplace_back(k + 1, c);
      }
      if (!b.coeffs.empty()) pf.brackets.push_back(std::move(b));
    }
  pf.gram = gram;
  return pf;
}

}  // namespace liegeo
