#include <doctest.h>

#include "liegeo/catalog.hpp"
#include "liegeo/problem_file.hpp"

using namespace liegeo;

TEST_CASE("parsing a well-formed file") {
  const std::string text = R"({
    "name": "demo",
    "dim": 3,
    "brackets": [{"i": 1, "j": 2, "coeffs": {"3": 1.0}}],
    "gram": [[1, 0, 0], [0, 2, 0], [0, 0, 1]]
  })";
  const ProblemFile pf = parse_problem_file(text);
  CHECK(pf.name == "demo");
  CHECK(pf.dim == 3);
  REQUIRE(pf.brackets.size() == 1);
  CHECK(pf.brackets[0].i == 1);
  CHECK(pf.brackets[0].j == 2);
  const LieAlgebra alg = to_algebra(pf);
  CHECK(alg.structure_constant(0, 1, 2) == 1.0);
  CHECK(to_metric(pf).ip(basis_vector(3, 1), basis_vector(3, 1)) == 2.0);
}

TEST_CASE("parse errors carry a diagnostic") {
  CHECK_THROWS_AS(parse_problem_file("{"), ProblemFileError);
  CHECK_THROWS_AS(parse_problem_file(R"({"dim": 2, "brackets": 5})"), ProblemFileError);
  // index out of range
  CHECK_THROWS_WITH_AS(
      parse_problem_file(R"({"dim": 5, "brackets": [{"i": 1, "j": 7, "coeffs": {}}]})"),
      doctest::Contains("outside [1, 5]"), ProblemFileError);
  // repeated unordered pair
  CHECK_THROWS_WITH_AS(parse_problem_file(R"({"dim": 3, "brackets": [
        {"i": 1, "j": 2, "coeffs": {"3": 1.0}},
        {"i": 2, "j": 1, "coeffs": {"3": -1.0}}]})"),
                       doctest::Contains("twice"), ProblemFileError);
  // i == j
  CHECK_THROWS_AS(parse_problem_file(R"({"dim": 3, "brackets": [{"i": 2, "j": 2, "coeffs": {}}]})"),
                  ProblemFileError);
  // non-SPD gram surfaces through to_metric
  const ProblemFile bad = parse_problem_file(
      R"({"dim": 2, "brackets": [], "gram": [[1, 0], [0, -1]]})");
  CHECK_THROWS_AS(to_metric(bad), ProblemFileError);
}

TEST_CASE("round trip reproduces structure constants bit for bit") {
  for (const auto& entry : standard_algebras()) {
    const ProblemFile pf = from_algebra(entry.name, entry.algebra);
    const ProblemFile back = parse_problem_file(serialize_problem_file(pf));
    CHECK(back.dim == entry.algebra.dim());
    const LieAlgebra alg = to_algebra(back);
    for (int i = 0; i < alg.dim(); ++i)
      for (int j = 0; j < alg.dim(); ++j)
        for (int k = 0; k < alg.dim(); ++k)
          CHECK(alg.structure_constant(i, j, k) == entry.algebra.structure_constant(i, j, k));
  }
  // an awkward double survives the trip exactly
  ProblemFile pf;
  pf.dim = 2;
  pf.brackets.push_back({1, 2, {{1, 0.1 + 0.2}, {2, 1.0 / 3.0}}});
  const ProblemFile back = parse_problem_file(serialize_problem_file(pf));
  CHECK(back.brackets[0].coeffs[0].second == 0.1 + 0.2);
  CHECK(back.brackets[0].coeffs[1].second == 1.0 / 3.0);
}

TEST_CASE("serialization is stable") {
  const ProblemFile pf = from_algebra("example5", example5());
  const std::string once = serialize_problem_file(pf);
  const std::string twice = serialize_problem_file(parse_problem_file(once));
  CHECK(once == twice);
}
