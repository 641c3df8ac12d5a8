#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "liegeo/inner_product.hpp"
#include "liegeo/lie_algebra.hpp"

namespace liegeo {

/// A human-writable description of an algebra plus optional inner product.
/// JSON schema (indices are 1-based, mirroring how relations are printed):
///
///   {
///     "name": "example5",            // optional
///     "dim": 5,
///     "brackets": [
///       {"i": 1, "j": 2, "coeffs": {"2": 3.0}},
///       ...
///     ],
///     "gram": [[...], ...]           // optional, defaults to the identity
///   }
struct ProblemFile {
  struct Bracket {
    int i = 0;  // 1-based
    int j = 0;
    std::vector<std::pair<int, double>> coeffs;  // (k 1-based, coefficient)
  };

  std::string name;
  int dim = 0;
  std::vector<Bracket> brackets;
  std::optional<Mat> gram;
};

class ProblemFileError : public std::runtime_error {
 public:
  explicit ProblemFileError(const std::string& what) : std::runtime_error(what) {}
};

ProblemFile parse_problem_file(const std::string& text);
ProblemFile load_problem_file(const std::string& path);

/// Canonical serialization; numbers survive a round trip bit for bit.
std::string serialize_problem_file(const ProblemFile& pf);

LieAlgebra to_algebra(const ProblemFile& pf);
InnerProduct to_metric(const ProblemFile& pf);  // identity when gram is absent

ProblemFile from_algebra(const std::string& name, const LieAlgebra& alg,
                         const std::optional<Mat>& gram = std::nullopt);

}  // namespace liegeo
