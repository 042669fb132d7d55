#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pqgroup/enumerate.hpp"
#include "pqgroup/group.hpp"
#include "pqgroup/morphism.hpp"
#include "pqgroup/product.hpp"

namespace pqgroup::fixtures {

struct Named {
  std::string name;
  GroupPtr group;
};

inline GroupPtr c(std::size_t n) { return cyclic_group(n); }
inline GroupPtr s3() { return symmetric_group(3); }
inline GroupPtr klein() { return direct_product(c(2), c(2)).group; }

// A 3-cycle and a transposition of S3 (lexicographic permutation order).
inline constexpr Index kS3ThreeCycle = 3;  // one-line 1 2 0
inline constexpr Index kS3Transposition = 1;  // one-line 0 2 1

// Small groups of several shapes, all of order <= 24.
inline std::vector<Named> corpus() {
  std::vector<Named> out;
  for (std::size_t n = 1; n <= 12; ++n) out.push_back({"C" + std::to_string(n), c(n)});
  out.push_back({"S3", s3()});
  out.push_back({"S4", symmetric_group(4)});
  out.push_back({"C2xC2", klein()});
  out.push_back({"C2xC4", direct_product(c(2), c(4)).group});
  out.push_back({"C2xC2xC2", direct_product(klein(), c(2)).group});
  out.push_back({"D4", cyclic_semidirect(4, 2, 3).group});
  out.push_back({"D5", cyclic_semidirect(5, 2, 4).group});
  out.push_back({"C3xC3", direct_product(c(3), c(3)).group});
  out.push_back({"C7:C3", cyclic_semidirect(7, 3, 2).group});
  out.push_back({"S3xC2", direct_product(s3(), c(2)).group});
  const auto eight = enumerate_groups(8);
  for (std::size_t i = 0; i < eight.representatives.size(); ++i) {
    out.push_back({"order8_" + std::to_string(i + 1), eight.representatives[i]});
  }
  return out;
}

}  // namespace pqgroup::fixtures
