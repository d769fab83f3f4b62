#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "knotlog/fox.hpp"
#include "knotlog/homomorphism.hpp"
#include "knotlog/laurent.hpp"

namespace knotlog {

// Determinant by cofactor expansion. A 0x0 matrix has determinant 1 over
// nvars_if_empty variables. Throws DomainError for non-square input.
MultiLaurent laurent_det(const LaurentMatrix& a, std::size_t nvars_if_empty = 1);

struct QuadratureConfig {
  long points_per_dim = 65536;  // M, must be even
  double singularity_floor = 1e-300;
  std::size_t max_dims = 3;
  std::uint64_t max_points = std::uint64_t{1} << 34;
};

struct MahlerResult {
  double value = 0.0;
  std::size_t active_variables = 0;
  std::uint64_t evaluations = 0;
  std::uint64_t clamped = 0;  // samples with |p| below the floor
};

// Logarithmic Mahler measure by the tensor midpoint rule at
// t_j = (j + 1/2)/M in every variable that actually occurs. A monomial
// factor is divided out first; it has modulus 1 on the torus.
MahlerResult mahler_measure(const MultiLaurent& p, const QuadratureConfig& cfg = {});

struct PipelineResult {
  JacobianMatrix jacobian;
  Symbol deleted;
  RingMatrix reduced;
  LaurentMatrix evaluated;
  MultiLaurent determinant;
  std::vector<std::string> variables;
  MahlerResult measure;
  double value = 0.0;  // 2 m(det)
  std::vector<std::string> caveats;
};

// 2 m(det(h(delete_column(fox_jacobian(p), deleted)))).
PipelineResult mahler_of_presentation(const Presentation& p, const Symbol& deleted,
                                      const HomomorphismSpec& h, const QuadratureConfig& cfg = {});

}  // namespace knotlog
