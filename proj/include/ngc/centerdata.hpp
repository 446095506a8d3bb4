#pragma once

#include "ngc/centersolver.hpp"
#include "ngc/modular_data.hpp"

namespace ngc {

/// Rank-n(n+3) modular data of the center from a complete triple set.
/// Label order: A(g), B(h), C(k,l) with k<l, D(j) in triple order.
/// lambda = sqrt(sum d_i^2) is cross-checked against n + d^2.
ModularData assemble_center_data(const NearGroupData& data,
                                 const std::vector<CenterTriple>& triples);

}  // namespace ngc
