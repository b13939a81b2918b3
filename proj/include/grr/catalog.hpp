#pragma once

#include "grr/group.hpp"

#include <vector>

namespace grr {

/**
 * The fixed family of groups the sweeps and acceptance runs iterate over:
 * cyclic, dihedral and elementary abelian series plus the quaternion,
 * dicyclic and small direct-product groups, capped at max_order. Ordered
 * by (order, label), deterministic.
 */
std::vector<FiniteGroup> catalog_groups(int max_order);

}  // namespace grr
