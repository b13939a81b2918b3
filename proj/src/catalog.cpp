#include "grr/catalog.hpp"

#include "grr/group_spec.hpp"

#include <algorithm>
#include <set>

namespace grr {

std::vector<FiniteGroup> catalog_groups(int max_order) {
    std::vector<FiniteGroup> out;
    std::set<std::string> labels;
    auto add = [&](FiniteGroup g) {
        if (g.n <= max_order && labels.insert(g.label).second) out.push_back(std::move(g));
    };
    for (int n = 2; n <= std::min(max_order, 24); ++n) add(cyclic(n));
    for (int n = 3; 2 * n <= max_order && n <= 12; ++n) add(dihedral(n));
    for (int k = 2; (1 << k) <= max_order && k <= 5; ++k) add(elementary_abelian(k));
    if (max_order >= 8) add(quaternion());
    if (max_order >= 8) add(parse_group_spec("C4xC2"));
    if (max_order >= 12) add(parse_group_spec("Dic(C6)"));
    if (max_order >= 12) add(parse_group_spec("C6xC2"));
    if (max_order >= 16) add(parse_group_spec("Dic(C8)"));
    if (max_order >= 16) add(parse_group_spec("Q8xC2"));
    if (max_order >= 16) add(parse_group_spec("C4xC4"));
    if (max_order >= 16) add(parse_group_spec("C4xC2xC2"));
    if (max_order >= 16) add(c4_semidirect_c4());
    if (max_order >= 24) add(parse_group_spec("Dic(C12)"));
    if (max_order >= 32) add(parse_group_spec("Q8xC2xC2"));
    std::sort(out.begin(), out.end(), [](const FiniteGroup& a, const FiniteGroup& b) {
        if (a.n != b.n) return a.n < b.n;
        return a.label < b.label;
    });
    return out;
}

}  // namespace grr
