#include "ccgsa/objective.hpp"

#include <algorithm>

namespace ccgsa {

void GroupStructure::validate(int dim) const {
    std::vector<char> seen(dim, 0);
    for (const auto& g : groups) {
        if (g.empty()) throw ConfigError("group structure: empty block");
        for (int d : g) {
            if (d < 0 || d >= dim)
                throw ConfigError("group structure: index " + std::to_string(d) + " out of range");
            if (seen[d]) throw ConfigError("group structure: index " + std::to_string(d) + " repeated");
            seen[d] = 1;
        }
    }
    for (int d = 0; d < dim; ++d)
        if (!seen[d]) throw ConfigError("group structure: index " + std::to_string(d) + " missing");
}

bool GroupStructure::same_partition(const GroupStructure& other) const {
    auto canon = [](const GroupStructure& s) {
        std::vector<std::vector<int>> blocks = s.groups;
        for (auto& b : blocks) std::sort(b.begin(), b.end());
        std::sort(blocks.begin(), blocks.end());
        return blocks;
    };
    return canon(*this) == canon(other);
}

} // namespace ccgsa
