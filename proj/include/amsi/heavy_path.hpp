#pragma once

#include <cstddef>
#include <vector>

#include "amsi/patricia.hpp"

namespace amsi {

// Heavy child = child with the most leaves below it, leftmost on ties. The
// top node of every heavy path is called light; the root is light.
class heavy_path_decomposition {
public:
    heavy_path_decomposition() = default;
    explicit heavy_path_decomposition(const patricia_tree& t);

    node_id hp_root(node_id v) const { return hp_root_[v]; }
    node_id hp_leaf(node_id v) const { return hp_leaf_[hp_root_[v]]; }
    node_id heavy_child(node_id v) const { return heavy_child_[v]; }
    bool is_light(node_id v) const { return hp_root_[v] == v; }
    std::size_t leaves_below(node_id v) const { return leaves_[v]; }

    // Light nodes in preorder.
    std::vector<node_id> light_nodes() const;
    // Largest number of light nodes on any root-to-leaf path.
    std::size_t max_light_on_path(const patricia_tree& t) const;

private:
    std::vector<node_id> hp_root_, hp_leaf_, heavy_child_;
    std::vector<std::size_t> leaves_;
};

}  // namespace amsi
