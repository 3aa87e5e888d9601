#include "amsi/heavy_path.hpp"

#include <algorithm>

namespace amsi {

heavy_path_decomposition::heavy_path_decomposition(const patricia_tree& t) {
    const std::size_t count = t.node_count();
    leaves_.assign(count, 0);
    heavy_child_.assign(count, no_node);
    for (std::size_t v = count; v-- > 0;) {
        if (t.is_leaf(static_cast<node_id>(v))) leaves_[v] += 1;
        std::size_t best = 0;
        for (node_id c : t.children(static_cast<node_id>(v))) {
            leaves_[v] += leaves_[c];
            if (heavy_child_[v] == no_node || leaves_[c] > best) {
                heavy_child_[v] = c;
                best = leaves_[c];
            }
        }
    }
    hp_root_.assign(count, no_node);
    hp_leaf_.assign(count, no_node);
    for (std::size_t v = 0; v < count; ++v) {
        if (v == 0)
            hp_root_[v] = 0;
        else {
            node_id par = t.parent(static_cast<node_id>(v));
            hp_root_[v] = heavy_child_[par] == v ? hp_root_[par] : static_cast<node_id>(v);
        }
    }
    for (std::size_t v = 0; v < count; ++v)
        if (heavy_child_[v] == no_node) hp_leaf_[hp_root_[v]] = static_cast<node_id>(v);
}

std::vector<node_id> heavy_path_decomposition::light_nodes() const {
    std::vector<node_id> out;
    for (std::size_t v = 0; v < hp_root_.size(); ++v)
        if (hp_root_[v] == v) out.push_back(static_cast<node_id>(v));
    return out;
}

std::size_t heavy_path_decomposition::max_light_on_path(const patricia_tree& t) const {
    std::vector<std::size_t> on_path(hp_root_.size(), 0);
    std::size_t best = 0;
    for (std::size_t v = 0; v < hp_root_.size(); ++v) {
        std::size_t above = v == 0 ? 0 : on_path[t.parent(static_cast<node_id>(v))];
        on_path[v] = above + (is_light(static_cast<node_id>(v)) ? 1 : 0);
        if (t.children(static_cast<node_id>(v)).empty()) best = std::max(best, on_path[v]);
    }
    return best;
}

}  // namespace amsi
