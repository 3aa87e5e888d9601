#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "amsi/binary_io.hpp"
#include "amsi/grid.hpp"
#include "amsi/heavy_path.hpp"
#include "amsi/patricia.hpp"

namespace amsi {

// Per light node w of the suffix tree: the reversed-phrase leaves induced
// with w, closed under lca and contracted into a small tree. Local nodes of
// one w are stored contiguously in preorder of the reversed-phrase tree.
//
//   orig     node of the reversed-phrase tree (e1)
//   parent   local parent, or none
//   up       lowest proper local ancestor y whose child toward this node is
//            not induced with partner(y / hp_leaf(w)) (e0), or none
//   partner  partner(orig / hp_leaf(w)) in the suffix tree (e2)
//   cut      the child of parent(orig) toward orig is not induced with the
//            parent's partner
class special_structures {
public:
    special_structures() = default;
    static special_structures build(const patricia_tree& rev, const patricia_tree& suf, const grid& g,
                                    const heavy_path_decomposition& suf_hp);

    struct local_node {
        node_id orig;
        std::uint32_t parent;
        std::uint32_t up;
        node_id partner;
        bool cut;
        bool leaf;
    };
    static constexpr std::uint32_t none = 0xFFFFFFFFu;

    std::size_t light_count() const { return lights_.size(); }
    std::span<const node_id> lights() const { return lights_; }
    // Index of light node w among lights(), if w is light.
    std::optional<std::size_t> slot(node_id w) const;
    // Local nodes for the light node in `slot`.
    std::span<const local_node> nodes(std::size_t slot) const {
        return {nodes_.data() + begin_[slot], nodes_.data() + begin_[slot + 1]};
    }
    // Local index of `orig` inside the structure of `slot`, if special there.
    std::optional<std::uint32_t> find(std::size_t slot, node_id orig) const;
    // Local child of `local` whose subtree meets the reversed-phrase rank
    // interval `r`, if any.
    std::optional<std::uint32_t> child_toward(std::size_t slot, std::uint32_t local, const patricia_tree& rev,
                                              rank_interval r) const;
    // Internal local nodes that have a cut child with at least two special
    // leaves below it.
    bool is_skyline(std::size_t slot, std::uint32_t local) const;

    std::size_t total_special() const { return nodes_.size(); }

    // Throws format_error if a stored node id falls outside the trees.
    void check_links(std::size_t rev_nodes, std::size_t suf_nodes) const;

    void serialize(binary_writer& out) const;
    static special_structures deserialize(binary_reader& in);
    std::size_t memory_bytes() const;

private:
    void derive_children();

    std::vector<node_id> lights_;
    std::vector<std::uint32_t> begin_;
    std::vector<local_node> nodes_;
    // Derived: CSR lists of local children per global local-node index.
    std::vector<std::uint32_t> child_begin_, child_list_;
};

}  // namespace amsi
