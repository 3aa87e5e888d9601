#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "amsi/attractor.hpp"
#include "amsi/binary_io.hpp"
#include "amsi/text_access.hpp"
#include "amsi/types.hpp"

namespace amsi {

struct suffix_data;

enum class tree_kind : std::uint8_t {
    reversed_phrases = 0,   // one string per phrase, read right to left
    boundary_suffixes = 1,  // T[b+1..n] for every boundary b
};

// Compacted trie over one string per boundary. Edge labels are not stored:
// each node keeps a representative boundary, and labels are read back through
// the text oracle. A string that is a proper prefix of another hangs off the
// node of its own depth through a terminal edge, which sorts before every
// character. Equal strings share a leaf.
//
// Node ids are preorder numbers, so the root is 0 and a subtree is a
// contiguous id range. Leaf ranks are 1-based and assigned left to right;
// a leaf holding several boundaries owns one rank per boundary, in order of
// boundary position.
class patricia_tree {
public:
    static constexpr std::int16_t terminal_key = -1;

    patricia_tree();

    static patricia_tree build_reversed_phrases(const parsing& p, std::string_view text);
    static patricia_tree build_boundary_suffixes(const parsing& p, std::string_view text);
    static patricia_tree build_boundary_suffixes(const parsing& p, std::string_view text, const suffix_data& sd);

    tree_kind kind() const { return kind_; }
    node_id root() const { return 0; }
    std::size_t node_count() const { return parent_.size(); }
    std::size_t leaf_count() const { return leaf_count_; }
    // Number of boundaries stored, i.e. the number of leaf ranks.
    std::size_t rank_count() const { return leaf_of_rank_.size(); }

    node_id parent(node_id v) const { return parent_[v]; }
    std::size_t depth(node_id v) const { return depth_[v]; }
    std::size_t level(node_id v) const { return level_[v]; }
    std::span<const node_id> children(node_id v) const {
        return {child_list_.data() + child_begin_[v], child_list_.data() + child_begin_[v + 1]};
    }
    std::int16_t edge_key(node_id v) const { return key_[v]; }
    bool is_leaf(node_id v) const { return leaf_begin_[v] != leaf_begin_[v + 1]; }
    bool is_terminal(node_id v) const { return v != 0 && key_[v] == terminal_key; }

    rank_interval interval(node_id v) const { return {lmost_[v], rmost_[v]}; }
    std::span<const std::uint32_t> leaf_boundaries(node_id v) const {
        return {leaf_bounds_.data() + leaf_begin_[v], leaf_bounds_.data() + leaf_begin_[v + 1]};
    }
    // Boundary index (0-based into the parsing) whose string passes through v.
    std::uint32_t representative(node_id v) const { return rep_[v]; }
    node_id leaf_of_rank(std::uint32_t rank) const { return leaf_of_rank_[rank - 1]; }
    std::uint32_t rank_of_boundary(std::uint32_t k) const { return rank_of_boundary_[k]; }

    // Ancestor-or-self test.
    bool is_ancestor(node_id a, node_id d) const { return a <= d && d <= subtree_end_[a]; }
    // Child of v on the path to its proper descendant d.
    node_id child_toward(node_id v, node_id d) const;
    node_id lca(node_id u, node_id v) const;

    locus as_locus(node_id v) const { return {v, depth_[v]}; }
    // Deeper of two loci on the same root path.
    static const locus& deeper(const locus& a, const locus& b) { return a.length >= b.length ? a : b; }

    // First `len` characters of the path label of v.
    std::string label(node_id v, std::size_t len, const text_oracle& text, const parsing& p) const;

    // Blind descent followed by one verifying extraction. Returns the locus
    // of the longest prefix of `pattern` that is a prefix of a stored string.
    locus search(std::string_view pattern, const text_oracle& text, const parsing& p,
                 query_counters* counters = nullptr) const;

    // Throws std::logic_error naming the first violated structural invariant.
    void check_invariants(const parsing& p) const;

    void serialize(binary_writer& out) const;
    static patricia_tree deserialize(binary_reader& in);
    std::size_t memory_bytes() const;

private:
    struct sorted_group {
        std::size_t length;
        std::vector<std::uint32_t> boundaries;
    };
    template <class CharAt>
    static patricia_tree from_sorted(tree_kind kind, const std::vector<sorted_group>& groups,
                                     const std::vector<std::size_t>& lcps, std::size_t boundary_count,
                                     CharAt char_at);
    void finalize();

    tree_kind kind_ = tree_kind::reversed_phrases;
    std::size_t leaf_count_ = 0;

    // Stored.
    std::vector<node_id> parent_;
    std::vector<std::uint64_t> depth_;
    std::vector<std::int16_t> key_;
    std::vector<std::uint32_t> child_begin_;
    std::vector<node_id> child_list_;
    std::vector<std::uint32_t> rep_;
    std::vector<std::uint32_t> leaf_begin_;
    std::vector<std::uint32_t> leaf_bounds_;

    // Derived on build and load.
    std::vector<std::uint32_t> level_;
    std::vector<node_id> subtree_end_;
    std::vector<std::uint32_t> lmost_, rmost_;
    std::vector<node_id> leaf_of_rank_;
    std::vector<std::uint32_t> rank_of_boundary_;
    std::vector<std::vector<std::uint32_t>> min_level_;  // sparse table over preorder, argmin of level
};

// Loci of every split of a pattern P[1..m]. Entry i-1 holds, for split i
// (1 <= i <= m), the locus of (P[1..i])^rev in the reversed-phrase tree and
// of P[i+1..m] in the suffix tree; split m has an empty right part and so
// always the suffix-tree root.
struct split_loci {
    std::vector<locus> left;
    std::vector<locus> right;
    locus last_char_suffix;  // locus of P[m..m] in the suffix tree
};

split_loci find_all_loci(std::string_view pattern, const patricia_tree& rev, const patricia_tree& suf,
                         const text_oracle& text, const parsing& p, query_counters* counters = nullptr);

}  // namespace amsi
