#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "amsi/ms_index.hpp"

namespace amsi {

double dispatch_threshold(const ms_index& idx) {
    // Both logarithms are floored at 1 so tiny indexes do not get a zero
    // threshold.
    double lg = std::max(1.0, std::log2(static_cast<double>(std::max<std::size_t>(idx.boundary_count(), 1))));
    double lglg = std::max(1.0, std::log2(lg));
    return idx.options().dispatch_c * lg * lglg;
}

ms_array compute_ms_const(const ms_index& idx, std::string_view pattern, query_counters* c, bool allow_dispatch) {
    const std::size_t m = pattern.size();
    if (allow_dispatch && idx.special() && static_cast<double>(m) >= dispatch_threshold(idx))
        return compute_ms_lpmem(idx, pattern, c);

    ms_array ms(m, 0);
    if (m == 0 || idx.boundary_count() == 0) return ms;
    const active_level_index* active = idx.active();
    if (!active) throw std::logic_error("index was built without the active-level structures");
    const auto& rev = idx.rev();
    const auto& suf = idx.suf();
    split_loci loci = find_all_loci(pattern, rev, suf, idx.text(), idx.phrases(), c);

    for (std::size_t i = 1; i < m; ++i) {
        const locus& l1 = loci.left[i - 1];
        const locus& l2 = loci.right[i - 1];
        if (l1.length == 0) continue;
        auto partners = active->descend_partner_batch(rev, l1.node, suf, l2.node, idx.points(), c);
        // partners[k] belongs to the node at level k on the root path.
        node_id v = l1.node;
        std::size_t vlen = l1.length;
        while (v != rev.root()) {
            node_id u = partners[rev.level(v)];
            std::size_t ulen = u == l2.node ? l2.length : suf.depth(u);
            std::size_t top = rev.depth(rev.parent(v));
            for (std::size_t j = vlen; j > top; --j) ms[i - j] = std::max(ms[i - j], j + ulen);
            v = rev.parent(v);
            vlen = rev.depth(v);
        }
    }
    apply_end_match(ms, loci.left[m - 1].length, loci.last_char_suffix.length > 0);
    close_ms(ms);
    return ms;
}

}  // namespace amsi
