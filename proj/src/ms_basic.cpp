#include <algorithm>

#include "amsi/ms_index.hpp"

namespace amsi {

void close_ms(ms_array& ms) {
    for (std::size_t i = 1; i < ms.size(); ++i)
        if (ms[i - 1] > 0) ms[i] = std::max(ms[i], ms[i - 1] - 1);
}

void apply_end_match(ms_array& ms, std::size_t end_match, bool last_char_occurs) {
    const std::size_t m = ms.size();
    if (m == 0) return;
    // Past the last split the right part is empty and every partner is the
    // root, so the only matches left are pattern suffixes ending a phrase.
    for (std::size_t j = 1; j <= end_match && j <= m; ++j) ms[m - j] = std::max(ms[m - j], j);
    if (last_char_occurs) ms[m - 1] = std::max<std::size_t>(ms[m - 1], 1);
}

ms_array compute_ms_basic(const ms_index& idx, std::string_view pattern, query_counters* c) {
    const std::size_t m = pattern.size();
    ms_array ms(m, 0);
    if (m == 0 || idx.boundary_count() == 0) return ms;
    const auto& rev = idx.rev();
    const auto& suf = idx.suf();
    split_loci loci = find_all_loci(pattern, rev, suf, idx.text(), idx.phrases(), c);

    for (std::size_t i = 1; i < m; ++i) {
        const locus& l1 = loci.left[i - 1];
        const locus& l2 = loci.right[i - 1];
        node_id v = l1.node;
        std::size_t vlen = l1.length;
        while (v != rev.root()) {
            node_id u = idx.points().partner_in_suf(rev, v, suf, l2.node, c);
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
