#include <algorithm>
#include <stdexcept>

#include "amsi/ms_index.hpp"

namespace amsi {

namespace {

struct lpmem_run {
    std::vector<lpmem> found;
    std::size_t end_match = 0;
    bool last_char_occurs = false;
};

lpmem_run run_lpmems(const ms_index& idx, std::string_view pattern, query_counters* c) {
    lpmem_run run;
    const std::size_t m = pattern.size();
    if (m == 0 || idx.boundary_count() == 0) return run;
    const special_structures* special = idx.special();
    if (!special) throw std::logic_error("index was built without the LPMEM structures");

    const auto& rev = idx.rev();
    const auto& suf = idx.suf();
    const auto& g = idx.points();
    const auto& hp = idx.suf_hp();
    split_loci loci = find_all_loci(pattern, rev, suf, idx.text(), idx.phrases(), c);
    run.last_char_occurs = loci.last_char_suffix.length > 0;
    run.end_match = loci.left[m - 1].length;

    std::vector<node_id> tried;
    std::vector<std::pair<node_id, node_id>> segments;
    for (std::size_t i = 1; i < m; ++i) {
        const locus& l1 = loci.left[i - 1];
        const locus& l2 = loci.right[i - 1];
        if (l1.length == 0) continue;
        const node_id n1 = l1.node, n2 = l2.node;
        auto len1 = [&](node_id u) { return u == n1 ? l1.length : rev.depth(u); };
        auto len2 = [&](node_id v) { return v == n2 ? l2.length : suf.depth(v); };
        auto emit = [&](node_id u, node_id v) {
            std::size_t a = len1(u);
            if (a == 0) return;
            run.found.push_back({i - a + 1, a + len2(v)});
        };

        // partner(loci1 / loci2) is loci2 itself exactly when the two are
        // induced, and then the whole split is one match.
        const node_id p1 = g.partner_in_suf(rev, n1, suf, n2, c);
        if (p1 == n2) {
            emit(n1, n2);
            continue;
        }

        // Ending nodes lie between p1 and loci2. Cut that path into
        // heavy-path segments (w_f, t_f), lowest first.
        const node_id top = hp.hp_root(p1);
        segments.clear();
        for (node_id t = n2;; t = suf.parent(hp.hp_root(t))) {
            segments.emplace_back(hp.hp_root(t), t);
            if (hp.hp_root(t) == top) break;
        }

        tried.clear();
        auto try_emit = [&](node_id x) {
            if (x == rev.root() || std::find(tried.begin(), tried.end(), x) != tried.end()) return;
            tried.push_back(x);
            node_id y = g.partner_in_suf(rev, x, suf, n2, c);
            if (x != n1 && g.induced(rev, rev.child_toward(x, n1), suf, y, c)) return;
            emit(x, y);
        };

        for (auto [w, t] : segments) {
            node_id alpha = g.partner_in_rev(suf, t, rev, n1, c);
            node_id beta = w == top ? n1 : g.partner_in_rev(suf, w, rev, n1, c);
            try_emit(alpha);
            if (beta != alpha) try_emit(beta);
            if (rev.level(beta) < rev.level(alpha) + 2) continue;

            // Beginning nodes strictly between alpha and beta: the lowest
            // special node above beta, then the cut chain above it.
            auto sl = special->slot(w);
            if (!sl) throw std::logic_error("light node without special structure");
            auto wiv = suf.interval(w), biv = rev.interval(beta);
            auto left = g.range_pred_x(wiv.lo, wiv.hi, biv.lo, c);
            auto right = g.range_succ_x(wiv.lo, wiv.hi, biv.hi, c);
            node_id cand = partner_from_neighbours(rev, beta, left, right);
            if (cand == no_node || rev.level(cand) <= rev.level(alpha)) continue;

            auto nodes = special->nodes(*sl);
            auto local = special->find(*sl, cand);
            auto child = local ? special->child_toward(*sl, *local, rev, biv) : std::nullopt;
            if (!local || !child) throw std::logic_error("special node missing from its induced subtree");
            auto check_end = [&](node_id e2) {
                if (!suf.is_ancestor(e2, n2)) throw std::logic_error("stored partner is not above loci2");
                return e2;
            };
            if (nodes[*child].cut) emit(cand, check_end(nodes[*local].partner));
            for (std::uint32_t y = nodes[*local].up;
                 y != special_structures::none && rev.level(nodes[y].orig) > rev.level(alpha); y = nodes[y].up)
                emit(nodes[y].orig, check_end(nodes[y].partner));
        }
    }
    std::sort(run.found.begin(), run.found.end());
    run.found.erase(std::unique(run.found.begin(), run.found.end()), run.found.end());
    return run;
}

}  // namespace

std::vector<lpmem> enumerate_lpmems(const ms_index& idx, std::string_view pattern, query_counters* c) {
    return run_lpmems(idx, pattern, c).found;
}

ms_array lpmems_to_ms(const std::vector<lpmem>& found, std::size_t m, std::size_t end_match) {
    ms_array s(m, 0);
    for (const auto& e : found)
        if (e.start >= 1 && e.start <= m) s[e.start - 1] = std::max(s[e.start - 1], e.length);
    if (end_match > 0 && end_match <= m) s[m - end_match] = std::max(s[m - end_match], end_match);
    ms_array ms(m, 0);
    std::size_t prev = 0;
    for (std::size_t i = 0; i < m; ++i) {
        ms[i] = std::max(prev > 0 ? prev - 1 : 0, s[i]);
        prev = ms[i];
    }
    return ms;
}

ms_array compute_ms_lpmem(const ms_index& idx, std::string_view pattern, query_counters* c) {
    auto run = run_lpmems(idx, pattern, c);
    std::size_t end = run.end_match > 0 ? run.end_match : (run.last_char_occurs ? 1 : 0);
    return lpmems_to_ms(run.found, pattern.size(), end);
}

}  // namespace amsi
