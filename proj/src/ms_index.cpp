#include "amsi/ms_index.hpp"

#include <stdexcept>

#include "amsi/suffix_array.hpp"

namespace amsi {

ms_index ms_index::build(std::string text, const index_options& opt) {
    suffix_data sd = text.empty() ? suffix_data{} : suffix_data::build(text);
    parsing p = lz_parse(text, sd);
    ms_index idx;
    idx.options_ = opt;
    idx.parsing_ = std::move(p);
    idx.rev_ = patricia_tree::build_reversed_phrases(idx.parsing_, text);
    idx.suf_ = patricia_tree::build_boundary_suffixes(idx.parsing_, text, sd);
    idx.text_ = std::make_shared<plain_text_oracle>(std::move(text));
    idx.grid_ = grid::build(idx.parsing_, idx.rev_, idx.suf_);
    idx.rev_hp_ = heavy_path_decomposition(idx.rev_);
    idx.suf_hp_ = heavy_path_decomposition(idx.suf_);
    if (opt.with_lpmem) idx.special_ = special_structures::build(idx.rev_, idx.suf_, idx.grid_, idx.suf_hp_);
    if (opt.with_const) idx.active_ = active_level_index::build(idx.rev_, idx.grid_, opt.epsilon);
    return idx;
}

ms_index ms_index::build(std::string text, parsing p, const index_options& opt) {
    if (p.text_length() != text.size()) throw std::invalid_argument("parsing length differs from text length");
    ms_index idx;
    idx.options_ = opt;
    idx.parsing_ = std::move(p);
    idx.rev_ = patricia_tree::build_reversed_phrases(idx.parsing_, text);
    idx.suf_ = patricia_tree::build_boundary_suffixes(idx.parsing_, text);
    idx.text_ = std::make_shared<plain_text_oracle>(std::move(text));
    idx.grid_ = grid::build(idx.parsing_, idx.rev_, idx.suf_);
    idx.rev_hp_ = heavy_path_decomposition(idx.rev_);
    idx.suf_hp_ = heavy_path_decomposition(idx.suf_);
    if (opt.with_lpmem) idx.special_ = special_structures::build(idx.rev_, idx.suf_, idx.grid_, idx.suf_hp_);
    if (opt.with_const) idx.active_ = active_level_index::build(idx.rev_, idx.grid_, opt.epsilon);
    return idx;
}

ms_index ms_index::assemble(std::string text, parsing p, patricia_tree rev, patricia_tree suf, grid g,
                            std::optional<special_structures> special, std::optional<active_level_index> active,
                            const index_options& opt) {
    if (p.text_length() != text.size()) throw format_error("parsing length differs from text length");
    const std::size_t B = p.size();
    if (rev.rank_count() != B || suf.rank_count() != B || g.size() != B)
        throw format_error("structures disagree on the boundary count");
    if (rev.kind() != tree_kind::reversed_phrases || suf.kind() != tree_kind::boundary_suffixes)
        throw format_error("tree sections are swapped");
    for (auto* t : {&rev, &suf})
        for (node_id v = 0; v < t->node_count(); ++v)
            if (t->representative(v) >= std::max<std::size_t>(B, 1) ||
                (B > 0 && t->depth(v) > (t == &rev ? p.phrase_length(t->representative(v))
                                                   : p.text_length() - p.boundary(t->representative(v)))))
                throw format_error("tree node label out of range");
    try {
        rev.check_invariants(p);
        suf.check_invariants(p);
    } catch (const std::logic_error& e) {
        throw format_error(e.what());
    }
    if (special) special->check_links(rev.node_count(), suf.node_count());

    ms_index idx;
    idx.options_ = opt;
    idx.options_.with_lpmem = special.has_value();
    idx.options_.with_const = active.has_value();
    if (active) idx.options_.epsilon = active->epsilon();
    idx.text_ = std::make_shared<plain_text_oracle>(std::move(text));
    idx.parsing_ = std::move(p);
    idx.rev_ = std::move(rev);
    idx.suf_ = std::move(suf);
    idx.grid_ = std::move(g);
    idx.rev_hp_ = heavy_path_decomposition(idx.rev_);
    idx.suf_hp_ = heavy_path_decomposition(idx.suf_);
    idx.special_ = std::move(special);
    idx.active_ = std::move(active);
    if (idx.special_ && idx.special_->light_count() != idx.suf_hp_.light_nodes().size())
        throw format_error("special structures do not match the suffix tree");
    return idx;
}

std::vector<section_size> ms_index::memory_breakdown() const {
    std::vector<section_size> out;
    out.push_back({"parsing", parsing_.size() * sizeof(std::size_t)});
    out.push_back({"rev_tree", rev_.memory_bytes()});
    out.push_back({"suf_tree", suf_.memory_bytes()});
    out.push_back({"grid", grid_.memory_bytes()});
    out.push_back({"special", special_ ? special_->memory_bytes() : 0});
    out.push_back({"active", active_ ? active_->memory_bytes() : 0});
    out.push_back({"text", text_->text().capacity()});
    return out;
}

std::size_t ms_index::structure_bytes() const {
    std::size_t total = 0;
    for (const auto& s : memory_breakdown())
        if (s.name != "text") total += s.bytes;
    return total;
}

std::string_view engine_name(engine e) {
    switch (e) {
        case engine::basic: return "basic";
        case engine::lpmem: return "lpmem";
        case engine::constant: return "const";
    }
    return "?";
}

std::optional<engine> parse_engine(std::string_view name) {
    if (name == "basic") return engine::basic;
    if (name == "lpmem") return engine::lpmem;
    if (name == "const") return engine::constant;
    return std::nullopt;
}

ms_array compute_ms(engine e, const ms_index& idx, std::string_view pattern, query_counters* c) {
    switch (e) {
        case engine::basic: return compute_ms_basic(idx, pattern, c);
        case engine::lpmem: return compute_ms_lpmem(idx, pattern, c);
        case engine::constant: return compute_ms_const(idx, pattern, c);
    }
    throw std::invalid_argument("unknown engine");
}

}  // namespace amsi
