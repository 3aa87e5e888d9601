#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "amsi/active_levels.hpp"
#include "amsi/attractor.hpp"
#include "amsi/grid.hpp"
#include "amsi/heavy_path.hpp"
#include "amsi/patricia.hpp"
#include "amsi/special_structures.hpp"
#include "amsi/text_access.hpp"

namespace amsi {

struct index_options {
    double epsilon = 0.5;
    // The constant-time engine hands patterns with m >= c lg B lglg B to the
    // LPMEM engine.
    double dispatch_c = 1.0;
    bool with_lpmem = true;
    bool with_const = true;
};

struct section_size {
    std::string name;
    std::size_t bytes;
};

class ms_index {
public:
    ms_index() = default;

    // LZ parsing of `text`.
    static ms_index build(std::string text, const index_options& opt = {});
    // Caller-supplied parsing; it is not validated here.
    static ms_index build(std::string text, parsing p, const index_options& opt = {});
    // Reassemble from loaded parts; derives the heavy-path decompositions
    // and checks cross-structure consistency (throws format_error).
    static ms_index assemble(std::string text, parsing p, patricia_tree rev, patricia_tree suf, grid g,
                             std::optional<special_structures> special, std::optional<active_level_index> active,
                             const index_options& opt);

    const text_oracle& text() const { return *text_; }
    const std::string& plain_text() const { return text_->text(); }
    const parsing& phrases() const { return parsing_; }
    const patricia_tree& rev() const { return rev_; }
    const patricia_tree& suf() const { return suf_; }
    const grid& points() const { return grid_; }
    const heavy_path_decomposition& rev_hp() const { return rev_hp_; }
    const heavy_path_decomposition& suf_hp() const { return suf_hp_; }
    const special_structures* special() const { return special_ ? &*special_ : nullptr; }
    const active_level_index* active() const { return active_ ? &*active_ : nullptr; }
    const index_options& options() const { return options_; }

    std::size_t boundary_count() const { return parsing_.size(); }

    // Resident bytes per structure. The plain text store is listed on its
    // own so it can be excluded from compressibility measurements.
    std::vector<section_size> memory_breakdown() const;
    std::size_t structure_bytes() const;  // everything except the text store

private:
    std::shared_ptr<const plain_text_oracle> text_ = std::make_shared<plain_text_oracle>();
    parsing parsing_;
    patricia_tree rev_, suf_;
    grid grid_;
    heavy_path_decomposition rev_hp_, suf_hp_;
    std::optional<special_structures> special_;
    std::optional<active_level_index> active_;
    index_options options_;
};

// Matching statistics engines. Each returns MS[1..m] as a 0-based vector.
ms_array compute_ms_basic(const ms_index& idx, std::string_view pattern, query_counters* c = nullptr);

// LPMEMs crossing the boundary between P[i] and P[i+1] for i = 1..m-1,
// sorted and without duplicates.
std::vector<lpmem> enumerate_lpmems(const ms_index& idx, std::string_view pattern, query_counters* c = nullptr);
// S[i] = longest LPMEM starting at i, then MS[i] = max(MS[i-1]-1, S[i]).
// `end_match` is the length of the longest suffix of P that ends a phrase
// (1 is enough to say that P[m] occurs); it seeds S[m-end_match+1].
ms_array lpmems_to_ms(const std::vector<lpmem>& found, std::size_t m, std::size_t end_match);
ms_array compute_ms_lpmem(const ms_index& idx, std::string_view pattern, query_counters* c = nullptr);

// Pattern length from which the constant-time engine delegates.
double dispatch_threshold(const ms_index& idx);
ms_array compute_ms_const(const ms_index& idx, std::string_view pattern, query_counters* c = nullptr,
                          bool allow_dispatch = true);

// Shared tail of the engines: raise MS by the pattern suffix that ends a
// phrase (and by the last-character rule), then MS[i] >= MS[i-1]-1.
void apply_end_match(ms_array& ms, std::size_t end_match, bool last_char_occurs);
void close_ms(ms_array& ms);

enum class engine { basic, lpmem, constant };
std::string_view engine_name(engine e);
std::optional<engine> parse_engine(std::string_view name);
ms_array compute_ms(engine e, const ms_index& idx, std::string_view pattern, query_counters* c = nullptr);

}  // namespace amsi
