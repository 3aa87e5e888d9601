#include "amsi/container.hpp"

#include <zlib.h>

#include <algorithm>
#include <fstream>
#include <iterator>
#include <map>
#include <optional>

namespace amsi {

namespace {

constexpr std::string_view magic = "AMSI";
constexpr std::size_t entry_bytes = 4 + 8 + 8 + 4;

std::uint32_t crc_of(std::string_view data) {
    uLong crc = crc32(0L, Z_NULL, 0);
    // zlib takes uInt lengths; feed large payloads in pieces.
    while (!data.empty()) {
        auto chunk = static_cast<uInt>(std::min<std::size_t>(data.size(), 1u << 30));
        crc = crc32(crc, reinterpret_cast<const Bytef*>(data.data()), chunk);
        data.remove_prefix(chunk);
    }
    return static_cast<std::uint32_t>(crc);
}

}  // namespace

std::string_view section_name(section_id id) {
    switch (id) {
        case section_id::meta: return "meta";
        case section_id::parsing: return "parsing";
        case section_id::rev_tree: return "rev_tree";
        case section_id::suf_tree: return "suf_tree";
        case section_id::grid: return "grid";
        case section_id::special: return "special";
        case section_id::active: return "active";
        case section_id::text: return "text";
    }
    return "unknown";
}

saved_index save_index(const ms_index& idx) {
    std::vector<std::pair<section_id, std::string>> sections;
    {
        binary_writer w;
        w.put<std::uint64_t>(idx.plain_text().size());
        w.put<std::uint64_t>(idx.boundary_count());
        w.put_f64(idx.options().epsilon);
        w.put_f64(idx.options().dispatch_c);
        sections.emplace_back(section_id::meta, w.take());
    }
    {
        binary_writer w;
        std::vector<std::uint64_t> b(idx.phrases().boundaries().begin(), idx.phrases().boundaries().end());
        w.put_vector(b);
        sections.emplace_back(section_id::parsing, w.take());
    }
    {
        binary_writer w;
        idx.rev().serialize(w);
        sections.emplace_back(section_id::rev_tree, w.take());
    }
    {
        binary_writer w;
        idx.suf().serialize(w);
        sections.emplace_back(section_id::suf_tree, w.take());
    }
    {
        binary_writer w;
        idx.points().serialize(w);
        sections.emplace_back(section_id::grid, w.take());
    }
    if (idx.special()) {
        binary_writer w;
        idx.special()->serialize(w);
        sections.emplace_back(section_id::special, w.take());
    }
    if (idx.active()) {
        binary_writer w;
        idx.active()->serialize(w);
        sections.emplace_back(section_id::active, w.take());
    }
    {
        binary_writer w;
        w.put_bytes(idx.plain_text());
        sections.emplace_back(section_id::text, w.take());
    }

    binary_writer out;
    for (char ch : magic) out.put<std::uint8_t>(static_cast<std::uint8_t>(ch));
    out.put<std::uint16_t>(container_version);
    out.put<std::uint16_t>(0);
    out.put<std::uint32_t>(static_cast<std::uint32_t>(sections.size()));
    std::uint64_t offset = magic.size() + 2 + 2 + 4 + sections.size() * entry_bytes;
    saved_index result;
    for (const auto& [id, payload] : sections) {
        out.put<std::uint32_t>(static_cast<std::uint32_t>(id));
        out.put<std::uint64_t>(offset);
        out.put<std::uint64_t>(payload.size());
        out.put<std::uint32_t>(crc_of(payload));
        offset += payload.size();
        result.sections.push_back({std::string(section_name(id)), payload.size()});
    }
    result.bytes = out.take();
    for (const auto& s : sections) result.bytes += s.second;
    return result;
}

ms_index load_index(std::string_view bytes) {
    if (bytes.substr(0, magic.size()) != magic) throw format_error("not an index file (bad magic)");
    binary_reader head(bytes.substr(magic.size()));
    auto version = head.get<std::uint16_t>();
    if (version != container_version)
        throw format_error("unsupported index version " + std::to_string(version) + " (expected " +
                           std::to_string(container_version) + ")");
    head.get<std::uint16_t>();
    auto count = head.get<std::uint32_t>();
    if (count > 64) throw format_error("implausible section count");

    std::map<section_id, std::string_view> found;
    for (std::uint32_t s = 0; s < count; ++s) {
        auto id = static_cast<section_id>(head.get<std::uint32_t>());
        auto offset = head.get<std::uint64_t>();
        auto length = head.get<std::uint64_t>();
        auto crc = head.get<std::uint32_t>();
        if (offset > bytes.size() || length > bytes.size() - offset) throw format_error("section outside the file");
        std::string_view payload = bytes.substr(offset, length);
        if (crc_of(payload) != crc)
            throw format_error("checksum mismatch in section " + std::string(section_name(id)));
        if (!found.emplace(id, payload).second) throw format_error("duplicate section");
    }
    auto need = [&](section_id id) {
        auto it = found.find(id);
        if (it == found.end()) throw format_error("missing section " + std::string(section_name(id)));
        return binary_reader(it->second);
    };
    auto done = [](binary_reader& r, section_id id) {
        if (!r.at_end()) throw format_error("trailing bytes in section " + std::string(section_name(id)));
    };

    index_options opt;
    binary_reader meta = need(section_id::meta);
    auto n = meta.get<std::uint64_t>();
    auto B = meta.get<std::uint64_t>();
    opt.epsilon = meta.get_f64();
    opt.dispatch_c = meta.get_f64();
    done(meta, section_id::meta);

    binary_reader text_r = need(section_id::text);
    std::string text = text_r.get_bytes();
    done(text_r, section_id::text);
    if (text.size() != n) throw format_error("text length disagrees with metadata");

    binary_reader par_r = need(section_id::parsing);
    auto raw = par_r.get_vector<std::uint64_t>();
    done(par_r, section_id::parsing);
    if (raw.size() != B) throw format_error("boundary count disagrees with metadata");
    std::optional<parsing> p;
    try {
        p.emplace(n, std::vector<std::size_t>(raw.begin(), raw.end()));
    } catch (const std::invalid_argument& e) {
        throw format_error(std::string("bad parsing: ") + e.what());
    }

    binary_reader rev_r = need(section_id::rev_tree);
    auto rev = patricia_tree::deserialize(rev_r);
    done(rev_r, section_id::rev_tree);
    binary_reader suf_r = need(section_id::suf_tree);
    auto suf = patricia_tree::deserialize(suf_r);
    done(suf_r, section_id::suf_tree);
    binary_reader grid_r = need(section_id::grid);
    auto g = grid::deserialize(grid_r);
    done(grid_r, section_id::grid);

    std::optional<special_structures> special;
    if (found.count(section_id::special)) {
        binary_reader r = need(section_id::special);
        special = special_structures::deserialize(r);
        done(r, section_id::special);
    }
    std::optional<active_level_index> active;
    if (found.count(section_id::active)) {
        binary_reader r = need(section_id::active);
        active = active_level_index::deserialize(r, rev);
        done(r, section_id::active);
    }
    return ms_index::assemble(std::move(text), std::move(*p), std::move(rev), std::move(suf), std::move(g),
                              std::move(special), std::move(active), opt);
}

void save_index_file(const ms_index& idx, const std::string& path, std::vector<section_size>* sections) {
    auto saved = save_index(idx);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out.write(saved.bytes.data(), static_cast<std::streamsize>(saved.bytes.size()));
    if (!out) throw std::runtime_error("write to " + path + " failed");
    if (sections) *sections = std::move(saved.sections);
}

ms_index load_index_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return load_index(bytes);
}

}  // namespace amsi
