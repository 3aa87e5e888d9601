#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "amsi/ms_index.hpp"

namespace amsi {

// On-disk layout, all integers little-endian:
//   "AMSI" | u16 version | u16 reserved | u32 section count
//   per section: u32 id | u64 offset | u64 length | u32 crc32
//   section payloads
inline constexpr std::uint16_t container_version = 1;

enum class section_id : std::uint32_t {
    meta = 1,
    parsing = 2,
    rev_tree = 3,
    suf_tree = 4,
    grid = 5,
    special = 6,
    active = 7,
    text = 8,
};

std::string_view section_name(section_id id);

struct saved_index {
    std::string bytes;
    std::vector<section_size> sections;  // payload bytes per section
};

saved_index save_index(const ms_index& idx);
// Throws format_error on a bad magic, version, checksum or payload.
ms_index load_index(std::string_view bytes);

void save_index_file(const ms_index& idx, const std::string& path, std::vector<section_size>* sections = nullptr);
ms_index load_index_file(const std::string& path);

}  // namespace amsi
