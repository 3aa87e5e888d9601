#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace amsi {

// Joins FASTA records so that no match can span two of them.
inline constexpr char record_separator = '\x01';

class input_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path);

// Sequence lines of every record, line breaks removed, records joined by
// record_separator. Throws input_error on sequence data before the first
// header or on a separator byte inside the data.
std::string parse_fasta(std::string_view data);

// Whitespace-separated 1-based positions.
std::vector<std::size_t> parse_positions(std::string_view data);

}  // namespace amsi
