#include "amsi/input.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <iterator>

namespace amsi {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot read " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string parse_fasta(std::string_view data) {
    std::string out;
    bool in_record = false;
    std::size_t line_no = 0;
    while (!data.empty()) {
        std::size_t eol = data.find('\n');
        std::string_view line = data.substr(0, eol);
        data.remove_prefix(eol == std::string_view::npos ? data.size() : eol + 1);
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty()) continue;
        if (line.front() == '>' || line.front() == ';') {
            if (line.front() == ';') continue;
            if (in_record) out.push_back(record_separator);
            in_record = true;
            continue;
        }
        if (!in_record) throw input_error("FASTA line " + std::to_string(line_no) + ": sequence before any header");
        for (char ch : line) {
            if (ch == record_separator) throw input_error("FASTA line " + std::to_string(line_no) + ": reserved byte 0x01");
            if (ch == ' ' || ch == '\t') continue;
            out.push_back(ch);
        }
    }
    return out;
}

std::vector<std::size_t> parse_positions(std::string_view data) {
    std::vector<std::size_t> out;
    std::size_t i = 0;
    while (i < data.size()) {
        while (i < data.size() && std::isspace(static_cast<unsigned char>(data[i]))) ++i;
        if (i == data.size()) break;
        std::size_t v = 0;
        auto [ptr, ec] = std::from_chars(data.data() + i, data.data() + data.size(), v);
        if (ec != std::errc{} || (ptr != data.data() + data.size() && !std::isspace(static_cast<unsigned char>(*ptr))))
            throw input_error("boundary file: not a non-negative integer near offset " + std::to_string(i));
        out.push_back(v);
        i = static_cast<std::size_t>(ptr - data.data());
    }
    return out;
}

}  // namespace amsi
