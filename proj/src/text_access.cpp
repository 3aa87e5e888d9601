#include "amsi/text_access.hpp"

#include <algorithm>
#include <stdexcept>

namespace amsi {

void text_oracle::check_range(std::size_t pos, std::size_t len) const {
    if (pos < 1 || pos - 1 > size() || len > size() - (pos - 1))
        throw std::out_of_range("extract(" + std::to_string(pos) + ", " + std::to_string(len) +
                                ") outside text of length " + std::to_string(size()));
}

std::string text_oracle::extract_reversed(std::size_t pos, std::size_t len) const {
    std::string s = extract(pos, len);
    std::reverse(s.begin(), s.end());
    return s;
}

std::string plain_text_oracle::extract(std::size_t pos, std::size_t len) const {
    check_range(pos, len);
    return text_.substr(pos - 1, len);
}

}  // namespace amsi
