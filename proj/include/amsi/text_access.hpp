#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace amsi {

// Random access to substrings of the indexed text. Query code reads the text
// only through this interface, so a compressed backend can replace the plain
// one without touching the engines.
class text_oracle {
public:
    virtual ~text_oracle() = default;

    virtual std::size_t size() const = 0;

    // T[pos..pos+len-1], 1-based. Throws std::out_of_range unless
    // 1 <= pos and pos+len-1 <= n.
    virtual std::string extract(std::size_t pos, std::size_t len) const = 0;

    // reverse(extract(pos, len)).
    std::string extract_reversed(std::size_t pos, std::size_t len) const;

protected:
    void check_range(std::size_t pos, std::size_t len) const;
};

class plain_text_oracle final : public text_oracle {
public:
    plain_text_oracle() = default;
    explicit plain_text_oracle(std::string text) : text_(std::move(text)) {}

    std::size_t size() const override { return text_.size(); }
    std::string extract(std::size_t pos, std::size_t len) const override;

    const std::string& text() const { return text_; }

private:
    std::string text_;
};

}  // namespace amsi
