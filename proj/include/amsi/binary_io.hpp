#pragma once

#include <bit>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace amsi {

class format_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Little-endian byte sink. Sizes and lengths are always written as u64.
class binary_writer {
public:
    template <std::unsigned_integral T>
    void put(T v) {
        for (std::size_t i = 0; i < sizeof(T); ++i) buf_.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
    }
    void put_f64(double v) { put<std::uint64_t>(std::bit_cast<std::uint64_t>(v)); }
    void put_bytes(std::string_view s) {
        put<std::uint64_t>(s.size());
        buf_.append(s);
    }
    template <std::unsigned_integral T>
    void put_vector(const std::vector<T>& v) {
        put<std::uint64_t>(v.size());
        for (T x : v) put<T>(x);
    }

    const std::string& bytes() const { return buf_; }
    std::string take() { return std::move(buf_); }

private:
    std::string buf_;
};

class binary_reader {
public:
    explicit binary_reader(std::string_view data) : data_(data) {}

    template <std::unsigned_integral T>
    T get() {
        need(sizeof(T));
        T v = 0;
        for (std::size_t i = 0; i < sizeof(T); ++i)
            v |= static_cast<T>(static_cast<unsigned char>(data_[pos_ + i])) << (8 * i);
        pos_ += sizeof(T);
        return v;
    }
    double get_f64() { return std::bit_cast<double>(get<std::uint64_t>()); }
    std::string get_bytes() {
        auto len = get<std::uint64_t>();
        need(len);
        std::string s(data_.substr(pos_, len));
        pos_ += len;
        return s;
    }
    template <std::unsigned_integral T>
    std::vector<T> get_vector() {
        auto len = get<std::uint64_t>();
        if (len > (data_.size() - pos_) / sizeof(T)) throw format_error("vector length exceeds section");
        std::vector<T> v(len);
        for (auto& x : v) x = get<T>();
        return v;
    }

    bool at_end() const { return pos_ == data_.size(); }

private:
    void need(std::uint64_t k) const {
        if (k > data_.size() - pos_) throw format_error("truncated section");
    }
    std::string_view data_;
    std::size_t pos_ = 0;
};

}  // namespace amsi
