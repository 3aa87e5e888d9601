#include <zlib.h>

#include "amsi/container.hpp"
#include "amsi/input.hpp"
#include "amsi/oracle.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace amsi;

namespace {

void put_u16(std::string& s, std::size_t at, std::uint16_t v) {
    s[at] = static_cast<char>(v & 0xFF);
    s[at + 1] = static_cast<char>(v >> 8);
}

std::uint64_t get_u64(const std::string& s, std::size_t at) {
    std::uint64_t v = 0;
    for (int i = 7; i >= 0; --i) v = (v << 8) | static_cast<unsigned char>(s[at + i]);
    return v;
}

}  // namespace

TEST_SUITE("container") {
    TEST_CASE("round trip gives identical answers") {
        oracle::instance_generator gen({.seed = 51, .kind = oracle::family::copy_paste, .n_max = 300, .sigma = 4});
        for (int k = 0; k < 20; ++k) {
            auto inst = gen.next();
            auto idx = test::index_of(inst.text);
            auto saved = save_index(idx);
            auto back = load_index(saved.bytes);
            CHECK(back.plain_text() == inst.text);
            CHECK(back.phrases() == idx.phrases());
            CHECK(save_index(back).bytes == saved.bytes);
            for (auto e : {engine::basic, engine::lpmem, engine::constant})
                CHECK(compute_ms(e, back, inst.pattern) == compute_ms(e, idx, inst.pattern));
        }
    }

    TEST_CASE("header starts with the magic and version") {
        auto bytes = save_index(test::index_of("aaabbbcc")).bytes;
        CHECK(bytes.substr(0, 4) == "AMSI");
        CHECK(static_cast<unsigned char>(bytes[4]) == container_version);
    }

    TEST_CASE("corruption is rejected") {
        auto bytes = save_index(test::index_of("abracadabra")).bytes;

        auto bad_magic = bytes;
        bad_magic[0] = 'X';
        CHECK_THROWS_AS(load_index(bad_magic), format_error);

        auto bad_version = bytes;
        put_u16(bad_version, 4, container_version + 1);
        CHECK_THROWS_WITH_AS(load_index(bad_version), doctest::Contains("version"), format_error);

        // Flip one byte inside the first section payload.
        auto tampered = bytes;
        std::size_t offset = get_u64(bytes, 12 + 4);
        tampered[offset] ^= 0x5A;
        CHECK_THROWS_WITH_AS(load_index(tampered), doctest::Contains("checksum"), format_error);

        CHECK_THROWS_AS(load_index(bytes.substr(0, bytes.size() - 3)), format_error);
        CHECK_THROWS_AS(load_index(""), format_error);
    }

    TEST_CASE("a payload with a valid checksum but broken content is still rejected") {
        auto bytes = save_index(test::index_of("abracadabra")).bytes;
        // Rewrite the grid section with a non-permutation and fix its crc.
        std::uint32_t count = 0;
        for (int i = 3; i >= 0; --i) count = (count << 8) | static_cast<unsigned char>(bytes[8 + i]);
        for (std::uint32_t s = 0; s < count; ++s) {
            std::size_t entry = 12 + s * 24;
            std::uint32_t id = static_cast<unsigned char>(bytes[entry]);
            if (id != static_cast<std::uint32_t>(section_id::grid)) continue;
            std::size_t off = get_u64(bytes, entry + 4), len = get_u64(bytes, entry + 12);
            REQUIRE(len >= 16);
            // First point after the u64 length: set it equal to the second.
            for (int i = 0; i < 4; ++i) bytes[off + 8 + i] = bytes[off + 12 + i];
            auto crc = static_cast<std::uint32_t>(
                crc32(0, reinterpret_cast<const Bytef*>(bytes.data() + off), static_cast<uInt>(len)));
            for (int i = 0; i < 4; ++i) bytes[entry + 20 + i] = static_cast<char>((crc >> (8 * i)) & 0xFF);
        }
        CHECK_THROWS_AS(load_index(bytes), format_error);
    }
}

TEST_SUITE("input") {
    TEST_CASE("fasta records are joined by the separator") {
        CHECK(parse_fasta(">r1\nACGT\nAC\n>r2 desc\nGG\n") == std::string("ACGTAC") + record_separator + "GG");
        CHECK(parse_fasta(">only\r\nAC\r\n") == "AC");
        CHECK(parse_fasta("").empty());
        CHECK_THROWS_AS(parse_fasta("ACGT\n>r\nAC\n"), input_error);
    }

    TEST_CASE("a separator inside the sequence is refused") {
        CHECK_THROWS_AS(parse_fasta(std::string(">r\nA") + record_separator + "C\n"), input_error);
    }

    TEST_CASE("positions") {
        CHECK(parse_positions("3 6\n8") == std::vector<std::size_t>{3, 6, 8});
        CHECK(parse_positions("").empty());
        CHECK_THROWS_AS(parse_positions("3 x"), input_error);
        CHECK_THROWS_AS(parse_positions("-1"), input_error);
    }

    TEST_CASE("FASTA text can be indexed and matches never span records") {
        std::string t = parse_fasta(">a\nabc\n>b\ncab\n");
        auto idx = ms_index::build(t);
        CHECK(idx.text().extract(1, 3) == "abc");
        CHECK(idx.text().extract(5, 3) == "cab");
        CHECK(compute_ms_basic(idx, "bcca") == std::vector<std::size_t>{2, 1, 2, 1});
        CHECK(compute_ms_basic(idx, "abcab") == std::vector<std::size_t>{3, 2, 3, 2, 1});
    }
}
