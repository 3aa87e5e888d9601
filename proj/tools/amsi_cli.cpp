// amsi: build, query, verify and benchmark matching-statistics indexes.

#include <atomic>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "amsi/attractor.hpp"
#include "amsi/container.hpp"
#include "amsi/input.hpp"
#include "amsi/ms_index.hpp"
#include "amsi/suffix_array.hpp"
#include "json.hpp"

namespace {

using namespace amsi;
using json = nlohmann::json;

// Exit codes.
constexpr int exit_usage = 2;
constexpr int exit_failure = 1;
constexpr int exit_disagree = 3;

struct build_args {
    std::string input, output;
    std::string format = "plain";
    std::vector<std::string> parser = {"lz"};
    double epsilon = 0.5;
    double dispatch_c = 1.0;
    std::string engines = "basic,lpmem,const";
};

struct query_args {
    std::string index;
    std::vector<std::string> patterns;
    std::string pattern_file;
    bool from_stdin = false;
    std::string engine = "basic";
    std::string output = "tsv";
    unsigned threads = 1;
};

struct bench_args {
    std::string index;
    std::vector<std::string> patterns;
    std::string pattern_file;
    unsigned repeat = 3;
};

std::vector<std::string> split_lines(const std::string& data) {
    std::vector<std::string> out;
    std::istringstream in(data);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        out.push_back(line);
    }
    return out;
}

std::vector<std::string> gather_patterns(const std::vector<std::string>& args, const std::string& file, bool from_stdin) {
    std::vector<std::string> out = args;
    if (!file.empty())
        for (auto& l : split_lines(read_file(file))) out.push_back(std::move(l));
    if (from_stdin || (args.empty() && file.empty())) {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        for (auto& l : split_lines(ss.str())) out.push_back(std::move(l));
    }
    for (std::size_t k = 0; k < out.size(); ++k)
        if (out[k].find(record_separator) != std::string::npos)
            throw input_error("pattern " + std::to_string(k + 1) + " contains the reserved separator byte 0x01");
    return out;
}

int cmd_build(const build_args& a) {
    std::string raw = read_file(a.input);
    std::string text = a.format == "fasta" ? parse_fasta(raw) : std::move(raw);

    index_options opt;
    opt.epsilon = a.epsilon;
    opt.dispatch_c = a.dispatch_c;
    opt.with_lpmem = a.engines.find("lpmem") != std::string::npos;
    opt.with_const = a.engines.find("const") != std::string::npos;
    if (opt.epsilon <= 0) throw input_error("--epsilon must be positive");

    suffix_data sd = text.empty() ? suffix_data{} : suffix_data::build(text);
    parsing lz = lz_parse(text, sd);
    rational delta = compute_delta(sd);

    ms_index idx;
    if (a.parser.at(0) == "lz") {
        idx = ms_index::build(text, lz, opt);
    } else if (a.parser.at(0) == "boundaries-file") {
        if (a.parser.size() < 2) throw input_error("--parser boundaries-file needs a path");
        auto positions = parse_positions(read_file(a.parser[1]));
        parsing p;
        try {
            p = boundaries_to_parsing(text.size(), positions);
        } catch (const std::invalid_argument& e) {
            throw input_error(std::string("invalid boundary file: ") + e.what());
        }
        if (text.size() <= default_attractor_check_cap) {
            std::vector<std::size_t> b(p.boundaries().begin(), p.boundaries().end());
            if (!validate_attractor(text, b)) throw input_error("invalid boundary file: not a string attractor");
        } else {
            std::cerr << "warning: n=" << text.size() << " exceeds the attractor check cap; boundaries trusted\n";
        }
        idx = ms_index::build(text, std::move(p), opt);
    } else {
        throw input_error("unknown parser '" + a.parser[0] + "'");
    }

    std::vector<section_size> sections;
    save_index_file(idx, a.output, &sections);
    std::cerr << "n=" << text.size() << " z=" << lz.size() << " gamma'=" << idx.boundary_count()
              << " delta=" << delta.to_string() << " (" << delta.value() << ")";
    std::cerr << " bytes:";
    for (const auto& s : sections) std::cerr << ' ' << s.name << '=' << s.bytes;
    std::cerr << '\n';
    return 0;
}

struct query_result {
    ms_array ms;
    query_counters counters;
};

json counters_json(const query_counters& c) {
    return {{"partner_calls", c.partner_calls}, {"range_queries", c.range_queries}, {"chars_extracted", c.chars_extracted}};
}

int cmd_query(const query_args& a) {
    std::vector<engine> engines;
    if (a.engine == "all") {
        engines = {engine::basic, engine::lpmem, engine::constant};
    } else if (auto e = parse_engine(a.engine)) {
        engines = {*e};
    } else {
        throw input_error("unknown engine '" + a.engine + "'");
    }
    if (a.output != "tsv" && a.output != "json") throw input_error("unknown output format '" + a.output + "'");
    ms_index idx = load_index_file(a.index);
    for (engine e : engines) {
        if (e == engine::lpmem && !idx.special()) throw input_error("index was built without the lpmem engine");
        if (e == engine::constant && !idx.active()) throw input_error("index was built without the const engine");
    }
    auto patterns = gather_patterns(a.patterns, a.pattern_file, a.from_stdin);

    // results[pattern][engine]
    std::vector<std::vector<query_result>> results(patterns.size(), std::vector<query_result>(engines.size()));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k = next++; k < patterns.size(); k = next++)
            for (std::size_t e = 0; e < engines.size(); ++e)
                results[k][e].ms = compute_ms(engines[e], idx, patterns[k], &results[k][e].counters);
    };
    unsigned threads = std::max(1u, std::min<unsigned>(a.threads, static_cast<unsigned>(patterns.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    std::size_t disagreements = 0;
    for (std::size_t k = 0; k < patterns.size(); ++k)
        for (std::size_t e = 1; e < engines.size(); ++e)
            if (results[k][e].ms != results[k][0].ms) {
                ++disagreements;
                std::cerr << "engines disagree on pattern " << k + 1 << ": " << engine_name(engines[0]) << " vs "
                          << engine_name(engines[e]) << '\n';
            }

    if (a.output == "json") {
        json out = json::array();
        for (std::size_t k = 0; k < patterns.size(); ++k)
            for (std::size_t e = 0; e < engines.size(); ++e)
                out.push_back({{"pattern", patterns[k]},
                               {"ms", results[k][e].ms},
                               {"engine", engine_name(engines[e])},
                               {"counters", counters_json(results[k][e].counters)}});
        std::cout << out.dump() << '\n';
    } else {
        for (std::size_t k = 0; k < patterns.size(); ++k)
            for (std::size_t i = 0; i < results[k][0].ms.size(); ++i)
                std::cout << k + 1 << '\t' << i + 1 << '\t' << results[k][0].ms[i] << '\n';
    }
    if (engines.size() > 1) {
        if (disagreements) {
            std::cerr << "FAIL: engines disagree on " << disagreements << " result(s)\n";
            return exit_disagree;
        }
        std::cerr << "engines agree on " << patterns.size() << " pattern(s)\n";
    }
    return 0;
}

int cmd_verify(const std::string& path, std::size_t max_n) {
    ms_index idx = load_index_file(path);
    const std::string& text = idx.plain_text();
    std::vector<std::size_t> b(idx.phrases().boundaries().begin(), idx.phrases().boundaries().end());
    std::string attractor;
    if (text.size() > max_n) {
        std::cerr << "notice: n=" << text.size() << " exceeds --max-n " << max_n << "; attractor check skipped\n";
        attractor = "attractor check skipped";
    } else if (validate_attractor(text, b, max_n)) {
        attractor = "attractor valid";
    } else {
        std::cout << "attractor INVALID; " << b.size() << " boundaries\n";
        return exit_failure;
    }
    // Loading already rejected malformed trees and non-permutation grids;
    // re-check the grid against both trees here.
    const auto& g = idx.points();
    for (std::uint32_t k = 0; k < b.size(); ++k)
        if (g.y_of(idx.rev().rank_of_boundary(k)) != idx.suf().rank_of_boundary(k)) {
            std::cout << attractor << "; " << b.size() << " boundaries; grid INCONSISTENT\n";
            return exit_failure;
        }
    std::cout << attractor << "; " << b.size() << " boundaries; grid permutation OK\n";
    return 0;
}

int cmd_bench(const bench_args& a) {
    ms_index idx = load_index_file(a.index);
    auto patterns = gather_patterns(a.patterns, a.pattern_file, false);
    std::vector<engine> engines = {engine::basic};
    if (idx.special()) engines.push_back(engine::lpmem);
    if (idx.active()) engines.push_back(engine::constant);
    std::cout << "engine,pattern,m,seconds,partner_calls,range_queries,rank_calls,chars_extracted\n";
    for (engine e : engines)
        for (std::size_t k = 0; k < patterns.size(); ++k) {
            query_counters c;
            auto t0 = std::chrono::steady_clock::now();
            for (unsigned r = 0; r < std::max(1u, a.repeat); ++r) {
                c = {};
                compute_ms(e, idx, patterns[k], &c);
            }
            double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() /
                          std::max(1u, a.repeat);
            std::cout << engine_name(e) << ',' << k + 1 << ',' << patterns[k].size() << ',' << secs << ','
                      << c.partner_calls << ',' << c.range_queries << ',' << c.rank_calls << ',' << c.chars_extracted
                      << '\n';
        }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Compressed matching-statistics index"};
    app.require_subcommand(1);

    build_args ba;
    auto* build = app.add_subcommand("build", "Parse a text and write an index");
    build->add_option("input", ba.input, "Text file")->required();
    build->add_option("-o,--output", ba.output, "Index file to write")->required();
    build->add_option("--format", ba.format, "Input format")->check(CLI::IsMember({"plain", "fasta"}));
    build->add_option("--parser", ba.parser, "lz, or boundaries-file <path>")->expected(1, 2);
    build->add_option("--epsilon", ba.epsilon, "Active-level exponent");
    build->add_option("--dispatch-c", ba.dispatch_c, "Constant for the const engine's hand-off to lpmem");
    build->add_option("--engines", ba.engines, "Comma-separated engines to build structures for");

    query_args qa;
    auto* query = app.add_subcommand("query", "Matching statistics for one or more patterns");
    query->add_option("index", qa.index, "Index file")->required();
    query->add_option("patterns", qa.patterns, "Patterns (default: read stdin)");
    query->add_option("-f,--pattern-file", qa.pattern_file, "One pattern per line");
    query->add_flag("--stdin", qa.from_stdin, "Also read patterns from stdin");
    query->add_option("--engine", qa.engine, "basic, lpmem, const or all");
    query->add_option("--output", qa.output, "tsv or json");
    query->add_option("--threads", qa.threads, "Worker threads");

    std::string verify_path;
    std::size_t max_n = default_attractor_check_cap;
    auto* verify = app.add_subcommand("verify", "Check the attractor and structural consistency");
    verify->add_option("index", verify_path, "Index file")->required();
    verify->add_option("--max-n", max_n, "Largest text for the quadratic attractor check");

    bench_args bench_a;
    auto* bench = app.add_subcommand("bench", "Time each engine; CSV on stdout");
    bench->add_option("index", bench_a.index, "Index file")->required();
    bench->add_option("patterns", bench_a.patterns, "Patterns");
    bench->add_option("-f,--pattern-file", bench_a.pattern_file, "One pattern per line");
    bench->add_option("--repeat", bench_a.repeat, "Runs per pattern");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*build) return cmd_build(ba);
        if (*query) return cmd_query(qa);
        if (*verify) return cmd_verify(verify_path, max_n);
        if (*bench) return cmd_bench(bench_a);
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_failure;
    }
    return exit_usage;
}
