#include <doctest.h>

#include <filesystem>
#include <regex>

#include <unistd.h>

#include "oracles.hpp"
#include "starforest/constructions.hpp"
#include "starforest/io.hpp"
#include "starforest/verify.hpp"

using namespace starforest;
namespace fs = std::filesystem;

namespace {

const std::string kGolden = STARFOREST_GOLDEN_DIR;

std::vector<fs::path> golden_files() {
    std::vector<fs::path> out;
    for (const auto& e : fs::directory_iterator(kGolden)) {
        if (e.path().extension() == ".sf") out.push_back(e.path());
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string header(int n, int k) { return "starforest 1\nn " + std::to_string(n) + "\nk " + std::to_string(k) + "\n"; }

int error_line(const std::string& text) {
    try {
        parse(text);
    } catch (const ParseError& e) {
        return e.line();
    }
    return -1;
}

std::string error_text(const std::string& text) {
    try {
        parse(text);
    } catch (const ParseError& e) {
        return e.what();
    }
    return {};
}

}  // namespace

TEST_CASE("round trip of constructions") {
    std::vector<ConstructionOutput> outs{k27(), k16(), k4_construction(2), f2_construction(10),
                                         broken_double_star_completion(5), blowup(f2_construction(8), 2)};
    for (const auto& out : outs) {
        CAPTURE(out.family);
        auto file = to_file(out);
        auto text = serialize(file);
        auto back = parse(text);
        CHECK(back == file);
        CHECK(back.decomposition == out.decomposition);
        CHECK(serialize(back) == text);
        CHECK(back.meta.at("family") == out.family);
        CHECK(parse_edges(back.meta.at("raw_duplicates")) == out.raw_duplicates);
    }
}

TEST_CASE("golden files") {
    auto files = golden_files();
    REQUIRE(files.size() >= 7);
    for (const auto& p : files) {
        CAPTURE(p.string());
        auto text = read_file(p.string());
        auto f = parse(text);
        CHECK(serialize(f) == text);
        CHECK(validate_decomposition(f.decomposition).ok());
        CHECK(oracle::is_valid(f.decomposition));
    }
    auto k16_file = parse(read_file(kGolden + "/k16.sf"));
    CHECK(k16_file.decomposition.forests.size() == 10);
    CHECK(k16_file.decomposition == k16().decomposition);
    CHECK(parse(read_file(kGolden + "/k27.sf")).decomposition == k27().decomposition);
    CHECK(parse(read_file(kGolden + "/k4gen_m2.sf")).decomposition == k4_construction(2).decomposition);
}

TEST_CASE("parse accepts comments, blank lines and labels") {
    auto f = parse("# comment\n\nstarforest 1\nn 3\nk 1\nmeta note hello world\nforest\nstar 0 : 1 2\n\nforest\n"
                   "# inside\nstar 1 : 2\n");
    CHECK(f.decomposition.n == 3);
    CHECK(f.decomposition.forests.size() == 2);
    CHECK(f.meta.at("note") == "hello world");
    CHECK(validate_decomposition(f.decomposition).ok());

    auto labelled = parse(header(27, 3) + "labels f3cube 0\nforest\nstar 0 : 1\n");
    REQUIRE(labelled.decomposition.labels);
    CHECK(*labelled.decomposition.labels == LabelScheme::f3cube());
}

TEST_CASE("parse diagnostics") {
    SUBCASE("center listed as its own leaf names the star") {
        auto msg = error_text(header(3, 1) + "forest\nstar 0 : 1 0\n");
        CHECK(msg.find("line 5") != std::string::npos);
        CHECK(msg.find("center 0 listed as its own leaf") != std::string::npos);
        CHECK(msg.find("S(0;") != std::string::npos);
        CHECK(error_line(header(3, 1) + "forest\nstar 0 : 1 0\n") == 5);
    }
    CHECK(error_text("starforest 2\nn 3\nk 1\n").find("version") != std::string::npos);
    CHECK(error_line("") == 0);
    CHECK(error_text("starforest 1\nk 1\n").find("missing 'n'") != std::string::npos);
    CHECK(error_text("starforest 1\nn 3\n").find("missing 'k'") != std::string::npos);
    CHECK(error_line(header(3, 1) + "star 0 : 1\n") == 4);
    CHECK(error_line(header(3, 1) + "forest\nstar 0 : 5\n") == 5);
    CHECK(error_line(header(3, 1) + "forest\nstar 0 : 1\nstar 1 : 2\n") == 6);
    CHECK(error_line(header(3, 1) + "forest\nstar 0 :\n") == 5);
    CHECK(error_line(header(3, 1) + "forest\nforest\nstar 0 : 1\n") == 4);
    CHECK(error_line(header(3, 1) + "bogus 1\n") == 4);
    CHECK(error_line(header(3, 1) + "meta a 1\nmeta a 2\n") == 5);
    CHECK(error_line(header(3, 1) + "forest\nstar x : 1\n") == 5);
    CHECK(error_line(header(3, 1) + "forest\nstar 0 1\n") == 5);
    CHECK(error_text(header(3, 1) + "labels f3cube 0\n").find("labels") != std::string::npos);
    CHECK_THROWS_AS(parse("n 3\n"), ParseError);
}

TEST_CASE("edge lists") {
    CHECK(format_edges({{0, 2}, {1, 3}}) == "0-2 1-3");
    CHECK(parse_edges("0-2 1-3") == std::vector<Edge>{{0, 2}, {1, 3}});
    CHECK(parse_edges("") .empty());
    CHECK(parse_edges("3-1") == std::vector<Edge>{{1, 3}});
    CHECK_THROWS_AS(parse_edges("0_2"), ParseError);
    CHECK_THROWS_AS(parse_edges("0-x"), ParseError);
}

TEST_CASE("DOT export") {
    auto d = k16().decomposition;
    auto dot = export_dot(d);
    std::regex edge_re(R"re((\d+) -- (\d+) \[color="(#[0-9a-f]{6})"\])re");
    std::set<std::string> colors;
    std::set<Edge> edges;
    std::size_t count = 0;
    for (auto it = std::sregex_iterator(dot.begin(), dot.end(), edge_re); it != std::sregex_iterator(); ++it) {
        ++count;
        colors.insert((*it)[3]);
        edges.insert(make_edge(std::stoi((*it)[1]), std::stoi((*it)[2])));
    }
    CHECK(count == 120);
    CHECK(edges.size() == 120);
    CHECK(colors.size() == 10);
    CHECK(dot == export_dot(d));
    CHECK(dot.find("A_0(0)") != std::string::npos);

    SUBCASE("per forest") {
        auto graphs = export_dot_per_forest(k27().decomposition);
        CHECK(graphs.size() == 15);
        Decomposition one{4, 1, {{{{0, {1, 2, 3}}}}}, std::nullopt};
        auto single = export_dot_per_forest(one);
        REQUIRE(single.size() == 1);
        CHECK(single[0].find("0 -- 1;") != std::string::npos);
        CHECK(single[0].find("0 -- 3;") != std::string::npos);
        CHECK(single[0].find("0 [style=filled]") != std::string::npos);
    }
}

TEST_CASE("atomic writes") {
    auto dir = fs::temp_directory_path() / ("starforest_io_test_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    auto path = (dir / "out.sf").string();
    write_file_atomic(path, "first\n");
    write_file_atomic(path, "second\n");
    CHECK(read_file(path) == "second\n");
    std::size_t entries = 0;
    for ([[maybe_unused]] const auto& e : fs::directory_iterator(dir)) ++entries;
    CHECK(entries == 1);
    CHECK_THROWS_AS(read_file((dir / "missing.sf").string()), Error);
    CHECK_THROWS_AS(write_file_atomic((dir / "no" / "such" / "dir.sf").string(), "x"), Error);
    fs::remove_all(dir);
}
