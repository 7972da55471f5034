#include <doctest.h>

#include <sstream>

#include "mutvis/constructions.hpp"
#include "mutvis/graph_io.hpp"
#include "mutvis/theorems.hpp"

using namespace mutvis;

namespace {

bool same_edges(const Graph& a, const Graph& b) {
    return a.n == b.n && a.edges() == b.edges();
}

} // namespace

// Reference encodings generated independently with networkx.to_graph6_bytes.
TEST_CASE("graph6 writer matches reference encodings") {
    CHECK(to_graph6(path_graph(3)) == "Bg");
    CHECK(to_graph6(path_graph(5)) == "DhC");
    CHECK(to_graph6(cycle_graph(4)) == "Cl");
    CHECK(to_graph6(cycle_graph(6)) == "EhEG");
    CHECK(to_graph6(complete_graph(4)) == "C~");
    CHECK(to_graph6(complete_graph(5)) == "D~{");
    CHECK(to_graph6(complete_graph(1)) == "@");
    CHECK(to_graph6(complete_graph(2)) == "A_");
    CHECK(to_graph6(star_graph(3)) == "Cs");
    CHECK(to_graph6(petersen_graph()) == "IheA@GUAo");
    CHECK(to_graph6(make_graph_h()) == "EgSG");
}

TEST_CASE("graph6 long-form order encoding for n > 62") {
    std::string enc = to_graph6(cycle_graph(70));
    CHECK(enc.size() == 407);
    CHECK(enc.substr(0, 4) == "~?@E");
    Graph back = from_graph6(enc);
    CHECK(same_edges(back, cycle_graph(70)));
}

TEST_CASE("graph6 round trip on random graphs") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        Graph g = random_connected_graph(3 + static_cast<int>(seed % 9), seed);
        CHECK(same_edges(from_graph6(to_graph6(g)), g));
    }
}

TEST_CASE("graph6 reader accepts the optional header and strips newlines") {
    CHECK(same_edges(from_graph6(">>graph6<<Bg"), path_graph(3)));
    CHECK(same_edges(from_graph6("Bg\n"), path_graph(3)));
}

TEST_CASE("graph6 reader rejects malformed input") {
    CHECK_THROWS_AS(from_graph6(""), ParseError);
    CHECK_THROWS_AS(from_graph6("B"), ParseError);      // truncated body
    CHECK_THROWS_AS(from_graph6("Bg?"), ParseError);    // excess bytes
    CHECK_THROWS_AS(from_graph6("B\x20"), ParseError);  // byte below range
    // Nonzero padding: P_3 body is 6 bits "0110" + "00" padding; flip padding.
    CHECK_THROWS_AS(from_graph6(std::string("B") + char(63 + 0b011011)), ParseError);
}

TEST_CASE("graph6 stream reading") {
    std::istringstream in("Bg\nCl\n\nC~\n");
    auto graphs = read_graph6_stream(in);
    REQUIRE(graphs.size() == 3);
    CHECK(same_edges(graphs[0], path_graph(3)));
    CHECK(same_edges(graphs[1], cycle_graph(4)));
    CHECK(same_edges(graphs[2], complete_graph(4)));
}

TEST_CASE("edge list round trip and errors") {
    Graph g = make_frog(6, 3, 2);
    std::istringstream in(to_edge_list(g));
    CHECK(same_edges(from_edge_list(in), g));

    std::istringstream bad1("just words");
    CHECK_THROWS_AS(from_edge_list(bad1), ParseError);
    std::istringstream bad2("3 2\n0 1\n");
    CHECK_THROWS_AS(from_edge_list(bad2), ParseError); // fewer edges than declared
    std::istringstream bad3("2 1\n0 0\n");
    CHECK_THROWS_AS(from_edge_list(bad3), ParseError); // self-loop surfaces as parse error
}
