#include "fixtures.hpp"
#include "hdvf/io.hpp"

#include "matchers.hpp"

#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

using namespace hdvf;

namespace {

std::istringstream stream(const std::string& text) { return std::istringstream(text); }

const std::string kHollowText = "# hollow triangle\n"
                                "V1 0 0\n"
                                "V2 0 0\n"
                                "V3 0 0\n"
                                "\n"
                                "e12 1 2 V1 V2   # first edge\n"
                                "e23 1 2 V2 V3\n"
                                "e13 1 2 V1 V3\n";

} // namespace

TEST_CASE("complex files parse into cells and rebuild the complex") {
    auto in = stream(kHollowText);
    auto specs = io::parse_complex_file(in);
    REQUIRE(specs.size() == 6);
    CHECK(specs[0].id == "V1");
    CHECK(specs[0].dim == 0);
    CHECK(specs[0].boundary.empty());
    CHECK(specs[3].id == "e12");
    CHECK(specs[3].boundary == std::vector<CellId>{"V1", "V2"});

    auto in2 = stream(kHollowText);
    ChainComplex k = io::load_complex(in2);
    CHECK(k.cell_count() == 6);
    CHECK(k.betti(0) == 1);
    CHECK(k.betti(1) == 1);
    CHECK(k.boundary(Chain(1, {"e12"})).cells() == std::set<CellId>{"V1", "V2"});
}

TEST_CASE("malformed complex lines are reported with their line number") {
    auto in1 = stream("V1 0 0\nV2 0\n");
    CHECK_THROWS_WITH_AS(io::parse_complex_file(in1),
                         "line 2: expected `<id> <dim> <k> <b1> ... <bk>`", io::ParseError);

    auto in2 = stream("V1 zero 0\n");
    CHECK_THROWS_WITH_AS(io::parse_complex_file(in2),
                         "line 1: dimension 'zero' is not an integer", io::ParseError);

    auto in3 = stream("# header\ne 1 3 a b\n");
    CHECK_THROWS_WITH_AS(io::parse_complex_file(in3),
                         "line 2: expected 3 boundary ids, found 2", io::ParseError);

    auto in4 = stream("e 1 -1\n");
    CHECK_THROWS_AS(io::parse_complex_file(in4), io::ParseError);

    // Structural errors surface as parse errors naming the offending cell.
    auto in5 = stream("V1 0 0\ne12 1 2 V1 VX\n");
    CHECK_THROWS_WITH_AS(io::load_complex(in5), "cell e12 lists unknown boundary cell VX",
                         io::ParseError);

    auto in6 = stream("V1 0 0\nV2 0 0\nV3 0 0\n"
                      "e12 1 2 V1 V2\ne23 1 2 V2 V3\n"
                      "G 2 2 e12 e23\n");
    CHECK_THROWS_WITH_AS(io::load_complex(in6), "boundary of boundary of G is nonzero",
                         io::ParseError);
}

TEST_CASE("grid files parse or fail with precise messages") {
    auto in = stream("# ring of pixels\n3 3\n1 1 1\n1 0 1\n1 1 1\n");
    auto grid = io::parse_grid(in);
    REQUIRE(grid.size() == 3);
    CHECK(grid[0] == std::vector<int>{1, 1, 1});
    CHECK(grid[1][1] == 0);

    auto e1 = stream("   \n# nothing\n");
    CHECK_THROWS_WITH_AS(io::parse_grid(e1), "grid file is empty", io::ParseError);

    auto e2 = stream("3\n1 1 1\n");
    CHECK_THROWS_WITH_AS(io::parse_grid(e2), "line 1: expected `width height`", io::ParseError);

    auto e3 = stream("3 wide\n");
    CHECK_THROWS_WITH_AS(io::parse_grid(e3), "line 1: height 'wide' is not an integer",
                         io::ParseError);

    auto e4 = stream("3 -1\n");
    CHECK_THROWS_WITH_AS(io::parse_grid(e4), "line 1: negative grid size", io::ParseError);

    auto e5 = stream("2 3\n1 1\n");
    CHECK_THROWS_WITH_AS(io::parse_grid(e5), "grid has 1 rows, expected 3", io::ParseError);

    auto e6 = stream("3 1\n1 1\n");
    CHECK_THROWS_WITH_AS(io::parse_grid(e6), "line 2: expected 3 entries", io::ParseError);

    auto e7 = stream("2 1\n1 2\n");
    CHECK_THROWS_WITH_AS(io::parse_grid(e7), "line 2: entry '2' is not 0 or 1", io::ParseError);
}

TEST_CASE("filtration files sort cells by value, stably") {
    auto in = stream("# out of order on purpose\n"
                     "e12 1 4 2 V1 V2\n"
                     "V1 0 1 0\n"
                     "V2 0 1 0\n"
                     "V3 0 2 0\n"
                     "e23 1 4 2 V2 V3\n"
                     "e13 1 9 2 V1 V3\n");
    auto f = io::parse_filtration_file(in);
    std::vector<CellId> order;
    for (const auto& spec : f.cells)
        order.push_back(spec.id);
    // Ties keep file order: V1 before V2, e12 before e23.
    CHECK(order == std::vector<CellId>{"V1", "V2", "V3", "e12", "e23", "e13"});
    CHECK(f.values == std::vector<double>{1, 1, 2, 4, 4, 9});
    CHECK(f.cells[3].boundary == std::vector<CellId>{"V1", "V2"});

    auto e1 = stream("V1 0 1\n");
    CHECK_THROWS_WITH_AS(io::parse_filtration_file(e1),
                         "line 1: expected `<id> <dim> <value> <k> <b1> ... <bk>`",
                         io::ParseError);

    auto e2 = stream("V1 0 soon 0\n");
    CHECK_THROWS_WITH_AS(io::parse_filtration_file(e2), "line 1: value 'soon' is not a number",
                         io::ParseError);
}

TEST_CASE("basis files list one generator per line") {
    auto in = stream("# one loop\n1 e12 e23 e13\n0 V1\n");
    auto lines = io::parse_basis_file(in);
    REQUIRE(lines.size() == 2);
    CHECK(lines[0].q == 1);
    CHECK(lines[0].cells == std::vector<CellId>{"e12", "e23", "e13"});
    CHECK(lines[1].q == 0);

    auto e1 = stream("1\n");
    CHECK_THROWS_WITH_AS(io::parse_basis_file(e1), "line 1: expected `<q> <cell id> ...`",
                         io::ParseError);

    auto e2 = stream("one e12\n");
    CHECK_THROWS_WITH_AS(io::parse_basis_file(e2), "line 1: dimension 'one' is not an integer",
                         io::ParseError);
}

TEST_CASE("result JSON pieces carry the expected shapes") {
    auto doc = io::result_skeleton();
    REQUIRE(doc.is_object());
    CHECK(doc.size() == 5);
    CHECK(doc["betti"].is_object());
    CHECK(doc["generators"].is_object());
    CHECK(doc["diagram"].is_array());
    CHECK(doc["hdvf"].is_object());
    CHECK(doc["report"].is_string());

    ChainComplex hollow = fixtures::hollow_triangle();
    auto betti = io::betti_json(hollow);
    CHECK(betti["0"] == 1);
    CHECK(betti["1"] == 1);

    auto x = std::get<Hdvf>(Hdvf::validate(hollow, fixtures::hollow_triangle_labels()));
    auto gens = io::generators_json(x);
    CHECK(gens["0"] == nlohmann::json::array({{"V1"}}));
    CHECK(gens["1"] == nlohmann::json::array({{"e12", "e13", "e23"}}));

    auto labels = io::labels_json(x.labels());
    CHECK(labels.size() == 6);
    CHECK(labels["V1"] == "C");
    CHECK(labels["V2"] == "P");
    CHECK(labels["e12"] == "S");
    CHECK(labels["e13"] == "C");

    CHECK(io::chain_json(Chain(1, {"e23", "e12"})) == nlohmann::json::array({"e12", "e23"}));
    CHECK(io::chain_json(Chain()) == nlohmann::json::array());

    PersistenceDiagram d = {{0, 1, std::nullopt}, {0, 2, 4}};
    auto dj = io::diagram_json(d);
    REQUIRE(dj.size() == 2);
    CHECK(dj[0][0] == 0);
    CHECK(dj[0][1] == 1);
    CHECK(dj[0][2].is_null());
    CHECK(dj[1][2] == 4);
}

TEST_CASE("diagrams export to CSV and SVG") {
    PersistenceDiagram d = {{0, 1, std::nullopt}, {0, 2, 4}, {0, 3, 5}, {1, 6, std::nullopt}};
    CHECK(io::diagram_csv(d) == "q,birth,death\n0,1,inf\n0,2,4\n0,3,5\n1,6,inf\n");
    CHECK(io::diagram_csv({}) == "q,birth,death\n");

    std::string svg = io::diagram_svg(d, 6);
    CHECK(svg == doctest::Contains("<svg"));
    CHECK(svg == doctest::Contains("death=inf"));
    CHECK(svg == doctest::Contains("birth step"));
    std::size_t circles = 0;
    for (std::size_t at = svg.find("<circle"); at != std::string::npos;
         at = svg.find("<circle", at + 1))
        ++circles;
    CHECK(circles == d.size());
}
