#include <doctest.h>

#include "corpus.hpp"
#include "infranil/io.hpp"

using namespace infranil;
using corpus::q;

namespace {

const char* kCircle = R"({"dim":1, "linearPart":["2"], "name":"circle-doubling"})";

const char* kKlein = R"({
  "name": "klein-diag23",
  "dim": 2,
  "linearPart": [["2","0"],["0","3"]],
  "holonomy": [[["1","0"],["0","-1"]]]
})";

const char* kHeisenberg = R"({
  "name": "heisenberg-224",
  "dim": 3,
  "linearPart": [[2,0,0],[0,2,0],[0,0,4]],
  "lieBrackets": [[0,1,2,"1"]]
})";

}  // namespace

TEST_CASE("minimal document parses to circle doubling") {
    const auto doc = parse_input(kCircle);
    CHECK(doc.name == "circle-doubling");
    CHECK(doc.map.dim == 1);
    CHECK(doc.map.linearPart.at(0, 0) == q(2));
    CHECK(doc.map.trivial_holonomy());
    CHECK(doc.options.maxK == 40);
    CHECK(doc.options.precision == 32);
}

TEST_CASE("klein document: closure check fills the identity") {
    const auto doc = parse_input(kKlein);
    CHECK(doc.map.holonomy.size() == 2);
    CHECK(doc.map.holonomy.matrices[0] == RationalMatrix::identity(2));
}

TEST_CASE("sparse brackets are antisymmetrized") {
    const auto doc = parse_input(kHeisenberg);
    REQUIRE(doc.map.brackets.has_value());
    CHECK(doc.map.brackets->c(0, 1, 2) == q(1));
    CHECK(doc.map.brackets->c(1, 0, 2) == q(-1));
}

TEST_CASE("parse errors carry positions and tags") {
    CHECK_THROWS_AS(parse_input("{"), ParseError);
    CHECK_THROWS_AS(parse_input(R"({"dim":2, "linearPart":["1","2","3"]})"), ParseError);
    CHECK_THROWS_AS(parse_input(R"({"dim":1, "linearPart":["2/0"]})"), ParseError);
    CHECK_THROWS_AS(parse_input(R"({"dim":1, "linearPart":["x"]})"), ParseError);
    CHECK_THROWS_AS(parse_input(R"({"dim":1})"), ParseError);
    CHECK_THROWS_AS(parse_input(R"({"dim":1, "linearPart":["2"], "nonsense":1})"), ParseError);
    // singular holonomy matrix
    CHECK_THROWS_WITH_AS(
        parse_input(R"({"dim":2, "linearPart":[2,0,0,3], "holonomy":[[0,0,0,0]]})"),
        doctest::Contains("singular"), ParseError);
    // not closed under multiplication: a 4-fold rotation alone
    CHECK_THROWS_WITH_AS(
        parse_input(R"({"dim":2, "linearPart":[2,0,0,3], "holonomy":[[0,-1,1,0]]})"),
        doctest::Contains("closed"), ParseError);
    // broken antisymmetry
    CHECK_THROWS_WITH_AS(
        parse_input(
            R"({"dim":2, "linearPart":[2,0,0,4], "lieBrackets":[[0,1,0,"1"],[1,0,0,"1"]]})"),
        doctest::Contains("antisymmetry"), ParseError);
    // gammaPlusIndex 1 with fPlusCohomology
    CHECK_THROWS_AS(
        parse_input(
            R"({"dim":1, "linearPart":["2"], "fPlusCohomology":[["1"],["2"]]})"),
        ParseError);
}

TEST_CASE("round trip: parse(render(parse(x))) == parse(x)") {
    for (const char* text : {kCircle, kKlein, kHeisenberg}) {
        const auto once = parse_input(text);
        const auto twice = parse_input(render_input(once).dump());
        CHECK(render_input(once) == render_input(twice));
    }
}

TEST_CASE("deterministic machine reports") {
    const auto doc = parse_input(kKlein);
    const auto a = run(doc, Command::Report);
    const auto b = run(doc, Command::Report);
    CHECK(a.machine.dump() == b.machine.dump());
}

TEST_CASE("command staging") {
    const auto doc = parse_input(kCircle);

    const auto c = run(doc, Command::Classify);
    CHECK(c.exit_code() == 0);
    CHECK(c.machine.contains("spectral"));
    CHECK_FALSE(c.machine.contains("nielsen"));

    const auto n = run(doc, Command::Nielsen);
    CHECK(n.machine.contains("nielsen"));
    CHECK(n.machine.contains("reidemeister"));
    CHECK_FALSE(n.machine.contains("zeta"));

    const auto z = run(doc, Command::Zeta);
    CHECK(z.machine.contains("zeta"));
    CHECK_FALSE(z.machine.contains("hper"));

    const auto h = run(doc, Command::Hper);
    CHECK(h.machine.contains("hper"));

    const auto r = run(doc, Command::Report);
    CHECK(r.machine.contains("zeta"));
    CHECK(r.machine.contains("hper"));
    CHECK(r.exit_code() == 0);
}

TEST_CASE("report values: circle doubling") {
    const auto doc = parse_input(kCircle);
    const auto rep = run(doc, Command::Report);
    REQUIRE_FALSE(rep.has_error());
    const auto& m = rep.machine;
    CHECK(m["spectral"]["hyperbolic"].get<bool>());
    CHECK(m["spectral"]["p"].get<long>() == 1);
    CHECK(m["zeta"]["nielsenFromSum"]["numerator"] ==
          nlohmann::ordered_json::array({"1", "-1"}));
    CHECK(m["zeta"]["nielsenFromSum"]["denominator"] ==
          nlohmann::ordered_json::array({"1", "-2"}));
    CHECK(m["zeta"]["routesAgree"].get<bool>());
    CHECK(m["hper"]["cofiniteFrom"].get<std::string>() == "9");
    CHECK(m["hper"]["trace"]["mu"].get<std::string>() == "3/2");
    CHECK(m["hper"]["certifiedPeriods"].size() == 40);
}

TEST_CASE("human and machine renderings agree on shared values") {
    const auto doc = parse_input(kCircle);
    const auto rep = run(doc, Command::Report);
    const std::string text = rep.human();
    // spot values read straight from the machine document must appear
    CHECK(text.find("m0 = " + rep.machine["hper"]["trace"]["m0"].get<std::string>()) !=
          std::string::npos);
    CHECK(text.find("N(f^3) = 7") != std::string::npos);
    CHECK(text.find("(1 - z) / (1 - 2*z)") != std::string::npos);
}

TEST_CASE("hyperbolicity gate: exit code 3 payloads") {
    InputDocument doc;
    doc.name = "rotation";
    doc.map = corpus::rotation90();
    const auto rep = run(doc, Command::Hper);
    CHECK(rep.has_error());
    CHECK(rep.exit_code() == 3);
    CHECK(rep.machine["error"]["tag"].get<std::string>() == "NotHyperbolic");

    InputDocument ident;
    ident.name = "identity";
    ident.map = corpus::identity1();
    CHECK(run(ident, Command::Hper).exit_code() == 3);

    InputDocument sixth;
    sixth.name = "sixth-root";
    sixth.map = corpus::sixth_root_companion();
    CHECK(run(sixth, Command::Hper).exit_code() == 3);

    // classify still works on the same inputs
    CHECK(run(doc, Command::Classify).exit_code() == 0);
}

TEST_CASE("non-integer averaging surfaces as a domain error") {
    InputDocument doc;
    doc.name = "half";
    doc.map = corpus::make_map(RationalMatrix(1, {q(1, 2)}));
    const auto rep = run(doc, Command::Nielsen);
    CHECK(rep.exit_code() == 3);
    CHECK(rep.machine["error"]["tag"].get<std::string>() == "NonIntegerAverage");
}

TEST_CASE("infra input with cohomology data drives the index-2 table column") {
    // Klein-bottle-type map: H*(Gamma, Q) has Betti numbers (1, 1, 0)
    // with f* = 2 on H^1; the 2-fold cover is the torus, whose
    // cohomology carries eigenvalues {1}, {2,3}, {6}.
    const std::string text = R"({
      "name": "klein-with-data",
      "dim": 2,
      "linearPart": [["2","0"],["0","3"]],
      "holonomy": [[["1","0"],["0","-1"]]],
      "gammaPlusIndex": 2,
      "fCohomology": [["1"], ["2"], []],
      "fPlusCohomology": [["1"], ["2","3"], ["6"]]
    })";
    const auto doc = parse_input(text);
    const auto rep = run(doc, Command::Zeta);
    REQUIRE_FALSE(rep.has_error());
    const auto& z = rep.machine["zeta"];
    CHECK(z["lefschetzRoute"].get<std::string>() == "fCohomology input");
    // p = 2, n = 0, index 2: N_f = L_{f+}/L_f = (1-3z)/(1-6z), matching
    // the averaging route for N(f^k) = 6^k - 3^k.
    CHECK(z["nielsenFromTable"]["numerator"] == nlohmann::ordered_json::array({"1", "-3"}));
    CHECK(z["nielsenFromTable"]["denominator"] == nlohmann::ordered_json::array({"1", "-6"}));
    CHECK(z["routesAgree"].get<bool>());
}

TEST_CASE("csv summary row") {
    const auto doc = parse_input(kCircle);
    const auto rep = run(doc, Command::Report);
    CHECK(csv_header() == "name,dim,hyperbolic,nilpotent,m0,maxCertifiedK");
    CHECK(csv_row(rep) == "circle-doubling,1,true,false,9,40");
}
