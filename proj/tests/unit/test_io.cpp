#include "helpers.hpp"

#include "exl/io.hpp"

#include <filesystem>
#include <fstream>

using namespace exl;
using namespace unit_helpers;

#ifndef EXL_DATA_DIR
#error "EXL_DATA_DIR must point at the shipped data directory"
#endif

namespace {

std::string data(const std::string& name) { return std::string(EXL_DATA_DIR) + "/" + name; }

Json minimal_algebra() {
    return Json::parse(R"({
        "field": "rational", "dimension": 2, "basis": ["x", "y"],
        "products": [{"left": 0, "right": 0, "result": [{"index": 0, "coeff": "1"}]}],
        "ideal": {"basis_vectors": [["1", "0"]]}
    })");
}

} // namespace

TEST_CASE("shipped t2-corner file is the corner extension") {
    auto doc = load_algebra(data("t2-corner.json"));
    CHECK(doc.algebra == hand_t2());
    CHECK(doc.split.ideal_count() == 2);
    CHECK(doc.ideal.basis_vectors == std::vector<Element>{vec({1, 0, 0}), vec({0, 1, 0})});
    for (const auto& name : {"matrix2", "direct-sum"}) {
        auto d = load_algebra(data(std::string(name) + ".json"));
        CHECK(d.algebra == demo_extension(name).algebra);
    }
}

TEST_CASE("parse errors carry locations") {
    auto doc = minimal_algebra();
    doc["products"][0]["result"][0]["coeff"] = "1.5";
    try {
        parse_algebra(doc);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.where() == "/products/0/result/0/coeff");
    }
    auto numeric = minimal_algebra();
    numeric["products"][0]["result"][0]["coeff"] = 1;
    CHECK_THROWS_AS(parse_algebra(numeric), ParseError);

    auto wrong_field = minimal_algebra();
    wrong_field["field"] = "real";
    CHECK_THROWS_AS(parse_algebra(wrong_field), ParseError);

    auto short_basis = minimal_algebra();
    short_basis["ideal"]["basis_vectors"][0] = Json::array({"1"});
    CHECK_THROWS_AS(parse_algebra(short_basis), ParseError);

    auto not_ideal = minimal_algebra();
    not_ideal["products"].push_back(Json::parse(R"({"left": 1, "right": 0, "result": [{"index": 1, "coeff": "1"}]})"));
    CHECK_THROWS_AS(parse_algebra(not_ideal), ParseError);

    auto path = std::filesystem::temp_directory_path() / "exl-broken.json";
    {
        std::ofstream out(path);
        out << "{\n  \"field\": \"rational\",\n  oops\n}\n";
    }
    try {
        read_json_file(path.string());
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.where().find("line 3") != std::string::npos);
    }
}

TEST_CASE("empty products give a zero algebra") {
    auto doc = minimal_algebra();
    doc["products"] = Json::array();
    auto parsed = parse_algebra(doc);
    CHECK(parsed.algebra == Algebra({"x", "y"}));
    CHECK_FALSE(validate_algebra(parsed.algebra));
}

TEST_CASE("round trips") {
    for (const auto& d : demo_corpus()) {
        AlgebraDocument doc{d.algebra, d.ideal, std::nullopt, make_split_basis(d.ideal)};
        auto again = parse_algebra(serialize_algebra(doc));
        CHECK(again.algebra == doc.algebra);
        CHECK(again.ideal.basis_vectors == doc.ideal.basis_vectors);
    }

    auto t2 = hand_t2();
    Ideal corner{t2, {vec({1, 1, 0}), vec({0, 1, 0})}};
    std::vector<Element> complement{vec({1, 0, 1})};
    auto doc = parse_algebra(serialize_algebra(t2, corner, complement));
    CHECK(doc.complement == std::optional<std::vector<Element>>(complement));
    const auto& split = doc.split;

    Chain c = Chain::pure({0, 2}, Scalar(-3, 2)) + Chain::pure({1, 1}, 4);
    CHECK(parse_chain(serialize_chain(c, split), split) == c);
    CHECK(parse_element(serialize_element(vec({1, -1, 2}), split), split) == vec({1, -1, 2}));

    auto schedule = std::get<UnitSchedule>(build_unit_schedule(split, {{0, 2, 1}}, 2));
    CHECK(parse_schedule(serialize_schedule(schedule, split), split) == schedule);

    auto inverse = std::get<std::vector<InverseResult>>(
                       inverse_excision_class(split, {canonicalize_cyclic(Chain::pure({2, 0}))}))
                       .front();
    auto back = parse_certificate_document(certificate_document(doc, inverse));
    const auto& r = std::get<InverseResult>(back.certificate);
    CHECK(r.output == inverse.output);
    CHECK(r.formula_output == inverse.formula_output);
    CHECK(r.schedule == inverse.schedule);
    CHECK(r.certificate.witness == inverse.certificate.witness);
    CHECK(verify_certificate(back.algebra.split, r).ok());

    auto descent = descent_step(split, Chain::pure({0, 2}), schedule.unit(2));
    auto d2 = std::get<DescentCertificate>(parse_certificate(serialize_certificate(descent, split), split));
    CHECK(d2.output == descent.output);
    CHECK(d2.homotopy == descent.homotopy);
    CHECK(d2.unit == descent.unit);

    auto boundary = inverse.certificate;
    auto b2 = std::get<BoundaryCertificate>(parse_certificate(serialize_certificate(boundary, split), split));
    CHECK(b2.witness == boundary.witness);
    CHECK(b2.kind == boundary.kind);
    CHECK(b2.space == boundary.space);
}

TEST_CASE("chain files expand slots through the split basis") {
    auto doc = load_algebra(data("t2-corner.json"));
    auto c = parse_chain(read_json_file(data("t2-class-n1.json")), doc.split);
    CHECK(c == Chain::pure({E22, E11}));
    CHECK(format_chain(Chain::pure({E22, E11}, Scalar(-1, 2)), doc.split) == "-1/2 E22 (x) E11");
    auto targets = parse_targets(read_json_file(data("t2-unit-targets.json")), doc.split);
    CHECK(targets.size() == 2);
    auto bad = Json::parse(R"({"degree": 1, "terms": [{"coeff": "1", "slots": [["1","0","0"]]}]})");
    CHECK_THROWS_AS(parse_chain(bad, doc.split), ParseError);
}
