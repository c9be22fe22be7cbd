#include "doctest.h"

#include <optional>

#include "common.hpp"
#include "hsw/workbench.hpp"

using namespace hsw;
using testing::q;

namespace {

std::optional<ParseError> parse_error(const std::string& text)
{
    try {
        parse_workbench(text);
    } catch (const ParseError& e) {
        return e;
    }
    return std::nullopt;
}

const char* k3_head = "field Q\n"
                      "algebra K\n"
                      "  basis e:even x:odd y:odd\n"
                      "  supercommutative\n";

} // namespace

TEST_SUITE("workbench") {

TEST_CASE("K3 fixture")
{
    const auto wb = load_workbench(testing::fixture("k3.alg"));
    const auto& k = wb.algebra("K3_c1");
    CHECK(k.dim() == 3);
    CHECK(k.space().parity(0) == Parity::even);
    CHECK(k.space().parity(1) == Parity::odd);
    CHECK(k.space().parity(2) == Parity::odd);
    CHECK(k.mul_basis(2, 1) == testing::vec(wb.field, 3, 0, q(-1)));
    CHECK(wb.params.size() == 2);

    // 1/c^2 with c = 2.
    const auto& a = wb.algebra("K3a");
    CHECK(a.mul_basis(1, 2) == testing::vec(wb.field, 3, 0, q(1, 4)));
    CHECK(a.twist().matrix()(1, 1) == q(1, 2));
    CHECK(a.twist().matrix()(0, 0) == q(1));

    CHECK(wb.map("R").map.matrix()(2, 1) == q(3));
    CHECK_THROWS_AS(wb.algebra("nope"), UnresolvedReference);
    CHECK_THROWS_AS(wb.rep("K3a"), UnresolvedReference);
}

TEST_CASE("duplicate product line")
{
    const auto e = parse_error(std::string(k3_head) + "  product e e = e\n  product e e = 1 e\nend\n");
    REQUIRE(e.has_value());
    CHECK(e->line() == 6);
    CHECK(std::string(e->what()).find("duplicate") != std::string::npos);
}

TEST_CASE("undefined basis element")
{
    const auto e = parse_error(std::string(k3_head) + "  product e z = e\nend\n");
    REQUIRE(e.has_value());
    CHECK(e->line() == 5);
    CHECK(e->column() == 13);
    CHECK(std::string(e->what()).find("'z'") != std::string::npos);
}

TEST_CASE("unresolved algebra in a rep")
{
    const auto e = parse_error("field Q\nrep r of Missing\n  adjoint\nend\n");
    REQUIRE(e.has_value());
    CHECK(e->line() == 2);
    CHECK(e->column() == 10);
}

TEST_CASE("parity violation")
{
    const auto e = parse_error(std::string(k3_head) + "  product e x = e\nend\n");
    REQUIRE(e.has_value());
    CHECK(e->line() == 5);
    CHECK(std::string(e->what()).find("parity violation") != std::string::npos);
}

TEST_CASE("supercommutative conflicts")
{
    const auto e = parse_error(std::string(k3_head) + "  product x y = e\n  product y x = e\nend\n");
    REQUIRE(e.has_value());
    CHECK(e->line() == 6);
    CHECK(std::string(e->what()).find("supercommutative conflict") != std::string::npos);

    const auto sq = parse_error(std::string(k3_head) + "  product x x = e\nend\n");
    REQUIRE(sq.has_value());
    CHECK(std::string(sq->what()).find("odd square") != std::string::npos);

    // In characteristic 2 odd squares are allowed.
    CHECK_NOTHROW(parse_workbench("field gf2\nalgebra K\n  basis e:even x:odd\n  supercommutative\n"
                                  "  product x x = e\nend\n"));
}

TEST_CASE("structural errors carry positions")
{
    CHECK(parse_error("field Q\nalgebra A\n  basis e:even\n")->line() == 2);
    CHECK(parse_error("algebra A\n  basis e:even\nend\nfield Q\n")->line() == 4);
    CHECK(parse_error("field Q\nalgebra A\n  basis e:even\n  product e e = 1/0 e\nend\n")->line() == 4);
    CHECK(parse_error("field Q\nalgebra A\n  basis e:even\n  product e e = c e\nend\n")->column() == 17);
    CHECK(parse_error("field Q\nwidget A\nend\n")->column() == 1);
    CHECK(parse_error("field gf4\n").has_value());
    CHECK(parse_error("field gf3\nalgebra A\n  basis e:even\n  product e e = 1/3 e\nend\n").has_value());
}

TEST_CASE("expressions and parameters")
{
    const auto wb = parse_workbench("field Q\nparams\n  c = 3\n  d = c^2 - 1/2\nend\n"
                                    "algebra A\n  basis e:even\n  product e e = -(c + 1)*d/2 e\nend\n");
    CHECK(wb.params[1].value == mpq_class(17, 2));
    CHECK(wb.algebra("A").mul_basis(0, 0)[0] == q(-17));
}

TEST_CASE("dual basis names")
{
    const auto wb = parse_workbench("field Q\nalgebra A\n  basis e:even\n  product e e = e\nend\n"
                                    "rep D of A\n  basis e*:even\n  action e e* = -e*\nend\n"
                                    "map m on D\n  image e* = 2 e\nend\n");
    CHECK(wb.rep("D").space().name(0) == "e*");
    CHECK(wb.map("m").map.matrix()(0, 0) == q(2));
}

TEST_CASE("emit and parse round trip")
{
    for (const auto* name : {"k3.alg", "gf3.alg", "zero11.alg"}) {
        const auto wb = load_workbench(testing::fixture(name));
        const auto text = emit_workbench(wb);
        const auto back = parse_workbench(text);
        CHECK(emit_workbench(back) == text);
        REQUIRE(back.algebras.size() == wb.algebras.size());
        for (std::size_t i = 0; i < wb.algebras.size(); ++i)
            CHECK(back.algebras[i].value == wb.algebras[i].value);
        REQUIRE(back.reps.size() == wb.reps.size());
        for (std::size_t i = 0; i < wb.reps.size(); ++i)
            CHECK(back.reps[i].value.rep.action() == wb.reps[i].value.rep.action());
        REQUIRE(back.tensors.size() == wb.tensors.size());
        for (std::size_t i = 0; i < wb.tensors.size(); ++i)
            CHECK(back.tensors[i].value.tensor == wb.tensors[i].value.tensor);
    }
}

} // TEST_SUITE
