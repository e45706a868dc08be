#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dexact/rep.hpp"
#include "fixtures.hpp"

using namespace dexact;

TEST_CASE("path algebra of the two-vertex quiver") {
    auto alg = fx::a2();
    CHECK(alg->dimension() == 3); // e1, e2, a
    CHECK(alg->basis_paths(0, 0).size() == 1);
    CHECK(alg->basis_paths(0, 1).size() == 1);
    CHECK(alg->basis_paths(1, 0).empty());
    CHECK(alg->basis_paths(1, 1).size() == 1);
}

TEST_CASE("path algebra of the three-vertex quiver") {
    auto alg = fx::a3();
    CHECK(alg->dimension() == 6); // three idempotents, a, b, ba
    CHECK(alg->basis_paths(0, 2).size() == 1);
}

TEST_CASE("the length-two relation cuts the algebra down") {
    auto alg = fx::aus();
    CHECK(alg->dimension() == 5); // ba dies
    CHECK(alg->basis_paths(0, 2).empty());
}

TEST_CASE("reduce_path maps a killed path to zero coordinates") {
    auto alg = fx::aus();
    Path ba{0, 2, {0, 1}};
    auto coords = alg->reduce_path(ba);
    for (const auto& c : coords) CHECK(c.is_zero());
}

TEST_CASE("multiply composes basis paths") {
    auto alg = fx::a3();
    Path a{0, 1, {0}};
    Path b{1, 2, {1}};
    auto coords = alg->multiply(a, b); // b after a
    const auto& basis = alg->basis_paths(0, 2);
    REQUIRE(basis.size() == 1);
    REQUIRE(coords.size() == 1);
    CHECK(coords[0].value() == 1);
}

TEST_CASE("a scaled relation is respected") {
    // 1 -> 2 with two parallel arrows and relation a1 = 2*a2 on compositions:
    // quiver 1 ->a 2 ->b 3 ->? use b*a - 2*c with c: 1 -> 3 direct
    Quiver q;
    q.n_vertices = 3;
    q.arrows.push_back(Arrow{0, 0, 1, "a"});
    q.arrows.push_back(Arrow{1, 1, 2, "b"});
    q.arrows.push_back(Arrow{2, 0, 2, "c"});
    Field f = Field::rational();
    Relation r;
    r.terms.emplace_back(Scalar::one(f), Path{0, 2, {0, 1}});
    r.terms.emplace_back(Scalar(f, -2), Path{0, 2, {2}});
    CHECK_THROWS_AS(r.validate(q), std::exception); // length-one term is not admissible

    // replace the arrow by a path through an extra vertex to keep it admissible
    Quiver q2;
    q2.n_vertices = 4;
    q2.arrows.push_back(Arrow{0, 0, 1, "a"});
    q2.arrows.push_back(Arrow{1, 1, 3, "b"});
    q2.arrows.push_back(Arrow{2, 0, 2, "c"});
    q2.arrows.push_back(Arrow{3, 2, 3, "d"});
    Relation r2;
    r2.terms.emplace_back(Scalar::one(f), Path{0, 3, {0, 1}});
    r2.terms.emplace_back(Scalar(f, -2), Path{0, 3, {2, 3}});
    auto alg = build_algebra_ptr(q2, {r2}, f);
    // both length-two paths survive but span a single residue class
    CHECK(alg->basis_paths(0, 3).size() == 1);
    auto ba = alg->reduce_path(Path{0, 3, {0, 1}});
    auto dc = alg->reduce_path(Path{0, 3, {2, 3}});
    REQUIRE(ba.size() == 1);
    CHECK(ba[0].value() == dc[0].value() * 2);
}

TEST_CASE("projective modules have the expected dimension vectors") {
    auto alg = fx::aus();
    Representation p1 = projective_module(alg, 0);
    Representation p2 = projective_module(alg, 1);
    Representation p3 = projective_module(alg, 2);
    CHECK(p1.dims() == std::vector<std::size_t>{1, 1, 0});
    CHECK(p2.dims() == std::vector<std::size_t>{0, 1, 1});
    CHECK(p3.dims() == std::vector<std::size_t>{0, 0, 1});
    p1.validate();
    p2.validate();
    p3.validate();
}

TEST_CASE("injective modules have the expected dimension vectors") {
    auto alg = fx::aus();
    Representation i1 = injective_module(alg, 0);
    Representation i2 = injective_module(alg, 1);
    Representation i3 = injective_module(alg, 2);
    CHECK(i1.dims() == std::vector<std::size_t>{1, 0, 0});
    CHECK(i2.dims() == std::vector<std::size_t>{1, 1, 0});
    CHECK(i3.dims() == std::vector<std::size_t>{0, 1, 1});
    i1.validate();
    i2.validate();
    i3.validate();
}

TEST_CASE("hereditary case: injectives of the two-vertex quiver") {
    auto alg = fx::a2();
    CHECK(injective_module(alg, 0).dims() == std::vector<std::size_t>{1, 0});
    CHECK(injective_module(alg, 1).dims() == std::vector<std::size_t>{1, 1});
}

TEST_CASE("a loop without relations is flagged infinite-dimensional") {
    Quiver q;
    q.n_vertices = 1;
    q.arrows.push_back(Arrow{0, 0, 0, "l"});
    CHECK_THROWS_AS(build_algebra(q, {}, Field::rational()), InfiniteDimensional);
}

TEST_CASE("a nilpotent loop is fine") {
    Quiver q;
    q.n_vertices = 1;
    q.arrows.push_back(Arrow{0, 0, 0, "l"});
    Field f = Field::rational();
    Relation r;
    r.terms.emplace_back(Scalar::one(f), Path{0, 0, {0, 0}}); // l*l = 0
    auto alg = build_algebra_ptr(q, {r}, f);
    CHECK(alg->dimension() == 2);
    Representation p = projective_module(alg, 0);
    CHECK(p.dims() == std::vector<std::size_t>{2});
    p.validate();
}

TEST_CASE("prime-field coefficients work end to end") {
    Quiver q;
    q.n_vertices = 3;
    q.arrows.push_back(Arrow{0, 0, 1, "a"});
    q.arrows.push_back(Arrow{1, 1, 2, "b"});
    Field f = Field::prime(5);
    Relation r;
    r.terms.emplace_back(Scalar::one(f), Path{0, 2, {0, 1}});
    auto alg = build_algebra_ptr(q, {r}, f);
    CHECK(alg->dimension() == 5);
    CHECK(projective_module(alg, 0).dims() == std::vector<std::size_t>{1, 1, 0});
}
