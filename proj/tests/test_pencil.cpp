#include "pencilgit/parse.hpp"
#include "pencilgit/pencil.hpp"
#include "pencilgit/rng.hpp"

#include <doctest.h>

using namespace pencilgit;

namespace {
const FieldPtr Q = Field::rationals();
const FieldPtr F13 = Field::parse("fp:13");

BinaryForm bf(const FieldPtr& k, std::vector<std::int64_t> c) { return BinaryForm::from_ints(k, c); }
} // namespace

TEST_CASE("pencil construction and equality") {
    BinaryForm f = bf(Q, {1, 0, 2, 0}), g = bf(Q, {0, 2, 0, 1});
    CHECK_THROWS_WITH_AS(Pencil(f, f), doctest::Contains("LinearlyDependent"), MathError);
    CHECK_THROWS_WITH_AS(Pencil(f, f.scaled(Q->from_int(-3))),
                         doctest::Contains("LinearlyDependent"), MathError);
    CHECK(Pencil(f, g) == Pencil(g, f));
    CHECK(Pencil(f, g) == Pencil(f, f + g));
}

TEST_CASE("Pluecker coordinates") {
    // <t0^3, t1^3> -> (0,0,1,0,0,0)
    Pencil p(bf(Q, {1, 0, 0, 0}), bf(Q, {0, 0, 0, 1}));
    std::array<std::int64_t, 6> expect = {0, 0, 1, 0, 0, 0};
    for (int i = 0; i < 6; ++i) CHECK(p.plucker()[i] == Q->from_int(expect[i]));
    // p_2: minors of ((1,0,2,0),(0,2,0,1)) -> (2,0,1,-4,0,2)
    Pencil p2(bf(Q, {1, 0, 2, 0}), bf(Q, {0, 2, 0, 1}));
    std::array<std::int64_t, 6> e2 = {2, 0, 1, -4, 0, 2};
    for (int i = 0; i < 6; ++i) CHECK(p2.plucker()[i] == Q->from_int(e2[i]));

    Rng rng(3);
    for (const FieldPtr& k : {Q, F13})
        for (int t = 0; t < 50; ++t)
            CHECK(plucker_quadric(k, rng.pencil(k).plucker()).is_zero());
}

TEST_CASE("Wronskian point") {
    // p_rho -> (rho : 0 : 3 - rho^2 : 0 : rho)
    for (std::int64_t r : {2, 5, -7}) {
        Pencil p(bf(Q, {1, 0, r, 0}), bf(Q, {0, r, 0, 1}));
        ProjPoint expect(Q, {Q->from_int(r), Q->zero(), Q->from_int(3 - r * r), Q->zero(),
                             Q->from_int(r)});
        CHECK(p.wronskian_point() == expect);
    }
    // <t0^3, t0^2 t1> -> (1:0:0:0:0)
    Pencil z1(bf(Q, {1, 0, 0, 0}), bf(Q, {0, 1, 0, 0}));
    CHECK(z1.wronskian_point() ==
          ProjPoint(Q, {Q->one(), Q->zero(), Q->zero(), Q->zero(), Q->zero()}));
    // <t0^3, t1^3> -> (0:0:1:0:0)
    Pencil z22(bf(Q, {1, 0, 0, 0}), bf(Q, {0, 0, 0, 1}));
    CHECK(z22.wronskian_point() ==
          ProjPoint(Q, {Q->zero(), Q->zero(), Q->one(), Q->zero(), Q->zero()}));
}

TEST_CASE("wronskian point equals the jacobian projectively") {
    Rng rng(9);
    for (const FieldPtr& k : {Q, F13}) {
        for (int t = 0; t < 60; ++t) {
            Pencil p = rng.pencil(k);
            BinaryForm j = jacobian(p.gen0(), p.gen1());
            CHECK(ProjPoint(k, j.coeffs()) == p.wronskian_point());
        }
    }
    // independent of the chosen generator pair
    BinaryForm f = bf(Q, {1, 2, 0, 1}), g = bf(Q, {0, 1, 1, 3});
    ProjPoint w = Pencil(f, g).wronskian_point();
    CHECK(Pencil(g, f).wronskian_point() == w);
    CHECK(Pencil(f, f + g).wronskian_point() == w);
    CHECK(ProjPoint(Q, jacobian(f, f + g).coeffs()) == w);
}

TEST_CASE("pencil from a Pluecker tuple") {
    auto tup = [&](std::vector<std::int64_t> v) {
        std::array<Fel, 6> out;
        for (int i = 0; i < 6; ++i) out[i] = Q->from_int(v[static_cast<std::size_t>(i)]);
        return out;
    };
    // reconstruct p_2 from its tuple
    Pencil p2(bf(Q, {1, 0, 2, 0}), bf(Q, {0, 2, 0, 1}));
    Pencil r = pencil_from_plucker(Q, tup({2, 0, 1, -4, 0, 2}));
    CHECK(r == p2);
    CHECK_THROWS_WITH_AS(pencil_from_plucker(Q, tup({1, 0, 0, 0, 0, 1})),
                         doctest::Contains("NotOnPluckerQuadric"), MathError);
    // round-trip on random pencils: same pencil back
    Rng rng(21);
    for (int t = 0; t < 25; ++t) {
        Pencil p = rng.pencil(F13);
        CHECK(pencil_from_plucker(F13, p.plucker()) == p);
    }
}

TEST_CASE("cube members") {
    // <t0^3, t1^3>: exactly (1:0) and (0:1)
    CubeMembers cm = cube_members(Pencil(bf(Q, {1, 0, 0, 0}), bf(Q, {0, 0, 0, 1})), false);
    CHECK(cm.count == 2);
    REQUIRE(cm.members.size() == 2);
    // <t0^3, t0 t1^2 + t1^3>: only (1:0)
    CubeMembers cm1 = cube_members(Pencil(bf(Q, {1, 0, 0, 0}), bf(Q, {0, 0, 1, 1})), false);
    CHECK(cm1.count == 1);
    CHECK(cm1.members[0] == ProjPoint(Q, {Q->one(), Q->zero()}));
    // <t0^2 t1, t0 t1^2>: none
    CHECK(cube_members(Pencil(bf(Q, {0, 1, 0, 0}), bf(Q, {0, 0, 1, 0})), true).count == 0);

    // members really are cubes
    for (auto& m : cm.members) {
        Pencil p(bf(Q, {1, 0, 0, 0}), bf(Q, {0, 0, 0, 1}));
        CHECK(is_perfect_cube(p.member(m[0], m[1])));
    }

    // the count over the quadratic extension is a PGL2-invariant of the pencil
    Rng rng(31);
    Pencil z22 = Pencil(bf(F13, {1, 0, 0, 0}), bf(F13, {0, 0, 0, 1}));
    for (int t = 0; t < 50; ++t) {
        ProjMat A = rng.pgl2(F13);
        CHECK(cube_members(act(A, z22), true).count == 2);
    }
    // a case that needs the extension: conjugate cube points over F13
    // (found by translating inside the geometric orbit over F169 is out of
    // scope; instead check a stable pencil has no cube members at all)
    Pencil p2(bf(F13, {1, 0, 2, 0}), bf(F13, {0, 2, 0, 1}));
    CHECK(cube_members(p2, true).count == 0);
}

TEST_CASE("pencil equality matches projective equality of Pluecker tuples") {
    Rng rng(57);
    for (int t = 0; t < 30; ++t) {
        Pencil p = rng.pencil(F13), q = rng.pencil(F13);
        auto cp = ProjPoint(F13, {p.plucker().begin(), p.plucker().end()});
        auto cq = ProjPoint(F13, {q.plucker().begin(), q.plucker().end()});
        CHECK((p == q) == (cp == cq));
    }
}

TEST_CASE("pencil text syntax") {
    Pencil p2(bf(Q, {1, 0, 2, 0}), bf(Q, {0, 2, 0, 1}));
    CHECK(parse_pencil(Q, "f=[1,0,2,0];g=[0,2,0,1]") == p2);
    CHECK(parse_pencil(Q, "wall:2") == p2);
    CHECK(parse_pencil(Q, "plucker=[2,0,1,-4,0,2]") == p2);
    CHECK(parse_pencil(F13, "rep:Z2_2") == Pencil(bf(F13, {1, 0, 0, 0}), bf(F13, {0, 0, 0, 1})));
    CHECK_THROWS_WITH_AS(parse_pencil(Q, "plucker=[1,0,0,0,0,1]"),
                         doctest::Contains("NotOnPluckerQuadric"), MathError);
    CHECK_THROWS_WITH_AS(parse_pencil(Q, "nonsense"), doctest::Contains("BadPencilSyntax"),
                         MathError);
    CHECK(parse_pencil(Q, "wall:inf") ==
          Pencil(bf(Q, {0, 0, 1, 0}), bf(Q, {0, 1, 0, 0})));
}
