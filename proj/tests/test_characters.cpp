#include "pencilgit/characters.hpp"

#include <doctest.h>

using namespace pencilgit;

namespace {
const FieldPtr QI = Field::parse("q(sqrt:-1)");
const FieldPtr F13 = Field::parse("fp:13");
} // namespace

TEST_CASE("builtin tables pass orthogonality on construction") {
    for (const char* name : {"S4", "A4", "D8", "D4", "C3"}) {
        GroupData g = GroupData::builtin(name, QI);
        CHECK(g.classes().size() == g.table().size());
        g.check_orthogonality(); // throws on failure
    }
    CHECK_THROWS_WITH_AS(GroupData::builtin("C7", QI), doctest::Contains("UnknownName"), MathError);
}

TEST_CASE("S4 class structure and the two-dimensional character") {
    GroupData s4 = GroupData::builtin("S4", QI);
    REQUIRE(s4.classes().size() == 5);
    CHECK(s4.classes()[0].label == "e");
    CHECK(s4.classes()[1].size == 6); // transpositions
    CHECK(s4.classes()[2].size == 3); // double transpositions
    CHECK(s4.classes()[3].size == 8); // 3-cycles
    CHECK(s4.classes()[4].size == 6); // 4-cycles
    ClassFunction v = v_character(s4);
    const FieldPtr& kt = s4.table_field();
    CHECK(v == ClassFunction{kt->from_int(2), kt->zero(), kt->from_int(2), kt->from_int(-1),
                             kt->zero()});
    // V is irreducible
    auto m = decompose(v, s4);
    CHECK(m[s4.irrep_index("V")] == 1);
    Int total = 0;
    for (const auto& x : m) total += x;
    CHECK(total == 1);
}

TEST_CASE("adjoint character") {
    GroupData d8 = GroupData::builtin("D8", QI);
    ClassFunction sl2 = adjoint_character(d8);
    CHECK(sl2[0] == d8.table_field()->from_int(3)); // identity: dimension 3
    // class of diag(1,-1): trace 0, det -1, so the value is -1
    ProjMat diag = ProjMat::from_ints(QI, 1, 0, 0, -1);
    CHECK(sl2[d8.class_of(diag)] == d8.table_field()->from_int(-1));
    // full decomposition: k_sigma4 + k2
    auto m = decompose(sl2, d8);
    CHECK(m[d8.irrep_index("k_sigma4")] == 1);
    CHECK(m[d8.irrep_index("k2")] == 1);
    CHECK(m[d8.irrep_index("triv")] == 0);
    CHECK(m[d8.irrep_index("k_D4")] == 0);
    CHECK(m[d8.irrep_index("k_other")] == 0);

    // the finite-field realization lifts to the same integers
    GroupData d8f = GroupData::builtin("D8", F13);
    ClassFunction sl2f = adjoint_character(d8f);
    for (std::size_t i = 0; i < sl2.size(); ++i) CHECK(sl2f[i].a() == sl2[i].a());
}

TEST_CASE("V restricted to D8 is triv + k_D4") {
    GroupData d8 = GroupData::builtin("D8", QI);
    ClassFunction v = v_character(d8);
    auto m = decompose(v, d8);
    CHECK(m == std::vector<Int>{1, 0, 1, 0, 0});
    // no two-dimensional constituent: the restricted bundle has c2 = 0
    CHECK(m[d8.irrep_index("k2")] == 0);
}

TEST_CASE("restriction machinery") {
    GroupData s4 = GroupData::builtin("S4", QI);
    GroupData d8 = GroupData::builtin("D8", QI);
    GroupData d4 = GroupData::builtin("D4", QI);
    GroupData c3 = GroupData::builtin("C3", QI);

    // restrict(V, D8) = v_character(D8)
    CHECK(restrict_class_function(s4.table()[s4.irrep_index("V")], s4, d8) == v_character(d8));
    // restrict(triv) = triv
    ClassFunction t = restrict_class_function(s4.table()[0], s4, d8);
    for (const auto& x : t) CHECK(x == d8.table_field()->one());
    // the sign of S4 restricts trivially to the Klein subgroup
    ClassFunction sgn = restrict_class_function(s4.table()[s4.irrep_index("sign")], s4, d4);
    for (const auto& x : sgn) CHECK(x == d4.table_field()->one());
    // V restricted to C3 is the sum of the two nontrivial characters
    ClassFunction vc3 = restrict_class_function(s4.table()[s4.irrep_index("V")], s4, c3);
    auto m = decompose(vc3, c3);
    CHECK(m == std::vector<Int>{0, 1, 1});

    // decompose(restrict(chi)) reassembles the restriction exactly
    for (std::size_t i = 0; i < s4.table().size(); ++i) {
        ClassFunction chi = restrict_class_function(s4.table()[i], s4, d8);
        auto mult = decompose(chi, d8);
        for (std::size_t c = 0; c < chi.size(); ++c) {
            Fel sum = d8.table_field()->zero();
            for (std::size_t j = 0; j < mult.size(); ++j)
                sum += d8.table_field()->element(Rat(mult[j])) * d8.table()[j][c];
            CHECK(sum == chi[c]);
        }
    }

    // D4 is not a subgroup of C3
    CHECK_THROWS_WITH_AS(restrict_class_function(c3.table()[0], c3, d4),
                         doctest::Contains("NotASubgroup"), MathError);
}

TEST_CASE("decompose rejects non-characters") {
    GroupData d4 = GroupData::builtin("D4", QI);
    ClassFunction bad = {d4.table_field()->element(Rat(1, 2)), d4.table_field()->zero(),
                         d4.table_field()->zero(), d4.table_field()->zero()};
    CHECK_THROWS_WITH_AS(decompose(bad, d4), doctest::Contains("NotACharacter"), MathError);
}
