#include "pencilgit/binary_form.hpp"
#include "pencilgit/rng.hpp"

#include <doctest.h>

using namespace pencilgit;

namespace {
const FieldPtr Q = Field::rationals();
const FieldPtr F13 = Field::parse("fp:13");

BinaryForm bf(const FieldPtr& k, std::vector<std::int64_t> c) { return BinaryForm::from_ints(k, c); }
} // namespace

TEST_CASE("gcd of binary forms") {
    // t0^3, t0^2 t1 -> t0^2
    CHECK(gcd_forms(bf(Q, {1, 0, 0, 0}), bf(Q, {0, 1, 0, 0})).coeffs() ==
          bf(Q, {1, 0, 0}).coeffs());
    // t0^2 t1, t0 t1^2 -> t0 t1
    CHECK(gcd_forms(bf(Q, {0, 1, 0, 0}), bf(Q, {0, 0, 1, 0})).coeffs() ==
          bf(Q, {0, 1, 0}).coeffs());
    // coprime pair
    CHECK(gcd_forms(bf(Q, {1, 0, 2, 0}), bf(Q, {0, 2, 0, 1})).degree() == 0);
    CHECK_THROWS_WITH_AS(gcd_forms(BinaryForm::zero(Q, 3), BinaryForm::zero(Q, 3)),
                         doctest::Contains("BothZero"), MathError);
}

TEST_CASE("gcd divides and is basis-invariant") {
    Rng rng(11);
    for (const FieldPtr& k : {Q, F13}) {
        for (int t = 0; t < 25; ++t) {
            // build forms with a planted common factor
            BinaryForm lin(k, {rng.nonzero(k), rng.element(k)});
            BinaryForm a(k, {rng.element(k), rng.element(k), rng.element(k)});
            BinaryForm b(k, {rng.element(k), rng.element(k), rng.element(k)});
            if (a.is_zero() || b.is_zero()) continue;
            BinaryForm f = lin.times(a), g = lin.times(b);
            BinaryForm d = gcd_forms(f, g);
            CHECK(divide_exact(f, d).times(d).proportional_to(f));
            CHECK(divide_exact(g, d).times(d).proportional_to(g));
            // gcd only depends on the span: replace (f, g) by (f + g, g)
            BinaryForm d2 = gcd_forms(f + g, g);
            CHECK(d.coeffs() == d2.coeffs());
        }
    }
}

TEST_CASE("jacobian") {
    // (t0^3, t1^3) -> 9 t0^2 t1^2
    CHECK(jacobian(bf(Q, {1, 0, 0, 0}), bf(Q, {0, 0, 0, 1})).coeffs() ==
          bf(Q, {0, 0, 9, 0, 0}).coeffs());
    BinaryForm f = bf(Q, {1, 2, 3, 4});
    CHECK(jacobian(f, f).is_zero());
    CHECK_THROWS_WITH_AS(jacobian(bf(Q, {1, 0, 0, 0}), bf(Q, {1, 0, 0})),
                         doctest::Contains("DegreeMismatch"), MathError);
    // Wronskian of the wall pencil at rho = 2: projectively (2, 0, -1, 0, 2)
    BinaryForm w = jacobian(bf(Q, {1, 0, 2, 0}), bf(Q, {0, 2, 0, 1}));
    CHECK(w.proportional_to(bf(Q, {2, 0, -1, 0, 2})));
}

TEST_CASE("perfect cubes via the Hessian") {
    CHECK(is_perfect_cube(bf(Q, {1, 0, 0, 0})));
    CHECK(!is_perfect_cube(bf(Q, {0, 1, 0, 0})));
    CHECK(is_perfect_cube(bf(Q, {1, 3, 3, 1}))); // (t0 + t1)^3
    CHECK_THROWS_WITH_AS(is_perfect_cube(BinaryForm::zero(Q, 3)), doctest::Contains("ZeroForm"),
                         MathError);
    CHECK_THROWS_WITH_AS(is_perfect_cube(bf(Q, {1, 0, 1})), doctest::Contains("WrongDegree"),
                         MathError);

    Rng rng(5);
    for (const FieldPtr& k : {Q, F13}) {
        int cubes = 0, noncubes = 0;
        while (cubes < 50 || noncubes < 50) {
            if (cubes < 50) {
                Fel u = rng.element(k), v = rng.element(k);
                if (!(u.is_zero() && v.is_zero())) {
                    BinaryForm lin(k, {u, v});
                    CHECK(is_perfect_cube(lin.times(lin).times(lin)));
                    ++cubes;
                }
            }
            if (noncubes < 50) {
                BinaryForm f = rng.cubic(k);
                if (!f.is_zero() && !cubic_discriminant(f).is_zero()) {
                    CHECK(!is_perfect_cube(f));
                    ++noncubes;
                }
            }
        }
    }
}

TEST_CASE("substitution agrees with evaluation") {
    Rng rng(17);
    for (int t = 0; t < 10; ++t) {
        BinaryForm f = rng.cubic(F13);
        Fel a = rng.element(F13), b = rng.element(F13), c = rng.element(F13), d = rng.element(F13);
        Fel x = rng.element(F13), y = rng.element(F13);
        CHECK(f.substitute(a, b, c, d).eval(x, y) == f.eval(a * x + b * y, c * x + d * y));
    }
}
