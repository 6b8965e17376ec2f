#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dgcalc/linalg.hpp"

using namespace dgc;

static const Field Q{0};
static const Field F5{5};

TEST_CASE("scalar arithmetic over Q") {
    Scalar a = Scalar::rational(1, 3);
    Scalar b = Scalar::rational(2, 5);
    CHECK((a + b).str() == "11/15");
    CHECK((a * b).str() == "2/15");
    CHECK((a - a).is_zero());
    CHECK((a / a).is_one());
    CHECK((-a + a).is_zero());
}

TEST_CASE("scalar arithmetic over F_5") {
    Scalar a = Scalar::from_int(3, F5);
    Scalar b = Scalar::from_int(4, F5);
    CHECK((a + b).str() == "2");
    CHECK((a * b).str() == "2");
    CHECK(a.inverse().str() == "2");  // 3*2 = 6 = 1
    CHECK((a / b) == Scalar::from_int(2, F5));  // 3*4^{-1} = 3*4 = 12 = 2
}

TEST_CASE("field mixing throws") {
    Scalar a = Scalar::rational(1, 2);
    Scalar b = Scalar::from_int(1, F5);
    CHECK_THROWS_AS(a + b, FieldMismatch);
}

TEST_CASE("parse_field") {
    CHECK(parse_field("q").p == 0);
    CHECK(parse_field("fp:7").p == 7);
    CHECK_THROWS_AS(parse_field("fp:6"), Error);
    CHECK_THROWS_AS(parse_field("r"), Error);
}

TEST_CASE("rank and kernel") {
    Mat m(2, 3, Q);
    m.set(0, 0, Scalar::from_int(1, Q));
    m.set(0, 1, Scalar::from_int(2, Q));
    m.set(0, 2, Scalar::from_int(3, Q));
    m.set(1, 0, Scalar::from_int(2, Q));
    m.set(1, 1, Scalar::from_int(4, Q));
    m.set(1, 2, Scalar::from_int(6, Q));
    CHECK(rank(m) == 1);
    Mat k = kernel_basis(m);
    CHECK(k.cols() == 2);
    for (int j = 0; j < k.cols(); ++j)
        CHECK(is_zero_vec(m.apply(k.col(j))));
}

TEST_CASE("solve consistent and inconsistent") {
    Mat m(2, 2, Q);
    m.set(0, 0, Scalar::from_int(1, Q));
    m.set(1, 1, Scalar::from_int(2, Q));
    Vec b = {Scalar::from_int(3, Q), Scalar::from_int(4, Q)};
    auto x = solve(m, b);
    REQUIRE(x.has_value());
    CHECK((*x)[0].str() == "3");
    CHECK((*x)[1].str() == "2");

    Mat s(2, 1, Q);
    s.set(0, 0, Scalar::from_int(1, Q));
    s.set(1, 0, Scalar::from_int(1, Q));
    Vec bad = {Scalar::from_int(1, Q), Scalar::from_int(2, Q)};
    CHECK(!solve(s, bad).has_value());
}

TEST_CASE("solve over F_5") {
    Mat m(2, 2, F5);
    m.set(0, 0, Scalar::from_int(2, F5));
    m.set(0, 1, Scalar::from_int(1, F5));
    m.set(1, 0, Scalar::from_int(1, F5));
    m.set(1, 1, Scalar::from_int(1, F5));
    Vec b = {Scalar::from_int(1, F5), Scalar::from_int(2, F5)};
    auto x = solve(m, b);
    REQUIRE(x.has_value());
    CHECK(m.apply(*x) == b);
}

TEST_CASE("quotient basis") {
    // span(e1,e2,e3) / span(e1+e2)
    Mat space = Mat::identity(3, Q);
    Mat sub(3, 1, Q);
    sub.set(0, 0, Scalar::from_int(1, Q));
    sub.set(1, 0, Scalar::from_int(1, Q));
    QuotientBasis q = quotient_basis(space, sub);
    CHECK(q.dim == 2);
}

TEST_CASE("linear system builder") {
    LinearSystem sys(Q);
    int x = sys.new_var();
    int y = sys.new_var();
    int e0 = sys.new_eq(Scalar::from_int(5, Q));   // x + y = 5
    sys.add_term(e0, x, Scalar::one(Q));
    sys.add_term(e0, y, Scalar::one(Q));
    int e1 = sys.new_eq(Scalar::from_int(1, Q));   // x - y = 1
    sys.add_term(e1, x, Scalar::one(Q));
    sys.add_term(e1, y, -Scalar::one(Q));
    auto sol = sys.solve();
    REQUIRE(sol.has_value());
    CHECK((*sol)[x].str() == "3");
    CHECK((*sol)[y].str() == "2");
}

TEST_CASE("deterministic pivoting gives reproducible rref") {
    Mat m(3, 3, Q);
    int v = 1;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            m.set(i, j, Scalar::from_int((v += 3) % 7 - 3, Q));
    Echelon e1 = echelon(m);
    Echelon e2 = echelon(m);
    CHECK(e1.rref == e2.rref);
    CHECK(e1.pivot_col == e2.pivot_col);
}
