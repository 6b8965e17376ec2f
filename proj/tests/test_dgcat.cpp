#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dgcalc/cells.hpp"
#include "dgcalc/random_gen.hpp"
#include "dgcalc/triangular.hpp"

using namespace dgc;

static const Field Q{0};
static const Field F5{5};

TEST_CASE("point category validates and has End = k") {
    DgCategory a = cells::point(Q);
    CHECK(a.validate().ok());
    auto h = h0(a);
    CHECK(h.cat.dim[{0, 0}] == 1);
    auto z = z0(a);
    CHECK(z.cat.dim[{0, 0}] == 1);
}

TEST_CASE("broken unit axiom is caught") {
    DgCategory a = cells::point(Q);
    // make d(1) nonzero by injecting a bogus differential shape:
    Complex h(Q);
    h.set_dim(0, 1);
    h.set_dim(1, 1);
    Mat d(1, 1, Q);
    d.set(0, 0, Scalar::one(Q));
    h.set_d(0, d);
    a.set_hom(0, 0, h);
    a.set_unit(0, {Scalar::one(Q)});
    Report rep = a.validate();
    CHECK(!rep.ok());
}

TEST_CASE("complexes category is always a valid dg category") {
    Rng rng(7);
    for (int trial = 0; trial < 5; ++trial) {
        DgCategory c = random_complexes_category(rng, Q, 2, -2, 2, 3);
        Report rep = c.validate();
        INFO(rep.str());
        CHECK(rep.ok());
    }
    for (int trial = 0; trial < 3; ++trial) {
        DgCategory c = random_complexes_category(rng, F5, 2, -1, 1, 3);
        CHECK(c.validate().ok());
    }
}

TEST_CASE("opposite is involutive and valid") {
    Rng rng(11);
    DgCategory c = random_complexes_category(rng, Q, 2, -1, 1, 3);
    DgCategory op = opposite(c);
    CHECK(op.validate().ok());
    CHECK(same_category(opposite(op), c));
}

TEST_CASE("opposite of a commutative degree-0 algebra is itself") {
    // k[e]/(e^2=e) is commutative
    DgCategory idem = cells::idempotent_cell(Q);
    CHECK(same_category(opposite(idem), idem));
}

TEST_CASE("h0 of opposite transposes the dimension table") {
    Rng rng(13);
    DgCategory c = random_complexes_category(rng, Q, 2, -1, 1, 3);
    auto h = h0(c);
    auto hop = h0(opposite(c));
    for (int x = 0; x < c.num_objects(); ++x)
        for (int y = 0; y < c.num_objects(); ++y)
            CHECK(h.cat.dim[{x, y}] == hop.cat.dim[{y, x}]);
}

TEST_CASE("tensor with the point is the identity up to labels") {
    DgCategory pt = cells::point(Q);
    DgCategory b = cells::idempotent_cell(Q);
    DgCategory t = tensor(pt, b);
    CHECK(t.validate().ok());
    CHECK(t.num_objects() == 1);
    CHECK(t.hom(0, 0).dim(0) == 2);
    auto h = h0(t);
    auto hb = h0(b);
    CHECK(h.cat.dim[{0, 0}] == hb.cat.dim[{0, 0}]);
}

TEST_CASE("tensor dimension count and validity") {
    Rng rng(17);
    DgCategory a = random_complexes_category(rng, Q, 2, -1, 1, 2);
    DgCategory b = random_complexes_category(rng, Q, 1, -1, 1, 3);
    DgCategory t = tensor(a, b);
    Report rep = t.validate();
    INFO(rep.str());
    CHECK(rep.ok());
    // Kunneth count at degree 0 (and all degrees)
    for (int xa = 0; xa < 2; ++xa)
        for (int ya = 0; ya < 2; ++ya) {
            int x = tensor_object(a, b, xa, 0), y = tensor_object(a, b, ya, 0);
            for (int n = -4; n <= 4; ++n) {
                int expect = 0;
                for (const auto& [p, dp] : a.hom(xa, ya).dims())
                    expect += dp * b.hom(0, 0).dim(n - p);
                CHECK(t.hom(x, y).dim(n) == expect);
            }
        }
    // symmetry of dimension tables
    DgCategory t2 = tensor(b, a);
    for (int xa = 0; xa < 2; ++xa)
        for (int ya = 0; ya < 2; ++ya)
            for (int n = -4; n <= 4; ++n)
                CHECK(t.hom(tensor_object(a, b, xa, 0), tensor_object(a, b, ya, 0)).dim(n) ==
                      t2.hom(tensor_object(b, a, 0, xa), tensor_object(b, a, 0, ya)).dim(n));
}

TEST_CASE("disjoint union validates with zero cross homs") {
    DgCategory u = disjoint_union(cells::point(Q), cells::idempotent_cell(Q));
    CHECK(u.validate().ok());
    CHECK(u.num_objects() == 2);
    CHECK(u.hom(0, 1).is_empty());
    CHECK(u.hom(1, 0).is_empty());
}

TEST_CASE("functor validation and composition") {
    CatPtr pt = freeze(cells::point(Q));
    CatPtr idem = freeze(cells::idempotent_cell(Q));
    DgFunctor f(pt, idem);
    f.set_object(0, 0);
    Mat m(2, 1, Q);
    m.set_col(0, idem->unit(0));
    f.set_component(0, 0, 0, m);
    CHECK(f.validate().ok());
    DgFunctor id = DgFunctor::identity(idem);
    CHECK(id.validate().ok());
    DgFunctor g = f.then(id);
    CHECK(g.validate().ok());
}

TEST_CASE("totalize with zero bimodule is the disjoint union") {
    CatPtr a = freeze(cells::point(Q));
    CatPtr c = freeze(cells::idempotent_cell(Q));
    Totalization t = totalize(zero_bimodule(a, c));
    CHECK(t.total->validate().ok());
    CHECK(t.total->hom(0, 1).is_empty());
    CHECK(t.i_a.validate().ok());
    CHECK(t.i_c.validate().ok());
    CHECK(t.p.validate().ok());
    CHECK(t.r.validate().ok());
}

TEST_CASE("totalize identity bimodule of a category") {
    Rng rng(23);
    CatPtr b = freeze(random_complexes_category(rng, Q, 2, -1, 1, 2));
    Totalization t = totalize(identity_bimodule(b));
    Report rep = t.total->validate();
    INFO(rep.str());
    CHECK(rep.ok());
    // mixed homs equal the category's own homs
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            CHECK(t.total->hom(x, 2 + y).dims() == b->hom(x, y).dims());

    // split sequence equations: P∘i_A = const zero, P∘i_C = id, R∘i_A = id
    DgFunctor pia = t.i_a.then(t.p);
    DgFunctor pic = t.i_c.then(t.p);
    DgFunctor ria = t.i_a.then(t.r);
    CHECK(pia.validate().ok());
    CHECK(pic.validate().ok());
    CHECK(ria.validate().ok());
    int zc = find_zero_object(*t.c0);
    for (int x = 0; x < 2; ++x) {
        CHECK(pia.on_object(x) == zc);
        CHECK(pic.on_object(x) == x);
        CHECK(ria.on_object(x) == x);
        for (int y = 0; y < 2; ++y)
            for (const auto& [deg, dd] : b->hom(x, y).dims()) {
                CHECK(pic.component(x, y, deg) == Mat::identity(dd, Q));
                CHECK(ria.component(x, y, deg) == Mat::identity(dd, Q));
            }
    }

    // H0(R)∘H0(i_A) = identity of H0(A)
    auto ha = h0(*b);
    auto htot = h0(*t.total);
    auto ha0 = h0(*t.a0);
    auto fin_ia = t.i_a.induced_h0(ha, htot);
    auto fin_r = t.r.induced_h0(htot, ha0);
    for (int x = 0; x < 2; ++x) {
        CHECK(fin_r.obj[fin_ia.obj[x]] == x);
        for (int y = 0; y < 2; ++y) {
            Mat comp = fin_r.mor[{fin_ia.obj[x], fin_ia.obj[y]}] * fin_ia.mor[{x, y}];
            CHECK(comp == Mat::identity(ha.cat.dim[{x, y}], Q));
        }
    }
}

TEST_CASE("totalize(k, k, X=k) is the arrow category") {
    // one-object categories with End = k joined by a one-dimensional bimodule
    CatPtr a = freeze(cells::point(Q));
    CatPtr c = freeze(cells::point(Q));
    UpperTriangularData t;
    t.a = a;
    t.c = c;
    Complex x(Q);
    x.set_dim(0, 1);
    t.x[{0, 0}] = x;
    Mat act(1, 1, Q);
    act.set(0, 0, Scalar::one(Q));
    t.lact[{0, 0, 0, 0, 0}] = act;
    t.ract[{0, 0, 0, 0, 0}] = act;
    Totalization tot = totalize(t);
    CHECK(tot.total->validate().ok());

    DgCategory arrow = cells::arrow_category(Q).cat;
    CHECK(arrow.validate().ok());
    // same dimension tables: hom(1,2) = k, End = k each, hom(2,1) = 0
    CHECK(tot.total->hom(0, 1).dim(0) == arrow.hom(0, 1).dim(0));
    CHECK(tot.total->hom(1, 0).is_empty());
    CHECK(arrow.hom(1, 0).is_empty());
}
