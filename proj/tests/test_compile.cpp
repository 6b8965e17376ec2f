#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dgcalc/cells.hpp"

#include <algorithm>

using namespace dgc;

static const Field Q{0};

TEST_CASE("arrow category: acyclic quiver compiles complete and exact") {
    CompiledCategory a = cells::arrow_category(Q);
    CHECK(a.cat.info.complete);
    CHECK(!a.cat.info.cap_truncated);
    CHECK(a.cat.validate().ok());
    // pattern (k, k, k, 0)
    CHECK(a.cat.hom(0, 0).dim(0) == 1);
    CHECK(a.cat.hom(1, 1).dim(0) == 1);
    CHECK(a.cat.hom(0, 1).dim(0) == 1);
    CHECK(a.cat.hom(1, 0).is_empty());
}

TEST_CASE("contraction cell: complete tabulation, h powers, dh = 1") {
    CompiledCategory b = cells::contraction_cell(Q, Window{-4, 0});
    CHECK(b.cat.info.complete);
    Report rep = b.cat.validate();
    INFO(rep.str());
    CHECK(rep.ok());
    // one basis word per degree above the floor; the floor class is
    // collapsed by the cut ideal
    for (int n = -3; n <= 0; ++n)
        CHECK(b.cat.hom(0, 0).dim(n) == 1);
    CHECK(b.cat.hom(0, 0).dim(-4) == 0);
    CHECK(b.cat.hom(0, 0).is_acyclic());
    // d(h) = 1
    Vec h = unit_vec(1, 0, Q);
    Vec dh = b.cat.d_of(0, 0, -1, h);
    CHECK(dh == b.cat.unit(0));
    // H^0(End) = 0: the identity is a boundary
    auto hh = h0(b.cat);
    CHECK(hh.cat.dim[{0, 0}] == 0);
}

TEST_CASE("ideal-cut K table validates exactly") {
    CompiledCategory kk = cells::he_cell(Q, Window{-2, 1}, 6, CutStyle::ideal);
    CHECK(kk.cat.info.cap_truncated);  // degree-0 words (gf)^m are unbounded
    Report rep = kk.cat.validate();
    INFO(rep.str());
    CHECK(rep.ok());
    // generators live where they should
    int o1 = kk.cat.object_index("1"), o2 = kk.cat.object_index("2");
    CHECK(kk.cat.hom(o1, o2).dim(0) >= 1);   // f and friends
    CHECK(kk.cat.hom(o1, o1).dim(-1) >= 1);  // r1
    // d(r1) = g∘f - 1
    int r1 = 2;  // arrows: f g r1 r2 r12
    REQUIRE(kk.gen[r1].deg == -1);
    Vec dr1 = kk.cat.d_of(o1, o1, -1, kk.gen[r1].coords);
    Vec gf = kk.cat.compose(o1, o2, o1, 0, kk.gen[1].coords, 0, kk.gen[0].coords);
    Vec expect = sub(gf, kk.cat.unit(o1));
    CHECK(dr1 == expect);
}

TEST_CASE("plain K word table lists the expected words") {
    CompiledCategory kk = cells::he_cell(Q, Window{-3, 1}, 8);
    CHECK(kk.cat.info.cap_truncated);
    int o1 = kk.cat.object_index("1"), o2 = kk.cat.object_index("2");
    // degree-0 words 1 -> 2: f, fgf, fgfgf, ... up to the cap
    auto& w0 = kk.words[{o1, o2, 0}];
    CHECK(w0.size() == 4);
    CHECK(w0[0] == std::vector<int>{0});
    // degree -1 words 1 -> 2 include f∘r1 and r2∘f
    auto& w1 = kk.words[{o1, o2, -1}];
    CHECK(std::find(w1.begin(), w1.end(), std::vector<int>{2, 0}) != w1.end());
    CHECK(std::find(w1.begin(), w1.end(), std::vector<int>{0, 3}) != w1.end());
    // degree -2 words 1 -> 2 include the generator r12
    auto& w2 = kk.words[{o1, o2, -2}];
    CHECK(std::find(w2.begin(), w2.end(), std::vector<int>{4}) != w2.end());
}

TEST_CASE("strict K(n) models validate with the right homotopy type") {
    for (int n = -2; n <= 2; ++n) {
        DgCategory m = cells::he_model(Q, n);
        Report rep = m.validate();
        INFO(rep.str());
        CHECK(rep.ok());
        // Hom(1,2) = k in degree n, Hom(2,1) = k in degree -n
        CHECK(m.hom(0, 1).dim(n) == 1);
        CHECK(m.hom(1, 0).dim(-n) == 1);
        auto h = h0(m);
        CHECK(h.cat.dim[{0, 0}] == 1);
        CHECK(h.cat.dim[{0, 1}] == (n == 0 ? 1 : 0));
    }
}

TEST_CASE("strict K model has Hom cohomology k in degree 0") {
    DgCategory m = cells::he_model(Q, 0);
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y) {
            const Complex& h = m.hom(x, y);
            for (int n = -3; n <= 3; ++n)
                CHECK(h.cohomology(n).dim == (n == 0 ? 1 : 0));
        }
}

TEST_CASE("ideal-cut K(n) validates when the window covers all degrees") {
    // with mixed-sign generators the cut ideal is exact for length-only cuts
    for (int n : {-1, 1}) {
        CompiledCategory kk =
            cells::he_cell(Q, n, Window{-5 * std::abs(n) - 5, 5 * std::abs(n) + 5}, 4,
                           CutStyle::ideal);
        Report rep = kk.cat.validate();
        INFO("n=", n, ": ", rep.str());
        CHECK(rep.ok());
    }
}

TEST_CASE("twist cell satisfies the Maurer-Cartan relation and validates") {
    CompiledCategory m2 = cells::twist_cell(Q, {0, 0, 0});
    CHECK(m2.cat.info.complete);
    Report rep = m2.cat.validate();
    INFO(rep.str());
    CHECK(rep.ok());
    // d(q_20) = -q_21∘q_10 for even shifts
    int q10 = 0, q20 = 1, q21 = 2;
    CHECK(m2.gen[q20].deg == 1);
    Vec dq = m2.cat.d_of(0, 2, 1, m2.gen[q20].coords);
    Vec qq = m2.cat.compose(0, 1, 2, 1, m2.gen[q21].coords, 1, m2.gen[q10].coords);
    CHECK(dq == neg(qq));

    // odd shifts still give a valid dg category
    CompiledCategory modd = cells::twist_cell(Q, {0, 1, -1});
    Report rep2 = modd.cat.validate();
    INFO(rep2.str());
    CHECK(rep2.ok());
    CompiledCategory m3 = cells::twist_cell(Q, {1, 0, 2, -1});
    Report rep3 = m3.cat.validate();
    INFO(rep3.str());
    CHECK(rep3.ok());
}

TEST_CASE("sphere and disk pair categories validate; Hom(6,7) = disk") {
    for (int n : {-1, 0, 1, 2}) {
        DgCategory pn = cells::disk_pair(Q, n);
        CHECK(pn.validate().ok());
        int o6 = pn.object_index("6"), o7 = pn.object_index("7");
        CHECK(pn.hom(o6, o7) == Complex::disk(Q, n));
        DgCategory cn = cells::sphere_pair(Q, n);
        CHECK(cn.validate().ok());
        CHECK(cn.hom(0, 1) == Complex::sphere(Q, n - 1));
    }
}

TEST_CASE("cell functors validate") {
    Field k = Q;
    CatPtr empty = freeze(cells::empty_category(k));
    CatPtr pt = freeze(cells::point(k));
    CatPtr kcell = freeze(cells::he_cell(k, Window{-3, 1}, 6).cat);
    CHECK(cells::empty_to_point(empty, pt).validate().ok());
    CHECK(cells::point_to_he(pt, kcell).validate().ok());
    for (int n : {-1, 0, 1, 2}) {
        CatPtr pair = freeze(cells::discrete_pair(k));
        CatPtr disk = freeze(cells::disk_pair(k, n));
        CatPtr sph = freeze(cells::sphere_pair(k, n));
        CHECK(cells::pair_to_disk(pair, disk).validate().ok());
        CHECK(cells::sphere_to_disk(sph, disk, n).validate().ok());
    }
    CatPtr contr = freeze(cells::contraction_cell(k, Window{-3, 0}).cat);
    CHECK(cells::empty_to_contraction(empty, contr).validate().ok());
}

TEST_CASE("idempotent cell: e^2 = e, d = 0") {
    DgCategory idem = cells::idempotent_cell(Q);
    CHECK(idem.validate().ok());
    Vec e = {Scalar::zero(Q), Scalar::one(Q)};
    Vec ee = idem.compose(0, 0, 0, 0, e, 0, e);
    CHECK(ee == e);
    CHECK(is_zero_vec(idem.d_of(0, 0, 0, e)));
}

TEST_CASE("compile is monotone in window and cap") {
    Presentation p = cells::he_presentation(Q, 0);
    CompiledCategory small = compile(p, Window{-2, 1}, 4);
    CompiledCategory big = compile(p, Window{-3, 1}, 6);
    CHECK(!small.cat.info.complete);
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            for (int n = -2; n <= 1; ++n)
                CHECK(small.cat.hom(x, y).dim(n) <= big.cat.hom(x, y).dim(n));
    // every basis word of the small table appears in the big table
    for (const auto& [key, ws] : small.words) {
        auto it = big.words.find(key);
        REQUIRE(it != big.words.end());
        for (const auto& w : ws)
            CHECK(std::find(it->second.begin(), it->second.end(), w) != it->second.end());
    }
}

TEST_CASE("matrix category is Morita-like: all Homs k") {
    DgCategory m2 = cells::matrix_category(Q, 2);
    CHECK(m2.validate().ok());
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            CHECK(m2.hom(x, y).dim(0) == 1);
}
