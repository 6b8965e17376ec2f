#include "dgcalc/triangular.hpp"

namespace dgc {

const Complex& UpperTriangularData::x_at(int ai, int ci) const
{
    static const Complex empty_q{Field{0}};
    auto it = x.find({ai, ci});
    if (it != x.end())
        return it->second;
    return empty_q;
}

UpperTriangularData identity_bimodule(CatPtr b)
{
    UpperTriangularData t;
    t.a = b;
    t.c = b;
    int n = b->num_objects();
    for (int ai = 0; ai < n; ++ai)
        for (int ci = 0; ci < n; ++ci)
            if (!b->hom(ai, ci).is_empty())
                t.x[{ai, ci}] = b->hom(ai, ci);
    for (int a1 = 0; a1 < n; ++a1)
        for (int c1 = 0; c1 < n; ++c1) {
            for (int c2 = 0; c2 < n; ++c2) {
                const Complex& hg = b->hom(c1, c2);
                const Complex& hf = b->hom(a1, c1);
                for (const auto& [pg, dg] : hg.dims())
                    for (const auto& [pf, df] : hf.dims()) {
                        Mat m = b->comp_table(a1, c1, c2, pg, pf);
                        if (!m.is_zero())
                            t.lact[{a1, c1, c2, pg, pf}] = m;
                    }
            }
            for (int a2 = 0; a2 < n; ++a2) {
                const Complex& hg = b->hom(a2, c1);
                const Complex& hf = b->hom(a1, a2);
                for (const auto& [pg, dg] : hg.dims())
                    for (const auto& [pf, df] : hf.dims()) {
                        Mat m = b->comp_table(a1, a2, c1, pg, pf);
                        if (!m.is_zero())
                            t.ract[{a1, a2, c1, pg, pf}] = m;
                    }
            }
        }
    return t;
}

UpperTriangularData zero_bimodule(CatPtr a, CatPtr c)
{
    UpperTriangularData t;
    t.a = std::move(a);
    t.c = std::move(c);
    return t;
}

int find_zero_object(const DgCategory& c)
{
    for (int z = 0; z < c.num_objects(); ++z) {
        bool zero = true;
        for (int x = 0; x < c.num_objects() && zero; ++x)
            if (!c.hom(z, x).is_empty() || !c.hom(x, z).is_empty())
                zero = false;
        if (zero)
            return z;
    }
    return -1;
}

Totalization totalize(const UpperTriangularData& t)
{
    const DgCategory& A = *t.a;
    const DgCategory& C = *t.c;
    if (A.field() != C.field())
        throw FieldMismatch();
    Field k = A.field();
    int na = A.num_objects(), nc = C.num_objects();

    DgCategory b(k);
    for (int i = 0; i < na; ++i)
        b.add_object("a:" + A.label(i));
    for (int i = 0; i < nc; ++i)
        b.add_object("c:" + C.label(i));
    auto ai = [&](int i) { return i; };
    auto ci = [&](int i) { return na + i; };

    for (int x = 0; x < na; ++x)
        for (int y = 0; y < na; ++y)
            b.set_hom(ai(x), ai(y), A.hom(x, y));
    for (int x = 0; x < nc; ++x)
        for (int y = 0; y < nc; ++y)
            b.set_hom(ci(x), ci(y), C.hom(x, y));
    for (int x = 0; x < na; ++x)
        for (int y = 0; y < nc; ++y)
            b.set_hom(ai(x), ci(y), t.x_at(x, y));
    for (int x = 0; x < na; ++x)
        b.set_unit(ai(x), A.unit(x));
    for (int x = 0; x < nc; ++x)
        b.set_unit(ci(x), C.unit(x));

    // compositions: A-block, C-block, and the two actions
    for (int x = 0; x < na; ++x)
        for (int y = 0; y < na; ++y)
            for (int z = 0; z < na; ++z) {
                const Complex& hg = A.hom(y, z);
                const Complex& hf = A.hom(x, y);
                for (const auto& [pg, dg] : hg.dims())
                    for (const auto& [pf, df] : hf.dims()) {
                        Mat m = A.comp_table(x, y, z, pg, pf);
                        if (!m.is_zero())
                            b.set_comp_table(ai(x), ai(y), ai(z), pg, pf, m);
                    }
            }
    for (int x = 0; x < nc; ++x)
        for (int y = 0; y < nc; ++y)
            for (int z = 0; z < nc; ++z) {
                const Complex& hg = C.hom(y, z);
                const Complex& hf = C.hom(x, y);
                for (const auto& [pg, dg] : hg.dims())
                    for (const auto& [pf, df] : hf.dims()) {
                        Mat m = C.comp_table(x, y, z, pg, pf);
                        if (!m.is_zero())
                            b.set_comp_table(ci(x), ci(y), ci(z), pg, pf, m);
                    }
            }
    for (const auto& [key, m] : t.lact) {
        auto [a1, c1, c2, pg, pf] = key;
        b.set_comp_table(ai(a1), ci(c1), ci(c2), pg, pf, m);
    }
    for (const auto& [key, m] : t.ract) {
        auto [a1, a2, c1, pg, pf] = key;
        b.set_comp_table(ai(a1), ai(a2), ci(c1), pg, pf, m);
    }

    CatPtr total = freeze(std::move(b));

    // A and C with a strict zero object to project onto
    int za = find_zero_object(A);
    int zc = find_zero_object(C);
    CatPtr a0 = za >= 0 ? t.a : freeze(with_zero_object(A, "zero"));
    CatPtr c0 = zc >= 0 ? t.c : freeze(with_zero_object(C, "zero"));
    if (za < 0)
        za = a0->num_objects() - 1;
    if (zc < 0)
        zc = c0->num_objects() - 1;

    DgFunctor ia(t.a, total);
    for (int x = 0; x < na; ++x)
        ia.set_object(x, ai(x));
    for (int x = 0; x < na; ++x)
        for (int y = 0; y < na; ++y)
            for (const auto& [deg, dd] : A.hom(x, y).dims())
                ia.set_component(x, y, deg, Mat::identity(dd, k));
    DgFunctor ic(t.c, total);
    for (int x = 0; x < nc; ++x)
        ic.set_object(x, ci(x));
    for (int x = 0; x < nc; ++x)
        for (int y = 0; y < nc; ++y)
            for (const auto& [deg, dd] : C.hom(x, y).dims())
                ic.set_component(x, y, deg, Mat::identity(dd, k));
    // P: kills A (everything A-related goes to the zero object)
    DgFunctor p(total, c0);
    for (int x = 0; x < na; ++x)
        p.set_object(ai(x), zc);
    for (int x = 0; x < nc; ++x)
        p.set_object(ci(x), x);
    for (int x = 0; x < nc; ++x)
        for (int y = 0; y < nc; ++y)
            for (const auto& [deg, dd] : C.hom(x, y).dims())
                p.set_component(ci(x), ci(y), deg, Mat::identity(dd, k));
    // R: kills C
    DgFunctor r(total, a0);
    for (int x = 0; x < na; ++x)
        r.set_object(ai(x), x);
    for (int x = 0; x < nc; ++x)
        r.set_object(ci(x), za);
    for (int x = 0; x < na; ++x)
        for (int y = 0; y < na; ++y)
            for (const auto& [deg, dd] : A.hom(x, y).dims())
                r.set_component(ai(x), ai(y), deg, Mat::identity(dd, k));

    return Totalization{total, a0, c0, std::move(ia), std::move(ic), std::move(p),
                        std::move(r)};
}

}  // namespace dgc
