#include "dgcalc/cells.hpp"

#include "dgcalc/random_gen.hpp"

namespace dgc {
namespace cells {

namespace {

/* one-dimensional scalar action tables for categories whose Homs are
 * multiples of a single generator per degree */
void scalar_actions(DgCategory& c)
{
    int n = c.num_objects();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                const Complex& hg = c.hom(y, z);
                const Complex& hf = c.hom(x, y);
                for (const auto& [pg, dg] : hg.dims())
                    for (const auto& [pf, df] : hf.dims()) {
                        if (c.hom(x, z).dim(pg + pf) == 0)
                            continue;
                        // defined only when one side is a unit endomorphism space
                        if (y == z && pg == 0 && c.hom(y, z).dim(0) == 1) {
                            for (int i = 0; i < df; ++i)
                                c.set_comp_entry(x, y, z, pg, pf, i, 0, i, Scalar::one(c.field()));
                        } else if (x == y && pf == 0 && c.hom(x, y).dim(0) == 1) {
                            for (int i = 0; i < dg; ++i)
                                c.set_comp_entry(x, y, z, pg, pf, i, i, 0, Scalar::one(c.field()));
                        }
                    }
            }
}

}  // namespace

DgCategory empty_category(Field k)
{
    return DgCategory(k);
}

DgCategory point(Field k)
{
    DgCategory c(k);
    int x = c.add_object("3");
    c.set_hom(x, x, Complex::sphere(k, 0));
    c.set_comp_entry(x, x, x, 0, 0, 0, 0, 0, Scalar::one(k));
    c.set_unit(x, {Scalar::one(k)});
    return c;
}

DgCategory discrete_pair(Field k)
{
    DgCategory c(k);
    int a = c.add_object("4");
    int b = c.add_object("5");
    c.set_hom(a, a, Complex::sphere(k, 0));
    c.set_hom(b, b, Complex::sphere(k, 0));
    c.set_comp_entry(a, a, a, 0, 0, 0, 0, 0, Scalar::one(k));
    c.set_comp_entry(b, b, b, 0, 0, 0, 0, 0, Scalar::one(k));
    c.set_unit(a, {Scalar::one(k)});
    c.set_unit(b, {Scalar::one(k)});
    return c;
}

DgCategory sphere_pair(Field k, int n)
{
    DgCategory c(k);
    int a = c.add_object("8");
    int b = c.add_object("9");
    c.set_hom(a, a, Complex::sphere(k, 0));
    c.set_hom(b, b, Complex::sphere(k, 0));
    c.set_hom(a, b, Complex::sphere(k, n - 1));
    c.set_unit(a, {Scalar::one(k)});
    c.set_unit(b, {Scalar::one(k)});
    scalar_actions(c);
    return c;
}

DgCategory disk_pair(Field k, int n)
{
    DgCategory c(k);
    int a = c.add_object("6");
    int b = c.add_object("7");
    c.set_hom(a, a, Complex::sphere(k, 0));
    c.set_hom(b, b, Complex::sphere(k, 0));
    c.set_hom(a, b, Complex::disk(k, n));
    c.set_unit(a, {Scalar::one(k)});
    c.set_unit(b, {Scalar::one(k)});
    scalar_actions(c);
    return c;
}

DgCategory idempotent_cell(Field k)
{
    DgCategory c(k);
    int x = c.add_object("0");
    Complex e(k);
    e.set_dim(0, 2);  // basis {1, e}
    c.set_hom(x, x, e);
    Scalar one = Scalar::one(k);
    c.set_comp_entry(x, x, x, 0, 0, 0, 0, 0, one);  // 1·1 = 1
    c.set_comp_entry(x, x, x, 0, 0, 1, 0, 1, one);  // 1·e = e
    c.set_comp_entry(x, x, x, 0, 0, 1, 1, 0, one);  // e·1 = e
    c.set_comp_entry(x, x, x, 0, 0, 1, 1, 1, one);  // e·e = e
    c.set_unit(x, {one, Scalar::zero(k)});
    return c;
}

DgCategory matrix_category(Field k, int n)
{
    DgCategory c(k);
    for (int i = 0; i < n; ++i)
        c.add_object("m" + std::to_string(i));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            c.set_hom(x, y, Complex::sphere(k, 0));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                c.set_comp_entry(x, y, z, 0, 0, 0, 0, 0, Scalar::one(k));
    for (int x = 0; x < n; ++x)
        c.set_unit(x, {Scalar::one(k)});
    return c;
}

Presentation he_presentation(Field k, int n)
{
    Presentation p;
    p.field = k;
    p.add_object("1");
    p.add_object("2");
    int f = p.add_arrow("f", "1", "2", n);
    int g = p.add_arrow("g", "2", "1", -n);
    int r1 = p.add_arrow("r1", "1", "1", -1);
    int r2 = p.add_arrow("r2", "2", "2", -1);
    int r12 = p.add_arrow("r12", "1", "2", n - 2);
    Scalar one = Scalar::one(k);
    // d r1 = g∘f - 1_1 ; d r2 = f∘g - 1_2 ; d r12 = f∘r1 - (-1)^n r2∘f
    // (the sign on the last term is forced by d∘d = 0 when n is odd)
    p.diff[r1] = {{one, {f, g}, -1}, {-one, {}, 0}};
    p.diff[r2] = {{one, {g, f}, -1}, {-one, {}, 1}};
    Scalar beta = (n % 2 == 0) ? -one : one;
    p.diff[r12] = {{one, {r1, f}, -1}, {beta, {f, r2}, -1}};
    return p;
}

CompiledCategory he_cell(Field k, int n, Window w, int cap, CutStyle style)
{
    return compile(he_presentation(k, n), w, cap, style);
}

DgCategory he_model(Field k, int n)
{
    DgCategory m = complexes_category(k, {Complex::sphere(k, 0), Complex::sphere(k, n)},
                                      {"1", "2"});
    return m;
}

Presentation contraction_presentation(Field k)
{
    Presentation p;
    p.field = k;
    p.add_object("7");
    int h = p.add_arrow("h", "7", "7", -1);
    p.diff[h] = {{Scalar::one(k), {}, 0}};
    return p;
}

CompiledCategory contraction_cell(Field k, Window w)
{
    return compile(contraction_presentation(k), w, std::max(0, -w.lo));
}

CompiledCategory twist_cell(Field k, const std::vector<int>& shifts)
{
    int n = (int)shifts.size() - 1;
    if (n < 1)
        throw Error("twist cell needs at least two shifts");
    Presentation p;
    p.field = k;
    for (int i = 0; i <= n; ++i)
        p.add_object(std::to_string(i));
    std::map<std::pair<int, int>, int> q;
    for (int i = 1; i <= n; ++i)
        for (int j = 0; j < i; ++j)
            q[{i, j}] = p.add_arrow("q" + std::to_string(i) + "_" + std::to_string(j),
                                    std::to_string(j), std::to_string(i),
                                    shifts[i] - shifts[j] + 1);
    // Maurer-Cartan: (-1)^{k_i} d(q_ij) + (Q²)_ij = 0
    for (int i = 1; i <= n; ++i)
        for (int j = 0; j < i; ++j) {
            Presentation::Combo combo;
            Scalar c = (shifts[i] % 2 == 0) ? -Scalar::one(k) : Scalar::one(k);
            for (int l = j + 1; l < i; ++l)
                combo.push_back({c, {q[{l, j}], q[{i, l}]}, -1});
            if (!combo.empty())
                p.diff[q[{i, j}]] = combo;
        }
    // the quiver is acyclic, so any window covering all word degrees is exact
    int lo = 0, hi = 0;
    for (const auto& a : p.arrows) {
        lo = std::min(lo, a.deg * (n + 1) - 1);
        hi = std::max(hi, a.deg * (n + 1) + 1);
    }
    return compile(p, Window{lo, hi}, n);
}

Presentation arrow_presentation(Field k)
{
    Presentation p;
    p.field = k;
    p.add_object("1");
    p.add_object("2");
    p.add_arrow("a", "1", "2", 0);
    return p;
}

CompiledCategory arrow_category(Field k)
{
    return compile(arrow_presentation(k), Window{-1, 1}, 1);
}

DgFunctor empty_to_point(CatPtr empty, CatPtr pt)
{
    return DgFunctor(std::move(empty), std::move(pt));
}

DgFunctor point_to_he(CatPtr pt, CatPtr he)
{
    DgFunctor f(pt, he);
    int one = he->object_index("1");
    f.set_object(0, one);
    // unit goes to unit
    Mat m(he->hom(one, one).dim(0), 1, pt->field());
    m.set_col(0, he->unit(one));
    f.set_component(0, 0, 0, m);
    return f;
}

DgFunctor pair_to_disk(CatPtr pair, CatPtr disk)
{
    DgFunctor f(pair, disk);
    int a6 = disk->object_index("6"), a7 = disk->object_index("7");
    int b4 = pair->object_index("4"), b5 = pair->object_index("5");
    f.set_object(b4, a6);
    f.set_object(b5, a7);
    f.set_component(b4, b4, 0, Mat::identity(1, pair->field()));
    f.set_component(b5, b5, 0, Mat::identity(1, pair->field()));
    return f;
}

DgFunctor sphere_to_disk(CatPtr sph, CatPtr disk, int n)
{
    DgFunctor f(sph, disk);
    int a6 = disk->object_index("6"), a7 = disk->object_index("7");
    int b8 = sph->object_index("8"), b9 = sph->object_index("9");
    f.set_object(b8, a6);
    f.set_object(b9, a7);
    Field k = sph->field();
    f.set_component(b8, b8, 0, Mat::identity(1, k));
    f.set_component(b9, b9, 0, Mat::identity(1, k));
    // sphere generator -> the degree n-1 cycle of the disk
    Mat m(disk->hom(a6, a7).dim(n - 1), 1, k);
    m.set(0, 0, Scalar::one(k));
    f.set_component(b8, b9, n - 1, m);
    return f;
}

DgFunctor empty_to_contraction(CatPtr empty, CatPtr contr)
{
    return DgFunctor(std::move(empty), std::move(contr));
}

}  // namespace cells
}  // namespace dgc
