#include "dgcalc/random_gen.hpp"

namespace dgc {

int MapBasis::dim(int n) const
{
    int d = 0;
    for (const auto& [p, dp] : u.dims())
        d += dp * v.dim(p + n);
    return d;
}

int MapBasis::index(int n, int p, int r, int c) const
{
    int off = 0;
    for (const auto& [pp, dp] : u.dims()) {
        if (pp >= p)
            break;
        off += dp * v.dim(pp + n);
    }
    return off + r * u.dim(p) + c;
}

std::map<int, Mat> MapBasis::to_blocks(int n, const Vec& coords) const
{
    std::map<int, Mat> blocks;
    for (const auto& [p, dp] : u.dims()) {
        int rows = v.dim(p + n);
        if (rows == 0)
            continue;
        Mat m(rows, dp, u.field());
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < dp; ++c) {
                const Scalar& s = coords[index(n, p, r, c)];
                if (!s.is_zero())
                    m.set(r, c, s);
            }
        blocks[p] = m;
    }
    return blocks;
}

Vec MapBasis::from_blocks(int n, const std::map<int, Mat>& blocks) const
{
    Vec v2 = zero_vec(dim(n), u.field());
    for (const auto& [p, m] : blocks)
        for (const auto& [rc, s] : m.entries())
            v2[index(n, p, rc.first, rc.second)] = s;
    return v2;
}

Complex MapBasis::hom_complex() const
{
    Field k = u.field();
    Complex h(k);
    // support: n with dim > 0
    int ulo = u.is_empty() ? 0 : u.lowest_degree();
    int uhi = u.is_empty() ? -1 : u.highest_degree();
    int vlo = v.is_empty() ? 0 : v.lowest_degree();
    int vhi = v.is_empty() ? -1 : v.highest_degree();
    if (uhi < ulo || vhi < vlo)
        return h;
    for (int n = vlo - uhi; n <= vhi - ulo; ++n) {
        int d = dim(n);
        if (d > 0)
            h.set_dim(n, d);
    }
    for (int n = vlo - uhi; n <= vhi - ulo; ++n) {
        if (h.dim(n) == 0 || h.dim(n + 1) == 0)
            continue;
        Mat dm(h.dim(n + 1), h.dim(n), k);
        for (const auto& [p, dp] : u.dims()) {
            int rows = v.dim(p + n);
            if (rows == 0)
                continue;
            // basis unit E_{r,c} at block p
            for (int r = 0; r < rows; ++r)
                for (int c = 0; c < dp; ++c) {
                    int src = index(n, p, r, c);
                    // d_V ∘ f : block p, rows in V^{p+n+1}
                    Mat dv = v.d(p + n);
                    for (const auto& [ij, s] : dv.entries())
                        if (ij.second == r)
                            dm.add_to(index(n + 1, p, ij.first, c), src, s);
                    // -(-1)^n f ∘ d_U : block p-1
                    Mat du = u.d(p - 1);
                    Scalar sign = (n % 2 == 0) ? -Scalar::one(k) : Scalar::one(k);
                    for (const auto& [ij, s] : du.entries())
                        if (ij.first == c && v.dim(p - 1 + n + 1) > 0)
                            dm.add_to(index(n + 1, p - 1, r, ij.second), src, sign * s);
                }
        }
        if (!dm.is_zero())
            h.set_d(n, dm);
    }
    return h;
}

DgCategory complexes_category(Field f, const std::vector<Complex>& objs,
                              const std::vector<std::string>& labels)
{
    if (objs.size() != labels.size())
        throw Error("labels/objects size mismatch");
    DgCategory cat(f);
    for (const auto& l : labels)
        cat.add_object(l);
    int n = (int)objs.size();
    std::vector<std::vector<MapBasis>> mb(n);
    for (int x = 0; x < n; ++x) {
        mb[x].reserve(n);
        for (int y = 0; y < n; ++y)
            mb[x].push_back(MapBasis{objs[x], objs[y]});
    }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            cat.set_hom(x, y, mb[x][y].hom_complex());
    // units
    for (int x = 0; x < n; ++x) {
        std::map<int, Mat> blocks;
        for (const auto& [p, dp] : objs[x].dims())
            blocks[p] = Mat::identity(dp, f);
        cat.set_unit(x, mb[x][x].from_blocks(0, blocks));
    }
    // composition: blockwise matrix product
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                const Complex& hg = cat.hom(y, z);
                const Complex& hf = cat.hom(x, y);
                for (const auto& [pg, dg] : hg.dims())
                    for (const auto& [pf, df] : hf.dims()) {
                        if (cat.hom(x, z).dim(pg + pf) == 0)
                            continue;
                        for (int gi = 0; gi < dg; ++gi) {
                            auto gb = mb[y][z].to_blocks(pg, unit_vec(dg, gi, f));
                            for (int fj = 0; fj < df; ++fj) {
                                auto fb = mb[x][y].to_blocks(pf, unit_vec(df, fj, f));
                                std::map<int, Mat> ob;
                                for (const auto& [p, fm] : fb) {
                                    auto it = gb.find(p + pf);
                                    if (it == gb.end())
                                        continue;
                                    Mat prod = it->second * fm;
                                    if (!prod.is_zero())
                                        ob[p] = prod;
                                }
                                if (ob.empty())
                                    continue;
                                Vec out = mb[x][z].from_blocks(pg + pf, ob);
                                for (size_t o = 0; o < out.size(); ++o)
                                    if (!out[o].is_zero())
                                        cat.set_comp_entry(x, y, z, pg, pf, (int)o, gi, fj,
                                                           out[o]);
                            }
                        }
                    }
            }
    return cat;
}

Complex random_complex(Rng& rng, Field f, int lo_deg, int hi_deg, int max_total_dim)
{
    Complex c(f);
    int budget = rng.uniform(1, max_total_dim);
    while (budget > 0) {
        if (rng.coin() && budget >= 2) {
            c = c.direct_sum(Complex::disk(f, rng.uniform(lo_deg + 2, hi_deg + 1)));
            budget -= 2;
        } else {
            c = c.direct_sum(Complex::sphere(f, rng.uniform(lo_deg, hi_deg)));
            budget -= 1;
        }
    }
    // random unipotent change of basis keeps everything exact
    std::map<int, Mat> p, pinv;
    for (const auto& [n, dn] : c.dims()) {
        Mat m = Mat::identity(dn, f);
        for (int i = 0; i < dn; ++i)
            for (int j = i + 1; j < dn; ++j)
                if (rng.coin())
                    m.set(i, j, rng.scalar(f, 2));
        Mat id = Mat::identity(dn, f);
        Mat inv(dn, dn, f);
        for (int j = 0; j < dn; ++j) {
            auto x = solve(m, id.col(j));
            inv.set_col(j, *x);
        }
        p[n] = m;
        pinv[n] = inv;
    }
    return c.conjugate(p, pinv);
}

DgCategory random_complexes_category(Rng& rng, Field f, int n_objects, int lo_deg, int hi_deg,
                                     int max_total_dim)
{
    std::vector<Complex> objs;
    std::vector<std::string> labels;
    for (int i = 0; i < n_objects; ++i) {
        objs.push_back(random_complex(rng, f, lo_deg, hi_deg, max_total_dim));
        labels.push_back("X" + std::to_string(i));
    }
    return complexes_category(f, objs, labels);
}

DgCategory random_degree0_category(Rng& rng, Field f, int n_objects, int max_dim)
{
    std::vector<Complex> objs;
    std::vector<std::string> labels;
    for (int i = 0; i < n_objects; ++i) {
        Complex c(f);
        c.set_dim(0, rng.uniform(1, max_dim));
        objs.push_back(c);
        labels.push_back("X" + std::to_string(i));
    }
    return complexes_category(f, objs, labels);
}

}  // namespace dgc
