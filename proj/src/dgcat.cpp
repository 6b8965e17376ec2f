#include "dgcalc/dgcat.hpp"

#include <sstream>

namespace dgc {

std::string Report::str() const
{
    std::ostringstream os;
    if (violations.empty()) {
        os << "ok (" << checks << " checks)";
    } else {
        os << violations.size() << " violation(s) in " << checks << " checks:";
        for (const auto& v : violations)
            os << "\n  " << v;
    }
    return os.str();
}

int DgCategory::add_object(const std::string& label)
{
    if (index_.count(label))
        throw Error("duplicate object label: " + label);
    int x = (int)objects_.size();
    objects_.push_back(label);
    index_[label] = x;
    units_.emplace_back();
    return x;
}

int DgCategory::object_index(const std::string& label) const
{
    auto it = index_.find(label);
    return it == index_.end() ? -1 : it->second;
}

const Complex& DgCategory::hom(int x, int y) const
{
    auto it = hom_.find({x, y});
    if (it != hom_.end())
        return it->second;
    if (empty_hom_.field() != field_)
        const_cast<DgCategory*>(this)->empty_hom_ = Complex(field_);
    return empty_hom_;
}

void DgCategory::set_hom(int x, int y, Complex c)
{
    if (c.field() != field_)
        throw FieldMismatch();
    if (c.is_empty())
        hom_.erase({x, y});
    else
        hom_[{x, y}] = std::move(c);
}

Mat DgCategory::comp_table(int x, int y, int z, int pg, int pf) const
{
    auto it = comp_.find({x, y, z, pg, pf});
    if (it != comp_.end())
        return it->second;
    return Mat(hom(x, z).dim(pg + pf), hom(y, z).dim(pg) * hom(x, y).dim(pf), field_);
}

void DgCategory::set_comp_table(int x, int y, int z, int pg, int pf, const Mat& m)
{
    int rows = hom(x, z).dim(pg + pf);
    int cols = hom(y, z).dim(pg) * hom(x, y).dim(pf);
    if (m.rows() != rows || m.cols() != cols)
        throw Error("composition table shape mismatch");
    comp_cols_.erase({x, y, z, pg, pf});
    if (m.is_zero())
        comp_.erase({x, y, z, pg, pf});
    else
        comp_[{x, y, z, pg, pf}] = m;
}

void DgCategory::set_comp_entry(int x, int y, int z, int pg, int pf,
                                int out_idx, int gi, int fj, const Scalar& c)
{
    auto key = std::make_tuple(x, y, z, pg, pf);
    auto it = comp_.find(key);
    if (it == comp_.end()) {
        Mat m(hom(x, z).dim(pg + pf), hom(y, z).dim(pg) * hom(x, y).dim(pf), field_);
        it = comp_.emplace(key, std::move(m)).first;
    }
    int fd = hom(x, y).dim(pf);
    it->second.add_to(out_idx, gi * fd + fj, c);
    comp_cols_.erase(key);
    if (it->second.is_zero())
        comp_.erase(it);
}

void DgCategory::set_unit(int x, Vec u)
{
    if ((int)u.size() != hom(x, x).dim(0))
        throw Error("unit vector size mismatch for " + objects_[x]);
    units_[x] = std::move(u);
}

const DgCategory::ColView* DgCategory::comp_view(int x, int y, int z, int pg, int pf) const
{
    auto key = std::make_tuple(x, y, z, pg, pf);
    auto it = comp_.find(key);
    if (it == comp_.end())
        return nullptr;
    auto ct = comp_cols_.find(key);
    if (ct == comp_cols_.end()) {
        ColView view(it->second.cols());
        for (const auto& [rc, v] : it->second.entries())
            view[rc.second].push_back({rc.first, v});
        ct = comp_cols_.emplace(key, std::move(view)).first;
    }
    return &ct->second;
}

Vec DgCategory::compose(int x, int y, int z, int pg, const Vec& g, int pf, const Vec& f) const
{
    int rows = hom(x, z).dim(pg + pf);
    Vec out = zero_vec(rows, field_);
    if (rows == 0 || g.empty() || f.empty())
        return out;
    const ColView* view = comp_view(x, y, z, pg, pf);
    if (!view)
        return out;
    int fd = (int)f.size();
    for (size_t gi = 0; gi < g.size(); ++gi) {
        if (g[gi].is_zero())
            continue;
        for (int fj = 0; fj < fd; ++fj) {
            if (f[fj].is_zero())
                continue;
            Scalar gf = g[gi] * f[fj];
            for (const auto& [row, v] : (*view)[gi * fd + fj])
                out[row] += v * gf;
        }
    }
    return out;
}

Vec DgCategory::d_of(int x, int y, int deg, const Vec& v) const
{
    return hom(x, y).d(deg).apply(v);
}

Report DgCategory::validate() const
{
    Report rep;
    int n = num_objects();
    // hom complexes
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            for (auto& s : hom(x, y).validate())
                rep.violations.push_back("hom(" + objects_[x] + "," + objects_[y] + "): " + s);
            ++rep.checks;
        }
    // units: degree-0 cocycles, unit laws
    for (int x = 0; x < n; ++x) {
        const Vec& u = units_[x];
        if ((int)u.size() != hom(x, x).dim(0)) {
            rep.violations.push_back("unit of " + objects_[x] + " has wrong size");
            continue;
        }
        if (hom(x, x).dim(0) > 0 && !is_zero_vec(d_of(x, x, 0, u)))
            rep.violations.push_back("d(1_" + objects_[x] + ") != 0");
        ++rep.checks;
    }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const Complex& h = hom(x, y);
            for (const auto& [deg, dd] : h.dims())
                for (int i = 0; i < dd; ++i) {
                    Vec f = unit_vec(dd, i, field_);
                    Vec lf = compose(x, y, y, 0, units_[y], deg, f);
                    Vec rf = compose(x, x, y, deg, f, 0, units_[x]);
                    ++rep.checks;
                    if (lf != f)
                        rep.violations.push_back("1∘f != f for basis " + std::to_string(i) +
                                                 " of hom(" + objects_[x] + "," + objects_[y] +
                                                 ")^" + std::to_string(deg));
                    if (rf != f)
                        rep.violations.push_back("f∘1 != f for basis " + std::to_string(i) +
                                                 " of hom(" + objects_[x] + "," + objects_[y] +
                                                 ")^" + std::to_string(deg));
                }
        }
    // Leibniz on basis pairs
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                const Complex& hg = hom(y, z);
                const Complex& hf = hom(x, y);
                for (const auto& [pg, dg] : hg.dims())
                    for (const auto& [pf, df] : hf.dims())
                        for (int gi = 0; gi < dg; ++gi)
                            for (int fj = 0; fj < df; ++fj) {
                                Vec g = unit_vec(dg, gi, field_);
                                Vec f = unit_vec(df, fj, field_);
                                Vec gf = compose(x, y, z, pg, g, pf, f);
                                Vec lhs = d_of(x, z, pg + pf, gf);
                                Vec rhs = compose(x, y, z, pg + 1, d_of(y, z, pg, g), pf, f);
                                Vec t2 = compose(x, y, z, pg, g, pf + 1, d_of(x, y, pf, f));
                                rhs = (pg % 2 == 0) ? add(rhs, t2) : sub(rhs, t2);
                                ++rep.checks;
                                if (lhs != rhs)
                                    rep.violations.push_back(
                                        "Leibniz fails: (" + objects_[x] + "," + objects_[y] + "," +
                                        objects_[z] + ") degs (" + std::to_string(pg) + "," +
                                        std::to_string(pf) + ") basis (" + std::to_string(gi) +
                                        "," + std::to_string(fj) + ")");
                            }
            }
    // associativity on basis triples
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                for (int w = 0; w < n; ++w) {
                    const Complex& hh = hom(z, w);
                    const Complex& hg = hom(y, z);
                    const Complex& hf = hom(x, y);
                    for (const auto& [ph, dh] : hh.dims())
                        for (const auto& [pg, dg] : hg.dims())
                            for (const auto& [pf, df] : hf.dims())
                                for (int hi = 0; hi < dh; ++hi)
                                    for (int gi = 0; gi < dg; ++gi)
                                        for (int fj = 0; fj < df; ++fj) {
                                            Vec h = unit_vec(dh, hi, field_);
                                            Vec g = unit_vec(dg, gi, field_);
                                            Vec f = unit_vec(df, fj, field_);
                                            Vec hg_ = compose(y, z, w, ph, h, pg, g);
                                            Vec l = compose(x, y, w, ph + pg, hg_, pf, f);
                                            Vec gf = compose(x, y, z, pg, g, pf, f);
                                            Vec r = compose(x, z, w, ph, h, pg + pf, gf);
                                            ++rep.checks;
                                            if (l != r)
                                                rep.violations.push_back(
                                                    "associativity fails at (" + objects_[x] + "," +
                                                    objects_[y] + "," + objects_[z] + "," +
                                                    objects_[w] + ") degs (" + std::to_string(ph) +
                                                    "," + std::to_string(pg) + "," +
                                                    std::to_string(pf) + ")");
                                        }
                }
    return rep;
}

std::string DgCategory::str() const
{
    std::ostringstream os;
    os << "dg category over " << field_.str() << ", objects:";
    for (const auto& o : objects_)
        os << " " << o;
    for (int x = 0; x < num_objects(); ++x)
        for (int y = 0; y < num_objects(); ++y)
            if (!hom(x, y).is_empty())
                os << "\n  hom(" << objects_[x] << "," << objects_[y] << ") = " << hom(x, y).str();
    return os.str();
}

Vec FiniteCategory::compose(int x, int y, int z, const Vec& g, const Vec& f) const
{
    int rows = dim.count({x, z}) ? dim.at({x, z}) : 0;
    Vec out = zero_vec(rows, field);
    auto it = comp.find({x, y, z});
    if (it == comp.end() || g.empty() || f.empty())
        return out;
    int fd = (int)f.size();
    for (const auto& [rc, v] : it->second.entries()) {
        int gi = rc.second / fd, fj = rc.second % fd;
        out[rc.first] += v * g[gi] * f[fj];
    }
    return out;
}

std::string FiniteCategory::dimension_table() const
{
    std::ostringstream os;
    for (size_t x = 0; x < objects.size(); ++x)
        for (size_t y = 0; y < objects.size(); ++y) {
            auto it = dim.find({(int)x, (int)y});
            int d = it == dim.end() ? 0 : it->second;
            os << "hom(" << objects[x] << "," << objects[y] << ")=" << d << "\n";
        }
    return os.str();
}

namespace {

/* shared machinery for z0/h0: per pair, a basis of the degree-0 subquotient
 * together with the data needed to express arbitrary cocycles in it */
struct Deg0Basis {
    std::vector<Vec> reps;     // vectors in hom(x,y)^0
    Mat express;               // [reps | boundaries]; coords = first reps.size() rows of solve
};

FiniteCatWithBases finite_from(const DgCategory& a, bool mod_boundaries)
{
    FiniteCatWithBases out;
    out.cat.field = a.field();
    out.cat.objects = a.objects();
    int n = a.num_objects();
    std::map<std::pair<int, int>, Deg0Basis> bases;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const Complex& h = a.hom(x, y);
            int d0 = h.dim(0);
            Deg0Basis b;
            if (d0 > 0) {
                Mat cycles = kernel_basis(h.d(0));
                Mat bdries = mod_boundaries && h.dim(-1) > 0 ? h.d(-1) : Mat(d0, 0, a.field());
                QuotientBasis q = quotient_basis(cycles, bdries);
                b.reps = q.reps;
                Mat reps(d0, (int)q.reps.size(), a.field());
                for (int j = 0; j < (int)q.reps.size(); ++j)
                    reps.set_col(j, q.reps[j]);
                b.express = Mat::hcat(reps, bdries);
            } else {
                b.express = Mat(0, 0, a.field());
            }
            out.cat.dim[{x, y}] = (int)b.reps.size();
            out.basis[{x, y}] = b.reps;
            bases[{x, y}] = std::move(b);
        }
    auto coords = [&](int x, int y, const Vec& v) -> Vec {
        const Deg0Basis& b = bases[{x, y}];
        Vec c = zero_vec((int)b.reps.size(), a.field());
        if (is_zero_vec(v))
            return c;
        auto sol = solve(b.express, v);
        if (!sol)
            throw Error("internal: cocycle not expressible in chosen basis");
        for (int j = 0; j < (int)b.reps.size(); ++j)
            c[j] = (*sol)[j];
        return c;
    };
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                const auto& bg = bases[{y, z}].reps;
                const auto& bf = bases[{x, y}].reps;
                const auto& bo = bases[{x, z}].reps;
                if (bg.empty() || bf.empty() || bo.empty())
                    continue;
                Mat table((int)bo.size(), (int)(bg.size() * bf.size()), a.field());
                for (size_t gi = 0; gi < bg.size(); ++gi)
                    for (size_t fj = 0; fj < bf.size(); ++fj) {
                        Vec prod = a.compose(x, y, z, 0, bg[gi], 0, bf[fj]);
                        Vec c = coords(x, z, prod);
                        for (size_t o = 0; o < bo.size(); ++o)
                            table.set((int)o, (int)(gi * bf.size() + fj), c[o]);
                    }
                if (!table.is_zero())
                    out.cat.comp[{x, y, z}] = table;
            }
    out.cat.id.resize(n);
    for (int x = 0; x < n; ++x)
        out.cat.id[x] = coords(x, x, a.unit(x));
    return out;
}

}  // namespace

FiniteCatWithBases z0(const DgCategory& a) { return finite_from(a, false); }
FiniteCatWithBases h0(const DgCategory& a) { return finite_from(a, true); }

DgCategory opposite(const DgCategory& a)
{
    DgCategory r(a.field());
    r.info = a.info;
    for (const auto& o : a.objects())
        r.add_object(o);
    int n = a.num_objects();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            r.set_hom(x, y, a.hom(y, x));
    for (int x = 0; x < n; ++x)
        r.set_unit(x, a.unit(x));
    // comp_op(g: y->z deg p, f: x->y deg q) = (-1)^{pq} comp_a(f, g)
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                const Complex& hg = r.hom(y, z);   // = a.hom(z, y)
                const Complex& hf = r.hom(x, y);   // = a.hom(y, x)
                for (const auto& [pg, dg] : hg.dims())
                    for (const auto& [pf, df] : hf.dims()) {
                        int rows = r.hom(x, z).dim(pg + pf);
                        if (rows == 0)
                            continue;
                        Mat m(rows, dg * df, a.field());
                        for (int gi = 0; gi < dg; ++gi)
                            for (int fj = 0; fj < df; ++fj) {
                                // f ∈ a.hom(y,x)^pf is the outer factor in a
                                Vec prod = a.compose(z, y, x, pf, unit_vec(df, fj, a.field()),
                                                     pg, unit_vec(dg, gi, a.field()));
                                if ((pg * pf) % 2 != 0)
                                    prod = neg(prod);
                                for (int o = 0; o < rows; ++o)
                                    if (!prod[o].is_zero())
                                        m.set(o, gi * df + fj, prod[o]);
                            }
                        if (!m.is_zero())
                            r.set_comp_table(x, y, z, pg, pf, m);
                    }
            }
    return r;
}

int tensor_object(const DgCategory& a, const DgCategory& b, int xa, int xb)
{
    return xa * b.num_objects() + xb;
}

DgCategory tensor(const DgCategory& a, const DgCategory& b)
{
    if (a.field() != b.field())
        throw FieldMismatch();
    Field k = a.field();
    DgCategory r(k);
    if (a.info.windowed || b.info.windowed) {
        r.info.windowed = true;
        r.info.lo = a.info.lo + b.info.lo;
        r.info.hi = a.info.hi + b.info.hi;
    }
    r.info.cap_truncated = a.info.cap_truncated || b.info.cap_truncated;
    r.info.complete = a.info.complete && b.info.complete;
    for (int xa = 0; xa < a.num_objects(); ++xa)
        for (int xb = 0; xb < b.num_objects(); ++xb)
            r.add_object("(" + a.label(xa) + "," + b.label(xb) + ")");
    auto oi = [&](int xa, int xb) { return tensor_object(a, b, xa, xb); };
    for (int xa = 0; xa < a.num_objects(); ++xa)
        for (int xb = 0; xb < b.num_objects(); ++xb)
            for (int ya = 0; ya < a.num_objects(); ++ya)
                for (int yb = 0; yb < b.num_objects(); ++yb)
                    r.set_hom(oi(xa, xb), oi(ya, yb), a.hom(xa, ya).tensor(b.hom(xb, yb)));
    // units 1_a ⊗ 1_b
    for (int xa = 0; xa < a.num_objects(); ++xa)
        for (int xb = 0; xb < b.num_objects(); ++xb) {
            const Complex& ha = a.hom(xa, xa);
            const Complex& hb = b.hom(xb, xb);
            int x = oi(xa, xb);
            Vec u = zero_vec(r.hom(x, x).dim(0), k);
            const Vec& ua = a.unit(xa);
            const Vec& ub = b.unit(xb);
            for (size_t i = 0; i < ua.size(); ++i)
                for (size_t j = 0; j < ub.size(); ++j) {
                    Scalar c = ua[i] * ub[j];
                    if (!c.is_zero())
                        u[tensor_index(ha, hb, 0, (int)i, 0, (int)j)] += c;
                }
            r.set_unit(x, u);
        }
    // composition with Koszul sign: (g_a⊗g_b)(f_a⊗f_b) = (-1)^{|g_b||f_a|} (g_a f_a)⊗(g_b f_b)
    for (int xa = 0; xa < a.num_objects(); ++xa)
        for (int xb = 0; xb < b.num_objects(); ++xb)
            for (int ya = 0; ya < a.num_objects(); ++ya)
                for (int yb = 0; yb < b.num_objects(); ++yb)
                    for (int za = 0; za < a.num_objects(); ++za)
                        for (int zb = 0; zb < b.num_objects(); ++zb) {
                            int x = oi(xa, xb), y = oi(ya, yb), z = oi(za, zb);
                            const Complex& hga = a.hom(ya, za);
                            const Complex& hgb = b.hom(yb, zb);
                            const Complex& hfa = a.hom(xa, ya);
                            const Complex& hfb = b.hom(xb, yb);
                            const Complex& hg = r.hom(y, z);
                            const Complex& hf = r.hom(x, y);
                            const Complex& ho = r.hom(x, z);
                            (void)hg;
                            (void)hf;
                            for (const auto& [pga, dga] : hga.dims())
                                for (const auto& [pgb, dgb] : hgb.dims())
                                    for (const auto& [pfa, dfa] : hfa.dims())
                                        for (const auto& [pfb, dfb] : hfb.dims()) {
                                            int pg = pga + pgb, pf = pfa + pfb;
                                            if (ho.dim(pg + pf) == 0)
                                                continue;
                                            bool negate = (pgb * pfa) % 2 != 0;
                                            for (int gi = 0; gi < dga; ++gi)
                                                for (int fi = 0; fi < dfa; ++fi) {
                                                    Vec pa = a.compose(xa, ya, za, pga,
                                                                       unit_vec(dga, gi, k), pfa,
                                                                       unit_vec(dfa, fi, k));
                                                    if (is_zero_vec(pa))
                                                        continue;
                                                    for (int gj = 0; gj < dgb; ++gj)
                                                        for (int fj = 0; fj < dfb; ++fj) {
                                                            Vec pb = b.compose(xb, yb, zb, pgb,
                                                                               unit_vec(dgb, gj, k),
                                                                               pfb,
                                                                               unit_vec(dfb, fj, k));
                                                            if (is_zero_vec(pb))
                                                                continue;
                                                            int gcol = tensor_index(hga, hgb, pga,
                                                                                    gi, pgb, gj);
                                                            int fcol = tensor_index(hfa, hfb, pfa,
                                                                                    fi, pfb, fj);
                                                            for (size_t oa = 0; oa < pa.size(); ++oa)
                                                                for (size_t ob = 0; ob < pb.size();
                                                                     ++ob) {
                                                                    Scalar c = pa[oa] * pb[ob];
                                                                    if (c.is_zero())
                                                                        continue;
                                                                    if (negate)
                                                                        c = -c;
                                                                    int out = tensor_index(
                                                                        a.hom(xa, za),
                                                                        b.hom(xb, zb), pga + pfa,
                                                                        (int)oa, pgb + pfb,
                                                                        (int)ob);
                                                                    r.set_comp_entry(x, y, z, pg,
                                                                                     pf, out, gcol,
                                                                                     fcol, c);
                                                                }
                                                        }
                                                }
                                        }
                        }
    return r;
}

DgCategory disjoint_union(const DgCategory& a, const DgCategory& b)
{
    if (a.field() != b.field())
        throw FieldMismatch();
    DgCategory r(a.field());
    for (const auto& o : a.objects())
        r.add_object(o);
    for (const auto& o : b.objects())
        r.add_object(o);
    int na = a.num_objects();
    for (int x = 0; x < na; ++x)
        for (int y = 0; y < na; ++y)
            r.set_hom(x, y, a.hom(x, y));
    for (int x = 0; x < b.num_objects(); ++x)
        for (int y = 0; y < b.num_objects(); ++y)
            r.set_hom(na + x, na + y, b.hom(x, y));
    for (int x = 0; x < na; ++x)
        r.set_unit(x, a.unit(x));
    for (int x = 0; x < b.num_objects(); ++x)
        r.set_unit(na + x, b.unit(x));
    for (int x = 0; x < na; ++x)
        for (int y = 0; y < na; ++y)
            for (int z = 0; z < na; ++z) {
                const Complex& hg = a.hom(y, z);
                const Complex& hf = a.hom(x, y);
                for (const auto& [pg, dg] : hg.dims())
                    for (const auto& [pf, df] : hf.dims()) {
                        Mat t = a.comp_table(x, y, z, pg, pf);
                        if (!t.is_zero())
                            r.set_comp_table(x, y, z, pg, pf, t);
                    }
            }
    for (int x = 0; x < b.num_objects(); ++x)
        for (int y = 0; y < b.num_objects(); ++y)
            for (int z = 0; z < b.num_objects(); ++z) {
                const Complex& hg = b.hom(y, z);
                const Complex& hf = b.hom(x, y);
                for (const auto& [pg, dg] : hg.dims())
                    for (const auto& [pf, df] : hf.dims()) {
                        Mat t = b.comp_table(x, y, z, pg, pf);
                        if (!t.is_zero())
                            r.set_comp_table(na + x, na + y, na + z, pg, pf, t);
                    }
            }
    return r;
}

DgCategory with_zero_object(const DgCategory& a, const std::string& label)
{
    DgCategory r = a;
    if (r.object_index(label) >= 0)
        throw Error("zero-object label already in use: " + label);
    int z = r.add_object(label);
    r.set_unit(z, Vec{});
    return r;
}

DgFunctor DgFunctor::identity(CatPtr a)
{
    DgFunctor f(a, a);
    for (int x = 0; x < a->num_objects(); ++x)
        f.set_object(x, x);
    for (int x = 0; x < a->num_objects(); ++x)
        for (int y = 0; y < a->num_objects(); ++y)
            for (const auto& [deg, dd] : a->hom(x, y).dims())
                f.set_component(x, y, deg, Mat::identity(dd, a->field()));
    return f;
}

void DgFunctor::set_object(int x, int fx)
{
    if (x < 0 || x >= src_->num_objects() || fx < 0 || fx >= tgt_->num_objects())
        throw Error("functor object map out of range");
    obj_[x] = fx;
}

Mat DgFunctor::component(int x, int y, int deg) const
{
    auto it = comp_.find({x, y, deg});
    if (it != comp_.end())
        return it->second;
    return Mat(tgt_->hom(on_object(x), on_object(y)).dim(deg), src_->hom(x, y).dim(deg),
               src_->field());
}

void DgFunctor::set_component(int x, int y, int deg, const Mat& m)
{
    int rows = tgt_->hom(on_object(x), on_object(y)).dim(deg);
    int cols = src_->hom(x, y).dim(deg);
    if (m.rows() != rows || m.cols() != cols)
        throw Error("functor component shape mismatch");
    if (m.is_zero())
        comp_.erase({x, y, deg});
    else
        comp_[{x, y, deg}] = m;
}

Vec DgFunctor::apply(int x, int y, int deg, const Vec& v) const
{
    return component(x, y, deg).apply(v);
}

Report DgFunctor::validate() const
{
    Report rep;
    const DgCategory& A = *src_;
    const DgCategory& B = *tgt_;
    if (A.field() != B.field())
        rep.violations.push_back("field mismatch");
    for (int x = 0; x < A.num_objects(); ++x)
        if (!obj_.count(x))
            rep.violations.push_back("object " + A.label(x) + " has no image");
    if (!rep.violations.empty())
        return rep;
    // components are chain maps
    for (int x = 0; x < A.num_objects(); ++x)
        for (int y = 0; y < A.num_objects(); ++y) {
            const Complex& h = A.hom(x, y);
            const Complex& hh = B.hom(on_object(x), on_object(y));
            for (const auto& [deg, dd] : h.dims()) {
                Mat lhs = hh.d(deg) * component(x, y, deg);
                Mat rhs = component(x, y, deg + 1) * h.d(deg);
                ++rep.checks;
                if (lhs != rhs)
                    rep.violations.push_back("component (" + A.label(x) + "," + A.label(y) +
                                             ")^" + std::to_string(deg) +
                                             " does not commute with d");
            }
        }
    // unit preservation
    for (int x = 0; x < A.num_objects(); ++x) {
        Vec fu = apply(x, x, 0, A.unit(x));
        ++rep.checks;
        if (fu != B.unit(on_object(x)))
            rep.violations.push_back("unit of " + A.label(x) + " not preserved");
    }
    // composition preservation on bases
    for (int x = 0; x < A.num_objects(); ++x)
        for (int y = 0; y < A.num_objects(); ++y)
            for (int z = 0; z < A.num_objects(); ++z) {
                const Complex& hg = A.hom(y, z);
                const Complex& hf = A.hom(x, y);
                for (const auto& [pg, dg] : hg.dims())
                    for (const auto& [pf, df] : hf.dims())
                        for (int gi = 0; gi < dg; ++gi)
                            for (int fj = 0; fj < df; ++fj) {
                                Vec g = unit_vec(dg, gi, A.field());
                                Vec f = unit_vec(df, fj, A.field());
                                Vec lhs = apply(x, z, pg + pf, A.compose(x, y, z, pg, g, pf, f));
                                Vec rhs = B.compose(on_object(x), on_object(y), on_object(z), pg,
                                                    apply(y, z, pg, g), pf, apply(x, y, pf, f));
                                ++rep.checks;
                                if (lhs != rhs)
                                    rep.violations.push_back(
                                        "composition not preserved at (" + A.label(x) + "," +
                                        A.label(y) + "," + A.label(z) + ") degs (" +
                                        std::to_string(pg) + "," + std::to_string(pf) + ")");
                            }
            }
    return rep;
}

DgFunctor DgFunctor::then(const DgFunctor& g) const
{
    if (tgt_.get() != g.src_.get())
        throw Error("functor composition: target/source mismatch");
    DgFunctor r(src_, g.tgt_);
    for (const auto& [x, fx] : obj_)
        r.set_object(x, g.on_object(fx));
    for (int x = 0; x < src_->num_objects(); ++x)
        for (int y = 0; y < src_->num_objects(); ++y)
            for (const auto& [deg, dd] : src_->hom(x, y).dims()) {
                Mat m = g.component(on_object(x), on_object(y), deg) * component(x, y, deg);
                r.set_component(x, y, deg, m);
            }
    return r;
}

DgFunctor::InducedFinite DgFunctor::induced_h0(const FiniteCatWithBases& hsrc,
                                               const FiniteCatWithBases& htgt) const
{
    InducedFinite out;
    const DgCategory& A = *src_;
    const DgCategory& B = *tgt_;
    out.obj.resize(A.num_objects());
    for (int x = 0; x < A.num_objects(); ++x)
        out.obj[x] = on_object(x);
    for (int x = 0; x < A.num_objects(); ++x)
        for (int y = 0; y < A.num_objects(); ++y) {
            const auto& bs = hsrc.basis.at({x, y});
            const auto& bt = htgt.basis.at({on_object(x), on_object(y)});
            Mat m((int)bt.size(), (int)bs.size(), A.field());
            if (!bs.empty() && !bt.empty()) {
                const Complex& hb = B.hom(on_object(x), on_object(y));
                Mat reps(hb.dim(0), (int)bt.size(), A.field());
                for (int j = 0; j < (int)bt.size(); ++j)
                    reps.set_col(j, bt[j]);
                Mat bd = hb.dim(-1) > 0 ? hb.d(-1) : Mat(hb.dim(0), 0, A.field());
                Mat express = Mat::hcat(reps, bd);
                for (int j = 0; j < (int)bs.size(); ++j) {
                    Vec img = apply(x, y, 0, bs[j]);
                    auto sol = solve(express, img);
                    if (!sol)
                        throw Error("internal: image cocycle not expressible");
                    for (int i = 0; i < (int)bt.size(); ++i)
                        m.set(i, j, (*sol)[i]);
                }
            }
            out.mor[{x, y}] = m;
        }
    return out;
}

bool same_category(const DgCategory& a, const DgCategory& b)
{
    if (a.field() != b.field() || a.objects() != b.objects())
        return false;
    int n = a.num_objects();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (a.hom(x, y) != b.hom(x, y))
                return false;
    for (int x = 0; x < n; ++x)
        if (a.unit(x) != b.unit(x))
            return false;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                const Complex& hg = a.hom(y, z);
                const Complex& hf = a.hom(x, y);
                for (const auto& [pg, dg] : hg.dims())
                    for (const auto& [pf, df] : hf.dims())
                        if (a.comp_table(x, y, z, pg, pf) != b.comp_table(x, y, z, pg, pf))
                            return false;
            }
    return true;
}

}  // namespace dgc
