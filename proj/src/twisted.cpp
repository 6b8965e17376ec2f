#include "dgcalc/twisted.hpp"

#include <sstream>

namespace dgc {

Vec TwistedComplex::q(int i, int j) const
{
    auto it = q_.find({i, j});
    if (it != q_.end())
        return it->second;
    int deg = entries_[i].second - entries_[j].second + 1;
    return zero_vec(base_->hom(entries_[j].first, entries_[i].first).dim(deg), base_->field());
}

void TwistedComplex::set_q(int i, int j, Vec v)
{
    if (i >= j)
        throw Error("twist entries must be strictly triangular (i < j)");
    int deg = entries_[i].second - entries_[j].second + 1;
    if ((int)v.size() != base_->hom(entries_[j].first, entries_[i].first).dim(deg))
        throw Error("twist entry size mismatch");
    if (is_zero_vec(v))
        q_.erase({i, j});
    else
        q_[{i, j}] = std::move(v);
}

std::vector<std::string> TwistedComplex::validate() const
{
    std::vector<std::string> bad;
    const DgCategory& a = *base_;
    for (const auto& [ij, v] : q_)
        if (ij.first >= ij.second)
            bad.push_back("twist entry at or below the diagonal");
    // (-1)^{r_i} d(q_ij) + (q²)_ij = 0
    for (int i = 0; i < size(); ++i)
        for (int j = i + 1; j < size(); ++j) {
            auto [xj, rj] = entries_[j];
            auto [xi, ri] = entries_[i];
            int deg = ri - rj + 1;
            Vec lhs = a.d_of(xj, xi, deg, q(i, j));
            if (ri % 2 != 0)
                lhs = neg(lhs);
            for (int k = i + 1; k < j; ++k) {
                auto [xk, rk] = entries_[k];
                lhs = add(lhs, a.compose(xj, xk, xi, ri - rk + 1, q(i, k), rk - rj + 1, q(k, j)));
            }
            if (!is_zero_vec(lhs))
                bad.push_back("Maurer-Cartan fails at (" + std::to_string(i) + "," +
                              std::to_string(j) + ")");
        }
    return bad;
}

TwistedComplex TwistedComplex::shifted(int n) const
{
    TwistedComplex r(base_, entries_);
    for (auto& [obj, sh] : r.entries_)
        sh += n;
    for (const auto& [ij, v] : q_)
        r.q_[ij] = (n % 2 == 0) ? v : neg(v);
    return r;
}

TwistedComplex TwistedComplex::direct_sum(const TwistedComplex& o) const
{
    if (base_.get() != o.base_.get())
        throw Error("direct sum of twisted complexes over different bases");
    TwistedComplex r(base_, entries_);
    r.entries_.insert(r.entries_.end(), o.entries_.begin(), o.entries_.end());
    r.q_ = q_;
    int off = size();
    for (const auto& [ij, v] : o.q_)
        r.q_[{ij.first + off, ij.second + off}] = v;
    return r;
}

std::string TwistedComplex::str() const
{
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < size(); ++i)
        os << (i ? " + " : "") << base_->label(entries_[i].first) << "[" << entries_[i].second
           << "]";
    os << ", " << q_.size() << " twist entries)";
    return os.str();
}

Vec TwMor::at(int i, int j, const TwistedComplex& src, const TwistedComplex& tgt,
              const DgCategory& a) const
{
    auto it = comp.find({i, j});
    if (it != comp.end())
        return it->second;
    int d = deg + tgt.entry(i).second - src.entry(j).second;
    return zero_vec(a.hom(src.entry(j).first, tgt.entry(i).first).dim(d), a.field());
}

TwHom::TwHom(TwistedComplex m, TwistedComplex n) : m_(std::move(m)), n_(std::move(n))
{
    if (m_.base_ptr().get() != n_.base_ptr().get())
        throw Error("hom complex of twisted complexes over different bases");
    const DgCategory& a = m_.base();
    Field k = a.field();
    cpx_ = Complex(k);
    // collect dims per degree
    std::map<int, int> dims;
    for (int i = 0; i < n_.size(); ++i)
        for (int j = 0; j < m_.size(); ++j) {
            auto [xj, rj] = m_.entry(j);
            auto [yi, ri] = n_.entry(i);
            for (const auto& [adeg, dd] : a.hom(xj, yi).dims()) {
                int deg = adeg - ri + rj;
                for (int t = 0; t < dd; ++t)
                    layout_[deg].push_back({i, j, t});
                dims[deg] += dd;
            }
        }
    // layout_ is ordered by (i, j, t) already? map iteration filled by i then j
    // but degrees interleave: rebuild each degree's list in (i,j,t) order
    for (auto& [deg, lst] : layout_) {
        std::sort(lst.begin(), lst.end());
        cpx_.set_dim(deg, (int)lst.size());
    }
    // differential: D(f)_ij = (-1)^{r'_i} d(f_ij) + (q_N f)_ij - (-1)^{|f|} (f q_M)_ij
    for (const auto& [deg, lst] : layout_) {
        if (cpx_.dim(deg + 1) == 0)
            continue;
        Mat dm(cpx_.dim(deg + 1), (int)lst.size(), k);
        for (size_t col = 0; col < lst.size(); ++col) {
            auto [i, j, t] = lst[col];
            auto [xj, rj] = m_.entry(j);
            auto [yi, ri] = n_.entry(i);
            int adeg = deg + ri - rj;
            Vec unit = unit_vec(a.hom(xj, yi).dim(adeg), t, k);
            TwMor f;
            f.deg = deg;
            f.comp[{i, j}] = unit;
            // assemble D(f) componentwise
            TwMor df;
            df.deg = deg + 1;
            for (int ii = 0; ii < n_.size(); ++ii)
                for (int jj = 0; jj < m_.size(); ++jj) {
                    auto [xjj, rjj] = m_.entry(jj);
                    auto [yii, rii] = n_.entry(ii);
                    int tdeg = deg + 1 + rii - rjj;
                    if (a.hom(xjj, yii).dim(tdeg) == 0)
                        continue;
                    Vec acc = zero_vec(a.hom(xjj, yii).dim(tdeg), k);
                    if (ii == i && jj == j) {
                        Vec dv = a.d_of(xj, yi, adeg, unit);
                        acc = (rii % 2 == 0) ? add(acc, dv) : sub(acc, dv);
                    }
                    if (jj == j && ii < i) {
                        // (q_N)_{ii,i} ∘ f_{i,j}
                        auto [yy, rr] = n_.entry(i);
                        acc = add(acc, a.compose(xj, yy, yii, rii - rr + 1, n_.q(ii, i), adeg,
                                                 unit));
                    }
                    if (ii == i && jj > j) {
                        // f_{i,j} ∘ (q_M)_{j,jj}
                        Vec term = a.compose(xjj, xj, yi, adeg, unit, rj - rjj + 1, m_.q(j, jj));
                        acc = (deg % 2 == 0) ? sub(acc, term) : add(acc, term);
                    }
                    if (!is_zero_vec(acc))
                        df.comp[{ii, jj}] = acc;
                }
            Vec flat = from_mor(df);
            for (size_t r = 0; r < flat.size(); ++r)
                if (!flat[r].is_zero())
                    dm.set((int)r, (int)col, flat[r]);
        }
        if (!dm.is_zero())
            cpx_.set_d(deg, dm);
    }
}

TwMor TwHom::to_mor(int deg, const Vec& coords) const
{
    TwMor f;
    f.deg = deg;
    auto it = layout_.find(deg);
    if (it == layout_.end())
        return f;
    const DgCategory& a = m_.base();
    for (size_t col = 0; col < it->second.size(); ++col) {
        if (coords[col].is_zero())
            continue;
        auto [i, j, t] = it->second[col];
        auto key = std::make_pair(i, j);
        auto& v = f.comp[key];
        if (v.empty()) {
            int adeg = deg + n_.entry(i).second - m_.entry(j).second;
            v = zero_vec(a.hom(m_.entry(j).first, n_.entry(i).first).dim(adeg), a.field());
        }
        v[t] = coords[col];
    }
    return f;
}

Vec TwHom::from_mor(const TwMor& f) const
{
    auto it = layout_.find(f.deg);
    if (it == layout_.end()) {
        for (const auto& [ij, v] : f.comp)
            if (!is_zero_vec(v))
                throw Error("twisted morphism outside the hom complex support");
        return {};
    }
    Vec coords = zero_vec((int)it->second.size(), m_.base().field());
    for (size_t col = 0; col < it->second.size(); ++col) {
        auto [i, j, t] = it->second[col];
        auto c = f.comp.find({i, j});
        if (c != f.comp.end() && !c->second.empty())
            coords[col] = c->second[t];
    }
    return coords;
}

Vec TwHom::identity_coords() const
{
    TwMor id;
    id.deg = 0;
    const DgCategory& a = m_.base();
    for (int i = 0; i < m_.size(); ++i) {
        // identity of entry i: unit of the object
        id.comp[{i, i}] = a.unit(m_.entry(i).first);
    }
    return from_mor(id);
}

TwHom hom_complex(const TwistedComplex& m, const TwistedComplex& n)
{
    return TwHom(m, n);
}

TwMor compose_mor(const DgCategory& a, const TwistedComplex& m, const TwistedComplex& n,
                  const TwistedComplex& p, const TwMor& g, const TwMor& f)
{
    TwMor r;
    r.deg = g.deg + f.deg;
    for (int i = 0; i < p.size(); ++i)
        for (int j = 0; j < m.size(); ++j) {
            Vec acc;
            for (int k = 0; k < n.size(); ++k) {
                auto gik = g.comp.find({i, k});
                auto fkj = f.comp.find({k, j});
                if (gik == g.comp.end() || fkj == f.comp.end())
                    continue;
                int gdeg = g.deg + p.entry(i).second - n.entry(k).second;
                int fdeg = f.deg + n.entry(k).second - m.entry(j).second;
                Vec term = a.compose(m.entry(j).first, n.entry(k).first, p.entry(i).first, gdeg,
                                     gik->second, fdeg, fkj->second);
                acc = acc.empty() ? term : add(acc, term);
            }
            if (!acc.empty() && !is_zero_vec(acc))
                r.comp[{i, j}] = acc;
        }
    return r;
}

TwistedComplex cone_of_closed(const TwMor& s, const TwistedComplex& m, const TwistedComplex& n)
{
    if (s.deg != 0)
        throw Error("cone requires a degree-0 morphism");
    TwHom h(m, n);
    Vec flat = h.from_mor(s);
    if (!is_zero_vec(h.d_of(0, flat)))
        throw Error("cone requires a closed morphism");
    TwistedComplex r = n.direct_sum(m.shifted(1));
    // the shifted sum already carries q_N and the (-1)-transported q_M;
    // add the s-block from the M-part to the N-part
    int off = n.size();
    for (const auto& [ij, v] : s.comp)
        r.set_q(ij.first, off + ij.second, v);
    return r;
}

std::optional<Contraction> contracting_homotopy(const TwistedComplex& m)
{
    TwHom endo(m, m);
    const Complex& c = endo.cpx();
    if (c.dim(-1) == 0) {
        // no degree -1 endomorphisms: contractible only if the identity is zero
        Vec id = endo.identity_coords();
        if (is_zero_vec(id))
            return Contraction{TwMor{-1, {}}};
        return std::nullopt;
    }
    Mat d = c.d(-1);
    auto sol = solve(d, endo.identity_coords());
    if (!sol)
        return std::nullopt;
    return Contraction{endo.to_mor(-1, *sol)};
}

bool is_contractible(const TwistedComplex& m)
{
    return contracting_homotopy(m).has_value();
}

IdempotentModule idempotent_factor(const TwistedComplex& m, const TwMor& e)
{
    if (e.deg != 0)
        throw Error("idempotent must have degree 0");
    TwHom endo(m, m);
    Vec flat = endo.from_mor(e);
    if (!is_zero_vec(endo.d_of(0, flat)))
        throw Error("idempotent must be closed");
    TwMor ee = compose_mor(m.base(), m, m, m, e, e);
    Vec res = sub(endo.from_mor(ee), flat);
    if (!is_zero_vec(res)) {
        std::ostringstream os;
        os << "not idempotent; residual E²-E = (";
        for (const auto& v : res)
            os << " " << v.str();
        os << " )";
        throw Error(os.str());
    }
    return IdempotentModule{m, e};
}

FactorHom hom_complex_factor(const IdempotentModule& m, const IdempotentModule& n)
{
    TwHom amb(m.base, n.base);
    const DgCategory& a = m.base.base();
    Field k = a.field();
    FactorHom out{Complex(k), {}, amb};
    const Complex& c = amb.cpx();
    // projector P(f) = e_N ∘ f ∘ e_M per degree; basis of its image
    std::map<int, Mat> embed;
    std::map<int, Mat> proj;
    for (const auto& [deg, dd] : c.dims()) {
        Mat p(dd, dd, k);
        for (int t = 0; t < dd; ++t) {
            TwMor f = amb.to_mor(deg, unit_vec(dd, t, k));
            TwMor nf = compose_mor(a, m.base, n.base, n.base, n.e, f);
            TwMor pf = compose_mor(a, m.base, m.base, n.base, nf, m.e);
            p.set_col(t, amb.from_mor(pf));
        }
        Mat img(dd, 0, k);
        {
            auto pivots = column_space_pivots(p);
            Mat b(dd, (int)pivots.size(), k);
            for (size_t i = 0; i < pivots.size(); ++i)
                b.set_col((int)i, p.col(pivots[i]));
            img = b;
        }
        if (img.cols() > 0) {
            out.cpx.set_dim(deg, img.cols());
            embed[deg] = img;
        }
        proj[deg] = p;
    }
    // induced differential: D(embed) expressed in the image basis
    for (const auto& [deg, dd] : out.cpx.dims()) {
        if (out.cpx.dim(deg + 1) == 0)
            continue;
        Mat dm(out.cpx.dim(deg + 1), dd, k);
        for (int t = 0; t < dd; ++t) {
            Vec img = c.d(deg).apply(embed[deg].col(t));
            auto x = solve(embed[deg + 1], img);
            if (!x)
                throw Error("internal: factor differential leaves the image");
            dm.set_col(t, *x);
        }
        if (!dm.is_zero())
            out.cpx.set_d(deg, dm);
    }
    out.embed = std::move(embed);
    return out;
}

std::optional<HeqData> homotopy_equivalence_data(const DgCategory& a, int x, int y, const Vec& s)
{
    Field k = a.field();
    if ((int)s.size() != a.hom(x, y).dim(0))
        throw Error("morphism size mismatch");
    if (!is_zero_vec(a.d_of(x, y, 0, s)))
        throw Error("homotopy-equivalence data needs a closed degree-0 morphism");
    LinearSystem sys(k);
    int ng = a.hom(y, x).dim(0);
    int nr1 = a.hom(x, x).dim(-1);
    int nr2 = a.hom(y, y).dim(-1);
    int nr12 = a.hom(x, y).dim(-2);
    int vg = sys.new_vars(ng), vr1 = sys.new_vars(nr1), vr2 = sys.new_vars(nr2),
        vr12 = sys.new_vars(nr12);
    auto add_lin = [&](int base, const Mat& m, const Vec& rhs) {
        // m * vars = rhs
        for (int i = 0; i < m.rows(); ++i) {
            int eq = sys.new_eq(rhs.empty() ? Scalar::zero(k) : rhs[i]);
            for (int j = 0; j < m.cols(); ++j) {
                Scalar c = m.at(i, j);
                if (!c.is_zero())
                    sys.add_term(eq, base + j, c);
            }
        }
    };
    // dg = 0
    if (ng > 0 && a.hom(y, x).dim(1) > 0)
        add_lin(vg, a.hom(y, x).d(0), zero_vec(a.hom(y, x).dim(1), k));
    // dr1 = g∘s - 1_x : dr1 - g∘s = -1_x
    {
        int dim = a.hom(x, x).dim(0);
        Mat dr1 = nr1 > 0 ? a.hom(x, x).d(-1) : Mat(dim, 0, k);
        // matrix of g ↦ g∘s
        Mat gs(dim, ng, k);
        for (int j = 0; j < ng; ++j)
            gs.set_col(j, a.compose(x, y, x, 0, unit_vec(ng, j, k), 0, s));
        for (int i = 0; i < dim; ++i) {
            int eq = sys.new_eq(-a.unit(x)[i]);
            for (int j = 0; j < nr1; ++j)
                sys.add_term(eq, vr1 + j, dr1.at(i, j));
            for (int j = 0; j < ng; ++j)
                sys.add_term(eq, vg + j, -gs.at(i, j));
        }
    }
    // dr2 = s∘g - 1_y
    {
        int dim = a.hom(y, y).dim(0);
        Mat dr2 = nr2 > 0 ? a.hom(y, y).d(-1) : Mat(dim, 0, k);
        Mat sg(dim, ng, k);
        for (int j = 0; j < ng; ++j)
            sg.set_col(j, a.compose(y, x, y, 0, s, 0, unit_vec(ng, j, k)));
        for (int i = 0; i < dim; ++i) {
            int eq = sys.new_eq(-a.unit(y)[i]);
            for (int j = 0; j < nr2; ++j)
                sys.add_term(eq, vr2 + j, dr2.at(i, j));
            for (int j = 0; j < ng; ++j)
                sys.add_term(eq, vg + j, -sg.at(i, j));
        }
    }
    // dr12 = s∘r1 - r2∘s
    {
        int dim = a.hom(x, y).dim(-1);
        Mat dr12 = nr12 > 0 ? a.hom(x, y).d(-2) : Mat(dim, 0, k);
        Mat sr1(dim, nr1, k);
        for (int j = 0; j < nr1; ++j)
            sr1.set_col(j, a.compose(x, x, y, 0, s, -1, unit_vec(nr1, j, k)));
        Mat r2s(dim, nr2, k);
        for (int j = 0; j < nr2; ++j)
            r2s.set_col(j, a.compose(x, y, y, -1, unit_vec(nr2, j, k), 0, s));
        for (int i = 0; i < dim; ++i) {
            int eq = sys.new_eq(Scalar::zero(k));
            for (int j = 0; j < nr12; ++j)
                sys.add_term(eq, vr12 + j, dr12.at(i, j));
            for (int j = 0; j < nr1; ++j)
                sys.add_term(eq, vr1 + j, -sr1.at(i, j));
            for (int j = 0; j < nr2; ++j)
                sys.add_term(eq, vr2 + j, r2s.at(i, j));
        }
    }
    auto sol = sys.solve();
    if (!sol)
        return std::nullopt;
    HeqData out;
    out.g = Vec(sol->begin() + vg, sol->begin() + vg + ng);
    out.r1 = Vec(sol->begin() + vr1, sol->begin() + vr1 + nr1);
    out.r2 = Vec(sol->begin() + vr2, sol->begin() + vr2 + nr2);
    out.r12 = Vec(sol->begin() + vr12, sol->begin() + vr12 + nr12);
    return out;
}

Complex additive_hull_hom(const AdditiveTuple& s, const AdditiveTuple& t)
{
    if (s.base.get() != t.base.get())
        throw Error("tuples over different categories");
    const DgCategory& a = *s.base;
    Complex r(a.field());
    // block order: (i over source, j over target), then basis
    std::map<int, int> dims;
    for (int i = 0; i < (int)s.objs.size(); ++i)
        for (int j = 0; j < (int)t.objs.size(); ++j)
            for (const auto& [deg, dd] : a.hom(s.objs[i], t.objs[j]).dims())
                dims[deg] += dd;
    for (const auto& [deg, dd] : dims)
        r.set_dim(deg, dd);
    for (const auto& [deg, dd] : dims) {
        if (r.dim(deg + 1) == 0)
            continue;
        Mat dm(r.dim(deg + 1), dd, a.field());
        int coff = 0, roff = 0;
        for (int i = 0; i < (int)s.objs.size(); ++i)
            for (int j = 0; j < (int)t.objs.size(); ++j) {
                const Complex& h = a.hom(s.objs[i], t.objs[j]);
                Mat dh = h.d(deg);
                for (const auto& [rc, v] : dh.entries())
                    dm.set(roff + rc.first, coff + rc.second, v);
                coff += h.dim(deg);
                roff += h.dim(deg + 1);
            }
        if (!dm.is_zero())
            r.set_d(deg, dm);
    }
    return r;
}

}  // namespace dgc
