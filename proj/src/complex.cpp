#include "dgcalc/complex.hpp"

#include <sstream>

namespace dgc {

Complex Complex::sphere(Field f, int deg)
{
    Complex c(f);
    c.set_dim(deg, 1);
    return c;
}

Complex Complex::disk(Field f, int n)
{
    return cone(ChainMap::identity(sphere(f, n - 1)));
}

int Complex::dim(int n) const
{
    auto it = dim_.find(n);
    return it == dim_.end() ? 0 : it->second;
}

void Complex::set_dim(int n, int d)
{
    if (d < 0)
        throw Error("negative dimension");
    if (d == 0)
        dim_.erase(n);
    else
        dim_[n] = d;
}

Mat Complex::d(int n) const
{
    auto it = d_.find(n);
    if (it != d_.end())
        return it->second;
    return Mat(dim(n + 1), dim(n), f_);
}

void Complex::set_d(int n, const Mat& m)
{
    if (m.rows() != dim(n + 1) || m.cols() != dim(n))
        throw Error("differential shape mismatch at degree " + std::to_string(n));
    if (m.is_zero())
        d_.erase(n);
    else
        d_[n] = m;
}

int Complex::lowest_degree() const
{
    if (dim_.empty())
        throw Error("empty complex has no degrees");
    return dim_.begin()->first;
}

int Complex::highest_degree() const
{
    if (dim_.empty())
        throw Error("empty complex has no degrees");
    return dim_.rbegin()->first;
}

int Complex::total_dim() const
{
    int t = 0;
    for (const auto& [n, d] : dim_)
        t += d;
    return t;
}

long Complex::euler_characteristic() const
{
    long chi = 0;
    for (const auto& [n, d] : dim_)
        chi += (n % 2 == 0) ? d : -d;
    return chi;
}

std::vector<std::string> Complex::validate() const
{
    std::vector<std::string> bad;
    for (const auto& [n, m] : d_) {
        if (m.rows() != dim(n + 1) || m.cols() != dim(n))
            bad.push_back("d shape mismatch at degree " + std::to_string(n));
        if (m.field() != f_)
            bad.push_back("d field mismatch at degree " + std::to_string(n));
    }
    for (const auto& [n, dn] : dim_) {
        (void)dn;
        Mat dd = d(n + 1) * d(n);
        if (!dd.is_zero())
            bad.push_back("d∘d != 0 at degree " + std::to_string(n));
    }
    return bad;
}

Complex::Cohomology Complex::cohomology(int n) const
{
    Cohomology h;
    if (dim(n) == 0)
        return h;
    Mat cycles = kernel_basis(d(n));
    Mat bdries = dim(n - 1) > 0 ? d(n - 1) : Mat(dim(n), 0, f_);
    QuotientBasis q = quotient_basis(cycles, bdries);
    h.dim = q.dim;
    h.reps = q.reps;
    return h;
}

bool Complex::is_acyclic() const
{
    for (const auto& [n, dn] : dim_) {
        (void)dn;
        if (cohomology(n).dim != 0)
            return false;
    }
    return true;
}

Complex Complex::shift(int s) const
{
    Complex r(f_);
    for (const auto& [n, dn] : dim_)
        r.set_dim(n - s, dn);
    for (const auto& [n, m] : d_) {
        Mat ms = (s % 2 == 0) ? m : -m;
        if (!ms.is_zero())
            r.set_d(n - s, ms);
    }
    return r;
}

int tensor_index(const Complex& c, const Complex& d, int p, int i, int q, int j)
{
    int n = p + q;
    int off = 0;
    for (const auto& [pp, dp] : c.dims()) {
        if (pp >= p)
            break;
        off += dp * d.dim(n - pp);
    }
    return off + i * d.dim(q) + j;
}

Complex Complex::tensor(const Complex& o) const
{
    if (f_ != o.f_)
        throw FieldMismatch();
    Complex r(f_);
    // dimensions
    std::map<int, int> rd;
    for (const auto& [p, dp] : dim_)
        for (const auto& [q, dq] : o.dim_)
            rd[p + q] += dp * dq;
    for (const auto& [n, dn] : rd)
        r.set_dim(n, dn);
    // differential: d(x⊗y) = dx⊗y + (-1)^p x⊗dy
    for (const auto& [n, dn] : rd) {
        if (rd.find(n + 1) == rd.end())
            continue;
        Mat dm(rd[n + 1], dn, f_);
        for (const auto& [p, dp] : dim_) {
            int q = n - p;
            int dq = o.dim(q);
            if (dq == 0)
                continue;
            Mat dc = d(p);
            Mat dd = o.d(q);
            for (int i = 0; i < dp; ++i)
                for (int j = 0; j < dq; ++j) {
                    int src = tensor_index(*this, o, p, i, q, j);
                    for (const auto& [ij, v] : dc.entries())
                        if (ij.second == i)
                            dm.add_to(tensor_index(*this, o, p + 1, ij.first, q, j), src, v);
                    Scalar sign = (p % 2 == 0) ? Scalar::one(f_) : -Scalar::one(f_);
                    for (const auto& [ij, v] : dd.entries())
                        if (ij.second == j)
                            dm.add_to(tensor_index(*this, o, p, i, q + 1, ij.first), src, sign * v);
                }
        }
        if (!dm.is_zero())
            r.set_d(n, dm);
    }
    return r;
}

Complex Complex::truncate_ge(int n) const
{
    Complex r(f_);
    if (dim_.empty())
        return r;
    // degree n becomes C^n / im d^{n-1}; higher degrees are kept
    Mat sub = dim(n - 1) > 0 && dim(n) > 0 ? d(n - 1) : Mat(dim(n), 0, f_);
    QuotientBasis q = dim(n) > 0
                          ? quotient_basis(Mat::identity(dim(n), f_), sub)
                          : QuotientBasis{};
    for (const auto& [m, dm] : dim_)
        if (m > n)
            r.set_dim(m, dm);
    if (q.dim > 0)
        r.set_dim(n, q.dim);
    for (const auto& [m, dm] : d_)
        if (m > n && dim(m) > 0 && dim(m + 1) > 0)
            r.set_d(m, dm);
    if (q.dim > 0 && dim(n + 1) > 0) {
        Mat dn(dim(n + 1), q.dim, f_);
        for (int t = 0; t < q.dim; ++t)
            dn.set_col(t, d(n).apply(q.reps[t]));
        r.set_d(n, dn);
    }
    return r;
}

Complex Complex::truncate_le(int n) const
{
    Complex r(f_);
    if (dim_.empty())
        return r;
    // degree n becomes ker d^n; lower degrees are kept
    Mat ker = dim(n) > 0 ? kernel_basis(d(n)) : Mat(0, 0, f_);
    for (const auto& [m, dm] : dim_)
        if (m < n)
            r.set_dim(m, dm);
    if (ker.cols() > 0)
        r.set_dim(n, ker.cols());
    for (const auto& [m, dm] : d_)
        if (m + 1 < n)
            r.set_d(m, dm);
    if (ker.cols() > 0 && dim(n - 1) > 0) {
        // express d^{n-1} in kernel coordinates
        Mat dn(ker.cols(), dim(n - 1), f_);
        for (int j = 0; j < dim(n - 1); ++j) {
            auto x = solve(ker, d(n - 1).col(j));
            if (!x)
                throw Error("internal: image of d not inside kernel");
            dn.set_col(j, *x);
        }
        if (!dn.is_zero())
            r.set_d(n - 1, dn);
    }
    return r;
}

Complex Complex::direct_sum(const Complex& o) const
{
    if (f_ != o.f_)
        throw FieldMismatch();
    Complex r(f_);
    std::map<int, int> rd;
    for (const auto& [n, dn] : dim_)
        rd[n] += dn;
    for (const auto& [n, dn] : o.dim_)
        rd[n] += dn;
    for (const auto& [n, dn] : rd)
        r.set_dim(n, dn);
    for (const auto& [n, dn] : rd) {
        if (rd.find(n + 1) == rd.end())
            continue;
        Mat dm(rd[n + 1], dn, f_);
        Mat da = d(n), db = o.d(n);
        for (const auto& [ij, v] : da.entries())
            dm.set(ij.first, ij.second, v);
        for (const auto& [ij, v] : db.entries())
            dm.set(ij.first + dim(n + 1), ij.second + dim(n), v);
        if (!dm.is_zero())
            r.set_d(n, dm);
    }
    return r;
}

std::optional<std::map<int, Mat>> Complex::contracting_homotopy() const
{
    // unknowns: entries of h^n : C^n -> C^{n-1}; equations: d h + h d = id
    LinearSystem sys(f_);
    std::map<int, int> hbase;  // degree -> first variable index
    for (const auto& [n, dn] : dim_)
        if (dim(n - 1) > 0)
            hbase[n] = sys.new_vars(dim(n - 1) * dn);
    auto hvar = [&](int n, int i, int j) { return hbase.at(n) + i * dim(n) + j; };

    for (const auto& [n, dn] : dim_) {
        Mat dn1 = d(n - 1);  // C^{n-1} -> C^n
        Mat dnn = d(n);      // C^n -> C^{n+1}
        for (int i = 0; i < dn; ++i)
            for (int j = 0; j < dn; ++j) {
                int eq = sys.new_eq(i == j ? Scalar::one(f_) : Scalar::zero(f_));
                // (d^{n-1} h^n)_{ij}
                if (dim(n - 1) > 0)
                    for (int k = 0; k < dim(n - 1); ++k) {
                        Scalar c = dn1.at(i, k);
                        if (!c.is_zero())
                            sys.add_term(eq, hvar(n, k, j), c);
                    }
                // (h^{n+1} d^n)_{ij}
                if (dim(n + 1) > 0)
                    for (int k = 0; k < dim(n + 1); ++k) {
                        Scalar c = dnn.at(k, j);
                        if (!c.is_zero())
                            sys.add_term(eq, hvar(n + 1, i, k), c);
                    }
            }
    }
    auto sol = sys.solve();
    if (!sol)
        return std::nullopt;
    std::map<int, Mat> h;
    for (const auto& [n, base] : hbase) {
        Mat m(dim(n - 1), dim(n), f_);
        for (int i = 0; i < dim(n - 1); ++i)
            for (int j = 0; j < dim(n); ++j)
                m.set(i, j, (*sol)[base + i * dim(n) + j]);
        h[n] = m;
    }
    return h;
}

Complex Complex::conjugate(const std::map<int, Mat>& p, const std::map<int, Mat>& pinv) const
{
    Complex r = *this;
    for (const auto& [n, dn] : dim_) {
        (void)dn;
        if (dim(n + 1) == 0)
            continue;
        Mat m = p.at(n + 1) * d(n) * pinv.at(n);
        r.set_d(n, m);
    }
    return r;
}

bool Complex::deq(const Complex& o) const
{
    for (const auto& [n, dn] : dim_) {
        (void)dn;
        if (d(n) != o.d(n))
            return false;
    }
    return true;
}

std::string Complex::str() const
{
    std::ostringstream os;
    bool first = true;
    for (const auto& [n, dn] : dim_) {
        os << (first ? "" : " ") << n << ":" << dn;
        first = false;
    }
    return dim_.empty() ? "0" : os.str();
}

ChainMap ChainMap::identity(const Complex& c)
{
    ChainMap f(c, c);
    for (const auto& [n, dn] : c.dims())
        f.set_component(n, Mat::identity(dn, c.field()));
    return f;
}

Mat ChainMap::component(int n) const
{
    auto it = comp_.find(n);
    if (it != comp_.end())
        return it->second;
    return Mat(tgt_.dim(n), src_.dim(n), src_.field());
}

void ChainMap::set_component(int n, const Mat& m)
{
    if (m.rows() != tgt_.dim(n) || m.cols() != src_.dim(n))
        throw Error("chain map component shape mismatch at degree " + std::to_string(n));
    if (m.is_zero())
        comp_.erase(n);
    else
        comp_[n] = m;
}

std::vector<std::string> ChainMap::validate() const
{
    std::vector<std::string> bad;
    if (src_.field() != tgt_.field())
        bad.push_back("source/target field mismatch");
    for (const auto& [n, dn] : src_.dims()) {
        (void)dn;
        Mat lhs = tgt_.d(n) * component(n);
        Mat rhs = component(n + 1) * src_.d(n);
        if (lhs != rhs)
            bad.push_back("does not commute with d at degree " + std::to_string(n));
    }
    return bad;
}

Complex cone(const ChainMap& f)
{
    if (f.source().field() != f.target().field())
        throw FieldMismatch();
    const Complex& x = f.source();
    const Complex& y = f.target();
    Field k = x.field();
    Complex r(k);
    std::map<int, int> rd;
    for (const auto& [n, dn] : y.dims())
        rd[n] += dn;
    for (const auto& [n, dn] : x.dims())
        rd[n - 1] += dn;
    for (const auto& [n, dn] : rd)
        r.set_dim(n, dn);
    for (const auto& [n, dn] : rd) {
        if (rd.find(n + 1) == rd.end())
            continue;
        Mat dm(rd[n + 1], dn, k);
        Mat dy = y.d(n), fc = f.component(n + 1), dx = x.d(n + 1);
        for (const auto& [ij, v] : dy.entries())
            dm.set(ij.first, ij.second, v);
        for (const auto& [ij, v] : fc.entries())
            dm.set(ij.first, y.dim(n) + ij.second, v);
        for (const auto& [ij, v] : dx.entries())
            dm.set(y.dim(n + 1) + ij.first, y.dim(n) + ij.second, -v);
        if (!dm.is_zero())
            r.set_d(n, dm);
    }
    return r;
}

}  // namespace dgc
