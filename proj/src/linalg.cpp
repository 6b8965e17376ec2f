#include "dgcalc/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace dgc {

Vec zero_vec(int n, Field f)
{
    return Vec(n, Scalar::zero(f));
}

Vec unit_vec(int n, int i, Field f)
{
    Vec v = zero_vec(n, f);
    v[i] = Scalar::one(f);
    return v;
}

bool is_zero_vec(const Vec& v)
{
    for (const auto& x : v)
        if (!x.is_zero())
            return false;
    return true;
}

Vec add(const Vec& a, const Vec& b)
{
    Vec r = a;
    for (size_t i = 0; i < r.size(); ++i)
        r[i] += b[i];
    return r;
}

Vec sub(const Vec& a, const Vec& b)
{
    Vec r = a;
    for (size_t i = 0; i < r.size(); ++i)
        r[i] -= b[i];
    return r;
}

Vec scale(const Scalar& c, const Vec& v)
{
    Vec r = v;
    for (auto& x : r)
        x *= c;
    return r;
}

Vec neg(const Vec& v)
{
    Vec r = v;
    for (auto& x : r)
        x = -x;
    return r;
}

Mat Mat::identity(int n, Field f)
{
    Mat m(n, n, f);
    for (int i = 0; i < n; ++i)
        m.set(i, i, Scalar::one(f));
    return m;
}

Scalar Mat::at(int i, int j) const
{
    auto it = a_.find({i, j});
    return it == a_.end() ? Scalar::zero(field_) : it->second;
}

void Mat::set(int i, int j, const Scalar& v)
{
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
        throw Error("matrix index out of range");
    if (v.is_zero())
        a_.erase({i, j});
    else
        a_[{i, j}] = v;
}

Mat Mat::operator+(const Mat& o) const
{
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw Error("matrix shape mismatch in +");
    Mat r = *this;
    for (const auto& [ij, v] : o.a_)
        r.set(ij.first, ij.second, r.at(ij.first, ij.second) + v);
    return r;
}

Mat Mat::operator-(const Mat& o) const
{
    return *this + (-o);
}

Mat Mat::operator-() const
{
    Mat r(rows_, cols_, field_);
    for (const auto& [ij, v] : a_)
        r.a_[ij] = -v;
    return r;
}

Mat Mat::scaled(const Scalar& c) const
{
    Mat r(rows_, cols_, field_);
    if (c.is_zero())
        return r;
    for (const auto& [ij, v] : a_) {
        Scalar w = c * v;
        if (!w.is_zero())
            r.a_[ij] = w;
    }
    return r;
}

Mat Mat::operator*(const Mat& o) const
{
    if (cols_ != o.rows_)
        throw Error("matrix shape mismatch in *");
    Mat r(rows_, o.cols_, field_);
    // (i,k) * (k,j): iterate over nonzeros of both
    for (const auto& [ik, v] : a_)
        for (int j = 0; j < o.cols_; ++j) {
            Scalar w = o.at(ik.second, j);
            if (!w.is_zero())
                r.set(ik.first, j, r.at(ik.first, j) + v * w);
        }
    return r;
}

Mat Mat::transpose() const
{
    Mat r(cols_, rows_, field_);
    for (const auto& [ij, v] : a_)
        r.a_[{ij.second, ij.first}] = v;
    return r;
}

bool Mat::operator==(const Mat& o) const
{
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

Vec Mat::apply(const Vec& x) const
{
    if ((int)x.size() != cols_)
        throw Error("matrix/vector size mismatch");
    Vec r = zero_vec(rows_, field_);
    for (const auto& [ij, v] : a_)
        r[ij.first] += v * x[ij.second];
    return r;
}

Vec Mat::col(int j) const
{
    Vec r = zero_vec(rows_, field_);
    for (const auto& [ij, v] : a_)
        if (ij.second == j)
            r[ij.first] = v;
    return r;
}

void Mat::set_col(int j, const Vec& v)
{
    for (int i = 0; i < rows_; ++i)
        set(i, j, v[i]);
}

Mat Mat::hcat(const Mat& a, const Mat& b)
{
    if (a.rows() != b.rows())
        throw Error("hcat row mismatch");
    Mat r(a.rows(), a.cols() + b.cols(), a.field());
    for (const auto& [ij, v] : a.entries())
        r.a_[ij] = v;
    for (const auto& [ij, v] : b.entries())
        r.a_[{ij.first, ij.second + a.cols()}] = v;
    return r;
}

Mat Mat::vcat(const Mat& a, const Mat& b)
{
    if (a.cols() != b.cols())
        throw Error("vcat col mismatch");
    Mat r(a.rows() + b.rows(), a.cols(), a.field());
    for (const auto& [ij, v] : a.entries())
        r.a_[ij] = v;
    for (const auto& [ij, v] : b.entries())
        r.a_[{ij.first + a.rows(), ij.second}] = v;
    return r;
}

std::string Mat::str() const
{
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        os << (i ? "\n[" : "[");
        for (int j = 0; j < cols_; ++j)
            os << (j ? " " : "") << at(i, j).str();
        os << "]";
    }
    return os.str();
}

namespace {

/* dense worktable for elimination; fine at desk scale */
struct Work {
    int rows, cols;
    Field f;
    std::vector<Vec> r;

    explicit Work(const Mat& m) : rows(m.rows()), cols(m.cols()), f(m.field())
    {
        r.assign(rows, zero_vec(cols, f));
        for (const auto& [ij, v] : m.entries())
            r[ij.first][ij.second] = v;
    }
};

}  // namespace

Echelon echelon(const Mat& m)
{
    Work w(m);
    Echelon e;
    e.rref = Mat(m.rows(), m.cols(), m.field());
    int row = 0;
    for (int col = 0; col < w.cols && row < w.rows; ++col) {
        int piv = -1;
        for (int i = row; i < w.rows; ++i)
            if (!w.r[i][col].is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0)
            continue;
        std::swap(w.r[row], w.r[piv]);
        Scalar inv = w.r[row][col].inverse();
        for (int j = col; j < w.cols; ++j)
            w.r[row][j] *= inv;
        for (int i = 0; i < w.rows; ++i) {
            if (i == row || w.r[i][col].is_zero())
                continue;
            Scalar c = w.r[i][col];
            for (int j = col; j < w.cols; ++j)
                w.r[i][j] -= c * w.r[row][j];
        }
        e.pivot_col.push_back(col);
        ++row;
    }
    e.rank = row;
    for (int i = 0; i < w.rows; ++i)
        for (int j = 0; j < w.cols; ++j)
            if (!w.r[i][j].is_zero())
                e.rref.set(i, j, w.r[i][j]);
    return e;
}

int rank(const Mat& m)
{
    if (m.entries().empty())
        return 0;
    return echelon(m).rank;
}

std::optional<Vec> solve(const Mat& m, const Vec& b)
{
    Mat aug(m.rows(), m.cols() + 1, m.field());
    for (const auto& [ij, v] : m.entries())
        aug.set(ij.first, ij.second, v);
    for (int i = 0; i < m.rows(); ++i)
        aug.set(i, m.cols(), b[i]);
    Echelon e = echelon(aug);
    // inconsistent iff a pivot lands in the rhs column
    for (int c : e.pivot_col)
        if (c == m.cols())
            return std::nullopt;
    Vec x = zero_vec(m.cols(), m.field());
    for (int i = 0; i < (int)e.pivot_col.size(); ++i)
        x[e.pivot_col[i]] = e.rref.at(i, m.cols());
    return x;
}

Mat kernel_basis(const Mat& m)
{
    Echelon e = echelon(m);
    std::vector<bool> is_piv(m.cols(), false);
    for (int c : e.pivot_col)
        is_piv[c] = true;
    std::vector<int> free_cols;
    for (int j = 0; j < m.cols(); ++j)
        if (!is_piv[j])
            free_cols.push_back(j);
    Mat k(m.cols(), (int)free_cols.size(), m.field());
    for (int t = 0; t < (int)free_cols.size(); ++t) {
        int fc = free_cols[t];
        k.set(fc, t, Scalar::one(m.field()));
        for (int i = 0; i < (int)e.pivot_col.size(); ++i) {
            Scalar v = e.rref.at(i, fc);
            if (!v.is_zero())
                k.set(e.pivot_col[i], t, -v);
        }
    }
    return k;
}

std::vector<int> column_space_pivots(const Mat& m)
{
    return echelon(m).pivot_col;
}

bool in_span(const Mat& m, const Vec& b)
{
    return solve(m, b).has_value();
}

namespace {

/* incremental echelon accumulator: reduce(v) returns the residue of v
 * against the rows absorbed so far; absorb(v) adds it if independent. */
struct Reducer {
    Field f;
    std::vector<Vec> rows;       // reduced, pivot normalized to 1
    std::vector<int> pivots;     // pivot index per row

    explicit Reducer(Field f) : f(f) {}

    Vec reduce(Vec v) const
    {
        for (size_t i = 0; i < rows.size(); ++i) {
            const Scalar& c = v[pivots[i]];
            if (c.is_zero())
                continue;
            Scalar cc = c;
            for (size_t j = 0; j < v.size(); ++j)
                v[j] -= cc * rows[i][j];
        }
        return v;
    }

    bool absorb(const Vec& v)
    {
        Vec r = reduce(v);
        int p = -1;
        for (size_t j = 0; j < r.size(); ++j)
            if (!r[j].is_zero()) {
                p = (int)j;
                break;
            }
        if (p < 0)
            return false;
        Scalar inv = r[p].inverse();
        for (auto& x : r)
            x *= inv;
        rows.push_back(r);
        pivots.push_back(p);
        return true;
    }
};

}  // namespace

QuotientBasis quotient_basis(const Mat& space, const Mat& sub)
{
    // absorb the subspace first, then columns of `space` that still
    // increase the rank; those columns are the representatives.
    QuotientBasis q;
    Reducer red(space.field());
    for (int j = 0; j < sub.cols(); ++j)
        red.absorb(sub.col(j));
    for (int j = 0; j < space.cols(); ++j) {
        Vec c = space.col(j);
        if (red.absorb(c))
            q.reps.push_back(c);
    }
    q.dim = (int)q.reps.size();
    return q;
}

int LinearSystem::new_eq(const Scalar& rhs)
{
    rows_.emplace_back();
    rhs_.push_back(rhs);
    return (int)rows_.size() - 1;
}

void LinearSystem::add_term(int eq, int var, const Scalar& coeff)
{
    if (coeff.is_zero())
        return;
    auto& row = rows_[eq];
    auto it = row.find(var);
    if (it == row.end())
        row[var] = coeff;
    else {
        it->second += coeff;
        if (it->second.is_zero())
            row.erase(it);
    }
}

std::optional<Vec> LinearSystem::solve() const
{
    Mat m((int)rows_.size(), nvars_, field_);
    Vec b = zero_vec((int)rows_.size(), field_);
    for (int i = 0; i < (int)rows_.size(); ++i) {
        for (const auto& [v, c] : rows_[i])
            m.set(i, v, c);
        b[i] = rhs_[i];
    }
    return dgc::solve(m, b);
}

}  // namespace dgc
