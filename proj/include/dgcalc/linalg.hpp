#ifndef DGCALC_LINALG_HPP
#define DGCALC_LINALG_HPP

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "dgcalc/scalar.hpp"

namespace dgc {

using Vec = std::vector<Scalar>;

Vec zero_vec(int n, Field f);
Vec unit_vec(int n, int i, Field f);
bool is_zero_vec(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Scalar& c, const Vec& v);
Vec neg(const Vec& v);

/* Sparse matrix over an exact field, coordinate storage in column-major maps.
 * Rows/cols may be zero; the zero-by-zero matrix is a first-class value. */
class Mat {
  public:
    Mat() : rows_(0), cols_(0), field_{0} {}
    Mat(int rows, int cols, Field f) : rows_(rows), cols_(cols), field_(f) {}

    static Mat identity(int n, Field f);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Field field() const { return field_; }

    Scalar at(int i, int j) const;
    void set(int i, int j, const Scalar& v);
    void add_to(int i, int j, const Scalar& v) { set(i, j, at(i, j) + v); }

    const std::map<std::pair<int, int>, Scalar>& entries() const { return a_; }
    bool is_zero() const { return a_.empty(); }

    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat operator*(const Mat& o) const;
    Mat operator-() const;
    Mat scaled(const Scalar& c) const;
    Mat transpose() const;
    bool operator==(const Mat& o) const;
    bool operator!=(const Mat& o) const { return !(*this == o); }

    Vec apply(const Vec& x) const;        // M x
    Vec col(int j) const;
    void set_col(int j, const Vec& v);

    /* block assembly; sizes must agree */
    static Mat hcat(const Mat& a, const Mat& b);
    static Mat vcat(const Mat& a, const Mat& b);

    std::string str() const;

  private:
    int rows_, cols_;
    Field field_;
    std::map<std::pair<int, int>, Scalar> a_;
};

/* Row echelon data computed by exact Gaussian elimination with the
 * deterministic pivot rule: scan columns left to right, take the first
 * (smallest-index) row with a nonzero entry; pivots normalized to 1.
 * Reproducible representatives everywhere downstream depend on this. */
struct Echelon {
    Mat rref;                    // reduced row echelon form
    std::vector<int> pivot_col;  // one per pivot row
    int rank = 0;
};

Echelon echelon(const Mat& m);
int rank(const Mat& m);

/* one solution of M x = b, if any */
std::optional<Vec> solve(const Mat& m, const Vec& b);

/* columns form a basis of ker M (deterministic order by free column index) */
Mat kernel_basis(const Mat& m);

/* basis of the column space, as column indices of m picked by the pivot rule */
std::vector<int> column_space_pivots(const Mat& m);

/* Quotient V/W given spanning sets: returns representatives among the columns
 * of `space` that complete a basis of the span of `sub` inside span(space).
 * Requires span(sub) ⊆ span(space). */
struct QuotientBasis {
    int dim = 0;
    std::vector<Vec> reps;
};
QuotientBasis quotient_basis(const Mat& space, const Mat& sub);

/* membership of b in the column space */
bool in_span(const Mat& m, const Vec& b);

/* Incremental exact linear system A x = rhs over one field.
 * Variables and equations are created on the fly; solve() returns any
 * solution (deterministic: free variables set to 0). */
class LinearSystem {
  public:
    explicit LinearSystem(Field f) : field_(f) {}

    int new_var() { return nvars_++; }
    int new_vars(int n) { int b = nvars_; nvars_ += n; return b; }
    int num_vars() const { return nvars_; }

    int new_eq(const Scalar& rhs);
    void add_term(int eq, int var, const Scalar& coeff);

    std::optional<Vec> solve() const;

  private:
    Field field_;
    int nvars_ = 0;
    std::vector<std::map<int, Scalar>> rows_;
    std::vector<Scalar> rhs_;
};

}  // namespace dgc

#endif
