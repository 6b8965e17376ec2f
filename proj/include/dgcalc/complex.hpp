#ifndef DGCALC_COMPLEX_HPP
#define DGCALC_COMPLEX_HPP

#include <map>
#include <optional>
#include <vector>

#include "dgcalc/linalg.hpp"

namespace dgc {

class ChainMap;

/* Finitely supported cohomological complex: d raises degree by 1.
 *
 * Degree/shift conventions used throughout the library:
 *   - shift(C, s)^n = C^{n+s}, with (-1)^s folded into d;
 *   - sphere(m) = the field in degree m;
 *   - cone(f : X -> Y) = Y ⊕ X[1] in each degree, i.e. cone^n = Y^n ⊕ X^{n+1},
 *     with differential [[d_Y, f],[0, -d_X]]  (Y-part first);
 *   - disk(n) = cone(id_sphere(n-1)), supported in degrees n-2 and n-1.
 */
class Complex {
  public:
    explicit Complex(Field f = Field{0}) : f_(f) {}

    static Complex zero(Field f) { return Complex(f); }
    static Complex sphere(Field f, int deg);      // k in one degree
    static Complex disk(Field f, int n);          // contractible two-term complex

    Field field() const { return f_; }
    int dim(int n) const;
    const std::map<int, int>& dims() const { return dim_; }
    void set_dim(int n, int d);
    Mat d(int n) const;                           // always correctly shaped
    void set_d(int n, const Mat& m);

    bool is_empty() const { return dim_.empty(); }
    int lowest_degree() const;
    int highest_degree() const;
    int total_dim() const;
    long euler_characteristic() const;

    std::vector<std::string> validate() const;    // violations, empty iff valid

    struct Cohomology {
        int dim = 0;
        std::vector<Vec> reps;                    // cocycle representatives in C^n
    };
    Cohomology cohomology(int n) const;
    bool is_acyclic() const;

    Complex shift(int s) const;
    Complex tensor(const Complex& o) const;       // Koszul signs
    Complex truncate_ge(int n) const;             // soft truncation
    Complex truncate_le(int n) const;
    Complex direct_sum(const Complex& o) const;

    /* degree -1 maps h with dh + hd = id, when the complex is acyclic */
    std::optional<std::map<int, Mat>> contracting_homotopy() const;

    /* conjugate by degreewise invertible maps p: d' = p_{n+1} d p_n^{-1};
     * used by basis-invariance tests */
    Complex conjugate(const std::map<int, Mat>& p, const std::map<int, Mat>& pinv) const;

    bool operator==(const Complex& o) const { return dim_ == o.dim_ && deq(o); }
    bool operator!=(const Complex& o) const { return !(*this == o); }

    std::string str() const;

  private:
    Field f_;
    std::map<int, int> dim_;
    std::map<int, Mat> d_;

    bool deq(const Complex& o) const;
};

/* degree-0 morphism of complexes */
class ChainMap {
  public:
    ChainMap(Complex src, Complex tgt) : src_(std::move(src)), tgt_(std::move(tgt)) {}

    static ChainMap zero(const Complex& src, const Complex& tgt) { return ChainMap(src, tgt); }
    static ChainMap identity(const Complex& c);

    const Complex& source() const { return src_; }
    const Complex& target() const { return tgt_; }
    Mat component(int n) const;
    void set_component(int n, const Mat& m);

    std::vector<std::string> validate() const;

  private:
    Complex src_, tgt_;
    std::map<int, Mat> comp_;
};

Complex cone(const ChainMap& f);

/* tensor-basis bookkeeping: index of basis vector x_i ⊗ y_j of (C⊗D)^n,
 * where i runs over C^p, j over D^q, p+q = n, listed by ascending p */
int tensor_index(const Complex& c, const Complex& d, int p, int i, int q, int j);

}  // namespace dgc

#endif
