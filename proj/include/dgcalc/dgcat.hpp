#ifndef DGCALC_DGCAT_HPP
#define DGCALC_DGCAT_HPP

#include <map>
#include <memory>
#include <string>
#include <tuple>
#include <vector>

#include "dgcalc/complex.hpp"

namespace dgc {

/* How a tabulated category relates to the (possibly infinite) category it
 * came from. `complete` means a proving bound certifies that no basis
 * element inside the window was dropped by the word-length cap. */
struct TabulationInfo {
    bool windowed = false;
    int lo = 0, hi = 0;
    bool cap_truncated = false;
    bool complete = true;
};

struct Report {
    std::vector<std::string> violations;
    long checks = 0;
    bool ok() const { return violations.empty(); }
    std::string str() const;
};

/* Tabulated finite dg category: finite object set, finitely supported
 * based Hom complexes, composition given degreewise by structure
 * constants. Immutable in spirit: build once, then share via CatPtr. */
class DgCategory {
  public:
    explicit DgCategory(Field f = Field{0}) : field_(f) {}

    Field field() const { return field_; }

    int add_object(const std::string& label);
    int num_objects() const { return (int)objects_.size(); }
    const std::string& label(int x) const { return objects_[x]; }
    const std::vector<std::string>& objects() const { return objects_; }
    int object_index(const std::string& label) const;  // -1 if absent

    const Complex& hom(int x, int y) const;
    void set_hom(int x, int y, Complex c);
    int hom_dim(int x, int y, int deg) const { return hom(x, y).dim(deg); }

    /* structure constants of composition hom(y,z)^pg ⊗ hom(x,y)^pf -> hom(x,z)^{pg+pf};
     * shape: rows = dim hom(x,z)^{pg+pf}, cols = dim_g * dim_f, col = gi*dim_f + fj */
    Mat comp_table(int x, int y, int z, int pg, int pf) const;
    void set_comp_entry(int x, int y, int z, int pg, int pf,
                        int out_idx, int gi, int fj, const Scalar& c);
    void set_comp_table(int x, int y, int z, int pg, int pf, const Mat& m);

    const Vec& unit(int x) const { return units_[x]; }
    void set_unit(int x, Vec u);

    /* g ∈ hom(y,z)^pg, f ∈ hom(x,y)^pf  ->  g∘f ∈ hom(x,z)^{pg+pf} */
    Vec compose(int x, int y, int z, int pg, const Vec& g, int pf, const Vec& f) const;
    Vec d_of(int x, int y, int deg, const Vec& v) const;

    TabulationInfo info;

    /* full axiom suite: d²=0, Leibniz, associativity, units, d(1)=0 */
    Report validate() const;

    std::string str() const;

  private:
    Field field_;
    std::vector<std::string> objects_;
    std::map<std::string, int> index_;
    std::map<std::pair<int, int>, Complex> hom_;
    std::map<std::tuple<int, int, int, int, int>, Mat> comp_;
    std::vector<Vec> units_;
    Complex empty_hom_;  // shared zero complex

    /* per-column view of comp tables, built lazily; column = gi*dim_f + fj */
    using ColView = std::vector<std::vector<std::pair<int, Scalar>>>;
    mutable std::map<std::tuple<int, int, int, int, int>, ColView> comp_cols_;
    const ColView* comp_view(int x, int y, int z, int pg, int pf) const;

    friend class DgCategoryBuilder;
};

using CatPtr = std::shared_ptr<const DgCategory>;

inline CatPtr freeze(DgCategory c) { return std::make_shared<const DgCategory>(std::move(c)); }

/* Ordinary finite k-linear category: the output of Z^0 / H^0. */
struct FiniteCategory {
    Field field;
    std::vector<std::string> objects;
    std::map<std::pair<int, int>, int> dim;               // hom dims
    std::map<std::tuple<int, int, int>, Mat> comp;        // as comp_table, degree-free
    std::vector<Vec> id;

    Vec compose(int x, int y, int z, const Vec& g, const Vec& f) const;
    std::string dimension_table() const;
};

/* z0/h0 keep, for every pair, the chosen basis vectors inside hom(x,y)^0 */
struct FiniteCatWithBases {
    FiniteCategory cat;
    std::map<std::pair<int, int>, std::vector<Vec>> basis;
};

FiniteCatWithBases z0(const DgCategory& a);
FiniteCatWithBases h0(const DgCategory& a);

DgCategory opposite(const DgCategory& a);
DgCategory tensor(const DgCategory& a, const DgCategory& b);
DgCategory disjoint_union(const DgCategory& a, const DgCategory& b);
DgCategory with_zero_object(const DgCategory& a, const std::string& label = "0");

/* object pairing helper for tensor categories */
int tensor_object(const DgCategory& a, const DgCategory& b, int xa, int xb);

/* Extensionally given dg functor. Source/target shared and immutable. */
class DgFunctor {
  public:
    DgFunctor(CatPtr src, CatPtr tgt) : src_(std::move(src)), tgt_(std::move(tgt)) {}

    static DgFunctor identity(CatPtr a);

    const DgCategory& source() const { return *src_; }
    const DgCategory& target() const { return *tgt_; }
    CatPtr source_ptr() const { return src_; }
    CatPtr target_ptr() const { return tgt_; }

    void set_object(int x, int fx);
    int on_object(int x) const { return obj_.at(x); }

    Mat component(int x, int y, int deg) const;
    void set_component(int x, int y, int deg, const Mat& m);

    Vec apply(int x, int y, int deg, const Vec& v) const;

    /* chain maps + composition/unit preservation, checked on all bases */
    Report validate() const;

    DgFunctor then(const DgFunctor& g) const;  // g ∘ this

    /* induced functor between h0 categories; returns object map and
     * morphism matrices in the chosen h0 bases */
    struct InducedFinite {
        std::vector<int> obj;
        std::map<std::pair<int, int>, Mat> mor;
    };
    InducedFinite induced_h0(const FiniteCatWithBases& hsrc, const FiniteCatWithBases& htgt) const;

  private:
    CatPtr src_, tgt_;
    std::map<int, int> obj_;
    std::map<std::tuple<int, int, int>, Mat> comp_;
};

bool same_category(const DgCategory& a, const DgCategory& b);  // pointer-free table equality

}  // namespace dgc

#endif
