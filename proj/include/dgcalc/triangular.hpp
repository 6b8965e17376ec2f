#ifndef DGCALC_TRIANGULAR_HPP
#define DGCALC_TRIANGULAR_HPP

#include "dgcalc/dgcat.hpp"

namespace dgc {

/* Upper-triangular data (A, C, X): X(a, c) is a complex of morphisms
 * a -> c together with a left C-action (post-composition) and a right
 * A-action (pre-composition). Action tables are shaped like composition
 * tables of the totalization. */
struct UpperTriangularData {
    CatPtr a, c;
    std::map<std::pair<int, int>, Complex> x;  // (a_obj, c_obj) -> Complex

    /* left: hom_C(c1,c2)^pg ⊗ X(a1,c1)^pf -> X(a1,c2)^{pg+pf}; key (a1,c1,c2,pg,pf) */
    std::map<std::tuple<int, int, int, int, int>, Mat> lact;
    /* right: X(a2,c1)^pg ⊗ hom_A(a1,a2)^pf -> X(a1,c1)^{pg+pf}; key (a1,a2,c1,pg,pf) */
    std::map<std::tuple<int, int, int, int, int>, Mat> ract;

    const Complex& x_at(int ai, int ci) const;
};

/* X(a,c) := Hom_B(a,c) with composition as the actions */
UpperTriangularData identity_bimodule(CatPtr b);

/* zero bimodule */
UpperTriangularData zero_bimodule(CatPtr a, CatPtr c);

struct Totalization {
    CatPtr total;        // objects of A then objects of C
    CatPtr a0, c0;       // A resp. C with a strict zero object available
    DgFunctor i_a;       // A  -> total
    DgFunctor i_c;       // C  -> total
    DgFunctor p;         // total -> c0 : kills A
    DgFunctor r;         // total -> a0 : kills C
};

Totalization totalize(const UpperTriangularData& t);

/* index of a strict zero object (empty Homs to and from), or -1 */
int find_zero_object(const DgCategory& c);

}  // namespace dgc

#endif
