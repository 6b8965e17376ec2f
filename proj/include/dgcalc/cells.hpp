#ifndef DGCALC_CELLS_HPP
#define DGCALC_CELLS_HPP

#include "dgcalc/presentation.hpp"

namespace dgc {
namespace cells {

/* The generating cells of the three Quillen model structures on dgcat,
 * tabulated. Free cells (K, K(n), the contraction cell) are cut to a
 * degree window and word-length cap; the finite ones are exact.
 *
 * Objects carry the traditional numeric labels: K = {1,2}, the point = {3},
 * the discrete pair = {4,5}, disk pair = {6,7}, sphere pair = {8,9}. */

DgCategory empty_category(Field k);
DgCategory point(Field k);                       // one object, End = k
DgCategory discrete_pair(Field k);               // two objects, End = k, no cross homs
DgCategory sphere_pair(Field k, int n);          // Hom(8,9) = k in degree n-1
DgCategory disk_pair(Field k, int n);            // Hom(6,7) = contractible 2-term complex
DgCategory idempotent_cell(Field k);             // End = span{1,e}, e^2 = e, d = 0
DgCategory matrix_category(Field k, int n);      // n objects, all Homs = k, composition = product

Presentation he_presentation(Field k, int n);    // the homotopy-equivalence cell K(n)
CompiledCategory he_cell(Field k, int n, Window w, int cap,
                         CutStyle style = CutStyle::plain);
inline CompiledCategory he_cell(Field k, Window w, int cap,
                                CutStyle style = CutStyle::plain)
{
    return he_cell(k, 0, w, cap, style);
}

/* Strict finite model of K(n): the full dg subcategory of complexes on
 * {k, k[shifted]}, where f, g are inverse up to nothing (they compose to
 * the identities on the nose and the contraction data is zero). Exactly
 * valid, quasi-equiconically equivalent to the free cell, and the model
 * the rest of the library consumes. */
DgCategory he_model(Field k, int n = 0);

Presentation contraction_presentation(Field k);  // one object, h with dh = 1
CompiledCategory contraction_cell(Field k, Window w);

/* free twist cell on k_0..k_n: generators q_{ij} : j -> i (j < i) of degree
 * k_i - k_j + 1 with the Maurer-Cartan differential; finite and exact */
CompiledCategory twist_cell(Field k, const std::vector<int>& shifts);

Presentation arrow_presentation(Field k);        // path algebra of 1 -> 2, arrow in degree 0
CompiledCategory arrow_category(Field k);

/* cell dg functors */
DgFunctor empty_to_point(CatPtr empty, CatPtr pt);                    // Q
DgFunctor point_to_he(CatPtr pt, CatPtr he);                          // F, F(n)
DgFunctor pair_to_disk(CatPtr pair, CatPtr disk);                     // R(n)
DgFunctor sphere_to_disk(CatPtr sph, CatPtr disk, int n);             // S(n)
DgFunctor empty_to_contraction(CatPtr empty, CatPtr contr);           // C

}  // namespace cells
}  // namespace dgc

#endif
