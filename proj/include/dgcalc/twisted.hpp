#ifndef DGCALC_TWISTED_HPP
#define DGCALC_TWISTED_HPP

#include <optional>

#include "dgcalc/dgcat.hpp"

namespace dgc {

/* One-sided twisted complexes over a tabulated dg category: the objects of
 * the pre-triangulated hull. Entries are (object, shift) pairs; the twist
 * q_{ij} ∈ Hom_A(X_j, X_i) has degree r_i - r_j + 1 and vanishes for i >= j.
 *
 * Conventions (fixed so that d² = 0 holds in every Hom complex):
 *   - entry (X, r) stands for X^ placed r degrees down, matching
 *     Complex::shift: Hom((X,r),(Y,r'))^n = Hom_A(X,Y)^{n + r' - r};
 *   - the Maurer-Cartan equation reads (-1)^{r_i} d(q_ij) + (q²)_ij = 0;
 *   - the Hom differential is
 *       D(f)_ij = (-1)^{r'_i} d(f_ij) + (q_N f)_ij - (-1)^{|f|} (f q_M)_ij,
 *     and composition is plain matrix composition. */
class TwistedComplex {
  public:
    TwistedComplex() = default;
    TwistedComplex(CatPtr base, std::vector<std::pair<int, int>> entries)
        : base_(std::move(base)), entries_(std::move(entries)) {}

    static TwistedComplex yoneda(CatPtr base, int obj) { return {std::move(base), {{obj, 0}}}; }

    const DgCategory& base() const { return *base_; }
    CatPtr base_ptr() const { return base_; }
    int size() const { return (int)entries_.size(); }
    std::pair<int, int> entry(int i) const { return entries_[i]; }

    /* q entry as an element of Hom_A(X_j, X_i)^{r_i - r_j + 1}; zero if unset */
    Vec q(int i, int j) const;
    void set_q(int i, int j, Vec v);

    /* Maurer-Cartan + triangularity violations */
    std::vector<std::string> validate() const;

    TwistedComplex shifted(int n) const;
    TwistedComplex direct_sum(const TwistedComplex& o) const;

    std::string str() const;

  private:
    CatPtr base_;
    std::vector<std::pair<int, int>> entries_;
    std::map<std::pair<int, int>, Vec> q_;
};

/* graded morphism of twisted complexes: components in Hom_A(X_j, Y_i) */
struct TwMor {
    int deg = 0;
    std::map<std::pair<int, int>, Vec> comp;

    Vec at(int i, int j, const TwistedComplex& src, const TwistedComplex& tgt,
           const DgCategory& a) const;
};

/* Materialized Hom complex between twisted complexes, with the layout
 * needed to convert between flat coordinates and component matrices. */
class TwHom {
  public:
    TwHom(TwistedComplex m, TwistedComplex n);

    const Complex& cpx() const { return cpx_; }
    const TwistedComplex& source() const { return m_; }
    const TwistedComplex& target() const { return n_; }

    TwMor to_mor(int deg, const Vec& coords) const;
    Vec from_mor(const TwMor& f) const;

    Vec d_of(int deg, const Vec& coords) const { return cpx_.d(deg).apply(coords); }

    /* identity of M inside End(M) coordinates (requires m == n shape) */
    Vec identity_coords() const;

  private:
    TwistedComplex m_, n_;
    Complex cpx_;
    /* per degree: list of (i, j, basis index) giving the flat layout */
    std::map<int, std::vector<std::tuple<int, int, int>>> layout_;

    friend TwMor compose(const TwHom& gh, const TwMor& g, const TwHom& fh, const TwMor& f);
};

TwHom hom_complex(const TwistedComplex& m, const TwistedComplex& n);

/* g ∘ f for g: N -> P, f: M -> N (plain matrix composition in the base) */
TwMor compose_mor(const DgCategory& a, const TwistedComplex& m, const TwistedComplex& n,
                  const TwistedComplex& p, const TwMor& g, const TwMor& f);

/* cone over a closed degree-0 morphism: entries of N, then entries of M
 * shifted by one, with q = [[q_N, s],[0, -q_M]] */
TwistedComplex cone_of_closed(const TwMor& s, const TwistedComplex& m, const TwistedComplex& n);

struct Contraction {
    TwMor h;  // degree -1 with D(h) = id
};
std::optional<Contraction> contracting_homotopy(const TwistedComplex& m);
bool is_contractible(const TwistedComplex& m);

/* Karoubi factor: a twisted complex with a strict idempotent endomorphism */
struct IdempotentModule {
    TwistedComplex base;
    TwMor e;  // degree 0, D(e) = 0, e∘e = e
};

IdempotentModule idempotent_factor(const TwistedComplex& m, const TwMor& e);

/* Hom complex between factors: the image of f ↦ E_N ∘ f ∘ E_M, returned as
 * a complex together with the embedding into hom_complex(M, N) coordinates */
struct FactorHom {
    Complex cpx;
    std::map<int, Mat> embed;  // factor basis -> TwHom coordinates per degree
    TwHom ambient;
};
FactorHom hom_complex_factor(const IdempotentModule& m, const IdempotentModule& n);

/* The homotopy-equivalence data of a closed degree-0 morphism s: X -> Y in
 * the base category: solves dg = 0, dr1 = g∘s - 1, dr2 = s∘g - 1,
 * dr12 = s∘r1 - r2∘s. Solvable iff cone(s^) is contractible. */
struct HeqData {
    Vec g, r1, r2, r12;
};
std::optional<HeqData> homotopy_equivalence_data(const DgCategory& a, int x, int y, const Vec& s);

/* finite-arity additive hull: Hom between tuples is the block-matrix complex */
struct AdditiveTuple {
    CatPtr base;
    std::vector<int> objs;
};
Complex additive_hull_hom(const AdditiveTuple& s, const AdditiveTuple& t);

}  // namespace dgc

#endif
