#ifndef DGCALC_RANDOM_GEN_HPP
#define DGCALC_RANDOM_GEN_HPP

#include <random>

#include "dgcalc/dgcat.hpp"

namespace dgc {

struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}

    int uniform(int lo, int hi)  // inclusive
    {
        return (int)(eng() % (std::uint64_t)(hi - lo + 1)) + lo;
    }
    bool coin() { return eng() & 1; }
    Scalar scalar(Field f, int maxabs = 3)
    {
        if (f.p != 0)
            return Scalar::from_int(uniform(0, (int)f.p - 1), f);
        return Scalar::from_int(uniform(-maxabs, maxabs), f);
    }
    Scalar nonzero_scalar(Field f, int maxabs = 3)
    {
        for (;;) {
            Scalar s = scalar(f, maxabs);
            if (!s.is_zero())
                return s;
        }
    }
};

/* Bookkeeping for the complex of graded maps U -> V: degree-n basis runs
 * over blocks U^p -> V^{p+n}, matrix units listed row-major, blocks by
 * ascending p. */
struct MapBasis {
    Complex u, v;

    int dim(int n) const;
    int index(int n, int p, int r, int c) const;
    std::map<int, Mat> to_blocks(int n, const Vec& coords) const;  // p -> matrix of block p
    Vec from_blocks(int n, const std::map<int, Mat>& blocks) const;

    /* hom complex with differential D(f) = d_V f - (-1)^n f d_U */
    Complex hom_complex() const;
};

/* The dg category of the given complexes: full graded-map Hom complexes,
 * honest composition. Always a valid dg category. */
DgCategory complexes_category(Field f, const std::vector<Complex>& objs,
                              const std::vector<std::string>& labels);

Complex random_complex(Rng& rng, Field f, int lo_deg, int hi_deg, int max_total_dim);

/* random complexes category: n_objects small random complexes */
DgCategory random_complexes_category(Rng& rng, Field f, int n_objects, int lo_deg, int hi_deg,
                                     int max_total_dim);

/* random complexes category concentrated in degree 0 (semisimple-ish) */
DgCategory random_degree0_category(Rng& rng, Field f, int n_objects, int max_dim);

}  // namespace dgc

#endif
