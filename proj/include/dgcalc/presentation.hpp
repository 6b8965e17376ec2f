#ifndef DGCALC_PRESENTATION_HPP
#define DGCALC_PRESENTATION_HPP

#include "dgcalc/dgcat.hpp"

namespace dgc {

struct Window {
    int lo, hi;
    bool contains(int n) const { return lo <= n && n <= hi; }
};

/* Graded quiver with differential on generators and homogeneous linear
 * relations. Compiles to a tabulated dg category within a degree window.
 *
 * Paths are stored in application order: {a, b, c} means c∘b∘a. An empty
 * path is the identity of `obj`. */
struct Presentation {
    Field field{0};
    std::vector<std::string> objects;

    struct Arrow {
        std::string name;
        int src, tgt, deg;
    };
    std::vector<Arrow> arrows;

    struct Term {
        Scalar coeff;
        std::vector<int> path;  // arrow indices, application order
        int obj = -1;           // endpoint object when path is empty
    };
    using Combo = std::vector<Term>;

    std::map<int, Combo> diff;     // arrow index -> d(arrow)
    std::vector<Combo> relations;  // homogeneous, set to zero

    int add_object(const std::string& label);
    int add_arrow(const std::string& name, const std::string& src, const std::string& tgt,
                  int deg);
    int arrow_index(const std::string& name) const;  // -1 if absent

    /* path endpoints/degree; throws on non-composable paths */
    int path_src(const std::vector<int>& p, int obj) const;
    int path_tgt(const std::vector<int>& p, int obj) const;
    int path_deg(const std::vector<int>& p) const;

    std::vector<std::string> check() const;  // homogeneity + composability diagnostics
};

/* Cut tabulation: basis = composable words with degree in the window and
 * length <= cap, reduced modulo the window-local two-sided relation span.
 * The result is marked complete when a degree or acyclicity bound proves
 * that no longer word can land in the window.
 *
 * Incomplete tabulations admit two cut styles:
 *   - plain: drop everything past the cut. d∘d = 0 still holds on the
 *     table, but Leibniz/associativity can fail for triples that cross
 *     the cut horizon; cohomology is reliable away from the window floor.
 *   - ideal: additionally quotient by the dg ideal the cut generates
 *     (killer relations). Every axiom holds exactly, at the price of
 *     collapsing homotopy classes that only close up past the horizon. */
enum class CutStyle { plain, ideal };
struct CompiledCategory {
    DgCategory cat;
    /* for each (x, y, deg): the reduced basis words, application order */
    std::map<std::tuple<int, int, int>, std::vector<std::vector<int>>> words;
    /* generator images: arrow index -> (x, y, deg, coords) */
    struct GenImage {
        int x, y, deg;
        Vec coords;
    };
    std::vector<GenImage> gen;
};

CompiledCategory compile(const Presentation& p, Window w, int cap,
                        CutStyle style = CutStyle::ideal);

/* true when every composable word has length <= cap or degree outside w */
bool tabulation_complete(const Presentation& p, Window w, int cap);

}  // namespace dgc

#endif
