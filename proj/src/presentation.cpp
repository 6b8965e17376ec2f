#include "dgcalc/presentation.hpp"

#include <algorithm>
#include <climits>
#include <functional>

namespace dgc {

int Presentation::add_object(const std::string& label)
{
    objects.push_back(label);
    return (int)objects.size() - 1;
}

int Presentation::add_arrow(const std::string& name, const std::string& src,
                            const std::string& tgt, int deg)
{
    auto find = [&](const std::string& l) {
        for (size_t i = 0; i < objects.size(); ++i)
            if (objects[i] == l)
                return (int)i;
        throw Error("unknown object: " + l);
    };
    arrows.push_back({name, find(src), find(tgt), deg});
    return (int)arrows.size() - 1;
}

int Presentation::arrow_index(const std::string& name) const
{
    for (size_t i = 0; i < arrows.size(); ++i)
        if (arrows[i].name == name)
            return (int)i;
    return -1;
}

int Presentation::path_src(const std::vector<int>& p, int obj) const
{
    if (p.empty())
        return obj;
    return arrows[p.front()].src;
}

int Presentation::path_tgt(const std::vector<int>& p, int obj) const
{
    if (p.empty())
        return obj;
    return arrows[p.back()].tgt;
}

int Presentation::path_deg(const std::vector<int>& p) const
{
    int d = 0;
    for (int a : p)
        d += arrows[a].deg;
    return d;
}

namespace {

bool composable(const Presentation& p, const std::vector<int>& path)
{
    for (size_t i = 0; i + 1 < path.size(); ++i)
        if (p.arrows[path[i]].tgt != p.arrows[path[i + 1]].src)
            return false;
    return true;
}

std::string combo_diag(const Presentation& p, const Presentation::Combo& c,
                       const std::string& what)
{
    int deg = INT_MIN, src = -1, tgt = -1;
    for (const auto& t : c) {
        if (!composable(p, t.path))
            return what + ": non-composable path";
        if (t.path.empty() && t.obj < 0)
            return what + ": identity term without object";
        int d = p.path_deg(t.path);
        int s = p.path_src(t.path, t.obj);
        int g = p.path_tgt(t.path, t.obj);
        if (deg == INT_MIN) {
            deg = d;
            src = s;
            tgt = g;
        } else if (d != deg) {
            return what + ": inhomogeneous degree";
        } else if (s != src || g != tgt) {
            return what + ": mismatched endpoints";
        }
    }
    return "";
}

}  // namespace

std::vector<std::string> Presentation::check() const
{
    std::vector<std::string> bad;
    for (const auto& [ai, combo] : diff) {
        std::string msg = combo_diag(*this, combo, "d(" + arrows[ai].name + ")");
        if (!msg.empty()) {
            bad.push_back(msg);
            continue;
        }
        for (const auto& t : combo) {
            if (path_deg(t.path) != arrows[ai].deg + 1) {
                bad.push_back("d(" + arrows[ai].name + "): degree must be |" + arrows[ai].name +
                              "|+1");
                break;
            }
            if (path_src(t.path, t.obj) != arrows[ai].src ||
                path_tgt(t.path, t.obj) != arrows[ai].tgt) {
                bad.push_back("d(" + arrows[ai].name + "): endpoints differ from the arrow");
                break;
            }
        }
    }
    for (size_t i = 0; i < relations.size(); ++i) {
        std::string msg = combo_diag(*this, relations[i], "relation " + std::to_string(i));
        if (!msg.empty())
            bad.push_back(msg);
    }
    return bad;
}

bool tabulation_complete(const Presentation& p, Window w, int cap)
{
    // bound 1: all arrows strictly negative -> words longer than cap have
    // degree <= -(cap+1); complete when that leaves the window
    bool all_neg = true;
    for (const auto& a : p.arrows)
        if (a.deg > -1)
            all_neg = false;
    if (all_neg && -(cap + 1) < w.lo)
        return true;
    // bound 2: the arrow quiver is acyclic -> longest path bounds word length
    int n = (int)p.objects.size();
    std::vector<std::vector<int>> adj(n);
    for (const auto& a : p.arrows)
        adj[a.src].push_back(a.tgt);
    // longest path in a DAG via DFS with cycle detection
    std::vector<int> state(n, 0), len(n, 0);
    bool cyclic = false;
    std::function<int(int)> dfs = [&](int v) -> int {
        if (state[v] == 1) {
            cyclic = true;
            return 0;
        }
        if (state[v] == 2)
            return len[v];
        state[v] = 1;
        int best = 0;
        for (int u : adj[v])
            best = std::max(best, 1 + dfs(u));
        state[v] = 2;
        len[v] = best;
        return best;
    };
    int longest = 0;
    for (int v = 0; v < n && !cyclic; ++v)
        longest = std::max(longest, dfs(v));
    if (!cyclic && cap >= longest)
        return true;
    return false;
}

namespace {

struct Word {
    std::vector<int> path;  // application order
    int obj;                // source object for identities
};

struct PairDeg {
    int x, y, deg;
    bool operator<(const PairDeg& o) const
    {
        return std::tie(x, y, deg) < std::tie(o.x, o.y, o.deg);
    }
};

}  // namespace

CompiledCategory compile(const Presentation& p, Window w, int cap, CutStyle style)
{
    if (w.lo > w.hi)
        throw Error("empty degree window");
    if (!w.contains(0))
        throw Error("degree window must contain 0 (units live there)");
    if (cap < 0)
        throw Error("word-length cap must be nonnegative");
    {
        auto bad = p.check();
        if (!bad.empty())
            throw Error("invalid presentation: " + bad.front());
    }
    Field k = p.field;

    // enumerate all composable words of length <= cap+1, any degree;
    // words with degree in the window and length <= cap become the table,
    // the rest generate the cut ideal
    std::map<PairDeg, std::vector<std::vector<int>>> words;   // table words
    std::map<PairDeg, std::map<std::vector<int>, int>> index;
    std::vector<std::pair<std::vector<int>, int>> cut_words;  // (path, degree), len <= cap
    std::vector<std::pair<std::vector<int>, int>> cap_words;  // len == cap+1
    long total = 0;
    auto keep = [&](int x, int y, int deg, const std::vector<int>& path) {
        PairDeg pd{x, y, deg};
        if (index[pd].count(path))
            return;
        index[pd][path] = (int)words[pd].size();
        words[pd].push_back(path);
        if (++total > 2000000)
            throw Error("word enumeration exceeds limit; shrink window or cap");
    };
    for (size_t x = 0; x < p.objects.size(); ++x)
        keep((int)x, (int)x, 0, {});
    std::vector<std::pair<std::vector<int>, int>> frontier;
    for (size_t a = 0; a < p.arrows.size(); ++a)
        frontier.push_back({{(int)a}, p.arrows[a].deg});
    for (int len = 1; len <= cap + 1 && !frontier.empty(); ++len) {
        for (const auto& [path, deg] : frontier) {
            if (len == cap + 1)
                cap_words.push_back({path, deg});
            else if (w.contains(deg))
                keep(p.arrows[path.front()].src, p.arrows[path.back()].tgt, deg, path);
            else
                cut_words.push_back({path, deg});
            if (++total > 4000000)
                throw Error("word enumeration exceeds limit; shrink window or cap");
        }
        if (len == cap + 1)
            break;
        std::vector<std::pair<std::vector<int>, int>> next;
        for (const auto& [path, deg] : frontier) {
            int tail = p.arrows[path.back()].tgt;
            for (size_t a = 0; a < p.arrows.size(); ++a)
                if (p.arrows[a].src == tail) {
                    auto np = path;
                    np.push_back((int)a);
                    next.push_back({std::move(np), deg + p.arrows[a].deg});
                }
        }
        frontier = std::move(next);
    }

    // canonical order: by length then lexicographic
    for (auto& [pd, ws] : words) {
        std::sort(ws.begin(), ws.end(), [](const auto& a, const auto& b) {
            if (a.size() != b.size())
                return a.size() < b.size();
            return a < b;
        });
        index[pd].clear();
        for (size_t i = 0; i < ws.size(); ++i)
            index[pd][ws[i]] = (int)i;
    }

    // relation span per (pair, degree): all v∘r∘u landing in the table,
    // with the cut applied term by term
    std::map<PairDeg, std::vector<Vec>> relspan;
    auto word_count = [&](PairDeg pd) {
        auto it = words.find(pd);
        return it == words.end() ? 0 : (int)it->second.size();
    };
    auto cut_coord = [&](int x, int y, int deg, const std::vector<int>& path) -> int {
        if ((int)path.size() > cap || !w.contains(deg))
            return -1;
        PairDeg pd{x, y, deg};
        auto it = index.find(pd);
        if (it == index.end())
            return -1;
        auto jt = it->second.find(path);
        return jt == it->second.end() ? -1 : jt->second;
    };
    if (!p.relations.empty()) {
        for (const auto& rel : p.relations) {
            if (rel.empty())
                continue;
            int rs = p.path_src(rel.front().path, rel.front().obj);
            int rt = p.path_tgt(rel.front().path, rel.front().obj);
            int rdeg = p.path_deg(rel.front().path);
            // pre-words u: ? -> rs, post-words v: rt -> ?
            for (const auto& [pdu, wsu] : words) {
                if (pdu.y != rs)
                    continue;
                for (const auto& [pdv, wsv] : words) {
                    if (pdv.x != rt)
                        continue;
                    int deg = pdu.deg + rdeg + pdv.deg;
                    if (!w.contains(deg))
                        continue;
                    PairDeg out{pdu.x, pdv.y, deg};
                    int n = word_count(out);
                    if (n == 0)
                        continue;
                    for (const auto& u : wsu)
                        for (const auto& v : wsv) {
                            Vec vec = zero_vec(n, k);
                            bool nz = false;
                            for (const auto& t : rel) {
                                auto path = u;
                                path.insert(path.end(), t.path.begin(), t.path.end());
                                path.insert(path.end(), v.begin(), v.end());
                                int c = cut_coord(out.x, out.y, deg, path);
                                if (c >= 0) {
                                    vec[c] += t.coeff;
                                    nz = true;
                                }
                            }
                            if (nz && !is_zero_vec(vec))
                                relspan[out].push_back(vec);
                        }
                }
            }
        }
    }

    // cut-ideal killers make the truncation an honest dg quotient.
    auto d_free_killer = [&](const std::vector<int>& path, int deg, const std::vector<int>& pre,
                             const std::vector<int>& post) {
        // table part of post∘d(path)∘pre, one relation vector per call
        int x = pre.empty() ? p.arrows[path.front()].src : p.arrows[pre.front()].src;
        int y = post.empty() ? p.arrows[path.back()].tgt : p.arrows[post.back()].tgt;
        int tdeg = p.path_deg(pre) + deg + 1 + p.path_deg(post);
        if (!w.contains(tdeg))
            return;
        PairDeg out{x, y, tdeg};
        auto wt = words.find(out);
        if (wt == words.end())
            return;
        Vec vec = zero_vec((int)wt->second.size(), k);
        bool nz = false;
        for (size_t i = 0; i < path.size(); ++i) {
            auto it = p.diff.find(path[i]);
            if (it == p.diff.end())
                continue;
            int after = 0;
            for (size_t j = i + 1; j < path.size(); ++j)
                after += p.arrows[path[j]].deg;
            after += p.path_deg(post);
            Scalar sign = (after % 2 == 0) ? Scalar::one(k) : -Scalar::one(k);
            for (const auto& t : it->second) {
                std::vector<int> np = pre;
                np.insert(np.end(), path.begin(), path.begin() + i);
                np.insert(np.end(), t.path.begin(), t.path.end());
                np.insert(np.end(), path.begin() + i + 1, path.end());
                np.insert(np.end(), post.begin(), post.end());
                int c = cut_coord(out.x, out.y, tdeg, np);
                if (c >= 0) {
                    vec[c] += sign * t.coeff;
                    nz = true;
                }
            }
        }
        if (nz && !is_zero_vec(vec))
            relspan[out].push_back(std::move(vec));
    };
    bool has_positive = false;
    for (const auto& a : p.arrows)
        if (a.deg > 0)
            has_positive = true;
    if (style == CutStyle::plain) {
        cap_words.clear();
        cut_words.clear();
    }
    // words one past the cap: their in-table differentials must die
    for (const auto& [path, deg] : cap_words)
        d_free_killer(path, deg, {}, {});
    // degree-cut words: in-table differentials die, with sandwiches when
    // positive-degree generators can pull them back into range
    for (const auto& [path, deg] : cut_words) {
        d_free_killer(path, deg, {}, {});
        if (has_positive) {
            int wsrc = p.arrows[path.front()].src;
            int wtgt = p.arrows[path.back()].tgt;
            for (const auto& [pdu, wsu] : words) {
                if (pdu.y != wsrc)
                    continue;
                for (const auto& u : wsu) {
                    if ((int)(u.size() + path.size()) > cap + 1)
                        continue;
                    for (const auto& [pdv, wsv] : words) {
                        if (pdv.x != wtgt)
                            continue;
                        for (const auto& v : wsv) {
                            if (u.empty() && v.empty())
                                continue;
                            if ((int)(u.size() + path.size() + v.size()) > cap + 1)
                                continue;
                            d_free_killer(path, deg, u, v);
                        }
                    }
                }
            }
        }
    }
    if (has_positive && style == CutStyle::ideal) {
        // table words containing a cut contiguous subword are ideal elements
        for (const auto& [pd, ws] : words) {
            for (size_t wi = 0; wi < ws.size(); ++wi) {
                const auto& path = ws[wi];
                bool dead = false;
                for (size_t i = 0; i < path.size() && !dead; ++i) {
                    int deg = 0;
                    for (size_t j = i; j < path.size() && !dead; ++j) {
                        deg += p.arrows[path[j]].deg;
                        if ((j - i + 1 < path.size()) && !w.contains(deg))
                            dead = true;
                    }
                }
                if (dead) {
                    Vec vec = zero_vec((int)ws.size(), k);
                    vec[wi] = Scalar::one(k);
                    relspan[pd].push_back(vec);
                }
            }
        }
    }

    // reduced basis per (pair, degree): words independent modulo the span;
    // `reduce` expresses arbitrary word-coordinate vectors in that basis
    struct Red {
        bool trivial = true;                     // no relations hit this slot
        std::vector<int> basis_words;            // indices into words[pd]
        Mat express;                             // [basis | span], unused when trivial
    };
    std::map<PairDeg, Red> red;
    for (const auto& [pd, ws] : words) {
        Red r;
        int n = (int)ws.size();
        auto it = relspan.find(pd);
        if (it == relspan.end() || it->second.empty()) {
            r.basis_words.resize(n);
            for (int i = 0; i < n; ++i)
                r.basis_words[i] = i;
            red[pd] = std::move(r);
            continue;
        }
        r.trivial = false;
        Mat span(n, (int)it->second.size(), k);
        for (int j = 0; j < (int)it->second.size(); ++j)
            span.set_col(j, it->second[j]);
        QuotientBasis q = quotient_basis(Mat::identity(n, k), span);
        Mat basis(n, q.dim, k);
        for (int j = 0; j < q.dim; ++j) {
            basis.set_col(j, q.reps[j]);
            for (int i = 0; i < n; ++i)
                if (q.reps[j][i].is_one()) {
                    r.basis_words.push_back(i);
                    break;
                }
        }
        r.express = Mat::hcat(basis, span);
        red[pd] = std::move(r);
    }
    auto reduce = [&](PairDeg pd, const Vec& raw) -> Vec {
        const Red& r = red.at(pd);
        if (r.trivial)
            return raw;
        Vec out = zero_vec((int)r.basis_words.size(), k);
        if (is_zero_vec(raw))
            return out;
        auto sol = solve(r.express, raw);
        if (!sol)
            throw Error("internal: word vector not reducible");
        for (size_t j = 0; j < r.basis_words.size(); ++j)
            out[j] = (*sol)[j];
        return out;
    };

    // assemble the category
    CompiledCategory out;
    out.cat = DgCategory(k);
    out.cat.info.windowed = true;
    out.cat.info.lo = w.lo;
    out.cat.info.hi = w.hi;
    out.cat.info.complete = tabulation_complete(p, w, cap);
    out.cat.info.cap_truncated = !out.cat.info.complete;
    for (const auto& o : p.objects)
        out.cat.add_object(o);

    // dims
    std::map<std::pair<int, int>, Complex> homs;
    for (const auto& [pd, r] : red) {
        if (r.basis_words.empty())
            continue;
        auto key = std::make_pair(pd.x, pd.y);
        if (!homs.count(key))
            homs[key] = Complex(k);
        homs[key].set_dim(pd.deg, (int)r.basis_words.size());
    }

    // differential of a word via the graded Leibniz rule
    auto d_word = [&](PairDeg pd, const std::vector<int>& path) -> Vec {
        PairDeg tpd{pd.x, pd.y, pd.deg + 1};
        int n = word_count(tpd);
        Vec raw = zero_vec(n, k);
        if (n == 0)
            return raw;
        for (size_t i = 0; i < path.size(); ++i) {
            auto it = p.diff.find(path[i]);
            if (it == p.diff.end())
                continue;
            // sign: degrees of factors applied after position i
            int after = 0;
            for (size_t j = i + 1; j < path.size(); ++j)
                after += p.arrows[path[j]].deg;
            Scalar sign = (after % 2 == 0) ? Scalar::one(k) : -Scalar::one(k);
            for (const auto& t : it->second) {
                std::vector<int> np(path.begin(), path.begin() + i);
                np.insert(np.end(), t.path.begin(), t.path.end());
                np.insert(np.end(), path.begin() + i + 1, path.end());
                int c = cut_coord(pd.x, pd.y, pd.deg + 1, np);
                if (c >= 0)
                    raw[c] += sign * t.coeff;
            }
        }
        return raw;
    };
    for (const auto& [pd, r] : red) {
        if (r.basis_words.empty())
            continue;
        PairDeg tpd{pd.x, pd.y, pd.deg + 1};
        auto rt = red.find(tpd);
        int tdim = rt == red.end() ? 0 : (int)rt->second.basis_words.size();
        if (tdim == 0)
            continue;
        Mat dm(tdim, (int)r.basis_words.size(), k);
        const auto& ws = words.at(pd);
        for (size_t j = 0; j < r.basis_words.size(); ++j) {
            Vec raw = d_word(pd, ws[r.basis_words[j]]);
            dm.set_col((int)j, reduce(tpd, raw));
        }
        auto key = std::make_pair(pd.x, pd.y);
        if (!dm.is_zero())
            homs[key].set_d(pd.deg, dm);
    }
    for (auto& [key, h] : homs)
        out.cat.set_hom(key.first, key.second, h);

    // units = classes of the empty words
    for (size_t x = 0; x < p.objects.size(); ++x) {
        PairDeg pd{(int)x, (int)x, 0};
        int n = word_count(pd);
        Vec raw = zero_vec(n, k);
        raw[index[pd].at({})] = Scalar::one(k);
        out.cat.set_unit((int)x, reduce(pd, raw));
    }

    // composition = concatenation, cut, reduce
    for (const auto& [pdf, rf] : red) {
        if (rf.basis_words.empty())
            continue;
        for (const auto& [pdg, rg] : red) {
            if (rg.basis_words.empty())
                continue;
            if (pdg.x != pdf.y)
                continue;
            PairDeg po{pdf.x, pdg.y, pdf.deg + pdg.deg};
            auto ro = red.find(po);
            if (ro == red.end() || ro->second.basis_words.empty())
                continue;
            const auto& wsf = words.at(pdf);
            const auto& wsg = words.at(pdg);
            for (size_t gi = 0; gi < rg.basis_words.size(); ++gi)
                for (size_t fj = 0; fj < rf.basis_words.size(); ++fj) {
                    auto path = wsf[rf.basis_words[fj]];
                    const auto& gpath = wsg[rg.basis_words[gi]];
                    path.insert(path.end(), gpath.begin(), gpath.end());
                    int n = word_count(po);
                    Vec raw = zero_vec(n, k);
                    int c = cut_coord(po.x, po.y, po.deg, path);
                    if (c < 0)
                        continue;
                    raw[c] = Scalar::one(k);
                    Vec v = reduce(po, raw);
                    for (size_t o = 0; o < v.size(); ++o)
                        if (!v[o].is_zero())
                            out.cat.set_comp_entry(pdf.x, pdf.y, pdg.y, pdg.deg, pdf.deg, (int)o,
                                                   (int)gi, (int)fj, v[o]);
                }
        }
    }

    // reduced word lists + generator images
    for (const auto& [pd, r] : red) {
        if (r.basis_words.empty())
            continue;
        auto& list = out.words[{pd.x, pd.y, pd.deg}];
        for (int bw : r.basis_words)
            list.push_back(words.at(pd)[bw]);
    }
    for (size_t a = 0; a < p.arrows.size(); ++a) {
        const auto& ar = p.arrows[a];
        PairDeg pd{ar.src, ar.tgt, ar.deg};
        CompiledCategory::GenImage gi{ar.src, ar.tgt, ar.deg, {}};
        int c = cut_coord(ar.src, ar.tgt, ar.deg, {(int)a});
        if (c >= 0) {
            int n = word_count(pd);
            Vec raw = zero_vec(n, k);
            raw[c] = Scalar::one(k);
            gi.coords = reduce(pd, raw);
        }
        out.gen.push_back(std::move(gi));
    }
    return out;
}

}  // namespace dgc
