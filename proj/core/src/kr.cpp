#include "rcbij/kr.hpp"

#include "cache.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace rcbij {

Word flat(const Path& p) {
    Word w;
    for (const auto& e : p.elems) w.insert(w.end(), e.begin(), e.end());
    return w;
}

std::string path_string(const World& w, const Path& p) {
    std::string s;
    for (std::size_t k = 0; k < p.elems.size(); ++k) {
        if (k) s += " (x) ";
        s += "[" + word_string(w, p.elems[k]) + "]";
    }
    return s.empty() ? "[]" : s;
}

bool is_spin_factor(AffineType t, int r) { return t.family == Family::D1 && r >= t.n - 1; }

namespace {

AffineType native_ambient(AffineType t) { return is_folded(t.family) ? folding(t).ambient : t; }

}  // namespace

int word_length(AffineType t, int r, int s) {
    if (!is_folded(t.family)) return is_spin_factor(t, r) ? s : r * s;
    int len = 0;
    AffineType amb = folding(t).ambient;
    for (auto [rr, ss] : ambient_factors(t, r, s)) len += word_length(amb, rr, ss);
    return len;
}

Word maximal_word(World w, int r, int s) {
    Word out;
    if (w.kind == Classical::D && r >= w.n - 1) {
        Atom a = spin_atom(r == w.n ? 0u : (1u << (w.n - 1)));
        out.assign(s, a);
        return out;
    }
    for (int c = 0; c < s; ++c)
        for (int k = r; k >= 1; --k) out.push_back(k);
    return out;
}

std::vector<std::vector<int>> d_decomposition(int r, int s) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    // nondecreasing sequences of even k in [2, r], length <= s
    std::function<void(int)> rec = [&](int lo) {
        out.push_back(cur);
        if (static_cast<int>(cur.size()) == s) return;
        for (int k = lo; k <= r; k += 2) {
            cur.push_back(k);
            rec(k);
            cur.pop_back();
        }
    };
    rec(2);
    return out;
}

Weight d_decomposition_weight(int n, int r, int s, const std::vector<int>& ks) {
    Weight w(n + 1, 0);
    w[r] += s - static_cast<int>(ks.size());
    for (int k : ks)
        if (r - k > 0) w[r - k] += 1;
    return w;
}

std::vector<std::vector<Atom>> hw_filling_grid(int r, int s, const std::vector<int>& ks) {
    int N = static_cast<int>(ks.size());
    if (r == 1) {
        if (N) throw std::invalid_argument("hw_filling: weight not in decomposition");
        return {std::vector<Atom>(s, 1)};
    }
    std::vector<Atom> bottom(s - N, r);
    for (int k : ks) bottom.push_back(-(r - k + 1));
    std::vector<int> rest;
    for (int k : ks)
        if (k > 2) rest.push_back(k - 2);
    auto g = hw_filling_grid(r - 1, s, rest);
    g.push_back(bottom);
    return g;
}

std::vector<std::vector<Atom>> word_to_grid(const Word& w, int r, int s) {
    std::vector<std::vector<Atom>> g(r, std::vector<Atom>(s));
    for (int c = 0; c < s; ++c)
        for (int row = 0; row < r; ++row) g[row][c] = w[c * r + (r - 1 - row)];
    return g;
}

Word grid_to_word(const std::vector<std::vector<Atom>>& g) {
    Word w;
    int r = static_cast<int>(g.size());
    int s = r ? static_cast<int>(g[0].size()) : 0;
    for (int c = 0; c < s; ++c)
        for (int row = r - 1; row >= 0; --row) w.push_back(g[row][c]);
    return w;
}

Word hw_filling(int r, int s, const std::vector<int>& ks) { return grid_to_word(hw_filling_grid(r, s, ks)); }

std::vector<Word> native_highest(AffineType native, int r, int s) {
    World w = world_of(native);
    if (native.family == Family::A1 || is_spin_factor(native, r)) return {maximal_word(w, r, s)};
    if (r == 1 || s == 1) {
        std::vector<Word> out;
        for (const auto& ks : d_decomposition(r, s)) out.push_back(hw_filling(r, s, ks));
        return out;
    }
    // Stacked fillings are not the KR highest elements once two columns lose
    // boxes, so wider rectangles are characterized through the bijection.
    static std::map<std::tuple<int, int, int>, std::vector<Word>> cache;
    std::lock_guard lock(detail::cache_mutex());
    auto key = std::make_tuple(native.n, r, s);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, native_highest_phi(native, r, s)).first;
    return it->second;
}

namespace {

using Grid = std::vector<std::vector<Atom>>;

std::vector<std::pair<int, int>> hole_order(const std::vector<std::vector<bool>>& hole, SlideOrder order, bool reverse) {
    int r = static_cast<int>(hole.size()), s = static_cast<int>(hole[0].size());
    std::vector<std::pair<int, int>> cells;
    if (order == SlideOrder::RowMajor) {
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < s; ++j)
                if (hole[i][j]) cells.emplace_back(i, j);
    } else {
        for (int j = 0; j < s; ++j)
            for (int i = 0; i < r; ++i)
                if (hole[i][j]) cells.emplace_back(i, j);
    }
    if (reverse) std::reverse(cells.begin(), cells.end());
    return cells;
}

}  // namespace

Word promotion(const Word& w, int r, int s, int N, SlideOrder order) {
    Grid g = word_to_grid(w, r, s);
    std::vector<std::vector<bool>> hole(r, std::vector<bool>(s, false));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < s; ++j) hole[i][j] = g[i][j] == N;
    for (auto [i0, j0] : hole_order(hole, order, false)) {
        int i = i0, j = j0;
        for (;;) {
            bool up = i > 0 && !hole[i - 1][j];
            bool left = j > 0 && !hole[i][j - 1];
            if (!up && !left) break;
            if (up && (!left || g[i - 1][j] >= g[i][j - 1])) {
                g[i][j] = g[i - 1][j];
                hole[i][j] = false;
                hole[i - 1][j] = true;
                --i;
            } else {
                g[i][j] = g[i][j - 1];
                hole[i][j] = false;
                hole[i][j - 1] = true;
                --j;
            }
        }
    }
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < s; ++j) g[i][j] = hole[i][j] ? 1 : g[i][j] + 1;
    return grid_to_word(g);
}

Word promotion_inverse(const Word& w, int r, int s, int N, SlideOrder order) {
    Grid g = word_to_grid(w, r, s);
    std::vector<std::vector<bool>> hole(r, std::vector<bool>(s, false));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < s; ++j) hole[i][j] = g[i][j] == 1;
    for (auto [i0, j0] : hole_order(hole, order, true)) {
        int i = i0, j = j0;
        for (;;) {
            bool down = i + 1 < r && !hole[i + 1][j];
            bool right = j + 1 < s && !hole[i][j + 1];
            if (!down && !right) break;
            if (down && (!right || g[i + 1][j] <= g[i][j + 1])) {
                g[i][j] = g[i + 1][j];
                hole[i][j] = false;
                hole[i + 1][j] = true;
                ++i;
            } else {
                g[i][j] = g[i][j + 1];
                hole[i][j] = false;
                hole[i][j + 1] = true;
                ++j;
            }
        }
    }
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < s; ++j) g[i][j] = hole[i][j] ? N : g[i][j] - 1;
    return grid_to_word(g);
}

namespace {

Word map_factors(int n, const std::vector<Factor>& shapes, const Word& w, bool forward) {
    Word out;
    out.reserve(w.size());
    std::size_t pos = 0;
    for (const auto& f : shapes) {
        std::size_t len = static_cast<std::size_t>(f.r) * f.s;
        Word piece(w.begin() + pos, w.begin() + pos + len);
        Word q = forward ? promotion(piece, f.r, f.s, n + 1) : promotion_inverse(piece, f.r, f.s, n + 1);
        out.insert(out.end(), q.begin(), q.end());
        pos += len;
    }
    return out;
}

}  // namespace

bool ambient_e0(int n, const std::vector<Factor>& shapes, Word& w) {
    Word p = map_factors(n, shapes, w, true);
    if (!word_e({Classical::A, n}, p, 1)) return false;
    w = map_factors(n, shapes, p, false);
    return true;
}

bool ambient_f0(int n, const std::vector<Factor>& shapes, Word& w) {
    Word p = map_factors(n, shapes, w, true);
    if (!word_f({Classical::A, n}, p, 1)) return false;
    w = map_factors(n, shapes, p, false);
    return true;
}

int ambient_eps0(int n, const std::vector<Factor>& shapes, const Word& w) {
    return word_eps({Classical::A, n}, map_factors(n, shapes, w, true), 1);
}

int ambient_phi0(int n, const std::vector<Factor>& shapes, const Word& w) {
    return word_phi({Classical::A, n}, map_factors(n, shapes, w, true), 1);
}

std::vector<Factor> ambient_shapes(AffineType t, const std::vector<Factor>& factors) {
    if (!is_folded(t.family)) return factors;
    std::vector<Factor> out;
    for (const auto& f : factors)
        for (auto [r, s] : ambient_factors(t, f.r, f.s)) out.push_back({r, s});
    return out;
}

namespace {

void require_type_a(AffineType t) {
    if (t.family == Family::A1 || ambient_is_a(t.family)) return;
    throw std::domain_error("affine operators unavailable for " + type_name(t) + " (type D ambient world)");
}

int gamma0(AffineType t) { return is_folded(t.family) ? scaling_factors(t)[0] : 1; }

int ambient_rank(AffineType t) { return native_ambient(t).n; }

}  // namespace

bool affine_e0(AffineType t, const std::vector<Factor>& factors, Word& w) {
    require_type_a(t);
    auto shapes = ambient_shapes(t, factors);
    Word y = w;
    for (int k = 0; k < gamma0(t); ++k)
        if (!ambient_e0(ambient_rank(t), shapes, y)) return false;
    w = std::move(y);
    return true;
}

bool affine_f0(AffineType t, const std::vector<Factor>& factors, Word& w) {
    require_type_a(t);
    auto shapes = ambient_shapes(t, factors);
    Word y = w;
    for (int k = 0; k < gamma0(t); ++k)
        if (!ambient_f0(ambient_rank(t), shapes, y)) return false;
    w = std::move(y);
    return true;
}

namespace {

void close_classical(const Ops& ops, const std::vector<Word>& seeds, std::vector<Word>& elems,
                     std::unordered_map<Word, int, WordHash>& index, std::size_t budget) {
    std::deque<int> queue;
    auto add = [&](const Word& w) {
        auto [it, fresh] = index.emplace(w, static_cast<int>(elems.size()));
        if (fresh) {
            if (elems.size() >= budget) throw BudgetExceeded("factor set exceeds node budget");
            elems.push_back(w);
            queue.push_back(it->second);
        }
    };
    for (const auto& s : seeds) add(s);
    while (!queue.empty()) {
        int k = queue.front();
        queue.pop_front();
        for (int a = 1; a <= ops.rank(); ++a) {
            Word y = elems[k];
            if (ops.f(a, y)) add(y);
        }
    }
}

std::unique_ptr<FactorSet> build_factor_set(AffineType t, int r, int s) {
    if (!valid_type(t) || !valid_factor(t, r, s))
        throw std::invalid_argument("invalid factor B^{" + std::to_string(r) + "," + std::to_string(s) + "} for " +
                                    type_name(t));
    auto fs = std::make_unique<FactorSet>();
    fs->type = t;
    fs->r = r;
    fs->s = s;
    Ops ops(t);
    AffineType amb = native_ambient(t);
    if (is_folded(t.family)) {
        for (auto [rr, ss] : ambient_factors(t, r, s)) {
            fs->ambient.push_back({rr, ss});
            fs->lengths.push_back(word_length(amb, rr, ss));
        }
    } else {
        fs->ambient = {{r, s}};
        fs->lengths = {word_length(t, r, s)};
    }
    std::size_t budget = node_budget();
    std::vector<Word> seeds;
    if (!is_folded(t.family)) {
        seeds = native_highest(t, r, s);
        close_classical(ops, seeds, fs->elems, fs->index, budget);
    } else if (ambient_is_a(t.family)) {
        seeds = folded_highest(t, r, s, FoldedMethod::AffineClosure);
        close_classical(ops, seeds, fs->elems, fs->index, budget);
    } else {
        seeds = folded_highest(t, r, s, FoldedMethod::PhiCharacterization);
        close_classical(ops, seeds, fs->elems, fs->index, budget);
    }
    int m = static_cast<int>(fs->elems.size());
    fs->comp.assign(m, -1);
    fs->eps.resize(m);
    fs->wt.resize(m);
    std::unordered_map<Word, int, WordHash> hw_to_comp;
    for (int k = 0; k < m; ++k) {
        const Word& w = fs->elems[k];
        fs->eps[k] = ops.eps_vec(w);
        fs->wt[k] = ops.weight(w);
        Word hw = ops.raise(w).first;
        auto [it, fresh] = hw_to_comp.emplace(hw, static_cast<int>(fs->comp_highest.size()));
        if (fresh) {
            int hi = fs->find(hw);
            if (hi < 0) throw std::logic_error("factor set not closed under e_i");
            fs->comp_highest.push_back(hi);
            fs->comp_weight.push_back(ops.weight(hw));
            fs->comp_lowest.push_back(fs->find(ops.lower_fully(hw)));
        }
        fs->comp[k] = it->second;
    }
    if (t.family == Family::D1 && !is_spin_factor(t, r)) {
        fs->comp_ks.assign(fs->comp_highest.size(), {});
        auto dec = d_decomposition(r, s);
        auto hws = native_highest(t, r, s);
        for (std::size_t k = 0; k < dec.size(); ++k) {
            int hi = fs->find(hws[k]);
            if (hi < 0) throw std::logic_error("hw filling missing from factor set");
            fs->comp_ks[fs->comp[hi]] = dec[k];
        }
    }
    return fs;
}

}  // namespace

const FactorSet& factor_set(AffineType t, int r, int s) {
    static std::map<std::tuple<int, int, int, int>, std::unique_ptr<FactorSet>> cache;
    std::lock_guard lock(detail::cache_mutex());
    auto key = std::make_tuple(static_cast<int>(t.family), t.n, r, s);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
    auto fs = build_factor_set(t, r, s);
    auto& ref = *fs;
    cache.emplace(key, std::move(fs));
    return ref;
}

std::vector<Word> folded_highest_closure(AffineType t, int r, int s) {
    Ops ops(t);
    AffineType amb = native_ambient(t);
    World w = world_of(amb);
    Word max;
    std::vector<Factor> shapes;
    for (auto [rr, ss] : ambient_factors(t, r, s)) {
        Word m = maximal_word(w, rr, ss);
        max.insert(max.end(), m.begin(), m.end());
        shapes.push_back({rr, ss});
    }
    std::vector<Factor> one{{r, s}};
    std::vector<Word> elems;
    std::unordered_map<Word, int, WordHash> index;
    std::deque<int> queue;
    std::size_t budget = node_budget();
    auto add = [&](const Word& x) {
        auto [it, fresh] = index.emplace(x, static_cast<int>(elems.size()));
        if (fresh) {
            if (elems.size() >= budget) throw BudgetExceeded("folded factor exceeds node budget");
            elems.push_back(x);
            queue.push_back(it->second);
        }
    };
    add(max);
    while (!queue.empty()) {
        int k = queue.front();
        queue.pop_front();
        for (int a = 0; a <= ops.rank(); ++a) {
            Word y = elems[k];
            bool ok = a == 0 ? affine_f0(t, one, y) : ops.f(a, y);
            if (ok) add(y);
            y = elems[k];
            ok = a == 0 ? affine_e0(t, one, y) : ops.e(a, y);
            if (ok) add(y);
        }
    }
    std::vector<Word> hws;
    for (const auto& x : elems)
        if (ops.is_highest(x)) hws.push_back(x);
    // maximal element first, then deterministic order
    std::sort(hws.begin(), hws.end(), [&](const Word& a, const Word& b) {
        if ((a == max) != (b == max)) return a == max;
        return a < b;
    });
    return hws;
}

std::vector<Path> enumerate_highest(AffineType t, const std::vector<Factor>& factors) {
    int L = static_cast<int>(factors.size());
    std::vector<const FactorSet*> sets;
    for (const auto& f : factors) sets.push_back(&factor_set(t, f.r, f.s));
    std::vector<Path> out;
    std::vector<int> choice(L, 0);
    int n = t.n;
    std::size_t budget = node_budget(), visited = 0;
    std::function<void(int, const Weight&)> rec = [&](int k, const Weight& wt) {
        if (++visited > budget) throw BudgetExceeded("highest weight search exceeds node budget");
        if (k < 0) {
            Path p;
            p.factors = factors;
            for (int j = 0; j < L; ++j) p.elems.push_back(sets[j]->elems[choice[j]]);
            out.push_back(std::move(p));
            return;
        }
        const FactorSet& fs = *sets[k];
        for (int e = 0; e < static_cast<int>(fs.elems.size()); ++e) {
            bool ok = true;
            for (int a = 1; a <= n && ok; ++a) ok = fs.eps[e][a] <= wt[a];
            if (!ok) continue;
            Weight nw = wt;
            for (int a = 1; a <= n; ++a) nw[a] += fs.wt[e][a];
            choice[k] = e;
            rec(k - 1, nw);
        }
    };
    rec(L - 1, Weight(n + 1, 0));
    return out;
}

std::vector<Path> enumerate_highest(AffineType t, const std::vector<Factor>& factors, const Weight& lambda) {
    std::vector<Path> out;
    for (auto& p : enumerate_highest(t, factors))
        if (path_weight(t, p) == lambda) out.push_back(std::move(p));
    return out;
}

Weight path_weight(AffineType t, const Path& p) { return Ops(t).weight(flat(p)); }

bool path_is_highest(AffineType t, const Path& p) { return Ops(t).is_highest(flat(p)); }

bool path_valid(AffineType t, const Path& p) {
    if (p.factors.size() != p.elems.size()) return false;
    for (std::size_t k = 0; k < p.factors.size(); ++k) {
        if (!valid_factor(t, p.factors[k].r, p.factors[k].s)) return false;
        if (factor_set(t, p.factors[k].r, p.factors[k].s).find(p.elems[k]) < 0) return false;
    }
    return true;
}

Path split_flat(AffineType t, const std::vector<Factor>& factors, const Word& w) {
    Path p;
    p.factors = factors;
    std::size_t pos = 0;
    for (const auto& f : factors) {
        std::size_t len = word_length(t, f.r, f.s);
        if (pos + len > w.size()) throw std::invalid_argument("split_flat: word too short");
        p.elems.emplace_back(w.begin() + pos, w.begin() + pos + len);
        pos += len;
    }
    if (pos != w.size()) throw std::invalid_argument("split_flat: word too long");
    return p;
}

Path star_path(AffineType t, const Path& p) {
    Ops ops(t);
    Path q;
    for (std::size_t k = p.factors.size(); k-- > 0;) {
        q.factors.push_back(p.factors[k]);
        q.elems.push_back(ops.star(p.elems[k]));
    }
    return q;
}

Path raise_path(AffineType t, const Path& p) {
    Ops ops(t);
    return split_flat(t, p.factors, ops.raise(flat(p)).first);
}

Path diamond(AffineType t, const Path& p) { return raise_path(t, star_path(t, p)); }

int sigma_node(AffineType t, int a) {
    if (t.family == Family::A1) return t.n + 1 - a;
    if (t.family == Family::D1) return a == t.n ? t.n - 1 : (a == t.n - 1 ? t.n : a);
    throw std::domain_error("sigma: only native A and D");
}

Path sigma_path(AffineType t, const Path& p) {
    Path q;
    if (t.family == Family::A1) {
        Ops ops(t);
        World w = world_of(t);
        for (std::size_t k = 0; k < p.factors.size(); ++k) {
            Factor f{t.n + 1 - p.factors[k].r, p.factors[k].s};
            auto [hw, ew] = ops.raise(p.elems[k]);
            Word y = maximal_word(w, f.r, f.s);
            for (auto it = ew.rbegin(); it != ew.rend(); ++it)
                if (!ops.f(sigma_node(t, *it), y)) throw std::logic_error("sigma: f undefined");
            q.factors.push_back(f);
            q.elems.push_back(y);
        }
        return q;
    }
    if (t.family != Family::D1) throw std::domain_error("sigma: only native A and D");
    World w = world_of(t);
    for (std::size_t k = 0; k < p.factors.size(); ++k) {
        Factor f = p.factors[k];
        if (is_spin_factor(t, f.r)) f.r = sigma_node(t, f.r);
        Word y = p.elems[k];
        for (auto& a : y) a = sigma_atom_d(w, a);
        q.factors.push_back(f);
        q.elems.push_back(y);
    }
    return q;
}

namespace {

Path with_front(const Path& p, std::vector<Factor> fs, std::vector<Word> es) {
    Path q;
    q.factors = std::move(fs);
    q.elems = std::move(es);
    q.factors.insert(q.factors.end(), p.factors.begin() + 1, p.factors.end());
    q.elems.insert(q.elems.end(), p.elems.begin() + 1, p.elems.end());
    return q;
}

}  // namespace

std::optional<Path> lh(AffineType t, const Path& p) {
    if (p.factors.empty() || p.factors[0] != Factor{1, 1} || is_spin_factor(t, 1)) return std::nullopt;
    return with_front(p, {}, {});
}

std::optional<Path> lh_sp(AffineType t, const Path& p) {
    if (p.factors.empty() || p.factors[0].s != 1 || !is_spin_factor(t, p.factors[0].r)) return std::nullopt;
    return with_front(p, {}, {});
}

std::optional<Path> lb(AffineType t, const Path& p) {
    if (p.factors.empty()) return std::nullopt;
    Factor f = p.factors[0];
    if (f.s != 1 || f.r < 2 || is_spin_factor(t, f.r)) return std::nullopt;
    const Word& w = p.elems[0];
    return with_front(p, {{1, 1}, {f.r - 1, 1}}, {Word{w[0]}, Word(w.begin() + 1, w.end())});
}

std::optional<Path> ls(AffineType t, const Path& p) {
    if (p.factors.empty() || p.factors[0].s < 2) return std::nullopt;
    Factor f = p.factors[0];
    std::size_t col = is_spin_factor(t, f.r) ? 1 : static_cast<std::size_t>(f.r);
    const Word& w = p.elems[0];
    return with_front(p, {{f.r, 1}, {f.r, f.s - 1}}, {Word(w.begin(), w.begin() + col), Word(w.begin() + col, w.end())});
}

std::optional<Path> lb_s(AffineType t, const Path& p) {
    if (t.family != Family::D1 || p.factors.empty()) return std::nullopt;
    Factor f = p.factors[0];
    if (f.r < 2 || f.r > t.n - 2) return std::nullopt;
    const FactorSet& fs = factor_set(t, f.r, f.s);
    int idx = fs.find(p.elems[0]);
    if (idx < 0) throw std::invalid_argument("lb_s: element not in B^{r,s}");
    const auto& ks = fs.comp_ks[fs.comp[idx]];
    Word image;
    auto grid = hw_filling_grid(f.r, f.s, ks);
    image = grid.back();
    std::vector<int> rest;
    for (int k : ks)
        if (k > 2) rest.push_back(k - 2);
    auto dec = d_decomposition(f.r - 1, f.s);
    auto pos = std::find(dec.begin(), dec.end(), rest) - dec.begin();
    Word upper = native_highest(t, f.r - 1, f.s)[pos];
    image.insert(image.end(), upper.begin(), upper.end());
    Ops ops(t);
    auto ew = ops.raise(p.elems[0]).second;
    for (auto it = ew.rbegin(); it != ew.rend(); ++it)
        if (!ops.f(*it, image)) throw std::logic_error("lb_s: f undefined on image");
    return with_front(p, {{1, f.s}, {f.r - 1, f.s}},
                      {Word(image.begin(), image.begin() + f.s), Word(image.begin() + f.s, image.end())});
}

namespace {

template <class F>
std::optional<Path> conj(AffineType t, const Path& p, F lx) {
    auto q = lx(t, diamond(t, p));
    if (!q) return std::nullopt;
    return diamond(t, *q);
}

}  // namespace

std::optional<Path> rh(AffineType t, const Path& p) { return conj(t, p, lh); }
std::optional<Path> rh_sp(AffineType t, const Path& p) { return conj(t, p, lh_sp); }
std::optional<Path> rb(AffineType t, const Path& p) { return conj(t, p, lb); }
std::optional<Path> rs(AffineType t, const Path& p) { return conj(t, p, ls); }

}  // namespace rcbij
