#include "rcbij/energy.hpp"

#include "cache.hpp"

#include <mutex>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

namespace rcbij {

namespace {

using PairKey = std::tuple<int, int, int, int, int, int>;

PairKey pair_key(AffineType t, Factor a, Factor b) {
    return {static_cast<int>(t.family), t.n, a.r, a.s, b.r, b.s};
}

// Highest elements of f1 (x) f2 mapped to those of f2 (x) f1.
struct HighestMap {
    RMethod method = RMethod::Weight;
    std::unordered_map<Word, Word, WordHash> image;
};

std::unordered_map<Word, Word, WordHash> by_weight(AffineType t, Factor f1, Factor f2, bool& ok) {
    auto src = enumerate_highest(t, {f1, f2});
    auto dst = enumerate_highest(t, {f2, f1});
    std::map<Weight, std::vector<Word>> a, b;
    for (const auto& p : src) a[path_weight(t, p)].push_back(flat(p));
    for (const auto& p : dst) b[path_weight(t, p)].push_back(flat(p));
    ok = a.size() == b.size();
    std::unordered_map<Word, Word, WordHash> out;
    for (auto& [w, xs] : a) {
        auto it = b.find(w);
        if (!ok || it == b.end() || xs.size() != 1 || it->second.size() != 1) {
            ok = false;
            return {};
        }
        out[xs[0]] = it->second[0];
    }
    return out;
}

HighestMap build_highest_map(AffineType t, Factor f1, Factor f2) {
    HighestMap hm;
    if (!is_folded(t.family)) {
        bool ok = false;
        hm.image = by_weight(t, f1, f2, ok);
        if (ok) return hm;
    } else if (ambient_is_a(t.family)) {
        hm.method = RMethod::Ambient;
        return hm;
    }
    hm.method = RMethod::Phi;
    hm.image.clear();
    for (const auto& p : enumerate_highest(t, {f1, f2})) {
        Path q = phi_inv(t, phi(t, p), {f2, f1});
        hm.image[flat(p)] = flat(q);
    }
    return hm;
}

const HighestMap& highest_map(AffineType t, Factor f1, Factor f2) {
    static std::map<PairKey, HighestMap> cache;
    std::lock_guard lock(detail::cache_mutex());
    auto key = pair_key(t, f1, f2);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, build_highest_map(t, f1, f2)).first;
    return it->second;
}

// Moves the ambient factors of the right folded factor past those of the
// left one with ambient R-matrices.
std::pair<Word, Word> rmatrix_ambient(AffineType t, Factor f1, const Word& b1, Factor f2, const Word& b2) {
    AffineType amb = ambient_type(t);
    auto s1 = ambient_shapes(t, {f1});
    auto s2 = ambient_shapes(t, {f2});
    std::vector<Factor> shapes = s1;
    shapes.insert(shapes.end(), s2.begin(), s2.end());
    Word w = b1;
    w.insert(w.end(), b2.begin(), b2.end());
    Path cur = split_flat(amb, shapes, w);
    int k1 = static_cast<int>(s1.size());
    for (int j = 0; j < static_cast<int>(s2.size()); ++j)
        for (int pos = k1 + j - 1; pos >= j; --pos) cur = rmatrix(amb, cur, pos);
    Word out = flat(cur);
    std::size_t cut = static_cast<std::size_t>(word_length(t, f2.r, f2.s));
    Word c2(out.begin(), out.begin() + cut), c1(out.begin() + cut, out.end());
    if (factor_set(t, f2.r, f2.s).find(c2) < 0 || factor_set(t, f1.r, f1.s).find(c1) < 0)
        throw std::logic_error("rmatrix: ambient image outside the virtual crystal");
    return {c2, c1};
}

}  // namespace

RMethod rmatrix_method(AffineType t, Factor f1, Factor f2) { return highest_map(t, f1, f2).method; }

std::pair<Word, Word> rmatrix_pair(AffineType t, Factor f1, const Word& b1, Factor f2, const Word& b2) {
    if (f1 == f2) return {b1, b2};
    const HighestMap& hm = highest_map(t, f1, f2);
    if (hm.method == RMethod::Ambient) return rmatrix_ambient(t, f1, b1, f2, b2);
    Ops ops(t);
    Word w = b1;
    w.insert(w.end(), b2.begin(), b2.end());
    auto [hw, ew] = ops.raise(w);
    auto it = hm.image.find(hw);
    if (it == hm.image.end()) throw std::logic_error("rmatrix: highest element not found");
    Word y = it->second;
    for (auto e = ew.rbegin(); e != ew.rend(); ++e)
        if (!ops.f(*e, y)) throw std::logic_error("rmatrix: f undefined on image");
    std::size_t cut = static_cast<std::size_t>(word_length(t, f2.r, f2.s));
    return {Word(y.begin(), y.begin() + cut), Word(y.begin() + cut, y.end())};
}

Path rmatrix(AffineType t, const Path& p, int pos) {
    if (pos < 0 || pos + 1 >= static_cast<int>(p.factors.size()))
        throw std::invalid_argument("rmatrix: position out of range");
    Path q = p;
    auto [c2, c1] = rmatrix_pair(t, p.factors[pos], p.elems[pos], p.factors[pos + 1], p.elems[pos + 1]);
    std::swap(q.factors[pos], q.factors[pos + 1]);
    q.elems[pos] = std::move(c2);
    q.elems[pos + 1] = std::move(c1);
    return q;
}

bool has_affine_structure(AffineType t) {
    return t.family == Family::A1 || (is_folded(t.family) && ambient_is_a(t.family));
}

namespace {

// 0 when e_0 is undefined, 1 if it acts on the left factor, 2 on the right.
int e0_side(AffineType t, Factor f1, const Word& b1, Factor f2, const Word& b2, Word* out) {
    Word w = b1;
    w.insert(w.end(), b2.begin(), b2.end());
    Word y = w;
    if (!affine_e0(t, {f1, f2}, y)) return 0;
    if (out) *out = y;
    bool left_same = std::equal(b1.begin(), b1.end(), y.begin());
    bool right_same = std::equal(b2.begin(), b2.end(), y.begin() + static_cast<std::ptrdiff_t>(b1.size()));
    if (!left_same && right_same) return 1;
    if (left_same && !right_same) return 2;
    return 3;
}

EnergyTable build_energy(AffineType t, Factor f1, Factor f2, int ll_sign) {
    if (!has_affine_structure(t)) throw std::domain_error("local_energy: affine operators unavailable for " + type_name(t));
    EnergyTable tab{t, f1, f2, {}, 0};
    const FactorSet& A = factor_set(t, f1.r, f1.s);
    const FactorSet& B = factor_set(t, f2.r, f2.s);
    Ops ops(t);
    std::size_t cut = A.elems.empty() ? 0 : A.elems[0].size();
    // component of every element, keyed by its highest element
    std::map<Word, int> comp_id;
    std::vector<Word> highest;
    std::vector<std::vector<std::pair<int, int>>> adj;  // (target component, step)
    auto comp_of = [&](const Word& w) {
        Word hw = ops.raise(w).first;
        auto [it, fresh] = comp_id.emplace(hw, static_cast<int>(highest.size()));
        if (fresh) {
            highest.push_back(hw);
            adj.emplace_back();
        }
        return it->second;
    };
    for (const Word& b1 : A.elems)
        for (const Word& b2 : B.elems) {
            Word y;
            int side = e0_side(t, f1, b1, f2, b2, &y);
            if (!side) continue;
            ++tab.edges;
            int step = 0;
            if (side == 1 || side == 2) {
                auto [r2, r1] = rmatrix_pair(t, f1, b1, f2, b2);
                int rside = e0_side(t, f2, r2, f1, r1, nullptr);
                if (side == 1 && rside == 1) step = ll_sign;
                if (side == 2 && rside == 2) step = -ll_sign;
            }
            Word w = b1;
            w.insert(w.end(), b2.begin(), b2.end());
            int from = comp_of(w), to = comp_of(y);
            // H(e_0 x) = H(x) + step
            adj[from].emplace_back(to, step);
            adj[to].emplace_back(from, -step);
        }
    Word top = A.maximal();
    top.insert(top.end(), B.maximal().begin(), B.maximal().end());
    int root = comp_of(top);
    std::vector<std::optional<int>> H(highest.size());
    H[root] = 0;
    std::vector<int> stack{root};
    while (!stack.empty()) {
        int c = stack.back();
        stack.pop_back();
        for (auto [d, step] : adj[c]) {
            int v = *H[c] + step;
            if (!H[d]) {
                H[d] = v;
                stack.push_back(d);
            } else if (*H[d] != v) {
                throw std::logic_error("local_energy: inconsistent propagation on " + type_name(t));
            }
        }
    }
    // components never reached by e_0 edges keep no value; report it
    for (std::size_t c = 0; c < highest.size(); ++c) {
        if (!H[c]) throw std::logic_error("local_energy: component not connected by e_0");
        tab.by_highest[highest[c]] = *H[c];
    }
    (void)cut;
    return tab;
}

}  // namespace

const EnergyTable& local_energy(AffineType t, Factor f1, Factor f2, int ll_sign) {
    static std::map<std::pair<PairKey, int>, EnergyTable> cache;
    std::lock_guard lock(detail::cache_mutex());
    auto key = std::make_pair(pair_key(t, f1, f2), ll_sign);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, build_energy(t, f1, f2, ll_sign)).first;
    return it->second;
}

int local_energy_value(AffineType t, Factor f1, const Word& b1, Factor f2, const Word& b2, int ll_sign) {
    const EnergyTable& tab = local_energy(t, f1, f2, ll_sign);
    Word w = b1;
    w.insert(w.end(), b2.begin(), b2.end());
    auto it = tab.by_highest.find(Ops(t).raise(w).first);
    if (it == tab.by_highest.end()) throw std::logic_error("local_energy: element outside the table");
    return it->second;
}

Frac d_tail(AffineType t, Factor f, const Word& b) {
    const FactorSet& fs = factor_set(t, f.r, f.s);
    int idx = fs.find(b);
    if (idx < 0) throw std::invalid_argument("d_tail: element not in B^{r,s}");
    const Weight& lam = fs.comp_weight[fs.comp[idx]];
    Weight mu(t.n + 1, 0);
    mu[f.r] = f.s * kappa(t, f.r);
    int diff2 = partition_size2(t, mu) - partition_size2(t, lam);
    switch (t.family) {
        case Family::D1:
        case Family::B1:
        case Family::A2odd:
        case Family::C1:
        case Family::A2evenDagger:
            return Frac(diff2, 4);
        default:
            return Frac(diff2, 2);
    }
}

Frac intrinsic_energy(AffineType t, const Path& p, int ll_sign) {
    int N = static_cast<int>(p.factors.size());
    Frac D(0);
    // display index of the factor at position i (1 = rightmost) is N - i
    for (int j = 1; j <= N; ++j) {
        Path cur = p;
        for (int i = j - 1; i >= 1; --i) {
            int left = N - (i + 1), right = N - i;
            D = D + Frac(local_energy_value(t, cur.factors[left], cur.elems[left], cur.factors[right], cur.elems[right],
                                            ll_sign));
            cur = rmatrix(t, cur, left);
        }
        D = D + d_tail(t, cur.factors[N - 1], cur.elems[N - 1]);
    }
    return D;
}

Frac energy_via_rc(AffineType t, const Path& p) {
    Path h = raise_path(t, p);
    Mult L = mult_of(p.factors);
    return cocharge(t, theta(t, phi(t, h), L), L);
}

EnergyValue energy(AffineType t, const Path& p) {
    if (has_affine_structure(t)) return {intrinsic_energy(t, p), true};
    return {energy_via_rc(t, p), false};
}

}  // namespace rcbij
