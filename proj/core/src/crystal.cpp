#include "rcbij/crystal.hpp"

#include <cstdlib>
#include <deque>
#include <stdexcept>

namespace rcbij {

namespace {

bool spin_minus(std::uint32_t mask, int pos) { return (mask >> (pos - 1)) & 1u; }

}  // namespace

int atom_phi(const World& w, Atom x, int i) {
    if (w.kind == Classical::A) return x == i ? 1 : 0;
    int n = w.n;
    if (is_spin(x)) {
        std::uint32_t m = spin_mask(x);
        if (i < n) return (!spin_minus(m, i) && spin_minus(m, i + 1)) ? 1 : 0;
        return (!spin_minus(m, n - 1) && !spin_minus(m, n)) ? 1 : 0;
    }
    if (i < n) return (x == i || x == -(i + 1)) ? 1 : 0;
    return (x == n - 1 || x == n) ? 1 : 0;
}

int atom_eps(const World& w, Atom x, int i) {
    if (w.kind == Classical::A) return x == i + 1 ? 1 : 0;
    int n = w.n;
    if (is_spin(x)) {
        std::uint32_t m = spin_mask(x);
        if (i < n) return (spin_minus(m, i) && !spin_minus(m, i + 1)) ? 1 : 0;
        return (spin_minus(m, n - 1) && spin_minus(m, n)) ? 1 : 0;
    }
    if (i < n) return (x == i + 1 || x == -i) ? 1 : 0;
    return (x == -n || x == -(n - 1)) ? 1 : 0;
}

Atom atom_f(const World& w, Atom x, int i) {
    if (!atom_phi(w, x, i)) return 0;
    if (w.kind == Classical::A) return x + 1;
    int n = w.n;
    if (is_spin(x)) {
        std::uint32_t m = spin_mask(x);
        if (i < n) m ^= (1u << (i - 1)) | (1u << i);
        else m |= (1u << (n - 2)) | (1u << (n - 1));
        return spin_atom(m);
    }
    if (i < n) return x == i ? i + 1 : -i;
    return x == n - 1 ? -n : -(n - 1);
}

Atom atom_e(const World& w, Atom x, int i) {
    if (!atom_eps(w, x, i)) return 0;
    if (w.kind == Classical::A) return x - 1;
    int n = w.n;
    if (is_spin(x)) {
        std::uint32_t m = spin_mask(x);
        if (i < n) m ^= (1u << (i - 1)) | (1u << i);
        else m &= ~((1u << (n - 2)) | (1u << (n - 1)));
        return spin_atom(m);
    }
    if (i < n) return x == i + 1 ? i : -(i + 1);
    return x == -n ? n - 1 : n;
}

namespace {

struct Sig {
    int eps = 0;
    int phi = 0;
    int first_plus = -1;  // position of leftmost surviving +
    int last_minus = -1;  // position of rightmost surviving -
};

Sig signature(const World& w, const Word& x, int i) {
    Sig s;
    std::vector<int> pluses;
    for (int k = 0; k < static_cast<int>(x.size()); ++k) {
        if (atom_phi(w, x[k], i)) {
            if (!pluses.empty()) {
                pluses.pop_back();
            } else {
                ++s.phi;
                s.last_minus = k;
            }
        } else if (atom_eps(w, x[k], i)) {
            pluses.push_back(k);
        }
    }
    s.eps = static_cast<int>(pluses.size());
    if (!pluses.empty()) s.first_plus = pluses.front();
    return s;
}

}  // namespace

int word_eps(const World& w, const Word& x, int i) { return signature(w, x, i).eps; }
int word_phi(const World& w, const Word& x, int i) { return signature(w, x, i).phi; }

bool word_f(const World& w, Word& x, int i) {
    Sig s = signature(w, x, i);
    if (s.last_minus < 0) return false;
    x[s.last_minus] = atom_f(w, x[s.last_minus], i);
    return true;
}

bool word_e(const World& w, Word& x, int i) {
    Sig s = signature(w, x, i);
    if (s.first_plus < 0) return false;
    x[s.first_plus] = atom_e(w, x[s.first_plus], i);
    return true;
}

Weight word_weight(const World& w, const Word& x) {
    Weight wt(w.n + 1, 0);
    for (Atom a : x)
        for (int i = 1; i <= w.n; ++i) wt[i] += atom_phi(w, a, i) - atom_eps(w, a, i);
    return wt;
}

std::string atom_string(const World& w, Atom x) {
    if (is_spin(x)) {
        std::string s = "(";
        for (int k = 1; k <= w.n; ++k) s += spin_minus(spin_mask(x), k) ? '-' : '+';
        return s + ")";
    }
    if (x < 0) return "-" + std::to_string(-x);
    return std::to_string(x);
}

std::string word_string(const World& w, const Word& x) {
    std::string s;
    for (std::size_t k = 0; k < x.size(); ++k) {
        if (k) s += ' ';
        s += atom_string(w, x[k]);
    }
    return s;
}

Atom sigma_atom_d(const World& w, Atom x) {
    if (is_spin(x)) return spin_atom(spin_mask(x) ^ (1u << (w.n - 1)));
    if (x == w.n) return -w.n;
    if (x == -w.n) return w.n;
    return x;
}

World world_of(AffineType t) {
    switch (t.family) {
        case Family::A1: return {Classical::A, t.n};
        case Family::D1: return {Classical::D, t.n};
        default: {
            FoldingData fd = folding(t);
            return {fd.ambient.family == Family::A1 ? Classical::A : Classical::D, fd.ambient.n};
        }
    }
}

Ops::Ops(AffineType t) : type_(t), world_(world_of(t)), folded_(is_folded(t.family)) {
    if (folded_) fold_ = folding(t);
}

bool Ops::f(int a, Word& x) const {
    if (!folded_) return word_f(world_, x, a);
    Word y = x;
    for (int b : fold_.orbit[a])
        for (int k = 0; k < fold_.gamma[a]; ++k)
            if (!word_f(world_, y, b)) return false;
    x = std::move(y);
    return true;
}

bool Ops::e(int a, Word& x) const {
    if (!folded_) return word_e(world_, x, a);
    Word y = x;
    for (int b : fold_.orbit[a])
        for (int k = 0; k < fold_.gamma[a]; ++k)
            if (!word_e(world_, y, b)) return false;
    x = std::move(y);
    return true;
}

int Ops::eps(int a, const Word& x) const {
    if (!folded_) return word_eps(world_, x, a);
    return word_eps(world_, x, fold_.orbit[a][0]) / fold_.gamma[a];
}

int Ops::phi(int a, const Word& x) const {
    if (!folded_) return word_phi(world_, x, a);
    return word_phi(world_, x, fold_.orbit[a][0]) / fold_.gamma[a];
}

std::vector<int> Ops::eps_vec(const Word& x) const {
    std::vector<int> v(rank() + 1, 0);
    for (int a = 1; a <= rank(); ++a) v[a] = eps(a, x);
    return v;
}

Weight Ops::weight(const Word& x) const {
    Weight amb = word_weight(world_, x);
    if (!folded_) return amb;
    Weight w(rank() + 1, 0);
    for (int a = 1; a <= rank(); ++a) w[a] = amb[fold_.orbit[a][0]] / fold_.gamma[a];
    return w;
}

bool Ops::is_highest(const Word& x) const {
    for (int a = 1; a <= rank(); ++a)
        if (eps(a, x) > 0) return false;
    return true;
}

bool Ops::alignment_ok(const Word& x) const {
    if (!folded_) return true;
    for (int a = 1; a <= rank(); ++a) {
        int e0 = word_eps(world_, x, fold_.orbit[a][0]);
        int p0 = word_phi(world_, x, fold_.orbit[a][0]);
        if (e0 % fold_.gamma[a] || p0 % fold_.gamma[a]) return false;
        for (int b : fold_.orbit[a])
            if (word_eps(world_, x, b) != e0 || word_phi(world_, x, b) != p0) return false;
    }
    return true;
}

std::pair<Word, std::vector<int>> Ops::raise(Word x) const {
    std::vector<int> word;
    for (;;) {
        bool moved = false;
        for (int a = 1; a <= rank(); ++a) {
            if (eps(a, x) > 0 && e(a, x)) {
                word.push_back(a);
                moved = true;
                break;
            }
        }
        if (!moved) break;
    }
    return {std::move(x), std::move(word)};
}

Word Ops::lower_fully(Word x) const {
    for (;;) {
        bool moved = false;
        for (int a = 1; a <= rank(); ++a) {
            if (phi(a, x) > 0 && f(a, x)) {
                moved = true;
                break;
            }
        }
        if (!moved) return x;
    }
}

Word Ops::star(const Word& x) const {
    auto [hw, ew] = raise(x);
    Word y = lower_fully(hw);
    for (auto it = ew.rbegin(); it != ew.rend(); ++it)
        if (!e(tau(type_, *it), y)) throw std::logic_error("lusztig star: e undefined");
    return y;
}

ComponentGraph generate_component(const Ops& ops, const Word& seed, std::size_t budget) {
    ComponentGraph g;
    std::deque<int> queue;
    auto add = [&](const Word& w) {
        auto [it, fresh] = g.index.emplace(w, static_cast<int>(g.elements.size()));
        if (fresh) {
            if (g.elements.size() >= budget) throw BudgetExceeded("component exceeds node budget");
            g.elements.push_back(w);
            queue.push_back(it->second);
        }
    };
    add(seed);
    while (!queue.empty()) {
        int k = queue.front();
        queue.pop_front();
        for (int a = 1; a <= ops.rank(); ++a) {
            Word y = g.elements[k];
            if (ops.f(a, y)) add(y);
            y = g.elements[k];
            if (ops.e(a, y)) add(y);
        }
    }
    int hw = -1;
    for (std::size_t k = 0; k < g.elements.size(); ++k)
        if (ops.is_highest(g.elements[k])) {
            if (hw >= 0) throw std::logic_error("component with two highest elements");
            hw = static_cast<int>(k);
        }
    g.highest = hw;
    return g;
}

bool dual_f(const Ops& ops, int a, DualElement& x) { return ops.e(a, x.base); }
bool dual_e(const Ops& ops, int a, DualElement& x) { return ops.f(a, x.base); }
Weight dual_weight(const Ops& ops, const DualElement& x) {
    Weight w = ops.weight(x.base);
    for (auto& v : w) v = -v;
    return w;
}

std::size_t node_budget() {
    if (const char* env = std::getenv("RCBIJ_BUDGET")) {
        long long v = std::atoll(env);
        if (v > 0) return static_cast<std::size_t>(v);
    }
    return 1000000;
}

}  // namespace rcbij
