#include "rcbij/lifted.hpp"

#include "cache.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

#include "rcbij/energy.hpp"

namespace rcbij {

LiftedKind lifted_kind(AffineType t, Factor f) {
    if (f.s >= 2) return LiftedKind::S;
    if (f.r == t.n && (t.family == Family::D2 || t.family == Family::B1)) return LiftedKind::HSp;
    if (f.r == 1) return LiftedKind::H;
    return LiftedKind::B;
}

std::vector<Factor> folded_after(AffineType t, const std::vector<Factor>& F) {
    Factor f = F.at(0);
    std::vector<Factor> out;
    switch (lifted_kind(t, f)) {
        case LiftedKind::H:
        case LiftedKind::HSp: break;
        case LiftedKind::B: out = {{1, 1}, {f.r - 1, 1}}; break;
        case LiftedKind::S: out = {{f.r, 1}, {f.r, f.s - 1}}; break;
    }
    out.insert(out.end(), F.begin() + 1, F.end());
    return out;
}

std::vector<MoveStep> lifted_program(AffineType t, Factor f) {
    int n = t.n, r = f.r, s = f.s;
    using M = Move;
    auto reorder = [](std::vector<Factor> tg) { return MoveStep{M::Reorder, std::move(tg)}; };
    LiftedKind kind = lifted_kind(t, f);
    if (ambient_is_a(t.family)) {
        int m = 2 * n;
        bool cn = t.family == Family::C1 && r == n;
        switch (kind) {
            case LiftedKind::H: return {{M::Drop}, {M::Sigma}, {M::Drop}, {M::Sigma}};
            case LiftedKind::HSp: {
                std::vector<MoveStep> prog;
                for (int k = 0; k < n - 1; ++k) {
                    prog.push_back({M::Split});
                    prog.push_back({M::Drop});
                }
                prog.push_back({M::Drop});
                return prog;
            }
            case LiftedKind::B: {
                std::vector<MoveStep> prog;
                if (cn) prog.push_back({M::SplitS});
                prog.push_back({M::Split});
                prog.push_back(reorder({{m - r, 1}, {1, 1}, {r - 1, 1}}));
                prog.push_back({M::Sigma});
                prog.push_back({M::Split});
                prog.push_back({M::Sigma});
                prog.push_back(reorder({{1, 1}, {m - 1, 1}, {r - 1, 1}, {m - r + 1, 1}}));
                return prog;
            }
            case LiftedKind::S:
                if (t.family == Family::D2 && r == n) return {{M::SplitS}};
                if (cn)
                    return {{M::SplitS}, reorder({{n, 2 * s - 1}, {n, 1}}), {M::SplitS},
                            reorder({{n, 1}, {n, 1}, {n, 2 * s - 2}}), {M::MergeS}};
                return {{M::SplitS}, reorder({{m - r, s}, {r, s - 1}, {r, 1}}), {M::SplitS},
                        reorder({{r, 1}, {m - r, 1}, {r, s - 1}, {m - r, s - 1}})};
        }
    }
    bool b1 = t.family == Family::B1;
    switch (kind) {
        case LiftedKind::H:
            if (b1) return {{M::SplitS}, {M::Drop}, {M::Drop}};
            return {{M::Drop}};
        case LiftedKind::HSp: return {{M::Drop}, {M::Drop}};
        case LiftedKind::B:
            if (b1) return {{M::SplitS2}};
            if (r == n) return {{M::SpinPairLb}};
            return {{M::Split}};
        case LiftedKind::S:
            if (r == n)
                return {{M::SplitS}, reorder({{n + 1, s}, {n, s - 1}, {n, 1}}), {M::SplitS},
                        reorder({{n, 1}, {n + 1, 1}, {n, s - 1}, {n + 1, s - 1}})};
            if (b1)
                return {{M::SplitS}, reorder({{r, 2 * s - 1}, {r, 1}}), {M::SplitS},
                        reorder({{r, 1}, {r, 1}, {r, 2 * s - 2}}), {M::MergeS}};
            return {{M::SplitS}};
    }
    return {};
}

// ---------------------------------------------------------------------------
// Spin pairs and height-n columns

namespace {

struct SpinColumnIso {
    std::unordered_map<Word, Word, WordHash> to_col, to_pair;
};

const SpinColumnIso& spin_column_iso(int N) {
    static std::map<int, SpinColumnIso> cache;
    std::lock_guard lock(detail::cache_mutex());
    auto it = cache.find(N);
    if (it != cache.end()) return it->second;
    AffineType d{Family::D1, N};
    Ops ops(d);
    int h = N - 1;
    std::map<Weight, Word> col_hw;
    col_hw[ops.weight(hw_filling(h, 1, {}))] = hw_filling(h, 1, {});
    for (int k = 2; k <= h; k += 2) {
        Word c = hw_filling(h, 1, {k});
        col_hw[ops.weight(c)] = c;
    }
    SpinColumnIso iso;
    auto pairs = enumerate_highest(d, {{N - 1, 1}, {N, 1}});
    if (pairs.size() != col_hw.size()) throw std::logic_error("spin pair: decompositions differ");
    for (const auto& p : pairs) {
        Word pw = flat(p);
        auto c = col_hw.find(ops.weight(pw));
        if (c == col_hw.end()) throw std::logic_error("spin pair: weight without column");
        ComponentGraph g = generate_component(ops, pw, node_budget());
        for (const Word& x : g.elements) {
            auto [hw, ew] = ops.raise(x);
            Word y = c->second;
            for (auto e = ew.rbegin(); e != ew.rend(); ++e)
                if (!ops.f(*e, y)) throw std::logic_error("spin pair: f undefined on column");
            iso.to_col[x] = y;
            iso.to_pair[y] = x;
        }
    }
    return cache.emplace(N, std::move(iso)).first->second;
}

}  // namespace

Word spin_pair_to_column(int N, const Word& pair) {
    const auto& iso = spin_column_iso(N);
    auto it = iso.to_col.find(pair);
    if (it == iso.to_col.end()) throw OffImage("spin pair outside B^{n,1} (x) B^{n+1,1}");
    return it->second;
}

Word column_to_spin_pair(int N, const Word& column) {
    const auto& iso = spin_column_iso(N);
    auto it = iso.to_pair.find(column);
    if (it == iso.to_pair.end()) throw OffImage("column outside the height n tableaux");
    return it->second;
}

Path lb_s_inverse(AffineType t, const Path& p, int r, int s) {
    const FactorSet& fs = factor_set(t, r, s);
    Ops ops(t);
    Word pair = p.elems.at(0);
    pair.insert(pair.end(), p.elems.at(1).begin(), p.elems.at(1).end());
    auto [hw, ew] = ops.raise(pair);
    for (int c = 0; c < static_cast<int>(fs.comp_highest.size()); ++c) {
        const Word& u = fs.elems[fs.comp_highest[c]];
        Path single{{{r, s}}, {u}};
        auto img = lb_s(t, single);
        if (!img || flat(*img) != hw) continue;
        Word y = u;
        for (auto e = ew.rbegin(); e != ew.rend(); ++e)
            if (!ops.f(*e, y)) throw std::logic_error("lb_s inverse: f undefined");
        Path q;
        q.factors.push_back({r, s});
        q.elems.push_back(y);
        q.factors.insert(q.factors.end(), p.factors.begin() + 2, p.factors.end());
        q.elems.insert(q.elems.end(), p.elems.begin() + 2, p.elems.end());
        return q;
    }
    throw OffImage("lb_s inverse: pair outside the image");
}

// ---------------------------------------------------------------------------
// Interpreters

namespace {

Factor sigma_factor(AffineType amb, Factor f) { return {sigma_node(amb, f.r), f.s}; }

// Bubbles factors with R-matrices until the prefix equals target.
Path reorder_path(AffineType amb, Path p, const std::vector<Factor>& target) {
    for (std::size_t i = 0; i < target.size(); ++i) {
        std::size_t j = i;
        while (j < p.factors.size() && p.factors[j] != target[i]) ++j;
        if (j == p.factors.size()) throw std::logic_error("reorder: factor missing");
        for (std::size_t k = j; k-- > i;) p = rmatrix(amb, p, static_cast<int>(k));
    }
    return p;
}

std::vector<Factor> reorder_factors(std::vector<Factor> F, const std::vector<Factor>& target) {
    for (std::size_t i = 0; i < target.size(); ++i) {
        std::size_t j = i;
        while (j < F.size() && F[j] != target[i]) ++j;
        if (j == F.size()) throw std::logic_error("reorder: factor missing");
        std::rotate(F.begin() + i, F.begin() + j, F.begin() + j + 1);
    }
    return F;
}

Path drop_front(const Path& p) {
    Path q;
    q.factors.assign(p.factors.begin() + 1, p.factors.end());
    q.elems.assign(p.elems.begin() + 1, p.elems.end());
    return q;
}

Path path_move(AffineType t, AffineType amb, const MoveStep& mv, const Path& p, Word* dropped) {
    auto need = [](std::optional<Path> q, const char* what) {
        if (!q) throw OffImage(std::string("lifted path op: ") + what + " undefined");
        return *q;
    };
    switch (mv.move) {
        case Move::Drop:
            if (dropped) dropped->insert(dropped->end(), p.elems[0].begin(), p.elems[0].end());
            return drop_front(p);
        case Move::Split: return need(lb(amb, p), "lb");
        case Move::SplitS: return need(ls(amb, p), "ls");
        case Move::MergeS: {
            Path q = drop_front(drop_front(p));
            Factor a = p.factors[0], b = p.factors[1];
            if (a.r != b.r || a.s != 1) throw OffImage("lifted path op: ls inverse on wrong shapes");
            Word w = p.elems[0];
            w.insert(w.end(), p.elems[1].begin(), p.elems[1].end());
            if (factor_set(amb, a.r, b.s + 1).find(w) < 0) throw OffImage("lifted path op: ls inverse off image");
            q.factors.insert(q.factors.begin(), {a.r, b.s + 1});
            q.elems.insert(q.elems.begin(), w);
            return q;
        }
        case Move::Reorder: return reorder_path(amb, p, mv.target);
        case Move::Sigma: return sigma_path(amb, p);
        case Move::SplitS2: return need(lb_s(amb, p), "lb_s");
        case Move::SpinPairLb: {
            Word pair = p.elems[0];
            pair.insert(pair.end(), p.elems[1].begin(), p.elems[1].end());
            Word col = spin_pair_to_column(amb.n, pair);
            Path q = drop_front(drop_front(p));
            q.factors.insert(q.factors.begin(), {{1, 1}, {t.n - 1, 1}});
            q.elems.insert(q.elems.begin(), {Word{col[0]}, Word(col.begin() + 1, col.end())});
            return q;
        }
    }
    return p;
}

Path path_move_inverse(AffineType amb, const MoveStep& mv, const Path& after,
                       const std::vector<Factor>& before, Word& emitted) {
    switch (mv.move) {
        case Move::Drop: {
            Factor f = before[0];
            int len = word_length(amb, f.r, f.s);
            if (static_cast<int>(emitted.size()) < len) throw std::logic_error("stepwise: emission exhausted");
            Word w(emitted.end() - len, emitted.end());
            emitted.resize(emitted.size() - len);
            Path q = after;
            q.factors.insert(q.factors.begin(), f);
            q.elems.insert(q.elems.begin(), w);
            return q;
        }
        case Move::Split:
        case Move::SplitS: {
            Path q = drop_front(drop_front(after));
            Word w = after.elems[0];
            w.insert(w.end(), after.elems[1].begin(), after.elems[1].end());
            q.factors.insert(q.factors.begin(), before[0]);
            q.elems.insert(q.elems.begin(), w);
            return q;
        }
        case Move::MergeS: {
            Path q = drop_front(after);
            Factor f = before[0];
            std::size_t cut = static_cast<std::size_t>(word_length(amb, f.r, f.s));
            const Word& w = after.elems[0];
            q.factors.insert(q.factors.begin(), {before[0], before[1]});
            q.elems.insert(q.elems.begin(), {Word(w.begin(), w.begin() + cut), Word(w.begin() + cut, w.end())});
            return q;
        }
        case Move::Reorder: return reorder_path(amb, after, std::vector<Factor>(before.begin(), before.begin() + mv.target.size()));
        case Move::Sigma: return sigma_path(amb, after);
        case Move::SplitS2: return lb_s_inverse(amb, after, before[0].r, before[0].s);
        case Move::SpinPairLb: {
            Word col = after.elems[0];
            col.insert(col.end(), after.elems[1].begin(), after.elems[1].end());
            Word pair = column_to_spin_pair(amb.n, col);
            Path q = drop_front(drop_front(after));
            q.factors.insert(q.factors.begin(), {before[0], before[1]});
            q.elems.insert(q.elems.begin(), {Word{pair[0]}, Word{pair[1]}});
            return q;
        }
    }
    return after;
}

// Configuration side of one move; F is the ambient factor list, updated in place.
RC rc_move(AffineType t, AffineType amb, const MoveStep& mv, const RC& rc, std::vector<Factor>& F, Word& emitted) {
    if (mv.move == Move::Sigma) {
        for (auto& x : F) x = sigma_factor(amb, x);
        return varsigma(amb, rc);
    }
    if (mv.move == Move::Reorder) {
        F = reorder_factors(F, mv.target);
        return rc;
    }
    Mult L = mult_of(F);
    Factor f = F.at(0);
    std::vector<Factor> rest(F.begin() + 1, F.end());
    RC out = rc;
    switch (mv.move) {
        case Move::Drop: {
            DeltaResult d = is_spin_factor(amb, f.r) ? delta_sp(amb, rc, L, f.r) : delta(amb, rc, L);
            if (f != Factor{1, 1} && !is_spin_factor(amb, f.r)) throw std::logic_error("lifted delta on wrong factor");
            emitted.push_back(d.emitted);
            F = rest;
            return d.rc;
        }
        case Move::Split:
            out = beta(amb, rc, L, f.r);
            F = {{1, 1}, {f.r - 1, 1}};
            break;
        case Move::SplitS: F = {{f.r, 1}, {f.r, f.s - 1}}; break;
        case Move::MergeS:
            rest.erase(rest.begin());
            F = {{f.r, F[1].s + 1}};
            break;
        case Move::Reorder:
        case Move::Sigma: break;
        case Move::SplitS2:
            out = beta_s(amb, rc, L, f.r, f.s);
            F = {{1, f.s}, {f.r - 1, f.s}};
            break;
        case Move::SpinPairLb: {
            rest.erase(rest.begin());
            F = {{1, 1}, {t.n - 1, 1}};
            F.insert(F.end(), rest.begin(), rest.end());
            return add_singular_strings(amb, rc, mult_of(F), t.n, 1);
        }
    }
    F.insert(F.end(), rest.begin(), rest.end());
    return out;
}

}  // namespace

Path lifted_path_op(AffineType t, const Path& ambient) {
    // the folded front factor is recovered from the ambient prefix
    AffineType amb = ambient_type(t);
    for (int r = 1; r <= t.n; ++r)
        for (int s = 1; s <= 2 * static_cast<int>(ambient.elems.size() ? ambient.elems[0].size() : 1); ++s) {
            auto shapes = ambient_shapes(t, {{r, s}});
            if (shapes.size() > ambient.factors.size() ||
                !std::equal(shapes.begin(), shapes.end(), ambient.factors.begin()))
                continue;
            Path p = ambient;
            for (const auto& mv : lifted_program(t, {r, s})) p = path_move(t, amb, mv, p, nullptr);
            return p;
        }
    throw OffImage("lifted path op: no folded factor matches the ambient prefix");
}

LiftedRc lifted_rc_op(AffineType t, const RC& ambient, const std::vector<Factor>& ambient_factors, Factor front) {
    AffineType amb = ambient_type(t);
    LiftedRc out{ambient, ambient_factors, {}};
    for (const auto& mv : lifted_program(t, front)) out.rc = rc_move(t, amb, mv, out.rc, out.factors, out.emitted);
    return out;
}

Path phi_folded_inv_stepwise(AffineType t, const RC& rc, const std::vector<Factor>& factors) {
    if (!is_folded(t.family)) throw std::domain_error("stepwise evaluator needs a folded type");
    AffineType amb = ambient_type(t);
    Mult L = mult_of(factors);
    if (auto v = validate(t, rc, L)) throw OffImage("stepwise: invalid configuration");
    struct Rec {
        MoveStep mv;
        std::vector<Factor> before;
    };
    std::vector<Rec> recs;
    std::vector<Factor> F = factors;
    std::vector<Factor> FA = ambient_shapes(t, F);
    RC X = emb_rc(t, rc);
    Word emitted;
    while (!F.empty()) {
        for (const auto& mv : lifted_program(t, F[0])) {
            recs.push_back({mv, FA});
            X = rc_move(t, amb, mv, X, FA, emitted);
        }
        F = folded_after(t, F);
        if (FA != ambient_shapes(t, F)) throw std::logic_error("stepwise: ambient factors drifted");
        auto back = emb_rc_inv(t, X);
        if (!back || !is_valid(t, *back, mult_of(F))) throw OffImage("stepwise: lifted operation left the image");
    }
    Path P{{}, {}};
    for (auto it = recs.rbegin(); it != recs.rend(); ++it) P = path_move_inverse(amb, it->mv, P, it->before, emitted);
    if (!emitted.empty()) throw std::logic_error("stepwise: unused emissions");
    auto p = devirtualize(t, P, factors);
    if (!p) throw OffImage("stepwise: ambient path outside the virtual image");
    return *p;
}

LiftedCheck check_lifted_ladder(AffineType t, const Path& p) {
    LiftedCheck res;
    AffineType amb = ambient_type(t);
    try {
        std::vector<Factor> F = p.factors;
        Path P = virtualize(t, p);
        RC X = emb_rc(t, phi_folded(t, p));
        while (!F.empty()) {
            Factor front = F[0];
            Word dropped;
            Path P2 = P;
            for (const auto& mv : lifted_program(t, front)) P2 = path_move(t, amb, mv, P2, &dropped);
            LiftedRc R = lifted_rc_op(t, X, P.factors, front);
            F = folded_after(t, F);
            ++res.steps;
            std::string where = " at step " + std::to_string(res.steps);
            if (R.factors != P2.factors) throw std::logic_error("factor lists differ" + where);
            if (R.emitted != dropped) throw std::logic_error("emitted atoms differ from removed atoms" + where);
            if (!devirtualize(t, P2, F)) throw std::logic_error("path left the virtual image" + where);
            auto back = emb_rc_inv(t, R.rc);
            if (!back || !is_valid(t, *back, mult_of(F))) throw std::logic_error("configuration left the image" + where);
            if (!F.empty() && phi_native(amb, P2) != R.rc) throw std::logic_error("square does not commute" + where);
            P = P2;
            X = R.rc;
        }
        for (const auto& part : X.nu)
            if (!part.empty()) throw std::logic_error("configuration not exhausted");
    } catch (const std::exception& e) {
        res.ok = false;
        res.failure = e.what();
    }
    return res;
}

}  // namespace rcbij
