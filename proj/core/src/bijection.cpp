#include "rcbij/bijection.hpp"

#include <algorithm>
#include <functional>
#include <limits>

namespace rcbij {

Mult mult_after_lh(const Mult& L) { return mult_add(L, {1, 1}, -1); }

Mult mult_after_lh_sp(const Mult& L, int r) { return mult_add(L, {r, 1}, -1); }

Mult mult_after_lb(const Mult& L, int r) {
    return mult_add(mult_add(mult_add(L, {r, 1}, -1), {1, 1}, 1), {r - 1, 1}, 1);
}

Mult mult_after_ls(const Mult& L, int r, int s) {
    return mult_add(mult_add(mult_add(L, {r, s}, -1), {r, 1}, 1), {r, s - 1}, 1);
}

Mult mult_after_lb_s(const Mult& L, int r, int s) {
    return mult_add(mult_add(mult_add(L, {r, s}, -1), {1, s}, 1), {r - 1, s}, 1);
}

Atom spin_highest(int n, int r) { return spin_atom(r == n ? 0u : (1u << (n - 1))); }

namespace {

World native_world(AffineType t) {
    if (is_folded(t.family)) throw std::domain_error("native bijection maps need type A or D");
    return world_of(t);
}

struct DeltaSearch {
    AffineType t;
    World w;
    const RC& rc;
    Mult Lafter;
    std::vector<std::vector<char>> singular;
};

DeltaResult delta_finish(const DeltaSearch& ds, const std::vector<std::pair<int, int>>& picks, Atom b,
                         const std::vector<Selection>& sel) {
    int n = ds.t.n;
    std::vector<std::vector<char>> mark(n + 1);
    RC cut = ds.rc;
    for (int a = 1; a <= n; ++a) mark[a].assign(cut.nu[a].size(), 0);
    for (auto [a, idx] : picks) {
        cut.nu[a][idx].len -= 1;
        mark[a][idx] = 1;
    }
    RC out = empty_rc(n);
    std::vector<std::vector<char>> keep(n + 1);
    for (int a = 1; a <= n; ++a)
        for (std::size_t k = 0; k < cut.nu[a].size(); ++k)
            if (cut.nu[a][k].len > 0) {
                out.nu[a].push_back(cut.nu[a][k]);
                keep[a].push_back(mark[a][k]);
            }
    Vacancy vac(ds.t);
    RC ref = out;
    for (int a = 1; a <= n; ++a)
        for (std::size_t k = 0; k < out.nu[a].size(); ++k)
            if (keep[a][k]) out.nu[a][k].rig2 = vac.p2(ds.Lafter, ref, a, out.nu[a][k].len);
    normalize(out);
    return {out, b, sel};
}

// Explores the selection procedure; with tb set only one branch is followed.
void delta_search(const DeltaSearch& ds, std::vector<std::vector<char>>& used, Atom b, int ell,
                  std::vector<std::pair<int, int>>& picks, std::vector<Selection>& sel, const TieBreak* tb,
                  std::vector<DeltaResult>& out) {
    int n = ds.t.n;
    int best = std::numeric_limits<int>::max();
    std::vector<std::pair<int, int>> cands;  // (node, row index)
    for (int a = 1; a <= n; ++a) {
        if (!atom_phi(ds.w, b, a)) continue;
        int bl = std::numeric_limits<int>::max(), bi = -1;
        const auto& p = ds.rc.nu[a];
        for (std::size_t k = 0; k < p.size(); ++k)
            if (!used[a][k] && ds.singular[a][k] && p[k].len >= ell && p[k].len < bl) {
                bl = p[k].len;
                bi = static_cast<int>(k);
            }
        if (bi < 0) continue;
        if (bl < best) {
            best = bl;
            cands.clear();
        }
        if (bl == best) cands.emplace_back(a, bi);
    }
    if (cands.empty()) {
        out.push_back(delta_finish(ds, picks, b, sel));
        return;
    }
    std::vector<std::pair<int, int>> branch = cands;
    if (tb) branch = {*tb == TieBreak::Smallest ? cands.front() : cands.back()};
    for (auto [a, k] : branch) {
        used[a][k] = 1;
        picks.emplace_back(a, k);
        sel.push_back({a, best});
        delta_search(ds, used, atom_f(ds.w, b, a), best, picks, sel, tb, out);
        sel.pop_back();
        picks.pop_back();
        used[a][k] = 0;
    }
}

std::vector<DeltaResult> run_delta(AffineType t, const RC& rc, const Mult& L, const Mult& Lafter, Atom start,
                                   const TieBreak* tb) {
    DeltaSearch ds{t, native_world(t), rc, Lafter, {}};
    Vacancy vac(t);
    int n = t.n;
    ds.singular.assign(n + 1, {});
    std::vector<std::vector<char>> used(n + 1);
    for (int a = 1; a <= n; ++a) {
        for (const auto& st : rc.nu[a]) ds.singular[a].push_back(st.rig2 == vac.p2(L, rc, a, st.len));
        used[a].assign(rc.nu[a].size(), 0);
    }
    std::vector<std::pair<int, int>> picks;
    std::vector<Selection> sel;
    std::vector<DeltaResult> out;
    delta_search(ds, used, start, 1, picks, sel, tb, out);
    return out;
}

}  // namespace

DeltaResult delta(AffineType t, const RC& rc, const Mult& L, TieBreak tb) {
    return run_delta(t, rc, L, mult_after_lh(L), 1, &tb).front();
}

DeltaResult delta_sp(AffineType t, const RC& rc, const Mult& L, int r, TieBreak tb) {
    return run_delta(t, rc, L, mult_after_lh_sp(L, r), spin_highest(t.n, r), &tb).front();
}

std::vector<DeltaResult> delta_all_choices(AffineType t, const RC& rc, const Mult& L, Factor front) {
    if (front == Factor{1, 1} && !is_spin_factor(t, 1)) return run_delta(t, rc, L, mult_after_lh(L), 1, nullptr);
    return run_delta(t, rc, L, mult_after_lh_sp(L, front.r), spin_highest(t.n, front.r), nullptr);
}

std::vector<int> canonical_fword(const World& w, Atom b) {
    std::vector<int> ew;
    for (;;) {
        bool moved = false;
        for (int i = 1; i <= w.n; ++i)
            if (atom_eps(w, b, i)) {
                b = atom_e(w, b, i);
                ew.push_back(i);
                moved = true;
                break;
            }
        if (!moved) break;
    }
    std::reverse(ew.begin(), ew.end());
    return ew;
}

namespace {

RC add_core(AffineType t, const RC& rc, Atom b, const Mult& L, const Mult& Lafter, const std::vector<int>* fword) {
    World w = native_world(t);
    std::vector<int> fw = fword ? *fword : canonical_fword(w, b);
    Vacancy vac(t);
    int n = t.n;
    RC cur = rc;
    std::vector<std::vector<char>> sing(n + 1), mod(n + 1);
    for (int a = 1; a <= n; ++a) {
        for (const auto& st : cur.nu[a]) sing[a].push_back(st.rig2 == vac.p2(Lafter, rc, a, st.len));
        mod[a].assign(cur.nu[a].size(), 0);
    }
    int bound = std::numeric_limits<int>::max();
    for (auto it = fw.rbegin(); it != fw.rend(); ++it) {
        int a = *it;
        int bi = -1, bl = 0;
        for (std::size_t k = 0; k < cur.nu[a].size(); ++k) {
            const auto& st = cur.nu[a][k];
            if (mod[a][k] || !sing[a][k] || st.len + 1 > bound) continue;
            if (bi < 0 || st.len > bl) {
                bi = static_cast<int>(k);
                bl = st.len;
            }
        }
        if (bi < 0) {
            cur.nu[a].push_back({1, 0});
            sing[a].push_back(0);
            mod[a].push_back(1);
            bound = 1;
        } else {
            cur.nu[a][bi].len += 1;
            mod[a][bi] = 1;
            bound = bl + 1;
        }
    }
    RC ref = cur;
    for (int a = 1; a <= n; ++a)
        for (std::size_t k = 0; k < cur.nu[a].size(); ++k)
            if (mod[a][k]) cur.nu[a][k].rig2 = vac.p2(L, ref, a, cur.nu[a][k].len);
    normalize(cur);
    return cur;
}

}  // namespace

namespace {

void all_fwords(const World& w, Atom b, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    bool top = true;
    for (int i = 1; i <= w.n; ++i)
        if (atom_eps(w, b, i)) {
            top = false;
            cur.push_back(i);
            all_fwords(w, atom_e(w, b, i), cur, out);
            cur.pop_back();
        }
    if (top) out.emplace_back(cur.rbegin(), cur.rend());
}

// The f-word only fixes the visited nodes up to commuting moves, so each
// ordering is tried and the one that delta sends back to (rc, b) is kept.
RC add_search(AffineType t, const RC& rc, Atom b, const Mult& L, const Mult& Lafter, Atom top,
              const std::vector<int>* fword) {
    if (fword) return add_core(t, rc, b, L, Lafter, fword);
    World w = native_world(t);
    std::vector<std::vector<int>> words;
    std::vector<int> cur;
    all_fwords(w, b, cur, words);
    for (const auto& fw : words) {
        RC cand = add_core(t, rc, b, L, Lafter, &fw);
        if (!is_valid(t, cand, L)) continue;
        auto back = run_delta(t, cand, L, Lafter, top, nullptr);
        if (back.front().rc == rc && back.front().emitted == b) return cand;
    }
    throw OffImage("delta inverse: no admissible string choice for " + atom_string(w, b));
}

}  // namespace

RC delta_add(AffineType t, const RC& rc, Atom b, const Mult& L, const std::vector<int>* fword) {
    return add_search(t, rc, b, L, mult_after_lh(L), 1, fword);
}

RC delta_sp_add(AffineType t, const RC& rc, Atom b, const Mult& L, int r, const std::vector<int>* fword) {
    return add_search(t, rc, b, L, mult_after_lh_sp(L, r), spin_highest(t.n, r), fword);
}

RC add_singular_strings(AffineType t, const RC& rc, const Mult& Lafter, int r, int len) {
    Vacancy vac(t);
    RC cur = rc;
    std::vector<std::size_t> pos(t.n + 1, 0);
    for (int a = 1; a < r; ++a) {
        pos[a] = cur.nu[a].size();
        cur.nu[a].push_back({len, 0});
    }
    RC ref = cur;
    for (int a = 1; a < r; ++a) cur.nu[a][pos[a]].rig2 = vac.p2(Lafter, ref, a, len);
    normalize(cur);
    return cur;
}

namespace {

std::optional<RC> remove_singular_rows(AffineType t, const RC& rc, const Mult& Lafter, int r, int len) {
    Vacancy vac(t);
    RC cur = rc;
    for (int a = 1; a < r; ++a) {
        int p = vac.p2(Lafter, rc, a, len);
        auto& part = cur.nu[a];
        auto it = std::find(part.begin(), part.end(), String{len, p});
        if (it == part.end()) return std::nullopt;
        part.erase(it);
    }
    return cur;
}

}  // namespace

RC beta(AffineType t, const RC& rc, const Mult& L, int r) { return add_singular_strings(t, rc, mult_after_lb(L, r), r, 1); }

std::optional<RC> beta_remove(AffineType t, const RC& rc, const Mult& Lafter, int r) {
    return remove_singular_rows(t, rc, Lafter, r, 1);
}

RC beta_s(AffineType t, const RC& rc, const Mult& L, int r, int s) {
    return add_singular_strings(t, rc, mult_after_lb_s(L, r, s), r, s);
}

std::optional<RC> beta_s_remove(AffineType t, const RC& rc, const Mult& Lafter, int r, int s) {
    return remove_singular_rows(t, rc, Lafter, r, s);
}

DeltaResult delta_tilde(AffineType t, const RC& rc, const Mult& L) {
    DeltaResult d = delta(t, theta(t, rc, L), L);
    d.rc = theta(t, d.rc, mult_after_lh(L));
    return d;
}

DeltaResult delta_sp_tilde(AffineType t, const RC& rc, const Mult& L, int r) {
    DeltaResult d = delta_sp(t, theta(t, rc, L), L, r);
    d.rc = theta(t, d.rc, mult_after_lh_sp(L, r));
    return d;
}

RC beta_tilde(AffineType t, const RC& rc, const Mult& L, int r) {
    return theta(t, beta(t, theta(t, rc, L), L, r), mult_after_lb(L, r));
}

RC gamma_tilde(AffineType t, const RC& rc, const Mult& L, int r, int s) {
    return theta(t, theta(t, rc, L), mult_after_ls(L, r, s));
}

// ---------------------------------------------------------------------------
// Phi for native types

namespace {

enum class Step { LS, LB, LH, LHSP };

Step step_for(AffineType t, Factor f) {
    if (f.s >= 2) return Step::LS;
    if (is_spin_factor(t, f.r)) return Step::LHSP;
    if (f.r == 1) return Step::LH;
    return Step::LB;
}

const char* rc_name(Step s) {
    switch (s) {
        case Step::LS: return "gamma";
        case Step::LB: return "beta";
        case Step::LH: return "delta";
        case Step::LHSP: return "delta_sp";
    }
    return "";
}

const char* path_name(Step s) {
    switch (s) {
        case Step::LS: return "ls";
        case Step::LB: return "lb";
        case Step::LH: return "lh";
        case Step::LHSP: return "lh_sp";
    }
    return "";
}

void require_valid(AffineType t, const RC& rc, const Mult& L, const char* where) {
    if (auto v = validate(t, rc, L))
        throw OffImage(std::string(where) + ": invalid configuration at node " + std::to_string(v->a) + " length " +
                       std::to_string(v->len) + " (" + v->what + ")");
}

}  // namespace

RC phi_native(AffineType t, const Path& p, Ladder* ladder) {
    if (!path_is_highest(t, p)) throw std::invalid_argument("phi: path is not highest weight");
    std::vector<Path> states{p};
    std::vector<Step> steps;
    while (!states.back().factors.empty()) {
        const Path& cur = states.back();
        Step s = step_for(t, cur.factors[0]);
        std::optional<Path> nxt;
        switch (s) {
            case Step::LS: nxt = ls(t, cur); break;
            case Step::LB: nxt = lb(t, cur); break;
            case Step::LH: nxt = lh(t, cur); break;
            case Step::LHSP: nxt = lh_sp(t, cur); break;
        }
        steps.push_back(s);
        states.push_back(*nxt);
    }
    std::size_t K = steps.size();
    std::vector<RC> rcs(K + 1);
    rcs[K] = empty_rc(t.n);
    for (std::size_t k = K; k-- > 0;) {
        const Path& before = states[k];
        Mult L = mult_of(before.factors);
        Factor f = before.factors[0];
        switch (steps[k]) {
            case Step::LS: rcs[k] = rcs[k + 1]; break;
            case Step::LB: {
                auto r = beta_remove(t, rcs[k + 1], mult_of(states[k + 1].factors), f.r);
                if (!r) throw OffImage("phi: beta inverse has no singular length-1 strings");
                rcs[k] = *r;
                break;
            }
            case Step::LH: rcs[k] = delta_add(t, rcs[k + 1], before.elems[0][0], L); break;
            case Step::LHSP: rcs[k] = delta_sp_add(t, rcs[k + 1], before.elems[0][0], L, f.r); break;
        }
        require_valid(t, rcs[k], L, "phi");
    }
    if (ladder) {
        ladder->steps.clear();
        for (std::size_t k = 0; k <= K; ++k) {
            LadderStep st;
            if (k < K) {
                st.rc_op = rc_name(steps[k]);
                st.path_op = path_name(steps[k]);
                if (steps[k] == Step::LH) st.selections = delta(t, rcs[k], mult_of(states[k].factors)).selections;
                if (steps[k] == Step::LHSP)
                    st.selections =
                        delta_sp(t, rcs[k], mult_of(states[k].factors), states[k].factors[0].r).selections;
            }
            st.path = states[k];
            st.rc = rcs[k];
            ladder->steps.push_back(std::move(st));
        }
    }
    return rcs[0];
}

Path phi_inv_native(AffineType t, const RC& rc0, const std::vector<Factor>& factors, Ladder* ladder, TieBreak tb) {
    Mult L0 = mult_of(factors);
    require_valid(t, rc0, L0, "phi_inv");
    std::vector<Factor> F = factors;
    RC rc = rc0;
    Word emitted;
    struct Rec {
        std::vector<Factor> F;
        RC rc;
        std::size_t emitted;
        Step step;
        std::vector<Selection> sel;
    };
    std::vector<Rec> recs;
    while (!F.empty()) {
        Factor f = F[0];
        Mult L = mult_of(F);
        Step s = step_for(t, f);
        Rec rec{F, rc, emitted.size(), s, {}};
        std::vector<Factor> rest(F.begin() + 1, F.end());
        switch (s) {
            case Step::LS:
                F = {{f.r, 1}, {f.r, f.s - 1}};
                break;
            case Step::LB:
                rc = beta(t, rc, L, f.r);
                F = {{1, 1}, {f.r - 1, 1}};
                break;
            case Step::LH: {
                auto d = delta(t, rc, L, tb);
                rc = d.rc;
                emitted.push_back(d.emitted);
                rec.sel = d.selections;
                F.clear();
                break;
            }
            case Step::LHSP: {
                auto d = delta_sp(t, rc, L, f.r, tb);
                rc = d.rc;
                emitted.push_back(d.emitted);
                rec.sel = d.selections;
                F.clear();
                break;
            }
        }
        F.insert(F.end(), rest.begin(), rest.end());
        require_valid(t, rc, mult_of(F), "phi_inv");
        recs.push_back(std::move(rec));
    }
    for (const auto& part : rc.nu)
        if (!part.empty()) throw OffImage("phi_inv: configuration not exhausted");
    Path out = split_flat(t, factors, emitted);
    if (ladder) {
        ladder->steps.clear();
        for (const auto& r : recs) {
            LadderStep st;
            st.rc_op = rc_name(r.step);
            st.path_op = path_name(r.step);
            st.path = split_flat(t, r.F, Word(emitted.begin() + r.emitted, emitted.end()));
            st.rc = r.rc;
            st.selections = r.sel;
            ladder->steps.push_back(std::move(st));
        }
        LadderStep last;
        last.path = Path{};
        last.rc = rc;
        ladder->steps.push_back(std::move(last));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Folded types

AffineType ambient_type(AffineType t) { return is_folded(t.family) ? folding(t).ambient : t; }

Path virtualize(AffineType t, const Path& p) {
    AffineType amb = ambient_type(t);
    std::vector<Factor> shapes = ambient_shapes(t, p.factors);
    return split_flat(amb, shapes, flat(p));
}

std::optional<Path> devirtualize(AffineType t, const Path& ambient, const std::vector<Factor>& factors) {
    Path p = split_flat(t, factors, flat(ambient));
    for (std::size_t k = 0; k < factors.size(); ++k)
        if (factor_set(t, factors[k].r, factors[k].s).find(p.elems[k]) < 0) return std::nullopt;
    return p;
}

RC phi_folded(AffineType t, const Path& p) {
    AffineType amb = ambient_type(t);
    RC x = phi_native(amb, virtualize(t, p));
    auto r = emb_rc_inv(t, x);
    if (!r) throw OffImage("phi_folded: ambient configuration outside the embedded image");
    return *r;
}

Path phi_folded_inv(AffineType t, const RC& rc, const std::vector<Factor>& factors) {
    Mult L = mult_of(factors);
    require_valid(t, rc, L, "phi_folded_inv");
    AffineType amb = ambient_type(t);
    Path x = phi_inv_native(amb, emb_rc(t, rc), ambient_shapes(t, factors));
    auto p = devirtualize(t, x, factors);
    if (!p) throw OffImage("phi_folded_inv: ambient path outside the virtual image");
    return *p;
}

RC phi(AffineType t, const Path& p, Ladder* ladder, TieBreak) {
    if (is_folded(t.family)) return phi_folded(t, p);
    return phi_native(t, p, ladder);
}

Path phi_inv(AffineType t, const RC& rc, const std::vector<Factor>& factors, Ladder* ladder, TieBreak tb) {
    if (is_folded(t.family)) return phi_folded_inv(t, rc, factors);
    return phi_inv_native(t, rc, factors, ladder, tb);
}

std::vector<Word> native_highest_phi(AffineType t, int r, int s) {
    // B^{r,s} sits inside B^{r,1} (x) B^{r,s-1}; the bijection depends on the
    // factorization, so the tail must stay a single factor.
    std::vector<Factor> cols{{r, 1}, {r, s - 1}};
    Mult target = mult_of({{r, s}});
    std::vector<Word> out;
    for (const auto& ks : d_decomposition(r, s)) {
        Weight lam = d_decomposition_weight(t.n, r, s, ks);
        std::vector<Word> hit;
        for (const auto& p : enumerate_highest(t, cols, lam))
            if (is_valid(t, phi_native(t, p), target)) hit.push_back(flat(p));
        if (hit.size() != 1)
            throw std::logic_error("native_highest: expected one admissible element of weight, found " +
                                   std::to_string(hit.size()));
        out.push_back(hit[0]);
    }
    return out;
}

// Highest elements of a folded KR crystal through the ambient bijection.
std::vector<Word> folded_highest(AffineType t, int r, int s, FoldedMethod m) {
    if (m == FoldedMethod::AffineClosure) return folded_highest_closure(t, r, s);
    AffineType amb = ambient_type(t);
    std::vector<Factor> shapes;
    Word max;
    for (auto [rr, ss] : ambient_factors(t, r, s)) {
        shapes.push_back({rr, ss});
        Word mw = maximal_word(world_of(amb), rr, ss);
        max.insert(max.end(), mw.begin(), mw.end());
    }
    std::vector<Word> cands;
    if (shapes.size() == 1) {
        cands = native_highest(amb, shapes[0].r, shapes[0].s);
    } else {
        for (const auto& p : enumerate_highest(amb, shapes)) cands.push_back(flat(p));
    }
    std::vector<Word> out;
    for (const auto& u : cands) {
        if (!psi_inverse(t, word_weight(world_of(amb), u))) continue;
        RC x = phi_native(amb, split_flat(amb, shapes, u));
        if (emb_rc_inv(t, x)) out.push_back(u);
    }
    std::sort(out.begin(), out.end(), [&](const Word& a, const Word& b) {
        if ((a == max) != (b == max)) return a == max;
        return a < b;
    });
    if (out.empty() || out[0] != max) throw std::logic_error("folded_highest: maximal element missing");
    return out;
}

}  // namespace rcbij
