#include "rcbij/rc.hpp"

#include "rcbij/crystal.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace rcbij {

Mult mult_of(const std::vector<Factor>& factors) {
    Mult L;
    for (const auto& f : factors) ++L[f];
    return L;
}

Mult mult_add(Mult L, Factor f, int d) {
    int& c = L[f];
    c += d;
    if (c < 0) throw std::logic_error("mult_add: negative multiplicity");
    if (c == 0) L.erase(f);
    return L;
}

std::string rc_string(const RC& rc) {
    std::string s;
    for (std::size_t a = 1; a < rc.nu.size(); ++a) {
        if (a > 1) s += " | ";
        s += std::to_string(a) + ":";
        for (const auto& st : rc.nu[a]) {
            s += " " + std::to_string(st.len) + "[";
            s += (st.rig2 % 2 ? std::to_string(st.rig2) + "/2" : std::to_string(st.rig2 / 2)) + "]";
        }
    }
    return s;
}

RC empty_rc(int n) {
    RC rc;
    rc.nu.assign(n + 1, {});
    return rc;
}

void normalize(RC& rc) {
    for (auto& p : rc.nu) std::sort(p.begin(), p.end(), [](const String& x, const String& y) {
        return x.len != y.len ? x.len > y.len : x.rig2 > y.rig2;
    });
}

int box_count(const RiggedPartition& p) {
    int c = 0;
    for (const auto& s : p) c += s.len;
    return c;
}

namespace {

bool is_a2(Family f) { return f == Family::A2even || f == Family::A2evenDagger; }

}  // namespace

Vacancy::Vacancy(AffineType t) : type_(t), cartan_(cartan_matrix(t)) {
    int n = t.n;
    gamma_ = is_folded(t.family) ? scaling_factors(t) : std::vector<int>(n + 1, 1);
    coef2_.assign(n + 1, std::vector<int>(n + 1, 0));
    scale_.assign(n + 1, 1);
    for (int a = 1; a <= n; ++a) {
        for (int b = 1; b <= n; ++b) {
            int A = cartan_[a][b];
            if (is_a2(t.family)) {
                int x = t.family == Family::A2even ? b : a;
                int den = x == n ? 2 : 1;
                coef2_[a][b] = 2 * A / den;
            } else {
                coef2_[a][b] = 2 * A / gamma_[b];
            }
        }
        if (!is_a2(t.family)) scale_[a] = gamma_[a];
    }
}

int Vacancy::p2(const Mult& L, const RC& rc, int a, int i) const {
    long long s1 = 0;
    for (const auto& [f, c] : L)
        if (f.r == a) s1 += static_cast<long long>(c) * (i <= 0 ? f.s : std::min(i, f.s));
    long long s2 = 0;
    int n = type_.n;
    for (int b = 1; b <= n; ++b) {
        if (!coef2_[a][b]) continue;
        long long acc = 0;
        for (const auto& st : rc.nu[b]) {
            long long lb = static_cast<long long>(scale_[b]) * st.len;
            acc += i <= 0 ? lb : std::min<long long>(static_cast<long long>(scale_[a]) * i, lb);
        }
        s2 += coef2_[a][b] * acc;
    }
    return static_cast<int>(2 * s1 - s2);
}

Frac Vacancy::reduced(int a, int b) const { return Frac(coef2_[a][b] * scale_[b], 2); }

bool Vacancy::half_integer_row(int a, int len) const {
    return type_.family == Family::A2evenDagger && a == type_.n && len % 2 == 1;
}

std::optional<Violation> validate(AffineType t, const RC& rc, const Mult& L) {
    int n = t.n;
    if (static_cast<int>(rc.nu.size()) != n + 1) return Violation{0, 0, 0, 0, "wrong number of partitions"};
    for (const auto& [f, c] : L)
        if (!valid_factor(t, f.r, f.s) || c < 0) return Violation{f.r, f.s, 0, 0, "invalid factor in multiplicity array"};
    Vacancy vac(t);
    for (int a = 1; a <= n; ++a) {
        for (const auto& st : rc.nu[a]) {
            if (st.len < 1) return Violation{a, st.len, st.rig2, 0, "nonpositive row length"};
            bool half = vac.half_integer_row(a, st.len);
            if ((st.rig2 % 2 != 0) != half)
                return Violation{a, st.len, st.rig2, 0, half ? "rigging must be half-integral" : "rigging must be integral"};
            int p = vac.p2(L, rc, a, st.len);
            if (st.rig2 < 0 || st.rig2 > p) return Violation{a, st.len, st.rig2, p, "rigging outside [0, p]"};
        }
    }
    return std::nullopt;
}

bool is_valid(AffineType t, const RC& rc, const Mult& L) { return !validate(t, rc, L).has_value(); }

std::optional<Weight> rc_weight(AffineType t, const RC& rc, const Mult& L) {
    Vacancy vac(t);
    Weight w(t.n + 1, 0);
    for (int a = 1; a <= t.n; ++a) {
        int p = vac.p2(L, rc, a, 0);
        int v = kappa(t, a) * p;
        if (v < 0 || v % 2) return std::nullopt;
        w[a] = v / 2;
    }
    return w;
}

Frac rc_level(AffineType t, const Weight& lambda) {
    Marks mk = marks(t);
    Frac s = 0;
    for (int a = 1; a <= t.n; ++a) s += Frac(mk.c_dual[a]) * Frac(lambda[a]);
    return Frac(0) - s / Frac(mk.c_dual[0]);
}

namespace {

// Solves M x = rhs over the rationals; M is invertible.
std::vector<Frac> solve(std::vector<std::vector<Frac>> M, std::vector<Frac> rhs) {
    int n = static_cast<int>(rhs.size());
    for (int c = 0; c < n; ++c) {
        int p = c;
        while (p < n && M[p][c].num == 0) ++p;
        if (p == n) throw std::logic_error("singular reduced Cartan matrix");
        std::swap(M[p], M[c]);
        std::swap(rhs[p], rhs[c]);
        Frac inv = Frac(1) / M[c][c];
        for (auto& v : M[c]) v = v * inv;
        rhs[c] = rhs[c] * inv;
        for (int r = 0; r < n; ++r) {
            if (r == c || M[r][c].num == 0) continue;
            Frac f = M[r][c];
            for (int k = 0; k < n; ++k) M[r][k] -= f * M[c][k];
            rhs[r] -= f * rhs[c];
        }
    }
    return rhs;
}

std::vector<std::vector<Frac>> reduced_matrix(const Vacancy& vac, int n) {
    std::vector<std::vector<Frac>> M(n, std::vector<Frac>(n));
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b) M[a - 1][b - 1] = vac.reduced(a, b);
    return M;
}

std::vector<long long> total_width(const Mult& L, int n) {
    std::vector<long long> v(n + 1, 0);
    for (const auto& [f, c] : L) v[f.r] += static_cast<long long>(f.s) * c;
    return v;
}

void partitions(int total, int maxpart, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (total == 0) {
        out.push_back(cur);
        return;
    }
    for (int k = std::min(total, maxpart); k >= 1; --k) {
        cur.push_back(k);
        partitions(total - k, k, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<RC> enumerate_rcs(AffineType t, const Mult& L, const Weight& lambda) {
    int n = t.n;
    Vacancy vac(t);
    auto tw = total_width(L, n);
    std::vector<Frac> rhs(n);
    for (int a = 1; a <= n; ++a) {
        if (lambda[a] < 0 || lambda[a] % kappa(t, a)) return {};
        rhs[a - 1] = Frac(tw[a]) - Frac(lambda[a] / kappa(t, a));
    }
    auto sol = solve(reduced_matrix(vac, n), rhs);
    std::vector<int> size(n + 1, 0);
    for (int a = 1; a <= n; ++a) {
        if (!sol[a - 1].integral() || sol[a - 1].num < 0) return {};
        size[a] = static_cast<int>(sol[a - 1].num);
    }
    std::vector<std::vector<std::vector<int>>> parts(n + 1);
    for (int a = 1; a <= n; ++a) {
        std::vector<int> cur;
        partitions(size[a], size[a], cur, parts[a]);
    }
    // neighbours: nodes that enter the vacancy numbers of a
    std::vector<int> ready_at(n + 1, 0);
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
            if (vac.reduced(a, b).num != 0) ready_at[a] = std::max(ready_at[a], b);
    std::vector<RC> shapes;
    RC rc = empty_rc(n);
    std::size_t budget = node_budget(), visited = 0;
    std::function<void(int)> rec = [&](int a) {
        if (++visited > budget) throw BudgetExceeded("configuration search exceeds node budget");
        if (a > n) {
            shapes.push_back(rc);
            return;
        }
        for (const auto& p : parts[a]) {
            rc.nu[a].clear();
            for (int len : p) rc.nu[a].push_back({len, 0});
            bool ok = true;
            for (int j = 1; j <= a && ok; ++j) {
                if (ready_at[j] != a && !(j == a && ready_at[j] < a)) continue;
                for (const auto& st : rc.nu[j])
                    if (vac.p2(L, rc, j, st.len) < 0) { ok = false; break; }
            }
            if (ok) rec(a + 1);
        }
        rc.nu[a].clear();
    };
    rec(1);

    std::vector<RC> out;
    for (const auto& shape : shapes) {
        struct Block { int a, len, m, lo, hi; };
        std::vector<Block> blocks;
        bool dead = false;
        for (int a = 1; a <= n && !dead; ++a) {
            const auto& p = shape.nu[a];
            for (std::size_t k = 0; k < p.size();) {
                std::size_t e = k;
                while (e < p.size() && p[e].len == p[k].len) ++e;
                int lo = vac.half_integer_row(a, p[k].len) ? 1 : 0;
                int hi = vac.p2(L, shape, a, p[k].len);
                if (hi < lo) { dead = true; break; }
                blocks.push_back({a, p[k].len, static_cast<int>(e - k), lo, hi});
                k = e;
            }
        }
        if (dead) continue;
        RC cur = empty_rc(n);
        std::function<void(std::size_t)> rig = [&](std::size_t bi) {
            if (++visited > budget) throw BudgetExceeded("configuration search exceeds node budget");
            if (bi == blocks.size()) {
                RC x = cur;
                normalize(x);
                out.push_back(std::move(x));
                return;
            }
            const Block& b = blocks[bi];
            std::vector<int> vals;
            std::function<void(int, int)> pick = [&](int left, int maxv) {
                if (left == 0) {
                    for (int v : vals) cur.nu[b.a].push_back({b.len, v});
                    rig(bi + 1);
                    for (int k = 0; k < b.m; ++k) cur.nu[b.a].pop_back();
                    return;
                }
                for (int v = maxv; v >= b.lo; v -= 2) {
                    vals.push_back(v);
                    pick(left - 1, v);
                    vals.pop_back();
                }
            };
            int top = b.hi - ((b.hi - b.lo) % 2);
            pick(b.m, top);
        };
        rig(0);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Weight> candidate_weights(AffineType t, const Mult& L) {
    int n = t.n;
    Vacancy vac(t);
    auto tw = total_width(L, n);
    std::vector<Frac> rhs(n);
    for (int a = 1; a <= n; ++a) rhs[a - 1] = Frac(tw[a]);
    auto M = reduced_matrix(vac, n);
    auto top = solve(M, rhs);
    std::vector<int> bound(n + 1, 0);
    for (int a = 1; a <= n; ++a) {
        Frac f = top[a - 1];
        long long v = f.num >= 0 ? f.num / f.den : -1;
        bound[a] = static_cast<int>(std::max<long long>(v, 0));
    }
    std::vector<Weight> out;
    std::vector<int> N(n + 1, 0);
    std::function<void(int)> rec = [&](int a) {
        if (a > n) {
            Weight w(n + 1, 0);
            for (int c = 1; c <= n; ++c) {
                Frac v = Frac(tw[c]);
                for (int b = 1; b <= n; ++b) v -= vac.reduced(c, b) * Frac(N[b]);
                v = v * Frac(kappa(t, c));
                if (!v.integral() || v.num < 0) return;
                w[c] = static_cast<int>(v.num);
            }
            out.push_back(w);
            return;
        }
        for (int k = 0; k <= bound[a]; ++k) {
            N[a] = k;
            rec(a + 1);
        }
    };
    rec(1);
    std::sort(out.begin(), out.end());
    return out;
}

RC theta(AffineType t, const RC& rc, const Mult& L) {
    Vacancy vac(t);
    RC out = rc;
    for (int a = 1; a <= t.n; ++a)
        for (auto& st : out.nu[a]) st.rig2 = vac.p2(L, rc, a, st.len) - st.rig2;
    normalize(out);
    return out;
}

Frac cocharge(AffineType t, const RC& rc, const Mult& L) {
    Vacancy vac(t);
    Frac total = 0;
    for (int a = 1; a <= t.n; ++a) {
        Frac ta = tee_vee(t, a);
        for (const auto& st : rc.nu[a]) {
            long long q = 0;
            for (const auto& [f, c] : L)
                if (f.r == a) q += static_cast<long long>(c) * std::min(st.len, f.s);
            Frac inner = Frac(2 * q - vac.p2(L, rc, a, st.len), 2);
            total += ta * inner / Frac(2);
            total += ta * Frac(st.rig2, 2);
        }
    }
    return total;
}

Mult emb_mult(AffineType t, const Mult& L) {
    Mult out;
    for (const auto& [f, c] : L)
        for (auto [r, s] : ambient_factors(t, f.r, f.s)) out[{r, s}] += c;
    return out;
}

namespace {

bool a2_node(AffineType t, int a) { return is_a2(t.family) && a == t.n; }

}  // namespace

RC emb_rc(AffineType t, const RC& rc) {
    FoldingData fd = folding(t);
    RC out = empty_rc(fd.ambient.n);
    for (int a = 1; a <= t.n; ++a) {
        for (int b : fd.orbit[a]) {
            for (const auto& st : rc.nu[a]) {
                if (a2_node(t, a)) out.nu[b].push_back({st.len, 2 * st.rig2});
                else out.nu[b].push_back({fd.gamma[a] * st.len, fd.gamma[a] * st.rig2});
            }
        }
    }
    normalize(out);
    return out;
}

std::optional<RC> emb_rc_inv(AffineType t, const RC& ambient) {
    FoldingData fd = folding(t);
    Vacancy vac(t);
    RC out = empty_rc(t.n);
    for (int a = 1; a <= t.n; ++a) {
        const auto& ref = ambient.nu[fd.orbit[a][0]];
        for (int b : fd.orbit[a])
            if (ambient.nu[b] != ref) return std::nullopt;
        int g = fd.gamma[a];
        for (const auto& st : ref) {
            String x;
            if (a2_node(t, a)) {
                if (st.rig2 % 2) return std::nullopt;
                x = {st.len, st.rig2 / 2};
            } else {
                if (st.len % g || st.rig2 % g) return std::nullopt;
                x = {st.len / g, st.rig2 / g};
            }
            if ((x.rig2 % 2 != 0) != vac.half_integer_row(a, x.len)) return std::nullopt;
            out.nu[a].push_back(x);
        }
    }
    normalize(out);
    return out;
}

RC emb_2x(const RC& rc) {
    RC out = rc;
    for (auto& p : out.nu)
        for (auto& st : p) {
            st.len *= 2;
            st.rig2 *= 2;
        }
    return out;
}

std::optional<RC> emb_2x_inv(const RC& rc) {
    RC out = rc;
    for (auto& p : out.nu)
        for (auto& st : p) {
            if (st.len % 2 || st.rig2 % 2) return std::nullopt;
            st.len /= 2;
            st.rig2 /= 2;
        }
    return out;
}

RC varsigma(AffineType t, const RC& rc) {
    RC out = empty_rc(t.n);
    for (int a = 1; a <= t.n; ++a) out.nu[sigma_node(t, a)] = rc.nu[a];
    return out;
}

Mult sigma_mult(AffineType t, const Mult& L) {
    Mult out;
    for (const auto& [f, c] : L) {
        Factor g = f;
        if (t.family == Family::A1 || is_spin_factor(t, f.r)) g.r = sigma_node(t, f.r);
        out[g] += c;
    }
    return out;
}

}  // namespace rcbij
