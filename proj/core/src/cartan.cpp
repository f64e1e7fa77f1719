#include "rcbij/cartan.hpp"

#include <numeric>
#include <stdexcept>

namespace rcbij {

namespace {

void link(Matrix& m, int i, int j, int aij, int aji) {
    m[i][j] = aij;
    m[j][i] = aji;
}

// a_ij for a double bond with i short and j long.
void short_long(Matrix& m, int s, int l) { link(m, s, l, -2, -1); }

Matrix a2even_matrix(int n) {
    Matrix m(n + 1, std::vector<int>(n + 1, 0));
    for (int i = 0; i <= n; ++i) m[i][i] = 2;
    if (n == 1) {
        m[0][1] = -4;
        m[1][0] = -1;
        return m;
    }
    for (int i = 1; i + 1 < n; ++i) link(m, i, i + 1, -1, -1);
    short_long(m, 0, 1);
    short_long(m, n - 1, n);
    return m;
}

std::vector<int> kernel(const Matrix& a, bool transpose) {
    // The kernel is one-dimensional; solve with the last coordinate fixed and
    // rescale to the smallest positive integer vector.
    int n = static_cast<int>(a.size());
    auto at = [&](int i, int j) { return transpose ? a[j][i] : a[i][j]; };
    std::vector<std::vector<Frac>> m(n, std::vector<Frac>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = at(i, j);
    // Move column n-1 to the right-hand side with value -1.
    std::vector<std::vector<Frac>> aug(n, std::vector<Frac>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j + 1 < n; ++j) aug[i][j] = m[i][j];
        aug[i][n - 1] = Frac(0) - m[i][n - 1];
    }
    int rows = n, cols = n - 1;
    std::vector<int> pivot_col;
    int row = 0;
    for (int c = 0; c < cols && row < rows; ++c) {
        int p = -1;
        for (int r = row; r < rows; ++r)
            if (aug[r][c].num != 0) { p = r; break; }
        if (p < 0) continue;
        std::swap(aug[p], aug[row]);
        Frac inv = Frac(1) / aug[row][c];
        for (auto& v : aug[row]) v = v * inv;
        for (int r = 0; r < rows; ++r) {
            if (r == row || aug[r][c].num == 0) continue;
            Frac f = aug[r][c];
            for (int k = 0; k < n; ++k) aug[r][k] -= f * aug[row][k];
        }
        pivot_col.push_back(c);
        ++row;
    }
    std::vector<Frac> x(n, Frac(0));
    x[n - 1] = 1;
    for (int k = 0; k < static_cast<int>(pivot_col.size()); ++k) x[pivot_col[k]] = aug[k][n - 1];
    std::int64_t l = 1;
    for (auto& v : x) l = std::lcm(l, v.den);
    std::vector<int> out(n);
    std::int64_t g = 0;
    for (int i = 0; i < n; ++i) {
        std::int64_t v = x[i].num * (l / x[i].den);
        out[i] = static_cast<int>(v);
        g = std::gcd(g, v < 0 ? -v : v);
    }
    for (auto& v : out) v = static_cast<int>(v / g);
    if (out[0] < 0)
        for (auto& v : out) v = -v;
    return out;
}

}  // namespace

std::string family_name(Family f) {
    switch (f) {
        case Family::A1: return "A(1)";
        case Family::B1: return "B(1)";
        case Family::C1: return "C(1)";
        case Family::D1: return "D(1)";
        case Family::A2even: return "A(2)even";
        case Family::A2evenDagger: return "A(2)even†";
        case Family::A2odd: return "A(2)odd";
        case Family::D2: return "D(2)";
    }
    return "?";
}

Family family_from_name(const std::string& s) {
    for (Family f : {Family::A1, Family::B1, Family::C1, Family::D1, Family::A2even,
                     Family::A2evenDagger, Family::A2odd, Family::D2})
        if (family_name(f) == s) return f;
    if (s == "A(2)even+" || s == "A(2)evendagger" || s == "A(2)even-dagger") return Family::A2evenDagger;
    throw std::invalid_argument("unknown family: " + s);
}

std::string type_name(AffineType t) { return family_name(t.family) + " n=" + std::to_string(t.n); }

int min_rank(Family f) {
    switch (f) {
        case Family::A1: return 1;
        case Family::B1: return 3;
        case Family::C1: return 2;
        case Family::D1: return 4;
        case Family::A2even: return 1;
        case Family::A2evenDagger: return 1;
        case Family::A2odd: return 3;
        case Family::D2: return 2;
    }
    return 1;
}

bool valid_type(AffineType t) { return t.n >= min_rank(t.family); }

bool is_folded(Family f) { return f != Family::A1 && f != Family::D1; }
bool simply_laced(Family f) { return !is_folded(f); }

bool ambient_is_a(Family f) {
    return f == Family::C1 || f == Family::A2even || f == Family::A2evenDagger || f == Family::D2;
}

Classical classical_kind(Family f) {
    switch (f) {
        case Family::A1: return Classical::A;
        case Family::B1: return Classical::B;
        case Family::C1: return Classical::C;
        case Family::D1: return Classical::D;
        case Family::A2even: return Classical::C;
        case Family::A2evenDagger: return Classical::B;
        case Family::A2odd: return Classical::C;
        case Family::D2: return Classical::B;
    }
    return Classical::A;
}

Matrix cartan_matrix(AffineType t) {
    if (!valid_type(t)) throw std::invalid_argument("rank below minimum for " + type_name(t));
    int n = t.n;
    Matrix m(n + 1, std::vector<int>(n + 1, 0));
    for (int i = 0; i <= n; ++i) m[i][i] = 2;
    auto chain = [&](int from, int to) {
        for (int i = from; i < to; ++i) link(m, i, i + 1, -1, -1);
    };
    switch (t.family) {
        case Family::A1:
            if (n == 1) {
                link(m, 0, 1, -2, -2);
            } else {
                chain(0, n);
                link(m, n, 0, -1, -1);
            }
            break;
        case Family::B1:
            chain(1, n - 1);
            link(m, 0, 2, -1, -1);
            short_long(m, n, n - 1);
            break;
        case Family::C1:
            chain(1, n - 1);
            short_long(m, 1, 0);
            short_long(m, n - 1, n);
            break;
        case Family::D1:
            chain(1, n - 1);
            m[n - 1][n] = m[n][n - 1] = 0;
            link(m, n - 2, n, -1, -1);
            link(m, 0, 2, -1, -1);
            break;
        case Family::A2even:
            return a2even_matrix(n);
        case Family::A2evenDagger: {
            Matrix a = a2even_matrix(n);
            for (int i = 0; i <= n; ++i)
                for (int j = 0; j <= n; ++j) m[i][j] = a[n - i][n - j];
            break;
        }
        case Family::A2odd:
            chain(1, n - 1);
            link(m, 0, 2, -1, -1);
            short_long(m, n - 1, n);
            break;
        case Family::D2:
            chain(1, n - 1);
            short_long(m, 0, 1);
            short_long(m, n, n - 1);
            break;
    }
    return m;
}

Marks marks(AffineType t) {
    Matrix a = cartan_matrix(t);
    return {kernel(a, false), kernel(a, true)};
}

std::vector<int> scaling_factors(AffineType t) {
    int n = t.n;
    std::vector<int> g(n + 1, 1);
    switch (t.family) {
        case Family::B1:
            for (int a = 0; a < n; ++a) g[a] = 2;
            break;
        case Family::C1:
            g[0] = g[n] = 2;
            break;
        case Family::A2even:
            g[n] = 2;
            break;
        case Family::A2evenDagger:
            g[0] = 2;
            break;
        default:
            break;
    }
    return g;
}

FoldingData folding(AffineType t) {
    if (!is_folded(t.family)) throw std::invalid_argument("folding: unfolded family");
    FoldingData fd;
    int n = t.n;
    fd.gamma = scaling_factors(t);
    fd.orbit.assign(n + 1, {});
    if (ambient_is_a(t.family)) {
        fd.ambient = {Family::A1, 2 * n - 1};
        fd.orbit[0] = {0};
        for (int a = 1; a < n; ++a) fd.orbit[a] = {a, 2 * n - a};
        fd.orbit[n] = {n};
    } else {
        fd.ambient = {Family::D1, n + 1};
        for (int a = 0; a < n; ++a) fd.orbit[a] = {a};
        fd.orbit[n] = {n, n + 1};
    }
    return fd;
}

int kappa(AffineType t, int r) { return (t.family == Family::A2evenDagger && r == t.n) ? 2 : 1; }

Frac tee_vee(AffineType t, int a) {
    if (t.family == Family::A2evenDagger) return 1;
    Marks mk = marks(t);
    Frac v(mk.c_dual[a], mk.c[a]);
    Frac c0(mk.c[0]);
    return v < c0 ? c0 : v;
}

int tau(AffineType t, int a) {
    switch (classical_kind(t.family)) {
        case Classical::A: return t.n + 1 - a;
        case Classical::D:
            if (t.n % 2 == 1 && a >= t.n - 1) return a == t.n ? t.n - 1 : t.n;
            return a;
        default: return a;
    }
}

std::vector<int> weight_to_partition2(AffineType t, const Weight& lambda) {
    int n = t.n;
    for (int a = 1; a <= n; ++a)
        if (lambda[a] < 0) throw std::invalid_argument("weight_to_partition: non-dominant weight");
    std::vector<int> e(n + 1, 0);
    switch (classical_kind(t.family)) {
        case Classical::A:
        case Classical::C:
            for (int i = n; i >= 1; --i) e[i] = (i < n ? e[i + 1] : 0) + 2 * lambda[i];
            break;
        case Classical::B:
            for (int i = n; i >= 1; --i) e[i] = (i < n ? e[i + 1] + 2 * lambda[i] : lambda[n]);
            break;
        case Classical::D:
            e[n] = lambda[n] - lambda[n - 1];
            e[n - 1] = lambda[n] + lambda[n - 1];
            for (int i = n - 2; i >= 1; --i) e[i] = e[i + 1] + 2 * lambda[i];
            break;
    }
    return std::vector<int>(e.begin() + 1, e.end());
}

int partition_size2(AffineType t, const Weight& lambda) {
    auto p = weight_to_partition2(t, lambda);
    return std::accumulate(p.begin(), p.end(), 0);
}

std::vector<std::pair<int, int>> ambient_factors(AffineType t, int r, int s) {
    int n = t.n;
    switch (t.family) {
        case Family::C1:
            if (r < n) return {{r, s}, {2 * n - r, s}};
            return {{n, 2 * s}};
        case Family::A2even:
        case Family::A2evenDagger:
        case Family::D2:
            if (r < n) return {{r, s}, {2 * n - r, s}};
            if (t.family == Family::D2) return {{n, s}};
            return {{n, s}, {n, s}};
        case Family::B1:
            if (r < n) return {{r, 2 * s}};
            return {{n, s}, {n + 1, s}};
        case Family::A2odd:
            if (r < n) return {{r, s}};
            return {{n, s}, {n + 1, s}};
        default:
            throw std::invalid_argument("ambient_factors: unfolded family");
    }
}

Weight psi_embed(AffineType t, const Weight& lambda) {
    FoldingData fd = folding(t);
    Weight out(fd.ambient.n + 1, 0);
    for (int a = 1; a <= t.n; ++a)
        for (int b : fd.orbit[a]) out[b] += fd.gamma[a] * lambda[a];
    return out;
}

std::optional<Weight> psi_inverse(AffineType t, const Weight& ambient) {
    FoldingData fd = folding(t);
    Weight out(t.n + 1, 0);
    for (int a = 1; a <= t.n; ++a) {
        int v = ambient[fd.orbit[a][0]];
        for (int b : fd.orbit[a])
            if (ambient[b] != v) return std::nullopt;
        if (v % fd.gamma[a] != 0) return std::nullopt;
        out[a] = v / fd.gamma[a];
    }
    return out;
}

bool valid_factor(AffineType t, int r, int s) { return s >= 1 && r >= 1 && r <= t.n; }

}  // namespace rcbij
