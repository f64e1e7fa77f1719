#pragma once

#include <string>
#include <vector>

#include "rcbij/bijection.hpp"

// Worked examples. The D4 example B^{4,1} (x) B^{2,2}: every state of the inverse ladder as drawn.
namespace golden {

using namespace rcbij;

// rows, vacancies and riggings of one partition as drawn in the figure
struct Drawn {
    std::vector<int> rows, vac, rig;
};
using State = std::vector<Drawn>;  // nodes 1..4

inline const AffineType kD4{Family::D1, 4};
inline const std::vector<Factor> kFactors{{4, 1}, {2, 2}};

// (-,-,+,+) (x) [[1,1],[2,-1]]
inline Path golden_path() { return {kFactors, {{spin_atom(3)}, {2, 1, -1, 1}}}; }

inline RC rc_of(const State& s) {
    RC rc = empty_rc(4);
    for (int a = 1; a <= 4; ++a)
        for (std::size_t k = 0; k < s[a - 1].rows.size(); ++k)
            rc.nu[a].push_back({s[a - 1].rows[k], 2 * s[a - 1].rig[k]});
    normalize(rc);
    return rc;
}

inline const std::vector<State> kFigure{
    {{{2}, {0}, {0}}, {{2, 2}, {0, 0}, {0, 0}}, {{2}, {0}, {0}}, {{2}, {1}, {1}}},
    {{{1}, {0}, {0}}, {{1, 1}, {0, 0}, {0, 0}}, {{1}, {0}, {0}}, {{1}, {0}, {0}}},
    {{{1}, {0}, {0}}, {{1, 1}, {1, 1}, {0, 0}}, {{1}, {0}, {0}}, {{1}, {0}, {0}}},
    {{{1, 1}, {0, 0}, {0, 0}}, {{1, 1}, {1, 1}, {0, 0}}, {{1}, {0}, {0}}, {{1}, {0}, {0}}},
    // drawn as p^(1) = 0, p^(2) = 1,1 (copied from the previous state); removing the
    // box 2 from B^{1,1} changes only p^(1), and the next state shows p^(2) = 0,0
    {{{1}, {1}, {0}}, {{1, 1}, {0, 0}, {0, 0}}, {{1}, {0}, {0}}, {{1}, {0}, {0}}},
    {{{1}, {0}, {0}}, {{1, 1}, {0, 0}, {0, 0}}, {{1}, {0}, {0}}, {{1}, {0}, {0}}},
    {{{1, 1}, {0, 0}, {0, 0}}, {{1, 1}, {0, 0}, {0, 0}}, {{1}, {0}, {0}}, {{1}, {0}, {0}}},
    {{}, {}, {}, {}},
};

// paths beside each state; a column is stored bottom to top
inline const std::vector<Path> kFigurePaths{
    golden_path(),
    {{{2, 2}}, {{2, 1, -1, 1}}},
    {{{2, 1}, {2, 1}}, {{2, 1}, {-1, 1}}},
    {{{1, 1}, {1, 1}, {2, 1}}, {{2}, {1}, {-1, 1}}},
    {{{1, 1}, {2, 1}}, {{1}, {-1, 1}}},
    {{{2, 1}}, {{-1, 1}}},
    {{{1, 1}, {1, 1}}, {{-1}, {1}}},
    {{{1, 1}}, {{1}}},
};

inline const std::vector<std::string> kOps{"delta_sp", "gamma", "beta", "delta", "delta", "beta", "delta", "delta"};

inline std::vector<Selection> sel(std::initializer_list<std::pair<int, int>> xs) {
    std::vector<Selection> out;
    for (auto [a, l] : xs) out.push_back({a, l});
    return out;
}

// Compares the inverse ladder (largest tie-break) with the drawn states.
// Returns an empty string on agreement, otherwise the first difference.
inline std::string check_ladder() {
    Ladder lad;
    Path q = phi_inv(kD4, rc_of(kFigure[0]), kFactors, &lad, TieBreak::Largest);
    if (q != golden_path()) return "final path differs";
    if (lad.steps.size() != kOps.size() + 1) return "ladder length " + std::to_string(lad.steps.size());
    Vacancy vac(kD4);
    for (std::size_t k = 0; k < kFigure.size(); ++k) {
        const LadderStep& st = lad.steps[k];
        std::string at = "state " + std::to_string(k) + ": ";
        if (st.rc_op != kOps[k]) return at + "operation " + st.rc_op;
        if (st.rc != rc_of(kFigure[k])) return at + "configuration " + rc_string(st.rc);
        if (st.path != kFigurePaths[k]) return at + "path " + path_string(world_of(kD4), st.path);
        Mult L = mult_of(st.path.factors);
        for (int a = 1; a <= 4; ++a) {
            const Drawn& d = kFigure[k][static_cast<std::size_t>(a - 1)];
            for (std::size_t j = 0; j < d.rows.size(); ++j)
                if (vac.p2(L, st.rc, a, d.rows[j]) != 2 * d.vac[j]) return at + "vacancy at node " + std::to_string(a);
        }
    }
    if (lad.steps[0].selections != sel({{4, 2}, {2, 2}, {3, 2}, {1, 2}, {2, 2}}) ||
        lad.steps[3].selections != sel({{1, 1}}) || !lad.steps[4].selections.empty() ||
        lad.steps[6].selections != sel({{1, 1}, {2, 1}, {4, 1}, {3, 1}, {2, 1}, {1, 1}}))
        return "selected strings differ";
    Ladder fwd;
    if (phi(kD4, golden_path(), &fwd, TieBreak::Largest) != rc_of(kFigure[0])) return "forward image differs";
    std::vector<std::string> ops;
    for (const auto& st : fwd.steps)
        if (!st.path_op.empty()) ops.push_back(st.path_op);
    if (ops != std::vector<std::string>{"lh_sp", "ls", "lb", "lh", "lh", "lb", "lh", "lh"}) return "path operations differ";
    return {};
}

// C5 configuration on B^{2,4} (x) B^{1,2} (x) B^{5,1} (x) B^{3,2} of weight Lambda_1 + Lambda_2 + Lambda_4
inline const AffineType kC5{Family::C1, 5};
inline const std::vector<Factor> kC5Factors{{2, 4}, {1, 2}, {5, 1}, {3, 2}};

inline RC c5_rc() {
    const std::vector<std::pair<std::vector<int>, std::vector<int>>> parts{
        {{5, 1}, {0, 0}},
        {{5, 4, 2}, {0, 1, 0}},
        {{5, 4, 2, 2}, {0, 0, 0, 0}},
        {{5, 4, 2, 2}, {0, 0, 0, 0}},
        {{3, 2, 1, 1}, {0, 1, 1, 0}},
    };
    RC rc = empty_rc(5);
    for (int a = 1; a <= 5; ++a) {
        const auto& [rows, rig] = parts[static_cast<std::size_t>(a - 1)];
        for (std::size_t k = 0; k < rows.size(); ++k) rc.nu[a].push_back({rows[k], 2 * rig[k]});
    }
    normalize(rc);
    return rc;
}

inline std::string check_c5() {
    RC rc = c5_rc();
    Mult L = mult_of(kC5Factors);
    if (auto v = validate(kC5, rc, L)) return "invalid at node " + std::to_string(v->a) + ": " + v->what;
    auto w = rc_weight(kC5, rc, L);
    if (!w || *w != Weight{0, 1, 1, 0, 1, 0}) return "weight differs";
    Path p = phi_folded_inv(kC5, rc, kC5Factors);
    if (!path_valid(kC5, p) || !path_is_highest(kC5, p)) return "image is not a highest weight path";
    if (phi_folded(kC5, p) != rc) return "phi_folded o phi_folded_inv is not the identity";
    return {};
}

}  // namespace golden
