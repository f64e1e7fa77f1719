#include "doctest.h"
#include "golden_data.hpp"

using namespace rcbij;
using namespace golden;

TEST_CASE("golden D4 path maps to the drawn configuration") {
    Path p = golden_path();
    REQUIRE(path_valid(kD4, p));
    REQUIRE(path_is_highest(kD4, p));
    RC rc = phi(kD4, p, nullptr, TieBreak::Largest);
    CHECK(rc == rc_of(kFigure[0]));
    CHECK(phi(kD4, p) == rc);
}

TEST_CASE("golden D4 ladder, state by state") {
    Ladder lad;
    Path q = phi_inv(kD4, rc_of(kFigure[0]), kFactors, &lad, TieBreak::Largest);
    CHECK(q == golden_path());
    REQUIRE(lad.steps.size() == kOps.size() + 1);
    Vacancy vac(kD4);
    for (std::size_t k = 0; k < kFigure.size(); ++k) {
        CAPTURE(k);
        const LadderStep& st = lad.steps[k];
        CHECK(st.rc_op == kOps[k]);
        CHECK(st.rc == rc_of(kFigure[k]));
        CHECK(st.path == kFigurePaths[k]);
        Mult L = mult_of(st.path.factors);
        for (int a = 1; a <= 4; ++a) {
            const Drawn& d = kFigure[k][a - 1];
            for (std::size_t j = 0; j < d.rows.size(); ++j) CHECK(vac.p2(L, st.rc, a, d.rows[j]) == 2 * d.vac[j]);
        }
    }
    // the leftover single box after the last drawn state
    CHECK(lad.steps[kFigure.size()].rc == empty_rc(4));
    CHECK(lad.steps.back().rc_op.empty());

    CHECK(lad.steps[0].selections == sel({{4, 2}, {2, 2}, {3, 2}, {1, 2}, {2, 2}}));
    CHECK(lad.steps[3].selections == sel({{1, 1}}));
    CHECK(lad.steps[4].selections.empty());
    CHECK(lad.steps[6].selections == sel({{1, 1}, {2, 1}, {4, 1}, {3, 1}, {2, 1}, {1, 1}}));
}

TEST_CASE("golden D4 forward ladder path operations") {
    Ladder lad;
    phi(kD4, golden_path(), &lad, TieBreak::Largest);
    std::vector<std::string> ops;
    for (const auto& st : lad.steps)
        if (!st.path_op.empty()) ops.push_back(st.path_op);
    CHECK(ops == std::vector<std::string>{"lh_sp", "ls", "lb", "lh", "lh", "lb", "lh", "lh"});
}

TEST_CASE("tie-break does not change the result") {
    RC rc = rc_of(kFigure[0]);
    CHECK(phi_inv(kD4, rc, kFactors, nullptr, TieBreak::Smallest) == phi_inv(kD4, rc, kFactors, nullptr, TieBreak::Largest));
}

TEST_CASE("C5 configuration validates and the folded bijection inverts") {
    RC rc = c5_rc();
    Mult L = mult_of(kC5Factors);
    CHECK(is_valid(kC5, rc, L));
    auto w = rc_weight(kC5, rc, L);
    REQUIRE(w);
    CHECK(*w == Weight{0, 1, 1, 0, 1, 0});
    Path p = phi_folded_inv(kC5, rc, kC5Factors);
    CHECK(path_valid(kC5, p));
    CHECK(path_is_highest(kC5, p));
    CHECK(phi_folded(kC5, p) == rc);
    CHECK(phi(kC5, p) == rc);
}

TEST_CASE("shared golden checks agree") {
    CHECK(check_ladder() == "");
    CHECK(check_c5() == "");
}
