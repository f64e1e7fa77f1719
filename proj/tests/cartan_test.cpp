#include "doctest.h"
#include "rcbij/cartan.hpp"

using namespace rcbij;

namespace {

const std::vector<Family> kFamilies{Family::A1,     Family::B1,           Family::C1,    Family::D1,
                                    Family::A2even, Family::A2evenDagger, Family::A2odd, Family::D2};

}  // namespace

TEST_CASE("null vectors annihilate the affine Cartan matrix") {
    for (Family f : kFamilies)
        for (int n = min_rank(f); n <= min_rank(f) + 3; ++n) {
            AffineType t{f, n};
            CAPTURE(type_name(t));
            Matrix A = cartan_matrix(t);
            Marks m = marks(t);
            REQUIRE(A.size() == static_cast<std::size_t>(n + 1));
            for (int i = 0; i <= n; ++i) {
                int row = 0, col = 0;
                for (int j = 0; j <= n; ++j) {
                    row += A[i][j] * m.c[j];
                    col += m.c_dual[j] * A[j][i];
                }
                CHECK(row == 0);
                CHECK(col == 0);
                CHECK(A[i][i] == 2);
            }
            CHECK(m.c_dual[0] == (f == Family::A2evenDagger ? 2 : 1));
        }
}

TEST_CASE("Kac labels") {
    CHECK(marks({Family::D1, 4}).c == std::vector<int>{1, 1, 2, 1, 1});
    CHECK(marks({Family::C1, 2}).c == std::vector<int>{1, 2, 1});
    CHECK(marks({Family::B1, 3}).c == std::vector<int>{1, 1, 2, 2});
    CHECK(marks({Family::A2even, 2}).c == std::vector<int>{2, 2, 1});
    CHECK(marks({Family::A2even, 2}).c_dual == std::vector<int>{1, 2, 2});
    CHECK(marks({Family::A2odd, 3}).c_dual == std::vector<int>{1, 1, 2, 2});
    CHECK(marks({Family::D2, 3}).c_dual == std::vector<int>{1, 2, 2, 1});
}

TEST_CASE("kappa is 2 only on the short end of A2even dagger") {
    CHECK(kappa({Family::A2evenDagger, 2}, 2) == 2);
    CHECK(kappa({Family::A2evenDagger, 2}, 1) == 1);
    CHECK(kappa({Family::C1, 3}, 3) == 1);
}

TEST_CASE("folding orbits partition the ambient index set") {
    for (Family f : kFamilies) {
        if (!is_folded(f)) continue;
        AffineType t{f, min_rank(f) + 1};
        CAPTURE(type_name(t));
        FoldingData fd = folding(t);
        std::vector<int> seen(static_cast<std::size_t>(fd.ambient.n + 1), 0);
        for (const auto& orbit : fd.orbit)
            for (int b : orbit) ++seen[static_cast<std::size_t>(b)];
        for (int x : seen) CHECK(x == 1);
    }
}

TEST_CASE("family names round trip") {
    for (Family f : kFamilies) CHECK(family_from_name(family_name(f)) == f);
    CHECK_THROWS_AS(family_from_name("E(1)"), std::invalid_argument);
}
