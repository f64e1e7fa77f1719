#include "doctest.h"
#include "rcbij/energy.hpp"
#include "rcbij/verify.hpp"

using namespace rcbij;

TEST_CASE("A2 three single boxes at weight (1,1)") {
    AffineType t{Family::A1, 2};
    std::vector<Factor> F(3, Factor{1, 1});
    Weight w{0, 1, 1};
    XPolynomial X = x_polynomial(t, F, w);
    CHECK(X.independent);
    CHECK(X.poly.str() == "q+q^2");
    CHECK(m_polynomial(t, mult_of(F), w).str() == "q+q^2");
}

TEST_CASE("A1 two sites at weight 0") {
    AffineType t{Family::A1, 1};
    std::vector<Factor> F(2, Factor{1, 1});
    Weight w{0, 0};
    CHECK(x_polynomial(t, F, w).poly.str() == "q");
    CHECK(m_polynomial(t, mult_of(F), w).str() == "q");
}

TEST_CASE("energy of the maximal element vanishes") {
    for (const Instance& inst : small_catalog()) {
        if (!has_affine_structure(inst.type)) continue;
        CAPTURE(instance_name(inst));
        Path p;
        for (Factor f : inst.factors) {
            p.factors.push_back(f);
            p.elems.push_back(factor_set(inst.type, f.r, f.s).maximal());
        }
        CHECK(energy(inst.type, p).D == Frac(0));
    }
}

TEST_CASE("polynomial formatting") {
    LaurentPoly p;
    CHECK(p.str() == "0");
    p.add(Frac(0));
    p.add(Frac(3, 2), 2);
    p.add(Frac(1));
    CHECK(p.str() == "1+q+2q^(3/2)");
    CHECK(p.at_one() == 4);
}
