#include "doctest.h"
#include "rcbij/bijection.hpp"
#include "rcbij/crystal.hpp"
#include "rcbij/io.hpp"
#include "rcbij/verify.hpp"

using namespace rcbij;

TEST_CASE("every emitted path and configuration reads back") {
    for (const Instance& inst : small_catalog()) {
        AffineType t = inst.type;
        CAPTURE(instance_name(inst));
        for (const Path& p : enumerate_highest(t, inst.factors)) {
            auto [t2, p2] = path_from_json(path_to_json(t, p));
            CHECK(t2 == t);
            CHECK(p2 == p);
            RC rc = phi(t, p);
            auto [t3, rc3] = rc_from_json(rc_to_json(t, rc, 2));
            CHECK(t3 == t);
            CHECK(rc3 == rc);
        }
    }
}

TEST_CASE("ladders serialize with one entry per step") {
    AffineType t{Family::D1, 4};
    Path p{{{4, 1}, {2, 2}}, {{spin_atom(3)}, {2, 1, -1, 1}}};
    Ladder lad;
    phi(t, p, &lad);
    std::string text = ladder_to_json(t, lad);
    CHECK(text.find("\"path_op\":\"lh_sp\"") != std::string::npos);
    // intermediate paths are themselves readable
    for (const auto& st : lad.steps) {
        auto [t2, q] = path_from_json(path_to_json(t, st.path));
        CHECK(q == st.path);
    }
}

TEST_CASE("readers reject malformed and out-of-set input") {
    CHECK_THROWS_AS(path_from_json("{"), FormatError);
    const std::string unknown = R"j({"family":"E(1)","rank":6})j";
    const std::string off_set = R"j({"type":{"family":"A(1)","rank":2},"factors":[{"r":1,"s":1,"rows":[[4]]}]})j";
    const std::string ragged = R"j({"type":{"family":"A(1)","rank":1},"nu":[[1]],"rigging2x":[[0,0]]})j";
    CHECK_THROWS_AS(type_from_json(unknown), FormatError);
    CHECK_THROWS_AS(path_from_json(off_set), std::domain_error);
    CHECK_THROWS_AS(rc_from_json(ragged), FormatError);
}

TEST_CASE("factor and weight flags") {
    CHECK(parse_factors("4,1;2,2") == std::vector<Factor>{{4, 1}, {2, 2}});
    CHECK(parse_weight("1,1", 2) == Weight{0, 1, 1});
    CHECK_THROWS(parse_factors("4;2,2"));
    CHECK_THROWS(parse_weight("1,1", 3));
}

TEST_CASE("node budget is enforced") {
    // a factor list far larger than any budget
    AffineType t{Family::A1, 4};
    std::vector<Factor> F(12, Factor{2, 2});
    CHECK_THROWS_AS(enumerate_highest(t, F), BudgetExceeded);
}
