#include "doctest.h"
#include "rcbij/verify.hpp"

using namespace rcbij;

namespace {

void run(const std::string& suite) {
    Report r = verify(parse_suites(suite), small_catalog());
    CHECK(!r.checks.empty());
    for (const auto& c : r.checks) {
        INFO(c.name << " " << c.instance << " " << c.detail);
        CHECK(c.status != Status::Fail);
    }
}

}  // namespace

TEST_CASE("bijection suite") { run("bijection"); }
TEST_CASE("xm suite") { run("xm"); }
TEST_CASE("rmatrix suite") { run("rmatrix"); }
TEST_CASE("involution suite") { run("involution"); }
TEST_CASE("virtual suite") { run("virtual"); }
TEST_CASE("commutation suite") { run("commutation"); }
TEST_CASE("convexity suite") { run("convexity"); }

TEST_CASE("report order does not depend on the thread count") {
    auto cat = small_catalog();
    cat.resize(std::min<std::size_t>(cat.size(), 6));
    Report a = verify({Suite::Bijection}, cat, 1), b = verify({Suite::Bijection}, cat, 4);
    CHECK(report_to_json(a) == report_to_json(b));
}

TEST_CASE("unknown suite names are rejected") { CHECK_THROWS_AS(parse_suites("bijection,nope"), std::invalid_argument); }
