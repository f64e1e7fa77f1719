// One line per acceptance criterion; exit status is the number of failures.

#include <iostream>

#include "golden_data.hpp"
#include "rcbij/verify.hpp"

using namespace rcbij;

namespace {

int failed = 0;

void line(int k, const std::string& what, bool ok, const std::string& note) {
    std::cout << (ok ? "PASS" : "FAIL") << " " << k << " " << what;
    if (!note.empty()) std::cout << " (" << note << ")";
    std::cout << "\n" << std::flush;
    if (!ok) ++failed;
}

// Passes when no check under the prefixes failed; the note names the first failure.
std::pair<bool, std::string> clean(const Report& r, const std::vector<std::string>& prefixes) {
    int pass = 0, skip = 0, cases = 0;
    for (const auto& c : r.checks) {
        bool mine = false;
        for (const auto& p : prefixes) mine = mine || c.name.rfind(p, 0) == 0;
        if (!mine) continue;
        if (c.status == Status::Fail) return {false, c.name + " on " + c.instance + ": " + c.detail};
        (c.status == Status::Pass ? pass : skip)++;
        cases += c.cases;
    }
    if (pass == 0) return {false, "no checks ran"};
    return {true, std::to_string(pass) + " checks, " + std::to_string(cases) + " cases, " + std::to_string(skip) +
                      " skipped"};
}

std::string guarded(std::string (*f)()) {
    try {
        return f();
    } catch (const std::exception& e) {
        return std::string("exception: ") + e.what();
    }
}

std::string xm_examples() {
    AffineType a2{Family::A1, 2}, a1{Family::A1, 1};
    std::vector<Factor> three(3, Factor{1, 1}), two(2, Factor{1, 1});
    XPolynomial x = x_polynomial(a2, three, {0, 1, 1});
    if (!x.independent || x.poly.str() != "q+q^2") return "A2: X=" + x.poly.str();
    if (m_polynomial(a2, mult_of(three), {0, 1, 1}).str() != "q+q^2") return "A2: M differs";
    if (x_polynomial(a1, two, {0, 0}).poly.str() != "q" || m_polynomial(a1, mult_of(two), {0, 0}).str() != "q")
        return "A1 two sites differ from q";
    return {};
}

}  // namespace

int main() {
    std::string g = guarded(golden::check_ladder);
    line(1, "golden D4 ladder", g.empty(), g);
    std::string c = guarded(golden::check_c5);
    line(2, "C5 configuration and folded round trip", c.empty(), c);

    Report r = verify(parse_suites("all"), default_catalog());

    auto [bij, bij_note] = clean(r, {"bijection."});
    line(3, "bijection suite on the default catalog", bij, bij_note);

    std::string ex = guarded(xm_examples);
    auto [xm, xm_note] = clean(r, {"xm."});
    int indep = 0, theorem = 0;
    for (const auto& k : r.checks)
        if (k.name == "xm.polynomial" && k.status == Status::Pass)
            (k.detail.rfind("provenance=independent", 0) == 0 ? indep : theorem)++;
    line(4, "X = M", ex.empty() && xm,
         ex.empty() ? xm_note + "; polynomial independent on " + std::to_string(indep) + " instances, via Phi on " +
                          std::to_string(theorem)
                    : ex);

    auto [rm, rm_note] = clean(r, {"rmatrix."});
    line(5, "R-matrix suite", rm, rm_note);
    auto [vi, vi_note] = clean(r, {"virtual."});
    line(6, "virtualization suite", vi, vi_note);
    auto [st, st_note] = clean(r, {"involution.", "commutation.", "convexity."});
    line(7, "structural identities", st, st_note);
    return failed;
}
