#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rcbij/bijection.hpp"
#include "rcbij/energy.hpp"

namespace rcbij {

// Polynomial in q^{1/2} with nonnegative coefficients, keyed by doubled exponent.
struct LaurentPoly {
    std::map<int, long long> coef;

    void add(Frac exponent, long long c = 1);
    long long at_one() const;
    std::string str() const;  // "q+q^2", "1", "2q^(1/2)", "0"
    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;
};

struct Instance {
    AffineType type;
    std::vector<Factor> factors;
    std::optional<Weight> lambda;
};

std::string instance_name(const Instance& inst);
int ambient_boxes(AffineType t, const std::vector<Factor>& factors);

// Each family at its minimal rank and one more; up to three factors from
// (1,1), (2,1), (1,2), (2,2), (n,1) with at most ten ambient boxes.
std::vector<Instance> default_catalog();
// Rank-minimal subset used by quick runs and unit tests.
std::vector<Instance> small_catalog();

struct XPolynomial {
    LaurentPoly poly;
    bool independent = false;  // every term came from H, R and d_tail
};
XPolynomial x_polynomial(AffineType t, const std::vector<Factor>& factors, const Weight& lambda);
LaurentPoly m_polynomial(AffineType t, const Mult& L, const Weight& lambda);

enum class Suite { Bijection, XM, RMatrix, Involution, Virtual, Commutation, Convexity };
std::string suite_name(Suite s);
std::vector<Suite> parse_suites(const std::string& spec);  // "all" or a comma list

enum class Status { Pass, Fail, Skip };

struct CheckResult {
    std::string name;
    std::string instance;
    Status status = Status::Pass;
    int cases = 0;         // subcases examined
    std::string witness;   // JSON document of the first failing input
    std::string detail;
};

struct Report {
    std::vector<CheckResult> checks;
    int failures() const;
    int count(const std::string& prefix, Status s) const;
};

// Runs the suites over the instances. Instances are spread over threads
// (0 = hardware concurrency); the order of the report does not depend on it.
Report verify(const std::vector<Suite>& suites, const std::vector<Instance>& instances, unsigned threads = 0);

std::string report_to_json(const Report& r, int indent = 2);

}  // namespace rcbij
