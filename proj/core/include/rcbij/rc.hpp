#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rcbij/cartan.hpp"
#include "rcbij/frac.hpp"
#include "rcbij/kr.hpp"

namespace rcbij {

struct String {
    int len = 0;
    int rig2 = 0;  // doubled rigging
    friend bool operator==(const String&, const String&) = default;
    friend auto operator<=>(const String&, const String&) = default;
};

using RiggedPartition = std::vector<String>;  // kept sorted: length desc, rigging desc

struct RC {
    std::vector<RiggedPartition> nu;  // nu[a], a = 1..n; nu[0] unused
    friend bool operator==(const RC&, const RC&) = default;
    friend auto operator<=>(const RC&, const RC&) = default;
};

using Mult = std::map<Factor, int>;

Mult mult_of(const std::vector<Factor>& factors);
Mult mult_add(Mult L, Factor f, int d);
std::string rc_string(const RC& rc);

RC empty_rc(int n);
void normalize(RC& rc);
int box_count(const RiggedPartition& p);

// Vacancy numbers in doubled units. i <= 0 means i = infinity.
class Vacancy {
public:
    explicit Vacancy(AffineType t);
    const AffineType& type() const { return type_; }
    int p2(const Mult& L, const RC& rc, int a, int i) const;
    // Row of the reduced Cartan-type system sum_b At_ab |nu_b| = p_inf shift.
    Frac reduced(int a, int b) const;
    bool half_integer_row(int a, int len) const;  // A2even-dagger odd rows of nu^(n)

private:
    AffineType type_;
    Matrix cartan_;
    std::vector<int> gamma_;
    std::vector<std::vector<int>> coef2_;
    std::vector<int> scale_;
};

struct Violation {
    int a = 0, len = 0, rig2 = 0, p2 = 0;
    std::string what;
};

std::optional<Violation> validate(AffineType t, const RC& rc, const Mult& L);
bool is_valid(AffineType t, const RC& rc, const Mult& L);

// Classical part of the weight; nullopt when some p_infinity is negative or
// the weight is not integral.
std::optional<Weight> rc_weight(AffineType t, const RC& rc, const Mult& L);
Frac rc_level(AffineType t, const Weight& lambda);  // k_0 of the affine weight

std::vector<RC> enumerate_rcs(AffineType t, const Mult& L, const Weight& lambda);
// All dominant weights for which RC(L, lambda) may be nonempty.
std::vector<Weight> candidate_weights(AffineType t, const Mult& L);

RC theta(AffineType t, const RC& rc, const Mult& L);
Frac cocharge(AffineType t, const RC& rc, const Mult& L);

// Virtual embedding into the ambient type.
Mult emb_mult(AffineType t, const Mult& L);
RC emb_rc(AffineType t, const RC& rc);
std::optional<RC> emb_rc_inv(AffineType t, const RC& ambient);
RC emb_2x(const RC& rc);
std::optional<RC> emb_2x_inv(const RC& rc);

// Diagram automorphism on native A/D configurations.
RC varsigma(AffineType t, const RC& rc);
Mult sigma_mult(AffineType t, const Mult& L);

}  // namespace rcbij
