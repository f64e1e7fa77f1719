#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rcbij/frac.hpp"

namespace rcbij {

enum class Family { A1, B1, C1, D1, A2even, A2evenDagger, A2odd, D2 };

struct AffineType {
    Family family = Family::A1;
    int n = 1;
    friend bool operator==(const AffineType&, const AffineType&) = default;
};

enum class Classical { A, B, C, D };

using Matrix = std::vector<std::vector<int>>;

// Classical weights, partitions of a rigged configuration and similar per-node
// data are stored as vectors of size n+1 indexed by the node a = 1..n; slot 0
// is unused and kept at zero.
using Weight = std::vector<int>;

struct Marks {
    std::vector<int> c;
    std::vector<int> c_dual;
};

struct FoldingData {
    AffineType ambient;
    std::vector<std::vector<int>> orbit;  // orbit[a] = preimage of a in the ambient index set
    std::vector<int> gamma;               // gamma[a], a in I
};

std::string family_name(Family f);
Family family_from_name(const std::string& s);
std::string type_name(AffineType t);
bool valid_type(AffineType t);
int min_rank(Family f);
bool is_folded(Family f);
bool simply_laced(Family f);
bool ambient_is_a(Family f);  // folded into A_{2n-1}^{(1)}

Classical classical_kind(Family f);

Matrix cartan_matrix(AffineType t);
Marks marks(AffineType t);
std::vector<int> scaling_factors(AffineType t);
FoldingData folding(AffineType t);
int kappa(AffineType t, int r);
Frac tee_vee(AffineType t, int a);
int tau(AffineType t, int a);

// Doubled epsilon-coordinates of a dominant classical weight.
std::vector<int> weight_to_partition2(AffineType t, const Weight& lambda);
int partition_size2(AffineType t, const Weight& lambda);

std::vector<std::pair<int, int>> ambient_factors(AffineType t, int r, int s);

Weight psi_embed(AffineType t, const Weight& lambda);
std::optional<Weight> psi_inverse(AffineType t, const Weight& ambient);

// Whether (r,s) is a legal factor; spin nodes of D-type allowed.
bool valid_factor(AffineType t, int r, int s);

}  // namespace rcbij
