#pragma once

#include <string>
#include <vector>

#include "rcbij/bijection.hpp"

namespace rcbij {

// Left operation selected by the front folded factor.
enum class LiftedKind { H, HSp, B, S };

LiftedKind lifted_kind(AffineType t, Factor front);
std::vector<Factor> folded_after(AffineType t, const std::vector<Factor>& factors);

// One lifted operation is a short program of ambient moves, interpreted on
// paths and on rigged configurations.
enum class Move { Drop, Split, SplitS, MergeS, Reorder, Sigma, SplitS2, SpinPairLb };

struct MoveStep {
    Move move;
    std::vector<Factor> target = {};  // Reorder only
};

std::vector<MoveStep> lifted_program(AffineType t, Factor front);

// Lifted path operation on an ambient path whose folded factors are given.
Path lifted_path_op(AffineType t, const Path& ambient);

struct LiftedRc {
    RC rc;                        // ambient configuration
    std::vector<Factor> factors;  // ambient factor list afterwards
    Word emitted;                 // atoms emitted by the delta moves
};
LiftedRc lifted_rc_op(AffineType t, const RC& ambient, const std::vector<Factor>& ambient_factors, Factor front);

// Folded inverse bijection evaluated with lifted operations only.
Path phi_folded_inv_stepwise(AffineType t, const RC& rc, const std::vector<Factor>& factors);

// Walks a folded path down with the lifted operations, checking image
// preservation on both sides and the commuting square at every step.
struct LiftedCheck {
    bool ok = true;
    int steps = 0;
    std::string failure;
};
LiftedCheck check_lifted_ladder(AffineType t, const Path& p);

// B^{n,1} (x) B^{n+1,1} of D_{n+1} against columns of height n.
Word spin_pair_to_column(int N, const Word& pair);
Word column_to_spin_pair(int N, const Word& column);

Path lb_s_inverse(AffineType t, const Path& p, int r, int s);

}  // namespace rcbij
