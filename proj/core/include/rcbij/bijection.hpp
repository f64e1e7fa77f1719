#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "rcbij/kr.hpp"
#include "rcbij/rc.hpp"

namespace rcbij {

enum class TieBreak { Smallest, Largest };

struct Selection {
    int node = 0;
    int len = 0;  // length of the selected string before removal
    friend bool operator==(const Selection&, const Selection&) = default;
};

struct DeltaResult {
    RC rc;
    Atom emitted = 0;
    std::vector<Selection> selections;
};

// Multiplicity bookkeeping for the left maps.
Mult mult_after_lh(const Mult& L);
Mult mult_after_lh_sp(const Mult& L, int r);
Mult mult_after_lb(const Mult& L, int r);
Mult mult_after_ls(const Mult& L, int r, int s);
Mult mult_after_lb_s(const Mult& L, int r, int s);

Atom spin_highest(int n, int r);

// delta/delta_sp on native A or D configurations. L contains the factor removed.
DeltaResult delta(AffineType t, const RC& rc, const Mult& L, TieBreak tb = TieBreak::Smallest);
DeltaResult delta_sp(AffineType t, const RC& rc, const Mult& L, int r, TieBreak tb = TieBreak::Smallest);
// Every admissible sequence of tie choices; used to test choice independence.
std::vector<DeltaResult> delta_all_choices(AffineType t, const RC& rc, const Mult& L, Factor front);

// Guided inverses. L is the multiplicity array including the restored factor.
// fword, when given, is the f-word from the highest atom to b (applied first to last).
RC delta_add(AffineType t, const RC& rc, Atom b, const Mult& L, const std::vector<int>* fword = nullptr);
RC delta_sp_add(AffineType t, const RC& rc, Atom b, const Mult& L, int r, const std::vector<int>* fword = nullptr);
std::vector<int> canonical_fword(const World& w, Atom b);

// Adds a singular string of length len to nu^(a) for a < r; singular w.r.t. Lafter.
RC add_singular_strings(AffineType t, const RC& rc, const Mult& Lafter, int r, int len);
RC beta(AffineType t, const RC& rc, const Mult& L, int r);
std::optional<RC> beta_remove(AffineType t, const RC& rc, const Mult& Lafter, int r);
RC beta_s(AffineType t, const RC& rc, const Mult& L, int r, int s);
std::optional<RC> beta_s_remove(AffineType t, const RC& rc, const Mult& Lafter, int r, int s);

// theta-conjugates; each returns the configuration for the reduced multiplicity array.
DeltaResult delta_tilde(AffineType t, const RC& rc, const Mult& L);
DeltaResult delta_sp_tilde(AffineType t, const RC& rc, const Mult& L, int r);
RC beta_tilde(AffineType t, const RC& rc, const Mult& L, int r);
RC gamma_tilde(AffineType t, const RC& rc, const Mult& L, int r, int s);

struct LadderStep {
    std::string rc_op;    // delta, delta_sp, beta, gamma (empty for the final state)
    std::string path_op;  // lh, lh_sp, lb, ls
    Path path;            // path before the step
    RC rc;                // configuration before the step
    std::vector<Selection> selections;
};

struct Ladder {
    std::vector<LadderStep> steps;  // the last entry is the terminal state
};

// Phi and its inverse. Native types act directly; folded types go through
// the ambient bijection and the virtual embeddings.
RC phi(AffineType t, const Path& p, Ladder* ladder = nullptr, TieBreak tb = TieBreak::Smallest);
Path phi_inv(AffineType t, const RC& rc, const std::vector<Factor>& factors, Ladder* ladder = nullptr,
             TieBreak tb = TieBreak::Smallest);

RC phi_native(AffineType t, const Path& p, Ladder* ladder = nullptr);
Path phi_inv_native(AffineType t, const RC& rc, const std::vector<Factor>& factors, Ladder* ladder = nullptr,
                    TieBreak tb = TieBreak::Smallest);
RC phi_folded(AffineType t, const Path& p);
Path phi_folded_inv(AffineType t, const RC& rc, const std::vector<Factor>& factors);

// Virtual embedding of folded paths into the ambient world and back.
AffineType ambient_type(AffineType t);
Path virtualize(AffineType t, const Path& p);
std::optional<Path> devirtualize(AffineType t, const Path& ambient, const std::vector<Factor>& factors);

struct OffImage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace rcbij
