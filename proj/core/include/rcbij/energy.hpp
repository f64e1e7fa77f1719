#pragma once

#include <map>
#include <string>
#include <utility>

#include "rcbij/bijection.hpp"

namespace rcbij {

enum class RMethod { Weight, Phi, Ambient };

// Combinatorial R-matrix B1 (x) B2 -> B2 (x) B1 on one pair of elements.
std::pair<Word, Word> rmatrix_pair(AffineType t, Factor f1, const Word& b1, Factor f2, const Word& b2);
// How rmatrix_pair resolves highest elements for this pair of factors.
RMethod rmatrix_method(AffineType t, Factor f1, Factor f2);
// Swaps the factors at display positions pos and pos+1 (0 = leftmost).
Path rmatrix(AffineType t, const Path& p, int pos);

// Whether an independent affine structure (e_0) is available: type A and
// the folded families with ambient type A.
bool has_affine_structure(AffineType t);

// Sign of the local energy step along an e_0 edge of kind (LL); (RR) gets the
// opposite sign. +1 is the value that reproduces D = cc o theta o Phi in type A.
inline constexpr int kLocalEnergyLL = 1;

struct EnergyTable {
    AffineType type;
    Factor left, right;
    std::map<Word, int> by_highest;  // flat highest element of left (x) right -> H
    int edges = 0;                   // e_0 edges inspected
};

const EnergyTable& local_energy(AffineType t, Factor f1, Factor f2, int ll_sign = kLocalEnergyLL);
int local_energy_value(AffineType t, Factor f1, const Word& b1, Factor f2, const Word& b2,
                       int ll_sign = kLocalEnergyLL);

Frac d_tail(AffineType t, Factor f, const Word& b);

// Energy from H, R and d_tail; requires has_affine_structure(t).
Frac intrinsic_energy(AffineType t, const Path& p, int ll_sign = kLocalEnergyLL);
// cc(theta(Phi(p))) of the highest element in the component of p.
Frac energy_via_rc(AffineType t, const Path& p);

struct EnergyValue {
    Frac D;
    bool independent = false;
};
EnergyValue energy(AffineType t, const Path& p);

}  // namespace rcbij
