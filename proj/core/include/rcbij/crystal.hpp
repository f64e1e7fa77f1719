#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rcbij/cartan.hpp"

namespace rcbij {

// Atoms: type A letters 1..n+1; type D letters +-1..+-n (negative = barred);
// type D spin columns are kSpinTag | mask where bit k set means s_{k+1} = -.
using Atom = std::int32_t;
using Word = std::vector<Atom>;

inline constexpr Atom kSpinTag = 1 << 24;
inline bool is_spin(Atom x) { return x > 0 && (x & kSpinTag) != 0; }
inline Atom spin_atom(std::uint32_t mask) { return kSpinTag | static_cast<Atom>(mask); }
inline std::uint32_t spin_mask(Atom x) { return static_cast<std::uint32_t>(x & (kSpinTag - 1)); }

struct WordHash {
    std::size_t operator()(const Word& w) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (Atom a : w) {
            h ^= static_cast<std::size_t>(a) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }
};

// A simply-laced classical world in which words live: A_n or D_n.
struct World {
    Classical kind = Classical::A;
    int n = 1;
    friend bool operator==(const World&, const World&) = default;
};

int atom_eps(const World& w, Atom x, int i);
int atom_phi(const World& w, Atom x, int i);
Atom atom_f(const World& w, Atom x, int i);  // 0 when undefined
Atom atom_e(const World& w, Atom x, int i);

// Signature rule (Remark convention: each atom contributes -^phi then +^eps,
// left to right; +- pairs cancel).
int word_eps(const World& w, const Word& x, int i);
int word_phi(const World& w, const Word& x, int i);
bool word_f(const World& w, Word& x, int i);
bool word_e(const World& w, Word& x, int i);
Weight word_weight(const World& w, const Word& x);

std::string atom_string(const World& w, Atom x);
std::string word_string(const World& w, const Word& x);

// Diagram automorphism on atoms of an ambient A or D world. For A it only
// acts on full columns; see sigma_column.
Atom sigma_atom_d(const World& w, Atom x);

// Classical crystal structure for an affine type: native words for A1 and D1,
// virtual operators on ambient words for folded families.
class Ops {
public:
    explicit Ops(AffineType t);

    const AffineType& type() const { return type_; }
    int rank() const { return type_.n; }
    const World& world() const { return world_; }
    bool folded() const { return folded_; }
    const FoldingData& fold() const { return fold_; }

    bool f(int a, Word& x) const;
    bool e(int a, Word& x) const;
    int eps(int a, const Word& x) const;
    int phi(int a, const Word& x) const;
    std::vector<int> eps_vec(const Word& x) const;
    Weight weight(const Word& x) const;
    bool is_highest(const Word& x) const;

    // Applies e_i with the smallest applicable i until none applies; returns
    // the highest element and the indices applied, in order.
    std::pair<Word, std::vector<int>> raise(Word x) const;
    Word lower_fully(Word x) const;
    // Lusztig involution inside one classical component.
    Word star(const Word& x) const;

    bool alignment_ok(const Word& x) const;

private:
    AffineType type_;
    World world_;
    bool folded_ = false;
    FoldingData fold_;
};

World world_of(AffineType t);  // world used by Ops(t)

// Breadth-first closure under f_i, e_i (i in I_0) from a seed.
struct ComponentGraph {
    std::vector<Word> elements;
    std::unordered_map<Word, int, WordHash> index;
    int highest = 0;
};

ComponentGraph generate_component(const Ops& ops, const Word& seed, std::size_t budget = 1000000);

// Contragredient dual: a formal relabeled crystal with e and f exchanged.
struct DualElement {
    Word base;
    friend bool operator==(const DualElement&, const DualElement&) = default;
};
bool dual_f(const Ops& ops, int a, DualElement& x);
bool dual_e(const Ops& ops, int a, DualElement& x);
Weight dual_weight(const Ops& ops, const DualElement& x);

std::size_t node_budget();  // RCBIJ_BUDGET overrides the default

struct BudgetExceeded : std::length_error {
    using std::length_error::length_error;
};

}  // namespace rcbij
