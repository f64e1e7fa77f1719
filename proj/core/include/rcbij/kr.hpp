#pragma once

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rcbij/cartan.hpp"
#include "rcbij/crystal.hpp"

namespace rcbij {

struct Factor {
    int r = 1;
    int s = 1;
    friend bool operator==(const Factor&, const Factor&) = default;
    friend auto operator<=>(const Factor&, const Factor&) = default;
};

// An element of a tensor product of KR crystals, displayed left to right.
// For folded families each element is the concatenated ambient word of the
// factor's virtual image.
struct Path {
    std::vector<Factor> factors;
    std::vector<Word> elems;
    friend bool operator==(const Path&, const Path&) = default;
};

Word flat(const Path& p);
std::string path_string(const World& w, const Path& p);

bool is_spin_factor(AffineType t, int r);  // native D only
int word_length(AffineType t, int r, int s);

// One KR crystal B^{r,s} as a finite set of words with its classical
// decomposition. Immutable once built and shared through factor_set().
struct FactorSet {
    AffineType type;
    int r = 1, s = 1;
    std::vector<Factor> ambient;   // ambient factor specs (native: {(r,s)})
    std::vector<int> lengths;      // word length of each ambient factor
    std::vector<Word> elems;
    std::unordered_map<Word, int, WordHash> index;
    std::vector<int> comp;             // component id of each element
    std::vector<int> comp_highest;     // element index of each component's highest element
    std::vector<int> comp_lowest;
    std::vector<Weight> comp_weight;
    std::vector<std::vector<int>> comp_ks;  // native D letters: the k-multiset of each component
    std::vector<std::vector<int>> eps;  // classical eps vector per element
    std::vector<Weight> wt;             // classical weight per element

    int find(const Word& w) const {
        auto it = index.find(w);
        return it == index.end() ? -1 : it->second;
    }
    const Word& maximal() const { return elems[0]; }
};

const FactorSet& factor_set(AffineType t, int r, int s);

enum class FoldedMethod { AffineClosure, PhiCharacterization };
// Highest elements of a folded B^{r,s}, as ambient words. The closure method
// needs ambient type A; the other one tests ambient candidates with Phi^X.
std::vector<Word> folded_highest(AffineType t, int r, int s, FoldedMethod m);
std::vector<Word> folded_highest_closure(AffineType t, int r, int s);

// Native building blocks.
Word maximal_word(World w, int r, int s);
// Multisets of even k (2 <= k <= r) of size N <= s; each gives the weight
// (s-N)L_r + sum L_{r-k}. Type D, letter columns.
std::vector<std::vector<int>> d_decomposition(int r, int s);
Weight d_decomposition_weight(int n, int r, int s, const std::vector<int>& ks);
std::vector<std::vector<Atom>> hw_filling_grid(int r, int s, const std::vector<int>& ks);
Word hw_filling(int r, int s, const std::vector<int>& ks);
// Highest elements of one native KR crystal without generating it.
// Ordered like d_decomposition for type D.
std::vector<Word> native_highest(AffineType native, int r, int s);
// Type D, r >= 2, s >= 2: for each entry of d_decomposition the hw element of
// (B^{r,1})^{s} whose configuration is admissible for B^{r,s}.
std::vector<Word> native_highest_phi(AffineType native, int r, int s);

// Grid <-> word for letter tableaux: columns left to right, each read bottom to top.
std::vector<std::vector<Atom>> word_to_grid(const Word& w, int r, int s);
Word grid_to_word(const std::vector<std::vector<Atom>>& g);

// Type A promotion on a rectangle with entries in 1..N.
enum class SlideOrder { RowMajor, ColumnMajor };
Word promotion(const Word& w, int r, int s, int N, SlideOrder order = SlideOrder::RowMajor);
Word promotion_inverse(const Word& w, int r, int s, int N, SlideOrder order = SlideOrder::RowMajor);

// Affine e_0/f_0 on a tensor of type A rectangles, via e_0 = pr^{-1} e_1 pr.
bool ambient_e0(int n, const std::vector<Factor>& shapes, Word& w);
bool ambient_f0(int n, const std::vector<Factor>& shapes, Word& w);
int ambient_eps0(int n, const std::vector<Factor>& shapes, const Word& w);
int ambient_phi0(int n, const std::vector<Factor>& shapes, const Word& w);

// Affine operators for native A or an ambient-A folded type, acting on a
// path's flat word. Throws for D-ambient contexts.
bool affine_e0(AffineType t, const std::vector<Factor>& factors, Word& w);
bool affine_f0(AffineType t, const std::vector<Factor>& factors, Word& w);
std::vector<Factor> ambient_shapes(AffineType t, const std::vector<Factor>& factors);

// Highest weight enumeration (I_0-highest paths), built from the right.
std::vector<Path> enumerate_highest(AffineType t, const std::vector<Factor>& factors);
std::vector<Path> enumerate_highest(AffineType t, const std::vector<Factor>& factors, const Weight& lambda);

Weight path_weight(AffineType t, const Path& p);
bool path_is_highest(AffineType t, const Path& p);
bool path_valid(AffineType t, const Path& p);  // every factor element belongs to its set
Path split_flat(AffineType t, const std::vector<Factor>& factors, const Word& w);

// Lusztig involution on paths (factor order reversed) and the hwstar map.
Path star_path(AffineType t, const Path& p);
Path raise_path(AffineType t, const Path& p);
Path diamond(AffineType t, const Path& p);

// Dynkin automorphism on native A/D paths.
Path sigma_path(AffineType t, const Path& p);
int sigma_node(AffineType t, int a);

// Left splitting maps on native paths. Each returns nullopt when the
// leftmost factor has the wrong shape.
std::optional<Path> lh(AffineType t, const Path& p);
std::optional<Path> lh_sp(AffineType t, const Path& p);
std::optional<Path> lb(AffineType t, const Path& p);
std::optional<Path> ls(AffineType t, const Path& p);
std::optional<Path> lb_s(AffineType t, const Path& p);
// Right analogs, each = diamond o lx o diamond.
std::optional<Path> rh(AffineType t, const Path& p);
std::optional<Path> rh_sp(AffineType t, const Path& p);
std::optional<Path> rb(AffineType t, const Path& p);
std::optional<Path> rs(AffineType t, const Path& p);

}  // namespace rcbij
