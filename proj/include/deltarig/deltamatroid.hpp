#ifndef DELTARIG_DELTAMATROID_HPP
#define DELTARIG_DELTAMATROID_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace deltarig {

using Mask = std::uint32_t;

enum class ElementClass {
    Ordinary,
    OrientableRibbonLoop,
    NonOrientableRibbonLoop,
};

struct ElementInfo {
    ElementClass cls;
    bool is_loop;
    bool is_coloop;
};

/// D = (E, F): ordered ground labels plus feasible subsets as bitmasks over
/// ground positions. Immutable after construction; all operations return new
/// values. |E| <= 30.
class DeltaMatroid {
public:
    /// Checks the symmetric exchange axiom and label distinctness.
    /// Throws std::invalid_argument on violation (with a witness triple).
    static DeltaMatroid validate(std::vector<std::string> ground, std::vector<Mask> feasible);

    /// Constructs without the axiom check, for operations that preserve it.
    static DeltaMatroid unchecked(std::vector<std::string> ground, std::vector<Mask> feasible);

    int size() const { return static_cast<int>(ground_.size()); }
    const std::vector<std::string>& ground() const { return ground_; }
    const std::vector<Mask>& feasible() const { return feasible_; }
    Mask full_mask() const { return size() == 0 ? 0 : (Mask(1) << size()) - 1; }

    int index_of(const std::string& label) const;  // throws on unknown element
    Mask mask_of(const std::vector<std::string>& labels) const;

    bool is_feasible(Mask f) const;
    int min_feasible_size() const;
    int max_feasible_size() const;
    int width() const { return max_feasible_size() - min_feasible_size(); }
    bool is_even() const;
    bool is_matroid() const { return width() == 0; }

    bool is_loop(int e) const;    // e in no feasible set
    bool is_coloop(int e) const;  // e in every feasible set

    int min_matroid_rank(Mask a) const;
    int max_matroid_rank(Mask a) const;

    /// rho_D(A) = |E| - min |A (symm diff) F| over feasible F.
    int rho(Mask a) const;

    /// 2 * sigma(A) where sigma(A) = (r((D|A)_max) + r((D|A)_min)) / 2.
    int sigma2(Mask a) const;
    int sigma2() const { return sigma2(full_mask()); }

    DeltaMatroid delete_element(int e) const;
    DeltaMatroid contract_element(int e) const;

    /// D|A: sequential deletion of the complement of A.
    DeltaMatroid restrict_to(Mask a) const;

    /// Deletes the elements of X and contracts the elements of Y (disjoint).
    DeltaMatroid minor(Mask del, Mask con) const;

    DeltaMatroid twist(Mask a) const;
    DeltaMatroid dual() const { return twist(full_mask()); }
    static DeltaMatroid direct_sum(const DeltaMatroid& a, const DeltaMatroid& b);

    /// False iff some bipartition E = E1 | E2 (both non-empty) splits the
    /// feasible family into a product. Returns the witness E1 when split.
    bool is_connected(Mask* witness = nullptr) const;

    ElementInfo classify_element(int e) const;

    bool is_isomorphic(const DeltaMatroid& other) const;

    /// True iff some minor of D is isomorphic to a target (or, when
    /// up_to_twist, to a twist of a target). The witness records the
    /// delete/contract masks.
    bool has_minor_in(const std::vector<DeltaMatroid>& targets, bool up_to_twist,
                      std::pair<Mask, Mask>* witness = nullptr) const;

    /// Deterministic memoization key: n followed by the sorted mask list.
    std::vector<Mask> canonical_key() const;

    bool operator==(const DeltaMatroid& o) const {
        return ground_ == o.ground_ && feasible_ == o.feasible_;
    }

    std::string describe() const;  // compact text form for witnesses

private:
    DeltaMatroid(std::vector<std::string> ground, std::vector<Mask> feasible);

    void check_element(int e) const;
    DeltaMatroid remove_position(int e, bool keep_containing) const;

    std::vector<std::string> ground_;
    std::vector<Mask> feasible_;  // sorted ascending, unique
};

// named small delta-matroids used throughout the paper's arguments
DeltaMatroid make_np();               // three elements, feasible iff even size
DeltaMatroid make_uniform(int r, int n);  // U_{r,n}
DeltaMatroid make_mk4();              // cycle matroid of K_4, bases = spanning trees

}  // namespace deltarig

#endif
