// The Burnside ring A(G) of a finite group. Elements live in the basis of
// conjugacy classes of subgroups; the ghost side is the character (mark)
// map into a product of copies of Z. Multiplication goes through the ghost
// map and exact triangular inversion; induction, restriction and the
// congruence characterization of the ghost image live here too.
#pragma once

#include <map>
#include <memory>
#include <mutex>

#include "burnside/groups.hpp"
#include "burnside/zlinalg.hpp"

namespace burnside {

struct ring_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct not_in_image_error : ring_error {
    int coordinate;   // first class index where back-substitution left Z
    Rat value;        // the fractional pivot
    not_in_image_error(int coord, Rat val, const std::string& what)
        : ring_error(what), coordinate(coord), value(std::move(val)) {}
};

// One Burnside congruence: coeffs . v == 0 (mod modulus), coefficients over
// the ghost coordinates of ccs(G).
struct CongruenceForm {
    IntVec coeffs;
    Int modulus;  // |W_G H|
};

class BurnsideRing;
using RingPtr = std::shared_ptr<const BurnsideRing>;

class BurnsideRing : public std::enable_shared_from_this<BurnsideRing> {
public:
    static RingPtr build(GroupPtr g);
    // process-wide build-once cache keyed by group identity
    static RingPtr cached(const GroupPtr& g);

    const GroupPtr& group() const { return group_; }
    const CcsTable& ccs() const { return ccs_; }
    size_t classes() const { return ccs_.size(); }
    // marks.at(i, j) = |(G/H_i)^{H_j}|; lower triangular in canonical order
    const IntMatrix& marks() const { return marks_; }
    const std::vector<CongruenceForm>& congruence_forms() const { return congruences_; }
    size_t trivial_class() const { return 0; }
    size_t unit_class() const { return ccs_.size() - 1; }  // class of G itself

private:
    explicit BurnsideRing(GroupPtr g);
    GroupPtr group_;
    CcsTable ccs_;
    IntMatrix marks_;
    std::vector<CongruenceForm> congruences_;
};

struct BurnsideElement {
    RingPtr ring;
    IntVec coeffs;  // over ccs(G) in canonical order
    bool operator==(const BurnsideElement& o) const = default;
};

struct GhostVector {
    RingPtr ring;
    IntVec values;  // one per conjugacy class of subgroups
    bool operator==(const GhostVector& o) const = default;
};

BurnsideElement zero_element(const RingPtr& r);
BurnsideElement unit_element(const RingPtr& r);                  // [G/G]
BurnsideElement basis_element(const RingPtr& r, size_t cls);     // [G/H_cls]
BurnsideElement add(const BurnsideElement& x, const BurnsideElement& y);
BurnsideElement subtract(const BurnsideElement& x, const BurnsideElement& y);
BurnsideElement scale(const Int& n, const BurnsideElement& x);

GhostVector char_map(const BurnsideElement& x);
// Inverse of char_map on its image; throws not_in_image_error with the first
// fractional coordinate otherwise.
BurnsideElement uncharacter(const GhostVector& v);
BurnsideElement multiply(const BurnsideElement& x, const BurnsideElement& y);

struct ResidueReport {
    // per class (H): residue in [0, |W_G H|) of the congruence sum
    std::vector<std::pair<Int, Int>> residues;  // (residue, modulus)
    bool all_zero() const;
};
ResidueReport congruence_residues(const GhostVector& v);
bool is_in_ghost_image(const GhostVector& v);

Int augmentation(const BurnsideElement& x);

// f must be injective; [H/K] goes to [G/f(K)].
BurnsideElement induction(const GroupHom& f, const BurnsideElement& x);
// Restriction along an arbitrary homomorphism: the target group's transitive
// sets decompose into source orbits through f.
BurnsideElement restriction_along(const GroupHom& f, const BurnsideElement& x);
// Mackey-functor restriction; insists on injectivity like induction does.
BurnsideElement restriction(const GroupHom& f, const BurnsideElement& x);

// Double coset formula: res_K ind_H x == sum over K g H of ind along
// c(g) : H cap g^-1 K g -> K of the restriction of x. x lives over the
// abstract group of h (coefficients in the canonical ccs order of that group).
bool verify_mackey(const RingPtr& gring, const Subgroup& h, const Subgroup& k,
                   const IntVec& x_over_h);

// Green module identity: for x = sum n_i [G/H_i],
// sum n_i ind_{H_i} res_{H_i}(y) == x * y.
bool green_action_identity(const BurnsideElement& x, const BurnsideElement& y);

// HNF basis (rows, in A(G) coordinates) of the n-th power of the
// augmentation ideal.
IntMatrix ideal_power_basis(const RingPtr& r, int n);
// invariant factors of A(G) / I_G^n
std::vector<Int> completion_quotient(const RingPtr& r, int n);

}  // namespace burnside
