// Burnside-type invariants of infinite groups, computed from finite
// presentations: diagrams of finite subgroups with conjugation morphisms
// (inverse limits and condition C(K)), ghost profiles factoring through
// finite quotients, and the covariant side with L2-characters, integrality
// relations, and the pairings between the variants.
//
// Infinite ambient groups never appear as objects; the diagram, the label
// structure and the fusion file are the authoritative inputs. For a finite
// ambient group all three can be generated, which is how the infinite-group
// code paths are pinned against the classical ring.
#pragma once

#include <map>
#include <optional>

#include "burnside/ring.hpp"

namespace burnside {

struct infinite_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct missing_label_error : infinite_error {
    using infinite_error::infinite_error;
};
struct missing_quotient_error : infinite_error {
    using infinite_error::infinite_error;
};
struct missing_fusion_error : infinite_error {
    using infinite_error::infinite_error;
};
struct support_not_closed_error : infinite_error {
    using infinite_error::infinite_error;
};
struct non_unit_diagonal_error : infinite_error {
    using infinite_error::infinite_error;
};
struct unreachable_label_error : infinite_error {
    using infinite_error::infinite_error;
};
struct missing_homomorphism_error : infinite_error {
    using infinite_error::infinite_error;
};

// Finite diagram of finite groups with injective morphisms, closed under
// composition and containing identities (closure is computed on load).
class SubFinDiagram {
public:
    struct Arrow {
        int from, to;
        GroupHom hom;
    };

    SubFinDiagram(std::vector<GroupPtr> objects, std::vector<Arrow> arrows);

    const std::vector<GroupPtr>& objects() const { return objects_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }  // identities included
    const std::vector<RingPtr>& rings() const { return rings_; }

private:
    std::vector<GroupPtr> objects_;
    std::vector<Arrow> arrows_;
    std::vector<RingPtr> rings_;
};

struct InverseLimit {
    std::vector<size_t> offset;  // per object, into the concatenated coordinates
    size_t total = 0;
    IntMatrix basis;  // HNF rows spanning the limit lattice

    size_t rank() const { return basis.rows(); }
};

// Kernel of (x_H)_H -> (x_H - res_u x_K)_{u: H -> K}, over the direct sum of
// the A(H).
InverseLimit inverse_limit(const SubFinDiagram& d);

// Components of a concatenated coordinate vector, one element per object.
std::vector<BurnsideElement> limit_components(const SubFinDiagram& d, const InverseLimit& lim,
                                              const IntVec& coords);

// Componentwise products of basis vectors stay in the lattice, and the
// componentwise unit lies in it.
bool limit_is_subring(const SubFinDiagram& d, const InverseLimit& lim);

// A finite model of (part of) ccs_f of the ambient group: a label set with a
// ccs(K) -> labels assignment per object. Functoriality along every arrow
// and label coverage are validated.
struct CcsfStructure {
    std::vector<std::string> labels;
    std::vector<std::vector<int>> assign;  // per object, per ccs class
};

void validate_ccsf(const SubFinDiagram& d, const CcsfStructure& c);

// Profile over labels; values indexed by label.
using LabelProfile = std::map<int, Int>;

// Pulls the profile back to a ghost vector over object k and runs the
// finite-group membership test.
bool condition_C(const SubFinDiagram& d, const CcsfStructure& c, const LabelProfile& x,
                 int object);

// HNF basis of the profiles (x(0..n_stages)) satisfying C(Z/p^m) for all
// m <= n_stages, computed through the actual finite-group congruence forms
// of the cyclic tower.
IntMatrix prufer_solution_lattice(long p, int n_stages);

// Ghost profile over a declared finite quotient; membership is the classical
// congruence test over that quotient.
struct FinsetProfile {
    RingPtr quotient;
    IntVec values;
};
bool finset_membership(const FinsetProfile& x);

// The infinite cyclic group: profiles over the finite-index subgroups mZ,
// m = 1..bound. x(m) = sum over n | m of coeffs(n) . n for the element
// sum coeffs(n) [Z/n]; verdicts are the divisor congruences
// sum_{m | n} phi(n/m) x(m) == 0 mod n.
struct ZProfileReport {
    std::vector<Int> x;                           // x(m), index m-1
    std::vector<std::pair<Int, Int>> residues;    // per n: (residue, n)
    bool ok = true;
};
ZProfileReport finset_Z_profile(const std::map<long, Int>& coeffs, long bound);
ZProfileReport finset_Z_check(const std::vector<Int>& x);

// Declarative fusion data for the covariant side: labels are classes of
// finite subgroups of the ambient group, carrying |K|; for each ordered pair
// ((K), (H)) the classes (L) of subgroups of H that are conjugate to K in
// the ambient group, with |H meet N_G L|.
struct FusionLabelInfo {
    std::string name;
    long order;
};
struct FusionEntry {
    int class_in_h;        // ccs index within the abstract group H
    long normalizer_meet;  // |H meet N_G L|
};
class FusionData {
public:
    FusionData(std::vector<FusionLabelInfo> labels,
               std::map<std::pair<int, int>, std::vector<FusionEntry>> table);

    const std::vector<FusionLabelInfo>& labels() const { return labels_; }
    int label_index(const std::string& name) const;
    const std::vector<FusionEntry>& entries(int k, int h) const;  // empty if absent
    bool subconjugate(int k, int h) const { return !entries(k, h).empty(); }

private:
    std::vector<FusionLabelInfo> labels_;
    std::map<std::pair<int, int>, std::vector<FusionEntry>> table_;
};

// Auto-generated fusion of a finite group: labels are the ccs classes.
FusionData finite_group_fusion(const RingPtr& r);

// Integer combination of labels: the covariant Burnside group on a finite
// label support.
struct CovariantElement {
    IntVec coeffs;  // over the label set
};

// ch_K(G/H) = sum over (L) in L_K(H) of |K| / |H meet N_G L|.
Rat l2_character_basis(const FusionData& f, int k_label, int h_label);
Rat l2_character(const FusionData& f, const CovariantElement& t, int k_label);

struct IntegralityResult {
    bool integral;
    RatVec transformed;    // B_T x, one rational per support position
    RatMatrix a_matrix;    // A_T, unitriangular character matrix on T
};
// support lists label indices, numerated compatibly with subconjugacy
// (K before H whenever K is subconjugate to H); x is indexed like support.
IntegralityResult integrality_check(const FusionData& f, const std::vector<int>& support,
                                    const RatVec& x);

// Diagram of all subgroup classes of a finite group, with every conjugation
// morphism, its canonical label structure and fusion data. Used to pin the
// infinite-group machinery against the classical ring.
struct FiniteAmbient {
    RingPtr ring;
    SubFinDiagram diagram;
    CcsfStructure structure;
    FusionData fusion;
    std::vector<GroupHom> inclusions;  // object -> G, one per diagram object
};
FiniteAmbient finite_group_diagram(const RingPtr& r);

// Elements of the finite-G-set ring presented through a finite quotient Q,
// with the composites H -> Q supplied per diagram object.
struct FinsetElement {
    RingPtr quotient;
    BurnsideElement element;                      // over the quotient
    std::vector<std::optional<GroupHom>> to_quotient;  // per object
};

// nu(x, t): per support label, realized as a class (L) of some object H, the
// value sum_M x_H(M) |M \ H / L|; all realizations must agree.
Int pairing_nu(const SubFinDiagram& d, const CcsfStructure& c, const InverseLimit& lim,
               const IntVec& limit_coords, const CovariantElement& t);

// mu([S], [G/K]) through the projection formula at a realizing object:
// restrict S along H -> Q, multiply by [H/L], push classes to labels.
CovariantElement pairing_mu(const SubFinDiagram& d, const CcsfStructure& c,
                            const FinsetElement& s, const CovariantElement& t);

// orbit count |G \ S|: the coefficient sum
Int pairing_Q(const CovariantElement& t);

// T: restriction of the quotient element along every H -> Q; the result is
// checked against the diagram's compatibility equations.
std::vector<BurnsideElement> map_T(const SubFinDiagram& d, const FinsetElement& s);

// V: push [H/K] to the label of (K)
CovariantElement map_V(const SubFinDiagram& d, const CcsfStructure& c, int object,
                       const BurnsideElement& a);

}  // namespace burnside
