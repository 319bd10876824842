// Finite groups as concrete multiplication tables, with the subgroup-level
// machinery the Burnside ring needs: subgroup enumeration, conjugacy classes
// of subgroups with normalizers and materialized Weyl groups, marks, double
// cosets and quotients. Groups are immutable after construction and shared
// by pointer; all operations are pure.
#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace burnside {

struct group_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct not_a_group_error : group_error {
    using group_error::group_error;
};
struct too_large_error : group_error {
    using group_error::group_error;
};
struct not_normal_error : group_error {
    using group_error::group_error;
};
struct not_injective_error : group_error {
    using group_error::group_error;
};

class FiniteGroup {
public:
    // table is row-major order x order; all three group axioms are checked.
    FiniteGroup(int order, std::vector<int> table, std::string label);

    int order() const { return order_; }
    int mul(int a, int b) const { return table_[a * order_ + b]; }
    int inv(int a) const { return inverses_[a]; }
    int identity() const { return identity_; }
    const std::string& label() const { return label_; }
    int element_order(int a) const;
    int conjugate(int g, int a) const { return mul(mul(g, a), inv(g)); }  // g a g^-1
    bool is_abelian() const;

private:
    int order_;
    int identity_ = -1;
    std::vector<int> table_;
    std::vector<int> inverses_;
    std::string label_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

// Declarative group description; see the JSON schema in json_io.hpp.
struct GroupSpec {
    enum class Kind { cayley, perm, named, product };
    Kind kind = Kind::named;
    std::vector<std::vector<int>> table;                     // cayley
    int degree = 0;                                          // perm
    std::vector<std::vector<std::vector<int>>> generators;   // perm, cycle notation
    std::string name;                                        // named
    std::vector<GroupSpec> factors;                          // product
};

constexpr int kDefaultOrderCap = 400;

GroupPtr build_group(const GroupSpec& spec, int order_cap = kDefaultOrderCap);
// Accepts cyclic(n) / dihedral(n) / symmetric(n) / alternating(n) /
// quaternion8 plus the short forms Cn, Dn, Sn, An, Q8.
GroupPtr named_group(const std::string& name, int order_cap = kDefaultOrderCap);

class Subgroup {
public:
    Subgroup(GroupPtr parent, std::vector<int> elements);  // validates

    const GroupPtr& parent() const { return parent_; }
    const std::vector<int>& elements() const { return elements_; }  // sorted
    int order() const { return (int)elements_.size(); }
    bool contains(int g) const;
    bool operator==(const Subgroup& o) const { return elements_ == o.elements_; }

private:
    GroupPtr parent_;
    std::vector<int> elements_;
};

struct GroupHom {
    GroupPtr source, target;
    std::vector<int> images;  // per source element
    bool injective = false;

    GroupHom(GroupPtr source, GroupPtr target, std::vector<int> images);  // validates
    int map(int a) const { return images[a]; }
};

GroupHom identity_hom(const GroupPtr& g);
GroupHom compose_homs(const GroupHom& outer, const GroupHom& inner);  // outer . inner

// element-for-element identical multiplication tables
bool same_cayley_table(const FiniteGroup& a, const FiniteGroup& b);

Subgroup trivial_subgroup(const GroupPtr& g);
Subgroup full_subgroup(const GroupPtr& g);
Subgroup subgroup_closure(const GroupPtr& g, const std::vector<int>& generators);
Subgroup conjugate_subgroup(const Subgroup& s, int g);  // g S g^-1
Subgroup intersect_subgroups(const Subgroup& a, const Subgroup& b);
bool subgroup_contained(const Subgroup& a, const Subgroup& b);  // a subset of b
Subgroup normalizer(const Subgroup& s);
bool is_normal(const Subgroup& s);
bool is_cyclic_subgroup(const Subgroup& s);
Subgroup hom_image(const GroupHom& f, const Subgroup& s);    // s in source
Subgroup hom_preimage(const GroupHom& f, const Subgroup& s); // s in target

// Complete duplicate-free subgroup list, sorted by (order, element set).
std::vector<Subgroup> enumerate_subgroups(const GroupPtr& g);

struct EmbeddedGroup {
    GroupPtr group;
    GroupHom incl;  // group -> parent of the subgroup
};
EmbeddedGroup subgroup_as_group(const Subgroup& s);

struct QuotientGroup {
    GroupPtr group;
    GroupHom proj;  // parent -> group
};
QuotientGroup quotient_group(const GroupPtr& g, const Subgroup& n);  // n normal in g

struct CcsClass {
    Subgroup rep;                              // lexicographically least conjugate
    std::vector<std::vector<int>> conjugates;  // all conjugates as sorted sets
    Subgroup normalizer;
    long weyl_order;
    GroupPtr norm_grp;   // normalizer as a standalone group
    GroupHom norm_incl;  // norm_grp -> G
    GroupPtr weyl;       // N_G H / H, materialized
    GroupHom weyl_proj;  // norm_grp -> weyl
};

// Conjugacy classes of subgroups in canonical order: non-decreasing subgroup
// order, ties broken by the representative's element set.
class CcsTable {
public:
    explicit CcsTable(GroupPtr g);

    const GroupPtr& group() const { return group_; }
    const std::vector<CcsClass>& classes() const { return classes_; }
    size_t size() const { return classes_.size(); }
    int class_of(const Subgroup& s) const;
    int class_of_elements(const std::vector<int>& sorted_elements) const;
    std::string label(int idx) const;  // "order:index", index within equal-order block
    int index_of_label(const std::string& label) const;
    std::vector<std::string> labels() const;
    // Full preimage p_H^{-1}(C) in G, for C a subgroup of the Weyl group of
    // class idx.
    Subgroup weyl_preimage(int idx, const Subgroup& c_in_weyl) const;

private:
    GroupPtr group_;
    std::vector<CcsClass> classes_;
};

CcsTable conjugacy_classes_of_subgroups(const GroupPtr& g);

// |(G/H)^K|, by enumerating cosets gH and testing g^-1 K g inside H.
long mark(const GroupPtr& g, const Subgroup& h, const Subgroup& k);

// One representative per double coset H g K, ordered by least element.
std::vector<int> double_cosets(const GroupPtr& g, const Subgroup& h, const Subgroup& k);

struct CyclicClassData {
    Subgroup rep;            // cyclic subgroup of w
    long generator_count;    // |Gen(C)| = phi(|C|)
    long normalizer_index;   // [W : N_W C]
};
std::vector<CyclicClassData> cyclic_subgroup_data(const GroupPtr& w);

// relation[i][j] true iff some conjugate of rep_i is contained in rep_j
std::vector<std::vector<bool>> subconjugacy_order(const CcsTable& ccs);

struct ElementClasses {
    std::vector<int> class_of;              // per element
    std::vector<std::vector<int>> classes;  // each sorted; ordered by least member
};
ElementClasses element_classes(const GroupPtr& g);

long euler_phi_long(long n);

}  // namespace burnside
