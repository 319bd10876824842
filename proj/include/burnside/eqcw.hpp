// Equivariant cell data: censuses of G-CW complexes (dimensions and isotropy
// classes of cell orbits) for Euler characteristics, and chain-level packages
// (one bounded integer complex per subgroup class, with an optional self-map)
// for Lefschetz classes and homology ranks. A census carries no attaching
// maps; anything needing boundaries takes a ChainPackage.
#pragma once

#include <optional>

#include "burnside/ring.hpp"

namespace burnside {

struct eqcw_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct dimension_mismatch_error : eqcw_error {
    using eqcw_error::eqcw_error;
};
struct incomplete_data_error : eqcw_error {
    using eqcw_error::eqcw_error;
};
struct not_a_complex_error : eqcw_error {
    using eqcw_error::eqcw_error;
};

// Bounded chain complex of free Z-modules. boundary[k] is the matrix of
// d_k : C_k -> C_{k-1} acting on column vectors, so dim C_k = boundary[k].cols()
// and boundary[0] has zero rows.
class ChainComplex {
public:
    ChainComplex() = default;
    explicit ChainComplex(std::vector<IntMatrix> boundary);  // checks d.d = 0

    size_t degrees() const { return boundary_.size(); }
    size_t dim(size_t k) const { return k < degrees() ? boundary_[k].cols() : 0; }
    const IntMatrix& boundary(size_t k) const { return boundary_[k]; }
    const std::vector<IntMatrix>& boundaries() const { return boundary_; }
    Int euler_characteristic() const;

private:
    std::vector<IntMatrix> boundary_;
};

// maps[k] is a dim(k) x dim(k) matrix; must commute with the boundaries.
void validate_chain_map(const ChainComplex& c, const std::vector<IntMatrix>& maps);

Int lefschetz_number(const ChainComplex& c, const std::vector<IntMatrix>& maps);

struct GCWCell {
    int dim;
    int isotropy;  // index into ccs(G)
};

struct GCWComplex {
    RingPtr ring;
    std::vector<GCWCell> cells;
    std::string label;
};

GCWComplex make_complex(RingPtr ring, std::vector<GCWCell> cells, std::string label = "");

BurnsideElement euler_class(const GCWComplex& x);
// Per ghost coordinate (K): the classical Euler characteristic of the
// K-fixed subcomplex, counted cell by cell via marks.
GhostVector fixed_euler_numbers(const GCWComplex& x);
GCWComplex disjoint_union(const GCWComplex& x, const GCWComplex& y);
// Cells multiply through double cosets: (G/H, m) x (G/K, n) splits into
// orbits G/(H cap gKg^-1) in dimension m + n.
GCWComplex product_complex(const GCWComplex& x, const GCWComplex& y);

// Number of relative cells of the class-(c) quotient pair per degree; this
// is what a matching ChainPackage's complex dimensions must equal.
std::vector<long> relative_census(const GCWComplex& x, int cls);

struct ClassChainData {
    ChainComplex complex;
    std::vector<IntMatrix> map;  // self-map, one matrix per degree
};

struct ChainPackage {
    RingPtr ring;
    std::vector<std::optional<ClassChainData>> per_class;  // indexed by ccs
};

// Validates complexes and chain maps; throws incomplete_data_error when a
// class is missing.
void validate_package(const ChainPackage& pkg);
bool package_matches_census(const ChainPackage& pkg, const GCWComplex& x);

BurnsideElement lefschetz_class(const ChainPackage& pkg);
// (Lambda^G(f) - 1) (chi^G(X) - 1), with 1 = [G/G], exactly as displayed in
// the degree description of self-maps of homotopy representations.
BurnsideElement degree_class(const ChainPackage& pkg, const GCWComplex& x);

std::vector<long> rational_homology_ranks(const ChainComplex& c);
// Degreewise sum of the per-class homology ranks: the rational rank of
// equivariant stable cohomotopy in each degree.
std::vector<long> rational_cohomotopy_ranks(const ChainPackage& pkg);

// Pairs of rectangular chain data f : X -> Y and g : Y -> X per class; only
// shapes are checked, the trace identity needs no chain condition.
struct CompositePair {
    std::vector<IntMatrix> f;  // f[k]: dim(Y,k) x dim(X,k)
    std::vector<IntMatrix> g;  // g[k]: dim(X,k) x dim(Y,k)
};

struct CompositeFamily {
    RingPtr ring;
    std::vector<std::optional<CompositePair>> per_class;
};

BurnsideElement lefschetz_composite_fg(const CompositeFamily& fam);  // Lambda^G(f.g)
BurnsideElement lefschetz_composite_gf(const CompositeFamily& fam);  // Lambda^G(g.f)
bool lefschetz_trace_property(const CompositeFamily& fam);

}  // namespace burnside
