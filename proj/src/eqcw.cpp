#include "burnside/eqcw.hpp"

namespace burnside {

ChainComplex::ChainComplex(std::vector<IntMatrix> boundary) : boundary_(std::move(boundary)) {
    if (boundary_.empty()) return;
    if (boundary_[0].rows() != 0)
        throw not_a_complex_error("boundary in degree 0 must have zero rows");
    for (size_t k = 1; k < boundary_.size(); ++k) {
        if (boundary_[k].rows() != boundary_[k - 1].cols())
            throw not_a_complex_error("boundary shapes do not chain at degree " +
                                      std::to_string(k));
        if (k >= 2) {
            IntMatrix dd = boundary_[k - 1] * boundary_[k];
            if (!dd.is_zero())
                throw not_a_complex_error("d.d != 0 at degree " + std::to_string(k));
        }
    }
}

Int ChainComplex::euler_characteristic() const {
    Int chi = 0;
    for (size_t k = 0; k < degrees(); ++k) chi += (k % 2 ? -1 : 1) * Int(dim(k));
    return chi;
}

void validate_chain_map(const ChainComplex& c, const std::vector<IntMatrix>& maps) {
    if (maps.size() != c.degrees())
        throw dimension_mismatch_error("chain map must supply one matrix per degree");
    for (size_t k = 0; k < maps.size(); ++k)
        if (maps[k].rows() != c.dim(k) || maps[k].cols() != c.dim(k))
            throw dimension_mismatch_error("chain map matrix in degree " + std::to_string(k) +
                                           " is not square of the chain rank");
    for (size_t k = 1; k < maps.size(); ++k) {
        IntMatrix left = c.boundary(k) * maps[k];
        IntMatrix right = maps[k - 1] * c.boundary(k);
        if (!(left == right))
            throw dimension_mismatch_error("chain map does not commute with the boundary at " +
                                           std::to_string(k));
    }
}

Int lefschetz_number(const ChainComplex& c, const std::vector<IntMatrix>& maps) {
    if (maps.size() != c.degrees())
        throw dimension_mismatch_error("need one map matrix per degree");
    Int acc = 0;
    for (size_t k = 0; k < maps.size(); ++k) {
        if (maps[k].rows() != c.dim(k) || maps[k].cols() != c.dim(k))
            throw dimension_mismatch_error("map shape mismatch in degree " + std::to_string(k));
        Int tr = 0;
        for (size_t i = 0; i < maps[k].rows(); ++i) tr += maps[k].at(i, i);
        acc += (k % 2 ? -tr : tr);
    }
    return acc;
}

GCWComplex make_complex(RingPtr ring, std::vector<GCWCell> cells, std::string label) {
    for (const GCWCell& c : cells) {
        if (c.dim < 0) throw eqcw_error("cell dimension must be >= 0");
        if (c.isotropy < 0 || c.isotropy >= (int)ring->classes())
            throw eqcw_error("cell isotropy class out of range");
    }
    return GCWComplex{std::move(ring), std::move(cells), std::move(label)};
}

BurnsideElement euler_class(const GCWComplex& x) {
    BurnsideElement e = zero_element(x.ring);
    for (const GCWCell& c : x.cells) e.coeffs[c.isotropy] += (c.dim % 2 ? -1 : 1);
    return e;
}

GhostVector fixed_euler_numbers(const GCWComplex& x) {
    // chi(X^K) cell by cell: the orbit G/H contributes |(G/H)^K| cells to the
    // K-fixed subcomplex; counted directly, not through the marks table
    const GroupPtr& g = x.ring->group();
    const CcsTable& ccs = x.ring->ccs();
    GhostVector v{x.ring, IntVec(x.ring->classes(), 0)};
    for (const GCWCell& c : x.cells) {
        const Subgroup& h = ccs.classes()[c.isotropy].rep;
        for (size_t k = 0; k < ccs.size(); ++k) {
            long fixed = mark(g, h, ccs.classes()[k].rep);
            v.values[k] += (c.dim % 2 ? -fixed : fixed);
        }
    }
    return v;
}

GCWComplex disjoint_union(const GCWComplex& x, const GCWComplex& y) {
    if (x.ring.get() != y.ring.get()) throw eqcw_error("complexes over different groups");
    GCWComplex r = x;
    r.cells.insert(r.cells.end(), y.cells.begin(), y.cells.end());
    r.label = x.label + "+" + y.label;
    return r;
}

GCWComplex product_complex(const GCWComplex& x, const GCWComplex& y) {
    if (x.ring.get() != y.ring.get()) throw eqcw_error("complexes over different groups");
    const GroupPtr& g = x.ring->group();
    const CcsTable& ccs = x.ring->ccs();
    GCWComplex r{x.ring, {}, x.label + "x" + y.label};
    for (const GCWCell& cx : x.cells)
        for (const GCWCell& cy : y.cells) {
            const Subgroup& h = ccs.classes()[cx.isotropy].rep;
            const Subgroup& k = ccs.classes()[cy.isotropy].rep;
            for (int rep : double_cosets(g, h, k)) {
                std::vector<int> meet;
                int ri = g->inv(rep);
                for (int a : h.elements())
                    if (k.contains(g->mul(g->mul(ri, a), rep))) meet.push_back(a);
                // stabilizer of (eH, rep K) is H cap rep K rep^-1
                int cls = ccs.class_of(Subgroup(g, meet));
                r.cells.push_back(GCWCell{cx.dim + cy.dim, cls});
            }
        }
    return r;
}

std::vector<long> relative_census(const GCWComplex& x, int cls) {
    std::vector<long> counts;
    for (const GCWCell& c : x.cells) {
        if (c.isotropy != cls) continue;
        if ((int)counts.size() <= c.dim) counts.resize(c.dim + 1, 0);
        ++counts[c.dim];
    }
    return counts;
}

void validate_package(const ChainPackage& pkg) {
    if (pkg.per_class.size() != pkg.ring->classes())
        throw incomplete_data_error("package must cover every subgroup class");
    for (size_t i = 0; i < pkg.per_class.size(); ++i) {
        if (!pkg.per_class[i])
            throw incomplete_data_error("missing chain data for class " +
                                        pkg.ring->ccs().label((int)i));
        validate_chain_map(pkg.per_class[i]->complex, pkg.per_class[i]->map);
    }
}

bool package_matches_census(const ChainPackage& pkg, const GCWComplex& x) {
    if (pkg.ring.get() != x.ring.get()) return false;
    for (size_t i = 0; i < pkg.per_class.size(); ++i) {
        std::vector<long> want = relative_census(x, (int)i);
        const ChainComplex& c = pkg.per_class[i] ? pkg.per_class[i]->complex : ChainComplex();
        size_t top = std::max(want.size(), c.degrees());
        for (size_t k = 0; k < top; ++k) {
            long have = k < c.degrees() ? (long)c.dim(k) : 0;
            long need = k < want.size() ? want[k] : 0;
            if (have != need) return false;
        }
    }
    return true;
}

BurnsideElement lefschetz_class(const ChainPackage& pkg) {
    validate_package(pkg);
    BurnsideElement e = zero_element(pkg.ring);
    for (size_t i = 0; i < pkg.per_class.size(); ++i)
        e.coeffs[i] = lefschetz_number(pkg.per_class[i]->complex, pkg.per_class[i]->map);
    return e;
}

BurnsideElement degree_class(const ChainPackage& pkg, const GCWComplex& x) {
    if (pkg.ring.get() != x.ring.get()) throw eqcw_error("package and complex group differ");
    BurnsideElement one = unit_element(pkg.ring);
    BurnsideElement lam = subtract(lefschetz_class(pkg), one);
    BurnsideElement chi = subtract(euler_class(x), one);
    return multiply(lam, chi);
}

std::vector<long> rational_homology_ranks(const ChainComplex& c) {
    std::vector<long> ranks(c.degrees(), 0);
    for (size_t k = 0; k < c.degrees(); ++k) {
        size_t rk = rank(c.boundary(k));
        size_t rk1 = k + 1 < c.degrees() ? rank(c.boundary(k + 1)) : 0;
        ranks[k] = (long)c.dim(k) - (long)rk - (long)rk1;
    }
    return ranks;
}

std::vector<long> rational_cohomotopy_ranks(const ChainPackage& pkg) {
    validate_package(pkg);
    std::vector<long> total;
    for (const auto& data : pkg.per_class) {
        std::vector<long> ranks = rational_homology_ranks(data->complex);
        if (ranks.size() > total.size()) total.resize(ranks.size(), 0);
        for (size_t k = 0; k < ranks.size(); ++k) total[k] += ranks[k];
    }
    return total;
}

namespace {

Int alternating_trace_product(const std::vector<IntMatrix>& a, const std::vector<IntMatrix>& b) {
    // sum (-1)^k tr(a_k b_k)
    size_t top = std::max(a.size(), b.size());
    Int acc = 0;
    for (size_t k = 0; k < top; ++k) {
        const IntMatrix* ak = k < a.size() ? &a[k] : nullptr;
        const IntMatrix* bk = k < b.size() ? &b[k] : nullptr;
        size_t ra = ak ? ak->rows() : 0, ca = ak ? ak->cols() : 0;
        size_t rb = bk ? bk->rows() : 0, cb = bk ? bk->cols() : 0;
        if (ca != rb || cb != ra)
            throw dimension_mismatch_error("maps not composable in degree " + std::to_string(k));
        if (!ak || !bk || ra == 0 || ca == 0) continue;
        Int tr = 0;
        for (size_t i = 0; i < ra; ++i)
            for (size_t j = 0; j < ca; ++j) tr += ak->at(i, j) * bk->at(j, i);
        acc += (k % 2 ? -tr : tr);
    }
    return acc;
}

}  // namespace

BurnsideElement lefschetz_composite_fg(const CompositeFamily& fam) {
    BurnsideElement e = zero_element(fam.ring);
    for (size_t i = 0; i < fam.per_class.size(); ++i) {
        if (!fam.per_class[i]) throw incomplete_data_error("missing class data");
        e.coeffs[i] = alternating_trace_product(fam.per_class[i]->f, fam.per_class[i]->g);
    }
    return e;
}

BurnsideElement lefschetz_composite_gf(const CompositeFamily& fam) {
    BurnsideElement e = zero_element(fam.ring);
    for (size_t i = 0; i < fam.per_class.size(); ++i) {
        if (!fam.per_class[i]) throw incomplete_data_error("missing class data");
        e.coeffs[i] = alternating_trace_product(fam.per_class[i]->g, fam.per_class[i]->f);
    }
    return e;
}

bool lefschetz_trace_property(const CompositeFamily& fam) {
    return lefschetz_composite_fg(fam) == lefschetz_composite_gf(fam);
}

}  // namespace burnside
