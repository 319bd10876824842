#include "burnside/ring.hpp"

#include <algorithm>

namespace burnside {

BurnsideRing::BurnsideRing(GroupPtr g) : group_(std::move(g)), ccs_(group_) {
    size_t n = ccs_.size();
    marks_ = IntMatrix(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            marks_.at(i, j) = mark(group_, ccs_.classes()[i].rep, ccs_.classes()[j].rep);

    // one congruence per class (H), summed over cyclic subgroup classes of W_G H
    congruences_.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        const CcsClass& cl = ccs_.classes()[i];
        CongruenceForm form;
        form.coeffs.assign(n, 0);
        form.modulus = cl.weyl_order;
        for (const CyclicClassData& cd : cyclic_subgroup_data(cl.weyl)) {
            Subgroup pre = ccs_.weyl_preimage((int)i, cd.rep);
            int j = ccs_.class_of(pre);
            form.coeffs[j] += Int(cd.generator_count) * Int(cd.normalizer_index);
        }
        congruences_.push_back(std::move(form));
    }
}

RingPtr BurnsideRing::build(GroupPtr g) { return RingPtr(new BurnsideRing(std::move(g))); }

RingPtr BurnsideRing::cached(const GroupPtr& g) {
    static std::mutex mu;
    static std::map<const FiniteGroup*, RingPtr> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(g.get());
        if (it != cache.end()) return it->second;
    }
    RingPtr r = build(g);
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(g.get(), r).first->second;
}

BurnsideElement zero_element(const RingPtr& r) {
    return BurnsideElement{r, IntVec(r->classes(), 0)};
}

BurnsideElement unit_element(const RingPtr& r) { return basis_element(r, r->unit_class()); }

BurnsideElement basis_element(const RingPtr& r, size_t cls) {
    BurnsideElement e = zero_element(r);
    e.coeffs[cls] = 1;
    return e;
}

namespace {

void require_same_ring(const BurnsideElement& x, const BurnsideElement& y) {
    if (x.ring.get() != y.ring.get())
        throw ring_error("elements belong to different Burnside rings");
}

}  // namespace

BurnsideElement add(const BurnsideElement& x, const BurnsideElement& y) {
    require_same_ring(x, y);
    BurnsideElement r = x;
    for (size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] += y.coeffs[i];
    return r;
}

BurnsideElement subtract(const BurnsideElement& x, const BurnsideElement& y) {
    require_same_ring(x, y);
    BurnsideElement r = x;
    for (size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] -= y.coeffs[i];
    return r;
}

BurnsideElement scale(const Int& n, const BurnsideElement& x) {
    BurnsideElement r = x;
    for (Int& c : r.coeffs) c *= n;
    return r;
}

GhostVector char_map(const BurnsideElement& x) {
    const IntMatrix& m = x.ring->marks();
    size_t n = x.ring->classes();
    GhostVector v{x.ring, IntVec(n, 0)};
    for (size_t i = 0; i < n; ++i) {
        if (x.coeffs[i] == 0) continue;
        for (size_t j = 0; j < n; ++j) v.values[j] += x.coeffs[i] * m.at(i, j);
    }
    return v;
}

BurnsideElement uncharacter(const GhostVector& v) {
    // marks are lower triangular with positive diagonal; solve from the last
    // coordinate down, flagging the first non-integral pivot
    const IntMatrix& m = v.ring->marks();
    size_t n = v.ring->classes();
    IntVec c(n, 0);
    for (size_t jj = n; jj-- > 0;) {
        Int acc = v.values[jj];
        for (size_t i = jj + 1; i < n; ++i) acc -= c[i] * m.at(i, jj);
        if (acc % m.at(jj, jj) != 0) {
            Rat bad(acc, m.at(jj, jj));
            bad.canonicalize();
            throw not_in_image_error((int)jj, bad,
                                     "ghost vector is not in the image: coordinate " +
                                         v.ring->ccs().label((int)jj) + " needs coefficient " +
                                         bad.get_str());
        }
        c[jj] = acc / m.at(jj, jj);
    }
    return BurnsideElement{v.ring, std::move(c)};
}

BurnsideElement multiply(const BurnsideElement& x, const BurnsideElement& y) {
    require_same_ring(x, y);
    GhostVector vx = char_map(x), vy = char_map(y);
    for (size_t i = 0; i < vx.values.size(); ++i) vx.values[i] *= vy.values[i];
    return uncharacter(vx);
}

bool ResidueReport::all_zero() const {
    return std::all_of(residues.begin(), residues.end(),
                       [](const auto& p) { return p.first == 0; });
}

ResidueReport congruence_residues(const GhostVector& v) {
    ResidueReport rep;
    for (const CongruenceForm& f : v.ring->congruence_forms()) {
        Int acc = 0;
        for (size_t j = 0; j < f.coeffs.size(); ++j)
            if (f.coeffs[j] != 0) acc += f.coeffs[j] * v.values[j];
        Int res;
        mpz_fdiv_r(res.get_mpz_t(), acc.get_mpz_t(), f.modulus.get_mpz_t());
        rep.residues.emplace_back(res, f.modulus);
    }
    return rep;
}

bool is_in_ghost_image(const GhostVector& v) { return congruence_residues(v).all_zero(); }

Int augmentation(const BurnsideElement& x) {
    return char_map(x).values[x.ring->trivial_class()];
}

BurnsideElement induction(const GroupHom& f, const BurnsideElement& x) {
    if (!f.injective) throw not_injective_error("induction requires an injective map");
    if (x.ring->group() != f.source) throw ring_error("induction: element not over the source");
    RingPtr target = BurnsideRing::cached(f.target);
    BurnsideElement out = zero_element(target);
    const CcsTable& sccs = x.ring->ccs();
    for (size_t i = 0; i < x.coeffs.size(); ++i) {
        if (x.coeffs[i] == 0) continue;
        Subgroup img = hom_image(f, sccs.classes()[i].rep);
        out.coeffs[target->ccs().class_of(img)] += x.coeffs[i];
    }
    return out;
}

BurnsideElement restriction_along(const GroupHom& f, const BurnsideElement& x) {
    if (x.ring->group() != f.target)
        throw ring_error("restriction: element not over the target group");
    RingPtr source = BurnsideRing::cached(f.source);
    const GroupPtr& k = f.target;
    const GroupPtr& h = f.source;
    BurnsideElement out = zero_element(source);
    const CcsTable& tccs = x.ring->ccs();
    for (size_t i = 0; i < x.coeffs.size(); ++i) {
        if (x.coeffs[i] == 0) continue;
        // decompose the cosets K/L into orbits of H acting through f
        const Subgroup& l = tccs.classes()[i].rep;
        std::vector<int> coset_of(k->order(), -1);
        std::vector<int> reps;
        for (int a = 0; a < k->order(); ++a) {
            if (coset_of[a] >= 0) continue;
            int idx = (int)reps.size();
            reps.push_back(a);
            for (int e : l.elements()) coset_of[k->mul(a, e)] = idx;
        }
        std::vector<int> orbit_of(reps.size(), -1);
        for (size_t c = 0; c < reps.size(); ++c) {
            if (orbit_of[c] >= 0) continue;
            std::vector<size_t> todo{c};
            orbit_of[c] = (int)c;
            while (!todo.empty()) {
                size_t cur = todo.back();
                todo.pop_back();
                for (int hh = 0; hh < h->order(); ++hh) {
                    int moved = coset_of[k->mul(f.map(hh), reps[cur])];
                    if (orbit_of[moved] < 0) {
                        orbit_of[moved] = (int)c;
                        todo.push_back((size_t)moved);
                    }
                }
            }
            // stabilizer in H of the orbit representative coset
            std::vector<int> stab;
            int ai = k->inv(reps[c]);
            for (int hh = 0; hh < h->order(); ++hh)
                if (l.contains(k->mul(k->mul(ai, f.map(hh)), reps[c]))) stab.push_back(hh);
            out.coeffs[source->ccs().class_of(Subgroup(h, stab))] += x.coeffs[i];
        }
    }
    return out;
}

BurnsideElement restriction(const GroupHom& f, const BurnsideElement& x) {
    if (!f.injective) throw not_injective_error("restriction requires an injective map");
    return restriction_along(f, x);
}

bool verify_mackey(const RingPtr& gring, const Subgroup& h, const Subgroup& k,
                   const IntVec& x_over_h) {
    EmbeddedGroup eh = subgroup_as_group(h);
    EmbeddedGroup ek = subgroup_as_group(k);
    RingPtr rh = BurnsideRing::cached(eh.group);
    if (x_over_h.size() != rh->classes()) throw ring_error("verify_mackey: bad coefficients");
    BurnsideElement x{rh, x_over_h};

    BurnsideElement lhs = restriction(ek.incl, induction(eh.incl, x));

    const GroupPtr& g = gring->group();
    BurnsideElement rhs = zero_element(lhs.ring);
    for (int rep : double_cosets(g, k, h)) {
        // L = H cap g^-1 K g, as a subgroup of the abstract H
        int ri = g->inv(rep);
        std::vector<int> l_in_h;
        for (int idx = 0; idx < eh.group->order(); ++idx) {
            int gh = eh.incl.map(idx);
            if (k.contains(g->mul(g->mul(rep, gh), ri))) l_in_h.push_back(idx);
        }
        EmbeddedGroup el = subgroup_as_group(Subgroup(eh.group, l_in_h));
        // conjugation c(rep): L -> K, x -> rep x rep^-1
        std::vector<int> conj_images;
        conj_images.reserve(el.group->order());
        for (int idx = 0; idx < el.group->order(); ++idx) {
            int in_g = eh.incl.map(el.incl.map(idx));
            int moved = g->mul(g->mul(rep, in_g), ri);
            const auto& kelts = ek.incl.images;
            auto it = std::lower_bound(kelts.begin(), kelts.end(), moved);
            conj_images.push_back((int)(it - kelts.begin()));
        }
        GroupHom cg(el.group, ek.group, std::move(conj_images));
        rhs = add(rhs, induction(cg, restriction(el.incl, x)));
    }
    return lhs == rhs;
}

bool green_action_identity(const BurnsideElement& x, const BurnsideElement& y) {
    require_same_ring(x, y);
    BurnsideElement lhs = zero_element(x.ring);
    const CcsTable& ccs = x.ring->ccs();
    for (size_t i = 0; i < x.coeffs.size(); ++i) {
        if (x.coeffs[i] == 0) continue;
        EmbeddedGroup eh = subgroup_as_group(ccs.classes()[i].rep);
        lhs = add(lhs, scale(x.coeffs[i], induction(eh.incl, restriction(eh.incl, y))));
    }
    return lhs == multiply(x, y);
}

namespace {

IntMatrix hnf_nonzero_rows(const IntMatrix& m) {
    IntMatrix h = hermite_normal_form(m).h;
    size_t nz = 0;
    for (size_t i = 0; i < h.rows(); ++i)
        for (size_t j = 0; j < h.cols(); ++j)
            if (h.at(i, j) != 0) {
                ++nz;
                break;
            }
    IntMatrix out(nz, h.cols());
    for (size_t i = 0; i < nz; ++i) out.set_row(i, h.row(i));
    return out;
}

}  // namespace

IntMatrix ideal_power_basis(const RingPtr& r, int n) {
    if (n < 1) throw ring_error("ideal power must be >= 1");
    size_t cls = r->classes();
    // I_G basis: [G/H] - [G:H] [G/G] over the classes with H != G
    std::vector<BurnsideElement> gens;
    for (size_t i = 0; i < cls; ++i) {
        if (i == r->unit_class()) continue;
        BurnsideElement b = basis_element(r, i);
        Int index = Int(r->group()->order()) / r->ccs().classes()[i].rep.order();
        b.coeffs[r->unit_class()] -= index;
        gens.push_back(std::move(b));
    }
    auto to_matrix = [cls](const std::vector<BurnsideElement>& rows) {
        IntMatrix m(rows.size(), cls);
        for (size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i].coeffs);
        return m;
    };

    IntMatrix current = hnf_nonzero_rows(to_matrix(gens));
    for (int step = 2; step <= n; ++step) {
        std::vector<BurnsideElement> products;
        for (size_t i = 0; i < current.rows(); ++i) {
            BurnsideElement u{r, current.row(i)};
            for (const BurnsideElement& gen : gens) products.push_back(multiply(u, gen));
        }
        current = hnf_nonzero_rows(to_matrix(products));
    }
    return current;
}

std::vector<Int> completion_quotient(const RingPtr& r, int n) {
    return quotient_invariants(IntMatrix::identity(r->classes()), ideal_power_basis(r, n));
}

}  // namespace burnside
