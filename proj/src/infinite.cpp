#include "burnside/infinite.hpp"

#include <algorithm>
#include <set>

namespace burnside {

namespace {

bool same_arrow(const SubFinDiagram::Arrow& a, const SubFinDiagram::Arrow& b) {
    return a.from == b.from && a.to == b.to && a.hom.images == b.hom.images;
}

}  // namespace

SubFinDiagram::SubFinDiagram(std::vector<GroupPtr> objects, std::vector<Arrow> arrows)
    : objects_(std::move(objects)), arrows_(std::move(arrows)) {
    for (const Arrow& a : arrows_) {
        if (a.from < 0 || a.from >= (int)objects_.size() || a.to < 0 ||
            a.to >= (int)objects_.size())
            throw infinite_error("arrow endpoint out of range");
        if (a.hom.source != objects_[a.from] || a.hom.target != objects_[a.to])
            throw infinite_error("arrow homomorphism does not match its endpoints");
        if (!a.hom.injective) throw infinite_error("diagram morphisms must be injective");
    }
    // identities
    for (int i = 0; i < (int)objects_.size(); ++i) {
        Arrow id{i, i, identity_hom(objects_[i])};
        bool present = false;
        for (const Arrow& a : arrows_)
            if (same_arrow(a, id)) present = true;
        if (!present) arrows_.push_back(std::move(id));
    }
    // composition closure
    bool grew = true;
    while (grew) {
        grew = false;
        size_t n = arrows_.size();
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                if (arrows_[i].to != arrows_[j].from) continue;
                Arrow comp{arrows_[i].from, arrows_[j].to,
                           compose_homs(arrows_[j].hom, arrows_[i].hom)};
                bool present = false;
                for (const Arrow& a : arrows_)
                    if (same_arrow(a, comp)) present = true;
                if (!present) {
                    arrows_.push_back(std::move(comp));
                    grew = true;
                }
            }
    }
    rings_.reserve(objects_.size());
    for (const GroupPtr& g : objects_) rings_.push_back(BurnsideRing::cached(g));
}

InverseLimit inverse_limit(const SubFinDiagram& d) {
    InverseLimit lim;
    lim.offset.resize(d.objects().size());
    for (size_t i = 0; i < d.objects().size(); ++i) {
        lim.offset[i] = lim.total;
        lim.total += d.rings()[i]->classes();
    }
    // restriction matrix per arrow: row (class of target) -> element of A(source)
    size_t eq_cols = 0;
    std::vector<const SubFinDiagram::Arrow*> live;
    for (const auto& a : d.arrows()) {
        if (a.from == a.to && a.hom.images == identity_hom(d.objects()[a.from]).images)
            continue;  // identity arrows carry no condition
        live.push_back(&a);
        eq_cols += d.rings()[a.from]->classes();
    }
    IntMatrix m(lim.total, eq_cols);
    size_t col0 = 0;
    for (const auto* a : live) {
        const RingPtr& rs = d.rings()[a->from];
        const RingPtr& rt = d.rings()[a->to];
        size_t ns = rs->classes(), nt = rt->classes();
        for (size_t e = 0; e < ns; ++e) m.at(lim.offset[a->from] + e, col0 + e) = 1;
        for (size_t l = 0; l < nt; ++l) {
            BurnsideElement res = restriction(a->hom, basis_element(rt, l));
            for (size_t e = 0; e < ns; ++e)
                m.at(lim.offset[a->to] + l, col0 + e) -= res.coeffs[e];
        }
        col0 += ns;
    }
    IntMatrix ker = integer_kernel(m);
    lim.basis = ker;
    return lim;
}

std::vector<BurnsideElement> limit_components(const SubFinDiagram& d, const InverseLimit& lim,
                                              const IntVec& coords) {
    if (coords.size() != lim.total) throw infinite_error("coordinate vector length mismatch");
    std::vector<BurnsideElement> out;
    for (size_t i = 0; i < d.objects().size(); ++i) {
        const RingPtr& r = d.rings()[i];
        IntVec c(coords.begin() + lim.offset[i],
                 coords.begin() + lim.offset[i] + r->classes());
        out.push_back(BurnsideElement{r, std::move(c)});
    }
    return out;
}

bool limit_is_subring(const SubFinDiagram& d, const InverseLimit& lim) {
    // the componentwise unit
    IntVec unit(lim.total, 0);
    for (size_t i = 0; i < d.objects().size(); ++i)
        unit[lim.offset[i] + d.rings()[i]->unit_class()] = 1;
    if (!lattice_contains(lim.basis, unit)) return false;
    // componentwise products of basis vectors
    for (size_t a = 0; a < lim.basis.rows(); ++a)
        for (size_t b = a; b < lim.basis.rows(); ++b) {
            IntVec ra = lim.basis.row(a), rb = lim.basis.row(b);
            IntVec prod(lim.total, 0);
            for (size_t i = 0; i < d.objects().size(); ++i) {
                const RingPtr& r = d.rings()[i];
                IntVec xa(ra.begin() + lim.offset[i],
                          ra.begin() + lim.offset[i] + r->classes());
                IntVec xb(rb.begin() + lim.offset[i],
                          rb.begin() + lim.offset[i] + r->classes());
                BurnsideElement pe = multiply(BurnsideElement{r, xa}, BurnsideElement{r, xb});
                std::copy(pe.coeffs.begin(), pe.coeffs.end(), prod.begin() + lim.offset[i]);
            }
            if (!lattice_contains(lim.basis, prod)) return false;
        }
    return true;
}

void validate_ccsf(const SubFinDiagram& d, const CcsfStructure& c) {
    if (c.assign.size() != d.objects().size())
        throw infinite_error("label assignment must cover every object");
    std::vector<bool> hit(c.labels.size(), false);
    for (size_t i = 0; i < c.assign.size(); ++i) {
        if (c.assign[i].size() != d.rings()[i]->classes())
            throw infinite_error("label assignment has wrong length at object " +
                                 std::to_string(i));
        for (int l : c.assign[i]) {
            if (l < 0 || l >= (int)c.labels.size())
                throw missing_label_error("label index out of range");
            hit[l] = true;
        }
    }
    for (size_t l = 0; l < hit.size(); ++l)
        if (!hit[l])
            throw missing_label_error("label " + c.labels[l] + " is hit by no object");
    // functoriality: labels commute with the ccs pushforward of every arrow
    for (const auto& a : d.arrows()) {
        const CcsTable& sccs = d.rings()[a.from]->ccs();
        const CcsTable& tccs = d.rings()[a.to]->ccs();
        for (size_t cl = 0; cl < sccs.size(); ++cl) {
            Subgroup img = hom_image(a.hom, sccs.classes()[cl].rep);
            int target_cls = tccs.class_of(img);
            if (c.assign[a.from][cl] != c.assign[a.to][target_cls])
                throw infinite_error("labels are not functorial along an arrow: object " +
                                     std::to_string(a.from) + " class " + sccs.label((int)cl));
        }
    }
}

bool condition_C(const SubFinDiagram& d, const CcsfStructure& c, const LabelProfile& x,
                 int object) {
    const RingPtr& r = d.rings()[object];
    GhostVector v{r, IntVec(r->classes(), 0)};
    for (size_t cl = 0; cl < r->classes(); ++cl) {
        int label = c.assign[object][cl];
        auto it = x.find(label);
        if (it == x.end())
            throw missing_label_error("profile has no value for label " + c.labels[label]);
        v.values[cl] = it->second;
    }
    return is_in_ghost_image(v);
}

IntMatrix prufer_solution_lattice(long p, int n_stages) {
    if (n_stages < 1) throw infinite_error("need at least one tower stage");
    // congruence forms of every C(Z/p^m) pulled back to profile coordinates
    // x(0..n_stages); the ghost classes of Z/p^m are its subgroups of order
    // p^k, matching label k
    std::vector<IntVec> rows;
    std::vector<Int> moduli;
    long cap = 1;
    for (int i = 0; i < n_stages; ++i) cap *= p;
    for (int m = 1; m <= n_stages; ++m) {
        long order = 1;
        for (int i = 0; i < m; ++i) order *= p;
        GroupPtr g = named_group("cyclic(" + std::to_string(order) + ")",
                                 std::max<long>(order, kDefaultOrderCap));
        RingPtr r = BurnsideRing::cached(g);
        // ghost class index -> subgroup order exponent
        std::vector<int> expo(r->classes());
        for (size_t cl = 0; cl < r->classes(); ++cl) {
            long o = r->ccs().classes()[cl].rep.order();
            int e = 0;
            while (o > 1) {
                o /= p;
                ++e;
            }
            expo[cl] = e;
        }
        for (const CongruenceForm& f : r->congruence_forms()) {
            if (f.modulus == 1) continue;
            IntVec row(n_stages + 1, 0);
            for (size_t cl = 0; cl < f.coeffs.size(); ++cl) row[expo[cl]] += f.coeffs[cl];
            rows.push_back(std::move(row));
            moduli.push_back(f.modulus);
        }
    }
    IntMatrix forms(rows.size(), n_stages + 1);
    for (size_t i = 0; i < rows.size(); ++i) forms.set_row(i, rows[i]);
    return congruence_solution_lattice(forms, moduli);
}

bool finset_membership(const FinsetProfile& x) {
    if (!x.quotient) throw missing_quotient_error("no finite quotient declared");
    if (x.values.size() != x.quotient->classes())
        throw infinite_error("profile length does not match the quotient");
    return is_in_ghost_image(GhostVector{x.quotient, x.values});
}

ZProfileReport finset_Z_check(const std::vector<Int>& x) {
    ZProfileReport rep;
    rep.x = x;
    long bound = (long)x.size();
    for (long n = 1; n <= bound; ++n) {
        Int acc = 0;
        for (long m = 1; m <= n; ++m)
            if (n % m == 0) acc += Int(euler_phi_long(n / m)) * x[m - 1];
        Int res, mod(n);
        mpz_fdiv_r(res.get_mpz_t(), acc.get_mpz_t(), mod.get_mpz_t());
        if (res != 0) rep.ok = false;
        rep.residues.emplace_back(res, mod);
    }
    return rep;
}

ZProfileReport finset_Z_profile(const std::map<long, Int>& coeffs, long bound) {
    for (const auto& [n, c] : coeffs)
        if (n < 1 || n > bound)
            throw infinite_error("coefficient support must lie in 1..bound");
    std::vector<Int> x(bound, 0);
    for (long m = 1; m <= bound; ++m)
        for (const auto& [n, c] : coeffs)
            if (m % n == 0) x[m - 1] += c * n;  // mZ fixes all of Z/n iff n | m
    return finset_Z_check(x);
}

FusionData::FusionData(std::vector<FusionLabelInfo> labels,
                       std::map<std::pair<int, int>, std::vector<FusionEntry>> table)
    : labels_(std::move(labels)), table_(std::move(table)) {
    for (const auto& [key, entries] : table_) {
        if (key.first < 0 || key.first >= (int)labels_.size() || key.second < 0 ||
            key.second >= (int)labels_.size())
            throw missing_fusion_error("fusion entry references an unknown label");
        for (const FusionEntry& e : entries) {
            if (e.normalizer_meet <= 0 ||
                labels_[key.second].order % e.normalizer_meet != 0)
                throw infinite_error("|H meet N_G L| must divide |H|");
        }
    }
}

int FusionData::label_index(const std::string& name) const {
    for (size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i].name == name) return (int)i;
    throw missing_fusion_error("unknown fusion label: " + name);
}

const std::vector<FusionEntry>& FusionData::entries(int k, int h) const {
    static const std::vector<FusionEntry> empty;
    auto it = table_.find({k, h});
    return it == table_.end() ? empty : it->second;
}

FusionData finite_group_fusion(const RingPtr& r) {
    const CcsTable& ccs = r->ccs();
    const GroupPtr& g = r->group();
    std::vector<FusionLabelInfo> labels;
    for (size_t i = 0; i < ccs.size(); ++i)
        labels.push_back(FusionLabelInfo{ccs.label((int)i), (long)ccs.classes()[i].rep.order()});
    std::map<std::pair<int, int>, std::vector<FusionEntry>> table;
    for (size_t h = 0; h < ccs.size(); ++h) {
        EmbeddedGroup emb = subgroup_as_group(ccs.classes()[h].rep);
        const CcsTable& hccs = BurnsideRing::cached(emb.group)->ccs();
        for (size_t lc = 0; lc < hccs.size(); ++lc) {
            Subgroup l_in_g = hom_image(emb.incl, hccs.classes()[lc].rep);
            int k = ccs.class_of(l_in_g);
            Subgroup meet = intersect_subgroups(ccs.classes()[h].rep, normalizer(l_in_g));
            table[{k, (int)h}].push_back(FusionEntry{(int)lc, (long)meet.order()});
        }
    }
    return FusionData(std::move(labels), std::move(table));
}

Rat l2_character_basis(const FusionData& f, int k_label, int h_label) {
    if (k_label < 0 || k_label >= (int)f.labels().size() || h_label < 0 ||
        h_label >= (int)f.labels().size())
        throw missing_fusion_error("label index out of range");
    Rat acc = 0;
    for (const FusionEntry& e : f.entries(k_label, h_label))
        acc += Rat(Int(f.labels()[k_label].order), Int(e.normalizer_meet));
    acc.canonicalize();
    return acc;
}

Rat l2_character(const FusionData& f, const CovariantElement& t, int k_label) {
    if (t.coeffs.size() != f.labels().size())
        throw missing_fusion_error("element support does not match the label set");
    Rat acc = 0;
    for (size_t h = 0; h < t.coeffs.size(); ++h) {
        if (t.coeffs[h] == 0) continue;
        acc += Rat(t.coeffs[h]) * l2_character_basis(f, k_label, (int)h);
    }
    acc.canonicalize();
    return acc;
}

IntegralityResult integrality_check(const FusionData& f, const std::vector<int>& support,
                                    const RatVec& x) {
    size_t n = support.size();
    if (x.size() != n) throw infinite_error("value vector does not match the support");
    std::vector<int> pos(f.labels().size(), -1);
    for (size_t i = 0; i < n; ++i) {
        if (support[i] < 0 || support[i] >= (int)f.labels().size())
            throw missing_fusion_error("support label out of range");
        pos[support[i]] = (int)i;
    }
    // closure and numeration compatibility
    for (size_t j = 0; j < n; ++j)
        for (int k = 0; k < (int)f.labels().size(); ++k) {
            if (!f.subconjugate(k, support[j])) continue;
            if (pos[k] < 0)
                throw support_not_closed_error("support misses label " + f.labels()[k].name +
                                               " below " + f.labels()[support[j]].name);
            if (pos[k] > (int)j)
                throw support_not_closed_error("support order violates subconjugacy: " +
                                               f.labels()[k].name + " must precede " +
                                               f.labels()[support[j]].name);
        }

    RatMatrix a(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) a.at(i, j) = l2_character_basis(f, support[i], support[j]);
    for (size_t i = 0; i < n; ++i) {
        if (a.at(i, i) != 1)
            throw non_unit_diagonal_error("character diagonal is not 1 at " +
                                          f.labels()[support[i]].name);
        for (size_t j = 0; j < i; ++j)
            if (a.at(i, j) != 0)
                throw support_not_closed_error("character matrix is not triangular");
    }

    // solve A y = x by reversing the order to reuse the lower-triangular solver
    RatMatrix rev(n, n);
    RatVec brev(n);
    for (size_t i = 0; i < n; ++i) {
        brev[i] = x[n - 1 - i];
        for (size_t j = 0; j < n; ++j) rev.at(i, j) = a.at(n - 1 - i, n - 1 - j);
    }
    RatVec yrev = solve_unitriangular_rational(rev, brev);
    RatVec y(n);
    for (size_t i = 0; i < n; ++i) y[i] = yrev[n - 1 - i];

    bool ok = std::all_of(y.begin(), y.end(),
                          [](const Rat& q) { return q.get_den() == 1; });
    return IntegralityResult{ok, std::move(y), std::move(a)};
}

FiniteAmbient finite_group_diagram(const RingPtr& r) {
    const CcsTable& ccs = r->ccs();
    const GroupPtr& g = r->group();
    std::vector<GroupPtr> objects;
    std::vector<EmbeddedGroup> embs;
    for (size_t i = 0; i < ccs.size(); ++i) {
        embs.push_back(subgroup_as_group(ccs.classes()[i].rep));
        objects.push_back(embs.back().group);
    }
    // all conjugation morphisms H_i -> H_j modulo inner automorphisms of H_j
    std::vector<SubFinDiagram::Arrow> arrows;
    for (size_t i = 0; i < ccs.size(); ++i)
        for (size_t j = 0; j < ccs.size(); ++j) {
            const Subgroup& hi = ccs.classes()[i].rep;
            const Subgroup& hj = ccs.classes()[j].rep;
            std::set<std::vector<int>> seen;
            for (int x = 0; x < g->order(); ++x) {
                bool inside = true;
                for (int a : hi.elements())
                    if (!hj.contains(g->conjugate(x, a))) {
                        inside = false;
                        break;
                    }
                if (!inside) continue;
                std::vector<int> images;
                images.reserve(embs[i].group->order());
                for (int e = 0; e < embs[i].group->order(); ++e) {
                    int in_g = g->conjugate(x, embs[i].incl.map(e));
                    const auto& jelts = embs[j].incl.images;
                    images.push_back(
                        (int)(std::lower_bound(jelts.begin(), jelts.end(), in_g) -
                              jelts.begin()));
                }
                // quotient by inn(H_j): keep one representative per coset
                bool duplicate = false;
                for (const auto& other : seen) {
                    for (int w = 0; w < embs[j].group->order() && !duplicate; ++w) {
                        bool all = true;
                        for (int e = 0; e < embs[i].group->order(); ++e)
                            if (embs[j].group->conjugate(w, other[e]) != images[e]) {
                                all = false;
                                break;
                            }
                        if (all) duplicate = true;
                    }
                    if (duplicate) break;
                }
                if (!duplicate && seen.insert(images).second)
                    arrows.push_back(SubFinDiagram::Arrow{
                        (int)i, (int)j, GroupHom(embs[i].group, embs[j].group, images)});
            }
        }
    SubFinDiagram diagram(std::move(objects), std::move(arrows));
    CcsfStructure structure;
    structure.labels = ccs.labels();
    structure.assign.resize(diagram.objects().size());
    for (size_t i = 0; i < diagram.objects().size(); ++i) {
        const CcsTable& hccs = diagram.rings()[i]->ccs();
        for (size_t cl = 0; cl < hccs.size(); ++cl) {
            Subgroup in_g = hom_image(embs[i].incl, hccs.classes()[cl].rep);
            structure.assign[i].push_back(ccs.class_of(in_g));
        }
    }
    validate_ccsf(diagram, structure);
    std::vector<GroupHom> inclusions;
    for (const EmbeddedGroup& e : embs) inclusions.push_back(e.incl);
    return FiniteAmbient{r, std::move(diagram), std::move(structure), finite_group_fusion(r),
                         std::move(inclusions)};
}

namespace {

// realizations of a label: (object, ccs class) pairs
std::vector<std::pair<int, int>> realizations(const SubFinDiagram& d, const CcsfStructure& c,
                                              int label) {
    std::vector<std::pair<int, int>> out;
    for (size_t i = 0; i < d.objects().size(); ++i)
        for (size_t cl = 0; cl < c.assign[i].size(); ++cl)
            if (c.assign[i][cl] == label) out.emplace_back((int)i, (int)cl);
    return out;
}

}  // namespace

Int pairing_nu(const SubFinDiagram& d, const CcsfStructure& c, const InverseLimit& lim,
               const IntVec& limit_coords, const CovariantElement& t) {
    if (t.coeffs.size() != c.labels.size())
        throw infinite_error("element support does not match the label set");
    std::vector<BurnsideElement> comps = limit_components(d, lim, limit_coords);
    Int acc = 0;
    for (size_t label = 0; label < t.coeffs.size(); ++label) {
        if (t.coeffs[label] == 0) continue;
        auto reals = realizations(d, c, (int)label);
        if (reals.empty())
            throw unreachable_label_error("label " + c.labels[label] +
                                          " is realized by no object");
        std::optional<Int> value;
        for (const auto& [obj, cls] : reals) {
            const RingPtr& r = d.rings()[obj];
            const Subgroup& l = r->ccs().classes()[cls].rep;
            Int v = 0;
            for (size_t mi = 0; mi < comps[obj].coeffs.size(); ++mi) {
                if (comps[obj].coeffs[mi] == 0) continue;
                const Subgroup& msub = r->ccs().classes()[mi].rep;
                long dc = (long)double_cosets(r->group(), msub, l).size();
                v += comps[obj].coeffs[mi] * dc;
            }
            if (value && *value != v)
                throw infinite_error("pairing value differs between realizations of " +
                                     c.labels[label]);
            value = v;
        }
        acc += t.coeffs[label] * *value;
    }
    return acc;
}

CovariantElement pairing_mu(const SubFinDiagram& d, const CcsfStructure& c,
                            const FinsetElement& s, const CovariantElement& t) {
    if (t.coeffs.size() != c.labels.size())
        throw infinite_error("element support does not match the label set");
    CovariantElement out{IntVec(c.labels.size(), 0)};
    for (size_t label = 0; label < t.coeffs.size(); ++label) {
        if (t.coeffs[label] == 0) continue;
        auto reals = realizations(d, c, (int)label);
        if (reals.empty())
            throw unreachable_label_error("label " + c.labels[label] +
                                          " is realized by no object");
        auto [obj, cls] = reals.front();
        if (obj >= (int)s.to_quotient.size() || !s.to_quotient[obj])
            throw missing_homomorphism_error("no map to the quotient at object " +
                                             std::to_string(obj));
        const RingPtr& r = d.rings()[obj];
        BurnsideElement restricted = restriction_along(*s.to_quotient[obj], s.element);
        BurnsideElement prod = multiply(restricted, basis_element(r, cls));
        for (size_t cl = 0; cl < prod.coeffs.size(); ++cl)
            out.coeffs[c.assign[obj][cl]] += t.coeffs[label] * prod.coeffs[cl];
    }
    return out;
}

Int pairing_Q(const CovariantElement& t) {
    Int acc = 0;
    for (const Int& c : t.coeffs) acc += c;
    return acc;
}

std::vector<BurnsideElement> map_T(const SubFinDiagram& d, const FinsetElement& s) {
    if (s.to_quotient.size() != d.objects().size())
        throw missing_homomorphism_error("one quotient map per object required");
    std::vector<BurnsideElement> comps;
    for (size_t i = 0; i < d.objects().size(); ++i) {
        if (!s.to_quotient[i])
            throw missing_homomorphism_error("no map to the quotient at object " +
                                             std::to_string(i));
        comps.push_back(restriction_along(*s.to_quotient[i], s.element));
    }
    // compatibility along every arrow
    for (const auto& a : d.arrows()) {
        BurnsideElement via_arrow = restriction(a.hom, comps[a.to]);
        if (!(via_arrow.coeffs == comps[a.from].coeffs))
            throw infinite_error("restrictions are not compatible along an arrow; the "
                                 "quotient maps do not commute with the diagram");
    }
    return comps;
}

CovariantElement map_V(const SubFinDiagram& d, const CcsfStructure& c, int object,
                       const BurnsideElement& a) {
    if (object < 0 || object >= (int)d.objects().size())
        throw infinite_error("object index out of range");
    if (a.ring.get() != d.rings()[object].get())
        throw infinite_error("element is not over the requested object");
    CovariantElement out{IntVec(c.labels.size(), 0)};
    for (size_t cl = 0; cl < a.coeffs.size(); ++cl)
        out.coeffs[c.assign[object][cl]] += a.coeffs[cl];
    return out;
}

}  // namespace burnside
