#include "burnside/groups.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <set>

namespace burnside {

FiniteGroup::FiniteGroup(int order, std::vector<int> table, std::string label)
    : order_(order), table_(std::move(table)), label_(std::move(label)) {
    if (order <= 0 || (int)table_.size() != order * order)
        throw not_a_group_error(label_ + ": table size does not match order");
    for (int x : table_)
        if (x < 0 || x >= order) throw not_a_group_error(label_ + ": entry out of range");

    for (int e = 0; e < order_; ++e) {
        bool ok = true;
        for (int a = 0; a < order_ && ok; ++a)
            if (mul(e, a) != a || mul(a, e) != a) ok = false;
        if (ok) {
            identity_ = e;
            break;
        }
    }
    if (identity_ < 0) throw not_a_group_error(label_ + ": no two-sided identity");

    inverses_.assign(order_, -1);
    for (int a = 0; a < order_; ++a) {
        for (int b = 0; b < order_; ++b)
            if (mul(a, b) == identity_ && mul(b, a) == identity_) {
                inverses_[a] = b;
                break;
            }
        if (inverses_[a] < 0) throw not_a_group_error(label_ + ": missing inverse");
    }

    for (int a = 0; a < order_; ++a)
        for (int b = 0; b < order_; ++b) {
            int ab = mul(a, b);
            for (int c = 0; c < order_; ++c)
                if (mul(ab, c) != mul(a, mul(b, c)))
                    throw not_a_group_error(label_ + ": associativity fails");
        }
}

int FiniteGroup::element_order(int a) const {
    int x = a, n = 1;
    while (x != identity_) {
        x = mul(x, a);
        ++n;
    }
    return n;
}

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < order_; ++a)
        for (int b = a + 1; b < order_; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

namespace {

using Perm = std::vector<int>;

Perm perm_compose(const Perm& p, const Perm& q) {  // (p.q)(x) = p(q(x))
    Perm r(p.size());
    for (size_t x = 0; x < p.size(); ++x) r[x] = p[q[x]];
    return r;
}

GroupPtr group_from_perms(int degree, const std::vector<Perm>& gens, const std::string& label,
                          int order_cap) {
    Perm id(degree);
    for (int i = 0; i < degree; ++i) id[i] = i;
    std::set<Perm> seen{id};
    std::vector<Perm> todo{id};
    while (!todo.empty()) {
        Perm cur = todo.back();
        todo.pop_back();
        for (const Perm& g : gens) {
            Perm nxt = perm_compose(cur, g);
            if (seen.insert(nxt).second) {
                if ((int)seen.size() > order_cap)
                    throw too_large_error(label + ": order exceeds cap " +
                                          std::to_string(order_cap));
                todo.push_back(nxt);
            }
        }
    }
    std::vector<Perm> elems(seen.begin(), seen.end());  // lexicographic, deterministic
    std::map<Perm, int> index;
    for (size_t i = 0; i < elems.size(); ++i) index[elems[i]] = (int)i;
    int n = (int)elems.size();
    std::vector<int> table(n * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) table[a * n + b] = index.at(perm_compose(elems[a], elems[b]));
    return std::make_shared<FiniteGroup>(n, std::move(table), label);
}

GroupPtr cyclic_group(int n) {
    std::vector<int> t(n * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[a * n + b] = (a + b) % n;
    return std::make_shared<FiniteGroup>(n, std::move(t), "C" + std::to_string(n));
}

GroupPtr dihedral_group(int n) {
    // indices: 0..n-1 rotations r^i, n..2n-1 reflections r^i s
    int m = 2 * n;
    auto idx = [n](bool refl, int i) { return (refl ? n : 0) + ((i % n) + n) % n; };
    std::vector<int> t(m * m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            bool ra = a >= n, rb = b >= n;
            int ia = a % n, ib = b % n;
            int r;
            if (!ra && !rb) r = idx(false, ia + ib);
            else if (!ra && rb) r = idx(true, ia + ib);
            else if (ra && !rb) r = idx(true, ia - ib);
            else r = idx(false, ia - ib);
            t[a * m + b] = r;
        }
    return std::make_shared<FiniteGroup>(m, std::move(t), "D" + std::to_string(n));
}

GroupPtr quaternion_group() {
    // element = axis u in {1,i,j,k} with sign s; index = 2u + s
    auto mulq = [](int a, int b) {
        int ua = a / 2, sa = a % 2, ub = b / 2, sb = b % 2;
        static const int axis[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
        static const int sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
        // sign table: i*j=k, j*k=i, k*i=j positive; reversed order negative; u*u=-1
        int u = axis[ua][ub];
        int s = sa ^ sb ^ sign[ua][ub];
        return 2 * u + s;
    };
    std::vector<int> t(64);
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) t[a * 8 + b] = mulq(a, b);
    return std::make_shared<FiniteGroup>(8, std::move(t), "Q8");
}

GroupPtr product_group(const GroupPtr& a, const GroupPtr& b) {
    int na = a->order(), nb = b->order(), n = na * nb;
    std::vector<int> t(n * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int xa = x / nb, xb = x % nb, ya = y / nb, yb = y % nb;
            t[x * n + y] = a->mul(xa, ya) * nb + b->mul(xb, yb);
        }
    return std::make_shared<FiniteGroup>(n, std::move(t), a->label() + "x" + b->label());
}

std::vector<Perm> symmetric_generators(int n) {
    if (n <= 1) return {};
    Perm transposition(n), cycle(n);
    for (int i = 0; i < n; ++i) transposition[i] = cycle[i] = i;
    std::swap(transposition[0], transposition[1]);
    for (int i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
    return {transposition, cycle};
}

std::vector<Perm> alternating_generators(int n) {
    if (n <= 2) return {};
    std::vector<Perm> gens;
    for (int i = 0; i + 2 < n; ++i) {  // 3-cycles (0 1 2), (1 2 3), ...
        Perm p(n);
        for (int j = 0; j < n; ++j) p[j] = j;
        p[i] = i + 1;
        p[i + 1] = i + 2;
        p[i + 2] = i;
        gens.push_back(p);
    }
    return gens;
}

long parse_long(const std::string& s, size_t from) {
    if (from >= s.size()) throw group_error("missing numeric suffix in group name: " + s);
    return std::stol(s.substr(from));
}

}  // namespace

GroupPtr named_group(const std::string& name, int order_cap) {
    auto check_cap = [&](long order) {
        if (order > order_cap)
            throw too_large_error(name + ": order " + std::to_string(order) + " exceeds cap " +
                                  std::to_string(order_cap));
    };
    auto family = [&](const std::string& fam,
                      const std::string& shortform) -> std::optional<long> {
        if (name.rfind(fam + "(", 0) == 0 && name.back() == ')')
            return parse_long(name.substr(0, name.size() - 1), fam.size() + 1);
        if (!shortform.empty() && name.rfind(shortform, 0) == 0 &&
            name.find_first_not_of("0123456789", shortform.size()) == std::string::npos &&
            name.size() > shortform.size())
            return parse_long(name, shortform.size());
        return std::nullopt;
    };
    if (name == "quaternion8" || name == "Q8") return quaternion_group();
    if (auto n = family("cyclic", "C"); n) {
        if (*n < 1) throw group_error("cyclic order must be positive");
        check_cap(*n);
        return cyclic_group((int)*n);
    }
    if (auto n = family("dihedral", "D"); n) {
        if (*n < 1) throw group_error("dihedral parameter must be positive");
        check_cap(2 * *n);
        return dihedral_group((int)*n);
    }
    if (auto n = family("symmetric", "S"); n) {
        if (*n < 1 || *n > 5) throw group_error("symmetric(n) supported for 1 <= n <= 5");
        long order = 1;
        for (long i = 2; i <= *n; ++i) order *= i;
        check_cap(order);
        auto g = group_from_perms((int)*n, symmetric_generators((int)*n),
                                  "S" + std::to_string(*n), order_cap);
        if (g->order() != order) throw group_error("symmetric generator closure has wrong order");
        return g;
    }
    if (auto n = family("alternating", "A"); n) {
        if (*n < 1 || *n > 5) throw group_error("alternating(n) supported for 1 <= n <= 5");
        long order = 1;
        for (long i = 2; i <= *n; ++i) order *= i;
        order = *n >= 2 ? order / 2 : 1;
        check_cap(order);
        auto g = group_from_perms((int)*n, alternating_generators((int)*n),
                                  "A" + std::to_string(*n), order_cap);
        if (g->order() != order)
            throw group_error("alternating generator closure has wrong order");
        return g;
    }
    throw group_error("unknown group name: " + name);
}

GroupPtr build_group(const GroupSpec& spec, int order_cap) {
    switch (spec.kind) {
        case GroupSpec::Kind::cayley: {
            int n = (int)spec.table.size();
            if (n > order_cap) throw too_large_error("cayley table exceeds order cap");
            std::vector<int> flat;
            flat.reserve(n * n);
            for (const auto& row : spec.table) {
                if ((int)row.size() != n) throw not_a_group_error("cayley table not square");
                flat.insert(flat.end(), row.begin(), row.end());
            }
            return std::make_shared<FiniteGroup>(n, std::move(flat),
                                                 "cayley" + std::to_string(n));
        }
        case GroupSpec::Kind::perm: {
            std::vector<Perm> gens;
            for (const auto& cycles : spec.generators) {
                Perm p(spec.degree);
                for (int i = 0; i < spec.degree; ++i) p[i] = i;
                for (const auto& cyc : cycles) {
                    for (size_t i = 0; i < cyc.size(); ++i) {
                        int from = cyc[i], to = cyc[(i + 1) % cyc.size()];
                        if (from < 0 || from >= spec.degree)
                            throw group_error("cycle point out of range");
                        p[from] = to;
                    }
                }
                std::vector<int> sorted = p;
                std::sort(sorted.begin(), sorted.end());
                for (int i = 0; i < spec.degree; ++i)
                    if (sorted[i] != i) throw group_error("generator is not a permutation");
                gens.push_back(p);
            }
            return group_from_perms(spec.degree, gens,
                                    "perm" + std::to_string(spec.degree), order_cap);
        }
        case GroupSpec::Kind::named:
            return named_group(spec.name, order_cap);
        case GroupSpec::Kind::product: {
            if (spec.factors.empty()) throw group_error("empty product");
            GroupPtr g = build_group(spec.factors[0], order_cap);
            for (size_t i = 1; i < spec.factors.size(); ++i) {
                GroupPtr h = build_group(spec.factors[i], order_cap);
                if ((long)g->order() * h->order() > order_cap)
                    throw too_large_error("product exceeds order cap");
                g = product_group(g, h);
            }
            return g;
        }
    }
    throw group_error("invalid group spec");
}

Subgroup::Subgroup(GroupPtr parent, std::vector<int> elements)
    : parent_(std::move(parent)), elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
    if (elements_.empty() || !contains(parent_->identity()))
        throw group_error("subgroup must contain the identity");
    for (int a : elements_) {
        if (a < 0 || a >= parent_->order()) throw group_error("subgroup element out of range");
        if (!contains(parent_->inv(a))) throw group_error("subgroup not closed under inverse");
        for (int b : elements_)
            if (!contains(parent_->mul(a, b)))
                throw group_error("subgroup not closed under product");
    }
    if (parent_->order() % order() != 0)
        throw group_error("subgroup order does not divide group order");
}

bool Subgroup::contains(int g) const {
    return std::binary_search(elements_.begin(), elements_.end(), g);
}

GroupHom::GroupHom(GroupPtr source_, GroupPtr target_, std::vector<int> images_)
    : source(std::move(source_)), target(std::move(target_)), images(std::move(images_)) {
    if ((int)images.size() != source->order()) throw group_error("hom image list has wrong size");
    for (int x : images)
        if (x < 0 || x >= target->order()) throw group_error("hom image out of range");
    for (int a = 0; a < source->order(); ++a)
        for (int b = 0; b < source->order(); ++b)
            if (images[source->mul(a, b)] != target->mul(images[a], images[b]))
                throw group_error("map does not respect multiplication");
    std::set<int> img(images.begin(), images.end());
    injective = (int)img.size() == source->order();
}

bool same_cayley_table(const FiniteGroup& a, const FiniteGroup& b) {
    if (a.order() != b.order()) return false;
    for (int x = 0; x < a.order(); ++x)
        for (int y = 0; y < a.order(); ++y)
            if (a.mul(x, y) != b.mul(x, y)) return false;
    return true;
}

GroupHom identity_hom(const GroupPtr& g) {
    std::vector<int> im(g->order());
    for (int i = 0; i < g->order(); ++i) im[i] = i;
    return GroupHom(g, g, std::move(im));
}

GroupHom compose_homs(const GroupHom& outer, const GroupHom& inner) {
    if (inner.target != outer.source) throw group_error("homs not composable");
    std::vector<int> im(inner.source->order());
    for (int a = 0; a < inner.source->order(); ++a) im[a] = outer.map(inner.map(a));
    return GroupHom(inner.source, outer.target, std::move(im));
}

Subgroup trivial_subgroup(const GroupPtr& g) { return Subgroup(g, {g->identity()}); }

Subgroup full_subgroup(const GroupPtr& g) {
    std::vector<int> all(g->order());
    for (int i = 0; i < g->order(); ++i) all[i] = i;
    return Subgroup(g, std::move(all));
}

Subgroup subgroup_closure(const GroupPtr& g, const std::vector<int>& generators) {
    // orbit of the identity under right multiplication by the generators;
    // in a finite group this is exactly the generated subgroup
    std::set<int> seen{g->identity()};
    std::vector<int> todo{g->identity()};
    while (!todo.empty()) {
        int a = todo.back();
        todo.pop_back();
        for (int x : generators)
            if (seen.insert(g->mul(a, x)).second) todo.push_back(g->mul(a, x));
    }
    return Subgroup(g, std::vector<int>(seen.begin(), seen.end()));
}

Subgroup conjugate_subgroup(const Subgroup& s, int g) {
    const GroupPtr& G = s.parent();
    std::vector<int> e;
    e.reserve(s.order());
    for (int a : s.elements()) e.push_back(G->conjugate(g, a));
    return Subgroup(G, std::move(e));
}

Subgroup intersect_subgroups(const Subgroup& a, const Subgroup& b) {
    std::vector<int> e;
    std::set_intersection(a.elements().begin(), a.elements().end(), b.elements().begin(),
                          b.elements().end(), std::back_inserter(e));
    return Subgroup(a.parent(), std::move(e));
}

bool subgroup_contained(const Subgroup& a, const Subgroup& b) {
    return std::includes(b.elements().begin(), b.elements().end(), a.elements().begin(),
                         a.elements().end());
}

Subgroup normalizer(const Subgroup& s) {
    const GroupPtr& g = s.parent();
    std::vector<int> e;
    for (int x = 0; x < g->order(); ++x) {
        bool ok = true;
        for (int a : s.elements())
            if (!s.contains(g->conjugate(x, a))) {
                ok = false;
                break;
            }
        if (ok) e.push_back(x);
    }
    return Subgroup(g, std::move(e));
}

bool is_normal(const Subgroup& s) { return normalizer(s).order() == s.parent()->order(); }

bool is_cyclic_subgroup(const Subgroup& s) {
    const GroupPtr& g = s.parent();
    for (int a : s.elements())
        if (g->element_order(a) == s.order()) return true;
    return false;
}

Subgroup hom_image(const GroupHom& f, const Subgroup& s) {
    std::vector<int> e;
    e.reserve(s.order());
    for (int a : s.elements()) e.push_back(f.map(a));
    return Subgroup(f.target, std::move(e));
}

Subgroup hom_preimage(const GroupHom& f, const Subgroup& s) {
    std::vector<int> e;
    for (int a = 0; a < f.source->order(); ++a)
        if (s.contains(f.map(a))) e.push_back(a);
    return Subgroup(f.source, std::move(e));
}

std::vector<Subgroup> enumerate_subgroups(const GroupPtr& g) {
    // all cyclic subgroups, then close pairs under join until stable
    std::set<std::vector<int>> sets;
    sets.insert({g->identity()});
    for (int a = 0; a < g->order(); ++a)
        sets.insert(subgroup_closure(g, {a}).elements());
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::vector<int>> cur(sets.begin(), sets.end());
        for (size_t i = 0; i < cur.size(); ++i)
            for (size_t j = i + 1; j < cur.size(); ++j) {
                if (std::includes(cur[i].begin(), cur[i].end(), cur[j].begin(), cur[j].end()) ||
                    std::includes(cur[j].begin(), cur[j].end(), cur[i].begin(), cur[i].end()))
                    continue;
                std::vector<int> gens = cur[i];
                gens.insert(gens.end(), cur[j].begin(), cur[j].end());
                if (sets.insert(subgroup_closure(g, gens).elements()).second) grew = true;
            }
    }
    std::vector<Subgroup> out;
    out.reserve(sets.size());
    for (const auto& e : sets) out.emplace_back(g, e);
    std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        return a.elements() < b.elements();
    });
    return out;
}

EmbeddedGroup subgroup_as_group(const Subgroup& s) {
    // memoized so the same subgroup always yields the same group object;
    // downstream per-group caches rely on pointer identity
    static std::mutex mu;
    static std::map<std::pair<const FiniteGroup*, std::vector<int>>, EmbeddedGroup> cache;
    std::pair<const FiniteGroup*, std::vector<int>> key{s.parent().get(), s.elements()};
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    const GroupPtr& g = s.parent();
    const std::vector<int>& e = s.elements();
    int n = (int)e.size();
    auto pos = [&](int x) {
        return (int)(std::lower_bound(e.begin(), e.end(), x) - e.begin());
    };
    std::vector<int> table(n * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) table[a * n + b] = pos(g->mul(e[a], e[b]));
    auto grp = std::make_shared<FiniteGroup>(
        n, std::move(table), g->label() + "<" + std::to_string(n) + ">");
    EmbeddedGroup emb{grp, GroupHom(grp, g, e)};
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(std::move(key), std::move(emb)).first->second;
}

QuotientGroup quotient_group(const GroupPtr& g, const Subgroup& n) {
    if (!is_normal(n)) throw not_normal_error("quotient by a non-normal subgroup");
    std::vector<int> coset_of(g->order(), -1);
    std::vector<int> reps;  // least element of each coset, in discovery order
    for (int a = 0; a < g->order(); ++a) {
        if (coset_of[a] >= 0) continue;
        int idx = (int)reps.size();
        reps.push_back(a);
        for (int h : n.elements()) coset_of[g->mul(a, h)] = idx;
    }
    int q = (int)reps.size();
    std::vector<int> table(q * q);
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) table[a * q + b] = coset_of[g->mul(reps[a], reps[b])];
    auto grp = std::make_shared<FiniteGroup>(q, std::move(table),
                                             g->label() + "/" + std::to_string(n.order()));
    return QuotientGroup{grp, GroupHom(g, grp, std::move(coset_of))};
}

CcsTable::CcsTable(GroupPtr g) : group_(std::move(g)) {
    std::vector<Subgroup> subs = enumerate_subgroups(group_);
    std::set<std::vector<int>> unseen;
    for (const auto& s : subs) unseen.insert(s.elements());

    struct Raw {
        std::vector<std::vector<int>> conj;
    };
    std::vector<Raw> raw;
    for (const auto& s : subs) {
        if (!unseen.count(s.elements())) continue;
        std::set<std::vector<int>> orbit;
        for (int x = 0; x < group_->order(); ++x)
            orbit.insert(conjugate_subgroup(s, x).elements());
        for (const auto& c : orbit) unseen.erase(c);
        raw.push_back(Raw{{orbit.begin(), orbit.end()}});
    }
    std::sort(raw.begin(), raw.end(), [](const Raw& a, const Raw& b) {
        if (a.conj[0].size() != b.conj[0].size()) return a.conj[0].size() < b.conj[0].size();
        return a.conj[0] < b.conj[0];
    });

    for (auto& r : raw) {
        Subgroup rep(group_, r.conj[0]);
        Subgroup norm = normalizer(rep);
        EmbeddedGroup norm_emb = subgroup_as_group(norm);
        // rep's elements inside the normalizer group
        std::vector<int> rep_in_norm;
        for (int a : rep.elements())
            rep_in_norm.push_back((int)(std::lower_bound(norm.elements().begin(),
                                                         norm.elements().end(), a) -
                                        norm.elements().begin()));
        QuotientGroup w = quotient_group(norm_emb.group, Subgroup(norm_emb.group, rep_in_norm));
        long weyl_order = w.group->order();
        classes_.push_back(CcsClass{std::move(rep), std::move(r.conj), std::move(norm),
                                    weyl_order, norm_emb.group, norm_emb.incl, w.group,
                                    w.proj});
    }
}

int CcsTable::class_of_elements(const std::vector<int>& sorted_elements) const {
    for (size_t i = 0; i < classes_.size(); ++i) {
        if (classes_[i].rep.order() != (int)sorted_elements.size()) continue;
        if (std::binary_search(classes_[i].conjugates.begin(), classes_[i].conjugates.end(),
                               sorted_elements))
            return (int)i;
    }
    throw group_error("subgroup not found in the conjugacy class table");
}

int CcsTable::class_of(const Subgroup& s) const { return class_of_elements(s.elements()); }

std::string CcsTable::label(int idx) const {
    int order = classes_[idx].rep.order(), nth = 0;
    for (int i = 0; i < idx; ++i)
        if (classes_[i].rep.order() == order) ++nth;
    return std::to_string(order) + ":" + std::to_string(nth);
}

int CcsTable::index_of_label(const std::string& lbl) const {
    for (size_t i = 0; i < classes_.size(); ++i)
        if (label((int)i) == lbl) return (int)i;
    throw group_error("unknown class label: " + lbl);
}

std::vector<std::string> CcsTable::labels() const {
    std::vector<std::string> out;
    for (size_t i = 0; i < classes_.size(); ++i) out.push_back(label((int)i));
    return out;
}

Subgroup CcsTable::weyl_preimage(int idx, const Subgroup& c_in_weyl) const {
    const CcsClass& cl = classes_[idx];
    if (c_in_weyl.parent() != cl.weyl) throw group_error("subgroup is not in this Weyl group");
    Subgroup in_norm = hom_preimage(cl.weyl_proj, c_in_weyl);
    return hom_image(cl.norm_incl, in_norm);
}

CcsTable conjugacy_classes_of_subgroups(const GroupPtr& g) { return CcsTable(g); }

long mark(const GroupPtr& g, const Subgroup& h, const Subgroup& k) {
    std::vector<char> seen(g->order(), 0);
    long count = 0;
    for (int a = 0; a < g->order(); ++a) {
        if (seen[a]) continue;
        for (int x : h.elements()) seen[g->mul(a, x)] = 1;
        int ai = g->inv(a);
        bool fixed = true;
        for (int x : k.elements())
            if (!h.contains(g->mul(g->mul(ai, x), a))) {
                fixed = false;
                break;
            }
        if (fixed) ++count;
    }
    return count;
}

std::vector<int> double_cosets(const GroupPtr& g, const Subgroup& h, const Subgroup& k) {
    std::vector<char> seen(g->order(), 0);
    std::vector<int> reps;
    for (int a = 0; a < g->order(); ++a) {
        if (seen[a]) continue;
        reps.push_back(a);
        for (int x : h.elements()) {
            int xa = g->mul(x, a);
            for (int y : k.elements()) seen[g->mul(xa, y)] = 1;
        }
    }
    return reps;
}

std::vector<CyclicClassData> cyclic_subgroup_data(const GroupPtr& w) {
    std::set<std::vector<int>> cyclics;
    for (int a = 0; a < w->order(); ++a) cyclics.insert(subgroup_closure(w, {a}).elements());
    std::set<std::vector<int>> unseen = cyclics;
    std::vector<CyclicClassData> out;
    for (const auto& e : cyclics) {
        if (!unseen.count(e)) continue;
        Subgroup c(w, e);
        std::set<std::vector<int>> orbit;
        for (int x = 0; x < w->order(); ++x) orbit.insert(conjugate_subgroup(c, x).elements());
        for (const auto& o : orbit) unseen.erase(o);
        Subgroup rep(w, *orbit.begin());
        long idx = w->order() / normalizer(rep).order();
        out.push_back(CyclicClassData{rep, euler_phi_long(rep.order()), idx});
    }
    std::sort(out.begin(), out.end(), [](const CyclicClassData& a, const CyclicClassData& b) {
        if (a.rep.order() != b.rep.order()) return a.rep.order() < b.rep.order();
        return a.rep.elements() < b.rep.elements();
    });
    return out;
}

std::vector<std::vector<bool>> subconjugacy_order(const CcsTable& ccs) {
    size_t n = ccs.size();
    std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            const auto& rep_j = ccs.classes()[j].rep.elements();
            for (const auto& conj : ccs.classes()[i].conjugates)
                if (std::includes(rep_j.begin(), rep_j.end(), conj.begin(), conj.end())) {
                    rel[i][j] = true;
                    break;
                }
        }
    return rel;
}

ElementClasses element_classes(const GroupPtr& g) {
    ElementClasses ec;
    ec.class_of.assign(g->order(), -1);
    for (int a = 0; a < g->order(); ++a) {
        if (ec.class_of[a] >= 0) continue;
        std::set<int> orbit;
        for (int x = 0; x < g->order(); ++x) orbit.insert(g->conjugate(x, a));
        int idx = (int)ec.classes.size();
        ec.classes.emplace_back(orbit.begin(), orbit.end());
        for (int b : ec.classes.back()) ec.class_of[b] = idx;
    }
    return ec;
}

long euler_phi_long(long n) {
    long r = n;
    for (long p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            r -= r / p;
        }
    if (n > 1) r -= r / n;
    return r;
}

}  // namespace burnside
