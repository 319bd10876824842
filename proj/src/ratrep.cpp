#include "burnside/ratrep.hpp"

#include <algorithm>
#include <set>

namespace burnside {

ClassFunction constant_function(const GroupPtr& g, const Rat& c) {
    ElementClasses ec = element_classes(g);
    RatVec values(ec.classes.size(), c);
    return ClassFunction{g, std::move(ec), std::move(values)};
}

ClassFunction add(const ClassFunction& f, const ClassFunction& g) {
    if (f.group != g.group) throw ratrep_error("class functions over different groups");
    ClassFunction r = f;
    for (size_t i = 0; i < r.values.size(); ++i) {
        r.values[i] += g.values[i];
        r.values[i].canonicalize();
    }
    return r;
}

ClassFunction scale(const Rat& c, const ClassFunction& f) {
    ClassFunction r = f;
    for (Rat& v : r.values) {
        v *= c;
        v.canonicalize();
    }
    return r;
}

ClassFunction permutation_character(const BurnsideElement& x) {
    const GroupPtr& g = x.ring->group();
    const CcsTable& ccs = x.ring->ccs();
    ClassFunction f = constant_function(g, Rat(0));
    for (size_t k = 0; k < f.classes.classes.size(); ++k) {
        int rep = f.classes.classes[k][0];
        Subgroup cyc = subgroup_closure(g, {rep});
        Rat acc = 0;
        for (size_t i = 0; i < x.coeffs.size(); ++i) {
            if (x.coeffs[i] == 0) continue;
            acc += Rat(x.coeffs[i] * Int(mark(g, ccs.classes()[i].rep, cyc)));
        }
        acc.canonicalize();
        f.values[k] = acc;
    }
    return f;
}

ClassFunction artin_element(const GroupPtr& c) {
    bool cyclic = false;
    for (int a = 0; a < c->order(); ++a)
        if (c->element_order(a) == c->order()) cyclic = true;
    if (!cyclic) throw not_cyclic_error("artin element needs a cyclic group");
    ClassFunction f = constant_function(c, Rat(0));
    for (int a = 0; a < c->order(); ++a)
        if (c->element_order(a) == c->order())
            f.values[f.classes.class_of[a]] = Rat(c->order());
    return f;
}

ClassFunction induce(const EmbeddedGroup& h, const ClassFunction& f) {
    if (f.group != h.group) throw ratrep_error("class function is not over the subgroup");
    const GroupPtr& g = h.incl.target;
    const GroupPtr& hg = h.group;
    // reverse lookup: element of G -> index in H, or -1
    std::vector<int> in_h(g->order(), -1);
    for (int a = 0; a < hg->order(); ++a) in_h[h.incl.map(a)] = a;

    ClassFunction out = constant_function(g, Rat(0));
    for (size_t k = 0; k < out.classes.classes.size(); ++k) {
        int rep = out.classes.classes[k][0];
        Rat acc = 0;
        for (int x = 0; x < g->order(); ++x) {
            int conj = g->mul(g->mul(g->inv(x), rep), x);
            if (in_h[conj] >= 0) acc += f.values[f.classes.class_of[in_h[conj]]];
        }
        acc /= hg->order();
        acc.canonicalize();
        out.values[k] = acc;
    }
    return out;
}

bool verify_artin(const GroupPtr& g) {
    // every cyclic subgroup, not just one per conjugacy class
    std::set<std::vector<int>> cyclics;
    for (int a = 0; a < g->order(); ++a) cyclics.insert(subgroup_closure(g, {a}).elements());
    ClassFunction sum = constant_function(g, Rat(0));
    for (const auto& els : cyclics) {
        EmbeddedGroup emb = subgroup_as_group(Subgroup(g, els));
        sum = add(sum, induce(emb, artin_element(emb.group)));
    }
    return sum == constant_function(g, Rat(g->order()));
}

RationalRank rational_rank_check(const RingPtr& r) {
    const CcsTable& ccs = r->ccs();
    std::vector<size_t> cyclic_cols;
    for (size_t j = 0; j < ccs.size(); ++j)
        if (is_cyclic_subgroup(ccs.classes()[j].rep)) cyclic_cols.push_back(j);
    IntMatrix m(ccs.size(), cyclic_cols.size());
    for (size_t i = 0; i < ccs.size(); ++i)
        for (size_t j = 0; j < cyclic_cols.size(); ++j)
            m.at(i, j) = r->marks().at(i, cyclic_cols[j]);
    return RationalRank{rank(m), cyclic_cols.size()};
}

}  // namespace burnside
