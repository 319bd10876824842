// Rational class functions: the permutation character of a Burnside element,
// Artin elements theta_C on cyclic groups, induced characters, and the
// rational rank of the permutation-character map.
#pragma once

#include "burnside/ring.hpp"

namespace burnside {

struct ratrep_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct not_cyclic_error : ratrep_error {
    using ratrep_error::ratrep_error;
};

struct ClassFunction {
    GroupPtr group;
    ElementClasses classes;
    RatVec values;  // one per element conjugacy class

    Rat value_at(int element) const { return values[classes.class_of[element]]; }
    bool operator==(const ClassFunction& o) const {
        return group == o.group && values == o.values;
    }
};

ClassFunction constant_function(const GroupPtr& g, const Rat& c);
ClassFunction add(const ClassFunction& f, const ClassFunction& g);
ClassFunction scale(const Rat& c, const ClassFunction& f);

// [S] -> character of Q[S]: value at g is the number of g-fixed points.
ClassFunction permutation_character(const BurnsideElement& x);

// theta_C: |C| on the generators of the cyclic group c, zero elsewhere.
ClassFunction artin_element(const GroupPtr& c);

// Induced class function: (ind f)(g) = (1/|H|) sum over x in G with
// x^-1 g x in H of f(x^-1 g x).
ClassFunction induce(const EmbeddedGroup& h, const ClassFunction& f);

// |G| . [triv] == sum over all cyclic subgroups C of ind_C^G theta_C.
bool verify_artin(const GroupPtr& g);

struct RationalRank {
    size_t image_rank;
    size_t cyclic_class_count;
};
// Rank of the matrix of marks evaluated at cyclic-subgroup-class columns;
// equality with the number of cyclic classes is rational surjectivity of the
// permutation character map.
RationalRank rational_rank_check(const RingPtr& r);

}  // namespace burnside
