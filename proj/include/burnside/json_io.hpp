// JSON schemas for every file format the tools read and write. Matrices
// serialize entries as decimal strings so values never depend on a reader's
// integer width; small integer vectors are emitted as numbers when they fit.
#pragma once

#include <json.hpp>

#include "burnside/eqcw.hpp"
#include "burnside/infinite.hpp"
#include "burnside/ratrep.hpp"

namespace burnside::io {

using json = nlohmann::ordered_json;

struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Int int_from_json(const json& j);
json int_to_json(const Int& v);
Rat rat_from_string(const std::string& s);
std::string rat_to_string(const Rat& q);

json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const json& j);

// {"kind":"cayley","table":[[..]]} | {"kind":"perm","degree":n,
//  "generators":[[[cycle]..]..]} | {"kind":"named","name":"S3"} |
// {"kind":"product","factors":[..]}
GroupSpec group_spec_from_json(const json& j);
json group_spec_to_json(const GroupSpec& s);

json element_to_json(const BurnsideElement& x);   // {"group","coeffs","basis"}
json ghost_to_json(const GhostVector& v);
IntVec values_from_json(const json& j, size_t expect);  // plain array

// {"group": spec, "cells":[{"dim":n,"isotropy":"order:index"}], "label": ..}
GCWComplex complex_from_json(const json& j, int order_cap = kDefaultOrderCap);
// Same schema, but the cells are interpreted over an existing ring; the
// file's group must have an identical multiplication table.
GCWComplex complex_from_json(const json& j, const RingPtr& ring, int order_cap);
json complex_to_json(const GCWComplex& x);

// {"group": spec, "classes": {"order:index": {"boundaries":[matrix..],
//  "map":[matrix..]}}}
ChainPackage package_from_json(const json& j, int order_cap = kDefaultOrderCap);

// {"objects":[spec..], "morphisms":[{"from":i,"to":j,"images":[..]}]}
SubFinDiagram diagram_from_json(const json& j, int order_cap = kDefaultOrderCap);

// {"labels":["a",..], "assign":{"0":[0,..], ..}}
CcsfStructure ccsf_from_json(const json& j);

// {"labels":[{"name":..,"order":..},..],
//  "fusion":{"K,H":[{"L":idx,"normalizer_meet":m},..]}}
FusionData fusion_from_json(const json& j);

// {"values":["1/2","3",..]} over the fusion labels in file order
RatVec rational_values_from_json(const json& j, size_t expect);

json class_function_to_json(const ClassFunction& f);

json load_file(const std::string& path);

}  // namespace burnside::io
