#include "burnside/json_io.hpp"

#include <fstream>

namespace burnside::io {

Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int((long)j.get<int64_t>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw io_error("expected an integer or a decimal string");
}

json int_to_json(const Int& v) {
    if (v.fits_slong_p()) return json(v.get_si());
    return json(v.get_str());
}

Rat rat_from_string(const std::string& s) {
    Rat q(s);
    q.canonicalize();
    return q;
}

std::string rat_to_string(const Rat& q) { return q.get_str(); }

json matrix_to_json(const IntMatrix& m) {
    json entries = json::array();
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) entries.push_back(m.at(i, j).get_str());
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

IntMatrix matrix_from_json(const json& j) {
    size_t rows = j.at("rows").get<size_t>(), cols = j.at("cols").get<size_t>();
    const json& entries = j.at("entries");
    if (entries.size() != rows * cols) throw io_error("matrix entry count mismatch");
    IntMatrix m(rows, cols);
    size_t k = 0;
    for (size_t i = 0; i < rows; ++i)
        for (size_t c = 0; c < cols; ++c) m.at(i, c) = int_from_json(entries[k++]);
    return m;
}

GroupSpec group_spec_from_json(const json& j) {
    if (j.is_string()) {
        GroupSpec s;
        s.kind = GroupSpec::Kind::named;
        s.name = j.get<std::string>();
        return s;
    }
    GroupSpec s;
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "cayley") {
        s.kind = GroupSpec::Kind::cayley;
        s.table = j.at("table").get<std::vector<std::vector<int>>>();
    } else if (kind == "perm") {
        s.kind = GroupSpec::Kind::perm;
        s.degree = j.at("degree").get<int>();
        s.generators = j.at("generators").get<std::vector<std::vector<std::vector<int>>>>();
    } else if (kind == "named") {
        s.kind = GroupSpec::Kind::named;
        s.name = j.at("name").get<std::string>();
    } else if (kind == "product") {
        s.kind = GroupSpec::Kind::product;
        for (const json& f : j.at("factors")) s.factors.push_back(group_spec_from_json(f));
    } else {
        throw io_error("unknown group spec kind: " + kind);
    }
    return s;
}

json group_spec_to_json(const GroupSpec& s) {
    switch (s.kind) {
        case GroupSpec::Kind::cayley:
            return json{{"kind", "cayley"}, {"table", s.table}};
        case GroupSpec::Kind::perm:
            return json{{"kind", "perm"}, {"degree", s.degree}, {"generators", s.generators}};
        case GroupSpec::Kind::named:
            return json{{"kind", "named"}, {"name", s.name}};
        case GroupSpec::Kind::product: {
            json factors = json::array();
            for (const GroupSpec& f : s.factors) factors.push_back(group_spec_to_json(f));
            return json{{"kind", "product"}, {"factors", factors}};
        }
    }
    throw io_error("invalid group spec");
}

json element_to_json(const BurnsideElement& x) {
    json coeffs = json::array();
    for (const Int& c : x.coeffs) coeffs.push_back(int_to_json(c));
    return json{{"group", x.ring->group()->label()},
                {"coeffs", coeffs},
                {"basis", x.ring->ccs().labels()}};
}

json ghost_to_json(const GhostVector& v) {
    json values = json::array();
    for (const Int& c : v.values) values.push_back(int_to_json(c));
    return json{{"group", v.ring->group()->label()},
                {"values", values},
                {"basis", v.ring->ccs().labels()}};
}

IntVec values_from_json(const json& j, size_t expect) {
    const json& arr = j.is_array() ? j : j.at("values");
    if (arr.size() != expect)
        throw io_error("expected " + std::to_string(expect) + " values, got " +
                       std::to_string(arr.size()));
    IntVec out;
    for (const json& v : arr) out.push_back(int_from_json(v));
    return out;
}

GCWComplex complex_from_json(const json& j, int order_cap) {
    GroupPtr g = build_group(group_spec_from_json(j.at("group")), order_cap);
    return complex_from_json(j, BurnsideRing::cached(g), order_cap);
}

GCWComplex complex_from_json(const json& j, const RingPtr& r, int order_cap) {
    GroupPtr g = build_group(group_spec_from_json(j.at("group")), order_cap);
    if (!same_cayley_table(*g, *r->group()))
        throw io_error("complex group does not match the expected group");
    std::vector<GCWCell> cells;
    for (const json& c : j.at("cells")) {
        int dim = c.at("dim").get<int>();
        int iso = r->ccs().index_of_label(c.at("isotropy").get<std::string>());
        cells.push_back(GCWCell{dim, iso});
    }
    std::string label = j.value("label", "");
    return make_complex(r, std::move(cells), std::move(label));
}

json complex_to_json(const GCWComplex& x) {
    json cells = json::array();
    for (const GCWCell& c : x.cells)
        cells.push_back(json{{"dim", c.dim}, {"isotropy", x.ring->ccs().label(c.isotropy)}});
    return json{{"group", x.ring->group()->label()}, {"cells", cells}, {"label", x.label}};
}

ChainPackage package_from_json(const json& j, int order_cap) {
    GroupPtr g = build_group(group_spec_from_json(j.at("group")), order_cap);
    RingPtr r = BurnsideRing::cached(g);
    ChainPackage pkg{r, {}};
    pkg.per_class.resize(r->classes());
    for (const auto& [label, data] : j.at("classes").items()) {
        int cls = r->ccs().index_of_label(label);
        std::vector<IntMatrix> boundaries, maps;
        for (const json& b : data.at("boundaries")) boundaries.push_back(matrix_from_json(b));
        for (const json& m : data.at("map")) maps.push_back(matrix_from_json(m));
        ChainComplex complex(std::move(boundaries));
        validate_chain_map(complex, maps);
        pkg.per_class[cls] = ClassChainData{std::move(complex), std::move(maps)};
    }
    return pkg;
}

SubFinDiagram diagram_from_json(const json& j, int order_cap) {
    std::vector<GroupPtr> objects;
    for (const json& spec : j.at("objects"))
        objects.push_back(build_group(group_spec_from_json(spec), order_cap));
    std::vector<SubFinDiagram::Arrow> arrows;
    if (j.contains("morphisms"))
        for (const json& m : j.at("morphisms")) {
            int from = m.at("from").get<int>(), to = m.at("to").get<int>();
            if (from < 0 || from >= (int)objects.size() || to < 0 || to >= (int)objects.size())
                throw io_error("morphism endpoint out of range");
            std::vector<int> images = m.at("images").get<std::vector<int>>();
            arrows.push_back(
                SubFinDiagram::Arrow{from, to, GroupHom(objects[from], objects[to], images)});
        }
    return SubFinDiagram(std::move(objects), std::move(arrows));
}

CcsfStructure ccsf_from_json(const json& j) {
    CcsfStructure c;
    c.labels = j.at("labels").get<std::vector<std::string>>();
    const json& assign = j.at("assign");
    c.assign.resize(assign.size());
    for (const auto& [key, arr] : assign.items()) {
        size_t obj = std::stoul(key);
        if (obj >= c.assign.size()) throw io_error("assign object index out of range");
        c.assign[obj] = arr.get<std::vector<int>>();
    }
    return c;
}

FusionData fusion_from_json(const json& j) {
    std::vector<FusionLabelInfo> labels;
    for (const json& l : j.at("labels"))
        labels.push_back(
            FusionLabelInfo{l.at("name").get<std::string>(), l.at("order").get<long>()});
    auto index = [&](const std::string& name) {
        for (size_t i = 0; i < labels.size(); ++i)
            if (labels[i].name == name) return (int)i;
        throw io_error("fusion table references unknown label: " + name);
    };
    std::map<std::pair<int, int>, std::vector<FusionEntry>> table;
    for (const auto& [key, arr] : j.at("fusion").items()) {
        size_t comma = key.find(',');
        if (comma == std::string::npos)
            throw io_error("fusion key must be \"K,H\": " + key);
        int k = index(key.substr(0, comma)), h = index(key.substr(comma + 1));
        std::vector<FusionEntry> entries;
        for (const json& e : arr)
            entries.push_back(
                FusionEntry{e.at("L").get<int>(), e.at("normalizer_meet").get<long>()});
        table[{k, h}] = std::move(entries);
    }
    return FusionData(std::move(labels), std::move(table));
}

RatVec rational_values_from_json(const json& j, size_t expect) {
    const json& arr = j.is_array() ? j : j.at("values");
    if (arr.size() != expect)
        throw io_error("expected " + std::to_string(expect) + " values, got " +
                       std::to_string(arr.size()));
    RatVec out;
    for (const json& v : arr) {
        if (v.is_number_integer())
            out.emplace_back((long)v.get<int64_t>());
        else
            out.push_back(rat_from_string(v.get<std::string>()));
    }
    return out;
}

json class_function_to_json(const ClassFunction& f) {
    json reps = json::array(), values = json::array();
    for (size_t k = 0; k < f.classes.classes.size(); ++k) {
        reps.push_back(f.classes.classes[k][0]);
        values.push_back(rat_to_string(f.values[k]));
    }
    return json{{"group", f.group->label()}, {"class_representatives", reps},
                {"values", values}};
}

json load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw io_error(path + ": " + e.what());
    }
    return j;
}

}  // namespace burnside::io
