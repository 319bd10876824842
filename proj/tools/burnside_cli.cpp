// Command-line front end: load group specs and data files, run the ring,
// cell, limit and covariant computations, print text or JSON reports.
// Exit codes: 0 computed, 1 verdict-false, 2 input error.
#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "burnside/json_io.hpp"

using namespace burnside;
using io::json;

namespace {

struct Options {
    std::string format = "text";
    int cap = kDefaultOrderCap;
    std::string out;
};

void emit(const Options& opt, const std::string& text) {
    if (opt.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(opt.out, std::ios::binary);
    if (!f) throw io::io_error("cannot write " + opt.out);
    f << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// A spec argument is a JSON file path, an inline JSON object, or a bare
// group name like S4 or cyclic(12).
GroupSpec resolve_spec(const std::string& arg) {
    if (std::filesystem::exists(arg)) return io::group_spec_from_json(io::load_file(arg));
    if (!arg.empty() && arg.front() == '{')
        return io::group_spec_from_json(json::parse(arg));
    GroupSpec s;
    s.kind = GroupSpec::Kind::named;
    s.name = arg;
    return s;
}

RingPtr ring_from_arg(const std::string& arg, int cap) {
    return BurnsideRing::cached(build_group(resolve_spec(arg), cap));
}

std::string coeff_line(const RingPtr& r, const IntVec& coeffs) {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0) continue;
        Int c = coeffs[i];
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        Int a = abs(c);
        if (a != 1) os << a.get_str() << " ";
        os << "[G/" << r->ccs().label((int)i) << "]";
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

int cmd_group(const std::string& spec, const Options& opt) {
    RingPtr r = ring_from_arg(spec, opt.cap);
    const CcsTable& ccs = r->ccs();
    size_t subgroups = 0;
    for (const auto& cl : ccs.classes()) subgroups += cl.conjugates.size();
    if (opt.format == "json") {
        json classes = json::array();
        for (size_t i = 0; i < ccs.size(); ++i) {
            const CcsClass& cl = ccs.classes()[i];
            classes.push_back(json{{"label", ccs.label((int)i)},
                                   {"order", cl.rep.order()},
                                   {"size", cl.conjugates.size()},
                                   {"normalizer_order", cl.normalizer.order()},
                                   {"weyl_order", cl.weyl_order},
                                   {"cyclic", is_cyclic_subgroup(cl.rep)}});
        }
        emit(opt, dump(json{{"group", r->group()->label()},
                            {"order", r->group()->order()},
                            {"subgroups", subgroups},
                            {"classes", classes}}));
    } else {
        std::ostringstream os;
        os << "group " << r->group()->label() << "  order " << r->group()->order() << "\n";
        os << "subgroups " << subgroups << "  classes " << ccs.size() << "\n";
        os << "label  |H|  #conj  |N|  |W|\n";
        for (size_t i = 0; i < ccs.size(); ++i) {
            const CcsClass& cl = ccs.classes()[i];
            os << ccs.label((int)i) << "  " << cl.rep.order() << "  " << cl.conjugates.size()
               << "  " << cl.normalizer.order() << "  " << cl.weyl_order << "\n";
        }
        emit(opt, os.str());
    }
    return 0;
}

int cmd_marks(const std::string& spec, const Options& opt) {
    RingPtr r = ring_from_arg(spec, opt.cap);
    if (opt.format == "json") {
        emit(opt, dump(json{{"group", r->group()->label()},
                            {"classes", r->ccs().labels()},
                            {"marks", io::matrix_to_json(r->marks())}}));
    } else {
        std::ostringstream os;
        os << "table of marks for " << r->group()->label() << "\n";
        os << "classes:";
        for (const auto& l : r->ccs().labels()) os << " " << l;
        os << "\n";
        for (size_t i = 0; i < r->classes(); ++i) {
            for (size_t j = 0; j <= i; ++j)
                os << (j ? " " : "") << r->marks().at(i, j).get_str();
            os << "\n";
        }
        emit(opt, os.str());
    }
    return 0;
}

int cmd_check(const std::string& spec, const std::string& ghost_file, const Options& opt) {
    RingPtr r = ring_from_arg(spec, opt.cap);
    GhostVector v{r, io::values_from_json(io::load_file(ghost_file), r->classes())};
    ResidueReport rep = congruence_residues(v);
    bool member = rep.all_zero();
    json residues = json::array();
    for (size_t i = 0; i < rep.residues.size(); ++i)
        residues.push_back(json{{"class", r->ccs().label((int)i)},
                                {"residue", io::int_to_json(rep.residues[i].first)},
                                {"modulus", io::int_to_json(rep.residues[i].second)}});
    json out{{"group", r->group()->label()}, {"member", member}, {"residues", residues}};
    if (member) out["element"] = io::element_to_json(uncharacter(v));
    if (opt.format == "json") {
        emit(opt, dump(out));
    } else {
        std::ostringstream os;
        os << "ghost vector over " << r->group()->label() << ": "
           << (member ? "member of A(G)" : "not in the image") << "\n";
        for (size_t i = 0; i < rep.residues.size(); ++i)
            os << r->ccs().label((int)i) << ": residue " << rep.residues[i].first.get_str()
               << " mod " << rep.residues[i].second.get_str() << "\n";
        if (member) os << "element: " << coeff_line(r, uncharacter(v).coeffs) << "\n";
        emit(opt, os.str());
    }
    return member ? 0 : 1;
}

int cmd_euler(const std::string& complex_file, const Options& opt) {
    GCWComplex x = io::complex_from_json(io::load_file(complex_file), opt.cap);
    BurnsideElement chi = euler_class(x);
    GhostVector fixed = fixed_euler_numbers(x);
    if (char_map(chi) != fixed) throw eqcw_error("internal check failed");
    if (opt.format == "json") {
        emit(opt, dump(json{{"complex", x.label},
                            {"euler_class", io::element_to_json(chi)},
                            {"fixed_euler_numbers", io::ghost_to_json(fixed)}}));
    } else {
        std::ostringstream os;
        os << "chi^G = " << coeff_line(x.ring, chi.coeffs) << "\n";
        os << "fixed-set euler numbers:";
        for (size_t i = 0; i < fixed.values.size(); ++i)
            os << " " << x.ring->ccs().label((int)i) << "=" << fixed.values[i].get_str();
        os << "\n";
        emit(opt, os.str());
    }
    return 0;
}

int cmd_lefschetz(const std::string& pkg_file, const std::string& complex_file,
                  const Options& opt) {
    ChainPackage pkg = io::package_from_json(io::load_file(pkg_file), opt.cap);
    BurnsideElement lam = lefschetz_class(pkg);
    json out{{"lefschetz_class", io::element_to_json(lam)}};
    std::ostringstream os;
    os << "Lambda^G = " << coeff_line(pkg.ring, lam.coeffs) << "\n";
    if (!complex_file.empty()) {
        GCWComplex x = io::complex_from_json(io::load_file(complex_file), pkg.ring, opt.cap);
        if (!package_matches_census(pkg, x))
            throw io::io_error("package dimensions do not match the complex census");
        BurnsideElement deg = degree_class(pkg, x);
        out["degree_class"] = io::element_to_json(deg);
        os << "(Lambda - 1)(chi - 1) = " << coeff_line(pkg.ring, deg.coeffs) << "\n";
    }
    emit(opt, opt.format == "json" ? dump(out) : os.str());
    return 0;
}

int cmd_limit(const std::string& diagram_file, const Options& opt) {
    SubFinDiagram d = io::diagram_from_json(io::load_file(diagram_file), opt.cap);
    InverseLimit lim = inverse_limit(d);
    bool subring = limit_is_subring(d, lim);
    if (opt.format == "json") {
        json objects = json::array();
        for (size_t i = 0; i < d.objects().size(); ++i)
            objects.push_back(json{{"order", d.objects()[i]->order()},
                                   {"classes", d.rings()[i]->ccs().labels()}});
        emit(opt, dump(json{{"rank", lim.rank()},
                            {"subring", subring},
                            {"objects", objects},
                            {"basis", io::matrix_to_json(lim.basis)}}));
    } else {
        std::ostringstream os;
        os << "inverse limit rank " << lim.rank() << ", subring check "
           << (subring ? "passed" : "FAILED") << "\n";
        for (size_t b = 0; b < lim.basis.rows(); ++b) {
            os << "basis[" << b << "]:";
            IntVec row = lim.basis.row(b);
            for (size_t i = 0; i < d.objects().size(); ++i) {
                os << "  obj" << i << " (";
                for (size_t c = 0; c < d.rings()[i]->classes(); ++c)
                    os << (c ? " " : "") << row[lim.offset[i] + c].get_str();
                os << ")";
            }
            os << "\n";
        }
        emit(opt, os.str());
    }
    return subring ? 0 : 1;
}

int cmd_covariant(const std::string& fusion_file, const std::string& element_file,
                  const Options& opt) {
    FusionData f = io::fusion_from_json(io::load_file(fusion_file));
    size_t n = f.labels().size();
    std::vector<int> support(n);
    for (size_t i = 0; i < n; ++i) support[i] = (int)i;

    json table = json::array();
    std::ostringstream os;
    os << "L2 character table (rows: classes K, columns: basis [G/H])\n";
    for (size_t k = 0; k < n; ++k) {
        json row = json::array();
        os << f.labels()[k].name << ":";
        for (size_t h = 0; h < n; ++h) {
            Rat v = l2_character_basis(f, (int)k, (int)h);
            row.push_back(io::rat_to_string(v));
            os << " " << io::rat_to_string(v);
        }
        os << "\n";
        table.push_back(row);
    }
    json out{{"labels", json::array()}, {"character_table", table}};
    for (const auto& l : f.labels())
        out["labels"].push_back(json{{"name", l.name}, {"order", l.order}});

    int code = 0;
    if (!element_file.empty()) {
        RatVec x = io::rational_values_from_json(io::load_file(element_file), n);
        IntegralityResult res = integrality_check(f, support, x);
        code = res.integral ? 0 : 1;
        json cert = json::array();
        os << "integrality: " << (res.integral ? "integral" : "NOT integral") << "\n";
        for (size_t i = 0; i < n; ++i) {
            cert.push_back(io::rat_to_string(res.transformed[i]));
            os << "  B_T x [" << f.labels()[i].name
               << "] = " << io::rat_to_string(res.transformed[i]) << "\n";
        }
        out["integral"] = res.integral;
        out["certificate"] = cert;
    }
    emit(opt, opt.format == "json" ? dump(out) : os.str());
    return code;
}

int cmd_completion(const std::string& spec, int n, const Options& opt) {
    RingPtr r = ring_from_arg(spec, opt.cap);
    json stages = json::array();
    std::ostringstream os;
    for (int k = 1; k <= n; ++k) {
        auto factors = completion_quotient(r, k);
        json jf = json::array();
        os << "A/I^" << k << ":";
        for (const Int& f : factors) {
            jf.push_back(io::int_to_json(f));
            os << " " << f.get_str();
        }
        os << "\n";
        stages.push_back(json{{"n", k}, {"invariant_factors", jf}});
    }
    if (opt.format == "json")
        emit(opt, dump(json{{"group", r->group()->label()}, {"stages", stages}}));
    else
        emit(opt, os.str());
    return 0;
}

int cmd_artin(const std::string& spec, const Options& opt) {
    RingPtr r = ring_from_arg(spec, opt.cap);
    const GroupPtr& g = r->group();
    bool ok = verify_artin(g);
    ClassFunction lhs = constant_function(g, Rat(g->order()));
    // recompute the cyclic sum for the report
    std::set<std::vector<int>> cyclics;
    for (int a = 0; a < g->order(); ++a) cyclics.insert(subgroup_closure(g, {a}).elements());
    ClassFunction rhs = constant_function(g, Rat(0));
    for (const auto& els : cyclics) {
        EmbeddedGroup emb = subgroup_as_group(Subgroup(g, els));
        rhs = add(rhs, induce(emb, artin_element(emb.group)));
    }
    if (opt.format == "json") {
        emit(opt, dump(json{{"group", g->label()},
                            {"holds", ok},
                            {"cyclic_subgroups", cyclics.size()},
                            {"lhs", io::class_function_to_json(lhs)},
                            {"rhs", io::class_function_to_json(rhs)}}));
    } else {
        std::ostringstream os;
        os << "artin identity over " << g->label() << ": " << (ok ? "holds" : "FAILS") << "\n";
        os << "cyclic subgroups: " << cyclics.size() << "\n";
        os << "|G| [triv] =";
        for (const Rat& v : lhs.values) os << " " << io::rat_to_string(v);
        os << "\nsum ind theta_C =";
        for (const Rat& v : rhs.values) os << " " << io::rat_to_string(v);
        os << "\n";
        emit(opt, os.str());
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Burnside ring computations"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_option("--format", opt.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--cap", opt.cap, "maximum group order");
    app.add_option("--out", opt.out, "write output to a file");

    std::string spec, file_a, file_b;
    int stages = 1;

    auto* g = app.add_subcommand("group", "subgroup classes, normalizers, Weyl orders");
    g->add_option("spec", spec, "group spec (file, JSON or name)")->required();

    auto* m = app.add_subcommand("marks", "table of marks");
    m->add_option("spec", spec)->required();

    auto* c = app.add_subcommand("check", "ghost vector membership and residues");
    c->add_option("spec", spec)->required();
    c->add_option("ghost", file_a, "JSON file with values")->required();

    auto* e = app.add_subcommand("euler", "equivariant Euler class of a cell census");
    e->add_option("complex", file_a, "complex JSON file")->required();

    auto* l = app.add_subcommand("lefschetz", "equivariant Lefschetz class of a chain package");
    l->add_option("package", file_a, "chain package JSON file")->required();
    l->add_option("--complex", file_b, "census to validate against; also prints the degree class");

    auto* li = app.add_subcommand("limit", "inverse limit over a diagram of finite groups");
    li->add_option("diagram", file_a, "diagram JSON file")->required();

    auto* co = app.add_subcommand("covariant", "L2 characters and integrality");
    co->add_option("fusion", file_a, "fusion data JSON file")->required();
    co->add_option("element", file_b, "rational values over the labels");

    auto* cp = app.add_subcommand("completion", "invariant factors of A/I^n");
    cp->add_option("spec", spec)->required();
    cp->add_option("n", stages, "number of stages")->required()->check(CLI::PositiveNumber);

    auto* ar = app.add_subcommand("artin", "Artin induction identity");
    ar->add_option("spec", spec)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (g->parsed()) return cmd_group(spec, opt);
        if (m->parsed()) return cmd_marks(spec, opt);
        if (c->parsed()) return cmd_check(spec, file_a, opt);
        if (e->parsed()) return cmd_euler(file_a, opt);
        if (l->parsed()) return cmd_lefschetz(file_a, file_b, opt);
        if (li->parsed()) return cmd_limit(file_a, opt);
        if (co->parsed()) return cmd_covariant(file_a, file_b, opt);
        if (cp->parsed()) return cmd_completion(spec, stages, opt);
        if (ar->parsed()) return cmd_artin(spec, opt);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    return 2;
}
