#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "springer/json_io.hpp"

using namespace springer;

namespace {

// exit codes: 0 success, 1 domain error, 2 malformed input
constexpr int kDomainError = 1;
constexpr int kBadInput = 2;

GroupLabel parse_group_args(const std::string& family, int rank)
{
    auto f = parse_family(family);
    if (!f)
        throw std::invalid_argument("unknown family: " + family);
    return make_group(*f, rank);
}

ExtendedWeylGroup::Pi0 parse_pi0_name(const std::string& s)
{
    if (s == "trivial") return ExtendedWeylGroup::Pi0::Trivial;
    if (s == "flip") return ExtendedWeylGroup::Pi0::Flip;
    if (s == "triality") return ExtendedWeylGroup::Pi0::Triality;
    if (s == "full") return ExtendedWeylGroup::Pi0::Full;
    throw std::invalid_argument("unknown pi0 spec: " + s +
                                " (expected trivial|flip|triality|full or perm:...)");
}

ExtendedWeylGroup make_ext_group(const std::string& family, int rank,
                                 const std::string& pi0)
{
    auto f = parse_family(family);
    if (!f)
        throw std::invalid_argument("unknown family: " + family);
    if (pi0.rfind("perm:", 0) == 0) {
        // explicit generators, e.g. perm:1,0,2;2,1,0
        std::vector<std::vector<int>> gens;
        std::string body = pi0.substr(5);
        std::stringstream ss(body);
        std::string part;
        while (std::getline(ss, part, ';')) {
            std::vector<int> p;
            std::stringstream ps(part);
            std::string tok;
            while (std::getline(ps, tok, ','))
                p.push_back(std::stoi(tok));
            gens.push_back(std::move(p));
        }
        return ExtendedWeylGroup(*f, rank, gens);
    }
    return ExtendedWeylGroup(*f, rank, parse_pi0_name(pi0));
}

std::vector<int> mask_to_subset(unsigned long long mask, int rank)
{
    std::vector<int> X;
    for (int i = 0; i < rank; i++)
        if (mask & (1ULL << i))
            X.push_back(i);
    if (mask >= (1ULL << rank))
        throw std::invalid_argument("subset mask out of range for rank " +
                                    std::to_string(rank));
    return X;
}

json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    json j;
    in >> j;
    return j;
}

void emit(const json& j, const std::string& format)
{
    if (format == "json") {
        std::cout << j.dump(2) << "\n";
        return;
    }
    // simple aligned table rendering of arrays of flat objects / scalars
    if (j.is_array()) {
        for (const auto& row : j) {
            if (row.is_object()) {
                bool first = true;
                for (auto it = row.begin(); it != row.end(); ++it) {
                    if (!first) std::cout << "  ";
                    std::cout << it.key() << "="
                              << (it.value().is_string()
                                      ? it.value().get<std::string>()
                                      : it.value().dump());
                    first = false;
                }
                std::cout << "\n";
            } else {
                std::cout << (row.is_string() ? row.get<std::string>() : row.dump())
                          << "\n";
            }
        }
        return;
    }
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it)
            std::cout << it.key() << ": "
                      << (it.value().is_string() ? it.value().get<std::string>()
                                                 : it.value().dump())
                      << "\n";
        return;
    }
    std::cout << j.dump() << "\n";
}

Partition parse_partition_option(const std::string& s)
{
    std::vector<int> parts;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        parts.push_back(std::stoi(tok));
    return Partition(parts);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact combinatorics of nilpotent orbits, cuspidal data, Weyl "
                 "double cosets and twisted extended quotients"};
    app.require_subcommand(0, 1);

    std::string format = "json";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "table"}));
    std::string schema;
    app.add_option("--schema", schema, "print the JSON schema for an input type and exit");

    // orbits
    auto* orbits_cmd = app.add_subcommand("orbits", "nilpotent orbits of a group");
    std::string family;
    int rank = 0;
    bool count_only = false;
    orbits_cmd->add_option("family", family)->required();
    orbits_cmd->add_option("rank", rank);
    orbits_cmd->add_flag("--count", count_only, "print only the number of orbits");

    // component-group
    auto* comp_cmd = app.add_subcommand("component-group", "A(O) of an orbit");
    std::string comp_family, comp_partition, comp_tag, comp_name;
    int comp_rank = 0;
    bool comp_census = false;
    comp_cmd->add_option("family", comp_family)->required();
    comp_cmd->add_option("rank", comp_rank);
    comp_cmd->add_option("--partition", comp_partition, "classical orbit partition, e.g. 3,1");
    comp_cmd->add_option("--tag", comp_tag)->check(CLI::IsMember({"I", "II"}));
    comp_cmd->add_option("--orbit-name", comp_name, "Bala-Carter name for exceptional groups");
    comp_cmd->add_flag("--census", comp_census, "multiset of A(O) over all orbits (exceptional)");

    // cuspidal
    auto* cusp_cmd = app.add_subcommand("cuspidal", "cuspidal local systems");
    std::string cusp_family;
    int cusp_rank = 0;
    bool cusp_count = false, cusp_levi = false;
    cusp_cmd->add_option("family", cusp_family)->required();
    cusp_cmd->add_option("rank", cusp_rank);
    cusp_cmd->add_flag("--count", cusp_count);
    cusp_cmd->add_flag("--levi-data", cusp_levi, "cuspidal data on standard Levi shapes");

    // support
    auto* supp_cmd = app.add_subcommand("support", "exceptional cuspidal support");
    std::string supp_family, supp_orbit, supp_sym;
    int supp_chi = 0;
    supp_cmd->add_option("family", supp_family)->required();
    supp_cmd->add_option("--orbit", supp_orbit)->required();
    supp_cmd->add_option("--chi", supp_chi, "central character exponent");
    supp_cmd->add_option("--sym", supp_sym, "symmetric-group label as a partition, e.g. 1,1,1");

    // parabolics
    auto* para_cmd = app.add_subcommand("parabolics", "parabolic pairs (X, Omega)");
    std::string para_family, para_pi0 = "trivial";
    int para_rank = 0;
    bool para_classes = false;
    para_cmd->add_option("family", para_family)->required();
    para_cmd->add_option("rank", para_rank)->required();
    para_cmd->add_option("--pi0", para_pi0);
    para_cmd->add_flag("--classes", para_classes, "group into pi0-conjugacy classes");

    // quasi-levis
    auto* ql_cmd = app.add_subcommand("quasi-levis", "quasi-Levi labels per subset");
    std::string ql_family, ql_pi0 = "trivial";
    int ql_rank = 0;
    ql_cmd->add_option("family", ql_family)->required();
    ql_cmd->add_option("rank", ql_rank)->required();
    ql_cmd->add_option("--pi0", ql_pi0);

    // double-cosets
    auto* dc_cmd = app.add_subcommand("double-cosets", "minimal double coset representatives");
    std::string dc_family, dc_pi0 = "trivial";
    int dc_rank = 0;
    unsigned long long dc_m = 0, dc_l = 0;
    bool dc_count = false;
    dc_cmd->add_option("family", dc_family)->required();
    dc_cmd->add_option("rank", dc_rank)->required();
    dc_cmd->add_option("--pi0", dc_pi0);
    dc_cmd->add_option("--M", dc_m, "bitmask of simple roots for the left Levi")->required();
    dc_cmd->add_option("--L", dc_l, "bitmask of simple roots for the right Levi")->required();
    dc_cmd->add_flag("--count", dc_count);

    // mackey
    auto* mk_cmd = app.add_subcommand("mackey", "Mackey decomposition terms");
    std::string mk_family, mk_pi0 = "trivial";
    int mk_rank = 0;
    unsigned long long mk_m = 0, mk_l = 0;
    std::string mk_omega_m, mk_omega_l;
    bool mk_count = false;
    mk_cmd->add_option("family", mk_family)->required();
    mk_cmd->add_option("rank", mk_rank)->required();
    mk_cmd->add_option("--pi0", mk_pi0);
    mk_cmd->add_option("--M", mk_m)->required();
    mk_cmd->add_option("--L", mk_l)->required();
    mk_cmd->add_option("--omega-M", mk_omega_m, "pi0 element indices, comma separated");
    mk_cmd->add_option("--omega-L", mk_omega_l);
    mk_cmd->add_flag("--count", mk_count);

    // chartable
    auto* ct_cmd = app.add_subcommand("chartable", "exact character table");
    std::string ct_file;
    int ct_sym = 0, ct_cyclic = 0, ct_dihedral = 0;
    bool ct_klein = false, ct_quat = false;
    ct_cmd->add_option("--file", ct_file, "group JSON file");
    ct_cmd->add_option("--sym", ct_sym, "symmetric group S_n");
    ct_cmd->add_option("--cyclic", ct_cyclic);
    ct_cmd->add_option("--dihedral", ct_dihedral, "dihedral group of order 2n");
    ct_cmd->add_flag("--klein", ct_klein);
    ct_cmd->add_flag("--quaternion", ct_quat);

    // twisted-irreps
    auto* tw_cmd = app.add_subcommand("twisted-irreps", "irreducibles of C[G, kappa]");
    std::string tw_group, tw_cocycle;
    tw_cmd->add_option("--group", tw_group)->required();
    tw_cmd->add_option("--cocycle", tw_cocycle)->required();

    // extquot
    auto* eq_cmd = app.add_subcommand("extquot", "twisted extended quotient of an action");
    std::string eq_file;
    bool eq_validate = false;
    eq_cmd->add_option("input", eq_file, "JSON document")->required();
    eq_cmd->add_flag("--validate", eq_validate, "report violations instead of building");

    // bernstein
    auto* bn_cmd = app.add_subcommand("bernstein", "dual Bernstein variety assembly");
    auto* bn_asm = bn_cmd->add_subcommand("assemble", "assemble blocks from a catalog");
    std::string bn_file;
    bool bn_grouped = false;
    bn_asm->add_option("catalog", bn_file)->required();
    bn_asm->add_flag("--group-by-levi", bn_grouped);

    for (auto* sub : app.get_subcommands(
             [](const CLI::App*) { return true; })) {
        sub->fallthrough();
        for (auto* nested : sub->get_subcommands([](const CLI::App*) { return true; }))
            nested->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e); // --help
        app.exit(e);
        return kBadInput;
    }

    try {
        if (!schema.empty()) {
            std::cout << input_schema(schema) << "\n";
            return 0;
        }
        if (app.get_subcommands().empty()) {
            std::cerr << app.help();
            return kBadInput;
        }

        if (orbits_cmd->parsed()) {
            auto g = parse_group_args(family, rank);
            auto orbits = enumerate_orbits(g);
            if (count_only) {
                emit(json(orbits.size()), format);
                return 0;
            }
            json out = json::array();
            for (const auto& o : orbits)
                out.push_back(to_json(g, o));
            emit(out, format);
        } else if (comp_cmd->parsed()) {
            auto g = parse_group_args(comp_family, comp_rank);
            if (comp_census) {
                json out = json::array();
                for (const auto& [cg, cnt] : exceptional_census(g))
                    out.push_back({{"a_group", to_json(cg)}, {"count", cnt}});
                emit(out, format);
                return 0;
            }
            OrbitLabel o;
            if (!comp_name.empty()) {
                o = ExceptionalOrbit{comp_name};
            } else if (!comp_partition.empty()) {
                ClassicalOrbit c;
                c.partition = parse_partition_option(comp_partition);
                if (comp_tag == "I") c.tag = VeryEvenTag::I;
                if (comp_tag == "II") c.tag = VeryEvenTag::II;
                o = c;
            } else {
                throw std::invalid_argument("need --partition or --orbit-name");
            }
            auto cg = component_group(g, o);
            json out = to_json(cg);
            out["display"] = cg.to_string();
            emit(out, format);
        } else if (cusp_cmd->parsed()) {
            auto g = parse_group_args(cusp_family, cusp_rank);
            if (cusp_levi) {
                json out = json::array();
                for (const auto& d : cuspidal_levi_data(g))
                    out.push_back(to_json(d));
                emit(out, format);
                return 0;
            }
            auto sys = cuspidal_systems(g);
            if (cusp_count) {
                emit(json(sys.systems.size()), format);
                for (const auto& w : sys.warnings)
                    std::cerr << "warning: " << w << "\n";
                return 0;
            }
            json out;
            out["systems"] = json::array();
            for (const auto& s : sys.systems)
                out["systems"].push_back(to_json(s));
            if (!sys.warnings.empty())
                out["warnings"] = sys.warnings;
            emit(out, format);
            for (const auto& w : sys.warnings)
                std::cerr << "warning: " << w << "\n";
        } else if (supp_cmd->parsed()) {
            auto g = parse_group_args(supp_family, 0);
            Enhancement e;
            e.orbit = supp_orbit;
            e.central_exponent = supp_chi;
            if (!supp_sym.empty())
                e.sym_label = parse_partition_option(supp_sym);
            emit(to_json(cuspidal_support_exceptional(g, e)), format);
        } else if (para_cmd->parsed()) {
            auto g = make_ext_group(para_family, para_rank, para_pi0);
            auto pairs = enumerate_parabolic_pairs(g);
            if (para_classes) {
                json out = json::array();
                for (const auto& cls : parabolic_pair_classes(g)) {
                    json c = json::array();
                    for (int i : cls)
                        c.push_back(to_json(g, pairs[i]));
                    out.push_back(std::move(c));
                }
                emit(out, format);
                return 0;
            }
            json out = json::array();
            for (const auto& p : pairs)
                out.push_back(to_json(g, p));
            emit(out, format);
        } else if (ql_cmd->parsed()) {
            auto g = make_ext_group(ql_family, ql_rank, ql_pi0);
            json out = json::array();
            for (int mask = 0; mask < (1 << g.rank()); mask++)
                out.push_back(to_json(quasi_levi(g, mask_to_subset(mask, g.rank()))));
            emit(out, format);
        } else if (dc_cmd->parsed()) {
            auto g = make_ext_group(dc_family, dc_rank, dc_pi0);
            auto X_M = mask_to_subset(dc_m, g.rank());
            auto X_L = mask_to_subset(dc_l, g.rank());
            auto reps = double_cosets(g, X_M, X_L);
            if (dc_count) {
                emit(json(reps.size()), format);
                return 0;
            }
            json out = json::array();
            for (const auto& w : reps) {
                json r;
                r["length"] = g.length(w);
                r["theta"] = w.theta;
                r["dim_QwP"] = dim_QwP(g, X_M, w, X_L);
                json perm = json::array();
                for (int16_t v : w.perm)
                    perm.push_back(v);
                r["root_permutation"] = perm;
                out.push_back(std::move(r));
            }
            emit(out, format);
        } else if (mk_cmd->parsed()) {
            auto g = make_ext_group(mk_family, mk_rank, mk_pi0);
            auto parse_omega = [&](const std::string& s) {
                std::vector<int> om{0};
                if (!s.empty()) {
                    std::stringstream ss(s);
                    std::string tok;
                    while (std::getline(ss, tok, ','))
                        om.push_back(std::stoi(tok));
                }
                std::sort(om.begin(), om.end());
                om.erase(std::unique(om.begin(), om.end()), om.end());
                return om;
            };
            ParabolicPair Q{mask_to_subset(mk_m, g.rank()), parse_omega(mk_omega_m)};
            ParabolicPair P{mask_to_subset(mk_l, g.rank()), parse_omega(mk_omega_l)};
            auto terms = mackey_terms(g, Q, P);
            if (mk_count) {
                emit(json(terms.size()), format);
                return 0;
            }
            json out = json::array();
            for (const auto& t : terms)
                out.push_back(to_json(g, t));
            emit(out, format);
        } else if (ct_cmd->parsed()) {
            FiniteGroup grp;
            if (!ct_file.empty())
                grp = finite_group_from_json(read_json_file(ct_file));
            else if (ct_sym > 0)
                grp = FiniteGroup::symmetric(ct_sym);
            else if (ct_cyclic > 0)
                grp = FiniteGroup::cyclic(ct_cyclic);
            else if (ct_dihedral > 0)
                grp = FiniteGroup::dihedral(ct_dihedral);
            else if (ct_klein)
                grp = FiniteGroup::klein_four();
            else if (ct_quat)
                grp = FiniteGroup::quaternion8();
            else
                throw std::invalid_argument("chartable: no group specified");
            auto tbl = character_table(grp);
            json out;
            out["degrees"] = tbl.degrees;
            json classes = json::array();
            for (const auto& c : tbl.classes)
                classes.push_back({{"representative", c[0]}, {"size", c.size()}});
            out["classes"] = classes;
            json rows = json::array();
            for (const auto& row : tbl.values) {
                json r = json::array();
                for (const auto& v : row)
                    r.push_back(v.to_string());
                rows.push_back(std::move(r));
            }
            out["values"] = rows;
            emit(out, format);
        } else if (tw_cmd->parsed()) {
            auto grp = finite_group_from_json(read_json_file(tw_group));
            auto k = cocycle_from_json(read_json_file(tw_cocycle));
            auto tw = twisted_irreps(grp, k);
            json out;
            out["count"] = tw.count;
            out["degrees"] = tw.degrees;
            out["regular_classes"] = tw.regular_classes;
            json rows = json::array();
            for (const auto& row : tw.traces) {
                json r = json::array();
                for (const auto& v : row)
                    r.push_back(v.to_string());
                rows.push_back(std::move(r));
            }
            out["traces"] = rows;
            emit(out, format);
        } else if (eq_cmd->parsed()) {
            auto doc = extquot_document_from_json(read_json_file(eq_file));
            if (eq_validate) {
                json out = json::array();
                for (const auto& v : validate(doc.action, doc.data))
                    out.push_back({{"condition", v.condition},
                                   {"gamma", v.gamma},
                                   {"x", v.x},
                                   {"detail", v.detail}});
                emit(out, format);
                return 0;
            }
            json out = json::array();
            for (const auto& p : build(doc.action, doc.data))
                out.push_back(to_json(p));
            emit(out, format);
        } else if (bn_cmd->parsed()) {
            if (!bn_asm->parsed())
                throw std::invalid_argument("bernstein: expected the assemble subcommand");
            auto catalog = catalog_from_json(read_json_file(bn_file));
            if (bn_grouped) {
                json out = json::array();
                for (const auto& e : catalog) {
                    json entry;
                    entry["levi"] = e.levi_id;
                    json pts = json::array();
                    for (const auto& p : assemble_entry_grouped(e)) {
                        json q = to_json(p.point);
                        q["label"] = p.label_name;
                        if (!p.char_tag.empty()) q["char_tag"] = p.char_tag;
                        if (!p.shift_tag.empty()) q["shift_tag"] = p.shift_tag;
                        pts.push_back(std::move(q));
                    }
                    entry["points"] = pts;
                    out.push_back(std::move(entry));
                }
                emit(out, format);
                return 0;
            }
            json out = json::array();
            for (const auto& b : assemble_all(catalog))
                out.push_back(to_json(b));
            emit(out, format);
        }
        return 0;
    } catch (const json::exception& e) {
        std::cerr << "error[input]: " << e.what() << "\n";
        return kBadInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error[domain]: " << e.what() << "\n";
        return kDomainError;
    } catch (const std::domain_error& e) {
        std::cerr << "error[domain]: " << e.what() << "\n";
        return kDomainError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    }
}
