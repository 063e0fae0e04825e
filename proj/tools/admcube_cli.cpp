// Batch front door: parse instance files, dispatch checks, emit
// deterministic JSON reports. Exit codes: 0 = check ran and passed,
// 1 = a property or implication failed (witness emitted), 2 = input or
// schema error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "admcube/io.hpp"
#include "admcube/selftest.hpp"

using namespace admcube;

namespace {

constexpr const char* kVersion = "0.1.0";

struct Options {
    std::string input;
    std::string report_path;
    uint64_t seed = 0;
    std::string size = "small";
    std::string method = "all";
    std::string ring_override;
};

Ring override_ring(const std::string& spec) {
    if (spec == "z") return Ring::integers();
    if (spec == "q") return Ring::rationals();
    if (spec.size() > 1 && spec[0] == 'f') return Ring::prime_field(Int(spec.substr(1)));
    if (spec.size() > 1 && spec[0] == 'm') return Ring::integers_mod(Int(spec.substr(1)));
    throw Error("--ring-override: expected z, q, f<p> or m<n>, got '" + spec + "'");
}

struct LoadedInstance {
    Instance inst;
    std::string raw;
};

LoadedInstance load(const Options& opt) {
    if (opt.input.empty()) throw Error("--input is required for this command");
    std::ifstream in(opt.input);
    if (!in) throw Error("cannot open input file " + opt.input);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string raw = buf.str();
    Json j;
    try {
        j = Json::parse(raw);
    } catch (const std::exception& e) {
        throw Error(std::string("input is not valid JSON: ") + e.what());
    }
    Instance inst = parse_instance(j);
    if (!opt.ring_override.empty()) inst.ring = override_ring(opt.ring_override);
    return LoadedInstance{std::move(inst), std::move(raw)};
}

int emit(const std::string& command, const std::string& raw, const Json& result, bool passed,
         const Options& opt) {
    Json report;
    report["command"] = command;
    report["input_digest"] = digest_hex(raw);
    report["tool_version"] = kVersion;
    report["passed"] = passed;
    report["result"] = result;
    std::string text = report.dump(2);
    std::cout << text << "\n";
    if (!opt.report_path.empty()) {
        std::ofstream out(opt.report_path);
        if (!out) throw Error("cannot write report file " + opt.report_path);
        out << text << "\n";
    }
    return passed ? 0 : 1;
}

Json invariants_json(const FPModule& m) {
    Json arr = Json::array();
    for (const Elem& e : m.invariants()) arr.push_back(to_string(e));
    return arr;
}

Cube expect_cube(const Instance& inst) {
    if (inst.kind != "cube") throw Error("command expects a 'cube' instance");
    return cube_from_json(inst.ring, inst.payload);
}

int cmd_check(const Options& opt) {
    LoadedInstance li = load(opt);
    Cube x = expect_cube(li.inst);
    CubeReport v = validate(x);
    Json res;
    res["valid"] = v.valid;
    if (!v.valid) {
        res["witness"] = v.witness;
        return emit("check", li.raw, res, false, opt);
    }
    res["monic"] = v.monic;
    bool pass = true;
    if (opt.method == "all") {
        AdmReport r1 = is_admissible(x, AdmMethod::Recursive);
        AdmReport r2 = is_admissible(x, AdmMethod::Faces0Spherical);
        AdmReport r3 = is_admissible(x, AdmMethod::AllRestrictions);
        res["admissible"] = r1.admissible;
        res["methods_agree"] = (r1.admissible == r2.admissible && r2.admissible == r3.admissible);
        if (!r1.admissible) res["witness"] = r1.witness;
        pass = res["methods_agree"].get<bool>();
        if (r1.admissible && !is_fibered(x).fibered) {
            res["fibered"] = false;
            pass = false;  // admissible cubes must be fibered
        } else {
            res["fibered"] = is_fibered(x).fibered;
        }
    } else {
        AdmMethod m = opt.method == "recursive"    ? AdmMethod::Recursive
                      : opt.method == "faces"      ? AdmMethod::Faces0Spherical
                      : opt.method == "restrictions" ? AdmMethod::AllRestrictions
                                                     : throw Error("--method: unknown value");
        AdmReport r = is_admissible(x, m);
        res["admissible"] = r.admissible;
        if (!r.admissible) res["witness"] = r.witness;
        res["fibered"] = is_fibered(x).fibered;
    }
    return emit("check", li.raw, res, pass, opt);
}

int cmd_tot(const Options& opt) {
    LoadedInstance li = load(opt);
    Cube x = expect_cube(li.inst);
    CubeReport v = validate(x);
    if (!v.valid) throw Error("tot: invalid cube: " + v.witness);
    ChainComplex tot = total_complex(x);
    Json res;
    res["complex"] = complex_to_json(tot);
    Json hom;
    for (int k = tot.lo(); k <= tot.hi(); ++k) {
        hom["H_" + std::to_string(k)] = invariants_json(homology(tot, k));
    }
    res["homology"] = hom;
    return emit("tot", li.raw, res, true, opt);
}

int cmd_homology(const Options& opt) {
    LoadedInstance li = load(opt);
    if (li.inst.kind != "complex" && li.inst.kind != "be-complex") {
        throw Error("homology expects a 'complex' instance");
    }
    ChainComplex c = complex_from_json(li.inst.ring, [&] {
        Json j = li.inst.payload;
        j.erase("ring");
        j.erase("kind");
        return j;
    }());
    Json res;
    for (int k = c.lo(); k <= c.hi(); ++k) {
        res["H_" + std::to_string(k)] = invariants_json(homology(c, k));
    }
    return emit("homology", li.raw, res, true, opt);
}

int cmd_koszul(const Options& opt) {
    LoadedInstance li = load(opt);
    if (li.inst.kind != "koszul") throw Error("koszul expects a 'koszul' instance");
    require_keys(li.inst.payload, {"ring", "kind", "elements"}, "koszul");
    std::vector<Elem> fs;
    for (const Json& e : li.inst.payload.at("elements")) {
        fs.push_back(parse_elem(li.inst.ring, e.get<std::string>()));
    }
    ChainComplex k = koszul_complex(li.inst.ring, fs);
    Json res;
    res["complex"] = complex_to_json(k);
    Json hom;
    for (int d = k.lo(); d <= k.hi(); ++d) {
        hom["H_" + std::to_string(d)] = invariants_json(homology(k, d));
    }
    res["homology"] = hom;
    res["spherical_0"] = is_spherical(k, 0).spherical;
    return emit("koszul", li.raw, res, true, opt);
}

int cmd_fib(const Options& opt) {
    LoadedInstance li = load(opt);
    if (li.inst.kind != "family") throw Error("fib expects a 'family' instance");
    require_keys(li.inst.payload, {"ring", "kind", "ambient", "members", "y"}, "family");
    FPModule amb = module_from_json(li.inst.ring, li.inst.payload.at("ambient"));
    std::vector<std::string> labels;
    std::vector<Morphism> fx;
    std::vector<Subobject> subs;
    for (auto it = li.inst.payload.at("members").begin();
         it != li.inst.payload.at("members").end(); ++it) {
        labels.push_back(it.key());
        Matrix gens = matrix_from_json(li.inst.ring, *it);
        Subobject s(amb, gens);
        subs.push_back(s);
        FPModule src = FPModule::free_module(li.inst.ring, gens.cols());
        Subquotient im = image(Morphism(src, amb, gens));
        fx.push_back(im.map);
    }
    CubeIndex idx(labels);
    FibCube fib = fib_of_family(idx, fx);
    Json res;
    res["cube"] = cube_to_json(fib.cube);
    bool fibered = is_fibered(fib.cube).fibered;
    res["fibered"] = fibered;
    bool adm = is_admissible(fib.cube, AdmMethod::Recursive).admissible;
    res["admissible"] = adm;
    bool pass = fibered;
    // Fib admissibility matches universal admissibility of the family
    try {
        SubobjectLattice lat(amb, subs, true, 512);
        std::vector<std::pair<std::string, int>> members;
        for (std::size_t i = 0; i < subs.size(); ++i) {
            members.emplace_back(labels[i], lat.id_of(subs[i]));
        }
        ElementFamily fam = make_family(lat, members);
        bool uni = family_class(fam, FamilyMode::UniversallyAdmissible).holds;
        res["family_universally_admissible"] = uni;
        pass = pass && (uni == adm);
    } catch (const Error& e) {
        res["lattice_note"] = e.what();
    }
    return emit("fib", li.raw, res, pass, opt);
}

std::pair<Cube, CubeAdjugate> load_bundle(const Instance& inst) {
    if (inst.kind != "adjugate-bundle") throw Error("command expects an 'adjugate-bundle'");
    require_keys(inst.payload, {"ring", "kind", "cube", "adjugate"}, "adjugate-bundle");
    Json cj = inst.payload.at("cube");
    cj["ring"] = ring_to_json(inst.ring);
    cj["kind"] = "cube";
    Cube x = cube_from_json(inst.ring, cj);
    CubeAdjugate a = adjugate_from_json(x, inst.payload.at("adjugate"));
    return {std::move(x), std::move(a)};
}

int cmd_adjugate_verify(const Options& opt) {
    LoadedInstance li = load(opt);
    auto [x, a] = load_bundle(li.inst);
    bool want_regular = opt.method == "regular";
    AdjugateReport r = verify_adjugate(x, a, want_regular);
    Json res;
    res["axioms_ok"] = r.ok;
    if (want_regular) res["regular"] = r.regular;
    if (!r.witness.empty()) res["witness"] = r.witness;
    bool pass = r.ok && (!want_regular || r.regular);
    return emit("adjugate-verify", li.raw, res, pass, opt);
}

int cmd_adjugate_construct(const Options& opt) {
    LoadedInstance li = load(opt);
    Cube x = expect_cube(li.inst);
    CubeReport v = validate(x);
    if (!v.valid) throw Error("adjugate-construct: invalid cube: " + v.witness);
    CubeAdjugate a = cofactor_adjugate(x);
    AdjugateReport r = verify_adjugate(x, a, true);
    Json res;
    res["adjugate"] = adjugate_to_json(x.index(), a);
    res["axioms_ok"] = r.ok;
    res["regular"] = r.regular;
    return emit("adjugate-construct", li.raw, res, r.ok, opt);
}

int cmd_main_theorem(const Options& opt) {
    LoadedInstance li = load(opt);
    auto [x, a] = load_bundle(li.inst);
    MainTheoremReport r = main_theorem_check(x, a);
    Json res;
    res["adjugate_ok"] = r.adjugate_ok;
    res["regular"] = r.regular;
    res["monic"] = r.monic;
    Json per;
    for (const auto& [key, val] : r.patched_admissible) per["{" + key + "}"] = val;
    res["patched_admissible"] = per;
    res["all_admissible"] = r.all_admissible;
    res["theorem_holds"] = r.theorem_holds;
    if (!r.witness.empty()) res["witness"] = r.witness;
    return emit("main-theorem", li.raw, res, r.theorem_holds, opt);
}

int cmd_dct(const Options& opt) {
    LoadedInstance li = load(opt);
    if (li.inst.kind != "double") throw Error("dct expects a 'double' instance");
    DoubleCube x = double_cube_from_json(li.inst.ring, li.inst.payload);
    Json res;
    bool pass = true;
    auto run = [&](DctVariant v, const char* name) {
        DctReport r = dct_check(x, v);
        Json jr;
        for (const auto& [key, val] : r.hypotheses) jr["hypothesis_" + key] = val;
        jr["hypotheses_all"] = r.hypotheses_all;
        jr["conclusion"] = r.conclusion;
        jr["implication_ok"] = r.implication_ok;
        if (!r.witness.empty()) jr["witness"] = r.witness;
        res[name] = jr;
        pass = pass && r.implication_ok;
    };
    if (opt.method == "all" || opt.method == "dct") run(DctVariant::Dct, "dct");
    if (opt.method == "all" || opt.method == "bigadm") run(DctVariant::BigAdm, "big_adm");
    return emit("dct", li.raw, res, pass, opt);
}

int cmd_be(const Options& opt) {
    LoadedInstance li = load(opt);
    if (li.inst.kind != "complex" && li.inst.kind != "be-complex") {
        throw Error("be expects a 'complex' or 'be-complex' instance");
    }
    Json cj = li.inst.payload;
    cj.erase("ring");
    cj.erase("kind");
    ChainComplex f = complex_from_json(li.inst.ring, cj);
    BeMode mode = opt.method == "equivalence" ? BeMode::EquivalenceTest : BeMode::CriterionOnly;
    BeReport r = be_check(f, mode);
    Json res;
    Json ranks = Json::array(), fit = Json::array(), grades = Json::array();
    for (std::size_t i = 0; i < r.ranks.size(); ++i) {
        ranks.push_back(r.ranks[i]);
        Json gens = Json::array();
        for (const Elem& e : r.fitting[i].generators) gens.push_back(to_string(e));
        Json ideal;
        ideal["generators"] = gens;
        ideal["canonical"] = to_string(r.fitting[i].canonical);
        fit.push_back(ideal);
        grades.push_back(r.grades[i].to_string());
        if (!r.grades[i].at_least(static_cast<int>(i) + 1) && !res.contains("witness")) {
            res["witness"] = "grade too small at i = " + std::to_string(i + 1);
        }
    }
    res["r"] = ranks;
    res["fitting"] = fit;
    res["grades"] = grades;
    res["spherical"] = r.spherical;
    res["criterion"] = r.criterion;
    bool pass = r.criterion;
    if (mode == BeMode::EquivalenceTest) {
        res["equivalent"] = r.equivalent;
        pass = r.equivalent;
    }
    return emit("be", li.raw, res, pass, opt);
}

int cmd_lattice(const Options& opt) {
    LoadedInstance li = load(opt);
    Json res;
    bool pass = true;
    auto family_report = [&](ElementFamily& fam) {
        Json jf;
        jf["strictly_distributive"] = family_class(fam, FamilyMode::StrictlyDistributive).holds;
        jf["admissible"] = family_class(fam, FamilyMode::Admissible).holds;
        jf["universally_admissible"] =
            family_class(fam, FamilyMode::UniversallyAdmissible).holds;
        jf["regular_sequence"] = family_class(fam, FamilyMode::RegularSequence).holds;
        if (fam.n() <= 4 && fam.lat->top()) {
            IdealMapReport im = ideal_map_check(fam);
            Json ji;
            ji["sublattice_distributive"] = im.sublattice_distributive;
            ji["map_preserves_meets"] = im.map_preserves_meets;
            ji["meet_family_admissible"] = im.meet_family_admissible;
            ji["implications_ok"] = im.implications_ok;
            jf["ideal_map"] = ji;
            pass = pass && im.implications_ok;
        }
        return jf;
    };
    if (li.inst.kind == "lattice") {
        require_keys(li.inst.payload, {"kind", "elements", "leq", "family", "y"}, "lattice");
        std::vector<std::string> names;
        for (const Json& n : li.inst.payload.at("elements")) names.push_back(n.get<std::string>());
        std::vector<std::vector<bool>> leq;
        for (const Json& row : li.inst.payload.at("leq")) {
            leq.emplace_back();
            for (const Json& b : row) leq.back().push_back(b.get<bool>());
        }
        FiniteLattice lat(names, leq);
        ModularReport m = is_modular(lat);
        ModularReport c = modular_cancellation(lat);
        res["modular"] = m.modular;
        if (!m.modular) res["modular_witness"] = m.witness;
        res["semi_modular_law"] = semi_modular_law_holds(lat);
        pass = (m.modular == c.modular) && res["semi_modular_law"].get<bool>();
        if (li.inst.payload.contains("family")) {
            std::vector<std::pair<std::string, int>> members;
            for (auto it = li.inst.payload.at("family").begin();
                 it != li.inst.payload.at("family").end(); ++it) {
                members.emplace_back(it.key(), lat.id_of(it->get<std::string>()));
            }
            ElementFamily fam = make_family(lat, members);
            res["family"] = family_report(fam);
            if (li.inst.payload.contains("y")) {
                int y = lat.id_of(li.inst.payload.at("y").get<std::string>());
                TransferReport tr = transfer_check_prop(fam, y);
                Json jt;
                jt["adm_implication_ok"] = tr.adm.implication_ok;
                jt["univ_implication_ok"] = tr.univ.implication_ok;
                res["transfer_prop"] = jt;
                pass = pass && tr.adm.implication_ok && tr.univ.implication_ok;
            }
        }
    } else if (li.inst.kind == "family") {
        require_keys(li.inst.payload, {"ring", "kind", "ambient", "members", "y"}, "family");
        FPModule amb = module_from_json(li.inst.ring, li.inst.payload.at("ambient"));
        std::vector<Subobject> subs;
        std::vector<std::string> labels;
        for (auto it = li.inst.payload.at("members").begin();
             it != li.inst.payload.at("members").end(); ++it) {
            labels.push_back(it.key());
            subs.emplace_back(amb, matrix_from_json(li.inst.ring, *it));
        }
        SubobjectLattice lat(amb, subs, true, 512);
        ModularReport m = is_modular(lat);
        res["modular"] = m.modular;
        res["semi_modular_law"] = semi_modular_law_holds(lat);
        res["closure_size"] = lat.size();
        pass = m.modular && res["semi_modular_law"].get<bool>();
        std::vector<std::pair<std::string, int>> members;
        for (std::size_t i = 0; i < subs.size(); ++i) {
            members.emplace_back(labels[i], lat.id_of(subs[i]));
        }
        ElementFamily fam = make_family(lat, members);
        res["family"] = family_report(fam);
        if (li.inst.payload.contains("y")) {
            Subobject y(amb, matrix_from_json(li.inst.ring, li.inst.payload.at("y")));
            SubobjectLattice lat2(amb, [&] {
                std::vector<Subobject> all = subs;
                all.push_back(y);
                return all;
            }(), true, 512);
            std::vector<std::pair<std::string, int>> mem2;
            for (std::size_t i = 0; i < subs.size(); ++i) {
                mem2.emplace_back(labels[i], lat2.id_of(subs[i]));
            }
            ElementFamily fam2 = make_family(lat2, mem2);
            TransferReport tr = transfer_check_prop(fam2, lat2.id_of(y));
            Json jt;
            jt["adm_implication_ok"] = tr.adm.implication_ok;
            jt["univ_implication_ok"] = tr.univ.implication_ok;
            res["transfer_prop"] = jt;
            pass = pass && tr.adm.implication_ok && tr.univ.implication_ok;
        }
    } else {
        throw Error("lattice expects a 'lattice' or 'family' instance");
    }
    return emit("lattice", li.raw, res, pass, opt);
}

int cmd_selftest(const Options& opt) {
    SuiteBudget budget = opt.size == "medium" ? medium_budget() : small_budget();
    std::vector<SuiteResult> results = run_all_suites(opt.seed, budget);
    Json res;
    bool pass = true;
    Json suites = Json::array();
    for (const SuiteResult& r : results) {
        Json jr;
        jr["name"] = r.name;
        jr["instances"] = r.instances;
        jr["passed"] = r.passed;
        if (!r.witness.empty()) jr["witness"] = r.witness;
        suites.push_back(jr);
        pass = pass && r.passed;
    }
    res["seed"] = opt.seed;
    res["size"] = opt.size;
    res["suites"] = suites;
    std::ostringstream seedstr;
    seedstr << "selftest:" << opt.seed << ":" << opt.size;
    return emit("selftest", seedstr.str(), res, pass, opt);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact checker for cubes of finitely presented modules"};
    app.require_subcommand(1);

    Options opt;

    std::vector<std::pair<std::string, int (*)(const Options&)>> commands{
        {"check", cmd_check},
        {"tot", cmd_tot},
        {"homology", cmd_homology},
        {"koszul", cmd_koszul},
        {"fib", cmd_fib},
        {"adjugate-verify", cmd_adjugate_verify},
        {"adjugate-construct", cmd_adjugate_construct},
        {"main-theorem", cmd_main_theorem},
        {"dct", cmd_dct},
        {"be", cmd_be},
        {"lattice", cmd_lattice},
        {"selftest", cmd_selftest},
    };
    std::map<std::string, int (*)(const Options&)> dispatch;
    for (auto& [name, fn] : commands) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("--report", opt.report_path, "also write the report to this path");
        if (name == "selftest") {
            sub->add_option("--seed", opt.seed, "master seed for instance generation");
            sub->add_option("--size", opt.size, "small or medium")
                ->check(CLI::IsMember({"small", "medium"}));
        } else {
            sub->add_option("--input", opt.input, "instance file")->required();
            sub->add_option("--ring-override", opt.ring_override,
                            "reinterpret entries over z, q, f<p> or m<n>");
        }
        if (name == "check") {
            sub->add_option("--method", opt.method,
                            "recursive, faces, restrictions or all (default)");
        }
        if (name == "be") {
            sub->add_option("--method", opt.method, "criterion (default) or equivalence");
        }
        if (name == "dct") {
            sub->add_option("--method", opt.method, "dct, bigadm or all (default)");
        }
        if (name == "adjugate-verify") {
            sub->add_option("--method", opt.method, "plain (default) or regular");
        }
        dispatch[name] = fn;
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    std::string chosen = app.get_subcommands().front()->get_name();
    if (chosen == "be" && opt.method == "all") opt.method = "criterion";
    if (chosen == "adjugate-verify" && opt.method == "all") opt.method = "plain";
    try {
        return dispatch.at(chosen)(opt);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
