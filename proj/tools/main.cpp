// command line front end: validation, twisting, periods, decomposition,
// induction, classification and the Kronecker verification, all emitting
// deterministic JSON reports

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "skewrep/json_io.hpp"
#include "skewrep/kronecker.hpp"

using namespace skewrep;

namespace {

struct Options {
    std::string quiver_path;
    std::string field_spec;
    u64 seed = 0;
    bool json = false; // reports are always JSON; kept for interface stability
    std::string out_path;
};

Fq parse_field_spec(const std::string& spec) {
    std::vector<i64> parts;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            parts.push_back(std::stoll(item));
        } catch (const std::exception&) {
            throw ParseError("--field: cannot parse \"" + item + "\" as an integer");
        }
    }
    if (parts.empty()) throw ParseError("--field: empty spec");
    try {
        if (parts.size() == 1) return Fq(parts[0]);
        i64 e = parts[1];
        if (e < 1 || e > 64) throw ParseError("--field: extension degree out of range");
        if (parts.size() == 2) return Fq(parts[0], static_cast<int>(e));
        std::vector<i64> modulus(parts.begin() + 2, parts.end());
        return Fq(parts[0], static_cast<int>(e), std::move(modulus));
    } catch (const FieldError& err) {
        throw ParseError(std::string("--field: ") + err.what());
    }
}

Json make_report(const std::string& command, const Fq& field, u64 seed) {
    Json r;
    r["command"] = command;
    r["field"] = field_to_json(field);
    r["seed"] = seed;
    r["results"] = Json::array();
    r["failures"] = Json::array();
    return r;
}

int emit(const Json& report, const Options& opt) {
    if (opt.out_path.empty())
        std::cout << report.dump(2) << '\n';
    else
        save_json_file(opt.out_path, report);
    return report["failures"].empty() ? 0 : 1;
}

QuiverFile need_quiver(const Options& opt) {
    if (opt.quiver_path.empty())
        throw ParseError("this command needs --quiver pointing at a quiver file");
    return quiver_from_json(load_json_file(opt.quiver_path));
}

void check_field_override(const Fq& file_field, const Options& opt) {
    if (opt.field_spec.empty()) return;
    if (!(parse_field_spec(opt.field_spec) == file_field))
        throw StructureError("--field conflicts with the field stored in the input file");
}

enum class FileKind { QuiverF, RepF, SmashF };

FileKind detect_kind(const Json& j) {
    if (j.contains("vertices")) return FileKind::QuiverF;
    if (j.contains("subgroup_power")) return FileKind::SmashF;
    if (j.contains("dims")) return FileKind::RepF;
    throw ParseError("cannot tell whether this is a quiver, representation or module file");
}

int cmd_validate(const std::vector<std::string>& paths, const Options& opt) {
    Fq report_field = opt.field_spec.empty() ? Fq(101) : parse_field_spec(opt.field_spec);
    Json report = make_report("validate", report_field, opt.seed);
    for (const auto& path : paths) {
        try {
            Json j = load_json_file(path);
            FileKind kind = detect_kind(j);
            std::string kind_name;
            switch (kind) {
            case FileKind::QuiverF:
                quiver_from_json(j);
                kind_name = "quiver";
                break;
            case FileKind::RepF: {
                QuiverFile qf = need_quiver(opt);
                Representation r = rep_from_json(j, qf.quiver);
                check_field_override(r.field(), opt);
                kind_name = "representation";
                break;
            }
            case FileKind::SmashF: {
                QuiverFile qf = need_quiver(opt);
                SmashModule m = smash_from_json(j, qf);
                check_field_override(m.field(), opt);
                kind_name = "module";
                break;
            }
            }
            report["results"].push_back(Json{{"path", path}, {"kind", kind_name}, {"ok", true}});
        } catch (const std::exception& e) {
            report["failures"].push_back(Json{{"path", path}, {"error", e.what()}});
        }
    }
    return emit(report, opt);
}

Representation load_rep(const std::string& path, const QuiverFile& qf, const Options& opt) {
    Representation r = rep_from_json(load_json_file(path), qf.quiver);
    check_field_override(r.field(), opt);
    return r;
}

SmashModule load_smash(const std::string& path, const QuiverFile& qf, const Options& opt) {
    SmashModule m = smash_from_json(load_json_file(path), qf);
    check_field_override(m.field(), opt);
    return m;
}

int cmd_twist(const std::string& path, int j, const Options& opt) {
    QuiverFile qf = need_quiver(opt);
    Representation r = load_rep(path, qf, opt);
    Json report = make_report("twist", r.field(), opt.seed);
    report["results"].push_back(
        Json{{"j", j}, {"representation", rep_to_json(twist(r, qf.sigma, j))}});
    return emit(report, opt);
}

int cmd_period(const std::string& path, const Options& opt) {
    QuiverFile qf = need_quiver(opt);
    Representation r = load_rep(path, qf, opt);
    Json report = make_report("period", r.field(), opt.seed);
    report["results"].push_back(Json{{"m", minimal_period(r, qf.sigma, opt.seed)}});
    return emit(report, opt);
}

int cmd_decompose(const std::string& path, const Options& opt) {
    QuiverFile qf = need_quiver(opt);
    Json j = load_json_file(path);
    if (detect_kind(j) == FileKind::SmashF) {
        SmashModule m = smash_from_json(j, qf);
        check_field_override(m.field(), opt);
        Json report = make_report("decompose", m.field(), opt.seed);
        int idx = 0;
        for (const auto& part : decompose_smash(m, opt.seed))
            report["results"].push_back(Json{{"index", idx++}, {"module", smash_to_json(part)}});
        return emit(report, opt);
    }
    Representation r = rep_from_json(j, qf.quiver);
    check_field_override(r.field(), opt);
    Json report = make_report("decompose", r.field(), opt.seed);
    int idx = 0;
    for (const auto& part : decompose(r, opt.seed))
        report["results"].push_back(Json{{"index", idx++}, {"representation", rep_to_json(part)}});
    return emit(report, opt);
}

int cmd_induce(const std::string& path, const std::string& mode, int m, const Options& opt) {
    QuiverFile qf = need_quiver(opt);
    if (mode == "subgroup") {
        SmashModule in = load_smash(path, qf, opt);
        Json report = make_report("induce", in.field(), opt.seed);
        SmashModule out = induce_from_subgroup(in);
        report["results"].push_back(Json{{"mode", mode}, {"module", smash_to_json(out)}});
        return emit(report, opt);
    }
    Representation r = load_rep(path, qf, opt);
    Json report = make_report("induce", r.field(), opt.seed);
    if (mode == "canonical") {
        SmashModule out = induce_canonical(r, qf.sigma, opt.seed);
        report["field"] = field_to_json(out.field()); // may have escalated
        report["results"].push_back(Json{{"mode", mode},
                                         {"subgroup_power", out.subgroup_power()},
                                         {"module", smash_to_json(out)}});
    } else if (mode == "path") {
        if (m < 1) throw ParseError("--m is required for the path mode");
        SmashModule out = induce_from_path_algebra(r, qf.sigma, m);
        report["results"].push_back(Json{{"mode", mode},
                                         {"subgroup_power", out.subgroup_power()},
                                         {"module", smash_to_json(out)}});
    } else {
        throw ParseError("unknown induce mode \"" + mode + "\"");
    }
    return emit(report, opt);
}

int cmd_classify(const std::string& path, const Options& opt) {
    QuiverFile qf = need_quiver(opt);
    Representation r = load_rep(path, qf, opt);
    auto classes = classify_induced(r, qf.sigma, opt.seed);
    Json report = make_report("classify", classes.empty() ? r.field() : classes.front().field(),
                              opt.seed);
    int idx = 1;
    for (const auto& c : classes)
        report["results"].push_back(Json{{"character", idx++}, {"module", smash_to_json(c)}});
    return emit(report, opt);
}

int cmd_identify(const std::string& smash_path, const std::string& rep_path, const Options& opt) {
    QuiverFile qf = need_quiver(opt);
    SmashModule m = load_smash(smash_path, qf, opt);
    Representation base = load_rep(rep_path, qf, opt);
    auto candidates = classify_induced(base, qf.sigma, opt.seed);
    Json report = make_report("identify", m.field(), opt.seed);
    auto parts = decompose_smash(m, opt.seed);
    for (size_t pi = 0; pi < parts.size(); ++pi) {
        SmashModule part = parts[pi];
        int match = 0;
        for (size_t i = 0; i < candidates.size(); ++i) {
            SmashModule lhs = part;
            if (!(lhs.field() == candidates[i].field()))
                lhs = lhs.lift(FieldEmbedding(lhs.field(), candidates[i].field()));
            if (is_isomorphic_smash(lhs, candidates[i], opt.seed).isomorphic) {
                match = static_cast<int>(i) + 1;
                break;
            }
        }
        Json dims(part.rep().dims());
        if (match > 0)
            report["results"].push_back(
                Json{{"summand", pi}, {"dims", dims}, {"character", match}});
        else
            report["failures"].push_back(
                Json{{"summand", pi},
                     {"dims", dims},
                     {"error", "no induced class over the given representation matches"}});
    }
    return emit(report, opt);
}

int cmd_kronecker(int l_max, const std::vector<i64>& lambdas, const Options& opt) {
    Fq field = opt.field_spec.empty() ? Fq(101) : parse_field_spec(opt.field_spec);
    std::vector<FieldElement> lams;
    lams.reserve(lambdas.size());
    for (i64 v : lambdas) {
        FieldElement lam = field.from_int(v);
        if (field.is_zero(lam))
            throw StructureError("eigenvalue 0 is not in the regular eigenvalue family; "
                                 "it is paired with infinity and always checked");
        lams.push_back(lam);
    }
    KroneckerReport rep = verify_kronecker_classification(field, l_max, lams, opt.seed);
    Json report = make_report("kronecker", field, opt.seed);
    for (const auto& e : rep.entries)
        report["results"].push_back(Json{{"family", e.family},
                                         {"l", e.l},
                                         {"lambda", e.lambda.empty() ? Json() : Json(e.lambda)},
                                         {"valid", e.valid},
                                         {"indecomposable", e.indecomposable},
                                         {"iso_class_id", e.iso_class_id},
                                         {"certificates", e.certificates}});
    for (const auto& c : rep.checks)
        if (!c.ok)
            report["failures"].push_back(
                Json{{"label", c.label}, {"ok", c.ok}, {"detail", c.detail}});
    return emit(report, opt);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations with quiver representations and skew group algebra modules"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--quiver", opt.quiver_path, "quiver file (vertices, arrows, automorphism)");
    app.add_option("--field", opt.field_spec, "field spec p[,e[,modulus coefficients...]]");
    app.add_option("--seed", opt.seed, "seed for all randomized routines (echoed into reports)");
    app.add_flag("--json", opt.json, "emit JSON (reports are always JSON)");
    app.add_option("--out", opt.out_path, "write the report to this path instead of stdout");

    std::vector<std::string> validate_paths;
    auto* validate = app.add_subcommand("validate", "parse files and run every invariant");
    validate->add_option("files", validate_paths, "files to validate")->required();
    validate->fallthrough();

    std::string twist_path;
    int twist_j = 1;
    auto* twistc = app.add_subcommand("twist", "twist a representation by a power of sigma");
    twistc->add_option("file", twist_path, "representation file")->required();
    twistc->add_option("--j", twist_j, "twist power (default 1)");
    twistc->fallthrough();

    std::string period_path;
    auto* period = app.add_subcommand("period", "minimal twist period of a representation");
    period->add_option("file", period_path, "representation file")->required();
    period->fallthrough();

    std::string decompose_path;
    auto* decomposec =
        app.add_subcommand("decompose", "indecomposable summands of a representation or module");
    decomposec->add_option("file", decompose_path, "representation or module file")->required();
    decomposec->fallthrough();

    std::string induce_path, induce_mode = "canonical";
    int induce_m = 0;
    auto* induce = app.add_subcommand("induce", "induce a module structure");
    induce->add_option("file", induce_path, "representation (canonical, path) or module (subgroup) file")
        ->required();
    induce->add_option("--mode", induce_mode, "canonical | subgroup | path");
    induce->add_option("--m", induce_m, "subgroup power for the path mode");
    induce->fallthrough();

    std::string classify_path;
    auto* classify = app.add_subcommand("classify", "induced module classes over a representation");
    classify->add_option("file", classify_path, "representation file")->required();
    classify->fallthrough();

    std::string identify_smash, identify_rep;
    auto* identifyc = app.add_subcommand("identify", "match module summands against induced classes");
    identifyc->add_option("module", identify_smash, "module file")->required();
    identifyc->add_option("rep", identify_rep, "representation file")->required();
    identifyc->fallthrough();

    int l_max = 3;
    std::vector<i64> lambdas{2, 3};
    auto* kronecker = app.add_subcommand("kronecker", "verify the two-arrow quiver classification");
    kronecker->add_option("--l-max", l_max, "largest family index (default 3)");
    kronecker->add_option("--lambda", lambdas, "regular eigenvalues (default 2 3)");
    kronecker->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // keep CLI11's message but fold every command line problem into the
        // parse-error exit code (help stays 0)
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (validate->parsed()) return cmd_validate(validate_paths, opt);
        if (twistc->parsed()) return cmd_twist(twist_path, twist_j, opt);
        if (period->parsed()) return cmd_period(period_path, opt);
        if (decomposec->parsed()) return cmd_decompose(decompose_path, opt);
        if (induce->parsed()) return cmd_induce(induce_path, induce_mode, induce_m, opt);
        if (classify->parsed()) return cmd_classify(classify_path, opt);
        if (identifyc->parsed()) return cmd_identify(identify_smash, identify_rep, opt);
        if (kronecker->parsed()) return cmd_kronecker(l_max, lambdas, opt);
    } catch (const ParseError& e) {
        std::cerr << Json{{"error", e.what()}, {"code", 2}}.dump() << '\n';
        return 2;
    } catch (const IoError& e) {
        std::cerr << Json{{"error", e.what()}, {"code", 4}}.dump() << '\n';
        return 4;
    } catch (const StructureError& e) {
        std::cerr << Json{{"error", e.what()}, {"code", 3}}.dump() << '\n';
        return 3;
    } catch (const FieldError& e) {
        std::cerr << Json{{"error", e.what()}, {"code", 3}}.dump() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << Json{{"error", e.what()}, {"code", 5}}.dump() << '\n';
        return 5;
    }
    return 0;
}
