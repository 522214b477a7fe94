#include "torlim/cli.hpp"

#include <chrono>
#include <fstream>
#include <ostream>
#include <sstream>

#include "torlim/derived.hpp"
#include "torlim/errors.hpp"
#include "torlim/presentation_io.hpp"
#include "torlim/report.hpp"

namespace torlim::cli {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

nlohmann::json canonical_form_json(const CanonicalForm& cf) {
    nlohmann::json j;
    nlohmann::json torsion = nlohmann::json::array();
    for (const Int& d : cf.torsion) torsion.push_back(d.get_str());
    j["torsion"] = torsion;
    j["free_rank"] = cf.free_rank;
    j["pretty"] = cf.to_string();
    return j;
}

nlohmann::json matrix_json(const IntMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (const std::string& r : render_matrix_rows(m)) rows.push_back(r);
    nlohmann::json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    j["entries"] = rows;
    return j;
}

nlohmann::json resolution_json(const FreeResolution& res) {
    nlohmann::json j;
    j["length"] = res.length();
    j["total_rank"] = res.total_rank();
    nlohmann::json ranks = nlohmann::json::array();
    for (std::size_t n = 0; n <= res.length(); ++n) ranks.push_back(res.complex.object(n).generators());
    j["ranks"] = ranks;
    nlohmann::json diffs = nlohmann::json::array();
    for (std::size_t n = 1; n <= res.length(); ++n)
        diffs.push_back(matrix_json(res.complex.differential(n).matrix()));
    j["differentials"] = diffs;
    j["augmentation"] = matrix_json(res.augmentation.matrix());
    return j;
}

void emit(const Report& report, bool json, std::ostream& out) {
    out << (json ? report.to_json() : report.to_text());
}

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

int input_error(std::ostream& err, const std::string& what) {
    err << "input error: " << what << "\n";
    return kExitInputError;
}

}  // namespace

int run_tor(const std::string& a_path, const std::string& b_path, const CommonOptions& opts,
            std::ostream& out, std::ostream& err) {
    Timer timer;
    std::string a_text, b_text;
    FpModule a, b;
    try {
        a_text = read_file(a_path);
        b_text = read_file(b_path);
        a = parse_presentation(a_text);
        b = parse_presentation(b_text);
    } catch (const std::exception& e) {
        return input_error(err, e.what());
    }

    Report report("tor", opts.seed);
    report.set_inputs_digest(fnv1a(b_text, fnv1a(a_text)));
    try {
        TensorFunctor func(b);
        DerivedValue dv = derived_object(func, a, opts.degree, opts.family_size, opts.seed);
        report.add_output("degree", opts.degree);
        report.add_output("family_size", opts.family_size);
        report.add_output("module", canonical_form_json(a.canonical_form()));
        report.add_output("parameter", canonical_form_json(b.canonical_form()));
        report.add_output("tor", canonical_form_json(dv.limit.group.canonical_form()));
        report.add_check("iso_system_laws", true);
        report.add_check("limit_projections_are_isomorphisms", true);
        if (opts.degree == 0) {
            ModuleMap eps = epsilon_comparison(func, dv);
            report.add_check("l0_comparison_is_isomorphism", is_isomorphism(eps));
        }
        if (opts.verbose) {
            nlohmann::json members = nlohmann::json::array();
            for (const FreeResolution& res : dv.system.family.members)
                members.push_back(resolution_json(res));
            report.add_output("family", members);
            nlohmann::json isos = nlohmann::json::array();
            for (std::size_t i = 0; i < dv.system.size(); ++i)
                for (std::size_t j = 0; j < dv.system.size(); ++j) {
                    nlohmann::json entry;
                    entry["pair"] = std::to_string(i) + "->" + std::to_string(j);
                    entry["matrix"] = matrix_json(dv.system.iso(i, j).matrix());
                    isos.push_back(entry);
                }
            report.add_output("canonical_isomorphisms", isos);
            nlohmann::json lim;
            lim["generators"] = dv.limit.group.generators();
            lim["relations"] = matrix_json(dv.limit.group.relations());
            lim["inclusion"] = matrix_json(dv.limit.inclusion.matrix());
            report.add_output("limit_presentation", lim);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitVerificationFailure;
    }
    emit(report, opts.json, out);
    err << "elapsed: " << timer.seconds() << "s\n";
    return report.all_checks_passed() ? kExitOk : kExitVerificationFailure;
}

int run_resolve(const std::string& module_path, const CommonOptions& opts, std::ostream& out,
                std::ostream& err) {
    Timer timer;
    std::string text;
    FpModule m;
    try {
        text = read_file(module_path);
        m = parse_presentation(text);
    } catch (const std::exception& e) {
        return input_error(err, e.what());
    }

    Report report("resolve", opts.seed);
    report.set_inputs_digest(fnv1a(text));
    try {
        ResolutionFamily fam = resolution_family(m, opts.family_size, opts.seed);
        report.add_output("module", canonical_form_json(m.canonical_form()));
        report.add_output("rank_measure",
                          nlohmann::json::array({fam.rank_measure.first, fam.rank_measure.second}));
        nlohmann::json members = nlohmann::json::array();
        for (const FreeResolution& res : fam.members) members.push_back(resolution_json(res));
        report.add_output("members", members);
        bool all_exact = true;
        for (const FreeResolution& res : fam.members) all_exact = all_exact && is_resolution(res, m);
        report.add_check("members_are_resolutions", all_exact);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitVerificationFailure;
    }
    emit(report, opts.json, out);
    err << "elapsed: " << timer.seconds() << "s\n";
    return report.all_checks_passed() ? kExitOk : kExitVerificationFailure;
}

int run_map(const std::string& map_path, const std::string& param_path, const CommonOptions& opts,
            std::ostream& out, std::ostream& err) {
    Timer timer;
    std::string map_text, param_text;
    PresentationFile file;
    FpModule param;
    try {
        map_text = read_file(map_path);
        param_text = read_file(param_path);
        file = parse_presentation_file(map_text);
        param = parse_presentation(param_text);
        if (file.maps.empty()) throw ParseError(0, "no map in '" + map_path + "'");
    } catch (const std::exception& e) {
        return input_error(err, e.what());
    }

    Report report("map", opts.seed);
    report.set_inputs_digest(fnv1a(param_text, fnv1a(map_text)));
    try {
        const ModuleMap& f = file.maps.front().map;
        TensorFunctor func(param);
        DerivedMap dm = derived_map(func, f, opts.degree, opts.family_size, opts.seed);
        report.add_output("map", file.maps.front().name);
        report.add_output("degree", opts.degree);
        report.add_output("source", canonical_form_json(dm.source.limit.group.canonical_form()));
        report.add_output("target", canonical_form_json(dm.target.limit.group.canonical_form()));
        report.add_output("matrix", matrix_json(dm.map.matrix()));
        report.add_output("canonical_matrix", matrix_json(canonical_matrix(dm.map)));
        report.add_check("commutes_with_projections", true);
        if (opts.verbose) {
            report.add_output("source_limit_relations", matrix_json(dm.source.limit.group.relations()));
            report.add_output("target_limit_relations", matrix_json(dm.target.limit.group.relations()));
        }
    } catch (const NotWellDefined& e) {
        return input_error(err, e.what());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitVerificationFailure;
    }
    emit(report, opts.json, out);
    err << "elapsed: " << timer.seconds() << "s\n";
    return report.all_checks_passed() ? kExitOk : kExitVerificationFailure;
}

int run_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err) {
    Timer timer;
    checks::CorpusOptions corpus;
    corpus.seed = opts.seed;
    corpus.cases = opts.cases;
    corpus.entry_bound = opts.entry_bound;
    corpus.order_bound = opts.order_bound;
    corpus.family_size = opts.family_size;

    Report report("verify", opts.seed);
    std::ostringstream echo;
    echo << "cases=" << opts.cases << ";entry_bound=" << opts.entry_bound
         << ";order_bound=" << opts.order_bound << ";family_size=" << opts.family_size
         << ";inject_fault=" << (opts.inject_fault ? 1 : 0);
    report.set_inputs_digest(fnv1a(echo.str()));
    report.add_output("corpus", echo.str());

    bool all = true;
    try {
        for (const checks::SuiteResult& suite : checks::run_verification_suites(corpus, opts.inject_fault)) {
            report.add_check(suite.name + " (" + std::to_string(suite.cases) + " cases)", suite.passed,
                             suite.counterexample);
            all = all && suite.passed;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitVerificationFailure;
    }
    emit(report, opts.json, out);
    err << "elapsed: " << timer.seconds() << "s\n";
    return all ? kExitOk : kExitVerificationFailure;
}

}  // namespace torlim::cli
