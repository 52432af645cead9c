// Batch CLI: SU(2) and general-G partition functions, fixed-point tables,
// and on-demand verification suites, with JSON/CSV/text output.

#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstorus/cstorus.hpp>
#include <cstorus/verify.hpp>

using json = nlohmann::ordered_json;
using namespace cstorus;

namespace {

constexpr int kExitInternal = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitDegenerate = 3;

std::vector<Int> parse_csv_ints(const std::string& text) {
    std::vector<Int> out;
    std::string cur;
    for (const char ch : text + ",") {
        if (ch == ',') {
            if (cur.empty()) throw std::domain_error("empty entry in integer list '" + text + "'");
            out.emplace_back(cur);
            cur.clear();
        } else if (ch == ' ') {
            continue;
        } else {
            cur += ch;
        }
    }
    return out;
}

SL2Element parse_matrix(const std::string& text) {
    const auto e = parse_csv_ints(text);
    if (e.size() != 4) throw std::domain_error("--matrix needs 4 comma-separated integers");
    return {e[0], e[1], e[2], e[3]};
}

std::vector<int> parse_levels(int level, const std::string& range) {
    if (!range.empty()) {
        const auto dots = range.find("..");
        if (dots == std::string::npos)
            throw std::domain_error("--levels must look like 1..8");
        const int lo = std::stoi(range.substr(0, dots));
        const int hi = std::stoi(range.substr(dots + 2));
        if (lo < 1 || hi < lo) throw std::domain_error("bad level range " + range);
        std::vector<int> out;
        for (int k = lo; k <= hi; ++k) out.push_back(k);
        return out;
    }
    if (level < 1) throw std::domain_error("--level must be >= 1");
    return {level};
}

Rat parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rat(Int(text));
    return make_rat(Int(text.substr(0, slash)), Int(text.substr(slash + 1)));
}

Family parse_family(const std::string& f) {
    if (f == "A" || f == "a") return Family::A;
    if (f == "B" || f == "b") return Family::B;
    if (f == "C" || f == "c") return Family::C;
    if (f == "D" || f == "d") return Family::D;
    throw std::domain_error("unknown family '" + f + "' (expected A, B, C or D)");
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (const char ch : s) {
        out += ch;
        if (ch == '"') out += '"';
    }
    return out + "\"";
}

json result_record(const PartitionResult& pr) {
    return json{{"formula", to_string(pr.formula)},
                {"group", pr.group},
                {"monodromy", pr.monodromy},
                {"k", pr.k},
                {"r", pr.r},
                {"re", pr.value.real()},
                {"im", pr.value.imag()},
                {"modulus", std::abs(pr.value)},
                {"term_count", pr.term_count.str()}};
}

void emit(const json& doc, const std::string& format) {
    if (format == "json") {
        std::printf("%s\n", doc.dump(2).c_str());
        return;
    }
    if (format == "csv") {
        const auto& results = doc.at("results");
        std::printf("formula,group,monodromy,k,r,re,im,modulus,term_count\n");
        for (const auto& rec : results) {
            std::printf("%s,%s,%s,%d,%d,%.17g,%.17g,%.17g,%s\n",
                        csv_quote(rec.at("formula").get<std::string>()).c_str(),
                        csv_quote(rec.at("group").get<std::string>()).c_str(),
                        csv_quote(rec.at("monodromy").get<std::string>()).c_str(),
                        rec.at("k").get<int>(), rec.at("r").get<int>(),
                        rec.at("re").get<double>(), rec.at("im").get<double>(),
                        rec.at("modulus").get<double>(),
                        csv_quote(rec.at("term_count").get<std::string>()).c_str());
        }
        return;
    }
    // text
    for (const auto& rec : doc.at("results"))
        std::printf("%-8s %-6s k=%-3d r=%-3d Z = %+.12f %+.12fi  |Z| = %.12f  terms=%s\n",
                    rec.at("formula").get<std::string>().c_str(),
                    rec.at("group").get<std::string>().c_str(), rec.at("k").get<int>(),
                    rec.at("r").get<int>(), rec.at("re").get<double>(),
                    rec.at("im").get<double>(), rec.at("modulus").get<double>(),
                    rec.at("term_count").get<std::string>().c_str());
    if (doc.contains("comparisons"))
        for (const auto& cmp : doc.at("comparisons"))
            std::printf("check %-24s k=%-3d residual=%.3e %s\n",
                        cmp.at("kind").get<std::string>().c_str(), cmp.at("k").get<int>(),
                        cmp.at("residual").get<double>(),
                        cmp.value("pass", true) ? "ok" : "MISMATCH");
}

struct Su2Options {
    std::string matrix;
    int level = 0;
    std::string levels;
    std::string formula = "all";
    double tol = 1e-9;
    std::string format = "json";
    int phi_sign = 1;
    std::string k_override;
};

int run_su2(const Su2Options& opt) {
    const SL2Element u = parse_matrix(opt.matrix);
    const auto levels = parse_levels(opt.level, opt.levels);
    std::optional<Cplx> k_override;
    if (!opt.k_override.empty()) k_override = unit_phase(parse_rational(opt.k_override));

    json doc;
    doc["input"] = {{"command", "su2"},
                    {"matrix", opt.matrix},
                    {"class", to_string(classify(u))},
                    {"formula", opt.formula},
                    {"tol", opt.tol},
                    {"phi_sign", opt.phi_sign}};
    json results = json::array();
    json comparisons = json::array();
    double max_residual = 0;

    for (const int k : levels) {
        std::optional<PartitionResult> sqm, trace, rt;
        if (opt.formula == "sqm" || opt.formula == "all") sqm = z_sqm_su2(u, k);
        if (opt.formula == "trace" || opt.formula == "all")
            trace = z_trace_su2(u, k, k_override, opt.phi_sign);
        if (opt.formula == "rt" || opt.formula == "all") rt = rt_trace_su2(u, k);
        if (!sqm && !trace && !rt)
            throw std::domain_error("unknown formula '" + opt.formula +
                                    "' (expected sqm, trace, rt or all)");
        for (const auto* pr : {&sqm, &trace, &rt})
            if (*pr) results.push_back(result_record(**pr));
        if (opt.formula == "all") {
            const double mod_res = std::abs(std::abs(rt->value) - std::abs(sqm->value));
            const double trace_res = std::abs(trace->value - rt->value);
            max_residual = std::max({max_residual, mod_res, trace_res});
            comparisons.push_back({{"kind", "modulus-rt-vs-sqm"},
                                   {"k", k},
                                   {"residual", mod_res},
                                   {"pass", mod_res < opt.tol}});
            comparisons.push_back({{"kind", "trace-vs-rt"},
                                   {"k", k},
                                   {"residual", trace_res},
                                   {"pass", trace_res < opt.tol}});
            if (classify(u) == SL2Class::Hyperbolic && u.c() != 0) {
                const auto cmp = su2_phase_check(u, k, opt.tol, opt.phi_sign);
                max_residual = std::max(max_residual, cmp.abs_residual);
                comparisons.push_back({{"kind", "framing-phase"},
                                       {"k", k},
                                       {"predicted_re", cmp.predicted.real()},
                                       {"predicted_im", cmp.predicted.imag()},
                                       {"sign", cmp.matched_sign},
                                       {"residual", cmp.abs_residual},
                                       {"pass", cmp.match_up_to_sign}});
            }
        }
    }
    doc["results"] = std::move(results);
    if (opt.formula == "all") {
        doc["comparisons"] = std::move(comparisons);
        doc["residuals"] = {{"max", max_residual}};
    }
    emit(doc, opt.format);
    return 0;
}

struct GeneralOptions {
    std::string family = "A";
    int rank = 1;
    std::string p = "3";
    int level = 0;
    std::string levels;
    std::string formula = "all";
    double tol = 1e-9;
    std::string format = "json";
};

int run_general(const GeneralOptions& opt) {
    const auto rs = RootSystem::build(parse_family(opt.family), opt.rank);
    const Int p(opt.p);
    const auto levels = parse_levels(opt.level, opt.levels);

    json doc;
    doc["input"] = {{"command", "general"}, {"group", rs.name()},      {"p", p.str()},
                    {"formula", opt.formula}, {"tol", opt.tol}};
    json results = json::array();
    json comparisons = json::array();
    double max_residual = 0;

    for (const int k : levels) {
        std::optional<PartitionResult> sqm, weights, cosets;
        if (opt.formula == "sqm" || opt.formula == "all") sqm = z_sqm_general(rs, p, k);
        if (opt.formula == "weights" || opt.formula == "all")
            weights = z_trace_general_weights(rs, p, k);
        if (opt.formula == "cosets" || opt.formula == "all")
            cosets = z_trace_general_cosets(rs, p, k);
        if (!sqm && !weights && !cosets)
            throw std::domain_error("unknown formula '" + opt.formula +
                                    "' (expected sqm, weights, cosets or all)");
        for (const auto* pr : {&sqm, &weights, &cosets})
            if (*pr) results.push_back(result_record(**pr));
        if (opt.formula == "all") {
            const double wc = std::abs(weights->value - cosets->value);
            const double mod = std::abs(std::abs(sqm->value) - std::abs(weights->value));
            max_residual = std::max({max_residual, wc, mod});
            comparisons.push_back(
                {{"kind", "weights-vs-cosets"}, {"k", k}, {"residual", wc}, {"pass", wc < opt.tol}});
            comparisons.push_back({{"kind", "modulus-sqm-vs-weights"},
                                   {"k", k},
                                   {"residual", mod},
                                   {"pass", mod < opt.tol}});
            if (abs(p) > 2) {
                const auto cmp = general_phase_check(rs, p, k, opt.tol);
                max_residual = std::max(max_residual, cmp.abs_residual);
                comparisons.push_back({{"kind", "framing-phase"},
                                       {"k", k},
                                       {"predicted_re", cmp.predicted.real()},
                                       {"predicted_im", cmp.predicted.imag()},
                                       {"sign", cmp.matched_sign},
                                       {"residual", cmp.abs_residual},
                                       {"pass", cmp.match_up_to_sign}});
            }
        }
    }
    doc["results"] = std::move(results);
    if (opt.formula == "all") {
        doc["comparisons"] = std::move(comparisons);
        doc["residuals"] = {{"max", max_residual}};
    }
    emit(doc, opt.format);
    return 0;
}

struct FixedPointOptions {
    std::string matrix;
    std::string family = "A";
    int rank = 1;
    std::string format = "json";
};

int run_fixed_points(const FixedPointOptions& opt) {
    const SL2Element u = parse_matrix(opt.matrix);
    const auto rs = RootSystem::build(parse_family(opt.family), opt.rank);

    json rows = json::array();
    for (std::size_t wi = 0; wi < rs.weyl_order(); ++wi) {
        const auto& w = rs.weyl_elements()[wi];
        for (const auto& fp : fixed_points(rs, u, w, wi)) {
            json lam = json::array(), ap = json::array();
            for (const auto& x : fp.lam) lam.push_back(x.str());
            for (const auto& x : fp.a_point) ap.push_back(rat_to_string(x));
            rows.push_back({{"w_index", fp.weyl_index},
                            {"det_w", fp.weyl_det},
                            {"lambda", lam},
                            {"a_point", ap},
                            {"cs", rat_to_string(fp.cs)},
                            {"eps", fp.eps},
                            {"absdet", fp.absdet.str()}});
        }
    }
    json doc;
    doc["input"] = {{"command", "fixed-points"}, {"matrix", opt.matrix}, {"group", rs.name()}};
    doc["rows"] = std::move(rows);

    if (opt.format == "json") {
        std::printf("%s\n", doc.dump(2).c_str());
    } else if (opt.format == "csv") {
        std::printf("w_index,det_w,lambda,a_point,cs,eps,absdet\n");
        for (const auto& row : doc["rows"]) {
            std::string lam, ap;
            for (const auto& x : row.at("lambda")) lam += (lam.empty() ? "" : " ") + x.get<std::string>();
            for (const auto& x : row.at("a_point")) ap += (ap.empty() ? "" : " ") + x.get<std::string>();
            std::printf("%zu,%d,%s,%s,%s,%d,%s\n", row.at("w_index").get<std::size_t>(),
                        row.at("det_w").get<int>(), csv_quote(lam).c_str(), csv_quote(ap).c_str(),
                        csv_quote(row.at("cs").get<std::string>()).c_str(), row.at("eps").get<int>(),
                        csv_quote(row.at("absdet").get<std::string>()).c_str());
        }
    } else {
        for (const auto& row : doc["rows"]) {
            std::string lam, ap;
            for (const auto& x : row.at("lambda")) lam += (lam.empty() ? "" : ",") + x.get<std::string>();
            for (const auto& x : row.at("a_point")) ap += (ap.empty() ? "" : ",") + x.get<std::string>();
            std::printf("w#%zu det=%+d lambda=(%s) A=(%s) CS=%s eps=%+d |det|=%s\n",
                        row.at("w_index").get<std::size_t>(), row.at("det_w").get<int>(),
                        lam.c_str(), ap.c_str(), row.at("cs").get<std::string>().c_str(),
                        row.at("eps").get<int>(), row.at("absdet").get<std::string>().c_str());
        }
    }
    return 0;
}

struct VerifyOptions {
    std::vector<std::string> suites{"all"};
    int max_ac = 40;
    int trace_bound = 10;
    int c_max = 5;
    std::string levels = "1..8";
    int draws = 500;
    unsigned seed = 20240811;
    double tol = 1e-9;
    std::string format = "json";
};

int run_verify(const VerifyOptions& opt) {
    using namespace cstorus::verify;
    const auto lv = parse_levels(1, opt.levels);
    GridOptions grid{opt.trace_bound, opt.c_max, lv.front(), lv.back(), opt.tol};

    std::vector<SuiteResult> results;
    auto want = [&](const std::string& name) {
        for (const auto& s : opt.suites)
            if (s == "all" || s == name) return true;
        return false;
    };
    if (want("reciprocity")) results.push_back(suite_reciprocity(opt.max_ac, 1e-10));
    if (want("golden")) results.push_back(suite_golden_values());
    if (want("su2-exactness")) results.push_back(suite_su2_exactness(grid));
    if (want("su2-phase")) results.push_back(suite_su2_phase(grid));
    if (want("general-triangle")) results.push_back(suite_general_triangle(4, opt.tol));
    if (want("a1-reduction")) results.push_back(suite_a1_reduction(grid.k_max));
    if (want("g-symmetries")) results.push_back(suite_g_symmetries(opt.draws, opt.seed, 1e-10));
    if (want("domain-counting")) results.push_back(suite_domain_counting(grid));
    if (want("structural")) results.push_back(suite_structural());
    if (results.empty()) throw std::domain_error("no matching suite");

    bool all_pass = true;
    json suites = json::array();
    for (const auto& r : results) {
        all_pass = all_pass && r.pass;
        suites.push_back({{"suite", r.name},
                          {"pass", r.pass},
                          {"cases", r.cases},
                          {"max_residual", r.max_residual},
                          {"detail", r.detail}});
    }
    if (opt.format == "json") {
        json doc;
        doc["input"] = {{"command", "verify"}, {"tol", opt.tol}};
        doc["suites"] = std::move(suites);
        doc["pass"] = all_pass;
        std::printf("%s\n", doc.dump(2).c_str());
    } else {
        for (const auto& s : suites)
            std::printf("[%s] %-18s cases=%-6ld max_residual=%.3e %s\n",
                        s.at("pass").get<bool>() ? "PASS" : "FAIL",
                        s.at("suite").get<std::string>().c_str(), s.at("cases").get<long>(),
                        s.at("max_residual").get<double>(),
                        s.at("detail").get<std::string>().c_str());
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Chern-Simons-Witten partition functions of torus bundles"};
    app.require_subcommand(1);

    Su2Options su2;
    auto* su2_cmd = app.add_subcommand("su2", "SU(2) partition functions for a monodromy matrix");
    su2_cmd->add_option("--matrix", su2.matrix, "monodromy a,b,c,d")->required();
    su2_cmd->add_option("--level", su2.level, "level k");
    su2_cmd->add_option("--levels", su2.levels, "level range lo..hi");
    su2_cmd->add_option("--formula", su2.formula, "sqm | trace | rt | all");
    su2_cmd->add_option("--tol", su2.tol, "comparison tolerance");
    su2_cmd->add_option("--format", su2.format, "json | csv | text");
    su2_cmd->add_option("--phi-sign", su2.phi_sign, "Rademacher convention sign (+1 or -1)");
    su2_cmd->add_option("--k-override", su2.k_override, "override K(U) by e^{2 pi i q}, q rational");

    GeneralOptions gen;
    auto* gen_cmd = app.add_subcommand("general", "partition functions for U = T^p S, classical G");
    gen_cmd->add_option("--family", gen.family, "A | B | C | D")->required();
    gen_cmd->add_option("--rank", gen.rank, "rank l")->required();
    gen_cmd->add_option("--p", gen.p, "T-power p of U = T^p S")->required();
    gen_cmd->add_option("--level", gen.level, "level k");
    gen_cmd->add_option("--levels", gen.levels, "level range lo..hi");
    gen_cmd->add_option("--formula", gen.formula, "sqm | weights | cosets | all");
    gen_cmd->add_option("--tol", gen.tol, "comparison tolerance");
    gen_cmd->add_option("--format", gen.format, "json | csv | text");

    FixedPointOptions fps;
    auto* fp_cmd = app.add_subcommand("fixed-points", "flat connections on the mapping torus");
    fp_cmd->add_option("--matrix", fps.matrix, "monodromy a,b,c,d")->required();
    fp_cmd->add_option("--family", fps.family, "A | B | C | D");
    fp_cmd->add_option("--rank", fps.rank, "rank l");
    fp_cmd->add_option("--format", fps.format, "json | csv | text");

    VerifyOptions ver;
    auto* ver_cmd = app.add_subcommand("verify", "run verification suites");
    ver_cmd->add_option("--suite", ver.suites,
                        "reciprocity | golden | su2-exactness | su2-phase | general-triangle | "
                        "a1-reduction | g-symmetries | domain-counting | structural | all");
    ver_cmd->add_option("--max", ver.max_ac, "reciprocity bound on a, c");
    ver_cmd->add_option("--trace-bound", ver.trace_bound, "entry bound of the hyperbolic grid");
    ver_cmd->add_option("--c-max", ver.c_max, "bound on |c| in the hyperbolic grid");
    ver_cmd->add_option("--levels", ver.levels, "level range lo..hi");
    ver_cmd->add_option("--draws", ver.draws, "random draws for property suites");
    ver_cmd->add_option("--seed", ver.seed, "random seed");
    ver_cmd->add_option("--tol", ver.tol, "comparison tolerance");
    ver_cmd->add_option("--format", ver.format, "json | text");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInvalidInput;
    }

    try {
        if (su2_cmd->parsed()) return run_su2(su2);
        if (gen_cmd->parsed()) return run_general(gen);
        if (fp_cmd->parsed()) return run_fixed_points(fps);
        if (ver_cmd->parsed()) return run_verify(ver);
        return kExitInvalidInput;
    } catch (const ParabolicMonodromy& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitDegenerate;
    } catch (const CUnsupported& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitDegenerate;
    } catch (const DegenerateFixedSet& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitDegenerate;
    } catch (const SingularLattice& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitDegenerate;
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitInvalidInput;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "internal error: %s\n", e.what());
        return kExitInternal;
    }
}
