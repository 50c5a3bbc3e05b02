#include "ternmin/cli.hpp"

#include "ternmin/errors.hpp"
#include "ternmin/golden.hpp"
#include "ternmin/hwconstruct.hpp"
#include "ternmin/kraw.hpp"
#include "ternmin/serialize.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

namespace ternmin::cli {

namespace {

struct Globals {
    unsigned threads = 0;
    std::optional<double> budget;
};

// Either two function-table files or weight-ball parameters.
struct SpecSource {
    std::string f_path;
    std::string g_path;
    std::optional<int> m;
    std::optional<int> k1;
    std::optional<int> k2;

    void attach(CLI::App* sub, bool allow_construction) {
        sub->add_option("--f", f_path, "function table for f");
        sub->add_option("--g", g_path, "function table for g");
        sub->add_option("--m", m, "dimension");
        if (allow_construction) {
            sub->add_option("--k1", k1, "inner weight threshold");
            sub->add_option("--k2", k2, "outer weight threshold");
        }
    }

    bool has_files() const { return !f_path.empty() || !g_path.empty(); }

    std::pair<TernaryFunction, TernaryFunction> functions() const {
        if (has_files()) {
            if (f_path.empty() || g_path.empty()) throw std::invalid_argument("--f and --g must be given together");
            if (k1 || k2) throw std::invalid_argument("--k1/--k2 cannot be combined with --f/--g");
            auto f = load_function_table(f_path);
            auto g = load_function_table(g_path);
            if (m && (*m != f.dimension() || *m != g.dimension()))
                throw std::invalid_argument("--m does not match the function tables");
            return {std::move(f), std::move(g)};
        }
        if (!m || !k1 || !k2) throw std::invalid_argument("need --f and --g, or --m, --k1 and --k2");
        return build_fg(HWParams(*m, *k1, *k2));
    }

    CodeSpec spec(unsigned threads) const {
        auto [f, g] = functions();
        return CodeSpec::validate(std::move(f), std::move(g), threads);
    }
};

void print_json(std::ostream& out, const nlohmann::json& j) { out << j.dump() << '\n'; }

void emit_weights(std::ostream& out, const std::string& format, int m, int dim, const WeightDistribution& d) {
    if (format == "csv") out << weights_csv(d);
    else if (format == "text") out << weights_text(d);
    else print_json(out, code_json(m, dim, &d, nullptr));
}

void emit_cwe(std::ostream& out, const std::string& format, int m, int dim, const CompleteWeightEnumerator& e) {
    if (format == "csv") out << cwe_csv(e);
    else if (format == "text") out << cwe_text(e);
    else print_json(out, code_json(m, dim, nullptr, &e));
}

std::string table_string(const TernaryFunction& f) {
    std::string s;
    for (std::uint8_t v : f.table()) s.push_back(static_cast<char>('0' + v));
    return s;
}

int cmd_kraw(std::ostream& out, int t, int x, int m, bool use_lloyd) {
    out << (use_lloyd ? lloyd(t, x, m) : krawtchouk(t, x, m)) << '\n';
    return ok;
}

int cmd_spectrum(std::ostream& out, const SpecSource& src, const std::string& member_name_arg, const Globals& g) {
    TernaryFunction fn(1);
    std::string label;
    if (!src.f_path.empty() && src.g_path.empty()) {
        fn = load_function_table(src.f_path);
        label = "input";
    } else {
        const auto member = parse_member(member_name_arg);
        if (!member) throw std::invalid_argument("--member must be one of f, g, f+g, f-g");
        auto [f, gg] = src.functions();
        const auto c = coefficients(*member);
        fn = TernaryFunction::combine(c.u, f, c.r, gg);
        label = member_name_arg;
    }
    const auto s = transform(fn, g.threads);
    const int m = fn.dimension();
    std::vector<std::map<std::int64_t, std::uint64_t>> classes(m + 1);
    for (std::uint32_t w = 0; w < s.size(); ++w) ++classes[index_weight(w)][real_doubled(s, w)];

    nlohmann::json j;
    j["m"] = m;
    j["function"] = label;
    auto arr = nlohmann::json::array();
    for (int i = 0; i <= m; ++i) {
        auto values = nlohmann::json::array();
        for (const auto& [d, c] : classes[i]) values.push_back({d, c});
        arr.push_back({{"weight", i}, {"size", sphere_size(m, i)}, {"doubled_real", std::move(values)}});
    }
    j["classes"] = std::move(arr);
    print_json(out, j);
    return ok;
}

int cmd_construct(std::ostream& out, int m, int k1, int k2, const std::string& emit, const std::string& format,
                  bool closed_form, const Globals& g) {
    const HWParams p(m, k1, k2);
    if (emit == "fg") {
        const auto [f, gg] = build_fg(p);
        if (format == "json") print_json(out, {{"m", m}, {"f", table_string(f)}, {"g", table_string(gg)}});
        else if (format == "text") {
            write_function_table(out, f);
            write_function_table(out, gg);
        } else throw std::invalid_argument("--emit fg has no csv form");
        return ok;
    }
    const auto spec = build_spec(p, g.threads);
    const int dim = code_dimension(spec);
    if (emit == "weights") {
        emit_weights(out, format, m, dim, closed_form ? closed_form_weight_distribution(p) : weight_distribution(spec, g.threads));
        return ok;
    }
    if (emit == "cwe") {
        emit_cwe(out, format, m, dim, closed_form ? closed_form_cwe(p) : cwe(spec, g.threads));
        return ok;
    }

    const auto e = closed_form ? closed_form_cwe(p) : cwe(spec, g.threads);
    const auto d = e.weights();
    const auto t4 = theorem4_report(p);
    const bool ab = ashikhmin_barg(d.min_nonzero(), d.max_weight());
    if (format == "csv") throw std::invalid_argument("--emit report has no csv form");
    if (format == "text") {
        out << "m: " << m << "\nk1: " << k1 << "\nk2: " << k2 << "\nlength: " << spec.length() << "\ndimension: " << dim
            << "\nmin_weight: " << d.min_nonzero() << "\nmax_weight: " << d.max_weight()
            << "\nashikhmin_barg: " << (ab ? "satisfied" : "violated") << "\ncwe_terms: " << e.terms.size() << '\n';
        return ok;
    }
    auto j = code_json(m, dim, &d, &e);
    j["k1"] = k1;
    j["k2"] = k2;
    j["distinct_codewords"] = zero_word_count(spec) == 1;
    j["min_weight"] = d.min_nonzero();
    j["max_weight"] = d.max_weight();
    j["ashikhmin_barg"] = ab;
    j["closed_form_extremes"] = {{"min_weight", t4.wmin}, {"max_weight", t4.wmax}};
    print_json(out, j);
    return ok;
}

int cmd_distribution(std::ostream& out, const SpecSource& src, bool want_cwe, const std::string& format, const Globals& g) {
    const auto spec = src.spec(g.threads);
    const int dim = code_dimension(spec);
    if (want_cwe) emit_cwe(out, format, spec.m(), dim, cwe(spec, g.threads));
    else emit_weights(out, format, spec.m(), dim, weight_distribution(spec, g.threads));
    return ok;
}

int cmd_minimality(std::ostream& out, const SpecSource& src, const std::string& method, bool all_witnesses,
                   const Globals& g) {
    const auto spec = src.spec(g.threads);
    nlohmann::json j;
    j["m"] = spec.m();
    auto verdicts = nlohmann::json::array();
    std::vector<bool> minimal;

    if (method == "oracle" || method == "both") {
        const auto v = is_minimal_bruteforce(spec, {g.threads, all_witnesses ? 0u : 1u});
        verdicts.push_back(verdict_json(v));
        minimal.push_back(v.minimal);
    }
    if (method == "theorem2" || method == "both") {
        SweepOptions opt;
        opt.threads = g.threads;
        opt.max_witnesses = all_witnesses ? 0 : 1;
        if (g.budget) opt.budget = std::chrono::duration<double>(*g.budget);
        const auto report = theorem2_check(spec, opt);
        auto vj = verdict_json(report.verdict);
        vj["conditions"] = {{std::string(condition_name(Condition::one_first)), report.condition1_first_holds},
                            {std::string(condition_name(Condition::one_second)), report.condition1_second_holds},
                            {std::string(condition_name(Condition::two)), report.condition2_holds}};
        vj["evaluations"] = report.evaluations;
        auto pairs = nlohmann::json::array();
        for (const auto& w : report.verdict.witnesses)
            if (const auto* cw = std::get_if<ConditionWitness>(&w)) {
                const auto pair = witness_to_cover_pair(spec, *cw);
                pairs.push_back({{"coverer", params_json(pair.coverer)}, {"covered", params_json(pair.covered)}});
            }
        vj["cover_pairs"] = std::move(pairs);
        verdicts.push_back(std::move(vj));
        minimal.push_back(report.verdict.minimal);
    }

    const bool agree = minimal.size() < 2 || minimal[0] == minimal[1];
    const bool all_minimal = std::all_of(minimal.begin(), minimal.end(), [](bool b) { return b; });
    j["verdicts"] = std::move(verdicts);
    j["agree"] = agree;
    j["minimal"] = agree && all_minimal;
    print_json(out, j);
    return agree && all_minimal ? ok : verdict_negative;
}

int cmd_verify_example(std::ostream& out, bool certify, const Globals& g) {
    using namespace golden;
    const HWParams p(kReferenceM, kReferenceK1, kReferenceK2);
    const auto spec = build_spec(p, g.threads);
    const auto e = cwe(spec, g.threads);
    const auto d = weight_distribution(spec, g.threads);
    const int dim = code_dimension(spec);

    nlohmann::json checks;
    checks["length"] = static_cast<std::int64_t>(spec.length()) == kReferenceLength;
    checks["dimension"] = dim == kReferenceDimension && zero_word_count(spec) == 1;
    checks["min_weight"] = d.min_nonzero() == kReferenceMinWeight;
    checks["max_weight"] = d.max_weight() == kReferenceMaxWeight;
    checks["ashikhmin_barg_violated"] = !ashikhmin_barg(d.min_nonzero(), d.max_weight());
    checks["cwe_matches_golden"] = e == reference_cwe();
    checks["cwe_implies_weights"] = e.weights() == d;
    if (certify) {
        SweepOptions opt;
        opt.threads = g.threads;
        if (g.budget) opt.budget = std::chrono::duration<double>(*g.budget);
        checks["minimal"] = theorem2_check(spec, opt).verdict.minimal;
    }
    bool pass = true;
    for (const auto& [k, v] : checks.items()) pass = pass && v.get<bool>();

    print_json(out, {{"parameters", {spec.length(), dim, d.min_nonzero()}},
                     {"max_weight", d.max_weight()},
                     {"checks", checks},
                     {"ok", pass}});
    return pass ? ok : verdict_negative;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"ternary codes C_{f,g}: spectra, enumerators, minimality"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    double budget_seconds = 0;
    app.add_option("--threads", g.threads, "worker threads (0: $TERNMIN_THREADS or all cores)");
    auto* budget_opt = app.add_option("--budget", budget_seconds, "wall-clock cap in seconds for sweeps")
                           ->check(CLI::PositiveNumber);

    auto* kraw = app.add_subcommand("kraw", "Krawtchouk K_t(x) or Lloyd Psi_t(x) for q = 3");
    int t = 0, x = 0, km = 0;
    bool use_lloyd = false;
    kraw->add_option("--t", t)->required();
    kraw->add_option("--x", x)->required();
    kraw->add_option("--m", km)->required();
    kraw->add_flag("--lloyd", use_lloyd, "evaluate the Lloyd polynomial instead");

    auto* spectrum = app.add_subcommand("spectrum", "doubled real parts of a transform, grouped by weight of w");
    SpecSource spectrum_src;
    std::string member = "f";
    spectrum_src.attach(spectrum, true);
    spectrum->add_option("--member", member, "f, g, f+g or f-g");

    const std::vector<std::string> formats{"json", "csv", "text"};
    auto* construct = app.add_subcommand("construct", "weight-ball construction");
    int cm = 0, ck1 = 0, ck2 = 0;
    std::string emit = "report", construct_format = "json";
    bool closed_form = false;
    construct->add_option("--m", cm)->required();
    construct->add_option("--k1", ck1)->required();
    construct->add_option("--k2", ck2)->required();
    construct->add_option("--emit", emit)->check(CLI::IsMember({"fg", "weights", "cwe", "report"}));
    construct->add_option("--format", construct_format)->check(CLI::IsMember(formats));
    construct->add_flag("--closed-form", closed_form, "use the closed-form tables instead of the transform path");

    SpecSource weights_src, cwe_src;
    std::string weights_format = "json", cwe_format = "json";
    auto* weights = app.add_subcommand("weights", "weight distribution of C_{f,g}");
    weights_src.attach(weights, true);
    weights->add_option("--format", weights_format)->check(CLI::IsMember(formats));
    auto* cwe_cmd = app.add_subcommand("cwe", "complete weight enumerator of C_{f,g}");
    cwe_src.attach(cwe_cmd, true);
    cwe_cmd->add_option("--format", cwe_format)->check(CLI::IsMember(formats));

    auto* minimality = app.add_subcommand("minimality", "certify minimality");
    SpecSource min_src;
    std::string method = "theorem2";
    bool all_witnesses = false;
    min_src.attach(minimality, true);
    minimality->add_option("--method", method)->check(CLI::IsMember({"oracle", "theorem2", "both"}));
    minimality->add_flag("--all-witnesses", all_witnesses, "collect every witness instead of stopping at the first");

    auto* verify = app.add_subcommand("verify-example", "recompute the m=9, k1=2, k2=4 example against the embedded listing");
    bool certify = false;
    verify->add_flag("--certify", certify, "also run the minimality sweep");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage;
    }
    if (*budget_opt) g.budget = budget_seconds;

    try {
        if (*kraw) return cmd_kraw(out, t, x, km, use_lloyd);
        if (*spectrum) return cmd_spectrum(out, spectrum_src, member, g);
        if (*construct) return cmd_construct(out, cm, ck1, ck2, emit, construct_format, closed_form, g);
        if (*weights) return cmd_distribution(out, weights_src, false, weights_format, g);
        if (*cwe_cmd) return cmd_distribution(out, cwe_src, true, cwe_format, g);
        if (*minimality) return cmd_minimality(out, min_src, method, all_witnesses, g);
        if (*verify) return cmd_verify_example(out, certify, g);
    } catch (const ValidationError& e) {
        nlohmann::json j{{"error", "hypotheses violated"},
                         {"hypothesis", std::string(hypothesis_name(e.hypothesis()))},
                         {"member", std::string(member_name(e.member()))}};
        if (e.witness()) j["witness"] = *e.witness();
        print_json(out, j);
        return verdict_negative;
    } catch (const CapacityError& e) {
        err << "capacity: " << e.what() << " (completed " << e.completed_fraction() << ")\n";
        return capacity;
    } catch (const ConsistencyError& e) {
        err << "internal consistency failure: " << e.what() << '\n';
        return internal;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    }
    return usage;
}

} // namespace ternmin::cli
