#include "app.hpp"

#include "matrix.hpp"

#include "glkm/bases/bases.hpp"
#include "glkm/braid/braid.hpp"
#include "glkm/gl11/gl11.hpp"
#include "glkm/linalg/rep_context.hpp"
#include "glkm/report/check_report.hpp"
#include "glkm/yangian/casimir.hpp"
#include "glkm/yangian/relations.hpp"
#include "glkm/yangian/rtt.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#ifndef GLKM_VERSION
#define GLKM_VERSION "0.0.0"
#endif

namespace glkm::cli {

namespace {

constexpr std::size_t max_dim = 1u << 16;

struct Shape {
    std::size_t n, k;
};

// k + m = n, any two of the three determine the third.
Shape resolve_shape(const RunConfig& c, std::size_t min_k) {
    std::size_t n = 2, k = 1;
    const int given = int(c.n.has_value()) + int(c.k.has_value()) + int(c.m.has_value());
    if (given == 3) {
        if (*c.k + *c.m != *c.n) throw UsageError("k + m must equal n");
        n = *c.n;
        k = *c.k;
    } else if (given == 2) {
        if (c.n && c.k) {
            n = *c.n;
            k = *c.k;
        } else if (c.k && c.m) {
            n = *c.k + *c.m;
            k = *c.k;
        } else {
            if (*c.m > *c.n) throw UsageError("m must not exceed n");
            n = *c.n;
            k = *c.n - *c.m;
        }
    } else if (given == 1) {
        throw UsageError("give two of --n, --k, --m");
    }
    if (n < 2 || n > 6) throw UsageError("n must lie in [2, 6]");
    if (k < min_k || k > n) throw UsageError("k must lie in [" + std::to_string(min_k) + ", n]");
    return {n, k};
}

RepContext context(const RunConfig& c, std::size_t default_sites) {
    const Shape s = resolve_shape(c, 0);
    const std::size_t N = c.sites.value_or(default_sites);
    if (N < 1 || N > 16) throw UsageError("--sites must lie in [1, 16]");
    std::size_t d = 1;
    for (std::size_t j = 0; j < N; ++j) {
        d *= s.n;
        if (d > max_dim) throw UsageError("n^sites exceeds " + std::to_string(max_dim));
    }
    return RepContext(s.n, s.k, N);
}

LegOrder convention(const RunConfig& c) {
    if (c.convention == "default") return LegOrder::standard;
    if (c.convention == "opposite") return LegOrder::opposite;
    throw UsageError("--convention must be default or opposite");
}

Scalar parse_scalar(const std::string& s) {
    try {
        return Scalar::parse(s);
    } catch (const std::exception&) {
        throw UsageError("not a Gaussian rational: " + s);
    }
}

std::vector<Scalar> lambdas(const RunConfig& c) {
    if (c.lambdas.empty()) return default_lambdas();
    std::vector<Scalar> out;
    for (const auto& s : c.lambdas) out.push_back(parse_scalar(s));
    return out;
}

std::vector<std::pair<Scalar, Scalar>> lambda_pairs(const RunConfig& c) {
    if (c.lambdas.empty()) return default_lambda_pairs();
    if (c.lambdas.size() % 2) throw UsageError("--lambda values are consumed in pairs");
    std::vector<std::pair<Scalar, Scalar>> out;
    for (std::size_t i = 0; i < c.lambdas.size(); i += 2)
        out.emplace_back(parse_scalar(c.lambdas[i]), parse_scalar(c.lambdas[i + 1]));
    return out;
}

std::string vector_text(const RepContext& ctx, const Vector& v) {
    std::ostringstream os;
    bool first = true;
    for (const auto& it : v.items()) {
        const Scalar& c = it.value;
        std::string coeff = c.str();
        if (!first) {
            if (coeff.front() == '-') {
                os << " - ";
                coeff.erase(0, 1);
            } else {
                os << " + ";
            }
        } else if (coeff == "-1") {
            os << "-";
            coeff = "1";
        }
        if (coeff != "1") os << coeff << " ";
        os << "e";
        for (std::size_t x : ctx.decode(it.index)) os << x;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

struct Session {
    const RunConfig& cfg;
    SuiteReport suite;

    void config(const std::string& key, const std::string& value) { suite.config[key] = value; }
    void echo(const RepContext& ctx) {
        config("n", std::to_string(ctx.n));
        config("k", std::to_string(ctx.k));
        config("m", std::to_string(ctx.m()));
        config("sites", std::to_string(ctx.N));
    }
};

void cmd_braid(Session& s) {
    const Shape sh = resolve_shape(s.cfg, 0);
    const BraidParams bp{sh.n, sh.k, s.cfg.alpha};
    s.config("alpha", std::to_string(bp.alpha));
    s.config("solution", s.cfg.solution);
    const SparseMat rc = s.cfg.solution == "lyubashenko" ? lyubashenko(sh.n) : build_rcheck(bp);
    s.suite.add(check_braid(rc));
    s.suite.add(check_involutive(rc));
}

void cmd_classify(Session& s) {
    const Shape sh = resolve_shape(s.cfg, 0);
    const BraidParams bp{sh.n, sh.k, s.cfg.alpha};
    s.config("alpha", std::to_string(bp.alpha));
    s.config("solution", s.cfg.solution);
    const SparseMat rc = s.cfg.solution == "lyubashenko" ? lyubashenko(sh.n) : build_rcheck(bp);
    CheckReport rep("classify");
    Stopwatch sw;
    try {
        const std::string cls = to_string(classify(rc));
        rep.note("class: " + cls);
        s.suite.artifacts["classification"] = cls + "\n";
    } catch (const PreconditionError& e) {
        rep.fail(e.what());
        rep.absorb(e.report());
    }
    rep.duration_ms = sw.elapsed_ms();
    s.suite.add(std::move(rep));
}

void cmd_ybe(Session& s) {
    const Shape sh = resolve_shape(s.cfg, 0);
    const BraidParams bp{sh.n, sh.k, s.cfg.alpha};
    s.config("alpha", std::to_string(bp.alpha));
    for (const auto& [l1, l2] : lambda_pairs(s.cfg)) s.suite.add(check_ybe_parametric(bp, l1, l2));
}

void cmd_unitarity(Session& s) {
    const Shape sh = resolve_shape(s.cfg, 0);
    const BraidParams bp{sh.n, sh.k, s.cfg.alpha};
    s.config("alpha", std::to_string(bp.alpha));
    for (const auto& l : lambdas(s.cfg)) s.suite.add(check_unitarity(bp, l));
}

void cmd_relations(Session& s) {
    const RepContext ctx = context(s.cfg, 2);
    s.echo(ctx);
    const std::string& suite = s.cfg.suite;
    s.config("suite", suite);
    s.config("convention", s.cfg.convention);
    const GeneratorSet g(ctx, convention(s.cfg));
    const bool all = suite == "all";
    if (!all && suite != "quadratic" && suite != "serre" && suite != "hatted" && suite != "rtt" &&
        suite != "centralizer")
        throw UsageError("unknown suite " + suite);
    if (all || suite == "quadratic") s.suite.add(verify_gl_relations(g));
    if (all || suite == "serre") s.suite.add(verify_serre(g));
    if (all || suite == "hatted") s.suite.add(verify_hatted(g));
    if (all || suite == "rtt") {
        for (const auto& [l1, l2] : lambda_pairs(s.cfg)) {
            s.suite.add(check_rtt_monodromy(ctx, l1, l2));
            s.suite.add(check_rtt_lax(g, l1, l2));
        }
    }
    if (all || suite == "centralizer") {
        s.config("alpha", std::to_string(s.cfg.alpha));
        s.suite.add(verify_centralizer(g, s.cfg.alpha));
    }
}

void cmd_casimir(Session& s) {
    const RepContext ctx = context(s.cfg, 2);
    s.echo(ctx);
    const std::size_t K = s.cfg.order.value_or(2 * ctx.N + 2);
    if (K < 2) throw UsageError("--order must be at least 2");
    s.config("order", std::to_string(K));
    s.config("convention", s.cfg.convention);
    s.suite.add(verify_casimir(GeneratorSet(ctx, convention(s.cfg)), K));
}

void cmd_antipode(Session& s) {
    const RepContext ctx = context(s.cfg, 2);
    s.echo(ctx);
    const std::size_t K = s.cfg.order.value_or(4);
    if (K < 2) throw UsageError("--order must be at least 2");
    s.config("order", std::to_string(K));
    s.config("convention", s.cfg.convention);
    s.suite.add(verify_antipode(GeneratorSet(ctx, convention(s.cfg)), K));
}

std::vector<Family> families(const RunConfig& c) {
    if (c.family == "both") return {Family::plus, Family::minus};
    if (c.family == "plus" || c.family == "+") return {Family::plus};
    if (c.family == "minus" || c.family == "-") return {Family::minus};
    throw UsageError("--family must be plus, minus or both");
}

void cmd_enumerate(Session& s) {
    const RepContext ctx = context(s.cfg, 2);
    if (ctx.k < 1 || ctx.k >= ctx.n) throw UsageError("basis enumeration needs 1 <= k <= n-1");
    s.echo(ctx);
    s.config("convention", s.cfg.convention);
    s.config("family", s.cfg.family);
    const GeneratorSet g(ctx, convention(s.cfg));
    for (Family f : families(s.cfg)) {
        std::ostringstream os;
        for (const auto& idx : enumerate_admissible(ctx, f))
            os << idx.str() << " = " << vector_text(ctx, build_u_vector(g, idx).vec) << "\n";
        s.suite.artifacts["basis " + to_string(f)] = os.str();
        s.suite.add(check_highest_vector(g, f));
    }
    s.suite.add(check_family_independence(g));
}

void cmd_action(Session& s) {
    const RepContext ctx = context(s.cfg, 2);
    if (ctx.k < 1 || ctx.k >= ctx.n) throw UsageError("the action table needs 1 <= k <= n-1");
    s.echo(ctx);
    s.config("convention", s.cfg.convention);
    const GeneratorSet g(ctx, convention(s.cfg));
    if (ctx.N >= 2) s.suite.add(check_hamiltonian_eigen(g));
    s.suite.add(check_action_all(g));
    s.suite.add(check_family_independence(g));
}

void cmd_spectrum2(Session& s) {
    const Shape sh = resolve_shape(s.cfg, 1);
    if (sh.k >= sh.n) throw UsageError("spectrum2 needs 1 <= k <= n-1");
    s.config("n", std::to_string(sh.n));
    s.config("k", std::to_string(sh.k));
    const auto spec = spectral_decomposition_n2(sh.n, sh.k);
    s.suite.add(spec.report);
    std::ostringstream vecs;
    const RepContext ctx(sh.n, sh.k, 2);
    for (const auto& v : spec.plus) vecs << v.label(Family::plus) << " = " << vector_text(ctx, v.vec) << "\n";
    for (const auto& v : spec.minus) vecs << v.label(Family::minus) << " = " << vector_text(ctx, v.vec) << "\n";
    s.suite.artifacts["eigenvectors"] = vecs.str();
    if (s.cfg.dot_dir.empty()) return;
    if (sh.n > 4) throw UsageError("DOT output is limited to n <= 4");
    s.config("dot", s.cfg.dot_dir);
    std::filesystem::create_directories(s.cfg.dot_dir);
    for (Family f : {Family::plus, Family::minus}) {
        const std::string name = "gl_" + std::to_string(sh.k) + "_" + std::to_string(sh.n - sh.k) + "_" +
                                 (f == Family::plus ? "plus" : "minus") + ".dot";
        const std::string dot = action_graph_dot(sh.n, sh.k, f);
        std::ofstream(std::filesystem::path(s.cfg.dot_dir) / name, std::ios::binary) << dot;
        s.suite.artifacts[name] = dot;
    }
}

std::vector<std::size_t> site_range(const RunConfig& c, std::size_t lo, std::size_t hi) {
    if (!c.sites) {
        std::vector<std::size_t> r;
        for (std::size_t N = lo; N <= hi; ++N) r.push_back(N);
        return r;
    }
    if (*c.sites < lo || *c.sites > 12) throw UsageError("--sites out of range for this command");
    return {*c.sites};
}

void cmd_gl11_xx(Session& s) {
    for (std::size_t N : site_range(s.cfg, 2, 6)) s.suite.add(gl11::xx_hamiltonian_check(N));
}

void cmd_gl11_modules(Session& s) {
    s.config("samples", std::to_string(s.cfg.samples));
    s.config("seed", std::to_string(s.cfg.seed));
    for (const auto& t : random_hw_triples(s.cfg.samples, s.cfg.seed))
        s.suite.add(gl11::check_hw_module({t[0], t[1], t[2]}));
    for (std::size_t N : site_range(s.cfg, 1, 6)) {
        s.suite.add(gl11::verify_adjoint_identity(N));
        std::vector<std::size_t> ps;
        if (s.cfg.p) {
            if (*s.cfg.p >= N) throw UsageError("--p must be below --sites");
            ps = {*s.cfg.p};
        } else {
            for (std::size_t p = 0; p < N; ++p) ps.push_back(p);
        }
        for (std::size_t p : ps) {
            for (const auto& v : gl11::highest_weight_kernel(N, p)) s.suite.add(gl11::verify_kernel_module(N, p, v));
            if (p + 2 <= N) s.suite.add(gl11::verify_orthogonality(N, p));
        }
    }
}

void cmd_gl11_tensor(Session& s) {
    std::vector<std::pair<std::size_t, std::size_t>> shapes{{1, 1}, {2, 1}, {2, 2}};
    if (s.cfg.sites || s.cfg.sites2) {
        if (!s.cfg.sites || !s.cfg.sites2) throw UsageError("give both --sites and --sites2");
        if (*s.cfg.sites < 1 || *s.cfg.sites2 < 1) throw UsageError("both factors need at least one site");
        if (*s.cfg.sites + *s.cfg.sites2 > 12) throw UsageError("too many sites");
        shapes = {{*s.cfg.sites, *s.cfg.sites2}};
    }
    for (auto [n1, n2] : shapes)
        for (std::size_t p1 = 0; p1 < n1; ++p1)
            for (std::size_t p2 = 0; p2 < n2; ++p2) {
                if (s.cfg.p && *s.cfg.p != p1) continue;
                if (s.cfg.p2 && *s.cfg.p2 != p2) continue;
                for (const auto& v1 : gl11::highest_weight_kernel(n1, p1))
                    for (const auto& v2 : gl11::highest_weight_kernel(n2, p2))
                        s.suite.add(gl11::tensor_decompose(n1, p1, n2, p2, v1, v2).report);
            }
}

void cmd_gl11_ssyt(Session& s) {
    const bool single = s.cfg.sites && s.cfg.p;
    if (single && *s.cfg.p >= *s.cfg.sites) throw UsageError("--p must be below --sites");
    for (std::size_t N : site_range(s.cfg, 1, 8)) {
        for (std::size_t p = 0; p < N; ++p) {
            if (s.cfg.p && *s.cfg.p != p) continue;
            const auto pair = gl11::ssyt_bijection(N, p);
            s.suite.add(pair.report);
            const std::string tag = single ? "" : "N=" + std::to_string(N) + " p=" + std::to_string(p) + " ";
            s.suite.artifacts[tag + "varpi_p"] = gl11::render(pair.low);
            s.suite.artifacts[tag + "varpi_p+1"] = gl11::render(pair.high);
        }
    }
}

void cmd_report_all(Session& s) {
    for (const auto& c : acceptance_matrix()) {
        for (auto& r : c.run()) {
            r.name = c.id + " " + r.name;
            s.suite.add(std::move(r));
        }
    }
}

void dispatch(Session& s) {
    const auto& cmd = s.cfg.command;
    const std::string verb = cmd.empty() ? "" : cmd[0];
    const std::string sub = cmd.size() > 1 ? cmd[1] : "";
    if (verb == "verify") {
        if (sub == "braid") return cmd_braid(s);
        if (sub == "ybe") return cmd_ybe(s);
        if (sub == "unitarity") return cmd_unitarity(s);
        if (sub == "relations") return cmd_relations(s);
        if (sub == "casimir") return cmd_casimir(s);
        if (sub == "antipode") return cmd_antipode(s);
        if (sub == "action") return cmd_action(s);
    } else if (verb == "classify") {
        return cmd_classify(s);
    } else if (verb == "basis" && sub == "enumerate") {
        return cmd_enumerate(s);
    } else if (verb == "spectrum2") {
        return cmd_spectrum2(s);
    } else if (verb == "gl11") {
        if (sub == "xx") return cmd_gl11_xx(s);
        if (sub == "modules") return cmd_gl11_modules(s);
        if (sub == "tensor") return cmd_gl11_tensor(s);
        if (sub == "ssyt") return cmd_gl11_ssyt(s);
    } else if (verb == "report-all") {
        return cmd_report_all(s);
    }
    throw UsageError("unknown command");
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out) {
    if (cfg.format != "text" && cfg.format != "json") throw UsageError("--format must be text or json");
    Session s{cfg, {}};
    s.suite.version = GLKM_VERSION;
    std::string joined;
    for (const auto& w : cfg.command) joined += (joined.empty() ? "" : " ") + w;
    s.config("command", joined);
    Stopwatch sw;
    try {
        dispatch(s);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    s.suite.duration_ms = sw.elapsed_ms();
    if (cfg.no_timing) {
        s.suite.duration_ms = 0;
        for (auto& c : s.suite.checks) c.duration_ms = 0;
    }
    s.suite.recompute();
    const std::string text = cfg.format == "json" ? emit_json(s.suite) : emit_text(s.suite);
    if (cfg.output.empty()) {
        out << text;
    } else {
        std::ofstream f(cfg.output, std::ios::binary);
        if (!f) throw UsageError("cannot write " + cfg.output);
        f << text;
    }
    return s.suite.passed ? exit_pass : exit_fail;
}

std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
                                    int& exit_code) {
    RunConfig cfg;
    CLI::App app{"Exact verifier for deformed-permutation braid solutions and their quantum algebras", "glkm"};
    app.set_version_flag("--version", std::string(GLKM_VERSION));
    app.fallthrough();
    app.require_subcommand(1);

    app.add_option("--n", cfg.n, "alphabet size n = k + m");
    app.add_option("--k", cfg.k, "bosonic letters [k]");
    app.add_option("--m", cfg.m, "fermionic letters, n - k");
    app.add_option("--sites", cfg.sites, "number of tensor sites N");
    app.add_option("--sites2", cfg.sites2, "sites of the second factor (gl11 tensor)");
    app.add_option("--alpha", cfg.alpha, "deformation parameter of the braid solution");
    app.add_option("--p", cfg.p, "level p (gl11)");
    app.add_option("--p2", cfg.p2, "level of the second factor (gl11 tensor)");
    app.add_option("--order", cfg.order, "series truncation order K");
    app.add_option("--lambda", cfg.lambdas, "spectral parameters; pairs for ybe and rtt")->allow_extra_args(false);
    app.add_option("--suite", cfg.suite, "quadratic|serre|hatted|rtt|centralizer|all");
    app.add_option("--solution", cfg.solution, "deformed|lyubashenko")
        ->check(CLI::IsMember({"deformed", "lyubashenko"}));
    app.add_option("--family", cfg.family, "plus|minus|both");
    app.add_option("--format", cfg.format, "text|json")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--output", cfg.output, "write the report to a file");
    app.add_option("--dot", cfg.dot_dir, "directory for the DOT transition graphs (spectrum2)");
    app.add_option("--convention", cfg.convention, "coproduct leg order: default|opposite")
        ->check(CLI::IsMember({"default", "opposite"}));
    app.add_option("--samples", cfg.samples, "random highest-weight triples (gl11 modules)");
    app.add_option("--seed", cfg.seed, "seed for the random triples");
    app.add_flag("--no-timing", cfg.no_timing, "write zero durations for byte-stable reports");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->require_subcommand(1);
    for (const char* name : {"braid", "ybe", "unitarity", "relations", "casimir", "antipode", "action"})
        verify->add_subcommand(name);
    app.add_subcommand("classify", "classify the solution as combinatorial or not");
    app.add_subcommand("basis", "u+/- bases")->require_subcommand(1)->add_subcommand("enumerate");
    app.add_subcommand("spectrum2", "two-site eigenvectors of the braid matrix");
    auto* g11 = app.add_subcommand("gl11", "gl(1,1) chain and modules");
    g11->require_subcommand(1);
    for (const char* name : {"xx", "modules", "tensor", "ssyt"}) g11->add_subcommand(name);
    app.add_subcommand("report-all", "run the whole acceptance matrix");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        exit_code = app.exit(e, out, err);
        return std::nullopt;
    } catch (const CLI::CallForAllHelp& e) {
        exit_code = app.exit(e, out, err);
        return std::nullopt;
    } catch (const CLI::CallForVersion& e) {
        exit_code = app.exit(e, out, err);
        return std::nullopt;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        exit_code = exit_usage;
        return std::nullopt;
    }
    const CLI::App* cur = &app;
    while (true) {
        const auto subs = cur->get_subcommands();
        if (subs.empty()) break;
        cfg.command.push_back(subs.front()->get_name());
        cur = subs.front();
    }
    return cfg;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    int code = exit_pass;
    const auto cfg = parse_args(argc, argv, out, err, code);
    if (!cfg) return code;
    try {
        return run(*cfg, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_fail;
    }
}

}  // namespace glkm::cli
