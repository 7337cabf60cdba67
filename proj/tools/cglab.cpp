// cglab: build matrices, run determinant/permanent engines, and verify the
// congruence checks from the command line.
//
// Exit codes: 0 no failures, 1 at least one failing record, 2 usage or input
// error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cglab/detper.hpp"
#include "cglab/matgen.hpp"
#include "cglab/matrix_io.hpp"
#include "cglab/report.hpp"
#include "cglab/verify.hpp"

namespace {

using namespace cglab;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::string> split_words(const std::string& s)
{
    std::istringstream is(s);
    std::vector<std::string> out;
    std::string w;
    while (is >> w) out.push_back(w);
    return out;
}

// Parses a builder invocation such as {"quadform", "--p", "3", ...}.
Matrix build_matrix(const std::vector<std::string>& args)
{
    CLI::App app{"matrix builders", "build"};
    app.require_subcommand(1);

    i64 N = 0, c = 0, d = 0, n = 0, m = 0, p = 0;
    i64 exponent = -1, count = 0;
    u64 mod = 0, seed = 0;
    bool exact = false, symmetric = false;
    unsigned xdeg = 0, ydeg = 0;
    std::string range = "full0", kind, set = "p-1", diag = "zero";

    auto* quad = app.add_subcommand("quadform", "[(i^2 + c i j + d j^2)^e]");
    quad->add_option("--p,--N", N, "range bound: indices 0..N-1 or 1..N-1")->required();
    quad->add_option("--c", c);
    quad->add_option("--d", d);
    quad->add_option("--range", range, "full0 or from1");
    quad->add_option("--exponent", exponent, "defaults to N-2");
    quad->add_option("--mod", mod, "modulus (odd)");
    quad->add_flag("--exact", exact, "exact integer entries");

    auto* cauchy = app.add_subcommand("cauchy", "Cauchy-type matrices with modular inverses");
    cauchy->add_option("--kind", kind, "invdiff, ratiodiff, invdiffsq or ratiosq")->required();
    cauchy->add_option("--p", p)->required();
    cauchy->add_option("--set", set, "p-1, p or half");
    cauchy->add_option("--mod", mod)->required();
    cauchy->add_option("--diag", diag, "zero or one");

    auto* invform = app.add_subcommand("invform", "[1/(i^2 + c i j + d j^2)] on 1..count");
    invform->add_option("--c", c);
    invform->add_option("--d", d);
    invform->add_option("--count", count)->required();
    invform->add_option("--mod", mod)->required();

    auto* primeind = app.add_subcommand("primeind", "[i + j is prime]");
    primeind->add_option("--n", n)->required();

    auto* board = app.add_subcommand("checkerboard", "random checkerboard-supported matrix");
    board->add_option("--n", n)->required();
    board->add_option("--seed", seed)->required();
    board->add_flag("--symmetric", symmetric);

    auto* skew = app.add_subcommand("skew", "random skew-symmetric checkerboard matrix of order 2m");
    skew->add_option("--m", m)->required();
    skew->add_option("--seed", seed)->required();

    auto* poly = app.add_subcommand("poly", "[P(i,j)] for a random P with deg_x P < n-1");
    poly->add_option("--n", n)->required();
    poly->add_option("--xdeg", xdeg)->required();
    poly->add_option("--ydeg", ydeg);
    poly->add_option("--seed", seed)->required();

    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);

    if (quad->parsed()) {
        if (exact == (mod != 0)) throw UsageError("quadform needs exactly one of --mod M or --exact");
        const u64 e = exponent < 0 ? static_cast<u64>(N - 2) : static_cast<u64>(exponent);
        std::optional<ModCtx> ctx;
        if (!exact) ctx = ModCtx::classify(mod);
        return quad_form_matrix(N, c, d, parse_index_range(range), e, ctx);
    }
    if (cauchy->parsed()) {
        return cauchy_type_matrix(parse_entry_kind(kind), static_cast<u64>(p), parse_index_set(set),
                                  parse_diagonal(diag), ModCtx::classify(mod));
    }
    if (invform->parsed()) return inverse_form_matrix(c, d, static_cast<std::size_t>(count), ModCtx::classify(mod));
    if (primeind->parsed()) return prime_indicator_matrix(static_cast<std::size_t>(n));
    if (board->parsed()) {
        return random_checkerboard_matrix(static_cast<std::size_t>(n), seed,
                                          symmetric ? Symmetry::symmetric : Symmetry::none);
    }
    if (skew->parsed()) return random_skew_checkerboard_matrix(static_cast<std::size_t>(m), seed);
    return poly_eval_matrix(random_poly(xdeg, ydeg, seed), static_cast<std::size_t>(n));
}

Matrix load_input(const std::string& file, const std::string& inline_builder)
{
    if (!inline_builder.empty()) {
        if (!file.empty()) throw UsageError("give either a matrix file or --inline, not both");
        return build_matrix(split_words(inline_builder));
    }
    if (file.empty()) throw UsageError("a matrix file (or '-' for stdin) or --inline is required");
    if (file == "-") return read_matrix(std::cin);
    std::ifstream in(file);
    if (!in) throw UsageError("cannot open " + file);
    return read_matrix(in);
}

std::optional<ModCtx> target_ctx(const Matrix& m, u64 mod)
{
    if (mod == 0) return m.ctx();
    ModCtx ctx = ModCtx::classify(mod);
    if (m.ctx() && m.ctx()->modulus() % mod != 0) {
        throw UsageError("--mod " + std::to_string(mod) + " does not divide the matrix modulus " +
                         std::to_string(m.ctx()->modulus()));
    }
    return ctx;
}

int run_engine(Quantity q, const std::string& file, const std::string& inline_builder, u64 mod, std::string engine,
               unsigned jobs)
{
    const Matrix m = load_input(file, inline_builder);
    const auto ctx = target_ctx(m, mod);

    if (engine == "auto") {
        if (m.order() >= 2 && has_checkerboard_support(m)) {
            engine = "checkerboard";
        } else if (q == Quantity::per) {
            engine = "ryser";
        } else {
            engine = ctx && ctx->is_prime() ? "field" : "bareiss";
        }
    }

    RyserOptions ropts;
    ropts.threads = std::max(1U, jobs);
    std::string value;
    if (engine == "checkerboard") {
        value = ctx ? std::to_string(factor_checkerboard(m, q, *ctx).value()) : factor_checkerboard(m, q).get_str();
    } else if (engine == "naive") {
        if (q == Quantity::det) {
            value = ctx ? std::to_string(det_naive(m, *ctx).value()) : det_naive(m).get_str();
        } else {
            value = ctx ? std::to_string(per_naive(m, *ctx).value()) : per_naive(m).get_str();
        }
    } else if (q == Quantity::det && engine == "field") {
        if (!ctx || !ctx->is_prime()) throw UsageError("the field engine needs a prime modulus");
        value = std::to_string(det_mod(m, *ctx).value());
    } else if (q == Quantity::det && engine == "bareiss") {
        value = ctx ? std::to_string(det_exact(m, *ctx).value()) : det_exact(m).get_str();
    } else if (q == Quantity::per && engine == "ryser") {
        value = ctx ? std::to_string(per_ryser(m, *ctx, ropts).value()) : per_ryser_exact(m, ropts).get_str();
    } else {
        throw UsageError("engine '" + engine + "' does not compute " + to_string(q));
    }
    std::cout << value << '\n';
    std::cerr << "engine: " << engine << '\n';
    return 0;
}

struct ReportOptions {
    std::string format = "jsonl";
    bool no_timing = false;
    bool include_na = false;
    unsigned jobs = 1;
};

int emit_reports(const std::vector<CheckRequest>& cells, const ReportOptions& ro, bool include_na)
{
    VerifyConfig config;
    config.record_timing = !ro.no_timing;
    ReportWriter writer(std::cout, parse_report_format(ro.format));
    sweep(cells, config, ro.jobs, include_na, [&](const CheckReport& r) {
        writer.write(r);
        std::cout.flush();
    });
    if (ro.format == "tty") {
        std::cout << writer.total() << " records: " << writer.count(Verdict::pass) << " pass, "
                  << writer.count(Verdict::fail) << " fail, " << writer.count(Verdict::inconclusive)
                  << " inconclusive, " << writer.count(Verdict::not_applicable) << " not-applicable\n";
    }
    return writer.count(Verdict::fail) == 0 ? 0 : kExitFail;
}

const std::vector<std::string> kFamilies = {"eq15",       "p3-remark",       "reflection", "dp-theorem",
                                            "column-relation", "background", "conj"};

void add_report_options(CLI::App* cmd, ReportOptions& ro)
{
    cmd->add_option("--format", ro.format, "jsonl, csv or tty")->check(CLI::IsMember({"jsonl", "csv", "tty"}));
    cmd->add_flag("--no-timing", ro.no_timing, "write elapsed_ms as 0 for byte-reproducible output");
    cmd->add_option("--jobs", ro.jobs, "parallel workers (output order is unaffected)")->check(CLI::PositiveNumber);
}

int run(int argc, char** argv)
{
    CLI::App app{"cglab - exact determinants, permanents and congruence checks"};
    app.require_subcommand(1);

    // build
    std::string out_file;
    auto* build = app.add_subcommand("build", "build a matrix and write it in the plain-text format");
    build->add_option("--out", out_file, "output file (default stdout)");
    build->prefix_command();

    // det / per
    std::string file, inline_builder, engine = "auto";
    u64 mod = 0;
    unsigned engine_jobs = 1;
    auto* det = app.add_subcommand("det", "determinant of a matrix file");
    auto* per = app.add_subcommand("per", "permanent of a matrix file");
    for (auto* cmd : {det, per}) {
        cmd->add_option("file", file, "matrix file, '-' for stdin");
        cmd->add_option("--inline", inline_builder, "builder arguments, e.g. \"primeind --n 6\"");
        cmd->add_option("--mod", mod, "reduce modulo M");
        cmd->add_option("--jobs", engine_jobs, "Ryser worker threads")->check(CLI::PositiveNumber);
    }
    det->add_option("--engine", engine)->check(CLI::IsMember({"auto", "field", "bareiss", "naive", "checkerboard"}));
    per->add_option("--engine", engine)->check(CLI::IsMember({"auto", "ryser", "naive", "checkerboard"}));

    // check
    ReportOptions check_ro;
    std::string family;
    i64 p = 0, c = 0, d = 0;
    int conj_id = 0;
    std::vector<std::string> variants;
    auto* check = app.add_subcommand("check", "run one check and print its record(s)");
    check->add_option("family", family)->required()->check(CLI::IsMember(kFamilies));
    check->add_option("--p,--n", p, "prime p (or odd n for conjecture 1)");
    check->add_option("--c", c);
    check->add_option("--d", d);
    check->add_option("--id", conj_id, "conjecture number 1..10")->check(CLI::Range(1, 10));
    check->add_option("--variant,--part,--which", variants, "variant / conjecture part (default: all)");
    add_report_options(check, check_ro);

    // sweep
    ReportOptions sweep_ro;
    SweepSpec spec;
    i64 lo = 3, hi = 0, cmin = 0, cmax = 0, dmin = 0, dmax = 0;
    auto* sw = app.add_subcommand("sweep", "run a check family across a range");
    sw->add_option("family", spec.family)->required()->check(CLI::IsMember(kFamilies));
    sw->add_option("--pmin,--nmin", lo, "lower end of the prime (or odd n) range");
    sw->add_option("--pmax,--nmax", hi, "upper end of the prime (or odd n) range");
    sw->add_option("--cmin", cmin);
    sw->add_option("--cmax", cmax);
    auto* dmin_opt = sw->add_option("--dmin", dmin);
    auto* dmax_opt = sw->add_option("--dmax", dmax);
    sw->add_option("--id", spec.conj_id, "conjecture number 1..10")->check(CLI::Range(1, 10));
    sw->add_option("--variant,--part,--which", spec.variants, "variants / parts (default: all)");
    sw->add_flag("--include-na", sweep_ro.include_na, "also emit not-applicable records");
    add_report_options(sw, sweep_ro);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    if (build->parsed()) {
        std::vector<std::string> rest = build->remaining();
        for (auto it = rest.begin(); it != rest.end();) {
            if (*it == "--out" && it + 1 != rest.end()) {
                out_file = *(it + 1);
                it = rest.erase(it, it + 2);
            } else {
                ++it;
            }
        }
        const Matrix m = build_matrix(rest);
        if (out_file.empty()) {
            write_matrix(std::cout, m);
        } else {
            std::ofstream os(out_file);
            if (!os) throw UsageError("cannot write " + out_file);
            write_matrix(os, m);
        }
        return 0;
    }
    if (det->parsed()) return run_engine(Quantity::det, file, inline_builder, mod, engine, engine_jobs);
    if (per->parsed()) return run_engine(Quantity::per, file, inline_builder, mod, engine, engine_jobs);

    if (check->parsed()) {
        if (family == "conj" && conj_id == 0) throw UsageError("check conj needs --id");
        std::vector<std::string> vs = variants;
        if (vs.empty()) {
            if (family == "dp-theorem") vs = {"c_minus1", "two_two", "six_six"};
            if (family == "background") vs = {"half_range_sq", "full_range_ij"};
            if (family == "conj") vs = conjecture_parts(conj_id);
        }
        if (vs.empty()) vs = {""};
        std::vector<CheckRequest> cells;
        for (const auto& v : vs) cells.push_back({family, p, c, d, conj_id, v});
        return emit_reports(cells, check_ro, true);
    }

    // sweep
    if (spec.family == "conj" && spec.conj_id == 0) throw UsageError("sweep conj needs --id");
    if (hi == 0 && spec.family != "p3-remark") throw UsageError("sweep needs --pmax (or --nmax)");
    spec.lo = lo;
    spec.hi = hi;
    spec.cmin = cmin;
    spec.cmax = cmax;
    if (dmin_opt->count() > 0 || dmax_opt->count() > 0) spec.d_range = std::make_pair(dmin, dmax);
    spec.include_not_applicable = sweep_ro.include_na;
    return emit_reports(plan_sweep(spec), sweep_ro, sweep_ro.include_na);
}

}  // namespace

int main(int argc, char** argv)
{
    try {
        return run(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
