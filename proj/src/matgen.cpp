#include "cglab/matgen.hpp"

#include <random>
#include <sstream>

namespace cglab {

namespace {

std::string str(i64 v) { return std::to_string(v); }
std::string ustr(u64 v) { return std::to_string(v); }

std::string mod_tag(const std::optional<ModCtx>& ctx) { return ctx ? ustr(ctx->modulus()) : "0"; }

i64 param_i(const Provenance& prov, const std::string& key)
{
    auto it = prov.params.find(key);
    if (it == prov.params.end()) throw FormatError("provenance lacks parameter '" + key + "'");
    return std::stoll(it->second);
}

std::optional<ModCtx> param_ctx(const Provenance& prov)
{
    i64 m = param_i(prov, "mod");
    if (m == 0) return std::nullopt;
    return ModCtx::classify(static_cast<u64>(m));
}

// Numerator and denominator of the Cauchy-type term at 1-based indices (j, k).
std::pair<i64, i64> cauchy_term(EntryKind kind, i64 j, i64 k)
{
    switch (kind) {
    case EntryKind::inv_diff: return {1, j - k};
    case EntryKind::ratio_sum_diff: return {j + k, j - k};
    case EntryKind::inv_diff_squares: return {1, j * j - k * k};
    case EntryKind::ratio_sum_squares: return {j * j + k * k, j * j - k * k};
    default: break;
    }
    throw Error(std::string("not a Cauchy-type entry kind: ") + to_string(kind));
}

i64 uniform_in(std::mt19937_64& rng, i64 lo, i64 hi)
{
    auto span = static_cast<u64>(hi - lo + 1);
    return lo + static_cast<i64>(rng() % span);
}

}  // namespace

const char* to_string(EntryKind kind)
{
    switch (kind) {
    case EntryKind::quad_form_pow: return "quadform";
    case EntryKind::inv_diff: return "invdiff";
    case EntryKind::ratio_sum_diff: return "ratiodiff";
    case EntryKind::inv_diff_squares: return "invdiffsq";
    case EntryKind::ratio_sum_squares: return "ratiosq";
    case EntryKind::prime_indicator: return "primeind";
    }
    return "?";
}

const char* to_string(DiagonalPolicy diag)
{
    switch (diag) {
    case DiagonalPolicy::zero: return "zero";
    case DiagonalPolicy::one: return "one";
    case DiagonalPolicy::formula: return "formula";
    }
    return "?";
}

const char* to_string(IndexRange range) { return range == IndexRange::from_zero ? "full0" : "from1"; }

const char* to_string(IndexSet set)
{
    switch (set) {
    case IndexSet::to_p_minus_1: return "p-1";
    case IndexSet::to_p: return "p";
    case IndexSet::half: return "half";
    }
    return "?";
}

EntryKind parse_entry_kind(const std::string& s)
{
    for (auto k : {EntryKind::quad_form_pow, EntryKind::inv_diff, EntryKind::ratio_sum_diff,
                   EntryKind::inv_diff_squares, EntryKind::ratio_sum_squares, EntryKind::prime_indicator}) {
        if (s == to_string(k)) return k;
    }
    throw FormatError("unknown entry kind '" + s + "'");
}

DiagonalPolicy parse_diagonal(const std::string& s)
{
    for (auto d : {DiagonalPolicy::zero, DiagonalPolicy::one, DiagonalPolicy::formula}) {
        if (s == to_string(d)) return d;
    }
    throw FormatError("unknown diagonal policy '" + s + "'");
}

IndexRange parse_index_range(const std::string& s)
{
    if (s == "full0") return IndexRange::from_zero;
    if (s == "from1") return IndexRange::from_one;
    throw FormatError("unknown index range '" + s + "' (expected full0 or from1)");
}

IndexSet parse_index_set(const std::string& s)
{
    for (auto k : {IndexSet::to_p_minus_1, IndexSet::to_p, IndexSet::half}) {
        if (s == to_string(k)) return k;
    }
    throw FormatError("unknown index set '" + s + "' (expected p-1, p or half)");
}

Matrix quad_form_matrix(i64 N, i64 c, i64 d, IndexRange range, u64 exponent, const std::optional<ModCtx>& ctx)
{
    if (exponent < 1) throw Error("quadratic-form exponent must be >= 1");
    const i64 first = range == IndexRange::from_zero ? 0 : 1;
    if (N - first < 1) throw Error("quadratic-form range is empty");
    const auto n = static_cast<std::size_t>(N - first);

    Provenance prov{"quadform",
                    {{"N", str(N)},
                     {"c", str(c)},
                     {"d", str(d)},
                     {"range", to_string(range)},
                     {"exponent", ustr(exponent)},
                     {"mod", mod_tag(ctx)}}};
    Matrix m = ctx ? Matrix::residues(n, *ctx, prov) : Matrix::integers(n, prov);

    for (std::size_t r = 0; r < n; ++r) {
        const i64 i = first + static_cast<i64>(r);
        for (std::size_t s = 0; s < n; ++s) {
            const i64 j = first + static_cast<i64>(s);
            BigInt form = BigInt(static_cast<long>(i * i)) + BigInt(static_cast<long>(c)) * i * j +
                          BigInt(static_cast<long>(d)) * j * j;
            if (ctx) {
                m.set_residue(r, s, ctx->pow(ctx->reduce(form), exponent));
            } else {
                BigInt e;
                mpz_pow_ui(e.get_mpz_t(), form.get_mpz_t(), exponent);
                m.set_integer(r, s, e);
            }
        }
    }
    return m;
}

Matrix cauchy_type_matrix(EntryKind kind, std::size_t n, DiagonalPolicy diag, const ModCtx& ctx)
{
    if (diag == DiagonalPolicy::formula) throw Error("Cauchy-type matrices need a zero or one diagonal");
    Provenance prov{"cauchy",
                    {{"kind", to_string(kind)},
                     {"n", ustr(n)},
                     {"diag", to_string(diag)},
                     {"mod", ustr(ctx.modulus())}}};
    Matrix m = Matrix::residues(n, ctx, prov);
    for (std::size_t r = 0; r < n; ++r) {
        const auto j = static_cast<i64>(r + 1);
        for (std::size_t s = 0; s < n; ++s) {
            const auto k = static_cast<i64>(s + 1);
            if (r == s) {
                m.set_residue(r, s, diag == DiagonalPolicy::one ? 1 : 0);
                continue;
            }
            auto [num, den] = cauchy_term(kind, j, k);
            const u64 den_r = ctx.reduce(den);
            if (!ctx.is_unit(den_r)) throw NonUnitDenominator(j, k, ctx.modulus());
            m.set_residue(r, s, ctx.mul(ctx.reduce(num), ctx.inv(den_r)));
        }
    }
    return m;
}

std::size_t index_set_size(u64 p, IndexSet set)
{
    switch (set) {
    case IndexSet::to_p_minus_1: return static_cast<std::size_t>(p - 1);
    case IndexSet::to_p: return static_cast<std::size_t>(p);
    case IndexSet::half: return static_cast<std::size_t>((p - 1) / 2);
    }
    return 0;
}

Matrix cauchy_type_matrix(EntryKind kind, u64 p, IndexSet set, DiagonalPolicy diag, const ModCtx& ctx)
{
    if (p < 3 || p % 2 == 0) throw Error("index set needs an odd p >= 3");
    Matrix m = cauchy_type_matrix(kind, index_set_size(p, set), diag, ctx);
    Provenance prov = m.provenance();
    prov.params.erase("n");
    prov.params["p"] = ustr(p);
    prov.params["set"] = to_string(set);
    m.set_provenance(std::move(prov));
    return m;
}

Matrix inverse_form_matrix(i64 c, i64 d, std::size_t count, const ModCtx& ctx)
{
    Provenance prov{"invform", {{"c", str(c)}, {"d", str(d)}, {"count", ustr(count)}, {"mod", ustr(ctx.modulus())}}};
    Matrix m = Matrix::residues(count, ctx, prov);
    for (std::size_t r = 0; r < count; ++r) {
        const auto i = static_cast<i64>(r + 1);
        for (std::size_t s = 0; s < count; ++s) {
            const auto j = static_cast<i64>(s + 1);
            const u64 den = ctx.reduce(i * i + c * i * j + d * j * j);
            if (!ctx.is_unit(den)) throw NonUnitDenominator(i, j, ctx.modulus());
            m.set_residue(r, s, ctx.inv(den));
        }
    }
    return m;
}

Matrix prime_indicator_matrix(std::size_t n)
{
    if (n < 1) throw Error("prime indicator matrix needs n >= 1");
    Matrix m = Matrix::integers(n, Provenance{"primeind", {{"n", ustr(n)}, {"mod", "0"}}});
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t s = 0; s < n; ++s) m.set_integer(r, s, is_prime(r + s + 2) ? i64{1} : i64{0});
    }
    return m;
}

Matrix random_checkerboard_matrix(std::size_t n, u64 seed, Symmetry symmetry)
{
    if (n < 1) throw Error("checkerboard matrix needs n >= 1");
    const bool sym = symmetry == Symmetry::symmetric;
    Matrix m = Matrix::integers(
        n, Provenance{"checkerboard", {{"n", ustr(n)}, {"seed", ustr(seed)}, {"symmetric", sym ? "1" : "0"}, {"mod", "0"}}});
    std::mt19937_64 rng(seed);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t s = sym ? r : 0; s < n; ++s) {
            const std::size_t sum = r + s + 2;
            const bool forbidden = sum % 2 == 0 && sum > 2;
            const i64 v = forbidden ? 0 : uniform_in(rng, -9, 9);
            m.set_integer(r, s, v);
            if (sym) m.set_integer(s, r, v);
        }
    }
    return m;
}

Matrix random_skew_checkerboard_matrix(std::size_t half, u64 seed)
{
    if (half < 1) throw Error("skew checkerboard matrix needs m >= 1");
    const std::size_t n = 2 * half;
    Matrix m = Matrix::integers(n, Provenance{"skew", {{"m", ustr(half)}, {"seed", ustr(seed)}, {"mod", "0"}}});
    std::mt19937_64 rng(seed);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t s = r + 1; s < n; ++s) {
            const std::size_t sum = r + s + 2;
            const bool forbidden = sum % 2 == 0 && sum > 2;
            const i64 v = forbidden ? 0 : uniform_in(rng, -9, 9);
            m.set_integer(r, s, v);
            m.set_integer(s, r, -v);
        }
    }
    return m;
}

Matrix random_integer_matrix(std::size_t n, u64 seed, i64 lo, i64 hi)
{
    Matrix m = Matrix::integers(
        n, Provenance{"random", {{"n", ustr(n)}, {"seed", ustr(seed)}, {"lo", str(lo)}, {"hi", str(hi)}, {"mod", "0"}}});
    std::mt19937_64 rng(seed);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t s = 0; s < n; ++s) m.set_integer(r, s, uniform_in(rng, lo, hi));
    }
    return m;
}

Matrix random_residue_matrix(std::size_t n, const ModCtx& ctx, u64 seed)
{
    Matrix m = Matrix::residues(
        n, ctx, Provenance{"random_residue", {{"n", ustr(n)}, {"seed", ustr(seed)}, {"mod", ustr(ctx.modulus())}}});
    std::mt19937_64 rng(seed);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t s = 0; s < n; ++s) m.set_residue(r, s, rng() % ctx.modulus());
    }
    return m;
}

unsigned BivariatePoly::x_degree() const
{
    unsigned deg = 0;
    for (std::size_t k = 0; k < coeff.size(); ++k) {
        for (i64 c : coeff[k]) {
            if (c != 0) deg = static_cast<unsigned>(k);
        }
    }
    return deg;
}

i64 BivariatePoly::eval(i64 x, i64 y) const
{
    i64 acc = 0;
    i64 xp = 1;
    for (const auto& row : coeff) {
        i64 yp = 1;
        for (i64 c : row) {
            acc += c * xp * yp;
            yp *= y;
        }
        xp *= x;
    }
    return acc;
}

std::string BivariatePoly::serialize() const
{
    std::ostringstream os;
    for (std::size_t k = 0; k < coeff.size(); ++k) {
        if (k != 0) os << ';';
        for (std::size_t l = 0; l < coeff[k].size(); ++l) {
            if (l != 0) os << ',';
            os << coeff[k][l];
        }
    }
    return os.str();
}

BivariatePoly BivariatePoly::parse(const std::string& s)
{
    BivariatePoly P;
    std::istringstream rows(s);
    std::string row;
    while (std::getline(rows, row, ';')) {
        std::vector<i64> cs;
        std::istringstream cells(row);
        std::string cell;
        while (std::getline(cells, cell, ',')) cs.push_back(std::stoll(cell));
        P.coeff.push_back(std::move(cs));
    }
    return P;
}

BivariatePoly random_poly(unsigned x_degree, unsigned y_degree, u64 seed)
{
    std::mt19937_64 rng(seed);
    BivariatePoly P;
    P.coeff.assign(x_degree + 1, std::vector<i64>(y_degree + 1, 0));
    for (auto& row : P.coeff) {
        for (auto& c : row) c = uniform_in(rng, -5, 5);
    }
    return P;
}

Matrix poly_eval_matrix(const BivariatePoly& P, std::size_t n)
{
    if (n < 2 || P.x_degree() + 1 >= n) {
        throw Error("poly_eval_matrix needs deg_x P < n - 1 (deg " + std::to_string(P.x_degree()) + ", n " +
                    std::to_string(n) + ")");
    }
    Matrix m = Matrix::integers(n, Provenance{"poly", {{"n", ustr(n)}, {"P", P.serialize()}, {"mod", "0"}}});
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t s = 0; s < n; ++s) {
            m.set_integer(r, s, P.eval(static_cast<i64>(r + 1), static_cast<i64>(s + 1)));
        }
    }
    return m;
}

Matrix rebuild(const Provenance& prov)
{
    const std::string& b = prov.builder;
    auto get = [&](const std::string& key) -> const std::string& {
        auto it = prov.params.find(key);
        if (it == prov.params.end()) throw FormatError("provenance lacks parameter '" + key + "'");
        return it->second;
    };
    if (b == "quadform") {
        return quad_form_matrix(param_i(prov, "N"), param_i(prov, "c"), param_i(prov, "d"),
                                parse_index_range(get("range")), static_cast<u64>(param_i(prov, "exponent")),
                                param_ctx(prov));
    }
    if (b == "cauchy") {
        auto ctx = ModCtx::classify(static_cast<u64>(param_i(prov, "mod")));
        auto kind = parse_entry_kind(get("kind"));
        auto diag = parse_diagonal(get("diag"));
        if (prov.params.count("p") != 0) {
            return cauchy_type_matrix(kind, static_cast<u64>(param_i(prov, "p")), parse_index_set(get("set")), diag,
                                      ctx);
        }
        return cauchy_type_matrix(kind, static_cast<std::size_t>(param_i(prov, "n")), diag, ctx);
    }
    if (b == "invform") {
        return inverse_form_matrix(param_i(prov, "c"), param_i(prov, "d"),
                                   static_cast<std::size_t>(param_i(prov, "count")),
                                   ModCtx::classify(static_cast<u64>(param_i(prov, "mod"))));
    }
    if (b == "primeind") return prime_indicator_matrix(static_cast<std::size_t>(param_i(prov, "n")));
    if (b == "checkerboard") {
        return random_checkerboard_matrix(static_cast<std::size_t>(param_i(prov, "n")),
                                          static_cast<u64>(param_i(prov, "seed")),
                                          get("symmetric") == "1" ? Symmetry::symmetric : Symmetry::none);
    }
    if (b == "skew") {
        return random_skew_checkerboard_matrix(static_cast<std::size_t>(param_i(prov, "m")),
                                               static_cast<u64>(param_i(prov, "seed")));
    }
    if (b == "random") {
        return random_integer_matrix(static_cast<std::size_t>(param_i(prov, "n")),
                                     static_cast<u64>(param_i(prov, "seed")), param_i(prov, "lo"),
                                     param_i(prov, "hi"));
    }
    if (b == "random_residue") {
        return random_residue_matrix(static_cast<std::size_t>(param_i(prov, "n")),
                                     ModCtx::classify(static_cast<u64>(param_i(prov, "mod"))),
                                     static_cast<u64>(param_i(prov, "seed")));
    }
    if (b == "poly") {
        return poly_eval_matrix(BivariatePoly::parse(get("P")), static_cast<std::size_t>(param_i(prov, "n")));
    }
    throw FormatError("cannot rebuild matrix from builder '" + b + "'");
}

std::vector<std::pair<std::size_t, std::size_t>> checkerboard_violations(const Matrix& m)
{
    std::vector<std::pair<std::size_t, std::size_t>> bad;
    const std::size_t n = m.order();
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t s = 0; s < n; ++s) {
            const std::size_t sum = r + s + 2;
            if (sum % 2 == 0 && sum > 2 && !m.is_zero(r, s)) bad.emplace_back(r + 1, s + 1);
        }
    }
    return bad;
}

}  // namespace cglab
