#include <sstream>

#include "doctest.h"

#include "cglab/detper.hpp"
#include "cglab/matgen.hpp"

using namespace cglab;

namespace {

std::vector<std::vector<long>> rows_of(const Matrix& m)
{
    std::vector<std::vector<long>> out(m.order(), std::vector<long>(m.order()));
    for (std::size_t i = 0; i < m.order(); ++i) {
        for (std::size_t j = 0; j < m.order(); ++j) out[i][j] = m.integer(i, j).get_si();
    }
    return out;
}

// (x)^e mod m by repeated multiplication, entirely separate from ModCtx
u64 slow_pow(i64 x, u64 e, u64 m)
{
    const i64 sm = static_cast<i64>(m);
    const u64 base = static_cast<u64>(((x % sm) + sm) % sm);
    u64 r = 1 % m;
    for (u64 k = 0; k < e; ++k) r = static_cast<u64>(static_cast<u128>(r) * base % m);
    return r;
}

}  // namespace

TEST_CASE("quadratic-form builder")
{
    const auto m = quad_form_matrix(3, 1, 1, IndexRange::from_zero, 1, std::nullopt);
    CHECK(m.is_exact());
    CHECK(rows_of(m) == std::vector<std::vector<long>>{{0, 1, 4}, {1, 3, 7}, {4, 7, 12}});
    CHECK(det_exact(m) == -4);

    const auto z = quad_form_matrix(6, 0, 0, IndexRange::from_zero, 2, std::nullopt);
    for (std::size_t i = 0; i < 6; ++i) {
        for (std::size_t j = 0; j < 6; ++j) CHECK(z.integer(i, j) == BigInt(static_cast<long>(i * i * i * i)));
    }
    CHECK(det_exact(z) == 0);

    const auto ctx = ModCtx::prime(5);
    CHECK(det_field(quad_form_matrix(5, 0, 1, IndexRange::from_zero, 3, ctx)).value() == 0);

    const auto from1 = quad_form_matrix(11, 3, -1, IndexRange::from_one, 9, ModCtx::prime(11));
    CHECK(from1.order() == 10);
    for (std::size_t r = 0; r < 10; ++r) {
        for (std::size_t s = 0; s < 10; ++s) {
            const i64 i = static_cast<i64>(r) + 1, j = static_cast<i64>(s) + 1;
            CHECK(from1.residue(r, s) == slow_pow(i * i + 3 * i * j - j * j, 9, 11));
        }
    }
}

TEST_CASE("quadratic-form symmetry")
{
    for (i64 c = -4; c <= 4; ++c) {
        const auto m = quad_form_matrix(13, c, 1, IndexRange::from_zero, 11, ModCtx::prime(13));
        const auto e = quad_form_matrix(6, c, 1, IndexRange::from_zero, 3, std::nullopt);
        for (std::size_t i = 0; i < 13; ++i) {
            for (std::size_t j = 0; j < 13; ++j) CHECK(m.residue(i, j) == m.residue(j, i));
        }
        for (std::size_t i = 0; i < 6; ++i) {
            for (std::size_t j = 0; j < 6; ++j) CHECK(e.integer(i, j) == e.integer(j, i));
        }
        for (i64 d = -3; d <= 3; ++d) {
            if (d == 0) continue;
            const auto a = quad_form_matrix(7, c, d, IndexRange::from_zero, 1, std::nullopt);
            for (std::size_t i = 0; i < 7; ++i) {
                for (std::size_t j = 0; j < 7; ++j) {
                    const long ii = static_cast<long>(i), jj = static_cast<long>(j);
                    CHECK(a.integer(i, j) == BigInt(jj * jj * d + c * ii * jj + ii * ii));
                }
            }
        }
    }
}

TEST_CASE("Cauchy-type builders")
{
    const auto ctx9 = ModCtx::prime_power(3, 2);
    const auto m = cauchy_type_matrix(EntryKind::inv_diff, 3, IndexSet::to_p_minus_1, DiagonalPolicy::zero, ctx9);
    CHECK(rows_of(m) == std::vector<std::vector<long>>{{0, 8}, {1, 0}});

    for (u64 p : {5ULL, 7ULL, 13ULL}) {
        const auto ctx = ModCtx::prime_power(p, 2);
        const auto r = cauchy_type_matrix(EntryKind::ratio_sum_diff, p, IndexSet::to_p, DiagonalPolicy::one, ctx);
        CHECK(r.order() == p);
        for (std::size_t j = 1; j < p; ++j) {
            CHECK(r.residue(j - 1, p - j - 1) % p == 0);
            CHECK(r.residue(j - 1, j - 1) == 1);
        }
        // entry * (j - k) == 1 on 1..p-1
        const auto inv = cauchy_type_matrix(EntryKind::inv_diff, p, IndexSet::to_p_minus_1, DiagonalPolicy::zero, ctx);
        for (std::size_t j = 1; j < p; ++j) {
            for (std::size_t k = 1; k < p; ++k) {
                if (j == k) {
                    CHECK(inv.residue(j - 1, k - 1) == 0);
                    continue;
                }
                const u64 diff = ctx.reduce(static_cast<i64>(j) - static_cast<i64>(k));
                CHECK(ctx.mul(inv.residue(j - 1, k - 1), diff) == 1);
            }
        }
    }

    const auto ctx7 = ModCtx::prime(7);
    const auto sq = cauchy_type_matrix(EntryKind::inv_diff_squares, 7, IndexSet::half, DiagonalPolicy::one, ctx7);
    CHECK(sq.order() == 3);
    for (std::size_t j = 1; j <= 3; ++j) {
        for (std::size_t k = 1; k <= 3; ++k) {
            if (j == k) continue;
            const u64 den = ctx7.reduce(static_cast<i64>(j * j) - static_cast<i64>(k * k));
            CHECK(ctx7.mul(sq.residue(j - 1, k - 1), den) == 1);
        }
    }

    const auto ctx343 = ModCtx::prime_power(7, 3);
    const auto rs = cauchy_type_matrix(EntryKind::ratio_sum_squares, 7, IndexSet::half, DiagonalPolicy::one, ctx343);
    // (1 + 4)/(1 - 4) = -5/3
    CHECK(ctx343.mul(rs.residue(0, 1), 3) == ctx343.reduce(-5));
}

TEST_CASE("non-unit denominators are rejected")
{
    const auto ctx = ModCtx::prime(5);
    try {
        cauchy_type_matrix(EntryKind::inv_diff, 6, DiagonalPolicy::zero, ctx);
        FAIL("expected NonUnitDenominator");
    } catch (const NonUnitDenominator& e) {
        CHECK((e.j() - e.k()) % 5 == 0);
    }
    CHECK_THROWS_AS(cauchy_type_matrix(EntryKind::inv_diff_squares, 7, IndexSet::to_p_minus_1, DiagonalPolicy::one,
                                       ModCtx::prime(7)),
                    NonUnitDenominator);
    CHECK_THROWS_AS(inverse_form_matrix(0, 1, 6, ModCtx::prime(13)), NonUnitDenominator);
    CHECK_THROWS(cauchy_type_matrix(EntryKind::quad_form_pow, 4, DiagonalPolicy::zero, ctx));
    CHECK_THROWS(cauchy_type_matrix(EntryKind::inv_diff, 4, DiagonalPolicy::formula, ctx));
}

TEST_CASE("index set sizes")
{
    CHECK(index_set_size(11, IndexSet::to_p_minus_1) == 10);
    CHECK(index_set_size(11, IndexSet::to_p) == 11);
    CHECK(index_set_size(11, IndexSet::half) == 5);
}

TEST_CASE("prime indicator matrix")
{
    CHECK(rows_of(prime_indicator_matrix(1)) == std::vector<std::vector<long>>{{1}});
    CHECK(rows_of(prime_indicator_matrix(2)) == std::vector<std::vector<long>>{{1, 1}, {1, 0}});
    CHECK(is_perfect_square(abs(det_exact(prime_indicator_matrix(4)))));
    const auto m = prime_indicator_matrix(20);
    for (std::size_t i = 0; i < 20; ++i) {
        for (std::size_t j = 0; j < 20; ++j) {
            CHECK(m.integer(i, j) == m.integer(j, i));
            CHECK((m.integer(i, j) == 1) == is_prime(i + j + 2));
        }
    }
    CHECK(checkerboard_violations(m).empty());
}

TEST_CASE("random checkerboard builders")
{
    for (u64 seed = 0; seed < 20; ++seed) {
        const auto two = random_checkerboard_matrix(2, seed);
        CHECK(two.integer(1, 1) == 0);
        const auto three = random_checkerboard_matrix(3, seed);
        CHECK(three.integer(1, 1) == 0);
        CHECK(three.integer(0, 2) == 0);
        CHECK(three.integer(2, 0) == 0);
        CHECK(three.integer(2, 2) == 0);
        const auto sym = random_checkerboard_matrix(7, seed, Symmetry::symmetric);
        CHECK(checkerboard_violations(sym).empty());
        for (std::size_t i = 0; i < 7; ++i) {
            for (std::size_t j = 0; j < 7; ++j) CHECK(sym.integer(i, j) == sym.integer(j, i));
        }
        const auto sk = random_skew_checkerboard_matrix(2, seed);
        CHECK(sk.order() == 4);
        CHECK(checkerboard_violations(sk).empty());
        for (std::size_t i = 0; i < 4; ++i) {
            CHECK(sk.integer(i, i) == 0);
            for (std::size_t j = 0; j < 4; ++j) CHECK(sk.integer(j, i) == -sk.integer(i, j));
        }
    }
    // entries are not all zero on the support
    bool any = false;
    for (u64 seed = 0; seed < 5 && !any; ++seed) any = random_checkerboard_matrix(5, seed).integer(0, 1) != 0;
    CHECK(any);
}

TEST_CASE("support violations are reported 1-based")
{
    auto m = Matrix::integers(4);
    m.set_integer(1, 1, 3);  // cell (2,2)
    m.set_integer(0, 0, 5);  // (1,1) is allowed
    m.set_integer(3, 1, 1);  // (4,2)
    const auto bad = checkerboard_violations(m);
    REQUIRE(bad.size() == 2);
    CHECK(bad[0] == std::make_pair<std::size_t, std::size_t>(2, 2));
    CHECK(bad[1] == std::make_pair<std::size_t, std::size_t>(4, 2));
}

TEST_CASE("polynomial evaluation matrices")
{
    BivariatePoly one{{{1}}};
    auto m = poly_eval_matrix(one, 2);
    CHECK(rows_of(m) == std::vector<std::vector<long>>{{1, 1}, {1, 1}});
    CHECK(det_exact(m) == 0);

    // x + y
    CHECK(det_exact(poly_eval_matrix(BivariatePoly::parse("0,1;1"), 3)) == 0);
    // x^2
    const auto x2 = BivariatePoly::parse("0;0;1");
    CHECK(x2.x_degree() == 2);
    CHECK(x2.eval(3, 5) == 9);
    CHECK(det_exact(poly_eval_matrix(x2, 4)) == 0);
    CHECK_THROWS(poly_eval_matrix(x2, 3));

    for (std::size_t n = 3; n <= 8; ++n) {
        for (u64 seed = 0; seed < 50; ++seed) {
            const auto P = random_poly(static_cast<unsigned>(n - 2), 3, seed * 31 + n);
            CHECK(P.x_degree() < n - 1);
            CHECK(BivariatePoly::parse(P.serialize()).serialize() == P.serialize());
            const auto pm = poly_eval_matrix(P, n);
            CHECK(det_exact(pm) == 0);
            CHECK(det_naive(pm) == 0);
        }
    }
    // a degree n-1 polynomial can give a nonsingular matrix
    const auto big = BivariatePoly::parse("1;0,1;0,0,1");
    CHECK_THROWS(poly_eval_matrix(big, 3));
    auto full = Matrix::integers(3);
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) full.set_integer(i, j, big.eval(static_cast<i64>(i + 1), static_cast<i64>(j + 1)));
    }
    CHECK(det_exact(full) != 0);
}

TEST_CASE("provenance rebuilds bit-exactly")
{
    const auto ctx = ModCtx::prime_power(5, 2);
    const Matrix ms[] = {
        quad_form_matrix(7, 2, -3, IndexRange::from_one, 5, ModCtx::prime(7)),
        quad_form_matrix(5, 1, 2, IndexRange::from_zero, 3, std::nullopt),
        cauchy_type_matrix(EntryKind::ratio_sum_diff, 5, IndexSet::to_p, DiagonalPolicy::one, ctx),
        cauchy_type_matrix(EntryKind::inv_diff, 4, DiagonalPolicy::zero, ctx),
        inverse_form_matrix(-1, 1, 4, ModCtx::prime(5)),
        prime_indicator_matrix(9),
        random_checkerboard_matrix(8, 77, Symmetry::symmetric),
        random_skew_checkerboard_matrix(3, 5),
        random_integer_matrix(6, 9, -100, 100),
        random_residue_matrix(6, ctx, 3),
        poly_eval_matrix(random_poly(2, 2, 4), 5),
    };
    for (const auto& m : ms) {
        const auto again = rebuild(m.provenance());
        CHECK(again == m);
        CHECK(again.provenance() == m.provenance());
    }
    CHECK_THROWS(rebuild(Provenance{"nope", {}}));
    CHECK_THROWS_AS(rebuild(Provenance{"primeind", {}}), FormatError);
}

TEST_CASE("enum names round-trip")
{
    for (auto k : {EntryKind::quad_form_pow, EntryKind::inv_diff, EntryKind::ratio_sum_diff, EntryKind::inv_diff_squares,
                   EntryKind::ratio_sum_squares, EntryKind::prime_indicator}) {
        CHECK(parse_entry_kind(to_string(k)) == k);
    }
    for (auto s : {IndexSet::to_p_minus_1, IndexSet::to_p, IndexSet::half}) CHECK(parse_index_set(to_string(s)) == s);
    CHECK(parse_index_range("full0") == IndexRange::from_zero);
    CHECK(parse_diagonal("one") == DiagonalPolicy::one);
    CHECK_THROWS_AS(parse_entry_kind("bogus"), FormatError);
}
