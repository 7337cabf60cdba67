#include <sstream>

#include "doctest.h"

#include "cglab/detper.hpp"
#include "cglab/matgen.hpp"
#include "cglab/matrix_io.hpp"

using namespace cglab;

TEST_CASE("matrix text format")
{
    const auto m = quad_form_matrix(3, 1, 1, IndexRange::from_zero, 1, std::nullopt);
    CHECK(format_matrix(m) == "3 0\n0 1 4\n1 3 7\n4 7 12\n");

    const auto c = cauchy_type_matrix(EntryKind::inv_diff, 3, IndexSet::to_p_minus_1, DiagonalPolicy::zero,
                                      ModCtx::prime_power(3, 2));
    CHECK(format_matrix(c) == "2 9\n0 8\n1 0\n");

    const auto back = parse_matrix("2 9\n0 8\n1 0\n");
    REQUIRE(back.ctx().has_value());
    CHECK(back.ctx()->kind() == ModKind::prime_power);
    CHECK(back.residue(0, 1) == 8);

    const auto neg = parse_matrix("2 0\n-3 5\n7 -11\n");
    CHECK(det_exact(neg) == 33 - 35);
}

TEST_CASE("round trip keeps engine results")
{
    const auto ctx = ModCtx::prime_power(7, 2);
    for (u64 seed = 0; seed < 20; ++seed) {
        const auto r = random_residue_matrix(1 + seed % 8, ctx, seed);
        const auto r2 = parse_matrix(format_matrix(r));
        CHECK(r2 == r);
        CHECK(per_ryser(r2, ctx).value() == per_ryser(r, ctx).value());
        CHECK(det_mod(r2, ctx).value() == det_mod(r, ctx).value());

        const auto e = random_checkerboard_matrix(1 + seed % 9, seed);
        const auto e2 = parse_matrix(format_matrix(e));
        CHECK(det_exact(e2) == det_exact(e));
        CHECK(per_ryser_exact(e2) == per_ryser_exact(e));
    }
}

TEST_CASE("format errors")
{
    CHECK_THROWS_AS(parse_matrix(""), FormatError);
    CHECK_THROWS_AS(parse_matrix("2 0\n1 2\n3\n"), FormatError);
    CHECK_THROWS_AS(parse_matrix("2 7\n1 -2\n3 4\n"), FormatError);
    CHECK_THROWS_AS(parse_matrix("2 7\n1 9\n3 4\n"), FormatError);
    CHECK_THROWS_AS(parse_matrix("1 0\n1 2\n"), FormatError);
    CHECK_THROWS_AS(parse_matrix("1 0\nx\n"), FormatError);
    CHECK_THROWS_AS(parse_matrix("-1 0\n"), FormatError);
    CHECK_THROWS(parse_matrix("1 8\n1\n"));
}
