#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace nakayama;
using testutil::ks;

namespace {

// cofactor expansion, the slow reference route
BigInt det_cofactor(const IntMatrix& m) {
    const int n = m.rows();
    if (n == 1) return m.at(0, 0);
    BigInt sum = 0;
    for (int k = 0; k < n; ++k) {
        if (m.at(0, k) == 0) continue;
        IntMatrix minor(n - 1, n - 1);
        for (int i = 1; i < n; ++i)
            for (int j = 0, jj = 0; j < n; ++j) {
                if (j == k) continue;
                minor.at(i - 1, jj++) = m.at(i, j);
            }
        const BigInt term = m.at(0, k) * det_cofactor(minor);
        sum += (k % 2 == 0) ? term : -term;
    }
    return sum;
}

IntMatrix from_rows(const std::vector<std::vector<int>>& rows) {
    IntMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            m.at(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
    return m;
}

} // namespace

TEST_CASE("determinant of Cartan matrices") {
    CHECK(determinant(cartan(ks("2,2,3"))) == 1);
    CHECK(determinant(cartan(ks("2,3,3"))) == 0);
    CHECK(determinant(IntMatrix::identity(3)) == 1);
    CHECK(determinant(from_rows({{0, 1}, {1, 0}})) == -1);
    IntMatrix rect(2, 3);
    CHECK_THROWS_AS(determinant(rect), NonSquare);
}

TEST_CASE("determinant agrees with cofactor expansion over the survey range") {
    for (const auto& a : testutil::all_admissible_upto(4, 7)) {
        const auto m = cartan(a);
        CHECK(determinant(m) == det_cofactor(m));
    }
}

TEST_CASE("smith normal form of the worked examples") {
    const SmithForm s1 = smith_normal_form(cartan(ks("2,3,3")));
    CHECK(s1.invariant_factors == std::vector<BigInt>{1, 1});
    CHECK(s1.free_rank == 1);

    const SmithForm s2 = smith_normal_form(IntMatrix::identity(4));
    CHECK(s2.invariant_factors == std::vector<BigInt>{1, 1, 1, 1});
    CHECK(s2.free_rank == 0);

    const SmithForm s3 = smith_normal_form(cartan(ks("6")));
    CHECK(s3.invariant_factors == std::vector<BigInt>{6});
    CHECK(s3.free_rank == 0);
}

TEST_CASE("smith normal form on constructed matrices") {
    CHECK(smith_normal_form(from_rows({{2, 0}, {0, 4}})).invariant_factors ==
          std::vector<BigInt>{2, 4});
    CHECK(smith_normal_form(from_rows({{2, 0}, {0, 3}})).invariant_factors ==
          std::vector<BigInt>{1, 6});
    const SmithForm s = smith_normal_form(from_rows({{2, 4}, {4, 8}}));
    CHECK(s.invariant_factors == std::vector<BigInt>{2});
    CHECK(s.free_rank == 1);
    const SmithForm neg = smith_normal_form(from_rows({{0, -1}, {1, 0}}));
    CHECK(neg.invariant_factors == std::vector<BigInt>{1, 1});
}

TEST_CASE("smith form properties over the survey range") {
    for (const auto& a : testutil::all_admissible_upto(4, 7)) {
        const auto m = cartan(a);
        const SmithForm s = smith_normal_form(m);
        CHECK(s.rank() + s.free_rank == a.n());
        for (std::size_t i = 0; i + 1 < s.invariant_factors.size(); ++i) {
            CHECK(s.invariant_factors[i] > 0);
            CHECK(s.invariant_factors[i + 1] % s.invariant_factors[i] == 0);
        }
        const BigInt det = determinant(m);
        if (s.free_rank == 0) {
            BigInt prod = 1;
            for (const auto& d : s.invariant_factors) prod *= d;
            CHECK(prod == (det < 0 ? BigInt(-det) : det));
        } else {
            CHECK(det == 0);
        }
    }
}
