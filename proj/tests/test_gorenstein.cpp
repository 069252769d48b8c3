#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "nakayama/oracle.hpp"

using namespace nakayama;
using testutil::ks;

TEST_CASE("global dimension of the four finite n=3 cycles") {
    CHECK(global_dim(ks("2,2,3")) == DimValue::finite(3));
    CHECK(global_dim(ks("2,4,3")) == DimValue::finite(2));
    CHECK(global_dim(ks("3,4,4")) == DimValue::finite(4));
    CHECK(global_dim(ks("3,5,4")) == DimValue::finite(2));
    CHECK(global_dim(ks("1")) == DimValue::finite(0));
    CHECK(global_dim(ks("2,3")) == DimValue::finite(2));
    CHECK(global_dim(ks("2,3,3")) == DimValue::infinite());
}

TEST_CASE("finitistic dimension") {
    for (int k = 1; k <= 4; ++k) {
        const auto a = KupischSeries({2 * k + 1, 2 * k + 2});
        CHECK(fin_dim(a) == 1);
    }
    CHECK(fin_dim(ks("4,4,4")) == 0);
    CHECK(fin_dim(ks("2,2,3")) == 3);
}

TEST_CASE("Gorenstein recursion") {
    for (int k = 1; k <= 4; ++k) {
        const auto g = is_gorenstein(KupischSeries({2 * k, 2 * k + 1}));
        CHECK(g.gorenstein);
        CHECK(g.v_dim == 2);
    }
    const auto g334 = is_gorenstein(ks("3,3,4"));
    CHECK(g334.gorenstein);
    CHECK(g334.v_dim == 2);

    const auto g566 = is_gorenstein(ks("5,6,6"));
    CHECK_FALSE(g566.gorenstein);
    CHECK_FALSE(g566.v_dim.has_value());

    CHECK(is_gorenstein(ks("4,4,4")).v_dim == 0);
}

TEST_CASE("two-sided Gorenstein oracle") {
    CHECK(gorenstein_oracle(ks("4,4,4")));
    CHECK_FALSE(gorenstein_oracle(ks("2,3,3")));
    CHECK(gorenstein_oracle(ks("2,4,3")));
    for (const auto& a : testutil::all_admissible_upto(3, 8))
        CHECK(gorenstein_oracle(a) == is_gorenstein(a).gorenstein);
}

TEST_CASE("gp_test certifies the periodic module over 5,6,6") {
    const auto a = ks("5,6,6");
    const GpOutcome out = gp_test(a, Indec{2, 3});
    const auto* cert = std::get_if<GpCertificate>(&out);
    REQUIRE(cert != nullptr);
    CHECK(cert->period == 1);
    CHECK(cert->modules == std::vector<Indec>{Indec{2, 3}});
    CHECK(cert->proj_indices == std::vector<int>{2});
    CHECK(cert->valuations == std::vector<int>{3});
}

TEST_CASE("gp_test rejections") {
    const auto a = ks("5,6,6");
    const GpOutcome o1 = gp_test(a, Indec{2, 1});
    REQUIRE(std::holds_alternative<NotGpReason>(o1));
    CHECK(std::get<NotGpReason>(o1) == NotGpReason::ThetaImperfect);

    const auto b = ks("2,3,3");
    for (const Indec& x : all_indecs(b)) {
        if (is_projective(b, x)) continue;
        CHECK(std::holds_alternative<NotGpReason>(gp_test(b, x)));
    }

    CHECK_THROWS_AS(gp_test(a, Indec{2, 6}), ProjectiveInput);
    CHECK_THROWS_AS(gp_test(ks("2,2,1"), Indec{1, 1}), LineUnsupported);
}

TEST_CASE("gp_modules enumerations") {
    SECTION("the 8,9,9 list is exactly S_2^[3] and S_2^[6]") {
        const auto gps = gp_modules(ks("8,9,9"));
        REQUIRE(gps.size() == 2);
        CHECK(gps[0].module == Indec{2, 3});
        CHECK(gps[1].module == Indec{2, 6});
        CHECK(gps[0].certificate.period == 2);
        // the period-2 complex alternates valuations 3 and 6, summing to l(P*_2) = 9
        CHECK(gps[0].certificate.valuations == std::vector<int>{6, 3});
        CHECK(gps[1].certificate.valuations == std::vector<int>{3, 6});
    }
    SECTION("self-injective algebras are saturated with gp modules") {
        const auto a = ks("3,3");
        const auto gps = gp_modules(a);
        CHECK(gps.size() == 4); // every non-projective indecomposable
    }
    SECTION("CM-free cases are empty") {
        CHECK(gp_modules(ks("7,7,8")).empty());
        CHECK(gp_modules(ks("2,2,1")).empty());
    }
}

TEST_CASE("cm-freeness") {
    CHECK(is_cm_free(ks("2,3,3")));
    for (int k = 1; k <= 4; ++k) CHECK(is_cm_free(KupischSeries({2 * k + 1, 2 * k + 2})));
    CHECK_FALSE(is_cm_free(ks("5,6,6")));
    CHECK(is_cm_free(ks("2,2,1")));
}

TEST_CASE("trichotomy classification") {
    const auto c1 = classify(ks("6,6,7"));
    CHECK(c1.label == TrichotomyClass::Label::Gorenstein);
    CHECK(c1.v_dim == 2);
    CHECK(classify(ks("4,4,5")).label == TrichotomyClass::Label::NonGorensteinCmFree);
    CHECK(classify(ks("5,6,6")).label == TrichotomyClass::Label::NonGorensteinNotCmFree);
}

TEST_CASE("trichotomy structure over the range") {
    for (const auto& a : testutil::all_admissible_upto(3, 8)) {
        const auto cls = classify(a);
        const bool finite = global_dim(a).is_finite();
        // Gorenstein and CM-free together characterize finite global dimension
        const bool gor_cm = cls.label == TrichotomyClass::Label::Gorenstein && is_cm_free(a);
        CHECK(gor_cm == finite);
        CHECK((cls.label == TrichotomyClass::Label::Gorenstein) == cls.v_dim.has_value());
        if (cls.v_dim == 0) CHECK(is_self_injective(a));
        // for Gorenstein algebras the virtual dimension is also the one-sided
        // injective dimension of the regular module
        if (cls.label == TrichotomyClass::Label::Gorenstein) {
            int worst = 0;
            for (int j = 1; j <= a.n(); ++j) {
                const DimValue d = inj_dim(a, Indec{j, a.c(j)});
                REQUIRE(d.is_finite());
                worst = std::max(worst, d.value());
            }
            CHECK(worst == *cls.v_dim);
        }
        // syzygy closure of the certified list
        for (const GpModule& g : gp_modules(a)) {
            const auto next = syzygy(a, g.module);
            REQUIRE(next.has_value());
            if (!is_projective(a, *next))
                CHECK(std::holds_alternative<GpCertificate>(gp_test(a, *next)));
        }
    }
}
