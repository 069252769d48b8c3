#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "nakayama/oracle.hpp"

using namespace nakayama;
using testutil::ks;

TEST_CASE("factor lists") {
    const auto a = ks("2,2,3");
    CHECK(oracle::factor_list(a, 3, 3).factors == std::vector<int>{3, 1, 2});
    CHECK(oracle::projective_factors(a, 1).factors == std::vector<int>{1, 2});
    CHECK_THROWS_AS(oracle::validate_factor_list(a, {{1, 3}}), InvalidFactorList);
    CHECK_THROWS_AS(oracle::validate_factor_list(a, {{1, 2, 3}}), InvalidFactorList);
    CHECK_THROWS_AS(oracle::validate_factor_list(a, {{}}), InvalidFactorList);
    // line quivers have no wraparound
    CHECK_THROWS_AS(oracle::factor_list(ks("2,2,1"), 3, 2), InvalidFactorList);
}

TEST_CASE("brute syzygy") {
    const auto a = ks("2,2,3");
    const auto s = oracle::brute_syzygy(a, {{1}});
    REQUIRE(s.has_value());
    CHECK(s->factors == std::vector<int>{2});
    CHECK_FALSE(oracle::brute_syzygy(a, {{3, 1, 2}}).has_value()); // full projective
}

TEST_CASE("brute projective dimension matches the fast route") {
    for (const auto& a : testutil::all_admissible_upto(3, 7)) {
        for (const Indec& x : all_indecs(a)) {
            const auto fl = oracle::factor_list(a, x.top, x.len);
            CHECK(oracle::brute_proj_dim(a, fl) == proj_dim(a, x));
        }
    }
}

TEST_CASE("essential-extension search finds the injective envelope") {
    for (const auto& a : testutil::all_admissible_upto(3, 7)) {
        for (int s = 1; s <= a.n(); ++s) {
            const auto brute = oracle::injective_envelope_brute(a, s);
            const Indec fast = injective_envelope(a, s);
            CHECK(brute.top() == fast.top);
            CHECK(brute.length() == fast.len);
        }
    }
}

TEST_CASE("verify_certificate accepts the 5,6,6 witness") {
    const auto a = ks("5,6,6");
    const GpOutcome out = gp_test(a, Indec{2, 3});
    const auto* cert = std::get_if<GpCertificate>(&out);
    REQUIRE(cert != nullptr);
    CHECK(oracle::verify_certificate(a, *cert));
}

TEST_CASE("verify_certificate rejects perturbed witnesses") {
    const auto a = ks("5,6,6");
    GpOutcome out = gp_test(a, Indec{2, 3});
    auto cert = std::get<GpCertificate>(out);

    auto bad_valuation = cert;
    bad_valuation.valuations[0] += 1;
    CHECK_FALSE(oracle::verify_certificate(a, bad_valuation));

    auto bad_module = cert;
    bad_module.modules[0] = Indec{2, 4};
    CHECK_FALSE(oracle::verify_certificate(a, bad_module));

    auto bad_cover = cert;
    bad_cover.proj_indices[0] = 1;
    CHECK_FALSE(oracle::verify_certificate(a, bad_cover));

    auto malformed = cert;
    malformed.valuations.clear();
    CHECK_THROWS_AS(oracle::verify_certificate(a, malformed), MalformedCertificate);

    auto out_of_range = cert;
    out_of_range.modules[0] = Indec{2, 9};
    CHECK_THROWS_AS(oracle::verify_certificate(a, out_of_range), MalformedCertificate);
}

TEST_CASE("every emitted certificate verifies") {
    for (const auto& a : testutil::all_admissible_upto(3, 8)) {
        for (const GpModule& g : gp_modules(a)) {
            CHECK(g.module == g.certificate.modules.front());
            CHECK(oracle::verify_certificate(a, g.certificate));
        }
    }
}
