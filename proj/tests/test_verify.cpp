#include <doctest.h>

#include <json.hpp>

#include "simplexmetrics/verify.hpp"

using namespace simplexmetrics;

TEST_CASE("symmetry checks pass") {
    for (std::size_t k = 1; k <= 3; ++k) {
        auto r = check_cm_symmetry(k);
        CHECK(r.passed());
        CHECK(r.witness.empty());
    }
    CHECK(check_gram_symmetry(1, 2).passed());
    CHECK(check_gram_symmetry(2, 2).passed());
    CHECK(check_gram_symmetry(2, 3).passed());
}

TEST_CASE("pair proposition") {
    CHECK(check_prop_ab(1).passed());
    CHECK(check_prop_ab(2).passed());
}

TEST_CASE("squaring proposition") {
    CHECK(check_squaring(1, 1).passed());
    CHECK(check_squaring(1, 2).passed());
}

TEST_CASE("extension independence") {
    auto r = check_extension_independence(2, 2, 7, 20);
    CHECK(r.passed());
}

TEST_CASE("thin lemma with negative control") {
    auto r1 = check_thin_lemma(1);
    CHECK(r1.passed());
    auto r2 = check_thin_lemma(2);
    CHECK(r2.passed());
    // the pass itself certifies the negative control: a nonzero residual
    // without thinness is recorded as a parameter
    CHECK(r2.parameters.count("witness_without_thinness") == 1);
    CHECK_FALSE(r2.parameters.at("witness_without_thinness").empty());
}

TEST_CASE("thin examples") { CHECK(check_thin_examples().passed()); }

TEST_CASE("volume form theorem at small sizes") {
    CHECK(check_volume_form_theorem(1).passed());
    CHECK(check_volume_form_theorem(2).passed());
}

TEST_CASE("run_all skipping and determinism") {
    auto small = run_all(1, 1, 5);
    bool any_skipped = false, any_pass = false;
    for (const auto& r : small) {
        CHECK(r.status != CheckStatus::fail);
        any_skipped = any_skipped || r.status == CheckStatus::skipped;
        any_pass = any_pass || r.status == CheckStatus::pass;
    }
    CHECK(any_skipped);
    CHECK(any_pass);

    auto again = run_all(1, 1, 5);
    REQUIRE(again.size() == small.size());
    for (std::size_t i = 0; i < small.size(); ++i) {
        CHECK(again[i].check_name == small[i].check_name);
        CHECK(again[i].status == small[i].status);
        CHECK(again[i].parameters == small[i].parameters);
    }
    // sorted by name
    for (std::size_t i = 1; i < small.size(); ++i)
        CHECK(small[i - 1].check_name <= small[i].check_name);
}

TEST_CASE("json lines are well-formed") {
    auto r = check_thin_examples();
    auto j = nlohmann::json::parse(to_json_line(r));
    CHECK(j["check"] == "check_thin_examples");
    CHECK(j["status"] == "pass");
    CHECK(j.contains("parameters"));
}
