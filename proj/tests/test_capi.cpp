#include <doctest.h>

#include <cstring>
#include <string>

#include <json.hpp>

#include "bramsey/bramsey.h"

// the C surface is exercised end to end: handles, status codes, JSON
// payloads and the thread-local error message

namespace {

struct G {
    bram_graph* g = nullptr;
    ~G() { bram_graph_free(g); }
};

struct S {
    char* s = nullptr;
    ~S() { bram_string_free(s); }
    std::string str() const { return s ? s : ""; }
};

} // namespace

TEST_CASE("capi: graph text round trip and dims") {
    G h;
    REQUIRE(bram_construct_h_tilde(1, &h.g) == BRAM_OK);
    S text;
    REQUIRE(bram_graph_to_text(h.g, &text.s) == BRAM_OK);
    G back;
    REQUIRE(bram_graph_from_text(text.s, &back.g) == BRAM_OK);
    S text2;
    REQUIRE(bram_graph_to_text(back.g, &text2.s) == BRAM_OK);
    CHECK(text.str() == text2.str());

    int n1 = 0, n2 = 0, r = 0, complete = -1;
    REQUIRE(bram_graph_dims(h.g, &n1, &n2, &r, &complete) == BRAM_OK);
    CHECK(n1 == 4);
    CHECK(n2 == 4);
    CHECK(r == 2);
    CHECK(complete == 0);

    int md = -1;
    REQUIRE(bram_graph_min_degree(h.g, "", &md) == BRAM_OK);
    CHECK(md == 3);
}

TEST_CASE("capi: errors set the thread-local message") {
    G h;
    CHECK(bram_graph_from_text("garbage", &h.g) == BRAM_EINVAL);
    CHECK(std::strlen(bram_last_error()) > 0);
    CHECK(bram_construct_h_tilde(0, &h.g) == BRAM_EINVAL);
}

TEST_CASE("capi: cycle search statuses and verification") {
    G h;
    REQUIRE(bram_construct_h_tilde(1, &h.g) == BRAM_OK);
    S absent;
    CHECK(bram_cycle_find(h.g, 1, 4, -1, -1, &absent.s) == BRAM_NEGATIVE);
    auto ja = nlohmann::json::parse(absent.str());
    CHECK(ja["outcome"] == "absent");

    G k22;
    int triples[] = {0, 0, 1, 0, 1, 1, 1, 0, 1, 1, 1, 1};
    REQUIRE(bram_graph_build(2, 2, 1, triples, 4, &k22.g) == BRAM_OK);
    S found;
    CHECK(bram_cycle_find(k22.g, 1, 4, -1, -1, &found.s) == BRAM_OK);
    auto jf = nlohmann::json::parse(found.str());
    CHECK(jf["length"] == 4);

    S verify;
    CHECK(bram_cycle_verify(k22.g, found.str().c_str(), &verify.s) == BRAM_OK);
    // tamper with the certificate
    jf["vertices"][2] = "x0";
    jf.erase("length");
    S bad;
    CHECK(bram_cycle_verify(k22.g, jf.dump().c_str(), &bad.s) == BRAM_NEGATIVE);

    int circ = 0;
    REQUIRE(bram_circumference(k22.g, 1, &circ) == BRAM_OK);
    CHECK(circ == 4);
}

TEST_CASE("capi: matchings, tutte, density") {
    G g;
    REQUIRE(bram_construct_lower_bound("4,2", &g.g) == BRAM_OK);
    S best;
    REQUIRE(bram_matching_best(g.g, &best.s) == BRAM_OK);
    auto jb = nlohmann::json::parse(best.str());
    CHECK(jb["per_color"].size() == 2);
    CHECK(jb["per_color"][0]["saturated"] == 6);

    S tut;
    REQUIRE(bram_tutte(g.g, 2, 9, &tut.s) == BRAM_OK);
    auto jt = nlohmann::json::parse(tut.str());
    CHECK(jt["kind"] == "tutte_decomposition");
    CHECK(jt["verified"] == true);

    S dens;
    REQUIRE(bram_density(g.g, "1", "0,1,2,3", "0,1,2", &dens.s) == BRAM_OK);
    auto jd = nlohmann::json::parse(dens.str());
    CHECK(jd["num"] == 1);
    CHECK(jd["den"] == 1);
}

TEST_CASE("capi: partition, regularity, reduced graph") {
    S part;
    REQUIRE(bram_partition_uniform(12, 3, &part.s) == BRAM_OK);
    G g;
    REQUIRE(bram_graph_random_complete(12, 2, 7, &g.g) == BRAM_OK);
    S reg;
    REQUIRE(bram_regularity_check(g.g, part.s, "0.25", 0, &reg.s) == BRAM_OK);
    auto jr = nlohmann::json::parse(reg.str());
    CHECK(jr["mode"] == "exact");
    CHECK(jr["pairs"].size() == 18);

    S red;
    REQUIRE(bram_reduced_graph(g.g, part.s, "majority", "0.01", "", &red.s) == BRAM_OK);
    auto jd = nlohmann::json::parse(red.str());
    CHECK(jd["k"] == 3);

    S bad;
    CHECK(bram_reduced_graph(g.g, part.s, "nonsense", "0.01", "", &bad.s) == BRAM_EINVAL);
}

TEST_CASE("capi: pipeline and ramsey statuses") {
    G g;
    REQUIRE(bram_graph_random_complete(120, 2, 3, &g.g) == BRAM_OK);
    S run;
    int rc = bram_pipeline_run(g.g, "1,1", "0.05", 6, 3, 0, 0, -1, -1, &run.s);
    CHECK((rc == BRAM_OK || rc == BRAM_NEGATIVE));
    auto jp = nlohmann::json::parse(run.str());
    CHECK(jp["kind"] == "pipeline_run");

    S hit;
    CHECK(bram_ramsey_decide(5, "8,4", -1, -1, "", 1, &hit.s) == BRAM_OK);
    S good;
    CHECK(bram_ramsey_decide(4, "8,4", -1, -1, "", 1, &good.s) == BRAM_NEGATIVE);
    S val;
    CHECK(bram_ramsey_value("8,4", 6, -1, -1, 1, &val.s) == BRAM_OK);
    auto jv = nlohmann::json::parse(val.str());
    CHECK(jv["value"] == 5);
    S budget;
    CHECK(bram_ramsey_decide(5, "8,4", 10, -1, "", 1, &budget.s) == BRAM_BUDGET);
    auto jbud = nlohmann::json::parse(budget.str());
    CHECK(jbud.contains("resume_state"));
}
