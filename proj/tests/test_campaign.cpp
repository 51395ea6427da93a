#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "hamsq/campaign.hpp"
#include "hamsq/constructions.hpp"
#include "hamsq/enumeration.hpp"
#include "support/brute.hpp"

using namespace hamsq;

namespace {

std::vector<std::string> two_block_corpus(int n) {
    std::vector<std::string> lines;
    for (const Graph& g : enumerate_two_blocks(n)) lines.push_back(emit_graph6(g));
    return lines;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string tmp_path(const std::string& name) { return std::string(TEST_TMPDIR) + "/" + name; }

Graph star_of_triangles(int center_size, int legs) {
    Graph g = cycle_graph(center_size);
    for (int i = 0; i < legs; ++i) {
        std::vector<int> tmap;
        g = merge_at(g, i, cycle_graph(3), 0, &tmap);
    }
    return g;
}

}  // namespace

TEST_CASE("stated generator is reproducible") {
    Lcg64 a{0};
    CHECK(a.next() == 1442695040888963407ULL);
    Lcg64 b{0};
    CHECK(b.next() == a.state - 0 + 0 * 1);  // same first step
    Lcg64 c{7};
    Lcg64 d{7};
    for (int i = 0; i < 10; ++i) CHECK(c.next() == d.next());
}

TEST_CASE("campaigns certify the small corpus and stay deterministic across jobs") {
    CampaignSpec spec;
    spec.mode = CampaignMode::h_property;
    spec.k = 4;
    spec.corpus = two_block_corpus(5);
    spec.jobs = 1;
    CampaignResult r1 = run_campaign(spec);
    CHECK(r1.records.size() == 10 * 5);
    CHECK(r1.certified == 50);
    CHECK(r1.absent == 0);
    CHECK(r1.unknown == 0);
    CHECK(r1.errors == 0);
    CHECK(r1.findings == 0);

    spec.jobs = 3;
    CampaignResult r3 = run_campaign(spec);
    CHECK(r1 == r3);

    write_certificates(r1, tmp_path("h5_jobs1.txt"));
    write_certificates(r3, tmp_path("h5_jobs3.txt"));
    CHECK(slurp(tmp_path("h5_jobs1.txt")) == slurp(tmp_path("h5_jobs3.txt")));
}

TEST_CASE("sampling follows the seed") {
    CampaignSpec spec;
    spec.mode = CampaignMode::h_property;
    spec.k = 4;
    spec.corpus = two_block_corpus(6);
    spec.sample = true;
    spec.sample_count = 3;
    spec.seed = 99;
    CampaignResult a = run_campaign(spec);
    CampaignResult b = run_campaign(spec);
    CHECK(a == b);
    CHECK(a.records.size() == 56 * 3);
    spec.seed = 100;
    CampaignResult c = run_campaign(spec);
    CHECK_FALSE(a == c);
}

TEST_CASE("precondition violations become error records") {
    CampaignSpec spec;
    spec.mode = CampaignMode::h_property;
    spec.corpus = {emit_graph6(path_graph(4))};
    CampaignResult r = run_campaign(spec);
    REQUIRE(r.records.size() == 1);
    CHECK(r.records[0].outcome == Outcome::error);
    CHECK(r.records[0].detail == "not-2-connected");
    CHECK(r.errors == 1);
}

TEST_CASE("counterexample campaign attests exhaustion") {
    CampaignSpec spec;
    spec.mode = CampaignMode::counterexample;
    spec.base = "C4";
    spec.t = 3;
    CampaignResult r = run_campaign(spec);
    REQUIRE(r.records.size() == 1);
    CHECK(r.records[0].outcome == Outcome::absent);
    CHECK(r.records[0].nodes > 0);
    CHECK(r.records[0].detail == "obstruction:confirmed");
    CHECK(r.findings == 0);
    CHECK(r.absent == 1);
}

TEST_CASE("record files round-trip and revalidate") {
    CampaignSpec spec;
    spec.mode = CampaignMode::f_property;
    spec.k = 4;
    spec.corpus = two_block_corpus(5);
    spec.sample = true;
    spec.sample_count = 2;
    spec.seed = 5;
    CampaignResult r = run_campaign(spec);
    CHECK(r.certified == static_cast<int>(r.records.size()));

    const std::string path = tmp_path("roundtrip.txt");
    write_certificates(r, path);
    CampaignResult back = read_certificates(path);
    CHECK(back.records == r.records);
    const std::string path2 = tmp_path("roundtrip2.txt");
    write_certificates(back, path2);
    CHECK(slurp(path) == slurp(path2));

    // Truncation is caught by the declared instance count.
    std::string body = slurp(path);
    body.erase(body.rfind("g6:"));
    std::ofstream(tmp_path("truncated.txt"), std::ios::binary) << body;
    CHECK_THROWS_WITH_AS(static_cast<void>(read_certificates(tmp_path("truncated.txt"))),
                         doctest::Contains("record count mismatch"), std::runtime_error);

    // A corrupted witness is rejected during revalidation, naming the line.
    std::string tampered = slurp(path);
    auto pos = tampered.find("WIT:");
    REQUIRE(pos != std::string::npos);
    tampered[pos + 4] = '9';
    std::ofstream(tmp_path("tampered.txt"), std::ios::binary) << tampered;
    CHECK_THROWS_AS(static_cast<void>(read_certificates(tmp_path("tampered.txt"))), std::runtime_error);
}

TEST_CASE("soundness and eps campaigns write reloadable records") {
    CampaignSpec spec;
    spec.mode = CampaignMode::eps;
    spec.corpus = two_block_corpus(5);
    CampaignResult r = run_campaign(spec);
    CHECK(r.certified == static_cast<int>(r.records.size()));
    CHECK(r.findings == 0);
    const std::string path = tmp_path("eps.txt");
    write_certificates(r, path);
    CampaignResult back = read_certificates(path);
    CHECK(back.records == r.records);

    spec.mode = CampaignMode::w_sound;
    CampaignResult ws = run_campaign(spec);
    CHECK(ws.certified == static_cast<int>(ws.records.size()));
    for (const InstanceRecord& rec : ws.records) REQUIRE(rec.hits.has_value());
}

TEST_CASE("corollary verification gates on the star structure") {
    InstanceRecord ok = verify_corollary(star_of_triangles(4, 4));
    CHECK(ok.outcome == Outcome::certified);

    InstanceRecord big = verify_corollary(star_of_triangles(5, 5));
    CHECK(big.outcome == Outcome::skipped);
    CHECK(big.detail == "out-of-scope:center-exceeds-four-cutvertices");

    InstanceRecord path = verify_corollary(path_graph(6));
    CHECK(path.outcome == Outcome::certified);

    // Branching at a cutvertex is out of scope no matter the block sizes.
    Graph spider(7, {Edge(0, 1), Edge(1, 2), Edge(0, 3), Edge(3, 4), Edge(0, 5), Edge(5, 6)});
    InstanceRecord branched = verify_corollary(spider);
    CHECK(branched.outcome == Outcome::skipped);
    CHECK(branched.detail == "out-of-scope:not-a-block-centered-star");

    InstanceRecord split = verify_corollary(Graph(4, {Edge(0, 1), Edge(2, 3)}));
    CHECK(split.outcome == Outcome::skipped);

    CampaignSpec spec;
    spec.mode = CampaignMode::corollary;
    spec.corpus = {emit_graph6(star_of_triangles(4, 4)), emit_graph6(star_of_triangles(5, 5))};
    CampaignResult r = run_campaign(spec);
    CHECK(r.certified == 1);
    CHECK(r.skipped == 1);
    CHECK(r.findings == 0);
}

TEST_CASE("corpus digests pin the input") {
    CampaignSpec spec;
    spec.mode = CampaignMode::h_property;
    spec.corpus = two_block_corpus(4);
    CampaignResult a = run_campaign(spec);
    spec.corpus.pop_back();
    CampaignResult b = run_campaign(spec);
    CHECK(a.spec.corpus_digest != b.spec.corpus_digest);
}
