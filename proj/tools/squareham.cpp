// Command-line face of the toolkit: exhaustive verification campaigns over
// graph6 corpora, the five-witness counterexample family, star-structure
// checks, soundness/EPS sweeps, and construction demos.
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hamsq/campaign.hpp"
#include "hamsq/connectivity.hpp"
#include "hamsq/constructions.hpp"
#include "hamsq/ham_oracle.hpp"

namespace {

struct CommonArgs {
    std::string corpus;
    int max_n = 64;
    int k = 4;
    long long timeout_ms = 10000;
    int jobs = 1;
    std::uint64_t seed = 0;
    std::string out;
    int sample = 0;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--corpus", args.corpus, "graph6 corpus file, one graph per line");
    cmd->add_option("--n", args.max_n, "ignore corpus graphs larger than this");
    cmd->add_option("--k", args.k, "witness count for h-property / f-property");
    cmd->add_option("--timeout-ms", args.timeout_ms, "per-instance search budget");
    cmd->add_option("--jobs", args.jobs, "worker count (output is independent of it)");
    cmd->add_option("--seed", args.seed, "seed for subset sampling");
    cmd->add_option("--out", args.out, "certificate record file to write");
    cmd->add_option("--sample", args.sample, "sample this many argument tuples per graph instead of all");
}

hamsq::CampaignSpec spec_from(const CommonArgs& args, hamsq::CampaignMode mode) {
    hamsq::CampaignSpec spec;
    spec.mode = mode;
    spec.k = args.k;
    spec.max_n = args.max_n;
    spec.timeout = std::chrono::milliseconds(args.timeout_ms);
    spec.jobs = args.jobs;
    spec.seed = args.seed;
    spec.sample = args.sample > 0;
    spec.sample_count = args.sample;
    if (!args.corpus.empty()) spec.corpus = hamsq::read_corpus_lines(args.corpus);
    return spec;
}

int finish(const hamsq::CampaignResult& result, const CommonArgs& args) {
    std::cout << hamsq::render_summary(result);
    if (!args.out.empty()) {
        hamsq::write_certificates(result, args.out);
        std::cout << "wrote " << args.out << "\n";
    }
    return (result.errors == 0 && result.findings == 0) ? 0 : 1;
}

hamsq::Graph pick_block(const std::vector<hamsq::Graph>& pool, hamsq::Lcg64& rng) {
    return pool[rng.bounded(pool.size())];
}

int run_lemma1_demo(const CommonArgs& args, int count) {
    std::vector<hamsq::Graph> blocks;
    for (const std::string& line : hamsq::read_corpus_lines(args.corpus)) {
        hamsq::Graph g = hamsq::parse_graph6(line);
        if (g.vertex_count() >= 2 && g.vertex_count() <= 6 &&
            (g.vertex_count() == 2 ? g.edge_count() == 1 : hamsq::is_two_block(g)))
            blocks.push_back(g);
    }
    if (blocks.empty()) {
        std::cerr << "lemma1: corpus holds no usable blocks\n";
        return 1;
    }
    hamsq::Lcg64 rng{args.seed};
    int failures = 0;
    for (int trial = 0; trial < count; ++trial) {
        std::vector<hamsq::Graph> chain;
        std::vector<std::pair<int, int>> attach;
        int total = 0;
        const int want_blocks = 2 + static_cast<int>(rng.bounded(3));
        for (int i = 0; i < want_blocks; ++i) {
            hamsq::Graph b = pick_block(blocks, rng);
            if (total + b.vertex_count() - (i > 0 ? 1 : 0) > args.max_n) break;
            if (!chain.empty()) {
                int exit_prev = static_cast<int>(rng.bounded(chain.back().vertex_count()));
                int enter = static_cast<int>(rng.bounded(b.vertex_count()));
                attach.emplace_back(exit_prev, enter);
            }
            total += b.vertex_count() - (chain.empty() ? 0 : 1);
            chain.push_back(b);
        }
        if (chain.size() < 2) {
            --trial;
            continue;
        }
        // Inner blocks need distinct entry/exit.
        bool ok_attach = true;
        for (size_t i = 0; i + 1 < attach.size(); ++i)
            if (attach[i].second == attach[i + 1].first) ok_attach = false;
        if (!ok_attach) {
            --trial;
            continue;
        }
        hamsq::Graph g;
        try {
            g = hamsq::chain_blocks(chain, attach);
        } catch (const std::exception&) {
            --trial;
            continue;
        }
        auto bc = hamsq::as_blockchain(g);
        if (!bc || bc->trivial) {
            --trial;
            continue;
        }
        std::vector<int> inner = hamsq::inner_vertices(g, *bc);
        auto inner_of = [&](const std::vector<int>& blk) {
            std::vector<int> out;
            for (int v : blk)
                if (std::find(inner.begin(), inner.end(), v) != inner.end()) out.push_back(v);
            return out;
        };
        std::vector<int> first = inner_of(bc->blocks.front());
        std::vector<int> last = inner_of(bc->blocks.back());
        if (first.empty() || last.empty()) {
            --trial;
            continue;
        }
        const int c0 = first[rng.bounded(first.size())];
        const int ck = last[rng.bounded(last.size())];
        std::vector<hamsq::BlockWitnessRequest> want(bc->blocks.size());
        for (size_t i = 0; i < bc->blocks.size(); ++i) {
            const auto& blk = bc->blocks[i];
            if (blk.size() == 2 || rng.bounded(3) == 0) continue;
            std::vector<int> us;
            for (int v : inner_of(blk))
                if (!((i == 0 && v == c0) || (i + 1 == bc->blocks.size() && v == ck))) us.push_back(v);
            if (us.empty()) continue;
            int u = us[rng.bounded(us.size())];
            std::vector<int> vs;
            for (int v : blk)
                if (v != u) vs.push_back(v);
            want[i].u = u;
            want[i].v = vs[rng.bounded(vs.size())];
        }
        try {
            hamsq::Certificate cert = hamsq::blockchain_path(g, c0, ck, want);
            std::cout << "lemma1 " << hamsq::emit_graph6(g) << " c0=" << c0 << " ck=" << ck
                      << " witnesses=" << cert.witnesses.size() << " ok\n";
        } catch (const std::exception& e) {
            std::cout << "lemma1 " << hamsq::emit_graph6(g) << " FAILED: " << e.what() << "\n";
            ++failures;
        }
    }
    std::cout << "lemma1 demo: " << count - failures << "/" << count << " glued paths validated\n";
    return failures == 0 ? 0 : 1;
}

int run_surgery_demo(const CommonArgs& args, int count) {
    std::vector<hamsq::Graph> blocks;
    for (const std::string& line : hamsq::read_corpus_lines(args.corpus)) {
        hamsq::Graph g = hamsq::parse_graph6(line);
        if (g.vertex_count() >= 4 && g.vertex_count() <= 6 && hamsq::is_two_block(g)) blocks.push_back(g);
    }
    if (blocks.empty()) {
        std::cerr << "surgery: corpus holds no usable endblocks\n";
        return 1;
    }
    hamsq::Lcg64 rng{args.seed};
    int failures = 0;
    int done = 0;
    int attempts = 0;
    while (done < count && attempts < count * 200) {
        ++attempts;
        hamsq::Graph endblock = pick_block(blocks, rng);
        hamsq::Graph tail = pick_block(blocks, rng);
        const int nb = endblock.vertex_count();
        const int y = static_cast<int>(rng.bounded(nb));
        int x = static_cast<int>(rng.bounded(nb));
        if (x == y) continue;
        std::vector<int> tmap;
        hamsq::Graph joined = hamsq::merge_at(endblock, y, tail, static_cast<int>(rng.bounded(tail.vertex_count())), &tmap);
        // One outside edge at x, landing on a tail vertex.
        std::vector<int> outside;
        for (int v = nb; v < joined.vertex_count(); ++v) outside.push_back(v);
        if (outside.empty()) continue;
        const int x_prime = outside[rng.bounded(outside.size())];
        hamsq::Graph host = hamsq::add_edges(joined, {hamsq::Edge(x, x_prime)});
        std::vector<int> block_vertices;
        for (int v = 0; v < nb; ++v) block_vertices.push_back(v);
        try {
            hamsq::EndblockReduction red = hamsq::replace_endblock_with_path(host, block_vertices, x, y);
            std::vector<int> candidates;
            for (int v = 0; v < red.reduced.vertex_count() - 2; ++v)
                if (red.new_to_old[v] >= 0 && v != red.anchors.x) candidates.push_back(v);
            if (candidates.size() < 4) continue;
            std::vector<int> xs;
            while (xs.size() < 4) {
                int v = candidates[rng.bounded(candidates.size())];
                if (std::find(xs.begin(), xs.end(), v) == xs.end()) xs.push_back(v);
            }
            hamsq::SearchResult h1 = hamsq::find_h_cycle(red.reduced, xs);
            if (h1.status != hamsq::SearchStatus::found) continue;
            hamsq::TraversalClass cls = hamsq::classify_traversal(*h1.certificate, red.anchors);
            hamsq::ExtensionResult ext =
                hamsq::extend_cycle_through_endblock(host, red, *h1.certificate, cls);
            const char* label = "unreduced";
            switch (cls.kind) {
                case hamsq::SurgeryCase::case1: label = "case1"; break;
                case hamsq::SurgeryCase::case2: label = "case2"; break;
                case hamsq::SurgeryCase::case5: label = "case5"; break;
                case hamsq::SurgeryCase::case7: label = "case7"; break;
                case hamsq::SurgeryCase::case9: label = "case9"; break;
                case hamsq::SurgeryCase::unreduced: label = "unreduced"; break;
            }
            std::cout << "surgery " << hamsq::emit_graph6(host) << " " << label
                      << (ext.direct_fallback ? " fallback" : " spliced") << " ok\n";
            ++done;
        } catch (const std::exception& e) {
            std::cout << "surgery FAILED: " << e.what() << "\n";
            ++failures;
            ++done;
        }
    }
    std::cout << "surgery demo: " << done - failures << "/" << done << " extensions validated\n";
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"squareham - hamiltonian-cycle certificates in squares of blocks"};
    app.require_subcommand(1);

    CommonArgs args;

    auto* verify = app.add_subcommand("verify", "run a certificate campaign over a corpus");
    std::string mode_token = "h-property";
    verify->add_option("--mode", mode_token, "h-property | f-property | strong-f3 | thm3 | thm4")
        ->check(CLI::IsMember({"h-property", "f-property", "strong-f3", "thm3", "thm4"}));
    add_common(verify, args);

    auto* counter = app.add_subcommand("counterexample", "build the five-witness family and prove absence");
    std::string base = "C4";
    int t = 3, cx1 = 0, cx2 = 1;
    counter->add_option("--base", base, "C3 | C4 | K4 | <graph6>");
    counter->add_option("--t", t, "number of added vertices (>= 3)");
    counter->add_option("--x1", cx1, "first attachment vertex");
    counter->add_option("--x2", cx2, "second attachment vertex");
    add_common(counter, args);

    auto* corollary = app.add_subcommand("corollary", "check star-structured graphs for hamiltonian squares");
    add_common(corollary, args);

    auto* soundness = app.add_subcommand("soundness", "w-sound cycles and their even/forest splits");
    std::string sound_mode = "w-sound";
    soundness->add_option("--mode", sound_mode, "w-sound | eps")->check(CLI::IsMember({"w-sound", "eps"}));
    add_common(soundness, args);

    auto* construct = app.add_subcommand("construct", "construction demos: gluing, surgeries, the family");
    std::string op = "family";
    construct->add_option("--op", op, "lemma1 | surgery | family")
        ->check(CLI::IsMember({"lemma1", "surgery", "family"}));
    construct->add_option("--base", base, "family base: C3 | C4 | K4 | <graph6>");
    construct->add_option("--t", t, "family size parameter");
    construct->add_option("--x1", cx1, "family attachment vertex");
    construct->add_option("--x2", cx2, "family attachment vertex");
    add_common(construct, args);

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) {
            auto mode = hamsq::campaign_mode_from(mode_token);
            return finish(hamsq::run_campaign(spec_from(args, *mode)), args);
        }
        if (counter->parsed()) {
            hamsq::CampaignSpec spec = spec_from(args, hamsq::CampaignMode::counterexample);
            spec.base = base;
            spec.t = t;
            spec.x1 = cx1;
            spec.x2 = cx2;
            return finish(hamsq::run_campaign(spec), args);
        }
        if (corollary->parsed())
            return finish(hamsq::run_campaign(spec_from(args, hamsq::CampaignMode::corollary)), args);
        if (soundness->parsed()) {
            auto mode = sound_mode == "eps" ? hamsq::CampaignMode::eps : hamsq::CampaignMode::w_sound;
            return finish(hamsq::run_campaign(spec_from(args, mode)), args);
        }
        if (construct->parsed()) {
            if (op == "family") {
                hamsq::CounterexampleFamily fam = hamsq::build_h5_counterexample(
                    base == "C3" ? hamsq::cycle_graph(3)
                                 : base == "K4" ? hamsq::complete_graph(4)
                                                : base == "C4" ? hamsq::cycle_graph(4) : hamsq::parse_graph6(base),
                    cx1, cx2, t);
                std::cout << "family " << hamsq::emit_graph6(fam.result) << "\n";
                std::cout << "witness-set";
                for (int v : hamsq::h5_query_set(fam)) std::cout << " " << v;
                std::cout << "\nobstruction "
                          << (hamsq::degree_obstruction_holds(fam) ? "confirmed" : "NOT-CONFIRMED") << "\n";
                return hamsq::degree_obstruction_holds(fam) ? 0 : 1;
            }
            const int count = args.sample > 0 ? args.sample : 20;
            if (op == "lemma1") return run_lemma1_demo(args, count);
            return run_surgery_demo(args, count);
        }
    } catch (const std::exception& e) {
        std::cerr << "squareham: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
