#include "hamsq/campaign.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "hamsq/connectivity.hpp"
#include "hamsq/constructions.hpp"
#include "hamsq/ham_oracle.hpp"

namespace hamsq {

std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string to_string(CampaignMode mode) {
    switch (mode) {
        case CampaignMode::h_property: return "h-property";
        case CampaignMode::f_property: return "f-property";
        case CampaignMode::strong_f3: return "strong-f3";
        case CampaignMode::thm3: return "thm3";
        case CampaignMode::thm4: return "thm4";
        case CampaignMode::w_sound: return "w-sound";
        case CampaignMode::eps: return "eps";
        case CampaignMode::counterexample: return "counterexample";
        case CampaignMode::corollary: return "corollary";
    }
    return "?";
}

std::optional<CampaignMode> campaign_mode_from(const std::string& token) {
    for (CampaignMode m : {CampaignMode::h_property, CampaignMode::f_property, CampaignMode::strong_f3,
                           CampaignMode::thm3, CampaignMode::thm4, CampaignMode::w_sound, CampaignMode::eps,
                           CampaignMode::counterexample, CampaignMode::corollary})
        if (to_string(m) == token) return m;
    return std::nullopt;
}

std::string to_string(Outcome o) {
    switch (o) {
        case Outcome::certified: return "certified";
        case Outcome::absent: return "absent";
        case Outcome::unknown: return "unknown";
        case Outcome::error: return "error";
        case Outcome::skipped: return "skipped";
    }
    return "?";
}

namespace {

std::vector<std::vector<int>> k_subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k > n || k < 0) return out;
    std::vector<int> pick(k);
    std::function<void(int, int)> rec = [&](int from, int got) {
        if (got == k) {
            out.push_back(pick);
            return;
        }
        for (int v = from; v <= n - (k - got); ++v) {
            pick[got] = v;
            rec(v + 1, got + 1);
        }
    };
    rec(0, 0);
    return out;
}

std::vector<std::vector<int>> sample_tuples(std::vector<std::vector<int>> all, bool sample, int count,
                                            Lcg64& rng) {
    if (!sample || count >= static_cast<int>(all.size())) return all;
    std::set<std::uint64_t> picked;
    while (static_cast<int>(picked.size()) < count) picked.insert(rng.bounded(all.size()));
    std::vector<std::vector<int>> out;
    for (std::uint64_t i : picked) out.push_back(all[i]);
    return out;
}

struct Instance {
    int graph_index = -1;
    std::vector<int> args;
    bool broken = false;  // graph-level precondition failure
    std::string broken_detail;
};

struct Plan {
    std::vector<Graph> graphs;
    std::vector<std::string> g6;
    std::vector<Instance> instances;
};

std::vector<std::vector<int>> tuples_for(const CampaignSpec& spec, const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> tuples;
    switch (spec.mode) {
        case CampaignMode::h_property:
            return k_subsets(n, spec.k);
        case CampaignMode::f_property: {
            for (const auto& ends : k_subsets(n, 2)) {
                std::vector<int> others;
                for (int v = 0; v < n; ++v)
                    if (v != ends[0] && v != ends[1]) others.push_back(v);
                for (const auto& rsel : k_subsets(static_cast<int>(others.size()), spec.k - 2)) {
                    std::vector<int> tup = ends;
                    for (int i : rsel) tup.push_back(others[i]);
                    tuples.push_back(tup);
                }
            }
            return tuples;
        }
        case CampaignMode::strong_f3: {
            for (const auto& ends : k_subsets(n, 2))
                for (int x3 = 0; x3 < n; ++x3) {
                    if (x3 == ends[0] || x3 == ends[1]) continue;
                    tuples.push_back({ends[0], ends[1], x3, 1});
                    tuples.push_back({ends[0], ends[1], x3, 2});
                }
            return tuples;
        }
        case CampaignMode::thm3: {
            for (int v = 0; v < n; ++v)
                for (int w = 0; w < n; ++w)
                    if (v != w) tuples.push_back({v, w});
            return tuples;
        }
        case CampaignMode::thm4: {
            auto chain = as_blockchain(g);
            if (!chain) return tuples;
            if (chain->trivial) {
                for (const auto& pair : k_subsets(n, 2)) tuples.push_back(pair);
                return tuples;
            }
            std::set<int> cuts(chain->cutvertices.begin(), chain->cutvertices.end());
            std::vector<int> first, last;
            for (int v : chain->blocks.front())
                if (!cuts.count(v)) first.push_back(v);
            for (int v : chain->blocks.back())
                if (!cuts.count(v)) last.push_back(v);
            for (int u1 : first)
                for (int u2 : last) tuples.push_back({u1, u2});
            return tuples;
        }
        case CampaignMode::w_sound:
        case CampaignMode::eps:
            return k_subsets(n, 5);
        case CampaignMode::corollary:
            return {{}};
        case CampaignMode::counterexample:
            return {};
    }
    return tuples;
}

std::optional<std::string> graph_precondition_failure(const CampaignSpec& spec, const Graph& g) {
    switch (spec.mode) {
        case CampaignMode::h_property:
            if (!is_two_block(g)) return "not-2-connected";
            if (g.vertex_count() < 4) return "order-below-four";
            return std::nullopt;
        case CampaignMode::f_property:
        case CampaignMode::strong_f3:
        case CampaignMode::thm3:
            if (!is_two_block(g)) return "not-2-connected";
            return std::nullopt;
        case CampaignMode::thm4:
            if (g.vertex_count() < 3) return "order-below-three";
            if (!as_blockchain(g)) return "not-a-blockchain";
            return std::nullopt;
        case CampaignMode::w_sound:
        case CampaignMode::eps:
            if (!is_two_block(g)) return "not-2-connected";
            if (g.vertex_count() < 5) return "order-below-five";
            return std::nullopt;
        case CampaignMode::corollary:
        case CampaignMode::counterexample:
            return std::nullopt;
    }
    return std::nullopt;
}

Graph named_base_graph(const std::string& token) {
    if (token == "C3" || token == "c3") return cycle_graph(3);
    if (token == "C4" || token == "c4") return cycle_graph(4);
    if (token == "C5" || token == "c5") return cycle_graph(5);
    if (token == "K4" || token == "k4") return complete_graph(4);
    return parse_graph6(token);
}

Plan build_plan(const CampaignSpec& spec) {
    Plan plan;
    if (spec.mode == CampaignMode::counterexample) {
        CounterexampleFamily fam = build_h5_counterexample(named_base_graph(spec.base), spec.x1, spec.x2, spec.t);
        plan.graphs.push_back(fam.result);
        plan.g6.push_back(emit_graph6(fam.result));
        Instance inst;
        inst.graph_index = 0;
        inst.args = h5_query_set(fam);
        plan.instances.push_back(inst);
        return plan;
    }
    Lcg64 rng{spec.seed};
    for (const std::string& line : spec.corpus) {
        Graph g = parse_graph6(line);
        if (g.vertex_count() > spec.max_n) continue;
        const int gi = static_cast<int>(plan.graphs.size());
        plan.graphs.push_back(g);
        plan.g6.push_back(emit_graph6(g));
        if (auto broken = graph_precondition_failure(spec, g)) {
            Instance inst;
            inst.graph_index = gi;
            inst.broken = true;
            inst.broken_detail = *broken;
            plan.instances.push_back(inst);
            continue;
        }
        for (auto& tup : sample_tuples(tuples_for(spec, g), spec.sample, spec.sample_count, rng)) {
            Instance inst;
            inst.graph_index = gi;
            inst.args = tup;
            plan.instances.push_back(inst);
        }
    }
    return plan;
}

void finish_from_search(InstanceRecord& rec, const Graph& g, const ConstraintSpec& cspec,
                        const SearchResult& res, bool absence_is_finding, bool presence_is_finding,
                        std::string* finding_note) {
    rec.nodes = res.nodes_expanded;
    switch (res.status) {
        case SearchStatus::found: {
            if (auto check = check_certificate(g, cspec, *res.certificate); !check) {
                rec.outcome = Outcome::error;
                rec.detail = "certificate-rejected:" + check.reason;
                return;
            }
            rec.outcome = Outcome::certified;
            rec.certificate = res.certificate;
            if (presence_is_finding) *finding_note = "unexpected-certificate";
            return;
        }
        case SearchStatus::absent:
            rec.outcome = Outcome::absent;
            if (absence_is_finding) *finding_note = "unexpected-absence";
            return;
        case SearchStatus::unknown:
            rec.outcome = Outcome::unknown;
            return;
    }
}

ConstraintSpec spec_for_args(const CampaignSpec& spec, const Graph& g, const std::vector<int>& args,
                             bool relaxed_thm4) {
    ConstraintSpec cs;
    switch (spec.mode) {
        case CampaignMode::h_property:
        case CampaignMode::counterexample:
            cs.kind = CertKind::cycle;
            cs.witness_vertices = args;
            return cs;
        case CampaignMode::f_property:
            cs.kind = CertKind::path;
            cs.endpoints = {{args[0], args[1]}};
            cs.witness_vertices.assign(args.begin() + 2, args.end());
            return cs;
        case CampaignMode::strong_f3:
            cs.kind = CertKind::path;
            cs.endpoints = {{args[0], args[1]}};
            cs.witness_vertices = {args[2], args[3] == 1 ? args[0] : args[1]};
            return cs;
        case CampaignMode::thm3:
            cs.kind = CertKind::cycle;
            cs.anchors = {{args[0], AnchorMode::both_edges}, {args[1], AnchorMode::at_least_one}};
            cs.anchors_need_distinct_triple = g.has_edge(args[0], args[1]);
            return cs;
        case CampaignMode::thm4: {
            cs.kind = CertKind::cycle;
            auto chain = as_blockchain(g);
            if (!chain) throw std::invalid_argument("thm4 record on a graph that is not a blockchain");
            auto in_two_block = [&](int v) {
                for (const auto& blk : chain->blocks)
                    if (std::binary_search(blk.begin(), blk.end(), v)) return blk.size() >= 3;
                return false;
            };
            const AnchorMode bridge = relaxed_thm4 ? AnchorMode::at_least_one : AnchorMode::exactly_one;
            cs.anchors = {{args[0], in_two_block(args[0]) ? AnchorMode::both_edges : bridge},
                          {args[1], in_two_block(args[1]) ? AnchorMode::both_edges : bridge}};
            return cs;
        }
        case CampaignMode::corollary:
            cs.kind = CertKind::cycle;
            return cs;
        case CampaignMode::w_sound:
        case CampaignMode::eps:
            break;
    }
    return cs;
}

InstanceRecord run_instance(const CampaignSpec& spec, const Plan& plan, int index) {
    const Instance& inst = plan.instances[index];
    const Graph& g = plan.graphs[inst.graph_index];
    InstanceRecord rec;
    rec.index = index;
    rec.g6 = plan.g6[inst.graph_index];
    rec.args = inst.args;
    if (inst.broken) {
        rec.outcome = Outcome::error;
        rec.detail = inst.broken_detail;
        return rec;
    }
    SearchOptions opts;
    opts.timeout = spec.timeout;
    opts.max_n = spec.max_n;
    std::string finding;
    try {
        switch (spec.mode) {
            case CampaignMode::h_property: {
                finish_from_search(rec, g, spec_for_args(spec, g, inst.args, false),
                                   find_h_cycle(g, inst.args, opts), true, false, &finding);
                break;
            }
            case CampaignMode::f_property: {
                std::vector<int> r(inst.args.begin() + 2, inst.args.end());
                finish_from_search(rec, g, spec_for_args(spec, g, inst.args, false),
                                   find_f_path(g, inst.args[0], inst.args[1], r, opts), true, false, &finding);
                break;
            }
            case CampaignMode::strong_f3: {
                finish_from_search(rec, g, spec_for_args(spec, g, inst.args, false),
                                   find_strong_f3_path(g, inst.args[0], inst.args[1], inst.args[2], inst.args[3], opts),
                                   true, false, &finding);
                break;
            }
            case CampaignMode::thm3: {
                finish_from_search(rec, g, spec_for_args(spec, g, inst.args, false),
                                   find_thm3_cycle(g, inst.args[0], inst.args[1], opts), true, false, &finding);
                break;
            }
            case CampaignMode::thm4: {
                Thm4Result t4 = find_thm4_cycle(g, inst.args[0], inst.args[1], opts);
                finish_from_search(rec, g, spec_for_args(spec, g, inst.args, t4.flagged_for_review), t4.search,
                                   true, false, &finding);
                if (t4.flagged_for_review && rec.outcome == Outcome::certified) rec.detail = "flag:review";
                break;
            }
            case CampaignMode::counterexample: {
                SearchResult res = find_h_cycle(g, inst.args, opts);
                finish_from_search(rec, g, spec_for_args(spec, g, inst.args, false), res, false, true, &finding);
                if (rec.outcome == Outcome::absent) {
                    CounterexampleFamily fam =
                        build_h5_counterexample(named_base_graph(spec.base), spec.x1, spec.x2, spec.t);
                    rec.detail = degree_obstruction_holds(fam) ? "obstruction:confirmed" : "obstruction:failed";
                    if (rec.detail == "obstruction:failed") finding = "obstruction-failed";
                }
                break;
            }
            case CampaignMode::w_sound: {
                auto rep = find_w_sound_cycle(g, inst.args);
                if (rep) {
                    rec.outcome = Outcome::certified;
                    Certificate cert;
                    cert.kind = CertKind::cycle;
                    cert.order = rep->cycle;
                    rec.certificate = cert;
                    rec.hits = rep->hits;
                } else {
                    rec.outcome = Outcome::absent;
                    finding = "no-sound-cycle";
                }
                break;
            }
            case CampaignMode::eps: {
                auto rep = find_w_sound_cycle(g, inst.args);
                if (!rep) {
                    rec.outcome = Outcome::absent;
                    finding = "no-sound-cycle";
                    break;
                }
                auto eps = find_eps_with_sound_cycle(g, rep->cycle, inst.args);
                if (!eps) {
                    rec.outcome = Outcome::absent;
                    finding = "no-eps";
                    break;
                }
                rec.outcome = Outcome::certified;
                Certificate cert;
                cert.kind = CertKind::cycle;
                cert.order = rep->cycle;
                rec.certificate = cert;
                rec.hits = rep->hits;
                rec.eps = eps;
                break;
            }
            case CampaignMode::corollary: {
                InstanceRecord sub = verify_corollary(g, spec.timeout);
                rec.outcome = sub.outcome;
                rec.certificate = sub.certificate;
                rec.nodes = sub.nodes;
                rec.detail = sub.detail;
                if (rec.outcome == Outcome::absent) finding = "square-not-hamiltonian";
                break;
            }
        }
    } catch (const finding_error& e) {
        rec.outcome = Outcome::error;
        rec.detail = std::string("finding:") + e.what();
        finding = "construction-failure";
    } catch (const std::exception& e) {
        rec.outcome = Outcome::error;
        rec.detail = e.what();
    }
    if (!finding.empty()) {
        if (rec.detail.empty()) rec.detail = "finding:" + finding;
        else rec.detail += ";finding:" + finding;
    }
    return rec;
}

}  // namespace

InstanceRecord verify_corollary(const Graph& g, std::chrono::milliseconds timeout) {
    InstanceRecord rec;
    rec.g6 = emit_graph6(g);
    if (!is_connected(g)) {
        rec.outcome = Outcome::skipped;
        rec.detail = "out-of-scope:disconnected";
        return rec;
    }
    if (g.vertex_count() < 3) {
        rec.outcome = Outcome::skipped;
        rec.detail = "out-of-scope:order-below-three";
        return rec;
    }
    BlockDecomposition dec = blocks(g);
    std::map<int, int> cut_degree;
    for (int c : dec.cutvertices) cut_degree[c] = 0;
    for (const auto& bc : dec.block_cutvertices)
        for (int c : bc) ++cut_degree[c];
    int branch_blocks = 0;
    int branch_cuts = 0;
    size_t center_cuts = 0;
    for (const auto& bc : dec.block_cutvertices)
        if (bc.size() >= 3) {
            ++branch_blocks;
            center_cuts = bc.size();
        }
    for (const auto& [c, d] : cut_degree)
        if (d >= 3) ++branch_cuts;
    if (branch_blocks + branch_cuts > 1 || branch_cuts == 1) {
        rec.outcome = Outcome::skipped;
        rec.detail = "out-of-scope:not-a-block-centered-star";
        return rec;
    }
    if (branch_blocks == 1 && center_cuts > 4) {
        rec.outcome = Outcome::skipped;
        rec.detail = "out-of-scope:center-exceeds-four-cutvertices";
        return rec;
    }
    SearchOptions opts;
    opts.timeout = timeout;
    SearchResult res = find_h_cycle(g, {}, opts);
    rec.nodes = res.nodes_expanded;
    switch (res.status) {
        case SearchStatus::found: {
            ConstraintSpec cs;
            cs.kind = CertKind::cycle;
            if (auto check = check_certificate(g, cs, *res.certificate); !check) {
                rec.outcome = Outcome::error;
                rec.detail = "certificate-rejected:" + check.reason;
                return rec;
            }
            rec.outcome = Outcome::certified;
            rec.certificate = res.certificate;
            return rec;
        }
        case SearchStatus::absent:
            rec.outcome = Outcome::absent;
            return rec;
        case SearchStatus::unknown:
            rec.outcome = Outcome::unknown;
            return rec;
    }
    return rec;
}

CampaignResult run_campaign(const CampaignSpec& spec) {
    Plan plan = build_plan(spec);
    CampaignResult result;
    result.spec = spec;
    if (result.spec.corpus_digest.empty()) {
        std::string joined;
        for (const std::string& line : spec.corpus) {
            joined += line;
            joined += '\n';
        }
        std::ostringstream hex;
        hex << std::hex << fnv1a64(joined);
        result.spec.corpus_digest = hex.str();
    }
    result.records.assign(plan.instances.size(), InstanceRecord{});

    const int jobs = std::max(1, spec.jobs);
    auto worker = [&](int w) {
        for (size_t i = w; i < plan.instances.size(); i += jobs) {
            auto t0 = std::chrono::steady_clock::now();
            InstanceRecord rec = run_instance(spec, plan, static_cast<int>(i));
            rec.elapsed_ms =
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
            result.records[i] = std::move(rec);
        }
    };
    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < jobs; ++w) pool.emplace_back(worker, w);
        for (auto& th : pool) th.join();
    }

    for (const InstanceRecord& rec : result.records) {
        switch (rec.outcome) {
            case Outcome::certified: ++result.certified; break;
            case Outcome::absent: ++result.absent; break;
            case Outcome::unknown: ++result.unknown; break;
            case Outcome::error: ++result.errors; break;
            case Outcome::skipped: ++result.skipped; break;
        }
        if (rec.detail.find("finding:") != std::string::npos) ++result.findings;
        result.max_elapsed_ms = std::max(result.max_elapsed_ms, rec.elapsed_ms);
    }
    return result;
}

namespace {

std::string join_ints(const std::vector<int>& xs) {
    if (xs.empty()) return "-";
    std::string out;
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(xs[i]);
    }
    return out;
}

std::string join_edges(const std::vector<Edge>& es) {
    if (es.empty()) return "-";
    std::string out;
    for (size_t i = 0; i < es.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(es[i].u) + "-" + std::to_string(es[i].v);
    }
    return out;
}

std::string sanitize(const std::string& s) {
    std::string out = s;
    for (char& c : out)
        if (c == ' ' || c == '\n' || c == '\t') c = '_';
    return out;
}

std::vector<int> split_ints(const std::string& s, char sep) {
    std::vector<int> out;
    if (s == "-" || s.empty()) return out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(std::stoi(item));
    return out;
}

std::vector<Edge> split_edges(const std::string& s) {
    std::vector<Edge> out;
    if (s == "-" || s.empty()) return out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto dash = item.find('-');
        if (dash == std::string::npos) throw std::runtime_error("bad edge token: " + item);
        out.emplace_back(std::stoi(item.substr(0, dash)), std::stoi(item.substr(dash + 1)));
    }
    return out;
}

}  // namespace

void write_certificates(const CampaignResult& result, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("write_certificates: cannot open " + path);
    out << "# squareham-campaign v1\n";
    out << "# mode:" << to_string(result.spec.mode) << " k:" << result.spec.k << " seed:" << result.spec.seed
        << " sample:" << (result.spec.sample ? result.spec.sample_count : 0)
        << " timeout-ms:" << result.spec.timeout.count() << " max-n:" << result.spec.max_n
        << " corpus-digest:" << result.spec.corpus_digest << " instances:" << result.records.size() << "\n";
    for (const InstanceRecord& rec : result.records) {
        out << "g6:" << rec.g6 << " MODE:" << to_string(result.spec.mode) << " X:" << join_ints(rec.args);
        switch (rec.outcome) {
            case Outcome::certified:
                if (rec.certificate) {
                    out << " KIND:" << (rec.certificate->kind == CertKind::cycle ? "cycle" : "path");
                    out << " ORDER:" << join_ints(rec.certificate->order);
                    if (!rec.eps && !rec.hits) {
                        std::vector<int> wit;
                        std::string token;
                        for (const auto& [x, e] : rec.certificate->witnesses) {
                            if (!token.empty()) token += ';';
                            token += std::to_string(x) + "=" + std::to_string(e.u) + "-" + std::to_string(e.v);
                        }
                        out << " WIT:" << (token.empty() ? "-" : token);
                    }
                }
                if (rec.hits) out << " HITS:" << *rec.hits;
                if (rec.eps) out << " EPART:" << join_edges(rec.eps->e_part) << " PPART:" << join_edges(rec.eps->p_part);
                break;
            case Outcome::absent:
                out << " EXHAUSTED:" << rec.nodes;
                break;
            case Outcome::unknown:
                out << " SEARCHED:" << rec.nodes;
                break;
            case Outcome::error:
                out << " ERROR:" << sanitize(rec.detail);
                break;
            case Outcome::skipped:
                out << " SKIPPED:" << sanitize(rec.detail);
                break;
        }
        if ((rec.outcome == Outcome::certified || rec.outcome == Outcome::absent) && !rec.detail.empty())
            out << " NOTE:" << sanitize(rec.detail);
        out << " OUTCOME:" << to_string(rec.outcome) << "\n";
    }
}

namespace {

std::map<std::string, std::string> parse_fields(const std::string& line, int lineno) {
    std::map<std::string, std::string> fields;
    std::stringstream ss(line);
    std::string token;
    while (ss >> token) {
        auto colon = token.find(':');
        if (colon == std::string::npos)
            throw std::runtime_error("malformed record at line " + std::to_string(lineno) + ": " + token);
        fields[token.substr(0, colon)] = token.substr(colon + 1);
    }
    return fields;
}

void revalidate(const CampaignResult& result, const InstanceRecord& rec, int lineno) {
    if (rec.outcome != Outcome::certified) return;
    Graph g = parse_graph6(rec.g6);
    const CampaignMode mode = result.spec.mode;
    if (mode == CampaignMode::w_sound || mode == CampaignMode::eps) {
        if (!rec.certificate) throw std::runtime_error("missing cycle at line " + std::to_string(lineno));
        const std::vector<int>& cyc = rec.certificate->order;
        std::set<int> wset(rec.args.begin(), rec.args.end());
        int hits = 0;
        for (size_t i = 0; i < cyc.size(); ++i) {
            if (!g.has_edge(cyc[i], cyc[(i + 1) % cyc.size()]))
                throw std::runtime_error("stored cycle invalid at line " + std::to_string(lineno));
            if (wset.count(cyc[i])) ++hits;
        }
        if (rec.hits && *rec.hits != hits)
            throw std::runtime_error("stored hit count wrong at line " + std::to_string(lineno));
        if (mode == CampaignMode::eps) {
            if (!rec.eps) throw std::runtime_error("missing eps parts at line " + std::to_string(lineno));
            if (auto check = validate_eps(g, *rec.eps); !check)
                throw std::runtime_error("stored eps invalid at line " + std::to_string(lineno) + ": " + check.reason);
            std::set<Edge> epart(rec.eps->e_part.begin(), rec.eps->e_part.end());
            for (size_t i = 0; i < cyc.size(); ++i)
                if (!epart.count(Edge(cyc[i], cyc[(i + 1) % cyc.size()])))
                    throw std::runtime_error("cycle not inside even part at line " + std::to_string(lineno));
            std::vector<int> p_deg(g.vertex_count(), 0);
            for (const Edge& e : rec.eps->p_part) {
                ++p_deg[e.u];
                ++p_deg[e.v];
            }
            for (int v : rec.args)
                if (p_deg[v] > 1)
                    throw std::runtime_error("forest degree bound broken at line " + std::to_string(lineno));
        }
        return;
    }
    if (!rec.certificate) throw std::runtime_error("missing certificate at line " + std::to_string(lineno));
    CampaignSpec spec_like = result.spec;
    ConstraintSpec cs = spec_for_args(spec_like, g, rec.args, rec.detail.find("flag:review") != std::string::npos);
    if (auto check = check_certificate(g, cs, *rec.certificate); !check)
        throw std::runtime_error("stored certificate invalid at line " + std::to_string(lineno) + ": " +
                                 check.reason);
}

}  // namespace

CampaignResult read_certificates(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("read_certificates: cannot open " + path);
    CampaignResult result;
    std::string line;
    int lineno = 0;
    size_t declared = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::stringstream ss(line.substr(1));
            std::string token;
            while (ss >> token) {
                auto colon = token.find(':');
                if (colon == std::string::npos) continue;
                const std::string key = token.substr(0, colon);
                const std::string val = token.substr(colon + 1);
                if (key == "mode") {
                    auto m = campaign_mode_from(val);
                    if (!m) throw std::runtime_error("unknown mode in header at line " + std::to_string(lineno));
                    result.spec.mode = *m;
                } else if (key == "k") {
                    result.spec.k = std::stoi(val);
                } else if (key == "seed") {
                    result.spec.seed = std::stoull(val);
                } else if (key == "sample") {
                    result.spec.sample_count = std::stoi(val);
                    result.spec.sample = result.spec.sample_count > 0;
                } else if (key == "timeout-ms") {
                    result.spec.timeout = std::chrono::milliseconds(std::stoll(val));
                } else if (key == "max-n") {
                    result.spec.max_n = std::stoi(val);
                } else if (key == "corpus-digest") {
                    result.spec.corpus_digest = val;
                } else if (key == "instances") {
                    declared = std::stoull(val);
                }
            }
            continue;
        }
        auto fields = parse_fields(line, lineno);
        auto need = [&](const char* key) {
            auto it = fields.find(key);
            if (it == fields.end())
                throw std::runtime_error("missing field " + std::string(key) + " at line " + std::to_string(lineno));
            return it->second;
        };
        InstanceRecord rec;
        rec.index = static_cast<int>(result.records.size());
        rec.g6 = need("g6");
        rec.args = split_ints(need("X"), ',');
        const std::string outcome = need("OUTCOME");
        if (outcome == "certified") {
            rec.outcome = Outcome::certified;
            if (fields.count("KIND")) {
                Certificate cert;
                cert.kind = fields["KIND"] == "cycle" ? CertKind::cycle : CertKind::path;
                cert.order = split_ints(need("ORDER"), ',');
                if (fields.count("WIT") && fields["WIT"] != "-") {
                    std::stringstream ss(fields["WIT"]);
                    std::string item;
                    while (std::getline(ss, item, ';')) {
                        auto eq = item.find('=');
                        auto dash = item.find('-', eq);
                        if (eq == std::string::npos || dash == std::string::npos)
                            throw std::runtime_error("bad witness token at line " + std::to_string(lineno));
                        cert.witnesses.emplace_back(
                            std::stoi(item.substr(0, eq)),
                            Edge(std::stoi(item.substr(eq + 1, dash - eq - 1)), std::stoi(item.substr(dash + 1))));
                    }
                }
                rec.certificate = cert;
            }
            if (fields.count("HITS")) rec.hits = std::stoi(fields["HITS"]);
            if (fields.count("EPART")) {
                EpsGraph eps;
                eps.e_part = split_edges(fields["EPART"]);
                eps.p_part = split_edges(need("PPART"));
                rec.eps = eps;
            }
            if (fields.count("NOTE")) rec.detail = fields["NOTE"];
        } else if (outcome == "absent") {
            rec.outcome = Outcome::absent;
            rec.nodes = std::stoull(need("EXHAUSTED"));
            if (fields.count("NOTE")) rec.detail = fields["NOTE"];
        } else if (outcome == "unknown") {
            rec.outcome = Outcome::unknown;
            rec.nodes = std::stoull(need("SEARCHED"));
        } else if (outcome == "error") {
            rec.outcome = Outcome::error;
            rec.detail = need("ERROR");
        } else if (outcome == "skipped") {
            rec.outcome = Outcome::skipped;
            rec.detail = need("SKIPPED");
        } else {
            throw std::runtime_error("unknown outcome at line " + std::to_string(lineno));
        }
        revalidate(result, rec, lineno);
        switch (rec.outcome) {
            case Outcome::certified: ++result.certified; break;
            case Outcome::absent: ++result.absent; break;
            case Outcome::unknown: ++result.unknown; break;
            case Outcome::error: ++result.errors; break;
            case Outcome::skipped: ++result.skipped; break;
        }
        if (rec.detail.find("finding:") != std::string::npos) ++result.findings;
        result.records.push_back(std::move(rec));
    }
    if (declared != result.records.size())
        throw std::runtime_error("record count mismatch: header declares " + std::to_string(declared) + ", found " +
                                 std::to_string(result.records.size()));
    return result;
}

std::string render_summary(const CampaignResult& result) {
    std::ostringstream out;
    out << "campaign mode=" << to_string(result.spec.mode) << " instances=" << result.records.size() << "\n";
    out << "outcomes: certified=" << result.certified << " absent=" << result.absent << " unknown=" << result.unknown
        << " error=" << result.errors << " skipped=" << result.skipped << " findings=" << result.findings << "\n";
    out << "corpus-digest=" << result.spec.corpus_digest << " max-elapsed-ms=" << result.max_elapsed_ms << "\n";
    return out.str();
}

std::vector<std::string> read_corpus_lines(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open corpus " + path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        if (line.empty()) continue;
        if (line.rfind(">>graph6<<", 0) == 0) {
            line = line.substr(10);
            if (line.empty()) continue;
        }
        lines.push_back(line);
    }
    return lines;
}

}  // namespace hamsq
