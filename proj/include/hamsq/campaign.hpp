#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hamsq/certificate.hpp"
#include "hamsq/eps.hpp"
#include "hamsq/graph.hpp"

namespace hamsq {

/// 64-bit linear congruential generator (Knuth's MMIX multiplier); stated so
/// that sampled campaigns reproduce across implementations.
struct Lcg64 {
    std::uint64_t state = 0;
    std::uint64_t next() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return state;
    }
    std::uint64_t bounded(std::uint64_t n) { return n == 0 ? 0 : next() % n; }
};

std::uint64_t fnv1a64(const std::string& bytes);

enum class CampaignMode { h_property, f_property, strong_f3, thm3, thm4, w_sound, eps, counterexample, corollary };

std::string to_string(CampaignMode mode);
std::optional<CampaignMode> campaign_mode_from(const std::string& token);

struct CampaignSpec {
    CampaignMode mode = CampaignMode::h_property;
    int k = 4;
    std::vector<std::string> corpus;  // graph6 lines
    std::string corpus_digest;        // filled by run_campaign when empty
    bool sample = false;
    int sample_count = 0;
    std::uint64_t seed = 0;
    std::chrono::milliseconds timeout{10000};
    int jobs = 1;
    int max_n = 64;
    // counterexample parameters
    std::string base = "C4";
    int t = 3;
    int x1 = 0;
    int x2 = 1;
};

enum class Outcome { certified, absent, unknown, error, skipped };

std::string to_string(Outcome o);

struct InstanceRecord {
    int index = 0;
    std::string g6;
    std::vector<int> args;  // mode-specific argument tuple
    Outcome outcome = Outcome::error;
    std::optional<Certificate> certificate;
    std::optional<EpsGraph> eps;
    std::optional<int> hits;  // w-sound records
    std::uint64_t nodes = 0;
    std::string detail;
    double elapsed_ms = 0;  // never serialized or compared

    friend bool operator==(const InstanceRecord& a, const InstanceRecord& b) {
        // `nodes` counts only where it is part of the persisted record.
        const bool nodes_carried = a.outcome == Outcome::absent || a.outcome == Outcome::unknown;
        return a.index == b.index && a.g6 == b.g6 && a.args == b.args && a.outcome == b.outcome &&
               a.certificate == b.certificate && a.eps.has_value() == b.eps.has_value() &&
               (!a.eps || (a.eps->e_part == b.eps->e_part && a.eps->p_part == b.eps->p_part)) &&
               a.hits == b.hits && (!nodes_carried || a.nodes == b.nodes) && a.detail == b.detail;
    }
};

struct CampaignResult {
    CampaignSpec spec;
    std::vector<InstanceRecord> records;
    int certified = 0;
    int absent = 0;
    int unknown = 0;
    int errors = 0;
    int skipped = 0;
    /// Outcomes contradicting what the verified statements promise for the
    /// mode (a missing certificate in a verify mode, a certified witness set
    /// on the counterexample family, ...).
    int findings = 0;
    double max_elapsed_ms = 0;

    friend bool operator==(const CampaignResult& a, const CampaignResult& b) {
        return a.records == b.records && a.certified == b.certified && a.absent == b.absent &&
               a.unknown == b.unknown && a.errors == b.errors && a.skipped == b.skipped &&
               a.findings == b.findings;
    }
};

/// Runs every instance of the campaign over a bounded worker pool. Output is
/// byte-identical for any job count: instances are fixed up front and records
/// are keyed by instance index.
CampaignResult run_campaign(const CampaignSpec& spec);

/// Structure gate plus certificate search for graphs whose block-cutvertex
/// tree is a subdivided star centered at a block with at most four
/// cutvertices.
InstanceRecord verify_corollary(const Graph& g, std::chrono::milliseconds timeout = std::chrono::milliseconds{10000});

void write_certificates(const CampaignResult& result, const std::string& path);
CampaignResult read_certificates(const std::string& path);

std::string render_summary(const CampaignResult& result);

/// Reads a graph6 corpus file: one graph per line, optional format header.
std::vector<std::string> read_corpus_lines(const std::string& path);

}  // namespace hamsq
