#pragma once

#include <chrono>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mutvis/graph.hpp"

namespace mutvis {

enum class CheckStatus { pass, fail, skipped };

struct CheckFailure {
    std::string instance;
    std::string expected;
    std::string got;
};

struct CheckReport {
    std::string claim_id;
    long long instances_checked = 0;
    std::vector<CheckFailure> failures;
    CheckStatus status = CheckStatus::skipped;
    std::string skip_reason;
    std::chrono::milliseconds elapsed{0};
};

struct CheckOptions {
    int max_n = -1;    // -1: per-claim default
    int samples = -1;  // -1: per-claim default
    int workers = 1;
    std::uint64_t seed = 1;
    std::chrono::milliseconds timeout{600'000};
};

/// Ids of every registered claim checker, in registry order.
std::vector<std::string> all_claim_ids();
bool is_claim_id(const std::string& id);

/// One-line description of a claim.
std::string claim_summary(const std::string& id);

/// Runs one registered claim checker. Throws InvalidInputError for unknown
/// ids. A checker that exhausts the time budget reports skipped, never a
/// silent pass.
CheckReport check(const std::string& claim_id, const CheckOptions& opts = {});

/// Runs every registered checker in registry order.
std::vector<CheckReport> check_all(const CheckOptions& opts = {});

/// All connected (optionally triangle-free) graphs on n labeled vertices,
/// streamed as (graph, edge-mask id). Requires n <= 7. With dedup enabled only
/// the first graph per isomorphism fingerprint is emitted; a speed
/// optimization for isomorphism-invariant predicates, not an exact
/// isomorph-free generator.
void enumerate_connected_graphs(int n, bool triangle_free_only,
                                const std::function<void(const Graph&, std::uint64_t)>& fn,
                                bool dedup_by_fingerprint = false);

/// Seeded random connected graph: a random spanning tree plus each further
/// edge independently with probability extra_edge_permille/1000.
Graph random_connected_graph(int n, std::uint64_t seed, int extra_edge_permille = 300);

nlohmann::json to_json(const CheckReport& report, bool stable_output = false);

} // namespace mutvis
