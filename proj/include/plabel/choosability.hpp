#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <plabel/graph.hpp>
#include <plabel/labelling.hpp>
#include <plabel/serialization.hpp>

namespace plabel {

enum class CertificateKind {
    // every normalized k-assignment over {0..U} is labelable
    upper_certified,
    // the embedded k-assignment admits no labelling
    lower_witness,
    // search ran out of space or budget without a witness
    exhausted,
};

enum class SearchOrder { lexicographic, random };

struct Certificate {
    CertificateKind kind = CertificateKind::exhausted;
    Graph graph;
    int p = 0;
    int k = 0;
    int universe = 0;
    std::uint64_t checked = 0;
    // true when the whole normalized space was enumerated
    bool complete = false;
    SearchOrder order = SearchOrder::lexicographic;
    std::uint64_t seed = 0;
    std::uint64_t budget = 0;
    std::vector<std::string> normalization;
    std::optional<ListAssignment> assignment;
};

struct WitnessSearch {
    int k = 1;
    // colors are drawn from {0..universe}
    int universe = 2;
    // assignments handed to the list solver
    std::uint64_t budget = 100000;
    SearchOrder order = SearchOrder::lexicographic;
    std::uint64_t seed = 0;
    // skip assignments that are not lexicographically least in their orbit
    // under the element permutations induced by graph automorphisms
    bool use_automorphisms = true;
    // only normalized assignments with ordinal % shard_count == shard_index
    std::uint64_t shard_index = 0;
    std::uint64_t shard_count = 1;
};

inline int default_universe(int k) { return 2 * k; }

// Searches normalized k-assignments (some list contains color 0) for one
// that the list solver rejects. Throws std::invalid_argument for k < 1,
// universe < k - 1 or a zero budget.
Certificate find_bad_assignment(const Graph & g, int p, const WitnessSearch & search);

// Exhaustive check of every normalized k-assignment over {0..universe}, up
// to automorphism. Refuses (std::length_error, with the size estimate) when
// the raw space exceeds max_assignments.
Certificate certify_choosable(const Graph & g, int p, int k, int universe,
        double max_assignments = 2e7);

// C(universe+1, k) ^ (|V| + |E|), as a double.
double assignment_space_size(const Graph & g, int k, int universe);

// Element permutations (over elements(g) indices) induced by vertex
// automorphisms of g, identity first; at most `cap` of them.
std::vector<std::vector<int>> element_automorphisms(const Graph & g, std::size_t cap = 5040);

std::string_view certificate_kind_name(CertificateKind kind);

Json certificate_to_json(const Certificate & cert);
Certificate certificate_from_json(const Json & j);

// {"kind": "labelling", "graph": ..., "p": ..., "labels": ..., "lists"?: ...}; an optional
// "claimed_lambda" is rechecked by proving span claimed_lambda - 1 infeasible.
Json labelling_certificate(const Graph & g, int p, const TotalLabelling & c,
        const ListAssignment * lists = nullptr);

struct RecheckResult {
    bool ok = false;
    std::string detail;
};

// Re-validates a certificate from its own contents: witnesses are re-solved,
// labellings re-validated, exhaustive claims re-enumerated.
RecheckResult recheck(const Certificate & cert);
RecheckResult recheck_json(const Json & j);

} // namespace plabel
