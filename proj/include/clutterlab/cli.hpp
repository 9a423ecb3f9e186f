#pragma once

// Command-line layer: instance files, certificates and the command runners used by
// tools/clutterlab. Everything here is deterministic unless timing is requested.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "clutterlab/combinat.hpp"
#include "clutterlab/tdi.hpp"

namespace clutterlab::cli {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

struct Instance {
    enum class Kind { graph, clutter, system };
    Kind kind = Kind::clutter;
    SimpleGraph graph;
    Clutter clutter;
    LinearSystem system;

    static Instance of(SimpleGraph g);
    static Instance of(Clutter c);
    static Instance of(LinearSystem s);
};

/// Parses a graph, clutter or system document. Throws UsageError naming the offending
/// position (line/column for syntax, JSON pointer for schema violations).
Instance parse_instance(std::string_view text);
Instance load_instance(const std::string& path);

/// Canonical form: sorted arrays, fixed key order.
json instance_to_json(const Instance& inst);
std::string canonical_text(const Instance& inst);
/// SHA-256 of the canonical text, lowercase hex.
std::string digest(const Instance& inst);
std::string sha256_hex(std::string_view data);

json to_json(const Integer& x);
json to_json(const IntVector& v);
json to_json(const RatVector& v);

struct BudgetFlags {
    std::uint64_t limit = 0;
    std::uint64_t used = 0;
    bool exhausted = false;
    friend bool operator==(const BudgetFlags&, const BudgetFlags&) = default;
};

struct Certificate {
    int schema_version = kSchemaVersion;
    std::string command;
    std::string digest;
    std::string verdict; ///< holds | fails | undecided
    json witnesses = json::object();
    json invariants = json::object();
    BudgetFlags budget;
    std::optional<std::uint64_t> seed;
    std::optional<double> timing_seconds;
    friend bool operator==(const Certificate&, const Certificate&) = default;
};

json to_json(const Certificate& c);
Certificate certificate_from_json(const json& j);
/// Pretty-printed, trailing newline; byte-stable for equal certificates.
std::string emit(const Certificate& c);
Certificate parse_certificate(std::string_view text);

enum ExitCode : int { exit_holds = 0, exit_fails = 1, exit_undecided = 2, exit_usage = 64, exit_internal = 70 };
int exit_code(const Certificate& c);

struct CheckOptions {
    bool edge_clutter = false; ///< graphs: use the edge clutter instead of the clique clutter
    unsigned r = 3;            ///< power bound for ntf / normal
    bool timing = false;
    std::optional<std::uint64_t> budget;
};

const std::vector<std::string>& property_names();

Certificate run_check(const std::string& property, const Instance& inst, const CheckOptions& opts = {});
Certificate run_invariants(const Instance& inst, const CheckOptions& opts = {});

struct ConjectureOptions {
    std::vector<std::string> families;
    std::size_t max_n = 7;
    std::uint64_t seed = 1;
    std::size_t per_family = 20;
    bool timing = false;
    std::optional<std::uint64_t> budget;
};

const std::vector<std::string>& conjecture_families();
Certificate run_conjecture(const ConjectureOptions& opts);

/// Short human-readable report.
std::string summarize(const Certificate& c);

struct ExampleFile {
    std::string name;
    std::string content;
};
const std::vector<std::string>& example_names();
/// Instance files plus a certificate for each; names are `NAME.*.json`. Throws UsageError for unknown names.
std::vector<ExampleFile> make_example(const std::string& name);

} // namespace clutterlab::cli
