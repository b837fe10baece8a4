// Batch command-line front end. Reads a defining-graph file (vertex count
// plus commuting edges), runs one of the computation or verification
// commands, and writes a deterministic report as text, CSV, or JSON:
//
//   ranks      graded ranks of the graph's partially commutative Lie ring
//   fp         graded ranks and splitting checks for the associated
//              Formanek-Procesi Lie ring
//   eliminate  the step-by-step elimination decomposition with rendered
//              generating sets
//   verify     an aggregated pass/fail suite (Jacobi and tensor-oracle
//              cross-checks, decomposition sums, module freeness,
//              Magnus-expansion provenance of the relators)
//
// Identical inputs (including the seed) produce byte-identical output.
// The process exit code is 0 exactly when every executed check passed.

#ifndef GRADEDLIE_CLI_HPP
#define GRADEDLIE_CLI_HPP

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "gradedlie/pcommute.hpp"

namespace gradedlie {

// A defining graph: vertices 1..n, undirected edges between distinct
// vertices. Edges are stored with the smaller endpoint first, sorted, and
// deduplicated.
struct GraphFile {
    int n = 0;
    std::vector<std::pair<int, int>> edges;

    PartialCommutation to_theta() const;
};

// Input format: first significant line "n <count>", then one "a b" edge per
// line; '#' starts a comment, blank lines are ignored. Violations (bad
// syntax, labels out of range, loops) raise std::runtime_error naming the
// 1-based line number.
GraphFile parse_graph(std::istream& in);
GraphFile parse_graph_text(const std::string& text);

struct RunConfig {
    std::string command;         // ranks | fp | eliminate | verify
    int max_degree = 6;          // >= 1
    std::string format = "text"; // text | csv | json
    unsigned long long seed = 0; // randomized property checks
    bool quiet = false;          // trim text output to the summary
    bool show_relabel = false;   // report the internal vertex ordering
    bool corrupt_relators = false; // negative-control hook: sabotage relators
};

// Each command writes one report to `out` and returns the exit code:
// 0 all checks passed, 1 some check failed.
int cmd_ranks(const GraphFile& graph, const RunConfig& cfg, std::ostream& out);
int cmd_fp(const GraphFile& graph, const RunConfig& cfg, std::ostream& out);
int cmd_eliminate(const GraphFile& graph, const RunConfig& cfg, std::ostream& out);
int cmd_verify(const GraphFile& graph, const RunConfig& cfg, std::ostream& out);

// Argument-level entry point (argv without the program name). Reads the
// positional input path, '-' meaning `input`, parses flags, dispatches, and
// reports usage or input errors on `err` with exit code 2.
int run_cli(const std::vector<std::string>& args, std::istream& input,
            std::ostream& out, std::ostream& err);

} // namespace gradedlie

#endif
