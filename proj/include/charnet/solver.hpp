#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>

#include "charnet/netmodel.hpp"

namespace charnet {

enum class SearchMode { FirstSolution, CountAll };

struct SearchBudget {
    std::uint64_t max_assignments = 1ull << 24;
    SearchMode mode = SearchMode::FirstSolution;
};

enum class SearchStatus { Found, ExhaustedNone, BudgetExceeded };
const char* to_string(SearchStatus status);

struct SearchOutcome {
    SearchStatus status = SearchStatus::ExhaustedNone;
    std::optional<FractionalCode> witness;  // verifies via verify_solution when Found
    std::uint64_t enumerated = 0;           // coefficient-value assignments visited
    std::uint64_t solutions = 0;            // complete solutions (CountAll mode)
};

struct SearchOptions {
    bool prune = true;          // disable to force full-depth checking only
    unsigned threads = 1;       // >1 partitions a shared prefix across workers
    std::ostream* progress = nullptr;  // assignments/sec and pruned fraction
};

/// Number of free local-coefficient entries of a (k,n) code on this network:
/// source inputs contribute n*k, edge inputs n*n. Edges into terminals are
/// excluded (their locals fold into the solved decoders), as are decoders.
std::size_t count_free_coefficients(const NetworkSpec& spec, unsigned k, unsigned n);

/// Depth-first exhaustive search for a (1,1) scalar solution over F_p.
/// Coefficients are enumerated edge by edge in a fixed topological order that
/// finalizes cheap terminals first; a terminal's decodability is tested the
/// moment the last coefficient on any path into it is assigned, and
/// infeasible branches are cut there. Deterministic for fixed inputs, and
/// identical across thread counts.
SearchOutcome search_scalar(const NetworkSpec& spec, const PrimeField& field,
                            const SearchBudget& budget, const SearchOptions& options = {});

}  // namespace charnet
