#pragma once

#include "k3m/lattice.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace k3m {

// One row of the embedded table of the fourteen exceptional triples.
struct ArnoldRow {
    std::string name;                // Q10 .. U12
    std::array<int, 3> triple;       // (d1, d2, d3)
    std::array<int, 3> weights;      // (q1, q2, q3)
    int degree = 0;                  // N, with 1 + q1 + q2 + q3 = N
    std::array<int, 3> dual_triple;  // (d1', d2', d3')
    std::optional<int> d0;           // absent where the table prints a dash
};

// The embedded table, validated on first access: fourteen rows, dual-of-dual
// returns to the original triple, and the two tree lattices have ranks
// summing to twenty. Throws std::logic_error if the embedded asset is
// corrupt.
const std::vector<ArnoldRow>& arnold_table();

// The raw JSON asset the table is parsed from, verbatim.
const std::string& arnold_table_json();

// One verified claim. status is "pass", "fail" or "unknown" (bounded search
// exhausted without a witness); evidence is a serialized JSON object.
struct VerificationReport {
    std::string id;
    std::string paper_ref;
    std::string status;
    std::string evidence;
    long long ms = 0;
};

// Duality suite over the table: involution, rank sum, and opposite
// discriminant forms for every row. Fourteen reports.
std::vector<VerificationReport> verify_strange_duality();

// The named lattice identities: genus comparisons, the order-3 overlattice,
// the degree-2n mirror chain with its double-mirror closure, the Enriques and
// Kummer constructions, the wedge identity, modular-curve counts, and the
// weight-system groups.
std::vector<VerificationReport> verify_named_examples();

// Everything above as one deterministic batch. `only` keeps claims whose id
// starts with the given prefix; `jobs` runs claims on a work queue with that
// many workers. Output order is by claim id regardless of job count.
std::vector<VerificationReport> verify_catalog(const std::string& only = "", int jobs = 1);

struct ReportTotals {
    int pass = 0;
    int fail = 0;
    int unknown = 0;
};
ReportTotals report_totals(const std::vector<VerificationReport>& reports);

// {"claims": [{"id", "paper_ref", "status", "evidence", "ms"}, ...],
//  "summary": {"pass", "fail", "unknown"}}
std::string report_to_json(const std::vector<VerificationReport>& reports);
std::vector<VerificationReport> report_from_json(const std::string& text);

}  // namespace k3m
