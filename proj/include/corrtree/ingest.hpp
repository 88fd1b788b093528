#pragma once

#include <map>
#include <string>
#include <vector>

#include "corrtree/matrix.hpp"

namespace corrtree {

/// Wide monthly price table: one date column, one column per series symbol.
/// Cells that were empty or nonpositive in the source are flagged in
/// `missing` and their `values` entry is unspecified.
struct PriceTable {
    std::vector<std::string> dates;   // YYYY-MM, strictly increasing
    std::vector<std::string> symbols; // unique, nonempty
    Matrix values;                    // T x N
    BoolGrid missing;                 // T x N
    std::vector<std::string> warnings;
};

/// T-tau rows of log returns ln P(t+tau) - ln P(t), one column per symbol.
struct ReturnsMatrix {
    std::vector<std::string> symbols;
    Matrix rows; // (T - tau) x N
    int tau = 1;
};

/// compute_log_returns output plus the per-run missing-data report.
struct ReturnsResult {
    ReturnsMatrix returns;
    std::vector<std::string> row_months;            // month of row t+tau per returns row
    std::vector<std::string> dropped_months;        // listwise-deleted months
    std::vector<std::string> zero_variance_symbols; // columns with constant returns
};

struct IngestOptions {
    int tau = 1;                      // used to validate the minimum row count
    std::vector<std::string> symbols; // optional filter; kept in file order
};

/// Parse and validate a wide price CSV (header `DATE,SYM1,...,SYMN`).
/// Empty cells are missing; nonpositive or non-finite cells are marked
/// missing with a warning. Throws IoError / ValidationError.
PriceTable load_csv(const std::string& path, const IngestOptions& options = {});

/// Same parser over an in-memory CSV body (used by tests and bindings).
PriceTable parse_csv(const std::string& text, const IngestOptions& options = {},
                     const std::string& origin = "<string>");

/// Drop every month with at least one missing value (listwise deletion),
/// then take log returns at lag `tau` over the retained rows. Columns whose
/// returns are constant are flagged for the correlation stage.
ReturnsResult compute_log_returns(const PriceTable& prices, int tau);

/// Remove the given symbols from a returns matrix (used by the CLI's
/// auto-drop option for zero-variance columns).
ReturnsMatrix drop_columns(const ReturnsMatrix& returns, const std::vector<std::string>& symbols);

struct SymbolMeta {
    std::string continent;
    std::string name;
};

/// Optional sidecar metadata: CSV with header `symbol,continent,name`.
std::map<std::string, SymbolMeta> load_metadata_csv(const std::string& path);

} // namespace corrtree
