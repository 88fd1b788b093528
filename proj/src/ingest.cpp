#include "corrtree/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "corrtree/errors.hpp"

namespace corrtree {

namespace {

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    fields.push_back(cur);
    return fields;
}

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

bool valid_month_label(const std::string& s) {
    // YYYY-MM
    if (s.size() != 7 || s[4] != '-') return false;
    for (std::size_t i : {0u, 1u, 2u, 3u, 5u, 6u})
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    const int month = (s[5] - '0') * 10 + (s[6] - '0');
    return month >= 1 && month <= 12;
}

} // namespace

PriceTable parse_csv(const std::string& text, const IngestOptions& options,
                     const std::string& origin) {
    if (options.tau < 1)
        throw ValidationError("tau must be >= 1");

    std::vector<std::string> lines;
    {
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (!line.empty()) lines.push_back(line);
        }
    }
    if (lines.empty())
        throw ValidationError(origin + ": empty file");

    const auto header = split_line(lines.front());
    if (header.size() < 3)
        throw ValidationError(origin + ": fewer than 2 symbols in header");

    std::vector<std::string> file_symbols;
    for (std::size_t i = 1; i < header.size(); ++i) {
        const std::string sym = trim(header[i]);
        if (sym.empty())
            throw ValidationError(origin + ": empty symbol in header column " + std::to_string(i + 1));
        file_symbols.push_back(sym);
    }
    {
        std::set<std::string> seen;
        for (const auto& s : file_symbols)
            if (!seen.insert(s).second)
                throw ValidationError(origin + ": duplicate symbol header '" + s + "'");
    }

    // Column selection: requested symbols are kept in file order.
    std::vector<std::size_t> keep;
    if (options.symbols.empty()) {
        keep.resize(file_symbols.size());
        for (std::size_t i = 0; i < keep.size(); ++i) keep[i] = i;
    } else {
        const std::set<std::string> wanted(options.symbols.begin(), options.symbols.end());
        for (const auto& w : wanted)
            if (std::find(file_symbols.begin(), file_symbols.end(), w) == file_symbols.end())
                throw ValidationError(origin + ": requested symbol '" + w + "' not in file");
        for (std::size_t i = 0; i < file_symbols.size(); ++i)
            if (wanted.count(file_symbols[i])) keep.push_back(i);
    }
    if (keep.size() < 2)
        throw ValidationError(origin + ": fewer than 2 symbols");

    PriceTable table;
    for (std::size_t i : keep) table.symbols.push_back(file_symbols[i]);

    const std::size_t t_count = lines.size() - 1;
    if (t_count < static_cast<std::size_t>(options.tau) + 2)
        throw ValidationError(origin + ": fewer than tau+2 rows (" + std::to_string(t_count) +
                              " data rows, tau=" + std::to_string(options.tau) + ")");

    table.values = Matrix(t_count, keep.size());
    table.missing = BoolGrid(t_count, keep.size());

    for (std::size_t r = 0; r < t_count; ++r) {
        const auto fields = split_line(lines[r + 1]);
        if (fields.size() != header.size())
            throw ValidationError(origin + ": row " + std::to_string(r + 2) + " has " +
                                  std::to_string(fields.size()) + " fields, expected " +
                                  std::to_string(header.size()));

        const std::string date = trim(fields[0]);
        if (!valid_month_label(date))
            throw ValidationError(origin + ": unparsable date '" + date + "' at row " +
                                  std::to_string(r + 2));
        if (!table.dates.empty() && date <= table.dates.back())
            throw ValidationError(origin + ": non-monotone dates ('" + table.dates.back() +
                                  "' followed by '" + date + "')");
        table.dates.push_back(date);

        for (std::size_t c = 0; c < keep.size(); ++c) {
            const std::string cell = trim(fields[keep[c] + 1]);
            if (cell.empty()) {
                table.missing.set(r, c, true);
                continue;
            }
            double value = 0.0;
            const char* first = cell.data();
            const char* last = cell.data() + cell.size();
            auto [ptr, ec] = std::from_chars(first, last, value);
            if (ec != std::errc{} || ptr != last)
                throw ValidationError(origin + ": unparsable number '" + cell + "' at row " +
                                      std::to_string(r + 2) + ", symbol " + table.symbols[c]);
            if (!std::isfinite(value) || value <= 0.0) {
                table.missing.set(r, c, true);
                table.warnings.push_back("nonpositive value for " + table.symbols[c] + " at " +
                                         date + " treated as missing");
            } else {
                table.values(r, c) = value;
            }
        }
    }
    return table;
}

PriceTable load_csv(const std::string& path, const IngestOptions& options) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open input file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_csv(buf.str(), options, path);
}

ReturnsResult compute_log_returns(const PriceTable& prices, int tau) {
    if (tau < 1)
        throw ValidationError("tau must be >= 1");

    const std::size_t n = prices.symbols.size();
    ReturnsResult result;

    // Listwise deletion: a month with any missing value is dropped for all symbols.
    std::vector<std::size_t> retained;
    for (std::size_t t = 0; t < prices.values.rows(); ++t) {
        bool complete = true;
        for (std::size_t c = 0; c < n && complete; ++c)
            if (prices.missing.get(t, c)) complete = false;
        if (complete)
            retained.push_back(t);
        else
            result.dropped_months.push_back(prices.dates[t]);
    }

    const std::size_t kept = retained.size();
    if (kept <= static_cast<std::size_t>(tau))
        throw ValidationError("not enough complete months: " + std::to_string(kept) +
                              " retained, tau=" + std::to_string(tau));

    const std::size_t rows = kept - static_cast<std::size_t>(tau);
    ReturnsMatrix& ret = result.returns;
    ret.symbols = prices.symbols;
    ret.tau = tau;
    ret.rows = Matrix(rows, n);
    for (std::size_t t = 0; t < rows; ++t) {
        result.row_months.push_back(prices.dates[retained[t + tau]]);
        for (std::size_t c = 0; c < n; ++c)
            ret.rows(t, c) = std::log(prices.values(retained[t + tau], c)) -
                             std::log(prices.values(retained[t], c));
    }

    for (std::size_t c = 0; c < n; ++c) {
        bool constant = true;
        for (std::size_t t = 1; t < rows && constant; ++t)
            if (ret.rows(t, c) != ret.rows(0, c)) constant = false;
        if (constant)
            result.zero_variance_symbols.push_back(prices.symbols[c]);
    }
    return result;
}

ReturnsMatrix drop_columns(const ReturnsMatrix& returns, const std::vector<std::string>& symbols) {
    const std::set<std::string> drop(symbols.begin(), symbols.end());
    std::vector<std::size_t> keep;
    for (std::size_t c = 0; c < returns.symbols.size(); ++c)
        if (!drop.count(returns.symbols[c])) keep.push_back(c);
    if (keep.size() < 2)
        throw ValidationError("fewer than 2 symbols remain after dropping constant columns");

    ReturnsMatrix out;
    out.tau = returns.tau;
    for (std::size_t c : keep) out.symbols.push_back(returns.symbols[c]);
    out.rows = Matrix(returns.rows.rows(), keep.size());
    for (std::size_t t = 0; t < returns.rows.rows(); ++t)
        for (std::size_t c = 0; c < keep.size(); ++c)
            out.rows(t, c) = returns.rows(t, keep[c]);
    return out;
}

std::map<std::string, SymbolMeta> load_metadata_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open metadata file '" + path + "'");

    std::map<std::string, SymbolMeta> meta;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto fields = split_line(line);
        if (first) {
            first = false;
            if (fields.size() < 3 || trim(fields[0]) != "symbol")
                throw ValidationError(path + ": metadata header must be symbol,continent,name");
            continue;
        }
        if (fields.size() < 3)
            throw ValidationError(path + ": metadata row needs 3 fields");
        meta[trim(fields[0])] = SymbolMeta{trim(fields[1]), trim(fields[2])};
    }
    return meta;
}

} // namespace corrtree
