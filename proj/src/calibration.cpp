#include "ecshor/calibration.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace ecshor {

namespace {

std::string strip(const std::string& s) {
    size_t begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    size_t end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    bool quoted = false;
    for (char c : line) {
        if (c == '"') {
            quoted = !quoted;
        } else if (c == ',' && !quoted) {
            fields.push_back(field);
            field.clear();
        } else {
            field += c;
        }
    }
    fields.push_back(field);
    return fields;
}

}  // namespace

std::vector<QubitCalRow> parse_calibration_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw MissingColumn("empty calibration file");

    auto headers = split_csv_line(line);
    int col_qubit = -1, col_sx = -1, col_t1 = -1, col_t2 = -1;
    for (size_t i = 0; i < headers.size(); ++i) {
        std::string h = strip(headers[i]);
        if (h == "Qubit") col_qubit = static_cast<int>(i);
        else if (h.find("(sx) error") != std::string::npos) col_sx = static_cast<int>(i);
        else if (h == "T1 (us)") col_t1 = static_cast<int>(i);
        else if (h == "T2 (us)") col_t2 = static_cast<int>(i);
    }
    if (col_qubit < 0) throw MissingColumn("missing column: Qubit");
    if (col_sx < 0) throw MissingColumn("missing column: (sx) error");
    if (col_t1 < 0) throw MissingColumn("missing column: T1 (us)");
    if (col_t2 < 0) throw MissingColumn("missing column: T2 (us)");

    std::vector<QubitCalRow> rows;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (strip(line).empty()) continue;
        auto fields = split_csv_line(line);
        int max_col = std::max({col_qubit, col_sx, col_t1, col_t2});
        if (static_cast<int>(fields.size()) <= max_col)
            throw MalformedRow("line " + std::to_string(line_no) + ": too few fields");
        try {
            QubitCalRow row;
            row.qubit = std::stoi(strip(fields[col_qubit]));
            row.sx_error = std::stod(strip(fields[col_sx]));
            row.t1_us = std::stod(strip(fields[col_t1]));
            row.t2_us = std::stod(strip(fields[col_t2]));
            rows.push_back(row);
        } catch (const std::exception&) {
            throw MalformedRow("line " + std::to_string(line_no) + ": unparseable value");
        }
    }
    return rows;
}

std::vector<int> rank_qubits(std::vector<QubitCalRow> rows, int n) {
    if (n > static_cast<int>(rows.size()))
        throw NotEnoughQubits("need " + std::to_string(n) + " qubits, have " +
                              std::to_string(rows.size()));
    std::sort(rows.begin(), rows.end(), [](const QubitCalRow& l, const QubitCalRow& r) {
        if (l.sx_error != r.sx_error) return l.sx_error < r.sx_error;
        if (l.t1_us != r.t1_us) return l.t1_us > r.t1_us;
        if (l.t2_us != r.t2_us) return l.t2_us > r.t2_us;
        return l.qubit < r.qubit;
    });
    std::vector<int> ids;
    ids.reserve(n);
    for (int i = 0; i < n; ++i) ids.push_back(rows[i].qubit);
    return ids;
}

}  // namespace ecshor
