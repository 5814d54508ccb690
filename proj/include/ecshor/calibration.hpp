#pragma once

#include <string>
#include <vector>

#include "ecshor/errors.hpp"

namespace ecshor {

struct QubitCalRow {
    int qubit = 0;
    double sx_error = 0.0;
    double t1_us = 0.0;
    double t2_us = 0.0;
};

/// Parses a backend calibration CSV. Header names are matched after
/// whitespace stripping; the sx-error column only needs to contain
/// "(sx) error" so the unicode sqrt prefix survives export quirks.
/// Throws MissingColumn / MalformedRow.
std::vector<QubitCalRow> parse_calibration_csv(const std::string& text);

/// Sort ascending sx_error, then descending T1, then descending T2, final
/// tie-break ascending qubit id; take the first n ids.
/// Throws NotEnoughQubits when n exceeds the row count.
std::vector<int> rank_qubits(std::vector<QubitCalRow> rows, int n);

}  // namespace ecshor
