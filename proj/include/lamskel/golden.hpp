#pragma once

#include <string>
#include <vector>

#include "lamskel/series.hpp"

namespace lamskel {

// Reference count sequence loaded from a checked-in data file. File format:
// '#' comment lines, then one "index value" pair per line. Header comments
// may carry "oeis: Axxxxxx" and "index: size|exponent" fields.
struct GoldenSequence {
    std::string name;
    std::string oeis_id;            // empty when none is known
    std::string index_kind = "size";
    std::vector<BigInt> values;     // values[i] at index i (dense from 0)
};

GoldenSequence load_golden_file(const std::string& path);

}  // namespace lamskel
