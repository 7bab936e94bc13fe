#pragma once

#include <string>
#include <vector>

#include "cgq/complex_matrix.hpp"

namespace cgq {

// State files are JSON objects {"dim": n, "re": [[...]], "im": [[...]]} with
// row-major n x n real and imaginary parts. "im" may be omitted for real
// matrices.
ComplexMatrix read_state_matrix(const std::string& path);
void write_state_matrix(const std::string& path, const ComplexMatrix& m);

// JSON text of the same shape, for embedding states inside reports.
std::string state_matrix_json(const ComplexMatrix& m);

// 17 significant digits: enough to round-trip any double exactly.
std::string format_double(double x);

// Minimal CSV emitter: comma separator, '\n' line ends, '.' decimal point,
// doubles via format_double. Writes to path atomically enough for our use
// (plain ofstream, truncating).
class CsvWriter {
public:
    explicit CsvWriter(const std::string& path);
    ~CsvWriter();

    CsvWriter(const CsvWriter&) = delete;
    CsvWriter& operator=(const CsvWriter&) = delete;

    void header(const std::vector<std::string>& names);
    void row(const std::vector<double>& values);

private:
    struct Impl;
    Impl* impl_;
};

} // namespace cgq
