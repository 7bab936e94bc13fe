#include "cgq/io.hpp"

#include <cstdio>
#include <fstream>

#include "json.hpp"

#include "cgq/errors.hpp"

namespace cgq {

namespace {

using nlohmann::json;

json matrix_to_json(const ComplexMatrix& m) {
    json re = json::array();
    json im = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json rrow = json::array();
        json irow = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) {
            rrow.push_back(m.at(i, j).real());
            irow.push_back(m.at(i, j).imag());
        }
        re.push_back(std::move(rrow));
        im.push_back(std::move(irow));
    }
    return json{{"dim", m.rows()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

ComplexMatrix matrix_from_json(const json& j, const std::string& where) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("re"))
        throw invalid_input_error(where + ": expected an object with 'dim' and 're'");
    const auto dim = j.at("dim").get<std::size_t>();
    if (dim == 0) throw invalid_input_error(where + ": dim must be >= 1");

    const auto read_part = [&](const json& part, const char* name) {
        if (!part.is_array() || part.size() != dim)
            throw invalid_input_error(where + ": '" + name + "' must be a " +
                                      std::to_string(dim) + "x" + std::to_string(dim) +
                                      " array");
        std::vector<std::vector<double>> rows;
        rows.reserve(dim);
        for (const auto& r : part) {
            if (!r.is_array() || r.size() != dim)
                throw invalid_input_error(where + ": '" + name + "' must be a " +
                                          std::to_string(dim) + "x" + std::to_string(dim) +
                                          " array");
            std::vector<double> row;
            row.reserve(dim);
            for (const auto& x : r) {
                if (!x.is_number())
                    throw invalid_input_error(where + ": '" + name + "' holds a non-number");
                row.push_back(x.get<double>());
            }
            rows.push_back(std::move(row));
        }
        return rows;
    };

    const auto re = read_part(j.at("re"), "re");
    std::vector<std::vector<double>> im;
    if (j.contains("im") && !j.at("im").is_null()) im = read_part(j.at("im"), "im");

    ComplexMatrix m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t k = 0; k < dim; ++k)
            m.at(i, k) = c64{re[i][k], im.empty() ? 0.0 : im[i][k]};
    return m;
}

} // namespace

ComplexMatrix read_state_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw invalid_input_error("cannot open state file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw invalid_input_error("state file '" + path + "' is not valid JSON: " + e.what());
    }
    return matrix_from_json(j, "state file '" + path + "'");
}

void write_state_matrix(const std::string& path, const ComplexMatrix& m) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw invalid_input_error("cannot write state file '" + path + "'");
    out << matrix_to_json(m).dump(2) << '\n';
}

std::string state_matrix_json(const ComplexMatrix& m) { return matrix_to_json(m).dump(); }

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

struct CsvWriter::Impl {
    std::ofstream out;
};

CsvWriter::CsvWriter(const std::string& path) : impl_(new Impl) {
    impl_->out.open(path, std::ios::binary);
    if (!impl_->out) {
        delete impl_;
        throw invalid_input_error("cannot write CSV file '" + path + "'");
    }
}

CsvWriter::~CsvWriter() { delete impl_; }

void CsvWriter::header(const std::vector<std::string>& names) {
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i) impl_->out << ',';
        impl_->out << names[i];
    }
    impl_->out << '\n';
}

void CsvWriter::row(const std::vector<double>& values) {
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) impl_->out << ',';
        impl_->out << format_double(values[i]);
    }
    impl_->out << '\n';
}

} // namespace cgq
