#include "graphspark/matrix_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace graphspark {

RationalMatrix parse_matrix_text(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::vector<Rational>> rows;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tok;
        std::vector<Rational> row;
        while (ls >> tok) {
            if (tok[0] == '#') break;
            row.push_back(Rational::parse(tok));
        }
        if (row.empty()) continue;
        if (!rows.empty() && row.size() != rows[0].size())
            throw ParseError("matrix row " + std::to_string(rows.size() + 1) +
                             " has " + std::to_string(row.size()) + " entries, expected " +
                             std::to_string(rows[0].size()));
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError("matrix text contains no rows");
    RationalMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
    return m;
}

RationalMatrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open matrix file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_matrix_text(buf.str());
}

std::string matrix_to_text(const RationalMatrix& a) {
    std::ostringstream out;
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) {
            if (j) out << ' ';
            out << a.at(i, j);
        }
        out << '\n';
    }
    return out.str();
}

std::string matrix_to_json(const RationalMatrix& a) {
    nlohmann::json entries = nlohmann::json::array();
    for (int i = 0; i < a.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < a.cols(); ++j) row.push_back(a.at(i, j).str());
        entries.push_back(std::move(row));
    }
    nlohmann::json j{{"rows", a.rows()}, {"cols", a.cols()}, {"entries", entries}};
    return j.dump();
}

RationalMatrix matrix_from_json(const std::string& json_text) {
    nlohmann::json j = nlohmann::json::parse(json_text, nullptr, false);
    if (j.is_discarded() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
        throw ParseError("invalid matrix JSON");
    RationalMatrix m(j["rows"].get<int>(), j["cols"].get<int>());
    const auto& entries = j["entries"];
    if (static_cast<int>(entries.size()) != m.rows()) throw ParseError("matrix JSON row count mismatch");
    for (int i = 0; i < m.rows(); ++i) {
        if (static_cast<int>(entries[i].size()) != m.cols())
            throw ParseError("matrix JSON column count mismatch in row " + std::to_string(i + 1));
        for (int jx = 0; jx < m.cols(); ++jx) {
            const auto& cell = entries[i][jx];
            m.at(i, jx) = cell.is_number_integer()
                              ? Rational(cell.get<long long>())
                              : Rational::parse(cell.get<std::string>());
        }
    }
    return m;
}

std::string vector_to_text(const RationalVector& x) {
    std::ostringstream out;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i) out << ',';
        out << x[i];
    }
    return out.str();
}

RationalVector parse_vector(const std::string& text) {
    RationalVector out;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto comma = text.find(',', start);
        std::string tok = text.substr(start, comma == std::string::npos ? comma : comma - start);
        out.push_back(Rational::parse(tok));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

} // namespace graphspark
