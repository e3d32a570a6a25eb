#include "mbounds/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "mbounds/errors.hpp"

namespace mbounds::io {
namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

/// One line with its '#' comment removed and separators unified to spaces.
std::string clean_line(const std::string& line, bool commas) {
    std::string out;
    for (char ch : line) {
        if (ch == '#') break;
        if (ch == '\r' || ch == '\t' || (commas && ch == ',')) ch = ' ';
        out.push_back(ch);
    }
    return out;
}

double parse_number(const std::string& token, int line_no) {
    try {
        size_t pos = 0;
        double v = std::stod(token, &pos);
        if (pos != token.size())
            throw ParseError("trailing characters after number: '" + token + "'", line_no);
        return v;
    } catch (const std::invalid_argument&) {
        throw ParseError("not a number: '" + token + "'", line_no);
    } catch (const std::out_of_range&) {
        throw ParseError("number out of range: '" + token + "'", line_no);
    }
}

} // namespace

std::vector<double> parse_sample_text(const std::string& text) {
    std::vector<double> values;
    std::istringstream lines(text);
    std::string line;
    int line_no = 0;
    while (std::getline(lines, line)) {
        ++line_no;
        std::istringstream tokens(clean_line(line, true));
        std::string token;
        while (tokens >> token) values.push_back(parse_number(token, line_no));
    }
    if (values.empty()) throw ParseError("no values found");
    return values;
}

std::vector<double> read_sample_file(const std::string& path) {
    return parse_sample_text(slurp(path));
}

SquareMatrix parse_matrix_csv(const std::string& text) {
    std::vector<std::vector<double>> rows;
    std::istringstream lines(text);
    std::string line;
    int line_no = 0;
    while (std::getline(lines, line)) {
        ++line_no;
        std::string cleaned = clean_line(line, false);
        if (cleaned.find_first_not_of(' ') == std::string::npos) continue;
        std::vector<double> row;
        std::istringstream cells(cleaned);
        std::string cell;
        while (std::getline(cells, cell, ','))
            row.push_back(parse_number(clean_line(cell, false), line_no));
        if (!rows.empty() && row.size() != rows.front().size())
            throw ParseError("row has " + std::to_string(row.size()) + " entries, expected " +
                                 std::to_string(rows.front().size()),
                             line_no);
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError("no matrix rows found");
    if (rows.size() != rows.front().size())
        throw ParseError("matrix is " + std::to_string(rows.size()) + "x" +
                         std::to_string(rows.front().size()) + ", expected square");
    return SquareMatrix::from_rows(rows);
}

SquareMatrix read_matrix_file(const std::string& path) {
    return parse_matrix_csv(slurp(path));
}

std::vector<double> parse_poly_coefficients(const std::vector<double>& tokens) {
    if (tokens.empty()) throw InvalidInput("no polynomial coefficients given");
    if (tokens.front() == 1.0) return {tokens.begin() + 1, tokens.end()};
    return tokens;
}

DepressedPolynomial parse_poly_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.what());
    }
    if (!doc.is_object() || !doc.contains("degree") || !doc["degree"].is_number_integer())
        throw ParseError("expected an object with an integer 'degree'");
    int degree = doc["degree"].get<int>();
    if (degree < 2) throw ParseError("degree must be at least 2");

    std::vector<double> trailing(static_cast<size_t>(degree - 1), 0.0);
    if (doc.contains("coeffs")) {
        const auto& coeffs = doc["coeffs"];
        if (!coeffs.is_object()) throw ParseError("'coeffs' must be an object");
        for (const auto& [key, value] : coeffs.items()) {
            if (key.size() < 2 || key[0] != 'b')
                throw ParseError("coefficient keys look like 'b2'...'bn', got '" + key + "'");
            int idx = 0;
            for (size_t i = 1; i < key.size(); ++i) {
                if (!std::isdigit(static_cast<unsigned char>(key[i])))
                    throw ParseError("coefficient keys look like 'b2'...'bn', got '" + key + "'");
                idx = idx * 10 + (key[i] - '0');
            }
            if (idx < 2 || idx > degree)
                throw ParseError("coefficient '" + key + "' is outside b2..b" +
                                 std::to_string(degree));
            if (!value.is_number()) throw ParseError("coefficient '" + key + "' must be a number");
            trailing[static_cast<size_t>(idx - 2)] = value.get<double>();
        }
    }
    return DepressedPolynomial(degree, trailing);
}

} // namespace mbounds::io
