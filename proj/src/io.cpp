#include "npcd/io.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace npcd {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) {
        return "";
    }
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::string fmt_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

DataFormat format_from_string(const std::string& s) {
    if (s == "long-csv" || s == "csv") return DataFormat::LongCsv;
    if (s == "ragged-json" || s == "json") return DataFormat::RaggedJson;
    throw std::invalid_argument("unknown data format '" + s + "' (expected long-csv or ragged-json)");
}

DataFormat infer_format(const std::filesystem::path& path) {
    const std::string ext = path.extension().string();
    if (ext == ".csv") return DataFormat::LongCsv;
    if (ext == ".json") return DataFormat::RaggedJson;
    throw std::invalid_argument("cannot infer data format from '" + path.string() +
                                "'; pass --format");
}

Dataset parse_long_csv(std::istream& in) {
    std::string line;
    int lineno = 0;
    if (!std::getline(in, line)) {
        throw ParseError("line 1: empty input, expected header 't,value'");
    }
    ++lineno;
    if (trim(line) != "t,value") {
        throw ParseError("line 1: expected header 't,value', got '" + trim(line) + "'");
    }

    std::map<long, std::vector<double>> by_time;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string row = trim(line);
        if (row.empty()) {
            continue;
        }
        const auto comma = row.find(',');
        if (comma == std::string::npos) {
            throw ParseError("line " + std::to_string(lineno) + ": expected 't,value'");
        }
        long t = 0;
        double v = 0.0;
        try {
            std::size_t used = 0;
            t = std::stol(trim(row.substr(0, comma)), &used);
            if (used != trim(row.substr(0, comma)).size()) {
                throw std::invalid_argument("trailing characters");
            }
        } catch (const std::exception&) {
            throw ParseError("line " + std::to_string(lineno) + ": bad time index '" +
                             trim(row.substr(0, comma)) + "'");
        }
        try {
            std::size_t used = 0;
            const std::string vs = trim(row.substr(comma + 1));
            v = std::stod(vs, &used);
            if (used != vs.size()) {
                throw std::invalid_argument("trailing characters");
            }
        } catch (const std::exception&) {
            throw ParseError("line " + std::to_string(lineno) + ": bad value '" +
                             trim(row.substr(comma + 1)) + "'");
        }
        if (t < 1) {
            throw ParseError("line " + std::to_string(lineno) + ": time index must be >= 1");
        }
        by_time[t].push_back(v);
    }
    if (by_time.empty()) {
        throw ParseError("no observations");
    }
    const long T = by_time.rbegin()->first;
    std::vector<std::vector<double>> rows;
    rows.reserve(static_cast<std::size_t>(T));
    for (long t = 1; t <= T; ++t) {
        const auto it = by_time.find(t);
        if (it == by_time.end()) {
            throw ParseError("missing time " + std::to_string(t));
        }
        rows.push_back(std::move(it->second));
    }
    return Dataset(std::move(rows));
}

Dataset parse_ragged_json(std::istream& in) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& err) {
        throw ParseError(std::string("json parse error: ") + err.what());
    }
    if (!doc.is_array()) {
        throw ParseError("expected a top-level array of arrays");
    }
    std::vector<std::vector<double>> rows;
    rows.reserve(doc.size());
    for (std::size_t t = 0; t < doc.size(); ++t) {
        const auto& row = doc[t];
        if (!row.is_array() || row.empty()) {
            throw ParseError("time " + std::to_string(t + 1) + ": expected a nonempty array");
        }
        std::vector<double> values;
        values.reserve(row.size());
        for (const auto& v : row) {
            if (!v.is_number()) {
                throw ParseError("time " + std::to_string(t + 1) + ": non-numeric value");
            }
            values.push_back(v.get<double>());
        }
        rows.push_back(std::move(values));
    }
    if (rows.empty()) {
        throw ParseError("no observations");
    }
    return Dataset(std::move(rows));
}

Dataset ingest(const std::filesystem::path& path, DataFormat format) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open '" + path.string() + "'");
    }
    return format == DataFormat::LongCsv ? parse_long_csv(in) : parse_ragged_json(in);
}

void emit_long_csv(const Dataset& data, std::ostream& out) {
    out << "t,value\n";
    for (int t = 1; t <= data.horizon(); ++t) {
        for (double y : data.at(t)) {
            out << t << ',' << fmt_double(y) << '\n';
        }
    }
}

void emit_ragged_json(const Dataset& data, std::ostream& out) {
    nlohmann::json doc = nlohmann::json::array();
    for (const auto& row : data.rows()) {
        doc.push_back(row);
    }
    out << doc.dump() << '\n';
}

void emit(const Dataset& data, const std::filesystem::path& path, DataFormat format) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write '" + path.string() + "'");
    }
    if (format == DataFormat::LongCsv) {
        emit_long_csv(data, out);
    } else {
        emit_ragged_json(data, out);
    }
}

}  // namespace npcd
