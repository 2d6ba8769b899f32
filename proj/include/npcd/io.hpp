#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "npcd/dataset.hpp"

namespace npcd {

// long-csv: header "t,value", one observation per row, integer t >= 1 with
// repeats for multiple observations. ragged-json: an array of arrays.
enum class DataFormat { LongCsv, RaggedJson };

DataFormat format_from_string(const std::string& s);

// by extension: .csv -> long-csv, .json -> ragged-json
DataFormat infer_format(const std::filesystem::path& path);

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Times must cover 1..T without gaps; within-t order follows the input.
Dataset parse_long_csv(std::istream& in);
Dataset parse_ragged_json(std::istream& in);

Dataset ingest(const std::filesystem::path& path, DataFormat format);

void emit_long_csv(const Dataset& data, std::ostream& out);
void emit_ragged_json(const Dataset& data, std::ostream& out);

void emit(const Dataset& data, const std::filesystem::path& path, DataFormat format);

}  // namespace npcd
