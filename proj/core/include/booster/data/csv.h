/*!
 * Copyright 2026 by Contributors
 * \file csv.h
 * \brief CSV ingestion. Header row required; empty cells and "NA" are missing.
 */
#ifndef BOOSTER_DATA_CSV_H_
#define BOOSTER_DATA_CSV_H_

#include <filesystem>
#include <iosfwd>
#include <set>
#include <string>

#include "booster/data/raw_table.h"

namespace booster::data {

struct CsvOptions {
  std::string label_column{"label"};
  /*! \brief Columns to read as categorical. Integer cells are used as codes
   *  directly; any other text is dictionary-encoded in order of appearance. */
  std::set<std::string> categorical;
};

RawTable read_csv(std::istream& in, const CsvOptions& options);
RawTable read_csv(const std::filesystem::path& path, const CsvOptions& options);

/*! \brief Writes the table with its label as the last column. */
void write_csv(const RawTable& table, std::ostream& out, const std::string& label_column = "label");
void write_csv(const RawTable& table, const std::filesystem::path& path,
               const std::string& label_column = "label");

}  // namespace booster::data

#endif  // BOOSTER_DATA_CSV_H_
