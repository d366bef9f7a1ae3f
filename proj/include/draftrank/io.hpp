/**
 * draftrank: accuracy metrics and consensus aggregation for mock drafts.
 *
 * Flat-file ingestion and export for mock-draft datasets.
 *
 * Mock-draft file: CSV with header
 *   season,author,forecast_type,publish_date,rank,player,tier
 * Actual-draft file: CSV with header
 *   season,draft_date,rank,player
 * Alias file (optional): CSV with header
 *   variant,canonical
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 */
#pragma once

#include <iosfwd>
#include <string>
#include <unordered_map>

#include "draftrank/core.hpp"

namespace draftrank {

struct LoadOptions {
  /// Optional alias file mapping name variants to canonical spellings.
  std::string alias_path{};
  /// Actual drafts longer than this are rejected. Raise for seasons with
  /// extra picks; penalized-pick seasons are simply shorter.
  int max_actual_length = 60;
  /// Records outside the window of this many days ending on the draft date
  /// are flagged in DraftDataset::warnings(), not dropped.
  int collection_window_days = 365;
};

/// Keys are normalized variants, values are canonical display spellings.
using AliasMap = std::unordered_map<std::string, std::string>;

AliasMap load_aliases(const std::string& path);

/// Load and validate a dataset from the two flat files. Rows that fail to
/// parse are rejected with row-numbered diagnostics (ParseError,
/// DuplicateRankError).
DraftDataset load_dataset(const std::string& mocks_path,
                          const std::string& actuals_path,
                          const LoadOptions& options = {});

/// Write a dataset back to the flat-file formats. load_dataset on the
/// written pair yields an equal dataset.
void write_dataset(const DraftDataset& dataset, const std::string& mocks_path,
                   const std::string& actuals_path);

void write_mocks_csv(std::ostream& out, const DraftDataset& dataset);
void write_actuals_csv(std::ostream& out, const DraftDataset& dataset);

/// Quote a CSV field if it contains a delimiter, quote, or newline.
std::string csv_escape(const std::string& field);

}  // namespace draftrank
