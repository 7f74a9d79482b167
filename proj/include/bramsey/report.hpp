#ifndef BRAMSEY_REPORT_HPP
#define BRAMSEY_REPORT_HPP

#include <map>
#include <string>
#include <vector>

namespace bramsey {

// Aggregation of a directory of line-delimited JSON run artifacts into
// per-kind CSV tables plus a text summary. Human tables are derived views;
// the JSON artifacts stay the source of truth.
struct ReportTables {
    std::map<std::string, std::string> csv_by_kind; // kind -> CSV text
    std::string summary;                            // human-readable overview
};

// Reads every *.json / *.jsonl file in the directory. Malformed JSON is an
// error naming the offending file.
ReportTables build_report(const std::string& run_dir);

// Writes <kind>.csv files plus summary.txt into out_dir.
void write_report(const ReportTables& tables, const std::string& out_dir);

} // namespace bramsey

#endif
