#include "bramsey/report.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "bramsey/graph.hpp"

namespace fs = std::filesystem;

namespace bramsey {

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

std::string scalar_to_string(const nlohmann::json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

} // namespace

ReportTables build_report(const std::string& run_dir) {
    if (!fs::exists(run_dir) || !fs::is_directory(run_dir))
        throw Error("run directory '" + run_dir + "' does not exist");

    std::map<std::string, std::vector<nlohmann::json>> by_kind;
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(run_dir)) {
        if (!entry.is_regular_file()) continue;
        auto ext = entry.path().extension().string();
        if (ext == ".json" || ext == ".jsonl") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());

    for (const auto& path : files) {
        std::ifstream in(path);
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            nlohmann::json obj;
            try {
                obj = nlohmann::json::parse(line);
            } catch (const std::exception& e) {
                throw Error("malformed JSON in " + path.filename().string() + ":" +
                            std::to_string(lineno) + ": " + e.what());
            }
            std::string kind = obj.is_object() && obj.contains("kind")
                                   ? obj["kind"].get<std::string>()
                                   : "unknown";
            by_kind[kind].push_back(std::move(obj));
        }
    }

    ReportTables tables;
    std::ostringstream summary;
    summary << "run report for " << run_dir << "\n";
    for (auto& [kind, rows] : by_kind) {
        // union of top-level keys, scalars become columns
        std::set<std::string> keys;
        for (const auto& row : rows)
            for (auto it = row.begin(); it != row.end(); ++it)
                if (it.key() != "kind") keys.insert(it.key());
        std::ostringstream csv;
        bool first = true;
        for (const auto& k : keys) {
            if (!first) csv << ",";
            csv << csv_escape(k);
            first = false;
        }
        csv << "\n";
        for (const auto& row : rows) {
            first = true;
            for (const auto& k : keys) {
                if (!first) csv << ",";
                first = false;
                if (row.contains(k)) csv << csv_escape(scalar_to_string(row.at(k)));
            }
            csv << "\n";
        }
        tables.csv_by_kind[kind] = csv.str();
        summary << "  " << kind << ": " << rows.size() << " row(s)\n";
    }
    if (by_kind.empty()) summary << "  (no artifacts)\n";
    tables.summary = summary.str();
    return tables;
}

void write_report(const ReportTables& tables, const std::string& out_dir) {
    fs::create_directories(out_dir);
    for (const auto& [kind, csv] : tables.csv_by_kind) {
        std::ofstream f(fs::path(out_dir) / (kind + ".csv"), std::ios::binary);
        if (!f) throw Error("cannot write report table for kind '" + kind + "'");
        f << csv;
    }
    std::ofstream f(fs::path(out_dir) / "summary.txt", std::ios::binary);
    if (!f) throw Error("cannot write report summary");
    f << tables.summary;
}

} // namespace bramsey
