#include "aslsim/report.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "aslsim/errors.hpp"

namespace aslsim {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

void Table::add_row(std::vector<std::string> row) {
    if (row.size() != columns.size())
        throw ParameterError("table '" + name + "': row width mismatch");
    rows.push_back(std::move(row));
}

std::string Table::to_csv() const {
    std::ostringstream out;
    for (size_t i = 0; i < columns.size(); ++i)
        out << columns[i] << (i + 1 < columns.size() ? "," : "");
    out << "\n";
    for (const auto& r : rows) {
        for (size_t i = 0; i < r.size(); ++i)
            out << r[i] << (i + 1 < r.size() ? "," : "");
        out << "\n";
    }
    return out.str();
}

std::string Table::to_text() const {
    std::vector<size_t> w(columns.size());
    for (size_t i = 0; i < columns.size(); ++i) w[i] = columns[i].size();
    for (const auto& r : rows)
        for (size_t i = 0; i < r.size(); ++i) w[i] = std::max(w[i], r[i].size());
    std::ostringstream out;
    out << "== " << name << " ==\n";
    auto line = [&](const std::vector<std::string>& cells) {
        for (size_t i = 0; i < cells.size(); ++i) {
            out << cells[i] << std::string(w[i] - cells[i].size(), ' ');
            out << (i + 1 < cells.size() ? "  " : "");
        }
        out << "\n";
    };
    line(columns);
    for (const auto& r : rows) line(r);
    return out.str();
}

std::string Report::machine_json() const {
    json doc;
    doc["version"] = kVersion;
    doc["experiment"] = experiment;
    doc["seed"] = seed;
    doc["config_hash"] = config_hash;
    json jtables = json::object();
    for (const auto& t : tables) {
        json jt;
        jt["columns"] = t.columns;
        jt["rows"] = t.rows;
        jtables[t.name] = jt;
    }
    doc["tables"] = jtables;
    json ja = json::object();
    for (const auto& [name, content] : artifacts) ja[name] = content;
    doc["artifacts"] = ja;
    return doc.dump(2) + "\n";
}

std::string Report::human_text() const {
    std::ostringstream out;
    out << "experiment: " << experiment << "  (seed " << seed << ", config "
        << config_hash << ", v" << kVersion << ")\n\n";
    for (const auto& t : tables) out << t.to_text() << "\n";
    return out.str();
}

std::string fnv1a_hex(const std::string& data) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[20];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

void write_report(const Report& report, const std::string& dir,
                  const std::string& format) {
    if (format != "csv" && format != "json")
        throw ConfigError("output format must be csv or json");
    fs::create_directories(dir);

    std::vector<std::pair<fs::path, std::string>> files;
    files.emplace_back(fs::path(dir) / "report.json", report.machine_json());
    if (format == "csv")
        for (const auto& t : report.tables)
            files.emplace_back(fs::path(dir) / (t.name + ".csv"), t.to_csv());
    for (const auto& [name, content] : report.artifacts)
        files.emplace_back(fs::path(dir) / name, content);

    std::vector<fs::path> temps;
    try {
        for (const auto& [path, content] : files) {
            fs::path tmp = path;
            tmp += ".tmp";
            std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
            if (!f) throw ConfigError("cannot write " + tmp.string());
            f << content;
            f.close();
            if (!f) throw ConfigError("write failed for " + tmp.string());
            temps.push_back(tmp);
        }
        for (size_t i = 0; i < files.size(); ++i)
            fs::rename(temps[i], files[i].first);
    } catch (...) {
        for (const auto& t : temps) {
            std::error_code ec;
            fs::remove(t, ec);
        }
        throw;
    }
}

}  // namespace aslsim
