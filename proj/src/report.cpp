#include "hopftube/report.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "hopftube/errors.hpp"
#include "json.hpp"

namespace hopftube {

std::string format_value(double x) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.12e", x);
    return std::string(buf);
}

bool Report::overall_pass() const {
    for (const auto& c : checks) {
        if (c.applicable && !c.passed) return false;
    }
    return true;
}

std::string format_report_text(const Report& rep) {
    std::ostringstream out;
    out << "hopftube report\n";
    out << "scenario: " << rep.scenario_name << "\n";
    out << "version: " << rep.version << "\n";
    out << "seed: " << rep.seed << "\n";
    out << "runtime: " << rep.runtime << "\n";
    out << "--\n";
    for (const auto& kv : rep.scenario_echo) {
        out << kv.first << " = " << kv.second << "\n";
    }
    out << "--\n";
    for (const auto& c : rep.checks) {
        out << "check " << c.name << ": ";
        if (!c.applicable) {
            out << "INAPPLICABLE";
        } else {
            out << (c.passed ? "PASS" : "FAIL");
        }
        out << "\n";
        for (const auto& m : c.metrics) {
            out << "  " << m.first << " = " << format_value(m.second) << "\n";
        }
        for (const auto& n : c.notes) {
            out << "  # " << n << "\n";
        }
    }
    for (const auto& t : rep.tables) {
        out << "table " << t.name << ": " << t.rows.size() << " rows (see CSV)\n";
    }
    out << "--\n";
    out << "overall: " << (rep.overall_pass() ? "PASS" : "FAIL") << "\n";
    return out.str();
}

std::string format_report_json(const Report& rep) {
    nlohmann::ordered_json j;
    j["tool"] = "hopftube";
    j["version"] = rep.version;
    j["scenario"] = rep.scenario_name;
    j["seed"] = rep.seed;
    j["runtime"] = rep.runtime;
    nlohmann::ordered_json echo = nlohmann::ordered_json::object();
    for (const auto& kv : rep.scenario_echo) echo[kv.first] = kv.second;
    j["config"] = echo;
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& c : rep.checks) {
        nlohmann::ordered_json jc;
        jc["name"] = c.name;
        jc["applicable"] = c.applicable;
        jc["passed"] = c.passed;
        nlohmann::ordered_json metrics = nlohmann::ordered_json::object();
        for (const auto& m : c.metrics) metrics[m.first] = format_value(m.second);
        jc["metrics"] = metrics;
        jc["notes"] = c.notes;
        checks.push_back(jc);
    }
    j["checks"] = checks;
    nlohmann::ordered_json tables = nlohmann::ordered_json::object();
    for (const auto& t : rep.tables) {
        nlohmann::ordered_json jt;
        jt["columns"] = t.columns;
        jt["rows"] = t.rows;
        tables[t.name] = jt;
    }
    j["tables"] = tables;
    j["overall"] = rep.overall_pass() ? "pass" : "fail";
    return j.dump(2) + "\n";
}

std::string format_table_csv(const ReportTable& table) {
    std::ostringstream out;
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        if (i) out << ",";
        out << table.columns[i];
    }
    out << "\n";
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out << ",";
            out << row[i];
        }
        out << "\n";
    }
    return out.str();
}

namespace {

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open output file: " + path);
    out << content;
    if (!out) throw Error("failed writing output file: " + path);
}

}  // namespace

std::vector<std::string> write_report_files(const Report& rep, const std::string& out_dir) {
    std::filesystem::create_directories(out_dir);
    std::vector<std::string> written;
    const std::string base = out_dir + "/" + rep.scenario_name;
    const std::string txt_path = base + ".report.txt";
    write_text_file(txt_path, format_report_text(rep));
    written.push_back(txt_path);
    const std::string json_path = base + ".report.json";
    write_text_file(json_path, format_report_json(rep));
    written.push_back(json_path);
    for (const auto& t : rep.tables) {
        const std::string csv_path = base + "." + t.name + ".csv";
        write_text_file(csv_path, format_table_csv(t));
        written.push_back(csv_path);
    }
    return written;
}

}  // namespace hopftube
