#include "report.hpp"

namespace qdc::cli {

Json Report::to_json() const {
    Json j;
    j["command"] = command;
    j["inputs"] = inputs;
    j["results"] = results;
    j["provenance"] = Json{{"seed", seed}, {"budget", budget}, {"modulus", modulus}};
    j["status"] = status;
    return j;
}

std::string Report::to_json_text() const { return to_json().dump(2) + "\n"; }

namespace {

void flatten(const Json& j, const std::string& prefix, std::string& out) {
    if (j.is_object()) {
        for (const auto& [key, val] : j.items())
            flatten(val, prefix.empty() ? key : prefix + "." + key, out);
    } else if (j.is_array()) {
        size_t idx = 0;
        for (const auto& val : j) flatten(val, prefix + "[" + std::to_string(idx++) + "]", out);
    } else {
        out += prefix + "," + j.dump() + "\n";
    }
}

}  // namespace

std::string Report::to_csv_text() const {
    std::string out;
    if (results.contains("rows") && results["rows"].is_array()) {
        if (results.contains("columns")) {
            std::string header;
            for (const auto& c : results["columns"]) {
                if (!header.empty()) header += ',';
                header += c.get<std::string>();
            }
            out += header + "\n";
        }
        for (const auto& row : results["rows"]) {
            std::string line;
            for (const auto& cell : row) {
                if (!line.empty()) line += ',';
                line += cell.is_string() ? cell.get<std::string>() : cell.dump();
            }
            out += line + "\n";
        }
        return out;
    }
    out += "key,value\n";
    out += "command," + command + "\n";
    flatten(inputs, "inputs", out);
    flatten(results, "results", out);
    out += "provenance.seed," + std::to_string(seed) + "\n";
    out += "provenance.budget," + std::to_string(budget) + "\n";
    out += "provenance.modulus," + modulus + "\n";
    out += "status," + status + "\n";
    return out;
}

}  // namespace qdc::cli
