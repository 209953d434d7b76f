#ifndef QDC_TOOLS_REPORT_HPP
#define QDC_TOOLS_REPORT_HPP

#include <cstdint>
#include <string>

#include <json.hpp>

namespace qdc::cli {

using Json = nlohmann::ordered_json;

/// Machine-readable command outcome.  Serialization is deterministic: fixed
/// key order, no floats, no timestamps; reruns with the same flags and seed
/// produce identical bytes.
struct Report {
    std::string command;
    Json inputs = Json::object();
    Json results = Json::object();
    uint64_t seed{0};
    uint64_t budget{0};
    std::string modulus;        // "m:bitmask" or the config source name
    std::string status{"pass"};  // pass | fail | partial

    Json to_json() const;
    std::string to_json_text() const;
    /// Flat "key,value" lines; a results["rows"] array of arrays (as produced
    /// by the table command) is emitted as proper CSV rows instead.
    std::string to_csv_text() const;
};

}  // namespace qdc::cli

#endif
