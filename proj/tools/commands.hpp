#ifndef QDC_TOOLS_COMMANDS_HPP
#define QDC_TOOLS_COMMANDS_HPP

#include <optional>
#include <string>
#include <vector>

#include "qdc/distance.hpp"
#include "report.hpp"

namespace qdc::cli {

struct Options {
    uint64_t budget = kDefaultBudget;
    uint64_t seed = kDefaultSeed;
    uint32_t samples = kDefaultSamples;
    std::string format;  // "", "json" or "csv"
    std::string modulus_file;
    std::string descriptor_file;  // alternative code input for code commands
    bool fast = false;
    std::vector<int> m_list;          // --m
    std::optional<uint64_t> max_a;    // --max-a
};

/// "1..3", "5", or "1,3,5" -> sorted list.
std::vector<int> parse_m_spec(const std::string& spec);

Report cmd_build(int i, int m, const Options& opt);
Report cmd_params(int i, int m, const Options& opt);
Report cmd_dual(int i, int m, const Options& opt);
Report cmd_extend(int i, int m, const Options& opt);
Report cmd_trace(int i, int m, const Options& opt);
Report cmd_subfield(int i, int m, const Options& opt);
Report cmd_gray(int i, int m, const Options& opt);
Report cmd_verify(const std::string& target, const Options& opt);
Report cmd_table(const std::vector<int>& ms, const Options& opt);

/// The verify targets accepted by cmd_verify, in their canonical order.
const std::vector<std::string>& verify_targets();

}  // namespace qdc::cli

#endif
