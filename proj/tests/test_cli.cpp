#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>

#include "commands.hpp"
#include "qdc/descriptor.hpp"

using namespace qdc;
using namespace qdc::cli;

namespace {

int run_binary(const std::string& args) {
    const int rc = std::system((std::string(QDC_CLI_BINARY) + " " + args + " > /dev/null 2>&1").c_str());
    return WEXITSTATUS(rc);
}

}  // namespace

TEST_CASE("descriptor round trip") {
    auto ctx = FieldContext::build(2);
    const CyclicCode C = build_code(1, 2, ctx);
    const std::string text = descriptor_to_json(C, 1);
    const ParsedDescriptor d = parse_descriptor(text);
    CHECK(d.q == 4);
    CHECK(d.m == 2);
    CHECK(d.n == 15);
    CHECK(d.i == 1);
    CHECK(d.k == 7);
    CHECK(d.T == C.T);
    const CyclicCode back = code_from_descriptor(d, ctx);
    CHECK(back.same_code(C));
    CHECK(back.g == C.g);

    // run-length coding inverts
    CHECK(run_length_decode(run_length_encode(C.T.members)) == C.T.members);
    CHECK(run_length_encode({1, 3, 4}) ==
          std::vector<std::pair<uint32_t, uint32_t>>{{1, 1}, {3, 2}});

    // tampered descriptors are rejected as usage errors
    ParsedDescriptor bad = d;
    bad.k = 8;
    CHECK_THROWS_AS(code_from_descriptor(bad, ctx), Error);
    CHECK_THROWS_AS(parse_descriptor("{"), Error);
    CHECK_THROWS_AS(parse_descriptor("{\"q\":4}"), Error);
}

TEST_CASE("m-spec parsing") {
    CHECK(parse_m_spec("2") == std::vector<int>{2});
    CHECK(parse_m_spec("1..3") == std::vector<int>{1, 2, 3});
    CHECK(parse_m_spec("5,1,3") == std::vector<int>{1, 3, 5});
    CHECK_THROWS_AS(parse_m_spec("3..1"), Error);
    CHECK_THROWS_AS(parse_m_spec("x"), Error);
}

TEST_CASE("reports are deterministic and carry provenance") {
    Options opt;
    const Report a = cmd_params(1, 2, opt);
    const Report b = cmd_params(1, 2, opt);
    CHECK(a.to_json_text() == b.to_json_text());
    CHECK(a.modulus == "2:19");
    CHECK(a.seed == kDefaultSeed);
    CHECK(a.budget == kDefaultBudget);
    CHECK(a.status == "pass");
    CHECK(a.results["d"]["exact"] == 5);

    // bounded reports are labeled, marked partial, and byte-stable too
    Options small;
    small.samples = 20;
    const Report c = cmd_params(0, 5, small);
    CHECK(c.status == "partial");
    CHECK(c.results["d"]["method"] == "bound");
    CHECK(c.results["d"]["lower"].get<uint32_t>() >= 17);
    CHECK(c.to_json_text() == cmd_params(0, 5, small).to_json_text());

    // csv flattening of an object report stays stable
    CHECK(cmd_params(1, 2, opt).to_csv_text() == cmd_params(1, 2, opt).to_csv_text());
}

TEST_CASE("verify reports") {
    Options opt;
    opt.fast = true;

    const Report duadic = cmd_verify("duadic", opt);
    CHECK(duadic.status == "pass");
    CHECK(duadic.results["failures"].empty());

    Options lcd_opt;
    lcd_opt.m_list = {2, 3, 4};
    CHECK(cmd_verify("lcd", lcd_opt).status == "pass");  // odd m expected non-LCD

    const Report partial = cmd_verify("thm522_partial", opt);
    CHECK(partial.status == "fail");
    REQUIRE(partial.results["failures"].size() == 1);
    CHECK(partial.results["failures"][0]["contained_T21"] == true);
    CHECK(partial.results["failures"][0]["contained_T40"] == false);

    CHECK_THROWS_AS(cmd_verify("nonsense", opt), Error);

    const Report all = cmd_verify("all", opt);
    CHECK(all.status == "pass");
    CHECK(all.results["checks"].size() > 40);
}

TEST_CASE("table rows") {
    Options opt;
    const Report t = cmd_table({1, 2}, opt);
    const auto& rows = t.results["rows"];
    REQUIRE(rows.size() == 4);
    // i, m, n, k, claimed, certified, exact
    CHECK(rows[0][3] == 2);
    CHECK(rows[1][3] == 2);
    CHECK(rows[2][3] == 9);
    CHECK(rows[3][3] == 7);
    CHECK(rows[2][6] == "3");
    CHECK(rows[3][6] == "5");
    const std::string csv = t.to_csv_text();
    CHECK(csv.find("i,m,n,k,claimed_lower,certified_lower,exact_d") == 0);
    CHECK(csv.find("1,2,15,7,,5,5") != std::string::npos);

    CHECK_THROWS_AS(cmd_table({13}, opt), UnsupportedSize);
}

TEST_CASE("modulus file override") {
    const std::string path = "/tmp/qdc_test_moduli.txt";
    {
        std::ofstream out(path);
        out << "# alternates\n2:25\n";
    }
    Options opt;
    opt.modulus_file = path;
    const Report r = cmd_params(1, 2, opt);
    CHECK(r.modulus == "2:25");
    CHECK(r.results["k"] == 7);
    CHECK(r.results["d"]["exact"] == 5);  // parameters survive the basis change

    // a non-primitive override is a usage error
    {
        std::ofstream out(path);
        out << "2:31\n";
    }
    CHECK_THROWS_AS(cmd_params(1, 2, opt), NonPrimitiveModulus);
    std::remove(path.c_str());
}

TEST_CASE("binary exit codes") {
    CHECK(run_binary("params 1 2") == 0);
    CHECK(run_binary("verify duadic --m 1,3,5") == 0);
    CHECK(run_binary("verify lcd --m 2,4") == 0);
    CHECK(run_binary("verify lemma521 --max-a 20000") == 0);
    CHECK(run_binary("verify thm522_partial") == 1);  // failed verification
    CHECK(run_binary("params 2 2") == 2);             // invalid parity
    CHECK(run_binary("params 1 99") == 2);            // m out of range
    CHECK(run_binary("params") == 2);                 // missing input
    CHECK(run_binary("frobnicate") == 2);             // unknown subcommand
    CHECK(run_binary("--help") == 0);
    CHECK(run_binary("table 1..2 --format csv") == 0);
}

TEST_CASE("bounds-only table rows certify at least the claimed bound") {
    Options opt;
    opt.samples = 20;
    const Report t = cmd_table({5}, opt);
    const auto& rows = t.results["rows"];
    REQUIRE(rows.size() == 2);
    for (const auto& row : rows) {
        CHECK(row[4] == "17");  // claimed
        CHECK(std::stoul(row[5].get<std::string>()) >= 17);
        CHECK(row[6] == "");  // no exact distance at [1023, 512]
    }
}

TEST_CASE("descriptor file input through the command layer") {
    auto ctx = FieldContext::build(2);
    const CyclicCode C = build_code(1, 2, ctx);
    const std::string path = "/tmp/qdc_test_descriptor.json";
    {
        std::ofstream out(path);
        out << descriptor_to_json(C, 1);
    }
    Options opt;
    opt.descriptor_file = path;
    const Report r = cmd_dual(-1, -1, opt);
    CHECK(r.results["k"] == 8);
    CHECK(r.results["d"]["exact"] == 4);
    std::remove(path.c_str());
}
