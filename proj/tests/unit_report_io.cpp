#include <doctest.h>

#include <string>

#include "heckeq/character_table.hpp"
#include "heckeq/cyclotomic.hpp"
#include "heckeq/errors.hpp"
#include "heckeq/hecke.hpp"
#include "heckeq/report_io.hpp"

using namespace heckeq;

TEST_CASE("format names") {
    CHECK(parse_format("json") == OutputFormat::Json);
    CHECK(parse_format("csv") == OutputFormat::Csv);
    CHECK(parse_format("text") == OutputFormat::Text);
    CHECK_THROWS_AS((void)parse_format("yaml"), InvalidElement);
    CHECK_THROWS_AS((void)parse_format("JSON"), InvalidElement);
}

TEST_CASE("human rendering of cyclotomic numbers") {
    CHECK(cyclo_to_string(CycloNumber()) == "0");
    CHECK(cyclo_to_string(CycloNumber(-3L)) == "-3");
    CHECK(cyclo_to_string(CycloNumber(mpq_class(-3, 2))) == "-3/2");
    CHECK(cyclo_to_string(gauss_sum(7)) == "z7+z7^2+z7^4");
    CHECK(cyclo_to_string(gauss_sum_conjugate(7)) == "-1-z7-z7^2-z7^4");
    CHECK(cyclo_to_string(CycloNumber::zeta_power(12, 1) *
                          CycloNumber(2L)) == "2*z12");
}

TEST_CASE("envelope layout") {
    nlohmann::ordered_json payload{{"q", 7}};
    nlohmann::ordered_json j = envelope("cusps", "cusps", payload, 1.5);
    CHECK(j["command"] == "cusps");
    CHECK(j["meta"]["tool"] == "heckeq");
    CHECK(j["meta"]["elapsed_ms"] == 1.5);
    CHECK(j["cusps"]["q"] == 7);
    // Key order is fixed: command, meta, payload.
    auto it = j.begin();
    CHECK(it.key() == "command");
    ++it;
    CHECK(it.key() == "meta");
    ++it;
    CHECK(it.key() == "cusps");
}

TEST_CASE("report serialization counts failures") {
    HeckeReport ok = verify_hecke_identity(7);
    HeckeReport broken;
    broken.q = 99;
    broken.error = "synthetic failure, with a comma";
    std::vector<HeckeReport> reports{ok, broken};

    nlohmann::ordered_json j = reports_json(reports);
    CHECK(j["summary"]["primes"] == 2);
    CHECK(j["summary"]["failures"] == 1);
    CHECK(j["reports"][0]["q"] == 7);
    CHECK(j["reports"][0]["kappa_sum"] == "1/1");
    CHECK(j["reports"][0]["verdict"] == true);

    std::string csv = reports_csv(reports);
    CHECK(csv.find("q,mu,g,kappa_sum,") == 0);
    CHECK(csv.find("\"synthetic failure, with a comma\"") !=
          std::string::npos);

    std::string text = reports_text(reports, 0.25);
    CHECK(text.find("2 primes verified, 1 failures") != std::string::npos);
    CHECK(text.rfind("elapsed_ms: 0.25\n") == text.size() - 17);
}

TEST_CASE("table csv quotes labels containing commas") {
    CharacterTable t = CharacterTable::build(7);
    std::string csv = table_csv(t);
    CHECK(csv.find("\"Split{2,4}\"") != std::string::npos);
    CHECK(csv.find("7:0 1 1 0 1 0") == std::string::npos); // rationals
    CHECK(csv.find("7:0/1 1/1 1/1 0/1 1/1 0/1") != std::string::npos);
}
