#include "pmad/errors.hpp"
#include "pmad/io.hpp"

#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace pmad;

namespace {

DataSet parse(const std::string& text) {
    std::istringstream in(text);
    return io::parse_dataset(in);
}

std::size_t error_line(const std::string& text) {
    try {
        parse(text);
    } catch (const ParseError& e) {
        return e.line();
    }
    return 0;
}

}  // namespace

TEST_CASE("parsing data files", "[io]") {
    const DataSet d = parse("1.0 2.5\n3\n");
    REQUIRE(d.size() == 3);
    CHECK(d.values()[0] == 1.0);
    CHECK(d.values()[1] == 2.5);
    CHECK(d.values()[2] == 3.0);

    const DataSet c = parse("# header\n\n0.5, 0.25,0.125\n  # indented comment\n4e-1\r\n");
    CHECK(c.size() == 4);
    CHECK(c.values()[3] == 0.4);
    CHECK(parse("").empty());
}

TEST_CASE("parse errors carry the line number", "[io]") {
    CHECK(error_line("1\n2\n-1\n") == 3);
    CHECK(error_line("1\n0\n") == 2);
    CHECK(error_line("1 abc\n") == 1);
    CHECK(error_line("# c\n\n1.5x\n") == 3);
    CHECK(error_line("inf\n") == 1);
    try {
        parse("2\n-1\n");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("-1") != std::string::npos);
    }
}

TEST_CASE("ingest reads files and reports missing ones", "[io]") {
    const auto dir = std::filesystem::temp_directory_path() / "pmad_io_test";
    std::filesystem::create_directories(dir);
    const auto path = dir / "sample.txt";
    io::write_file(path, "0.5 1.5\n2.5\n");
    const DataSet d = io::ingest(path);
    CHECK(d.size() == 3);
    CHECK(d.label() == "sample.txt");
    CHECK_THROWS_AS(io::ingest(dir / "missing.txt"), IoError);
    std::filesystem::remove_all(dir);
}

TEST_CASE("number formatting", "[io]") {
    CHECK(io::format_number(736.76395) == "736.76395");
    CHECK(io::format_number(0.12345678901234) == "0.123456789");
    CHECK(io::format_number(std::nan("")) == "NaN");
}

TEST_CASE("report JSON round-trips information criteria exactly", "[io]") {
    Sampler s(Params(0.75, 0.75), 1);
    const DataSet d(s.sample(80));
    nlohmann::json report;
    report["models"] = nlohmann::json::array();
    for (const auto& r : gof_reports(d, default_models())) report["models"].push_back(io::to_json(r));
    const auto reread = nlohmann::json::parse(report.dump());
    CHECK(io::information_criteria_consistent(reread));
    auto tampered = reread;
    tampered["models"][0]["aic"] = tampered["models"][0]["aic"].get<double>() + 1e-9;
    CHECK_FALSE(io::information_criteria_consistent(tampered));
}

TEST_CASE("CSV tables", "[io]") {
    const DataSet d({0.5, 1.0, 2.0});
    const std::string ecdf = io::ecdf_csv(d, Params(1, 1));
    CHECK(ecdf.rfind("x,empirical_F,fitted_F\n", 0) == 0);
    CHECK(ecdf.find("2,1,") != std::string::npos);
    const std::string qq = io::qq_csv(d, Params(1, 1));
    CHECK(std::count(qq.begin(), qq.end(), '\n') == 4);

    SimConfig c;
    c.n = 10;
    c.replications = 100;
    const SimReport r = run_study(c);
    const std::string t2 = io::table2_csv({r});
    CHECK(std::count(t2.begin(), t2.end(), '\n') == 3);
    CHECK(t2.find("alpha_ml,beta_ml,MTTF_ml,R(t)_ml,H(t)_ml,alpha_bl,beta_bl") != std::string::npos);
    const std::string t3 = io::table3_csv({r});
    CHECK(t3.find("ACL_alpha") != std::string::npos);
    const auto j = io::to_json(r);
    CHECK(j["config"]["n"] == 10);
    CHECK(j.contains("alpha_bl"));
}

TEST_CASE("properties JSON", "[io]") {
    const auto j = io::properties_json(Params(1, 1));
    CHECK(j["mode"].get<double>() == 1.0);
    CHECK(j["entropies"].size() == 9);
    CHECK(j["shannon_entropy"].is_number());
}
