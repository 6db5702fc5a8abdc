#include <string>

#include <catch2/catch_amalgamated.hpp>
#include <json.hpp>

#include "subprocess.hpp"

using testutil::run_cli;

TEST_CASE("enumerate lists the class in order") {
    const auto r = run_cli("enumerate 3 2");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "112\n121\n122\n");

    const auto single = run_cli("enumerate 1 1");
    CHECK(single.exit_code == 0);
    CHECK(single.output == "1\n");
}

TEST_CASE("enumerate rejects an invalid class") {
    const auto r = run_cli("enumerate 2 3 2>/dev/null");
    CHECK(r.exit_code == 2);
    CHECK(r.output.empty());
}

TEST_CASE("enumerate with statistics columns") {
    const auto r = run_cli("enumerate 4 2 --stats");
    CHECK(r.exit_code == 0);
    const std::string expected =
        "1112\t0\t0\t0\t1\t0\t2\n"
        "1121\t1\t1\t0\t1\t1\t2\n"
        "1122\t0\t0\t0\t1\t0\t2\n"
        "1211\t1\t1\t0\t1\t1\t2\n"
        "1212\t1\t1\t0\t2\t1\t2\n"
        "1221\t0\t0\t0\t1\t1\t2\n"
        "1222\t0\t0\t0\t1\t0\t2\n";
    CHECK(r.output == expected);
}

TEST_CASE("enumerate --aggregate emits the JSON record") {
    const auto r = run_cli("enumerate 4 3 --aggregate");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.output);
    CHECK(j["n"] == 4);
    CHECK(j["k"] == 3);
    CHECK(j["count"] == "6");
    CHECK(j["total_sym"] == "2");
    CHECK(j["total_nonsym"] == "1");
    CHECK(j["qdist_sym"] == nlohmann::json::array({"4", "2"}));
    CHECK(j["qdist_nonsym"] == nlohmann::json::array({"5", "1"}));
}

TEST_CASE("prefix splitting leaves the stream unchanged") {
    const auto base = run_cli("enumerate 7 3");
    const auto split = run_cli("enumerate 7 3 --prefix-split 3");
    CHECK(base.exit_code == 0);
    CHECK(split.exit_code == 0);
    CHECK(base.output == split.output);
}

TEST_CASE("total agrees across the three routes") {
    for (const std::string method : {"closed", "brute", "series"}) {
        const auto r = run_cli("total --stat sym --n 4 --k 2 --method " + method);
        CHECK(r.exit_code == 0);
        CHECK(r.output == "3\n");
    }
    CHECK(run_cli("total --stat sym --n 3 --k 2 --method series").output == "1\n");
    CHECK(run_cli("total --stat nonsym --n 6 --k 2 --method closed").output == "0\n");
    CHECK(run_cli("total --stat peaks --n 4 --k 3 --method brute").output == "3\n");
    CHECK(run_cli("total --stat nonsym --n 5 --k 3 --method brute").output == "6\n");
}

TEST_CASE("total usage errors") {
    CHECK(run_cli("total --stat bogus --n 3 --k 2 2>/dev/null").exit_code != 0);
    CHECK(run_cli("total --stat sym --n 2 --k 3 2>/dev/null").exit_code == 2);
    CHECK(run_cli("bogus-subcommand 2>/dev/null").exit_code != 0);
}

TEST_CASE("table triangles") {
    const auto sym = run_cli("table --stat sym --nmax 4");
    CHECK(sym.exit_code == 0);
    CHECK(sym.output == "0\n0\t0\n0\t1\t0\n0\t3\t2\t0\n");

    const auto nonsym = run_cli("table --stat nonsym --nmax 3");
    CHECK(nonsym.output == "0\n0\t0\n0\t0\t0\n");

    // peaks is the entrywise sum of the other two triangles
    const auto peaks = run_cli("table --stat peaks --nmax 4");
    CHECK(peaks.output == "0\n0\t0\n0\t1\t0\n0\t3\t3\t0\n");

    const auto as_json = run_cli("table --stat sym --nmax 4 --format json");
    const auto j = nlohmann::json::parse(as_json.output);
    CHECK(j["nmax"] == 4);
    CHECK(j["rows"][3] == nlohmann::json::array({"0", "3", "2", "0"}));
}

TEST_CASE("series rows") {
    const auto r = run_cli("series --gf sp --k 2 --order 4");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "0\t0\n1\t0\n2\t1\n3\t2 1\n4\t4 3\n");

    const auto d = run_cli("series --gf nsp --k 3 --order 4 --derivative");
    CHECK(d.output == "0\t0\n1\t0\n2\t0\n3\t0\n4\t1\n");

    const auto j = nlohmann::json::parse(
        run_cli("series --gf sp --k 2 --order 4 --format json").output);
    CHECK(j["coefficients"][3] == nlohmann::json::array({"2", "1"}));
    CHECK(j["coefficients"][4] == nlohmann::json::array({"4", "3"}));

    CHECK(run_cli("series --gf sp --k 5 --order 3 2>/dev/null").exit_code == 2);
}

TEST_CASE("stirling triangle") {
    const auto r = run_cli("stirling --nmax 4");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "1\n0\t1\n0\t1\t1\n0\t1\t3\t1\n0\t1\t7\t6\t1\n");
}

TEST_CASE("enumerate uses the comma form for wide alphabets") {
    const auto r = run_cli("enumerate 10 10");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "1,2,3,4,5,6,7,8,9,10\n");
}

TEST_CASE("verify reports success on a small sweep") {
    const auto r = run_cli("verify --nmax 6 2>/dev/null");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("verify: OK") != std::string::npos);
    CHECK(r.output.find("MISMATCH") == std::string::npos);
    CHECK(r.output.find("elapsed") == std::string::npos);  // timing goes to stderr
}

TEST_CASE("repeated invocations are byte-identical") {
    const auto a = run_cli("table --stat peaks --nmax 7");
    const auto b = run_cli("table --stat peaks --nmax 7");
    CHECK(a.output == b.output);

    const auto s1 = run_cli("series --gf nsp --k 3 --order 9");
    const auto s2 = run_cli("series --gf nsp --k 3 --order 9");
    CHECK(s1.output == s2.output);
}
