#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include "qst/errors.hpp"
#include "qst/io.hpp"
#include "qst/measures.hpp"
#include "test_util.hpp"

using namespace qst;
using testutil::random_density;

namespace {

std::string data_path(const char* name) { return std::string(QST_TEST_DATA_DIR) + "/" + name; }

std::string temp_file(const char* stem) {
    return (std::filesystem::temp_directory_path() / stem).string();
}

}  // namespace

TEST_CASE("tomography csv round trip") {
    auto input = read_tomography_csv(data_path("tomography_counts.csv"));
    REQUIRE(input.records.size() == 16);
    CHECK(input.records[0].label == "HH");
    CHECK(input.records[0].n_c == doctest::Approx(32.56));
    CHECK(input.records[15].setting.q_b == doctest::Approx(90.0));

    std::string path = temp_file("qst_tomo_roundtrip.csv");
    write_tomography_csv(path, input);
    auto again = read_tomography_csv(path);
    for (int i = 0; i < 16; ++i) {
        CHECK(again.records[i].n_c == input.records[i].n_c);
        CHECK(again.records[i].label == input.records[i].label);
        CHECK(again.records[i].setting.h_a == input.records[i].setting.h_a);
    }
    std::remove(path.c_str());
}

TEST_CASE("bell csv round trip") {
    auto records = read_bell_csv(data_path("bell_counts.csv"));
    REQUIRE(records.size() == 16);
    CHECK(records[0].theta_b == doctest::Approx(-22.5));
    CHECK(records[0].dn_c == doctest::Approx(1.53));

    std::string path = temp_file("qst_bell_roundtrip.csv");
    write_bell_csv(path, records);
    auto again = read_bell_csv(path);
    for (size_t i = 0; i < records.size(); ++i) {
        CHECK(again[i].n_c == records[i].n_c);
        CHECK(again[i].theta_a == records[i].theta_a);
    }
    std::remove(path.c_str());
}

TEST_CASE("parse errors carry the offending row") {
    std::string path = temp_file("qst_bad.csv");
    {
        std::ofstream out(path);
        out << "theta_a,theta_b,n_a,n_b,n_c,dn_c,t_s,tau_s\n";
        out << "0,0,1,1,banana,0,1,0\n";
    }
    try {
        read_bell_csv(path);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("row 2") != std::string::npos);
        CHECK(std::string(e.what()).find("banana") != std::string::npos);
    }
    {
        std::ofstream out(path);
        out << "theta_a,theta_b,n_a,n_b\n0,0,1,1\n";
    }
    CHECK_THROWS_AS(read_bell_csv(path), ParseError);
    std::remove(path.c_str());
}

TEST_CASE("density matrix text round trip preserves the measures") {
    std::mt19937_64 rng(91);
    Mat4 rho = random_density(rng);
    std::string path = temp_file("qst_rho_roundtrip.txt");
    write_rho_text(path, rho);
    Mat4 again = read_rho_text(path);
    CHECK((again - rho).cwiseAbs().maxCoeff() < 1e-15);
    CHECK(std::abs(concurrence(again) - concurrence(rho)) < 1e-12);
    CHECK(std::abs(von_neumann(again) - von_neumann(rho)) < 1e-12);
    CHECK(std::abs(log_negativity(again) - log_negativity(rho)) < 1e-12);
    std::remove(path.c_str());
}

TEST_CASE("published matrix file carries the expected entries") {
    Mat4 rho = read_rho_text(data_path("published_rho.txt"));
    CHECK(rho(0, 0).real() == doctest::Approx(0.487));
    CHECK(rho(0, 3) == cplx(0.285, 0.134));
    CHECK(rho(3, 0) == cplx(0.285, -0.134));
    CHECK(rho.trace().real() == doctest::Approx(1.0));
}
