#include <doctest.h>

#include "nsplab/config.hpp"
#include "nsplab/io.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <stdexcept>
#include <string>

using namespace nsplab;

TEST_CASE("empty text gives the documented defaults") {
    const auto cfg = config::parse_text("");
    CHECK(cfg.v_minus == 1.0);
    CHECK(cfg.v_plus == 1.2);
    CHECK(cfg.u_plus == 0.011697);
    CHECK(cfg.L_dom == 150.0);
    CHECK(cfg.dxi == 0.05);
    CHECK(cfg.t_final == 10.0);
    CHECK(cfg.c0 == 1.0);
    CHECK(cfg.seed == 12345u);
    CHECK(cfg.snapshots.empty());
    CHECK(cfg.output_dir == ".");
    CHECK(cfg.verify_profile == "quick");
    CHECK_NOTHROW(config::validate(cfg));
}

TEST_CASE("parsing: comments, whitespace, lists") {
    const auto cfg = config::parse_text(
        "# run setup\n"
        "  v_plus = 1.15   # amplitude\n"
        "\n"
        "snapshots = 0.5, 1.0,2.5\n"
        "output_dir = /tmp/runs\n"
        "seed = 99\n");
    CHECK(cfg.v_plus == 1.15);
    REQUIRE(cfg.snapshots.size() == 3);
    CHECK(cfg.snapshots[1] == 1.0);
    CHECK(cfg.snapshots[2] == 2.5);
    CHECK(cfg.output_dir == "/tmp/runs");
    CHECK(cfg.seed == 99u);
}

TEST_CASE("errors name the offending key or line") {
    CHECK_THROWS_AS((void)config::parse_text("no_such_key = 1\n"),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)config::parse_text("dxi = banana\n"),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)config::parse_text("just a line\n"),
                    std::invalid_argument);
    try {
        (void)config::parse_text("no_such_key = 1\n");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("no_such_key") != std::string::npos);
    }
}

TEST_CASE("overrides win over file values") {
    auto cfg = config::parse_text("v_plus = 1.15\nt_final = 3\n");
    config::apply_overrides(cfg, {{"t_final", "7"}, {"A_v", "0.02"}});
    CHECK(cfg.v_plus == 1.15);
    CHECK(cfg.t_final == 7.0);
    CHECK(cfg.A_v == 0.02);
    CHECK_THROWS_AS(config::apply_overrides(cfg, {{"bogus", "1"}}),
                    std::invalid_argument);
}

TEST_CASE("validation rejects inadmissible setups") {
    auto bad = [](const std::string& text) {
        const auto cfg = config::parse_text(text);
        CHECK_THROWS_AS(config::validate(cfg), std::invalid_argument);
    };
    bad("v_plus = 0.9\nu_plus = 0\n"); // compression on the wrong side
    bad("v_minus = -1\n");
    bad("dxi = 0\n");
    bad("report_interval = 0\n");
    bad("u_plus = 5\n"); // above the rarefaction bound
    bad("c0 = -2\n");
}

TEST_CASE("echo round-trips through the parser") {
    auto cfg = config::parse_text("");
    cfg.v_plus = 1.17;
    cfg.snapshots = {0.25, 1.75};
    cfg.seed = 4242;
    cfg.output_dir = "out";
    const auto echoed = config::echo(cfg);
    const auto back = config::parse_text(echoed);
    CHECK(back.v_plus == cfg.v_plus);
    CHECK(back.snapshots == cfg.snapshots);
    CHECK(back.seed == cfg.seed);
    CHECK(back.output_dir == cfg.output_dir);
    CHECK(back.dxi == cfg.dxi);
    CHECK(config::echo(back) == echoed);
}

TEST_CASE("17-significant-digit formatting round-trips doubles") {
    for (double x : {0.1, 1.0 / 3.0, 1.2309149097933273, -2.5e-17, 0.0}) {
        const auto s = io::format_g17(x);
        CHECK(std::stod(s) == x);
    }
    CHECK(io::csv_row({1.0, 0.5}) == io::format_g17(1.0) + "," + io::format_g17(0.5));
}

TEST_CASE("atomic write leaves a complete file and no temporary") {
    const std::string path = "/tmp/nsplab_test_atomic.txt";
    io::atomic_write(path, "first\n");
    io::atomic_write(path, "second\n"); // overwrite must also be atomic
    std::ifstream in(path);
    std::string content((std::istreambuf_iterator<char>(in)),
                        std::istreambuf_iterator<char>());
    CHECK(content == "second\n");
    std::remove(path.c_str());
    // writing into a nonexistent directory must fail without creating the file
    CHECK_THROWS((void)0, io::atomic_write("/tmp/no_such_dir_nsplab/x.txt", "a"));
}

TEST_CASE("file parsing") {
    const std::string path = "/tmp/nsplab_test_cfg.txt";
    io::atomic_write(path, "t_final = 2.5\n");
    const auto cfg = config::parse_file(path);
    CHECK(cfg.t_final == 2.5);
    std::remove(path.c_str());
    CHECK_THROWS_AS((void)config::parse_file("/tmp/no_such_file_nsplab.cfg"),
                    std::invalid_argument);
}
