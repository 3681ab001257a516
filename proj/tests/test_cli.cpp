#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "holo/cli/commands.hpp"
#include "holo/cli/config.hpp"
#include "holo/cli/figures.hpp"
#include "holo/cli/invariants.hpp"
#include "holo/csv.hpp"
#include "oracles.hpp"

using namespace holo;
using namespace holo::cli;
using oracle::C;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
    const fs::path p = fs::temp_directory_path() / ("holodisk_test_" + name);
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Csv {
    std::string comment;
    std::string header;
    std::vector<std::vector<double>> rows;
};

Csv read_csv(const fs::path& p) {
    std::istringstream is(slurp(p));
    Csv c;
    std::getline(is, c.comment);
    std::getline(is, c.header);
    std::string line;
    while (std::getline(is, line)) {
        std::vector<double> row;
        std::stringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) row.push_back(std::stod(cell));
        c.rows.push_back(row);
    }
    return c;
}

fs::path write_config(const fs::path& dir, const std::string& name, const std::string& text) {
    const fs::path p = dir / name;
    std::ofstream(p, std::ios::binary) << text;
    return p;
}

int run_args(std::vector<std::string> args, std::string* out_text = nullptr) {
    args.insert(args.begin(), "holodisk");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
    if (out_text) *out_text = out.str();
    return code;
}

int error_line(const std::string& text) {
    try {
        const Config cfg = Config::parse(text);
        if (cfg.has_section("figure")) {
            cfg.get_tau_sequence("figure");
            cfg.require_known("figure", {"taus", "tau_scale", "n", "gamma"});
            cfg.get_complex("figure", "gamma", C(1.0));
        }
    } catch (const ConfigError& e) {
        return e.line();
    }
    return -1;
}

const std::string kFigure1 =
    "[figure]\nfamily = example2-approx\nname = fig1\ngamma = 1,0\ntau_scale = 1,0\nn = 1 2 4\nr = 0.99\nn_theta = 512\n";
const std::string kFigure3 =
    "[figure]\nfamily = example3-perturb\nname = fig3\nmu = 0.8,0\ntau_scale = 3,0\nn = 6 10 30\nr = 0.99\nn_theta = 512\n";

}  // namespace

TEST_CASE("config values and tau sequences") {
    const Config cfg = Config::parse(
        "# comment\n[a]\nx = 1.5\nc = 0.25,-0.5\nlist = 1,0; 0,1 ; 0.5,0.5\nn = 4 6 12\ntau_scale = 3,0\nflag = true\n");
    CHECK(cfg.get_double("a", "x") == 1.5);
    CHECK(cfg.get_complex("a", "c") == C(0.25, -0.5));
    CHECK(cfg.get_complexes("a", "list").size() == 3);
    CHECK(cfg.get_bool("a", "flag"));
    CHECK(cfg.get_double("a", "missing", 7.0) == 7.0);
    const auto taus = cfg.get_tau_sequence("a");
    REQUIRE(taus.size() == 3);
    CHECK(std::abs(taus[0] - C(0.25)) < 1e-15);
    CHECK(std::abs(taus[2] - C(0.75)) < 1e-15);
    CHECK(*parse_complex("2") == C(2.0));
    CHECK_FALSE(parse_complex("1,2,3").has_value());
}

TEST_CASE("config errors carry line numbers") {
    CHECK(error_line("[figure]\nn = 1\n\nbroken line\n") == 4);
    CHECK(error_line("x = 1\n") == 1);
    CHECK(error_line("[figure]\nn = 1\nn = 2\n") == 3);
    CHECK(error_line("[figure]\nn = 1\n[figure]\n") == 3);
    CHECK(error_line("[figure\n") == 1);
    CHECK(error_line("[figure]\ntau_scale = 1,0\nn = 1 x\n") == 3);
    CHECK(error_line("[figure]\n\ntaus = 0.5,0; 1.2,0\n") == 3);
    CHECK(error_line("[figure]\ntaus = 0.5,0\ngamma = 1;2\n") == 3);
    CHECK(error_line("[figure]\ntaus = 0.5\nbogus = 1\n") == 3);
    CHECK(error_line("[figure]\ntau_scale = 2,0\nn = 1\n") == 3);
    CHECK(error_line("[figure]\nn = 1\n") == -1);
}

TEST_CASE("csv formatting") {
    CHECK(csv::number(0.1) == "0.10000000000000001");
    CHECK(csv::number(-2.0) == "-2");
    CHECK(csv::number(-0.0) == "0");
    CHECK(csv::label(0.99) == "0.99");
    for (double v : {0.1, 1.0 / 3.0, -2.5e-300, 6.02e23}) CHECK(std::stod(csv::number(v)) == v);
    csv::Table t{"x", {"a", "b"}, {{1.0, 2.0}}};
    CHECK(t.render() == "# x\na,b\n1,2\n");
    const fs::path dir = scratch("csv");
    csv::write_atomic(dir / "t.csv", t.render());
    CHECK(slurp(dir / "t.csv") == t.render());
    CHECK_FALSE(fs::exists(dir / "t.csv.tmp"));
}

TEST_CASE("svg auto-fit") {
    const std::string svg = csv::render_svg({{C(0.0, 0.0), C(1.0, 1.0)}}, 100);
    // The unit square spans 1.1 units including margins, so the corners sit 5 px in.
    CHECK(svg.find("4.545,95.455") != std::string::npos);
    CHECK(svg.find("95.455,4.545") != std::string::npos);
}

TEST_CASE("q_tau curve configuration") {
    const fs::path dir = scratch("fig1");
    const auto files = write_figure(Config::parse(kFigure1), dir);
    REQUIRE(files.size() == 4);
    const std::vector<C> taus = {0.0, 0.5, 0.75};
    std::mt19937 rng(7);
    for (std::size_t i = 0; i < files.size(); ++i) {
        const Csv c = read_csv(files[i]);
        CHECK(c.comment.rfind("# map=example2-approx:", 0) == 0);
        CHECK(c.comment.find(" r=0.99") != std::string::npos);
        CHECK(c.header == "theta,re,im");
        REQUIRE(c.rows.size() == 512);
        // 1% of rows, chosen at random, against the closed forms.
        for (int k = 0; k < 6; ++k) {
            const auto& row = c.rows[rng() % c.rows.size()];
            const C p = std::polar(0.99, row[0]);
            const C exact = i == 0 ? 1.0 - p : std::conj(taus[i - 1]) * (1.0 - p) + std::norm(1.0 - taus[i - 1]) / (1.0 - p);
            CHECK(std::abs(C(row[1], row[2]) - exact) < 1e-10);
        }
    }
    CHECK(read_csv(files[0]).comment == "# map=example2-approx:base r=0.99");
    CHECK(read_csv(files[1]).comment == "# map=example2-approx:n1:tau=0+0i r=0.99");
}

TEST_CASE("perturbed curve configuration") {
    const fs::path dir = scratch("fig3");
    const auto files = write_figure(Config::parse(kFigure3), dir);
    REQUIRE(files.size() == 4);
    const std::vector<C> taus = {0.5, 0.7, 0.9};
    for (std::size_t i = 0; i < files.size(); ++i) {
        const Csv c = read_csv(files[i]);
        REQUIRE(c.rows.size() == 512);
        for (std::size_t j = 3; j < c.rows.size(); j += 100) {
            const auto& row = c.rows[j];
            const C p = std::polar(0.99, row[0]);
            const C exact = i == 0 ? std::pow(1.0 - p, 0.8)
                                   : (taus[i - 1] - p) * (1.0 - p * std::conj(taus[i - 1])) / std::pow(1.0 - p, 1.2);
            CHECK(std::abs(C(row[1], row[2]) - exact) < 1e-10);
        }
    }
}

TEST_CASE("figure output is byte-identical across runs and thread counts") {
    const fs::path cfg_dir = scratch("det_cfg");
    const fs::path cfg = write_config(cfg_dir, "f.ini", kFigure3 + "svg = true\n");
    const fs::path a = scratch("det_a"), b = scratch("det_b");
    REQUIRE(run_args({"figure", "--config", cfg.string(), "--out", a.string()}) == 0);
    REQUIRE(run_args({"figure", "--config", cfg.string(), "--out", b.string(), "--threads", "3"}) == 0);
    int compared = 0;
    for (const auto& entry : fs::directory_iterator(a)) {
        CHECK(slurp(entry.path()) == slurp(b / entry.path().filename()));
        ++compared;
    }
    CHECK(compared == 9);  // 4 CSV, 4 SVG and the combined SVG
}

TEST_CASE("smoke figure with eight samples") {
    const fs::path dir = scratch("smoke");
    const auto files = write_figure(
        Config::parse("[figure]\nfamily = stock\nmaps = identity cayley bshouty-omega-z2\nr = 0.5\nn_theta = 8\n"), dir);
    REQUIRE(files.size() == 3);
    for (const auto& f : files) CHECK(read_csv(f).rows.size() == 8);
    CHECK(read_csv(files[0]).comment == "# map=identity r=0.5");
    CHECK(std::abs(read_csv(files[0]).rows[2][2] - 0.5) < 1e-15);
}

TEST_CASE("sigma figure") {
    const fs::path dir = scratch("sigma");
    const auto files = write_figure(Config::parse("[figure]\nkind = sigma\nbeta = 1\nstep = 0.05\n"), dir);
    const Csv c = read_csv(files.at(0));
    CHECK(c.header == "re,im,k");
    CHECK(c.rows.size() == 161u * 161u);
}

TEST_CASE("approx command") {
    const fs::path dir = scratch("approx");
    const fs::path cfg = write_config(dir, "a.ini",
                                      "[approx]\nfamily = f\nmap = z-minus-one\nmu = 1,0\ntau_scale = 1,0\nn = 2 4 10 100\ncompacts = 0.5\n");
    REQUIRE(run_args({"approx", "--config", cfg.string(), "--out", dir.string()}) == 0);
    const Csv c = read_csv(dir / "approx.csv");
    CHECK(c.header == "tau_re,tau_im,sup_r0.5");
    REQUIRE(c.rows.size() == 4);
    for (std::size_t i = 1; i < c.rows.size(); ++i) CHECK(c.rows[i][2] < c.rows[i - 1][2]);
}

TEST_CASE("flow command") {
    const fs::path dir = scratch("flow");
    const fs::path cfg = write_config(dir, "f.ini", "[flow]\ngenerator = z-minus-one\nz0 = 0,0\nT = 2\nsamples = 21\n");
    REQUIRE(run_args({"flow", "--config", cfg.string(), "--out", dir.string()}) == 0);
    const Csv c = read_csv(dir / "trajectory.csv");
    CHECK(c.header == "t,re,im");
    REQUIRE(c.rows.size() == 21);
    CHECK(c.rows.back()[0] == 2.0);
    CHECK(std::abs(C(c.rows.back()[1], c.rows.back()[2]) - (1.0 - std::exp(-2.0))) < 1e-9);
    for (const auto& row : c.rows) CHECK(std::abs(C(row[1], row[2]) - (1.0 - std::exp(-row[0]))) < 1e-9);
}

TEST_CASE("spectrum command") {
    const fs::path dir = scratch("spectrum");
    const fs::path cfg = write_config(dir, "s.ini", "[spectrum]\nbeta = 1\nre_min = -4\nre_max = 4\nim_min = -4\nim_max = 4\nstep = 0.05\n");
    REQUIRE(run_args({"spectrum", "--config", cfg.string(), "--out", dir.string()}) == 0);
    const Csv c = read_csv(dir / "sigma.csv");
    bool found = false;
    for (const auto& row : c.rows)
        if (std::abs(row[0] - 2.0) < 1e-9 && std::abs(row[1]) < 1e-9) {
            CHECK(row[2] == 1.0);
            found = true;
        }
    CHECK(found);
}

TEST_CASE("valence command uses the seed") {
    const fs::path dir = scratch("valence");
    const fs::path cfg = write_config(dir, "v.ini", "[valence]\nmap = one-minus-z\nradii = 0.9\ntargets = 20\n");
    REQUIRE(run_args({"valence", "--config", cfg.string(), "--out", dir.string(), "--seed", "11"}) == 0);
    const Csv c = read_csv(dir / "valence.csv");
    CHECK(c.comment.find("seed=11") != std::string::npos);
    CHECK(c.rows.at(0)[1] == 1.0);
}

TEST_CASE("usage and config errors exit with 2") {
    const fs::path dir = scratch("errors");
    CHECK(run_args({"nonsense"}) == 2);
    CHECK(run_args({"figure"}) == 2);
    const fs::path bad = write_config(dir, "bad.ini", "[figure]\nfamily = example2-approx\ntaus = 0.5,0; 1,0\n");
    CHECK(run_args({"figure", "--config", bad.string(), "--out", dir.string()}) == 2);
    CHECK(run_args({"--help"}) == 0);
}

TEST_CASE("check command") {
    std::string text;
    CHECK(run_args({"check"}, &text) == 0);
    std::istringstream is(text);
    std::string line;
    std::size_t lines = 0;
    while (std::getline(is, line)) {
        CHECK(line.rfind("PASS ", 0) == 0);
        ++lines;
    }
    CHECK(lines == invariant_registry().size());

    CHECK(run_args({"check", "--tolerance-scale", "0"}, &text) == 1);
    CHECK(text.find("FAIL ") != std::string::npos);
}
