#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

#include "ainf/error.hpp"
#include "ainf/io.hpp"

using namespace ainf;
namespace fs = std::filesystem;

namespace {

struct Result {
    int status;
    std::string out;
};

Result run(const std::string& args)
{
    const std::string cmd = std::string(AINF_CLI) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    std::string out;
    std::array<char, 4096> buf;
    while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

class Cli : public ::testing::Test {
protected:
    void SetUp() override
    {
        dir_ = fs::temp_directory_path() / ("ainf_cli_" + std::to_string(::getpid()));
        fs::create_directories(dir_);
        write("pl2.json", R"({"family": "power_law", "beta": 2.0})");
        write("pl3.json", R"({"family": "power_law", "beta": 3.0})");
        write("one.json", R"({"family": "finite", "centers": [[0, 0, 0]]})");
        write("gap.json", R"({"deviations": [{"z": [0, 0], "gap": [2, 1]}]})");
        write("iso.json", R"({"config_a": {"family": "power_law", "beta": 2}, "config_b": {"family": "power_law", "beta": 3}, "disk": 50})");
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string path(const std::string& name) const { return (dir_ / name).string(); }
    void write(const std::string& name, const std::string& text) const { std::ofstream(dir_ / name) << text; }

    fs::path dir_;
};

}  // namespace

TEST(Io, ConfigRoundTrip)
{
    const std::vector<Configuration> configs{
        Configuration::power_law(2.5, 500),
        Configuration::finite({{1, {2, -1}}, {-3, 0}}),
        Configuration::axial({-2, 0.5}, 1.5, 2.0, 300),
        Configuration::general({{1, {1, 0}}}, {PowerTail{0.0, 1, 1.0, 2.0, 1}},
                               {{-1.0, OrderType::finite(1)}, {0.0, OrderType::omega_down()}}, 20.0),
    };
    for (const auto& c : configs) {
        const auto back = io::config_from_json(io::config_to_json(c));
        EXPECT_EQ(back.canonical_string(), c.canonical_string());
        EXPECT_EQ(io::digest(back), io::digest(c));
    }
    EXPECT_NE(io::digest(configs[0]), io::digest(configs[1]));
}

TEST(Io, SectionRoundTrip)
{
    CombinatorialSection s;
    s.deviations.emplace(Complex(0, 0), Gap{3, 2});
    s.deviations.emplace(Complex(1, -1), Gap{std::nullopt, 4});
    const std::vector<Complex> unit{{0.5, 0}, {0, -1}};
    const auto back = io::section_from_json(io::section_to_json(s, unit));
    EXPECT_EQ(back.section, s);
    EXPECT_EQ(back.unit, unit);
}

TEST(Io, MalformedConfig)
{
    for (const char* text : {R"({"family": "power_law"})", R"({"family": "nope"})",
                             R"({"family": "finite", "centers": [[1, 2]]})"}) {
        try {
            (void)io::config_from_json(io::json::parse(text));
            ADD_FAILURE() << text;
        } catch (const Error& e) {
            EXPECT_EQ(e.kind(), ErrorKind::InvalidConfig);
        }
    }
}

TEST(Io, ManifestHasNoClock)
{
    io::RunManifest m{"phi", {"00ff"}, 7, {{"eps", 1e-10}}, io::tool_version};
    EXPECT_EQ(m.to_json().dump(), m.to_json().dump());
    EXPECT_NE(m.comment_block().find("# seed: 7"), std::string::npos);
}

TEST_F(Cli, ExitCodes)
{
    const auto ok = run("phi --config " + path("pl2.json") + " --point 0,0,0 --eps 1e-10");
    EXPECT_EQ(ok.status, 0) << ok.out;
    EXPECT_NE(ok.out.find("0.4112335167"), std::string::npos);
    const auto singular = run("phi --config " + path("one.json") + " --point 0,0,0");
    EXPECT_EQ(singular.status, 1);
    EXPECT_NE(singular.out.find("SingularPoint"), std::string::npos);
    EXPECT_EQ(run("phi --config " + path("pl2.json")).status, 2);
    EXPECT_EQ(run("phi --config " + path("pl2.json") + " --point 1,2").status, 2);
    EXPECT_EQ(run("frobnicate").status, 2);
}

TEST_F(Cli, VerifySuite)
{
    const auto r = run("verify --suite charts --seed 7");
    EXPECT_EQ(r.status, 0) << r.out;
    EXPECT_NE(r.out.find("all checks passed"), std::string::npos);
}

TEST_F(Cli, ChartAndInvert)
{
    const auto c = run("chart --config " + path("pl2.json") + " --section " + path("gap.json") +
                       " --point -2.5,0,0 --theta 0.3");
    ASSERT_EQ(c.status, 0) << c.out;
    const auto header = c.out.find("p_re,p_im,q_re,q_im\n");
    ASSERT_NE(header, std::string::npos);
    const std::string row = c.out.substr(header + 20);
    const auto comma = row.find(',');
    const std::string p = row.substr(0, row.find(',', comma + 1));
    const auto inv = run("invert --config " + path("pl2.json") + " --section " + path("gap.json") + " --p " + p);
    ASSERT_EQ(inv.status, 0) << inv.out;
    EXPECT_NE(inv.out.find("-2.5"), std::string::npos) << inv.out;
}

TEST_F(Cli, OtherCommands)
{
    EXPECT_EQ(run("validate --config " + path("pl2.json")).status, 0);
    EXPECT_EQ(run("flow --config " + path("pl2.json") + " --from -2.5 --to -3.5").status, 0);
    EXPECT_EQ(run("flow --config " + path("pl2.json") + " --from -0.5 --to -1.5").status, 1);
    const auto cls = run("classify-point --config " + path("pl2.json") + " --point -4,0,0");
    EXPECT_NE(cls.out.find("\"fixed\": 2"), std::string::npos) << cls.out;
    const auto k = run("k-divisor --config " + path("pl2.json") + " --s2 " + path("gap.json"));
    EXPECT_NE(k.out.find("\"k\": -1"), std::string::npos) << k.out;
    EXPECT_EQ(run("transition --config " + path("pl2.json") + " --s1 " + path("gap.json") + " --s2 " +
                  path("gap.json") + " --p 1,1")
                  .status,
              0);
    const auto iso = run("isom --config-a " + path("pl2.json") + " --config-b " + path("pl3.json"));
    EXPECT_NE(iso.out.find("\"isomorphic\": true"), std::string::npos) << iso.out;
    const auto map = run("map-point --iso " + path("iso.json") + " --point -2.5,0.5,0 --theta 1");
    EXPECT_EQ(map.status, 0) << map.out;
    EXPECT_EQ(run("map-point --iso " + path("iso.json") + " --point -4,0,0").status, 1);
}

TEST_F(Cli, GrowthCsvIsReproducible)
{
    const std::string args = "growth --beta 2 --rho-min 1e2 --rho-max 1e3 --points 5 --samples 20000 --seed 42";
    const auto a = run(args), b = run(args);
    ASSERT_EQ(a.status, 0) << a.out;
    EXPECT_EQ(a.out, b.out);
    EXPECT_NE(a.out.find("rho,W,logrho,logW\n"), std::string::npos);
    EXPECT_NE(a.out.find("\nslope,"), std::string::npos);
    EXPECT_NE(a.out.find(",stderr,"), std::string::npos);
    const auto narrow = run("growth --beta 2 --rho-min 1e2 --rho-max 5e2 --samples 1000");
    EXPECT_EQ(narrow.status, 1);
    EXPECT_NE(narrow.out.find("InsufficientRange"), std::string::npos);
}

TEST_F(Cli, OutFlag)
{
    const auto r = run("phi --config " + path("pl2.json") + " --point 0,0,0 --out " + path("phi.json"));
    EXPECT_EQ(r.status, 0);
    EXPECT_TRUE(r.out.empty());
    const auto j = io::read_json_file(path("phi.json"));
    EXPECT_NEAR(j.at("value").get<double>(), 0.41123351671205660, 1e-12);
}
