#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"

using nlohmann::json;
namespace cli = gysin::cli;

namespace {

std::string fixture(const std::string& name) { return std::string(GYSIN_FIXTURES) + "/" + name; }

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

json load(const std::string& path)
{
    std::ifstream in(path);
    return json::parse(in);
}

std::filesystem::path temp_file(const std::string& name) { return std::filesystem::temp_directory_path() / name; }

}  // namespace

TEST(Cli, VerifyFixturePasses)
{
    const auto r = run({"verify", fixture("example-2-2-4-1.json")});
    EXPECT_EQ(r.code, cli::kExitPass) << r.out << r.err;
    EXPECT_EQ(r.out.rfind("PASS verify", 0), 0u) << r.out;
}

TEST(Cli, VerifyJson)
{
    const auto r = run({"--json", "verify", fixture("example-2-2-4-1.json")});
    ASSERT_EQ(r.code, cli::kExitPass) << r.err;
    const auto doc = json::parse(r.out);
    EXPECT_EQ(doc["verdict"], "pass");
    EXPECT_TRUE(doc["findings"].empty());
    EXPECT_EQ(doc["invariants"].size(), 2u);
}

TEST(Cli, InvariantsJson)
{
    const auto r = run({"--json", "invariants", fixture("example-2-2-4-1.json")});
    ASSERT_EQ(r.code, cli::kExitPass) << r.err;
    const auto doc = json::parse(r.out);
    EXPECT_EQ(doc["subgroups"][0]["total_dim"], 8);
    EXPECT_EQ(doc["subgroups"][1]["total_dim"], 17);
    EXPECT_EQ(doc["subgroups"][0]["norm"], 6);
    EXPECT_EQ(doc["subgroups"][1]["norm"], 6);
    EXPECT_EQ(doc["even_dimension"]["even"], true);
}

TEST(Cli, UsageErrors)
{
    EXPECT_EQ(run({}).code, cli::kExitUsage);
    EXPECT_EQ(run({"frobnicate"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"verify"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"verify", "/nonexistent.json"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"builtin", "sphere", "--n", "0"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"--threads", "0", "oracle", "lattice"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"diagram-d", fixture("example-2-2-4-1.json")}).code, cli::kExitUsage);
}

TEST(Cli, MalformedFileIsUsageError)
{
    auto doc = load(fixture("product-spheres-1-2.json"));
    doc["edges"].erase(doc["edges"].begin());
    const auto path = temp_file("gysin-cli-incomplete.json");
    std::ofstream(path) << doc.dump();
    const auto r = run({"verify", path.string()});
    EXPECT_EQ(r.code, cli::kExitUsage);
    EXPECT_NE(r.err.find("incomplete lattice data"), std::string::npos) << r.err;
    std::filesystem::remove(path);
}

TEST(Cli, BuiltinEmitMatchesFixture)
{
    const auto path = temp_file("gysin-cli-example.json");
    ASSERT_EQ(run({"builtin", "example-2-2-4-1", "--emit", path.string()}).code, cli::kExitPass);
    EXPECT_EQ(load(path.string()), load(fixture("example-2-2-4-1.json")));
    std::filesystem::remove(path);
    const auto r = run({"builtin", "product-spheres", "--m", "1", "--n", "2"});
    ASSERT_EQ(r.code, cli::kExitPass);
    EXPECT_EQ(json::parse(r.out), load(fixture("product-spheres-1-2.json")));
}

TEST(Cli, AllMutationsRejectedWithLocations)
{
    const auto manifest = load(fixture("mutations.json"));
    const auto base = load(fixture(manifest["base"].get<std::string>()));
    std::size_t killed = 0;
    for (const auto& m : manifest["mutations"]) {
        const auto path = temp_file("gysin-cli-mutant.json");
        std::ofstream(path) << base.patch(m["patch"]).dump();
        const auto r = run({"--json", "verify", path.string()});
        EXPECT_EQ(r.code, cli::kExitCheckFailed) << m["name"] << "\n" << r.out << r.err;
        if (r.code == cli::kExitCheckFailed) {
            const auto doc = json::parse(r.out);
            ASSERT_FALSE(doc["findings"].empty()) << m["name"];
            for (const auto& f : doc["findings"])
                EXPECT_FALSE(f["location"].get<std::string>().empty()) << m["name"];
            ++killed;
        }
        std::filesystem::remove(path);
    }
    EXPECT_EQ(killed, 10u);
}

TEST(Cli, EquivalentMutantStillVerifies)
{
    const auto manifest = load(fixture("equivalent-mutations.json"));
    const auto base = load(fixture(manifest["base"].get<std::string>()));
    for (const auto& m : manifest["mutations"]) {
        const auto path = temp_file("gysin-cli-equivalent.json");
        std::ofstream(path) << base.patch(m["patch"]).dump();
        EXPECT_EQ(run({"verify", path.string()}).code, cli::kExitPass) << m["name"];
        std::filesystem::remove(path);
    }
}

TEST(Cli, ObstructionsAndConjecture)
{
    const auto sphere = temp_file("gysin-cli-sphere.json");
    ASSERT_EQ(run({"builtin", "sphere", "--n", "3", "--emit", sphere.string()}).code, cli::kExitPass);
    auto r = run({"--json", "obstructions", sphere.string()});
    ASSERT_EQ(r.code, cli::kExitPass) << r.err;
    auto doc = json::parse(r.out);
    EXPECT_EQ(doc["augmentation"]["triggered"], true);
    EXPECT_EQ(doc["unit_norm"]["triggered"], true);
    r = run({"--json", "obstructions", fixture("example-2-2-4-1.json")});
    doc = json::parse(r.out);
    EXPECT_EQ(doc["extension_obstructed"], false);
    r = run({"--json", "conjecture", sphere.string()});
    EXPECT_EQ(r.code, cli::kExitPass);
    EXPECT_EQ(json::parse(r.out)["holds"], true);
    std::filesystem::remove(sphere);
}

TEST(Cli, DiagramOnFixtures)
{
    auto r = run({"diagram-d", fixture("product-spheres-1-2.json")});
    EXPECT_EQ(r.code, cli::kExitPass) << r.out;
    r = run({"--json", "diagram-d", fixture("product-spheres-1-2-mutated-transfer.json"), "--edge", "[1]<[1,2]"});
    EXPECT_EQ(r.code, cli::kExitCheckFailed);
    const auto doc = json::parse(r.out);
    EXPECT_EQ(doc["verdict"], "fail");
    EXPECT_EQ(run({"diagram-d", fixture("product-spheres-1-2.json"), "--edge", "[9]<[1,2]"}).code, cli::kExitUsage);
}

TEST(Cli, Oracles)
{
    auto r = run({"--json", "oracle", "lemma-2-3-4", "--max-dim", "6", "--random-per-dim", "10"});
    EXPECT_EQ(r.code, cli::kExitPass) << r.err;
    EXPECT_EQ(json::parse(r.out)["verdict"], "pass");
    r = run({"oracle", "tor-les", "--count", "20"});
    EXPECT_EQ(r.code, cli::kExitPass) << r.out;
    r = run({"--json", "oracle", "lattice"});
    EXPECT_EQ(r.code, cli::kExitPass);
    EXPECT_EQ(json::parse(r.out)["rows"].size(), 4u);
    EXPECT_EQ(run({"oracle", "lemma-2-3-4", "--max-dim", "13"}).code, cli::kExitUsage);
}
