#include "cli.hpp"
#include "support.hpp"

#include <catch_amalgamated.hpp>

#include <algorithm>
#include <sstream>

using namespace malcev;
using namespace malcev::testing;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args)
{
    args.insert(args.begin(), {"--fixtures", MALCEV_FIXTURE_DIR});
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name)
{
    auto dir = std::filesystem::temp_directory_path() / "malcev_cli_tests";
    std::filesystem::create_directories(dir);
    return dir / name;
}

} // namespace

TEST_CASE("verify algebra reports verdicts and witnesses", "[cli]")
{
    auto r = run({"verify", "algebra", "malcev4", "--no-jacobi-expected"});
    CHECK(r.code == 0);
    CHECK(r.out.find("jacobi: fails as expected; witness (e1, e2, e3) -> -6*e4") != std::string::npos);
    auto strict = run({"verify", "algebra", "malcev4", "--jacobi"});
    CHECK(strict.code == 1);
    CHECK(run({"verify", "algebra", "sl2", "--jacobi"}).code == 0);
    CHECK(run({"verify", "algebra", "premalcev4"}).code == 0);
}

TEST_CASE("exit codes separate false statements from usage errors", "[cli]")
{
    CHECK(run({"verify", "o-operator", "--rep", "coadjoint", "--algebra", "malcev4", "--map", "coadjoint_family3"}).code ==
          1);
    CHECK(run({"verify", "o-operator", "--rep", "coadjoint", "--algebra", "malcev4", "--map", "coadjoint_family1"}).code ==
          0);
    CHECK(run({"verify", "algebra", "no_such_algebra"}).code == 2);
    CHECK(run({"verify"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"verify", "form", "symplectic_c1"}).code == 2);
    CHECK(run({"--max-dim", "3", "verify", "algebra", "malcev4"}).code == 2);
    auto r = run({"build", "pre-malcev-from-symplectic", "--form", "symplectic_family"});
    CHECK(r.code == 1);
}

TEST_CASE("the third coadjoint family is reported with its witness", "[cli]")
{
    auto r = run({"verify", "o-operator", "--algebra", "malcev4", "--rep", "coadjoint", "--map", "coadjoint_family3"});
    CHECK(r.out.find("witness (x2*, x3*) -> -a^2*e4") != std::string::npos);
    CHECK(run({"verify", "o-operator", "--algebra", "malcev4", "--rep", "coadjoint", "--map",
               "coadjoint_family3_corrected"})
              .code == 0);
}

TEST_CASE("machine reports are deterministic and versioned", "[cli]")
{
    std::vector<std::string> args{"--json", "-", "--oracle", "verify", "cybe", "skew_solution"};
    auto a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    auto doc = io::json::parse(a.out);
    CHECK(doc["format"] == 1);
    CHECK(doc["exit_code"] == 0);
    bool oracle_seen = false;
    for (const auto& c : doc["checks"])
        oracle_seen = oracle_seen || c["name"] == "oracle agreement (cybe)";
    CHECK(oracle_seen);
    auto path = scratch("report.json");
    CHECK(run({"--json", path.string(), "verify", "algebra", "malcev4", "--no-jacobi-expected"}).code == 0);
    auto saved = io::read_json(path);
    auto command = saved["command"].get<std::vector<std::string>>();
    CHECK(std::find(command.begin(), command.end(), "algebra") != command.end());
    CHECK(saved["exit_code"] == 0);
}

TEST_CASE("the r_T pipeline through files", "[cli]")
{
    auto rT = scratch("r_T.r.json");
    REQUIRE(run({"build", "rT", "--algebra", "malcev4", "--rep", "coadjoint", "--map", "coadjoint_T", "-o", rT.string()})
                .code == 0);
    auto r = run({"--oracle", "verify", "cybe", rT.string()});
    CHECK(r.code == 0);
    auto doc = io::read_json(rT);
    CHECK(doc["entries"].size() == 8);
    CHECK(doc["algebra"]["dim"] == 8);
}

TEST_CASE("tensor map and form round trip through the command line", "[cli]")
{
    auto form = scratch("B_r.form.json");
    REQUIRE(run({"build", "Br", "--tensor", "skew_solution", "-o", form.string()}).code == 0);
    CHECK(run({"verify", "form", form.string(), "--symplectic"}).code == 0);
    auto built = io::form_from_json(io::read_json(form), load_algebra("malcev4"), "form");
    CHECK(built.matrix == load_form("symplectic_c1").matrix);
}

TEST_CASE("constructions print objects to stdout when no output is given", "[cli]")
{
    auto r = run({"build", "commutator", "--algebra", "premalcev4"});
    CHECK(r.code == 0);
    auto A = io::algebra_from_json(io::json::parse(r.out), "stdout");
    CHECK(A.same_products(load_algebra("malcev4")));
    auto pm = run({"build", "pre-malcev-from-T", "--algebra", "malcev4", "--rep", "coadjoint", "--map", "coadjoint_T"});
    CHECK(pm.code == 0);
    CHECK(pm.err.find("commutator") != std::string::npos);
}

TEST_CASE("representations and bimodules from keywords", "[cli]")
{
    CHECK(run({"verify", "rep", "sl2_v"}).code == 0);
    CHECK(run({"verify", "rep", "coadjoint", "--algebra", "malcev4"}).code == 0);
    CHECK(run({"--oracle", "verify", "bimodule", "dual-regular", "--algebra", "premalcev4"}).code == 0);
    CHECK(run({"verify", "pm-o-operator", "--algebra", "premalcev4", "--bimodule", "L0", "--map", "identity"}).code ==
          0);
    CHECK(run({"verify", "form-o-equivalence", "--algebra", "premalcev4", "--map", "identity"}).code == 0);
    auto rep = scratch("coadjoint.rep.json");
    REQUIRE(run({"build", "coadjoint", "--algebra", "malcev4", "-o", rep.string()}).code == 0);
    CHECK(run({"verify", "rep", rep.string()}).code == 0);
    auto phi = scratch("killing.map.json");
    REQUIRE(run({"build", "phiB", "--form", "sl2_killing", "-o", phi.string()}).code == 0);
    CHECK(run({"verify", "rep-iso", "--algebra", "sl2", "--rep", "coadjoint", "--rep2", "adjoint", "--map",
               phi.string()})
              .code == 0);
    CHECK(run({"verify", "rep-iso", "--algebra", "sl2", "--rep", "adjoint", "--rep2", "coadjoint", "--map",
               phi.string()})
              .code == 1);
}

TEST_CASE("search finds the zero map and only O-operators", "[cli]")
{
    auto r = run({"--json", "-", "search", "o-operators", "--algebra", "malcev4", "--rep", "coadjoint", "--mask",
                  "0001/0001/0001/1111"});
    CHECK(r.code == 0);
    auto doc = io::json::parse(r.out);
    CHECK(doc["exit_code"] == 0);
    REQUIRE(doc.contains("object"));
    auto co = coadjoint_rep(load_algebra("malcev4"));
    bool has_zero = false;
    for (const auto& m : doc["object"]["maps"]) {
        auto T = io::map_from_json(m, "found");
        CHECK(check_o_operator(T, co).holds);
        has_zero = has_zero || T.is_zero();
    }
    CHECK(has_zero);
    CHECK(doc["object"]["count"] == doc["object"]["maps"].size());
    auto over = run({"search", "o-operators", "--algebra", "malcev4", "--rep", "coadjoint", "--mask",
                     "1111/1111/1111/1111", "--budget", "10"});
    CHECK(over.code == 2);
}
