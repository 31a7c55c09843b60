#include "catch_amalgamated.hpp"

#include "cli_runner.hpp"

#include "cwcoh/document.hpp"

#include <filesystem>

namespace fs = std::filesystem;
using cli::run;

namespace {

const std::string fixtures = CWCOH_FIXTURES;
const std::string data = CWCOH_DATA;

bool has_line(const std::string& out, const std::string& line)
{
    return ("\n" + out).find("\n" + line + "\n") != std::string::npos;
}

} // namespace

TEST_CASE("homology output")
{
    const auto r = run("homology " + data + "/corpus/torus.json");
    CHECK(r.status == 0);
    CHECK(r.out == "H_0 = Z\nH_1 = Z^2\nH_2 = Z\n");
    CHECK(r.err.empty());

    const auto c = run("homology " + data + "/corpus/rp3.json --cohomology --coeff Z/2 --dim 3");
    CHECK(c.out == "H^3 = Z/2\n");
    const auto red = run("homology " + data + "/corpus/sphere0.json --reduced");
    CHECK(red.out == "H_0 = Z\n");
}

TEST_CASE("zoo then homology")
{
    const fs::path dir = fs::temp_directory_path() / "cwcoh_cli_test";
    fs::create_directories(dir);
    const std::string m = (dir / "m.json").string();
    CHECK(run("zoo moore 3 2 -o " + m).status == 0);
    const auto r = run("homology " + m + " --cohomology --coeff Z");
    CHECK(r.status == 0);
    CHECK(has_line(r.out, "H^3 = Z/3"));

    const auto z = run("zoo torus");
    CHECK(z.out == cwcoh::serialize_complex(cwcoh::zoo::torus()));
    CHECK(run("zoo moore 3").status == 3);
    CHECK(run("zoo nonsense").status == 3);
}

TEST_CASE("constructions")
{
    const auto s = run("susp " + data + "/corpus/sphere1.json");
    CHECK(s.status == 0);
    CHECK(cwcoh::parse_complex_document(s.out) == cwcoh::zoo::sphere(2));

    const auto w = run("wedge " + data + "/corpus/sphere1.json " + data + "/corpus/sphere2.json");
    CHECK(cwcoh::parse_complex_document(w.out).cell_counts() == std::vector<std::size_t>{1, 1, 1});

    const auto q = run("quotient " + data + "/corpus/surface2.json --below 1");
    CHECK(cwcoh::parse_complex_document(q.out) == cwcoh::zoo::sphere(2));
    CHECK(run("quotient " + data + "/corpus/surface2.json --below 2").status == 3);

    const auto c = run("cone " + data + "/maps/s2_degree3.json");
    CHECK(cwcoh::parse_complex_document(c.out) == cwcoh::zoo::moore(3, 2));

    CHECK(run("euler " + data + "/corpus/cp2.json").out == "3\n");
}

TEST_CASE("degree")
{
    CHECK(run("degree " + data + "/maps/s2_degree3.json").out == "3\n");
    CHECK(run("degree " + fixtures + "/s0_swap.json").out == "-1\n");
    const auto bad = run("degree " + data + "/maps/torus_pinch.json");
    CHECK(bad.status == 1);
    CHECK(bad.err.find("NotASphereModel") != std::string::npos);
}

TEST_CASE("check runs the suites")
{
    const auto r = run("check " + data + "/corpus/klein.json --coeff Z/6 --range 0..3");
    CHECK(r.status == 0);
    CHECK(has_line(r.out, "PASS dimension sphere0 G=Z/6 dims=0..3"));
    CHECK(has_line(r.out, "PASS reformulation klein G=Z/6 dims=2..2"));

    const auto only = run("check " + data + "/corpus/klein.json --suite suspension");
    CHECK(only.out == "PASS suspension klein G=Z dims=-1..4\n");

    const auto m = run("check " + data + "/maps/rp3_1skeleton.json --suite les");
    CHECK(m.status == 0);
    CHECK(has_line(m.out, "PASS les rp3_(1)->rp3 G=Z dims=-1..5"));

    CHECK(run("check " + data + "/corpus/klein.json --range 3..1").status == 3);
    CHECK(run("check " + data + "/corpus/klein.json --range x").status == 3);
    CHECK(run("check " + data + "/corpus/klein.json --suite bogus").status == 3);
    CHECK(run("check " + data + "/corpus/klein.json --coeff Q").status == 3);
}

TEST_CASE("exit codes")
{
    CHECK(run("validate " + data + "/corpus/torus.json").status == 0);
    CHECK(run("validate " + data + "/maps/s2_degree3.json").status == 0);

    const auto broken = run("validate " + fixtures + "/broken.json");
    CHECK(broken.status == 1);
    CHECK(broken.out.find("dimension 3") != std::string::npos);
    CHECK(run("homology " + fixtures + "/broken.json").status == 1);
    CHECK(run("check " + fixtures + "/s0_swap.json").status == 1);

    const auto malformed = run("homology " + fixtures + "/malformed.json");
    CHECK(malformed.status == 2);
    CHECK(malformed.out.empty());
    CHECK_FALSE(malformed.err.empty());
    const auto shape = run("validate " + fixtures + "/wrong_shape.json");
    CHECK(shape.status == 2);
    CHECK(shape.err.find("boundaries.2") != std::string::npos);
    CHECK(run("euler " + fixtures + "/does_not_exist.json").status == 2);

    CHECK(run("").status == 3);
    CHECK(run("frobnicate").status == 3);
    CHECK(run("homology").status == 3);
    CHECK(run("homology " + data + "/corpus/torus.json --dim x").status == 3);
    CHECK(run("--help").status == 0);
}

TEST_CASE("presentation documents are accepted")
{
    const auto r = run("homology " + fixtures + "/torus_presentation.json");
    CHECK(r.status == 0);
    CHECK(r.out == "H_0 = Z\nH_1 = Z^2\nH_2 = Z\n");
}
