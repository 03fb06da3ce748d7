#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "fwmpair.h"

namespace fs = std::filesystem;

namespace {

struct Fiber {
    fwm_fiber* f;
    Fiber(double a, double x) : f(fwm_fiber_create(a, x)) {}
    ~Fiber() { fwm_fiber_destroy(f); }
};

std::string body_of(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream out;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line[0] == '#') continue;
        out << line << "\n";
    }
    return out.str();
}

}  // namespace

TEST_CASE("fiber lifecycle and scalar queries") {
    Fiber fiber(4.65, 0.067);
    REQUIRE(fiber.f != nullptr);

    double dn = 0.0;
    REQUIRE(fwm_index_step(fiber.f, 1.064, &dn) == FWM_OK);
    CHECK(std::fabs(dn - 9.9e-3) < 2e-4);

    double v = 0.0;
    REQUIRE(fwm_v_number(fiber.f, 1.064, &v) == FWM_OK);
    CHECK(std::fabs(v - 4.66) < 0.02);

    double n01 = 0.0, n11 = 0.0;
    REQUIRE(fwm_mode_neff(fiber.f, 0, 1.064, &n01) == FWM_OK);
    REQUIRE(fwm_mode_neff(fiber.f, 1, 1.064, &n11) == FWM_OK);
    CHECK(n01 > n11);

    double cutoff = 0.0;
    REQUIRE(fwm_lp11_cutoff(fiber.f, &cutoff) == FWM_OK);
    CHECK(std::fabs(cutoff * 1e3 - 2230.0) < 30.0);
}

TEST_CASE("phase matching and collision setup through the C surface") {
    Fiber fiber(4.0, 0.067);
    REQUIRE(fiber.f != nullptr);

    double ls = 0.0, li = 0.0;
    REQUIRE(fwm_phase_match(fiber.f, 1.064, &ls, &li) == FWM_OK);
    CHECK(std::fabs(ls * 1e3 - 1216.0) < 2.0);
    CHECK(std::fabs(li * 1e3 - 945.5) < 1.5);

    double sep = 0.0, length = 0.0;
    REQUIRE(fwm_collision_setup(fiber.f, 1.064, 1e-12, &sep, &length) == FWM_OK);
    CHECK(sep == doctest::Approx(4.0 * std::sqrt(2.0) * 1e-12));
    CHECK(std::fabs(length - 2.4) < 0.1);

    double purity = 0.0;
    REQUIRE(fwm_sigma0_purity(fiber.f, 1.064, 1e-12, 256, &purity) == FWM_OK);
    CHECK(purity >= 0.99);
}

TEST_CASE("error paths: invalid arguments and no-solution status") {
    CHECK(fwm_fiber_create(4.0, 0.5) == nullptr);
    CHECK(std::strlen(fwm_last_error()) > 0);
    CHECK(fwm_fiber_create(99.0, 0.067) == nullptr);

    Fiber degenerate(4.0, 0.001);
    REQUIRE(degenerate.f != nullptr);
    double ls = 1.0, li = 2.0;
    CHECK(fwm_phase_match(degenerate.f, 1.064, &ls, &li) == FWM_ERR_NO_SOLUTION);
    CHECK(ls == 1.0);  // outputs untouched on failure
    CHECK(li == 2.0);

    Fiber fiber(4.0, 0.067);
    CHECK(fwm_index_step(fiber.f, 1.064, nullptr) == FWM_ERR_INVALID);
    CHECK(fwm_index_step(nullptr, 1.064, &ls) == FWM_ERR_INVALID);
    double out = 0.0;
    CHECK(fwm_index_step(fiber.f, 0.2, &out) == FWM_ERR_INVALID);  // outside band
    CHECK(fwm_mode_neff(fiber.f, 3, 1.064, &out) == FWM_ERR_INVALID);
    CHECK(std::string(fwm_status_name(FWM_ERR_NO_SOLUTION)) == "no solution");
    CHECK(std::string(fwm_version()).find('.') != std::string::npos);
}

TEST_CASE("experiment driver: seeded rerun writes byte-identical tables") {
    const fs::path dir1 = fs::temp_directory_path() / "fwm_capi_run1";
    const fs::path dir2 = fs::temp_directory_path() / "fwm_capi_run2";
    fs::remove_all(dir1);
    fs::remove_all(dir2);
    const char* pairs[] = {
        "experiment=jsa",          "fiber.radius_um=4.0", "grid.n=128",
        "fluct.sigma_rel=0.0,0.01", "mc.seed=7",          "mc.threads=2",
    };
    REQUIRE(fwm_run(pairs, 6, dir1.string().c_str()) == FWM_OK);
    REQUIRE(fwm_run(pairs, 6, dir2.string().c_str()) == FWM_OK);
    CHECK(body_of((dir1 / "jsa_summary.csv").string()) ==
          body_of((dir2 / "jsa_summary.csv").string()));
    CHECK(fs::exists(dir1 / "config.txt"));
    CHECK(fs::exists(dir1 / "grids"));
    fs::remove_all(dir1);
    fs::remove_all(dir2);
}

TEST_CASE("experiment driver rejects bad configuration") {
    const char* bad_pairs[] = {"experiment=unknown-kind"};
    const fs::path dir = fs::temp_directory_path() / "fwm_capi_bad";
    CHECK(fwm_run(bad_pairs, 1, dir.string().c_str()) == FWM_ERR_INVALID);
    const char* no_eq[] = {"not-a-pair"};
    CHECK(fwm_run(no_eq, 1, dir.string().c_str()) == FWM_ERR_INVALID);
    CHECK(fwm_run(nullptr, 2, dir.string().c_str()) == FWM_ERR_INVALID);
    fs::remove_all(dir);
}
