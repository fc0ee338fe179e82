#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "deabench/errors.hpp"
#include "deabench/lp.hpp"
#include "deabench/oracles.hpp"

using namespace deabench;

namespace {

lp::LpProblem make_problem(lp::Sense sense, std::vector<double> objective) {
    lp::LpProblem p;
    p.sense = sense;
    p.objective = std::move(objective);
    return p;
}

void add_row(lp::LpProblem &p, std::vector<double> coeffs, lp::Relation rel, double rhs) {
    p.constraints.push_back({std::move(coeffs), rel, rhs});
}

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t seed) : gen(seed) {}
    double uniform(double lo, double hi) {
        return lo + (hi - lo) * (static_cast<double>(gen() >> 11) * 0x1.0p-53);
    }
    std::size_t index(std::size_t n) { return static_cast<std::size_t>(gen() % n); }
};

lp::LpProblem random_packing_lp(std::uint64_t seed) {
    Rng rng(seed);
    const std::size_t n = 2 + rng.index(3);
    const std::size_t m = 2 + rng.index(4);
    lp::LpProblem p = make_problem(lp::Sense::maximize, {});
    for (std::size_t v = 0; v < n; ++v) p.objective.push_back(rng.uniform(0.2, 2.0));
    for (std::size_t row = 0; row < m; ++row) {
        std::vector<double> coeffs;
        for (std::size_t v = 0; v < n; ++v) coeffs.push_back(rng.uniform(0.1, 2.0));
        add_row(p, std::move(coeffs), lp::Relation::less_equal, rng.uniform(1.0, 5.0));
    }
    return p;
}

} // namespace

TEST_CASE("one variable, one bound constraint") {
    auto p = make_problem(lp::Sense::maximize, {1.0});
    add_row(p, {1.0}, lp::Relation::less_equal, 1.0);
    auto sol = lp::solve(p);
    REQUIRE(sol.status == lp::Status::optimal);
    CHECK(sol.objective_value == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(sol.variable_values[0] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("textbook two-variable maximum at a vertex") {
    auto p = make_problem(lp::Sense::maximize, {3.0, 2.0});
    add_row(p, {1.0, 1.0}, lp::Relation::less_equal, 4.0);
    add_row(p, {1.0, 0.0}, lp::Relation::less_equal, 2.0);
    auto sol = lp::solve(p);
    REQUIRE(sol.status == lp::Status::optimal);
    CHECK(sol.objective_value == doctest::Approx(10.0).epsilon(1e-12));
    CHECK(sol.variable_values[0] == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(sol.variable_values[1] == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("infeasible system is detected") {
    auto p = make_problem(lp::Sense::minimize, {0.0});
    add_row(p, {1.0}, lp::Relation::less_equal, -1.0); // clashes with x >= 0
    CHECK(lp::solve(p).status == lp::Status::infeasible);
}

TEST_CASE("unbounded maximization is detected") {
    auto p = make_problem(lp::Sense::maximize, {1.0, 1.0});
    add_row(p, {1.0, -1.0}, lp::Relation::less_equal, 1.0);
    CHECK(lp::solve(p).status == lp::Status::unbounded);
}

TEST_CASE("equality constraints and minimization") {
    auto p = make_problem(lp::Sense::minimize, {2.0, 3.0});
    add_row(p, {1.0, 1.0}, lp::Relation::equal, 5.0);
    auto sol = lp::solve(p);
    REQUIRE(sol.status == lp::Status::optimal);
    CHECK(sol.objective_value == doctest::Approx(10.0).epsilon(1e-9)); // all mass on x1
    CHECK(sol.variable_values[0] == doctest::Approx(5.0).epsilon(1e-9));
}

TEST_CASE("free variables and finite bounds") {
    auto p = make_problem(lp::Sense::minimize, {1.0});
    p.bounds = {{-lp::kInfinity, lp::kInfinity}};
    add_row(p, {1.0}, lp::Relation::greater_equal, -5.0);
    auto sol = lp::solve(p);
    REQUIRE(sol.status == lp::Status::optimal);
    CHECK(sol.objective_value == doctest::Approx(-5.0).epsilon(1e-9));

    auto q = make_problem(lp::Sense::maximize, {1.0, 1.0});
    q.bounds = {{0.5, 2.0}, {0.0, 3.0}};
    add_row(q, {1.0, 1.0}, lp::Relation::less_equal, 4.0);
    auto sq = lp::solve(q);
    REQUIRE(sq.status == lp::Status::optimal);
    CHECK(sq.objective_value == doctest::Approx(4.0).epsilon(1e-9));
    CHECK(sq.variable_values[0] >= 0.5 - 1e-9);
    CHECK(sq.variable_values[0] <= 2.0 + 1e-9);
}

TEST_CASE("dimension mismatch raises validation_error") {
    auto p = make_problem(lp::Sense::maximize, {1.0, 1.0});
    add_row(p, {1.0}, lp::Relation::less_equal, 1.0);
    CHECK_THROWS_AS(lp::solve(p), validation_error);
}

TEST_CASE("row scaling leaves the optimum unchanged") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        auto p = random_packing_lp(seed);
        const double base = lp::solve(p).objective_value;
        auto scaled = p;
        for (auto &con : scaled.constraints) {
            for (double &c : con.coefficients) c *= 3.25;
            con.rhs *= 3.25;
        }
        CHECK(lp::solve(scaled).objective_value == doctest::Approx(base).epsilon(1e-9));
    }
}

TEST_CASE("duplicating a constraint leaves the optimum unchanged") {
    for (std::uint64_t seed = 21; seed <= 40; ++seed) {
        auto p = random_packing_lp(seed);
        const double base = lp::solve(p).objective_value;
        auto padded = p;
        padded.constraints.push_back(p.constraints.front());
        CHECK(lp::solve(padded).objective_value == doctest::Approx(base).epsilon(1e-9));
    }
}

TEST_CASE("seeded agreement with the vertex-enumeration oracle") {
    for (std::uint64_t seed = 100; seed < 160; ++seed) {
        auto p = random_packing_lp(seed);
        auto sol = lp::solve(p);
        REQUIRE(sol.status == lp::Status::optimal);
        const double oracle = oracles::enumerate_vertices_best(p);
        CHECK(std::abs(sol.objective_value - oracle) <= 1e-7 * (1.0 + std::abs(oracle)));
    }
}

TEST_CASE("degenerate ties still terminate (anti-cycling)") {
    // Many redundant rows through the same vertex.
    auto p = make_problem(lp::Sense::maximize, {1.0, 1.0, 1.0});
    for (int i = 0; i < 12; ++i) {
        std::vector<double> coeffs = {1.0, 1.0, 1.0};
        coeffs[static_cast<std::size_t>(i % 3)] += 1e-13 * i;
        add_row(p, std::move(coeffs), lp::Relation::less_equal, 3.0);
    }
    auto sol = lp::solve(p);
    REQUIRE(sol.status == lp::Status::optimal);
    CHECK(sol.objective_value == doctest::Approx(3.0).epsilon(1e-7));
}
