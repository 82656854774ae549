#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "esu/json_io.hpp"

using namespace esu;

TEST_CASE("params from JSON") {
    const json j = {{"a", 1.5}, {"Lambda", 0.3}, {"m", 0.7}, {"xi", 0.1},
                    {"kappa", 2.0}};
    const ModelParams p = params_from_json(j);
    CHECK(p.a() == 1.5);
    CHECK(p.renorm().alpha == std::array<double, 5>{});  // defaults to zeros
    CHECK(p.renorm().beta == std::array<double, 3>{});

    json full = j;
    full["alpha"] = {0.1, 0.2, 0.3, 0.4, 0.5};
    full["beta"] = {1.0, 2.0, 3.0};
    const ModelParams q = params_from_json(full);
    CHECK(q.renorm().alpha[4] == 0.5);
    CHECK(q.renorm().beta[0] == 1.0);
    CHECK(params_from_json(to_json(q)).renorm().alpha == q.renorm().alpha);

    json bad = j;
    bad["alpha"] = {1.0, 2.0};  // wrong length
    CHECK_THROWS_AS(params_from_json(bad), std::invalid_argument);
    json missing = j;
    missing.erase("kappa");
    CHECK_THROWS_AS(params_from_json(missing), std::invalid_argument);
}

TEST_CASE("symmetric state JSON round trip") {
    std::mt19937 rng(41u);
    std::uniform_real_distribution<double> ud(0.01, 3.0);
    std::uniform_int_distribution<int> kind(0, 2);
    std::uniform_int_distribution<std::size_t> mode(0, 40);
    for (int trial = 0; trial < 50; ++trial) {
        SymmetricState s = SymmetricState::ground();
        switch (kind(rng)) {
            case 0: break;
            case 1: s = SymmetricState::kms(ud(rng)); break;
            case 2: {
                std::map<std::size_t, double> coeffs;
                for (int i = 0; i < 4; ++i) coeffs[mode(rng)] = ud(rng);
                s = SymmetricState::modes(coeffs);
                break;
            }
        }
        const SymmetricState back = state_from_json(to_json(s));
        CHECK(back.kind() == s.kind());
        CHECK(back.beta() == s.beta());
        CHECK(back.coeffs() == s.coeffs());
    }
    CHECK_THROWS_AS(state_from_json(json{{"kind", "squeezed"}}),
                    std::invalid_argument);
}

TEST_CASE("classification and minimizer serialisation shape") {
    Classification c;
    c.qf = SolutionSet::unique_non_ground;
    c.full = SolutionSet::infinite;
    c.boundary = true;
    const json j = to_json(c);
    CHECK(j.at("qf") == "unique_non_ground");
    CHECK(j.at("full") == "infinite");
    CHECK(j.at("boundary") == true);

    MinimizerResult r;  // ground defaults: multipliers are not applicable
    const json mj = to_json(r);
    CHECK(mj.at("lambda").is_null());
    CHECK(mj.at("beta").is_null());
    CHECK(mj.at("state").at("kind") == "ground");
}
