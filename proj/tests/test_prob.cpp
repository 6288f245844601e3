#include <cmath>
#include <vector>

#include "core/prob.hpp"
#include "core/rng.hpp"
#include "doctest.h"

using namespace acmac;

namespace {

JointTensor tensor2(const std::vector<std::vector<double>>& m, const std::string& ta,
                    const std::string& tb) {
    std::vector<double> vals;
    for (const auto& row : m) vals.insert(vals.end(), row.begin(), row.end());
    return JointTensor({{ta, static_cast<int>(m.size())}, {tb, static_cast<int>(m[0].size())}},
                       std::move(vals));
}

JointTensor random_joint(Rng& rng, const std::vector<int>& sizes) {
    std::int64_t total = 1;
    for (int s : sizes) total *= s;
    std::vector<double> vals(static_cast<size_t>(total));
    double sum = 0.0;
    for (double& v : vals) {
        v = -std::log(rng.uniform());
        sum += v;
    }
    for (double& v : vals) v /= sum;
    std::vector<JointTensor::Axis> axes;
    const char* tags[] = {"a", "b", "c", "d"};
    for (size_t i = 0; i < sizes.size(); ++i) axes.push_back({tags[i], sizes[i]});
    return JointTensor(std::move(axes), std::move(vals));
}

}  // namespace

TEST_CASE("entropy basics") {
    CHECK(entropy(Pmf::uniform(2)) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(entropy(Pmf::point_mass(4, 0)) == doctest::Approx(0.0));
    CHECK(entropy(Pmf({0.11, 0.89})) == doctest::Approx(0.499916).epsilon(1e-5));
    // Base conversion: uniform over 4 in base 4 is 1.
    CHECK(entropy(Pmf::uniform(4), 4.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(entropy(Pmf::uniform(8)) == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("pmf validation") {
    CHECK_THROWS_AS(Pmf({0.5, 0.6}), ValidationError);
    CHECK_THROWS_AS(Pmf({-0.1, 1.1}), ValidationError);
    CHECK_THROWS_AS(Pmf(std::vector<double>{}), ValidationError);
    CHECK_THROWS_AS(ConditionalPmf(2, 2, {0.5, 0.5, 0.7, 0.2}), ValidationError);
}

TEST_CASE("mutual information basics") {
    // Independent product: I = 0.
    const JointTensor indep = tensor2({{0.06, 0.14}, {0.24, 0.56}}, "a", "b");
    CHECK(mutual_information(indep, {"a"}, {"b"}) == doctest::Approx(0.0).epsilon(1e-12));

    // Identity coupling of two 4-ary variables: I = 2 bits.
    std::vector<double> ident(16, 0.0);
    for (int i = 0; i < 4; ++i) ident[static_cast<size_t>(i) * 4 + i] = 0.25;
    const JointTensor copy4(JointTensor({{"a", 4}, {"b", 4}}, std::move(ident)));
    CHECK(mutual_information(copy4, {"a"}, {"b"}) == doctest::Approx(2.0).epsilon(1e-12));

    CHECK_THROWS_AS(mutual_information(copy4, {"a"}, {"a"}), ValidationError);
    CHECK_THROWS_AS(mutual_information(copy4, {"a"}, {"zz"}), ValidationError);
}

TEST_CASE("conditional mutual information") {
    Rng rng(7);
    // C independent of (A,B): I(A;B|C) equals I(A;B).
    const JointTensor ab = random_joint(rng, {3, 3});
    std::vector<double> vals;
    for (int c = 0; c < 2; ++c) {
        for (double v : ab.values()) vals.push_back(0.5 * v);
    }
    const JointTensor cab({{"c", 2}, {"a", 3}, {"b", 3}}, std::move(vals));
    CHECK(conditional_mutual_information(cab, {"a"}, {"b"}, {"c"}) ==
          doctest::Approx(mutual_information(ab, {"a"}, {"b"})).epsilon(1e-12));
}

TEST_CASE("chain rule consistency on random joints") {
    Rng rng(42);
    for (int trial = 0; trial < 50; ++trial) {
        const JointTensor j = random_joint(rng, {2, 3, 2});
        const double lhs = mutual_information(j, {"a", "b"}, {"c"});
        const double rhs = mutual_information(j, {"a"}, {"c"}) +
                           conditional_mutual_information(j, {"b"}, {"c"}, {"a"});
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
    }
}

TEST_CASE("axis permutation invariance") {
    Rng rng(9);
    const JointTensor j = random_joint(rng, {2, 3, 4});
    // Permute axes (a,b,c) -> (c,a,b) by explicit reindexing.
    std::vector<double> perm(j.values().size());
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 3; ++b) {
            for (int c = 0; c < 4; ++c) {
                perm[(static_cast<size_t>(c) * 2 + a) * 3 + b] =
                    j.values()[(static_cast<size_t>(a) * 3 + b) * 4 + c];
            }
        }
    }
    const JointTensor pj({{"c", 4}, {"a", 2}, {"b", 3}}, std::move(perm));
    CHECK(mutual_information(j, {"a"}, {"c"}) ==
          doctest::Approx(mutual_information(pj, {"a"}, {"c"})).epsilon(1e-12));
    CHECK(conditional_mutual_information(j, {"a"}, {"b"}, {"c"}) ==
          doctest::Approx(conditional_mutual_information(pj, {"a"}, {"b"}, {"c"}))
              .epsilon(1e-12));
}

TEST_CASE("information never exceeds the output entropy") {
    Rng rng(88);
    for (int t = 0; t < 30; ++t) {
        const JointTensor j = random_joint(rng, {2, 3, 4});
        const double i = mutual_information(j, {"a", "b"}, {"c"});
        const double h = marginal_entropy(j, {"c"});
        CHECK(i <= h + 1e-12);
        CHECK(h <= std::log2(4.0) + 1e-12);
        CHECK(i <= std::min(h, marginal_entropy(j, {"a", "b"})) + 1e-9);
    }
}

TEST_CASE("tensor caps and validation") {
    CHECK_THROWS_AS(JointTensor({{"a", 2}}, {0.7, 0.7}), ValidationError);
    CHECK_THROWS_AS(JointTensor({{"a", 2}, {"a", 2}}, {0.25, 0.25, 0.25, 0.25}),
                    ValidationError);
    // 16^7 > 1e7 triggers the state cap.
    std::vector<JointTensor::Axis> axes;
    for (int i = 0; i < 7; ++i) axes.push_back({"t" + std::to_string(i), 16});
    CHECK_THROWS_AS(JointTensor(std::move(axes), {}), CapacityError);
}
