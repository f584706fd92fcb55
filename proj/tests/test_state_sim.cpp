#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "htoc/sampling.hpp"

using namespace htoc;
using namespace htoc::sim;

namespace {

constexpr double kTau = 2.0 * std::numbers::pi;

PureState random_state(const Layout& layout, Rng& rng) {
    PureState s(layout);
    u64 total = 1;
    for (const Register& r : layout) total *= r.size();
    for (u64 i = 0; i < total; ++i) {
        BasisLabel label;
        u64 rest = i;
        for (const Register& r : layout) {
            label.push_back(rest % r.size());
            rest /= r.size();
        }
        s.set_amplitude(label, cplx(rng.real() - 0.5, rng.real() - 0.5));
    }
    s.renormalize();
    return s;
}

}  // namespace

TEST_CASE("uniform superpositions have flat amplitudes") {
    PureState s2 = uniform_superposition(AbelianGroupSpec({2}));
    CHECK(s2.support_size() == 2);
    CHECK(std::abs(s2.amplitude({0}) - 1.0 / std::sqrt(2.0)) < 1e-12);
    CHECK(std::abs(s2.amplitude({1}) - 1.0 / std::sqrt(2.0)) < 1e-12);

    PureState s9 = uniform_superposition(groups::zpn_spec(3, 2));
    CHECK(s9.support_size() == 9);
    for (u64 i = 0; i < 9; ++i) CHECK(std::abs(s9.amplitude({i}) - 1.0 / 3.0) < 1e-12);

    PureState s1 = uniform_superposition(AbelianGroupSpec{});
    CHECK(s1.support_size() == 1);
    CHECK(std::abs(s1.amplitude({0}) - 1.0) < 1e-12);
}

TEST_CASE("state invariants are enforced") {
    PureState s({Register::value_reg(4)});
    s.set_amplitude({0}, 1.0);
    s.check_norm();
    s.set_amplitude({1}, 0.5);
    CHECK_THROWS_AS(s.check_norm(), InternalError);
    s.renormalize();
    s.check_norm();

    // pruning drops sub-threshold amplitudes
    s.set_amplitude({2}, 1e-15);
    s.prune();
    CHECK(s.amplitude({2}) == cplx(0.0, 0.0));

    CHECK_THROWS_AS(s.set_amplitude({9}, 1.0), InputError);
    CHECK_THROWS_AS(s.set_amplitude({0, 0}, 1.0), InputError);

    SimLimits tight;
    tight.max_support = 3;
    PureState capped({Register::value_reg(8)}, tight);
    capped.set_amplitude({0}, 0.5);
    capped.set_amplitude({1}, 0.5);
    capped.set_amplitude({2}, 0.5);
    CHECK_THROWS_AS(capped.set_amplitude({3}, 0.5), ResourceError);
}

TEST_CASE("oracle writes are reversible group translations") {
    AbelianGroupSpec z3({3});
    PureState s = tensor(uniform_superposition(z3), PureState::basis({Register::value_reg(3)}, {0}));
    OracleFn ident = [](const std::vector<u64>& x) { return x[0]; };
    apply_oracle(s, ident, {0}, 1);
    for (u64 x = 0; x < 3; ++x) {
        CHECK(std::abs(s.amplitude({x, x}) - 1.0 / std::sqrt(3.0)) < 1e-12);
        CHECK(std::abs(s.amplitude({x, (x + 1) % 3})) < 1e-12);
    }
    apply_oracle_inverse(s, ident, {0}, 1);
    PureState expect = tensor(uniform_superposition(z3),
                              PureState::basis({Register::value_reg(3)}, {0}));
    CHECK(fidelity(s, expect) > 1.0 - 1e-12);

    // constant oracle: the target stays definite and drops cleanly
    OracleFn constant = [](const std::vector<u64>&) { return u64{2}; };
    apply_oracle(s, constant, {0}, 1);
    PureState dropped = drop_definite_register(s, 1);
    CHECK(fidelity(dropped, uniform_superposition(z3)) > 1.0 - 1e-12);

    apply_oracle(s, ident, {0}, 1);  // target now x + 2, not definite
    CHECK_THROWS_AS(drop_definite_register(s, 1), InternalError);
}

TEST_CASE("injective oracles mix the source register marginal") {
    AbelianGroupSpec z32 = groups::zpn_spec(3, 2);
    PureState s =
        tensor(uniform_superposition(z32), PureState::basis({Register::value_reg(9)}, {0}));
    OracleFn f = [](const std::vector<u64>& x) { return (x[0] * 4 + 1) % 9; };  // injective mod 9
    apply_oracle(s, f, {0}, 1);
    auto marg = marginal(s, 0);
    for (const auto& [label, prob] : marg) CHECK(std::abs(prob - 1.0 / 9.0) < 1e-12);
}

TEST_CASE("fourier transform matches the character table and inverts") {
    PureState s = PureState::basis({Register::group_reg(AbelianGroupSpec({2}))}, {0});
    qft(s, 0);
    CHECK(std::abs(s.amplitude({0}) - 1.0 / std::sqrt(2.0)) < 1e-12);
    CHECK(std::abs(s.amplitude({1}) - 1.0 / std::sqrt(2.0)) < 1e-12);

    PureState t = PureState::basis({Register::group_reg(AbelianGroupSpec({3}))}, {1});
    qft(t, 0);
    for (u64 y = 0; y < 3; ++y) {
        cplx want = std::polar(1.0 / std::sqrt(3.0), kTau * static_cast<double>(y) / 3.0);
        CHECK(std::abs(t.amplitude({y}) - want) < 1e-12);
    }

    Rng rng(17);
    Layout layout{Register::group_reg(groups::zpn_spec(3, 2)), Register::value_reg(2)};
    for (int it = 0; it < 20; ++it) {
        PureState r = random_state(layout, rng);
        PureState copy = r;
        qft(copy, 0);
        copy.check_norm();
        qft_inverse(copy, 0);
        CHECK(fidelity(copy, r) > 1.0 - 1e-9);
    }
    PureState bad({Register::value_reg(3)});
    bad.set_amplitude({0}, 1.0);
    CHECK_THROWS_AS(qft(bad, 0), InputError);
}

TEST_CASE("measurement follows Born statistics and collapses") {
    Rng rng(23);
    PureState plus = uniform_superposition(AbelianGroupSpec({2}));
    u64 zeros = 0;
    for (int it = 0; it < 10000; ++it) {
        PureState s = plus;
        u64 out = measure(s, 0, rng);
        if (out == 0) ++zeros;
        CHECK(std::abs(s.norm_sq() - 1.0) < 1e-9);
        CHECK(s.support_size() == 1);
    }
    double freq = zeros / 10000.0;
    CHECK(freq > 0.48);
    CHECK(freq < 0.52);

    PureState basis = PureState::basis({Register::value_reg(5)}, {3});
    for (int it = 0; it < 32; ++it) {
        PureState s = basis;
        CHECK(measure(s, 0, rng) == 3);
    }
}

TEST_CASE("relabelings must be bijective and phases unit") {
    PureState s = uniform_superposition(AbelianGroupSpec({3}));
    map_labels(s, [](const BasisLabel& l) { return BasisLabel{(l[0] + 1) % 3}; });
    CHECK(std::abs(s.amplitude({0}) - 1.0 / std::sqrt(3.0)) < 1e-12);
    CHECK_THROWS_AS(map_labels(s, [](const BasisLabel&) { return BasisLabel{0}; }),
                    InternalError);
    PureState t = uniform_superposition(AbelianGroupSpec({3}));
    CHECK_THROWS_AS(apply_phase(t, [](const BasisLabel&) { return cplx(0.5, 0.0); }), InputError);
}

TEST_CASE("fourier sampling of a hiding function lands in the orthogonal set") {
    AbelianGroupSpec z32 = groups::zpn_spec(3, 2);

    OracleFn constant = [](const std::vector<u64>&) { return u64{0}; };
    Rng rng(31);
    for (int it = 0; it < 24; ++it) {
        CHECK(fourier_sampling(z32, constant, 9, rng) == AbelianElement{0, 0});
    }

    OracleFn injective = [](const std::vector<u64>& x) { return x[0]; };
    PureState post = fourier_sampling_state(z32, injective, 9);
    auto marg = marginal(post, 0);
    REQUIRE(marg.size() == 9);
    for (const auto& [y, prob] : marg) CHECK(std::abs(prob - 1.0 / 9.0) < 1e-12);

    // f constant exactly on the cosets of <(1,1)>
    OracleFn coset = [&z32](const std::vector<u64>& x) {
        AbelianElement e = z32.element_at(x[0]);
        return static_cast<u64>((e[0] + 2 * e[1]) % 3);  // kills (1,1)
    };
    PureState hide = fourier_sampling_state(z32, coset, 3);
    auto dist = marginal(hide, 0);
    double on = 0.0, off = 0.0;
    for (u64 yi = 0; yi < 9; ++yi) {
        AbelianElement y = z32.element_at(yi);
        double prob = dist.count(yi) ? dist[yi] : 0.0;
        if ((y[0] + y[1]) % 3 == 0) {
            on += prob;
            CHECK(std::abs(prob - 1.0 / 3.0) < 1e-12);
        } else {
            off += prob;
        }
    }
    CHECK(std::abs(on - 1.0) < 1e-12);
    CHECK(off < 1e-12);

    // empirical draws stay inside the orthogonal subgroup
    for (int it = 0; it < 200; ++it) {
        AbelianElement y = fourier_sampling(z32, coset, 3, rng);
        CHECK((y[0] + y[1]) % 3 == 0);
    }
}

TEST_CASE("exact orthogonal-set distributions for every subgroup") {
    AbelianGroupSpec z33 = groups::zpn_spec(3, 3);
    auto subgroups = groups::all_subgroups(z33);
    REQUIRE(subgroups.size() == 28);
    for (const auto& indices : subgroups) {
        // hide the subgroup: label each coset by its smallest member index
        OracleFn f = [&z33, &indices](const std::vector<u64>& x) {
            u64 best = z33.order();
            for (u64 h : indices) {
                best = std::min(best, z33.index_of(z33.add(z33.element_at(x[0]),
                                                           z33.element_at(h))));
            }
            return best;
        };
        PureState post = fourier_sampling_state(z33, f, 27);
        auto dist = marginal(post, 0);
        // uniform over the orthogonal subgroup, zero elsewhere
        std::vector<u64> perp;
        for (u64 yi = 0; yi < 27; ++yi) {
            bool ortho = true;
            for (u64 h : indices) {
                if (!groups::char_is_trivial(z33, z33.element_at(yi), z33.element_at(h))) {
                    ortho = false;
                    break;
                }
            }
            if (ortho) perp.push_back(yi);
        }
        double tv = 0.0;
        for (u64 yi = 0; yi < 27; ++yi) {
            double got = dist.count(yi) ? dist[yi] : 0.0;
            bool in = std::find(perp.begin(), perp.end(), yi) != perp.end();
            double want = in ? 1.0 / static_cast<double>(perp.size()) : 0.0;
            tv += std::abs(got - want);
        }
        REQUIRE(tv / 2.0 < 1e-9);
    }
}

TEST_CASE("swap test statistics track the overlap") {
    Rng rng(41);
    PureState a = PureState::basis({Register::value_reg(4)}, {0});
    PureState b = PureState::basis({Register::value_reg(4)}, {1});

    for (int it = 0; it < 200; ++it) CHECK(swap_test(a, a, rng));

    u64 accepts = 0;
    for (int it = 0; it < 10000; ++it) accepts += swap_test(a, b, rng) ? 1 : 0;
    double freq = accepts / 10000.0;
    CHECK(freq > 0.48);
    CHECK(freq < 0.52);

    // overlap 1/sqrt2: accept probability (1 + 1/2) / 2 = 3/4
    PureState h({Register::value_reg(4)});
    h.set_amplitude({0}, 1.0 / std::sqrt(2.0));
    h.set_amplitude({1}, 1.0 / std::sqrt(2.0));
    accepts = 0;
    for (int it = 0; it < 10000; ++it) accepts += swap_test(a, h, rng) ? 1 : 0;
    freq = accepts / 10000.0;
    CHECK(freq > 0.73);
    CHECK(freq < 0.77);

    PureState other({Register::value_reg(5)});
    other.set_amplitude({0}, 1.0);
    CHECK_THROWS_AS(swap_test(a, other, rng), InputError);
}

TEST_CASE("amplified equality tests meet their error budget") {
    Rng rng(43);
    PureState a = PureState::basis({Register::value_reg(2)}, {0});
    PureState b = PureState::basis({Register::value_reg(2)}, {1});

    CHECK(equality_test_rounds(1e-3) == 10);
    CHECK(equality_test_rounds(0.5) == 1);

    for (int it = 0; it < 100; ++it) CHECK(equality_test(a, a, 1e-3, rng));

    u64 wrong = 0;
    for (int it = 0; it < 2000; ++it) wrong += equality_test(a, b, 1e-3, rng) ? 1 : 0;
    CHECK(wrong <= 8);  // expect about 2 at error rate 1e-3
}
