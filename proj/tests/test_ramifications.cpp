#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "floquet/acceptance.hpp"
#include "floquet/errors.hpp"
#include "floquet/lyapunov.hpp"
#include "floquet/ramifications.hpp"

using namespace floquet;
using std::numbers::pi;

namespace {

std::vector<Complex> circle(Complex c, double r, int nodes = 64) {
    std::vector<Complex> out;
    for (int i = 0; i < nodes; ++i) out.push_back(c + std::polar(r, 2 * pi * i / nodes));
    return out;
}

bool has_member(const ClusterLayout& layout, int id, std::pair<int, int> member) {
    for (const auto& c : layout.clusters)
        if (c.id == id || id == 999)
            for (const auto& m : c.members)
                if (m == member) return true;
    return false;
}

}  // namespace

TEST_CASE("search box centres") {
    SearchBox b = make_box(2, 1, 1, 0.3);
    CHECK(std::abs(b.center_z - std::sqrt(2.0) * pi * std::polar(1.0, pi / 4)) < 1e-12);
    CHECK(b.center_lambda(2).real() == doctest::Approx(-4 * std::pow(pi, 4)));
    CHECK(std::abs(b.center_lambda(2).imag()) < 1e-9);
    SearchBox c = make_box(3, 2, 1, 0.3);
    CHECK(std::abs(c.center_z - 2 * pi) < 1e-12);
    CHECK(c.center_lambda(3).real() == doctest::Approx(std::pow(2 * pi, 6)));
    for (int k = 1; k <= 4; ++k) CHECK(std::abs(make_box(5, k, 0, 0.3).center_z) == 0.0);
    CHECK(make_box(2, 1, 1, 0.3).polygon.size() == 64);
}

TEST_CASE("cluster layout") {
    for (int p : {2, 3}) {
        ClusterLayout layout = cluster_boxes(p, build_boxes(p, 0, 8, 0.3));
        for (const auto& c : layout.clusters) {
            if (c.id == 0) {
                CHECK(c.members.size() == static_cast<size_t>(p - 1));
                for (const auto& m : c.members) CHECK(m.second == 0);
            } else {
                CHECK(c.members.size() == 1);
            }
        }
        CHECK(layout.separators.size() + 1 == layout.clusters.size());
    }
    CHECK_THROWS_AS(cluster_boxes(6, build_boxes(6, 0, 3, 0.49)), ParityViolation);
    ClusterLayout six = cluster_boxes(6, build_boxes(6, 0, 3, 0.49), false);
    bool joined = false;
    for (const auto& c : six.clusters) {
        bool a = false, b = false;
        for (const auto& m : c.members) {
            a = a || m == std::pair{2, 2};
            b = b || m == std::pair{4, 1};
        }
        joined = joined || (a && b);
    }
    CHECK(joined);
    CHECK(has_member(cluster_boxes(6, build_boxes(6, 0, 3, 0.2)), 0, {5, 0}));
}

TEST_CASE("zero counting") {
    OperatorSpec zero = OperatorSpec::zero(2);
    CHECK(count_zeros(zero, make_box(2, 1, 2, 0.3).polygon).winding == 2);
    CHECK(count_zeros(OperatorSpec::zero(3), circle(0.0, 5.0)).winding == 2);
    CHECK(count_zeros(zero, circle(0.0, 5.0)).winding == 1);
    CHECK(count_zeros(zero, circle(200.0, 50.0)).winding == 0);

    // the double zero of the free operator does not split
    auto free = find_ramifications(zero, make_box(2, 1, 1, 0.3));
    REQUIRE(free.size() == 1);
    CHECK(free[0].multiplicity == 2);
    CHECK(free[0].is_real);
    CHECK(free[0].location.real() == doctest::Approx(-4 * std::pow(pi, 4)).epsilon(1e-8));
}

TEST_CASE("ramifications of H^mu are real") {
    OperatorSpec mu(2, {TrigPoly(), TrigPoly::constant(1.0)});
    for (int n = 3; n <= 5; ++n) {
        auto found = find_ramifications(mu, make_box(2, 1, n, 0.6));
        REQUIRE(!found.empty());
        int total = 0;
        for (const auto& r : found) {
            CHECK(r.is_real);
            total += r.multiplicity;
            const Complex pred = mu_ramification_asymptotic(1, n, 1.0, 2).value;
            CHECK(std::abs(r.location - pred) < 1e-3 * std::abs(pred));
        }
        CHECK(total == 2);
    }
}

TEST_CASE("split for q_2 = 2 cos") {
    OperatorSpec spec = cosine_spec();
    auto found = find_ramifications(spec, make_box(2, 1, 1, 0.6));
    REQUIRE(found.size() == 2);
    CHECK(found[0].is_real);
    CHECK(found[1].is_real);
    const double split = std::abs(found[0].location - found[1].location);
    const double leading = ramification_split_leading(spec, 1, 1);
    // at n = 1 the remainder is of the same order as the split itself
    CHECK(split == doctest::Approx(leading).epsilon(0.2));
    CHECK(ramification_split_prediction(spec, 1, 1) == doctest::Approx(leading / 2.0));

    for (const auto& r : found) {
        LyapunovSample s = branches(spec, r.location);
        double scale = 1.0;
        for (Complex d : s.branches) scale = std::max(scale, std::abs(d));
        CHECK(s.min_separation <= 1e-4 * scale);
        CHECK(r.newton_residual <= 1e-6 * r.contour_median);
    }
}

TEST_CASE("discriminant is real on the real axis") {
    OperatorSpec spec = mixed_spec();
    for (Complex l : {Complex(-300.0, 20.0), Complex(45.0, -3.0), Complex(1500.0, 400.0)}) {
        const Complex a = discriminant(spec, l);
        const Complex b = discriminant(spec, std::conj(l));
        CHECK(std::abs(b - std::conj(a)) <= 1e-8 * std::abs(a));
    }
    // every non-real root comes with its conjugate partner
    for (int n = 1; n <= 2; ++n) {
        auto found = find_ramifications(spec, make_box(2, 1, n, 0.6));
        for (size_t i = 0; i < found.size(); ++i) {
            if (found[i].is_real) continue;
            REQUIRE(found[i].conjugate_partner.has_value());
            CHECK(std::abs(found[*found[i].conjugate_partner].location - std::conj(found[i].location)) < 1e-8);
        }
    }
}
