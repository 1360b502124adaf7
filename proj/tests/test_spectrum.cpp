#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "floquet/acceptance.hpp"
#include "floquet/oracle.hpp"
#include "floquet/ramifications.hpp"
#include "floquet/spectrum.hpp"

using namespace floquet;
using std::numbers::pi;

namespace {

OperatorSpec mu_spec(double mu) { return OperatorSpec(2, {TrigPoly(), TrigPoly::constant(mu)}); }

double des_product(double lambda, double mu, int p, int factors) {
    double prod = -lambda / std::pow(2.0, p);
    for (int n = 1; n <= factors; ++n) {
        const double k = 2 * n * pi;
        const double f = 1.0 - std::pow(-1.0, p) * mu / (k * k) - lambda / std::pow(k, 2 * p);
        prod *= f * f;
    }
    return prod;
}

std::vector<double> locations(const std::vector<EndpointClassification>& eigs) {
    std::vector<double> out;
    for (const auto& e : eigs) out.push_back(e.location);  // one entry per unit of multiplicity
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("D_plus and D_minus of the free operator") {
    const double l = std::pow(pi, 4);
    CHECK(d_plus_minus(OperatorSpec::zero(2), l, Sign::plus) == doctest::Approx((std::cosh(pi) - 1) * (-2.0)));
    CHECK(d_plus_minus(OperatorSpec::zero(2), l, Sign::plus) == doctest::Approx(-21.1839).epsilon(1e-5));
    for (int n = 1; n <= 2; ++n) {
        const double z = 2 * pi * n;
        CHECK(std::abs(d_plus_minus(OperatorSpec::zero(2), std::pow(z, 4), Sign::plus)) < 1e-8 * std::cosh(z));
        CHECK(std::abs(d_plus_minus(OperatorSpec::zero(3), std::pow(z, 6), Sign::plus)) < 1e-8 * std::cosh(z));
    }
}

TEST_CASE("D_plus of H^mu against the product formula") {
    for (double mu : {-1.0, 1.0}) {
        for (double l : {1.0, 37.0, 500.0, 3000.0, 9000.0}) {
            const double exact = des_product(l, mu, 2, 10000);
            CHECK(std::abs(d_plus_minus(mu_spec(mu), l, Sign::plus) - exact) <= 1e-5 * std::abs(exact));
        }
    }
}

TEST_CASE("periodic eigenvalues of the free and constant operators") {
    auto free = locations(periodic_eigenvalues(OperatorSpec::zero(2), 2, Parity::periodic));
    REQUIRE(free.size() == 5);
    CHECK(std::abs(free[0]) < 1e-8);
    for (int i : {1, 2}) CHECK(free[i] == doctest::Approx(std::pow(2 * pi, 4)).epsilon(1e-10));
    for (int i : {3, 4}) CHECK(free[i] == doctest::Approx(std::pow(4 * pi, 4)).epsilon(1e-10));
    auto counts = disk_counts(periodic_eigenvalues(OperatorSpec::zero(2), 2, Parity::periodic), 4, Parity::periodic);
    CHECK(counts[0] == 1);
    CHECK(counts[2] == 2);
    CHECK(counts[4] == 2);

    for (double mu : {-2.0, 5.0}) {
        for (Parity par : {Parity::periodic, Parity::antiperiodic}) {
            auto eigs = periodic_eigenvalues(mu_spec(mu), 4, par);
            for (const auto& e : eigs) {
                const int n = e.index / 2;
                const double expect = mu_periodic_eigenvalue(e.index, e.sign, mu, 2);
                CHECK(e.location == doctest::Approx(expect).epsilon(1e-10));
                CHECK(e.index % 2 == (par == Parity::periodic ? 0 : 1));
                (void)n;
            }
        }
    }
}

TEST_CASE("eigenvalues agree with the Galerkin oracle") {
    OperatorSpec spec = cosine_spec();
    auto ap = locations(periodic_eigenvalues(spec, 2, Parity::antiperiodic));
    auto gal = galerkin_eigs(spec, Parity::antiperiodic, 128);
    for (int i = 0; i < 2; ++i) CHECK(std::abs(ap[i] - gal[i]) <= 1e-6 * std::abs(gal[i]));

    auto per = locations(periodic_eigenvalues(spec, 3, Parity::periodic));
    auto galp = galerkin_eigs(spec, Parity::periodic, 128);
    for (size_t i = 0; i < per.size(); ++i) CHECK(std::abs(per[i] - galp[i]) <= 1e-6 * (1 + std::abs(galp[i])));
}

TEST_CASE("band scan of the free operator") {
    BandScan s = band_scan(OperatorSpec::zero(2), -10.0, 1e3, 200);
    REQUIRE(s.bands.size() == 1);
    CHECK(std::abs(s.bands[0].lo) < 1e-6);
    CHECK(s.bands[0].hi == doctest::Approx(1e3));
    CHECK(s.bands[0].multiplicity == 2);
    CHECK(s.bands[0].edge_lo.kind == EdgeKind::periodic_eig);
    REQUIRE(s.gaps.size() == 1);
    CHECK(s.gaps[0].lo == doctest::Approx(-10.0));
}

TEST_CASE("band scan of the Chebyshev operator") {
    for (int p : {2, 3}) {
        BandScan s = band_scan(chebyshev_spec(p), -3.0, 50.0, 240);
        REQUIRE(s.bands.size() == 2);
        CHECK(s.bands[0].lo == doctest::Approx(-1.0).epsilon(1e-6));
        CHECK(s.bands[0].hi == doctest::Approx(1.0).epsilon(1e-6));
        CHECK(s.bands[0].multiplicity == 2 * p);
        CHECK(s.bands[1].multiplicity == 2);
    }
}

TEST_CASE("gap around the first antiperiodic pair") {
    OperatorSpec spec = cosine_spec();
    auto ap = locations(periodic_eigenvalues(spec, 1, Parity::antiperiodic));
    BandScan s = band_scan(spec, 0.0, 300.0, 200);
    bool found = false;
    for (const auto& g : s.gaps) {
        if (std::abs(g.lo - ap[0]) < 1e-6 * ap[0] && std::abs(g.hi - ap[1]) < 1e-6 * ap[1]) {
            found = true;
            const double width = g.hi - g.lo;
            const double pred = gap_width_prediction(spec, 1);
            CHECK(width == doctest::Approx(2 * pi * pi * 1.0).epsilon(0.5));
            CHECK(std::abs(width - pred) < 0.5 * pred);
        }
    }
    CHECK(found);
}

TEST_CASE("edge classification") {
    EndpointClassification e = classify_endpoint(OperatorSpec::zero(2), 0.0, 1.0);
    CHECK(e.kind == EdgeKind::periodic_eig);

    OperatorSpec mixed = mixed_spec();
    BandScan s = band_scan(mixed, 2e3, 2e4, 200);
    REQUIRE(!s.bands.empty());
    for (const auto& b : s.bands) {
        CHECK(b.multiplicity == 2);
        for (const auto* edge : {&b.edge_lo, &b.edge_hi}) {
            if (edge->location == 2e3 || edge->location == 2e4) continue;
            CHECK((edge->kind == EdgeKind::periodic_eig || edge->kind == EdgeKind::antiperiodic_eig));
        }
    }

    // a large first harmonic of q_2 pushes a real ramification onto a band edge
    OperatorSpec strong(2, {TrigPoly(), TrigPoly::cosine(1, 10.0)});
    BandScan low = band_scan(strong, -5.0, 5.0, 200);
    const SpectralBand* ram_band = nullptr;
    for (const auto& b : low.bands)
        if (b.edge_lo.kind == EdgeKind::ramification) ram_band = &b;
    REQUIRE(ram_band != nullptr);
    CHECK(ram_band->multiplicity == 4);
    const double edge = ram_band->edge_lo.location;
    bool located = false;
    for (const auto& r : find_ramifications(strong, make_box(2, 1, 0, 0.9)))
        if (r.is_real && std::abs(r.location.real() - edge) < 1e-6 * (1 + std::abs(edge))) located = true;
    CHECK(located);
}

TEST_CASE("eigenvalues lie in the closure of the bands and interlace") {
    OperatorSpec spec = mixed_spec();
    const double lo = spectral_lower_bound(spec);
    const double hi = 2e4;
    BandScan s = band_scan(spec, lo, hi, 300);
    for (Parity par : {Parity::periodic, Parity::antiperiodic}) {
        auto eigs = periodic_eigenvalues(spec, 5, par);
        double previous = -1e300;
        int previous_index = -1;
        for (const auto& e : eigs) {
            if (e.location > hi) continue;
            double dist = 1e300;
            for (const auto& b : s.bands)
                dist = std::min(dist, std::max({0.0, b.lo - e.location, e.location - b.hi}));
            CHECK(dist < 1e-6 * (1 + std::abs(e.location)));
            CHECK(e.location >= previous);
            CHECK(e.index >= previous_index);
            previous = e.location;
            previous_index = e.index;
        }
    }
    // bands and gaps tile the scanned range
    std::vector<std::pair<double, double>> pieces;
    for (const auto& b : s.bands) pieces.emplace_back(b.lo, b.hi);
    for (const auto& g : s.gaps) pieces.emplace_back(g.lo, g.hi);
    std::sort(pieces.begin(), pieces.end());
    CHECK(pieces.front().first == doctest::Approx(lo));
    CHECK(pieces.back().second == doctest::Approx(hi));
    for (size_t i = 1; i < pieces.size(); ++i)
        CHECK(std::abs(pieces[i].first - pieces[i - 1].second) < 1e-6 * (1 + std::abs(pieces[i].first)));
}
