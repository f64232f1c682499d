#include "mg/checks.hpp"

#include <algorithm>
#include <cmath>
#include <json.hpp>
#include <stdexcept>

#include "mg/growth.hpp"
#include "mg/rng.hpp"
#include "mg/spectral.hpp"
#include "mg/twist.hpp"

namespace mg {

namespace {

using ordered_json = nlohmann::ordered_json;

GaussianRational gr(std::int64_t re, std::int64_t im) { return {Rational(re), Rational(im)}; }

std::vector<StabilityCondition> a2_charge_list() {
    const Quiver q = quiver_a2();
    return {
        StabilityCondition(q, {gr(0, 1), gr(-1, 1)}),
        StabilityCondition(q, {gr(0, 1), gr(0, 1)}),
        StabilityCondition(q, {gr(0, 2), gr(-3, 1)}),
        StabilityCondition(q, {gr(1, 3), gr(1, 1)}),
        StabilityCondition(q, {gr(-2, 1), gr(-1, 2)}),
    };
}

std::vector<StabilityCondition> a3_charge_list() {
    const Quiver q = quiver_a3();
    return {
        StabilityCondition(q, {gr(0, 1), gr(-1, 1), gr(0, 1)}),
        StabilityCondition(q, {gr(0, 1), gr(0, 1), gr(0, 1)}),
        StabilityCondition(q, {gr(0, 2), gr(-3, 1), gr(1, 1)}),
        StabilityCondition(q, {gr(-1, 1), gr(0, 3), gr(-2, 1)}),
        StabilityCondition(q, {gr(1, 2), gr(0, 1), gr(-1, 3)}),
    };
}

// masses at several t from a single filtration
std::vector<double> masses_at(const StabilityCondition& sigma, const Representation& rep,
                              const std::vector<double>& ts, int cap = kDefaultEnumerationCap) {
    std::vector<double> out(ts.size(), 0.0);
    if (rep.is_zero()) return out;
    const HNFiltration hn = hn_filtration(sigma, rep, cap);
    for (std::size_t k = 0; k < ts.size(); ++k)
        for (std::size_t f = 0; f < hn.length(); ++f)
            out[k] += hn.factor_charges[f].abs() * std::exp(hn.factor_phases[f] * ts[k]);
    return out;
}

struct SuiteBuilder {
    SuiteReport report;

    void add(const std::string& name, bool passed, long long samples, double worst,
             const std::string& note) {
        report.items.push_back(CheckItem{name, passed, samples, worst, note});
    }
};

std::string fmt(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

// ---------------------------------------------------------------------------
// geometry

void suite_geometry(SuiteBuilder& b, std::uint64_t seed, const Corpus& corpus) {
    // triangle inequality for g_t on random charges
    {
        Rng rng(Rng::mix(seed, 1));
        const long long samples = 100000;
        double worst = 1e300;
        std::string note;
        for (long long s = 0; s < samples; ++s) {
            auto draw = [&]() -> std::complex<double> {
                if (rng.below(20) == 0) return {rng.uniform(-3.0, -0.01), 0.0};
                return {rng.uniform(-3.0, 3.0), rng.uniform(1e-6, 3.0)};
            };
            const auto z1 = draw(), z2 = draw();
            const double t = rng.uniform(-3.0, 3.0);
            const double defect = gt_triangle_defect(z1, z2, t);
            if (defect < worst) worst = defect;
        }
        const bool ok = worst >= -1e-12;
        b.add("gt-triangle-defect", ok, samples, worst, ok ? "min defect" : "violated at min defect");
    }

    // monotonicity grid and the limit t/pi of the slope defect function
    {
        const std::vector<double> ts{-2, -1, 0, 1, 2};
        double worst_step = 1e300, worst_limit = 0.0;
        long long samples = 0;
        for (double t : ts) {
            for (int side = 0; side < 2; ++side) {
                const double lo = side == 0 ? -1.0 : 0.0;
                double prev = 0.0;
                for (int k = 0; k < 1000; ++k) {
                    const double x = lo + (k + 1) / 1001.0;
                    const double v = slope_defect_function(x, t);
                    if (k > 0) worst_step = std::min(worst_step, v - prev);
                    prev = v;
                    ++samples;
                }
            }
            const double lim = t / 3.14159265358979323846;
            worst_limit = std::max(worst_limit, std::fabs(slope_defect_function(1e-6, t) - lim));
            worst_limit = std::max(worst_limit, std::fabs(slope_defect_function(-1e-6, t) - lim));
        }
        b.add("slope-defect-monotone", worst_step > 0.0, samples, worst_step, "min grid increment");
        b.add("slope-defect-limit", worst_limit < 1e-4, 2 * static_cast<long long>(ts.size()),
              worst_limit, "max |f(+-1e-6) - t/pi|");
    }

    // left hull geometry on genuine subobject charge sets
    {
        long long samples = 0;
        bool ok = true;
        std::string note = "edges decrease, all points right of the path";
        for (const auto& rep : corpus.reps) {
            const auto& sigma = corpus.charges_for(rep).front();
            std::vector<GaussianRational> charges;
            for (const auto& sub : subrep_enumerate(rep)) charges.push_back(sigma.charge_of(sub.dims()));
            const HNPolygon poly = left_hull(charges, sigma.charge_of(rep.dims));
            for (std::size_t e = 0; ok && e + 1 < poly.edge_count(); ++e)
                ok = cross(poly.edge(e), poly.edge(e + 1)).sign() < 0;
            for (std::size_t e = 0; ok && e < poly.edge_count(); ++e)
                for (const auto& p : charges) {
                    if (cross(poly.edge(e), p - poly.points[e]).sign() > 0) {
                        ok = false;
                        note = "point left of the extremal path";
                        break;
                    }
                }
            ++samples;
            if (!ok) break;
        }
        b.add("left-hull-geometry", ok, samples, 0.0, note);
    }

    // mass_from_factors against g_t and additivity of concatenations
    {
        Rng rng(Rng::mix(seed, 2));
        double worst = 0.0;
        const long long samples = 2000;
        for (long long s = 0; s < samples; ++s) {
            const std::complex<double> z{rng.uniform(-2.0, 2.0), rng.uniform(0.1, 2.0)};
            const int m = static_cast<int>(rng.below(7)) - 3;
            const double t = rng.uniform(-2.0, 2.0);
            const double lhs = mass_from_factors({{z, phase(z) + m}}, t);
            const double rhs = g_t(z, t) * std::exp(m * t);
            worst = std::max(worst, std::fabs(lhs - rhs));

            // two blocks with separated phases concatenate additively
            std::vector<MassFactor> hi{{z, phase(z) + 3}, {z * 0.5, phase(z) + 2.5}};
            std::vector<MassFactor> loFac{{z, phase(z)}, {z * 2.0, phase(z) - 1}};
            std::vector<MassFactor> cat = hi;
            cat.insert(cat.end(), loFac.begin(), loFac.end());
            worst = std::max(worst, std::fabs(mass_from_factors(cat, t) -
                                              mass_from_factors(hi, t) - mass_from_factors(loFac, t)));
        }
        b.add("mass-factor-identities", worst < 1e-9, samples, worst, "max identity defect");
    }

    // polygon monotonicity under charge subsets with the same total
    {
        Rng rng(Rng::mix(seed, 3));
        long long samples = 0;
        bool ok = true;
        for (std::size_t r = 0; r < corpus.reps.size() && ok; r += 2) {
            const auto& rep = corpus.reps[r];
            const auto& sigma = corpus.charges_for(rep).front();
            std::vector<GaussianRational> full;
            for (const auto& sub : subrep_enumerate(rep)) full.push_back(sigma.charge_of(sub.dims()));
            const GaussianRational total = sigma.charge_of(rep.dims);
            const HNPolygon big = left_hull(full, total);
            std::vector<GaussianRational> subset{GaussianRational{}, total};
            for (const auto& p : full)
                if (rng.below(2) == 0) subset.push_back(p);
            const HNPolygon small = left_hull(subset, total);
            for (const auto& v : small.points)
                if (!polygon_contains(big, v)) {
                    ok = false;
                    break;
                }
            ++samples;
        }
        b.add("polygon-monotonicity", ok, samples, 0.0, "subset hull contained in full hull");
    }
}

// ---------------------------------------------------------------------------
// hn

void suite_hn(SuiteBuilder& b, std::uint64_t, const Corpus& corpus) {
    {
        long long samples = 0;
        bool ok = true;
        std::string note = "phases decrease, charges telescope, factors semistable, destabilizer unique";
        for (const auto& rep : corpus.reps) {
            for (const auto& sigma : corpus.charges_for(rep)) {
                try {
                    const HNFiltration hn = hn_filtration(sigma, rep);
                    for (const auto& factor : hn.factors)
                        if (!is_semistable(sigma, factor)) {
                            ok = false;
                            note = "non-semistable HN factor";
                        }
                    if (hn.steps.back().dim() != rep.dim()) {
                        ok = false;
                        note = "final step is not the whole object";
                    }
                } catch (const std::exception& e) {
                    ok = false;
                    note = e.what();
                }
                ++samples;
                if (!ok) break;
            }
            if (!ok) break;
        }
        b.add("hn-invariants", ok, samples, 0.0, note);
    }

    {
        double worst = 0.0;
        long long samples = 0;
        for (const auto& rep : corpus.reps) {
            const StabilityCondition s0 = StabilityCondition::sigma0(rep.quiver);
            for (double t : {-1.0, 0.0, 1.0}) {
                const double expected = static_cast<double>(rep.dim()) * std::exp(0.5 * t);
                worst = std::max(worst, std::fabs(mass(s0, rep, t) - expected) / expected);
                ++samples;
            }
        }
        b.add("sigma0-closed-form", worst <= 1e-12, samples, worst, "max relative error");
    }

    {
        double worst = -1e300;
        long long samples = 0;
        for (const auto& rep : corpus.reps)
            for (const auto& sigma : corpus.charges_for(rep)) {
                const double gap = mass(sigma, rep, 0.0) - sigma.charge_of(rep.dims).abs();
                worst = std::max(worst, -gap);
                ++samples;
            }
        b.add("modulus-below-mass", worst <= 1e-9, samples, worst, "max |Z| - mass excess");
    }

    {
        // sampled support constants over the semistable part of the corpus
        bool ok = true;
        long long samples = 0;
        double worst = 1e300;
        for (const auto& sigma : corpus.a2_charges) {
            std::vector<Representation> semis;
            for (const auto& rep : corpus.reps)
                if (rep.quiver == sigma.quiver() && is_semistable(sigma, rep)) semis.push_back(rep);
            if (semis.empty()) continue;
            const double c = support_constant_sample(sigma, semis);
            worst = std::min(worst, c);
            ok = ok && c > 0.0;
            ++samples;
        }
        b.add("support-sample-positive", ok, samples, worst, "min sampled |Z(E)|/|[E]|");
    }
}

// ---------------------------------------------------------------------------
// polygon

void suite_polygon(SuiteBuilder& b, std::uint64_t, const Corpus& corpus) {
    long long agreements = 0, total = 0;
    for (const auto& rep : corpus.reps)
        for (const auto& sigma : corpus.charges_for(rep)) {
            const PolygonOracle oracle = hn_polygon_oracle(sigma, rep);
            agreements += oracle.agreement ? 1 : 0;
            ++total;
        }
    const bool ok = agreements == total;
    b.add("polygon-oracle-agreement", ok, total, static_cast<double>(agreements),
          ok ? "hull extremal points equal HN charges on every pair"
             : "disagreement between hull and filtration");
}

// ---------------------------------------------------------------------------
// mass-triangle

void suite_mass_triangle(SuiteBuilder& b, std::uint64_t, const Corpus& corpus) {
    const std::vector<double> ts{-1.0, 0.0, 1.0};
    {
        long long ses_count = 0, samples = 0;
        double worst = -1e300;
        for (const auto& rep : corpus.reps) {
            if (rep.dim() < 2) continue;
            const auto seqs = short_exact_sequences(rep);
            ses_count += static_cast<long long>(seqs.size());
            for (const auto& sigma : corpus.charges_for(rep)) {
                const auto mE = masses_at(sigma, rep, ts);
                for (const auto& ses : seqs) {
                    const auto mA = masses_at(sigma, ses.sub_rep, ts);
                    const auto mC = masses_at(sigma, ses.quotient_rep, ts);
                    for (std::size_t k = 0; k < ts.size(); ++k) {
                        worst = std::max(worst, mE[k] - mA[k] - mC[k]);
                        ++samples;
                    }
                }
            }
        }
        const bool ok = ses_count >= 1000 && worst <= 1e-9;
        b.add("mass-triangle", ok, samples, worst,
              "max m(E)-m(A)-m(C) over " + std::to_string(ses_count) + " sequences");
    }

    {
        // refinement when the quotient is semistable of phase one: charges with
        // the relevant simples on the negative real ray
        const StabilityCondition a2_phase1(quiver_a2(), {gr(-1, 1), gr(0, 1)});
        const StabilityCondition a3_phase1(quiver_a3(), {gr(-1, 1), gr(-1, 1), gr(0, 1)});
        long long cases = 0;
        double worst = -1e300;
        bool semistable_ok = true;
        for (const auto& rep : corpus.reps) {
            if (rep.dim() < 2) continue;
            const bool isA2 = rep.quiver.vertex_count() == 2;
            const StabilityCondition& sigma = isA2 ? a2_phase1 : a3_phase1;
            for (const auto& ses : short_exact_sequences(rep)) {
                const DimVector cd = ses.quotient_rep.dims;
                const int last = rep.quiver.vertex_count() - 1;
                if (cd[last] != 0) continue;  // quotient must avoid the non-real charge
                semistable_ok = semistable_ok && is_semistable(sigma, ses.quotient_rep);
                const auto mA = masses_at(sigma, ses.sub_rep, ts);
                const auto mB = masses_at(sigma, rep, ts);
                const auto mC = masses_at(sigma, ses.quotient_rep, ts);
                for (std::size_t k = 0; k < ts.size(); ++k)
                    worst = std::max(worst, mA[k] - mB[k] - std::exp(-ts[k]) * mC[k]);
                ++cases;
            }
        }
        const bool ok = cases >= 50 && semistable_ok && worst <= 1e-9;
        b.add("heart-refinement-phase-one", ok, cases, worst,
              semistable_ok ? "max m(A)-m(B)-e^{-t}m(C)" : "engineered quotient not semistable");
    }
}

// ---------------------------------------------------------------------------
// twist

void suite_twist(SuiteBuilder& b, std::uint64_t seed, const Corpus&) {
    const std::vector<Quiver> quivers{quiver_a2(), quiver_a3(), quiver_kronecker(3)};

    {
        long long samples = 0;
        bool ok = true;
        for (const auto& q : quivers)
            for (int n : {3, 4})
                for (int i = 0; i < q.vertex_count() && ok; ++i)
                    for (int j = 0; j < q.vertex_count() && ok; ++j)
                        for (int k = 0; k <= 50; ++k) {
                            if (!poincare_recursion_check(q, n, i, k, j)) ok = false;
                            ++samples;
                        }
        b.add("recursion-closed-form", ok, samples, 0.0, "telescoped recursion equals the closed form");
    }

    {
        Rng rng(Rng::mix(seed, 11));
        long long samples = 0;
        bool ok = true;
        for (const auto& q : quivers) {
            for (int n : {3, 4}) {
                for (int w = 0; w < 50 && ok; ++w) {
                    TwistWord word;
                    const int len = 1 + static_cast<int>(rng.below(5));
                    for (int g = 0; g < len; ++g) {
                        const int pick = static_cast<int>(rng.below(3));
                        TwistGen gen;
                        if (pick == 2) {
                            gen.kind = GenKind::Shift;
                            gen.shift = static_cast<int>(rng.below(5)) - 2;
                        } else {
                            gen.kind = pick == 0 ? GenKind::Twist : GenKind::InverseTwist;
                            gen.vertex = static_cast<int>(rng.below(q.vertex_count()));
                        }
                        word.gens.push_back(gen);
                    }
                    const IntMatrix m = twist_k_matrix(q, n, word);
                    for (int j = 0; j < q.vertex_count(); ++j) {
                        const GradedClass cls =
                            word_upper_profile(q, n, word, GradedClass::simple(q, j));
                        std::vector<std::int64_t> expected(q.vertex_count(), 0);
                        for (int v = 0; v < q.vertex_count(); ++v) expected[v] = m[v][j];
                        if (cls.k_class() != expected) ok = false;
                        ++samples;
                    }
                }
            }
        }
        b.add("k-consistency", ok, samples, 0.0, "upper profile at u=-1 equals the K-matrix action");
    }

    {
        long long samples = 0;
        bool ok = true;
        double worst = 0.0;
        for (const auto& q : quivers) {
            for (int n : {3, 4, 5}) {
                for (int i = 0; i < q.vertex_count(); ++i) {
                    TwistWord ti{{TwistGen{GenKind::Twist, i, 0}}};
                    TwistWord ti_inv{{TwistGen{GenKind::InverseTwist, i, 0}}};
                    TwistWord both{{ti.gens[0], ti_inv.gens[0]}};
                    TwistWord both_rev{{ti_inv.gens[0], ti.gens[0]}};
                    ok = ok && twist_k_matrix(q, n, both) == int_identity(q.vertex_count());
                    ok = ok && twist_k_matrix(q, n, both_rev) == int_identity(q.vertex_count());
                    if (n % 2 == 1) {
                        const IntMatrix m = twist_k_matrix(q, n, ti);
                        const auto cp = char_poly(m);
                        const std::int64_t det =
                            (q.vertex_count() % 2 == 0 ? 1 : -1) * cp[0];
                        if (det != 1) ok = false;
                    }
                    samples += 2;
                }
            }
        }
        b.add("twist-inverse-and-det", ok, samples, worst,
              "T T' = I and odd-N twists are transvections");
    }

    {
        long long samples = 0;
        double worst = -1e300;
        bool graded_match = true;
        for (const auto& q : quivers) {
            for (int n : {3, 4}) {
                for (int i = 0; i < q.vertex_count(); ++i) {
                    for (int j = 0; j < q.vertex_count(); ++j) {
                        // one step must reproduce the exact profile
                        TwistWord single{{TwistGen{GenKind::Twist, i, 0}}};
                        const GradedClass one =
                            word_upper_profile(q, n, single, GradedClass::simple(q, j));
                        const TwistPowerProfile p1 = twist_power_profile(q, n, i, 1, j);
                        for (int v = 0; v < q.vertex_count(); ++v)
                            if (one.entries[v] != p1.graded.entries[v]) graded_match = false;

                        // iterated words dominate the closed form
                        TwistWord word;
                        for (int k = 1; k <= 12; ++k) {
                            word.gens.push_back(TwistGen{GenKind::Twist, i, 0});
                            const GradedClass cls =
                                word_upper_profile(q, n, word, GradedClass::simple(q, j));
                            const LaurentPoly exact = twist_power_profile(q, n, i, k, j).poincare;
                            for (double t : {-1.0, 0.0, 1.0}) {
                                worst = std::max(worst,
                                                 exact.evaluate(t) - cls.poincare().evaluate(t));
                                ++samples;
                            }
                        }
                    }
                }
            }
        }
        const bool ok = graded_match && worst <= 1e-9;
        b.add("upper-bound-dominates", ok, samples, worst,
              graded_match ? "single twist exact, powers dominated"
                           : "single-twist profile mismatch");
    }
}

// ---------------------------------------------------------------------------
// growth

void suite_growth(SuiteBuilder& b, std::uint64_t seed, const Corpus& corpus) {
    const Quiver a2 = quiver_a2();
    const int n_max = 200;
    const std::vector<double> ts{-1.0, 0.0, 1.0};

    {
        const StabilityCondition s0 = StabilityCondition::sigma0(a2);
        const StabilityCondition s1(a2, {gr(0, 1), gr(-1, 1)});
        double worst = 0.0;
        long long samples = 0;
        bool ok = true;
        for (const auto& sigma : {s0, s1}) {
            for (double t : ts) {
                const double slope =
                    estimate_growth_rate(twist_mass_series(sigma, 3, 0, t, n_max)).slope;
                const double target = std::max(0.0, (1.0 - 3.0) * t);
                const double err = std::fabs(slope - target);
                const double tol = t >= 0.0 ? std::log(n_max + 2.0) / n_max : 0.05;
                worst = std::max(worst, err);
                ok = ok && err <= tol;
                ++samples;
            }
        }
        b.add("twist-entropy-anchor", ok, samples, worst, "max |slope - max(0,(1-N)t)|");
    }

    {
        const StabilityCondition s0 = StabilityCondition::sigma0(a2);
        double worst = 0.0;
        for (double t : ts) {
            const GrowthEstimate est = estimate_growth_rate(twist_mass_series(s0, 3, 0, t, n_max));
            worst = std::max(worst, est.method_gap);
        }
        b.add("method-agreement", worst < 0.01, static_cast<long long>(ts.size()), worst,
              "max |regression - increment|");
    }

    {
        // spectral lower bound and upper estimate sandwich the mass growth
        long long samples = 0;
        bool ok = true;
        double worst = -1e300;
        for (const auto& q : {quiver_a2(), quiver_a3(), quiver_kronecker(3)}) {
            const StabilityCondition s0 = StabilityCondition::sigma0(q);
            for (int i = 0; i < q.vertex_count(); ++i) {
                TwistWord word{{TwistGen{GenKind::Twist, i, 0}}};
                const double log_rho =
                    std::log(spectral_radius(twist_k_matrix(q, 3, word)).value);
                const double h0 =
                    estimate_growth_rate(twist_mass_series(s0, 3, i, 0.0, 120)).slope;
                worst = std::max(worst, log_rho - h0 - 0.05);
                ok = ok && log_rho <= h0 + 0.05;
                for (double t : ts) {
                    const double ht =
                        estimate_growth_rate(twist_mass_series(s0, 3, i, t, 120)).slope;
                    const double upper =
                        estimate_growth_rate([&] {
                            GrowthSeries s;
                            const auto vals = upper_profile_series(q, 3, word, t, 120);
                            for (int n = 0; n < static_cast<int>(vals.size()); ++n)
                                s.samples.emplace_back(n, vals[n]);
                            return s;
                        }()).slope;
                    worst = std::max(worst, ht - upper - 0.05);
                    ok = ok && ht <= upper + 0.05;
                    ++samples;
                }
            }
        }
        b.add("sandwich-single-generator", ok, samples, worst, "bound slack (negative = satisfied)");
    }

    {
        double worst = -1e300;
        long long samples = 0;
        for (const auto& rep : corpus.reps)
            for (const auto& sigma : corpus.charges_for(rep))
                for (double t : ts) {
                    const DeltaBounds db = delta_bounds(sigma, rep, t);
                    worst = std::max(worst, db.lower - db.upper);
                    ++samples;
                }
        b.add("delta-bounds-corpus", worst <= 1e-9, samples, worst, "max lower - upper");
    }

    {
        bool ok = true;
        double worst = 0.0;
        for (double t : ts) {
            const DeformationCheck dc = deformation_invariance_check(3, 0, t, a2_charge_list(), n_max);
            ok = ok && dc.pass;
            worst = std::max(worst, dc.max_gap);
        }
        b.add("deformation-invariance", ok, static_cast<long long>(ts.size()), worst,
              "max pairwise slope gap, tolerance 0.02");
    }

    {
        Rng rng(Rng::mix(seed, 21));
        long long samples = 0;
        bool ok = true;
        const Quiver q = quiver_a3();
        for (int w = 0; w < 40 && ok; ++w) {
            auto random_word = [&](int len) {
                TwistWord word;
                for (int g = 0; g < len; ++g) {
                    TwistGen gen;
                    const int pick = static_cast<int>(rng.below(3));
                    if (pick == 2) {
                        gen.kind = GenKind::Shift;
                        gen.shift = static_cast<int>(rng.below(3)) - 1;
                    } else {
                        gen.kind = pick == 0 ? GenKind::Twist : GenKind::InverseTwist;
                        gen.vertex = static_cast<int>(rng.below(q.vertex_count()));
                    }
                    word.gens.push_back(gen);
                }
                return word;
            };
            const TwistWord w1 = random_word(1 + static_cast<int>(rng.below(3)));
            const TwistWord w2 = random_word(1 + static_cast<int>(rng.below(3)));
            TwistWord cat = w1;
            cat.gens.insert(cat.gens.end(), w2.gens.begin(), w2.gens.end());
            ok = twist_k_matrix(q, 3, cat) ==
                 int_mat_mul(twist_k_matrix(q, 3, w1), twist_k_matrix(q, 3, w2));
            ++samples;
        }
        b.add("k-multiplicativity", ok, samples, 0.0, "K-matrix of a concatenation factors");
    }

    {
        double worst = 0.0;
        bool ok = true;
        ok = ok && spectral_radius(int_identity(3)).value == 1.0;
        ok = ok && spectral_radius(IntMatrix{{1, 1}, {0, 1}}).value == 1.0;
        const TwistWord word{{TwistGen{GenKind::Twist, 0, 0}, TwistGen{GenKind::Twist, 1, 0}}};
        const double rho = spectral_radius(twist_k_matrix(quiver_kronecker(3), 3, word)).value;
        const double expected = (7.0 + std::sqrt(45.0)) / 2.0;
        worst = std::fabs(rho - expected);
        ok = ok && worst <= 1e-10;
        b.add("spectral-examples", ok, 3, worst, "unipotent, identity and Kronecker word radii");
    }
}

}  // namespace

const std::vector<StabilityCondition>& Corpus::charges_for(const Representation& rep) const {
    if (rep.quiver.vertex_count() == 2) return a2_charges;
    return a3_charges;
}

Corpus build_corpus(std::uint64_t seed, int count_per_quiver, int max_total_dim) {
    Corpus corpus;
    corpus.a2_charges = a2_charge_list();
    corpus.a3_charges = a3_charge_list();

    const Quiver a2 = quiver_a2();
    const Quiver a3 = quiver_a3();
    Rng rng(Rng::mix(seed, 0));
    auto sample_dims = [&](int n) {
        while (true) {
            DimVector d(n);
            std::int64_t total = 0;
            for (int v = 0; v < n; ++v) {
                d[v] = static_cast<std::int64_t>(rng.below(4));
                total += d[v];
            }
            if (total >= 1 && total <= max_total_dim) return d;
        }
    };
    for (int k = 0; k < count_per_quiver; ++k)
        corpus.reps.push_back(random_rep(a2, 2, sample_dims(2), Rng::mix(seed, 100 + k)));
    for (int k = 0; k < count_per_quiver; ++k)
        corpus.reps.push_back(random_rep(a3, 2, sample_dims(3), Rng::mix(seed, 10000 + k)));
    return corpus;
}

bool known_suite(const std::string& name) {
    return name == "geometry" || name == "hn" || name == "polygon" || name == "mass-triangle" ||
           name == "twist" || name == "growth" || name == "all";
}

SuiteReport run_suite(const std::string& name, std::uint64_t seed) {
    if (!known_suite(name)) throw std::invalid_argument("unknown suite '" + name + "'");

    SuiteBuilder builder;
    builder.report.suite = name;
    builder.report.seed = seed;

    const Corpus corpus = build_corpus(seed);
    if (name == "geometry" || name == "all") suite_geometry(builder, seed, corpus);
    if (name == "hn" || name == "all") suite_hn(builder, seed, corpus);
    if (name == "polygon" || name == "all") suite_polygon(builder, seed, corpus);
    if (name == "mass-triangle" || name == "all") suite_mass_triangle(builder, seed, corpus);
    if (name == "twist" || name == "all") suite_twist(builder, seed, corpus);
    if (name == "growth" || name == "all") suite_growth(builder, seed, corpus);

    builder.report.passed = true;
    for (const auto& item : builder.report.items) builder.report.passed &= item.passed;
    return builder.report;
}

std::string SuiteReport::to_json() const {
    ordered_json j;
    j["suite"] = suite;
    j["seed"] = seed;
    j["passed"] = passed;
    j["checks"] = ordered_json::array();
    for (const auto& item : items) {
        ordered_json c;
        c["name"] = item.name;
        c["passed"] = item.passed;
        c["samples"] = item.samples;
        c["worst"] = fmt(item.worst);
        c["note"] = item.note;
        j["checks"].push_back(c);
    }
    return j.dump(2) + "\n";
}

}  // namespace mg
