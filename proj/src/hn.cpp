#include "mg/hn.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mg {

StabilityCondition::StabilityCondition(Quiver quiver, std::vector<GaussianRational> z)
    : quiver_(std::move(quiver)), z_(std::move(z)) {
    if (static_cast<int>(z_.size()) != quiver_.vertex_count())
        throw std::invalid_argument("stability condition: one charge per vertex expected");
    for (const auto& zi : z_)
        if (!zi.in_upper_half())
            throw std::domain_error("stability condition: charge outside the semi-closed upper half-plane");
}

StabilityCondition StabilityCondition::sigma0(const Quiver& quiver) {
    std::vector<GaussianRational> z(quiver.vertex_count(), GaussianRational{Rational(0), Rational(1)});
    return StabilityCondition(quiver, std::move(z));
}

GaussianRational StabilityCondition::charge_of(const DimVector& d) const {
    if (d.size() != z_.size()) throw std::invalid_argument("charge_of: dimension vector length mismatch");
    GaussianRational acc;
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (d[i] < 0) throw std::invalid_argument("charge_of: negative dimension");
        if (d[i] != 0) acc = acc + z_[i].scale(Rational(d[i]));
    }
    return acc;
}

double StabilityCondition::phase_of(const DimVector& d) const { return phase(charge_of(d)); }

bool is_semistable(const StabilityCondition& sigma, const Representation& rep, int cap) {
    if (rep.is_zero()) throw std::invalid_argument("is_semistable: zero representation");
    const GaussianRational z_total = sigma.charge_of(rep.dims);
    for (const Subrep& sub : subrep_enumerate(rep, cap)) {
        if (sub.is_zero()) continue;
        if (phase_less(z_total, sigma.charge_of(sub.dims()))) return false;
    }
    return true;
}

namespace {

// the unique subobject of maximal phase and, among those, maximal dimension
const Subrep* maximal_destabilizer(const StabilityCondition& sigma, const std::vector<Subrep>& subs) {
    const Subrep* best = nullptr;
    GaussianRational best_charge;
    std::int64_t best_dim = -1;
    bool tie = false;
    for (const Subrep& sub : subs) {
        if (sub.is_zero()) continue;
        const GaussianRational zc = sigma.charge_of(sub.dims());
        if (best == nullptr || phase_less(best_charge, zc)) {
            best = &sub;
            best_charge = zc;
            best_dim = sub.dim();
            tie = false;
        } else if (phase_equal(best_charge, zc)) {
            if (sub.dim() > best_dim) {
                best = &sub;
                best_charge = zc;
                best_dim = sub.dim();
                tie = false;
            } else if (sub.dim() == best_dim) {
                tie = true;
            }
        }
    }
    if (best == nullptr) throw std::logic_error("maximal_destabilizer: no nonzero subobject");
    if (tie)
        throw std::logic_error(
            "internal consistency failure: maximal destabilizing subobject is not unique");
    return best;
}

}  // namespace

HNFiltration hn_filtration(const StabilityCondition& sigma, const Representation& rep, int cap) {
    if (rep.is_zero()) throw std::invalid_argument("hn_filtration: zero representation");
    if (sigma.quiver() != rep.quiver)
        throw std::invalid_argument("hn_filtration: stability condition and representation quivers differ");

    HNFiltration out;
    Representation q = rep;
    std::vector<FpMat> proj;
    proj.reserve(rep.dims.size());
    for (auto d : rep.dims) proj.push_back(FpMat::identity(static_cast<int>(d), rep.p));

    while (true) {
        const auto subs = subrep_enumerate(q, cap);
        const Subrep* a = maximal_destabilizer(sigma, subs);
        const GaussianRational zc = sigma.charge_of(a->dims());
        out.factors.push_back(restrict_to(q, *a));
        out.factor_charges.push_back(zc);
        out.factor_phases.push_back(phase(zc));
        out.steps.push_back(preimage(rep, proj, *a));
        if (a->dim() == q.dim()) break;
        QuotientData qd = quotient(q, *a);
        for (std::size_t v = 0; v < proj.size(); ++v) proj[v] = mat_mul(qd.proj[v], proj[v]);
        q = std::move(qd.rep);
    }

    // invariants of the construction, checked exactly
    GaussianRational telescoped;
    for (std::size_t i = 0; i < out.factor_charges.size(); ++i) {
        telescoped = telescoped + out.factor_charges[i];
        if (i > 0 && cross(out.factor_charges[i], out.factor_charges[i - 1]).sign() <= 0)
            throw std::logic_error("hn_filtration: factor phases fail to strictly decrease");
    }
    if (telescoped != sigma.charge_of(rep.dims))
        throw std::logic_error("hn_filtration: factor charges do not telescope to Z(E)");
    return out;
}

double mass(const StabilityCondition& sigma, const Representation& rep, double t, int cap) {
    if (rep.is_zero()) return 0.0;
    const HNFiltration hn = hn_filtration(sigma, rep, cap);
    double m = 0.0;
    for (std::size_t i = 0; i < hn.factors.size(); ++i)
        m += hn.factor_charges[i].abs() * std::exp(hn.factor_phases[i] * t);
    return m;
}

double mass_semisimple(const StabilityCondition& sigma, const DimVector& multiplicities, double t) {
    const int n = sigma.quiver().vertex_count();
    if (static_cast<int>(multiplicities.size()) != n)
        throw std::invalid_argument("mass_semisimple: multiplicity length mismatch");
    std::vector<int> verts;
    for (int i = 0; i < n; ++i) {
        if (multiplicities[i] < 0) throw std::invalid_argument("mass_semisimple: negative multiplicity");
        if (multiplicities[i] > 0) verts.push_back(i);
    }
    std::sort(verts.begin(), verts.end(), [&](int a, int b) {
        return phase_less(sigma.charges()[b], sigma.charges()[a]);  // decreasing phase
    });
    double m = 0.0;
    std::size_t i = 0;
    while (i < verts.size()) {
        GaussianRational zc = sigma.charges()[verts[i]].scale(Rational(multiplicities[verts[i]]));
        std::size_t j = i + 1;
        while (j < verts.size() && phase_equal(sigma.charges()[verts[i]], sigma.charges()[verts[j]])) {
            zc = zc + sigma.charges()[verts[j]].scale(Rational(multiplicities[verts[j]]));
            ++j;
        }
        m += zc.abs() * std::exp(phase(zc) * t);
        i = j;
    }
    return m;
}

PolygonOracle hn_polygon_oracle(const StabilityCondition& sigma, const Representation& rep, int cap) {
    if (rep.is_zero()) throw std::invalid_argument("hn_polygon_oracle: zero representation");
    std::vector<GaussianRational> charges;
    for (const Subrep& sub : subrep_enumerate(rep, cap)) charges.push_back(sigma.charge_of(sub.dims()));

    PolygonOracle out;
    out.hull = left_hull(charges, sigma.charge_of(rep.dims));

    const HNFiltration hn = hn_filtration(sigma, rep, cap);
    out.hn_points.push_back(GaussianRational{});
    GaussianRational acc;
    for (const auto& zc : hn.factor_charges) {
        acc = acc + zc;
        out.hn_points.push_back(acc);
    }
    out.agreement = out.hull.points == out.hn_points;
    return out;
}

std::int64_t ProfileEntry::dim(const Quiver& quiver) const {
    if (module) return module->dim();
    if (static_cast<int>(simple_multiplicities.size()) != quiver.vertex_count())
        throw std::invalid_argument("profile entry: multiplicity length mismatch");
    return total_dim(simple_multiplicities);
}

std::int64_t CohomologyProfile::dim_at(int degree, const Quiver& quiver) const {
    for (const auto& e : entries)
        if (e.degree == degree) return e.dim(quiver);
    return 0;
}

double mass_of_complex(const StabilityCondition& sigma, const CohomologyProfile& profile, double t,
                       int cap) {
    for (std::size_t i = 0; i < profile.entries.size(); ++i)
        for (std::size_t j = i + 1; j < profile.entries.size(); ++j)
            if (profile.entries[i].degree == profile.entries[j].degree)
                throw std::invalid_argument("mass_of_complex: duplicate cohomological degree");
    double m = 0.0;
    for (const auto& entry : profile.entries) {
        const double factor = std::exp(-static_cast<double>(entry.degree) * t);
        if (entry.module)
            m += mass(sigma, *entry.module, t, cap) * factor;
        else
            m += mass_semisimple(sigma, entry.simple_multiplicities, t) * factor;
    }
    return m;
}

double support_constant_sample(const StabilityCondition& sigma,
                               const std::vector<Representation>& semistables, Norm norm) {
    if (semistables.empty()) throw std::invalid_argument("support_constant_sample: empty corpus");
    double best = 0.0;
    bool first = true;
    for (const auto& rep : semistables) {
        if (rep.is_zero()) throw std::invalid_argument("support_constant_sample: zero object in corpus");
        double nrm = 0.0;
        for (auto d : rep.dims) {
            const double x = static_cast<double>(d);
            switch (norm) {
                case Norm::Euclidean: nrm += x * x; break;
                case Norm::L1: nrm += std::fabs(x); break;
                case Norm::Linf: nrm = std::max(nrm, std::fabs(x)); break;
            }
        }
        if (norm == Norm::Euclidean) nrm = std::sqrt(nrm);
        const double ratio = sigma.charge_of(rep.dims).abs() / nrm;
        best = first ? ratio : std::min(best, ratio);
        first = false;
    }
    return best;
}

StabDistanceSample stab_distance_sample(const StabilityCondition& sigma, const StabilityCondition& tau,
                                        const std::vector<Representation>& corpus, double t, int cap) {
    if (corpus.empty()) throw std::invalid_argument("stab_distance_sample: empty corpus");
    StabDistanceSample out{0.0, 0.0, 0.0, 0.0};
    bool first = true;
    for (const auto& rep : corpus) {
        const HNFiltration hs = hn_filtration(sigma, rep, cap);
        const HNFiltration ht = hn_filtration(tau, rep, cap);
        const double plus = std::fabs(hs.factor_phases.front() - ht.factor_phases.front());
        const double minus = std::fabs(hs.factor_phases.back() - ht.factor_phases.back());
        out.phase_gap = std::max({out.phase_gap, plus, minus});

        if (hs.length() == 1) {  // sigma-semistable
            const GaussianRational z = sigma.charge_of(rep.dims);
            const GaussianRational w = tau.charge_of(rep.dims);
            out.charge_gap = std::max(out.charge_gap, (z - w).abs() / z.abs());
        }

        double ms = 0.0, mt = 0.0;
        for (std::size_t i = 0; i < hs.length(); ++i)
            ms += hs.factor_charges[i].abs() * std::exp(hs.factor_phases[i] * t);
        for (std::size_t i = 0; i < ht.length(); ++i)
            mt += ht.factor_charges[i].abs() * std::exp(ht.factor_phases[i] * t);
        const double ratio = ms / mt;
        out.ratio_min = first ? ratio : std::min(out.ratio_min, ratio);
        out.ratio_max = first ? ratio : std::max(out.ratio_max, ratio);
        first = false;
    }
    return out;
}

}  // namespace mg
