#include "massgrowth.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <json.hpp>
#include <string>

#include "mg/checks.hpp"
#include "mg/growth.hpp"
#include "mg/hn.hpp"
#include "mg/rep.hpp"
#include "mg/spectral.hpp"
#include "mg/twist.hpp"

using ordered_json = nlohmann::ordered_json;

struct mg_quiver {
    mg::Quiver value;
};
struct mg_charge {
    mg::StabilityCondition value;
};
struct mg_rep {
    mg::Representation value;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

mg_status fail(mg_status code, const char* what) {
    g_last_error = what;
    return code;
}

// exceptions from the core, translated to status codes
template <typename Fn>
mg_status guard(Fn&& fn) {
    try {
        fn();
        return MG_OK;
    } catch (const std::overflow_error& e) {
        return fail(MG_ERR_OVERFLOW, e.what());
    } catch (const std::domain_error& e) {
        return fail(MG_ERR_DOMAIN, e.what());
    } catch (const std::invalid_argument& e) {
        const std::string msg = e.what();
        if (msg.find("cap exceeded") != std::string::npos) return fail(MG_ERR_CAP_EXCEEDED, e.what());
        if (msg.find("word:") == 0 || msg.find("unknown suite") == 0)
            return fail(MG_ERR_PARSE, e.what());
        return fail(MG_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::logic_error& e) {
        return fail(MG_ERR_INTERNAL, e.what());
    } catch (const std::exception& e) {
        return fail(MG_ERR_INTERNAL, e.what());
    }
}

mg_status require(bool cond, const char* what) {
    return cond ? MG_OK : fail(MG_ERR_INVALID_ARGUMENT, what);
}

std::string fmt_double(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

ordered_json estimate_json(const mg::GrowthEstimate& est) {
    ordered_json j;
    j["slope_regression"] = fmt_double(est.slope_regression);
    j["slope_increment"] = fmt_double(est.slope_increment);
    j["method_gap"] = fmt_double(est.method_gap);
    j["residual_variance"] = fmt_double(est.residual_variance);
    j["tail_window"] = ordered_json::array({est.tail_begin, est.tail_end});
    return j;
}

ordered_json profile_json(const mg::CohomologyProfile& profile, const mg::LaurentPoly& poincare) {
    ordered_json j;
    j["entries"] = ordered_json::array();
    for (const auto& entry : profile.entries) {
        ordered_json e;
        e["degree"] = entry.degree;
        if (entry.module) {
            e["module_dims"] = entry.module->dims;
        } else {
            e["simple_multiplicities"] = entry.simple_multiplicities;
        }
        j["entries"].push_back(e);
    }
    ordered_json coeffs = ordered_json::object();
    for (const auto& [deg, c] : poincare.coeffs()) coeffs[std::to_string(deg)] = c;
    j["poincare"] = coeffs;
    return j;
}

}  // namespace

extern "C" {

const char* mg_version(void) { return "0.1.0"; }

const char* mg_last_error(void) { return g_last_error.c_str(); }

void mg_string_free(char* s) { std::free(s); }

mg_status mg_quiver_create(int32_t n, const int64_t* adjacency, mg_quiver** out) {
    if (auto st = require(adjacency && out && n > 0, "mg_quiver_create: bad arguments")) return st;
    return guard([&] {
        std::vector<std::vector<std::int64_t>> adj(n, std::vector<std::int64_t>(n));
        for (int32_t i = 0; i < n; ++i)
            for (int32_t j = 0; j < n; ++j) adj[i][j] = adjacency[i * n + j];
        *out = new mg_quiver{mg::Quiver::validate(adj)};
    });
}

void mg_quiver_free(mg_quiver* q) { delete q; }

int32_t mg_quiver_vertex_count(const mg_quiver* q) { return q ? q->value.vertex_count() : 0; }

mg_status mg_quiver_euler_matrix(const mg_quiver* q, int32_t cy_n, int64_t* out) {
    if (auto st = require(q && out, "mg_quiver_euler_matrix: bad arguments")) return st;
    return guard([&] {
        const auto chi = mg::cyn_euler_matrix(q->value, cy_n);
        const int n = q->value.vertex_count();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) out[i * n + j] = chi[i][j];
    });
}

mg_status mg_charge_create(const mg_quiver* q, const int64_t* re_num, const int64_t* re_den,
                           const int64_t* im_num, const int64_t* im_den, mg_charge** out) {
    if (auto st = require(q && re_num && re_den && im_num && im_den && out,
                          "mg_charge_create: bad arguments"))
        return st;
    return guard([&] {
        std::vector<mg::GaussianRational> z;
        for (int i = 0; i < q->value.vertex_count(); ++i)
            z.push_back({mg::Rational(re_num[i], re_den[i]), mg::Rational(im_num[i], im_den[i])});
        *out = new mg_charge{mg::StabilityCondition(q->value, std::move(z))};
    });
}

mg_status mg_charge_sigma0(const mg_quiver* q, mg_charge** out) {
    if (auto st = require(q && out, "mg_charge_sigma0: bad arguments")) return st;
    return guard([&] { *out = new mg_charge{mg::StabilityCondition::sigma0(q->value)}; });
}

void mg_charge_free(mg_charge* c) { delete c; }

mg_status mg_rep_create(const mg_quiver* q, int32_t p, const int32_t* dims, const uint8_t* maps,
                        size_t maps_len, mg_rep** out) {
    if (auto st = require(q && dims && out, "mg_rep_create: bad arguments")) return st;
    return guard([&] {
        mg::DimVector d(q->value.vertex_count());
        for (int v = 0; v < q->value.vertex_count(); ++v) d[v] = dims[v];
        std::vector<mg::FpMat> ms;
        std::size_t offset = 0;
        for (const auto& arrow : q->value.arrows()) {
            mg::FpMat m(static_cast<int>(d[arrow.dst]), static_cast<int>(d[arrow.src]), p);
            const std::size_t need = static_cast<std::size_t>(m.rows()) * m.cols();
            if (offset + need > maps_len)
                throw std::invalid_argument("mg_rep_create: arrow matrix buffer too short");
            for (int r = 0; r < m.rows(); ++r)
                for (int c = 0; c < m.cols(); ++c) m.set(r, c, maps[offset + r * m.cols() + c]);
            offset += need;
            ms.push_back(std::move(m));
        }
        if (offset != maps_len)
            throw std::invalid_argument("mg_rep_create: arrow matrix buffer length mismatch");
        *out = new mg_rep{mg::make_rep(q->value, p, d, ms)};
    });
}

mg_status mg_rep_random(const mg_quiver* q, int32_t p, const int32_t* dims, uint64_t seed,
                        int32_t cap, mg_rep** out) {
    if (auto st = require(q && dims && out, "mg_rep_random: bad arguments")) return st;
    return guard([&] {
        mg::DimVector d(q->value.vertex_count());
        for (int v = 0; v < q->value.vertex_count(); ++v) d[v] = dims[v];
        *out = new mg_rep{mg::random_rep(q->value, p, d, seed, cap)};
    });
}

mg_status mg_rep_universal_extension(const mg_quiver* q, int32_t p, int32_t i, int32_t j,
                                     mg_rep** out) {
    if (auto st = require(q && out, "mg_rep_universal_extension: bad arguments")) return st;
    return guard([&] { *out = new mg_rep{mg::universal_extension(q->value, p, i, j)}; });
}

void mg_rep_free(mg_rep* r) { delete r; }

mg_status mg_rep_dims(const mg_rep* r, int32_t* out) {
    if (auto st = require(r && out, "mg_rep_dims: bad arguments")) return st;
    for (std::size_t v = 0; v < r->value.dims.size(); ++v) out[v] = static_cast<int32_t>(r->value.dims[v]);
    return MG_OK;
}

mg_status mg_rep_subrep_count(const mg_rep* r, int32_t cap, int64_t* out) {
    if (auto st = require(r && out, "mg_rep_subrep_count: bad arguments")) return st;
    return guard([&] { *out = static_cast<int64_t>(mg::subrep_enumerate(r->value, cap).size()); });
}

mg_status mg_rep_json(const mg_rep* r, char** json_out) {
    if (auto st = require(r && json_out, "mg_rep_json: bad arguments")) return st;
    return guard([&] {
        ordered_json j;
        j["dims"] = r->value.dims;
        j["field"] = r->value.p;
        j["maps"] = ordered_json::array();
        for (const auto& m : r->value.maps) {
            ordered_json rows = ordered_json::array();
            for (int row = 0; row < m.rows(); ++row) {
                ordered_json cols = ordered_json::array();
                for (int col = 0; col < m.cols(); ++col) cols.push_back(m.at(row, col));
                rows.push_back(cols);
            }
            j["maps"].push_back(rows);
        }
        *json_out = dup_string(j.dump(2) + "\n");
    });
}

mg_status mg_is_semistable(const mg_charge* c, const mg_rep* r, int32_t cap, int32_t* out) {
    if (auto st = require(c && r && out, "mg_is_semistable: bad arguments")) return st;
    return guard([&] { *out = mg::is_semistable(c->value, r->value, cap) ? 1 : 0; });
}

mg_status mg_mass(const mg_charge* c, const mg_rep* r, double t, int32_t cap, double* out) {
    if (auto st = require(c && r && out, "mg_mass: bad arguments")) return st;
    return guard([&] { *out = mg::mass(c->value, r->value, t, cap); });
}

mg_status mg_hn_json(const mg_charge* c, const mg_rep* r, const double* ts, size_t n_ts, int32_t cap,
                     char** json_out) {
    if (auto st = require(c && r && json_out && (ts || n_ts == 0), "mg_hn_json: bad arguments"))
        return st;
    return guard([&] {
        ordered_json j;
        j["dims"] = r->value.dims;
        j["steps"] = ordered_json::array();
        j["factors"] = ordered_json::array();
        ordered_json mass_obj = ordered_json::object();
        if (r->value.is_zero()) {
            for (size_t k = 0; k < n_ts; ++k) mass_obj[fmt_double(ts[k])] = fmt_double(0.0);
        } else {
            const mg::HNFiltration hn = mg::hn_filtration(c->value, r->value, cap);
            mg::GaussianRational acc;
            for (std::size_t s = 0; s < hn.length(); ++s) {
                acc = acc + hn.factor_charges[s];
                ordered_json step;
                step["dims"] = hn.steps[s].dims();
                step["charge"] = ordered_json::array({acc.re.str(), acc.im.str()});
                j["steps"].push_back(step);

                ordered_json factor;
                factor["dims"] = hn.factors[s].dims;
                factor["charge"] =
                    ordered_json::array({hn.factor_charges[s].re.str(), hn.factor_charges[s].im.str()});
                factor["phase"] = fmt_double(hn.factor_phases[s]);
                factor["charge_abs"] = fmt_double(hn.factor_charges[s].abs());
                j["factors"].push_back(factor);
            }
            for (size_t k = 0; k < n_ts; ++k) {
                double m = 0.0;
                for (std::size_t s = 0; s < hn.length(); ++s)
                    m += hn.factor_charges[s].abs() * std::exp(hn.factor_phases[s] * ts[k]);
                mass_obj[fmt_double(ts[k])] = fmt_double(m);
            }
        }
        j["mass"] = mass_obj;
        *json_out = dup_string(j.dump(2) + "\n");
    });
}

mg_status mg_polygon_oracle(const mg_charge* c, const mg_rep* r, int32_t cap, int32_t* agreement,
                            char** json_out) {
    if (auto st = require(c && r && agreement, "mg_polygon_oracle: bad arguments")) return st;
    return guard([&] {
        const mg::PolygonOracle oracle = mg::hn_polygon_oracle(c->value, r->value, cap);
        *agreement = oracle.agreement ? 1 : 0;
        if (json_out) {
            ordered_json j;
            j["agreement"] = oracle.agreement;
            j["hull"] = ordered_json::array();
            for (const auto& p : oracle.hull.points)
                j["hull"].push_back(ordered_json::array({p.re.str(), p.im.str()}));
            j["hn_points"] = ordered_json::array();
            for (const auto& p : oracle.hn_points)
                j["hn_points"].push_back(ordered_json::array({p.re.str(), p.im.str()}));
            *json_out = dup_string(j.dump(2) + "\n");
        }
    });
}

mg_status mg_polygon_svg(const mg_charge* c, const mg_rep* r, int32_t cap, char** svg_out) {
    if (auto st = require(c && r && svg_out, "mg_polygon_svg: bad arguments")) return st;
    return guard([&] {
        std::vector<mg::GaussianRational> charges;
        for (const auto& sub : mg::subrep_enumerate(r->value, cap))
            charges.push_back(c->value.charge_of(sub.dims()));
        const mg::HNPolygon hull = mg::left_hull(charges, c->value.charge_of(r->value.dims));
        *svg_out = dup_string(mg::polygon_svg(hull, charges));
    });
}

mg_status mg_twist_k_matrix(const mg_quiver* q, int32_t cy_n, const char* word, int64_t* out) {
    if (auto st = require(q && word && out, "mg_twist_k_matrix: bad arguments")) return st;
    return guard([&] {
        const mg::TwistWord w = mg::parse_word(word, q->value.vertex_count());
        const mg::IntMatrix m = mg::twist_k_matrix(q->value, cy_n, w);
        const int n = q->value.vertex_count();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) out[i * n + j] = m[i][j];
    });
}

mg_status mg_twist_power_profile_json(const mg_quiver* q, int32_t cy_n, int32_t i, int32_t k,
                                      int32_t j, char** json_out) {
    if (auto st = require(q && json_out, "mg_twist_power_profile_json: bad arguments")) return st;
    return guard([&] {
        const mg::TwistPowerProfile prof = mg::twist_power_profile(q->value, cy_n, i, k, j);
        ordered_json doc = profile_json(prof.profile, prof.poincare);
        doc["poincare_at_0"] = fmt_double(prof.poincare.evaluate(0.0));
        *json_out = dup_string(doc.dump(2) + "\n");
    });
}

mg_status mg_word_upper_profile_json(const mg_quiver* q, int32_t cy_n, const char* word,
                                     char** json_out) {
    if (auto st = require(q && word && json_out, "mg_word_upper_profile_json: bad arguments"))
        return st;
    return guard([&] {
        const mg::TwistWord w = mg::parse_word(word, q->value.vertex_count());
        const mg::GradedClass cls =
            mg::word_upper_profile(q->value, cy_n, w, mg::GradedClass::generator(q->value));
        ordered_json j;
        j["word"] = mg::word_to_string(w);
        j["entries"] = ordered_json::array();
        for (const auto& entry : cls.entries) {
            ordered_json coeffs = ordered_json::object();
            for (const auto& [deg, cc] : entry.coeffs()) coeffs[std::to_string(deg)] = cc;
            j["entries"].push_back(coeffs);
        }
        j["k_class"] = cls.k_class();
        const mg::LaurentPoly poincare = cls.poincare();
        ordered_json coeffs = ordered_json::object();
        for (const auto& [deg, cc] : poincare.coeffs()) coeffs[std::to_string(deg)] = cc;
        j["poincare"] = coeffs;
        *json_out = dup_string(j.dump(2) + "\n");
    });
}

mg_status mg_char_poly(int32_t n, const int64_t* matrix, int64_t* coeffs_ascending) {
    if (auto st = require(matrix && coeffs_ascending && n > 0, "mg_char_poly: bad arguments"))
        return st;
    return guard([&] {
        mg::IntMatrix m(n, std::vector<std::int64_t>(n));
        for (int32_t i = 0; i < n; ++i)
            for (int32_t j = 0; j < n; ++j) m[i][j] = matrix[i * n + j];
        const auto coeffs = mg::char_poly(m);
        for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs_ascending[i] = coeffs[i];
    });
}

mg_status mg_spectral_radius(int32_t n, const int64_t* matrix, double* value, int32_t* exact) {
    if (auto st = require(matrix && value && n > 0, "mg_spectral_radius: bad arguments")) return st;
    return guard([&] {
        mg::IntMatrix m(n, std::vector<std::int64_t>(n));
        for (int32_t i = 0; i < n; ++i)
            for (int32_t j = 0; j < n; ++j) m[i][j] = matrix[i * n + j];
        const mg::SpectralRadius sr = mg::spectral_radius(m);
        *value = sr.value;
        if (exact) *exact = sr.exact ? 1 : 0;
    });
}

mg_status mg_twist_mass_series(const mg_charge* c, int32_t cy_n, int32_t i, double t, int32_t n_max,
                               double* out) {
    if (auto st = require(c && out, "mg_twist_mass_series: bad arguments")) return st;
    return guard([&] {
        const mg::GrowthSeries s = mg::twist_mass_series(c->value, cy_n, i, t, n_max);
        for (const auto& [n, v] : s.samples) out[n] = v;
    });
}

mg_status mg_upper_profile_series(const mg_quiver* q, int32_t cy_n, const char* word, double t,
                                  int32_t n_max, double* out) {
    if (auto st = require(q && word && out, "mg_upper_profile_series: bad arguments")) return st;
    return guard([&] {
        const mg::TwistWord w = mg::parse_word(word, q->value.vertex_count());
        const auto values = mg::upper_profile_series(q->value, cy_n, w, t, n_max);
        for (std::size_t n = 0; n < values.size(); ++n) out[n] = values[n];
    });
}

mg_status mg_estimate_growth(const double* values, size_t count, double* slope_regression,
                             double* slope_increment, double* residual_variance) {
    if (auto st = require(values && slope_regression, "mg_estimate_growth: bad arguments")) return st;
    return guard([&] {
        mg::GrowthSeries s;
        for (size_t n = 0; n < count; ++n) s.samples.emplace_back(static_cast<int>(n), values[n]);
        const mg::GrowthEstimate est = mg::estimate_growth_rate(s);
        *slope_regression = est.slope_regression;
        if (slope_increment) *slope_increment = est.slope_increment;
        if (residual_variance) *residual_variance = est.residual_variance;
    });
}

mg_status mg_entropy_twist_power(const mg_quiver* q, int32_t cy_n, double t, double* out) {
    if (auto st = require(q && out, "mg_entropy_twist_power: bad arguments")) return st;
    return guard([&] { *out = mg::entropy_twist_power(q->value, cy_n, t); });
}

mg_status mg_spectral_bound_report_json(const mg_quiver* q, int32_t cy_n, const char* word,
                                        const mg_charge* c, int32_t n_max, char** json_out) {
    if (auto st = require(q && word && c && json_out, "mg_spectral_bound_report_json: bad arguments"))
        return st;
    return guard([&] {
        const mg::TwistWord w = mg::parse_word(word, q->value.vertex_count());
        const mg::EntropyReport report =
            mg::spectral_bound_report(q->value, cy_n, w, c->value, n_max);
        ordered_json j;
        j["word"] = mg::word_to_string(w);
        j["lower_log_rho"] = fmt_double(report.lower_log_rho);
        j["spectral_exact"] = report.spectral_exact;
        if (report.exact)
            j["exact"] = fmt_double(*report.exact);
        else
            j["exact"] = nullptr;
        j["upper_bound"] = fmt_double(report.upper_bound);
        j["upper_estimate"] = estimate_json(report.upper_estimate);
        if (report.mass_growth) j["mass_growth"] = estimate_json(*report.mass_growth);
        *json_out = dup_string(j.dump(2) + "\n");
    });
}

mg_status mg_delta_bounds(const mg_charge* c, const mg_rep* r, double t, int32_t cap, double* lower,
                          double* upper) {
    if (auto st = require(c && r && lower && upper, "mg_delta_bounds: bad arguments")) return st;
    return guard([&] {
        const mg::DeltaBounds db = mg::delta_bounds(c->value, r->value, t, cap);
        *lower = db.lower;
        *upper = db.upper;
    });
}

mg_status mg_deformation_check_json(int32_t cy_n, int32_t i, double t, const mg_charge* const* charges,
                                    size_t n_charges, int32_t n_max, double tolerance,
                                    char** json_out) {
    if (auto st =
            require(charges && n_charges > 0 && json_out, "mg_deformation_check_json: bad arguments"))
        return st;
    return guard([&] {
        std::vector<mg::StabilityCondition> sigmas;
        for (size_t k = 0; k < n_charges; ++k) {
            if (!charges[k]) throw std::invalid_argument("mg_deformation_check_json: null charge");
            sigmas.push_back(charges[k]->value);
        }
        const mg::DeformationCheck dc =
            mg::deformation_invariance_check(cy_n, i, t, sigmas, n_max, tolerance);
        ordered_json j;
        j["pass"] = dc.pass;
        j["t"] = fmt_double(t);
        j["tolerance"] = fmt_double(dc.tolerance);
        j["max_gap"] = fmt_double(dc.max_gap);
        j["slopes"] = ordered_json::array();
        for (double s : dc.slopes) j["slopes"].push_back(fmt_double(s));
        *json_out = dup_string(j.dump(2) + "\n");
    });
}

mg_status mg_check_suite(const char* suite, uint64_t seed, int32_t* passed, char** json_out) {
    if (auto st = require(suite && passed, "mg_check_suite: bad arguments")) return st;
    return guard([&] {
        const mg::SuiteReport report = mg::run_suite(suite, seed);
        *passed = report.passed ? 1 : 0;
        if (json_out) *json_out = dup_string(report.to_json());
    });
}

}  // extern "C"
