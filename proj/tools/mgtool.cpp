// mgtool: command-line front end over the massgrowth C API.
//
// Subcommands: hn, mass, polygon, growth, spectral, twist-orbit, check.
// Configuration is a single JSON file; charges are exact rationals as
// [num, den] pairs (no floats in inputs). Reports go to stdout; --out writes
// them, plus CSV series and SVG polygons, into a directory.
//
// Exit codes: 0 ok, 1 property violation, 2 usage or config error.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "massgrowth.h"

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct CliError {
    int code;
    std::string message;
};

[[noreturn]] void die(int code, const std::string& message) { throw CliError{code, message}; }

[[noreturn]] void die_api(mg_status st, const std::string& context) {
    die(kExitUsage, context + ": " + mg_last_error() + " (status " + std::to_string(st) + ")");
}

void check_api(mg_status st, const std::string& context) {
    if (st != MG_OK) die_api(st, context);
}

std::string fmt_double(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

// unique_ptr-style guards for the C handles
struct QuiverHandle {
    mg_quiver* ptr = nullptr;
    ~QuiverHandle() { mg_quiver_free(ptr); }
};
struct ChargeHandle {
    mg_charge* ptr = nullptr;
    ChargeHandle() = default;
    ChargeHandle(ChargeHandle&& o) noexcept : ptr(o.ptr) { o.ptr = nullptr; }
    ChargeHandle& operator=(ChargeHandle&& o) noexcept {
        std::swap(ptr, o.ptr);
        return *this;
    }
    ChargeHandle(const ChargeHandle&) = delete;
    ~ChargeHandle() { mg_charge_free(ptr); }
};
struct RepHandle {
    mg_rep* ptr = nullptr;
    ~RepHandle() { mg_rep_free(ptr); }
};

std::string take_string(char* s) {
    std::string out = s ? s : "";
    mg_string_free(s);
    return out;
}

struct Config {
    ordered_json raw;
    QuiverHandle quiver;
    int n = 0;
    int field = 2;
    int cy_n = 3;
    int n_max = 200;
    std::uint64_t seed = 42;
    int cap = 8;
    std::string word;
    std::vector<double> t_grid{0.0};
    std::vector<ChargeHandle> charges;
    RepHandle rep;  // optional; ptr stays null when absent
};

std::int64_t json_int(const ordered_json& j, const std::string& where) {
    if (!j.is_number_integer()) die(kExitUsage, "config: " + where + " must be an integer");
    return j.get<std::int64_t>();
}

std::pair<std::int64_t, std::int64_t> json_rational(const ordered_json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2)
        die(kExitUsage, "config: " + where + " must be a [num, den] pair");
    return {json_int(j[0], where + "[0]"), json_int(j[1], where + "[1]")};
}

Config load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) die(kExitUsage, "cannot open config file '" + path + "'");
    Config cfg;
    try {
        cfg.raw = ordered_json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        die(kExitUsage, std::string("config: ") + e.what());
    }

    if (!cfg.raw.contains("quiver")) die(kExitUsage, "config: missing 'quiver'");
    const auto& qj = cfg.raw["quiver"];
    if (!qj.is_array() || qj.empty()) die(kExitUsage, "config: 'quiver' must be a square matrix");
    cfg.n = static_cast<int>(qj.size());
    std::vector<std::int64_t> adj;
    for (int i = 0; i < cfg.n; ++i) {
        if (!qj[i].is_array() || static_cast<int>(qj[i].size()) != cfg.n)
            die(kExitUsage, "config: 'quiver' must be a square matrix");
        for (int j = 0; j < cfg.n; ++j) adj.push_back(json_int(qj[i][j], "quiver entry"));
    }
    check_api(mg_quiver_create(cfg.n, adj.data(), &cfg.quiver.ptr), "quiver");

    if (cfg.raw.contains("field")) cfg.field = static_cast<int>(json_int(cfg.raw["field"], "field"));
    if (cfg.raw.contains("cy_dimension"))
        cfg.cy_n = static_cast<int>(json_int(cfg.raw["cy_dimension"], "cy_dimension"));
    if (cfg.raw.contains("n_max")) cfg.n_max = static_cast<int>(json_int(cfg.raw["n_max"], "n_max"));
    if (cfg.raw.contains("seed"))
        cfg.seed = static_cast<std::uint64_t>(json_int(cfg.raw["seed"], "seed"));
    if (cfg.raw.contains("cap")) cfg.cap = static_cast<int>(json_int(cfg.raw["cap"], "cap"));
    if (cfg.raw.contains("word")) {
        if (!cfg.raw["word"].is_string()) die(kExitUsage, "config: 'word' must be a string");
        cfg.word = cfg.raw["word"].get<std::string>();
    }

    if (cfg.raw.contains("t_grid")) {
        cfg.t_grid.clear();
        for (std::size_t k = 0; k < cfg.raw["t_grid"].size(); ++k) {
            const auto [num, den] = json_rational(cfg.raw["t_grid"][k], "t_grid entry");
            if (den == 0) die(kExitUsage, "config: t_grid denominator is zero");
            cfg.t_grid.push_back(static_cast<double>(num) / static_cast<double>(den));
        }
        if (cfg.t_grid.empty()) die(kExitUsage, "config: t_grid is empty");
    }

    if (cfg.raw.contains("charges")) {
        const auto& cj = cfg.raw["charges"];
        if (!cj.is_array() || cj.empty()) die(kExitUsage, "config: 'charges' must be a nonempty list");
        for (std::size_t c = 0; c < cj.size(); ++c) {
            const auto& one = cj[c];
            if (!one.is_array() || static_cast<int>(one.size()) != cfg.n)
                die(kExitUsage, "config: charge " + std::to_string(c) + " must list " +
                                    std::to_string(cfg.n) + " entries");
            std::vector<std::int64_t> rn(cfg.n), rd(cfg.n), in_(cfg.n), id(cfg.n);
            for (int v = 0; v < cfg.n; ++v) {
                const auto& entry = one[v];
                if (!entry.contains("re") || !entry.contains("im"))
                    die(kExitUsage, "config: charge entries need 're' and 'im' rational pairs");
                std::tie(rn[v], rd[v]) = json_rational(entry["re"], "charge re");
                std::tie(in_[v], id[v]) = json_rational(entry["im"], "charge im");
            }
            ChargeHandle handle;
            check_api(mg_charge_create(cfg.quiver.ptr, rn.data(), rd.data(), in_.data(), id.data(),
                                       &handle.ptr),
                      "charge " + std::to_string(c));
            cfg.charges.push_back(std::move(handle));
        }
    }

    if (cfg.raw.contains("rep")) {
        const auto& rj = cfg.raw["rep"];
        if (!rj.contains("dims") || !rj["dims"].is_array() ||
            static_cast<int>(rj["dims"].size()) != cfg.n)
            die(kExitUsage, "config: rep.dims must list one dimension per vertex");
        std::vector<std::int32_t> dims(cfg.n);
        for (int v = 0; v < cfg.n; ++v)
            dims[v] = static_cast<std::int32_t>(json_int(rj["dims"][v], "rep.dims entry"));
        if (rj.contains("maps")) {
            std::vector<std::uint8_t> flat;
            if (!rj["maps"].is_array()) die(kExitUsage, "config: rep.maps must be a list of matrices");
            for (const auto& mat : rj["maps"])
                for (const auto& row : mat)
                    for (const auto& e : row) {
                        const std::int64_t v = json_int(e, "rep.maps entry");
                        if (v < 0 || v >= cfg.field)
                            die(kExitUsage, "config: rep.maps entries must be reduced mod the field");
                        flat.push_back(static_cast<std::uint8_t>(v));
                    }
            check_api(mg_rep_create(cfg.quiver.ptr, cfg.field, dims.data(), flat.data(), flat.size(),
                                    &cfg.rep.ptr),
                      "rep");
        } else {
            const std::uint64_t seed = rj.contains("seed")
                                           ? static_cast<std::uint64_t>(json_int(rj["seed"], "rep.seed"))
                                           : cfg.seed;
            check_api(mg_rep_random(cfg.quiver.ptr, cfg.field, dims.data(), seed, cfg.cap,
                                    &cfg.rep.ptr),
                      "rep");
        }
    }
    return cfg;
}

void apply_t_override(Config& cfg, const std::string& t_list) {
    if (t_list.empty()) return;
    cfg.t_grid.clear();
    std::string normalized = t_list;
    for (char& ch : normalized)
        if (ch == ',') ch = ' ';
    std::istringstream in(normalized);
    std::string tok;
    while (in >> tok) {
        try {
            cfg.t_grid.push_back(std::stod(tok));
        } catch (const std::exception&) {
            die(kExitUsage, "--t: cannot parse '" + tok + "'");
        }
    }
    if (cfg.t_grid.empty()) die(kExitUsage, "--t: empty list");
}

void write_file(const std::string& dir, const std::string& name, const std::string& content) {
    std::filesystem::create_directories(dir);
    const std::string path = dir + "/" + name;
    std::ofstream out(path, std::ios::binary);
    if (!out) die(kExitUsage, "cannot write '" + path + "'");
    out << content;
}

std::string series_csv(const std::vector<double>& values) {
    std::string csv = "n,value,log_value\n";
    char buf[96];
    for (std::size_t n = 0; n < values.size(); ++n) {
        std::snprintf(buf, sizeof buf, "%zu,%.17g,%.17g\n", n, values[n], std::log(values[n]));
        csv += buf;
    }
    return csv;
}

// single-generator words unlock the exact series and the closed form
std::optional<int> single_twist_vertex(const std::string& word) {
    std::istringstream in(word);
    std::string tok;
    if (!(in >> tok)) return std::nullopt;
    std::string rest;
    if (in >> rest) return std::nullopt;
    if (tok.size() < 2 || tok[0] != 'T' || tok.back() == '\'') return std::nullopt;
    int v = 0;
    for (std::size_t i = 1; i < tok.size(); ++i) {
        if (tok[i] < '0' || tok[i] > '9') return std::nullopt;
        v = v * 10 + (tok[i] - '0');
    }
    return v - 1;
}

const ChargeHandle& primary_charge(const Config& cfg, const std::string& cmd) {
    if (cfg.charges.empty()) die(kExitUsage, "config: '" + cmd + "' needs at least one charge");
    return cfg.charges.front();
}

const RepHandle& required_rep(const Config& cfg, const std::string& cmd) {
    if (!cfg.rep.ptr) die(kExitUsage, "config: '" + cmd + "' needs a 'rep' block");
    return cfg.rep;
}

void emit(const std::string& report, const std::string& out_dir, const std::string& file_name) {
    std::cout << report;
    if (!out_dir.empty()) write_file(out_dir, file_name, report);
}

// ---------------------------------------------------------------------------

int cmd_hn(Config& cfg, const std::string& out_dir) {
    const auto& charge = primary_charge(cfg, "hn");
    const auto& rep = required_rep(cfg, "hn");
    char* json = nullptr;
    check_api(mg_hn_json(charge.ptr, rep.ptr, cfg.t_grid.data(), cfg.t_grid.size(), cfg.cap, &json),
              "hn");
    emit(take_string(json), out_dir, "hn.json");
    return 0;
}

int cmd_mass(Config& cfg, const std::string& out_dir) {
    const auto& charge = primary_charge(cfg, "mass");
    const auto& rep = required_rep(cfg, "mass");
    ordered_json j;
    std::vector<std::int32_t> dims(cfg.n);
    check_api(mg_rep_dims(rep.ptr, dims.data()), "mass");
    j["dims"] = dims;
    ordered_json masses = ordered_json::object();
    for (double t : cfg.t_grid) {
        double m = 0.0;
        check_api(mg_mass(charge.ptr, rep.ptr, t, cfg.cap, &m), "mass");
        masses[fmt_double(t)] = fmt_double(m);
    }
    j["mass"] = masses;
    emit(j.dump(2) + "\n", out_dir, "mass.json");
    return 0;
}

std::uint64_t splitmix(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// corpus mode: seeded representations on the configured quiver, every charge,
// agreement rate must be 100%
int cmd_polygon_corpus(Config& cfg, const std::string& out_dir, bool svg) {
    const auto& corpus_cfg = cfg.raw["corpus"];
    const int count = corpus_cfg.contains("count")
                          ? static_cast<int>(json_int(corpus_cfg["count"], "corpus.count"))
                          : 200;
    const std::int64_t max_total =
        corpus_cfg.contains("max_total_dim")
            ? json_int(corpus_cfg["max_total_dim"], "corpus.max_total_dim")
            : 6;
    if (cfg.charges.empty()) die(kExitUsage, "config: 'polygon' needs charges");

    long long agreements = 0, pairs = 0;
    std::uint64_t state = cfg.seed;
    for (int k = 0; k < count; ++k) {
        std::vector<std::int32_t> dims(cfg.n);
        while (true) {
            std::int64_t total = 0;
            for (int v = 0; v < cfg.n; ++v) {
                dims[v] = static_cast<std::int32_t>(splitmix(state) % 4);
                total += dims[v];
            }
            if (total >= 1 && total <= max_total) break;
        }
        RepHandle rep;
        check_api(mg_rep_random(cfg.quiver.ptr, cfg.field, dims.data(), splitmix(state), cfg.cap,
                                &rep.ptr),
                  "polygon corpus rep");
        for (const auto& charge : cfg.charges) {
            std::int32_t agreement = 0;
            check_api(mg_polygon_oracle(charge.ptr, rep.ptr, cfg.cap, &agreement, nullptr),
                      "polygon corpus oracle");
            agreements += agreement;
            ++pairs;
        }
        if (svg && k == 0) {
            char* svg_text = nullptr;
            check_api(mg_polygon_svg(cfg.charges.front().ptr, rep.ptr, cfg.cap, &svg_text),
                      "polygon svg");
            write_file(out_dir.empty() ? "." : out_dir, "polygon.svg", take_string(svg_text));
        }
    }
    ordered_json j;
    j["corpus_count"] = count;
    j["pairs"] = pairs;
    j["agreements"] = agreements;
    j["agreement_rate"] = fmt_double(static_cast<double>(agreements) / static_cast<double>(pairs));
    emit(j.dump(2) + "\n", out_dir, "polygon.json");
    return agreements == pairs ? 0 : kExitViolation;
}

int cmd_polygon(Config& cfg, const std::string& out_dir, bool svg) {
    if (!cfg.rep.ptr && cfg.raw.contains("corpus")) return cmd_polygon_corpus(cfg, out_dir, svg);
    const auto& charge = primary_charge(cfg, "polygon");
    const auto& rep = required_rep(cfg, "polygon");
    std::int32_t agreement = 0;
    char* json = nullptr;
    check_api(mg_polygon_oracle(charge.ptr, rep.ptr, cfg.cap, &agreement, &json), "polygon");
    emit(take_string(json), out_dir, "polygon.json");
    if (svg) {
        char* svg_text = nullptr;
        check_api(mg_polygon_svg(charge.ptr, rep.ptr, cfg.cap, &svg_text), "polygon svg");
        write_file(out_dir.empty() ? "." : out_dir, "polygon.svg", take_string(svg_text));
    }
    return agreement ? 0 : kExitViolation;
}

int cmd_growth(Config& cfg, const std::string& out_dir) {
    if (cfg.word.empty()) die(kExitUsage, "config: 'growth' needs a 'word'");
    const auto& charge = primary_charge(cfg, "growth");
    const std::optional<int> vertex = single_twist_vertex(cfg.word);

    ordered_json rows = ordered_json::array();
    for (std::size_t k = 0; k < cfg.t_grid.size(); ++k) {
        const double t = cfg.t_grid[k];
        ordered_json row;
        row["t"] = fmt_double(t);

        std::vector<double> values(static_cast<std::size_t>(cfg.n_max) + 1, 0.0);
        if (vertex) {
            row["mode"] = "exact";
            check_api(mg_twist_mass_series(charge.ptr, cfg.cy_n, *vertex, t, cfg.n_max, values.data()),
                      "growth series");
        } else {
            row["mode"] = "bounds-only";
            row["notice"] = "general word: no-cancellation upper bound series";
            check_api(mg_upper_profile_series(cfg.quiver.ptr, cfg.cy_n, cfg.word.c_str(), t, cfg.n_max,
                                              values.data()),
                      "growth series");
        }

        double slope_reg = 0.0, slope_inc = 0.0, resvar = 0.0;
        check_api(mg_estimate_growth(values.data(), values.size(), &slope_reg, &slope_inc, &resvar),
                  "growth estimate");
        row["slope_regression"] = fmt_double(slope_reg);
        row["slope_increment"] = fmt_double(slope_inc);

        if (t == 0.0) {
            std::vector<std::int64_t> km(static_cast<std::size_t>(cfg.n) * cfg.n, 0);
            check_api(mg_twist_k_matrix(cfg.quiver.ptr, cfg.cy_n, cfg.word.c_str(), km.data()),
                      "growth k-matrix");
            double rho = 0.0;
            std::int32_t exact_rho = 0;
            check_api(mg_spectral_radius(cfg.n, km.data(), &rho, &exact_rho), "growth spectral");
            row["lower_log_rho"] = fmt_double(std::log(rho));
        } else {
            row["lower_log_rho"] = nullptr;
        }

        if (vertex) {
            double h = 0.0;
            check_api(mg_entropy_twist_power(cfg.quiver.ptr, cfg.cy_n, t, &h), "growth exact");
            row["exact"] = fmt_double(h);
        } else {
            row["exact"] = nullptr;
        }

        std::vector<double> upper(static_cast<std::size_t>(cfg.n_max) + 1, 0.0);
        check_api(mg_upper_profile_series(cfg.quiver.ptr, cfg.cy_n, cfg.word.c_str(), t, cfg.n_max,
                                          upper.data()),
                  "growth upper series");
        double up_reg = 0.0, up_inc = 0.0, up_var = 0.0;
        check_api(mg_estimate_growth(upper.data(), upper.size(), &up_reg, &up_inc, &up_var),
                  "growth upper estimate");
        row["upper_bound"] = fmt_double(up_reg);
        ordered_json diag;
        diag["method_gap"] = fmt_double(std::fabs(slope_reg - slope_inc));
        diag["residual_variance"] = fmt_double(resvar);
        row["diagnostics"] = diag;
        rows.push_back(row);

        if (!out_dir.empty())
            write_file(out_dir, "growth_t" + std::to_string(k) + ".csv", series_csv(values));
    }

    ordered_json j;
    j["word"] = cfg.word;
    j["n_max"] = cfg.n_max;
    j["rows"] = rows;
    emit(j.dump(2) + "\n", out_dir, "growth.json");
    return 0;
}

int cmd_spectral(Config& cfg, const std::string& out_dir) {
    if (cfg.word.empty()) die(kExitUsage, "config: 'spectral' needs a 'word'");
    const auto& charge = primary_charge(cfg, "spectral");
    char* json = nullptr;
    check_api(mg_spectral_bound_report_json(cfg.quiver.ptr, cfg.cy_n, cfg.word.c_str(), charge.ptr,
                                            cfg.n_max, &json),
              "spectral");
    emit(take_string(json), out_dir, "spectral.json");
    return 0;
}

int cmd_twist_orbit(Config& cfg, const std::string& out_dir) {
    if (cfg.word.empty()) die(kExitUsage, "config: 'twist-orbit' needs a 'word'");
    const std::optional<int> vertex = single_twist_vertex(cfg.word);
    ordered_json j;
    j["word"] = cfg.word;
    j["n_max"] = cfg.n_max;
    bool pass = true;

    if (vertex) {
        if (cfg.charges.empty()) die(kExitUsage, "config: 'twist-orbit' needs charges");
        j["mode"] = "exact";
        ordered_json rows = ordered_json::array();
        std::vector<const mg_charge*> raw;
        for (const auto& c : cfg.charges) raw.push_back(c.ptr);
        for (std::size_t k = 0; k < cfg.t_grid.size(); ++k) {
            const double t = cfg.t_grid[k];
            char* row_json = nullptr;
            check_api(mg_deformation_check_json(cfg.cy_n, *vertex, t, raw.data(), raw.size(),
                                                cfg.n_max, 0.02, &row_json),
                      "twist-orbit");
            ordered_json row = ordered_json::parse(take_string(row_json));
            pass = pass && row["pass"].get<bool>();
            rows.push_back(row);

            if (!out_dir.empty()) {
                std::vector<double> values(static_cast<std::size_t>(cfg.n_max) + 1, 0.0);
                check_api(mg_twist_mass_series(cfg.charges.front().ptr, cfg.cy_n, *vertex, t,
                                               cfg.n_max, values.data()),
                          "twist-orbit series");
                write_file(out_dir, "orbit_t" + std::to_string(k) + ".csv", series_csv(values));
            }
        }
        j["deformation"] = rows;
    } else {
        j["mode"] = "bounds-only";
        j["notice"] = "general word: charge-independent upper bound series";
        ordered_json rows = ordered_json::array();
        for (std::size_t k = 0; k < cfg.t_grid.size(); ++k) {
            const double t = cfg.t_grid[k];
            std::vector<double> values(static_cast<std::size_t>(cfg.n_max) + 1, 0.0);
            check_api(mg_upper_profile_series(cfg.quiver.ptr, cfg.cy_n, cfg.word.c_str(), t, cfg.n_max,
                                              values.data()),
                      "twist-orbit");
            double slope_reg = 0.0, slope_inc = 0.0, resvar = 0.0;
            check_api(mg_estimate_growth(values.data(), values.size(), &slope_reg, &slope_inc, &resvar),
                      "twist-orbit estimate");
            ordered_json row;
            row["t"] = fmt_double(t);
            row["upper_slope_regression"] = fmt_double(slope_reg);
            row["upper_slope_increment"] = fmt_double(slope_inc);
            rows.push_back(row);
            if (!out_dir.empty())
                write_file(out_dir, "orbit_t" + std::to_string(k) + ".csv", series_csv(values));
        }
        j["upper"] = rows;
    }

    j["pass"] = pass;
    emit(j.dump(2) + "\n", out_dir, "twist_orbit.json");
    return pass ? 0 : kExitViolation;
}

int cmd_check(const std::string& suite, std::uint64_t seed, const std::string& out_dir) {
    std::int32_t passed = 0;
    char* json = nullptr;
    const mg_status st = mg_check_suite(suite.c_str(), seed, &passed, &json);
    if (st == MG_ERR_PARSE) die(kExitUsage, std::string("check: ") + mg_last_error());
    check_api(st, "check");
    emit(take_string(json), out_dir, "check_" + suite + ".json");
    return passed ? 0 : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"mass growth toolkit for quiver stability conditions"};
    app.require_subcommand(1);

    std::string config_path, t_list, out_dir, suite;
    int nmax_override = -1;
    std::int64_t seed_override = -1;
    bool svg = false;

    auto add_common = [&](CLI::App* cmd, bool needs_config) {
        auto* opt = cmd->add_option("--config", config_path, "configuration JSON file");
        if (needs_config) opt->required();
        cmd->add_option("--t", t_list, "override the t grid, e.g. \"-1,0,1\"");
        cmd->add_option("--nmax", nmax_override, "override n_max");
        cmd->add_option("--seed", seed_override, "override the seed");
        cmd->add_option("--out", out_dir, "directory for report, CSV and SVG files");
    };

    CLI::App* hn = app.add_subcommand("hn", "Harder-Narasimhan filtration of a representation");
    add_common(hn, true);
    CLI::App* massc = app.add_subcommand("mass", "masses over the t grid");
    add_common(massc, true);
    CLI::App* polygon = app.add_subcommand("polygon", "HN polygon oracle and optional SVG");
    add_common(polygon, true);
    polygon->add_flag("--svg", svg, "write polygon.svg");
    CLI::App* growth = app.add_subcommand("growth", "mass growth series and entropy report");
    add_common(growth, true);
    CLI::App* spectral = app.add_subcommand("spectral", "spectral radius bounds for a twist word");
    add_common(spectral, true);
    CLI::App* orbit = app.add_subcommand("twist-orbit", "orbit series across all configured charges");
    add_common(orbit, true);
    CLI::App* check = app.add_subcommand("check", "run an invariant suite");
    check->add_option("suite", suite, "geometry|hn|polygon|mass-triangle|twist|growth|all")
        ->required();
    add_common(check, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (check->parsed()) {
            const std::uint64_t seed = seed_override >= 0 ? static_cast<std::uint64_t>(seed_override) : 42;
            return cmd_check(suite, seed, out_dir);
        }

        Config cfg = load_config(config_path);
        apply_t_override(cfg, t_list);
        if (nmax_override >= 0) cfg.n_max = nmax_override;
        if (seed_override >= 0) cfg.seed = static_cast<std::uint64_t>(seed_override);

        if (hn->parsed()) return cmd_hn(cfg, out_dir);
        if (massc->parsed()) return cmd_mass(cfg, out_dir);
        if (polygon->parsed()) return cmd_polygon(cfg, out_dir, svg);
        if (growth->parsed()) return cmd_growth(cfg, out_dir);
        if (spectral->parsed()) return cmd_spectral(cfg, out_dir);
        if (orbit->parsed()) return cmd_twist_orbit(cfg, out_dir);
        die(kExitUsage, "no subcommand");
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
