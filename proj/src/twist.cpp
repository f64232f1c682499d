#include "mg/twist.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace mg {

bool TwistWord::pure_shift() const {
    if (gens.empty()) return false;
    for (const auto& g : gens)
        if (g.kind != GenKind::Shift) return false;
    return true;
}

int TwistWord::total_shift() const {
    int m = 0;
    for (const auto& g : gens)
        if (g.kind == GenKind::Shift) m += g.shift;
    return m;
}

TwistWord parse_word(const std::string& text, int vertex_count) {
    TwistWord word;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        TwistGen gen;
        if (tok.size() >= 2 && tok[0] == 'T') {
            std::size_t end = tok.size();
            if (tok.back() == '\'') {
                gen.kind = GenKind::InverseTwist;
                --end;
            } else {
                gen.kind = GenKind::Twist;
            }
            if (end < 2) throw std::invalid_argument("word: malformed token '" + tok + "'");
            int v = 0;
            for (std::size_t i = 1; i < end; ++i) {
                if (tok[i] < '0' || tok[i] > '9')
                    throw std::invalid_argument("word: malformed token '" + tok + "'");
                v = v * 10 + (tok[i] - '0');
            }
            if (v < 1 || v > vertex_count)
                throw std::invalid_argument("word: vertex " + std::to_string(v) + " out of range");
            gen.vertex = v - 1;
        } else if (tok.size() >= 4 && tok[0] == 'S' && tok[1] == '[' && tok.back() == ']') {
            bool neg = false;
            std::size_t i = 2;
            if (tok[i] == '-') {
                neg = true;
                ++i;
            }
            if (i + 1 > tok.size() - 1) throw std::invalid_argument("word: malformed token '" + tok + "'");
            int m = 0;
            for (; i + 1 < tok.size(); ++i) {
                if (tok[i] < '0' || tok[i] > '9')
                    throw std::invalid_argument("word: malformed token '" + tok + "'");
                m = m * 10 + (tok[i] - '0');
            }
            gen.kind = GenKind::Shift;
            gen.shift = neg ? -m : m;
        } else {
            throw std::invalid_argument("word: malformed token '" + tok + "'");
        }
        word.gens.push_back(gen);
    }
    return word;
}

std::string word_to_string(const TwistWord& word) {
    std::string s;
    for (const auto& g : word.gens) {
        if (!s.empty()) s += ' ';
        switch (g.kind) {
            case GenKind::Twist: s += "T" + std::to_string(g.vertex + 1); break;
            case GenKind::InverseTwist: s += "T" + std::to_string(g.vertex + 1) + "'"; break;
            case GenKind::Shift: s += "S[" + std::to_string(g.shift) + "]"; break;
        }
    }
    return s;
}

IntMatrix int_identity(int n) {
    IntMatrix m(n, std::vector<std::int64_t>(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IntMatrix int_mat_mul(const IntMatrix& a, const IntMatrix& b) {
    const int n = static_cast<int>(a.size());
    const int k = static_cast<int>(b.size());
    const int m = k > 0 ? static_cast<int>(b[0].size()) : 0;
    IntMatrix r(n, std::vector<std::int64_t>(m, 0));
    for (int i = 0; i < n; ++i)
        for (int l = 0; l < k; ++l) {
            if (a[i][l] == 0) continue;
            for (int j = 0; j < m; ++j)
                r[i][j] = checked_add(r[i][j], checked_mul(a[i][l], b[l][j]));
        }
    return r;
}

std::vector<std::int64_t> int_mat_apply(const IntMatrix& a, const std::vector<std::int64_t>& v) {
    std::vector<std::int64_t> r(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
            r[i] = checked_add(r[i], checked_mul(a[i][j], v[j]));
    return r;
}

namespace {

void check_vertex(const Quiver& quiver, int v, const char* what) {
    if (v < 0 || v >= quiver.vertex_count())
        throw std::invalid_argument(std::string(what) + ": vertex out of range");
}

IntMatrix generator_k_matrix(const Quiver& quiver, int cy_n, const TwistGen& gen) {
    const int n = quiver.vertex_count();
    if (gen.kind == GenKind::Shift) {
        IntMatrix m = int_identity(n);
        if (gen.shift % 2 != 0)
            for (int i = 0; i < n; ++i) m[i][i] = -1;
        return m;
    }
    check_vertex(quiver, gen.vertex, "twist_k_matrix");
    const auto chi = cyn_euler_matrix(quiver, cy_n);
    IntMatrix m = int_identity(n);
    // twist: I - e_i chi_i; inverse via Sherman-Morrison, which stays integral
    // because chi_ii = 1 + (-1)^N
    const std::int64_t sign = (gen.kind == GenKind::Twist) ? 1 : ((cy_n % 2 == 0) ? 1 : -1);
    for (int j = 0; j < n; ++j) m[gen.vertex][j] -= sign * chi[gen.vertex][j];
    return m;
}

}  // namespace

IntMatrix twist_k_matrix(const Quiver& quiver, int cy_n, const TwistWord& word) {
    require_cy_dimension(cy_n);
    IntMatrix acc = int_identity(quiver.vertex_count());
    for (const auto& gen : word.gens) acc = int_mat_mul(acc, generator_k_matrix(quiver, cy_n, gen));
    return acc;
}

GradedClass GradedClass::simple(const Quiver& quiver, int j) {
    check_vertex(quiver, j, "GradedClass::simple");
    GradedClass c;
    c.entries.assign(quiver.vertex_count(), LaurentPoly{});
    c.entries[j] = LaurentPoly::constant(1);
    return c;
}

GradedClass GradedClass::generator(const Quiver& quiver) {
    GradedClass c;
    c.entries.assign(quiver.vertex_count(), LaurentPoly::constant(1));
    return c;
}

LaurentPoly GradedClass::poincare() const {
    LaurentPoly p;
    for (const auto& e : entries) p = p + e;
    return p;
}

std::vector<std::int64_t> GradedClass::k_class() const {
    std::vector<std::int64_t> v;
    v.reserve(entries.size());
    for (const auto& e : entries) v.push_back(e.evaluate_at_minus_one());
    return v;
}

bool GradedClass::nonnegative() const {
    for (const auto& e : entries)
        if (!e.nonnegative()) return false;
    return true;
}

TwistPowerProfile twist_power_profile(const Quiver& quiver, int cy_n, int i, int k, int j, int p) {
    require_cy_dimension(cy_n);
    check_vertex(quiver, i, "twist_power_profile");
    check_vertex(quiver, j, "twist_power_profile");
    if (k < 0) throw std::invalid_argument("twist_power_profile: negative powers are out of scope");

    const int n = quiver.vertex_count();
    TwistPowerProfile out;
    out.graded.entries.assign(n, LaurentPoly{});

    auto add_simples = [&](int vertex, std::int64_t mult, int degree) {
        DimVector m(n, 0);
        m[vertex] = mult;
        out.profile.entries.push_back(ProfileEntry{degree, std::nullopt, m});
        out.graded.entries[vertex] = out.graded.entries[vertex] + LaurentPoly::monomial(mult, degree);
    };

    if (k == 0) {
        add_simples(j, 1, 0);
    } else if (i == j) {
        add_simples(i, 1, k * (cy_n - 1));
    } else if (quiver.arrows_between(i, j) > 0) {
        const std::int64_t q = quiver.arrows_between(i, j);
        const Representation ext = universal_extension(quiver, p, i, j);
        out.profile.entries.push_back(ProfileEntry{0, ext, {}});
        out.graded.entries[j] = out.graded.entries[j] + LaurentPoly::constant(1);
        out.graded.entries[i] = out.graded.entries[i] + LaurentPoly::constant(q);
        for (int l = 1; l < k; ++l) add_simples(i, q, l * (cy_n - 1));
    } else if (quiver.arrows_between(j, i) > 0) {
        const std::int64_t q = quiver.arrows_between(j, i);
        add_simples(j, 1, 0);
        for (int l = 0; l < k; ++l) add_simples(i, q, (cy_n - 2) + l * (cy_n - 1));
    } else {
        add_simples(j, 1, 0);
    }

    out.poincare = out.graded.poincare();
    return out;
}

bool poincare_recursion_check(const Quiver& quiver, int cy_n, int i, int k, int j) {
    require_cy_dimension(cy_n);
    check_vertex(quiver, i, "poincare_recursion_check");
    check_vertex(quiver, j, "poincare_recursion_check");
    if (k < 0) throw std::invalid_argument("poincare_recursion_check: negative power");

    // one triangle per step, telescoped
    LaurentPoly recursed = LaurentPoly::constant(1);  // P of S_j
    for (int step = 1; step <= k; ++step) {
        if (i == j) {
            recursed = recursed * LaurentPoly::monomial(1, cy_n - 1);
        } else if (quiver.arrows_between(i, j) > 0) {
            recursed = recursed +
                       LaurentPoly::monomial(quiver.arrows_between(i, j), (step - 1) * (cy_n - 1));
        } else if (quiver.arrows_between(j, i) > 0) {
            recursed = recursed + LaurentPoly::monomial(quiver.arrows_between(j, i),
                                                        (cy_n - 2) + (step - 1) * (cy_n - 1));
        }
    }

    // closed form, assembled through geometric sums
    LaurentPoly closed;
    if (i == j) {
        closed = LaurentPoly::monomial(1, k * (cy_n - 1));
    } else if (quiver.arrows_between(i, j) > 0) {
        closed = LaurentPoly::constant(1) +
                 LaurentPoly::constant(quiver.arrows_between(i, j)) *
                     geometric_sum(LaurentPoly::monomial(1, cy_n - 1), k);
    } else if (quiver.arrows_between(j, i) > 0) {
        closed = LaurentPoly::constant(1) +
                 LaurentPoly::monomial(quiver.arrows_between(j, i), cy_n - 2) *
                     geometric_sum(LaurentPoly::monomial(1, cy_n - 1), k);
    } else {
        closed = LaurentPoly::constant(1);
    }

    return recursed == closed && twist_power_profile(quiver, cy_n, i, k, j).poincare == closed;
}

namespace {

// exact class of the one-step twist of a single simple, as a column of
// Laurent polynomials
std::vector<LaurentPoly> one_step_column(const Quiver& quiver, int cy_n, const TwistGen& gen, int j) {
    const int n = quiver.vertex_count();
    std::vector<LaurentPoly> col(n);
    const int i = gen.vertex;
    const bool inverse = gen.kind == GenKind::InverseTwist;
    if (i == j) {
        col[i] = LaurentPoly::monomial(1, inverse ? 1 - cy_n : cy_n - 1);
        return col;
    }
    col[j] = LaurentPoly::constant(1);
    const std::int64_t q_ij = quiver.arrows_between(i, j);
    const std::int64_t q_ji = quiver.arrows_between(j, i);
    if (!inverse) {
        if (q_ij > 0)
            col[i] = LaurentPoly::constant(q_ij);
        else if (q_ji > 0)
            col[i] = LaurentPoly::monomial(q_ji, cy_n - 2);
    } else {
        if (q_ij > 0)
            col[i] = LaurentPoly::monomial(q_ij, 2 - cy_n);
        else if (q_ji > 0)
            col[i] = LaurentPoly::constant(q_ji);
    }
    return col;
}

GradedClass apply_generator(const Quiver& quiver, int cy_n, const TwistGen& gen,
                            const GradedClass& in) {
    const int n = quiver.vertex_count();
    GradedClass out;
    out.entries.assign(n, LaurentPoly{});
    if (gen.kind == GenKind::Shift) {
        for (int j = 0; j < n; ++j) out.entries[j] = in.entries[j].shift_degree(-gen.shift);
        return out;
    }
    check_vertex(quiver, gen.vertex, "word_upper_profile");
    for (int j = 0; j < n; ++j) {
        const auto col = one_step_column(quiver, cy_n, gen, j);
        for (int v = 0; v < n; ++v) out.entries[v] = out.entries[v] + col[v] * in.entries[j];
    }
    return out;
}

}  // namespace

GradedClass word_upper_profile(const Quiver& quiver, int cy_n, const TwistWord& word,
                               const GradedClass& start) {
    require_cy_dimension(cy_n);
    if (static_cast<int>(start.entries.size()) != quiver.vertex_count())
        throw std::invalid_argument("word_upper_profile: class length mismatch");
    if (!start.nonnegative())
        throw std::invalid_argument("word_upper_profile: start class must have nonnegative coefficients");
    GradedClass acc = start;
    for (auto it = word.gens.rbegin(); it != word.gens.rend(); ++it)
        acc = apply_generator(quiver, cy_n, *it, acc);
    return acc;
}

std::vector<double> upper_profile_series(const Quiver& quiver, int cy_n, const TwistWord& word,
                                         double t, int n_max) {
    require_cy_dimension(cy_n);
    if (n_max < 0) throw std::invalid_argument("upper_profile_series: negative length");
    const int n = quiver.vertex_count();
    const double u = std::exp(-t);

    // evaluate the generator actions at u once; iterate on the value vector
    std::vector<std::vector<std::vector<double>>> actions;  // per gen, matrix
    std::vector<double> shifts;                             // per gen, scalar for Shift
    for (const auto& gen : word.gens) {
        if (gen.kind == GenKind::Shift) {
            actions.emplace_back();
            shifts.push_back(std::pow(u, -gen.shift));
            continue;
        }
        std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
        for (int j = 0; j < n; ++j) {
            const auto col = one_step_column(quiver, cy_n, gen, j);
            for (int v = 0; v < n; ++v) m[v][j] = col[v].evaluate(t);
        }
        actions.push_back(std::move(m));
        shifts.push_back(0.0);
    }

    std::vector<double> w(n, 1.0);  // generator class values
    std::vector<double> series;
    series.reserve(static_cast<std::size_t>(n_max) + 1);
    for (int step = 0; step <= n_max; ++step) {
        double total = 0.0;
        for (double x : w) total += x;
        if (!std::isfinite(total))
            throw std::overflow_error("upper_profile_series: values exceed double range; lower n_max");
        series.push_back(total);
        if (step == n_max) break;
        for (std::size_t g = word.gens.size(); g-- > 0;) {
            if (word.gens[g].kind == GenKind::Shift) {
                for (double& x : w) x *= shifts[g];
            } else {
                std::vector<double> nw(n, 0.0);
                for (int v = 0; v < n; ++v)
                    for (int j = 0; j < n; ++j) nw[v] += actions[g][v][j] * w[j];
                w = std::move(nw);
            }
        }
    }
    return series;
}

}  // namespace mg
