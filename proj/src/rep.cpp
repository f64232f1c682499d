#include "mg/rep.hpp"

#include <algorithm>
#include <stdexcept>

#include "mg/rng.hpp"

namespace mg {

namespace {

void check_cap(const DimVector& dims, int cap) {
    if (total_dim(dims) > cap)
        throw std::invalid_argument("enumeration cap exceeded: total dimension " +
                                    std::to_string(total_dim(dims)) + " > " + std::to_string(cap));
}

void check_same_field(const Representation& a, const Representation& b) {
    if (a.p != b.p) throw std::invalid_argument("field characteristic mismatch");
    if (a.quiver != b.quiver) throw std::invalid_argument("quiver mismatch");
}

}  // namespace

Representation make_rep(const Quiver& quiver, int p, const DimVector& dims,
                        const std::vector<FpMat>& maps) {
    if (!is_small_prime(p)) throw std::invalid_argument("field characteristic must be a prime <= 251");
    if (static_cast<int>(dims.size()) != quiver.vertex_count())
        throw std::invalid_argument("dimension vector length mismatch");
    for (auto d : dims)
        if (d < 0) throw std::invalid_argument("negative dimension");
    if (maps.size() != quiver.arrows().size())
        throw std::invalid_argument("expected one matrix per arrow");
    for (std::size_t a = 0; a < maps.size(); ++a) {
        const Arrow arrow = quiver.arrows()[a];
        if (maps[a].rows() != dims[arrow.dst] || maps[a].cols() != dims[arrow.src] ||
            maps[a].field() != p)
            throw std::invalid_argument("arrow matrix shape or field mismatch");
        for (auto v : maps[a].data())
            if (v >= p) throw std::invalid_argument("matrix entry not reduced mod p");
    }
    return Representation{quiver, p, dims, maps};
}

Representation zero_rep(const Quiver& quiver, int p) {
    DimVector dims(quiver.vertex_count(), 0);
    std::vector<FpMat> maps(quiver.arrows().size(), FpMat(0, 0, p));
    return Representation{quiver, p, dims, maps};
}

Representation simple_rep(const Quiver& quiver, int p, int vertex) {
    if (vertex < 0 || vertex >= quiver.vertex_count())
        throw std::invalid_argument("simple_rep: vertex out of range");
    DimVector mult(quiver.vertex_count(), 0);
    mult[vertex] = 1;
    return semisimple_rep(quiver, p, mult);
}

Representation semisimple_rep(const Quiver& quiver, int p, const DimVector& multiplicities) {
    if (static_cast<int>(multiplicities.size()) != quiver.vertex_count())
        throw std::invalid_argument("semisimple_rep: multiplicity length mismatch");
    std::vector<FpMat> maps;
    for (auto a : quiver.arrows())
        maps.emplace_back(static_cast<int>(multiplicities[a.dst]),
                          static_cast<int>(multiplicities[a.src]), p);
    return make_rep(quiver, p, multiplicities, maps);
}

Representation direct_sum(const Representation& a, const Representation& b) {
    check_same_field(a, b);
    DimVector dims(a.dims.size());
    for (std::size_t v = 0; v < dims.size(); ++v) dims[v] = a.dims[v] + b.dims[v];
    std::vector<FpMat> maps;
    for (std::size_t k = 0; k < a.quiver.arrows().size(); ++k) {
        const Arrow arrow = a.quiver.arrows()[k];
        FpMat m(static_cast<int>(dims[arrow.dst]), static_cast<int>(dims[arrow.src]), a.p);
        for (int r = 0; r < a.maps[k].rows(); ++r)
            for (int c = 0; c < a.maps[k].cols(); ++c) m.set(r, c, a.maps[k].at(r, c));
        for (int r = 0; r < b.maps[k].rows(); ++r)
            for (int c = 0; c < b.maps[k].cols(); ++c)
                m.set(a.maps[k].rows() + r, a.maps[k].cols() + c, b.maps[k].at(r, c));
        maps.push_back(std::move(m));
    }
    return Representation{a.quiver, a.p, dims, maps};
}

Representation random_rep(const Quiver& quiver, int p, const DimVector& dims, std::uint64_t seed,
                          int cap) {
    check_cap(dims, cap);
    Rng rng(seed);
    std::vector<FpMat> maps;
    for (auto a : quiver.arrows()) {
        FpMat m(static_cast<int>(dims[a.dst]), static_cast<int>(dims[a.src]), p);
        for (int r = 0; r < m.rows(); ++r)
            for (int c = 0; c < m.cols(); ++c)
                m.set(r, c, static_cast<std::uint8_t>(rng.below(static_cast<std::uint64_t>(p))));
        maps.push_back(std::move(m));
    }
    return make_rep(quiver, p, dims, maps);
}

Representation universal_extension(const Quiver& quiver, int p, int i, int j) {
    const std::int64_t q = quiver.arrows_between(i, j);
    if (q <= 0) throw std::invalid_argument("universal_extension: no arrows from i to j");
    DimVector dims(quiver.vertex_count(), 0);
    dims[i] = q;
    dims[j] = 1;
    std::vector<FpMat> maps;
    std::int64_t copy = 0;
    for (auto a : quiver.arrows()) {
        FpMat m(static_cast<int>(dims[a.dst]), static_cast<int>(dims[a.src]), p);
        if (a.src == i && a.dst == j) {
            m.set(0, static_cast<int>(copy), 1);  // c-th coordinate projection
            ++copy;
        }
        maps.push_back(std::move(m));
    }
    return make_rep(quiver, p, dims, maps);
}

DimVector Subrep::dims() const {
    DimVector d(basis.size());
    for (std::size_t v = 0; v < basis.size(); ++v) d[v] = basis[v].rows();
    return d;
}

Subrep zero_subrep(const Representation& rep) {
    Subrep s;
    for (auto d : rep.dims) {
        s.basis.emplace_back(0, static_cast<int>(d), rep.p);
        s.pivots.emplace_back();
    }
    return s;
}

Subrep full_subrep(const Representation& rep) {
    Subrep s;
    for (auto d : rep.dims) {
        s.basis.push_back(FpMat::identity(static_cast<int>(d), rep.p));
        std::vector<int> piv(static_cast<std::size_t>(d));
        for (int c = 0; c < d; ++c) piv[static_cast<std::size_t>(c)] = c;
        s.pivots.push_back(std::move(piv));
    }
    return s;
}

bool subrep_invariant(const Representation& rep, const Subrep& sub) {
    for (std::size_t k = 0; k < rep.quiver.arrows().size(); ++k) {
        const Arrow a = rep.quiver.arrows()[k];
        const FpMat& u = sub.basis[a.src];
        for (int r = 0; r < u.rows(); ++r) {
            const auto img = map_apply(rep.maps[k], u.row(r));
            if (!in_rowspace(sub.basis[a.dst], sub.pivots[a.dst], img)) return false;
        }
    }
    return true;
}

std::vector<Subrep> subrep_enumerate(const Representation& rep, int cap) {
    check_cap(rep.dims, cap);
    const int n = rep.quiver.vertex_count();
    const auto& topo = rep.quiver.topological_order();

    // arrows grouped by target, as (arrow index, source) pairs
    std::vector<std::vector<std::pair<std::size_t, int>>> into(n);
    for (std::size_t k = 0; k < rep.quiver.arrows().size(); ++k)
        into[rep.quiver.arrows()[k].dst].emplace_back(k, rep.quiver.arrows()[k].src);

    std::vector<Subrep> out;
    Subrep current = zero_subrep(rep);

    // depth-first over per-vertex subspace choices in topological order
    auto recurse = [&](auto&& self, std::size_t depth) -> void {
        if (depth == topo.size()) {
            out.push_back(current);
            return;
        }
        const int v = topo[depth];
        for (const FpMat& cand : all_subspaces(rep.p, static_cast<int>(rep.dims[v]))) {
            FpMat b = cand;
            std::vector<int> piv;
            piv.reserve(static_cast<std::size_t>(b.rows()));
            for (int r = 0; r < b.rows(); ++r) {
                int c = 0;
                while (b.at(r, c) == 0) ++c;
                piv.push_back(c);
            }
            // every arrow into v comes from a vertex already fixed
            bool ok = true;
            for (const auto& [k, src] : into[v]) {
                const FpMat& u = current.basis[src];
                for (int r = 0; ok && r < u.rows(); ++r)
                    ok = in_rowspace(b, piv, map_apply(rep.maps[k], u.row(r)));
                if (!ok) break;
            }
            if (!ok) continue;
            current.basis[v] = std::move(b);
            current.pivots[v] = std::move(piv);
            self(self, depth + 1);
        }
        current.basis[v] = FpMat(0, static_cast<int>(rep.dims[v]), rep.p);
        current.pivots[v].clear();
    };
    recurse(recurse, 0);

    std::sort(out.begin(), out.end(), [](const Subrep& a, const Subrep& b) {
        const DimVector da = a.dims(), db = b.dims();
        if (da != db) return da < db;
        for (std::size_t v = 0; v < a.basis.size(); ++v)
            if (a.basis[v].data() != b.basis[v].data()) return a.basis[v].data() < b.basis[v].data();
        return false;
    });
    return out;
}

Representation restrict_to(const Representation& rep, const Subrep& sub) {
    DimVector dims = sub.dims();
    std::vector<FpMat> maps;
    for (std::size_t k = 0; k < rep.quiver.arrows().size(); ++k) {
        const Arrow a = rep.quiver.arrows()[k];
        FpMat m(static_cast<int>(dims[a.dst]), static_cast<int>(dims[a.src]), rep.p);
        for (int t = 0; t < sub.basis[a.src].rows(); ++t) {
            const auto img = map_apply(rep.maps[k], sub.basis[a.src].row(t));
            const auto coeffs = express_in_rowspace(sub.basis[a.dst], sub.pivots[a.dst], img);
            if (!coeffs) throw std::invalid_argument("restrict_to: subspace tuple is not arrow-invariant");
            for (int s = 0; s < m.rows(); ++s) m.set(s, t, (*coeffs)[static_cast<std::size_t>(s)]);
        }
        maps.push_back(std::move(m));
    }
    return Representation{rep.quiver, rep.p, dims, maps};
}

Subrep subrep_intersection(const Representation& rep, const Subrep& a, const Subrep& b) {
    Subrep s;
    for (std::size_t v = 0; v < a.basis.size(); ++v) {
        // x in A cap B iff x = coeffs * A-basis and the residual mod B vanishes:
        // intersect by solving on stacked coordinates
        const FpMat& ba = a.basis[v];
        const int amb = static_cast<int>(rep.dims[v]);
        FpMat qb = quotient_map_matrix(b.basis[v], b.pivots[v], amb, rep.p);
        // rows of ba through qb: kernel of the composite gives the coefficients
        FpMat comp(qb.rows(), ba.rows(), rep.p);
        for (int t = 0; t < ba.rows(); ++t) {
            const auto img = map_apply(qb, ba.row(t));
            for (int r = 0; r < qb.rows(); ++r) comp.set(r, t, img[static_cast<std::size_t>(r)]);
        }
        FpMat coeff_basis = nullspace(comp);
        FpMat rows(coeff_basis.rows(), amb, rep.p);
        for (int r = 0; r < coeff_basis.rows(); ++r)
            for (int t = 0; t < ba.rows(); ++t) {
                const int f = coeff_basis.at(r, t);
                if (f == 0) continue;
                for (int c = 0; c < amb; ++c)
                    rows.set(r, c, static_cast<std::uint8_t>((rows.at(r, c) + f * ba.at(t, c)) % rep.p));
            }
        s.pivots.push_back(rref(rows));
        s.basis.push_back(std::move(rows));
    }
    return s;
}

Subrep subrep_sum(const Representation& rep, const Subrep& a, const Subrep& b) {
    Subrep s;
    for (std::size_t v = 0; v < a.basis.size(); ++v) {
        FpMat rows(a.basis[v].rows() + b.basis[v].rows(), static_cast<int>(rep.dims[v]), rep.p);
        for (int r = 0; r < a.basis[v].rows(); ++r)
            for (int c = 0; c < rows.cols(); ++c) rows.set(r, c, a.basis[v].at(r, c));
        for (int r = 0; r < b.basis[v].rows(); ++r)
            for (int c = 0; c < rows.cols(); ++c)
                rows.set(a.basis[v].rows() + r, c, b.basis[v].at(r, c));
        s.pivots.push_back(rref(rows));
        s.basis.push_back(std::move(rows));
    }
    return s;
}

QuotientData quotient(const Representation& rep, const Subrep& sub) {
    if (!subrep_invariant(rep, sub)) throw std::invalid_argument("quotient: not a subrepresentation");
    const int n = rep.quiver.vertex_count();
    std::vector<FpMat> proj(n), lift(n);
    DimVector dims(n);
    for (int v = 0; v < n; ++v) {
        const int amb = static_cast<int>(rep.dims[v]);
        proj[v] = quotient_map_matrix(sub.basis[v], sub.pivots[v], amb, rep.p);
        lift[v] = quotient_lift_matrix(sub.pivots[v], amb, rep.p);
        dims[v] = proj[v].rows();
    }
    std::vector<FpMat> maps;
    for (std::size_t k = 0; k < rep.quiver.arrows().size(); ++k) {
        const Arrow a = rep.quiver.arrows()[k];
        maps.push_back(mat_mul(proj[a.dst], mat_mul(rep.maps[k], lift[a.src])));
    }
    return QuotientData{Representation{rep.quiver, rep.p, dims, maps}, std::move(proj)};
}

Subrep preimage(const Representation& rep, const std::vector<FpMat>& proj, const Subrep& sub) {
    Subrep s;
    for (std::size_t v = 0; v < proj.size(); ++v) {
        const FpMat qm = quotient_map_matrix(sub.basis[v], sub.pivots[v], proj[v].rows(), rep.p);
        FpMat rows = nullspace(mat_mul(qm, proj[v]));
        std::vector<int> piv;
        for (int r = 0; r < rows.rows(); ++r) {
            int c = 0;
            while (rows.at(r, c) == 0) ++c;
            piv.push_back(c);
        }
        s.basis.push_back(std::move(rows));
        s.pivots.push_back(std::move(piv));
    }
    return s;
}

Morphism make_morphism(const Representation& source, const Representation& target,
                       const std::vector<FpMat>& maps) {
    check_same_field(source, target);
    if (static_cast<int>(maps.size()) != source.quiver.vertex_count())
        throw std::invalid_argument("morphism: one matrix per vertex expected");
    for (int v = 0; v < source.quiver.vertex_count(); ++v)
        if (maps[v].rows() != target.dims[v] || maps[v].cols() != source.dims[v])
            throw std::invalid_argument("morphism: vertex matrix shape mismatch");
    for (std::size_t k = 0; k < source.quiver.arrows().size(); ++k) {
        const Arrow a = source.quiver.arrows()[k];
        if (mat_mul(maps[a.dst], source.maps[k]) != mat_mul(target.maps[k], maps[a.src]))
            throw std::invalid_argument("morphism: does not commute with the arrow maps");
    }
    return Morphism{source, target, maps};
}

Subrep kernel(const Morphism& f) {
    Subrep s;
    for (std::size_t v = 0; v < f.maps.size(); ++v) {
        FpMat rows = nullspace(f.maps[v]);
        std::vector<int> piv;
        for (int r = 0; r < rows.rows(); ++r) {
            int c = 0;
            while (rows.at(r, c) == 0) ++c;
            piv.push_back(c);
        }
        s.basis.push_back(std::move(rows));
        s.pivots.push_back(std::move(piv));
    }
    return s;
}

Subrep image(const Morphism& f) {
    Subrep s;
    for (std::size_t v = 0; v < f.maps.size(); ++v) {
        FpMat rows = transpose(f.maps[v]);
        s.pivots.push_back(rref(rows));
        s.basis.push_back(std::move(rows));
    }
    return s;
}

std::vector<ShortExactSeq> short_exact_sequences(const Representation& rep, int cap) {
    std::vector<ShortExactSeq> out;
    for (const Subrep& sub : subrep_enumerate(rep, cap)) {
        if (sub.is_zero() || sub.dim() == rep.dim()) continue;
        out.push_back(ShortExactSeq{sub, restrict_to(rep, sub), quotient(rep, sub).rep});
    }
    return out;
}

std::vector<int> composition_series(const Representation& rep) {
    if (rep.is_zero()) throw std::invalid_argument("composition_series: zero representation");
    std::vector<int> factors;
    Representation cur = rep;
    const auto& topo = rep.quiver.topological_order();
    while (!cur.is_zero()) {
        // last vertex in topological order still carrying dimension: a line
        // there is a simple subobject (all arrows out of it land in zero spaces)
        int v = -1;
        for (auto it = topo.rbegin(); it != topo.rend(); ++it)
            if (cur.dims[*it] > 0) {
                v = *it;
                break;
            }
        Subrep line = zero_subrep(cur);
        FpMat b(1, static_cast<int>(cur.dims[v]), cur.p);
        b.set(0, 0, 1);
        line.basis[v] = std::move(b);
        line.pivots[v] = {0};
        factors.push_back(v);
        cur = quotient(cur, line).rep;
    }
    return factors;
}

}  // namespace mg
