#include "glkm/bases/bases.hpp"

#include "glkm/braid/braid.hpp"
#include "glkm/linalg/elimination.hpp"
#include "glkm/linalg/ops.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace glkm {

std::string to_string(Family f) { return f == Family::plus ? "+" : "-"; }

std::string MultiIndex::str() const {
    std::string s = "u" + to_string(sign) + "(";
    for (std::size_t i = 0; i < m.size(); ++i) s += (i ? "," : "") + std::to_string(m[i]);
    return s + ")";
}

bool admissible(const RepContext& ctx, const MultiIndex& idx) {
    if (idx.m.size() != ctx.n) return false;
    long total = 0;
    for (std::size_t x = 1; x <= ctx.n; ++x) {
        const long mx = idx.m[x - 1];
        if (mx < 0) return false;
        // the letters that can occur at most once: fermionic for +, bosonic for -
        const bool restricted = idx.sign == Family::plus ? ctx.fermionic(x) : ctx.bosonic(x);
        if (restricted && mx > 1) return false;
        total += mx;
    }
    return total == static_cast<long>(ctx.N);
}

std::vector<MultiIndex> enumerate_admissible(const RepContext& ctx, Family sign) {
    std::vector<MultiIndex> out;
    MultiIndex cur{sign, std::vector<long>(ctx.n, 0)};
    // odometer over [0, N]^n in ascending lexicographic order
    while (true) {
        if (admissible(ctx, cur)) out.push_back(cur);
        std::size_t pos = ctx.n;
        while (pos > 0 && cur.m[pos - 1] == static_cast<long>(ctx.N)) cur.m[--pos] = 0;
        if (pos == 0) break;
        ++cur.m[pos - 1];
    }
    if (sign == Family::plus) std::reverse(out.begin(), out.end());
    return out;
}

LabeledVector highest_vector(const GeneratorSet& g, Family sign) {
    const RepContext& c = g.ctx();
    MultiIndex idx{sign, std::vector<long>(c.n, 0)};
    const std::size_t letter = sign == Family::plus ? 1 : c.n;
    idx.m[letter - 1] = static_cast<long>(c.N);
    return {idx, Vector::basis(c.dim(), c.encode(std::vector<std::size_t>(c.N, letter)))};
}

CheckReport check_highest_vector(const GeneratorSet& g, Family sign) {
    CheckReport rep("highest vector " + to_string(sign) + " " + g.ctx().str());
    const LabeledVector u = highest_vector(g, sign);
    const Vector zero(g.ctx().dim());
    for (std::size_t x = 1; x < g.n(); ++x) {
        if (sign == Family::plus)
            rep.expect_equal("f" + std::to_string(x) + " u+", zero, apply(g.f(x), u.vec));
        else
            rep.expect_equal("e" + std::to_string(x) + " u-", zero, apply(g.e(x), u.vec));
    }
    return rep;
}

LabeledVector build_u_vector(const GeneratorSet& g, const MultiIndex& idx) {
    const RepContext& c = g.ctx();
    if (!admissible(c, idx)) throw std::invalid_argument("inadmissible index " + idx.str() + " for " + c.str());
    Vector v = highest_vector(g, idx.sign).vec;
    if (idx.sign == Family::plus) {
        for (std::size_t y = 2; y <= c.n; ++y)
            for (long r = 0; r < idx.m[y - 1]; ++r) v = apply(g.t(1, y), v);
    } else {
        for (std::size_t y = 1; y < c.n; ++y)
            for (long r = 0; r < idx.m[y - 1]; ++r) v = apply(g.t(c.n, y), v);
    }
    return {idx, std::move(v)};
}

CheckReport check_hamiltonian_eigen(const GeneratorSet& g) {
    Stopwatch sw;
    const RepContext& c = g.ctx();
    CheckReport rep("hamiltonian eigenvectors " + c.str());
    if (c.N < 2) return CheckReport::not_applicable(rep.name, "needs at least two sites");
    const SparseMat ham = build_hamiltonian(c, 1);
    for (Family s : {Family::plus, Family::minus}) {
        const Scalar ev = s == Family::plus ? Scalar(static_cast<long>(c.N) - 1) : Scalar(1 - static_cast<long>(c.N));
        for (const auto& idx : enumerate_admissible(c, s)) {
            const Vector u = build_u_vector(g, idx).vec;
            rep.expect("nonzero " + idx.str(), !u.is_zero());
            rep.expect_equal("H " + idx.str(), ev * u, apply(ham, u));
        }
    }
    rep.duration_ms = sw.elapsed_ms();
    return rep;
}

namespace {

long sign_pow(long e) { return (e % 2 == 0) ? 1 : -1; }

ShiftPrediction shifted(const RepContext& ctx, const MultiIndex& idx, std::size_t x, long dx, Scalar coeff) {
    ShiftPrediction p;
    p.target = idx;
    p.target.m[x - 1] += dx;
    p.target.m[x] -= dx;
    p.coefficient = std::move(coeff);
    p.zero = !admissible(ctx, p.target) || p.coefficient.is_zero();
    return p;
}

}  // namespace

ShiftPrediction predict_e(const RepContext& ctx, const MultiIndex& idx, std::size_t x) {
    const long mx = idx.m[x - 1], mx1 = idx.m[x];
    long b = 0;
    if (idx.sign == Family::plus) {
        if (x == 1)
            b = 1;
        else if (ctx.bosonic(x + 1))
            b = mx;
        else
            b = sign_pow(mx1) * mx;
    } else {
        if (x == ctx.n - 1)
            b = sign_pow(mx1 + mx - 1) * mx * (mx1 + 1);
        else if (ctx.bosonic(x + 1))
            b = mx;
        else
            b = sign_pow(mx1 + mx - 1) * mx;
    }
    return shifted(ctx, idx, x, -1, Scalar(b));
}

ShiftPrediction predict_f(const RepContext& ctx, const MultiIndex& idx, std::size_t x) {
    const long mx = idx.m[x - 1], mx1 = idx.m[x];
    long c = mx1;
    if (idx.sign == Family::plus && x == 1) c = (mx + 1) * mx1;
    if (idx.sign == Family::minus && x == ctx.n - 1) c = 1;
    return shifted(ctx, idx, x, +1, Scalar(c));
}

namespace {

// Coefficient c with a == c*b if it exists, reported as a scalar witness otherwise.
void expect_multiple(CheckReport& rep, const std::string& label, const Scalar& expected_coeff, const Vector& target,
                     const Vector& actual) {
    const Vector expected = expected_coeff * target;
    if (expected == actual) return;
    if (!target.is_zero()) {
        if (auto c = proportionality(actual, target)) {
            rep.fail({label, {}, expected_coeff, *c});
            return;
        }
    }
    rep.expect_equal(label, expected, actual);
}

CheckReport action_on(const GeneratorSet& g, const MultiIndex& idx, std::map<std::vector<long>, Vector>& cache) {
    const RepContext& c = g.ctx();
    CheckReport rep("action " + idx.str() + " " + c.str());
    auto vec_of = [&](const MultiIndex& i) -> const Vector& {
        auto it = cache.find(i.m);
        if (it == cache.end()) it = cache.emplace(i.m, build_u_vector(g, i).vec).first;
        return it->second;
    };
    const Vector u = vec_of(idx);
    const Vector zero(c.dim());
    for (std::size_t x = 1; x <= c.n; ++x) {
        const long mx = idx.m[x - 1];
        const std::string sx = std::to_string(x);
        if (c.fermionic(x))
            expect_multiple(rep, "h" + sx + " " + idx.str(), Scalar(sign_pow(mx)), u, apply(g.h(x), u));
        const Scalar ev = c.bosonic(x) ? Scalar(mx) : Scalar(mx * sign_pow(mx - 1));
        expect_multiple(rep, "E" + sx + " " + idx.str(), ev, u, apply(g.eps(x), u));
    }
    for (std::size_t x = 1; x < c.n; ++x) {
        const std::string sx = std::to_string(x);
        for (int which = 0; which < 2; ++which) {
            const ShiftPrediction p = which == 0 ? predict_e(c, idx, x) : predict_f(c, idx, x);
            const Vector actual = apply(which == 0 ? g.e(x) : g.f(x), u);
            const std::string label = (which == 0 ? "e" : "f") + sx + " " + idx.str();
            if (p.zero)
                rep.expect_equal(label + " (zero prediction)", zero, actual);
            else
                expect_multiple(rep, label + " -> " + p.target.str(), p.coefficient, vec_of(p.target), actual);
        }
    }
    return rep;
}

}  // namespace

CheckReport check_action(const GeneratorSet& g, const MultiIndex& idx) {
    Stopwatch sw;
    if (!admissible(g.ctx(), idx)) throw std::invalid_argument("inadmissible index " + idx.str());
    std::map<std::vector<long>, Vector> cache;
    CheckReport rep = action_on(g, idx, cache);
    rep.duration_ms = sw.elapsed_ms();
    return rep;
}

CheckReport check_action_all(const GeneratorSet& g) {
    Stopwatch sw;
    CheckReport rep("action table " + g.ctx().str());
    for (Family s : {Family::plus, Family::minus}) {
        std::map<std::vector<long>, Vector> cache;
        for (const auto& idx : enumerate_admissible(g.ctx(), s)) rep.absorb(action_on(g, idx, cache));
    }
    rep.duration_ms = sw.elapsed_ms();
    return rep;
}

CheckReport check_family_independence(const GeneratorSet& g) {
    Stopwatch sw;
    CheckReport rep("family independence " + g.ctx().str());
    for (Family s : {Family::plus, Family::minus}) {
        std::vector<Vector> vs;
        const auto idx = enumerate_admissible(g.ctx(), s);
        for (const auto& i : idx) vs.push_back(build_u_vector(g, i).vec);
        rep.expect_equal("rank " + to_string(s), Scalar(static_cast<long>(idx.size())),
                         Scalar(static_cast<long>(rank_of(vs))));
    }
    rep.duration_ms = sw.elapsed_ms();
    return rep;
}

std::string PairVector::label(Family f) const {
    return "u" + to_string(f) + "_(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

SpectralN2 spectral_decomposition_n2(std::size_t n, std::size_t k) {
    Stopwatch sw;
    const RepContext c(n, k, 2);
    const std::size_t dim = n * n;
    auto e = [&](std::size_t a, std::size_t b) { return Vector::basis(dim, c.encode({a, b})); };
    SpectralN2 out;
    out.report = CheckReport("spectrum N=2 n=" + std::to_string(n) + " k=" + std::to_string(k));

    out.plus.push_back({1, 1, e(1, 1)});
    for (std::size_t j = 2; j <= k; ++j) out.plus.push_back({j, j, Scalar(2) * e(j, j)});
    for (std::size_t j = 2; j <= n; ++j) out.plus.push_back({1, j, e(1, j) + e(j, 1)});
    for (std::size_t i = 2; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j) out.plus.push_back({i, j, e(i, j) + e(j, i)});

    out.minus.push_back({n, n, e(n, n)});
    for (std::size_t j = k + 1; j < n; ++j) out.minus.push_back({j, j, Scalar(2) * e(j, j)});
    for (std::size_t j = 1; j < n; ++j) out.minus.push_back({j, n, e(n, j) - e(j, n)});
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) out.minus.push_back({i, j, e(j, i) - e(i, j)});

    auto by_label = [](const PairVector& a, const PairVector& b) { return a.i != b.i ? a.i < b.i : a.j < b.j; };
    std::sort(out.plus.begin(), out.plus.end(), by_label);
    std::sort(out.minus.begin(), out.minus.end(), by_label);

    CheckReport& rep = out.report;
    const SparseMat rc = build_rcheck({n, k, 1});
    for (const auto& u : out.plus) rep.expect_equal("r " + u.label(Family::plus), u.vec, apply(rc, u.vec));
    for (const auto& u : out.minus) rep.expect_equal("r " + u.label(Family::minus), -u.vec, apply(rc, u.vec));

    auto vecs = [](const std::vector<PairVector>& f) {
        std::vector<Vector> v;
        for (const auto& u : f) v.push_back(u.vec);
        return v;
    };
    const long want_plus = static_cast<long>(n * (n - 1) / 2 + k);
    const long want_minus = static_cast<long>(n * (n + 1) / 2 - k);
    rep.expect_equal("count +", Scalar(want_plus), Scalar(static_cast<long>(out.plus.size())));
    rep.expect_equal("count -", Scalar(want_minus), Scalar(static_cast<long>(out.minus.size())));
    rep.expect_equal("rank +", Scalar(want_plus), Scalar(static_cast<long>(rank_of(vecs(out.plus)))));
    rep.expect_equal("rank -", Scalar(want_minus), Scalar(static_cast<long>(rank_of(vecs(out.minus)))));
    std::vector<Vector> all = vecs(out.plus);
    for (auto& v : vecs(out.minus)) all.push_back(std::move(v));
    rep.expect_equal("rank of both families", Scalar(static_cast<long>(dim)), Scalar(static_cast<long>(rank_of(all))));
    rep.duration_ms = sw.elapsed_ms();
    return out;
}

std::string action_graph_dot(std::size_t n, std::size_t k, Family family) {
    if (n > 4) throw std::invalid_argument("action graphs are limited to n <= 4");
    const SpectralN2 sd = spectral_decomposition_n2(n, k);
    const auto& basis = family == Family::plus ? sd.plus : sd.minus;
    const GeneratorSet g(RepContext(n, k, 2));

    // each basis vector has support on {e_i(x)e_j, e_j(x)e_i}; those supports are disjoint
    auto expand = [&](const Vector& w) {
        std::vector<std::pair<std::size_t, Scalar>> coeffs;
        Vector rest = w;
        for (std::size_t b = 0; b < basis.size(); ++b) {
            const auto& item = basis[b].vec.items()[0];
            const Scalar c = w.at(item.index) / item.value;
            if (c.is_zero()) continue;
            coeffs.emplace_back(b, c);
            rest -= c * basis[b].vec;
        }
        if (!rest.is_zero()) throw std::logic_error("generator action leaves the eigenspace");
        return coeffs;
    };

    std::ostringstream os;
    os << "digraph \"gl_" << k << "_" << (n - k) << "_" << (family == Family::plus ? "plus" : "minus") << "\" {\n";
    for (const auto& u : basis) os << "  \"" << u.label(family) << "\";\n";
    for (const auto& u : basis) {
        os << "  \"" << u.label(family) << "\" -> \"" << u.label(family) << "\" [label=\"zeta\"];\n";
        for (std::size_t x = 1; x < n; ++x)
            for (int which = 0; which < 2; ++which) {
                const Vector w = apply(which == 0 ? g.e(x) : g.f(x), u.vec);
                for (const auto& [b, c] : expand(w))
                    os << "  \"" << u.label(family) << "\" -> \"" << basis[b].label(family) << "\" [label=\""
                       << (which == 0 ? "e" : "f") << x << "\"];\n";
            }
    }
    os << "}\n";
    return os.str();
}

}  // namespace glkm
