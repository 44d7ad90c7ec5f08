#include "glkm/yangian/generators.hpp"

#include "glkm/linalg/elimination.hpp"
#include "glkm/linalg/ops.hpp"

#include <stdexcept>

namespace glkm {

std::string to_string(LegOrder o) { return o == LegOrder::standard ? "default" : "opposite"; }

LegOrder parse_leg_order(const std::string& s) {
    if (s == "default" || s == "standard") return LegOrder::standard;
    if (s == "opposite") return LegOrder::opposite;
    throw std::invalid_argument("unknown convention '" + s + "'");
}

std::string GenSymbol::name() const {
    auto i = [](std::size_t v) { return std::to_string(v); };
    switch (kind) {
        case Kind::H: return "h" + i(x);
        case Kind::L1: return "L(" + i(x) + "," + i(y) + ")";
        case Kind::E: return "e" + i(x);
        case Kind::F: return "f" + i(x);
        case Kind::Eps: return "eps" + i(x);
        case Kind::HatE: return "e^" + i(x);
        case Kind::HatF: return "f^" + i(x);
        case Kind::HatEps: return "eps^" + i(x);
    }
    return "?";
}

namespace {

void check_letter(std::size_t x, std::size_t n) {
    if (x < 1 || x > n) throw std::out_of_range("generator index " + std::to_string(x) + " outside [" + std::to_string(n) + "]");
}

SparseMat fund_h(std::size_t x, std::size_t n, std::size_t k) {
    check_letter(x, n);
    if (x <= k) return SparseMat::identity(n);
    return SparseMat::identity(n) - Scalar(2) * SparseMat::unit(n, x, x);
}

// t_{x,y} in the N-site representation by iterating the coproduct.
SparseMat coproduct_t(std::size_t x, std::size_t y, const RepContext& ctx, LegOrder order, Nesting nesting) {
    check_letter(x, ctx.n);
    check_letter(y, ctx.n);
    const SparseMat e = SparseMat::unit(ctx.n, y, x);
    const SparseMat hx = fund_h(x, ctx.n, ctx.k), hy = fund_h(y, ctx.n, ctx.k);
    // right factor follows L, left factor precedes it
    const SparseMat& after = order == LegOrder::standard ? hx : hy;
    const SparseMat& before = order == LegOrder::standard ? hy : hx;
    SparseMat t = e;
    SparseMat before_pow = before;
    SparseMat after_pow = after;
    for (std::size_t s = 2; s <= ctx.N; ++s) {
        if (nesting == Nesting::right)
            t = kron(t, after) + kron(before_pow, e);
        else
            t = kron(e, after_pow) + kron(before, t);
        before_pow = kron(before_pow, before);
        after_pow = kron(after_pow, after);
    }
    return t;
}

SparseMat h_power(std::size_t x, const RepContext& ctx) {
    const SparseMat h = fund_h(x, ctx.n, ctx.k);
    SparseMat out = h;
    for (std::size_t s = 2; s <= ctx.N; ++s) out = kron(out, h);
    return out;
}

}  // namespace

SparseMat fund_matrix(const GenSymbol& g, std::size_t n, std::size_t k) {
    return coproduct_matrix(g, RepContext(n, k, 1));
}

SparseMat coproduct_matrix(const GenSymbol& g, const RepContext& ctx, LegOrder order, Nesting nesting) {
    using K = GenSymbol::Kind;
    const std::size_t n = ctx.n;
    auto need_edge = [&](std::size_t x) {
        if (x < 1 || x + 1 > n) throw std::out_of_range("simple-root index " + std::to_string(x) + " outside [n-1]");
    };
    switch (g.kind) {
        case K::H: check_letter(g.x, n); return h_power(g.x, ctx);
        case K::L1: return coproduct_t(g.x, g.y, ctx, order, nesting);
        case K::E: need_edge(g.x); return coproduct_t(g.x, g.x + 1, ctx, order, nesting);
        case K::F: need_edge(g.x); return coproduct_t(g.x + 1, g.x, ctx, order, nesting);
        case K::Eps: return coproduct_t(g.x, g.x, ctx, order, nesting);
        case K::HatE: need_edge(g.x); return mat_mul(h_power(g.x, ctx), coproduct_t(g.x, g.x + 1, ctx, order, nesting));
        case K::HatF:
            need_edge(g.x);
            return mat_mul(h_power(g.x + 1, ctx), coproduct_t(g.x + 1, g.x, ctx, order, nesting));
        case K::HatEps: {
            SparseMat eps = coproduct_t(g.x, g.x, ctx, order, nesting);
            if (ctx.bosonic(g.x)) return eps;
            return -mat_mul(h_power(g.x, ctx), eps);
        }
    }
    throw std::logic_error("unhandled generator kind");
}

SparseMat hatted_coproduct_form(const GenSymbol& g, const RepContext& ctx, LegOrder order) {
    using K = GenSymbol::Kind;
    if (g.kind != K::HatE && g.kind != K::HatF)
        throw std::invalid_argument("coproduct form applies to e^ and f^ only");
    const std::size_t n = ctx.n, k = ctx.k;
    const SparseMat local = coproduct_matrix(g, RepContext(n, k, 1));
    const SparseMat group = mat_mul(fund_h(g.x, n, k), fund_h(g.x + 1, n, k));
    const SparseMat one = SparseMat::identity(n);
    SparseMat acc = local;
    SparseMat group_pow = group;
    for (std::size_t s = 2; s <= ctx.N; ++s) {
        if (order == LegOrder::standard)
            acc = kron(acc, one) + kron(group_pow, local);
        else
            acc = kron(acc, group) + kron(SparseMat::identity(group_pow.rows()), local);
        group_pow = kron(group_pow, group);
    }
    return acc;
}

GeneratorSet::GeneratorSet(const RepContext& ctx, LegOrder order) : ctx_(ctx), order_(order) {
    const std::size_t n = ctx.n;
    t_.reserve(n * n);
    for (std::size_t x = 1; x <= n; ++x)
        for (std::size_t y = 1; y <= n; ++y) t_.push_back(coproduct_t(x, y, ctx, order, Nesting::right));
    for (std::size_t x = 1; x <= n; ++x) {
        h_.push_back(h_power(x, ctx));
        h_inv_.push_back(inverse(h_.back()));
    }
}

SparseMat GeneratorSet::hat_e(std::size_t x) const { return mat_mul(h(x), e(x)); }
SparseMat GeneratorSet::hat_f(std::size_t x) const { return mat_mul(h(x + 1), f(x)); }
SparseMat GeneratorSet::hat_eps(std::size_t x) const {
    if (ctx_.bosonic(x)) return eps(x);
    return -mat_mul(h(x), eps(x));
}

SparseMat GeneratorSet::get(const GenSymbol& g) const {
    using K = GenSymbol::Kind;
    switch (g.kind) {
        case K::H: return h(g.x);
        case K::L1: return t(g.x, g.y);
        case K::E: return e(g.x);
        case K::F: return f(g.x);
        case K::Eps: return eps(g.x);
        case K::HatE: return hat_e(g.x);
        case K::HatF: return hat_f(g.x);
        case K::HatEps: return hat_eps(g.x);
    }
    throw std::logic_error("unhandled generator kind");
}

std::vector<std::pair<std::string, const SparseMat*>> GeneratorSet::all() const {
    std::vector<std::pair<std::string, const SparseMat*>> out;
    for (std::size_t x = 1; x <= ctx_.n; ++x) out.emplace_back(GenSymbol::h(x).name(), &h(x));
    for (std::size_t x = 1; x <= ctx_.n; ++x)
        for (std::size_t y = 1; y <= ctx_.n; ++y) out.emplace_back(GenSymbol::l1(x, y).name(), &t(x, y));
    return out;
}

}  // namespace glkm
