#pragma once

#include "glkm/linalg/rep_context.hpp"
#include "glkm/linalg/sparse.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace glkm {

// Which tensor legs carry h_y and h_x in the coproduct of L_{x,y}:
//   standard: Delta(L_{x,y}) = L_{x,y} (x) h_x + h_y (x) L_{x,y}
//   opposite: Delta(L_{x,y}) = L_{x,y} (x) h_y + h_x (x) L_{x,y}
enum class LegOrder { standard, opposite };
// Iteration direction for Delta^{(N)}: (Delta^{(N-1)} (x) id) Delta or (id (x) Delta^{(N-1)}) Delta.
enum class Nesting { right, left };

std::string to_string(LegOrder o);
LegOrder parse_leg_order(const std::string& s);

struct GenSymbol {
    enum class Kind { H, L1, E, F, Eps, HatE, HatF, HatEps };
    Kind kind;
    std::size_t x;
    std::size_t y = 0;

    static GenSymbol h(std::size_t x) { return {Kind::H, x}; }
    static GenSymbol l1(std::size_t x, std::size_t y) { return {Kind::L1, x, y}; }
    static GenSymbol e(std::size_t x) { return {Kind::E, x}; }
    static GenSymbol f(std::size_t x) { return {Kind::F, x}; }
    static GenSymbol eps(std::size_t x) { return {Kind::Eps, x}; }
    static GenSymbol hat_e(std::size_t x) { return {Kind::HatE, x}; }
    static GenSymbol hat_f(std::size_t x) { return {Kind::HatF, x}; }
    static GenSymbol hat_eps(std::size_t x) { return {Kind::HatEps, x}; }

    std::string name() const;
};

// n x n image in the fundamental representation.
SparseMat fund_matrix(const GenSymbol& g, std::size_t n, std::size_t k);

// Image of g under the N-fold iterated coproduct followed by pi^{(x)N}.
SparseMat coproduct_matrix(const GenSymbol& g, const RepContext& ctx, LegOrder order = LegOrder::standard,
                           Nesting nesting = Nesting::right);

// Coproduct form of the hatted generators, iterated on the left leg:
// xi^ (x) 1 + h_x h_{x+1} (x) xi^ (standard legs) or xi^ (x) h_x h_{x+1} + 1 (x) xi^ (opposite).
SparseMat hatted_coproduct_form(const GenSymbol& g, const RepContext& ctx, LegOrder order = LegOrder::standard);

// All coproduct images for one context, built once.
class GeneratorSet {
public:
    GeneratorSet(const RepContext& ctx, LegOrder order = LegOrder::standard);

    const RepContext& ctx() const { return ctx_; }
    LegOrder order() const { return order_; }
    std::size_t n() const { return ctx_.n; }

    const SparseMat& t(std::size_t x, std::size_t y) const { return t_[(x - 1) * ctx_.n + (y - 1)]; }
    const SparseMat& h(std::size_t x) const { return h_[x - 1]; }
    const SparseMat& h_inv(std::size_t x) const { return h_inv_[x - 1]; }
    const SparseMat& e(std::size_t x) const { return t(x, x + 1); }
    const SparseMat& f(std::size_t x) const { return t(x + 1, x); }
    const SparseMat& eps(std::size_t x) const { return t(x, x); }
    SparseMat hat_e(std::size_t x) const;
    SparseMat hat_f(std::size_t x) const;
    SparseMat hat_eps(std::size_t x) const;
    SparseMat get(const GenSymbol& g) const;

    // Every H(x) and L1(x,y), in canonical order, with display names.
    std::vector<std::pair<std::string, const SparseMat*>> all() const;

private:
    RepContext ctx_;
    LegOrder order_;
    std::vector<SparseMat> t_;
    std::vector<SparseMat> h_;
    std::vector<SparseMat> h_inv_;
};

}  // namespace glkm
