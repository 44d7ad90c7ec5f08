#include "glkm/gl11/gl11.hpp"

#include "glkm/braid/braid.hpp"
#include "glkm/linalg/elimination.hpp"
#include "glkm/linalg/ops.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace glkm::gl11 {

namespace {

SparseMat pauli_x() { return SparseMat::from_dense({{0, 1}, {1, 0}}); }
SparseMat pauli_y() {
    const Scalar i = Scalar::imaginary_unit();
    return SparseMat::from_dense({{0, -i}, {i, 0}});
}
SparseMat pauli_z() { return SparseMat::diagonal({1, -1}); }

}  // namespace

SparseMat xx_pauli_hamiltonian(std::size_t sites) {
    if (sites < 2) throw std::invalid_argument("the XX chain needs at least two sites");
    const Scalar half = Scalar::rational(1, 2);
    const SparseMat x = pauli_x(), y = pauli_y(), z = pauli_z();
    const std::size_t dim = std::size_t{1} << sites;
    SparseMat h(dim, dim);
    for (std::size_t j = 1; j < sites; ++j) {
        h += embed_at_site(kron(x, x), j, 2, sites);
        h += embed_at_site(kron(y, y), j, 2, sites);
        h += Scalar(2) * embed_at_site(z, j, 2, sites);
    }
    h = half * h;
    h -= half * (embed_at_site(z, 1, 2, sites) - embed_at_site(z, sites, 2, sites));
    return h;
}

CheckReport xx_hamiltonian_check(std::size_t sites) {
    Stopwatch sw;
    CheckReport rep("gl11/xx N=" + std::to_string(sites));
    const SparseMat pauli = xx_pauli_hamiltonian(sites);
    rep.expect_equal("Pauli form vs sum of r-check_j", build_hamiltonian(RepContext(2, 1, sites), 1), pauli);
    for (std::size_t i = 0; i < pauli.rows(); ++i)
        for (const auto& e : pauli.row(i)) rep.expect("real entry", e.value.is_real());
    rep.duration_ms = sw.elapsed_ms();
    return rep;
}

TwoDimModule hw_module(const HWParams& p) {
    TwoDimModule m;
    const Scalar fw = p.lambda1 * p.xi - p.lambda2;
    m.eps1 = SparseMat::diagonal({p.lambda1, p.lambda1 - Scalar(1)});
    m.eps2 = SparseMat::diagonal({p.lambda2, -(p.lambda2 - p.xi)});
    m.h = SparseMat::diagonal({p.xi, -p.xi});
    m.e = SparseMat::from_dense({{0, 0}, {1, 0}});
    m.f = SparseMat::from_dense({{0, fw}, {0, 0}});
    m.degenerate = fw.is_zero();
    return m;
}

CheckReport check_gl11_relations(const SparseMat& eps1, const SparseMat& eps2, const SparseMat& h, const SparseMat& e,
                                 const SparseMat& f, const std::string& name) {
    CheckReport rep(name);
    rep.expect_zero("[eps1,eps2]", commutator(eps1, eps2));
    rep.expect_zero("[h,eps1]", commutator(h, eps1));
    rep.expect_zero("[h,eps2]", commutator(h, eps2));
    rep.expect_equal("[eps1,e]", -e, commutator(eps1, e));
    rep.expect_equal("[eps1,f]", f, commutator(eps1, f));
    rep.expect_equal("{eps2,e}", mat_mul(e, h), anticommutator(eps2, e));
    // -fh (= hf). The -hf form fails on w whenever xi*(l1*xi - l2) != 0
    rep.expect_equal("{eps2,f}", -mat_mul(f, h), anticommutator(eps2, f));
    rep.expect_zero("{f,h}", anticommutator(f, h));
    rep.expect_zero("{e,h}", anticommutator(e, h));
    rep.expect_equal("[f,e]", mat_mul(eps1, h) - eps2, commutator(f, e));
    rep.expect_zero("e^2", mat_mul(e, e));
    rep.expect_zero("f^2", mat_mul(f, f));
    return rep;
}

CheckReport check_hw_module(const HWParams& p) {
    Stopwatch sw;
    const TwoDimModule m = hw_module(p);
    CheckReport rep = check_gl11_relations(m.eps1, m.eps2, m.h, m.e, m.f,
                                           "gl11/module (" + p.lambda1.str() + "," + p.lambda2.str() + "," +
                                               p.xi.str() + ")");
    // highest-weight data on u and the action on w
    const Vector u = Vector::basis(2, 0), w = Vector::basis(2, 1);
    rep.expect_equal("e u = w", w, apply(m.e, u));
    rep.expect_equal("f u = 0", Vector(2), apply(m.f, u));
    rep.expect_equal("f w", (p.lambda1 * p.xi - p.lambda2) * u, apply(m.f, w));
    if (m.degenerate) {
        rep.note("degenerate: lambda1*xi - lambda2 = 0, span{w} is invariant");
        rep.expect_zero("f = 0", m.f);
    }
    rep.duration_ms = sw.elapsed_ms();
    return rep;
}

ChainOps chain_ops(std::size_t sites, LegOrder order) {
    const GeneratorSet g(RepContext(2, 1, sites), order);
    return {sites, g.e(1), g.f(1), g.h(2), g.eps(1), g.eps(2)};
}

std::vector<Vector> weight_space(std::size_t sites, std::size_t p) {
    if (p > sites) throw std::invalid_argument("weight p exceeds the site count");
    const std::size_t dim = std::size_t{1} << sites;
    std::vector<Vector> out;
    for (std::size_t i = 0; i < dim; ++i)
        if (static_cast<std::size_t>(__builtin_popcountll(i)) == p) out.push_back(Vector::basis(dim, i));
    return out;
}

namespace {

// Scale to a primitive integer vector whose first nonzero coordinate is positive.
Vector normalize_primitive(const Vector& v) {
    if (v.is_zero()) return v;
    mpz_class den = 1, num = 0;
    for (const auto& it : v.items()) {
        if (!it.value.is_real()) return v;  // real kernels only occur here
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), it.value.re().get_den_mpz_t());
    }
    for (const auto& it : v.items()) {
        const mpz_class scaled = it.value.re().get_num() * (den / it.value.re().get_den());
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), scaled.get_mpz_t());
    }
    mpq_class factor(den, num);
    factor.canonicalize();
    if (sgn(v.items()[0].value.re()) < 0) factor = -factor;
    return Scalar(factor) * v;
}

}  // namespace

std::vector<Vector> highest_weight_kernel(std::size_t sites, std::size_t p) {
    if (sites < 1 || p + 1 > sites) throw std::invalid_argument("need 0 <= p <= N-1");
    const ChainOps ops = chain_ops(sites);
    const std::vector<Vector> ws = weight_space(sites, p);
    const SparseMat restricted = mat_mul(ops.f, columns_matrix(ws));
    std::vector<Vector> out;
    for (const auto& coeffs : kernel_basis(restricted)) {
        Vector v(ws.empty() ? 0 : ws[0].dim());
        for (const auto& it : coeffs.items()) v += it.value * ws[it.index];
        out.push_back(normalize_primitive(v));
    }
    return out;
}

CheckReport verify_kernel_module(std::size_t sites, std::size_t p, const Vector& varpi) {
    Stopwatch sw;
    CheckReport rep("gl11/kernel-module N=" + std::to_string(sites) + " p=" + std::to_string(p));
    const ChainOps ops = chain_ops(sites);
    const Vector zero(ops.f.rows());
    CheckReport pre("kernel-module precondition");
    pre.expect("nonzero", !varpi.is_zero());
    pre.expect_equal("f varpi = 0", zero, apply(ops.f, varpi));
    for (const auto& it : varpi.items())
        pre.expect("weight p", static_cast<std::size_t>(__builtin_popcountll(it.index)) == p);
    if (!pre.passed) throw PreconditionError("varpi must be a weight-p kernel vector of f", pre);

    const Vector next = apply(ops.e, varpi);
    rep.expect("e varpi nonzero", !next.is_zero());
    const long n = static_cast<long>(sites);
    for (std::size_t l : {p, p + 1}) {
        const Vector& v = l == p ? varpi : next;
        const long ll = static_cast<long>(l);
        const long sgn_l = ll % 2 == 0 ? 1 : -1;
        const std::string tag = "_" + std::to_string(l);
        rep.expect_equal("E1 varpi" + tag, Scalar(n - ll) * v, apply(ops.eps1, v));
        rep.expect_equal("E2 varpi" + tag, Scalar(-ll * sgn_l) * v, apply(ops.eps2, v));
        rep.expect_equal("h varpi" + tag, Scalar(sgn_l) * v, apply(ops.h, v));
    }
    rep.expect_equal("e varpi_{p+1}", zero, apply(ops.e, next));
    const Scalar c = Scalar((p % 2 == 0 ? 1 : -1) * n);
    rep.expect_equal("f varpi_{p+1} = (-1)^p N varpi_p", c * varpi, apply(ops.f, next));
    rep.duration_ms = sw.elapsed_ms();
    return rep;
}

CheckReport verify_adjoint_identity(std::size_t sites) {
    CheckReport rep("gl11/adjoint N=" + std::to_string(sites));
    const ChainOps ops = chain_ops(sites);
    rep.expect_equal("e^T = h f", mat_mul(ops.h, ops.f), ops.e.transpose());
    return rep;
}

CheckReport verify_orthogonality(std::size_t sites, std::size_t p) {
    Stopwatch sw;
    CheckReport rep("gl11/orthogonality N=" + std::to_string(sites) + " p=" + std::to_string(p));
    if (p + 2 > sites) throw std::invalid_argument("orthogonality needs p <= N-2");
    const ChainOps ops = chain_ops(sites);
    const auto low = highest_weight_kernel(sites, p);
    const auto high = highest_weight_kernel(sites, p + 1);
    for (std::size_t a = 0; a < low.size(); ++a) {
        const Vector ev = apply(ops.e, low[a]);
        rep.expect_equal("<varpi, e varpi>", Scalar(0), inner(low[a], ev));
        for (std::size_t b = 0; b < high.size(); ++b)
            rep.expect_equal("<e varpi_" + std::to_string(a) + ", varpi'_" + std::to_string(b) + ">", Scalar(0),
                             inner(ev, high[b]));
    }
    rep.absorb(verify_adjoint_identity(sites));
    rep.duration_ms = sw.elapsed_ms();
    return rep;
}

TensorDecomposition tensor_decompose(std::size_t n1, std::size_t p1, std::size_t n2, std::size_t p2,
                                     const Vector& varpi1, const Vector& varpi2) {
    if (n2 == 0) throw std::invalid_argument("tensor decomposition divides by N2, which must be positive");
    if (n1 == 0) throw std::invalid_argument("N1 must be positive");
    Stopwatch sw;
    TensorDecomposition out;
    const std::size_t sites = n1 + n2, p = p1 + p2;
    out.report = CheckReport("gl11/tensor (" + std::to_string(n1) + "," + std::to_string(p1) + ")x(" +
                             std::to_string(n2) + "," + std::to_string(p2) + ")");
    CheckReport& rep = out.report;
    rep.absorb(verify_kernel_module(n1, p1, varpi1));
    rep.absorb(verify_kernel_module(n2, p2, varpi2));

    const ChainOps o1 = chain_ops(n1), o2 = chain_ops(n2), o = chain_ops(sites);
    const Vector up1 = apply(o1.e, varpi1), up2 = apply(o2.e, varpi2);
    const Scalar coeff = Scalar(mpq_class(static_cast<long>(n1), static_cast<long>(n2))) * Scalar(p1 % 2 == 0 ? -1 : 1);
    out.a_low = kron(varpi1, varpi2);
    out.a_high = apply(o.e, out.a_low);
    out.b_low = kron(up1, varpi2) + coeff * kron(varpi1, up2);
    out.b_high = apply(o.e, out.b_low);

    const Vector zero(o.f.rows());
    rep.expect_equal("f (a)", zero, apply(o.f, out.a_low));
    rep.expect_equal("f (b)", zero, apply(o.f, out.b_low));
    rep.absorb(verify_kernel_module(sites, p, out.a_low));
    rep.absorb(verify_kernel_module(sites, p + 1, out.b_low));
    // the four vectors span the product of the two 2-dimensional modules
    const std::vector<Vector> four{out.a_low, out.a_high, out.b_low, out.b_high};
    rep.expect_equal("rank of the summand bases", Scalar(static_cast<long>(four.size())),
                     Scalar(static_cast<long>(rank_of(four))));
    rep.duration_ms = sw.elapsed_ms();
    return out;
}

bool valid_ssyt(const Tableau& t, std::size_t k) {
    for (std::size_t r = 0; r < t.size(); ++r) {
        if (r > 0 && t[r].size() > t[r - 1].size()) return false;
        for (std::size_t c = 0; c < t[r].size(); ++c) {
            const std::size_t v = t[r][c];
            if (c > 0) {
                const std::size_t left = t[r][c - 1];
                if (left > v || (left == v && v > k)) return false;
            }
            if (r > 0) {
                const std::size_t up = t[r - 1][c];
                if (up > v || (up == v && v <= k)) return false;
            }
        }
    }
    return true;
}

std::vector<Tableau> enumerate_ssyt(std::size_t n, std::size_t k, const std::vector<std::size_t>& shape) {
    for (std::size_t r = 1; r < shape.size(); ++r)
        if (shape[r] > shape[r - 1]) throw std::invalid_argument("shape must be a partition");
    Tableau t;
    for (std::size_t len : shape) t.emplace_back(len, 0);
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t r = 0; r < shape.size(); ++r)
        for (std::size_t c = 0; c < shape[r]; ++c) cells.emplace_back(r, c);

    std::vector<Tableau> out;
    std::function<void(std::size_t)> fill = [&](std::size_t i) {
        if (i == cells.size()) {
            out.push_back(t);
            return;
        }
        const auto [r, c] = cells[i];
        for (std::size_t v = 1; v <= n; ++v) {
            if (c > 0) {
                const std::size_t left = t[r][c - 1];
                if (left > v || (left == v && v > k)) continue;
            }
            if (r > 0) {
                const std::size_t up = t[r - 1][c];
                if (up > v || (up == v && v <= k)) continue;
            }
            t[r][c] = v;
            fill(i + 1);
        }
        t[r][c] = 0;
    };
    fill(0);
    return out;
}

std::vector<std::size_t> hook_shape(std::size_t sites, std::size_t p) {
    if (p + 1 > sites) throw std::invalid_argument("hook needs p <= N-1");
    std::vector<std::size_t> shape{sites - p};
    for (std::size_t i = 0; i < p; ++i) shape.push_back(1);
    return shape;
}

std::string render(const Tableau& t) {
    std::string s;
    for (const auto& row : t) {
        for (std::size_t c = 0; c < row.size(); ++c) s += (c ? " " : "") + std::to_string(row[c]);
        s += "\n";
    }
    return s;
}

SsytPairing ssyt_bijection(std::size_t sites, std::size_t p) {
    Stopwatch sw;
    SsytPairing out;
    out.report = CheckReport("gl11/ssyt N=" + std::to_string(sites) + " p=" + std::to_string(p));
    CheckReport& rep = out.report;
    const auto shape = hook_shape(sites, p);
    // mu_1: N-p ones and p twos; mu_2: N-p-1 ones and p+1 twos
    Tableau low, high;
    for (std::size_t r = 0; r < shape.size(); ++r) {
        low.emplace_back(shape[r], r == 0 ? 1 : 2);
        high.emplace_back(shape[r], r == 0 ? 1 : 2);
    }
    high[0].back() = 2;
    out.low = low;
    out.high = high;
    const auto all = enumerate_ssyt(2, 1, shape);
    rep.expect_equal("|SSYT(N,p)|", Scalar(2), Scalar(static_cast<long>(all.size())));
    rep.expect("mu_1 valid", valid_ssyt(low, 1));
    rep.expect("mu_2 valid", valid_ssyt(high, 1));
    rep.expect("enumeration is {mu_1, mu_2}", all == std::vector<Tableau>{low, high});
    auto count = [](const Tableau& t, std::size_t v) {
        std::size_t c = 0;
        for (const auto& row : t) c += static_cast<std::size_t>(std::count(row.begin(), row.end(), v));
        return c;
    };
    rep.expect("mu_1 has p twos", count(low, 2) == p);
    rep.expect("mu_2 has p+1 twos", count(high, 2) == p + 1);
    // each tableau's content matches the weight of its partner vector
    const auto kernel = highest_weight_kernel(sites, p);
    rep.expect("B_{N,p} is nonempty", !kernel.empty());
    if (!kernel.empty()) {
        const ChainOps ops = chain_ops(sites);
        const Vector up = apply(ops.e, kernel.front());
        rep.expect("|B_{N,p}| = 2", !kernel.front().is_zero() && !up.is_zero());
        for (const auto& it : up.items())
            rep.expect("varpi_{p+1} weight matches mu_2",
                       static_cast<std::size_t>(__builtin_popcountll(it.index)) == count(high, 2));
        for (const auto& it : kernel.front().items())
            rep.expect("varpi_p weight matches mu_1",
                       static_cast<std::size_t>(__builtin_popcountll(it.index)) == count(low, 2));
    }
    rep.duration_ms = sw.elapsed_ms();
    return out;
}

}  // namespace glkm::gl11
