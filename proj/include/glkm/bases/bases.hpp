#pragma once

#include "glkm/linalg/sparse.hpp"
#include "glkm/report/check_report.hpp"
#include "glkm/yangian/generators.hpp"

#include <string>
#include <vector>

namespace glkm {

enum class Family { plus, minus };
std::string to_string(Family f);

// Occupation numbers (m_1..m_n) labelling a u^{+/-} vector.
struct MultiIndex {
    Family sign = Family::plus;
    std::vector<long> m;

    std::string str() const;
    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
};

bool admissible(const RepContext& ctx, const MultiIndex& idx);

struct LabeledVector {
    MultiIndex index;
    Vector vec;
};

// Admissible indices, starting from the highest vector: descending
// lexicographic order for +, ascending for -.
std::vector<MultiIndex> enumerate_admissible(const RepContext& ctx, Family sign);

LabeledVector highest_vector(const GeneratorSet& g, Family sign);
CheckReport check_highest_vector(const GeneratorSet& g, Family sign);

// Ordered product t_{1,n}^{m_n} ... t_{1,2}^{m_2} e_1^{(x)N} for +, and
// t_{n,n-1}^{m_{n-1}} ... t_{n,1}^{m_1} e_n^{(x)N} for -.
LabeledVector build_u_vector(const GeneratorSet& g, const MultiIndex& idx);

CheckReport check_hamiltonian_eigen(const GeneratorSet& g);
// Action of h_x, E_x, e_x, f_x on one basis vector against the coefficient table.
CheckReport check_action(const GeneratorSet& g, const MultiIndex& idx);
CheckReport check_action_all(const GeneratorSet& g);
CheckReport check_family_independence(const GeneratorSet& g);

// Predicted coefficient and target of a raising/lowering step; target is
// empty when the shifted index is inadmissible (zero-vector prediction).
struct ShiftPrediction {
    Scalar coefficient;
    bool zero = false;
    MultiIndex target;
};
ShiftPrediction predict_e(const RepContext& ctx, const MultiIndex& idx, std::size_t x);
ShiftPrediction predict_f(const RepContext& ctx, const MultiIndex& idx, std::size_t x);

struct PairVector {
    std::size_t i, j;  // sorted label pair
    Vector vec;
    std::string label(Family f) const;
};

struct SpectralN2 {
    CheckReport report;
    std::vector<PairVector> plus;
    std::vector<PairVector> minus;
};

SpectralN2 spectral_decomposition_n2(std::size_t n, std::size_t k);
std::string action_graph_dot(std::size_t n, std::size_t k, Family family);

}  // namespace glkm
