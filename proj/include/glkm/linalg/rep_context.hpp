#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace glkm {

// Alphabet [n] split as bosonic [k] and fermionic {k+1..n}, plus the number
// of tensor sites. Letters are 1-based throughout.
struct RepContext {
    std::size_t n = 2;
    std::size_t k = 1;
    std::size_t N = 1;

    RepContext() = default;
    RepContext(std::size_t n_, std::size_t k_, std::size_t sites);

    std::size_t m() const { return n - k; }
    std::size_t dim() const;
    bool bosonic(std::size_t x) const { return x <= k; }
    bool fermionic(std::size_t x) const { return x > k; }

    // e_{x_1} (x) ... (x) e_{x_N} -> sum (x_j - 1) n^{N-j}
    std::size_t encode(const std::vector<std::size_t>& letters) const;
    std::vector<std::size_t> decode(std::size_t index) const;

    std::string str() const;
};

}  // namespace glkm
