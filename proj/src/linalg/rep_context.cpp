#include "glkm/linalg/rep_context.hpp"

#include <stdexcept>

namespace glkm {

RepContext::RepContext(std::size_t n_, std::size_t k_, std::size_t sites) : n(n_), k(k_), N(sites) {
    if (n < 1) throw std::invalid_argument("alphabet size must be at least 1");
    if (k > n) throw std::invalid_argument("k must not exceed n");
    if (N < 1) throw std::invalid_argument("at least one site is required");
}

std::size_t RepContext::dim() const {
    std::size_t d = 1;
    for (std::size_t j = 0; j < N; ++j) d *= n;
    return d;
}

std::size_t RepContext::encode(const std::vector<std::size_t>& letters) const {
    if (letters.size() != N) throw std::invalid_argument("word length does not match the site count");
    std::size_t idx = 0;
    for (std::size_t x : letters) {
        if (x < 1 || x > n) throw std::out_of_range("letter " + std::to_string(x) + " outside [" + std::to_string(n) + "]");
        idx = idx * n + (x - 1);
    }
    return idx;
}

std::vector<std::size_t> RepContext::decode(std::size_t index) const {
    if (index >= dim()) throw std::out_of_range("basis index outside the representation");
    std::vector<std::size_t> letters(N);
    for (std::size_t j = N; j-- > 0;) {
        letters[j] = index % n + 1;
        index /= n;
    }
    return letters;
}

std::string RepContext::str() const {
    return "n=" + std::to_string(n) + " k=" + std::to_string(k) + " m=" + std::to_string(m()) +
           " N=" + std::to_string(N);
}

}  // namespace glkm
