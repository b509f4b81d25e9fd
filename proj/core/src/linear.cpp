#include "qtri/linear.hpp"

#include <stdexcept>
#include <utility>

namespace qtri {

std::size_t rank(ScalarMatrix m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size();
    const std::size_t cols = m.front().size();
    for (const auto& row : m) {
        if (row.size() != cols) throw std::invalid_argument("ragged matrix");
    }
    ScalarQ prev(1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = rows;
        for (std::size_t i = r; i < rows; ++i) {
            if (!m[i][c].is_zero()) {
                pivot = i;
                break;
            }
        }
        if (pivot == rows) continue;
        std::swap(m[r], m[pivot]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t k = c + 1; k < cols; ++k) {
                ScalarQ v = m[r][c] * m[i][k] - m[i][c] * m[r][k];
                auto q = divide_exact(v, prev);
                if (!q) throw std::logic_error("inexact Bareiss division");
                m[i][k] = std::move(*q);
            }
            m[i][c] = ScalarQ();
        }
        prev = m[r][c];
        ++r;
    }
    return r;
}

}  // namespace qtri
