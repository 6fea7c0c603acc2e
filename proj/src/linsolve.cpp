#include "linsolve.hpp"

#include <map>

namespace macvv {

std::optional<std::vector<RatFun>> express_in_span(const std::vector<VElement>& cols,
                                                   const VElement& target) {
    const std::size_t m = cols.size();
    // Row index per basis key, in key order for determinism.
    std::map<VKey, int> row_of;
    auto index_keys = [&](const VElement& v) {
        for (auto& [k, c] : v.terms()) row_of.try_emplace(k, 0);
    };
    for (auto& c : cols) index_keys(c);
    index_keys(target);
    int rows = 0;
    for (auto& [k, r] : row_of) r = rows++;

    std::vector<std::vector<RatFun>> a(rows, std::vector<RatFun>(m));
    std::vector<RatFun> b(rows);
    for (std::size_t j = 0; j < m; ++j)
        for (auto& [k, c] : cols[j].terms()) a[row_of.at(k)][j] = c;
    for (auto& [k, c] : target.terms()) b[row_of.at(k)] = c;

    std::vector<int> pivot_row(m, -1);
    int r = 0;
    for (std::size_t j = 0; j < m && r < rows; ++j) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (!a[i][j].is_zero()) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(a[p], a[r]);
        std::swap(b[p], b[r]);
        for (int i = r + 1; i < rows; ++i) {
            if (a[i][j].is_zero()) continue;
            RatFun f = a[i][j] / a[r][j];
            for (std::size_t k = j; k < m; ++k)
                if (!a[r][k].is_zero()) a[i][k] -= f * a[r][k];
            if (!b[r].is_zero()) b[i] -= f * b[r];
        }
        pivot_row[j] = r++;
    }
    for (int i = r; i < rows; ++i)
        if (!b[i].is_zero()) return std::nullopt;

    std::vector<RatFun> x(m);
    for (int j = (int)m - 1; j >= 0; --j) {
        if (pivot_row[j] < 0) continue; // free (dependent) column: coordinate 0
        RatFun acc = b[pivot_row[j]];
        for (std::size_t k = j + 1; k < m; ++k)
            if (!a[pivot_row[j]][k].is_zero() && !x[k].is_zero())
                acc -= a[pivot_row[j]][k] * x[k];
        x[j] = acc / a[pivot_row[j]][j];
    }

    // Safety: the coordinates must reproduce the target exactly.
    VElement check(target.shape());
    for (std::size_t j = 0; j < m; ++j)
        if (!x[j].is_zero()) check = check + cols[j].scaled(x[j]);
    if (!(check == target)) return std::nullopt;
    return x;
}

} // namespace macvv
