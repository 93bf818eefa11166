#include "alg/linalg.hpp"

#include "core/error.hpp"

namespace autoseq {

namespace {

std::optional<std::vector<felem>> kernel_f2(const std::vector<std::vector<felem>>& columns) {
    size_t n = columns[0].size();
    size_t words = (n + 63) / 64;
    size_t m = columns.size();
    size_t cwords = (m + 63) / 64;

    std::vector<std::vector<uint64_t>> pivots;   // reduced columns
    std::vector<std::vector<uint64_t>> combos;   // their combinations
    std::vector<size_t> pivot_rows;

    std::vector<uint64_t> col(words), comb(cwords);
    for (size_t idx = 0; idx < m; ++idx) {
        std::fill(col.begin(), col.end(), 0);
        std::fill(comb.begin(), comb.end(), 0);
        for (size_t row = 0; row < n; ++row)
            if (columns[idx][row] & 1) col[row >> 6] |= 1ull << (row & 63);
        comb[idx >> 6] |= 1ull << (idx & 63);

        for (size_t k = 0; k < pivots.size(); ++k) {
            size_t pr = pivot_rows[k];
            if ((col[pr >> 6] >> (pr & 63)) & 1) {
                for (size_t w = 0; w < words; ++w) col[w] ^= pivots[k][w];
                for (size_t w = 0; w < cwords; ++w) comb[w] ^= combos[k][w];
            }
        }

        size_t pr = n;
        for (size_t row = 0; row < n; ++row) {
            if ((col[row >> 6] >> (row & 63)) & 1) {
                pr = row;
                break;
            }
        }
        if (pr == n) {
            std::vector<felem> v(m, 0);
            for (size_t j = 0; j < m; ++j)
                if ((comb[j >> 6] >> (j & 63)) & 1) v[j] = 1;
            return v;
        }
        pivots.push_back(col);
        combos.push_back(comb);
        pivot_rows.push_back(pr);
    }
    return std::nullopt;
}

} // namespace

std::optional<std::vector<felem>> kernel_vector(const FieldCtx& F,
                                                const std::vector<std::vector<felem>>& columns) {
    if (columns.empty()) return std::nullopt;
    size_t n = columns[0].size();
    for (const auto& c : columns)
        if (c.size() != n) fail(errc::invalid_argument, "column length mismatch");

    if (F.q() == 2) return kernel_f2(columns);

    size_t m = columns.size();
    std::vector<std::vector<felem>> pivots, combos;
    std::vector<size_t> pivot_rows;
    for (size_t idx = 0; idx < m; ++idx) {
        std::vector<felem> col = columns[idx];
        std::vector<felem> comb(m, 0);
        comb[idx] = F.one();

        for (size_t k = 0; k < pivots.size(); ++k) {
            felem f = col[pivot_rows[k]];
            if (f == 0) continue;
            for (size_t row = 0; row < n; ++row)
                col[row] = F.sub(col[row], F.mul(f, pivots[k][row]));
            for (size_t j = 0; j < m; ++j) comb[j] = F.sub(comb[j], F.mul(f, combos[k][j]));
        }

        size_t pr = n;
        for (size_t row = 0; row < n; ++row) {
            if (col[row] != 0) {
                pr = row;
                break;
            }
        }
        if (pr == n) {
            felem lead = 0;
            for (felem v : comb)
                if (v) {
                    lead = v;
                    break;
                }
            felem inv = F.inv(lead);
            for (auto& v : comb) v = F.mul(v, inv);
            return comb;
        }
        felem inv = F.inv(col[pr]);
        for (auto& v : col) v = F.mul(v, inv);
        for (auto& v : comb) v = F.mul(v, inv);
        pivots.push_back(std::move(col));
        combos.push_back(std::move(comb));
        pivot_rows.push_back(pr);
    }
    return std::nullopt;
}

uint32_t matrix_rank(const FieldCtx& F, const std::vector<std::vector<felem>>& columns) {
    if (columns.empty()) return 0;
    size_t n = columns[0].size();
    size_t m = columns.size();
    // Row-major copy, reduced by rows.
    std::vector<std::vector<felem>> rows(n, std::vector<felem>(m, 0));
    for (size_t j = 0; j < m; ++j)
        for (size_t i = 0; i < n; ++i) rows[i][j] = columns[j][i];

    uint32_t rank = 0;
    size_t row = 0;
    for (size_t col = 0; col < m && row < n; ++col) {
        size_t pivot = row;
        while (pivot < n && rows[pivot][col] == 0) ++pivot;
        if (pivot == n) continue;
        std::swap(rows[pivot], rows[row]);
        felem inv = F.inv(rows[row][col]);
        for (auto& v : rows[row]) v = F.mul(v, inv);
        for (size_t i = 0; i < n; ++i) {
            if (i == row || rows[i][col] == 0) continue;
            felem f = rows[i][col];
            for (size_t j = 0; j < m; ++j) rows[i][j] = F.sub(rows[i][j], F.mul(f, rows[row][j]));
        }
        ++row;
        ++rank;
    }
    return rank;
}

} // namespace autoseq
