#include "mbd/linalg.hpp"

namespace mbd {

int matrix_rank(std::vector<std::vector<uint8_t>> rows, const GaloisField& field) {
    if (rows.empty()) return 0;
    size_t width = rows[0].size();
    for (const auto& r : rows)
        if (r.size() != width) throw InputError("matrix_rank: ragged input");

    int rank = 0;
    size_t col = 0;
    for (; col < width && rank < int(rows.size()); ++col) {
        int pivot = -1;
        for (int r = rank; r < int(rows.size()); ++r) {
            if (rows[r][col] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        uint8_t piv_inv = field.inv(rows[rank][col]);
        for (size_t c = col; c < width; ++c) rows[rank][c] = field.mul(rows[rank][c], piv_inv);
        for (int r = 0; r < int(rows.size()); ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            uint8_t factor = rows[r][col];
            for (size_t c = col; c < width; ++c)
                rows[r][c] = field.sub(rows[r][c], field.mul(factor, rows[rank][c]));
        }
        ++rank;
    }
    return rank;
}

std::vector<uint8_t> solve_in_span(const std::vector<std::vector<uint8_t>>& cols,
                                   const std::vector<uint8_t>& target, const GaloisField& field) {
    size_t n = cols.size();
    size_t rows = target.size();
    for (const auto& c : cols)
        if (c.size() != rows) throw InputError("solve_in_span: ragged input");

    // Augmented matrix [cols | target], eliminated by rows.
    std::vector<std::vector<uint8_t>> a(rows, std::vector<uint8_t>(n + 1, 0));
    for (size_t r = 0; r < rows; ++r) {
        for (size_t c = 0; c < n; ++c) a[r][c] = cols[c][r];
        a[r][n] = target[r];
    }
    std::vector<int> pivot_of_col(n, -1);
    size_t rank = 0;
    for (size_t col = 0; col < n && rank < rows; ++col) {
        size_t piv = rank;
        while (piv < rows && a[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[rank], a[piv]);
        uint8_t inv = field.inv(a[rank][col]);
        for (size_t c = col; c <= n; ++c) a[rank][c] = field.mul(a[rank][c], inv);
        for (size_t r = 0; r < rows; ++r) {
            if (r == rank || a[r][col] == 0) continue;
            uint8_t f = a[r][col];
            for (size_t c = col; c <= n; ++c) a[r][c] = field.sub(a[r][c], field.mul(f, a[rank][c]));
        }
        pivot_of_col[col] = int(rank);
        ++rank;
    }
    for (size_t c = 0; c < n; ++c)
        if (pivot_of_col[c] < 0) throw PreconditionError("solve_in_span: columns are dependent");
    for (size_t r = rank; r < rows; ++r)
        if (a[r][n] != 0) throw PreconditionError("solve_in_span: target outside span");

    std::vector<uint8_t> x(n, 0);
    for (size_t c = 0; c < n; ++c) x[c] = a[pivot_of_col[c]][n];
    return x;
}

}  // namespace mbd
