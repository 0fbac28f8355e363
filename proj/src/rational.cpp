#include "mbd/rational.hpp"

#include "mbd/common.hpp"

namespace mbd {

bool collinear(const PointQ2& a, const PointQ2& b, const PointQ2& c) {
    // det of [[ax ay 1], [bx by 1], [cx cy 1]] by cofactor expansion.
    Rational det = a.x * (b.y - c.y) - a.y * (b.x - c.x) + (b.x * c.y - c.x * b.y);
    return det == 0;
}

int rational_matrix_rank(std::vector<std::vector<Rational>> rows) {
    if (rows.empty()) return 0;
    size_t width = rows[0].size();
    for (const auto& r : rows)
        if (r.size() != width) throw InputError("rational_matrix_rank: ragged input");

    int rank = 0;
    for (size_t col = 0; col < width && rank < int(rows.size()); ++col) {
        int pivot = -1;
        for (int r = rank; r < int(rows.size()); ++r) {
            if (rows[r][col] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        Rational inv = 1 / rows[rank][col];
        for (size_t c = col; c < width; ++c) rows[rank][c] *= inv;
        for (int r = 0; r < int(rows.size()); ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            Rational f = rows[r][col];
            for (size_t c = col; c < width; ++c) rows[r][c] -= f * rows[rank][c];
        }
        ++rank;
    }
    return rank;
}

}  // namespace mbd
