#include "cayley/coeffs.hpp"

namespace cayley {

CoeffMatrix CoeffMatrix::build_recursive(int n_max) {
    if (n_max < 1) throw IndexOutOfRange("n_max must be >= 1");
    CoeffMatrix m(n_max);
    // colsum[j] = sum of a_{l,j} over the rows filled so far
    std::vector<BigInt> colsum(static_cast<std::size_t>(n_max) + 1);
    for (int i = 1; i <= n_max; ++i) {
        for (int j = 1; j <= n_max; ++j) {
            BigInt v;
            if (i == 1)
                v = (j == 1) ? -1 : 0;
            else if (j == 1)
                v = (i == 2) ? 1 : 0;
            else
                v = colsum[static_cast<std::size_t>(j - 1)] - colsum[static_cast<std::size_t>(j)] +
                    m.at(i - 1, j - 1);
            m.at(i, j) = v;
        }
        for (int j = 1; j <= n_max; ++j) colsum[static_cast<std::size_t>(j)] += m.at(i, j);
    }
    return m;
}

const BigInt& CoeffMatrix::at(int i, int j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_)
        throw IndexOutOfRange("coefficient index (" + std::to_string(i) + "," + std::to_string(j) +
                              ") outside 1.." + std::to_string(n_));
    return e_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)];
}

BigInt& CoeffMatrix::at(int i, int j) {
    return const_cast<BigInt&>(static_cast<const CoeffMatrix&>(*this).at(i, j));
}

BigInt binomial(long long l, long long m) {
    if (m < 0 || l < 0 || m > l) return 0;
    if (m > l - m) m = l - m;
    BigInt r = 1;
    for (long long t = 1; t <= m; ++t) {
        r *= l - m + t;
        r /= t;
    }
    return r;
}

BigInt closed_form(int i, int j) {
    if (i < 1 || j < 1) throw IndexOutOfRange("closed_form requires i,j >= 1");
    BigInt v = 0;
    const BigInt b1 = binomial(j - 1, static_cast<long long>(i) - j - 1);
    if (b1 != 0) {
        // C(j-1, i-j-1) != 0 implies i <= 2j, so 2j-i >= 0
        BigInt term = b1 << (2 * j - i);
        v += ((i - j - 1) % 2 == 0) ? term : -term;
    }
    const BigInt b2 = binomial(j - 1, static_cast<long long>(i) - j);
    if (b2 != 0) {
        // C(j-1, i-j) != 0 implies i <= 2j-1, so 2j-i-1 >= 0
        BigInt term = b2 << (2 * j - i - 1);
        v -= ((i - j) % 2 == 0) ? term : -term;
    }
    return v;
}

std::vector<RowCheck> check_row_identities(const CoeffMatrix& m) {
    std::vector<RowCheck> out;
    for (int n = 1; n <= m.n_max(); ++n) {
        RowCheck rc;
        rc.row = n;
        BigInt sum = 0;
        for (int j = 1; j <= m.n_max(); ++j) sum += m.at(n, j);
        if (sum != -1) {
            rc.pass = false;
            rc.first_failure = "sum";
        }
        if (rc.pass) {
            BigInt diag = BigInt(1) << (n - 1);
            if (m.at(n, n) != -diag) {
                rc.pass = false;
                rc.first_failure = "diagonal";
            }
        }
        if (rc.pass) {
            for (int l = n + 1; l <= m.n_max(); ++l)
                if (m.at(n, l) != 0) {
                    rc.pass = false;
                    rc.first_failure = "upper-zero";
                    break;
                }
        }
        if (rc.pass) {
            const int odd_col = (n + 1) / 2;  // ceil(n/2)
            for (int j = 1; j <= m.n_max(); ++j) {
                const bool odd = m.at(n, j) % 2 != 0;
                if (odd != (j == odd_col)) {
                    rc.pass = false;
                    rc.first_failure = "odd-entry";
                    break;
                }
            }
        }
        out.push_back(std::move(rc));
    }
    return out;
}

bool check_sum_identity(const CoeffMatrix& mat, int m, int n) {
    if (m < 1 || n < m || n + 1 > mat.n_max())
        throw IndexOutOfRange("check_sum_identity requires 1 <= m <= n <= n_max-1");
    BigInt lhs = 0;
    for (int j = m; j <= n; ++j) lhs += mat.at(n, j);
    for (int j = m; j <= n; ++j) lhs += mat.at(j, m);
    BigInt rhs = 0;
    for (int j = m + 1; j <= n + 1; ++j) rhs += mat.at(n + 1, j);
    return lhs == rhs;
}

}  // namespace cayley
