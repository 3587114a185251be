#pragma once

// Independent derivation of the WENO coefficient tables in exact rational
// arithmetic: polynomial reconstruction from cell averages, optimal weights
// by matching the wide-stencil reconstruction, and Jiang-Shu smoothness forms
// by integrating squared derivatives over the central cell.

#include <boost/rational.hpp>

#include <stdexcept>
#include <vector>

namespace oracle {

using Q = boost::rational<long long>;
using QMatrix = std::vector<std::vector<Q>>;

inline QMatrix invert(QMatrix a) {
    const std::size_t n = a.size();
    QMatrix inv(n, std::vector<Q>(n, Q(0)));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col].numerator() == 0) ++pivot;
        if (pivot == n) throw std::runtime_error("singular matrix");
        std::swap(a[col], a[pivot]);
        std::swap(inv[col], inv[pivot]);
        const Q p = a[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col].numerator() == 0) continue;
            const Q f = a[i][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[i][j] -= f * a[col][j];
                inv[i][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

inline Q ipow(Q base, int e) {
    Q out(1);
    for (int i = 0; i < e; ++i) out *= base;
    return out;
}

// Unit cells, interface x_{i+1/2} = 0, so cell i + s is [s - 1, s].
// Row j of the result maps the averages over cells first, ..., first + n - 1
// to monomial coefficients a_0, ..., a_{n-1} (column j <-> cell first + j).
inline QMatrix averages_to_monomials(int first, int n) {
    QMatrix m(n, std::vector<Q>(n));
    for (int j = 0; j < n; ++j) {
        const Q lo(first + j - 1), hi(first + j);
        for (int p = 0; p < n; ++p) {
            m[j][p] = (ipow(hi, p + 1) - ipow(lo, p + 1)) / Q(p + 1);
        }
    }
    return invert(m);
}

struct Tables {
    int k = 0;
    QMatrix c;               // c[r][j], stencil r = cells i-r .. i-r+k
    std::vector<Q> d;
    std::vector<QMatrix> b;  // b[r][a][b]
};

inline Tables derive(int k) {
    const int n = k + 1;
    Tables t;
    t.k = k;

    std::vector<QMatrix> to_coeffs;
    for (int r = 0; r <= k; ++r) {
        QMatrix inv = averages_to_monomials(-r, n);
        std::vector<Q> row(n);
        for (int j = 0; j < n; ++j) row[j] = inv[0][j];  // p(0) = a_0
        t.c.push_back(row);
        to_coeffs.push_back(std::move(inv));
    }

    // Wide stencil i-k .. i+k; index w <-> offset w - k.
    const QMatrix wide = averages_to_monomials(-k, 2 * k + 1);
    std::vector<Q> target(2 * k + 1);
    for (int w = 0; w <= 2 * k; ++w) target[w] = wide[0][w];
    // Offset k - s is reached by candidates r = 0..s, at position j = k - s + r.
    t.d.assign(n, Q(0));
    for (int s = 0; s <= k; ++s) {
        Q acc = target[2 * k - s];
        for (int r = 0; r < s; ++r) acc -= t.d[r] * t.c[r][k - s + r];
        t.d[s] = acc / t.c[s][k];
    }
    for (int w = 0; w <= 2 * k; ++w) {
        const int offset = w - k;
        Q sum(0);
        for (int r = 0; r <= k; ++r) {
            const int j = offset + r;
            if (j >= 0 && j <= k) sum += t.d[r] * t.c[r][j];
        }
        if (sum != target[w]) throw std::runtime_error("optimal weights do not reproduce the wide stencil");
    }

    // beta = sum_{l=1..k} int_{-1}^{0} (p^(l))^2 dx with p = sum_p a_p x^p.
    QMatrix g(n, std::vector<Q>(n, Q(0)));
    for (int l = 1; l <= k; ++l) {
        for (int p = l; p < n; ++p) {
            for (int q = l; q < n; ++q) {
                Q fp(1), fq(1);
                for (int s = 0; s < l; ++s) {
                    fp *= Q(p - s);
                    fq *= Q(q - s);
                }
                const int e = p - l + q - l;
                const Q integral = Q(e % 2 == 0 ? 1 : -1, e + 1);  // int_{-1}^0 x^e
                g[p][q] += fp * fq * integral;
            }
        }
    }
    for (int r = 0; r <= k; ++r) {
        const QMatrix& a = to_coeffs[r];
        QMatrix br(n, std::vector<Q>(n, Q(0)));
        for (int x = 0; x < n; ++x) {
            for (int y = 0; y < n; ++y) {
                Q s(0);
                for (int p = 0; p < n; ++p) {
                    for (int q = 0; q < n; ++q) s += a[p][x] * g[p][q] * a[q][y];
                }
                br[x][y] = s;
            }
        }
        t.b.push_back(std::move(br));
    }
    return t;
}

} // namespace oracle
