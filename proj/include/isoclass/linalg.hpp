#ifndef ISOCLASS_LINALG_HPP
#define ISOCLASS_LINALG_HPP

// Small dense matrices over an exact field. Nothing clever: the matrices in
// this project are at most 4x4 (12x12 for Sylvester blocks handled elsewhere).

#include "isoclass/poly.hpp"

#include <vector>

namespace isoclass {

template <class T>
using Mat = std::vector<std::vector<T>>;

template <class T>
Mat<T> mat_identity(size_t n) {
    Mat<T> m(n, std::vector<T>(n, T(0)));
    for (size_t i = 0; i < n; ++i) m[i][i] = T(1);
    return m;
}

template <class T>
Mat<T> mat_mul(const Mat<T>& a, const Mat<T>& b) {
    size_t n = a.size(), k = b.size(), m = b[0].size();
    Mat<T> r(n, std::vector<T>(m, T(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t l = 0; l < k; ++l) {
            if (a[i][l] == T(0)) continue;
            for (size_t j = 0; j < m; ++j) r[i][j] = r[i][j] + a[i][l] * b[l][j];
        }
    return r;
}

template <class T>
std::vector<T> mat_apply(const Mat<T>& a, const std::vector<T>& v) {
    std::vector<T> r(a.size(), T(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j) r[i] = r[i] + a[i][j] * v[j];
    return r;
}

template <class T>
T mat_trace(const Mat<T>& a) {
    T t(0);
    for (size_t i = 0; i < a.size(); ++i) t = t + a[i][i];
    return t;
}

// Gauss elimination; returns determinant, optionally the inverse
template <class T>
T mat_det_inverse(Mat<T> a, Mat<T>* inv = nullptr) {
    size_t n = a.size();
    Mat<T> id = mat_identity<T>(n);
    T det(1);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col] == T(0)) ++piv;
        if (piv == n) {
            if (inv) throw std::domain_error("matrix not invertible");
            return T(0);
        }
        if (piv != col) {
            std::swap(a[piv], a[col]);
            std::swap(id[piv], id[col]);
            det = T(0) - det;
        }
        det = det * a[col][col];
        T s = T(1) / a[col][col];
        for (size_t j = 0; j < n; ++j) {
            a[col][j] = s * a[col][j];
            id[col][j] = s * id[col][j];
        }
        for (size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col] == T(0)) continue;
            T f = a[i][col];
            for (size_t j = 0; j < n; ++j) {
                a[i][j] = a[i][j] - f * a[col][j];
                id[i][j] = id[i][j] - f * id[col][j];
            }
        }
    }
    if (inv) *inv = id;
    return det;
}

// characteristic polynomial by Faddeev-LeVerrier (field of characteristic 0)
template <class T>
poly<T> mat_charpoly(const Mat<T>& a) {
    size_t n = a.size();
    std::vector<T> c(n + 1, T(0));
    c[n] = T(1);
    Mat<T> m = a;
    c[n - 1] = T(0) - mat_trace(m);
    for (size_t k = 2; k <= n; ++k) {
        Mat<T> t = m;
        for (size_t i = 0; i < n; ++i) t[i][i] = t[i][i] + c[n - k + 1];
        m = mat_mul(a, t);
        c[n - k] = (T(0) - mat_trace(m)) / T(static_cast<long>(k));
    }
    return poly<T>(std::move(c));
}

// solve a*x = b; returns false if singular/inconsistent handling not needed here
template <class T>
bool mat_solve(Mat<T> a, std::vector<T> b, std::vector<T>& x) {
    size_t n = a.size();
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col] == T(0)) ++piv;
        if (piv == n) return false;
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        T s = T(1) / a[col][col];
        for (size_t j = 0; j < n; ++j) a[col][j] = s * a[col][j];
        b[col] = s * b[col];
        for (size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col] == T(0)) continue;
            T f = a[i][col];
            for (size_t j = 0; j < n; ++j) a[i][j] = a[i][j] - f * a[col][j];
            b[i] = b[i] - f * b[col];
        }
    }
    x = b;
    return true;
}

} // namespace isoclass

#endif
