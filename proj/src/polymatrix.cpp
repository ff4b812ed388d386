#include "gcanon/polymatrix.hpp"

#include <sstream>
#include <stdexcept>

namespace gcanon {

PolyMatrix PolyMatrix::transpose() const {
    PolyMatrix t(c_, r_, nv_);
    for (int i = 0; i < r_; i++)
        for (int j = 0; j < c_; j++) t.at(j, i) = at(i, j);
    return t;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
    if (c_ != o.r_) throw std::logic_error("PolyMatrix shape mismatch");
    PolyMatrix out(r_, o.c_, nv_);
    for (int i = 0; i < r_; i++)
        for (int j = 0; j < o.c_; j++) {
            MultiPoly s(nv_);
            for (int k = 0; k < c_; k++) s += at(i, k) * o.at(k, j);
            out.at(i, j) = s;
        }
    return out;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const {
    PolyMatrix out(r_, c_, nv_);
    for (int i = 0; i < r_ * c_; i++) out.a_[i] = a_[i] + o.a_[i];
    return out;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& o) const {
    PolyMatrix out(r_, c_, nv_);
    for (int i = 0; i < r_ * c_; i++) out.a_[i] = a_[i] - o.a_[i];
    return out;
}

bool PolyMatrix::operator==(const PolyMatrix& o) const {
    if (r_ != o.r_ || c_ != o.c_) return false;
    for (int i = 0; i < r_ * c_; i++)
        if (!(a_[i] == o.a_[i])) return false;
    return true;
}

PolyMatrix PolyMatrix::minor_matrix(int row, int col) const {
    return minor_matrix(std::vector<int>{row}, std::vector<int>{col});
}

PolyMatrix PolyMatrix::minor_matrix(const std::vector<int>& rows_out,
                                    const std::vector<int>& cols_out) const {
    std::vector<int> rkeep, ckeep;
    for (int i = 0; i < r_; i++) {
        bool drop = false;
        for (int r : rows_out) drop |= (r == i);
        if (!drop) rkeep.push_back(i);
    }
    for (int j = 0; j < c_; j++) {
        bool drop = false;
        for (int cc : cols_out) drop |= (cc == j);
        if (!drop) ckeep.push_back(j);
    }
    PolyMatrix out(int(rkeep.size()), int(ckeep.size()), nv_);
    for (size_t i = 0; i < rkeep.size(); i++)
        for (size_t j = 0; j < ckeep.size(); j++) out.at(int(i), int(j)) = at(rkeep[i], ckeep[j]);
    return out;
}

MultiPoly PolyMatrix::det_cofactor() const {
    if (r_ != c_) throw std::logic_error("det of non-square matrix");
    if (r_ == 0) return MultiPoly::constant(nv_, 1);
    if (r_ == 1) return at(0, 0);
    MultiPoly s(nv_);
    for (int j = 0; j < c_; j++) {
        if (at(0, j).is_zero()) continue;
        MultiPoly sub = minor_matrix(0, j).det_cofactor();
        MultiPoly term = at(0, j) * sub;
        if (j % 2) term = -term;
        s += term;
    }
    return s;
}

MultiPoly PolyMatrix::det() const {
    if (r_ != c_) throw std::logic_error("det of non-square matrix");
    if (r_ < 4) return det_cofactor();
    // One-step Bareiss: all divisions below are exact.
    int n = r_;
    std::vector<MultiPoly> m = a_;
    auto M = [&](int i, int j) -> MultiPoly& { return m[size_t(i) * n + j]; };
    MultiPoly prev = MultiPoly::constant(nv_, 1);
    int sign = 1;
    for (int k = 0; k < n - 1; k++) {
        if (M(k, k).is_zero()) {
            int p = -1;
            for (int i = k + 1; i < n; i++)
                if (!M(i, k).is_zero()) {
                    p = i;
                    break;
                }
            if (p < 0) return MultiPoly(nv_);  // singular
            for (int j = 0; j < n; j++) std::swap(M(k, j), M(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; i++) {
            for (int j = k + 1; j < n; j++) {
                MultiPoly num = M(i, j) * M(k, k) - M(i, k) * M(k, j);
                auto q = MultiPoly::exact_divide(num, prev);
                if (!q) throw std::logic_error("Bareiss exact division failed");
                M(i, j) = std::move(*q);
            }
            M(i, k) = MultiPoly(nv_);
        }
        prev = M(k, k);
    }
    MultiPoly d = M(n - 1, n - 1);
    if (sign < 0) d = -d;
    return d;
}

PolyMatrix PolyMatrix::adjugate() const {
    if (r_ != c_) throw std::logic_error("adjugate of non-square matrix");
    PolyMatrix out(r_, c_, nv_);
    for (int i = 0; i < r_; i++)
        for (int j = 0; j < c_; j++) {
            MultiPoly d = minor_matrix(j, i).det();
            if ((i + j) % 2) d = -d;
            out.at(i, j) = d;
        }
    return out;
}

PolyMatrix PolyMatrix::derivative(int var) const {
    PolyMatrix out(r_, c_, nv_);
    for (int i = 0; i < r_ * c_; i++) out.a_[i] = a_[i].derivative(var);
    return out;
}

std::vector<std::vector<Rat>> PolyMatrix::eval(const std::vector<Rat>& point) const {
    std::vector<std::vector<Rat>> out(r_, std::vector<Rat>(c_));
    for (int i = 0; i < r_; i++)
        for (int j = 0; j < c_; j++) out[i][j] = at(i, j).eval(point);
    return out;
}

std::string PolyMatrix::str() const {
    std::ostringstream os;
    for (int i = 0; i < r_; i++) {
        os << "[";
        for (int j = 0; j < c_; j++) {
            if (j) os << ", ";
            os << at(i, j).str();
        }
        os << "]\n";
    }
    return os.str();
}

Rat det_rat(std::vector<std::vector<Rat>> m) {
    int n = int(m.size());
    Rat d(1);
    int sign = 1;
    for (int k = 0; k < n; k++) {
        int p = -1;
        for (int i = k; i < n; i++)
            if (m[i][k] != 0) {
                p = i;
                break;
            }
        if (p < 0) return Rat(0);
        if (p != k) {
            std::swap(m[p], m[k]);
            sign = -sign;
        }
        d *= m[k][k];
        for (int i = k + 1; i < n; i++) {
            Rat f = m[i][k] / m[k][k];
            for (int j = k; j < n; j++) m[i][j] -= f * m[k][j];
        }
    }
    return sign < 0 ? Rat(-d) : d;
}

Int det_int(std::vector<std::vector<Int>> m) {
    int n = int(m.size());
    if (n == 0) return Int(1);
    Int prev(1);
    int sign = 1;
    for (int k = 0; k < n - 1; k++) {
        if (m[k][k] == 0) {
            int p = -1;
            for (int i = k + 1; i < n; i++)
                if (m[i][k] != 0) {
                    p = i;
                    break;
                }
            if (p < 0) return Int(0);
            std::swap(m[p], m[k]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; i++) {
            for (int j = k + 1; j < n; j++) {
                Int num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    Int d = m[n - 1][n - 1];
    return sign < 0 ? Int(-d) : d;
}

}  // namespace gcanon
