#include "qtrace/integer.hpp"

#include <sstream>

namespace qtrace {

Int determinant(IntMat a) {
    const Index n = a.rows();
    if (n != a.cols()) throw Error("DimensionMismatch", "determinant of a non-square matrix");
    if (n == 0) return 1;
    Int sign = 1, prev = 1;
    for (Index k = 0; k < n - 1; ++k) {
        if (a(k, k) == 0) {
            Index p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return 0;
            a.row(k).swap(a.row(p));
            sign = -sign;
        }
        for (Index i = k + 1; i < n; ++i)
            for (Index j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

Int int_pow(const Int& base, long long e) {
    Int r = 1;
    for (long long i = 0; i < e; ++i) r *= base;
    return r;
}

IntMat to_int(const Mat<long long>& m) {
    IntMat out(m.rows(), m.cols());
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
    return out;
}

Mat<long long> to_ll(const IntMat& m) {
    Mat<long long> out(m.rows(), m.cols());
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).convert_to<long long>();
    return out;
}

std::string to_string(const Int& x) { return x.str(); }

std::string to_string(const IntMat& m) {
    std::ostringstream os;
    os << "[";
    for (Index i = 0; i < m.rows(); ++i) {
        os << (i ? ", [" : "[");
        for (Index j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j);
        os << "]";
    }
    os << "]";
    return os.str();
}

}  // namespace qtrace
