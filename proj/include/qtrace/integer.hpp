#pragma once

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <stdexcept>
#include <type_traits>
#include <string>
#include <tuple>
#include <vector>

// Boost 1.74 probes any type with a const_iterator typedef as a byte
// container; Eigen 3.4 expressions declare it as void. Only count real ones.
namespace boost::multiprecision::detail {
template <class T, class = void>
struct iterator_is_real : boost::false_type {};
template <class T>
struct iterator_is_real<T, std::void_t<typename T::const_iterator>>
    : boost::integral_constant<bool, !std::is_void_v<typename T::const_iterator>> {};
template <class T>
struct has_member_const_iterator<T, boost::mpl::bool_<false>>
    : boost::mpl::bool_<iterator_is_real<T>::value> {};
}  // namespace boost::multiprecision::detail

namespace qtrace {

using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;

template <typename S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <typename S>
using Row = Eigen::Matrix<S, 1, Eigen::Dynamic>;

using IntMat = Mat<Int>;
using IntRow = Row<Int>;
using Index = Eigen::Index;
using IndexList = std::vector<Index>;

// every failure carries a short machine-readable code
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

template <typename S>
S abs_of(const S& a) { return a < 0 ? S(-a) : a; }

template <typename S>
S gcd_of(S a, S b) {
    a = abs_of(a);
    b = abs_of(b);
    while (b != 0) {
        S r = a % b;
        a = b;
        b = r;
    }
    return a;
}

// floor division and the matching nonnegative remainder
template <typename S>
S floor_div(const S& a, const S& b) {
    S q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
    return q;
}

template <typename S>
S mod_pos(const S& a, const S& m) {
    S r = a % m;
    if (r < 0) r += abs_of(m);
    return r;
}

// returns (g, u, v) with u*a + v*b = g = gcd(a,b) >= 0
template <typename S>
std::tuple<S, S, S> ext_gcd(const S& a, const S& b) {
    S r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (r1 != 0) {
        S q = r0 / r1;
        S tmp = r0 - q * r1; r0 = r1; r1 = tmp;
        tmp = s0 - q * s1; s0 = s1; s1 = tmp;
        tmp = t0 - q * t1; t0 = t1; t1 = tmp;
    }
    if (r0 < 0) { r0 = -r0; s0 = -s0; t0 = -t0; }
    return {r0, s0, t0};
}

template <typename S>
Mat<S> identity(Index n) {
    Mat<S> m = Mat<S>::Zero(n, n);
    for (Index i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

template <typename S>
bool all_zero(const Mat<S>& m) {
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0) return false;
    return true;
}

template <typename S>
bool all_divisible(const Mat<S>& m, const S& n) {
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j)
            if (m(i, j) % n != 0) return false;
    return true;
}

template <typename S>
bool is_antisymmetric(const Mat<S>& m) {
    if (m.rows() != m.cols()) return false;
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = i; j < m.cols(); ++j)
            if (m(i, j) != -m(j, i)) return false;
    return true;
}

// Eigen's operator== and comma initializer trip Boost's byte-container probe,
// so matrices are compared and stacked by hand
template <typename S>
bool same(const Mat<S>& a, const Mat<S>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (Index i = 0; i < a.rows(); ++i)
        for (Index j = 0; j < a.cols(); ++j)
            if (a(i, j) != b(i, j)) return false;
    return true;
}

template <typename S>
Mat<S> vstack(const Mat<S>& a, const Mat<S>& b) {
    Mat<S> out(a.rows() + b.rows(), a.cols());
    out.topRows(a.rows()) = a;
    out.bottomRows(b.rows()) = b;
    return out;
}

// rows/cols picked by index lists; Eigen's indexed views do the work
template <typename S>
Mat<S> pick(const Mat<S>& m, const IndexList& rows, const IndexList& cols) {
    return m(rows, cols);
}

// fraction-free Bareiss
Int determinant(IntMat a);

Int int_pow(const Int& base, long long e);

IntMat to_int(const Mat<long long>& m);
Mat<long long> to_ll(const IntMat& m);

std::string to_string(const Int& x);
std::string to_string(const IntMat& m);

}  // namespace qtrace
