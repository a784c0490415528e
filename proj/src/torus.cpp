#include "qtrace/torus.hpp"

namespace qtrace {

QuantumTorus::QuantumTorus(IntMat P, std::optional<long long> order) : P_(std::move(P)), order_(order) {
    if (!is_antisymmetric<Int>(P_)) throw Error("NotAntisymmetric", "torus form must be anti-symmetric");
    if (order_ && *order_ < 1) throw Error("InvalidArgument", "order must be >= 1");
}

void QuantumTorus::check(const Exponent& k) const {
    if (static_cast<Index>(k.size()) != dim())
        throw Error("DimensionMismatch", "exponent of length " + std::to_string(k.size()) + " in a torus of rank " +
                                             std::to_string(dim()));
}

Int QuantumTorus::reduce(const Int& qexp) const {
    if (!order_) return qexp;
    return mod_pos<Int>(qexp, Int(2 * *order_));
}

Int QuantumTorus::pairing(const Exponent& a, const Exponent& b) const {
    check(a);
    check(b);
    Int s = 0;
    for (Index i = 0; i < dim(); ++i) {
        if (a[i] == 0) continue;
        for (Index j = 0; j < dim(); ++j)
            if (b[j] != 0) s += a[i] * P_(i, j) * b[j];
    }
    return s;
}

TorusMonomial QuantumTorus::weyl(const Exponent& k) const {
    check(k);
    return {k, 0};
}

TorusMonomial QuantumTorus::generator(Index i, int power) const {
    Exponent k(dim(), 0);
    k.at(i) = power;
    return {k, 0};
}

TorusMonomial QuantumTorus::mul(const TorusMonomial& a, const TorusMonomial& b) const {
    check(a.k);
    check(b.k);
    Exponent k(dim());
    for (Index i = 0; i < dim(); ++i) k[i] = a.k[i] + b.k[i];
    return {k, reduce(a.qexp + b.qexp + pairing(a.k, b.k))};
}

TorusMonomial QuantumTorus::scaled(const TorusMonomial& a, const Int& qexp) const {
    return {a.k, reduce(a.qexp + qexp)};
}

TorusMonomial QuantumTorus::ordered_product(const Exponent& k) const {
    check(k);
    TorusMonomial out = weyl(Exponent(dim(), 0));
    for (Index i = 0; i < dim(); ++i)
        if (k[i] != 0) out = mul(out, generator(i, k[i].convert_to<int>()));
    return out;
}

TorusElement TorusElement::monomial(const TorusMonomial& m, const Int& coeff) {
    TorusElement e;
    if (coeff != 0) e.terms_[m.k][m.qexp] = coeff;
    return e;
}

void TorusElement::put(const Exponent& k, const Int& e, const Int& c, const QuantumTorus& T) {
    if (c == 0) return;
    auto& inner = terms_[k];
    Int& slot = inner[T.reduce(e)];
    slot += c;
    if (slot == 0) inner.erase(T.reduce(e));
    if (inner.empty()) terms_.erase(k);
}

TorusElement TorusElement::add(const TorusElement& o, const QuantumTorus& T) const {
    TorusElement out = *this;
    for (const auto& [k, inner] : o.terms_)
        for (const auto& [e, c] : inner) out.put(k, e, c, T);
    return out;
}

TorusElement TorusElement::mul(const TorusElement& o, const QuantumTorus& T) const {
    TorusElement out;
    for (const auto& [k1, in1] : terms_)
        for (const auto& [k2, in2] : o.terms_) {
            const TorusMonomial base = T.mul({k1, 0}, {k2, 0});
            for (const auto& [e1, c1] : in1)
                for (const auto& [e2, c2] : in2) out.put(base.k, base.qexp + e1 + e2, c1 * c2, T);
        }
    return out;
}

TorusElement TorusElement::negate() const {
    TorusElement out = *this;
    for (auto& [k, inner] : out.terms_)
        for (auto& [e, c] : inner) c = -c;
    return out;
}

bool is_central(const IntRow& k, const IntMat& P, long long order) {
    if (k.cols() != P.rows()) throw Error("DimensionMismatch", "is_central");
    const IntRow kp = k * P;
    for (Index j = 0; j < kp.cols(); ++j)
        if (kp(j) % order != 0) return false;
    return true;
}

Lattice center_lattice(const IntMat& P, long long order) { return kernel_mod(P, Int(order)); }

Lattice generic_center(const IntMat& P) { return integer_left_kernel(P); }

Int int_sqrt_exact(const Int& x) {
    Int r = boost::multiprecision::sqrt(x);
    if (r * r != x) throw Error("NotPerfectSquare", x.str() + " is not a perfect square");
    return r;
}

RankResult rank_over_center(const IntMat& P, long long order) {
    RankResult out;
    out.rank = *ambient_index(center_lattice(P, order));
    out.pi_degree = int_sqrt_exact(out.rank);
    out.nf = antisym_normal_form(P);
    out.pi_from_normal_form = 1;
    const Int o = order;
    for (const auto& h : out.nf.h) out.pi_from_normal_form *= o / gcd_of<Int>(o, h);
    if (out.pi_from_normal_form != out.pi_degree)
        throw Error("NotPerfectSquare", "lattice index and normal form disagree: " + out.pi_degree.str() + " vs " +
                                            out.pi_from_normal_form.str());
    return out;
}

Int pi_degree(const IntMat& P, long long order) { return rank_over_center(P, order).pi_degree; }

IntMat boundary_generators(const ExtendedData& d) {
    const int n = d.n;
    const Index width = static_cast<Index>(d.Vp.size());
    std::vector<IntRow> rows;
    Index off = static_cast<Index>(d.ring.size());
    for (int r : d.r_i) {
        if (r % 2 == 0)
            for (int j = 1; j < n; ++j) {
                IntRow v = IntRow::Zero(width);
                for (int k = 0; k < r; ++k) v(off + k * (n - 1) + (n - 1 - j)) = (k % 2 == 0) ? 1 : -1;
                rows.push_back(v);
            }
        off += static_cast<Index>(r) * (n - 1);
    }
    IntMat g(static_cast<Index>(rows.size()), width);
    for (std::size_t i = 0; i < rows.size(); ++i) g.row(i) = rows[i];
    return g;
}

SkeinCenterLattices skein_center_lattices(const ExtendedData& d, const RootParams& p) {
    require_odd_order(p);
    SkeinCenterLattices out;
    const Index width = static_cast<Index>(d.Vp.size());
    out.lambda_mp = kernel_mod(d.K, Int(p.m_prime));
    out.boundary_gens = boundary_generators(d);
    out.lambda_boundary = Lattice::from_generators(out.boundary_gens, width);
    out.lambda_z = lattice_sum(out.lambda_mp, out.lambda_boundary);
    return out;
}

Int rank_formula(const SurfaceInvariants& s, const RootParams& p) {
    const long long n = p.n;
    return int_pow(p.d, s.r - s.t) * int_pow(p.m, (n * n - 1) * s.r - s.t * (n - 1));
}

}  // namespace qtrace
