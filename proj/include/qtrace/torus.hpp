#pragma once

#include "qtrace/trace.hpp"
#include "qtrace/unity.hpp"

#include <optional>

namespace qtrace {

using Exponent = std::vector<Int>;

// scalar q-hat^qexp times the Weyl-normalized monomial x^k
struct TorusMonomial {
    Exponent k;
    Int qexp = 0;
    bool operator==(const TorusMonomial& o) const { return k == o.k && qexp == o.qexp; }
};

// quantum torus with form P; root mode keeps q-hat exponents mod 2m''
class QuantumTorus {
public:
    explicit QuantumTorus(IntMat P, std::optional<long long> order = std::nullopt);

    Index dim() const { return P_.rows(); }
    const IntMat& form() const { return P_; }
    bool root_mode() const { return order_.has_value(); }

    Int pairing(const Exponent& a, const Exponent& b) const;  // a P b^T
    TorusMonomial weyl(const Exponent& k) const;
    TorusMonomial generator(Index i, int power = 1) const;
    TorusMonomial mul(const TorusMonomial& a, const TorusMonomial& b) const;
    TorusMonomial scaled(const TorusMonomial& a, const Int& qexp) const;
    // x_1^{k_1} ... x_m^{k_m} by repeated multiplication
    TorusMonomial ordered_product(const Exponent& k) const;
    Int reduce(const Int& qexp) const;

private:
    void check(const Exponent& k) const;
    IntMat P_;
    std::optional<long long> order_;
};

// finite sum of coefficient * q-hat^e * x^k
class TorusElement {
public:
    using Terms = std::map<Exponent, std::map<Int, Int>>;

    TorusElement() = default;
    static TorusElement monomial(const TorusMonomial& m, const Int& coeff = 1);

    TorusElement add(const TorusElement& o, const QuantumTorus& T) const;
    TorusElement mul(const TorusElement& o, const QuantumTorus& T) const;
    TorusElement negate() const;
    bool is_zero() const { return terms_.empty(); }
    bool operator==(const TorusElement& o) const { return terms_ == o.terms_; }
    const Terms& terms() const { return terms_; }

private:
    void put(const Exponent& k, const Int& e, const Int& c, const QuantumTorus& T);
    Terms terms_;
};

bool is_central(const IntRow& k, const IntMat& P, long long order);
Lattice center_lattice(const IntMat& P, long long order);
Lattice generic_center(const IntMat& P);

struct RankResult {
    Int rank;
    Int pi_degree;  // sqrt of rank
    Int pi_from_normal_form;  // prod of m''/gcd(m'', h_i)
    AntisymNF nf;
};

RankResult rank_over_center(const IntMat& P, long long order);
Int pi_degree(const IntMat& P, long long order);
Int int_sqrt_exact(const Int& x);  // throws NotPerfectSquare

struct SkeinCenterLattices {
    Lattice lambda_mp;  // kernel of K mod m'
    IntMat boundary_gens;  // one row per generator
    Lattice lambda_boundary;
    Lattice lambda_z;
};

// boundary generators: for each even component and j = 1..n-1, (-1)^k at u_j of
// the k-th edge; rows live in Z^{V'}
IntMat boundary_generators(const ExtendedData& d);
SkeinCenterLattices skein_center_lattices(const ExtendedData& d, const RootParams& p);
Int rank_formula(const SurfaceInvariants& s, const RootParams& p);

}  // namespace qtrace
