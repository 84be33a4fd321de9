#pragma once

#include <cutplan/rational.hpp>

#include <vector>

namespace cutplan {

struct Interval {
    Rational lo;
    Rational hi;

    Interval() = default;
    Interval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) throw std::invalid_argument("Interval: lo > hi");
    }
    bool degenerate() const { return lo == hi; }
    Rational mid() const { return (lo + hi) / 2; }
    Rational width() const { return hi - lo; }
};

// Univariate polynomial over Q, coefficients lowest degree first. The zero
// polynomial is the empty coefficient list.
class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    static UniPoly constant(Rational v) { return UniPoly({std::move(v)}); }
    // t^k
    static UniPoly monomial(std::size_t k, Rational coeff = Rational(1));

    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial is -1
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return c_; }
    const Rational& coeff(std::size_t k) const;

    Rational eval(const Rational& t) const;
    int sign_at(const Rational& t) const { return eval(t).sign(); }

    UniPoly derivative() const;

    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly operator*(const Rational& s) const;
    UniPoly operator-() const { return *this * Rational(-1); }
    bool operator==(const UniPoly& o) const { return c_ == o.c_; }

    // Exact division, throws if the remainder is nonzero.
    UniPoly divide_exact(const UniPoly& divisor) const;

    // Monic gcd over Q via the Euclidean algorithm.
    static UniPoly gcd(UniPoly a, UniPoly b);

    // p / gcd(p, p'); same real roots, all simple.
    UniPoly squarefree_part() const;

    // p(a + b t)
    UniPoly compose_affine(const Rational& a, const Rational& b) const;

    // Scales coefficients to a primitive integer vector with the same sign;
    // roots and signs everywhere are unchanged.
    UniPoly primitive_part() const;

    std::string to_string() const;

  private:
    void trim();
    std::vector<Rational> c_;
};

// Sum of g_coeffs[j] * curve[j] plus the constant offset; the composition of
// an affine map with a polynomial curve.
UniPoly compose_affine_with_curve(const std::vector<Rational>& g_coeffs,
                                  const Rational& offset,
                                  const std::vector<UniPoly>& curve);

// Sign-variation count of p mapped onto the open interval I by the standard
// Moebius change of variables. 0 means no roots in open I, 1 exactly one.
int descartes_bound(const UniPoly& p, const Interval& I);

// Pairwise-disjoint intervals inside [I.lo, I.hi], each containing exactly
// one real root of p, ordered by lo and covering every root of p in I.
// Exact rational roots met at bisection points come back degenerate [r, r].
std::vector<Interval> isolate_roots(const UniPoly& p, const Interval& I);

// Same, also exposing the squarefree polynomial with all rational bisection
// roots divided out; its sign changes drive later interval refinement.
struct RootIsolation {
    std::vector<Interval> intervals;
    UniPoly deflated;  // nonzero at every non-degenerate interval endpoint
};
RootIsolation isolate_roots_ex(const UniPoly& p, const Interval& I);

// One bisection step keeping the half where `deflated` changes sign. If the
// midpoint happens to be the root itself the interval collapses to it.
void refine_interval(const UniPoly& deflated, Interval& iv);

}  // namespace cutplan
