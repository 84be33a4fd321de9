#include <cutplan/polynomial.hpp>

#include <algorithm>
#include <sstream>

namespace cutplan {

namespace {
const Rational kZero(0);
}

UniPoly UniPoly::monomial(std::size_t k, Rational coeff) {
    std::vector<Rational> c(k + 1, Rational(0));
    c[k] = std::move(coeff);
    return UniPoly(std::move(c));
}

void UniPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Rational& UniPoly::coeff(std::size_t k) const {
    return k < c_.size() ? c_[k] : kZero;
}

Rational UniPoly::eval(const Rational& t) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc = acc * t + *it;
    }
    return acc;
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return UniPoly();
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) {
        d[k - 1] = c_[k] * Rational(static_cast<long>(k));
    }
    return UniPoly(std::move(d));
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
    for (std::size_t k = 0; k < r.size(); ++k) r[k] = coeff(k) + o.coeff(k);
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
    std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
    for (std::size_t k = 0; k < r.size(); ++k) r[k] = coeff(k) - o.coeff(k);
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return UniPoly();
    std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) {
            r[i + j] += c_[i] * o.c_[j];
        }
    }
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator*(const Rational& s) const {
    if (s.is_zero()) return UniPoly();
    std::vector<Rational> r(c_);
    for (auto& x : r) x *= s;
    return UniPoly(std::move(r));
}

UniPoly UniPoly::divide_exact(const UniPoly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("UniPoly: division by zero polynomial");
    std::vector<Rational> rem(c_);
    int dn = divisor.degree();
    int qn = degree() - dn;
    if (qn < 0) {
        if (is_zero()) return UniPoly();
        throw std::domain_error("UniPoly: inexact division");
    }
    std::vector<Rational> q(qn + 1, Rational(0));
    const Rational& lead = divisor.c_.back();
    for (int k = qn; k >= 0; --k) {
        Rational f = rem[k + dn] / lead;
        q[k] = f;
        if (f.is_zero()) continue;
        for (int j = 0; j <= dn; ++j) rem[k + j] -= f * divisor.c_[j];
    }
    for (const auto& r : rem) {
        if (!r.is_zero()) throw std::domain_error("UniPoly: inexact division");
    }
    return UniPoly(std::move(q));
}

UniPoly UniPoly::gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        // remainder of a by b
        std::vector<Rational> rem(a.c_);
        int dn = b.degree();
        const Rational& lead = b.c_.back();
        for (int k = static_cast<int>(rem.size()) - 1 - dn; k >= 0; --k) {
            Rational f = rem[k + dn] / lead;
            if (f.is_zero()) continue;
            for (int j = 0; j <= dn; ++j) rem[k + j] -= f * b.c_[j];
        }
        UniPoly r(std::move(rem));
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    // monic
    Rational lead = a.c_.back();
    for (auto& x : a.c_) x /= lead;
    return a;
}

UniPoly UniPoly::squarefree_part() const {
    if (degree() <= 1) return *this;
    UniPoly g = gcd(*this, derivative());
    if (g.degree() <= 0) return *this;
    return divide_exact(g);
}

UniPoly UniPoly::compose_affine(const Rational& a, const Rational& b) const {
    // Horner: p(a + b t)
    UniPoly acc;
    UniPoly arg({a, b});
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc = acc * arg + UniPoly::constant(*it);
    }
    return acc;
}

UniPoly UniPoly::primitive_part() const {
    if (is_zero()) return *this;
    Integer l(1);
    for (const auto& x : c_) {
        l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(x));
    }
    Integer g(0);
    std::vector<Rational> r(c_);
    const Rational lr(l);
    for (auto& x : r) {
        x *= lr;
        Integer n = boost::multiprecision::numerator(x);
        g = boost::multiprecision::gcd(g, n < 0 ? Integer(-n) : n);
    }
    if (g > 1) {
        const Rational gr(g);
        for (auto& x : r) x /= gr;
    }
    return UniPoly(std::move(r));
}

std::string UniPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    for (int k = degree(); k >= 0; --k) {
        if (c_[k].is_zero()) continue;
        if (os.tellp() > 0) os << " + ";
        os << rational_to_string(c_[k]);
        if (k > 0) os << "*t^" << k;
    }
    return os.str();
}

UniPoly compose_affine_with_curve(const std::vector<Rational>& g_coeffs,
                                  const Rational& offset,
                                  const std::vector<UniPoly>& curve) {
    if (g_coeffs.size() != curve.size()) {
        throw std::domain_error("compose_affine_with_curve: dimension mismatch");
    }
    UniPoly acc = UniPoly::constant(offset);
    for (std::size_t j = 0; j < curve.size(); ++j) {
        if (g_coeffs[j].is_zero()) continue;
        acc = acc + curve[j] * g_coeffs[j];
    }
    return acc;
}

namespace {

int sign_variations(const std::vector<Rational>& c) {
    int count = 0;
    int last = 0;
    for (const auto& x : c) {
        int s = x.sign();
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

// p(t + 1) by iterated synthetic division (Taylor shift).
std::vector<Rational> taylor_shift_one(std::vector<Rational> c) {
    const std::size_t n = c.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
        for (std::size_t k = n - 1; k > i; --k) {
            c[k - 1] += c[k];
        }
    }
    return c;
}

}  // namespace

int descartes_bound(const UniPoly& p, const Interval& I) {
    if (p.is_zero()) throw std::domain_error("descartes_bound: zero polynomial");
    if (I.degenerate()) return 0;
    // map [lo, hi] onto [0, 1], then t -> 1/(t+1) and clear denominators
    UniPoly p01 = p.primitive_part().compose_affine(I.lo, I.hi - I.lo).primitive_part();
    std::vector<Rational> rev(p01.coeffs().rbegin(), p01.coeffs().rend());
    // trailing zeros of p01 (roots at the right endpoint) become leading
    // zeros after reversal; they do not affect variation counts
    return sign_variations(taylor_shift_one(std::move(rev)));
}

namespace {

struct IsolateCtx {
    UniPoly work;                     // squarefree, deflated as rational roots are found
    std::vector<Interval> out;

    void found_rational_root(const Rational& r) {
        out.emplace_back(r, r);
        work = work.divide_exact(UniPoly({-r, Rational(1)})).primitive_part();
    }

    void recurse(const Rational& a, const Rational& b, int depth) {
        if (work.degree() <= 0) return;
        if (depth > 4096) throw std::runtime_error("isolate_roots: bisection depth exceeded");
        int v = descartes_bound(work, Interval(a, b));
        if (v == 0) return;
        Rational m = (a + b) / 2;
        if (v == 1) {
            if (work.eval(m).is_zero()) {
                found_rational_root(m);
            } else {
                out.emplace_back(a, b);
            }
            return;
        }
        if (work.eval(m).is_zero()) found_rational_root(m);
        recurse(a, m, depth + 1);
        recurse(m, b, depth + 1);
    }
};

}  // namespace

void refine_interval(const UniPoly& deflated, Interval& iv) {
    if (iv.degenerate()) return;
    Rational m = iv.mid();
    int sm = deflated.sign_at(m);
    if (sm == 0) {
        iv = Interval(m, m);
        return;
    }
    if (deflated.sign_at(iv.lo) != sm) {
        iv = Interval(iv.lo, m);
    } else {
        iv = Interval(m, iv.hi);
    }
}

RootIsolation isolate_roots_ex(const UniPoly& p, const Interval& I) {
    if (p.is_zero()) throw std::domain_error("isolate_roots: zero polynomial");
    IsolateCtx ctx;
    ctx.work = p.squarefree_part().primitive_part();
    if (ctx.work.degree() >= 1) {
        if (ctx.work.eval(I.lo).is_zero()) ctx.found_rational_root(I.lo);
        if (!I.degenerate() && ctx.work.eval(I.hi).is_zero()) ctx.found_rational_root(I.hi);
        if (!I.degenerate()) ctx.recurse(I.lo, I.hi, 0);
    }
    std::sort(ctx.out.begin(), ctx.out.end(),
              [](const Interval& x, const Interval& y) { return x.lo < y.lo; });
    // shrink until intervals are pairwise disjoint (bisection only touches
    // non-degenerate entries; disjoint roots separate in finitely many steps)
    bool again = true;
    while (again) {
        again = false;
        for (std::size_t i = 0; i + 1 < ctx.out.size(); ++i) {
            if (ctx.out[i].hi >= ctx.out[i + 1].lo) {
                if (!ctx.out[i].degenerate()) refine_interval(ctx.work, ctx.out[i]);
                if (!ctx.out[i + 1].degenerate()) refine_interval(ctx.work, ctx.out[i + 1]);
                again = true;
            }
        }
    }
    return RootIsolation{std::move(ctx.out), std::move(ctx.work)};
}

std::vector<Interval> isolate_roots(const UniPoly& p, const Interval& I) {
    return isolate_roots_ex(p, I).intervals;
}

}  // namespace cutplan
