// Potentials and the two local algebras of the theory: the circle algebra
// A = R[x]/(omega(x)) and the theta algebra M = R[A,B,C]/(DP1,DP2,DP3).
//
// Conventions fixed here and used everywhere else:
//   omega(x) = x^3 + a2 x^2 + a1 x + a0,  so  x^3 = -a2 x^2 - a1 x - a0 in A
//   sphere evaluation S(p) = -coeff_{x^2}(p mod omega)
//   counit eps(c2 x^2 + c1 x + c0) = -c2
//   theta functional  = -coeff_{A^2 B} of the normal form in the ordered
//   basis {1, A, A^2, B, AB, A^2B}
#pragma once

#include <array>
#include <map>
#include <stdexcept>
#include <vector>

#include "rings.hpp"

namespace sl3foam {

template <class R>
struct Potential {
    using E = typename R::Elem;
    E a2, a1, a0;
};

struct NotARoot : std::runtime_error {
    NotARoot() : std::runtime_error("supplied value is not a root of the potential") {}
};

// omega(x) = (x - x1)(x^2 + a1p x + a0p); returns (a1p, a0p) and validates
// the three coefficient relations.
template <class R>
std::pair<typename R::Elem, typename R::Elem>
split_root(const R& ring, const Potential<R>& om, const typename R::Elem& x1) {
    using E = typename R::Elem;
    E a1p = ring.add(om.a2, x1);                       // a2 = a1p - x1
    E a0p = ring.add(om.a1, ring.mul(x1, a1p));        // a1 = a0p - x1 a1p
    E check = ring.add(om.a0, ring.mul(x1, a0p));      // a0 = -x1 a0p
    if (!ring.is_zero(check)) throw NotARoot{};
    return {a1p, a0p};
}

// ------------------------------------------------------------ circle algebra
// Elements of A as coefficient triples (c0, c1, c2).
template <class R>
struct CircleAlg {
    using E = typename R::Elem;
    using Elem = std::array<E, 3>;

    const R& ring;
    Potential<R> om;

    CircleAlg(const R& r, Potential<R> o) : ring(r), om(std::move(o)) {}

    Elem zero() const { return {ring.zero(), ring.zero(), ring.zero()}; }
    Elem one() const { return {ring.one(), ring.zero(), ring.zero()}; }
    Elem x(int k = 1) const {
        Elem e = zero();
        if (k < 3) {
            e[k] = ring.one();
            return e;
        }
        Elem r = one();
        for (int i = 0; i < k; ++i) r = mul(r, x(1));
        return r;
    }
    Elem scl(const E& c, const Elem& a) const {
        return {ring.mul(c, a[0]), ring.mul(c, a[1]), ring.mul(c, a[2])};
    }
    Elem add(const Elem& a, const Elem& b) const {
        return {ring.add(a[0], b[0]), ring.add(a[1], b[1]), ring.add(a[2], b[2])};
    }
    Elem sub(const Elem& a, const Elem& b) const {
        return {ring.sub(a[0], b[0]), ring.sub(a[1], b[1]), ring.sub(a[2], b[2])};
    }
    bool is_zero(const Elem& a) const {
        return ring.is_zero(a[0]) && ring.is_zero(a[1]) && ring.is_zero(a[2]);
    }
    bool eq(const Elem& a, const Elem& b) const { return is_zero(sub(a, b)); }

    Elem mul(const Elem& a, const Elem& b) const {
        // degree-4 product then reduction by x^3 = -a2 x^2 - a1 x - a0
        std::array<E, 5> p{ring.zero(), ring.zero(), ring.zero(), ring.zero(), ring.zero()};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                p[i + j] = ring.add(p[i + j], ring.mul(a[i], b[j]));
        for (int d = 4; d >= 3; --d) {
            E c = p[d];
            if (ring.is_zero(c)) continue;
            p[d] = ring.zero();
            p[d - 1] = ring.sub(p[d - 1], ring.mul(c, om.a2));
            p[d - 2] = ring.sub(p[d - 2], ring.mul(c, om.a1));
            p[d - 3] = ring.sub(p[d - 3], ring.mul(c, om.a0));
        }
        return {p[0], p[1], p[2]};
    }

    // closed sphere with dot polynomial p
    E sphere(const Elem& p) const { return ring.neg(p[2]); }
    // the counit from the R1 analysis: [ax^2+bx+c] -> -a
    E counit(const Elem& p) const { return ring.neg(p[2]); }

    // dual basis v_j = sum_i Ginv[i][j] x^i of the sphere pairing;
    // Ginv = -[[a1,a2,1],[a2,1,0],[1,0,0]]
    Elem dual(int j) const {
        switch (j) {
            case 0: return {ring.neg(om.a1), ring.neg(om.a2), ring.neg(ring.one())};
            case 1: return {ring.neg(om.a2), ring.neg(ring.one()), ring.zero()};
            default: return {ring.neg(ring.one()), ring.zero(), ring.zero()};
        }
    }
    // -omega'(x), the genus-handle factor
    Elem neg_omega_prime() const {
        return {ring.neg(om.a1),
                ring.neg(ring.add(om.a2, om.a2)),
                ring.from_int(-3)};
    }
};

// ------------------------------------------------------------- theta algebra
// M = R[A,B,C] / (A+B+C = -a2,  AB+AC+BC = a1,  ABC = -a0), with the ordered
// basis {1, A, A^2, B, AB, A^2B}. Reduction: eliminate C, then
//   B^2 = -A^2 - AB - a2(A+B) - a1   and   A^3 = -a2 A^2 - a1 A - a0.
template <class R>
struct ThetaAlg {
    using E = typename R::Elem;
    using Elem = std::array<E, 6>;   // coords in {1, A, A^2, B, AB, A^2B}

    const R& ring;
    Potential<R> om;

    ThetaAlg(const R& r, Potential<R> o) : ring(r), om(std::move(o)) {}

    Elem zero() const {
        return {ring.zero(), ring.zero(), ring.zero(), ring.zero(), ring.zero(), ring.zero()};
    }
    Elem add(const Elem& a, const Elem& b) const {
        Elem r;
        for (int i = 0; i < 6; ++i) r[i] = ring.add(a[i], b[i]);
        return r;
    }
    Elem scl(const E& c, const Elem& a) const {
        Elem r;
        for (int i = 0; i < 6; ++i) r[i] = ring.mul(c, a[i]);
        return r;
    }
    bool is_zero(const Elem& a) const {
        for (int i = 0; i < 6; ++i)
            if (!ring.is_zero(a[i])) return false;
        return true;
    }

    // normal form of the monomial A^i B^j C^k
    Elem monomial(int i, int j, int k) const {
        // eliminate C via C = -a2 - A - B, recursively
        if (k > 0) {
            Elem r = zero();
            Elem t1 = scl(ring.neg(om.a2), monomial(i, j, k - 1));
            Elem t2 = neg(monomial(i + 1, j, k - 1));
            Elem t3 = neg(monomial(i, j + 1, k - 1));
            return add(add(t1, t2), t3);
        }
        if (j > 1) {
            // B^2 = -A^2 - AB - a2 A - a2 B - a1
            Elem r = neg(monomial(i + 2, j - 2, 0));
            r = add(r, neg(monomial(i + 1, j - 1, 0)));
            r = add(r, scl(ring.neg(om.a2), monomial(i + 1, j - 2, 0)));
            r = add(r, scl(ring.neg(om.a2), monomial(i, j - 1, 0)));
            r = add(r, scl(ring.neg(om.a1), monomial(i, j - 2, 0)));
            return r;
        }
        if (i > 2) {
            // A^3 = -a2 A^2 - a1 A - a0
            Elem r = scl(ring.neg(om.a2), monomial(i - 1, j, 0));
            r = add(r, scl(ring.neg(om.a1), monomial(i - 2, j, 0)));
            r = add(r, scl(ring.neg(om.a0), monomial(i - 3, j, 0)));
            return r;
        }
        Elem e = zero();
        static constexpr int idx[3][2] = {{0, 3}, {1, 4}, {2, 5}};
        e[idx[i][j]] = ring.one();
        return e;
    }

    Elem neg(const Elem& a) const { return scl(ring.neg(ring.one()), a); }

    // theta evaluation of dots (n1, n2, n3) in cyclic slot order
    E theta(int n1, int n2, int n3) const {
        Elem nf = monomial(n1, n2, n3);
        return ring.neg(nf[5]);
    }

    // product of two normal forms (used by tests; small and direct)
    Elem mul(const Elem& a, const Elem& b) const {
        static constexpr int pw[6][2] = {{0, 0}, {1, 0}, {2, 0}, {0, 1}, {1, 1}, {2, 1}};
        Elem r = zero();
        for (int i = 0; i < 6; ++i) {
            if (ring.is_zero(a[i])) continue;
            for (int j = 0; j < 6; ++j) {
                if (ring.is_zero(b[j])) continue;
                Elem m = monomial(pw[i][0] + pw[j][0], pw[i][1] + pw[j][1], 0);
                r = add(r, scl(ring.mul(a[i], b[j]), m));
            }
        }
        return r;
    }

    // M(-3) -> A(-3) + A(-1): A^k -> (x^k, 0), A^k B -> (0, y^k)
    std::pair<typename CircleAlg<R>::Elem, typename CircleAlg<R>::Elem>
    split(const Elem& m) const {
        return {{m[0], m[1], m[2]}, {m[3], m[4], m[5]}};
    }
    Elem unsplit(const typename CircleAlg<R>::Elem& x,
                 const typename CircleAlg<R>::Elem& y) const {
        return {x[0], x[1], x[2], y[0], y[1], y[2]};
    }
};

// ------------------------------------------------- tensor of circle algebras
// Elements of T(circles) = tensor over gamma of A, as a sparse map from
// per-circle exponent tuples to coefficients.
template <class R>
struct TensorAlg {
    using E = typename R::Elem;
    using Key = std::vector<std::uint8_t>;
    using Elem = std::map<Key, E>;

    const R& ring;
    CircleAlg<R> A;

    TensorAlg(const R& r, Potential<R> o) : ring(r), A(r, std::move(o)) {}

    void addto(Elem& t, const Key& k, const E& c) const {
        if (ring.is_zero(c)) return;
        auto it = t.find(k);
        if (it == t.end()) t[k] = c;
        else {
            it->second = ring.add(it->second, c);
            if (ring.is_zero(it->second)) t.erase(it);
        }
    }

    // multiply factor `pos` by the circle-algebra element u
    Elem mul_factor(const Elem& t, size_t pos, const typename CircleAlg<R>::Elem& u) const {
        Elem r;
        for (const auto& [k, c] : t) {
            typename CircleAlg<R>::Elem xi = A.zero();
            xi[k[pos]] = ring.one();
            auto prod = A.mul(xi, u);
            for (int d = 0; d < 3; ++d) {
                if (ring.is_zero(prod[d])) continue;
                Key k2 = k;
                k2[pos] = static_cast<std::uint8_t>(d);
                addto(r, k2, ring.mul(c, prod[d]));
            }
        }
        return r;
    }

    // the beta chain: product over all circles of (x^2 + a1p x + a0p)
    Elem beta_product(size_t circles, const E& a1p, const E& a0p) const {
        Elem t;
        t[Key(circles, 0)] = ring.one();
        typename CircleAlg<R>::Elem P{a0p, a1p, ring.one()};
        for (size_t i = 0; i < circles; ++i) t = mul_factor(t, i, P);
        return t;
    }
};

}  // namespace sl3foam
