// Exact coefficient rings: rationals, prime fields, Q[U], and the generic
// integer polynomial ring used for symbolic identity checks.
//
// A ring type R provides value_type Elem plus the static interface used all
// over the library: zero/one, add/sub/mul/neg, is_zero, eq, exact_div (for
// fraction-free elimination), to_string. Fields additionally provide inv.
#pragma once

#include <array>
#include <cassert>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace sl3foam {

// ----------------------------------------------------------------- rationals
struct Rationals {
    using Elem = mpq_class;
    static constexpr bool is_field = true;
    static Elem zero() { return Elem(0); }
    static Elem one() { return Elem(1); }
    static Elem from_int(long n) { return Elem(n); }
    static Elem add(const Elem& a, const Elem& b) { return a + b; }
    static Elem sub(const Elem& a, const Elem& b) { return a - b; }
    static Elem mul(const Elem& a, const Elem& b) { return a * b; }
    static Elem neg(const Elem& a) { return -a; }
    static bool is_zero(const Elem& a) { return a == 0; }
    static bool eq(const Elem& a, const Elem& b) { return a == b; }
    static Elem inv(const Elem& a) { return Elem(1) / a; }
    static Elem exact_div(const Elem& a, const Elem& b) { return a / b; }
    static std::string to_string(const Elem& a) { return a.get_str(); }
};

// --------------------------------------------------------------- prime field
// Small prime fields F_p; the modulus lives in the ring object.
struct PrimeField {
    using Elem = std::uint64_t;
    static constexpr bool is_field = true;

    explicit PrimeField(std::uint64_t p) : p_(p) {}
    std::uint64_t modulus() const { return p_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1 % p_; }
    Elem from_int(long n) const {
        long r = n % static_cast<long>(p_);
        if (r < 0) r += static_cast<long>(p_);
        return static_cast<Elem>(r);
    }
    Elem add(Elem a, Elem b) const { return (a + b) % p_; }
    Elem sub(Elem a, Elem b) const { return (a + p_ - b) % p_; }
    Elem mul(Elem a, Elem b) const { return (a * b) % p_; }
    Elem neg(Elem a) const { return (p_ - a) % p_; }
    bool is_zero(Elem a) const { return a == 0; }
    bool eq(Elem a, Elem b) const { return a == b; }
    Elem inv(Elem a) const {
        assert(a != 0);
        long t = 0, nt = 1;
        long r = static_cast<long>(p_), nr = static_cast<long>(a);
        while (nr != 0) {
            long q = r / nr;
            t -= q * nt; std::swap(t, nt);
            r -= q * nr; std::swap(r, nr);
        }
        if (t < 0) t += static_cast<long>(p_);
        return static_cast<Elem>(t);
    }
    Elem exact_div(Elem a, Elem b) const { return mul(a, inv(b)); }
    std::string to_string(Elem a) const { return std::to_string(a); }

  private:
    std::uint64_t p_;
};

// ------------------------------------------------------------------- Q[U]
// Dense univariate polynomials over Q; the graded coefficient ring F[U].
struct PolyU {
    using Elem = std::vector<mpq_class>;   // coefficients, low degree first
    static constexpr bool is_field = false;

    static void trim(Elem& a) {
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    static Elem zero() { return {}; }
    static Elem one() { return {mpq_class(1)}; }
    static Elem from_int(long n) { return n == 0 ? Elem{} : Elem{mpq_class(n)}; }
    static Elem U(int k = 1) {
        Elem e(k + 1, mpq_class(0));
        e[k] = 1;
        return e;
    }
    static Elem add(const Elem& a, const Elem& b) {
        Elem r(std::max(a.size(), b.size()), mpq_class(0));
        for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
        for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
        trim(r);
        return r;
    }
    static Elem sub(const Elem& a, const Elem& b) { return add(a, neg(b)); }
    static Elem mul(const Elem& a, const Elem& b) {
        if (a.empty() || b.empty()) return {};
        Elem r(a.size() + b.size() - 1, mpq_class(0));
        for (size_t i = 0; i < a.size(); ++i)
            if (a[i] != 0)
                for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
        trim(r);
        return r;
    }
    static Elem neg(const Elem& a) {
        Elem r = a;
        for (auto& c : r) c = -c;
        return r;
    }
    static bool is_zero(const Elem& a) { return a.empty(); }
    static bool eq(const Elem& a, const Elem& b) { return a == b; }
    static Elem exact_div(const Elem& a, const Elem& b) {
        // long division; remainder must vanish
        if (a.empty()) return {};
        assert(!b.empty());
        Elem rem = a, q(a.size(), mpq_class(0));
        while (rem.size() >= b.size()) {
            mpq_class c = rem.back() / b.back();
            size_t off = rem.size() - b.size();
            q[off] = c;
            for (size_t i = 0; i < b.size(); ++i) rem[off + i] -= c * b[i];
            trim(rem);
            if (rem.empty()) break;
            if (rem.size() < b.size()) throw std::runtime_error("PolyU: inexact division");
        }
        if (!rem.empty()) throw std::runtime_error("PolyU: inexact division");
        trim(q);
        return q;
    }
    // division with remainder (for the euclidean Smith normal form)
    static void divmod(const Elem& a, const Elem& b, Elem& q, Elem& r) {
        assert(!b.empty());
        r = a;
        q.assign(a.size(), mpq_class(0));
        while (r.size() >= b.size()) {
            mpq_class c = r.back() / b.back();
            size_t off = r.size() - b.size();
            q[off] += c;
            for (size_t i = 0; i < b.size(); ++i) r[off + i] -= c * b[i];
            trim(r);
        }
        trim(q);
    }
    static int degree(const Elem& a) { return static_cast<int>(a.size()) - 1; }  // -1 for 0
    static std::string to_string(const Elem& a) {
        if (a.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (size_t i = a.size(); i-- > 0;) {
            if (a[i] == 0) continue;
            if (!first) os << " + ";
            os << a[i].get_str();
            if (i > 0) os << "*U^" << i;
            first = false;
        }
        return os.str();
    }
};

// --------------------------------------------------- generic symbolic ring
// Sparse multivariate polynomials over Z in a small fixed variable set.
// Used for verifying the paper's identities as exact polynomial identities.
struct MultiPoly {
    static constexpr int MaxVars = 6;
    using Expo = std::array<std::uint8_t, MaxVars>;
    using Elem = std::map<Expo, mpz_class>;
    static constexpr bool is_field = false;

    static Elem zero() { return {}; }
    static Elem one() { return from_int(1); }
    static Elem from_int(long n) {
        Elem e;
        if (n != 0) e[Expo{}] = n;
        return e;
    }
    static Elem var(int i) {
        Elem e;
        Expo x{};
        x[i] = 1;
        e[x] = 1;
        return e;
    }
    static Elem add(const Elem& a, const Elem& b) {
        Elem r = a;
        for (const auto& [e, c] : b) {
            auto it = r.find(e);
            if (it == r.end()) r[e] = c;
            else {
                it->second += c;
                if (it->second == 0) r.erase(it);
            }
        }
        return r;
    }
    static Elem sub(const Elem& a, const Elem& b) { return add(a, neg(b)); }
    static Elem neg(const Elem& a) {
        Elem r = a;
        for (auto& [e, c] : r) c = -c;
        return r;
    }
    static Elem mul(const Elem& a, const Elem& b) {
        Elem r;
        for (const auto& [ea, ca] : a)
            for (const auto& [eb, cb] : b) {
                Expo e;
                for (int i = 0; i < MaxVars; ++i) e[i] = ea[i] + eb[i];
                auto it = r.find(e);
                if (it == r.end()) r[e] = ca * cb;
                else {
                    it->second += ca * cb;
                    if (it->second == 0) r.erase(it);
                }
            }
        return r;
    }
    static bool is_zero(const Elem& a) { return a.empty(); }
    static bool eq(const Elem& a, const Elem& b) { return a == b; }
    // exact division (remainder must be zero) via leading-term elimination
    static Elem exact_div(const Elem& a, const Elem& b) {
        if (a.empty()) return {};
        if (b.empty()) throw std::runtime_error("MultiPoly: division by zero");
        Elem rem = a, quot;
        const auto& [eb, cb] = *b.rbegin();   // leading term in map order
        while (!rem.empty()) {
            const auto& [ea, ca] = *rem.rbegin();
            Expo e;
            for (int i = 0; i < MaxVars; ++i) {
                if (ea[i] < eb[i]) throw std::runtime_error("MultiPoly: inexact division");
                e[i] = ea[i] - eb[i];
            }
            mpz_class q = ca / cb;
            if (q * cb != ca) throw std::runtime_error("MultiPoly: inexact division");
            Elem t;
            t[e] = q;
            quot = add(quot, t);
            rem = sub(rem, mul(t, b));
        }
        return quot;
    }
    static std::string to_string(const Elem& a,
                                 const std::vector<std::string>& names = {"a2", "a1", "a0",
                                                                          "b1", "b0", "r1"}) {
        if (a.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = a.rbegin(); it != a.rend(); ++it) {
            if (!first) os << " + ";
            os << it->second.get_str();
            for (int i = 0; i < MaxVars; ++i)
                if (it->first[i]) {
                    os << "*" << (i < static_cast<int>(names.size()) ? names[i] : "x" + std::to_string(i));
                    if (it->first[i] > 1) os << "^" << int(it->first[i]);
                }
            first = false;
        }
        return os.str();
    }
};

}  // namespace sl3foam
