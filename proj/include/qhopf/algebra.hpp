#pragma once

#include <cassert>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <tuple>
#include <vector>

#include "qhopf/linalg.hpp"
#include "qhopf/report.hpp"
#include "qhopf/scalar.hpp"

namespace qhopf {

/// Dense coordinate tensor in H^{⊗legs} over the algebra's fixed basis.
/// Flattening: the leftmost tensor factor is the most significant digit,
/// index = ((i1·n + i2)·n + ...)·n + ik.
struct Tensor {
    int n = 0;
    int legs = 0;
    std::vector<Scalar> a;

    Tensor() = default;
    Tensor(int n_, int legs_) : n(n_), legs(legs_) {
        std::size_t sz = 1;
        for (int i = 0; i < legs; ++i) sz *= static_cast<std::size_t>(n);
        a.assign(sz, Scalar());
    }

    std::size_t size() const { return a.size(); }

    std::vector<int> digits(std::size_t flat) const {
        std::vector<int> d(legs);
        for (int l = legs - 1; l >= 0; --l) {
            d[l] = static_cast<int>(flat % n);
            flat /= n;
        }
        return d;
    }
    std::size_t flat_of(const std::vector<int>& d) const {
        std::size_t f = 0;
        for (int l = 0; l < legs; ++l) f = f * n + static_cast<std::size_t>(d[l]);
        return f;
    }
    std::string multi_str(std::size_t flat) const {
        auto d = digits(flat);
        std::string s = "(";
        for (int l = 0; l < legs; ++l) s += (l ? "," : "") + std::to_string(d[l]);
        return s + ")";
    }

    friend bool operator==(const Tensor& x, const Tensor& y) {
        if (x.n != y.n || x.legs != y.legs) return false;
        for (std::size_t i = 0; i < x.a.size(); ++i)
            if (x.a[i] != y.a[i]) return false;
        return true;
    }
};

using Elem = Tensor;  // legs == 1

inline Tensor t_add(const Tensor& x, const Tensor& y) {
    if (x.n != y.n || x.legs != y.legs) throw InputError("tensor sum degree mismatch");
    Tensor r = x;
    for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] += y.a[i];
    return r;
}
inline Tensor t_sub(const Tensor& x, const Tensor& y) {
    if (x.n != y.n || x.legs != y.legs) throw InputError("tensor difference degree mismatch");
    Tensor r = x;
    for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] -= y.a[i];
    return r;
}
inline Tensor t_scale(const Scalar& s, const Tensor& x) {
    Tensor r = x;
    for (auto& c : r.a) c *= s;
    return r;
}
inline bool t_is_zero(const Tensor& x) {
    for (const auto& c : x.a)
        if (!c.is_zero()) return false;
    return true;
}

/// Quasi-bialgebra by structure constants: mult[i][j][k] means
/// e_i·e_j = Σ_k mult[i][j][k] e_k, comult[i][j][k] means
/// Δ(e_i) = Σ comult[i][j][k] e_j⊗e_k.
struct QuasiBialgebra {
    FieldDesc field;
    int n = 0;
    std::vector<std::string> basis_names;
    Tensor mult;     // 3 legs
    Tensor comult;   // 3 legs
    Elem unit;       // coordinates of 1
    Vec counit;      // covector
    Tensor phi, phi_inv;

    // sparse views built by finalize()
    std::vector<std::vector<std::pair<int, Scalar>>> mult_rows;                 // [i*n+j] -> (k, c)
    std::vector<std::vector<std::tuple<int, int, Scalar>>> comult_rows;         // [i] -> (j, k, c)

    void finalize() {
        if (n <= 0) throw InputError("algebra dimension must be positive");
        auto expect = [&](const Tensor& t, int legs, const char* what) {
            if (t.n != n || t.legs != legs) throw InputError(std::string("malformed ") + what + " tensor");
        };
        expect(mult, 3, "mult");
        expect(comult, 3, "comult");
        expect(unit, 1, "unit");
        expect(phi, 3, "phi");
        expect(phi_inv, 3, "phi_inv");
        if (static_cast<int>(counit.size()) != n) throw InputError("malformed counit");
        if (basis_names.empty())
            for (int i = 0; i < n; ++i) basis_names.push_back("e" + std::to_string(i));
        mult_rows.assign(static_cast<std::size_t>(n) * n, {});
        comult_rows.assign(n, {});
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) {
                    const Scalar& c = mult.a[(static_cast<std::size_t>(i) * n + j) * n + k];
                    if (!c.is_zero()) mult_rows[static_cast<std::size_t>(i) * n + j].push_back({k, c});
                }
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) {
                    const Scalar& c = comult.a[(static_cast<std::size_t>(i) * n + j) * n + k];
                    if (!c.is_zero()) comult_rows[i].push_back({j, k, c});
                }
    }

    Elem e(int i) const {
        Elem v(n, 1);
        v.a[i] = Scalar::one(field);
        return v;
    }
    Elem elem(const Vec& coords) const {
        if (static_cast<int>(coords.size()) != n) throw InputError("element coordinate length mismatch");
        Elem v(n, 1);
        v.a = coords;
        return v;
    }
    Elem zero_elem() const { return Elem(n, 1); }

    Scalar eps(const Elem& x) const { return dot(counit, x.a); }

    Elem mul(const Elem& x, const Elem& y) const {
        if (x.n != n || y.n != n || x.legs != 1 || y.legs != 1)
            throw InputError("mul: operands are not elements of this algebra");
        Elem r(n, 1);
        for (int i = 0; i < n; ++i) {
            if (x.a[i].is_zero()) continue;
            for (int j = 0; j < n; ++j) {
                if (y.a[j].is_zero()) continue;
                Scalar c = x.a[i] * y.a[j];
                for (const auto& [k, m] : mult_rows[static_cast<std::size_t>(i) * n + j])
                    r.a[k] += c * m;
            }
        }
        return r;
    }
    Elem mul(std::initializer_list<Elem> xs) const {
        Elem r = unit;
        for (const auto& x : xs) r = mul(r, x);
        return r;
    }

    Tensor comult_elem(const Elem& x) const {
        Tensor r(n, 2);
        for (int i = 0; i < n; ++i) {
            if (x.a[i].is_zero()) continue;
            for (const auto& [j, k, c] : comult_rows[i])
                r.a[static_cast<std::size_t>(j) * n + k] += x.a[i] * c;
        }
        return r;
    }

    /// Componentwise product in H^{⊗k}.
    Tensor tmul(const Tensor& x, const Tensor& y) const {
        if (x.legs != y.legs || x.n != n || y.n != n)
            throw InputError("tmul: tensor degree mismatch");
        Tensor r(n, x.legs);
        std::vector<int> da, db, out(x.legs);
        for (std::size_t ia = 0; ia < x.a.size(); ++ia) {
            if (x.a[ia].is_zero()) continue;
            da = x.digits(ia);
            for (std::size_t ib = 0; ib < y.a.size(); ++ib) {
                if (y.a[ib].is_zero()) continue;
                db = y.digits(ib);
                mul_rec(r, da, db, out, 0, 0, x.a[ia] * y.a[ib]);
            }
        }
        return r;
    }
    Tensor tmul(std::initializer_list<Tensor> xs) const {
        auto it = xs.begin();
        Tensor r = *it++;
        for (; it != xs.end(); ++it) r = tmul(r, *it);
        return r;
    }

    /// Apply Δ to one leg (degree goes up by one).
    Tensor delta_leg(const Tensor& x, int leg) const {
        if (leg < 0 || leg >= x.legs) throw InputError("delta_leg: leg out of range");
        Tensor r(n, x.legs + 1);
        for (std::size_t ia = 0; ia < x.a.size(); ++ia) {
            if (x.a[ia].is_zero()) continue;
            auto d = x.digits(ia);
            std::vector<int> nd(x.legs + 1);
            for (int l = 0; l < leg; ++l) nd[l] = d[l];
            for (int l = leg + 1; l < x.legs; ++l) nd[l + 1] = d[l];
            for (const auto& [j, k, c] : comult_rows[d[leg]]) {
                nd[leg] = j;
                nd[leg + 1] = k;
                r.a[r.flat_of(nd)] += x.a[ia] * c;
            }
        }
        return r;
    }

    /// Apply ε to one leg (degree goes down by one).
    Tensor eps_leg(const Tensor& x, int leg) const {
        if (leg < 0 || leg >= x.legs) throw InputError("eps_leg: leg out of range");
        Tensor r(n, x.legs - 1);
        for (std::size_t ia = 0; ia < x.a.size(); ++ia) {
            if (x.a[ia].is_zero()) continue;
            auto d = x.digits(ia);
            const Scalar& c = counit[d[leg]];
            if (c.is_zero()) continue;
            std::vector<int> nd;
            nd.reserve(x.legs - 1);
            for (int l = 0; l < x.legs; ++l)
                if (l != leg) nd.push_back(d[l]);
            r.a[r.flat_of(nd)] += x.a[ia] * c;
        }
        return r;
    }

    /// Apply a linear map given as a table (row i = image of e_i) to one leg.
    Tensor map_leg(const Tensor& x, const Matrix& table, int leg) const {
        if (leg < 0 || leg >= x.legs) throw InputError("map_leg: leg out of range");
        if (table.rows != static_cast<std::size_t>(n) || table.cols != static_cast<std::size_t>(n))
            throw InputError("map_leg: table dimension mismatch");
        Tensor r(n, x.legs);
        for (std::size_t ia = 0; ia < x.a.size(); ++ia) {
            if (x.a[ia].is_zero()) continue;
            auto d = x.digits(ia);
            int src = d[leg];
            for (int j = 0; j < n; ++j) {
                const Scalar& c = table.at(src, j);
                if (c.is_zero()) continue;
                d[leg] = j;
                r.a[r.flat_of(d)] += x.a[ia] * c;
            }
            d[leg] = src;
        }
        return r;
    }

    /// Contract a covector against one leg.
    Tensor contract_cov(const Tensor& x, const Vec& cov, int leg) const {
        if (leg < 0 || leg >= x.legs) throw InputError("contract_cov: leg out of range");
        if (static_cast<int>(cov.size()) != n) throw InputError("contract_cov: covector length mismatch");
        Tensor r(n, x.legs - 1);
        for (std::size_t ia = 0; ia < x.a.size(); ++ia) {
            if (x.a[ia].is_zero()) continue;
            auto d = x.digits(ia);
            const Scalar& c = cov[d[leg]];
            if (c.is_zero()) continue;
            std::vector<int> nd;
            nd.reserve(x.legs - 1);
            for (int l = 0; l < x.legs; ++l)
                if (l != leg) nd.push_back(d[l]);
            r.a[r.flat_of(nd)] += x.a[ia] * c;
        }
        return r;
    }

    /// Result leg j carries what input leg perm[j] carried.
    Tensor permute(const Tensor& x, const std::vector<int>& perm) const {
        if (static_cast<int>(perm.size()) != x.legs) throw InputError("permute: bad permutation");
        Tensor r(n, x.legs);
        std::vector<int> nd(x.legs);
        for (std::size_t ia = 0; ia < x.a.size(); ++ia) {
            if (x.a[ia].is_zero()) continue;
            auto d = x.digits(ia);
            for (int l = 0; l < x.legs; ++l) nd[l] = d[perm[l]];
            r.a[r.flat_of(nd)] += x.a[ia];
        }
        return r;
    }
    Tensor swap2(const Tensor& x) const { return permute(x, {1, 0}); }

    Tensor outer(const Tensor& x, const Tensor& y) const {
        Tensor r(n, x.legs + y.legs);
        for (std::size_t ia = 0; ia < x.a.size(); ++ia) {
            if (x.a[ia].is_zero()) continue;
            for (std::size_t ib = 0; ib < y.a.size(); ++ib) {
                if (y.a[ib].is_zero()) continue;
                r.a[ia * y.a.size() + ib] = x.a[ia] * y.a[ib];
            }
        }
        return r;
    }

    Tensor unit_tensor(int k) const {
        Tensor r = unit;
        for (int i = 1; i < k; ++i) r = outer(r, unit);
        return r;
    }

    /// Place x's legs at the given (ascending) positions of a degree-K tensor,
    /// with the unit on every other leg.
    Tensor embed(const Tensor& x, int K, const std::vector<int>& positions) const {
        if (static_cast<int>(positions.size()) != x.legs) throw InputError("embed: positions mismatch");
        Tensor r = x;
        // insert unit legs one by one, left to right
        std::vector<bool> from_x(K, false);
        for (int p : positions) from_x[p] = true;
        std::vector<int> perm;  // built progressively by inserting unit legs at the end then permuting
        // simpler: outer with units then permute
        int extra = K - x.legs;
        for (int i = 0; i < extra; ++i) r = outer(r, unit);
        // r legs: [x0..x_{k-1}, u0..u_{extra-1}]; target: positions get x legs in order
        std::vector<int> target(K);
        int xi = 0, ui = x.legs;
        for (int l = 0; l < K; ++l) target[l] = from_x[l] ? xi++ : ui++;
        return permute(r, target);
    }

    // -- covector (H*) helpers ------------------------------------------------

    /// convolution: (u v)(h) = Σ u(h₁) v(h₂)
    Vec conv(const Vec& u, const Vec& v) const {
        Vec r(n);
        for (int i = 0; i < n; ++i)
            for (const auto& [j, k, c] : comult_rows[i]) {
                if (u[j].is_zero() || v[k].is_zero()) continue;
                r[i] += c * u[j] * v[k];
            }
        return r;
    }
    /// ⟨h ⇀ h*, h'⟩ = ⟨h*, h'h⟩
    Vec rharpoon(const Elem& h, const Vec& cov) const {
        Vec r(n);
        for (int i = 0; i < n; ++i) r[i] = dot(cov, mul(e(i), h).a);
        return r;
    }
    /// ⟨h* ↼ h, h'⟩ = ⟨h*, hh'⟩
    Vec lharpoon(const Vec& cov, const Elem& h) const {
        Vec r(n);
        for (int i = 0; i < n; ++i) r[i] = dot(cov, mul(h, e(i)).a);
        return r;
    }

    friend bool operator==(const QuasiBialgebra& x, const QuasiBialgebra& y) {
        return x.field == y.field && x.n == y.n && x.mult == y.mult && x.comult == y.comult &&
               x.unit == y.unit && x.counit == y.counit && x.phi == y.phi && x.phi_inv == y.phi_inv;
    }

private:
    void mul_rec(Tensor& r, const std::vector<int>& da, const std::vector<int>& db,
                 std::vector<int>& out, int leg, std::size_t flat, Scalar c) const {
        if (leg == r.legs) {
            r.a[flat] += c;
            return;
        }
        for (const auto& [k, m] : mult_rows[static_cast<std::size_t>(da[leg]) * n + db[leg]])
            mul_rec(r, da, db, out, leg + 1, flat * n + static_cast<std::size_t>(k), c * m);
    }
};

/// Quasi-Hopf algebra: quasi-bialgebra plus antipode table (row i = image of
/// e_i) and the elements α, β.  Bijectivity of S is NOT assumed; it is a
/// theorem at finite dimension.
struct QuasiHopfAlgebra : QuasiBialgebra {
    Matrix antipode;
    Elem alpha, beta;

    void finalize_hopf() {
        finalize();
        if (antipode.rows != static_cast<std::size_t>(n) || antipode.cols != static_cast<std::size_t>(n))
            throw InputError("malformed antipode table");
        if (alpha.n != n || alpha.legs != 1 || beta.n != n || beta.legs != 1)
            throw InputError("malformed alpha/beta");
    }

    Elem S(const Elem& x) const { return elem(vec_mat(x.a, antipode)); }
    Elem S(int i) const { return elem(antipode.row(i)); }

    friend bool operator==(const QuasiHopfAlgebra& x, const QuasiHopfAlgebra& y) {
        return static_cast<const QuasiBialgebra&>(x) == static_cast<const QuasiBialgebra&>(y) &&
               x.antipode == y.antipode && x.alpha == y.alpha && x.beta == y.beta;
    }
};

/// Invertible counit-normalized F ∈ H⊗H used to deform the structure.
struct GaugeTransformation {
    Tensor F, F_inv;
};

namespace detail {
inline std::string diff_detail(const QuasiBialgebra& H, const Tensor& lhs, const Tensor& rhs,
                               const std::string& context) {
    for (std::size_t i = 0; i < lhs.a.size(); ++i)
        if (lhs.a[i] != rhs.a[i])
            return context + (context.empty() ? "at " : "; at ") + lhs.multi_str(i) + ": lhs=" +
                   lhs.a[i].str() + " rhs=" + rhs.a[i].str();
    return context + "; tensors differ in shape";
}

inline bool check_eq(VerificationReport& rep, const QuasiBialgebra& H, const std::string& name,
                     const Tensor& lhs, const Tensor& rhs, const std::string& context = "") {
    if (lhs == rhs) {
        rep.add_pass(name);
        return true;
    }
    rep.add_fail(name, diff_detail(H, lhs, rhs, context));
    return false;
}

// Quantified check: runs body(i) for every basis index and reports the first
// mismatch; body returns (lhs, rhs).
template <typename F>
inline void check_forall_basis(VerificationReport& rep, const QuasiBialgebra& H,
                               const std::string& name, F body) {
    for (int i = 0; i < H.n; ++i) {
        auto [lhs, rhs] = body(i);
        if (!(lhs == rhs)) {
            rep.add_fail(name, diff_detail(H, lhs, rhs, "h=" + H.basis_names[i]));
            return;
        }
    }
    rep.add_pass(name);
}

template <typename F>
inline void check_forall_pairs(VerificationReport& rep, const QuasiBialgebra& H,
                               const std::string& name, F body) {
    for (int i = 0; i < H.n; ++i)
        for (int j = 0; j < H.n; ++j) {
            auto [lhs, rhs] = body(i, j);
            if (!(lhs == rhs)) {
                rep.add_fail(name, diff_detail(H, lhs, rhs, "h=" + H.basis_names[i] + ", h'=" + H.basis_names[j]));
                return;
            }
        }
    rep.add_pass(name);
}
}  // namespace detail

/// Axioms (q1)-(q4), (q7), invertibility of Φ, and the algebra-map laws.
/// Checks run on basis elements only, which suffices by multilinearity.
inline VerificationReport verify_quasi_bialgebra(const QuasiBialgebra& H) {
    VerificationReport rep;
    using detail::check_eq;
    using detail::check_forall_basis;
    using detail::check_forall_pairs;

    // associativity on basis triples
    {
        bool ok = true;
        std::string det;
        for (int i = 0; i < H.n && ok; ++i)
            for (int j = 0; j < H.n && ok; ++j)
                for (int k = 0; k < H.n && ok; ++k) {
                    Elem l = H.mul(H.mul(H.e(i), H.e(j)), H.e(k));
                    Elem r = H.mul(H.e(i), H.mul(H.e(j), H.e(k)));
                    if (!(l == r)) {
                        ok = false;
                        det = detail::diff_detail(H, l, r,
                                                  "(" + H.basis_names[i] + "," + H.basis_names[j] + "," +
                                                      H.basis_names[k] + ")");
                    }
                }
        rep.add("assoc", ok, det);
    }
    check_forall_basis(rep, H, "unit", [&](int i) {
        Elem l = H.mul(H.unit, H.e(i));
        Elem r = H.mul(H.e(i), H.unit);
        return std::pair{l == H.e(i) ? r : l, H.e(i)};
    });
    check_forall_pairs(rep, H, "counit-alg-map", [&](int i, int j) {
        Elem prod = H.mul(H.e(i), H.e(j));
        Elem l(1, 1), r(1, 1);
        l.a[0] = H.eps(prod);
        r.a[0] = H.counit[i] * H.counit[j];
        return std::pair{l, r};
    });
    {
        Elem l(1, 1);
        l.a[0] = H.eps(H.unit);
        Elem r(1, 1);
        r.a[0] = Scalar::one(H.field);
        check_eq(rep, H, "counit-unit", l, r);
    }
    check_forall_pairs(rep, H, "comult-alg-map", [&](int i, int j) {
        Tensor l = H.comult_elem(H.mul(H.e(i), H.e(j)));
        Tensor r = H.tmul(H.comult_elem(H.e(i)), H.comult_elem(H.e(j)));
        return std::pair{l, r};
    });
    check_eq(rep, H, "comult-unit", H.comult_elem(H.unit), H.unit_tensor(2));

    check_forall_basis(rep, H, "(q1)", [&](int i) {
        Tensor dh = H.comult_elem(H.e(i));
        Tensor lhs = H.delta_leg(dh, 1);
        Tensor rhs = H.tmul({H.phi, H.delta_leg(dh, 0), H.phi_inv});
        return std::pair{lhs, rhs};
    });
    check_forall_basis(rep, H, "(q2)", [&](int i) {
        Tensor dh = H.comult_elem(H.e(i));
        Tensor l1 = H.eps_leg(dh, 1);
        if (!(l1 == H.e(i))) return std::pair{l1, H.e(i)};
        return std::pair{H.eps_leg(dh, 0), H.e(i)};
    });
    check_eq(rep, H, "phi-invertible",
             H.tmul(H.phi, H.phi_inv) == H.unit_tensor(3) ? H.tmul(H.phi_inv, H.phi)
                                                          : H.tmul(H.phi, H.phi_inv),
             H.unit_tensor(3));
    {
        Tensor lhs = H.tmul({H.embed(H.phi, 4, {1, 2, 3}), H.delta_leg(H.phi, 1),
                             H.embed(H.phi, 4, {0, 1, 2})});
        Tensor rhs = H.tmul(H.delta_leg(H.phi, 2), H.delta_leg(H.phi, 0));
        check_eq(rep, H, "(q3)", lhs, rhs);
    }
    check_eq(rep, H, "(q4)", H.eps_leg(H.phi, 1), H.unit_tensor(2));
    {
        Tensor l = H.eps_leg(H.phi, 0);
        Tensor r = H.eps_leg(H.phi, 2);
        Tensor u = H.unit_tensor(2);
        check_eq(rep, H, "(q7)", l == u ? r : l, u);
    }
    return rep;
}

/// Antipode axioms (q5), (q6), anti-homomorphism, and the ε-normalizations.
inline VerificationReport verify_quasi_hopf(const QuasiHopfAlgebra& H) {
    VerificationReport rep;
    using detail::check_eq;
    using detail::check_forall_basis;
    using detail::check_forall_pairs;

    check_forall_pairs(rep, H, "S-antihom", [&](int i, int j) {
        Elem l = H.S(H.mul(H.e(i), H.e(j)));
        Elem r = H.mul(H.S(j), H.S(i));
        return std::pair{l, r};
    });
    check_eq(rep, H, "S-unit", H.S(H.unit), H.unit);

    check_forall_basis(rep, H, "(q5)", [&](int i) {
        Elem lhs1 = H.zero_elem(), lhs2 = H.zero_elem();
        for (const auto& [j, k, c] : H.comult_rows[i]) {
            lhs1 = t_add(lhs1, t_scale(c, H.mul({H.S(j), H.alpha, H.e(k)})));
            lhs2 = t_add(lhs2, t_scale(c, H.mul({H.e(j), H.beta, H.S(k)})));
        }
        Elem rhs1 = t_scale(H.counit[i], H.alpha);
        Elem rhs2 = t_scale(H.counit[i], H.beta);
        if (!(lhs1 == rhs1)) return std::pair{lhs1, rhs1};
        return std::pair{lhs2, rhs2};
    });
    {
        Elem s1 = H.zero_elem();
        for (std::size_t f = 0; f < H.phi.a.size(); ++f) {
            if (H.phi.a[f].is_zero()) continue;
            auto d = H.phi.digits(f);
            s1 = t_add(s1, t_scale(H.phi.a[f],
                                   H.mul({H.e(d[0]), H.beta, H.S(d[1]), H.alpha, H.e(d[2])})));
        }
        Elem s2 = H.zero_elem();
        for (std::size_t f = 0; f < H.phi_inv.a.size(); ++f) {
            if (H.phi_inv.a[f].is_zero()) continue;
            auto d = H.phi_inv.digits(f);
            s2 = t_add(s2, t_scale(H.phi_inv.a[f],
                                   H.mul({H.S(d[0]), H.alpha, H.e(d[1]), H.beta, H.S(d[2])})));
        }
        check_eq(rep, H, "(q6)", s1 == H.unit ? s2 : s1, H.unit, "X¹βS(X²)αX³ / S(x¹)αx²βS(x³)");
    }
    check_forall_basis(rep, H, "eps-S", [&](int i) {
        Elem l(1, 1), r(1, 1);
        l.a[0] = H.eps(H.S(i));
        r.a[0] = H.counit[i];
        return std::pair{l, r};
    });
    {
        Elem l(1, 1), r(1, 1);
        l.a[0] = H.eps(H.alpha) * H.eps(H.beta);
        r.a[0] = Scalar::one(H.field);
        check_eq(rep, H, "eps-alpha-beta", l, r);
    }
    return rep;
}

/// Validity of a gauge transformation for H.
inline void validate_gauge(const QuasiBialgebra& H, const GaugeTransformation& G) {
    if (!(H.tmul(G.F, G.F_inv) == H.unit_tensor(2)) || !(H.tmul(G.F_inv, G.F) == H.unit_tensor(2)))
        throw InputError("gauge transformation is not invertible");
    if (!(H.eps_leg(G.F, 0) == H.unit) || !(H.eps_leg(G.F, 1) == H.unit))
        throw InputError("gauge transformation is not counit-normalized");
}

/// Twist by F: Δ_F = FΔF⁻¹, Φ_F per the pentagon deformation, α_F = ΣS(G¹)αG²,
/// β_F = ΣF¹βS(F²); mult, unit, counit and S are untouched.
inline QuasiHopfAlgebra gauge_twist(const QuasiHopfAlgebra& H, const GaugeTransformation& G) {
    validate_gauge(H, G);
    QuasiHopfAlgebra R = H;
    Tensor new_comult(H.n, 3);
    for (int i = 0; i < H.n; ++i) {
        Tensor t = H.tmul({G.F, H.comult_elem(H.e(i)), G.F_inv});
        for (int j = 0; j < H.n; ++j)
            for (int k = 0; k < H.n; ++k)
                new_comult.a[(static_cast<std::size_t>(i) * H.n + j) * H.n + k] =
                    t.a[static_cast<std::size_t>(j) * H.n + k];
    }
    R.comult = new_comult;
    R.phi = H.tmul({H.embed(G.F, 3, {1, 2}), H.delta_leg(G.F, 1), H.phi,
                    H.delta_leg(G.F_inv, 0), H.embed(G.F_inv, 3, {0, 1})});
    R.phi_inv = H.tmul({H.embed(G.F, 3, {0, 1}), H.delta_leg(G.F, 0), H.phi_inv,
                        H.delta_leg(G.F_inv, 1), H.embed(G.F_inv, 3, {1, 2})});
    Elem new_alpha = H.zero_elem(), new_beta = H.zero_elem();
    for (std::size_t f = 0; f < G.F_inv.a.size(); ++f) {
        if (G.F_inv.a[f].is_zero()) continue;
        auto d = G.F_inv.digits(f);
        new_alpha = t_add(new_alpha, t_scale(G.F_inv.a[f], H.mul({H.S(d[0]), H.alpha, H.e(d[1])})));
    }
    for (std::size_t f = 0; f < G.F.a.size(); ++f) {
        if (G.F.a[f].is_zero()) continue;
        auto d = G.F.digits(f);
        new_beta = t_add(new_beta, t_scale(G.F.a[f], H.mul({H.e(d[0]), H.beta, H.S(d[1])})));
    }
    R.alpha = new_alpha;
    R.beta = new_beta;
    R.finalize_hopf();
    return R;
}

/// Rescale α, β so ε(α) = ε(β) = 1 (α ← ε(β)α, β ← ε(α)β); idempotent.
inline QuasiHopfAlgebra normalize_alpha_beta(const QuasiHopfAlgebra& H) {
    Scalar ea = H.eps(H.alpha), eb = H.eps(H.beta);
    if (!(ea * eb == Scalar::one(H.field)))
        throw InputError("cannot normalize: eps(alpha)*eps(beta) != 1");
    QuasiHopfAlgebra R = H;
    R.alpha = t_scale(eb, H.alpha);
    R.beta = t_scale(ea, H.beta);
    return R;
}

}  // namespace qhopf
