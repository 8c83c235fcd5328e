#pragma once

// Exact 4x4 matrix algebra over the quadratic extension F(delta), the
// one-generator factorization identities, the torus side of the exceptional
// isomorphism with the six-dimensional quadratic space, membership checks
// for the orbit stabilizers, and a numeric (complex floating point) oracle
// for the two one-generator period integrals. Everything except the p-adic
// oracle is exact.

#include <complex>
#include <random>

#include "cassel/theta.hpp"

namespace cassel {

inline Rat conj(const Rat& x) { return x; }
inline RationalFn conj(const RationalFn& x) { return x; }
inline Rat inv(const Rat& x) { return x.inv(); }
inline RationalFn inv(const RationalFn& x) { return x.inv(); }
inline bool is_zero(const Rat& x) { return x.is_zero(); }
inline bool is_zero(const RationalFn& x) { return x.is_zero(); }

// a + b delta with delta^2 = d; conjugation negates b.
template <class K>
struct QuadExt {
    K a{}, b{}, d{};

    static QuadExt scalar(K v, K d) {
        K zero = v - v;
        return {std::move(v), std::move(zero), std::move(d)};
    }

    friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
        return {x.a + y.a, x.b + y.b, x.d};
    }
    friend QuadExt operator-(const QuadExt& x, const QuadExt& y) {
        return {x.a - y.a, x.b - y.b, x.d};
    }
    QuadExt operator-() const { return {-a, -b, d}; }
    friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
        return {x.a * y.a + x.b * y.b * x.d, x.a * y.b + x.b * y.a, x.d};
    }
    friend bool operator==(const QuadExt& x, const QuadExt& y) {
        return x.a == y.a && x.b == y.b;
    }
    friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

    QuadExt conjugate() const { return {a, -b, d}; }
    K norm() const { return a * a - d * b * b; }  // N(a + b delta)
    bool is_zero_elt() const { return is_zero(a) && is_zero(b); }
    bool is_rational_part_only() const { return is_zero(b); }

    QuadExt inverse() const {
        K n = norm();
        if (is_zero(n)) throw arithmetic_error("quadratic-extension element has zero norm");
        K ninv = inv(n);
        return {a * ninv, -b * ninv, d};
    }
};

template <class K>
QuadExt<K> conj(const QuadExt<K>& x) {
    return x.conjugate();
}
template <class K>
QuadExt<K> inv(const QuadExt<K>& x) {
    return x.inverse();
}
template <class K>
bool is_zero(const QuadExt<K>& x) {
    return x.is_zero_elt();
}

template <class T>
struct Mat4 {
    std::array<std::array<T, 4>, 4> m;

    static Mat4 zero(const T& model) {
        Mat4 r;
        for (auto& row : r.m)
            for (auto& x : row) x = model - model;
        return r;
    }
    static Mat4 identity(const T& one, const T& zero) {
        Mat4 r;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) r.m[i][j] = (i == j) ? one : zero;
        return r;
    }

    friend Mat4 operator*(const Mat4& x, const Mat4& y) {
        Mat4 r;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                T acc = x.m[i][0] * y.m[0][j];
                for (int k = 1; k < 4; ++k) acc = acc + x.m[i][k] * y.m[k][j];
                r.m[i][j] = acc;
            }
        return r;
    }
    friend Mat4 operator*(const T& c, const Mat4& x) {
        Mat4 r = x;
        for (auto& row : r.m)
            for (auto& e : row) e = c * e;
        return r;
    }
    friend Mat4 operator+(const Mat4& x, const Mat4& y) {
        Mat4 r;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) r.m[i][j] = x.m[i][j] + y.m[i][j];
        return r;
    }
    friend bool operator==(const Mat4& x, const Mat4& y) { return x.m == y.m; }

    Mat4 transposed() const {
        Mat4 r;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) r.m[i][j] = m[j][i];
        return r;
    }
    Mat4 conj_transposed() const {
        Mat4 r;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) r.m[i][j] = conj(m[j][i]);
        return r;
    }
    bool upper_triangular() const {
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < i; ++j)
                if (!is_zero(m[i][j])) return false;
        return true;
    }

    // Gauss-Jordan inverse over a field.
    Mat4 inverse(const T& one, const T& zero) const {
        Mat4 a = *this, r = identity(one, zero);
        for (int col = 0; col < 4; ++col) {
            int piv = -1;
            for (int i = col; i < 4; ++i)
                if (!is_zero(a.m[i][col])) {
                    piv = i;
                    break;
                }
            if (piv < 0) throw arithmetic_error("singular matrix");
            std::swap(a.m[col], a.m[piv]);
            std::swap(r.m[col], r.m[piv]);
            T scale = inv(a.m[col][col]);
            for (int j = 0; j < 4; ++j) {
                a.m[col][j] = scale * a.m[col][j];
                r.m[col][j] = scale * r.m[col][j];
            }
            for (int i = 0; i < 4; ++i) {
                if (i == col || is_zero(a.m[i][col])) continue;
                T f = a.m[i][col];
                for (int j = 0; j < 4; ++j) {
                    a.m[i][j] = a.m[i][j] - f * a.m[col][j];
                    r.m[i][j] = r.m[i][j] - f * r.m[col][j];
                }
            }
        }
        return r;
    }
};

// ---------------------------------------------------------------------------
// One-generator factorizations through the big cell.
// ---------------------------------------------------------------------------

struct excluded_locus_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Case 1: s2 x_{2a2-a0}(y) = b * s with b upper-triangular and s in the
// conjugated Shalika group; defined only for y != 0. The check multiplies
// the displayed right-hand side and compares exactly.
template <class K>
bool lemfact1_case1(const K& y, const K& one, const K& zero) {
    if (is_zero(y)) throw excluded_locus_error("factorization needs y != 0");
    K yi = inv(y);
    Mat4<K> lhs;
    lhs.m = {{{one, zero, zero, zero},
              {zero, zero, one, zero},
              {zero, -one, -y, zero},
              {zero, zero, zero, one}}};
    Mat4<K> b;
    b.m = {{{one, zero, zero, zero},
            {zero, -yi, one, zero},
            {zero, zero, -y, zero},
            {zero, zero, zero, one}}};
    Mat4<K> s;
    s.m = {{{one, zero, zero, zero},
            {zero, one, zero, zero},
            {zero, yi, one, zero},
            {zero, zero, zero, one}}};
    return (b * s) == lhs;
}

// Case 2: s1 x_{a1-a2}(y) for y = a_y + b_y delta, defined where
// N(y) + b_y != 0.
template <class K>
bool lemfact1_case2(const QuadExt<K>& y) {
    using E = QuadExt<K>;
    E zero = y - y;
    E one = E::scalar(y.d * inv(y.d), y.d);  // d / d
    E c = E::scalar(y.norm() + y.b, y.d);    // y ybar + b_y
    if (is_zero(c)) throw excluded_locus_error("factorization needs N(y) + b_y != 0");
    E ci = c.inverse();
    E yb = y.conjugate();
    E by = E::scalar(y.b, y.d);
    Mat4<E> lhs;
    lhs.m = {{{zero, one, zero, zero},
              {one, y, zero, zero},
              {zero, zero, zero, one},
              {zero, zero, one, -yb}}};
    Mat4<E> b;
    b.m = {{{-ci, yb * ci, zero, zero},
            {zero, one, zero, zero},
            {zero, zero, ci, y * ci},
            {zero, zero, zero, -one}}};
    Mat4<E> s;
    s.m = {{{yb, -by, zero, zero},
            {one, y, zero, zero},
            {zero, zero, y, by},
            {zero, zero, -one, yb}}};
    return (b * s) == lhs;
}

enum class Lemfact1Case { One, Two };

inline bool lemfact1_check(Lemfact1Case which, const Rat& y_scalar, const QuadExt<Rat>& y_ext) {
    if (which == Lemfact1Case::One) return lemfact1_case1<Rat>(y_scalar, Rat(1), Rat(0));
    return lemfact1_case2<Rat>(y_ext);
}

// ---------------------------------------------------------------------------
// Exceptional isomorphism: torus action on the six-dimensional space.
// ---------------------------------------------------------------------------

// Coordinates (x1..x6) of an element of the quadratic space, as a 4x4
// alternating-with-twist matrix over E.
template <class K>
Mat4<QuadExt<K>> quad_space_vector(const std::array<K, 6>& x, const K& d) {
    using E = QuadExt<K>;
    auto e = [&](K a, K b) { return E{std::move(a), std::move(b), d}; };
    K z = d - d;
    Mat4<E> v;
    v.m = {{{e(z, z), e(-x[0], z), e(x[1], z), e(-x[2], x[3])},
            {e(x[0], z), e(z, z), e(x[2], x[3]), e(x[4], z)},
            {e(-x[1], z), e(-x[2], -x[3]), e(z, z), e(x[5], z)},
            {e(x[2], -x[3]), e(-x[4], z), e(-x[5], z), e(z, z)}}};
    return v;
}

// Reads coordinates back; throws if the matrix left the six-dimensional
// space (which would falsify the well-definedness of the action).
template <class K>
std::array<K, 6> quad_space_coords(const Mat4<QuadExt<K>>& v) {
    auto need_rational = [](const QuadExt<K>& e) {
        if (!e.is_rational_part_only())
            throw arithmetic_error("matrix has left the six-dimensional space");
        return e.a;
    };
    std::array<K, 6> x = {need_rational(v.m[1][0]), need_rational(v.m[0][2]),
                          v.m[1][2].a,              v.m[1][2].b,
                          need_rational(v.m[1][3]), need_rational(v.m[2][3])};
    // antisymmetry and the twisted corner entries
    if (!(v.m[0][1] == -v.m[1][0]) || !(v.m[2][0] == -v.m[0][2]) ||
        !(v.m[3][1] == -v.m[1][3]) || !(v.m[3][2] == -v.m[2][3]))
        throw arithmetic_error("matrix has left the six-dimensional space");
    QuadExt<K> corner = v.m[0][3];
    if (!(corner.a == -x[2]) || !(corner.b == x[3]))
        throw arithmetic_error("matrix has left the six-dimensional space");
    if (!(v.m[3][0].a == x[2]) || !(v.m[3][0].b == -x[3]))
        throw arithmetic_error("matrix has left the six-dimensional space");
    if (!(v.m[2][1] == -(v.m[1][2])))
        throw arithmetic_error("matrix has left the six-dimensional space");
    return x;
}

// The torus image under the exceptional isomorphism: lifting
// diag(a, b, nu bbar^-1, nu abar^-1) through the similitude-square subgroup
// (twist element alpha = ab) acts on v as  conj(ab) * (t v t^T),  and the
// action must be the displayed diagonal: x1 by N(ab), x2 by nu N(a),
// x3 + delta x4 by nu abar b, x5 by nu N(b), x6 by nu^2.
template <class K>
bool excep_iso_check(const QuadExt<K>& a, const QuadExt<K>& b, const K& nu) {
    using E = QuadExt<K>;
    const K d = a.d;
    E nuE = E::scalar(nu, d);
    E t1 = a, t2 = b, t3 = nuE * b.conjugate().inverse(), t4 = nuE * a.conjugate().inverse();
    E twist = (a * b).conjugate();
    E zero = a - a;
    std::array<E, 4> diag = {t1, t2, t3, t4};

    // expected multipliers
    K n_ab = (a * b).norm();
    K n_a = a.norm(), n_b = b.norm();
    E mid = nuE * a.conjugate() * b;  // acts on x3 + delta x4

    for (int basis = 0; basis < 6; ++basis) {
        std::array<K, 6> x{};
        for (auto& c : x) c = d - d;
        x[static_cast<size_t>(basis)] = d * inv(d);  // 1
        Mat4<E> v = quad_space_vector<K>(x, d);
        // t v t^T for diagonal t, then the twist scalar
        Mat4<E> tv;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) tv.m[i][j] = twist * diag[i] * v.m[i][j] * diag[j];
        std::array<K, 6> y = quad_space_coords<K>(tv);
        // compare with the diagonal action
        std::array<K, 6> expect{};
        for (auto& c : expect) c = d - d;
        expect[0] = n_ab * x[0];
        expect[1] = nu * n_a * x[1];
        {
            E in{x[2], x[3], d};
            E out = mid * in;
            expect[2] = out.a;
            expect[3] = out.b;
        }
        expect[4] = nu * n_b * x[4];
        expect[5] = nu * nu * x[5];
        if (!(y == expect)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Stabilizer membership checks for the orbit table.
// ---------------------------------------------------------------------------

using EMat = Mat4<QuadExt<Rat>>;
using EScalar = QuadExt<Rat>;

inline EScalar e_of(Rat a, Rat b, const Rat& d) { return {std::move(a), std::move(b), d}; }
inline EScalar e_rat(Rat a, const Rat& d) { return {std::move(a), Rat(0), d}; }

inline EMat emat_identity(const Rat& d) {
    return EMat::identity(e_rat(Rat(1), d), e_rat(Rat(0), d));
}

// generators s1, s2, w_delta over E = F(delta)
inline EMat weyl_s1_matrix(const Rat& d) {
    EMat m = EMat::zero(e_rat(Rat(0), d));
    auto one = e_rat(Rat(1), d);
    m.m[0][1] = one;
    m.m[1][0] = one;
    m.m[2][3] = one;
    m.m[3][2] = one;
    return m;
}
inline EMat weyl_s2_matrix(const Rat& d) {
    EMat m = EMat::zero(e_rat(Rat(0), d));
    auto one = e_rat(Rat(1), d);
    m.m[0][0] = one;
    m.m[1][2] = one;
    m.m[2][1] = -one;
    m.m[3][3] = one;
    return m;
}
inline EMat w_delta_matrix(const Rat& d) {
    EMat m = emat_identity(d);
    m.m[1][0] = e_of(Rat(0), Rat(1), d);  // delta
    m.m[3][2] = e_of(Rat(0), Rat(1), d);  // -conj(delta) = delta
    return m;
}

inline EMat orbit_representative(const OrbitEntry& orbit, const Rat& d) {
    EMat w = orbit.twisted ? w_delta_matrix(d) : emat_identity(d);
    for (Gen g : orbit.word)
        w = w * (g == Gen::s1 ? weyl_s1_matrix(d) : weyl_s2_matrix(d));
    return w;
}

// GL2 block embedding h -> diag(h, det(h) J2 h^-T J2): for [[a,b],[c,e]] the
// lower block is [[a,-b],[-c,e]].
inline EMat embed_gl2(const EScalar& a, const EScalar& b, const EScalar& c, const EScalar& e,
                      const Rat& d) {
    EMat m = EMat::zero(e_rat(Rat(0), d));
    m.m[0][0] = a;
    m.m[0][1] = b;
    m.m[1][0] = c;
    m.m[1][1] = e;
    m.m[2][2] = a;
    m.m[2][3] = -b;
    m.m[3][2] = -c;
    m.m[3][3] = e;
    return m;
}

// Unipotent part n(alpha, x, y) of the Shalika group.
inline EMat shalika_unipotent(const EScalar& alpha, const Rat& x, const Rat& y, const Rat& d) {
    EMat m = emat_identity(d);
    m.m[0][2] = alpha;
    m.m[0][3] = e_rat(x, d);
    m.m[1][2] = e_rat(y, d);
    m.m[1][3] = alpha.conjugate();
    return m;
}

struct StabilizerSampleParams {
    Rat gl_a, gl_b, gl_c, gl_d;  // GL2 part (upper-triangular or T_delta uses a, b)
    Rat alpha_a, alpha_b;        // alpha in E
    Rat x, y;
};

inline StabilizerSampleParams random_sample_params(std::mt19937_64& rng) {
    auto r = [&](bool nonzero) {
        long long n = static_cast<long long>(rng() % 9ULL) - 4;
        if (nonzero && n == 0) n = 3;
        long long den = 1 + static_cast<long long>(rng() % 3ULL);
        return Rat(n, den);
    };
    return {r(true), r(false), r(false), r(true), r(false), r(false), r(false), r(false)};
}

// Builds a sample from the orbit's stabilizer recipe with the given
// parameters.
inline EMat stabilizer_sample(const OrbitEntry& orbit, const StabilizerSampleParams& p,
                              const Rat& d) {
    EScalar alpha = e_of(p.alpha_a, p.alpha_b, d);
    EMat gl;
    switch (orbit.stabilizer) {
        case StabilizerKind::BorelGL2FullUnipotent:
        case StabilizerKind::BorelGL2NoLowerEntry:
        case StabilizerKind::BorelGL2CornerOnly:
        case StabilizerKind::BorelGL2:
            gl = embed_gl2(e_rat(p.gl_a, d), e_rat(p.gl_b, d), e_rat(Rat(0), d),
                           e_rat(p.gl_d, d), d);
            break;
        default:
            // T_delta: [[a, b], [b d, a]] with (a, b) != (0, 0)
            gl = embed_gl2(e_rat(p.gl_a, d), e_rat(p.gl_b, d), e_rat(p.gl_b * d, d),
                           e_rat(p.gl_a, d), d);
            break;
    }
    EMat n = emat_identity(d);
    switch (orbit.stabilizer) {
        case StabilizerKind::BorelGL2FullUnipotent:
        case StabilizerKind::TorusDeltaFullUnipotent:
            n = shalika_unipotent(alpha, p.x, p.y, d);
            break;
        case StabilizerKind::BorelGL2NoLowerEntry:
            n = shalika_unipotent(alpha, p.x, Rat(0), d);
            break;
        case StabilizerKind::BorelGL2CornerOnly:
            n = shalika_unipotent(e_rat(Rat(0), d), p.x, Rat(0), d);
            break;
        case StabilizerKind::TorusDeltaTwistedPlane:
            // y-entry pinned to delta(alpha - alphabar) - delta deltabar x
            n = shalika_unipotent(alpha, p.x, Rat(2) * p.alpha_b * d + d * p.x, d);
            break;
        case StabilizerKind::TorusDeltaTwistedLine:
            // alpha = conj(delta) x = -delta x, y = delta deltabar x... with
            // deltabar = -delta the entry reads -d x
            n = shalika_unipotent(e_of(Rat(0), -p.x, d), p.x, -(d * p.x), d);
            break;
        case StabilizerKind::BorelGL2:
        case StabilizerKind::TorusDelta:
            break;
    }
    return gl * n;
}

// The defining similitude relation gbar^T J g = m J; returns the multiplier
// when it holds.
inline std::optional<EScalar> similitude_multiplier(const EMat& g, const Rat& d) {
    EMat J = EMat::zero(e_rat(Rat(0), d));
    auto one = e_rat(Rat(1), d);
    J.m[0][3] = one;
    J.m[1][2] = one;
    J.m[2][1] = -one;
    J.m[3][0] = -one;
    EMat lhs = g.conj_transposed() * J * g;
    EScalar m = lhs.m[0][3];  // J has 1 there
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            EScalar want = m * J.m[i][j];
            if (!(lhs.m[i][j] == want)) return std::nullopt;
        }
    if (is_zero(m)) return std::nullopt;
    return m;
}

// True when the sample lies in the stabilizer: it satisfies the unitary
// similitude relation and w^-1 sample w is upper-triangular.
inline bool stabilizer_check(const OrbitEntry& orbit, const EMat& sample, const Rat& d) {
    if (!similitude_multiplier(sample, d)) return false;
    EMat w = orbit_representative(orbit, d);
    EMat conjed = w.inverse(e_rat(Rat(1), d), e_rat(Rat(0), d)) * sample * w;
    return conjed.upper_triangular();
}

// ---------------------------------------------------------------------------
// Numeric p-adic oracle.
// ---------------------------------------------------------------------------

// Additive character x -> exp(2 pi i {x}) with conductor the integers;
// depth controls the base coset resolution of the sampler.
struct PadicSampler {
    long long p = 3;
    int depth = 3;

    PadicSampler(long long prime, int depth_) : p(prime), depth(depth_) {
        if (p < 3 || p % 2 == 0) throw constraint_error("odd residue characteristic",
                                                        "the oracle needs an odd prime");
    }

    // smallest positive quadratic non-residue mod p
    long long default_nonresidue() const {
        for (long long c = 2; c < p; ++c) {
            bool residue = false;
            for (long long t = 1; t < p; ++t)
                if ((t * t) % p == c) {
                    residue = true;
                    break;
                }
            if (!residue) return c;
        }
        throw arithmetic_error("no non-residue found");
    }
};

struct PadicIntegralResult {
    std::complex<double> value{};
    double tail_bound = 0.0;  // certified bound on the dropped mass
    long long shells_done = 0;
};

namespace detail {
inline long long mod_inverse(long long a, long long m) {
    long long t = 0, newt = 1, r = m, newr = a % m;
    if (newr < 0) newr += m;
    while (newr != 0) {
        long long quot = r / newr;
        t -= quot * newt;
        std::swap(t, newt);
        r -= quot * newr;
        std::swap(r, newr);
    }
    if (r != 1) throw arithmetic_error("not invertible");
    return t < 0 ? t + m : t;
}
inline long long pow_ll(long long b, int e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}
}  // namespace detail

// integral over the integers of |y|^(2 z2 - 1) psi^-1(2 delta^2 / y) dy,
// shell by shell: the integrand is constant on cosets of resolution 2j at
// depth j, so those shells are summed exactly; deeper shells are covered by
// the geometric tail bound. Compares against 1 - q^-1 - q^-(2 z2 + 1).
inline PadicIntegralResult padic_integral_comp1(const PadicSampler& sampler, const Rat& z2,
                                                int jmax) {
    const double q = static_cast<double>(sampler.p);
    const double z2d = z2.to_double();
    if (!(z2d > 0)) throw constraint_error("convergence", "comp1 needs Re(z2) > 0");
    const long long d = sampler.default_nonresidue();
    const long long cell_cap = 4'000'000;
    std::complex<double> total = 0.0;
    long long done = 0;
    const double two_pi = 6.283185307179586476925287;
    for (int j = 0; j <= jmax; ++j) {
        int m = std::max(std::max(2 * j, sampler.depth), j + 1);
        long long unit_mod = detail::pow_ll(sampler.p, m - j);
        if (unit_mod > cell_cap) break;
        long long pj = detail::pow_ll(sampler.p, j);
        double shell_weight = std::pow(q, -static_cast<double>(j) * (2 * z2d - 1)) *
                              std::pow(q, -static_cast<double>(m));
        std::complex<double> shell = 0.0;
        for (long long u = 1; u < unit_mod; ++u) {
            if (u % sampler.p == 0) continue;
            double theta = 0.0;
            if (j > 0) {
                long long uinv = detail::mod_inverse(u % pj, pj);
                long long w = (2 * d % pj) * (uinv % pj) % pj;
                theta = -two_pi * static_cast<double>(w) / static_cast<double>(pj);
            }
            shell += std::complex<double>(std::cos(theta), std::sin(theta));
        }
        total += shell_weight * shell;
        done = j;
    }
    // |shell_j| <= vol * sup|integrand| = (1 - 1/q) q^(-2 j z2)
    double r = std::pow(q, -2.0 * z2d);
    double tail = (1.0 - 1.0 / q) * std::pow(r, static_cast<double>(done + 1)) / (1.0 - r);
    return {total, tail, done + 1};
}

inline double comp1_closed_form(long long p, const Rat& z2) {
    double q = static_cast<double>(p);
    return 1.0 - 1.0 / q - std::pow(q, -(2.0 * z2.to_double() + 1.0));
}

// integral over the integer square of |a^2 - d b^2 + b|^(2 z1 + z0 - 1),
// by adaptive refinement: cells where the valuation is pinned contribute
// exactly, cells with deeper vanishing are split until jmax and then covered
// by the tail bound. Optionally restricted to the unit region (a, b) not
// both divisible by p.
inline PadicIntegralResult padic_integral_comp2(const PadicSampler& sampler, const Rat& z1,
                                                const Rat& z0, int jmax,
                                                bool unit_region_only = false) {
    const double q = static_cast<double>(sampler.p);
    const double sprime = 2 * z1.to_double() + z0.to_double();
    if (!(sprime > 1)) throw constraint_error("convergence", "comp2 needs Re(2 z1 + z0) > 1");
    const long long d = sampler.default_nonresidue();
    const long long p = sampler.p;
    const long long cell_cap = 6'000'000;
    double total = 0.0;
    double tail = 0.0;
    struct Cell {
        long long a, b;
    };
    std::vector<Cell> active;  // N == 0 mod p^level on these
    // level 1 bootstrap
    for (long long a = 0; a < p; ++a)
        for (long long b = 0; b < p; ++b) {
            if (unit_region_only && a == 0 && b == 0) continue;
            long long n = ((a * a - d * b * b + b) % p + p) % p;
            if (n == 0)
                active.push_back({a, b});
            else
                total += std::pow(q, -2.0);  // v = 0 cell
        }
    int level = 1;
    long long done_levels = 1;
    while (!active.empty() && level < jmax) {
        long long pk = detail::pow_ll(p, level);
        long long pk1 = pk * p;
        if (static_cast<long long>(active.size()) * p * p > cell_cap) break;
        std::vector<Cell> next;
        double contrib = std::pow(q, -static_cast<double>(level) * (sprime - 1)) *
                         std::pow(q, -2.0 * (level + 1));
        for (const Cell& c : active) {
            for (long long s = 0; s < p; ++s)
                for (long long t = 0; t < p; ++t) {
                    long long a = c.a + pk * s, b = c.b + pk * t;
                    long long n =
                        ((a % pk1) * (a % pk1) % pk1 - d % pk1 * (b % pk1) % pk1 * (b % pk1) % pk1 +
                         b % pk1) % pk1;
                    n = (n % pk1 + pk1) % pk1;
                    if (n == 0)
                        next.push_back({a, b});
                    else
                        total += contrib;  // v = level exactly on this cell
                }
        }
        active = std::move(next);
        ++level;
        done_levels = level;
    }
    // remaining cells have v >= level: bound each by its volume times the sup
    tail += static_cast<double>(active.size()) *
            std::pow(q, -2.0 * static_cast<double>(level)) *
            std::pow(q, -static_cast<double>(level) * (sprime - 1));
    return {std::complex<double>(total, 0.0), tail, done_levels};
}

inline double comp2_closed_form(long long p, const Rat& z1, const Rat& z0) {
    double q = static_cast<double>(p);
    double X = -std::pow(q, 2 * z1.to_double() + z0.to_double());
    return -(1.0 / (q * q)) * (1.0 + (q - 1.0) * (1.0 - q * X) / (1.0 + X));
}

// the unit-region stratum alone
inline double comp2_unit_region_closed_form(long long p, const Rat& z1, const Rat& z0) {
    double q = static_cast<double>(p);
    return (q * q - q - 1.0) / (q * q) +
           (1.0 - 1.0 / q) / (std::pow(q, 2 * z1.to_double() + z0.to_double()) - 1.0);
}

}  // namespace cassel
