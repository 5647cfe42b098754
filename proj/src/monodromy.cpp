#include "hyplac/monodromy.hpp"

#include <cstring>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "hyplac/errors.hpp"
#include "hyplac/interval.hpp"

namespace hyplac {

namespace {

CycMatrix with_order(const CycMatrix& m, unsigned order) {
    CycMatrix out(m.rows(), m.cols());
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).promoted(order);
    return out;
}

unsigned common_order(const CycMatrix& m) {
    unsigned long l = 1;
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j) l = std::lcm(l, static_cast<unsigned long>(m(i, j).order()));
    return static_cast<unsigned>(l);
}

}  // namespace

MonodromyTriple levelt_generators(const HypergeometricParameters& p) {
    if (!is_irreducible(p))
        fail(ErrorCode::Reducible, "the companion realization needs alpha_j != beta_k: " + p.str());

    const unsigned n_field = splitting_field_order_ui(p);
    std::vector<Cyclotomic> roots_zero;
    std::vector<Cyclotomic> roots_b;
    for (const auto& a : p.alpha) roots_zero.push_back(unit_circle_point(a, n_field));
    for (const auto& b : p.beta) roots_b.push_back(unit_circle_point(b, n_field));

    Poly<Cyclotomic> pa = Poly<Cyclotomic>::from_roots(roots_zero);
    Poly<Cyclotomic> pb = Poly<Cyclotomic>::from_roots(roots_b);

    MonodromyTriple t;
    t.order = n_field;
    CycMatrix a_mat = with_order(exact::companion(pa), n_field);
    CycMatrix b_mat = with_order(exact::companion(pb), n_field);
    t.g0 = a_mat;
    t.g1 = with_order(exact::inverse(a_mat) * b_mat, n_field);
    t.g_inf = with_order(exact::inverse(b_mat), n_field);

    // Exact verification of the construction invariants.
    const Index n = t.g0.rows();
    CycMatrix prod = t.g0 * t.g1 * t.g_inf;
    if (!matrices_equal(prod, cyc_identity(n, n_field)))
        throw std::logic_error("levelt generators do not compose to the identity");
    if (!(exact::characteristic_polynomial(t.g0) == pa))
        throw std::logic_error("char poly of g0 does not match the local data at 0");
    std::vector<Cyclotomic> roots_b_inv;
    for (const auto& b : p.beta) roots_b_inv.push_back(unit_circle_point(-b, n_field));
    if (!(exact::characteristic_polynomial(t.g_inf) == Poly<Cyclotomic>::from_roots(roots_b_inv)))
        throw std::logic_error("char poly of g_inf does not match the local data at infinity");
    if (!is_pseudoreflection(t.g1))
        throw std::logic_error("g1 is not a pseudoreflection");
    return t;
}

bool is_pseudoreflection(const CycMatrix& m) {
    if (m.rows() != m.cols()) fail(ErrorCode::InvalidInput, "pseudoreflection test needs a square matrix");
    CycMatrix diff = m;
    for (Index i = 0; i < m.rows(); ++i) diff(i, i) = diff(i, i) - Cyclotomic(1);
    return exact::rank(diff) == 1;
}

Cyclotomic special_eigenvalue(const CycMatrix& m) {
    if (!is_pseudoreflection(m))
        fail(ErrorCode::NotAPseudoreflection, "special eigenvalue is defined for pseudoreflections only");
    return exact::determinant(m);
}

int centralizer_dimension(const CycMatrix& m) {
    if (m.rows() != m.cols()) fail(ErrorCode::InvalidInput, "centralizer of a non-square matrix");
    const Index n = m.rows();
    unsigned order = common_order(m);
    CycMatrix id = cyc_identity(n, order);
    CycMatrix mt = m.transpose();
    // vec(MX - XM) = (I (x) M - M^T (x) I) vec(X)
    CycMatrix commutation = exact::kronecker(id, m) - exact::kronecker(mt, id);
    return static_cast<int>(n * n - exact::rank(commutation));
}

namespace {

CycMatrix unvec(const CycVector& v, Index n) {
    CycMatrix m(n, n);
    for (Index j = 0; j < n; ++j)
        for (Index i = 0; i < n; ++i) m(i, j) = v(j * n + i);
    return m;
}

bool invariant_under(const CycMatrix& h, const CycMatrix& g) {
    return matrices_equal(CycMatrix(conjugate_transpose(g) * h * g), h);
}

/// Deterministic invertible congruence used to escape zero leading minors.
/// Entries are small multiples of roots of unity: forms with zero diagonal
/// and purely imaginary off-diagonal entries defeat every rational-entry
/// congruence, so the probe must reach into the field.
CycMatrix congruence_matrix(Index n, unsigned order, unsigned attempt) {
    CycMatrix t = cyc_identity(n, order);
    if (attempt == 0) return t;
    std::uint64_t state = 0x9e3779b97f4a7c15ull * (attempt + 1);
    auto next = [&]() {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return state >> 33;
    };
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) {
            if (i == j) continue;
            long c = static_cast<long>(next() % 5) - 2;
            unsigned e = static_cast<unsigned>(next() % order);
            t(i, j) = (Cyclotomic(Rational(c)) * root_of_unity(e, order)).promoted(order);
        }
    return t;
}

}  // namespace

HermitianFormResult invariant_hermitian_form(const MonodromyTriple& t) {
    const Index n = t.g0.rows();
    const unsigned order = t.order;
    CycMatrix id = cyc_identity(n * n, order);

    auto constraint = [&](const CycMatrix& g) {
        // g^dagger H g = H <=> (g^T (x) g^dagger) vec(H) = vec(H)
        return CycMatrix(exact::kronecker(CycMatrix(g.transpose()), conjugate_transpose(g)) - id);
    };
    CycMatrix c0 = constraint(t.g0);
    CycMatrix ci = constraint(t.g_inf);
    CycMatrix stacked(2 * n * n, n * n);
    stacked.topRows(n * n) = c0;
    stacked.bottomRows(n * n) = ci;

    CycMatrix basis = exact::null_space(stacked);
    HermitianFormResult result;
    result.solution_dimension = static_cast<int>(basis.cols());
    if (result.solution_dimension == 0)
        fail(ErrorCode::NoInvariantForm, "no invariant sesquilinear form exists");
    if (result.solution_dimension > 1) return result;

    CycMatrix s0 = unvec(basis.col(0), n);
    CycMatrix h = s0 + conjugate_transpose(s0);
    bool zero = true;
    for (Index i = 0; i < n && zero; ++i)
        for (Index j = 0; j < n; ++j)
            if (!h(i, j).is_zero()) {
                zero = false;
                break;
            }
    if (zero) {
        if (order <= 2)
            fail(ErrorCode::NoInvariantForm, "solution is antisymmetric over a real field");
        Cyclotomic omega = root_of_unity(1, order) - root_of_unity(-1, order);
        CycMatrix ws = s0;
        for (Index i = 0; i < n; ++i)
            for (Index j = 0; j < n; ++j) ws(i, j) = omega * s0(i, j);
        h = ws + conjugate_transpose(ws);
    }

    if (!matrices_equal(h, conjugate_transpose(h)))
        throw std::logic_error("hermitianization failed");
    if (!invariant_under(h, t.g0) || !invariant_under(h, t.g1) || !invariant_under(h, t.g_inf))
        throw std::logic_error("form is not invariant under the triple");
    result.form = h;

    if (exact::determinant(h).is_zero()) return result;  // degenerate: no signature

    // Signature by Jacobi's rule: the number of negative eigenvalues equals
    // the sign changes along 1, D_1, ..., D_n. Zero minors are escaped by a
    // unimodular congruence, which preserves the signature.
    for (unsigned attempt = 0; attempt < 64; ++attempt) {
        CycMatrix tmat = congruence_matrix(n, order, attempt);
        if (attempt > 0 && exact::determinant(tmat).is_zero()) continue;
        CycMatrix hc = conjugate_transpose(tmat) * h * tmat;
        std::vector<Cyclotomic> minors;
        bool zero_minor = false;
        for (Index k = 1; k <= n; ++k) {
            Cyclotomic d = exact::determinant(CycMatrix(hc.topLeftCorner(k, k)));
            if (d.is_zero()) {
                zero_minor = true;
                break;
            }
            minors.push_back(std::move(d));
        }
        if (zero_minor) continue;
        int negatives = 0;
        int previous = 1;
        for (const auto& d : minors) {
            if (!(d.conjugate() == d))
                throw std::logic_error("principal minor of a Hermitian form is not real");
            int s = certified_sign_real(d);
            if (s != previous) ++negatives;
            previous = s;
        }
        result.signature = std::make_pair(static_cast<int>(n) - negatives, negatives);
        return result;
    }
    throw std::logic_error("could not find a congruence with nonzero leading minors");
}

// ---------------------------------------------------------------------------
// group closure

namespace {

struct FlatUnsuitable {};

/// Fixed-width integral representation of matrices over Z[zeta_N]: n*n blocks
/// of phi int64 power-basis coefficients. Overflow-guarded; products
/// accumulate in __int128.
struct FlatContext {
    // Accumulations stay below n*phi*kLimit^2*(1 + phi*max_row) <= 2^126,
    // inside __int128, given the 2^12 factor checked in build().
    static constexpr std::int64_t kLimit = std::int64_t(1) << 57;

    unsigned n = 0;
    unsigned phi = 0;
    std::vector<std::vector<std::int64_t>> reduction_rows;  // degrees phi .. 2phi-2

    using Element = std::vector<std::int64_t>;

    static FlatContext build(unsigned n, unsigned order) {
        const CyclotomicField& field = CyclotomicField::of_order(order);
        FlatContext ctx;
        ctx.n = n;
        ctx.phi = field.degree();
        if (ctx.n > 8 || ctx.phi > 16) throw FlatUnsuitable{};
        std::int64_t max_row = 1;
        for (unsigned k = ctx.phi; k + 1 <= 2 * ctx.phi - 1; ++k) {
            const auto& row = field.power_row(k);
            std::vector<std::int64_t> r(ctx.phi, 0);
            for (unsigned j = 0; j < ctx.phi; ++j) {
                if (!row[j].fits_slong_p()) throw FlatUnsuitable{};
                r[j] = row[j].get_si();
                max_row = std::max(max_row, std::abs(r[j]));
            }
            ctx.reduction_rows.push_back(std::move(r));
        }
        // Accumulation bound: n*phi*kLimit^2*(1 + phi*max_row) must stay well
        // inside __int128.
        if (static_cast<long double>(ctx.n) * ctx.phi * (1.0L + ctx.phi * static_cast<long double>(max_row)) >
            4096.0L)
            throw FlatUnsuitable{};
        return ctx;
    }

    Element convert(const CycMatrix& m) const {
        Element out(static_cast<std::size_t>(n) * n * phi, 0);
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j) {
                const auto& coeff = m(i, j).coefficients();
                for (unsigned tt = 0; tt < phi; ++tt) {
                    const Rational& c = coeff[tt];
                    if (!c.is_integer()) throw FlatUnsuitable{};
                    Integer num = c.numerator();
                    if (!num.fits_slong_p()) throw FlatUnsuitable{};
                    std::int64_t v = num.get_si();
                    if (std::abs(v) > kLimit) throw FlatUnsuitable{};
                    out[(static_cast<std::size_t>(i) * n + j) * phi + tt] = v;
                }
            }
        return out;
    }

    Element identity() const {
        Element out(static_cast<std::size_t>(n) * n * phi, 0);
        for (unsigned i = 0; i < n; ++i) out[(static_cast<std::size_t>(i) * n + i) * phi] = 1;
        return out;
    }

    Element multiply(const Element& a, const Element& b) const {
        Element out(static_cast<std::size_t>(n) * n * phi, 0);
        std::vector<__int128> conv(2 * phi - 1);
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j) {
                std::fill(conv.begin(), conv.end(), static_cast<__int128>(0));
                for (unsigned k = 0; k < n; ++k) {
                    const std::int64_t* x = &a[(static_cast<std::size_t>(i) * n + k) * phi];
                    const std::int64_t* y = &b[(static_cast<std::size_t>(k) * n + j) * phi];
                    for (unsigned s = 0; s < phi; ++s) {
                        if (x[s] == 0) continue;
                        for (unsigned u = 0; u < phi; ++u)
                            conv[s + u] += static_cast<__int128>(x[s]) * y[u];
                    }
                }
                for (unsigned d = 2 * phi - 2; d >= phi && d < 2 * phi; --d) {
                    __int128 c = conv[d];
                    if (c == 0) continue;
                    const auto& row = reduction_rows[d - phi];
                    for (unsigned u = 0; u < phi; ++u)
                        if (row[u] != 0) conv[u] += c * row[u];
                    conv[d] = 0;
                }
                std::int64_t* dst = &out[(static_cast<std::size_t>(i) * n + j) * phi];
                for (unsigned u = 0; u < phi; ++u) {
                    __int128 c = conv[u];
                    if (c > kLimit || c < -kLimit) throw FlatUnsuitable{};
                    dst[u] = static_cast<std::int64_t>(c);
                }
            }
        return out;
    }

    std::string key(const Element& e) const {
        return std::string(reinterpret_cast<const char*>(e.data()), e.size() * sizeof(std::int64_t));
    }
};

/// Canonical-bytes key of an exact cyclotomic matrix (all entries share one
/// order, representation is canonical, so this is exact equality).
std::string generic_key(const CycMatrix& m) {
    std::string out;
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j) {
            for (const auto& c : m(i, j).coefficients()) {
                out += c.str();
                out += ',';
            }
            out += ';';
        }
    return out;
}

template <typename Element, typename MulFn, typename KeyFn>
std::optional<std::uint64_t> bfs_closure(Element identity, std::vector<Element> generators, MulFn mul,
                                         KeyFn key, std::uint64_t bound) {
    std::unordered_set<std::string> seen;
    std::deque<Element> queue;
    seen.insert(key(identity));
    queue.push_back(std::move(identity));
    while (!queue.empty()) {
        Element current = std::move(queue.front());
        queue.pop_front();
        for (const Element& g : generators) {
            Element next = mul(current, g);
            std::string k = key(next);
            if (seen.count(k)) continue;
            if (seen.size() >= bound) return std::nullopt;
            seen.insert(std::move(k));
            queue.push_back(std::move(next));
        }
    }
    return seen.size();
}

}  // namespace

GroupClosureResult group_closure(const MonodromyTriple& t, std::uint64_t bound) {
    if (bound < 1) fail(ErrorCode::InvalidInput, "closure bound must be >= 1");
    GroupClosureResult result;
    result.bound = bound;

    unsigned order = std::lcm(common_order(t.g0), common_order(t.g1));
    CycMatrix g0 = with_order(t.g0, order);
    CycMatrix g1 = with_order(t.g1, order);
    const Index n = g0.rows();

    std::optional<std::uint64_t> count;
    bool flat_done = false;
    try {
        FlatContext ctx = FlatContext::build(static_cast<unsigned>(n), order);
        std::vector<FlatContext::Element> gens{ctx.convert(g0), ctx.convert(g1)};
        count = bfs_closure(
            ctx.identity(), std::move(gens),
            [&ctx](const FlatContext::Element& a, const FlatContext::Element& b) { return ctx.multiply(a, b); },
            [&ctx](const FlatContext::Element& e) { return ctx.key(e); }, bound);
        flat_done = true;
    } catch (const FlatUnsuitable&) {
        flat_done = false;
    }

    if (!flat_done) {
        std::vector<CycMatrix> gens{g0, g1};
        count = bfs_closure(
            cyc_identity(n, order), std::move(gens),
            [](const CycMatrix& a, const CycMatrix& b) { return CycMatrix(a * b); },
            [](const CycMatrix& m) { return generic_key(m); }, bound);
    }

    if (count) {
        result.finite = true;
        result.order = *count;
    }
    return result;
}

}  // namespace hyplac
