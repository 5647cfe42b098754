#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "hyplac/matrices.hpp"
#include "hyplac/parameters.hpp"

namespace hyplac {

/// Levelt-style generator triple over Q(zeta_N) with g0 * g1 * g_inf = I,
/// char poly(g0) = prod(t - e^{2 pi i alpha_j}), char poly(g_inf) =
/// prod(t - e^{-2 pi i beta_j}) and g1 a pseudoreflection.
struct MonodromyTriple {
    CycMatrix g0;
    CycMatrix g1;
    CycMatrix g_inf;
    unsigned order = 1;  // common cyclotomic order N
};

/// Companion-matrix realization: A = companion(prod(t - e^{2 pi i alpha_j})),
/// B = companion(prod(t - e^{2 pi i beta_j})), g0 = A, g1 = A^{-1} B,
/// g_inf = B^{-1}. All stated invariants are verified exactly before return.
MonodromyTriple levelt_generators(const HypergeometricParameters& p);

/// rank(M - I) = 1, exact rank.
bool is_pseudoreflection(const CycMatrix& m);

/// det(M) of a pseudoreflection.
Cyclotomic special_eigenvalue(const CycMatrix& m);

/// dim over Q(zeta_N) of {X : XM = MX}, by exact nullity of the commutation
/// system on n^2 unknowns.
int centralizer_dimension(const CycMatrix& m);

struct HermitianFormResult {
    int solution_dimension = 0;
    std::optional<CycMatrix> form;                 // Hermitian basis element when dimension is 1
    std::optional<std::pair<int, int>> signature;  // (p, q), set when the form is nondegenerate
};

/// Solves the invariant-form system for the triple exactly; when the solution
/// space is one-dimensional, returns a Hermitian representative and its
/// interval-certified signature via leading principal minors.
HermitianFormResult invariant_hermitian_form(const MonodromyTriple& t);

struct GroupClosureResult {
    bool finite = false;
    std::uint64_t order = 0;  // exact group order when finite
    std::uint64_t bound = 0;
};

/// Breadth-first closure of <g0, g1> under right multiplication by the
/// generators, deduplicated by canonical exact matrix keys. Reports the exact
/// order when the closure stabilizes within `bound` elements.
GroupClosureResult group_closure(const MonodromyTriple& t, std::uint64_t bound);

}  // namespace hyplac
