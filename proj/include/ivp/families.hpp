#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ivp/algebraic.hpp"
#include "ivp/integrality.hpp"
#include "ivp/newton.hpp"
#include "ivp/ultrametric.hpp"
#include "ivp/valuation.hpp"

namespace ivp {

/**
 * The generator families. Not represented: towers of iterated relative
 * extensions with unbounded residue degrees or unbounded ramification over a
 * single prime (they also force triviality, but need relative extension
 * arithmetic this library does not do; see the classification machinery for
 * the criterion they would feed).
 */
enum class FamilyKind {
    RootsOfUnityPPower,   // zeta_{p^k}, k = 1..len
    RootsOfUnityPrimes,   // zeta_q over the first len primes q
    NthRootTower,         // p^{b_k}, b_k = (1 - n^{-k})/(n-1), k = 1..len
    PrimeProductRadicals, // s_k = (p_1...p_k)^{1/k}, k = 1..len
    Fcn,                  // roots of X^n + c^3 X^{n-1} + c^2 over primes n coprime to c
    ScaledRing,           // d * alpha over a corpus of monic irreducibles
};

struct FamilyParams {
    int64_t p = 0;   // base prime (RootsOfUnityPPower, NthRootTower)
    int n = 0;       // tower exponent
    int len = 0;     // prefix length / corpus size
    Int c = 0;       // Fcn coefficient, c >= 2
    Int d = 0;       // ScaledRing multiplier, d >= 1
    int height = 10; // ScaledRing corpus coefficient bound
    int max_deg = 4; // ScaledRing corpus degree bound
};

/// A value where the family's closed-form valuation formula applies;
/// nullopt where the formula makes no claim (conjugate-pair spread possible).
using DiffFormula = std::function<std::optional<Val>(size_t i, size_t j, const Int& p)>;
using ElemFormula = std::function<std::optional<Val>(size_t i, const Int& p)>;

struct SequenceSample {
    FamilyKind kind;
    FamilyParams params;
    std::vector<AlgebraicElement> elements;
    DiffFormula diff_formula;  // pairwise v_p(s_i - s_j), i != j
    ElemFormula elem_formula;  // v_p(s_i)
    std::string provenance;    // which construction and why the formula holds
    std::string expected;      // claimed classification / triviality behaviour
    std::optional<IvpGenerator> generator;  // explicit nontriviality witness, if any
};

SequenceSample make_family(FamilyKind kind, const FamilyParams& params);

const char* family_kind_name(FamilyKind k);
std::optional<FamilyKind> family_kind_from_name(const std::string& s);

struct CrosscheckBudget {
    int max_pair_degree = 600;  // skip pairs with deg_i * deg_j above this
    int max_elem_degree = 128;
};

struct FamilyCrosscheckEntry {
    std::string what;       // "pair (i,j)" or "element i"
    bool checked = false;   // false when skipped for budget or no formula
    bool ok = true;
    std::string expected;
    std::string got;
};

struct FamilyCrosscheck {
    std::vector<FamilyCrosscheckEntry> entries;
    bool all_ok = true;
    size_t checked = 0;
};

/// Recomputes difference/element valuations from minimal polynomials and
/// compares them with the family's closed-form values wherever the formula
/// makes a claim. Report-only.
FamilyCrosscheck crosscheck_family(const SequenceSample& s, const Int& p,
                                   const CrosscheckBudget& budget = {});

struct FamilyVerdict {
    ClassificationReport classification;
    size_t suffix_start = 0;  // classification applies to elements[suffix_start..]
    bool nontrivial = false;
    std::string mechanism;    // "explicit-generator", "index-one", "divergent-to-zero", ...
    std::optional<IvpGenerator> generator;
    std::string note;
};

/// Classifies the formula-derived matrix at p (on the longest suffix the
/// formula covers) and attaches the family's global conclusion with the
/// mechanism that certifies it.
FamilyVerdict family_verdict(const SequenceSample& s, const Int& p);

/// The deterministic corpus behind ScaledRing and the acceptance checks:
/// monic integer polynomials, irreducible with a positive certificate,
/// degrees 2..max_deg, coefficients bounded by height, enumeration order
/// fixed. Stops after `count` polynomials.
std::vector<RatPoly> irreducible_corpus(int max_deg, int height, size_t count);

}  // namespace ivp
