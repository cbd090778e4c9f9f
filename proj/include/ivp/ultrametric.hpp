#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ivp/valuation.hpp"

namespace ivp {

/**
 * Symmetric matrix of pairwise difference valuations v(s_i - s_j) for a
 * finite prefix of a sequence, infinity on the diagonal. Construction
 * validates the ultrametric law v(a-c) >= min(v(a-b), v(b-c)), with equality
 * forced when the two right-hand values differ.
 */
class ValuationMatrix {
public:
    ValuationMatrix(size_t n, std::vector<Val> entries,
                    std::vector<std::string> labels = {});

    size_t size() const { return n_; }
    const Val& at(size_t i, size_t j) const { return e_[i * n_ + j]; }
    const std::vector<std::string>& labels() const { return labels_; }

    /// Convenience: build from the strict upper triangle (row-major).
    static ValuationMatrix from_upper(size_t n, const std::vector<Val>& upper,
                                      std::vector<std::string> labels = {});

private:
    size_t n_;
    std::vector<Val> e_;
    std::vector<std::string> labels_;
};

enum class SeqKind { PseudoConvergent, PseudoDivergent, PseudoStationary, None };

enum class BreadthHint { WholeRing, MaximalIdeal, ProperBall, Fractional };

/**
 * Verdict for a finite prefix under the order-sensitive defining
 * inequalities. Gauges are the consecutive difference valuations; breadth is
 * the last gauge value, a prefix-only proxy for the limit, and every verdict
 * carries prefix_certified + the prefix length rather than claiming anything
 * about the full sequence.
 */
struct ClassificationReport {
    SeqKind kind = SeqKind::None;
    std::vector<Val> gauge;
    Val breadth;
    BreadthHint hint = BreadthHint::WholeRing;
    std::optional<Val> hint_radius;  // set for ProperBall
    bool prefix_certified = true;
    size_t prefix_len = 0;
    std::string reason;
};

const char* seq_kind_name(SeqKind k);
const char* breadth_hint_name(BreadthHint h);

/// Needs n >= 3; fewer points yield None with reason "insufficient".
ClassificationReport classify_prefix(const ValuationMatrix& m);

/**
 * Minimum-cardinality set T of point indices such that every point s has
 * some t in T with v(s - t) >= delta. Brute force over subset sizes,
 * smallest first, ties broken by lexicographically smallest index tuple
 * (sizes capped at n <= 20). delta must be > 0.
 */
std::vector<size_t> ball_cover(const ValuationMatrix& m, const Val& delta);

/// Equivalence classes of v(s_i - s_j) >= gamma (transitive by the
/// ultrametric law), each class sorted, classes ordered by smallest member.
std::vector<std::vector<size_t>> residue_classes(const ValuationMatrix& m, const Val& gamma);

struct CrosscheckItem {
    Val gamma;
    size_t cover_size;
    size_t class_count;
    bool ok;
};

struct CrosscheckReport {
    std::vector<CrosscheckItem> items;
    std::vector<std::string> breadth_notes;
    bool all_ok = true;
};

/**
 * For every positive gamma drawn from the matrix entries (plus one value
 * above them all), checks |minimal ball cover| = |residue classes|; when the
 * prefix classifies as pseudo-divergent or pseudo-stationary with gauge
 * bounded below by gamma, also checks the single-ball containment.
 * Report-only: failures are flagged, not thrown.
 */
CrosscheckReport theorem24_crosscheck(const ValuationMatrix& m);

/**
 * Best-effort scan for the longest subsequence (by greedy extension over
 * all start pairs) whose consecutive valuations strictly decrease. Heuristic
 * only; makes no claim of maximality.
 */
std::vector<size_t> divergent_subsequence_scan(const ValuationMatrix& m);

/// Deterministic random ultrametric matrix built from a random rooted tree
/// with rational edge heights; used by property tests and the crosscheck
/// examples.
ValuationMatrix random_tree_matrix(size_t n, uint64_t seed);

}  // namespace ivp
