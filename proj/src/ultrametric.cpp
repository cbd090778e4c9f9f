#include "ivp/ultrametric.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace ivp {

const char* seq_kind_name(SeqKind k) {
    switch (k) {
        case SeqKind::PseudoConvergent: return "pseudo-convergent";
        case SeqKind::PseudoDivergent: return "pseudo-divergent";
        case SeqKind::PseudoStationary: return "pseudo-stationary";
        case SeqKind::None: return "none";
    }
    return "?";
}

const char* breadth_hint_name(BreadthHint h) {
    switch (h) {
        case BreadthHint::WholeRing: return "whole-ring";
        case BreadthHint::MaximalIdeal: return "maximal-ideal";
        case BreadthHint::ProperBall: return "proper-ball";
        case BreadthHint::Fractional: return "fractional";
    }
    return "?";
}

ValuationMatrix::ValuationMatrix(size_t n, std::vector<Val> entries,
                                 std::vector<std::string> labels)
    : n_(n), e_(std::move(entries)), labels_(std::move(labels)) {
    if (n_ == 0) throw std::domain_error("ValuationMatrix: empty");
    if (e_.size() != n_ * n_) throw std::domain_error("ValuationMatrix: wrong entry count");
    if (!labels_.empty() && labels_.size() != n_)
        throw std::domain_error("ValuationMatrix: wrong label count");
    for (size_t i = 0; i < n_; ++i) {
        if (!at(i, i).is_infinity())
            throw std::domain_error("ValuationMatrix: diagonal must be infinity");
        for (size_t j = i + 1; j < n_; ++j)
            if (at(i, j) != at(j, i)) throw std::domain_error("ValuationMatrix: not symmetric");
    }
    for (size_t a = 0; a < n_; ++a)
        for (size_t b = 0; b < n_; ++b)
            for (size_t c = 0; c < n_; ++c) {
                if (a == b || b == c || a == c) continue;
                const Val& ab = at(a, b);
                const Val& bc = at(b, c);
                const Val& ac = at(a, c);
                if (ac < min(ab, bc) || (ab != bc && ac != min(ab, bc)))
                    throw std::domain_error("ValuationMatrix: ultrametric law violated");
            }
}

ValuationMatrix ValuationMatrix::from_upper(size_t n, const std::vector<Val>& upper,
                                            std::vector<std::string> labels) {
    if (upper.size() != n * (n - 1) / 2)
        throw std::domain_error("ValuationMatrix::from_upper: wrong entry count");
    std::vector<Val> e(n * n, Val::infinity());
    size_t k = 0;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            e[i * n + j] = upper[k];
            e[j * n + i] = upper[k];
            ++k;
        }
    return ValuationMatrix(n, std::move(e), std::move(labels));
}

ClassificationReport classify_prefix(const ValuationMatrix& m) {
    ClassificationReport rep;
    const size_t n = m.size();
    rep.prefix_len = n;
    if (n < 3) {
        rep.reason = "insufficient: need at least 3 points";
        return rep;
    }

    bool conv = true, div = true, stat = true;
    for (size_t i = 0; i < n && (conv || div); ++i)
        for (size_t j = i + 1; j < n && (conv || div); ++j)
            for (size_t k = j + 1; k < n && (conv || div); ++k) {
                if (!(m.at(i, j) < m.at(j, k))) conv = false;
                if (!(m.at(i, j) > m.at(j, k))) div = false;
            }
    const Val& first = m.at(0, 1);
    for (size_t i = 0; i < n && stat; ++i)
        for (size_t j = i + 1; j < n && stat; ++j)
            if (m.at(i, j) != first) stat = false;

    auto consecutive = [&] {
        std::vector<Val> g;
        for (size_t i = 0; i + 1 < n; ++i) g.push_back(m.at(i, i + 1));
        return g;
    };

    if (stat) {
        rep.kind = SeqKind::PseudoStationary;
        rep.gauge = {first};
        rep.breadth = first;
        if (first.is_infinity()) {
            rep.hint = BreadthHint::ProperBall;  // degenerate, all points equal
            rep.hint_radius = first;
        } else if (first.value() == 0) {
            rep.hint = BreadthHint::WholeRing;
        } else if (first.value() > 0) {
            rep.hint = BreadthHint::ProperBall;
            rep.hint_radius = first;
        } else {
            rep.hint = BreadthHint::Fractional;
        }
        return rep;
    }
    if (conv) {
        rep.kind = SeqKind::PseudoConvergent;
        rep.gauge = consecutive();
        rep.breadth = rep.gauge.back();
        if (!rep.breadth.is_infinity() && rep.breadth.value() < 0) {
            rep.hint = BreadthHint::Fractional;
        } else {
            rep.hint = BreadthHint::ProperBall;
            rep.hint_radius = rep.breadth;
        }
        return rep;
    }
    if (div) {
        rep.kind = SeqKind::PseudoDivergent;
        rep.gauge = consecutive();
        rep.breadth = rep.gauge.back();
        rep.hint = BreadthHint::MaximalIdeal;
        return rep;
    }
    rep.reason = "mixed: none of the three inequality patterns holds in this order";
    return rep;
}

namespace {

bool covers(const ValuationMatrix& m, const std::vector<size_t>& t, const Val& delta) {
    for (size_t s = 0; s < m.size(); ++s) {
        bool hit = false;
        for (size_t c : t)
            if (m.at(s, c) >= delta) {
                hit = true;
                break;
            }
        if (!hit) return false;
    }
    return true;
}

// lexicographic combinations of {0..n-1} of size k
bool next_combination(std::vector<size_t>& idx, size_t n) {
    const size_t k = idx.size();
    for (size_t i = k; i-- > 0;) {
        if (idx[i] < n - k + i) {
            ++idx[i];
            for (size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

std::vector<size_t> ball_cover(const ValuationMatrix& m, const Val& delta) {
    if (!delta.is_infinity() && delta.value() <= 0)
        throw std::domain_error("ball_cover: delta must be positive");
    const size_t n = m.size();
    if (n > 20) throw std::domain_error("ball_cover: brute force capped at 20 points");
    for (size_t k = 1; k <= n; ++k) {
        std::vector<size_t> idx(k);
        std::iota(idx.begin(), idx.end(), 0);
        do {
            if (covers(m, idx, delta)) return idx;
        } while (next_combination(idx, n));
    }
    throw std::logic_error("ball_cover: full set must cover");  // unreachable
}

std::vector<std::vector<size_t>> residue_classes(const ValuationMatrix& m, const Val& gamma) {
    if (!gamma.is_infinity() && gamma.value() <= 0)
        throw std::domain_error("residue_classes: gamma must be positive");
    const size_t n = m.size();
    std::vector<size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<size_t(size_t)> find = [&](size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (m.at(i, j) >= gamma) {
                size_t a = find(i), b = find(j);
                if (a != b) parent[a < b ? b : a] = a < b ? a : b;
            }
    std::vector<std::vector<size_t>> classes(n);
    for (size_t i = 0; i < n; ++i) classes[find(i)].push_back(i);
    std::vector<std::vector<size_t>> out;
    for (auto& c : classes)
        if (!c.empty()) out.push_back(std::move(c));
    return out;
}

CrosscheckReport theorem24_crosscheck(const ValuationMatrix& m) {
    CrosscheckReport rep;
    const size_t n = m.size();
    std::vector<Val> grid;
    Rat maxfinite = 0;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            const Val& v = m.at(i, j);
            if (v.is_infinity()) continue;
            if (v.value() > 0) grid.push_back(v);
            if (v.value() > maxfinite) maxfinite = v.value();
        }
    grid.push_back(Val(maxfinite + 1));
    std::sort(grid.begin(), grid.end(), [](const Val& a, const Val& b) { return a < b; });
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

    for (const Val& g : grid) {
        CrosscheckItem item;
        item.gamma = g;
        item.cover_size = ball_cover(m, g).size();
        item.class_count = residue_classes(m, g).size();
        item.ok = item.cover_size == item.class_count;
        if (!item.ok) rep.all_ok = false;
        rep.items.push_back(item);
    }

    ClassificationReport cls = classify_prefix(m);
    if (cls.kind == SeqKind::PseudoDivergent || cls.kind == SeqKind::PseudoStationary) {
        Val lo = cls.gauge.front();
        for (const Val& g : cls.gauge) lo = min(lo, g);
        if (!lo.is_infinity() && lo.value() > 0) {
            size_t cov = ball_cover(m, lo).size();
            bool ok = cov == 1;
            if (!ok) rep.all_ok = false;
            rep.breadth_notes.push_back(
                std::string(seq_kind_name(cls.kind)) + " prefix with gauge >= " + lo.str() +
                ": single ball at that radius " + (ok ? "holds" : "FAILS") +
                (cls.kind == SeqKind::PseudoDivergent ? " (breadth inside b*M)"
                                                      : " (breadth inside b*V)"));
        }
    }
    return rep;
}

std::vector<size_t> divergent_subsequence_scan(const ValuationMatrix& m) {
    const size_t n = m.size();
    std::vector<size_t> best;
    for (size_t a = 0; a < n; ++a) {
        for (size_t b = a + 1; b < n; ++b) {
            std::vector<size_t> cur{a, b};
            Val last = m.at(a, b);
            for (size_t c = b + 1; c < n; ++c) {
                if (m.at(cur.back(), c) < last) {
                    last = m.at(cur.back(), c);
                    cur.push_back(c);
                }
            }
            if (cur.size() > best.size()) best = cur;
        }
    }
    return best;
}

namespace {

struct TreeRng {
    uint64_t s;
    explicit TreeRng(uint64_t seed) : s(seed ? seed : 1) {}
    uint64_t next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
    uint64_t below(uint64_t n) { return next() % n; }
};

void fill_block(std::vector<Val>& e, size_t n, std::vector<size_t> pts, const Rat& level,
                TreeRng& rng) {
    if (pts.size() <= 1) return;
    // partition into at least two nonempty groups
    size_t groups = 2 + rng.below(std::min<size_t>(pts.size() - 1, 3));
    std::vector<std::vector<size_t>> part(groups);
    part[0].push_back(pts[0]);
    part[1].push_back(pts[1]);
    for (size_t i = 2; i < pts.size(); ++i) part[rng.below(groups)].push_back(pts[i]);
    for (size_t a = 0; a < groups; ++a)
        for (size_t b = a + 1; b < groups; ++b)
            for (size_t x : part[a])
                for (size_t y : part[b]) {
                    e[x * n + y] = Val(level);
                    e[y * n + x] = Val(level);
                }
    for (auto& g : part) {
        if (g.size() <= 1) continue;
        Rat inc(static_cast<long>(1 + rng.below(5)), static_cast<unsigned long>(1 + rng.below(4)));
        inc.canonicalize();
        fill_block(e, n, g, level + inc, rng);
    }
}

}  // namespace

ValuationMatrix random_tree_matrix(size_t n, uint64_t seed) {
    if (n < 1) throw std::domain_error("random_tree_matrix: n >= 1");
    TreeRng rng(seed);
    std::vector<Val> e(n * n, Val::infinity());
    std::vector<size_t> pts(n);
    std::iota(pts.begin(), pts.end(), 0);
    Rat base(static_cast<long>(1 + rng.below(4)), static_cast<unsigned long>(1 + rng.below(3)));
    base.canonicalize();
    fill_block(e, n, pts, base, rng);
    return ValuationMatrix(n, std::move(e));
}

}  // namespace ivp
