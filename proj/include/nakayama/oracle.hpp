#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "gorenstein.hpp"

// Brute-force reference implementations used by tests. Deliberately shares no
// algorithm with modarith beyond KupischSeries and phi; duplication is the point.
namespace nakayama::oracle {

/// Composition series of a uniserial module, top to socle.
struct FactorList {
    std::vector<int> factors;

    int length() const { return static_cast<int>(factors.size()); }
    int top() const { return factors.front(); }

    friend bool operator==(const FactorList&, const FactorList&) = default;
    friend bool operator<(const FactorList& a, const FactorList& b) {
        return a.factors < b.factors;
    }
};

namespace detail {

inline int next_vertex(const KupischSeries& a, int v) {
    if (a.is_cycle()) return phi(a.n(), v + 1);
    if (v + 1 > a.n())
        throw InvalidFactorList("factor list walks off the end of a line quiver");
    return v + 1;
}

} // namespace detail

/// The factor list of the uniserial with the given top and length.
inline FactorList factor_list(const KupischSeries& a, int top, int len) {
    if (top < 1 || top > a.n() || len < 1)
        throw InvalidFactorList("factor list needs a vertex top and positive length");
    FactorList f;
    f.factors.push_back(top);
    for (int i = 1; i < len; ++i)
        f.factors.push_back(detail::next_vertex(a, f.factors.back()));
    return f;
}

inline FactorList projective_factors(const KupischSeries& a, int k) {
    return factor_list(a, k, a.c(k));
}

/// A valid factor list steps by +1 through the quiver and fits under its
/// projective cover.
inline void validate_factor_list(const KupischSeries& a, const FactorList& x) {
    if (x.factors.empty()) throw InvalidFactorList("factor list is empty");
    for (int v : x.factors)
        if (v < 1 || v > a.n()) throw InvalidFactorList("factor out of vertex range");
    for (std::size_t i = 0; i + 1 < x.factors.size(); ++i)
        if (x.factors[i + 1] != detail::next_vertex(a, x.factors[i]))
            throw InvalidFactorList("factors do not step consecutively through the quiver");
    if (x.length() > a.c(x.top()))
        throw InvalidFactorList("factor list longer than its projective cover");
}

/// Materializes the projective cover as a factor list, removes the top
/// length(X) factors, returns the remainder; empty for projectives.
inline std::optional<FactorList> brute_syzygy(const KupischSeries& a, const FactorList& x) {
    validate_factor_list(a, x);
    const FactorList cover = projective_factors(a, x.top());
    if (x.length() == cover.length()) return std::nullopt;
    FactorList rest;
    rest.factors.assign(cover.factors.begin() + x.length(), cover.factors.end());
    return rest;
}

inline DimValue brute_proj_dim(const KupischSeries& a, FactorList x) {
    validate_factor_list(a, x);
    std::set<FactorList> seen;
    int steps = 0;
    for (;;) {
        auto next = brute_syzygy(a, x);
        if (!next) return DimValue::finite(steps);
        if (!seen.insert(x).second) return DimValue::infinite();
        x = std::move(*next);
        ++steps;
    }
}

/// Injective envelope by essential-extension search: grow the module one step
/// at a time while some uniserial extends it with the same socle.
inline FactorList injective_envelope_brute(const KupischSeries& a, int socle) {
    if (socle < 1 || socle > a.n()) throw InvalidFactorList("socle out of vertex range");
    FactorList cur;
    cur.factors.push_back(socle);
    for (;;) {
        bool grown = false;
        for (int k = 1; k <= a.n() && !grown; ++k) {
            const int len = cur.length() + 1;
            if (len > a.c(k)) continue;
            const FactorList candidate = factor_list(a, k, len);
            if (std::equal(cur.factors.begin(), cur.factors.end(),
                           candidate.factors.begin() + 1)) {
                cur = candidate;
                grown = true;
            }
        }
        if (!grown) return cur;
    }
}

/// Reconstructs one full period of the certified complex as factor lists and
/// checks exactness at every position by explicit image/kernel comparison,
/// plus exactness of the valuation dual against the dual lengths. Shape
/// defects (sizes, ranges) throw; any arithmetic failure returns false.
inline bool verify_certificate(const KupischSeries& a, const GpCertificate& cert) {
    const int t = cert.period;
    if (t < 1 || static_cast<int>(cert.modules.size()) != t ||
        static_cast<int>(cert.proj_indices.size()) != t ||
        static_cast<int>(cert.valuations.size()) != t)
        throw MalformedCertificate("certificate lists do not match its period");
    for (int p : cert.proj_indices)
        if (p < 1 || p > a.n()) throw MalformedCertificate("projective index out of range");
    for (const Indec& m : cert.modules)
        if (m.top < 1 || m.top > a.n() || m.len < 1 || m.len > a.c(m.top))
            throw MalformedCertificate("certificate names a nonexistent module");

    std::vector<FactorList> covers;
    std::vector<FactorList> mods;
    for (int i = 0; i < t; ++i) {
        covers.push_back(projective_factors(a, cert.proj_indices[static_cast<std::size_t>(i)]));
        const Indec& m = cert.modules[static_cast<std::size_t>(i)];
        mods.push_back(factor_list(a, m.top, m.len));
    }

    const std::vector<int> dual = dual_lengths(a);
    const auto at = [&](int i) { return static_cast<std::size_t>(((i % t) + t) % t); };
    for (int i = 0; i < t; ++i) {
        const FactorList& xi = mods[at(i)];
        const FactorList& cover = covers[at(i)];
        const FactorList& prev_cover = covers[at(i - 1)];
        // cover surjects onto X_i: X_i is the top part of its cover
        if (xi.length() > cover.length() ||
            !std::equal(xi.factors.begin(), xi.factors.end(), cover.factors.begin()))
            return false;
        // the map lands in prev_cover with image X_i at the bottom
        if (xi.length() > prev_cover.length() ||
            !std::equal(xi.factors.rbegin(), xi.factors.rend(), prev_cover.factors.rbegin()))
            return false;
        // exactness at cover: its kernel (bottom part) is the next module
        const FactorList& xnext = mods[at(i + 1)];
        if (xnext.length() != cover.length() - xi.length()) return false;
        if (!std::equal(xnext.factors.rbegin(), xnext.factors.rend(), cover.factors.rbegin()))
            return false;
        // stated valuation is the codimension of the image in prev_cover
        if (cert.valuations[at(i)] != prev_cover.length() - xi.length()) return false;
        // dual exactness: consecutive valuations sum to the dual length of the source
        const int succ = cert.proj_indices[at(i + 1)];
        if (cert.valuations[at(i + 1)] + cert.valuations[at(i)] !=
            dual[static_cast<std::size_t>(succ - 1)])
            return false;
    }
    return true;
}

} // namespace nakayama::oracle
