#pragma once

#include <charconv>
#include <compare>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kupisch.hpp"

namespace nakayama {

/// The indecomposable S_top^[len]: unique uniserial with the given top and
/// composition length. Always interpreted relative to a fixed KupischSeries;
/// it exists iff 1 <= len <= c_top.
struct Indec {
    int top = 1;
    int len = 1;

    friend constexpr bool operator==(const Indec&, const Indec&) = default;
    friend constexpr auto operator<=>(const Indec&, const Indec&) = default;
};

inline std::string to_string(const Indec& x) {
    return std::to_string(x.top) + ":" + std::to_string(x.len);
}

/// Parses the CLI module format "j:l" (e.g. "2:3" for S_2^[3]).
inline Indec parse_indec(std::string_view text) {
    const std::size_t colon = text.find(':');
    if (colon == std::string_view::npos)
        throw ParseError("module must be written top:length, e.g. 2:3");
    auto number = [](std::string_view tok) {
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc{} || ptr != tok.data() + tok.size() || value < 1)
            throw ParseError("not a positive integer: '" + std::string(tok) + "'");
        return value;
    };
    return Indec{number(text.substr(0, colon)), number(text.substr(colon + 1))};
}

inline void validate(const KupischSeries& a, const Indec& x) {
    if (x.top < 1 || x.top > a.n() || x.len < 1 || x.len > a.c(x.top))
        throw InvalidModule("no module " + to_string(x) + " over " + a.to_string());
}

inline bool is_projective(const KupischSeries& a, const Indec& x) {
    validate(a, x);
    return x.len == a.c(x.top);
}

inline int socle_of(const KupischSeries& a, const Indec& x) {
    validate(a, x);
    return vertex_at(a, x.top + x.len - 1);
}

inline std::pair<int, int> top_socle(const KupischSeries& a, const Indec& x) {
    return {x.top, socle_of(a, x)};
}

/// Kernel of the projective cover; empty for projectives. For non-projective
/// S_j^[l] this is S_k^[c_j - l] with k the vertex at position j + l, always a
/// valid module (admissibility gives c_j - l <= c_k).
inline std::optional<Indec> syzygy(const KupischSeries& a, const Indec& x) {
    if (is_projective(a, x)) return std::nullopt;
    return Indec{vertex_at(a, x.top + x.len), a.c(x.top) - x.len};
}

/// A homological dimension: an exact nonnegative integer or certified infinity.
class DimValue {
public:
    static constexpr DimValue finite(int v) { return DimValue(v); }
    static constexpr DimValue infinite() { return DimValue(-1); }

    constexpr bool is_finite() const { return v_ >= 0; }

    int value() const {
        if (!is_finite()) throw Error("value() of an infinite dimension");
        return v_;
    }

    /// Order with infinity on top.
    friend constexpr bool operator<=(DimValue a, DimValue b) {
        if (!b.is_finite()) return true;
        return a.is_finite() && a.v_ <= b.v_;
    }
    friend constexpr bool operator==(DimValue, DimValue) = default;

    std::string to_string() const { return is_finite() ? std::to_string(v_) : "inf"; }

private:
    constexpr explicit DimValue(int v) : v_(v) {}
    int v_; // -1 encodes infinity
};

/// Number of syzygy steps until a projective is reached; infinite dimension is
/// certified by revisiting a non-projective module (the orbit space is finite,
/// so the detection is exact).
inline DimValue proj_dim(const KupischSeries& a, Indec x) {
    validate(a, x);
    std::set<Indec> seen;
    int steps = 0;
    while (!is_projective(a, x)) {
        if (!seen.insert(x).second) return DimValue::infinite();
        x = *syzygy(a, x);
        ++steps;
    }
    return DimValue::finite(steps);
}

/// One term of a minimal projective resolution: the covering projective and
/// the valuation of the incoming map (its image is rad^valuation of the
/// previous projective; at step 0 the valuation is l(P_top) - l(X)).
struct ResolutionStep {
    int proj_index = 0;
    int valuation = 0;

    friend constexpr bool operator==(const ResolutionStep&, const ResolutionStep&) = default;
};

/// First `cap` steps of the minimal projective resolution of a non-projective
/// module; stops early when the resolution terminates.
inline std::vector<ResolutionStep> min_projective_resolution(const KupischSeries& a,
                                                             const Indec& x, int cap) {
    validate(a, x);
    if (cap < 1) throw Error("resolution cap must be positive");
    if (is_projective(a, x)) throw ProjectiveInput("module " + to_string(x) + " is projective");
    std::vector<ResolutionStep> steps;
    steps.push_back({x.top, a.c(x.top) - x.len});
    Indec cur = x;
    while (static_cast<int>(steps.size()) < cap) {
        auto next = syzygy(a, cur);
        if (!next) break;
        steps.push_back({next->top, a.c(steps.back().proj_index) - next->len});
        cur = *next;
    }
    return steps;
}

/// The longest uniserial with the prescribed socle. For Nakayama algebras this
/// is the indecomposable injective envelope of S_socle.
inline Indec injective_envelope(const KupischSeries& a, int socle) {
    require_vertex(a, socle);
    for (int len = a.max_loewy(); len >= 1; --len) {
        int top;
        if (a.is_cycle()) {
            top = phi(a.n(), socle - len + 1);
        } else {
            top = socle - len + 1;
            if (top < 1) continue;
        }
        if (len <= a.c(top)) return {top, len};
    }
    throw InternalInconsistency("no uniserial with socle " + std::to_string(socle));
}

inline bool is_injective(const KupischSeries& a, const Indec& x) {
    validate(a, x);
    return injective_envelope(a, socle_of(a, x)) == x;
}

/// Cokernel of X into its injective envelope; empty for injectives. X sits at
/// the bottom of I = S_k^[L], so the quotient is the top part S_k^[L - len].
inline std::optional<Indec> cosyzygy(const KupischSeries& a, const Indec& x) {
    validate(a, x);
    const Indec env = injective_envelope(a, socle_of(a, x));
    if (env == x) return std::nullopt;
    return Indec{env.top, env.len - x.len};
}

inline DimValue inj_dim(const KupischSeries& a, Indec x) {
    validate(a, x);
    std::set<Indec> seen;
    int steps = 0;
    while (!is_injective(a, x)) {
        if (!seen.insert(x).second) return DimValue::infinite();
        x = *cosyzygy(a, x);
        ++steps;
    }
    return DimValue::finite(steps);
}

/// All indecomposables over a, ordered by (top, len).
inline std::vector<Indec> all_indecs(const KupischSeries& a) {
    std::vector<Indec> out;
    for (int j = 1; j <= a.n(); ++j)
        for (int len = 1; len <= a.c(j); ++len) out.push_back({j, len});
    return out;
}

} // namespace nakayama
