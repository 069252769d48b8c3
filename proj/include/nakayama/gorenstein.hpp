#pragma once

#include <optional>
#include <set>
#include <variant>
#include <vector>

#include "retraction.hpp"

namespace nakayama {

/// Maximum projective dimension over the simple modules.
inline DimValue global_dim(const KupischSeries& a) {
    int best = 0;
    for (int j = 1; j <= a.n(); ++j) {
        const DimValue pd = proj_dim(a, Indec{j, 1});
        if (!pd.is_finite()) return DimValue::infinite();
        if (pd.value() > best) best = pd.value();
    }
    return DimValue::finite(best);
}

/// Finitistic dimension: maximum finite projective dimension over all
/// indecomposables (exact, since every module is a finite sum of those).
inline int fin_dim(const KupischSeries& a) {
    int best = 0;
    for (const Indec& x : all_indecs(a)) {
        const DimValue pd = proj_dim(a, x);
        if (pd.is_finite() && pd.value() > best) best = pd.value();
    }
    return best;
}

struct GorensteinResult {
    bool gorenstein = false;
    /// Virtual dimension, present exactly when Gorenstein; equals fin_dim.
    std::optional<int> v_dim;
};

/// Recursion along the retraction sequence: A is Gorenstein iff L(A) is
/// Gorenstein and the transported injective envelope of the localized simple
/// has finite projective dimension over L(A). Self-injective algebras ground
/// the recursion.
inline GorensteinResult is_gorenstein(const KupischSeries& a) {
    if (is_self_injective(a)) return {true, 0};
    const RetractionStep step = retract_step(a);
    const Indec envelope = injective_envelope(step.source, step.n_source);
    const auto transported = transport_module(step, envelope);
    if (!transported)
        throw InternalInconsistency("injective envelope of the localized simple was killed");
    if (!is_gorenstein(step.target).gorenstein) return {false, std::nullopt};
    if (!proj_dim(step.target, *transported).is_finite()) return {false, std::nullopt};
    return {true, fin_dim(a)};
}

/// Two-sided definition, used for cross-validation: the regular module has
/// finite injective dimension on both sides. Right modules are left modules
/// over the opposite algebra.
inline bool gorenstein_oracle(const KupischSeries& a) {
    const auto side = [](const KupischSeries& b) {
        for (int j = 1; j <= b.n(); ++j)
            if (!inj_dim(b, Indec{j, b.c(j)}).is_finite()) return false;
        return true;
    };
    return side(a) && side(opposite(a));
}

/// One period of a totally acyclic complex of projectives witnessing that
/// modules[0] is Gorenstein projective. modules is the syzygy orbit
/// (syzygy of modules[i] is modules[i+1 mod t]); proj_indices are the covers;
/// valuations[i] is the radical depth of the i-th map's image in the previous
/// projective, cyclically.
struct GpCertificate {
    int period = 0;
    std::vector<Indec> modules;
    std::vector<int> proj_indices;
    std::vector<int> valuations;
};

enum class NotGpReason {
    ThetaImperfect, ///< top or continuation vertex is not theta-perfect
    NotPeriodic,    ///< the syzygy orbit hits a projective or never returns
    DualInexact,    ///< the periodic complex has an inexact dual position
};

inline const char* to_string(NotGpReason r) {
    switch (r) {
    case NotGpReason::ThetaImperfect: return "theta_imperfect";
    case NotGpReason::NotPeriodic: return "not_periodic";
    case NotGpReason::DualInexact: return "dual_inexact";
    }
    return "?";
}

using GpOutcome = std::variant<GpCertificate, NotGpReason>;

/// Decides Gorenstein projectivity of a non-projective indecomposable over a
/// cycle algebra. Theta-perfectness of top and continuation vertex is
/// necessary; pure syzygy periodicity plus dual exactness of one period is
/// then verified explicitly rather than assumed.
inline GpOutcome gp_test(const KupischSeries& a, const Indec& x) {
    if (a.is_line()) throw LineUnsupported("gp_test is defined for cycle algebras only");
    validate(a, x);
    if (is_projective(a, x)) throw ProjectiveInput("module " + to_string(x) + " is projective");

    const ThetaData td = theta_data(a);
    const std::vector<int> dual = dual_lengths(a);
    const int k = vertex_at(a, x.top + x.len);
    if (!detail::theta_perfect_with(a, td, dual, x.top) ||
        !detail::theta_perfect_with(a, td, dual, k))
        return NotGpReason::ThetaImperfect;

    std::vector<Indec> orbit{x};
    std::set<Indec> seen{x};
    for (;;) {
        const auto next = syzygy(a, orbit.back());
        if (!next || is_projective(a, *next)) return NotGpReason::NotPeriodic;
        if (*next == x) break;
        if (!seen.insert(*next).second) return NotGpReason::NotPeriodic;
        orbit.push_back(*next);
    }

    const int t = static_cast<int>(orbit.size());
    GpCertificate cert{t, orbit, {}, {}};
    for (const Indec& m : orbit) cert.proj_indices.push_back(m.top);
    for (int i = 0; i < t; ++i) {
        const int prev = cert.proj_indices[static_cast<std::size_t>((i + t - 1) % t)];
        cert.valuations.push_back(a.c(prev) - orbit[static_cast<std::size_t>(i)].len);
    }
    for (int i = 0; i < t; ++i) {
        const int succ = cert.proj_indices[static_cast<std::size_t>((i + 1) % t)];
        if (cert.valuations[static_cast<std::size_t>((i + 1) % t)] +
                cert.valuations[static_cast<std::size_t>(i)] !=
            dual[static_cast<std::size_t>(succ - 1)])
            return NotGpReason::DualInexact;
    }
    return cert;
}

struct GpModule {
    Indec module;
    GpCertificate certificate;
};

/// All non-projective Gorenstein projective indecomposables with certificates,
/// ordered by (top, len). Empty for line algebras: finite global dimension
/// leaves only projective Gorenstein projectives.
inline std::vector<GpModule> gp_modules(const KupischSeries& a) {
    std::vector<GpModule> out;
    if (a.is_line()) return out;
    for (const Indec& x : all_indecs(a)) {
        if (is_projective(a, x)) continue;
        GpOutcome outcome = gp_test(a, x);
        if (auto* cert = std::get_if<GpCertificate>(&outcome))
            out.push_back({x, std::move(*cert)});
    }
    return out;
}

/// Every Gorenstein projective is projective. Cycle algebras without
/// theta-perfect elements are CM-free without enumeration.
inline bool is_cm_free(const KupischSeries& a) {
    if (a.is_line()) return true;
    const ThetaData td = theta_data(a);
    const std::vector<int> dual = dual_lengths(a);
    bool any_perfect = false;
    for (int j : td.regular)
        if (detail::theta_perfect_with(a, td, dual, j)) {
            any_perfect = true;
            break;
        }
    if (!any_perfect) return true;
    return gp_modules(a).empty();
}

/// Gorenstein / non-Gorenstein CM-free / non-Gorenstein not CM-free.
struct TrichotomyClass {
    enum class Label { Gorenstein, NonGorensteinCmFree, NonGorensteinNotCmFree };

    Label label = Label::Gorenstein;
    /// Present exactly for Gorenstein algebras.
    std::optional<int> v_dim;

    friend bool operator==(const TrichotomyClass&, const TrichotomyClass&) = default;
};

inline const char* to_string(TrichotomyClass::Label label) {
    switch (label) {
    case TrichotomyClass::Label::Gorenstein: return "gorenstein";
    case TrichotomyClass::Label::NonGorensteinCmFree: return "non_gorenstein_cm_free";
    case TrichotomyClass::Label::NonGorensteinNotCmFree: return "non_gorenstein_not_cm_free";
    }
    return "?";
}

inline TrichotomyClass classify(const KupischSeries& a) {
    const GorensteinResult g = is_gorenstein(a);
    if (g.gorenstein) return {TrichotomyClass::Label::Gorenstein, g.v_dim};
    return {is_cm_free(a) ? TrichotomyClass::Label::NonGorensteinCmFree
                          : TrichotomyClass::Label::NonGorensteinNotCmFree,
            std::nullopt};
}

} // namespace nakayama
