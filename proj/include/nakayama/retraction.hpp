#pragma once

#include <optional>
#include <string>
#include <vector>

#include "modarith.hpp"

namespace nakayama {

/// One left-retraction step: the simple at the last position of the normalized
/// source is localized away, shrinking the sequence by the bracket formula
/// c'_j = c_j - [(c_j + j - 1)/n]. `rotation_offset` translates the step's
/// input coordinates into the normalized `source` coordinates.
struct RetractionStep {
    KupischSeries source;
    KupischSeries target;
    int localizable_index = 0;
    int n_source = 0;
    int rotation_offset = 0;
};

namespace detail {

inline bool cok_invariants_match(const SmithForm& a, const SmithForm& b) {
    return a.free_rank == b.free_rank && a.torsion() == b.torsion();
}

} // namespace detail

inline RetractionStep retract_step(const KupischSeries& a) {
    if (is_self_injective(a))
        throw SelfInjectiveInput("no retraction step from self-injective " + a.to_string());
    const Normalized norm = normalize(a);
    const KupischSeries& src = norm.series;
    const int n = src.n(); // >= 2, since n = 1 is always self-injective
    std::vector<int> entries(static_cast<std::size_t>(n - 1));
    for (int j = 1; j < n; ++j)
        entries[static_cast<std::size_t>(j - 1)] = src.c(j) - (src.c(j) + j - 1) / n;
    KupischSeries target = [&] {
        try {
            return KupischSeries(std::move(entries));
        } catch (const InadmissibleSequence& e) {
            throw InternalInconsistency(std::string("retraction target inadmissible: ") + e.what());
        }
    }();

    const IntMatrix cs = cartan(src);
    const IntMatrix ct = cartan(target);
    if (determinant(cs) != determinant(ct))
        throw InternalInconsistency("retraction step changed det of the Cartan matrix");
    const SmithForm ss = smith_normal_form(cs);
    const SmithForm st = smith_normal_form(ct);
    if (ss.rank() != st.rank() + 1)
        throw InternalInconsistency("retraction step must drop the Cartan rank by exactly 1");
    if (!detail::cok_invariants_match(ss, st))
        throw InternalInconsistency("retraction step changed the Cartan cokernel");

    return {src, std::move(target), n, n, norm.rotation_offset};
}

/// The chain A = A_0 -> A_1 -> ... -> A_r ending at a self-injective algebra.
struct RetractionSequence {
    std::vector<RetractionStep> steps;
    KupischSeries terminal;
    int r = 0;
};

inline RetractionSequence retraction_sequence(const KupischSeries& a) {
    // self-injective sequences are all-equal, hence already normalized; every
    // other input gets normalized inside its first step, which records the
    // rotation offset
    KupischSeries cur = a;
    std::vector<RetractionStep> steps;
    while (!is_self_injective(cur)) {
        steps.push_back(retract_step(cur));
        cur = steps.back().target;
    }
    const int r = static_cast<int>(steps.size());
    return {std::move(steps), std::move(cur), r};
}

/// Number of simples of finite projective dimension; equals r when the global
/// dimension is infinite. Rejects algebras of finite global dimension, where
/// r = n - 1 instead.
inline int r_via_simples(const KupischSeries& a) {
    int finite = 0;
    int infinite = 0;
    for (int j = 1; j <= a.n(); ++j)
        (proj_dim(a, Indec{j, 1}).is_finite() ? finite : infinite) += 1;
    if (infinite == 0)
        throw FiniteGlobalDimension("r_via_simples applies only to infinite global dimension");
    return finite;
}

/// Image of X under the retraction's quotient functor, in the normalized
/// coordinates of the step. The localized simple S_n (and only it) maps to
/// zero; the length drops by the multiplicity of S_n among the factors of X.
inline std::optional<Indec> transport_module(const RetractionStep& step, const Indec& x) {
    validate(step.source, x);
    const int n = step.n_source;
    Indec image{1, 0};
    if (x.top < n) {
        image = {x.top, x.len - (x.len + x.top - 1) / n};
    } else {
        const int len = x.len - 1 - (x.len - 1) / n;
        if (len == 0) return std::nullopt;
        image = {1, len};
    }
    try {
        validate(step.target, image);
    } catch (const InvalidModule& e) {
        throw InternalInconsistency(std::string("transported module invalid: ") + e.what());
    }
    return image;
}

/// Shape of the singularity category: trivial iff the terminal algebra is the
/// simple one; otherwise a truncated tube of rank n(terminal), with K_0
/// presented by the Smith form of the Cartan matrix.
struct SingularityDescriptor {
    bool trivial = false;
    int tube_rank = 0;
    int terminal_loewy = 0;
    SmithForm k0;
};

inline SingularityDescriptor singularity_descriptor(const KupischSeries& a) {
    const RetractionSequence rs = retraction_sequence(a);
    const KupischSeries& t = rs.terminal;
    return {t.n() == 1 && t.c(1) == 1, t.n(), t.c(1), smith_normal_form(cartan(a))};
}

} // namespace nakayama
