#pragma once

#include <cstdint>
#include <iomanip>
#include <limits>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gorenstein.hpp"
#include "oracle.hpp"

namespace nakayama {

using json = nlohmann::json;

// -------------------------------------------------------------------------
// JSON building blocks. Keys are emitted in sorted order (nlohmann default),
// so serialized reports are deterministic and round-trip byte-identically.
// Infinite dimensions are encoded as the string "inf", never as a number.
// Integers that do not fit in 64 bits are emitted as decimal strings.
// -------------------------------------------------------------------------

inline json to_json(const BigInt& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() &&
        v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return v.str();
}

inline json to_json(const DimValue& d) {
    if (d.is_finite()) return d.value();
    return "inf";
}

inline json to_json(const KupischSeries& a) { return a.entries(); }

inline json to_json(const SmithForm& s) {
    json factors = json::array();
    for (const auto& f : s.invariant_factors) factors.push_back(to_json(f));
    return json{{"free_rank", s.free_rank}, {"invariant_factors", factors}};
}

inline json to_json(const GpCertificate& c) {
    json mods = json::array();
    for (const Indec& m : c.modules) mods.push_back(to_string(m));
    return json{{"modules", mods},
                {"period", c.period},
                {"proj_indices", c.proj_indices},
                {"valuations", c.valuations}};
}

inline json to_json(const TrichotomyClass& c) {
    json out{{"label", to_string(c.label)}};
    if (c.v_dim) out["v_dim"] = *c.v_dim;
    return out;
}

/// The additive group presented by a Smith form, e.g. "Z", "Z/4", "Z + Z/2", "0".
inline std::string group_name(const SmithForm& s) {
    std::string out;
    auto append = [&](const std::string& part) {
        if (!out.empty()) out += " + ";
        out += part;
    };
    if (s.free_rank == 1) append("Z");
    if (s.free_rank > 1) append("Z^" + std::to_string(s.free_rank));
    for (const auto& d : s.torsion()) append("Z/" + d.str());
    return out.empty() ? "0" : out;
}

// -------------------------------------------------------------------------
// Full analysis of one algebra. Index-bearing data (theta sets, Cartan
// matrix, GP modules, retraction chain) is reported in the coordinates of the
// normalized sequence.
// -------------------------------------------------------------------------

struct AnalysisReport {
    KupischSeries input;
    KupischSeries normalized;
    int rotation_offset = 0;
    std::optional<ThetaData> theta; // cycle algebras only
    std::vector<int> theta_perfect;
    IntMatrix cartan_matrix;
    BigInt det;
    SmithForm snf;
    DimValue gl_dim = DimValue::finite(0);
    int fin_dim = 0;
    TrichotomyClass cls;
    std::vector<GpModule> gp;
    RetractionSequence retraction;
    SingularityDescriptor singularity;
};

namespace detail {

inline void check_report_consistency(const AnalysisReport& r) {
    const bool finite = r.gl_dim.is_finite();
    if ((r.det == 1) != finite)
        throw InternalInconsistency("det = 1 must coincide with finite global dimension");
    if (r.singularity.trivial != finite)
        throw InternalInconsistency("trivial singularity must coincide with finite global dimension");
    const bool self_inj = is_self_injective(r.normalized);
    const bool gor0 = r.cls.label == TrichotomyClass::Label::Gorenstein && r.cls.v_dim == 0;
    if (gor0 != self_inj)
        throw InternalInconsistency("Gorenstein of virtual dimension 0 must coincide with self-injectivity");
    const bool gor_cm_free =
        r.cls.label == TrichotomyClass::Label::Gorenstein && r.gp.empty();
    if (gor_cm_free != finite)
        throw InternalInconsistency("Gorenstein CM-free must coincide with finite global dimension");
    const int n = r.normalized.n();
    if (r.retraction.r > n - 1 && !(n == 1 && r.retraction.r == 0))
        throw InternalInconsistency("retraction length exceeds n - 1");
    if (r.theta && r.theta->d > r.retraction.r)
        throw InternalInconsistency("d exceeds the retraction length");
}

} // namespace detail

inline AnalysisReport analyze(const KupischSeries& a) {
    const Normalized norm = normalize(a);
    const KupischSeries& b = norm.series;
    std::optional<ThetaData> theta;
    std::vector<int> perfect;
    if (b.is_cycle()) {
        theta = theta_data(b);
        const std::vector<int> dual = dual_lengths(b);
        for (int j : theta->regular)
            if (detail::theta_perfect_with(b, *theta, dual, j)) perfect.push_back(j);
    }
    IntMatrix c = cartan(b);
    BigInt det = determinant(c);
    SmithForm snf = smith_normal_form(c);
    AnalysisReport r{a,
                     b,
                     norm.rotation_offset,
                     std::move(theta),
                     std::move(perfect),
                     std::move(c),
                     std::move(det),
                     std::move(snf),
                     global_dim(b),
                     fin_dim(b),
                     classify(b),
                     gp_modules(b),
                     retraction_sequence(b),
                     singularity_descriptor(b)};
    detail::check_report_consistency(r);
    return r;
}

inline json to_json(const RetractionStep& s) {
    return json{{"localizable_index", s.localizable_index},
                {"rotation_offset", s.rotation_offset},
                {"source", to_json(s.source)},
                {"target", to_json(s.target)}};
}

inline json to_json(const AnalysisReport& r) {
    json cartan_rows = json::array();
    for (int i = 0; i < r.cartan_matrix.rows(); ++i) {
        json row = json::array();
        for (int k = 0; k < r.cartan_matrix.cols(); ++k)
            row.push_back(to_json(r.cartan_matrix.at(i, k)));
        cartan_rows.push_back(row);
    }
    json gp = json::array();
    for (const GpModule& g : r.gp)
        gp.push_back(json{{"certificate", to_json(g.certificate)},
                          {"module", to_string(g.module)}});
    json chain = json::array();
    for (const RetractionStep& s : r.retraction.steps) chain.push_back(to_json(s));
    json out{
        {"cartan", json{{"det", to_json(r.det)},
                        {"matrix", cartan_rows},
                        {"rank", r.snf.rank()},
                        {"snf", to_json(r.snf)}}},
        {"class", to_json(r.cls)},
        {"fin_dim", r.fin_dim},
        {"gl_dim", to_json(r.gl_dim)},
        {"gp_modules", gp},
        {"input", to_json(r.input)},
        {"kind", r.normalized.is_cycle() ? "cycle" : "line"},
        {"n", r.normalized.n()},
        {"normalized", to_json(r.normalized)},
        {"r", r.retraction.r},
        {"retraction", chain},
        {"rotation_offset", r.rotation_offset},
        {"singularity", json{{"k0", to_json(r.singularity.k0)},
                             {"k0_group", group_name(r.singularity.k0)},
                             {"terminal_loewy", r.singularity.terminal_loewy},
                             {"trivial", r.singularity.trivial},
                             {"tube_rank", r.singularity.tube_rank}}},
        {"terminal", to_json(r.retraction.terminal)},
    };
    if (r.theta) {
        out["d"] = r.theta->d;
        out["theta_regular"] = r.theta->regular;
        out["theta_perfect"] = r.theta_perfect;
    } else {
        out["d"] = nullptr;
        out["theta_regular"] = nullptr;
        out["theta_perfect"] = nullptr;
    }
    return out;
}

inline std::string render_text(const AnalysisReport& r) {
    std::ostringstream os;
    const auto line = [&](const std::string& key, const std::string& value) {
        os << std::left << std::setw(14) << (key + ":") << value << "\n";
    };
    line("sequence", r.input.to_string() + " (" +
                         (r.normalized.is_cycle() ? "cycle" : "line") +
                         ", n=" + std::to_string(r.normalized.n()) + ")");
    line("normalized", r.normalized.to_string() + " (rotation offset " +
                           std::to_string(r.rotation_offset) + ")");
    if (r.theta) {
        std::string reg, perf;
        for (int j : r.theta->regular) reg += (reg.empty() ? "" : ",") + std::to_string(j);
        for (int j : r.theta_perfect) perf += (perf.empty() ? "" : ",") + std::to_string(j);
        line("theta", "d=" + std::to_string(r.theta->d) + "  regular={" + reg +
                          "}  perfect={" + perf + "}");
    } else {
        line("theta", "n/a (line algebra)");
    }
    std::ostringstream cm;
    for (int i = 0; i < r.cartan_matrix.rows(); ++i) {
        cm << (i ? "; " : "");
        for (int k = 0; k < r.cartan_matrix.cols(); ++k)
            cm << (k ? " " : "") << r.cartan_matrix.at(i, k);
    }
    line("cartan", "[" + cm.str() + "]  det=" + r.det.str() +
                       "  rank=" + std::to_string(r.snf.rank()));
    std::string snf;
    for (const auto& d : r.snf.invariant_factors)
        snf += (snf.empty() ? "" : ",") + d.str();
    line("cartan snf", "[" + snf + "]  free rank " + std::to_string(r.snf.free_rank));
    line("gl.dim", r.gl_dim.to_string());
    line("fin.dim", std::to_string(r.fin_dim));
    switch (r.cls.label) {
    case TrichotomyClass::Label::Gorenstein:
        line("class", "Gorenstein, v.dim " + std::to_string(*r.cls.v_dim));
        break;
    case TrichotomyClass::Label::NonGorensteinCmFree:
        line("class", "non-Gorenstein, CM-free");
        break;
    case TrichotomyClass::Label::NonGorensteinNotCmFree:
        line("class", "non-Gorenstein, not CM-free");
        break;
    }
    if (r.gp.empty()) {
        line("gp modules", "none");
    } else {
        std::string gp;
        for (const GpModule& g : r.gp)
            gp += (gp.empty() ? "" : "  ") + to_string(g.module) + " (period " +
                  std::to_string(g.certificate.period) + ")";
        line("gp modules", gp);
    }
    std::string chain = r.normalized.to_string();
    for (const RetractionStep& s : r.retraction.steps) chain += " -> " + s.target.to_string();
    line("retraction", chain + "  (r=" + std::to_string(r.retraction.r) + ")");
    line("singularity",
         std::string(r.singularity.trivial ? "trivial" : "nontrivial") +
             (r.singularity.trivial
                  ? ""
                  : ", tube rank " + std::to_string(r.singularity.tube_rank) +
                        ", terminal loewy " + std::to_string(r.singularity.terminal_loewy)) +
             ", K0 = " + group_name(r.singularity.k0));
    return os.str();
}

// -------------------------------------------------------------------------
// Retraction report
// -------------------------------------------------------------------------

inline json retract_json(const KupischSeries& a, const RetractionSequence& rs, int shown_steps) {
    json steps = json::array();
    for (int i = 0; i < shown_steps; ++i) {
        const RetractionStep& s = rs.steps[static_cast<std::size_t>(i)];
        json step = to_json(s);
        const SmithForm sf = smith_normal_form(cartan(s.source));
        step["det"] = to_json(determinant(cartan(s.source)));
        step["snf"] = to_json(sf);
        steps.push_back(step);
    }
    return json{{"input", to_json(a)},
                {"r", rs.r},
                {"steps", steps},
                {"terminal", to_json(rs.terminal)}};
}

inline std::string retract_text(const KupischSeries& a, const RetractionSequence& rs,
                                int shown_steps) {
    std::ostringstream os;
    os << "retraction of " << a.to_string() << " (r=" << rs.r << ")\n";
    if (rs.steps.empty()) {
        os << "  already self-injective; zero steps\n";
        return os.str();
    }
    for (int i = 0; i < shown_steps; ++i) {
        const RetractionStep& s = rs.steps[static_cast<std::size_t>(i)];
        const SmithForm sf = smith_normal_form(cartan(s.source));
        os << "  step " << (i + 1) << ": " << s.source.to_string() << " -> "
           << s.target.to_string() << "   [S_" << s.localizable_index
           << " localized; det " << determinant(cartan(s.source)).str()
           << " preserved; Cok = " << group_name(sf) << " preserved]\n";
    }
    if (shown_steps == rs.r) os << "  terminal: " << rs.terminal.to_string() << "\n";
    return os.str();
}

// -------------------------------------------------------------------------
// Single-module report
// -------------------------------------------------------------------------

struct OrbitWalk {
    std::vector<Indec> modules;
    bool ends_projective = false;
    int cycle_start = -1; // index the orbit returns to when not ending projective
};

inline OrbitWalk syzygy_orbit(const KupischSeries& a, Indec x) {
    OrbitWalk walk;
    std::vector<Indec> trail;
    for (;;) {
        auto pos = std::find(trail.begin(), trail.end(), x);
        if (pos != trail.end()) {
            walk.cycle_start = static_cast<int>(pos - trail.begin());
            break;
        }
        trail.push_back(x);
        if (is_projective(a, x)) {
            walk.ends_projective = true;
            break;
        }
        x = *syzygy(a, x);
    }
    walk.modules = std::move(trail);
    return walk;
}

struct ModuleReport {
    KupischSeries series;
    Indec module;
    int top = 0;
    int socle = 0;
    DimValue pd = DimValue::finite(0);
    DimValue id = DimValue::finite(0);
    OrbitWalk orbit;
    bool projective = false;
    std::optional<GpCertificate> certificate;
    std::optional<NotGpReason> not_gp;
    bool line_algebra = false;
};

inline ModuleReport module_report(const KupischSeries& a, const Indec& x) {
    validate(a, x);
    ModuleReport r{a, x, x.top, socle_of(a, x), proj_dim(a, x), inj_dim(a, x),
                   syzygy_orbit(a, x), is_projective(a, x), std::nullopt, std::nullopt,
                   a.is_line()};
    if (!r.projective && !r.line_algebra) {
        GpOutcome outcome = gp_test(a, x);
        if (auto* cert = std::get_if<GpCertificate>(&outcome))
            r.certificate = std::move(*cert);
        else
            r.not_gp = std::get<NotGpReason>(outcome);
    }
    return r;
}

inline json to_json(const ModuleReport& r) {
    json orbit = json::array();
    for (const Indec& m : r.orbit.modules) orbit.push_back(to_string(m));
    json gp;
    if (r.projective) {
        gp = json{{"status", "projective"}};
    } else if (r.line_algebra) {
        gp = json{{"reason", "finite_global_dimension"},
                  {"status", "not_gorenstein_projective"}};
    } else if (r.certificate) {
        gp = json{{"certificate", to_json(*r.certificate)},
                  {"status", "gorenstein_projective"}};
    } else {
        gp = json{{"reason", to_string(*r.not_gp)}, {"status", "not_gorenstein_projective"}};
    }
    return json{{"gp", gp},
                {"inj_dim", to_json(r.id)},
                {"module", to_string(r.module)},
                {"proj_dim", to_json(r.pd)},
                {"sequence", to_json(r.series)},
                {"socle", r.socle},
                {"syzygy_orbit",
                 json{{"ends_projective", r.orbit.ends_projective},
                      {"modules", orbit},
                      {"cycle_start",
                       r.orbit.ends_projective ? json(nullptr) : json(r.orbit.cycle_start)}}},
                {"top", r.top}};
}

inline std::string render_text(const ModuleReport& r) {
    std::ostringstream os;
    os << "module " << to_string(r.module) << " over " << r.series.to_string() << "\n";
    os << "  top: " << r.top << "   socle: " << r.socle << "\n";
    os << "  proj.dim: " << r.pd.to_string() << "   inj.dim: " << r.id.to_string() << "\n";
    os << "  syzygy orbit: ";
    for (std::size_t i = 0; i < r.orbit.modules.size(); ++i)
        os << (i ? " -> " : "") << to_string(r.orbit.modules[i]);
    if (r.orbit.ends_projective)
        os << "  (projective reached)";
    else
        os << "  (returns to entry " << r.orbit.cycle_start << ")";
    os << "\n";
    if (r.projective) {
        os << "  gp: projective (trivially Gorenstein projective)\n";
    } else if (r.line_algebra) {
        os << "  gp: no (line algebra, finite global dimension)\n";
    } else if (r.certificate) {
        os << "  gp: yes; certificate period " << r.certificate->period << ", projectives [";
        for (std::size_t i = 0; i < r.certificate->proj_indices.size(); ++i)
            os << (i ? "," : "") << r.certificate->proj_indices[i];
        os << "], valuations [";
        for (std::size_t i = 0; i < r.certificate->valuations.size(); ++i)
            os << (i ? "," : "") << r.certificate->valuations[i];
        os << "]\n";
    } else {
        os << "  gp: no (" << to_string(*r.not_gp) << ")\n";
    }
    return os.str();
}

// -------------------------------------------------------------------------
// Survey
// -------------------------------------------------------------------------

namespace detail {

inline std::vector<int> normalized_rotation_or_line(const std::vector<int>& e) {
    if (e.back() == 1) return e;
    return normalized_rotation(e).first;
}

inline void enumerate_rec(int n, int max_loewy, std::vector<int>& prefix,
                          std::set<std::vector<int>>& out) {
    const int at = static_cast<int>(prefix.size());
    if (at == n) {
        if (is_admissible(prefix)) out.insert(normalized_rotation_or_line(prefix));
        return;
    }
    for (int v = 1; v <= max_loewy; ++v) {
        if (at + 1 < n && v == 1) continue;             // 1 only at the last position
        if (at > 0 && prefix.back() > v + 1) continue;  // c_j <= c_{j+1} + 1
        prefix.push_back(v);
        enumerate_rec(n, max_loewy, prefix, out);
        prefix.pop_back();
    }
}

} // namespace detail

/// All normalized admissible sequences of length n with entries <= max_loewy,
/// in lexicographic order.
inline std::vector<KupischSeries> enumerate_normalized(int n, int max_loewy) {
    if (n < 1) throw ParseError("survey needs n >= 1");
    if (max_loewy < 1) throw ParseError("survey needs max_loewy >= 1");
    std::set<std::vector<int>> found;
    std::vector<int> prefix;
    detail::enumerate_rec(n, max_loewy, prefix, found);
    std::vector<KupischSeries> out;
    for (const auto& e : found) out.push_back(KupischSeries(e));
    return out;
}

struct SurveyRow {
    KupischSeries series;
    std::optional<int> d;
    int r = 0;
    DimValue gl = DimValue::finite(0);
    int fin = 0;
    TrichotomyClass cls;
    BigInt det;
    int gp_count = 0;
};

inline std::vector<SurveyRow> survey(int n, int max_loewy) {
    std::vector<SurveyRow> rows;
    for (const KupischSeries& a : enumerate_normalized(n, max_loewy)) {
        SurveyRow row{a, std::nullopt, 0, global_dim(a), fin_dim(a), classify(a),
                      determinant(cartan(a)), static_cast<int>(gp_modules(a).size())};
        if (a.is_cycle()) row.d = theta_data(a).d;
        row.r = retraction_sequence(a).r;
        rows.push_back(std::move(row));
    }
    return rows;
}

inline json to_json(const SurveyRow& row) {
    return json{{"class", to_json(row.cls)},
                {"d", row.d ? json(*row.d) : json(nullptr)},
                {"det", to_json(row.det)},
                {"fin_dim", row.fin},
                {"gl_dim", to_json(row.gl)},
                {"gp_count", row.gp_count},
                {"kind", row.series.is_cycle() ? "cycle" : "line"},
                {"n", row.series.n()},
                {"r", row.r},
                {"sequence", to_json(row.series)}};
}

inline json survey_json(const std::vector<SurveyRow>& rows) {
    json arr = json::array();
    for (const SurveyRow& row : rows) arr.push_back(to_json(row));
    return json{{"rows", arr}};
}

inline std::string survey_text(const std::vector<SurveyRow>& rows) {
    std::ostringstream os;
    os << std::left << std::setw(16) << "sequence" << std::setw(28) << "class"
       << std::setw(8) << "gl.dim" << std::setw(9) << "fin.dim" << std::setw(5) << "d"
       << std::setw(4) << "r" << std::setw(6) << "det" << std::setw(4) << "gp" << "\n";
    for (const SurveyRow& row : rows) {
        std::string cls;
        switch (row.cls.label) {
        case TrichotomyClass::Label::Gorenstein:
            cls = "Gorenstein(v=" + std::to_string(*row.cls.v_dim) + ")";
            break;
        case TrichotomyClass::Label::NonGorensteinCmFree:
            cls = "non-Gor CM-free";
            break;
        case TrichotomyClass::Label::NonGorensteinNotCmFree:
            cls = "non-Gor not CM-free";
            break;
        }
        os << std::left << std::setw(16) << row.series.to_string() << std::setw(28) << cls
           << std::setw(8) << row.gl.to_string() << std::setw(9) << row.fin << std::setw(5)
           << (row.d ? std::to_string(*row.d) : "-") << std::setw(4) << row.r << std::setw(6)
           << row.det.str() << std::setw(4) << row.gp_count << "\n";
    }
    return os.str();
}

} // namespace nakayama
