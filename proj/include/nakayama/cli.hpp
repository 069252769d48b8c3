#pragma once

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "report.hpp"

namespace nakayama {

/// Exit codes: 0 success, 2 user input error, 3 violated internal invariant.
/// The last one exists so automated runs surface soundness bugs loudly.
inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Homological invariants of connected Nakayama algebras"};
    app.require_subcommand(1);

    std::string seq_text;
    std::string module_text;
    int steps_shown = -1;
    int survey_n = 0;
    int survey_loewy = 0;
    bool analyze_json = false, retract_json_flag = false, module_json = false,
         survey_json_flag = false;

    CLI::App* cmd_analyze = app.add_subcommand("analyze", "Full invariant report for one algebra");
    cmd_analyze->add_option("sequence", seq_text, "Kupisch series, e.g. 3,4,4")->required();
    cmd_analyze->add_flag("--json", analyze_json, "structured output");

    CLI::App* cmd_retract = app.add_subcommand("retract", "Left-retraction chain to a self-injective algebra");
    cmd_retract->add_option("sequence", seq_text, "Kupisch series")->required();
    cmd_retract->add_option("--steps", steps_shown, "show only the first k steps");
    cmd_retract->add_flag("--json", retract_json_flag, "structured output");

    CLI::App* cmd_module = app.add_subcommand("module", "Inspect one indecomposable module");
    cmd_module->add_option("sequence", seq_text, "Kupisch series")->required();
    cmd_module->add_option("module", module_text, "module as top:length, e.g. 2:3")->required();
    cmd_module->add_flag("--json", module_json, "structured output");

    CLI::App* cmd_survey = app.add_subcommand("survey", "Classify every algebra in a range");
    cmd_survey->add_option("--n", survey_n, "number of simple modules")->required();
    cmd_survey->add_option("--max-loewy", survey_loewy, "bound on the entries")->required();
    cmd_survey->add_flag("--json", survey_json_flag, "structured output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*cmd_analyze) {
            const AnalysisReport r = analyze(KupischSeries::parse(seq_text));
            if (analyze_json)
                out << to_json(r).dump(2) << "\n";
            else
                out << render_text(r);
        } else if (*cmd_retract) {
            const KupischSeries a = KupischSeries::parse(seq_text);
            const RetractionSequence rs = retraction_sequence(a);
            int shown = rs.r;
            if (steps_shown >= 0 && steps_shown < shown) shown = steps_shown;
            if (retract_json_flag)
                out << retract_json(a, rs, shown).dump(2) << "\n";
            else
                out << retract_text(a, rs, shown);
        } else if (*cmd_module) {
            const KupischSeries a = KupischSeries::parse(seq_text);
            const ModuleReport r = module_report(a, parse_indec(module_text));
            if (module_json)
                out << to_json(r).dump(2) << "\n";
            else
                out << render_text(r);
        } else if (*cmd_survey) {
            const auto rows = survey(survey_n, survey_loewy);
            if (survey_json_flag)
                out << survey_json(rows).dump(2) << "\n";
            else
                out << survey_text(rows);
        }
        return 0;
    } catch (const InternalInconsistency& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    }
}

} // namespace nakayama
