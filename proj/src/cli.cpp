#include "crossway/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>

#include <CLI11.hpp>

#include "crossway/attack_tree.hpp"
#include "crossway/chains.hpp"
#include "crossway/corpus.hpp"
#include "crossway/dsl.hpp"
#include "crossway/engine.hpp"
#include "crossway/report.hpp"
#include "crossway/validate.hpp"

namespace crossway {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Non-zero exit with its message already printed.
struct Exit {
    int code;
};

std::string load(const std::string& path) {
    try {
        return read_file(path);
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
}

Model load_model(const std::string& path, std::ostream& err, bool quiet_diagnostics = false) {
    auto parsed = parse_model(load(path), ModelParseOptions{.check_references = false});
    for (const auto& w : parsed.warnings) err << path << ':' << w.span.line << ':' << w.span.column << ": warning[" << w.code << "]: " << w.message << "\n";
    if (!parsed.ok()) {
        for (const auto& e : parsed.errors) err << format_parse_error(e, path) << "\n";
        throw Exit{kExitParse};
    }
    if (!quiet_diagnostics) {
        auto diags = validate_model(*parsed.value);
        for (const auto& d : diags) err << path << ": " << format_diagnostic(d) << "\n";
        if (has_errors(diags)) throw Exit{kExitValidation};
    }
    return std::move(*parsed.value);
}

Catalog load_catalog(const std::string& path, std::ostream& err) {
    auto parsed = parse_catalog(load(path));
    if (!parsed.ok()) {
        for (const auto& e : parsed.errors) err << format_parse_error(e, path) << "\n";
        throw Exit{kExitParse};
    }
    return std::move(*parsed.value);
}

AttackTree load_tree(const std::string& path, std::ostream& err) {
    auto parsed = parse_tree(load(path));
    if (!parsed.ok()) {
        for (const auto& e : parsed.errors) err << format_parse_error(e, path) << "\n";
        throw Exit{kExitParse};
    }
    return std::move(*parsed.value);
}

ReportFormat text_format(const std::string& name) {
    auto f = report_format_from(name);
    if (!f || *f == ReportFormat::DOT) throw UsageError("--format must be md, csv or json");
    return *f;
}

struct FailOn {
    std::vector<ThreatCategory> categories;
    StrideSet letters;

    bool matches(const Threat& t) const {
        if (std::find(categories.begin(), categories.end(), t.category) != categories.end()) return true;
        return !(t.stride & letters).empty();
    }
};

FailOn parse_fail_on(const std::vector<std::string>& values) {
    FailOn f;
    for (const auto& v : values) {
        if (auto c = category_from(v)) {
            f.categories.push_back(*c);
        } else if (v.size() == 1 && stride_from_letter(v[0])) {
            f.letters.insert(*stride_from_letter(v[0]));
        } else {
            throw UsageError("--fail-on takes CCT, AdvT, ConT or a STRIDE letter, got '" + v + "'");
        }
    }
    return f;
}

std::map<std::string, bool> parse_assignments(const std::vector<std::string>& items) {
    std::map<std::string, bool> truth;
    for (const auto& item : items) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw UsageError("--set expects leaf=true|false, got '" + item + "'");
        std::string key = item.substr(0, eq), value = item.substr(eq + 1);
        if (value == "true" || value == "1")
            truth[key] = true;
        else if (value == "false" || value == "0")
            truth[key] = false;
        else
            throw UsageError("leaf value must be true or false, got '" + value + "'");
    }
    return truth;
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw UsageError("cannot write " + out_path);
    file << text;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Threat-model-as-code: DFD trust-boundary crossings, STRIDE elicitation and attack chains", "crossway"};
    app.require_subcommand(1);

    std::string model_path, catalog_path, tree_path, format = "md", crossing, from, impact, out_path;
    std::vector<std::string> fail_on, assignments;
    std::size_t max_len = 0;
    bool persistent_only = false;

    auto* validate = app.add_subcommand("validate", "Check model structure");
    validate->add_option("model", model_path, "Model file")->required();

    auto* crossings = app.add_subcommand("crossings", "List boundary-crossing interaction points");
    crossings->add_option("model", model_path, "Model file")->required();
    crossings->add_option("--format", format, "md|csv|json");

    auto* elicit_cmd = app.add_subcommand("elicit", "STRIDE-per-interaction threat elicitation");
    elicit_cmd->add_option("model", model_path, "Model file")->required();
    elicit_cmd->add_option("--catalog", catalog_path, "Catalog/rule file")->required();
    elicit_cmd->add_option("--crossing", crossing, "Only this crossing label");
    elicit_cmd->add_option("--format", format, "md|csv|json");
    elicit_cmd->add_option("--fail-on", fail_on, "Exit 1 if a threat has this category or STRIDE letter")
        ->delimiter(',');

    auto* chains_cmd = app.add_subcommand("chains", "Enumerate attack chains");
    chains_cmd->add_option("model", model_path, "Model file")->required();
    chains_cmd->add_option("--from", from, "Entry external entity")->required();
    chains_cmd->add_option("--impact", impact, "Impact flow")->required();
    chains_cmd->add_option("--max-len", max_len, "Maximum trail length (default: flow count)");
    chains_cmd->add_flag("--persistent-only", persistent_only, "Only chains writing a context store");
    chains_cmd->add_option("--format", format, "md|csv|json");

    auto* tree_cmd = app.add_subcommand("tree", "Attack tree evaluation");
    tree_cmd->add_option("file", tree_path, "Tree file")->required();
    tree_cmd->require_subcommand(1);
    auto* eval_cmd = tree_cmd->add_subcommand("eval", "Evaluate the root under leaf assignments");
    eval_cmd->add_option("--set", assignments, "leaf=true|false,...")->delimiter(',')->required();
    auto* cuts_cmd = tree_cmd->add_subcommand("cuts", "Minimal cut sets");

    auto* render = app.add_subcommand("render", "Graphviz DOT output");
    render->require_subcommand(1);
    auto* render_dfd_cmd = render->add_subcommand("dfd", "Render a model");
    render_dfd_cmd->add_option("model", model_path, "Model file")->required();
    render_dfd_cmd->add_option("-o,--output", out_path, "Output file");
    auto* render_tree_cmd = render->add_subcommand("tree", "Render an attack tree");
    render_tree_cmd->add_option("file", tree_path, "Tree file")->required();
    render_tree_cmd->add_option("-o,--output", out_path, "Output file");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (validate->parsed()) {
            auto parsed = parse_model(load(model_path), ModelParseOptions{.check_references = false});
            if (!parsed.ok()) {
                for (const auto& e : parsed.errors) err << format_parse_error(e, model_path) << "\n";
                return kExitParse;
            }
            auto diags = validate_model(*parsed.value);
            out << diagnostics_report(diags);
            return has_errors(diags) ? kExitValidation : kExitOk;
        }

        if (crossings->parsed()) {
            const ReportFormat f = text_format(format);
            Model model = load_model(model_path, err);
            out << crossings_report(model, find_crossings(model).groups, f);
            return kExitOk;
        }

        if (elicit_cmd->parsed()) {
            const ReportFormat f = text_format(format);
            const FailOn gate = parse_fail_on(fail_on);
            Model model = load_model(model_path, err);
            Catalog catalog = load_catalog(catalog_path, err);
            ElicitationReport report = analyze(model, catalog);
            if (!crossing.empty()) {
                auto keep = std::find_if(report.crossings.begin(), report.crossings.end(),
                                         [&](const CrossingGroup& g) { return g.label == crossing; });
                if (keep == report.crossings.end()) throw UsageError("no crossing labelled '" + crossing + "'");
                report.crossings = {*keep};
                std::erase_if(report.threats, [&](const Threat& t) { return t.crossing != crossing; });
            }
            out << threat_table(report, f);
            const bool hit = std::any_of(report.threats.begin(), report.threats.end(),
                                         [&](const Threat& t) { return gate.matches(t); });
            return hit ? kExitFindings : kExitOk;
        }

        if (chains_cmd->parsed()) {
            const ReportFormat f = text_format(format);
            Model model = load_model(model_path, err);
            std::vector<AttackChain> chains;
            try {
                chains = enumerate_chains(model, from, impact,
                                          max_len ? std::optional<std::size_t>(max_len) : std::nullopt);
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            } catch (const std::out_of_range& e) {
                throw UsageError(e.what());
            }
            if (persistent_only)
                std::erase_if(chains, [&](const AttackChain& c) { return persistence_flags(c, model).empty(); });
            out << chains_report(model, chains, f);
            return kExitOk;
        }

        if (tree_cmd->parsed()) {
            AttackTree tree = load_tree(tree_path, err);
            if (eval_cmd->parsed()) {
                try {
                    out << (tree_evaluate(tree, parse_assignments(assignments)) ? "true" : "false") << "\n";
                } catch (const MissingLeafError& e) {
                    throw UsageError(e.what());
                }
            } else if (cuts_cmd->parsed()) {
                out << cut_sets_report(minimal_cut_sets(tree));
            }
            return kExitOk;
        }

        if (render_dfd_cmd->parsed()) {
            Model model = load_model(model_path, err);
            emit(render_dfd(model), out_path, out);
            return kExitOk;
        }
        if (render_tree_cmd->parsed()) {
            emit(render_tree(load_tree(tree_path, err)), out_path, out);
            return kExitOk;
        }
    } catch (const Exit& e) {
        return e.code;
    } catch (const UsageError& e) {
        err << "crossway: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace crossway
