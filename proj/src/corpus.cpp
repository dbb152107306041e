#include "crossway/corpus.hpp"

#include <fstream>
#include <sstream>

#include "crossway/dsl.hpp"
#include "crossway/engine.hpp"
#include "crossway/report.hpp"
#include "crossway/validate.hpp"

namespace crossway {

namespace {

struct GoldenEntry {
    const char* name;
    const char* file;
};

constexpr GoldenEntry kGoldens[] = {
    {"crossings", "crossings.csv"},     {"threats", "threats.md"},      {"threats-csv", "threats.csv"},
    {"chain1", "chain1_E1_DF10.txt"},   {"chain2", "chain2_E2_DF10.txt"}, {"chain3", "chain3_E4_DF10.txt"},
    {"tree-cuts", "chain1_cuts.txt"},   {"dfd", "paper_l1.dot"},        {"tree-dot", "chain1_tree.dot"},
};

const GoldenEntry& golden_entry(std::string_view name) {
    for (const auto& g : kGoldens)
        if (name == g.name) return g;
    throw MissingGoldenError("no golden output named '" + std::string(name) + "'");
}

std::vector<std::string> split_lines(std::string_view text) {
    std::vector<std::string> lines;
    std::size_t begin = 0;
    while (begin < text.size()) {
        std::size_t end = text.find('\n', begin);
        if (end == std::string_view::npos) end = text.size();
        std::size_t stop = end;
        if (stop > begin && text[stop - 1] == '\r') --stop;  // CSV goldens use CRLF
        lines.emplace_back(text.substr(begin, stop - begin));
        begin = end + 1;
    }
    return lines;
}

std::string errors_text(const std::vector<ParseError>& errors) {
    std::string out;
    for (const auto& e : errors) out += format_parse_error(e) + "\n";
    return out;
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Corpus load_corpus(const std::filesystem::path& dir) {
    Corpus c;
    c.model_text = read_file(dir / kCorpusModelFile);
    c.catalog_text = read_file(dir / kCorpusCatalogFile);
    c.tree_text = read_file(dir / kCorpusTreeFile);
    c.golden_dir = dir / "golden";
    return c;
}

const std::vector<std::string>& golden_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& g : kGoldens) v.emplace_back(g.name);
        return v;
    }();
    return names;
}

std::filesystem::path golden_path(const Corpus& corpus, std::string_view name) {
    return corpus.golden_dir / golden_entry(name).file;
}

std::string render_golden(const Corpus& corpus, std::string_view name) {
    const std::string key(golden_entry(name).name);

    if (key == "tree-cuts" || key == "tree-dot") {
        auto tree = parse_tree(corpus.tree_text);
        if (!tree.ok()) return errors_text(tree.errors);
        return key == "tree-cuts" ? cut_sets_report(minimal_cut_sets(*tree.value)) : render_tree(*tree.value);
    }

    auto parsed = parse_model(corpus.model_text);
    if (!parsed.ok()) return errors_text(parsed.errors);
    const Model& model = *parsed.value;
    if (auto diags = validate_model(model); has_errors(diags)) return diagnostics_report(diags);

    const auto crossings = find_crossings(model).groups;
    if (key == "crossings") return crossings_report(model, crossings, ReportFormat::CSV);
    if (key == "dfd") return render_dfd(model);
    if (key == "chain1" || key == "chain2" || key == "chain3") {
        const char* entry = key == "chain1" ? "E1" : key == "chain2" ? "E2" : "E4";
        if (!model.find_element(entry) || !model.find_flow("DF10")) return "chains: 0\n";
        return chain_summary(model, enumerate_chains(model, crossings, entry, "DF10"));
    }

    auto catalog = parse_catalog(corpus.catalog_text);
    if (!catalog.ok()) return errors_text(catalog.errors);
    ElicitationReport report = analyze(model, *catalog.value);
    return threat_table(report, key == "threats" ? ReportFormat::Markdown : ReportFormat::CSV);
}

GoldenResult golden_check(const Corpus& corpus, std::string_view name) {
    const auto path = golden_path(corpus, name);
    if (!std::filesystem::exists(path)) throw MissingGoldenError("golden file missing: " + path.string());
    const std::string expected = read_file(path);
    const std::string actual = render_golden(corpus, name);
    if (expected == actual) return {true, {}};
    return {false, line_diff(expected, actual)};
}

std::string line_diff(std::string_view expected, std::string_view actual) {
    const auto a = split_lines(expected);
    const auto b = split_lines(actual);
    // LCS table
    std::vector<std::vector<std::size_t>> lcs(a.size() + 1, std::vector<std::size_t>(b.size() + 1, 0));
    for (std::size_t i = a.size(); i-- > 0;)
        for (std::size_t j = b.size(); j-- > 0;)
            lcs[i][j] = a[i] == b[j] ? lcs[i + 1][j + 1] + 1 : std::max(lcs[i + 1][j], lcs[i][j + 1]);

    std::ostringstream os;
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (i < a.size() && j < b.size() && a[i] == b[j]) {
            ++i;
            ++j;
        } else if (i < a.size() && (j == b.size() || lcs[i + 1][j] >= lcs[i][j + 1])) {
            os << "-" << (i + 1) << ": " << a[i] << "\n";
            ++i;
        } else {
            os << "+" << (j + 1) << ": " << b[j] << "\n";
            ++j;
        }
    }
    if (os.str().empty() && expected != actual) os << "(whitespace or line-ending difference)\n";
    return os.str();
}

}  // namespace crossway
