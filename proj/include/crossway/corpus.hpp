#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace crossway {

/// The bundled reference analysis: model, catalog and attack tree texts plus
/// the directory holding checked-in expected outputs.
struct Corpus {
    std::string model_text;
    std::string catalog_text;
    std::string tree_text;
    std::filesystem::path golden_dir;
};

inline constexpr const char* kCorpusModelFile = "paper_l1.tm";
inline constexpr const char* kCorpusCatalogFile = "paper_catalog.tc";
inline constexpr const char* kCorpusTreeFile = "chain1.at";

class MissingGoldenError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::filesystem::path& path);
Corpus load_corpus(const std::filesystem::path& dir);

/// crossings, threats, threats-csv, chain1, chain2, chain3, tree-cuts, dfd, tree-dot
const std::vector<std::string>& golden_names();
std::filesystem::path golden_path(const Corpus& corpus, std::string_view name);

/// Runs the pipeline for `name` over the corpus texts.
std::string render_golden(const Corpus& corpus, std::string_view name);

struct GoldenResult {
    bool pass = false;
    std::string diff;  // empty on pass
};

/// Byte comparison against the checked-in file; throws MissingGoldenError.
GoldenResult golden_check(const Corpus& corpus, std::string_view name);

/// Line diff: "-" expected-only, "+" actual-only lines, with line numbers.
std::string line_diff(std::string_view expected, std::string_view actual);

}  // namespace crossway
