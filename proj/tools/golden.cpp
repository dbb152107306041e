// Checks (or rewrites, with --update) the corpus golden outputs.

#include <fstream>
#include <iostream>
#include <string>

#include "crossway/corpus.hpp"

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: crossway_golden <corpus-dir> [--update] [name...]\n";
        return 4;
    }
    const std::filesystem::path dir = argv[1];
    bool update = false;
    std::vector<std::string> names;
    for (int k = 2; k < argc; ++k) {
        std::string arg = argv[k];
        if (arg == "--update")
            update = true;
        else
            names.push_back(arg);
    }
    if (names.empty()) names = crossway::golden_names();

    crossway::Corpus corpus;
    try {
        corpus = crossway::load_corpus(dir);
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 4;
    }

    int failures = 0;
    for (const auto& name : names) {
        try {
            if (update) {
                std::ofstream out(crossway::golden_path(corpus, name), std::ios::binary);
                out << crossway::render_golden(corpus, name);
                std::cout << "wrote " << name << "\n";
                continue;
            }
            auto result = crossway::golden_check(corpus, name);
            std::cout << (result.pass ? "PASS " : "FAIL ") << name << "\n";
            if (!result.pass) {
                std::cout << result.diff;
                ++failures;
            }
        } catch (const std::exception& e) {
            std::cout << "FAIL " << name << ": " << e.what() << "\n";
            ++failures;
        }
    }
    return failures ? 1 : 0;
}
