/*
 * Copyright 2026 The tamilspell Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// tamilspell: batch checker and interactive corrector.
//
//   tamilspell [options] FILE...     check files (stdin when none given)
//   tamilspell -i [options]          interactive session
//
// Exit status: 0 no non-words, 1 non-words found, 2 usage or load error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "tamilspell/checker.hpp"
#include "tamilspell/cli.hpp"

namespace {

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    return in;
}

std::string read_all(std::istream& in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

template <typename Loader>
auto load_file(const std::string& path, Loader&& loader) {
    auto in = open_or_throw(path);
    try {
        return loader(in);
    } catch (const tamilspell::ParseError& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

} // namespace

int main(int argc, char** argv) {
    using namespace tamilspell;

    CLI::App app{"Tamil spelling checker"};
    bool interactive = false;
    std::vector<std::string> dicts;
    std::string data_dir = TAMILSPELL_DATA_DIR;
    std::string cm_path = data_dir + "/tamil99.tsv";
    std::string parallel_path = data_dir + "/parallel.tsv";
    std::string stopwords_path;
    std::string mayangoli_path;
    CheckerConfig config;
    std::size_t limit = 0;
    bool json = false;
    bool stats = false;
    bool no_cache = false;
    std::vector<std::string> files;

    app.add_flag("-i,--interactive", interactive, "Interactive session");
    app.add_option("--dict", dicts, "Word list (repeatable; default: bundled fixture)");
    app.add_option("--cm", cm_path, "Keyboard confusion matrix");
    app.add_option("--parallel", parallel_path, "Foreign-to-Tamil parallel dictionary");
    app.add_option("--stopwords", stopwords_path, "Stop-word list");
    app.add_option("--mayangoli", mayangoli_path, "Confusable-letter series file");
    app.add_option("--ed", config.edit_distance, "Edit distance for edit and keyboard search")
        ->check(CLI::Range(1, 8))
        ->capture_default_str();
    app.add_option("--limit", limit, "Cap on generated edit candidates (0 = none)");
    app.add_option("--max-suggestions", config.max_suggestions, "Suggestions per word (0 = all)")
        ->capture_default_str();
    app.add_option("--workers", config.workers, "Worker threads")->check(CLI::Range(1u, 256u))->capture_default_str();
    app.add_flag("--grantha", config.grantha, "Use the 323-letter alphabet for edits");
    app.add_flag("--json", json, "JSON output, one array per file");
    app.add_flag("--stats", stats, "Print cache and timing statistics to stderr");
    app.add_flag("--no-cache", no_cache, "Disable the suggestion cache");
    app.add_option("files", files, "Files to check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    config.edit_limit = limit == 0 ? edit::unlimited : limit;
    config.cache = !no_cache;
    if (dicts.empty()) {
        dicts.push_back(data_dir + "/lexicon.txt");
    }

    std::optional<Checker> checker;
    try {
        Resources res;
        for (const auto& d : dicts) {
            load_file(d, [&](std::istream& in) {
                load_wordlist_into(res.lexicon, in);
                return 0;
            });
        }
        if (!cm_path.empty()) {
            res.keyboard = load_file(cm_path, [](std::istream& in) { return keyboard::load_confusion_matrix(in); });
        }
        if (!parallel_path.empty()) {
            res.parallel = load_file(parallel_path, [](std::istream& in) { return load_parallel_dictionary(in); });
        }
        if (!stopwords_path.empty()) {
            res.stop_words = load_file(stopwords_path, [](std::istream& in) { return load_stop_words(in); });
        }
        if (!mayangoli_path.empty()) {
            res.mayangoli = load_file(mayangoli_path, [](std::istream& in) { return mayangoli::load_table(in); });
        }
        checker.emplace(std::move(res), config);
    } catch (const std::exception& e) {
        std::cerr << "tamilspell: " << e.what() << '\n';
        return 2;
    }

    if (interactive) {
        cli::run_repl(*checker, std::cin, std::cout);
        return 0;
    }

    if (files.empty()) {
        files.push_back("-");
    }
    bool findings = false;
    const auto start = std::chrono::steady_clock::now();
    for (const auto& f : files) {
        std::string text;
        try {
            if (f == "-") {
                text = read_all(std::cin);
            } else {
                auto in = open_or_throw(f);
                text = read_all(in);
            }
            text = normalize_nfc(text);
        } catch (const std::exception& e) {
            std::cerr << "tamilspell: " << f << ": " << e.what() << '\n';
            return 2;
        }
        const auto report = checker->check_text(text);
        findings = findings || cli::has_findings(report);
        if (json) {
            std::cout << cli::to_json(report).dump() << '\n';
        } else {
            cli::write_columns(std::cout, f, report);
        }
    }
    if (stats) {
        const auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const auto s = checker->stats();
        std::cerr << "cache hits: " << s.hits << "\ncache misses: " << s.misses << "\nseconds: " << elapsed << '\n';
    }
    return findings ? 1 : 0;
}
