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

#pragma once

// Front-end helpers shared by the command-line tool and its tests.

#include <algorithm>
#include <charconv>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "checker.hpp"

namespace tamilspell::cli {

inline nlohmann::json to_json(const Suggestion& s) {
    return {{"candidate", s.candidate}, {"strategy", std::string(to_string(s.strategy))}, {"score", s.score}};
}

inline nlohmann::json to_json(const TokenReport& t) {
    auto suggestions = nlohmann::json::array();
    for (const auto& s : t.suggestions) {
        suggestions.push_back(to_json(s));
    }
    return {{"token", t.token}, {"verdict", std::string(to_string(t.verdict))}, {"suggestions", suggestions}};
}

/// One array per document, one object per token.
inline nlohmann::json to_json(const CheckReport& r) {
    auto doc = nlohmann::json::array();
    for (const auto& t : r.tokens) {
        doc.push_back(to_json(t));
    }
    return doc;
}

/// A token that should fail a batch run.
inline bool is_finding(const TokenReport& t) {
    return t.verdict == Verdict::NonWord && !t.is_conjoined_form();
}

inline bool has_findings(const CheckReport& r) {
    return std::any_of(r.tokens.begin(), r.tokens.end(), is_finding);
}

/// "(0) a, (1) b, ..."
inline std::string numbered(const std::vector<Suggestion>& list) {
    std::string out;
    for (std::size_t i = 0; i < list.size(); ++i) {
        if (i > 0) {
            out += ", ";
        }
        out += "(" + std::to_string(i) + ") " + list[i].candidate;
    }
    return out;
}

/// Column output: one line per finding, "file<TAB>index<TAB>token<TAB>verdict<TAB>suggestions".
inline void write_columns(std::ostream& out, std::string_view name, const CheckReport& r) {
    for (std::size_t i = 0; i < r.tokens.size(); ++i) {
        const auto& t = r.tokens[i];
        if (t.verdict == Verdict::Valid || t.verdict == Verdict::Skipped ||
            (t.verdict == Verdict::NonTamil && t.suggestions.empty())) {
            continue;
        }
        std::string sugg;
        for (const auto& s : t.suggestions) {
            if (!sugg.empty()) {
                sugg += ", ";
            }
            sugg += s.candidate;
        }
        out << name << '\t' << i << '\t' << t.token << '\t' << to_string(t.verdict) << '\t' << sugg << '\n';
    }
}

inline constexpr std::string_view prompt = ">> ";
inline constexpr std::string_view valid_reply = "சரி";

/// Interactive loop. Each line is checked through the same engine as batch
/// mode. After a suggestion list, entering its index echoes that
/// replacement. ":q" or end of input exits.
inline void run_repl(Checker& checker, std::istream& in, std::ostream& out) {
    std::vector<Suggestion> last;
    std::string line;
    while (true) {
        out << prompt << std::flush;
        if (!std::getline(in, line)) {
            out << '\n';
            return;
        }
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) {
            continue;
        }
        line = line.substr(first, line.find_last_not_of(" \t\r") - first + 1);
        if (line == ":q") {
            return;
        }
        std::size_t index = 0;
        const auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), index);
        if (ec == std::errc() && ptr == line.data() + line.size()) {
            if (index < last.size()) {
                out << "-> " << last[index].candidate << '\n';
            } else {
                out << "?\n";
            }
            continue;
        }
        std::string text;
        try {
            text = normalize_nfc(line);
        } catch (const std::exception& e) {
            out << "error: " << e.what() << '\n';
            continue;
        }
        last.clear();
        for (const auto& t : checker.check_text(text).tokens) {
            switch (t.verdict) {
            case Verdict::Valid:
                out << t.token << ": " << valid_reply << '\n';
                break;
            case Verdict::Skipped:
                out << t.token << ": -\n";
                break;
            case Verdict::NonTamil:
            case Verdict::NonWord:
                out << "சொல் \"" << t.token << "\" மாற்றங்கள்\n" << numbered(t.suggestions) << '\n';
                last = t.suggestions;
                break;
            }
        }
    }
}

} // namespace tamilspell::cli
