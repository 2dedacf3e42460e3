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

// Confusable-letter ("mayangoli") alternates: ல/ழ/ள, ர/ற, ந/ன/ண, ங/ஞ.

#include <cstddef>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "letters.hpp"
#include "lexicon.hpp"
#include "suggestion.hpp"

namespace tamilspell::mayangoli {

/// Series of mutually confusable mei letters. No mei belongs to two series.
class MayangoliTable {
  public:
    explicit MayangoliTable(std::vector<std::vector<TamilLetter>> series) : series_(std::move(series)) {
        std::unordered_set<std::string> seen;
        for (const auto& s : series_) {
            if (s.empty()) {
                throw std::invalid_argument("mayangoli series is empty");
            }
            for (const auto& mei : s) {
                if (mei.kind != LetterKind::Mei) {
                    throw std::invalid_argument("mayangoli series member is not a mei letter: '" + mei.text + "'");
                }
                if (!seen.insert(mei.text).second) {
                    throw std::invalid_argument("mei letter listed twice: '" + mei.text + "'");
                }
            }
        }
    }

    static const MayangoliTable& standard() {
        static const MayangoliTable table({
            {TamilLetter::parse("ல்"), TamilLetter::parse("ழ்"), TamilLetter::parse("ள்")},
            {TamilLetter::parse("ர்"), TamilLetter::parse("ற்")},
            {TamilLetter::parse("ந்"), TamilLetter::parse("ன்"), TamilLetter::parse("ண்")},
            {TamilLetter::parse("ங்"), TamilLetter::parse("ஞ்")},
        });
        return table;
    }

    const std::vector<std::vector<TamilLetter>>& series() const noexcept { return series_; }

  private:
    std::vector<std::vector<TamilLetter>> series_;
};

/// One series per line, space-separated mei letters; '#' comments.
inline MayangoliTable load_table(std::istream& in) {
    std::vector<std::vector<TamilLetter>> series;
    tamilspell::detail::for_each_data_line(in, [&](std::size_t line_no, std::string_view line) {
        std::vector<TamilLetter> row;
        std::istringstream fields{std::string(line)};
        std::string field;
        while (fields >> field) {
            TamilLetter mei;
            try {
                mei = TamilLetter::parse(normalize_nfc(field));
            } catch (const std::invalid_argument& e) {
                throw ParseError(line_no, e.what());
            }
            if (mei.kind != LetterKind::Mei) {
                throw ParseError(line_no, "not a mei letter: '" + field + "'");
            }
            row.push_back(std::move(mei));
        }
        series.push_back(std::move(row));
    });
    return MayangoliTable(std::move(series));
}

struct MayangoliMatch {
    std::size_t position;
    std::size_t series_index;
    std::size_t member_index;

    friend bool operator==(const MayangoliMatch&, const MayangoliMatch&) = default;
};

/// Uyirmei letters whose mei is in some series. Letters that do not split
/// (uyir, ayudham, bare mei) are skipped.
inline std::vector<MayangoliMatch> find_letter_positions(const LetterWord& word, const MayangoliTable& table) {
    std::vector<MayangoliMatch> matches;
    for (std::size_t idx = 0; idx < word.size(); ++idx) {
        if (word[idx].kind != LetterKind::UyirMei) {
            continue;
        }
        const auto parts = split_mei_uyir(word[idx]);
        const auto& series = table.series();
        for (std::size_t r = 0; r < series.size(); ++r) {
            for (std::size_t c = 0; c < series[r].size(); ++c) {
                if (parts->mei == series[r][c]) {
                    matches.push_back({idx, r, c});
                }
            }
        }
    }
    return matches;
}

/// For each match, every mei of its series joined with the original uyir,
/// in series order (the original letter included).
inline std::vector<std::vector<TamilLetter>> find_correspondents(const LetterWord& word,
                                                                 const std::vector<MayangoliMatch>& matches,
                                                                 const MayangoliTable& table) {
    std::vector<std::vector<TamilLetter>> classes;
    classes.reserve(matches.size());
    for (const auto& m : matches) {
        const auto parts = split_mei_uyir(word.at(m.position));
        std::vector<TamilLetter> alts;
        for (const auto& mei : table.series().at(m.series_index)) {
            alts.push_back(join_mei_uyir(mei, parts->uyir));
        }
        classes.push_back(std::move(alts));
    }
    return classes;
}

/// Cartesian product of the correspondents, last position varying fastest,
/// with the input word itself removed.
inline std::vector<std::string> generate_alternates(const LetterWord& word, const MayangoliTable& table) {
    const auto matches = find_letter_positions(word, table);
    if (matches.empty()) {
        return {};
    }
    const auto classes = find_correspondents(word, matches, table);
    const std::string source = join(word);
    std::vector<std::string> out;
    std::vector<std::size_t> odometer(classes.size(), 0);
    LetterWord alt = word;
    while (true) {
        for (std::size_t k = 0; k < matches.size(); ++k) {
            alt[matches[k].position] = classes[k][odometer[k]];
        }
        std::string text = join(alt);
        if (text != source) {
            out.push_back(std::move(text));
        }
        std::size_t k = classes.size();
        while (k > 0) {
            --k;
            if (++odometer[k] < classes[k].size()) {
                break;
            }
            odometer[k] = 0;
            if (k == 0) {
                return out;
            }
        }
    }
}

/// Alternates present in the lexicon; score is the letter distance.
inline std::vector<Suggestion> suggest(const LetterWord& word, const WordSource& lex, const MayangoliTable& table) {
    std::vector<Suggestion> out;
    for (auto& text : generate_alternates(word, table)) {
        const auto letters = tokenize(text);
        if (lex.contains(letters)) {
            out.push_back({std::move(text), Strategy::Mayangoli, static_cast<double>(letter_distance(word, letters))});
        }
    }
    rank(out);
    return out;
}

} // namespace tamilspell::mayangoli
