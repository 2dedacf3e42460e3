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

// Keyboard typo correction: substitution-only search over a confusion
// matrix of key-adjacent letters. Insertions and deletions are not modelled.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "letters.hpp"
#include "lexicon.hpp"
#include "suggest_edit.hpp"
#include "suggestion.hpp"

namespace tamilspell::keyboard {

/// Letter -> ordered key-adjacent alternates. Keys are normally base
/// consonants (அ-form) and uyir; see neighbors() for how other uyirmei
/// forms are looked up.
class ConfusionMatrix {
  public:
    /// Throws std::invalid_argument on a self-neighbor or a repeated key.
    void add(const TamilLetter& key, std::vector<TamilLetter> alternates) {
        for (const auto& alt : alternates) {
            if (alt == key) {
                throw std::invalid_argument("letter lists itself as a neighbor: '" + key.text + "'");
            }
        }
        if (!table_.emplace(key.text, std::move(alternates)).second) {
            throw std::invalid_argument("repeated key: '" + key.text + "'");
        }
    }

    /// Exact entry; an unmapped letter has no alternates.
    const std::vector<TamilLetter>& get(const TamilLetter& letter) const {
        static const std::vector<TamilLetter> none;
        auto it = table_.find(letter.text);
        return it == table_.end() ? none : it->second;
    }

    /// Alternates for a letter in a word. Without an exact entry, a mei or
    /// uyirmei letter is looked up by its base consonant, and each consonant
    /// alternate is re-joined with the original vowel (or left as mei).
    std::vector<TamilLetter> neighbors(const TamilLetter& letter) const {
        if (table_.contains(letter.text) || (letter.kind != LetterKind::UyirMei && letter.kind != LetterKind::Mei)) {
            return get(letter);
        }
        const std::string& t = letter.text;
        std::optional<MeiUyir> parts;
        TamilLetter mei;
        if (letter.kind == LetterKind::UyirMei) {
            parts = split_mei_uyir(letter);
            mei = parts->mei;
        } else {
            mei = letter;
        }
        const TamilLetter base = join_mei_uyir(mei, TamilLetter::parse("அ"));
        std::vector<TamilLetter> out;
        for (const auto& alt : get(base)) {
            TamilLetter alt_mei;
            if (alt.kind == LetterKind::Mei) {
                alt_mei = alt;
            } else if (alt.kind == LetterKind::UyirMei) {
                alt_mei = split_mei_uyir(alt)->mei;
            } else {
                continue;
            }
            TamilLetter mapped = parts ? join_mei_uyir(alt_mei, parts->uyir) : alt_mei;
            if (mapped.text != t && std::find(out.begin(), out.end(), mapped) == out.end()) {
                out.push_back(std::move(mapped));
            }
        }
        return out;
    }

    std::size_t size() const noexcept { return table_.size(); }
    bool empty() const noexcept { return table_.empty(); }

  private:
    std::map<std::string, std::vector<TamilLetter>> table_;
};

/// Lines of "letter<TAB>alt1 alt2 ...", UTF-8, '#' comments.
inline ConfusionMatrix load_confusion_matrix(std::istream& in) {
    ConfusionMatrix cm;
    auto parse_letter = [](std::size_t line_no, std::string_view field) {
        TamilLetter l;
        try {
            l = TamilLetter::parse(normalize_nfc(field));
        } catch (const std::invalid_argument& e) {
            throw ParseError(line_no, e.what());
        }
        if (l.kind == LetterKind::Malformed) {
            throw ParseError(line_no, "malformed letter: '" + std::string(field) + "'");
        }
        return l;
    };
    tamilspell::detail::for_each_data_line(in, [&](std::size_t line_no, std::string_view line) {
        const auto tab = line.find('\t');
        if (tab == std::string_view::npos) {
            throw ParseError(line_no, "expected letter<TAB>alternates");
        }
        auto key_field = line.substr(0, tab);
        while (!key_field.empty() && key_field.back() == ' ') {
            key_field.remove_suffix(1);
        }
        const TamilLetter key = parse_letter(line_no, key_field);
        std::vector<TamilLetter> alts;
        std::istringstream fields{std::string(line.substr(tab + 1))};
        std::string field;
        while (fields >> field) {
            alts.push_back(parse_letter(line_no, field));
        }
        try {
            cm.add(key, std::move(alts));
        } catch (const std::invalid_argument& e) {
            throw ParseError(line_no, e.what());
        }
    });
    return cm;
}

namespace detail {

template <typename Fn>
void substitute(LetterWord& w, const std::vector<std::vector<TamilLetter>>& nbrs, std::size_t from, int remaining,
                Fn& emit) {
    for (std::size_t p = from; p < w.size(); ++p) {
        if (nbrs[p].empty()) {
            continue;
        }
        const TamilLetter original = w[p];
        for (const auto& alt : nbrs[p]) {
            w[p] = alt;
            if (remaining == 1) {
                emit(w);
            } else {
                substitute(w, nbrs, p + 1, remaining - 1, emit);
            }
        }
        w[p] = original;
    }
}

} // namespace detail

/// All distinct words reachable by replacing letters with their matrix
/// alternates at 1..ed distinct positions. Positions are explored in
/// increasing order and letters without alternates prune their subtree.
/// Output is first-found order: by substitution count, then position.
inline std::vector<std::string> generate_patterns(const LetterWord& word, const ConfusionMatrix& cm, int ed) {
    if (ed < 1 || static_cast<std::size_t>(ed) > word.size()) {
        throw std::invalid_argument("edit distance must be within [1, word length]; ins/del are not explored");
    }
    std::vector<std::vector<TamilLetter>> nbrs;
    nbrs.reserve(word.size());
    for (const auto& l : word) {
        nbrs.push_back(cm.neighbors(l));
    }
    const std::string source = join(word);
    std::vector<std::string> out;
    std::unordered_set<std::string> seen{source};
    auto emit = [&](const LetterWord& w) {
        if (!edit::resegments_cleanly(w)) {
            return;
        }
        std::string text = join(w);
        if (seen.insert(text).second) {
            out.push_back(std::move(text));
        }
    };
    LetterWord w = word;
    for (int k = 1; k <= ed; ++k) {
        detail::substitute(w, nbrs, 0, k, emit);
    }
    return out;
}

/// Size of the unpruned substitution lattice: words differing from an
/// n-letter word at 1..ed positions over an alphabet of A letters,
/// sum_j C(n, j) (A - 1)^j.
inline std::uint64_t full_lattice_size(std::size_t n, int ed, std::size_t alphabet_size) {
    std::uint64_t total = 0;
    std::uint64_t binom = 1;
    std::uint64_t power = 1;
    for (std::size_t j = 1; j <= static_cast<std::size_t>(ed) && j <= n; ++j) {
        binom = binom * (n - j + 1) / j;
        power *= alphabet_size - 1;
        total += binom * power;
    }
    return total;
}

/// Keyboard corrections present in the lexicon, ranked by substitution
/// count then code points. The score is the substitution count.
inline std::vector<Suggestion> corrections(const LetterWord& word, const WordSource& lex, const ConfusionMatrix& cm,
                                           int ed = 2) {
    std::vector<Suggestion> out;
    for (auto& text : generate_patterns(word, cm, ed)) {
        const auto letters = tokenize(text);
        if (!lex.contains(letters)) {
            continue;
        }
        std::size_t subs = 0;
        for (std::size_t i = 0; i < word.size(); ++i) {
            subs += word[i] == letters[i] ? 0 : 1;
        }
        out.push_back({std::move(text), Strategy::Keyboard, static_cast<double>(subs)});
    }
    rank(out);
    return out;
}

} // namespace tamilspell::keyboard
