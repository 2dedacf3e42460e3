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

// Conjoined words: two lexicon words written without a separator.
//
// Plain splits cut between letters (தென்றல்|காற்று). Ottru splits cut inside
// an uyirmei letter, giving its mei to the left half and its uyir to the
// right half (யா -> ய் + ஆ).

#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "letters.hpp"
#include "lexicon.hpp"
#include "suggestion.hpp"

namespace tamilspell::conjoined {

enum class SplitKind { Plain, Ottru };

struct SplitPair {
    std::string left;
    std::string right;
    SplitKind kind = SplitKind::Plain;

    /// "left right", the rendering offered as a replacement.
    std::string rendered() const { return left + " " + right; }

    friend bool operator==(const SplitPair&, const SplitPair&) = default;
};

inline std::vector<SplitPair> generate_ottru_splits(const LetterWord& word) {
    std::vector<SplitPair> out;
    for (std::size_t idx = 0; idx < word.size(); ++idx) {
        if (word[idx].kind != LetterKind::UyirMei) {
            continue;
        }
        const auto parts = split_mei_uyir(word[idx]);
        const std::span<const TamilLetter> letters(word);
        out.push_back({join(letters.first(idx)) + parts->mei.text, parts->uyir.text + join(letters.subspan(idx + 1)),
                       SplitKind::Ottru});
    }
    return out;
}

inline std::vector<SplitPair> generate_plain_splits(const LetterWord& word) {
    std::vector<SplitPair> out;
    const std::span<const TamilLetter> letters(word);
    for (std::size_t i = 1; i < word.size(); ++i) {
        out.push_back({join(letters.first(i)), join(letters.subspan(i)), SplitKind::Plain});
    }
    return out;
}

/// Splits whose halves are both lexicon words: plain splits first, then
/// ottru splits, each in position order. A non-empty result means the word
/// is a valid conjoined form.
inline std::vector<SplitPair> recognize(const LetterWord& word, const WordSource& lex) {
    std::vector<SplitPair> out;
    std::set<std::pair<std::string, std::string>> seen;
    auto take = [&](std::vector<SplitPair> pairs) {
        for (auto& p : pairs) {
            if (lex.contains(tokenize(p.left)) && lex.contains(tokenize(p.right)) &&
                seen.emplace(p.left, p.right).second) {
                out.push_back(std::move(p));
            }
        }
    };
    take(generate_plain_splits(word));
    take(generate_ottru_splits(word));
    return out;
}

/// Recognized splits rendered as suggestions with score 0.
inline std::vector<Suggestion> suggest(const LetterWord& word, const WordSource& lex) {
    std::vector<Suggestion> out;
    for (const auto& p : recognize(word, lex)) {
        out.push_back({p.rendered(), Strategy::Conjoined, 0.0});
    }
    return out;
}

} // namespace tamilspell::conjoined
