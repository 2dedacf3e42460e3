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

// Norvig-style candidate generation at letter granularity.
//
// Splits are the standard (word[:i], word[i:]) for i in 0..n. The variant
// that drops the letter before the split point and the "replace the whole
// prefix" set are not generated; both produce corrupted words.

#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "letters.hpp"
#include "lexicon.hpp"
#include "suggestion.hpp"

namespace tamilspell::edit {

inline constexpr std::size_t unlimited = std::numeric_limits<std::size_t>::max();

/// Raw one-edit families, with multiplicity, in generation order.
struct EditFamilies {
    std::vector<LetterWord> deletes;
    std::vector<LetterWord> transposes;
    std::vector<LetterWord> replaces;
    std::vector<LetterWord> inserts;
};

/// True if the letters concatenate and re-segment to exactly themselves:
/// no malformed token, and no க் directly before a ஷ-initial letter
/// (which would fuse into the க்ஷ conjunct).
inline bool resegments_cleanly(std::span<const TamilLetter> letters) {
    for (std::size_t i = 0; i < letters.size(); ++i) {
        if (letters[i].kind == LetterKind::Malformed) {
            return false;
        }
        if (i > 0 && letters[i - 1].text == "க்" && letters[i].text.starts_with("ஷ")) {
            return false;
        }
    }
    return true;
}

namespace detail {

/// Calls fn(LetterWord&&) for every one-edit neighbor in the fixed order
/// deletes, transposes, replaces, inserts; stops when fn returns false.
template <typename Fn>
bool for_each_edit1(const LetterWord& word, const Alphabet& alphabet, Fn&& fn) {
    const std::size_t n = word.size();
    for (std::size_t i = 0; i < n; ++i) {
        LetterWord w;
        w.reserve(n - 1);
        w.insert(w.end(), word.begin(), word.begin() + static_cast<std::ptrdiff_t>(i));
        w.insert(w.end(), word.begin() + static_cast<std::ptrdiff_t>(i + 1), word.end());
        if (!fn(std::move(w))) {
            return false;
        }
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
        LetterWord w = word;
        std::swap(w[i], w[i + 1]);
        if (!fn(std::move(w))) {
            return false;
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (const auto& c : alphabet.letters()) {
            LetterWord w = word;
            w[i] = c;
            if (!fn(std::move(w))) {
                return false;
            }
        }
    }
    for (std::size_t i = 0; i <= n; ++i) {
        for (const auto& c : alphabet.letters()) {
            LetterWord w;
            w.reserve(n + 1);
            w.insert(w.end(), word.begin(), word.begin() + static_cast<std::ptrdiff_t>(i));
            w.push_back(c);
            w.insert(w.end(), word.begin() + static_cast<std::ptrdiff_t>(i), word.end());
            if (!fn(std::move(w))) {
                return false;
            }
        }
    }
    return true;
}

} // namespace detail

inline EditFamilies edit_families(const LetterWord& word, const Alphabet& alphabet) {
    EditFamilies f;
    const std::size_t n = word.size();
    std::size_t seen = 0;
    detail::for_each_edit1(word, alphabet, [&](LetterWord&& w) {
        const std::size_t k = seen++;
        const std::size_t a = alphabet.size();
        if (k < n) {
            f.deletes.push_back(std::move(w));
        } else if (k < n + (n ? n - 1 : 0)) {
            f.transposes.push_back(std::move(w));
        } else if (k < n + (n ? n - 1 : 0) + n * a) {
            f.replaces.push_back(std::move(w));
        } else {
            f.inserts.push_back(std::move(w));
        }
        return true;
    });
    return f;
}

/// Insertion-ordered, duplicate-free candidate set with a hard size cap.
class EditCandidateSet {
  public:
    EditCandidateSet(int edit_distance, std::size_t limit) : edit_distance_(edit_distance), limit_(limit) {}

    /// Returns false once the cap is reached (the candidate is then dropped).
    bool add(LetterWord&& letters) {
        if (full()) {
            return false;
        }
        if (!resegments_cleanly(letters)) {
            return true;
        }
        std::string text = join(letters);
        if (seen_.insert(text).second) {
            texts_.push_back(std::move(text));
            words_.push_back(std::move(letters));
        }
        return !full();
    }

    bool full() const noexcept { return texts_.size() >= limit_; }
    bool contains(const std::string& text) const { return seen_.contains(text); }
    std::size_t size() const noexcept { return texts_.size(); }
    bool empty() const noexcept { return texts_.empty(); }
    int edit_distance() const noexcept { return edit_distance_; }
    std::size_t limit() const noexcept { return limit_; }

    const std::vector<std::string>& candidates() const noexcept { return texts_; }
    const std::vector<LetterWord>& words() const noexcept { return words_; }

  private:
    int edit_distance_;
    std::size_t limit_;
    std::vector<std::string> texts_;
    std::vector<LetterWord> words_;
    std::unordered_set<std::string> seen_;
};

inline EditCandidateSet edits1(const LetterWord& word, const Alphabet& alphabet, std::size_t limit = unlimited) {
    if (word.empty()) {
        throw std::invalid_argument("edits1: empty word");
    }
    EditCandidateSet out(1, limit);
    if (limit > 0) {
        detail::for_each_edit1(word, alphabet, [&](LetterWord&& w) { return out.add(std::move(w)); });
    }
    return out;
}

/// Neighbors at `nedits` chained edits: edits1 applied to every member of
/// the previous generation, sharing one size cap.
inline EditCandidateSet edits_n(const LetterWord& word, const Alphabet& alphabet, int nedits,
                                std::size_t limit = unlimited) {
    if (nedits < 1) {
        throw std::invalid_argument("edits_n: nedits must be >= 1");
    }
    EditCandidateSet level = edits1(word, alphabet, limit);
    for (int k = 2; k <= nedits; ++k) {
        EditCandidateSet next(k, limit);
        for (const auto& member : level.words()) {
            if (next.full() ||
                !detail::for_each_edit1(member, alphabet, [&](LetterWord&& w) { return next.add(std::move(w)); })) {
                break;
            }
        }
        level = std::move(next);
    }
    return level;
}

namespace detail {

/// Lexicon words among edits1(member), found by walking the trie along the
/// member and abandoning a split point as soon as its prefix leaves the trie.
template <typename Fn>
void for_each_word_edit1(const LetterWord& m, const WordSource& lex, const Alphabet& alphabet, Fn&& emit) {
    const std::size_t n = m.size();
    LetterWord cand;
    auto offer = [&]() {
        if (resegments_cleanly(cand) && lex.contains(cand)) {
            emit(cand);
        }
    };
    for (std::size_t i = 0; i <= n; ++i) {
        const std::span<const TamilLetter> prefix(m.data(), i);
        if (!lex.prefix_exists(prefix)) {
            break;
        }
        auto head = [&] { cand.assign(m.begin(), m.begin() + static_cast<std::ptrdiff_t>(i)); };
        auto tail = [&](std::size_t from) {
            cand.insert(cand.end(), m.begin() + static_cast<std::ptrdiff_t>(from), m.end());
        };
        if (i < n) {
            head();
            tail(i + 1);
            offer();
        }
        if (i + 1 < n) {
            head();
            cand.push_back(m[i + 1]);
            cand.push_back(m[i]);
            tail(i + 2);
            offer();
        }
        for (const auto& c : lex.continuations(prefix)) {
            if (!alphabet.contains(c)) {
                continue;
            }
            if (i < n) {
                head();
                cand.push_back(c);
                tail(i + 1);
                offer();
            }
            head();
            cand.push_back(c);
            tail(i);
            offer();
        }
    }
}

/// Same walk over the concrete trie, resuming from node handles instead of
/// re-querying every candidate from the root.
template <typename Fn>
void for_each_word_edit1(const LetterWord& m, const Lexicon& lex, const Alphabet& alphabet, Fn&& emit) {
    const std::size_t n = m.size();
    const std::span<const TamilLetter> letters(m);
    LetterWord cand;
    auto hit = [&](std::optional<Lexicon::NodeId> node) { return node && lex.terminal(*node); };
    auto offer = [&](std::size_t i, const TamilLetter* a, const TamilLetter* b, std::size_t from) {
        cand.assign(m.begin(), m.begin() + static_cast<std::ptrdiff_t>(i));
        if (a) {
            cand.push_back(*a);
        }
        if (b) {
            cand.push_back(*b);
        }
        cand.insert(cand.end(), m.begin() + static_cast<std::ptrdiff_t>(from), m.end());
        if (!cand.empty() && resegments_cleanly(cand)) {
            emit(cand);
        }
    };
    Lexicon::NodeId node = Lexicon::root;
    for (std::size_t i = 0; i <= n; ++i) {
        if (i > 0) {
            const auto next = lex.descend(node, letters.subspan(i - 1, 1));
            if (!next) {
                break;
            }
            node = *next;
        }
        if (i < n && hit(lex.descend(node, letters.subspan(i + 1)))) {
            offer(i, nullptr, nullptr, i + 1);
        }
        if (i + 1 < n) {
            auto swapped = lex.descend(node, letters.subspan(i + 1, 1));
            if (swapped) {
                swapped = lex.descend(*swapped, letters.subspan(i, 1));
            }
            if (swapped && hit(lex.descend(*swapped, letters.subspan(i + 2)))) {
                offer(i, &m[i + 1], &m[i], i + 2);
            }
        }
        for (const auto& [c, child] : lex.children(node)) {
            if (!alphabet.contains(c)) {
                continue;
            }
            if (i < n && hit(lex.descend(child, letters.subspan(i + 1)))) {
                offer(i, &c, nullptr, i + 1);
            }
            if (hit(lex.descend(child, letters.subspan(i)))) {
                offer(i, &c, nullptr, i);
            }
        }
    }
}

} // namespace detail

/// Lexicon words within `nedits` letter edits of `word` (source excluded),
/// ranked by distance then code points; score is the letter distance.
///
/// With an unlimited budget the search walks the lexicon trie instead of
/// materialising the last generation; the result is the same set as
/// filtering edits_n(word, k) for k = 1..nedits. A finite `limit` caps the
/// generated candidate sets exactly as edits_n does.
inline std::vector<Suggestion> suggest(const LetterWord& word, const WordSource& lex, const Alphabet& alphabet,
                                       int nedits, std::size_t limit = unlimited) {
    if (nedits < 1) {
        throw std::invalid_argument("suggest: nedits must be >= 1");
    }
    std::vector<Suggestion> out;
    if (word.empty() || lex.word_count() == 0) {
        return out;
    }
    const std::string source = join(word);
    std::unordered_set<std::string> found;
    auto keep = [&](const std::string& text) {
        if (text != source) {
            found.insert(text);
        }
    };

    if (limit == unlimited) {
        std::vector<LetterWord> frontier{word};
        std::unordered_set<std::string> frontier_seen{source};
        if (nedits > 1) {
            for (int k = 1; k < nedits; ++k) {
                const auto level = edits_n(word, alphabet, k);
                for (const auto& w : level.words()) {
                    if (frontier_seen.insert(join(w)).second) {
                        frontier.push_back(w);
                    }
                }
            }
        }
        const auto* trie = dynamic_cast<const Lexicon*>(&lex);
        for (const auto& member : frontier) {
            if (trie) {
                detail::for_each_word_edit1(member, *trie, alphabet, [&](const LetterWord& w) { keep(join(w)); });
            } else {
                detail::for_each_word_edit1(member, lex, alphabet, [&](const LetterWord& w) { keep(join(w)); });
            }
        }
    } else {
        for (int k = 1; k <= nedits; ++k) {
            const auto set = edits_n(word, alphabet, k, limit);
            for (std::size_t i = 0; i < set.size(); ++i) {
                if (lex.contains(set.words()[i])) {
                    keep(set.candidates()[i]);
                }
            }
        }
    }

    out.reserve(found.size());
    for (const auto& text : found) {
        out.push_back({text, Strategy::Edit, static_cast<double>(letter_distance(word, tokenize(text)))});
    }
    rank(out);
    return out;
}

} // namespace tamilspell::edit
