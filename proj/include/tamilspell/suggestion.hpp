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

#include <algorithm>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "letters.hpp"

namespace tamilspell {

/// Declared in merge-priority order: on equal score, earlier wins.
enum class Strategy { Conjoined, Mayangoli, Keyboard, Edit, Foreign };

inline std::string_view to_string(Strategy s) noexcept {
    switch (s) {
    case Strategy::Conjoined: return "conjoined";
    case Strategy::Mayangoli: return "mayangoli";
    case Strategy::Keyboard: return "keyboard";
    case Strategy::Edit: return "edit";
    case Strategy::Foreign: return "foreign";
    }
    return "unknown";
}

struct Suggestion {
    std::string candidate;
    Strategy strategy = Strategy::Edit;
    double score = 0.0; ///< lower is better, never negative

    friend bool operator==(const Suggestion&, const Suggestion&) = default;
};

/// Unrestricted Damerau-Levenshtein distance over letters (insert, delete,
/// substitute, swap adjacent), i.e. the length of the shortest edit chain.
inline std::size_t letter_distance(std::span<const TamilLetter> a, std::span<const TamilLetter> b) {
    const std::size_t n = a.size();
    const std::size_t m = b.size();
    const std::size_t inf = n + m + 1;
    // (n+2) x (m+2) table with a sentinel row/column.
    std::vector<std::size_t> d((n + 2) * (m + 2), 0);
    auto at = [&](std::size_t i, std::size_t j) -> std::size_t& { return d[i * (m + 2) + j]; };
    at(0, 0) = inf;
    for (std::size_t i = 0; i <= n; ++i) {
        at(i + 1, 0) = inf;
        at(i + 1, 1) = i;
    }
    for (std::size_t j = 0; j <= m; ++j) {
        at(0, j + 1) = inf;
        at(1, j + 1) = j;
    }
    std::map<std::string_view, std::size_t> last_row;
    for (std::size_t i = 1; i <= n; ++i) {
        std::size_t last_match_col = 0;
        for (std::size_t j = 1; j <= m; ++j) {
            auto it = last_row.find(b[j - 1].text);
            const std::size_t i1 = it == last_row.end() ? 0 : it->second;
            const std::size_t j1 = last_match_col;
            std::size_t cost = 1;
            if (a[i - 1] == b[j - 1]) {
                cost = 0;
                last_match_col = j;
            }
            at(i + 1, j + 1) = std::min({at(i, j) + cost, at(i + 1, j) + 1, at(i, j + 1) + 1,
                                         at(i1, j1) + (i - i1 - 1) + 1 + (j - j1 - 1)});
        }
        last_row[a[i - 1].text] = i;
    }
    return at(n + 1, m + 1);
}

inline std::size_t letter_distance(std::string_view a, std::string_view b) {
    return letter_distance(tokenize(a), tokenize(b));
}

/// Sorts by (score, strategy priority, candidate code points).
inline void rank(std::vector<Suggestion>& list) {
    std::stable_sort(list.begin(), list.end(), [](const Suggestion& x, const Suggestion& y) {
        if (x.score != y.score) {
            return x.score < y.score;
        }
        if (x.strategy != y.strategy) {
            return x.strategy < y.strategy;
        }
        return x.candidate < y.candidate;
    });
}

} // namespace tamilspell
