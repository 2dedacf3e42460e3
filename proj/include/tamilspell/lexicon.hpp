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
#include <cstdint>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "letters.hpp"

namespace tamilspell {

/// Membership and prefix queries over a word list. Implementations must be
/// safe for concurrent readers once published.
class WordSource {
  public:
    virtual ~WordSource() = default;

    virtual bool is_word(std::string_view word) const = 0;
    /// Exact membership for an already-normalized letter sequence.
    virtual bool contains(std::span<const TamilLetter> letters) const = 0;
    virtual bool prefix_exists(std::span<const TamilLetter> prefix) const = 0;
    /// Letters that extend `prefix` towards at least one stored word.
    virtual std::vector<TamilLetter> continuations(std::span<const TamilLetter> prefix) const = 0;
    virtual std::size_t word_count() const = 0;
};

/// In-memory trie keyed by letters (not code points).
class Lexicon final : public WordSource {
  public:
    Lexicon() : nodes_(1) {}

    /// Adds one word (normalized to NFC). Returns false if it was present.
    bool add_word(std::string_view word) {
        const std::string norm = normalize_nfc(word);
        if (norm.empty()) {
            return false;
        }
        std::uint32_t node = 0;
        for (auto& letter : tokenize(norm)) {
            auto& kids = nodes_[node].children;
            auto it = std::lower_bound(kids.begin(), kids.end(), letter,
                                       [](const Edge& e, const TamilLetter& l) { return e.first < l; });
            if (it != kids.end() && it->first == letter) {
                node = it->second;
                continue;
            }
            const auto next = static_cast<std::uint32_t>(nodes_.size());
            kids.insert(it, Edge{std::move(letter), next});
            nodes_.emplace_back();
            node = next;
        }
        if (nodes_[node].terminal) {
            return false;
        }
        nodes_[node].terminal = true;
        ++count_;
        return true;
    }

    bool is_word(std::string_view word) const override {
        if (word.empty() || !utf8::is_valid(word)) {
            return false;
        }
        const auto letters = tokenize(normalize_nfc(word));
        const auto node = find(letters);
        return node && nodes_[*node].terminal;
    }

    bool contains(std::span<const TamilLetter> letters) const override {
        const auto node = find(letters);
        return !letters.empty() && node && nodes_[*node].terminal;
    }

    bool prefix_exists(std::span<const TamilLetter> prefix) const override {
        if (prefix.empty()) {
            return count_ > 0;
        }
        return find(prefix).has_value();
    }

    std::vector<TamilLetter> continuations(std::span<const TamilLetter> prefix) const override {
        std::vector<TamilLetter> out;
        if (const auto node = find(prefix)) {
            for (const auto& [letter, child] : nodes_[*node].children) {
                out.push_back(letter);
            }
        }
        return out;
    }

    std::size_t word_count() const override { return count_; }

    // Node-level cursor for searches that extend many prefixes at once.
    using NodeId = std::uint32_t;
    using Edge = std::pair<TamilLetter, NodeId>;
    static constexpr NodeId root = 0;

    std::optional<NodeId> descend(NodeId from, std::span<const TamilLetter> letters) const {
        for (const auto& letter : letters) {
            const auto& kids = nodes_[from].children;
            auto it = std::lower_bound(kids.begin(), kids.end(), letter,
                                       [](const Edge& e, const TamilLetter& l) { return e.first < l; });
            if (it == kids.end() || !(it->first == letter)) {
                return std::nullopt;
            }
            from = it->second;
        }
        return from;
    }

    bool terminal(NodeId node) const { return nodes_[node].terminal; }
    std::span<const Edge> children(NodeId node) const { return nodes_[node].children; }

  private:

    struct Node {
        std::vector<Edge> children; // sorted by letter text
        bool terminal = false;
    };

    std::optional<NodeId> find(std::span<const TamilLetter> letters) const { return descend(root, letters); }

    std::vector<Node> nodes_;
    std::size_t count_ = 0;
};

namespace detail {

/// Reads logical lines: strips a leading BOM, trailing CR and surrounding
/// blanks; skips blank and '#' lines. Calls fn(line_no, line).
template <typename Fn>
void for_each_data_line(std::istream& in, Fn&& fn) {
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line_no == 1 && line.starts_with("\xEF\xBB\xBF")) {
            line.erase(0, 3);
        }
        if (!utf8::is_valid(line)) {
            throw ParseError(line_no, "invalid UTF-8");
        }
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') {
            continue;
        }
        const auto last = line.find_last_not_of(" \t\r");
        fn(line_no, std::string_view(line).substr(first, last - first + 1));
    }
}

} // namespace detail

/// One word per line, UTF-8; blank lines and '#' comments ignored.
inline void load_wordlist_into(Lexicon& lex, std::istream& in) {
    detail::for_each_data_line(in, [&](std::size_t, std::string_view word) { lex.add_word(word); });
}

inline Lexicon load_wordlist(std::istream& in) {
    Lexicon lex;
    load_wordlist_into(lex, in);
    return lex;
}

} // namespace tamilspell
