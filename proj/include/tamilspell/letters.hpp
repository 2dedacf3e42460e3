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

// Tamil script model: code-point screening, grapheme segmentation into
// letters (uyir, ayudham, mei, uyirmei) and mei/uyir (de)composition.
//
// A letter is the unit every suggestor edits. Consonant clusters are
// segmented greedily: consonant [+ pulli | + vowel sign]. The Grantha
// conjunct KSSA (U+0B95 U+0BCD U+0BB7) is a single consonant base.

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "unicode.hpp"

namespace tamilspell {

/// Tamil block screening: U+0B82..U+0BFA inclusive (2946..3066).
constexpr bool is_tamil_codepoint(char32_t cp) noexcept {
    return cp >= 2946 && cp <= 3066;
}

inline bool contains_tamil(std::string_view text) {
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto cp = utf8::next(text, pos);
        if (cp && is_tamil_codepoint(*cp)) {
            return true;
        }
    }
    return false;
}

namespace script {

inline constexpr char32_t ayudham = 0x0B83;
inline constexpr char32_t pulli = 0x0BCD;
inline constexpr char32_t ssa = 0x0BB7;
inline constexpr char32_t ka = 0x0B95;

/// Independent vowels in traditional order (அ .. ஔ).
inline constexpr std::array<char32_t, 12> uyir = {0x0B85, 0x0B86, 0x0B87, 0x0B88, 0x0B89, 0x0B8A,
                                                  0x0B8E, 0x0B8F, 0x0B90, 0x0B92, 0x0B93, 0x0B94};

/// Dependent vowel signs, index-aligned with `uyir`; அ has no sign.
inline constexpr std::array<char32_t, 12> vowel_sign = {0,      0x0BBE, 0x0BBF, 0x0BC0, 0x0BC1, 0x0BC2,
                                                        0x0BC6, 0x0BC7, 0x0BC8, 0x0BCA, 0x0BCB, 0x0BCC};

/// The 18 native consonants in traditional order (க ங ச ஞ ட ண த ந ப ம ய ர ல வ ழ ள ற ன).
inline constexpr std::array<char32_t, 18> consonants = {0x0B95, 0x0B99, 0x0B9A, 0x0B9E, 0x0B9F, 0x0BA3,
                                                        0x0BA4, 0x0BA8, 0x0BAA, 0x0BAE, 0x0BAF, 0x0BB0,
                                                        0x0BB2, 0x0BB5, 0x0BB4, 0x0BB3, 0x0BB1, 0x0BA9};

/// Single-code-point Grantha consonants (ஜ ஷ ஸ ஹ ஶ). க்ஷ is handled as a conjunct.
inline constexpr std::array<char32_t, 5> grantha_consonants = {0x0B9C, 0x0BB7, 0x0BB8, 0x0BB9, 0x0BB6};

constexpr bool is_consonant(char32_t cp) noexcept {
    return std::find(consonants.begin(), consonants.end(), cp) != consonants.end() ||
           std::find(grantha_consonants.begin(), grantha_consonants.end(), cp) != grantha_consonants.end();
}

constexpr bool is_uyir(char32_t cp) noexcept {
    return std::find(uyir.begin(), uyir.end(), cp) != uyir.end();
}

constexpr bool is_vowel_sign(char32_t cp) noexcept {
    return cp != 0 && std::find(vowel_sign.begin(), vowel_sign.end(), cp) != vowel_sign.end();
}

/// Combining marks that cannot start a cluster.
constexpr bool is_combining(char32_t cp) noexcept {
    return cp == 0x0B82 || is_vowel_sign(cp) || cp == pulli || cp == 0x0BD7;
}

} // namespace script

enum class LetterKind {
    Uyir,
    Ayudham,
    Mei,
    UyirMei,
    Other,     ///< any non-Tamil-letter code point, passed through as its own token
    Malformed, ///< dangling vowel sign or pulli
};

/// One grapheme cluster. Equality and ordering are by text; the kind is a
/// function of the text.
struct TamilLetter {
    std::string text;
    LetterKind kind = LetterKind::Other;

    bool is_letter() const noexcept { return kind != LetterKind::Other && kind != LetterKind::Malformed; }

    /// Parses exactly one token; throws std::invalid_argument otherwise.
    static TamilLetter parse(std::string_view text);

    friend bool operator==(const TamilLetter& a, const TamilLetter& b) noexcept { return a.text == b.text; }
    friend std::strong_ordering operator<=>(const TamilLetter& a, const TamilLetter& b) noexcept {
        return a.text <=> b.text;
    }
};

/// A word as an ordered letter sequence.
using LetterWord = std::vector<TamilLetter>;

namespace detail {

inline std::u32string_view consonant_base(std::u32string_view cps, std::size_t i) {
    if (cps[i] == script::ka && i + 2 < cps.size() && cps[i + 1] == script::pulli && cps[i + 2] == script::ssa) {
        return cps.substr(i, 3);
    }
    return cps.substr(i, 1);
}

} // namespace detail

/// Greedy segmentation. Concatenating the token texts reproduces `text`.
/// Input is expected to be NFC; ill-formed UTF-8 throws std::invalid_argument.
inline LetterWord tokenize(std::string_view text) {
    const std::u32string cps = utf8::decode(text);
    LetterWord out;
    std::size_t i = 0;
    while (i < cps.size()) {
        const char32_t cp = cps[i];
        TamilLetter tok;
        std::size_t len = 1;
        if (script::is_consonant(cp)) {
            len = detail::consonant_base(cps, i).size();
            if (i + len < cps.size() && cps[i + len] == script::pulli) {
                tok.kind = LetterKind::Mei;
                ++len;
            } else {
                tok.kind = LetterKind::UyirMei;
                if (i + len < cps.size() && script::is_vowel_sign(cps[i + len])) {
                    ++len;
                }
            }
        } else if (script::is_uyir(cp)) {
            tok.kind = LetterKind::Uyir;
        } else if (cp == script::ayudham) {
            tok.kind = LetterKind::Ayudham;
        } else if (script::is_combining(cp)) {
            tok.kind = LetterKind::Malformed;
        } else {
            tok.kind = LetterKind::Other;
        }
        tok.text = utf8::encode(std::u32string_view(cps).substr(i, len));
        out.push_back(std::move(tok));
        i += len;
    }
    return out;
}

inline TamilLetter TamilLetter::parse(std::string_view text) {
    auto toks = tokenize(text);
    if (toks.size() != 1) {
        throw std::invalid_argument("not a single letter: '" + std::string(text) + "'");
    }
    return std::move(toks.front());
}

inline std::string join(std::span<const TamilLetter> letters) {
    std::string out;
    for (const auto& l : letters) {
        out += l.text;
    }
    return out;
}

inline bool is_well_formed(std::span<const TamilLetter> letters) {
    return std::none_of(letters.begin(), letters.end(),
                        [](const TamilLetter& l) { return l.kind == LetterKind::Malformed; });
}

struct MeiUyir {
    TamilLetter mei;
    TamilLetter uyir;
};

/// Decomposes an uyirmei into (mei, uyir); a bare consonant carries the
/// implicit அ. Uyir, ayudham and mei letters are not composite: nullopt.
inline std::optional<MeiUyir> split_mei_uyir(const TamilLetter& letter) {
    if (!letter.is_letter()) {
        throw std::invalid_argument("not a Tamil letter: '" + letter.text + "'");
    }
    if (letter.kind != LetterKind::UyirMei) {
        return std::nullopt;
    }
    std::u32string cps = utf8::decode(letter.text);
    std::size_t vowel = 0;
    if (script::is_vowel_sign(cps.back())) {
        auto it = std::find(script::vowel_sign.begin(), script::vowel_sign.end(), cps.back());
        vowel = static_cast<std::size_t>(it - script::vowel_sign.begin());
        cps.pop_back();
    }
    cps.push_back(script::pulli);
    return MeiUyir{TamilLetter{utf8::encode(cps), LetterKind::Mei},
                   TamilLetter{utf8::encode(std::u32string(1, script::uyir[vowel])), LetterKind::Uyir}};
}

inline std::optional<MeiUyir> split_mei_uyir(std::string_view letter) {
    return split_mei_uyir(TamilLetter::parse(letter));
}

inline TamilLetter join_mei_uyir(const TamilLetter& mei, const TamilLetter& uyir) {
    if (mei.kind != LetterKind::Mei) {
        throw std::invalid_argument("not a mei letter: '" + mei.text + "'");
    }
    if (uyir.kind != LetterKind::Uyir) {
        throw std::invalid_argument("not an uyir letter: '" + uyir.text + "'");
    }
    std::u32string cps = utf8::decode(mei.text);
    cps.pop_back();
    const char32_t v = utf8::decode(uyir.text).front();
    auto it = std::find(script::uyir.begin(), script::uyir.end(), v);
    const char32_t sign = script::vowel_sign[static_cast<std::size_t>(it - script::uyir.begin())];
    if (sign != 0) {
        cps.push_back(sign);
    }
    return TamilLetter{utf8::encode(cps), LetterKind::UyirMei};
}

inline TamilLetter join_mei_uyir(std::string_view mei, std::string_view uyir) {
    return join_mei_uyir(TamilLetter::parse(mei), TamilLetter::parse(uyir));
}

/// Ordered letter table. The plain table has 247 letters:
/// 12 uyir, ayudham, 18 mei, 216 uyirmei. The Grantha table adds the
/// 12 uyirmei of each of ஜ ஷ ஸ ஹ க்ஷ ஶ (72) and the mei of ஜ ஷ ஸ ஹ (4),
/// for 323. The mei forms க்ஷ் and ஶ் are left out of the table, though
/// tokenize still recognises them.
class Alphabet {
  public:
    static const Alphabet& tamil() {
        static const Alphabet table(false);
        return table;
    }

    static const Alphabet& with_grantha() {
        static const Alphabet table(true);
        return table;
    }

    static const Alphabet& get(bool grantha) { return grantha ? with_grantha() : tamil(); }

    /// An ad-hoc alphabet, e.g. a small test alphabet.
    explicit Alphabet(std::vector<TamilLetter> letters) : letters_(std::move(letters)) { index(); }

    std::span<const TamilLetter> letters() const noexcept { return letters_; }
    std::size_t size() const noexcept { return letters_.size(); }
    bool includes_grantha() const noexcept { return grantha_; }
    bool contains(const TamilLetter& l) const { return members_.contains(l.text); }

  private:
    explicit Alphabet(bool grantha) : grantha_(grantha) {
        auto single = [](char32_t cp) { return utf8::encode(std::u32string(1, cp)); };
        for (char32_t v : script::uyir) {
            letters_.push_back({single(v), LetterKind::Uyir});
        }
        letters_.push_back({single(script::ayudham), LetterKind::Ayudham});

        std::vector<std::u32string> bases;
        for (char32_t c : script::consonants) {
            bases.emplace_back(1, c);
        }
        for (const auto& b : bases) {
            letters_.push_back({utf8::encode(b + script::pulli), LetterKind::Mei});
        }
        auto add_uyirmei = [&](const std::u32string& base) {
            for (char32_t sign : script::vowel_sign) {
                letters_.push_back({utf8::encode(sign ? base + sign : base), LetterKind::UyirMei});
            }
        };
        for (const auto& b : bases) {
            add_uyirmei(b);
        }
        if (grantha) {
            const std::u32string kssa = {script::ka, script::pulli, script::ssa};
            std::vector<std::u32string> gbases = {U"ஜ", U"ஷ", U"ஸ", U"ஹ"};
            for (const auto& b : gbases) {
                letters_.push_back({utf8::encode(b + script::pulli), LetterKind::Mei});
            }
            gbases.push_back(kssa);
            gbases.emplace_back(1, char32_t{0x0BB6});
            for (const auto& b : gbases) {
                add_uyirmei(b);
            }
        }
        index();
    }

    void index() {
        for (const auto& l : letters_) {
            members_.insert(l.text);
        }
    }

    std::vector<TamilLetter> letters_;
    std::unordered_set<std::string> members_;
    bool grantha_ = false;
};

} // namespace tamilspell
