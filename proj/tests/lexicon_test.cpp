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

#include <random>
#include <set>
#include <sstream>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "tamilspell/lexicon.hpp"

using namespace tamilspell;

TEST(LoadWordlist, SkipsCommentsAndBlanks) {
    std::istringstream in("பழம்\nபலம்\n# note\n\n");
    const auto lex = load_wordlist(in);
    EXPECT_EQ(lex.word_count(), 2u);
    EXPECT_TRUE(lex.is_word("பழம்"));
    EXPECT_TRUE(lex.is_word("பலம்"));
}

TEST(LoadWordlist, EmptyStream) {
    std::istringstream in("");
    EXPECT_EQ(load_wordlist(in).word_count(), 0u);
}

TEST(LoadWordlist, DuplicatesCountOnce) {
    std::istringstream in("கல்\nகல்\n");
    EXPECT_EQ(load_wordlist(in).word_count(), 1u);
}

TEST(LoadWordlist, CrlfAndBom) {
    std::istringstream in("\xEF\xBB\xBFகல்\r\nமரம்\r\n");
    const auto lex = load_wordlist(in);
    EXPECT_EQ(lex.word_count(), 2u);
    EXPECT_TRUE(lex.is_word("கல்"));
    EXPECT_TRUE(lex.is_word("மரம்"));
}

TEST(LoadWordlist, UndecodableBytesReportLine) {
    std::istringstream in("கல்\nமரம்\nab\xff\n");
    try {
        load_wordlist(in);
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 3u);
    }
}

TEST(LoadWordlist, NormalizesToNfc) {
    std::istringstream in("\u0B95\u0BC6\u0BBE\u0B9F\u0BC1\n"); // decomposed form of கொடு
    const auto lex = load_wordlist(in);
    EXPECT_TRUE(lex.is_word("\u0B95\u0BCA\u0B9F\u0BC1"));
    EXPECT_TRUE(lex.is_word("\u0B95\u0BC6\u0BBE\u0B9F\u0BC1"));
}

TEST(IsWord, Examples) {
    const auto lex = oracle::lexicon({"பழம்"});
    EXPECT_TRUE(lex.is_word("பழம்"));
    EXPECT_FALSE(lex.is_word("பளம்"));
    EXPECT_FALSE(lex.is_word(""));
    EXPECT_FALSE(lex.is_word("பழ"));
    EXPECT_FALSE(lex.is_word("\xff"));
}

TEST(PrefixExists, Examples) {
    const auto lex = oracle::lexicon({"கல்"});
    EXPECT_TRUE(lex.prefix_exists(tokenize("க")));
    EXPECT_TRUE(lex.prefix_exists(tokenize("கல்")));
    EXPECT_FALSE(lex.prefix_exists(tokenize("ம்")));
    EXPECT_FALSE(lex.prefix_exists(tokenize("கல்ம")));
    EXPECT_TRUE(lex.prefix_exists({}));
    EXPECT_FALSE(Lexicon{}.prefix_exists({}));
}

TEST(PrefixExists, KeysAreLettersNotCodePoints) {
    // கா is one letter; its first code point alone (க) is a different letter.
    const auto lex = oracle::lexicon({"காடு"});
    EXPECT_FALSE(lex.prefix_exists(tokenize("க")));
    EXPECT_TRUE(lex.prefix_exists(tokenize("கா")));
}

TEST(Continuations, ListsNextLetters) {
    const auto lex = oracle::lexicon({"கல்", "கடல்", "கரை"});
    std::set<std::string> next;
    for (const auto& l : lex.continuations(tokenize("க"))) {
        next.insert(l.text);
    }
    EXPECT_EQ(next, (std::set<std::string>{"ல்", "ட", "ரை"}));
    EXPECT_TRUE(lex.continuations(tokenize("ம")).empty());
}

TEST(LexiconProperty, AgreesWithSetOracle) {
    std::mt19937 rng(7);
    const auto letters = oracle::letters({"க", "ல்", "ம", "அ", "ழ"});
    std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
    std::uniform_int_distribution<int> len(1, 4);
    auto random_word = [&] {
        LetterWord w;
        for (int i = len(rng); i > 0; --i) {
            w.push_back(letters[pick(rng)]);
        }
        return w;
    };
    for (int trial = 0; trial < 200; ++trial) {
        Lexicon lex;
        std::set<std::string> truth;
        std::set<std::string> prefixes;
        for (int i = 0; i < 8; ++i) {
            const auto w = random_word();
            lex.add_word(join(w));
            truth.insert(join(w));
            for (std::size_t k = 0; k <= w.size(); ++k) {
                prefixes.insert(join(std::span<const TamilLetter>(w).first(k)));
            }
        }
        ASSERT_EQ(lex.word_count(), truth.size());
        for (int probe = 0; probe < 30; ++probe) {
            const auto w = random_word();
            ASSERT_EQ(lex.is_word(join(w)), truth.contains(join(w)));
            ASSERT_EQ(lex.prefix_exists(w), prefixes.contains(join(w)));
        }
        for (const auto& p : prefixes) {
            ASSERT_TRUE(lex.prefix_exists(tokenize(p)));
        }
    }
}

TEST(Fixture, ContainsExampleWords) {
    const auto lex = oracle::fixture_lexicon();
    EXPECT_GE(lex.word_count(), 200u);
    for (const char* w : {"பழம்", "பலம்", "தென்றல்", "காற்று", "அன்பே", "சிவம்", "கணினி", "யார்"}) {
        EXPECT_TRUE(lex.is_word(w)) << w;
    }
    for (const char* w : {"பளம்", "தென்றல்காற்று", "யாரிகுழந்து"}) {
        EXPECT_FALSE(lex.is_word(w)) << w;
    }
}
