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

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "tamilspell/suggest_edit.hpp"

using namespace tamilspell;

namespace {

const Alphabet& two_letters() {
    static const Alphabet a(oracle::letters({"அ", "க"}));
    return a;
}

const Alphabet& five_letters() {
    static const Alphabet a(oracle::letters({"அ", "க", "ல", "ம்", "ழ"}));
    return a;
}

LetterWord from_symbols(const oracle::Symbols& s, const Alphabet& a) {
    LetterWord w;
    for (int i : s) {
        w.push_back(a.letters()[static_cast<std::size_t>(i)]);
    }
    return w;
}

std::set<std::string> as_set(const std::vector<std::string>& v) {
    return {v.begin(), v.end()};
}

std::set<std::string> texts(const std::vector<LetterWord>& ws) {
    std::set<std::string> out;
    for (const auto& w : ws) {
        out.insert(join(w));
    }
    return out;
}

/// All words of length n over the alphabet, as symbol strings.
std::vector<oracle::Symbols> all_words(std::size_t n, int alphabet) {
    std::vector<oracle::Symbols> out{{}};
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<oracle::Symbols> next;
        for (const auto& w : out) {
            for (int c = 0; c < alphabet; ++c) {
                auto v = w;
                v.push_back(c);
                next.push_back(std::move(v));
            }
        }
        out = std::move(next);
    }
    return out;
}

std::set<std::string> oracle_ball(const oracle::Symbols& word, const Alphabet& a, int radius) {
    std::set<std::string> out;
    for (const auto& [s, d] : oracle::edit_ball(word, static_cast<int>(a.size()), radius)) {
        out.insert(join(from_symbols(s, a)));
    }
    return out;
}

/// Forwards to a Lexicon through the abstract interface only, so searches
/// take their generic path.
class OpaqueSource final : public WordSource {
  public:
    explicit OpaqueSource(const Lexicon& lex) : lex_(lex) {}
    bool is_word(std::string_view w) const override { return lex_.is_word(w); }
    bool contains(std::span<const TamilLetter> l) const override { return lex_.contains(l); }
    bool prefix_exists(std::span<const TamilLetter> p) const override { return lex_.prefix_exists(p); }
    std::vector<TamilLetter> continuations(std::span<const TamilLetter> p) const override {
        return lex_.continuations(p);
    }
    std::size_t word_count() const override { return lex_.word_count(); }

  private:
    const Lexicon& lex_;
};

} // namespace

TEST(Edits1, ExampleFamilies) {
    const auto word = tokenize("கஅ");
    const auto f = edit::edit_families(word, two_letters());
    EXPECT_EQ(texts(f.deletes), (std::set<std::string>{"அ", "க"}));
    EXPECT_EQ(texts(f.transposes), (std::set<std::string>{"அக"}));

    const auto e1 = edit::edits1(word, two_letters());
    for (const char* expected : {"அஅ", "கக", "ககஅ", "கஅக", "அகஅ"}) {
        EXPECT_TRUE(e1.contains(expected)) << expected;
    }
    for (const auto& c : e1.candidates()) {
        EXPECT_LE(letter_distance(word, tokenize(c)), 1u) << c;
    }
}

TEST(Edits1, GenerationOrderIsDeletesTransposesReplacesInserts) {
    const auto e1 = edit::edits1(tokenize("கஅ"), two_letters());
    ASSERT_GE(e1.size(), 3u);
    EXPECT_EQ(e1.candidates()[0], "அ");
    EXPECT_EQ(e1.candidates()[1], "க");
    EXPECT_EQ(e1.candidates()[2], "அக");
}

TEST(Edits1, Errors) {
    EXPECT_THROW(edit::edits1({}, two_letters()), std::invalid_argument);
    EXPECT_THROW(edit::edits_n(tokenize("க"), two_letters(), 0), std::invalid_argument);
}

TEST(Edits1, FamilyCountsFollowFormulas) {
    for (const Alphabet* a : {&two_letters(), &five_letters()}) {
        const std::size_t A = a->size();
        for (std::size_t n = 1; n <= 4; ++n) {
            for (const auto& s : all_words(n, static_cast<int>(A))) {
                const auto word = from_symbols(s, *a);
                const auto f = edit::edit_families(word, *a);
                ASSERT_EQ(f.deletes.size(), n);
                ASSERT_EQ(f.transposes.size(), n - 1);
                ASSERT_EQ(f.replaces.size(), n * A);
                ASSERT_EQ(f.inserts.size(), (n + 1) * A);
                ASSERT_LE(texts(f.deletes).size(), n);
                ASSERT_LE(texts(f.transposes).size(), n - 1);
                ASSERT_LE(texts(f.replaces).size(), n * A);
                ASSERT_LE(texts(f.inserts).size(), (n + 1) * A);
            }
        }
    }
}

TEST(EditsN, Edits1MatchesBruteForceBallExactly) {
    for (const Alphabet* a : {&two_letters(), &five_letters()}) {
        for (std::size_t n = 1; n <= 4; ++n) {
            for (const auto& s : all_words(n, static_cast<int>(a->size()))) {
                const auto word = from_symbols(s, *a);
                ASSERT_EQ(as_set(edit::edits1(word, *a).candidates()), oracle_ball(s, *a, 1)) << join(word);
            }
        }
    }
}

TEST(EditsN, Edits2MatchesBruteForceBallExactly) {
    for (const Alphabet* a : {&two_letters(), &five_letters()}) {
        for (std::size_t n = 1; n <= 3; ++n) {
            for (const auto& s : all_words(n, static_cast<int>(a->size()))) {
                const auto word = from_symbols(s, *a);
                ASSERT_EQ(as_set(edit::edits_n(word, *a, 2).candidates()), oracle_ball(s, *a, 2)) << join(word);
            }
        }
    }
}

TEST(EditsN, Edits3OverTwoLetters) {
    for (std::size_t n = 1; n <= 3; ++n) {
        for (const auto& s : all_words(n, 2)) {
            const auto word = from_symbols(s, two_letters());
            ASSERT_EQ(as_set(edit::edits_n(word, two_letters(), 3).candidates()), oracle_ball(s, two_letters(), 3));
        }
    }
}

TEST(EditsN, BaseCaseIsEdits1) {
    const auto w = tokenize("கஅக");
    EXPECT_EQ(edit::edits_n(w, five_letters(), 1).candidates(), edit::edits1(w, five_letters()).candidates());
}

TEST(EditsN, LimitIsAHardCap) {
    const auto w = tokenize("கஅ");
    EXPECT_EQ(edit::edits1(w, five_letters(), 5).size(), 5u);
    EXPECT_EQ(edit::edits_n(w, five_letters(), 2, 5).size(), 5u);
    EXPECT_EQ(edit::edits_n(w, Alphabet::tamil(), 2, 37).size(), 37u);
    // Capped output is a prefix of the uncapped generation order.
    const auto full = edit::edits1(w, five_letters());
    const auto capped = edit::edits1(w, five_letters(), 5);
    EXPECT_TRUE(std::equal(capped.candidates().begin(), capped.candidates().end(), full.candidates().begin()));
    EXPECT_TRUE(edit::edits1(w, five_letters(), 0).empty());
}

TEST(EditsN, GrowthIsMonotone) {
    auto count = [](std::size_t n, const Alphabet& a, int k) {
        LetterWord w(n, a.letters()[0]);
        for (std::size_t i = 0; i < n; ++i) {
            w[i] = a.letters()[i % a.size()];
        }
        return edit::edits_n(w, a, k).size();
    };
    for (int k = 1; k <= 2; ++k) {
        for (std::size_t n = 1; n < 4; ++n) {
            EXPECT_LE(count(n, two_letters(), k), count(n + 1, two_letters(), k));
            EXPECT_LE(count(n, five_letters(), k), count(n + 1, five_letters(), k));
            EXPECT_LE(count(n, two_letters(), k), count(n, five_letters(), k));
        }
    }
    EXPECT_LT(count(2, two_letters(), 1), count(2, five_letters(), 1));
    EXPECT_LT(count(2, two_letters(), 2), count(2, five_letters(), 2));
    EXPECT_LT(count(2, five_letters(), 1), count(2, five_letters(), 2));
}

TEST(EditsN, CandidatesResegmentToThemselves) {
    // With Grantha letters, inserting ஷ after க் would fuse into க்ஷ.
    const auto w = tokenize("க்ம");
    const auto set = edit::edits_n(w, Alphabet::with_grantha(), 1);
    for (std::size_t i = 0; i < set.size(); ++i) {
        ASSERT_EQ(tokenize(set.candidates()[i]), set.words()[i]) << set.candidates()[i];
    }
    EXPECT_FALSE(edit::resegments_cleanly(oracle::letters({"க்", "ஷ"})));
    EXPECT_TRUE(edit::resegments_cleanly(oracle::letters({"க்", "ம"})));
    EXPECT_TRUE(edit::resegments_cleanly(oracle::letters({"க்ஷ", "ம"})));
}

TEST(LetterDistance, AgreesWithBfsOracle) {
    const Alphabet three(oracle::letters({"அ", "க", "ல"}));
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> len(0, 4);
    std::uniform_int_distribution<int> sym(0, 2);
    for (int trial = 0; trial < 40; ++trial) {
        oracle::Symbols src;
        for (int i = len(rng); i > 0; --i) {
            src.push_back(sym(rng));
        }
        const auto ball = oracle::edit_ball(src, 3, 3);
        const auto s = from_symbols(src, three);
        for (const auto& [t, d] : ball) {
            ASSERT_EQ(letter_distance(s, from_symbols(t, three)), static_cast<std::size_t>(d));
        }
        for (int probe = 0; probe < 50; ++probe) {
            oracle::Symbols t;
            for (int i = len(rng) + 2; i > 0; --i) {
                t.push_back(sym(rng));
            }
            if (!ball.contains(t)) {
                ASSERT_GT(letter_distance(s, from_symbols(t, three)), 3u);
            }
        }
    }
    // Unrestricted swap-then-insert: CA -> ABC costs 2.
    EXPECT_EQ(letter_distance(oracle::letters({"க", "அ"}), oracle::letters({"அ", "ல", "க"})), 2u);
}

TEST(EditSuggest, Examples) {
    const auto lex = oracle::lexicon({"பல"});
    const auto out = edit::suggest(tokenize("பள"), lex, Alphabet::tamil(), 1);
    ASSERT_EQ(out.size(), 1u);
    EXPECT_EQ(out[0].candidate, "பல");
    EXPECT_EQ(out[0].strategy, Strategy::Edit);
    EXPECT_EQ(out[0].score, 1.0);
    EXPECT_TRUE(edit::suggest(tokenize("பள"), Lexicon{}, Alphabet::tamil(), 2).empty());
}

TEST(EditSuggest, ExcludesSourceAndRanksByDistance) {
    const auto lex = oracle::lexicon({"பல", "பலம்", "கல்", "ப"});
    const auto out = edit::suggest(tokenize("பல"), lex, Alphabet::tamil(), 2);
    std::vector<std::string> got;
    for (const auto& s : out) {
        got.push_back(s.candidate);
    }
    // ப and பலம் at distance 1 (code-point order), கல் at distance 2.
    EXPECT_EQ(got, (std::vector<std::string>{"ப", "பலம்", "கல்"}));
}

TEST(EditSuggest, TrieWalkMatchesFilteredGeneration) {
    std::mt19937 rng(2024);
    const auto& a = five_letters();
    std::uniform_int_distribution<int> len(1, 4);
    std::uniform_int_distribution<int> sym(0, static_cast<int>(a.size()) - 1);
    auto random_word = [&] {
        oracle::Symbols s;
        for (int i = len(rng); i > 0; --i) {
            s.push_back(sym(rng));
        }
        return from_symbols(s, a);
    };
    for (int trial = 0; trial < 150; ++trial) {
        Lexicon lex;
        for (int i = 0; i < 25; ++i) {
            lex.add_word(join(random_word()));
        }
        const auto word = random_word();
        for (int k = 1; k <= 2; ++k) {
            std::set<std::string> expected;
            for (int j = 1; j <= k; ++j) {
                const auto level = edit::edits_n(word, a, j);
                for (const auto& c : level.candidates()) {
                    if (lex.is_word(c) && c != join(word)) {
                        expected.insert(c);
                    }
                }
            }
            std::set<std::string> pruned;
            for (const auto& s : edit::suggest(word, lex, a, k)) {
                pruned.insert(s.candidate);
            }
            std::set<std::string> generated;
            for (const auto& s : edit::suggest(word, lex, a, k, 1'000'000)) {
                generated.insert(s.candidate);
            }
            std::set<std::string> opaque;
            for (const auto& s : edit::suggest(word, OpaqueSource(lex), a, k)) {
                opaque.insert(s.candidate);
            }
            ASSERT_EQ(pruned, expected) << join(word) << " k=" << k;
            ASSERT_EQ(opaque, expected) << join(word) << " k=" << k;
            ASSERT_EQ(generated, expected) << join(word) << " k=" << k;
        }
    }
}
