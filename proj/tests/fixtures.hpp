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

// Checker resources built from the bundled data files.

#include <fstream>
#include <string>

#include "oracles.hpp"
#include "tamilspell/checker.hpp"

namespace fixture {

inline tamilspell::Resources resources() {
    tamilspell::Resources res;
    res.lexicon = oracle::fixture_lexicon();
    std::ifstream cm(oracle::data_path("tamil99.tsv"), std::ios::binary);
    res.keyboard = tamilspell::keyboard::load_confusion_matrix(cm);
    std::ifstream par(oracle::data_path("parallel.tsv"), std::ios::binary);
    res.parallel = tamilspell::load_parallel_dictionary(par);
    return res;
}

/// Roughly `tokens` whitespace-separated tokens drawn with a fixed seed from
/// lexicon words, known misspellings, a conjoined form and foreign words.
inline std::string document(std::size_t tokens, unsigned seed = 1) {
    static const char* const pool[] = {
        "பழம்", "பலம்", "கடல்", "அன்பு", "கணினி", "நிரல்", "காற்று", "தென்றல்", "யார்", "இது",
        "பளம்", "கடள்", "அனபு", "கனினி", "நிறல்", "தென்றல்காற்று", "அன்பேசிவம்", "computer", "hello", "மரன்",
    };
    std::mt19937 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, std::size(pool) - 1);
    std::string out;
    for (std::size_t i = 0; i < tokens; ++i) {
        out += pool[pick(rng)];
        out += (i % 12 == 11) ? ".\n" : " ";
    }
    return out;
}

} // namespace fixture
