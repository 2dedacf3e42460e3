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

// The checking driver. A word is first looked up; only non-words get
// suggestions, which are merged from every strategy, ranked and cached.
// Documents are split into tokens that are checked by a pool of workers;
// the report keeps input order.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <future>
#include <istream>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "letters.hpp"
#include "lexicon.hpp"
#include "suggest_conjoined.hpp"
#include "suggest_edit.hpp"
#include "suggest_keyboard.hpp"
#include "suggest_mayangoli.hpp"
#include "suggestion.hpp"

namespace tamilspell {

/// Foreign word -> Tamil equivalent, matched case-insensitively.
class ParallelDictionary {
  public:
    void add(std::string_view foreign, std::string_view tamil) {
        entries_.insert_or_assign(fold_case(foreign), normalize_nfc(tamil));
    }

    std::optional<std::string> lookup(std::string_view token) const {
        auto it = entries_.find(fold_case(token));
        if (it == entries_.end()) {
            return std::nullopt;
        }
        return it->second;
    }

    std::size_t size() const noexcept { return entries_.size(); }

  private:
    std::unordered_map<std::string, std::string> entries_;
};

/// Lines of "foreign<TAB>tamil", UTF-8, '#' comments.
inline ParallelDictionary load_parallel_dictionary(std::istream& in) {
    ParallelDictionary dict;
    detail::for_each_data_line(in, [&](std::size_t line_no, std::string_view line) {
        const auto tab = line.find('\t');
        if (tab == std::string_view::npos || tab == 0 || tab + 1 >= line.size()) {
            throw ParseError(line_no, "expected foreign<TAB>tamil");
        }
        dict.add(line.substr(0, tab), line.substr(tab + 1));
    });
    return dict;
}

/// One word per line.
inline std::unordered_set<std::string> load_stop_words(std::istream& in) {
    std::unordered_set<std::string> words;
    detail::for_each_data_line(in, [&](std::size_t, std::string_view w) { words.insert(normalize_nfc(w)); });
    return words;
}

/// Replacement for a non-Tamil token, if the parallel dictionary has one.
inline std::optional<Suggestion> substitute_foreign(std::string_view token, const ParallelDictionary& parallel) {
    if (auto hit = parallel.lookup(token)) {
        return Suggestion{std::move(*hit), Strategy::Foreign, 0.0};
    }
    return std::nullopt;
}

enum class Verdict { Valid, NonWord, NonTamil, Skipped };

inline std::string_view to_string(Verdict v) noexcept {
    switch (v) {
    case Verdict::Valid: return "valid";
    case Verdict::NonWord: return "nonword";
    case Verdict::NonTamil: return "nontamil";
    case Verdict::Skipped: return "skipped";
    }
    return "unknown";
}

struct TokenReport {
    std::string token;
    Verdict verdict = Verdict::Valid;
    std::vector<Suggestion> suggestions;

    /// A non-word whose best reading is two lexicon words joined together.
    bool is_conjoined_form() const {
        return verdict == Verdict::NonWord && !suggestions.empty() &&
               suggestions.front().strategy == Strategy::Conjoined;
    }

    friend bool operator==(const TokenReport&, const TokenReport&) = default;
};

struct CheckReport {
    std::vector<TokenReport> tokens;

    friend bool operator==(const CheckReport&, const CheckReport&) = default;
};

struct CheckerConfig {
    int edit_distance = 2;                     ///< edit and keyboard search depth
    std::size_t edit_limit = edit::unlimited;  ///< cap on generated edit candidates
    std::size_t max_suggestions = 10;          ///< 0 keeps every suggestion
    unsigned workers = 1;
    /// Run at most one worker per hardware thread; extra workers on a
    /// CPU-bound load only add switching cost.
    bool cap_workers_at_cores = true;
    bool grantha = false;                      ///< 323-letter alphabet for edits
    bool cache = true;
    /// Optional re-scoring hook, e.g. for a language model. Receives the
    /// source letters and a suggestion carrying its letter-distance score.
    std::function<double(const LetterWord&, const Suggestion&)> rescore;
};

/// Read-only data shared by all workers.
struct Resources {
    Lexicon lexicon;
    keyboard::ConfusionMatrix keyboard;
    mayangoli::MayangoliTable mayangoli = mayangoli::MayangoliTable::standard();
    ParallelDictionary parallel;
    std::unordered_set<std::string> stop_words;
};

struct CacheStats {
    std::size_t hits = 0;
    std::size_t misses = 0;
};

/// Misspelling -> suggestion list. Concurrent lookups of the same key wait
/// for a single computation.
class SuggestionCache {
  public:
    using List = std::vector<Suggestion>;

    template <typename Compute>
    List get_or_compute(const std::string& key, Compute&& compute) {
        std::promise<List> promise;
        std::shared_future<List> future;
        bool owner = false;
        {
            std::lock_guard lock(mutex_);
            auto [it, inserted] = entries_.try_emplace(key);
            if (inserted) {
                it->second = promise.get_future().share();
                owner = true;
            }
            future = it->second;
        }
        if (!owner) {
            hits_.fetch_add(1, std::memory_order_relaxed);
            return future.get();
        }
        misses_.fetch_add(1, std::memory_order_relaxed);
        try {
            promise.set_value(compute());
        } catch (...) {
            promise.set_exception(std::current_exception());
            std::lock_guard lock(mutex_);
            entries_.erase(key);
        }
        return future.get();
    }

    CacheStats stats() const { return {hits_.load(), misses_.load()}; }

    void clear() {
        std::lock_guard lock(mutex_);
        entries_.clear();
        hits_ = 0;
        misses_ = 0;
    }

  private:
    mutable std::mutex mutex_;
    std::unordered_map<std::string, std::shared_future<List>> entries_;
    std::atomic<std::size_t> hits_{0};
    std::atomic<std::size_t> misses_{0};
};

/// Splits text on whitespace and punctuation.
inline std::vector<std::string> split_words(std::string_view text) {
    std::vector<std::string> out;
    std::string current;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const std::size_t start = pos;
        auto cp = utf8::next(text, pos);
        if (!cp) {
            throw std::invalid_argument("ill-formed UTF-8 in input text");
        }
        if (is_separator(*cp)) {
            if (!current.empty()) {
                out.push_back(std::move(current));
                current.clear();
            }
        } else {
            current.append(text.substr(start, pos - start));
        }
    }
    if (!current.empty()) {
        out.push_back(std::move(current));
    }
    return out;
}

class Checker {
  public:
    explicit Checker(Resources resources, CheckerConfig config = {})
        : res_(std::move(resources)), config_(std::move(config)) {
        if (config_.edit_distance < 1) {
            throw std::invalid_argument("edit distance must be >= 1");
        }
    }

    const Resources& resources() const noexcept { return res_; }
    const CheckerConfig& config() const noexcept { return config_; }

    /// Valid for lexicon words (no suggestions), otherwise NonWord with
    /// the merged suggestion list.
    TokenReport check_word(std::string_view word) {
        TokenReport r{std::string(word), Verdict::Valid, {}};
        const std::string norm = normalize_nfc(word);
        if (res_.lexicon.is_word(norm)) {
            return r;
        }
        r.verdict = Verdict::NonWord;
        if (config_.cache) {
            r.suggestions = cache_.get_or_compute(norm, [&] { return compute(norm); });
        } else {
            uncached_misses_.fetch_add(1, std::memory_order_relaxed);
            r.suggestions = compute(norm);
        }
        return r;
    }

    /// Classifies one document token.
    TokenReport check_token(const std::string& token) {
        if (!contains_tamil(token)) {
            TokenReport r{token, Verdict::NonTamil, {}};
            if (auto s = substitute_foreign(token, res_.parallel)) {
                r.suggestions.push_back(std::move(*s));
            }
            return r;
        }
        if (res_.stop_words.contains(normalize_nfc(token))) {
            return {token, Verdict::Skipped, {}};
        }
        return check_word(token);
    }

    CheckReport check_text(std::string_view text) {
        const auto words = split_words(text);
        CheckReport report;
        report.tokens.resize(words.size());
        unsigned workers = std::min<unsigned>(config_.workers, static_cast<unsigned>(words.size()));
        if (config_.cap_workers_at_cores) {
            workers = std::min(workers, std::max(1u, std::thread::hardware_concurrency()));
        }
        workers = std::max(1u, workers);
        if (workers <= 1) {
            for (std::size_t i = 0; i < words.size(); ++i) {
                report.tokens[i] = check_token(words[i]);
            }
            return report;
        }
        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        {
            std::vector<std::jthread> pool;
            pool.reserve(workers);
            for (unsigned w = 0; w < workers; ++w) {
                pool.emplace_back([&] {
                    for (std::size_t i = next.fetch_add(1); i < words.size(); i = next.fetch_add(1)) {
                        try {
                            report.tokens[i] = check_token(words[i]);
                        } catch (...) {
                            std::lock_guard lock(failure_mutex);
                            if (!failure) {
                                failure = std::current_exception();
                            }
                        }
                    }
                });
            }
        }
        if (failure) {
            std::rethrow_exception(failure);
        }
        return report;
    }

    /// Cache hits and misses; with caching disabled every non-word is a miss.
    CacheStats stats() const {
        auto s = cache_.stats();
        s.misses += uncached_misses_.load();
        return s;
    }

    /// Number of times the suggestion strategies actually ran.
    std::size_t computations() const noexcept { return computations_.load(); }

    void clear_cache() {
        cache_.clear();
        uncached_misses_ = 0;
        computations_ = 0;
    }

  private:
    std::vector<Suggestion> compute(const std::string& word) {
        computations_.fetch_add(1, std::memory_order_relaxed);
        const LetterWord letters = tokenize(word);
        std::vector<Suggestion> all;
        auto take = [&](std::vector<Suggestion> list) {
            for (auto& s : list) {
                all.push_back(std::move(s));
            }
        };
        take(conjoined::suggest(letters, res_.lexicon));
        take(mayangoli::suggest(letters, res_.lexicon, res_.mayangoli));
        if (!res_.keyboard.empty() && !letters.empty()) {
            const int ed = std::min<int>(config_.edit_distance, static_cast<int>(letters.size()));
            auto kb = keyboard::corrections(letters, res_.lexicon, res_.keyboard, ed);
            for (auto& s : kb) {
                s.score = static_cast<double>(letter_distance(letters, tokenize(s.candidate)));
            }
            take(std::move(kb));
        }
        take(edit::suggest(letters, res_.lexicon, Alphabet::get(config_.grantha), config_.edit_distance,
                           config_.edit_limit));
        if (config_.rescore) {
            for (auto& s : all) {
                s.score = std::max(0.0, config_.rescore(letters, s));
            }
        }

        // One entry per candidate: lowest score, then strategy priority.
        std::map<std::string, Suggestion> best;
        for (auto& s : all) {
            auto [it, inserted] = best.try_emplace(s.candidate, s);
            const Suggestion& cur = it->second;
            if (!inserted && (s.score < cur.score || (s.score == cur.score && s.strategy < cur.strategy))) {
                it->second = std::move(s);
            }
        }
        std::vector<Suggestion> merged;
        merged.reserve(best.size());
        for (auto& [_, s] : best) {
            merged.push_back(std::move(s));
        }
        rank(merged);
        if (config_.max_suggestions > 0 && merged.size() > config_.max_suggestions) {
            merged.resize(config_.max_suggestions);
        }
        return merged;
    }

    Resources res_;
    CheckerConfig config_;
    SuggestionCache cache_;
    std::atomic<std::size_t> uncached_misses_{0};
    std::atomic<std::size_t> computations_{0};
};

} // namespace tamilspell
