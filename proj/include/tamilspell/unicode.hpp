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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

namespace tamilspell {

/// Raised by loaders when an input line cannot be accepted. Carries the
/// 1-based line number of the offending line.
class ParseError : public std::runtime_error {
  public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

namespace utf8 {

/// Decodes the code point starting at byte offset `pos` and advances `pos`.
/// Returns nullopt on an ill-formed sequence (pos still advances past it).
inline std::optional<char32_t> next(std::string_view text, std::size_t& pos) {
    UChar32 cp = 0;
    auto i = static_cast<int32_t>(pos);
    U8_NEXT(reinterpret_cast<const uint8_t*>(text.data()), i, static_cast<int32_t>(text.size()), cp);
    pos = static_cast<std::size_t>(i);
    if (cp < 0) {
        return std::nullopt;
    }
    return static_cast<char32_t>(cp);
}

inline bool is_valid(std::string_view text) {
    std::size_t pos = 0;
    while (pos < text.size()) {
        if (!next(text, pos)) {
            return false;
        }
    }
    return true;
}

inline void append(std::string& out, char32_t cp) {
    uint8_t buf[U8_MAX_LENGTH];
    int32_t len = 0;
    UBool error = false;
    U8_APPEND(buf, len, U8_MAX_LENGTH, static_cast<UChar32>(cp), error);
    if (error) {
        throw std::invalid_argument("not a Unicode scalar value");
    }
    out.append(reinterpret_cast<const char*>(buf), static_cast<std::size_t>(len));
}

inline std::u32string decode(std::string_view text) {
    std::u32string out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto cp = next(text, pos);
        if (!cp) {
            throw std::invalid_argument("ill-formed UTF-8");
        }
        out.push_back(*cp);
    }
    return out;
}

inline std::string encode(std::u32string_view cps) {
    std::string out;
    for (char32_t cp : cps) {
        append(out, cp);
    }
    return out;
}

} // namespace utf8

/// NFC normalization. Ill-formed input throws std::invalid_argument.
inline std::string normalize_nfc(std::string_view text) {
    if (!utf8::is_valid(text)) {
        throw std::invalid_argument("ill-formed UTF-8");
    }
    UErrorCode status = U_ZERO_ERROR;
    const icu::Normalizer2* nfc = icu::Normalizer2::getNFCInstance(status);
    if (U_FAILURE(status)) {
        throw std::runtime_error(std::string("ICU NFC unavailable: ") + u_errorName(status));
    }
    auto src = icu::UnicodeString::fromUTF8(icu::StringPiece(text.data(), static_cast<int32_t>(text.size())));
    if (nfc->isNormalized(src, status) && U_SUCCESS(status)) {
        return std::string(text);
    }
    status = U_ZERO_ERROR;
    icu::UnicodeString dst = nfc->normalize(src, status);
    if (U_FAILURE(status)) {
        throw std::runtime_error(std::string("NFC normalization failed: ") + u_errorName(status));
    }
    std::string out;
    dst.toUTF8String(out);
    return out;
}

/// Unicode simple case fold, used for foreign-word lookups.
inline std::string fold_case(std::string_view text) {
    auto s = icu::UnicodeString::fromUTF8(icu::StringPiece(text.data(), static_cast<int32_t>(text.size())));
    s.foldCase();
    std::string out;
    s.toUTF8String(out);
    return out;
}

inline bool is_separator(char32_t cp) {
    auto c = static_cast<UChar32>(cp);
    return u_isUWhiteSpace(c) || u_ispunct(c);
}

} // namespace tamilspell
