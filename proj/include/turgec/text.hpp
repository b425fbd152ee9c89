#pragma once

// UTF-8 handling and Turkish character classification shared by every
// other component. All per-character logic in the library runs on
// char32_t codepoints; strings cross module boundaries as UTF-8.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace turgec {

using CodepointString = std::u32string;

// ---------------------------------------------------------------------------
// UTF-8 decode / encode

inline CodepointString decode_utf8(std::string_view s) {
    CodepointString out;
    out.reserve(s.size());
    size_t i = 0;
    while (i < s.size()) {
        unsigned char c = static_cast<unsigned char>(s[i]);
        char32_t cp = 0xFFFD;
        size_t len = 1;
        if (c < 0x80) {
            cp = c;
        } else if ((c & 0xE0) == 0xC0 && i + 1 < s.size() &&
                   (s[i + 1] & 0xC0) == 0x80) {
            cp = (c & 0x1Fu) << 6 | (s[i + 1] & 0x3Fu);
            len = 2;
            if (cp < 0x80) cp = 0xFFFD;
        } else if ((c & 0xF0) == 0xE0 && i + 2 < s.size() &&
                   (s[i + 1] & 0xC0) == 0x80 && (s[i + 2] & 0xC0) == 0x80) {
            cp = (c & 0x0Fu) << 12 | (s[i + 1] & 0x3Fu) << 6 | (s[i + 2] & 0x3Fu);
            len = 3;
            if (cp < 0x800) cp = 0xFFFD;
        } else if ((c & 0xF8) == 0xF0 && i + 3 < s.size() &&
                   (s[i + 1] & 0xC0) == 0x80 && (s[i + 2] & 0xC0) == 0x80 &&
                   (s[i + 3] & 0xC0) == 0x80) {
            cp = (c & 0x07u) << 18 | (s[i + 1] & 0x3Fu) << 12 |
                 (s[i + 2] & 0x3Fu) << 6 | (s[i + 3] & 0x3Fu);
            len = 4;
            if (cp < 0x10000 || cp > 0x10FFFF) cp = 0xFFFD;
        }
        out.push_back(cp);
        i += len;
    }
    return out;
}

inline void append_utf8(std::string& out, char32_t cp) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

inline std::string encode_utf8(std::u32string_view cps) {
    std::string out;
    out.reserve(cps.size() * 2);
    for (char32_t cp : cps) append_utf8(out, cp);
    return out;
}

// ---------------------------------------------------------------------------
// Turkish alphabet

enum class Backness { Back, Front, NotVowel };

inline bool is_vowel_tr(char32_t c) {
    switch (c) {
        case U'a': case U'e': case U'ı': case U'i': case U'o': case U'ö':
        case U'u': case U'ü': case U'â': case U'î': case U'û':
        case U'A': case U'E': case U'I': case U'İ': case U'O': case U'Ö':
        case U'U': case U'Ü': case U'Â': case U'Î': case U'Û':
            return true;
        default:
            return false;
    }
}

inline Backness vowel_backness(char32_t c) {
    switch (c) {
        case U'a': case U'ı': case U'o': case U'u': case U'â': case U'û':
        case U'A': case U'I': case U'O': case U'U': case U'Â': case U'Û':
            return Backness::Back;
        case U'e': case U'i': case U'ö': case U'ü': case U'î':
        case U'E': case U'İ': case U'Ö': case U'Ü': case U'Î':
            return Backness::Front;
        default:
            return Backness::NotVowel;
    }
}

inline bool is_rounded_vowel(char32_t c) {
    switch (c) {
        case U'o': case U'ö': case U'u': case U'ü': case U'û':
        case U'O': case U'Ö': case U'U': case U'Ü': case U'Û':
            return true;
        default:
            return false;
    }
}

// Voiceless (fortis) consonants; suffix-initial d assimilates to t after these.
inline bool is_fortis_consonant(char32_t c) {
    switch (c) {
        case U'p': case U'ç': case U't': case U'k': case U'f': case U'h':
        case U's': case U'ş':
        case U'P': case U'Ç': case U'T': case U'K': case U'F': case U'H':
        case U'S': case U'Ş':
            return true;
        default:
            return false;
    }
}

inline char32_t to_lower_tr_char(char32_t c) {
    switch (c) {
        case U'İ': return U'i';
        case U'I': return U'ı';
        case U'Ç': return U'ç';
        case U'Ğ': return U'ğ';
        case U'Ö': return U'ö';
        case U'Ş': return U'ş';
        case U'Ü': return U'ü';
        case U'Â': return U'â';
        case U'Î': return U'î';
        case U'Û': return U'û';
        default:
            if (c >= U'A' && c <= U'Z') return c + 32;
            return c;
    }
}

inline char32_t to_upper_tr_char(char32_t c) {
    switch (c) {
        case U'i': return U'İ';
        case U'ı': return U'I';
        case U'ç': return U'Ç';
        case U'ğ': return U'Ğ';
        case U'ö': return U'Ö';
        case U'ş': return U'Ş';
        case U'ü': return U'Ü';
        case U'â': return U'Â';
        case U'î': return U'Î';
        case U'û': return U'Û';
        default:
            if (c >= U'a' && c <= U'z') return c - 32;
            return c;
    }
}

inline bool is_upper_tr(char32_t c) { return to_lower_tr_char(c) != c; }
inline bool is_lower_tr(char32_t c) { return to_upper_tr_char(c) != c; }

inline bool is_letter_tr(char32_t c) {
    if ((c >= U'a' && c <= U'z') || (c >= U'A' && c <= U'Z')) return true;
    switch (c) {
        case U'ç': case U'ğ': case U'ı': case U'ö': case U'ş': case U'ü':
        case U'â': case U'î': case U'û':
        case U'Ç': case U'Ğ': case U'İ': case U'Ö': case U'Ş': case U'Ü':
        case U'Â': case U'Î': case U'Û': case U'I':
            return true;
        default:
            return false;
    }
}

inline std::optional<char32_t> last_vowel(std::u32string_view cps) {
    for (size_t i = cps.size(); i > 0; --i)
        if (is_vowel_tr(cps[i - 1])) return cps[i - 1];
    return std::nullopt;
}

inline size_t count_vowels(std::u32string_view cps) {
    size_t n = 0;
    for (char32_t c : cps)
        if (is_vowel_tr(c)) ++n;
    return n;
}

inline bool is_apostrophe(char32_t c) { return c == U'\'' || c == U'’'; }

inline bool contains_apostrophe(std::u32string_view cps) {
    for (char32_t c : cps)
        if (is_apostrophe(c)) return true;
    return false;
}

// ---------------------------------------------------------------------------
// Normalization. NFC composition restricted to the combining sequences that
// occur in Turkish text (cedilla, breve, diaeresis, circumflex, dot above).

inline char32_t compose_tr(char32_t base, char32_t mark, bool& composed) {
    composed = true;
    switch (mark) {
        case 0x0327:  // cedilla
            switch (base) {
                case U'c': return U'ç';
                case U'C': return U'Ç';
                case U's': return U'ş';
                case U'S': return U'Ş';
            }
            break;
        case 0x0306:  // breve
            switch (base) {
                case U'g': return U'ğ';
                case U'G': return U'Ğ';
            }
            break;
        case 0x0308:  // diaeresis
            switch (base) {
                case U'o': return U'ö';
                case U'O': return U'Ö';
                case U'u': return U'ü';
                case U'U': return U'Ü';
            }
            break;
        case 0x0302:  // circumflex
            switch (base) {
                case U'a': return U'â';
                case U'A': return U'Â';
                case U'i': return U'î';
                case U'I': return U'Î';
                case U'u': return U'û';
                case U'U': return U'Û';
            }
            break;
        case 0x0307:  // dot above
            if (base == U'I') return U'İ';
            break;
    }
    composed = false;
    return base;
}

inline CodepointString normalize_nfc_tr(std::u32string_view cps) {
    CodepointString out;
    out.reserve(cps.size());
    for (char32_t c : cps) {
        if (!out.empty() && (c == 0x0327 || c == 0x0306 || c == 0x0308 ||
                             c == 0x0302 || c == 0x0307)) {
            bool composed = false;
            char32_t merged = compose_tr(out.back(), c, composed);
            if (composed) {
                out.back() = merged;
                continue;
            }
        }
        out.push_back(c);
    }
    return out;
}

// NFC plus whitespace collapse; the canonical form for corpus dedup.
inline std::string normalize_sentence(std::string_view raw) {
    CodepointString cps = normalize_nfc_tr(decode_utf8(raw));
    std::string out;
    bool in_space = true;  // swallows leading whitespace
    for (char32_t c : cps) {
        bool ws = (c == U' ' || c == U'\t' || c == U'\r' || c == U'\n' ||
                   c == 0x00A0);
        if (ws) {
            if (!in_space) out.push_back(' ');
            in_space = true;
        } else {
            append_utf8(out, c);
            in_space = false;
        }
    }
    while (!out.empty() && out.back() == ' ') out.pop_back();
    return out;
}

// ---------------------------------------------------------------------------
// Tokens

// A sentence is a flat token sequence. All rule machinery indexes into this.
using Sentence = std::vector<std::string>;

inline Sentence split_tokens(std::string_view line) {
    Sentence out;
    size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && line[i] == ' ') ++i;
        size_t j = i;
        while (j < line.size() && line[j] != ' ') ++j;
        if (j > i) out.emplace_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

inline std::string join_tokens(const Sentence& tokens) {
    std::string out;
    for (size_t i = 0; i < tokens.size(); ++i) {
        if (i) out.push_back(' ');
        out += tokens[i];
    }
    return out;
}

struct TokenizedText {
    Sentence tokens;
    std::vector<size_t> offsets;  // codepoint offset of each token in the input
};

inline bool is_splittable_punct(char32_t c) {
    switch (c) {
        case U'.': case U',': case U';': case U':': case U'!': case U'?':
        case U'…': case U'"': case U'«': case U'»': case U'(': case U')':
        case U'[': case U']': case U'“': case U'”':
            return true;
        default:
            return false;
    }
}

// Raw-text tokenizer: whitespace split, then clause/sentence punctuation is
// peeled into separate tokens. A trailing period stays attached when the
// piece (with its period) appears in `period_abbrevs`, so abbreviation
// tokens like "Alm." survive intact.
inline TokenizedText tokenize(std::string_view raw,
                              const std::vector<std::string>& period_abbrevs = {}) {
    TokenizedText out;
    CodepointString cps = normalize_nfc_tr(decode_utf8(raw));
    size_t i = 0;
    auto is_ws = [](char32_t c) {
        return c == U' ' || c == U'\t' || c == U'\r' || c == U'\n' || c == 0x00A0;
    };
    auto emit = [&](std::u32string_view piece, size_t at) {
        if (piece.empty()) return;
        out.tokens.push_back(encode_utf8(piece));
        out.offsets.push_back(at);
    };
    while (i < cps.size()) {
        while (i < cps.size() && is_ws(cps[i])) ++i;
        size_t j = i;
        while (j < cps.size() && !is_ws(cps[j])) ++j;
        if (j == i) break;
        std::u32string_view piece(cps.data() + i, j - i);
        size_t at = i;
        // leading punctuation
        while (!piece.empty() && is_splittable_punct(piece.front())) {
            emit(piece.substr(0, 1), at);
            piece.remove_prefix(1);
            ++at;
        }
        // trailing punctuation, abbreviation-aware for the final period
        std::vector<std::pair<std::u32string_view, size_t>> tail;
        while (!piece.empty() && is_splittable_punct(piece.back())) {
            if (piece.back() == U'.' && !period_abbrevs.empty()) {
                std::string with_dot = encode_utf8(piece);
                bool known = false;
                for (const auto& ab : period_abbrevs)
                    if (ab == with_dot) { known = true; break; }
                if (known) break;
            }
            tail.emplace_back(piece.substr(piece.size() - 1, 1),
                              at + piece.size() - 1);
            piece.remove_suffix(1);
        }
        emit(piece, at);
        for (auto it = tail.rbegin(); it != tail.rend(); ++it)
            emit(it->first, it->second);
        i = j;
    }
    return out;
}

}  // namespace turgec
