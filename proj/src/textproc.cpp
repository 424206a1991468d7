#include "summeval/textproc.hpp"

#include <cstdint>
#include <sstream>
#include <stdexcept>

#include "summeval/resources.hpp"

namespace summeval {

namespace {

struct Codepoint {
    char32_t value = 0;
    std::size_t length = 1;
};

// Minimal UTF-8 decoder; malformed bytes fall through as single-byte
// word characters rather than being dropped.
Codepoint decode_utf8(std::string_view text, std::size_t i) {
    const auto byte = [&](std::size_t o) { return static_cast<unsigned char>(text[o]); };
    unsigned char b0 = byte(i);
    if (b0 < 0x80) return {b0, 1};
    auto cont = [&](std::size_t o) {
        return o < text.size() && (byte(o) & 0xC0) == 0x80;
    };
    if ((b0 & 0xE0) == 0xC0 && cont(i + 1)) {
        return {static_cast<char32_t>(((b0 & 0x1Fu) << 6) | (byte(i + 1) & 0x3Fu)), 2};
    }
    if ((b0 & 0xF0) == 0xE0 && cont(i + 1) && cont(i + 2)) {
        return {static_cast<char32_t>(((b0 & 0x0Fu) << 12) | ((byte(i + 1) & 0x3Fu) << 6) |
                                      (byte(i + 2) & 0x3Fu)),
                3};
    }
    if ((b0 & 0xF8) == 0xF0 && cont(i + 1) && cont(i + 2) && cont(i + 3)) {
        return {static_cast<char32_t>(((b0 & 0x07u) << 18) | ((byte(i + 1) & 0x3Fu) << 12) |
                                      ((byte(i + 2) & 0x3Fu) << 6) | (byte(i + 3) & 0x3Fu)),
                4};
    }
    return {b0, 1};
}

bool is_space_cp(char32_t c) {
    switch (c) {
        case U' ': case U'\t': case U'\n': case U'\r': case U'\v': case U'\f':
        case 0x00A0: case 0x1680: case 0x2028: case 0x2029: case 0x202F:
        case 0x205F: case 0x3000: case 0xFEFF:
            return true;
        default:
            return c >= 0x2000 && c <= 0x200A;
    }
}

bool is_punct_cp(char32_t c) {
    if (c < 0x80) {
        return (c >= '!' && c <= '/') || (c >= ':' && c <= '@') || (c >= '[' && c <= '`') ||
               (c >= '{' && c <= '~');
    }
    switch (c) {
        case 0x00A1: case 0x00AB: case 0x00B7: case 0x00BB: case 0x00BF:
        case 0x2018: case 0x2019: case 0x201C: case 0x201D: case 0x2022:
        case 0x2026: case 0x2039: case 0x203A:
            return true;
        default:
            return c >= 0x2010 && c <= 0x2015;  // hyphens and dashes
    }
}

bool is_word_cp(char32_t c) { return !is_space_cp(c) && !is_punct_cp(c); }

void ascii_lower(std::string& s) {
    for (char& c : s)
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
}

bool is_numeric_only(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    static const char digits[] = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[v & 0xF];
        v >>= 4;
    }
    return out;
}

}  // namespace

TokenizeOptions default_analyzer_options() {
    return TokenizeOptions{.lowercase = true,
                           .strip_numeric = true,
                           .remove_stopwords = true,
                           .stem = true};
}

std::string analyzer_fingerprint(const TokenizeOptions& options) {
    std::ostringstream out;
    out << "an1|lc=" << options.lowercase << "|num=" << options.strip_numeric
        << "|stop=" << options.remove_stopwords << "|stem=" << options.stem
        << "|sw=" << hex64(fnv1a64(stopwords_resource_text()));
    return out.str();
}

std::string_view to_string(PosTag tag) {
    switch (tag) {
        case PosTag::Noun: return "NOUN";
        case PosTag::Adj: return "ADJ";
        case PosTag::Det: return "DET";
        case PosTag::Verb: return "VERB";
        case PosTag::Other: return "OTHER";
    }
    return "OTHER";
}

std::vector<Token> tokenize(std::string_view text, const TokenizeOptions& options) {
    std::vector<std::string> surfaces;
    std::string current;
    std::size_t i = 0;
    while (i < text.size()) {
        Codepoint cp = decode_utf8(text, i);
        if (is_word_cp(cp.value)) {
            current.append(text.substr(i, cp.length));
            i += cp.length;
            continue;
        }
        // Intra-word hyphens stay part of the token.
        if (cp.value == U'-' && !current.empty() && i + cp.length < text.size()) {
            Codepoint next = decode_utf8(text, i + cp.length);
            if (is_word_cp(next.value)) {
                current.push_back('-');
                i += cp.length;
                continue;
            }
        }
        if (!current.empty()) surfaces.push_back(std::move(current));
        current.clear();
        i += cp.length;
    }
    if (!current.empty()) surfaces.push_back(std::move(current));

    std::vector<Token> tokens;
    tokens.reserve(surfaces.size());
    for (std::string& surface : surfaces) {
        if (options.lowercase) ascii_lower(surface);
        if (options.strip_numeric && is_numeric_only(surface)) continue;
        bool stop = is_stopword(surface);
        if (options.remove_stopwords && stop) continue;
        Token token;
        token.surface = std::move(surface);
        token.stem = options.stem ? porter_stem(token.surface) : token.surface;
        token.is_stopword = stop;
        token.position = tokens.size();
        tokens.push_back(std::move(token));
    }
    return tokens;
}

std::vector<std::string> analyze(std::string_view text, const TokenizeOptions& options) {
    std::vector<std::string> terms;
    for (Token& token : tokenize(text, options)) terms.push_back(std::move(token.stem));
    return terms;
}

std::vector<std::string> sentence_split(std::string_view text) {
    std::vector<std::string> sentences;
    auto emit = [&](std::size_t from, std::size_t to) {
        while (from < to && is_space_cp(static_cast<unsigned char>(text[from]))) ++from;
        while (to > from && is_space_cp(static_cast<unsigned char>(text[to - 1]))) --to;
        if (from < to) sentences.emplace_back(text.substr(from, to - from));
    };

    std::size_t start = 0;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (c != '.' && c != '!' && c != '?') {
            ++i;
            continue;
        }
        std::size_t run_end = i;
        while (run_end + 1 < text.size() &&
               (text[run_end + 1] == '.' || text[run_end + 1] == '!' || text[run_end + 1] == '?'))
            ++run_end;
        std::size_t next = run_end + 1;
        bool saw_space = false;
        while (next < text.size() &&
               is_space_cp(static_cast<unsigned char>(text[next]))) {
            saw_space = true;
            ++next;
        }
        bool boundary = saw_space && next < text.size() && text[next] >= 'A' && text[next] <= 'Z';
        if (boundary && run_end == i && c == '.') {
            // Trailing word including the period, e.g. "fig." or "e.g.".
            std::size_t w = i;
            while (w > start) {
                char prev = text[w - 1];
                bool wordish = (prev >= 'a' && prev <= 'z') || (prev >= 'A' && prev <= 'Z') ||
                               prev == '.';
                if (!wordish) break;
                --w;
            }
            std::string word(text.substr(w, i - w + 1));
            ascii_lower(word);
            if (abbreviation_set().count(word) > 0) boundary = false;
        }
        if (boundary) {
            emit(start, run_end + 1);
            start = next;
            i = next;
        } else {
            i = run_end + 1;
        }
    }
    emit(start, text.size());
    return sentences;
}

std::map<Phrase, std::size_t> ngram_counts(const std::vector<std::string>& terms, std::size_t n) {
    if (n < 1) throw std::invalid_argument("ngram length must be >= 1");
    std::map<Phrase, std::size_t> counts;
    if (terms.size() < n) return counts;
    for (std::size_t i = 0; i + n <= terms.size(); ++i) {
        Phrase gram(terms.begin() + static_cast<std::ptrdiff_t>(i),
                    terms.begin() + static_cast<std::ptrdiff_t>(i + n));
        ++counts[std::move(gram)];
    }
    return counts;
}

std::map<Phrase, std::size_t> ngram_counts(const std::vector<Token>& tokens, std::size_t n) {
    std::vector<std::string> terms;
    terms.reserve(tokens.size());
    for (const Token& t : tokens) terms.push_back(t.stem);
    return ngram_counts(terms, n);
}

std::vector<TaggedToken> pos_tag(const std::vector<Token>& tokens) {
    const auto& lexicon = pos_lexicon();
    std::vector<TaggedToken> tagged;
    tagged.reserve(tokens.size());
    for (const Token& token : tokens) {
        std::string key = token.surface;
        ascii_lower(key);
        PosTag tag = PosTag::Other;
        if (auto it = lexicon.find(key); it != lexicon.end()) {
            tag = it->second;
        } else if (key.size() > 4 && key.ends_with("tion")) {
            tag = PosTag::Noun;
        } else if (key.size() > 4 && key.ends_with("ness")) {
            tag = PosTag::Noun;
        } else if (key.size() > 4 && key.ends_with("ment")) {
            tag = PosTag::Noun;
        } else if (key.size() > 3 && key.ends_with("ity")) {
            tag = PosTag::Noun;
        } else if (key.size() > 3 && key.ends_with("ous")) {
            tag = PosTag::Adj;
        } else if (key.size() > 3 && key.ends_with("ful")) {
            tag = PosTag::Adj;
        } else if (key.size() > 3 && key.ends_with("ble")) {
            tag = PosTag::Adj;
        } else if (key.size() > 2 && key.ends_with("al")) {
            tag = PosTag::Adj;
        } else if (key.size() > 3 && key.ends_with("ive")) {
            tag = PosTag::Adj;
        } else if (key.size() > 3 && key.ends_with("ize")) {
            tag = PosTag::Verb;
        } else if (key.size() > 3 && key.ends_with("ate")) {
            tag = PosTag::Verb;
        } else if (key.size() > 3 && key.ends_with("ify")) {
            tag = PosTag::Verb;
        }
        tagged.push_back(TaggedToken{token, tag});
    }
    return tagged;
}

std::vector<std::vector<Token>> np_chunks(const std::vector<TaggedToken>& tagged) {
    std::vector<std::vector<Token>> chunks;
    std::size_t i = 0;
    while (i < tagged.size()) {
        std::size_t begin = i;
        if (tagged[begin].pos == PosTag::Det) ++begin;
        std::size_t end = begin;
        std::size_t last_noun = std::string::npos;
        while (end < tagged.size() &&
               (tagged[end].pos == PosTag::Adj || tagged[end].pos == PosTag::Noun)) {
            if (tagged[end].pos == PosTag::Noun) last_noun = end;
            ++end;
        }
        if (last_noun != std::string::npos) {
            std::vector<Token> phrase;
            phrase.reserve(last_noun - begin + 1);
            for (std::size_t p = begin; p <= last_noun; ++p) phrase.push_back(tagged[p].token);
            chunks.push_back(std::move(phrase));
            i = last_noun + 1;
        } else {
            i = end > i ? end : i + 1;
        }
    }
    return chunks;
}

}  // namespace summeval
