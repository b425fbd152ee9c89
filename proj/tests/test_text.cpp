#include <catch2/catch_amalgamated.hpp>

#include "turgec/rng.hpp"
#include "turgec/text.hpp"

using namespace turgec;

TEST_CASE("utf8 round trip") {
    std::string s = "çığlık ÖĞÜN âlî IŞIK";
    CHECK(encode_utf8(decode_utf8(s)) == s);
}

TEST_CASE("utf8 decode rejects malformed bytes as replacement") {
    std::string bad = "a\xC3";  // truncated two-byte sequence
    CodepointString cps = decode_utf8(bad);
    REQUIRE(cps.size() == 2);
    CHECK(cps[1] == 0xFFFD);
}

TEST_CASE("vowel classification") {
    CHECK(is_vowel_tr(U'ı'));
    CHECK(is_vowel_tr(U'â'));
    CHECK(!is_vowel_tr(U'y'));
    CHECK(vowel_backness(U'o') == Backness::Back);
    CHECK(vowel_backness(U'ö') == Backness::Front);
    CHECK(vowel_backness(U'â') == Backness::Back);
    CHECK(vowel_backness(U'k') == Backness::NotVowel);
    CHECK(is_rounded_vowel(U'ü'));
    CHECK(!is_rounded_vowel(U'e'));
}

TEST_CASE("fortis consonants") {
    for (char32_t c : std::u32string(U"pçtkfhsş")) CHECK(is_fortis_consonant(c));
    for (char32_t c : std::u32string(U"bcdgğjlmnrvyz")) CHECK(!is_fortis_consonant(c));
}

TEST_CASE("nfc composition of combining marks") {
    // c + combining cedilla, g + combining breve, I + dot above
    std::string decomposed = "ç ğ İ û";
    std::string composed = encode_utf8(normalize_nfc_tr(decode_utf8(decomposed)));
    CHECK(composed == "ç ğ İ û");
}

TEST_CASE("normalize_sentence collapses whitespace") {
    CHECK(normalize_sentence("  Ev  de \t süt\n") == "Ev de süt");
    CHECK(normalize_sentence("") == "");
    CHECK(normalize_sentence("   ") == "");
}

TEST_CASE("split and join tokens") {
    Sentence s = split_tokens("Ev de hiç süt kalmamıştı .");
    REQUIRE(s.size() == 6);
    CHECK(s[0] == "Ev");
    CHECK(s[5] == ".");
    CHECK(join_tokens(s) == "Ev de hiç süt kalmamıştı .");
}

TEST_CASE("tokenizer splits punctuation but keeps known abbreviations") {
    TokenizedText t = tokenize("Alm. kökenli sözcükler var.", {"Alm."});
    REQUIRE(t.tokens.size() == 5);
    CHECK(t.tokens[0] == "Alm.");
    CHECK(t.tokens[3] == "var");
    CHECK(t.tokens[4] == ".");

    TokenizedText u = tokenize("Geldi, gördü, gitti.");
    REQUIRE(u.tokens.size() == 6);
    CHECK(u.tokens[1] == ",");
    CHECK(u.tokens[5] == ".");
}

TEST_CASE("tokenizer keeps apostrophes inside tokens") {
    TokenizedText t = tokenize("THY'de çalışıyor.");
    REQUIRE(t.tokens.size() == 3);
    CHECK(t.tokens[0] == "THY'de");
}

TEST_CASE("rng streams are deterministic and index-independent") {
    RngStream a = RngStream::derive(42, 1, 7);
    RngStream b = RngStream::derive(42, 1, 7);
    for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());

    RngStream c = RngStream::derive(42, 1, 8);
    bool all_equal = true;
    RngStream a2 = RngStream::derive(42, 1, 7);
    for (int i = 0; i < 10; ++i)
        if (a2.next() != c.next()) all_equal = false;
    CHECK(!all_equal);
}

TEST_CASE("rng bernoulli extremes") {
    RngStream r(1);
    for (int i = 0; i < 50; ++i) {
        CHECK(r.bernoulli(1.0));
        CHECK(!r.bernoulli(0.0));
    }
}
