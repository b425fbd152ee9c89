#pragma once

// Golden suite: one carrier sentence per catalog example pair. Each case
// pins the forward corruption (correct -> corrupted, byte-exact), the
// reverse transformation, and full detect+correct closure.

#include <cstddef>
#include <vector>

#include "turgec/rules.hpp"

namespace golden {

struct GoldenCase {
    turgec::RuleId rule;
    const char* correct;    // tokenized correct sentence
    const char* corrupted;  // tokenized corrupted sentence
    size_t edit_start;      // edit span in the corrupted sentence
    size_t edit_end;
    const char* correction;  // original span text
    size_t anchor;           // eligibility anchor in the correct sentence
};

inline const std::vector<GoldenCase>& cases() {
    using turgec::RuleId;
    static const std::vector<GoldenCase> v = {
        {RuleId::ConjDeSep, "Durumu oğluna da bildirdi .",
         "Durumu oğlunada bildirdi .", 1, 2, "oğluna da", 2},
        {RuleId::ConjDeVh, "Çok da iyi olmuş .", "Çok de iyi olmuş .", 1, 2,
         "da", 1},
        {RuleId::ConjDeAr, "Sınıf da temizlendi .", "Sınıf ta temizlendi .", 1,
         2, "da", 1},
        {RuleId::Yada, "Sen ya da o buradan gidecek .",
         "Sen yada o buradan gidecek .", 1, 2, "ya da", 1},
        {RuleId::ConjDeApos, "Ayşe de geldi .", "Ayşe'de geldi .", 0, 1,
         "Ayşe de", 1},
        {RuleId::CaseDe, "Evde hiç süt kalmamıştı .",
         "Ev de hiç süt kalmamıştı .", 0, 2, "Evde", 0},
        {RuleId::ConjKiSep, "Bugün öyle çok yorulmuş ki hemen yattı .",
         "Bugün öyle çok yorulmuşki hemen yattı .", 3, 4, "yorulmuş ki", 4},
        {RuleId::ConjKiExc, "Belki yarın gelir .", "Bel ki yarın gelir .", 0, 2,
         "Belki", 0},
        {RuleId::ConjKiExc, "Oysaki kimse gelmedi .", "Oysa ki kimse gelmedi .",
         0, 2, "Oysaki", 0},
        {RuleId::ConjKiExc, "Gelmedi çünkü hastaydı .",
         "Gelmedi çünki hastaydı .", 1, 2, "çünkü", 1},
        {RuleId::ForeignR1, "Bir gram altın aldı .", "Bir gıram altın aldı .",
         1, 2, "gram", 1},
        {RuleId::ForeignR2, "Bunun sebebi belli .", "Bunun sebepi belli .", 1,
         2, "sebebi", 1},
        {RuleId::ForeignR2Exc, "Resmi evrakı teslim etti .",
         "Resmi evrağı teslim etti .", 1, 2, "evrakı", 1},
        {RuleId::BisyllHaplVow, "Ağzı çok kuruydu .", "Ağızı çok kuruydu .", 0,
         1, "Ağzı", 0},
        {RuleId::BisyllHaplVowExc, "İçeride kimse yoktu .",
         "İçerde kimse yoktu .", 0, 1, "İçeride", 0},
        {RuleId::LightVerbSep, "Raporu arz etmek istedi .",
         "Raporu arzetmek istedi .", 1, 2, "arz etmek", 2},
        {RuleId::LightVerbAdj, "Komutan hemen emretti .",
         "Komutan hemen emir etti .", 2, 4, "emretti", 2},
        {RuleId::CompVerbAdj, "Böyle gidedurmak olmaz .",
         "Böyle gide durmak olmaz .", 1, 3, "gidedurmak", 1},
        {RuleId::PronounExc, "Hiçbir şey söylemedi .",
         "Hiç bir şey söylemedi .", 0, 2, "Hiçbir", 0},
        {RuleId::PronounExc, "Bugün herhangi bir sorun yok .",
         "Bugün her hangi bir sorun yok .", 1, 3, "herhangi", 1},
        {RuleId::SentCap, "Onlar geldi .", "onlar geldi .", 0, 1, "Onlar", 0},
        {RuleId::Capped, "Bu kâğıt eski .", "Bu kağıt eski .", 1, 2, "kâğıt", 1},
        {RuleId::Capped, "Askerler karargâh kurdu .",
         "Askerler karargah kurdu .", 1, 2, "karargâh", 1},
        {RuleId::Abbrev, "Alm. kökenli sözcükler var .",
         "Alm kökenli sözcükler var .", 0, 1, "Alm.", 0},
        {RuleId::Abbrev, "THY'de çalışıyor .", "THY'da çalışıyor .", 0, 1,
         "THY'de", 0},
        {RuleId::Abbrev, "Son cm'yi ölçtü .", "Son cm'ye ölçtü .", 1, 2,
         "cm'yi", 1},
        {RuleId::PronouncExc, "Yarın işe başlayacağım .",
         "Yarın işe başlıyacağım .", 2, 3, "başlayacağım", 2},
    };
    return v;
}

// Fig-style three-error example: correct (a), corrupted (b), and the three
// annotation lines of (c).
inline const char* kMultiCorrect =
    "Uyuyakaldığı için hem işe gitmedi hem de akşamki yemeğe gelemeyecek .";
inline const char* kMultiCorrupted =
    "Uyuya kaldığı için hem işe gitmedi hemde akşamki yemeğe gelemiyecek .";
inline const char* kMultiRecord =
    "S Uyuya kaldığı için hem işe gitmedi hemde akşamki yemeğe gelemiyecek .\n"
    "A 0 2|||COMP_VERB_ADJ|||Uyuyakaldığı|||REQUIRED|||-NONE-|||0\n"
    "A 6 7|||CONJ_DE_SEP|||hem de|||REQUIRED|||-NONE-|||0\n"
    "A 9 10|||PRONOUNC_EXC|||gelemeyecek|||REQUIRED|||-NONE-|||0\n";

}  // namespace golden
