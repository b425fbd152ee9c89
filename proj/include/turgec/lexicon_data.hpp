#pragma once

// Embedded seed lexicons. Best-effort lists assembled from the published
// orthography guidance; each one is a drop-in default that a file of the
// same name under the lexicon directory replaces wholesale. Format matches
// the on-disk one: key<TAB>value[<TAB>extra], '#' comments.

#include <filesystem>
#include <string_view>

#include "turgec/lexicon.hpp"

namespace turgec::seed {

inline constexpr std::string_view kConjKiExc =
    "# adjacent-by-convention ki words -> common misspelling\n"
    "belki\tbel ki\n"
    "oysaki\toysa ki\n"
    "çünkü\tçünki\n"
    "sanki\tsan ki\n"
    "mademki\tmadem ki\n"
    "meğerki\tmeğer ki\n"
    "halbuki\thalbu ki\n"
    "illaki\tilla ki\n";

inline constexpr std::string_view kForeignR1 =
    "# initial consonant cluster -> epenthesized misspelling\n"
    "gram\tgıram\n"
    "tren\ttiren\n"
    "trafik\ttırafik\n"
    "tramvay\ttıramvay\n"
    "spor\tsipor\n"
    "stres\tsitres\n"
    "staj\tsıtaj\n"
    "spiker\tsipiker\n"
    "plan\tpilan\n"
    "plaj\tpilaj\n"
    "plastik\tpilastik\n"
    "prens\tpirens\n"
    "prova\tpırova\n"
    "kral\tkıral\n"
    "kravat\tkıravat\n"
    "kredi\tkıredi\n"
    "krem\tkirem\n"
    "klasik\tkılasik\n"
    "grup\tgurup\n"
    "grev\tgirev\n";

inline constexpr std::string_view kForeignR2 =
    "# softened stem (correct before vowel) -> unsoftened misspelling\n"
    "sebeb\tsebep\n"
    "kitab\tkitap\n"
    "cevab\tcevap\n"
    "hesab\thesap\n"
    "mektub\tmektup\n"
    "kebab\tkebap\n"
    "şarab\tşarap\n"
    "dolab\tdolap\n"
    "sahib\tsahip\n"
    "kalb\tkalp\n"
    "prensib\tprensip\n"
    "ilac\tilaç\n";

inline constexpr std::string_view kForeignR2Exc =
    "# stems exempt from softening (correct hard) -> softened misspelling\n"
    "evrak\tevrağ\n"
    "hukuk\thukuğ\n"
    "ahlak\tahlağ\n"
    "merak\tmerağ\n"
    "idrak\tidrağ\n"
    "ittifak\tittifağ\n"
    "infilak\tinfilağ\n";

inline constexpr std::string_view kBisyllHaplVow =
    "# haplology stem (correct dropped form before vowel) -> restored vowel\n"
    "ağz\tağız\n"
    "burn\tburun\n"
    "boyn\tboyun\n"
    "karn\tkarın\n"
    "aln\talın\n"
    "oğl\toğul\n"
    "göğs\tgöğüs\n"
    "omz\tomuz\n"
    "akl\takıl\n"
    "fikr\tfikir\n"
    "şehr\tşehir\n"
    "nehr\tnehir\n"
    "resm\tresim\n"
    "ism\tisim\n"
    "vakt\tvakit\n"
    "şekl\tşekil\n"
    "sabr\tsabır\n"
    "gönl\tgönül\n"
    "beyn\tbeyin\n"
    "devr\tdevir\n"
    "seyr\tseyir\n"
    "zulm\tzulüm\n"
    "hükm\thüküm\n"
    "metn\tmetin\n";

inline constexpr std::string_view kBisyllHaplVowExc =
    "# vowel-keeping adverbs (correct full form) -> colloquial dropped form\n"
    "içeri\tiçer\n"
    "dışarı\tdışar\n"
    "yukarı\tyukar\n"
    "ileri\tiler\n"
    "bura\tbur\n"
    "şura\tşur\n"
    "ora\tor\n"
    "nere\tner\n";

inline constexpr std::string_view kLightVerbAdj =
    "# adjacent light-verb stem -> split form (noun + auxiliary onset)\n"
    "emret\temir et\n"
    "emred\temir ed\n"
    "kaybet\tkayıp et\n"
    "kaybed\tkayıp ed\n"
    "kaydet\tkayıt et\n"
    "kayded\tkayıt ed\n"
    "sabret\tsabır et\n"
    "sabred\tsabır ed\n"
    "şükret\tşükür et\n"
    "şükred\tşükür ed\n"
    "zikret\tzikir et\n"
    "zikred\tzikir ed\n"
    "azmet\tazim et\n"
    "azmed\tazim ed\n"
    "affet\taf et\n"
    "affed\taf ed\n"
    "hisset\this et\n"
    "hissed\this ed\n"
    "hallet\thal et\n"
    "halled\thal ed\n"
    "zannet\tzan et\n"
    "zanned\tzan ed\n"
    "reddet\tret et\n"
    "redded\tret ed\n"
    "kahrol\tkahır ol\n"
    "hapsol\thapis ol\n"
    "kaydol\tkayıt ol\n";

inline constexpr std::string_view kPronounExc =
    "# fused pronouns/determiners -> split misspelling\n"
    "hiçbir\thiç bir\n"
    "herhangi\ther hangi\n"
    "birçok\tbir çok\n"
    "birkaç\tbir kaç\n"
    "birtakım\tbir takım\n";

inline constexpr std::string_view kCapped =
    "# circumflexed loanwords -> circumflex-stripped misspelling\n"
    "kâğıt\tkağıt\n"
    "karargâh\tkarargah\n"
    "dükkân\tdükkan\n"
    "hâlâ\thala\n"
    "hikâye\thikaye\n"
    "mekân\tmekan\n"
    "kâbus\tkabus\n"
    "rüzgâr\trüzgar\n"
    "imkân\timkan\n"
    "hâkim\thakim\n"
    "kâtip\tkatip\n"
    "âlem\talem\n"
    "tezgâh\ttezgah\n"
    "yadigâr\tyadigar\n"
    "ordugâh\tordugah\n"
    "güzergâh\tgüzergah\n"
    "sükût\tsükut\n"
    "mahkûm\tmahkum\n";

// kind: period = trailing dot dropped; front/back = suffix harmony flipped
// against the pronounced final syllable; height = close suffix vowel written
// open (i->e, ı->a).
inline constexpr std::string_view kAbbrev =
    "# abbreviation\tkind\n"
    "Alm.\tperiod\n"
    "Dr.\tperiod\n"
    "Prof.\tperiod\n"
    "Doç.\tperiod\n"
    "vb.\tperiod\n"
    "vs.\tperiod\n"
    "İng.\tperiod\n"
    "Fr.\tperiod\n"
    "Alb.\tperiod\n"
    "THY\tfront\n"
    "PTT\tfront\n"
    "TRT\tfront\n"
    "TDK\tfront\n"
    "AB\tfront\n"
    "ABD\tfront\n"
    "BM\tfront\n"
    "TL\tfront\n"
    "TBMM\tfront\n"
    "ODTÜ\tfront\n"
    "TV\tfront\n"
    "CD\tfront\n"
    "km\tfront\n"
    "mm\tfront\n"
    "kg\tback\n"
    "cm\theight\n";

// Stems the locative-split corruption may fire on. Identity mapping; the
// value column is unused. Curated to nouns whose bare form is unambiguous.
inline constexpr std::string_view kCaseDeStems =
    "# stem\tstem\n"
    "ev\tev\n"
    "okul\tokul\n"
    "masa\tmasa\n"
    "yol\tyol\n"
    "araba\taraba\n"
    "kapı\tkapı\n"
    "bahçe\tbahçe\n"
    "sokak\tsokak\n"
    "park\tpark\n"
    "oda\toda\n"
    "kutu\tkutu\n"
    "çanta\tçanta\n"
    "sepet\tsepet\n"
    "deniz\tdeniz\n"
    "orman\torman\n"
    "köy\tköy\n"
    "sahil\tsahil\n"
    "durak\tdurak\n"
    "ofis\tofis\n"
    "salon\tsalon\n"
    "mutfak\tmutfak\n"
    "balkon\tbalkon\n"
    "havuz\thavuz\n"
    "market\tmarket\n"
    "hastane\thastane\n"
    "kütüphane\tkütüphane\n"
    "istasyon\tistasyon\n"
    "meydan\tmeydan\n"
    "çarşı\tçarşı\n"
    "köprü\tköprü\n"
    "tiyatro\ttiyatro\n"
    "sinema\tsinema\n"
    "müze\tmüze\n"
    "otel\totel\n"
    "banka\tbanka\n";

// All lexicons the rule registry consumes, loaded from the embedded seeds.
inline LexiconSet default_lexicons() {
    LexiconSet set;
    set.put(load_lexicon_from_string("CONJ_KI_EXC", kConjKiExc));
    set.put(load_lexicon_from_string("FOREIGN_R1", kForeignR1));
    set.put(load_lexicon_from_string("FOREIGN_R2", kForeignR2));
    set.put(load_lexicon_from_string("FOREIGN_R2_EXC", kForeignR2Exc));
    set.put(load_lexicon_from_string("BISYLL_HAPL_VOW", kBisyllHaplVow));
    set.put(load_lexicon_from_string("BISYLL_HAPL_VOW_EXC", kBisyllHaplVowExc));
    set.put(load_lexicon_from_string("LIGHT_VERB_ADJ", kLightVerbAdj));
    set.put(load_lexicon_from_string("PRONOUN_EXC", kPronounExc));
    set.put(load_lexicon_from_string("CAPPED", kCapped));
    set.put(load_lexicon_from_string("ABBREV", kAbbrev, /*pair_injective=*/false));
    set.put(load_lexicon_from_string("CASE_DE_STEMS", kCaseDeStems,
                                     /*pair_injective=*/false));
    return set;
}

// Embedded defaults, with any NAME.tsv files under `dir` replacing the
// corresponding seed lexicon wholesale. Empty dir means defaults only.
inline LexiconSet load_lexicons(const std::string& dir) {
    LexiconSet set = default_lexicons();
    if (dir.empty()) return set;
    if (!std::filesystem::is_directory(dir))
        throw LexiconError("lexicon directory not found: " + dir);
    for (const std::string& name : set.names()) {
        std::filesystem::path p = std::filesystem::path(dir) / (name + ".tsv");
        if (!std::filesystem::exists(p)) continue;
        bool injective = (name != "ABBREV" && name != "CASE_DE_STEMS");
        set.put(load_lexicon_from_file(p.string(), name, injective));
    }
    return set;
}

}  // namespace turgec::seed
