#pragma once

// Deterministic clean-sentence generator for property tests: template x
// name x place enumeration, every sentence grammatically correct and
// carrying at least one site some rule can fire on.

#include <string>
#include <vector>

namespace fuzz {

inline std::string fill(const char* tpl, const std::string& name,
                        const std::string& place) {
    std::string out;
    for (const char* p = tpl; *p; ++p) {
        if (*p == 'N' && p[1] == '@') {
            out += name;
            ++p;
        } else if (*p == 'P' && p[1] == '@') {
            out += place;
            ++p;
        } else {
            out.push_back(*p);
        }
    }
    return out;
}

inline std::vector<std::string> make_corpus(size_t n) {
    static const std::vector<std::string> names = {
        "Ali", "Ayşe", "Mehmet", "Zeynep", "Murat",
        "Elif", "Kemal", "Selin", "Osman", "Derya"};
    // correct locatives of stems the splitting rule knows
    static const std::vector<std::string> places = {
        "evde",     "okulda",  "parkta",   "sokakta",
        "bahçede",  "denizde", "ofiste",   "salonda",
        "mutfakta", "markette", "durakta", "balkonda"};
    static const std::vector<const char*> templates = {
        "N@ dün P@ uzun süre bekledi .",
        "N@ de P@ kitap okudu .",
        "Bugün N@ çok da iyi çalıştı , sonra P@ dinlendi .",
        "Sen ya da N@ yarın P@ bekleyecek .",
        "N@ belki yarın P@ olacak .",
        "Bugün öyle çok yorulmuş ki N@ P@ uyudu .",
        "N@ kitabı P@ unuttu .",
        "N@ resmi P@ çizdi .",
        "N@ raporu arz etmek için P@ bekledi .",
        "Komutan hemen emretti ve N@ P@ koştu .",
        "N@ dün uyuyakaldığı için P@ geç kaldı .",
        "N@ hiçbir şeyi P@ unutmadı .",
        "N@ birçok kez P@ buluştu .",
        "N@ hâlâ P@ bekliyor .",
        "Dr. N@ yarın P@ olacak .",
        "N@ kâğıt kalem alıp P@ yazdı .",
        "Rüzgâr çıkınca N@ P@ saklandı .",
        "N@ yarın sınava başlayacağı için P@ uyudu .",
        "N@ trende kitap okudu , sonra P@ indi .",
        "N@ gram gram altın toplayıp P@ sakladı .",
        "Sınıf da temizlendi ve N@ P@ ders çalıştı .",
        "N@ evrakı teslim etti ve P@ bekledi .",
        "N@ içeride oturup bekledi , sonra P@ yürüdü .",
        "Gelmedi çünkü N@ P@ kalmıştı .",
        "N@ kralı P@ gördü .",
        "N@ burada herhangi bir sorun görmedi , P@ rahattı .",
        "N@ kaybettiği anahtarı P@ buldu .",
        "N@ şehre erken varıp P@ bekledi .",
        "Yemeği N@ yapabilir , sofra P@ kurulur .",
        "N@ THY'de çalışıyor ve P@ oturuyor .",
    };
    std::vector<std::string> out;
    out.reserve(n);
    const size_t T = templates.size(), N = names.size(), P = places.size();
    for (size_t k = 0; k < n && k < T * N * P; ++k) {
        size_t t = k % T;
        size_t nm = (k / T) % N;
        size_t pl = (k / (T * N)) % P;
        out.push_back(fill(templates[t], names[nm], places[pl]));
    }
    return out;
}

}  // namespace fuzz
