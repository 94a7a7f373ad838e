#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "formant/errors.hpp"

namespace formant {

enum class SpeakerGroup { Man = 1, Woman = 2, Child = 3 };

// Peterson & Barney vowel inventory in its customary front-to-back order.
// The enumeration index doubles as the deterministic tie-break order.
enum class VowelClass { IY, IH, EH, AE, AH, AA, AO, UH, UW, ER };

inline constexpr std::array<VowelClass, 10> kAllVowels = {
    VowelClass::IY, VowelClass::IH, VowelClass::EH, VowelClass::AE, VowelClass::AH,
    VowelClass::AA, VowelClass::AO, VowelClass::UH, VowelClass::UW, VowelClass::ER};

// Default working set: the retroflex vowel ER is excluded.
inline constexpr std::array<VowelClass, 9> kWorkingVowels = {
    VowelClass::IY, VowelClass::IH, VowelClass::EH, VowelClass::AE, VowelClass::AH,
    VowelClass::AA, VowelClass::AO, VowelClass::UH, VowelClass::UW};

inline std::string_view vowel_code(VowelClass v) {
    switch (v) {
        case VowelClass::IY: return "IY";
        case VowelClass::IH: return "IH";
        case VowelClass::EH: return "EH";
        case VowelClass::AE: return "AE";
        case VowelClass::AH: return "AH";
        case VowelClass::AA: return "AA";
        case VowelClass::AO: return "AO";
        case VowelClass::UH: return "UH";
        case VowelClass::UW: return "UW";
        case VowelClass::ER: return "ER";
    }
    return "??";
}

// IPA rendering, used in plot legends.
inline std::string_view vowel_ipa(VowelClass v) {
    switch (v) {
        case VowelClass::IY: return "i";
        case VowelClass::IH: return "ɪ";
        case VowelClass::EH: return "ɛ";
        case VowelClass::AE: return "æ";
        case VowelClass::AH: return "ʌ";
        case VowelClass::AA: return "ɑ";
        case VowelClass::AO: return "ɔ";
        case VowelClass::UH: return "ʊ";
        case VowelClass::UW: return "u";
        case VowelClass::ER: return "ɝ";
    }
    return "?";
}

inline std::optional<VowelClass> vowel_from_code(std::string_view code) {
    std::string up;
    up.reserve(code.size());
    for (char c : code) up.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    for (VowelClass v : kAllVowels)
        if (up == vowel_code(v)) return v;
    return std::nullopt;
}

// Numeric phoneme index used by the circulating data files: 1..10 in the
// same front-to-back order as the enumeration.
inline std::optional<VowelClass> vowel_from_index(int idx) {
    if (idx < 1 || idx > 10) return std::nullopt;
    return kAllVowels[static_cast<std::size_t>(idx - 1)];
}

inline std::string_view group_name(SpeakerGroup g) {
    switch (g) {
        case SpeakerGroup::Man: return "man";
        case SpeakerGroup::Woman: return "woman";
        case SpeakerGroup::Child: return "child";
    }
    return "?";
}

struct FormantSample {
    int speaker_id = 0;
    SpeakerGroup group = SpeakerGroup::Man;
    VowelClass vowel = VowelClass::IY;
    int repetition = 1;  // 1 or 2
    double f0_hz = 0.0;
    double f1_hz = 0.0;
    double f2_hz = 0.0;
    double f3_hz = 0.0;
    // Set when the source row carried the historical '*' marker for
    // non-unanimous listener labels. Exclusion is left to the caller.
    bool flagged = false;

    double formant(int i) const {
        switch (i) {
            case 1: return f1_hz;
            case 2: return f2_hz;
            case 3: return f3_hz;
            default: throw Error("formant index out of range");
        }
    }

    friend bool operator==(const FormantSample& a, const FormantSample& b) {
        return a.speaker_id == b.speaker_id && a.group == b.group && a.vowel == b.vowel &&
               a.repetition == b.repetition && a.f0_hz == b.f0_hz && a.f1_hz == b.f1_hz &&
               a.f2_hz == b.f2_hz && a.f3_hz == b.f3_hz;
    }
};

struct Corpus {
    std::vector<FormantSample> samples;
    std::string provenance;

    std::size_t size() const { return samples.size(); }
    bool empty() const { return samples.empty(); }
};

enum class CorpusFormat {
    PBTable,  // group speaker_id vowel_index vowel_code F0 F1 F2 F3
    Csv,      // group,speaker_id,vowel,repetition,f0_hz,f1_hz,f2_hz,f3_hz
};

namespace detail {

inline std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',' || c == ' ' || c == '\t' || c == '\r') {
            if (!cur.empty()) out.push_back(std::move(cur)), cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) out.push_back(std::move(cur));
    return out;
}

// Frequencies in the verified P&B file may carry a trailing '*'
// (non-unanimous listener label). Returns nullopt on anything non-numeric.
inline std::optional<double> parse_freq(std::string tok, bool& flagged) {
    while (!tok.empty() && tok.back() == '*') {
        tok.pop_back();
        flagged = true;
    }
    if (tok.empty()) return std::nullopt;
    std::size_t pos = 0;
    double v;
    try {
        v = std::stod(tok, &pos);
    } catch (const std::exception&) {
        return std::nullopt;
    }
    if (pos != tok.size() || !std::isfinite(v)) return std::nullopt;
    return v;
}

inline std::optional<long> parse_int(const std::string& tok) {
    std::size_t pos = 0;
    long v;
    try {
        v = std::stol(tok, &pos);
    } catch (const std::exception&) {
        return std::nullopt;
    }
    if (pos != tok.size()) return std::nullopt;
    return v;
}

}  // namespace detail

// Parses a P&B-shaped record stream. Repetition indices are assigned by
// order of appearance per (speaker, vowel); the public file lists each
// speaker's two utterances consecutively.
inline Corpus parse_corpus(std::istream& in, CorpusFormat format = CorpusFormat::PBTable,
                           std::string provenance = "") {
    Corpus corpus;
    corpus.provenance = std::move(provenance);
    std::map<std::pair<int, VowelClass>, int> rep_counter;
    std::string line;
    std::size_t lineno = 0;
    bool header_skipped = false;
    while (std::getline(in, line)) {
        ++lineno;
        std::string trimmed = line;
        while (!trimmed.empty() && (trimmed.back() == '\r' || trimmed.back() == '\n'))
            trimmed.pop_back();
        std::size_t first = trimmed.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        if (trimmed[first] == '#') continue;
        if (format == CorpusFormat::Csv && !header_skipped) {
            header_skipped = true;
            if (trimmed.find("f1_hz") != std::string::npos) continue;
        }

        auto fields = detail::split_fields(trimmed);
        FormantSample s;
        bool have_rep = false;

        if (format == CorpusFormat::PBTable) {
            if (fields.size() != 8) throw MalformedRow(lineno);
            auto g = detail::parse_int(fields[0]);
            auto id = detail::parse_int(fields[1]);
            auto vi = detail::parse_int(fields[2]);
            if (!g || !id || !vi || *g < 1 || *g > 3 || *id <= 0) throw MalformedRow(lineno);
            s.group = static_cast<SpeakerGroup>(*g);
            s.speaker_id = static_cast<int>(*id);
            auto v_by_code = vowel_from_code(fields[3]);
            auto v_by_idx = vowel_from_index(static_cast<int>(*vi));
            if (!v_by_code && !v_by_idx) throw UnknownVowelCode(lineno, fields[3]);
            s.vowel = v_by_code ? *v_by_code : *v_by_idx;
            std::array<double, 4> f{};
            for (int i = 0; i < 4; ++i) {
                auto fv = detail::parse_freq(fields[static_cast<std::size_t>(4 + i)], s.flagged);
                if (!fv) throw MalformedRow(lineno);
                f[static_cast<std::size_t>(i)] = *fv;
            }
            s.f0_hz = f[0];
            s.f1_hz = f[1];
            s.f2_hz = f[2];
            s.f3_hz = f[3];
        } else {
            if (fields.size() != 8) throw MalformedRow(lineno);
            auto g = detail::parse_int(fields[0]);
            auto id = detail::parse_int(fields[1]);
            if (!g || !id || *g < 1 || *g > 3 || *id <= 0) throw MalformedRow(lineno);
            s.group = static_cast<SpeakerGroup>(*g);
            s.speaker_id = static_cast<int>(*id);
            auto v = vowel_from_code(fields[2]);
            if (!v) {
                auto vi = detail::parse_int(fields[2]);
                if (vi) v = vowel_from_index(static_cast<int>(*vi));
            }
            if (!v) throw UnknownVowelCode(lineno, fields[2]);
            s.vowel = *v;
            auto rep = detail::parse_int(fields[3]);
            if (!rep || (*rep != 1 && *rep != 2)) throw MalformedRow(lineno);
            s.repetition = static_cast<int>(*rep);
            have_rep = true;
            std::array<double, 4> f{};
            for (int i = 0; i < 4; ++i) {
                auto fv = detail::parse_freq(fields[static_cast<std::size_t>(4 + i)], s.flagged);
                if (!fv) throw MalformedRow(lineno);
                f[static_cast<std::size_t>(i)] = *fv;
            }
            s.f0_hz = f[0];
            s.f1_hz = f[1];
            s.f2_hz = f[2];
            s.f3_hz = f[3];
        }

        if (!(s.f1_hz > 0 && s.f1_hz < s.f2_hz && s.f2_hz < s.f3_hz))
            throw NonMonotonicFormants(lineno);
        if (!(s.f0_hz > 0) || !std::isfinite(s.f0_hz)) throw MalformedRow(lineno);

        if (!have_rep) s.repetition = ++rep_counter[{s.speaker_id, s.vowel}];
        corpus.samples.push_back(s);
    }
    return corpus;
}

// Canonical round-trip CSV.
inline void write_csv(const Corpus& corpus, std::ostream& out) {
    out << "group,speaker_id,vowel,repetition,f0_hz,f1_hz,f2_hz,f3_hz\n";
    auto num = [](double x) {
        std::ostringstream os;
        os.precision(17);
        os << x;
        return os.str();
    };
    for (const auto& s : corpus.samples) {
        out << static_cast<int>(s.group) << ',' << s.speaker_id << ',' << vowel_code(s.vowel)
            << ',' << s.repetition << ',' << num(s.f0_hz) << ',' << num(s.f1_hz) << ','
            << num(s.f2_hz) << ',' << num(s.f3_hz) << '\n';
    }
}

inline Corpus filter_vowels(const Corpus& corpus, const std::set<VowelClass>& keep) {
    if (keep.empty()) throw Error("filter_vowels: empty keep set");
    Corpus out;
    out.provenance = corpus.provenance;
    for (const auto& s : corpus.samples)
        if (keep.count(s.vowel)) out.samples.push_back(s);
    if (out.samples.empty()) throw EmptyResult("filter_vowels: no sample matches");
    return out;
}

inline Corpus working_set(const Corpus& corpus) {
    return filter_vowels(corpus,
                         std::set<VowelClass>(kWorkingVowels.begin(), kWorkingVowels.end()));
}

inline Corpus pool(const Corpus& corpus, const std::set<SpeakerGroup>& groups) {
    if (groups.empty()) throw Error("pool: empty group set");
    Corpus out;
    out.provenance = corpus.provenance;
    for (const auto& s : corpus.samples)
        if (groups.count(s.group)) out.samples.push_back(s);
    if (out.samples.empty()) throw EmptyResult("pool: no sample matches");
    return out;
}

inline const std::set<SpeakerGroup>& groups_mw() {
    static const std::set<SpeakerGroup> g{SpeakerGroup::Man, SpeakerGroup::Woman};
    return g;
}

inline const std::set<SpeakerGroup>& groups_mwc() {
    static const std::set<SpeakerGroup> g{SpeakerGroup::Man, SpeakerGroup::Woman,
                                          SpeakerGroup::Child};
    return g;
}

// Repetition 1 becomes the training half, repetition 2 the test half.
inline std::pair<Corpus, Corpus> split_repetitions(const Corpus& corpus) {
    std::map<std::pair<int, VowelClass>, std::array<int, 2>> counts;
    for (const auto& s : corpus.samples) {
        if (s.repetition < 1 || s.repetition > 2)
            throw UnpairedUtterance(s.speaker_id, std::string(vowel_code(s.vowel)));
        counts[{s.speaker_id, s.vowel}][static_cast<std::size_t>(s.repetition - 1)]++;
    }
    for (const auto& [key, c] : counts)
        if (c[0] != 1 || c[1] != 1)
            throw UnpairedUtterance(key.first, std::string(vowel_code(key.second)));
    Corpus train, test;
    train.provenance = corpus.provenance + " [rep 1]";
    test.provenance = corpus.provenance + " [rep 2]";
    for (const auto& s : corpus.samples)
        (s.repetition == 1 ? train : test).samples.push_back(s);
    return {std::move(train), std::move(test)};
}

}  // namespace formant
