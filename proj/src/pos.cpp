#include "textcnn/pos.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "textcnn/errors.hpp"

namespace textcnn {

namespace {

constexpr std::array<std::string_view, kNumUniversalTags> kTagNames = {
    "ADJ", "ADP", "ADV", "CONJ", "DET", "NOUN", "NUM", "PRT", "PRON", "VERB", ".", "X"};

std::string lowercase(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

bool ends_with(std::string_view s, std::string_view suffix) {
    return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

}  // namespace

std::string_view tag_name(UniversalTag tag) {
    return kTagNames[static_cast<int>(tag)];
}

std::optional<UniversalTag> parse_tag(std::string_view name) {
    for (int i = 0; i < kNumUniversalTags; ++i) {
        if (kTagNames[i] == name) return static_cast<UniversalTag>(i);
    }
    return std::nullopt;
}

void TagLexicon::insert(const std::string& token, UniversalTag tag, std::uint64_t count) {
    auto [it, inserted] = entries_.try_emplace(token, Entry{tag, count});
    if (inserted) return;
    Entry& e = it->second;
    if (count > e.count ||
        (count == e.count && tag_name(tag) < tag_name(e.tag))) {
        e = Entry{tag, count};
    }
}

std::optional<UniversalTag> TagLexicon::lookup(const std::string& token) const {
    if (auto it = entries_.find(token); it != entries_.end()) return it->second.tag;
    const std::string lower = lowercase(token);
    if (lower != token) {
        if (auto it = entries_.find(lower); it != entries_.end()) return it->second.tag;
    }
    return std::nullopt;
}

TagLexicon TagLexicon::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open tag lexicon: " + path.string());
    TagLexicon lex;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream fields(line);
        std::string token, tag_str, count_str;
        if (!std::getline(fields, token, '\t') || !std::getline(fields, tag_str, '\t')) {
            throw DataError("tag lexicon " + path.string() + ":" + std::to_string(line_no) +
                            ": expected token TAB tag TAB count");
        }
        std::getline(fields, count_str, '\t');
        const auto tag = parse_tag(tag_str);
        if (!tag) {
            throw DataError("tag lexicon " + path.string() + ":" + std::to_string(line_no) +
                            ": unknown tag " + tag_str);
        }
        std::uint64_t count = 1;
        if (!count_str.empty()) {
            try {
                count = std::stoull(count_str);
            } catch (const std::exception&) {
                throw DataError("tag lexicon " + path.string() + ":" + std::to_string(line_no) +
                                ": bad count " + count_str);
            }
        }
        lex.insert(token, *tag, count);
    }
    return lex;
}

UniversalTag fallback_tag(std::string_view token) {
    if (token.empty()) return UniversalTag::x;

    bool has_digit = false;
    bool numeric_only = true;
    bool punct_only = true;
    for (const char ch : token) {
        const auto c = static_cast<unsigned char>(ch);
        if (std::isdigit(c)) {
            has_digit = true;
        } else if (!(ch == '.' || ch == ',' || ch == ':' || ch == '/' || ch == '-' ||
                     ch == '+' || ch == '%')) {
            numeric_only = false;
        }
        if (!std::ispunct(c)) punct_only = false;
    }
    if (has_digit && numeric_only) return UniversalTag::num;
    if (punct_only) return UniversalTag::punct;

    const std::string lower = lowercase(token);
    if (ends_with(lower, "ly")) return UniversalTag::adv;
    if (ends_with(lower, "ness") || ends_with(lower, "tion")) return UniversalTag::noun;
    if (ends_with(lower, "able") || ends_with(lower, "ous") || ends_with(lower, "ful"))
        return UniversalTag::adj;
    return UniversalTag::x;
}

std::vector<UniversalTag> tag_pos(const std::vector<std::string>& text_tokens,
                                  const TagLexicon& lexicon) {
    std::vector<UniversalTag> tags;
    tags.reserve(text_tokens.size());
    for (const auto& token : text_tokens) {
        if (auto tag = lexicon.lookup(token)) {
            tags.push_back(*tag);
        } else {
            tags.push_back(fallback_tag(token));
        }
    }
    return tags;
}

std::vector<std::vector<UniversalTag>> load_tag_sidecar(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open tag sidecar: " + path.string());
    std::vector<std::vector<UniversalTag>> result;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream fields(line);
        std::vector<UniversalTag> tags;
        std::string tag_str;
        while (fields >> tag_str) {
            const auto tag = parse_tag(tag_str);
            if (!tag) {
                throw DataError("tag sidecar " + path.string() + ":" + std::to_string(line_no) +
                                ": unknown tag " + tag_str);
            }
            tags.push_back(*tag);
        }
        result.push_back(std::move(tags));
    }
    return result;
}

}  // namespace textcnn
