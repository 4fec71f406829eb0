#pragma once

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace textcnn {

/// The 12-tag universal part-of-speech inventory. This set is closed;
/// nothing outside it is representable.
enum class UniversalTag {
    adj,
    adp,
    adv,
    conj,
    det,
    noun,
    num,
    prt,
    pron,
    verb,
    punct,  // rendered as "."
    x,
};

inline constexpr int kNumUniversalTags = 12;

constexpr std::array<UniversalTag, kNumUniversalTags> all_universal_tags() {
    return {UniversalTag::adj,  UniversalTag::adp,  UniversalTag::adv,
            UniversalTag::conj, UniversalTag::det,  UniversalTag::noun,
            UniversalTag::num,  UniversalTag::prt,  UniversalTag::pron,
            UniversalTag::verb, UniversalTag::punct, UniversalTag::x};
}

std::string_view tag_name(UniversalTag tag);
std::optional<UniversalTag> parse_tag(std::string_view name);

/// Most-frequent-tag lexicon built from `token TAB tag TAB count` lines.
/// Ties on count resolve to the alphabetically smaller tag name.
class TagLexicon {
public:
    static TagLexicon load(const std::filesystem::path& path);

    void insert(const std::string& token, UniversalTag tag, std::uint64_t count);

    /// Exact lookup first, then the lowercased token.
    std::optional<UniversalTag> lookup(const std::string& token) const;

    std::size_t size() const { return entries_.size(); }

private:
    struct Entry {
        UniversalTag tag;
        std::uint64_t count;
    };
    std::unordered_map<std::string, Entry> entries_;
};

/// Suffix/character-class fallback for tokens missing from the lexicon.
UniversalTag fallback_tag(std::string_view token);

/// Per-token most-frequent tag with fallback heuristics. Total function.
std::vector<UniversalTag> tag_pos(const std::vector<std::string>& text_tokens,
                                  const TagLexicon& lexicon);

/// Sidecar file: one whitespace-separated tag line per example.
/// Unknown tag strings and example-count mismatches raise DataError.
std::vector<std::vector<UniversalTag>> load_tag_sidecar(const std::filesystem::path& path);

}  // namespace textcnn
