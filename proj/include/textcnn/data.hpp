#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "textcnn/pos.hpp"
#include "textcnn/rng.hpp"

namespace textcnn {

enum class Task { sst_coarse, sst_fine, subjectivity };

struct TaskSpec {
    Task task = Task::sst_coarse;

    int num_classes() const;
    std::string_view name() const;
    std::vector<std::string> label_names() const;
    static TaskSpec parse(std::string_view name);
};

enum class Source { sst_phrase, sst_sentence, subj };

struct Example {
    std::vector<int> tokens;            // vocabulary ids, filled by encode_examples
    std::vector<std::string> text_tokens;
    int label = -1;
    std::vector<UniversalTag> pos_tags;  // same length as tokens once assigned
    Source source = Source::sst_sentence;
};

/// Token ids with id 0 reserved for the unknown token.
class Vocabulary {
public:
    static constexpr int kUnkId = 0;
    static constexpr std::string_view kUnkToken = "<unk>";

    Vocabulary();

    int add(const std::string& token);
    int encode(const std::string& token) const;  // kUnkId when absent
    const std::string& decode(int id) const;
    bool contains(const std::string& token) const;
    std::size_t size() const { return id_to_token_.size(); }

    const std::vector<std::string>& tokens() const { return id_to_token_; }
    static Vocabulary from_tokens(const std::vector<std::string>& tokens);

private:
    std::unordered_map<std::string, int> token_to_id_;
    std::vector<std::string> id_to_token_;
};

Vocabulary build_vocabulary(std::span<const Example> examples);
void encode_examples(const Vocabulary& vocab, std::vector<Example>& examples);

/// Parsed SST tree node: every node carries a 0-4 label; leaves carry the
/// token.
struct SstNode {
    int label = -1;
    std::string token;
    std::vector<SstNode> children;

    bool is_leaf() const { return children.empty(); }
    bool operator==(const SstNode&) const = default;
};

SstNode parse_sst_line(std::string_view line, int line_no);
std::string to_string(const SstNode& node);
void collect_leaves(const SstNode& node, std::vector<std::string>& out);

/// One parenthesized labeled tree per line. With include_phrases every
/// distinct labeled subtree becomes an example (deduplicated by text and
/// label); otherwise only root sentences. For the coarse task labels
/// {0,1} map to negative, {3,4} to positive, and neutral items are
/// dropped.
std::vector<Example> parse_sst_trees(const std::filesystem::path& path, TaskSpec task,
                                     bool include_phrases);

struct SplitSizes {
    std::size_t train = 0;
    std::size_t val = 0;
    std::size_t test = 0;
};

struct CorpusSplits {
    std::vector<Example> train;
    std::vector<Example> val;
    std::vector<Example> test;
};

inline constexpr int kSubjectiveLabel = 0;
inline constexpr int kObjectiveLabel = 1;

/// One sentence per line in each file; shuffled with rng, then split into
/// the requested disjoint sizes.
CorpusSplits load_subjectivity(const std::filesystem::path& subjective_path,
                               const std::filesystem::path& objective_path, Rng& rng,
                               SplitSizes split);

/// Whitespace split with leading/trailing punctuation runs peeled off as
/// separate single-character tokens. Internal punctuation (don't, u.s.)
/// stays attached.
std::vector<std::string> tokenize(std::string_view text);

void assign_tags(std::vector<Example>& examples, const TagLexicon& lexicon);
void assign_tags_from_sidecar(std::vector<Example>& examples,
                              const std::filesystem::path& sidecar_path);

}  // namespace textcnn
