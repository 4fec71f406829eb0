#include "textcnn/data.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "textcnn/errors.hpp"

namespace textcnn {

int TaskSpec::num_classes() const {
    return task == Task::sst_fine ? 5 : 2;
}

std::string_view TaskSpec::name() const {
    switch (task) {
        case Task::sst_coarse: return "sst_coarse";
        case Task::sst_fine: return "sst_fine";
        case Task::subjectivity: return "subjectivity";
    }
    return "?";
}

std::vector<std::string> TaskSpec::label_names() const {
    switch (task) {
        case Task::sst_coarse: return {"negative", "positive"};
        case Task::sst_fine:
            return {"very_negative", "negative", "neutral", "positive", "very_positive"};
        case Task::subjectivity: return {"subjective", "objective"};
    }
    return {};
}

TaskSpec TaskSpec::parse(std::string_view name) {
    if (name == "sst_coarse") return {Task::sst_coarse};
    if (name == "sst_fine") return {Task::sst_fine};
    if (name == "subjectivity") return {Task::subjectivity};
    throw ConfigError("unknown task: " + std::string(name) +
                      " (expected sst_coarse, sst_fine, or subjectivity)");
}

Vocabulary::Vocabulary() {
    id_to_token_.emplace_back(kUnkToken);
    token_to_id_.emplace(std::string(kUnkToken), kUnkId);
}

int Vocabulary::add(const std::string& token) {
    auto [it, inserted] = token_to_id_.try_emplace(token, static_cast<int>(id_to_token_.size()));
    if (inserted) id_to_token_.push_back(token);
    return it->second;
}

int Vocabulary::encode(const std::string& token) const {
    auto it = token_to_id_.find(token);
    return it == token_to_id_.end() ? kUnkId : it->second;
}

const std::string& Vocabulary::decode(int id) const {
    if (id < 0 || static_cast<std::size_t>(id) >= id_to_token_.size()) {
        throw InputError("vocabulary: id " + std::to_string(id) + " out of range (size " +
                         std::to_string(id_to_token_.size()) + ")");
    }
    return id_to_token_[id];
}

bool Vocabulary::contains(const std::string& token) const {
    return token_to_id_.count(token) > 0;
}

Vocabulary Vocabulary::from_tokens(const std::vector<std::string>& tokens) {
    Vocabulary vocab;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (i == 0) {
            if (tokens[0] != kUnkToken) {
                throw DataError("vocabulary list must start with " + std::string(kUnkToken));
            }
            continue;
        }
        vocab.add(tokens[i]);
    }
    if (vocab.size() != tokens.size()) {
        throw DataError("vocabulary list contains duplicate tokens");
    }
    return vocab;
}

Vocabulary build_vocabulary(std::span<const Example> examples) {
    Vocabulary vocab;
    for (const auto& ex : examples) {
        for (const auto& token : ex.text_tokens) vocab.add(token);
    }
    return vocab;
}

void encode_examples(const Vocabulary& vocab, std::vector<Example>& examples) {
    for (auto& ex : examples) {
        ex.tokens.clear();
        ex.tokens.reserve(ex.text_tokens.size());
        for (const auto& token : ex.text_tokens) ex.tokens.push_back(vocab.encode(token));
    }
}

namespace {

struct SstParser {
    std::string_view line;
    std::size_t pos = 0;
    int line_no = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("sst line " + std::to_string(line_no) + ": " + what);
    }

    void skip_spaces() {
        while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    }

    SstNode parse_node() {
        skip_spaces();
        if (pos >= line.size() || line[pos] != '(') fail("expected '('");
        ++pos;
        skip_spaces();

        SstNode node;
        std::size_t start = pos;
        while (pos < line.size() && std::isdigit(static_cast<unsigned char>(line[pos]))) ++pos;
        if (pos == start) fail("expected numeric node label");
        int label = 0;
        for (std::size_t i = start; i < pos; ++i) label = label * 10 + (line[i] - '0');
        if (label > 4) {
            throw DataError("sst line " + std::to_string(line_no) + ": label " +
                            std::to_string(label) + " outside 0-4");
        }
        node.label = label;

        skip_spaces();
        if (pos >= line.size()) fail("unexpected end of line");
        if (line[pos] == '(') {
            while (pos < line.size() && line[pos] == '(') {
                node.children.push_back(parse_node());
                skip_spaces();
            }
        } else {
            start = pos;
            while (pos < line.size() && line[pos] != ')' &&
                   !std::isspace(static_cast<unsigned char>(line[pos]))) {
                ++pos;
            }
            if (pos == start) fail("expected token");
            node.token = std::string(line.substr(start, pos - start));
            skip_spaces();
        }
        if (pos >= line.size() || line[pos] != ')') fail("expected ')'");
        ++pos;
        return node;
    }
};

void to_string_impl(const SstNode& node, std::string& out) {
    out += '(';
    out += std::to_string(node.label);
    if (node.is_leaf()) {
        out += ' ';
        out += node.token;
    } else {
        for (const auto& child : node.children) {
            out += ' ';
            to_string_impl(child, out);
        }
    }
    out += ')';
}

/// Coarse label mapping: {0,1} -> 0 (negative), {3,4} -> 1 (positive),
/// 2 -> dropped (returns -1).
int map_label(int fine_label, Task task) {
    if (task == Task::sst_fine) return fine_label;
    if (fine_label <= 1) return 0;
    if (fine_label >= 3) return 1;
    return -1;
}

void collect_subtrees(const SstNode& node, std::vector<const SstNode*>& out) {
    out.push_back(&node);
    for (const auto& child : node.children) collect_subtrees(child, out);
}

}  // namespace

SstNode parse_sst_line(std::string_view line, int line_no) {
    SstParser parser{line, 0, line_no};
    SstNode root = parser.parse_node();
    parser.skip_spaces();
    if (parser.pos != line.size()) parser.fail("trailing characters after tree");
    return root;
}

std::string to_string(const SstNode& node) {
    std::string out;
    to_string_impl(node, out);
    return out;
}

void collect_leaves(const SstNode& node, std::vector<std::string>& out) {
    if (node.is_leaf()) {
        out.push_back(node.token);
        return;
    }
    for (const auto& child : node.children) collect_leaves(child, out);
}

std::vector<Example> parse_sst_trees(const std::filesystem::path& path, TaskSpec task,
                                     bool include_phrases) {
    if (task.task == Task::subjectivity) {
        throw ConfigError("parse_sst_trees: task must be sst_coarse or sst_fine");
    }
    std::ifstream in(path);
    if (!in) throw IoError("cannot open sst tree file: " + path.string());

    std::vector<Example> examples;
    std::set<std::pair<std::string, int>> seen;  // (phrase text, label) dedup
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
        const SstNode root = parse_sst_line(line, line_no);

        std::vector<const SstNode*> nodes;
        if (include_phrases) {
            collect_subtrees(root, nodes);
        } else {
            nodes.push_back(&root);
        }

        for (const SstNode* node : nodes) {
            const int label = map_label(node->label, task.task);
            if (label < 0) continue;
            Example ex;
            collect_leaves(*node, ex.text_tokens);
            if (ex.text_tokens.empty()) continue;
            ex.label = label;
            ex.source = (node == &root) ? Source::sst_sentence : Source::sst_phrase;

            if (include_phrases) {
                std::string key;
                for (const auto& t : ex.text_tokens) {
                    key += t;
                    key += ' ';
                }
                if (!seen.emplace(std::move(key), label).second) continue;
            }
            examples.push_back(std::move(ex));
        }
    }
    return examples;
}

std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> tokens;
    std::size_t i = 0;
    const auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)); };
    const auto is_punct = [](char c) { return std::ispunct(static_cast<unsigned char>(c)); };
    while (i < text.size()) {
        while (i < text.size() && is_space(text[i])) ++i;
        if (i >= text.size()) break;
        std::size_t end = i;
        while (end < text.size() && !is_space(text[end])) ++end;
        std::string_view chunk = text.substr(i, end - i);
        i = end;

        std::size_t lead = 0;
        while (lead < chunk.size() && is_punct(chunk[lead])) ++lead;
        if (lead == chunk.size()) {
            // all punctuation: one token per character
            for (char c : chunk) tokens.emplace_back(1, c);
            continue;
        }
        std::size_t trail = chunk.size();
        while (trail > lead && is_punct(chunk[trail - 1])) --trail;

        for (std::size_t k = 0; k < lead; ++k) tokens.emplace_back(1, chunk[k]);
        tokens.emplace_back(chunk.substr(lead, trail - lead));
        for (std::size_t k = trail; k < chunk.size(); ++k) tokens.emplace_back(1, chunk[k]);
    }
    return tokens;
}

namespace {

std::vector<Example> read_sentence_file(const std::filesystem::path& path, int label) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open sentence file: " + path.string());
    std::vector<Example> examples;
    std::string line;
    while (std::getline(in, line)) {
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        Example ex;
        ex.text_tokens = std::move(toks);
        ex.label = label;
        ex.source = Source::subj;
        examples.push_back(std::move(ex));
    }
    return examples;
}

}  // namespace

CorpusSplits load_subjectivity(const std::filesystem::path& subjective_path,
                               const std::filesystem::path& objective_path, Rng& rng,
                               SplitSizes split) {
    std::vector<Example> all = read_sentence_file(subjective_path, kSubjectiveLabel);
    {
        auto objective = read_sentence_file(objective_path, kObjectiveLabel);
        all.insert(all.end(), std::make_move_iterator(objective.begin()),
                   std::make_move_iterator(objective.end()));
    }
    const std::size_t requested = split.train + split.val + split.test;
    if (requested > all.size()) {
        throw DataError("subjectivity split " + std::to_string(requested) +
                        " exceeds corpus size " + std::to_string(all.size()));
    }
    rng.shuffle(all);

    CorpusSplits out;
    auto it = all.begin();
    out.train.assign(std::make_move_iterator(it), std::make_move_iterator(it + split.train));
    it += split.train;
    out.val.assign(std::make_move_iterator(it), std::make_move_iterator(it + split.val));
    it += split.val;
    out.test.assign(std::make_move_iterator(it), std::make_move_iterator(it + split.test));
    return out;
}

void assign_tags(std::vector<Example>& examples, const TagLexicon& lexicon) {
    for (auto& ex : examples) ex.pos_tags = tag_pos(ex.text_tokens, lexicon);
}

void assign_tags_from_sidecar(std::vector<Example>& examples,
                              const std::filesystem::path& sidecar_path) {
    auto tag_lines = load_tag_sidecar(sidecar_path);
    if (tag_lines.size() != examples.size()) {
        throw DataError("tag sidecar " + sidecar_path.string() + " has " +
                        std::to_string(tag_lines.size()) + " lines for " +
                        std::to_string(examples.size()) + " examples");
    }
    for (std::size_t i = 0; i < examples.size(); ++i) {
        if (tag_lines[i].size() != examples[i].text_tokens.size()) {
            throw DataError("tag sidecar " + sidecar_path.string() + " line " +
                            std::to_string(i + 1) + ": " + std::to_string(tag_lines[i].size()) +
                            " tags for " + std::to_string(examples[i].text_tokens.size()) +
                            " tokens");
        }
        examples[i].pos_tags = std::move(tag_lines[i]);
    }
}

}  // namespace textcnn
