#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace vox::skills {

// Embedders return unit vectors of a fixed per-embedder dimension; libraries
// refuse to mix embedder identities.
class Embedder {
public:
    virtual ~Embedder() = default;
    virtual std::vector<double> embed(const std::string& text) const = 0;
    virtual std::string identity() const = 0;
};

// Default deterministic embedder: hashed character-trigram term frequencies,
// FNV-1a mod 512, L2-normalized. Texts shorter than 3 characters count as a
// single token; empty text yields the zero vector (callers must not store it).
class TrigramEmbedder : public Embedder {
public:
    static constexpr int kDim = 512;
    std::vector<double> embed(const std::string& text) const override;
    std::string identity() const override { return "trigram-fnv-512"; }
};

struct Skill {
    std::string name;  // unique function name; collisions get -2, -3 suffixes
    std::string description;
    std::string source;  // parses and passes static checks
    std::vector<double> embedding;
    int created_at_iteration = 0;
};

struct CorruptFile {
    int index = -1;  // offending skill entry, -1 for file-level problems
    std::string message;
};

class SkillLibrary {
public:
    explicit SkillLibrary(std::shared_ptr<const Embedder> embedder =
                              std::make_shared<TrigramEmbedder>());

    // Validates the source; returns nullopt (and stores nothing) when it does
    // not parse. The stored name comes from the source's first function
    // definition, or a slug of the description.
    std::optional<Skill> add(const std::string& description, const std::string& source,
                             int iteration);

    // Top-k by cosine similarity, descending, ties broken by insertion order.
    std::vector<Skill> retrieve(const std::string& query, int k = 5) const;

    const std::vector<Skill>& all() const { return skills_; }
    std::size_t size() const { return skills_.size(); }
    const Embedder& embedder() const { return *embedder_; }

    std::string to_json() const;
    void save(const std::string& path) const;
    // Throws CorruptFile on malformed files or unparsable skill sources.
    static SkillLibrary from_json(const std::string& text);
    static SkillLibrary load(const std::string& path);

private:
    std::string unique_name(const std::string& base) const;

    std::shared_ptr<const Embedder> embedder_;
    std::vector<Skill> skills_;
};

}  // namespace vox::skills
