#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "vox/world.hpp"

namespace vox::actlang {

struct SourceLoc {
    int line = 0;
    int col = 0;
};

// ---- AST ----------------------------------------------------------------

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

struct Expr {
    enum class Kind { int_lit, string_lit, variable, binary, pos_lit, rel_pos };
    Kind kind;
    SourceLoc loc;
    long long int_value = 0;          // int_lit
    std::string text;                 // string_lit / variable name
    char op = 0;                      // binary: '+', '-', '*'
    ExprPtr lhs, rhs;                 // binary
    std::vector<ExprPtr> elems;       // pos_lit / rel_pos: exactly 3
};

struct Pred {
    enum class Kind { has, block_is, found };
    Kind kind;
    SourceLoc loc;
    std::vector<ExprPtr> args;  // has: item, count; block_is: pos; found: -
    std::string block_name;     // block_is comparison target
    std::string var;            // found variable name
    bool negated = false;       // block_is with !=
};

struct Stmt;
using StmtPtr = std::unique_ptr<Stmt>;

struct Stmt {
    enum class Kind { call, let, repeat, if_else };
    Kind kind;
    SourceLoc loc;
    std::string name;           // call target / let variable
    std::vector<ExprPtr> args;  // call arguments
    ExprPtr value;              // let
    long long count = 0;        // repeat (literal, <= 256)
    std::vector<StmtPtr> body;  // repeat / if then-branch
    std::vector<StmtPtr> else_body;
    std::unique_ptr<Pred> pred;  // if
};

struct FnDef {
    std::string name;
    std::vector<std::string> params;
    std::vector<StmtPtr> body;
    SourceLoc loc;
};

struct Program {
    std::vector<FnDef> functions;
    std::vector<StmtPtr> body;  // the distinguished entry body
};

// ---- Front end ------------------------------------------------------------

struct ParseError {
    int line = 0;
    int col = 0;
    std::string message;

    std::string to_string() const {
        return "line " + std::to_string(line) + ":" + std::to_string(col) + ": " + message;
    }
};

// Parse + static checks (recursion ban, literal repeat bounds, known
// primitives and arities, variables defined before use).
std::variant<Program, ParseError> parse(const std::string& source);

std::string pretty_print(const Program& program);

// Pulls the program out of an LLM reply: the last fenced code block, or the
// longest suffix of the text that parses. nullopt = NoCodeFound.
std::optional<std::string> extract_code(const std::string& llm_response);

// ---- Execution --------------------------------------------------------------

struct ExecLimits {
    int max_steps = 10000;
    int search_radius = 32;
    int path_node_budget = 20000;
};

struct ExecError {
    std::string message;
    SourceLoc loc;
};

struct ExecResult {
    bool ok = true;
    std::optional<ExecError> error;
    std::vector<std::string> chat_log;
    int steps_used = 0;
};

// Runs the program; world and agent mutate in place and partial effects are
// kept on error, matching live-game semantics.
ExecResult execute(const Program& program, VoxelWorld& world, AgentState& agent,
                   const ExecLimits& limits = {});

// Walkable-grid A*: 4-neighbor moves with jump 1 and fall <= 3. Returns the
// sequence of feet cells from start (exclusive) to goal (inclusive).
std::optional<std::vector<Vec3i>> find_path(const VoxelWorld& world, Vec3i start, Vec3i goal,
                                            int node_budget = 20000);
bool standable(const VoxelWorld& world, Vec3i feet);

}  // namespace vox::actlang
