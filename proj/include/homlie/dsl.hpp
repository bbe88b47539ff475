#pragma once

#include <optional>
#include <string>

#include "homlie/action.hpp"

namespace homlie {

struct ParseError : std::runtime_error {
    int line = 0;
    int col = 0;
    ParseError(const std::string& msg, int line_, int col_)
        : std::runtime_error(msg + " (line " + std::to_string(line_) + ", column " +
                             std::to_string(col_) + ")"),
          line(line_), col(col_)
    {
    }
};

struct AlgebraDef {
    std::string name;
    std::vector<std::string> basis;
    HomLieAlgebra algebra;
    friend bool operator==(const AlgebraDef&, const AlgebraDef&) = default;
};

// A module block names the acting algebra; its underlying space is either a
// fresh abelian space with its own basis and twist, or (`space N;`) an
// algebra block reused as a possibly non-abelian target.
struct ModuleDef {
    std::string name;
    std::string over;
    std::optional<std::string> space;
    std::vector<std::string> basis;
    HomAction action;
    friend bool operator==(const ModuleDef&, const ModuleDef&) = default;
};

struct MapDef {
    std::string name;
    std::string source;
    std::string target;
    bool wedge_source = false;  // source is SRC ^ SRC, columns over basis pairs
    Matrix matrix;
    friend bool operator==(const MapDef&, const MapDef&) = default;
};

struct Workspace {
    std::vector<AlgebraDef> algebras;
    std::vector<ModuleDef> modules;
    std::vector<MapDef> maps;

    const AlgebraDef* find_algebra(const std::string& name) const;
    const ModuleDef* find_module(const std::string& name) const;
    const MapDef* find_map(const std::string& name) const;
    // Dimension and basis names of an algebra or module space.
    int space_dim(const std::string& name) const;
    std::vector<std::string> space_basis(const std::string& name) const;

    friend bool operator==(const Workspace&, const Workspace&) = default;
};

// Blocks: algebra NAME { ... }, module NAME over L { ... },
// map NAME : A -> B { ... } and map NAME : A ^ A -> B { ... }.
// Statements end with ';', comments run from "//" to end of line. Unset
// brackets, twist images, action values, and map columns default to zero;
// [y,x] is filled from [x,y] by skew-symmetry; `alpha id` is shorthand for
// the identity twist. Scalars are integers or p/q.
Workspace parse_workspace(const std::string& text);

// Canonical text: parse(emit(w)) reproduces w structurally.
std::string emit_workspace(const Workspace& w);

}  // namespace homlie
